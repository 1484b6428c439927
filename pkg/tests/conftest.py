import time

import pytest

from clickguard.datagen import generate_corpus, write_tsv, write_two_file
from clickguard.trainer import TrainingConfig, save_model, split_dataset, train

CORPUS_SEED = 1234


@pytest.fixture(scope="session")
def full_corpus():
    return generate_corpus(size=32_000, seed=CORPUS_SEED)


@pytest.fixture(scope="session")
def corpus_dir(tmp_path_factory, full_corpus):
    d = tmp_path_factory.mktemp("corpus")
    write_two_file(full_corpus, d / "clickbait.txt", d / "news.txt")
    write_tsv(full_corpus, d / "corpus.tsv")
    return d


@pytest.fixture(scope="session")
def trained(full_corpus):
    """One default-config training run shared by the accuracy-sensitive tests."""
    config = TrainingConfig()
    train_set, test_set = split_dataset(full_corpus, config.seed, config.train_count)
    start = time.monotonic()
    params, vocab, history = train(config, train_set)
    duration = time.monotonic() - start
    return {
        "config": config,
        "params": params,
        "vocab": vocab,
        "history": history,
        "train_set": train_set,
        "test_set": test_set,
        "seconds": duration,
    }


@pytest.fixture(scope="session")
def small_corpus():
    return generate_corpus(size=2_000, seed=77)


@pytest.fixture(scope="session")
def small_tsv(tmp_path_factory, small_corpus):
    path = tmp_path_factory.mktemp("smallcorpus") / "small.tsv"
    write_tsv(small_corpus, path)
    return path


@pytest.fixture(scope="session")
def small_trained(small_corpus):
    """A quick real training run; confident but cheap enough for protocol tests."""
    config = TrainingConfig(
        epochs=40, batch_size=64, lr=0.05, seed=3, train_count=1_600, vocab_size=2_000
    )
    train_set, test_set = split_dataset(small_corpus, config.seed, config.train_count)
    params, vocab, history = train(config, train_set)
    return {
        "config": config,
        "params": params,
        "vocab": vocab,
        "history": history,
        "train_set": train_set,
        "test_set": test_set,
    }


@pytest.fixture(scope="session")
def small_model_path(tmp_path_factory, small_trained):
    path = tmp_path_factory.mktemp("model") / "small-model.json"
    save_model(small_trained["params"], small_trained["vocab"], path)
    return path
