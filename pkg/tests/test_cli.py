import re
import subprocess
import sys

import pytest

from clickguard.datagen import generate_corpus, write_tsv
from clickguard.scorer import severity
from clickguard.trainer import load_metrics


def run_cli(*args, env=None, input_bytes=None):
    return subprocess.run(
        [sys.executable, "-m", "clickguard", *map(str, args)],
        capture_output=True,
        input=input_bytes,
        timeout=300,
        env=env,
    )


@pytest.fixture(scope="module")
def tiny_tsv(tmp_path_factory):
    path = tmp_path_factory.mktemp("clidata") / "tiny.tsv"
    write_tsv(generate_corpus(size=600, seed=5), path)
    return path


TRAIN_ARGS = (
    "--epochs", 4, "--batch-size", 32, "--lr", 0.05,
    "--seed", 42, "--train-count", 480, "--vocab-size", 400,
)


class TestTrainCommand:
    def test_writes_model_and_metrics(self, tiny_tsv, tmp_path):
        model = tmp_path / "model.json"
        metrics = tmp_path / "metrics.csv"
        proc = run_cli(
            "train", "--data", tiny_tsv, "--out", model, "--metrics", metrics, *TRAIN_ARGS
        )
        assert proc.returncode == 0, proc.stderr
        assert re.fullmatch(
            rb"accuracy=\d\.\d{6} loss=\d+\.\d{6}\n", proc.stdout
        ), proc.stdout
        assert model.exists()
        assert len(load_metrics(metrics)) == 4

    def test_same_seed_byte_identical_outputs(self, tiny_tsv, tmp_path):
        outputs = []
        for tag in ("a", "b"):
            model = tmp_path / f"model-{tag}.json"
            metrics = tmp_path / f"metrics-{tag}.csv"
            proc = run_cli(
                "train", "--data", tiny_tsv, "--out", model, "--metrics", metrics, *TRAIN_ARGS
            )
            assert proc.returncode == 0, proc.stderr
            outputs.append((model.read_bytes(), metrics.read_bytes()))
        assert outputs[0] == outputs[1]

    def test_zero_epochs_is_usage_error(self, tiny_tsv, tmp_path):
        proc = run_cli(
            "train", "--data", tiny_tsv, "--out", tmp_path / "m.json", "--epochs", 0
        )
        assert proc.returncode == 2

    def test_unknown_flag_rejected(self, tiny_tsv, tmp_path):
        proc = run_cli(
            "train", "--data", tiny_tsv, "--out", tmp_path / "m.json", "--frobnicate", 1
        )
        assert proc.returncode == 2

    def test_missing_data_file_is_runtime_error(self, tmp_path):
        proc = run_cli("train", "--data", tmp_path / "nope.tsv", "--out", tmp_path / "m.json")
        assert proc.returncode == 1
        assert b"clickguard:" in proc.stderr

    def test_empty_dataset_refuses_to_train(self, tmp_path):
        pos = tmp_path / "pos.txt"
        neg = tmp_path / "neg.txt"
        pos.write_text("", encoding="utf-8")
        neg.write_text("\n", encoding="utf-8")
        proc = run_cli("train", "--data", pos, neg, "--out", tmp_path / "m.json")
        assert proc.returncode == 1
        assert b"empty" in proc.stderr


@pytest.fixture(scope="module")
def cli_model(tiny_tsv, tmp_path_factory):
    model = tmp_path_factory.mktemp("climodel") / "model.json"
    proc = run_cli("train", "--data", tiny_tsv, "--out", model, *TRAIN_ARGS)
    assert proc.returncode == 0, proc.stderr
    return model


class TestEvalCommand:
    def test_prints_parseable_metrics(self, cli_model, tiny_tsv):
        proc = run_cli("eval", "--model", cli_model, "--data", tiny_tsv)
        assert proc.returncode == 0, proc.stderr
        match = re.fullmatch(rb"accuracy=(\d\.\d{6}) loss=(\d+\.\d{6})\n", proc.stdout)
        assert match
        assert 0.0 <= float(match.group(1)) <= 1.0

    def test_trained_model_scores_high_on_own_training_split(
        self, small_trained, small_model_path, tmp_path
    ):
        split = tmp_path / "train-split.tsv"
        write_tsv(small_trained["train_set"], split)
        proc = run_cli("eval", "--model", small_model_path, "--data", split)
        assert proc.returncode == 0, proc.stderr
        match = re.fullmatch(rb"accuracy=(\d\.\d{6}) loss=(\d+\.\d{6})\n", proc.stdout)
        assert match
        assert float(match.group(1)) >= 0.80

    def test_missing_model_flag_is_usage_error(self, tiny_tsv):
        proc = run_cli("eval", "--data", tiny_tsv)
        assert proc.returncode == 2

    def test_unreadable_model_is_runtime_error(self, tiny_tsv, tmp_path):
        proc = run_cli("eval", "--model", tmp_path / "absent.json", "--data", tiny_tsv)
        assert proc.returncode == 1


class TestScoreCommand:
    def test_output_tier_matches_score(self, cli_model):
        proc = run_cli(
            "score", "--model", cli_model, "--headline", "You Won't Believe This Trick"
        )
        assert proc.returncode == 0, proc.stderr
        match = re.fullmatch(rb"score=([0-9.e-]+) tier=(\d)\n", proc.stdout)
        assert match, proc.stdout
        score = float(match.group(1))
        assert severity(score) == int(match.group(2))

    def test_empty_headline_scores(self, cli_model):
        proc = run_cli("score", "--model", cli_model, "--headline", "")
        assert proc.returncode == 0
        assert proc.stdout.startswith(b"score=")

    def test_scores_are_reproducible(self, cli_model):
        first = run_cli("score", "--model", cli_model, "--headline", "same text")
        second = run_cli("score", "--model", cli_model, "--headline", "same text")
        assert first.stdout == second.stdout


class TestHostCommand:
    def test_immediate_eof_exits_zero(self, cli_model):
        proc = run_cli("host", "--model", cli_model, input_bytes=b"")
        assert proc.returncode == 0
        assert proc.stdout == b""

    def test_bad_model_path_fails_with_diagnostic(self, tmp_path):
        proc = run_cli("host", "--model", tmp_path / "absent.json", input_bytes=b"")
        assert proc.returncode == 1
        assert proc.stdout == b""
        assert b"cannot start host" in proc.stderr

    def test_model_from_environment(self, cli_model):
        import os

        env = dict(os.environ, CLICKGUARD_MODEL=str(cli_model))
        proc = run_cli("host", env=env, input_bytes=b"")
        assert proc.returncode == 0

    def test_no_model_anywhere_is_usage_error(self):
        import os

        env = {k: v for k, v in os.environ.items() if k != "CLICKGUARD_MODEL"}
        proc = run_cli("host", env=env, input_bytes=b"")
        assert proc.returncode == 2


class TestExportMetricsCommand:
    def test_roundtrip_is_byte_identical(self, tiny_tsv, tmp_path):
        model = tmp_path / "m.json"
        metrics = tmp_path / "metrics.csv"
        proc = run_cli(
            "train", "--data", tiny_tsv, "--out", model, "--metrics", metrics, *TRAIN_ARGS
        )
        assert proc.returncode == 0
        out = tmp_path / "canonical.csv"
        proc = run_cli("export-metrics", "--history", metrics, "--out", out)
        assert proc.returncode == 0
        assert out.read_bytes() == metrics.read_bytes()

    def test_missing_history_is_runtime_error(self, tmp_path):
        proc = run_cli(
            "export-metrics", "--history", tmp_path / "absent.csv", "--out", tmp_path / "o.csv"
        )
        assert proc.returncode == 1


class TestTwoFileIngestion:
    def test_train_on_two_files(self, tmp_path):
        from clickguard.datagen import write_two_file

        corpus = generate_corpus(size=400, seed=8)
        pos = tmp_path / "bait.txt"
        neg = tmp_path / "news.txt"
        write_two_file(corpus, pos, neg)
        proc = run_cli(
            "train", "--data", pos, neg, "--out", tmp_path / "m.json",
            "--epochs", 2, "--batch-size", 32, "--train-count", 300, "--vocab-size", 300,
        )
        assert proc.returncode == 0, proc.stderr
