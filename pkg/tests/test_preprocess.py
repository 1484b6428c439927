import pytest
from hypothesis import given, strategies as st

from clickguard.errors import ConfigError
from clickguard.preprocess import (
    OOV_INDEX,
    PAD_INDEX,
    SEQ_LEN,
    LabeledExample,
    Vocabulary,
    build_vocabulary,
    encode,
    encode_headline,
    normalize,
    tokenize,
)


def corpus_of(*headlines):
    return [LabeledExample(headline=h, label=0) for h in headlines]


class TestNormalize:
    def test_trims_and_lowercases(self):
        assert normalize("  Hello\tWorld\n") == "hello world"

    def test_empty(self):
        assert normalize("") == ""

    def test_punctuation_becomes_spaces(self):
        assert normalize("You Won't BELIEVE #5!") == "you won t believe 5"

    @given(st.text())
    def test_idempotent(self, text):
        once = normalize(text)
        assert normalize(once) == once

    @given(st.text())
    def test_output_shape(self, text):
        out = normalize(text)
        assert out == out.strip()
        assert "  " not in out
        assert all(ch.isalnum() or ch == " " for ch in out)


class TestTokenize:
    def test_basic_split(self):
        assert tokenize("hello world") == ["hello", "world"]

    def test_empty(self):
        assert tokenize("") == []

    def test_duplicates_preserved(self):
        assert tokenize("a a b") == ["a", "a", "b"]

    @given(st.text())
    def test_roundtrip_with_normalize(self, text):
        tokens = tokenize(normalize(text))
        assert all(tokens)
        assert all(" " not in tok for tok in tokens)
        assert " ".join(tokens) == normalize(text)


class TestBuildVocabulary:
    def test_frequency_order(self):
        vocab = build_vocabulary(corpus_of("a a b", "b a"), max_size=10)
        assert vocab.tokens == ("a", "b")
        assert vocab.lookup("a") == 2
        assert vocab.lookup("b") == 3
        assert vocab.size == 4

    def test_tie_broken_lexicographically(self):
        vocab = build_vocabulary(corpus_of("x y"), max_size=10)
        assert vocab.lookup("x") == 2
        assert vocab.lookup("y") == 3

    def test_capacity_cutoff(self):
        vocab = build_vocabulary(corpus_of("a b c a b a"), max_size=2)
        assert vocab.lookup("a") == 2
        assert vocab.lookup("b") == 3
        assert vocab.lookup("c") == OOV_INDEX

    def test_empty_corpus_rejected(self):
        with pytest.raises(ConfigError):
            build_vocabulary([], max_size=10)

    def test_bad_max_size_rejected(self):
        with pytest.raises(ConfigError):
            build_vocabulary(corpus_of("a"), max_size=0)

    def test_deterministic(self):
        headlines = ["Apples beat pears", "pears Beat plums!", "plums and apples"]
        first = build_vocabulary(corpus_of(*headlines), max_size=50)
        second = build_vocabulary(corpus_of(*headlines), max_size=50)
        assert first.tokens == second.tokens

    def test_index_contract(self):
        vocab = build_vocabulary(corpus_of("one two three two three three"), max_size=5)
        for i, tok in enumerate(vocab.tokens):
            assert vocab.lookup(tok) == i + 2
        assert vocab.lookup("never-seen") == OOV_INDEX

    @given(
        st.lists(
            st.text(alphabet="abcdefg ", min_size=1, max_size=20), min_size=1, max_size=30
        ),
        st.integers(min_value=1, max_value=8),
    )
    def test_top_ranked_tokens_get_indices(self, headlines, max_size):
        from collections import Counter

        examples = corpus_of(*headlines)
        counts = Counter()
        for h in headlines:
            counts.update(tokenize(normalize(h)))
        vocab = build_vocabulary(examples, max_size)
        ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
        kept = [tok for tok, _ in ranked[:max_size]]
        assert list(vocab.tokens) == kept
        for tok, _ in ranked[max_size:]:
            assert vocab.lookup(tok) == OOV_INDEX


class TestEncode:
    vocab = Vocabulary(tokens=("a", "b", "c"))

    def test_all_padding(self):
        assert encode([], self.vocab) == (PAD_INDEX,) * SEQ_LEN

    def test_post_padding(self):
        seq = encode(["a"], self.vocab)
        assert seq == (2,) + (PAD_INDEX,) * (SEQ_LEN - 1)

    def test_truncates_to_first_24(self):
        tokens = [("a", "b", "c")[i % 3] for i in range(30)]
        seq = encode(tokens, self.vocab)
        assert len(seq) == SEQ_LEN
        assert seq == tuple(self.vocab.lookup(t) for t in tokens[:SEQ_LEN])

    def test_unknown_maps_to_oov(self):
        assert encode(["zzz"], self.vocab)[0] == OOV_INDEX

    @given(st.text())
    def test_pipeline_always_valid(self, text):
        seq = encode_headline(text, self.vocab)
        assert len(seq) == SEQ_LEN
        assert all(0 <= i < self.vocab.size for i in seq)
