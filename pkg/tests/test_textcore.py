import pytest
from hypothesis import given, strategies as st

from codemixkit.textcore import (
    Token,
    TokenKind,
    normalize,
    split_hashtag,
    tokenize,
)


class TestTokenize:
    def test_empty(self):
        assert tokenize("") == []

    def test_plain_sentence_kinds(self):
        toks = tokenize("Dhurr ar posachhe na all these things.")
        assert [t.text for t in toks] == [
            "Dhurr", "ar", "posachhe", "na", "all", "these", "things", ".",
        ]
        assert [t.kind for t in toks] == [TokenKind.WORD] * 7 + [TokenKind.PUNCT]

    def test_social_media_kinds(self):
        toks = tokenize("@username1 yes ami 🙂 #SoHappy http://t.co/x")
        assert [t.kind for t in toks] == [
            TokenKind.MENTION,
            TokenKind.WORD,
            TokenKind.WORD,
            TokenKind.EMOTICON,
            TokenKind.HASHTAG,
            TokenKind.URL,
        ]

    def test_multichar_emoticon_single_token(self):
        toks = tokenize("darun chilo :-) sotti")
        emos = [t for t in toks if t.kind is TokenKind.EMOTICON]
        assert [t.text for t in emos] == [":-)"]

    def test_number_token(self):
        toks = tokenize("11 AM")
        assert [(t.text, t.kind) for t in toks] == [
            ("11", TokenKind.NUMBER),
            ("AM", TokenKind.WORD),
        ]

    def test_spans_reconstruct_text(self):
        text = "ami   #Tag\tkhub..  bhalo 🙂🙂 achi!"
        toks = tokenize(text)
        for tok in toks:
            assert text[tok.start : tok.end] == tok.text
        rebuilt = "".join(
            text[a.end : b.start] for a, b in zip(toks, toks[1:])
        )
        assert "".join(t.text for t in toks) == text.replace(" ", "").replace("\t", "")
        assert rebuilt.strip() == rebuilt or rebuilt  # gaps are whitespace only

    @given(st.text(max_size=200))
    def test_total_and_well_formed(self, text):
        toks = tokenize(text)
        last_end = 0
        for tok in toks:
            assert 0 <= tok.start < tok.end <= len(text)
            assert tok.start >= last_end
            assert text[tok.start : tok.end] == tok.text
            last_end = tok.end
        # Skipped characters are exactly the whitespace.
        covered = set()
        for tok in toks:
            covered.update(range(tok.start, tok.end))
        for i, c in enumerate(text):
            assert (i in covered) == (not c.isspace())


class TestSplitHashtag:
    def test_camel_case(self):
        assert split_hashtag("#SoHappy") == ["so", "happy"]

    def test_underscores(self):
        assert split_hashtag("#best_movie_ever") == ["best", "movie", "ever"]

    def test_digits_do_not_split(self):
        assert split_hashtag("#eid2017") == ["eid2017"]

    def test_requires_hash(self):
        with pytest.raises(ValueError):
            split_hashtag("nohash")

    @given(st.from_regex(r"#[A-Za-z0-9_]+", fullmatch=True))
    def test_partition_preserves_characters(self, tag):
        parts = split_hashtag(tag)
        assert "".join(parts) == tag[1:].replace("_", "").lower()


class TestNormalize:
    def test_case_folding(self):
        assert normalize("Bhalo") == "bhalo"

    def test_elongation_collapse(self):
        assert normalize("bhaloooooo") == "bhaloo"

    def test_triple_run_kept(self):
        assert normalize("abbba") == "abbba"

    def test_fixed_point(self):
        assert normalize("bhalo") == "bhalo"

    def test_diacritics_stripped(self):
        assert normalize("café") == "cafe"

    @given(st.text(max_size=50))
    def test_idempotent(self, word):
        once = normalize(word)
        assert normalize(once) == once
