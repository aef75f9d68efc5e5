import json

import pytest

from codemixkit import fixture_path
from codemixkit import corpusworks, langid, learners, sentipipe
from codemixkit.lexistore import load_lexicons


@pytest.fixture(scope="session")
def lexicons():
    return load_lexicons(fixture_path("lexicons"))


@pytest.fixture(scope="session")
def lang_model(lexicons):
    return langid.train_lang_model(
        sorted(lexicons.bn_words), sorted(lexicons.en_words)
    )


@pytest.fixture(scope="session")
def mini_gold():
    with open(fixture_path("mini_gold.json"), "rb") as fh:
        return corpusworks.parse_release(fh.read())


@pytest.fixture(scope="session")
def sentiment_pipeline(lexicons, mini_gold):
    """SGDC model + vocabulary + stop-words trained on the mini-gold corpus."""
    texts = [r.text for r in mini_gold]
    labels = [r.sentiment for r in mini_gold]
    model, vocab, stopwords = sentipipe.train_sentiment(texts, labels, lexicons)
    return model, vocab, stopwords


@pytest.fixture(scope="session")
def sample_record_bytes():
    with open(fixture_path("sample_record_83.json"), "rb") as fh:
        return fh.read()
