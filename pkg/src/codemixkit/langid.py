"""Word-level language tagging: lexicon cascade first, character-n-gram
linear classifier as fallback.

The decision cascade for a word token is, in order:

1. non-word token kinds (punctuation, numbers, emoticons, URLs, mentions,
   hashtags) are tagged UN,
2. a word found in exactly one of the Bengali / English lexicons takes that
   lexicon's tag,
3. a known acronym is tagged EN,
4. a word whose stem (word minus a matching English suffix) is in the
   English lexicon is tagged EN,
5. everything else goes to the trained classifier, which only ever answers
   BN or EN (ties break to EN).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Sequence, Tuple

import numpy as np

from . import learners
from .learners import ClassifierKind, Hyperparams
from .lexistore import LexiconSet, lookup
from .textcore import Token, TokenKind, normalize, tokenize


class LangTag(Enum):
    BN = "bn"
    EN = "en"
    UN = "un"


class TagSource(Enum):
    KIND_RULE = "kind_rule"
    LEXICON = "lexicon"
    SUFFIX = "suffix"
    ACRONYM = "acronym"
    CLASSIFIER = "classifier"


@dataclass(frozen=True)
class TaggedToken:
    token: Token
    tag: LangTag
    source: TagSource


@dataclass
class LangModel:
    """Linear model over character 2-gram + 3-gram count features.

    ``vocabulary`` maps each n-gram seen in training to a feature index;
    weights hold one row per class in (BN, EN) order.
    """

    vocabulary: Dict[str, int]
    weights: np.ndarray  # shape (2, d)
    biases: np.ndarray  # shape (2,)
    meta: Dict[str, str] = field(default_factory=dict)


def _word_grams(word: str):
    for n in (2, 3):
        for i in range(len(word) - n + 1):
            yield word[i : i + n]


def _featurize(word: str, vocabulary: Dict[str, int]) -> np.ndarray:
    x = np.zeros(len(vocabulary))
    for gram in _word_grams(word):
        idx = vocabulary.get(gram)
        if idx is not None:
            x[idx] += 1.0
    return x


def train_lang_model(
    bn_words: Sequence[str],
    en_words: Sequence[str],
    hyperparams: Hyperparams = Hyperparams(),
) -> LangModel:
    """Train the fallback classifier from the two (normalized) word lists."""
    if not bn_words or not en_words:
        raise ValueError("both word lists must be non-empty")
    vocab: Dict[str, int] = {}
    for word in list(bn_words) + list(en_words):
        for gram in _word_grams(word):
            if gram not in vocab:
                vocab[gram] = len(vocab)
    vocab = {g: i for i, g in enumerate(sorted(vocab))}

    dataset = [(_featurize(w, vocab), "bn") for w in bn_words]
    dataset += [(_featurize(w, vocab), "en") for w in en_words]
    model = learners.train(ClassifierKind.SGDC, dataset, hyperparams)
    # learners sorts labels, so row 0 is "bn" and row 1 is "en".
    assert model.labels == ["bn", "en"]
    meta = dict(model.meta)
    meta["features"] = "char-ngrams n=2,3"
    return LangModel(
        vocabulary=vocab,
        weights=model.params["weights"],
        biases=model.params["biases"],
        meta=meta,
    )


def classify_word(word: str, model: LangModel) -> Tuple[LangTag, float]:
    """BN/EN decision with the signed margin (positive favors BN).

    An exact tie goes to EN.
    """
    x = _featurize(word, model.vocabulary)
    s = model.weights @ x + model.biases
    margin = float(s[0] - s[1])
    return (LangTag.BN if margin > 0 else LangTag.EN), margin


def tag_word(token: Token, lexicons: LexiconSet, model: LangModel) -> TaggedToken:
    if token.kind is not TokenKind.WORD:
        return TaggedToken(token, LangTag.UN, TagSource.KIND_RULE)
    word = normalize(token.text)
    member = lookup(word, lexicons)
    if member.in_bn != member.in_en:
        tag = LangTag.BN if member.in_bn else LangTag.EN
        return TaggedToken(token, tag, TagSource.LEXICON)
    if member.is_acronym:
        return TaggedToken(token, LangTag.EN, TagSource.ACRONYM)
    for suffix in lexicons.en_suffixes:
        if word.endswith(suffix) and len(word) > len(suffix):
            if word[: -len(suffix)] in lexicons.en_words:
                return TaggedToken(token, LangTag.EN, TagSource.SUFFIX)
    tag, _ = classify_word(word, model)
    return TaggedToken(token, tag, TagSource.CLASSIFIER)


def tag_sentence(
    tokens: Sequence[Token], lexicons: LexiconSet, model: LangModel
) -> List[TaggedToken]:
    return [tag_word(t, lexicons, model) for t in tokens]


def tag_text(text: str, lexicons: LexiconSet, model: LangModel) -> List[TaggedToken]:
    return tag_sentence(tokenize(text, lexicons.emoticons), lexicons, model)


def evaluate_lang_tagger(
    gold: Sequence[Tuple[str, LangTag]], lexicons: LexiconSet, model: LangModel
) -> float:
    """Exact-match accuracy of the tagger against (word, tag) pairs."""
    if not gold:
        raise ValueError("empty gold data")
    correct = 0
    for word, tag in gold:
        tokens = tokenize(word, lexicons.emoticons)
        token = tokens[0] if len(tokens) == 1 else Token(word, (0, len(word)), TokenKind.WORD)
        if tag_word(token, lexicons, model).tag is tag:
            correct += 1
    return correct / len(gold)


MODEL_HEADER = "LANGMODEL v1"


def save_lang_model(model: LangModel, path: str) -> None:
    """Versioned flat file: one row per n-gram with its BN and EN weights,
    then a bias row. Floats use repr, so loads are bit-exact."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(MODEL_HEADER + "\n")
        for key, value in sorted(model.meta.items()):
            fh.write(f"#meta\t{key}\t{value}\n")
        for gram, idx in sorted(model.vocabulary.items(), key=lambda kv: kv[1]):
            fh.write(
                f"{gram}\t{float(model.weights[0, idx])!r}"
                f"\t{float(model.weights[1, idx])!r}\n"
            )
        fh.write(f"#bias\t{float(model.biases[0])!r}\t{float(model.biases[1])!r}\n")


def load_lang_model(path: str) -> LangModel:
    with open(path, encoding="utf-8") as fh:
        lines = [line.rstrip("\n") for line in fh]
    if not lines or lines[0] != MODEL_HEADER:
        raise ValueError(f"not a {MODEL_HEADER} file: {path}")
    vocab: Dict[str, int] = {}
    rows: List[Tuple[float, float]] = []
    biases = np.zeros(2)
    meta: Dict[str, str] = {}
    for line in lines[1:]:
        parts = line.split("\t")
        if parts[0] == "#meta":
            meta[parts[1]] = parts[2]
        elif parts[0] == "#bias":
            biases = np.array([float(parts[1]), float(parts[2])])
        else:
            vocab[parts[0]] = len(rows)
            rows.append((float(parts[1]), float(parts[2])))
    # Keep C order so dot products sum in the same order as before saving.
    weights = np.ascontiguousarray(np.array(rows).T) if rows else np.zeros((2, 0))
    return LangModel(vocabulary=vocab, weights=weights, biases=biases, meta=meta)
