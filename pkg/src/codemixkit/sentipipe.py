"""Sentence-level sentiment: rule detectors, feature extraction, and the
hybrid rule-then-classifier cascade.

Rule stages fire in a fixed order (feeling self-tag, emoticons, hashtags);
each either returns a polar verdict or abstains. Abstention is modeled as
``None`` rather than a neutral verdict, because the rules only ever carry
polar evidence. When every rule abstains, the supervised classifier decides,
optionally followed by a negation flip when the message contains an odd
number of negation words.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import learners
from .lexistore import LexiconSet, PolarPhrase
from .textcore import Token, TokenKind, normalize, tokenize

NGRAM_VOCAB_SIZE = 2000
STOPWORD_COUNT = 50


class RuleName(Enum):
    FLNG = "flng"
    EMO = "emo"
    HT = "ht"


class Provenance(Enum):
    FLNG = "flng"
    EMO = "emo"
    HT = "ht"
    CLASSIFIER = "classifier"


class EmoMethod(Enum):
    HIGH_FREQUENCY = "high_frequency"
    GREATEST_INDEX = "greatest_index"
    AVERAGE_INDEX = "average_index"


class MatchKind(Enum):
    PERFECT = "perfect"
    SPARSE = "sparse"
    PARTIAL = "partial"
    NO_MATCH = "no_match"


DEFAULT_MATCH_WEIGHTS = {
    MatchKind.PERFECT: 1.0,
    MatchKind.SPARSE: 0.6,
    MatchKind.PARTIAL: 0.3,
    MatchKind.NO_MATCH: 0.0,
}


@dataclass(frozen=True)
class RuleVerdict:
    polarity: int  # +1 or -1, never 0
    rule: RuleName
    evidence: str


@dataclass
class PipelineConfig:
    emo_method: EmoMethod = EmoMethod.GREATEST_INDEX
    match_weights: Dict[MatchKind, float] = field(
        default_factory=lambda: dict(DEFAULT_MATCH_WEIGHTS)
    )
    stopword_count: int = STOPWORD_COUNT
    negation_postrule: bool = True

    @classmethod
    def from_file(cls, path: str) -> "PipelineConfig":
        """Parse the documented key=value configuration format."""
        cfg = cls()
        with open(path, encoding="utf-8") as fh:
            for raw in fh:
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                key, _, value = line.partition("=")
                key, value = key.strip(), value.strip()
                if key == "emo_method":
                    cfg.emo_method = EmoMethod(value)
                elif key == "tgp_weights":
                    weights = [float(v) for v in value.split(",")]
                    cfg.match_weights = dict(
                        zip(
                            (MatchKind.PERFECT, MatchKind.SPARSE,
                             MatchKind.PARTIAL, MatchKind.NO_MATCH),
                            weights,
                        )
                    )
                elif key == "stopword_k":
                    cfg.stopword_count = int(value)
                elif key == "negation_postrule":
                    cfg.negation_postrule = value.lower() in ("on", "true", "1")
                else:
                    raise ValueError(f"unknown configuration key: {key}")
        return cfg


def _word_polarity(word: str, lexicons: LexiconSet) -> int:
    if word in lexicons.posu:
        return 1
    if word in lexicons.negu:
        return -1
    pos, neg = lexicons.nrc.get(word, (False, False))
    if pos and not neg:
        return 1
    if neg and not pos:
        return -1
    return 0


_FEELING = re.compile(r"[-–—]\s*feeling\s+([^\W\d_]+)", re.IGNORECASE)


def flng(text: str, lexicons: LexiconSet) -> Optional[RuleVerdict]:
    """Author self-tag: the word following a "- feeling" marker. Matches on
    the raw text, case-insensitively, with either hyphen or dash."""
    m = _FEELING.search(text)
    if not m:
        return None
    word = normalize(m.group(1))
    polarity = _word_polarity(word, lexicons)
    if polarity == 0:
        return None
    return RuleVerdict(polarity=polarity, rule=RuleName.FLNG, evidence=m.group(1))


def emo(
    tokens: Sequence[Token],
    lexicons: LexiconSet,
    method: EmoMethod = EmoMethod.GREATEST_INDEX,
) -> Optional[RuleVerdict]:
    """Score the sentence from its emoticons.

    high_frequency: majority sign; greatest_index: the last emoticon wins;
    average_index: sign of the position-weighted mean of signs (1-based
    positions). No mapped emoticons, or an exact tie, abstains.
    """
    signed: List[Tuple[int, int, str]] = []  # (token index, sign, surface)
    for i, tok in enumerate(tokens):
        if tok.kind is not TokenKind.EMOTICON:
            continue
        sign = lexicons.emoticons.get(tok.text)
        if sign is None:
            continue
        signed.append((i, sign, tok.text))
    if not signed:
        return None

    if method is EmoMethod.HIGH_FREQUENCY:
        tally = Counter(sign for _, sign, _ in signed)
        if tally[1] == tally[-1]:
            return None
        polarity = 1 if tally[1] > tally[-1] else -1
        evidence = next(s for _, sign, s in signed if sign == polarity)
    elif method is EmoMethod.GREATEST_INDEX:
        _, polarity, evidence = max(signed, key=lambda t: t[0])
    else:
        weighted = sum((i + 1) * sign for i, sign, _ in signed)
        if weighted == 0:
            return None
        polarity = 1 if weighted > 0 else -1
        evidence = next(s for _, sign, s in signed if sign == polarity)
    return RuleVerdict(polarity=polarity, rule=RuleName.EMO, evidence=evidence)


def ht(tokens: Sequence[Token], lexicons: LexiconSet) -> Optional[RuleVerdict]:
    """Hashtag polarity: split each hashtag, look the segments up in the
    polarity lexicons, and take the net sign. Balanced or empty abstains."""
    from .textcore import split_hashtag

    net = 0
    evidence = ""
    for tok in tokens:
        if tok.kind is not TokenKind.HASHTAG:
            continue
        for segment in split_hashtag(tok.text):
            hit = _word_polarity(normalize(segment), lexicons)
            if hit != 0 and not evidence:
                evidence = tok.text
            net += hit
    if net == 0:
        return None
    return RuleVerdict(polarity=1 if net > 0 else -1, rule=RuleName.HT, evidence=evidence)


def match_phrase(
    sentence: Sequence[str],
    phrase: PolarPhrase,
    stopwords: frozenset = frozenset(),
) -> MatchKind:
    """Classify how well a polar phrase matches a normalized sentence.

    perfect: phrase tokens appear contiguously in order; sparse: every
    phrase unigram appears somewhere; partial: some phrase bigram (not a
    pure stop-word pair) appears contiguously; otherwise no_match. A lone
    stop-word unigram hit does not count as a match.
    """
    ptoks = phrase.tokens
    if not ptoks:
        raise ValueError("empty phrase")
    sent = list(sentence)
    n, m = len(sent), len(ptoks)

    for i in range(n - m + 1):
        if tuple(sent[i : i + m]) == ptoks:
            return MatchKind.PERFECT

    present = set(sent)
    # A phrase made purely of stop-words cannot sparse-match.
    if set(ptoks) <= present and any(t not in stopwords for t in ptoks):
        return MatchKind.SPARSE

    if m >= 2:
        for j in range(m - 1):
            bigram = ptoks[j], ptoks[j + 1]
            if bigram[0] in stopwords and bigram[1] in stopwords:
                continue
            for i in range(n - 1):
                if (sent[i], sent[i + 1]) == bigram:
                    return MatchKind.PARTIAL

    return MatchKind.NO_MATCH


def socal_combine(intensifier_score: float, word_score: float) -> float:
    """Combine an intensifier score with the next word's score.

    Both positive: add. Both negative: add and negate. Positive intensifier
    with negative word: word minus intensifier. Negative intensifier with
    positive word: add. A zero on either side leaves the word score alone.
    """
    i, w = intensifier_score, word_score
    if i == 0 or w == 0:
        return w
    if i > 0 and w > 0:
        return i + w
    if i < 0 and w < 0:
        return -(i + w)
    if i > 0 and w < 0:
        return w - i
    return i + w  # i < 0, w > 0


NGramVocab = Dict[Tuple[str, ...], int]


def _doc_words(text: str, lexicons: LexiconSet) -> List[str]:
    return [
        normalize(t.text)
        for t in tokenize(text, lexicons.emoticons)
        if t.kind is TokenKind.WORD
    ]


def build_ngram_vocab(
    texts: Sequence[str],
    lexicons: LexiconSet,
    k: int = NGRAM_VOCAB_SIZE,
) -> NGramVocab:
    """Top-k word 1/2/3-grams by corpus frequency, ties lexicographic.

    The returned map assigns each selected n-gram a stable feature index.
    """
    if not texts:
        raise ValueError("empty training corpus")
    counters = {1: Counter(), 2: Counter(), 3: Counter()}
    for text in texts:
        words = _doc_words(text, lexicons)
        for n in (1, 2, 3):
            for i in range(len(words) - n + 1):
                counters[n][tuple(words[i : i + n])] += 1
    vocab: NGramVocab = {}
    for n in (1, 2, 3):
        top = sorted(counters[n].items(), key=lambda kv: (-kv[1], kv[0]))[:k]
        for gram, _ in top:
            vocab[gram] = len(vocab)
    return vocab


def corpus_stopwords(
    texts: Sequence[str], lexicons: LexiconSet, k: int = STOPWORD_COUNT
) -> frozenset:
    """The k most frequent word tokens of the corpus."""
    counts = Counter()
    for text in texts:
        counts.update(_doc_words(text, lexicons))
    top = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:k]
    return frozenset(w for w, _ in top)


@dataclass
class SentiFeatures:
    ngram_counts: np.ndarray
    negation_parity: int
    posu_count: int
    negu_count: int
    phrase_score: float
    acronym_polarity_sum: int
    swn_triple: Tuple[float, float, float]
    socal_sum: float
    nrc_pos: int
    nrc_neg: int

    def to_vector(self) -> np.ndarray:
        tail = np.array(
            [
                float(self.negation_parity),
                float(self.posu_count),
                float(self.negu_count),
                self.phrase_score,
                float(self.acronym_polarity_sum),
                *self.swn_triple,
                self.socal_sum,
                float(self.nrc_pos),
                float(self.nrc_neg),
            ]
        )
        return np.concatenate([self.ngram_counts, tail])


def feature_dimension(vocab: NGramVocab) -> int:
    return len(vocab) + 11


def extract_features(
    text: str,
    lexicons: LexiconSet,
    vocab: NGramVocab,
    config: PipelineConfig = PipelineConfig(),
    stopwords: frozenset = frozenset(),
) -> SentiFeatures:
    """Full supervised feature vector for one message."""
    words = _doc_words(text, lexicons)

    ngram_counts = np.zeros(len(vocab))
    for n in (1, 2, 3):
        for i in range(len(words) - n + 1):
            idx = vocab.get(tuple(words[i : i + n]))
            if idx is not None:
                ngram_counts[idx] += 1.0

    negations = sum(
        1
        for w in words
        if w in lexicons.negations_bn or w in lexicons.negations_en
    )
    posu_count = sum(1 for w in words if w in lexicons.posu)
    negu_count = sum(1 for w in words if w in lexicons.negu)

    phrase_score = 0.0
    for phrase in lexicons.phrases:
        kind = match_phrase(words, phrase, stopwords)
        phrase_score += phrase.polarity * config.match_weights[kind]

    acronym_sum = sum(
        lexicons.acronyms[w][1] for w in words if w in lexicons.acronyms
    )

    swn_pos = swn_neg = swn_obj = 0.0
    for w in words:
        triple = lexicons.swn.get(w)
        if triple:
            swn_pos += triple[0]
            swn_neg += triple[1]
            swn_obj += triple[2]

    socal_sum = 0.0
    i = 0
    while i < len(words):
        w = words[i]
        if w in lexicons.socal_intensifiers and i + 1 < len(words):
            nxt = words[i + 1]
            if nxt in lexicons.socal_words:
                socal_sum += socal_combine(
                    lexicons.socal_intensifiers[w], lexicons.socal_words[nxt]
                )
                i += 2
                continue
        if w in lexicons.socal_words:
            socal_sum += lexicons.socal_words[w]
        i += 1

    nrc_pos = sum(1 for w in words if lexicons.nrc.get(w, (False, False))[0])
    nrc_neg = sum(1 for w in words if lexicons.nrc.get(w, (False, False))[1])

    return SentiFeatures(
        ngram_counts=ngram_counts,
        negation_parity=negations % 2,
        posu_count=posu_count,
        negu_count=negu_count,
        phrase_score=phrase_score,
        acronym_polarity_sum=acronym_sum,
        swn_triple=(swn_pos, swn_neg, swn_obj),
        socal_sum=socal_sum,
        nrc_pos=nrc_pos,
        nrc_neg=nrc_neg,
    )


def train_sentiment(
    texts: Sequence[str],
    labels: Sequence[int],
    lexicons: LexiconSet,
    kind: learners.ClassifierKind = learners.ClassifierKind.SGDC,
    hyperparams: learners.Hyperparams = learners.Hyperparams(),
    config: PipelineConfig = PipelineConfig(),
    vocab_size: int = NGRAM_VOCAB_SIZE,
) -> Tuple[learners.ClassifierModel, NGramVocab, frozenset]:
    """Build the n-gram vocabulary and stop-word list from the training
    corpus, extract features, and train the supervised classifier."""
    if len(texts) != len(labels):
        raise ValueError("texts and labels differ in length")
    vocab = build_ngram_vocab(texts, lexicons, vocab_size)
    stopwords = corpus_stopwords(texts, lexicons, config.stopword_count)
    dataset = [
        (extract_features(t, lexicons, vocab, config, stopwords).to_vector(), y)
        for t, y in zip(texts, labels)
    ]
    model = learners.train(kind, dataset, hyperparams)
    return model, vocab, stopwords


def save_vocab(vocab: NGramVocab, stopwords: frozenset, path: str) -> None:
    grams = [list(g) for g, _ in sorted(vocab.items(), key=lambda kv: kv[1])]
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(
            {"grams": grams, "stopwords": sorted(stopwords)},
            fh,
            ensure_ascii=False,
            indent=2,
        )


def load_vocab(path: str) -> Tuple[NGramVocab, frozenset]:
    with open(path, encoding="utf-8") as fh:
        obj = json.load(fh)
    vocab = {tuple(g): i for i, g in enumerate(obj["grams"])}
    return vocab, frozenset(obj["stopwords"])


def hybrid_classify(
    text: str,
    lexicons: LexiconSet,
    model: learners.ClassifierModel,
    vocab: NGramVocab,
    config: PipelineConfig = PipelineConfig(),
    stopwords: frozenset = frozenset(),
) -> Tuple[int, Provenance]:
    """Rule cascade, then the classifier.

    The first non-abstaining rule wins, in FLNG, EMO, HT order. When the
    classifier decides and the message holds an odd number of negation
    words, a non-neutral prediction has its sign flipped.
    """
    verdict = flng(text, lexicons)
    if verdict:
        return verdict.polarity, Provenance.FLNG
    tokens = tokenize(text, lexicons.emoticons)
    verdict = emo(tokens, lexicons, config.emo_method)
    if verdict:
        return verdict.polarity, Provenance.EMO
    verdict = ht(tokens, lexicons)
    if verdict:
        return verdict.polarity, Provenance.HT

    features = extract_features(text, lexicons, vocab, config, stopwords)
    label, _ = learners.predict(model, features.to_vector())
    polarity = int(label)
    if config.negation_postrule and features.negation_parity == 1 and polarity != 0:
        polarity = -polarity
    return polarity, Provenance.CLASSIFIER
