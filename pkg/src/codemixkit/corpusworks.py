"""Stream filtering, seed-list construction, release-format I/O,
code-mixing complexity metrics and corpus aspect statistics."""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .langid import LangTag, TaggedToken
from .lexistore import LexiconSet
from .sentipipe import _FEELING
from .textcore import TokenKind, normalize, tokenize

DEFAULT_SEED_CAP = 1500
NON_ROMAN_THRESHOLD = 0.5


@dataclass(frozen=True)
class FilterConfig:
    """Stream filter thresholds: ``alpha`` is the minimum count of seed-list
    Bengali tokens, ``beta`` the minimum token count."""

    alpha: int
    beta: int
    seed_keywords: frozenset

    def __post_init__(self):
        if self.alpha < 1 or self.beta < 1:
            raise ValueError("alpha and beta must be >= 1")
        if not self.seed_keywords:
            raise ValueError("seed keyword set must be non-empty")


class RejectReason(Enum):
    BELOW_ALPHA = "below_alpha"
    BELOW_BETA = "below_beta"
    DUPLICATE = "duplicate"
    NON_ROMAN = "non_roman"


@dataclass(frozen=True)
class RawMessage:
    id: int
    text: str


@dataclass(frozen=True)
class Rejection:
    message: RawMessage
    reason: RejectReason


def _non_roman(text: str) -> bool:
    letters = [c for c in text if c.isalpha()]
    if not letters:
        return False
    outside = sum(1 for c in letters if ord(c) > 0x7F)
    return outside / len(letters) > NON_ROMAN_THRESHOLD


def _dedup_key(text: str) -> str:
    return " ".join(normalize(text).split())


def filter_stream(
    messages: Iterable[RawMessage], cfg: FilterConfig
) -> Tuple[List[RawMessage], List[Rejection]]:
    """Single pass over a raw message stream.

    A message is kept when it has at least ``alpha`` seed-list tokens, at
    least ``beta`` tokens in total, is mostly Roman script, and is not a
    duplicate (normalized, whitespace-collapsed) of an earlier kept message.
    """
    kept: List[RawMessage] = []
    rejected: List[Rejection] = []
    seen: set = set()
    for msg in messages:
        if _non_roman(msg.text):
            rejected.append(Rejection(msg, RejectReason.NON_ROMAN))
            continue
        tokens = tokenize(msg.text)
        if len(tokens) < cfg.beta:
            rejected.append(Rejection(msg, RejectReason.BELOW_BETA))
            continue
        seed_hits = sum(
            1 for t in tokens if normalize(t.text) in cfg.seed_keywords
        )
        if seed_hits < cfg.alpha:
            rejected.append(Rejection(msg, RejectReason.BELOW_ALPHA))
            continue
        key = _dedup_key(msg.text)
        if key in seen:
            rejected.append(Rejection(msg, RejectReason.DUPLICATE))
            continue
        seen.add(key)
        kept.append(msg)
    return kept, rejected


def read_raw_stream(path: str) -> Iterator[RawMessage]:
    """Newline-delimited JSON objects {id, text}."""
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            obj = json.loads(line)
            yield RawMessage(id=int(obj["id"]), text=str(obj["text"]))


def build_seed_list(
    tagged_corpus: Iterable[Sequence[TaggedToken]], cap: int = DEFAULT_SEED_CAP
) -> List[Tuple[str, int]]:
    """Frequency-ranked Bengali tokens of a tagged corpus, non-increasing
    frequency, ties lexicographic, capped at ``cap``."""
    counts: Counter = Counter()
    saw_any = False
    for sentence in tagged_corpus:
        saw_any = True
        for tt in sentence:
            if tt.tag is LangTag.BN:
                counts[normalize(tt.token.text)] += 1
    if not saw_any:
        raise ValueError("empty corpus")
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return ranked[:cap]


def cmi(tags: Sequence[LangTag]) -> float:
    """Code-mixing index of one tag sequence, in [0, 100].

    With N total tokens, U untagged (UN) tokens and maxW the larger of the
    BN / EN counts: 100 * (1 - maxW / (N - U)); 0 for empty or all-UN input.
    """
    n = len(tags)
    u = sum(1 for t in tags if t is LangTag.UN)
    if n == 0 or n == u:
        return 0.0
    max_w = max(
        sum(1 for t in tags if t is LangTag.BN),
        sum(1 for t in tags if t is LangTag.EN),
    )
    return 100.0 * (1.0 - max_w / (n - u))


@dataclass(frozen=True)
class ComplexityReport:
    cmi: float
    lf: float
    sf: float
    mf: float
    cf1: float
    cf2: float
    cf3: float

    def to_dict(self) -> Dict[str, float]:
        return {
            "cmi": self.cmi,
            "lf": self.lf,
            "sf": self.sf,
            "mf": self.mf,
            "cf1": self.cf1,
            "cf2": self.cf2,
            "cf3": self.cf3,
        }


CFFormula = Callable[[float, float, float], float]


def _cf1(lf: float, sf: float, mf: float) -> float:
    if lf == 0.0 or sf == 0.0 or mf == 0.0:
        return 0.0
    return (lf * sf * mf) ** (1.0 / 3.0)


def make_cf2(scale: float = 2.0) -> CFFormula:
    def _cf2(lf: float, sf: float, mf: float) -> float:
        return (lf + sf + mf) / 3.0 * scale

    return _cf2


def make_cf3(scale: float = 2.0) -> CFFormula:
    base = make_cf2(scale)

    def _cf3(lf: float, sf: float, mf: float) -> float:
        return 0.9 * base(lf, sf, mf)

    return _cf3


# The composite CF formulas are reconstructions; the components LF/SF/MF are
# authoritative and the compositions are replaceable plugins.
DEFAULT_CF_FORMULAS: Dict[str, CFFormula] = {
    "cf1": _cf1,
    "cf2": make_cf2(),
    "cf3": make_cf3(),
}


def complexity(
    tags: Sequence[LangTag],
    formulas: Optional[Dict[str, CFFormula]] = None,
) -> ComplexityReport:
    """LF / SF / MF components plus the pluggable CF compositions.

    LF mirrors the CMI term; SF is the share of adjacent BN/EN alternations
    (UN tokens ignored); MF is the UN share.
    """
    formulas = DEFAULT_CF_FORMULAS if formulas is None else formulas
    n = len(tags)
    u = sum(1 for t in tags if t is LangTag.UN)
    lf = cmi(tags)
    polar = [t for t in tags if t is not LangTag.UN]
    switches = sum(1 for a, b in zip(polar, polar[1:]) if a is not b)
    sf = 100.0 * switches / (n - 1) if n > 1 else 0.0
    mf = 100.0 * u / n if n > 0 else 0.0
    cf = {name: f(lf, sf, mf) for name, f in formulas.items()}
    return ComplexityReport(
        cmi=lf,
        lf=lf,
        sf=sf,
        mf=mf,
        cf1=cf.get("cf1", 0.0),
        cf2=cf.get("cf2", 0.0),
        cf3=cf.get("cf3", 0.0),
    )


@dataclass(frozen=True)
class CorpusRecord:
    id: int
    text: str
    tokens: Tuple[str, ...]
    tags: Tuple[LangTag, ...]
    sentiment: int

    def __post_init__(self):
        if len(self.tokens) != len(self.tags):
            raise ValueError("token/tag length mismatch")
        if self.sentiment not in (-1, 0, 1):
            raise ValueError(f"invalid sentiment: {self.sentiment}")

    @property
    def lang_tagged_text(self) -> str:
        return " ".join(
            f"{tok}\\{tag.value}" for tok, tag in zip(self.tokens, self.tags)
        )


class ReleaseError(Exception):
    pass


def record_from_tagged(
    item_id: int, text: str, tagged: Sequence[TaggedToken], sentiment: int
) -> CorpusRecord:
    # Backslashes inside tokens would break the last-backslash parse rule.
    tokens = tuple(tt.token.text.replace("\\", "") for tt in tagged)
    return CorpusRecord(
        id=item_id,
        text=text,
        tokens=tokens,
        tags=tuple(tt.tag for tt in tagged),
        sentiment=sentiment,
    )


def write_release(records: Sequence[CorpusRecord]) -> bytes:
    """Release JSON: an array of {id, lang_tagged_text, sentiment, text}
    objects. The serialization is canonical, so writing twice is
    byte-identical."""
    payload = [
        {
            "id": r.id,
            "lang_tagged_text": r.lang_tagged_text,
            "sentiment": r.sentiment,
            "text": r.text,
        }
        for r in records
    ]
    return json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True).encode(
        "utf-8"
    )


_TAG_VALUES = {t.value: t for t in LangTag}
REQUIRED_KEYS = {"id", "lang_tagged_text", "sentiment", "text"}


def parse_release(data: bytes) -> List[CorpusRecord]:
    """Parse release JSON. Each tagged token splits at its last backslash."""
    try:
        payload = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ReleaseError(f"invalid release JSON: {exc}") from exc
    if not isinstance(payload, list):
        raise ReleaseError("release JSON must be an array")
    records: List[CorpusRecord] = []
    for obj in payload:
        rid = obj.get("id", "?") if isinstance(obj, dict) else "?"
        if not isinstance(obj, dict) or not REQUIRED_KEYS <= set(obj):
            raise ReleaseError(f"record {rid}: missing required keys")
        if obj["sentiment"] not in (-1, 0, 1):
            raise ReleaseError(f"record {rid}: invalid sentiment {obj['sentiment']!r}")
        tokens: List[str] = []
        tags: List[LangTag] = []
        for piece in obj["lang_tagged_text"].split(" "):
            if not piece:
                continue
            word, sep, tag = piece.rpartition("\\")
            if not sep or tag not in _TAG_VALUES:
                raise ReleaseError(f"record {rid}: bad tagged token {piece!r}")
            tokens.append(word)
            tags.append(_TAG_VALUES[tag])
        records.append(
            CorpusRecord(
                id=int(obj["id"]),
                text=str(obj["text"]),
                tokens=tuple(tokens),
                tags=tuple(tags),
                sentiment=int(obj["sentiment"]),
            )
        )
    return records


@dataclass
class PolarityAspects:
    documents: int = 0
    negation_count: int = 0
    mean_length: float = 0.0
    bn_count: int = 0
    en_count: int = 0
    un_count: int = 0
    bn_en_ratio: Optional[float] = None
    pos_emoji: int = 0
    neg_emoji: int = 0
    pos_word_en: int = 0
    pos_word_bn: int = 0
    neg_word_en: int = 0
    neg_word_bn: int = 0
    feeling_tag_count: int = 0

    def to_dict(self) -> Dict:
        return dict(self.__dict__)


@dataclass
class AspectReport:
    per_polarity: Dict[int, PolarityAspects] = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {str(p): a.to_dict() for p, a in sorted(self.per_polarity.items())}


def aspect_stats(records: Sequence[CorpusRecord], lexicons: LexiconSet) -> AspectReport:
    """Per-polarity corpus statistics.

    Negation and emoji counts are lexical lower bounds; polarity word counts
    are split into EN / BN by the word-level language tag.
    """
    report = AspectReport(
        per_polarity={p: PolarityAspects() for p in (-1, 0, 1)}
    )
    totals = {p: 0 for p in (-1, 0, 1)}
    for rec in records:
        bucket = report.per_polarity[rec.sentiment]
        bucket.documents += 1
        totals[rec.sentiment] += len(rec.tokens)
        if _FEELING.search(rec.text):
            bucket.feeling_tag_count += 1
        for tok, tag in zip(rec.tokens, rec.tags):
            word = normalize(tok)
            if tag is LangTag.BN:
                bucket.bn_count += 1
            elif tag is LangTag.EN:
                bucket.en_count += 1
            else:
                bucket.un_count += 1
            if word in lexicons.negations_bn or word in lexicons.negations_en:
                bucket.negation_count += 1
            emoji_sign = lexicons.emoticons.get(tok)
            if emoji_sign == 1:
                bucket.pos_emoji += 1
            elif emoji_sign == -1:
                bucket.neg_emoji += 1
            if word in lexicons.posu:
                if tag is LangTag.EN:
                    bucket.pos_word_en += 1
                elif tag is LangTag.BN:
                    bucket.pos_word_bn += 1
            if word in lexicons.negu:
                if tag is LangTag.EN:
                    bucket.neg_word_en += 1
                elif tag is LangTag.BN:
                    bucket.neg_word_bn += 1
    for polarity, bucket in report.per_polarity.items():
        if bucket.documents:
            bucket.mean_length = totals[polarity] / bucket.documents
        if bucket.en_count:
            bucket.bn_en_ratio = bucket.bn_count / bucket.en_count
    return report
