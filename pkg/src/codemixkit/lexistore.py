"""Loading, validation and lookup of every lexical resource the pipeline uses.

All resources live in one directory of newline-delimited UTF-8 files, one
record per line, tab-separated fields. ``bn_words.txt`` and ``en_words.txt``
are required; every other file is optional and an absent file simply yields
an empty sub-lexicon (with a warning recorded in the load diagnostics).

File layout::

    bn_words.txt, en_words.txt        one word per line
    suffixes_en.txt                   one suffix per line
    acronyms.txt                      token <TAB> expansion <TAB> polarity
    negations_bn.txt, negations_en.txt  one word per line
    posu.txt, negu.txt                one polarity unigram per line
    phrases.tsv                       polarity <TAB> token token token...
    swn.tsv                           word <TAB> pos <TAB> neg <TAB> obj
    socal.tsv                         word <TAB> score
    socal_intensifiers.tsv            word <TAB> score
    nrc.tsv                           word <TAB> positive_flag <TAB> negative_flag
    emoticons.tsv                     emoticon <TAB> polarity
    seeds.tsv                         word <TAB> frequency (non-increasing)

A loaded :class:`LexiconSet` is immutable by convention: nothing in this
package mutates one after :func:`load_lexicons` returns, so instances may be
shared freely between threads.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .textcore import normalize

SWN_SUM_TOLERANCE = 1e-6


class LexiconError(Exception):
    """Unrecoverable problem with a lexicon directory or a required file."""


@dataclass(frozen=True)
class PolarPhrase:
    tokens: Tuple[str, ...]
    polarity: int  # +1 or -1


@dataclass
class Diagnostic:
    file: str
    line: int
    message: str


@dataclass
class LexiconSet:
    bn_words: frozenset = frozenset()
    en_words: frozenset = frozenset()
    en_suffixes: frozenset = frozenset()
    acronyms: Dict[str, Tuple[str, int]] = field(default_factory=dict)
    negations_bn: frozenset = frozenset()
    negations_en: frozenset = frozenset()
    posu: frozenset = frozenset()
    negu: frozenset = frozenset()
    phrases: Tuple[PolarPhrase, ...] = ()
    swn: Dict[str, Tuple[float, float, float]] = field(default_factory=dict)
    socal_words: Dict[str, float] = field(default_factory=dict)
    socal_intensifiers: Dict[str, float] = field(default_factory=dict)
    nrc: Dict[str, Tuple[bool, bool]] = field(default_factory=dict)
    emoticons: Dict[str, int] = field(default_factory=dict)
    seed_keywords: Tuple[Tuple[str, int], ...] = ()
    diagnostics: List[Diagnostic] = field(default_factory=list)


@dataclass(frozen=True)
class Membership:
    in_bn: bool
    in_en: bool
    is_acronym: bool
    is_negation_bn: bool
    is_negation_en: bool
    polarity_hits: int  # +1 posu hit, -1 negu hit, 0 neither/both


def lookup(word: str, lexicons: LexiconSet) -> Membership:
    """Membership record for an already-normalized word. Flags are
    independent: a word may be in both the Bengali and English lists."""
    pos = word in lexicons.posu
    neg = word in lexicons.negu
    hits = (1 if pos else 0) - (1 if neg else 0)
    return Membership(
        in_bn=word in lexicons.bn_words,
        in_en=word in lexicons.en_words,
        is_acronym=word in lexicons.acronyms,
        is_negation_bn=word in lexicons.negations_bn,
        is_negation_en=word in lexicons.negations_en,
        polarity_hits=hits,
    )


def _read_lines(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            for i, raw in enumerate(fh, start=1):
                line = raw.rstrip("\n")
                if line.strip():
                    yield i, line
    except OSError as exc:
        raise LexiconError(f"cannot read {path}: {exc}") from exc


def _load_wordset(path: str, diags: List[Diagnostic]) -> frozenset:
    words = set()
    for _, line in _read_lines(path):
        words.add(normalize(line.strip()))
    return frozenset(words)


def _optional(directory: str, name: str, diags: List[Diagnostic]) -> Optional[str]:
    path = os.path.join(directory, name)
    if not os.path.exists(path):
        diags.append(Diagnostic(name, 0, "file missing, sub-lexicon empty"))
        return None
    return path


def load_lexicons(directory: str) -> LexiconSet:
    """Load a full :class:`LexiconSet` from ``directory``.

    Malformed lines are skipped and collected as diagnostics; only an
    unreadable directory or a missing required file is fatal.
    """
    if not os.path.isdir(directory):
        raise LexiconError(f"not a lexicon directory: {directory}")
    diags: List[Diagnostic] = []

    for required in ("bn_words.txt", "en_words.txt"):
        if not os.path.exists(os.path.join(directory, required)):
            raise LexiconError(f"required lexicon file missing: {required}")

    bn_words = _load_wordset(os.path.join(directory, "bn_words.txt"), diags)
    en_words = _load_wordset(os.path.join(directory, "en_words.txt"), diags)

    def opt_wordset(name: str) -> frozenset:
        path = _optional(directory, name, diags)
        return _load_wordset(path, diags) if path else frozenset()

    en_suffixes = opt_wordset("suffixes_en.txt")
    negations_bn = opt_wordset("negations_bn.txt")
    negations_en = opt_wordset("negations_en.txt")
    posu = opt_wordset("posu.txt")
    negu = opt_wordset("negu.txt")

    acronyms: Dict[str, Tuple[str, int]] = {}
    path = _optional(directory, "acronyms.txt", diags)
    if path:
        for i, line in _read_lines(path):
            parts = line.split("\t")
            if len(parts) != 3 or parts[2] not in ("-1", "0", "1"):
                diags.append(Diagnostic("acronyms.txt", i, f"malformed row: {line!r}"))
                continue
            acronyms[normalize(parts[0])] = (parts[1], int(parts[2]))

    phrases: List[PolarPhrase] = []
    path = _optional(directory, "phrases.tsv", diags)
    if path:
        for i, line in _read_lines(path):
            parts = line.split("\t")
            if len(parts) != 2 or parts[0] not in ("-1", "1") or not parts[1].strip():
                diags.append(Diagnostic("phrases.tsv", i, f"malformed row: {line!r}"))
                continue
            toks = tuple(normalize(t) for t in parts[1].split())
            phrases.append(PolarPhrase(tokens=toks, polarity=int(parts[0])))

    swn: Dict[str, Tuple[float, float, float]] = {}
    path = _optional(directory, "swn.tsv", diags)
    if path:
        for i, line in _read_lines(path):
            parts = line.replace(" ", "\t").split("\t")
            parts = [p for p in parts if p]
            try:
                word = normalize(parts[0])
                pos, neg, obj = (float(x) for x in parts[1:4])
            except (ValueError, IndexError):
                diags.append(Diagnostic("swn.tsv", i, f"malformed row: {line!r}"))
                continue
            if abs(pos + neg + obj - 1.0) > SWN_SUM_TOLERANCE:
                diags.append(
                    Diagnostic("swn.tsv", i, f"scores do not sum to 1: {line!r}")
                )
                continue
            swn[word] = (pos, neg, obj)

    def load_scored(name: str) -> Dict[str, float]:
        scored: Dict[str, float] = {}
        p = _optional(directory, name, diags)
        if p:
            for i, line in _read_lines(p):
                parts = line.split("\t")
                try:
                    scored[normalize(parts[0])] = float(parts[1])
                except (ValueError, IndexError):
                    diags.append(Diagnostic(name, i, f"malformed row: {line!r}"))
        return scored

    socal_words = load_scored("socal.tsv")
    socal_intensifiers = load_scored("socal_intensifiers.tsv")

    nrc: Dict[str, Tuple[bool, bool]] = {}
    path = _optional(directory, "nrc.tsv", diags)
    if path:
        for i, line in _read_lines(path):
            parts = line.split("\t")
            if len(parts) != 3 or parts[1] not in ("0", "1") or parts[2] not in ("0", "1"):
                diags.append(Diagnostic("nrc.tsv", i, f"malformed row: {line!r}"))
                continue
            nrc[normalize(parts[0])] = (parts[1] == "1", parts[2] == "1")

    emoticons: Dict[str, int] = {}
    path = _optional(directory, "emoticons.tsv", diags)
    if path:
        for i, line in _read_lines(path):
            parts = line.split("\t")
            if len(parts) != 2 or parts[1] not in ("-1", "1"):
                diags.append(Diagnostic("emoticons.tsv", i, f"malformed row: {line!r}"))
                continue
            emoticons[parts[0]] = int(parts[1])

    seeds: List[Tuple[str, int]] = []
    path = _optional(directory, "seeds.tsv", diags)
    if path:
        for i, line in _read_lines(path):
            parts = line.split("\t")
            try:
                word, freq = normalize(parts[0]), int(parts[1])
            except (ValueError, IndexError):
                diags.append(Diagnostic("seeds.tsv", i, f"malformed row: {line!r}"))
                continue
            seeds.append((word, freq))
    seeds.sort(key=lambda wf: (-wf[1], wf[0]))

    return LexiconSet(
        bn_words=bn_words,
        en_words=en_words,
        en_suffixes=en_suffixes,
        acronyms=acronyms,
        negations_bn=negations_bn,
        negations_en=negations_en,
        posu=posu,
        negu=negu,
        phrases=tuple(phrases),
        swn=swn,
        socal_words=socal_words,
        socal_intensifiers=socal_intensifiers,
        nrc=nrc,
        emoticons=emoticons,
        seed_keywords=tuple(seeds),
        diagnostics=diags,
    )


def save_lexicons(lexicons: LexiconSet, directory: str) -> None:
    """Write a LexiconSet back to disk in the documented layout.

    ``load_lexicons(save_lexicons(s, d))`` reproduces ``s`` (minus
    diagnostics), which the test suite asserts as a round-trip invariant.
    """
    os.makedirs(directory, exist_ok=True)

    def write(name: str, lines) -> None:
        with open(os.path.join(directory, name), "w", encoding="utf-8") as fh:
            for line in lines:
                fh.write(line + "\n")

    write("bn_words.txt", sorted(lexicons.bn_words))
    write("en_words.txt", sorted(lexicons.en_words))
    write("suffixes_en.txt", sorted(lexicons.en_suffixes))
    write("negations_bn.txt", sorted(lexicons.negations_bn))
    write("negations_en.txt", sorted(lexicons.negations_en))
    write("posu.txt", sorted(lexicons.posu))
    write("negu.txt", sorted(lexicons.negu))
    write(
        "acronyms.txt",
        (f"{w}\t{exp}\t{pol}" for w, (exp, pol) in sorted(lexicons.acronyms.items())),
    )
    write(
        "phrases.tsv",
        (f"{p.polarity}\t{' '.join(p.tokens)}" for p in lexicons.phrases),
    )
    write(
        "swn.tsv",
        (
            f"{w}\t{pos!r}\t{neg!r}\t{obj!r}"
            for w, (pos, neg, obj) in sorted(lexicons.swn.items())
        ),
    )
    write(
        "socal.tsv",
        (f"{w}\t{s!r}" for w, s in sorted(lexicons.socal_words.items())),
    )
    write(
        "socal_intensifiers.tsv",
        (f"{w}\t{s!r}" for w, s in sorted(lexicons.socal_intensifiers.items())),
    )
    write(
        "nrc.tsv",
        (
            f"{w}\t{int(pos)}\t{int(neg)}"
            for w, (pos, neg) in sorted(lexicons.nrc.items())
        ),
    )
    write(
        "emoticons.tsv",
        (f"{e}\t{p}" for e, p in sorted(lexicons.emoticons.items())),
    )
    write("seeds.tsv", (f"{w}\t{f}" for w, f in lexicons.seed_keywords))


@dataclass(frozen=True)
class CharNGramIndex:
    n: int
    counts: Dict[str, Tuple[int, int]]  # ngram -> (bn_freq, en_freq)


def build_ngram_index(bn_words, en_words, n: int) -> CharNGramIndex:
    """Character n-gram frequency index over the two word lists.

    Counts are summed sliding-window frequencies, so a word contributes
    ``len(word) - n + 1`` grams.
    """
    if n not in (2, 3):
        raise ValueError(f"n must be 2 or 3, got {n}")
    counts: Dict[str, Tuple[int, int]] = {}
    for words, slot in ((bn_words, 0), (en_words, 1)):
        for word in words:
            for i in range(len(word) - n + 1):
                gram = word[i : i + n]
                bn, en = counts.get(gram, (0, 0))
                if slot == 0:
                    counts[gram] = (bn + 1, en)
                else:
                    counts[gram] = (bn, en + 1)
    return CharNGramIndex(n=n, counts=counts)
