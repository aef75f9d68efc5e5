"""Tokenization and surface analysis for romanized social-media text.

Everything here is pure: tokenizers and normalizers take strings and return
new values, so they are safe to share across threads.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Tuple


class TokenKind(Enum):
    WORD = "word"
    HASHTAG = "hashtag"
    MENTION = "mention"
    URL = "url"
    EMOTICON = "emoticon"
    NUMBER = "number"
    PUNCT = "punct"


@dataclass(frozen=True)
class Token:
    """A surface span: original text plus (start, end) offsets and a kind."""

    text: str
    span: Tuple[int, int]
    kind: TokenKind

    @property
    def start(self) -> int:
        return self.span[0]

    @property
    def end(self) -> int:
        return self.span[1]


# ASCII emoticons recognized even without a configured emoticon map.
DEFAULT_EMOTICONS = (
    ":-)", ":-(", ":-D", ":-P", ":-/", ":-|", ":')", ":'(",
    ":)", ":(", ":D", ":P", ":/", ":|", ";-)", ";)", ":*",
    "<3", "</3", "=)", "=(", "xD", "XD", "^_^", "-_-", "T_T",
)

# Unicode emoji / pictograph ranges, plus ZWJ and variation selector so that
# multi-codepoint emoji stay one token.
_EMOJI_RUN = re.compile(
    "["
    "\U0001F000-\U0001FAFF"
    "☀-➿"
    "⬀-⯿"
    "←-⇿"
    "️‍"
    "]+"
)

_URL = re.compile(r"(?:https?://|www\.)[^\s]+", re.IGNORECASE)
_MENTION = re.compile(r"@\w+")
_HASHTAG = re.compile(r"#\w+")
_NUMBER = re.compile(r"\d+(?:[.,:]\d+)*")
_WORD = re.compile(r"[^\W\d_][\w]*(?:['’][\w]+)*")


def _emoticon_pattern(emoticons: Optional[Iterable[str]]) -> re.Pattern:
    table = set(DEFAULT_EMOTICONS)
    if emoticons:
        table.update(emoticons)
    # Longest-first so ":-)" wins over ":-".
    alts = sorted(table, key=len, reverse=True)
    return re.compile("|".join(re.escape(e) for e in alts))


def is_emoji(text: str) -> bool:
    return bool(_EMOJI_RUN.fullmatch(text))


def tokenize(text: str, emoticons: Optional[Iterable[str]] = None) -> List[Token]:
    """Split ``text`` into ordered, non-overlapping tokens.

    Recognizer precedence: URL, mention, hashtag, emoticon (configured map
    plus emoji code-point ranges), number, word. Anything else becomes a
    punctuation run. Concatenating token texts with the skipped whitespace
    reconstructs the input exactly.

    ``emoticons`` extends the built-in ASCII emoticon table (typically the
    keys of the emoticon map loaded by :mod:`codemixkit.lexistore`).
    """
    emo_map = _emoticon_pattern(emoticons)
    recognizers = (
        (_URL, TokenKind.URL),
        (_MENTION, TokenKind.MENTION),
        (_HASHTAG, TokenKind.HASHTAG),
        (emo_map, TokenKind.EMOTICON),
        (_EMOJI_RUN, TokenKind.EMOTICON),
        (_NUMBER, TokenKind.NUMBER),
        (_WORD, TokenKind.WORD),
    )

    def match_at(pos: int):
        for pattern, kind in recognizers:
            m = pattern.match(text, pos)
            if m and m.end() > pos:
                return m.end(), kind
        return None

    tokens: List[Token] = []
    i, n = 0, len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        hit = match_at(i)
        if hit is not None:
            end, kind = hit
            tokens.append(Token(text[i:end], (i, end), kind))
            i = end
            continue
        # Punctuation fallback: absorb following non-space chars until a
        # recognizer would match there.
        end = i + 1
        while end < n and not text[end].isspace() and match_at(end) is None:
            end += 1
        tokens.append(Token(text[i:end], (i, end), TokenKind.PUNCT))
        i = end
    return tokens


_CAMEL_SPLIT = re.compile(r"(?<=[a-z])(?=[A-Z])")


def split_hashtag(tag: str) -> List[str]:
    """Split a hashtag body at underscores and lower-to-upper case boundaries.

    Returns lowercased segments. Digit runs do not create boundaries.
    """
    if not tag.startswith("#"):
        raise ValueError("hashtag must start with '#': %r" % (tag,))
    body = tag[1:]
    parts: List[str] = []
    for chunk in body.split("_"):
        for piece in _CAMEL_SPLIT.split(chunk):
            if piece:
                parts.append(piece.lower())
    return parts


_ELONGATION = re.compile(r"(.)\1{3,}")


def normalize(word: str) -> str:
    """Canonical lookup form: lowercased, diacritics stripped, character
    runs longer than 3 collapsed to 2. Idempotent."""
    lowered = word.lower()
    decomposed = unicodedata.normalize("NFKD", lowered)
    stripped = "".join(c for c in decomposed if not unicodedata.combining(c))
    return _ELONGATION.sub(r"\1\1", stripped)
