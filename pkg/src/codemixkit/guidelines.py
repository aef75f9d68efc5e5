"""Machine-readable annotation guidelines served to the UI side panel."""

from __future__ import annotations

from typing import Dict, List

LANGUAGE_GUIDELINES: List[Dict[str, str]] = [
    {
        "id": "LG1",
        "category": "language",
        "tags": "BN/EN",
        "text": "Tag a word BN or EN when it appears in that language's "
        "dictionary, or is a slang term or acronym of that language.",
        "example": '"hall" is tagged EN; "ghor" is tagged BN.',
    },
    {
        "id": "LG2",
        "category": "language",
        "tags": "BN/EN",
        "text": "Judge from context whether the word, as used here, belongs "
        "to that language; look at the neighboring words.",
        "example": '"bar" in "onek bar bolechi" is tagged BN.',
    },
    {
        "id": "LG3",
        "category": "language",
        "tags": "BN/EN",
        "text": "A Bengali or English prefix or suffix attached to the word "
        "pulls the word toward that language.",
        "example": '"hall is" points to EN; "ghor ta" points to BN.',
    },
    {
        "id": "LG4",
        "category": "language",
        "tags": "UN",
        "text": "Tag UN when the word belongs to neither Bengali nor English.",
        "example": '"amr" is tagged UN.',
    },
    {
        "id": "LG5",
        "category": "language",
        "tags": "UN",
        "text": "Tag UN when the token is not recognizable, such as a "
        "misspelling or a run-together string.",
        "example": '"ankushloveuall" is tagged UN.',
    },
    {
        "id": "LG6",
        "category": "language",
        "tags": "UN",
        "text": "Tag UN for special characters, emoticons, URLs and similar "
        "non-word tokens.",
        "example": '"@" is tagged UN.',
    },
]

SENTIMENT_GUIDELINES: List[Dict[str, str]] = [
    {
        "id": "SG1",
        "category": "sentiment",
        "tags": "positive/negative",
        "text": "The message clearly expresses sentiment toward an aspect "
        "term: a person, group or object.",
        "example": '"Sir, Boss 2 hit movie hobe. Eid ar sera movie." is positive.',
    },
    {
        "id": "SG2",
        "category": "sentiment",
        "tags": "positive/negative",
        "text": "The message clearly expresses the author's own polar state "
        "of mind.",
        "example": '"Dhurr ar posachhe na all these things." is negative.',
    },
    {
        "id": "SG3",
        "category": "sentiment",
        "tags": "positive/negative",
        "text": "The message reports a polar sentiment or mood, whether or "
        "not the author attributes it to themselves.",
        "example": '"@username1 yes ami @username2 dadar pagol fan onek diner." '
        "is positive.",
    },
    {
        "id": "SG4",
        "category": "sentiment",
        "tags": "neutral",
        "text": "The message is a mere observation or a mention of an "
        "objective fact.",
        "example": '"Dure oi yellow building ta holo shopping mall." is neutral.',
    },
    {
        "id": "SG5",
        "category": "sentiment",
        "tags": "neutral",
        "text": "The message conveys no particular state of mind or opinion; "
        "sentiment toward the aspect terms is neutral.",
        "example": '"Cinema ta release koreche." is neutral.',
    },
]

ALL_GUIDELINES: List[Dict[str, str]] = LANGUAGE_GUIDELINES + SENTIMENT_GUIDELINES
