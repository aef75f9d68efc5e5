"""Toolkit for building Bengali-English code-mixed sentiment corpora.

Submodules:

- :mod:`codemixkit.textcore` -- tokenization, hashtag splitting, normalization
- :mod:`codemixkit.lexistore` -- lexical resource loading and lookup
- :mod:`codemixkit.langid` -- word-level BN/EN/UN language tagging
- :mod:`codemixkit.learners` -- from-scratch classifiers and evaluation
- :mod:`codemixkit.sentipipe` -- hybrid rule + supervised sentiment
- :mod:`codemixkit.corpusworks` -- filtering, release I/O, complexity metrics
- :mod:`codemixkit.store` / :mod:`codemixkit.server` / :mod:`codemixkit.cli`
  -- annotation store, HTTP API and command line
"""

import os as _os

__version__ = "0.1.0"


def fixture_path(*parts: str) -> str:
    """Absolute path of a shipped fixture (sample lexicons, mini-gold corpus)."""
    return _os.path.join(_os.path.dirname(__file__), "fixtures", *parts)
