"""Walk through tokenization and word-level language tagging.

Run from the repository root after installing the package:

    python3 demos/01_tokenize_and_tag.py
"""

from codemixkit import fixture_path, langid
from codemixkit.lexistore import load_lexicons
from codemixkit.textcore import split_hashtag, tokenize

lexicons = load_lexicons(fixture_path("lexicons"))

# A typical code-mixed social-media message: Bengali written in Roman
# script, English words mixed in, plus a hashtag and an emoticon.
message = "Ajke khub bhalo lagche, best day ever! #SoHappy 🙂"

print("message:", message)
print()

tokens = tokenize(message, lexicons.emoticons)
for tok in tokens:
    print(f"  {tok.text!r:16} {tok.kind.value}")

# Hashtags split on camel-case and underscores before any lexicon lookup.
print()
print("#SoHappy splits into:", split_hashtag("#SoHappy"))

# The tagger runs a cascade: token kind, then lexicon membership, then
# acronyms and suffix stemming, then a character n-gram classifier for
# whatever is left over.
model = langid.train_lang_model(
    sorted(lexicons.bn_words), sorted(lexicons.en_words)
)

print()
for tagged in langid.tag_text(message, lexicons, model):
    print(f"  {tagged.token.text!r:16} {tagged.tag.value}  ({tagged.source.value})")
