"""Filter a raw message stream and build a Bengali seed keyword list.

    python3 demos/02_filter_and_seed.py
"""

from codemixkit import fixture_path, corpusworks, langid
from codemixkit.corpusworks import FilterConfig, RawMessage, filter_stream
from codemixkit.lexistore import load_lexicons

lexicons = load_lexicons(fixture_path("lexicons"))

raw = [
    RawMessage(1, "ami ajke khub bhalo achi bondhura"),
    RawMessage(2, "ok"),                                  # too short
    RawMessage(3, "Ami ajke KHUB bhalo achi bondhura"),   # duplicate of 1
    RawMessage(4, "what a great day it was"),             # no seed words
    RawMessage(5, "আমি আজকে ভালো আছি"),                     # not Roman script
    RawMessage(6, "kal raat e movie ta khub kharap laglo"),
]

seeds = frozenset(w for w, _ in lexicons.seed_keywords)
cfg = FilterConfig(alpha=2, beta=4, seed_keywords=seeds)

kept, rejected = filter_stream(raw, cfg)

print(f"kept {len(kept)} of {len(raw)}:")
for msg in kept:
    print(f"  {msg.id}: {msg.text}")
print("rejected:")
for rej in rejected:
    print(f"  {rej.message.id}: {rej.reason.value}")

# The seed list itself comes from a language-tagged corpus: the most
# frequent Bengali tokens, capped at 1500. Here we tag the kept messages
# and rebuild one from scratch.
model = langid.train_lang_model(
    sorted(lexicons.bn_words), sorted(lexicons.en_words)
)
tagged_corpus = [langid.tag_text(m.text, lexicons, model) for m in kept]
seed_list = corpusworks.build_seed_list(tagged_corpus, cap=10)

print()
print("top Bengali seed keywords from the kept messages:")
for word, freq in seed_list:
    print(f"  {word:12} {freq}")
