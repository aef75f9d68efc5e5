"""The hybrid sentiment cascade, rule stage by rule stage.

    python3 demos/03_sentiment_cascade.py
"""

from codemixkit import fixture_path, corpusworks, sentipipe
from codemixkit.lexistore import load_lexicons

lexicons = load_lexicons(fixture_path("lexicons"))

with open(fixture_path("mini_gold.json"), "rb") as fh:
    gold = corpusworks.parse_release(fh.read())

# Train the supervised fallback on the shipped mini-gold corpus. The
# vocabulary (word 1/2/3-grams) and the stop-word list are both derived
# from the same training texts.
model, vocab, stopwords = sentipipe.train_sentiment(
    [r.text for r in gold], [r.sentiment for r in gold], lexicons
)
print(f"trained on {len(gold)} documents, {len(vocab)} n-gram features")
print()

examples = [
    # An author self-tag always wins, even against an angry emoticon.
    "eto kharap obostha 😠 - feeling blessed",
    # Emoticons outrank hashtags.
    "#flop movie dekhlam 🙂",
    # Hashtag polarity is used when nothing stronger is present.
    "kal dekhlam #SuperHit",
    # No rule evidence: classifier decides, negation can flip the result.
    "khub bhalo hoyeche",
    "Dhurr ar posachhe na all these things.",
]

for text in examples:
    polarity, why = sentipipe.hybrid_classify(
        text, lexicons, model, vocab, stopwords=stopwords
    )
    print(f"  {polarity:+d}  via {why.value:10}  {text}")

# The rules themselves can be called on their own, which is how the tests
# pin their behavior down.
print()
verdict = sentipipe.flng("ki din chilo - feeling sad", lexicons)
print("feeling-tag rule alone:", verdict)
