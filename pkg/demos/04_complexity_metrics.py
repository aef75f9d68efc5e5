"""Code-mixing complexity of a tagged corpus, plus classifier metrics.

    python3 demos/04_complexity_metrics.py
"""

import numpy as np

from codemixkit import fixture_path, corpusworks, learners

with open(fixture_path("mini_gold.json"), "rb") as fh:
    gold = corpusworks.parse_release(fh.read())

# Per-document code-mixing index and the LF/SF/MF component breakdown.
reports = [corpusworks.complexity(list(r.tags)) for r in gold]
mean = lambda key: sum(rep.to_dict()[key] for rep in reports) / len(reports)

print(f"{len(gold)} documents")
for key in ("cmi", "lf", "sf", "mf", "cf1", "cf2", "cf3"):
    print(f"  mean {key:4} {mean(key):6.2f}")

most_mixed = max(zip(gold, reports), key=lambda pair: pair[1].cmi)
print()
print(f"most mixed (cmi {most_mixed[1].cmi:.1f}):")
print(" ", most_mixed[0].lang_tagged_text)

# Metrics work from a confusion matrix, so they apply to any classifier
# output. Here: a deliberately imperfect prediction set.
gold_labels = [r.sentiment for r in gold]
noisy = list(gold_labels)
noisy[::7] = [(-s if s else 1) for s in gold_labels[::7]]

cm = learners.confusion(gold_labels, noisy, labels=[-1, 0, 1])
print()
print("confusion matrix (rows gold, cols predicted):")
print(np.array(cm.counts))
report = learners.metrics(cm)
print(f"accuracy {report.accuracy}  macro-F1 {report.macro_f1}  macro-G {report.macro_g}")
