"""Annotation store, inter-annotator agreement and gold export.

    python3 demos/05_agreement_and_export.py
"""

import tempfile

from codemixkit import corpusworks, learners
from codemixkit.store import AnnotationStore

workdir = tempfile.mkdtemp(prefix="codemixkit-demo-")

# Initialize a store with system pre-annotations, the way `init-store`
# does from the command line.
store = AnnotationStore.initialize(
    workdir,
    [
        (1, "ami bhalo achi", ["ami", "bhalo", "achi"], ["bn", "bn", "bn"], 1),
        (2, "very bad day", ["very", "bad", "day"], ["en", "en", "en"], -1),
        (3, "ajke office jabo", ["ajke", "office", "jabo"], ["bn", "en", "bn"], 0),
    ],
)

# Two annotators review all three items. They disagree on one token and
# one sentiment label.
store.add_annotation(1, "annotator_a", ["bn", "bn", "bn"], 1)
store.add_annotation(1, "annotator_b", ["bn", "bn", "un"], 1)
store.add_annotation(2, "annotator_a", ["en", "en", "en"], -1)
store.add_annotation(2, "annotator_b", ["en", "en", "en"], -1)
store.add_annotation(3, "annotator_a", ["bn", "en", "bn"], 0)
store.add_annotation(3, "annotator_b", ["bn", "en", "bn"], 1)

pairs = store.coannotated("annotator_a", "annotator_b")
lang_a = [t for ra, _ in pairs for t in ra.lang_tags]
lang_b = [t for _, rb in pairs for t in rb.lang_tags]
sent_a = [ra.sentiment for ra, _ in pairs]
sent_b = [rb.sentiment for _, rb in pairs]

print(f"co-annotated items: {len(pairs)}")
print(f"language kappa:  {learners.cohen_kappa(lang_a, lang_b):.4f}")
print(f"sentiment kappa: {learners.cohen_kappa(sent_a, sent_b):.4f}")

# Export resolves each item: adjudicator first if named, then per-token
# human majority, then the system record.
records, provenance, skipped = store.export_gold()
print()
print("exported gold records:")
for rec, prov in zip(records, provenance):
    print(f"  {rec.id}: {rec.lang_tagged_text}  [{prov['decided_by']}]")

release = corpusworks.write_release(records)
assert corpusworks.parse_release(release) == records
print()
print(f"release JSON is {len(release)} bytes, round-trips exactly")
print(f"store directory: {workdir}")
