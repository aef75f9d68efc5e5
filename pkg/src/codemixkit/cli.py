"""Command-line entry point wiring the library modules together.

Every subcommand that writes output also drops a reproducibility manifest
(`<output>.manifest.json`) recording the inputs, a hash of the effective
configuration and the random seed.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
from typing import List, Optional, Tuple

import click

from . import corpusworks, langid, learners, sentipipe
from .langid import LangTag
from .lexistore import load_lexicons
from .store import AnnotationStore


def _write_manifest(out_path: str, command: str, inputs: dict, seed: Optional[int]):
    config_blob = json.dumps(inputs, sort_keys=True, default=str).encode()
    manifest = {
        "command": command,
        "inputs": inputs,
        "config_hash": hashlib.sha256(config_blob).hexdigest(),
        "seed": seed,
    }
    with open(out_path + ".manifest.json", "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)


def _hyperparams(seed: Optional[int]) -> learners.Hyperparams:
    if seed is None:
        return learners.Hyperparams()
    return learners.Hyperparams(seed=seed)


def _load_config(path: Optional[str]) -> sentipipe.PipelineConfig:
    if path is None:
        return sentipipe.PipelineConfig()
    return sentipipe.PipelineConfig.from_file(path)


@click.group()
def main():
    """Code-mixed corpus construction toolkit."""


@main.command("filter")
@click.option("--alpha", type=int, required=True)
@click.option("--beta", type=int, required=True)
@click.option("--seeds", "seeds_path", type=click.Path(exists=True), required=True)
@click.option("--in", "in_path", type=click.Path(exists=True), required=True)
@click.option("--out-kept", "kept_path", type=click.Path(), default="kept.jsonl")
@click.option("--out-rejected", "rejected_path", type=click.Path(), default="rejected.jsonl")
def filter_cmd(alpha, beta, seeds_path, in_path, kept_path, rejected_path):
    """Filter a raw message stream with the alpha/beta thresholds."""
    seeds = set()
    with open(seeds_path, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                seeds.add(line.split("\t")[0].strip())
    cfg = corpusworks.FilterConfig(
        alpha=alpha, beta=beta, seed_keywords=frozenset(seeds)
    )
    kept, rejected = corpusworks.filter_stream(
        corpusworks.read_raw_stream(in_path), cfg
    )
    with open(kept_path, "w", encoding="utf-8") as fh:
        for msg in kept:
            fh.write(json.dumps({"id": msg.id, "text": msg.text}, ensure_ascii=False) + "\n")
    with open(rejected_path, "w", encoding="utf-8") as fh:
        for rej in rejected:
            fh.write(
                json.dumps(
                    {
                        "id": rej.message.id,
                        "text": rej.message.text,
                        "reason": rej.reason.value,
                    },
                    ensure_ascii=False,
                )
                + "\n"
            )
    _write_manifest(
        kept_path,
        "filter",
        {"alpha": alpha, "beta": beta, "seeds": seeds_path, "in": in_path},
        None,
    )
    click.echo(f"kept {len(kept)}, rejected {len(rejected)}")


@main.command("seed")
@click.option("--in", "in_path", type=click.Path(exists=True), required=True)
@click.option("--out", "out_path", type=click.Path(), default="seeds.tsv")
@click.option("--cap", type=int, default=corpusworks.DEFAULT_SEED_CAP)
def seed_cmd(in_path, out_path, cap):
    """Build a frequency-ranked Bengali seed list from a tagged release file."""
    records = corpusworks.parse_release(open(in_path, "rb").read())
    counts = {}
    from .textcore import normalize

    for rec in records:
        for tok, tag in zip(rec.tokens, rec.tags):
            if tag is LangTag.BN:
                word = normalize(tok)
                counts[word] = counts.get(word, 0) + 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:cap]
    with open(out_path, "w", encoding="utf-8") as fh:
        for word, freq in ranked:
            fh.write(f"{word}\t{freq}\n")
    _write_manifest(out_path, "seed", {"in": in_path, "cap": cap}, None)
    click.echo(f"wrote {len(ranked)} seed keywords")


@main.command("train-lang")
@click.option("--lexicons", "lex_dir", type=click.Path(exists=True), required=True)
@click.option("--out", "out_path", type=click.Path(), default="model.langmodel")
@click.option("--seed", type=int, default=None)
def train_lang_cmd(lex_dir, out_path, seed):
    """Train the fallback word-language classifier from the lexicon lists."""
    lex = load_lexicons(lex_dir)
    model = langid.train_lang_model(
        sorted(lex.bn_words), sorted(lex.en_words), _hyperparams(seed)
    )
    langid.save_lang_model(model, out_path)
    _write_manifest(out_path, "train-lang", {"lexicons": lex_dir}, seed)
    click.echo(f"trained language model with {len(model.vocabulary)} n-gram features")


@main.command("tag-lang")
@click.option("--lexicons", "lex_dir", type=click.Path(exists=True), required=True)
@click.option("--model", "model_path", type=click.Path(exists=True), required=True)
@click.option("--in", "in_path", type=click.Path(exists=True), required=True)
@click.option("--out", "out_path", type=click.Path(), default="tagged.json")
def tag_lang_cmd(lex_dir, model_path, in_path, out_path):
    """Language-tag a raw message stream."""
    lex = load_lexicons(lex_dir)
    model = langid.load_lang_model(model_path)
    out = []
    for msg in corpusworks.read_raw_stream(in_path):
        tagged = langid.tag_text(msg.text, lex, model)
        rec = corpusworks.record_from_tagged(msg.id, msg.text, tagged, 0)
        out.append(
            {
                "id": rec.id,
                "text": rec.text,
                "lang_tagged_text": rec.lang_tagged_text,
            }
        )
    with open(out_path, "w", encoding="utf-8") as fh:
        json.dump(out, fh, ensure_ascii=False, indent=2, sort_keys=True)
    _write_manifest(
        out_path, "tag-lang", {"lexicons": lex_dir, "model": model_path, "in": in_path}, None
    )
    click.echo(f"tagged {len(out)} messages")


@main.command("train-sent")
@click.option("--lexicons", "lex_dir", type=click.Path(exists=True), required=True)
@click.option("--train", "train_path", type=click.Path(exists=True), required=True)
@click.option(
    "--kind",
    type=click.Choice([k.value for k in learners.ClassifierKind]),
    default="sgdc",
)
@click.option("--out", "out_path", type=click.Path(), default="model.sentmodel")
@click.option("--vocab-out", "vocab_path", type=click.Path(), default="vocab.json")
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
@click.option("--seed", type=int, default=None)
def train_sent_cmd(lex_dir, train_path, kind, out_path, vocab_path, config_path, seed):
    """Train the supervised sentiment classifier from a release-format file."""
    lex = load_lexicons(lex_dir)
    cfg = _load_config(config_path)
    records = corpusworks.parse_release(open(train_path, "rb").read())
    texts = [r.text for r in records]
    labels = [r.sentiment for r in records]
    model, vocab, stopwords = sentipipe.train_sentiment(
        texts,
        labels,
        lex,
        learners.ClassifierKind(kind),
        _hyperparams(seed),
        cfg,
    )
    learners.save_model(model, out_path)
    sentipipe.save_vocab(vocab, stopwords, vocab_path)
    _write_manifest(
        out_path,
        "train-sent",
        {"lexicons": lex_dir, "train": train_path, "kind": kind, "config": config_path},
        seed,
    )
    click.echo(f"trained {kind} on {len(records)} instances")


@main.command("classify")
@click.option("--lexicons", "lex_dir", type=click.Path(exists=True), required=True)
@click.option("--model", "model_path", type=click.Path(exists=True), required=True)
@click.option("--vocab", "vocab_path", type=click.Path(exists=True), required=True)
@click.option("--in", "in_path", type=click.Path(exists=True), required=True)
@click.option("--out", "out_path", type=click.Path(), default="predictions.json")
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
def classify_cmd(lex_dir, model_path, vocab_path, in_path, out_path, config_path):
    """Run the hybrid sentiment cascade over a release-format file."""
    lex = load_lexicons(lex_dir)
    cfg = _load_config(config_path)
    model = learners.load_model(model_path)
    vocab, stopwords = sentipipe.load_vocab(vocab_path)
    records = corpusworks.parse_release(open(in_path, "rb").read())
    out = []
    for rec in records:
        polarity, provenance = sentipipe.hybrid_classify(
            rec.text, lex, model, vocab, cfg, stopwords
        )
        out.append({"id": rec.id, "sentiment": polarity, "provenance": provenance.value})
    with open(out_path, "w", encoding="utf-8") as fh:
        json.dump(out, fh, ensure_ascii=False, indent=2, sort_keys=True)
    _write_manifest(
        out_path,
        "classify",
        {"lexicons": lex_dir, "model": model_path, "vocab": vocab_path, "in": in_path},
        None,
    )
    click.echo(f"classified {len(out)} messages")


def _sentiments_by_id(path: str) -> dict:
    with open(path, "rb") as fh:
        data = fh.read()
    obj = json.loads(data)
    if isinstance(obj, list) and obj and "lang_tagged_text" in obj[0]:
        return {r.id: r.sentiment for r in corpusworks.parse_release(data)}
    return {int(o["id"]): int(o["sentiment"]) for o in obj}


@main.command("evaluate")
@click.option("--gold", "gold_path", type=click.Path(exists=True), required=True)
@click.option("--pred", "pred_path", type=click.Path(exists=True), required=True)
def evaluate_cmd(gold_path, pred_path):
    """Confusion-matrix metrics of predicted vs gold sentiment labels."""
    gold = _sentiments_by_id(gold_path)
    pred = _sentiments_by_id(pred_path)
    shared = sorted(set(gold) & set(pred))
    if not shared:
        raise click.ClickException("no shared record ids between gold and pred")
    cm = learners.confusion([gold[i] for i in shared], [pred[i] for i in shared])
    report = learners.metrics(cm)
    click.echo(f"n          {cm.total}")
    click.echo(f"accuracy   {report.accuracy:.2f}")
    click.echo(f"precision  {report.macro_precision:.2f}")
    click.echo(f"recall     {report.macro_recall:.2f}")
    click.echo(f"f1         {report.macro_f1:.2f}")
    click.echo(f"g-score    {report.macro_g:.2f}")


@main.command("metrics")
@click.option("--in", "in_path", type=click.Path(exists=True), required=True)
@click.option("--out", "out_path", type=click.Path(), default=None)
def metrics_cmd(in_path, out_path):
    """Per-record and mean code-mixing complexity of a release file."""
    records = corpusworks.parse_release(open(in_path, "rb").read())
    rows = []
    for rec in records:
        rep = corpusworks.complexity(list(rec.tags))
        rows.append({"id": rec.id, **rep.to_dict()})
    summary = {}
    if rows:
        for key in ("cmi", "lf", "sf", "mf", "cf1", "cf2", "cf3"):
            summary[key] = sum(r[key] for r in rows) / len(rows)
    payload = {"records": rows, "mean": summary}
    text = json.dumps(payload, indent=2, sort_keys=True)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
        _write_manifest(out_path, "metrics", {"in": in_path}, None)
    click.echo(text)


@main.command("kappa")
@click.option("--store", "store_dir", type=click.Path(exists=True), default=None)
@click.option("-a", "annotator_a", default=None)
@click.option("-b", "annotator_b", default=None)
@click.option("--gold", "gold_path", type=click.Path(exists=True), default=None)
@click.option("--pred", "pred_path", type=click.Path(exists=True), default=None)
def kappa_cmd(store_dir, annotator_a, annotator_b, gold_path, pred_path):
    """Cohen's kappa, either between two annotators of a store or between
    two release files (token-level language kappa plus sentiment kappa)."""
    if store_dir:
        if not (annotator_a and annotator_b):
            raise click.ClickException("--store needs -a and -b annotator ids")
        store = AnnotationStore(store_dir)
        pairs = store.coannotated(annotator_a, annotator_b)
        if not pairs:
            raise click.ClickException("no co-annotated items")
        lang_a: List[str] = []
        lang_b: List[str] = []
        for rec_a, rec_b in pairs:
            lang_a.extend(rec_a.lang_tags)
            lang_b.extend(rec_b.lang_tags)
        sent_a = [ra.sentiment for ra, _ in pairs]
        sent_b = [rb.sentiment for _, rb in pairs]
        n_items = len(pairs)
    elif gold_path and pred_path:
        recs_a = {r.id: r for r in corpusworks.parse_release(open(gold_path, "rb").read())}
        recs_b = {r.id: r for r in corpusworks.parse_release(open(pred_path, "rb").read())}
        shared = sorted(set(recs_a) & set(recs_b))
        if not shared:
            raise click.ClickException("no shared record ids")
        lang_a, lang_b, sent_a, sent_b = [], [], [], []
        for i in shared:
            ra, rb = recs_a[i], recs_b[i]
            if len(ra.tags) == len(rb.tags):
                lang_a.extend(t.value for t in ra.tags)
                lang_b.extend(t.value for t in rb.tags)
            sent_a.append(ra.sentiment)
            sent_b.append(rb.sentiment)
        n_items = len(shared)
    else:
        raise click.ClickException("provide --store with -a/-b, or --gold and --pred")
    kl = learners.cohen_kappa(lang_a, lang_b) if lang_a else None
    ks = learners.cohen_kappa(sent_a, sent_b)
    click.echo(json.dumps(
        {"kappa_language": kl, "kappa_sentiment": ks, "n_items": n_items},
        indent=2, sort_keys=True,
    ))


@main.command("init-store")
@click.option("--lexicons", "lex_dir", type=click.Path(exists=True), required=True)
@click.option("--lang-model", "lang_model_path", type=click.Path(exists=True), required=True)
@click.option("--sent-model", "sent_model_path", type=click.Path(exists=True), required=True)
@click.option("--vocab", "vocab_path", type=click.Path(exists=True), required=True)
@click.option("--in", "in_path", type=click.Path(exists=True), required=True)
@click.option("--store", "store_dir", type=click.Path(), required=True)
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
def init_store_cmd(lex_dir, lang_model_path, sent_model_path, vocab_path, in_path, store_dir, config_path):
    """Pre-annotate a raw stream and initialize the annotation store."""
    lex = load_lexicons(lex_dir)
    cfg = _load_config(config_path)
    lang_model = langid.load_lang_model(lang_model_path)
    sent_model = learners.load_model(sent_model_path)
    vocab, stopwords = sentipipe.load_vocab(vocab_path)
    items = []
    for msg in corpusworks.read_raw_stream(in_path):
        tagged = langid.tag_text(msg.text, lex, lang_model)
        polarity, _ = sentipipe.hybrid_classify(
            msg.text, lex, sent_model, vocab, cfg, stopwords
        )
        items.append(
            (
                msg.id,
                msg.text,
                [tt.token.text for tt in tagged],
                [tt.tag.value for tt in tagged],
                polarity,
            )
        )
    AnnotationStore.initialize(store_dir, items)
    click.echo(f"initialized store with {len(items)} items at {store_dir}")


@main.command("export")
@click.option("--store", "store_dir", type=click.Path(exists=True), required=True)
@click.option("--out", "out_path", type=click.Path(), default="release.json")
@click.option("--adjudicator", default=None)
def export_cmd(store_dir, out_path, adjudicator):
    """Export the adjudicated gold corpus in the release JSON format."""
    store = AnnotationStore(store_dir)
    records, provenance, skipped = store.export_gold(adjudicator)
    with open(out_path, "wb") as fh:
        fh.write(corpusworks.write_release(records))
    with open(out_path + ".provenance.json", "w", encoding="utf-8") as fh:
        json.dump(provenance, fh, indent=2, sort_keys=True)
    _write_manifest(
        out_path, "export", {"store": store_dir, "adjudicator": adjudicator}, None
    )
    if skipped:
        click.echo(f"warning: skipped items without records: {skipped}", err=True)
    click.echo(f"exported {len(records)} records")


@main.command("serve")
@click.option("--store", "store_dir", type=click.Path(exists=True), required=True)
@click.option("--port", type=int, default=8765)
@click.option("--lexicons", "lex_dir", type=click.Path(exists=True), default=None)
@click.option("--static", "static_dir", type=click.Path(exists=True), default=None)
def serve_cmd(store_dir, port, lex_dir, static_dir):
    """Run the annotation HTTP service."""
    import uvicorn

    from .server import create_app
    from .store import StoreError

    try:
        store = AnnotationStore(store_dir)
    except StoreError as exc:
        raise click.ClickException(f"refusing to start: {exc}")
    lex = load_lexicons(lex_dir) if lex_dir else None
    app = create_app(store, lex, static_dir)
    uvicorn.run(app, host="127.0.0.1", port=port, log_level="warning")


if __name__ == "__main__":
    sys.exit(main())
