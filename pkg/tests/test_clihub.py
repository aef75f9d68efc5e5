import json
import os

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from codemixkit import fixture_path
from codemixkit.cli import main
from codemixkit.corpusworks import parse_release
from codemixkit.learners import cohen_kappa
from codemixkit.server import create_app
from codemixkit.store import SYSTEM_ANNOTATOR, AnnotationStore, StoreError


def seed_items():
    return [
        (1, "ami bhalo achi", ["ami", "bhalo", "achi"], ["bn", "bn", "bn"], 1),
        (2, "very bad day", ["very", "bad", "day"], ["en", "en", "en"], -1),
        (3, "ajke office jabo", ["ajke", "office", "jabo"], ["bn", "en", "bn"], 0),
    ]


@pytest.fixture
def store(tmp_path):
    return AnnotationStore.initialize(str(tmp_path / "store"), seed_items())


class TestStore:
    def test_initialize_writes_system_records(self, store):
        assert store.item_ids() == [1, 2, 3]
        item = store.get_item(1)
        assert item.status == "pending"
        rec = item.system_record
        assert rec.annotator_id == SYSTEM_ANNOTATOR
        assert rec.lang_tags == ["bn", "bn", "bn"]

    def test_add_annotation_marks_done(self, store):
        store.add_annotation(1, "ann1", ["bn", "bn", "un"], 1)
        item = store.get_item(1)
        assert item.status == "done"
        assert {r.annotator_id for r in item.records} == {SYSTEM_ANNOTATOR, "ann1"}

    def test_newest_record_per_annotator_wins(self, store):
        store.add_annotation(1, "ann1", ["bn", "bn", "bn"], 0)
        store.add_annotation(1, "ann1", ["en", "en", "en"], 1)
        item = store.get_item(1)
        mine = [r for r in item.records if r.annotator_id == "ann1"]
        assert len(mine) == 1
        assert mine[0].sentiment == 1

    def test_validation(self, store):
        with pytest.raises(ValueError):
            store.add_annotation(1, "ann1", ["bn", "xx", "bn"], 0)
        with pytest.raises(ValueError):
            store.add_annotation(1, "ann1", ["bn", "bn"], 0)
        with pytest.raises(ValueError):
            store.add_annotation(1, "ann1", ["bn", "bn", "bn"], 9)
        with pytest.raises(KeyError):
            store.add_annotation(99, "ann1", ["bn"], 0)

    def test_no_temp_files_left_behind(self, store):
        store.add_annotation(1, "ann1", ["bn", "bn", "bn"], 1)
        leftovers = [n for n in os.listdir(store.items_dir) if n.endswith(".tmp")]
        assert leftovers == []

    def test_pending_is_per_annotator(self, store):
        store.add_annotation(1, "ann1", ["bn", "bn", "bn"], 1)
        pending = store.list_items(status="pending", annotator="ann1")
        assert [i.item_id for i in pending] == [2, 3]
        # A different annotator still sees all three as pending.
        pending2 = store.list_items(status="pending", annotator="ann2")
        assert [i.item_id for i in pending2] == [1, 2, 3]

    def test_coannotated(self, store):
        store.add_annotation(1, "a", ["bn", "bn", "bn"], 1)
        store.add_annotation(1, "b", ["bn", "bn", "un"], 1)
        store.add_annotation(2, "a", ["en", "en", "en"], -1)
        pairs = store.coannotated("a", "b")
        assert len(pairs) == 1
        assert pairs[0][0].annotator_id == "a"

    def test_corrupt_file_fails_fast(self, store):
        with open(os.path.join(store.items_dir, "1.json"), "w") as fh:
            fh.write("{broken")
        with pytest.raises(StoreError):
            AnnotationStore(store.directory)

    def test_uninitialized_directory_rejected(self, tmp_path):
        with pytest.raises(StoreError):
            AnnotationStore(str(tmp_path / "nope"))


class TestExportAdjudication:
    def test_system_only(self, store):
        records, provenance, skipped = store.export_gold()
        assert [r.sentiment for r in records] == [1, -1, 0]
        assert all(p["decided_by"] == "system" for p in provenance)
        assert skipped == []

    def test_human_majority_beats_system(self, store):
        store.add_annotation(1, "a", ["bn", "bn", "un"], 0)
        store.add_annotation(1, "b", ["bn", "bn", "un"], 0)
        store.add_annotation(1, "c", ["bn", "en", "bn"], 1)
        records, provenance, _ = store.export_gold()
        rec = next(r for r in records if r.id == 1)
        assert [t.value for t in rec.tags] == ["bn", "bn", "un"]
        assert rec.sentiment == 0
        assert provenance[0]["decided_by"] == "human_majority"

    def test_adjudicator_beats_majority(self, store):
        store.add_annotation(1, "a", ["bn", "bn", "un"], 0)
        store.add_annotation(1, "b", ["bn", "bn", "un"], 0)
        store.add_annotation(1, "boss", ["en", "en", "en"], -1)
        records, provenance, _ = store.export_gold(adjudicator="boss")
        rec = next(r for r in records if r.id == 1)
        assert [t.value for t in rec.tags] == ["en", "en", "en"]
        assert rec.sentiment == -1
        assert provenance[0]["decided_by"] == "adjudicator:boss"

    def test_majority_tie_is_deterministic(self, store):
        store.add_annotation(2, "a", ["en", "en", "en"], 1)
        store.add_annotation(2, "b", ["bn", "en", "en"], -1)
        r1, _, _ = store.export_gold()
        r2, _, _ = store.export_gold()
        assert r1 == r2


@pytest.fixture
def client(store, lexicons):
    return TestClient(create_app(store, lexicons))


class TestServer:
    def test_list_items(self, client):
        body = client.get("/api/v1/items").json()
        assert body["total"] == 3
        assert [i["item"]["item_id"] for i in body["items"]] == [1, 2, 3]

    def test_pagination(self, client):
        body = client.get("/api/v1/items", params={"page": 2, "page_size": 2}).json()
        assert body["total"] == 3
        assert [i["item"]["item_id"] for i in body["items"]] == [3]

    def test_get_item(self, client):
        body = client.get("/api/v1/items/2").json()
        assert body["item"]["tokens"] == ["very", "bad", "day"]

    def test_get_missing_item_404(self, client):
        assert client.get("/api/v1/items/99").status_code == 404

    def test_post_annotation(self, client):
        resp = client.post(
            "/api/v1/items/1/annotations",
            json={"annotator_id": "ann1", "lang_tags": ["bn", "bn", "un"], "sentiment": 1},
        )
        assert resp.status_code == 201
        assert resp.json()["source"] == "human"
        body = client.get("/api/v1/items/1").json()
        assert body["item"]["status"] == "done"

    def test_post_wrong_length_422(self, client):
        resp = client.post(
            "/api/v1/items/1/annotations",
            json={"annotator_id": "ann1", "lang_tags": ["bn"], "sentiment": 1},
        )
        assert resp.status_code == 422

    def test_post_bad_tag_422(self, client):
        resp = client.post(
            "/api/v1/items/1/annotations",
            json={"annotator_id": "a", "lang_tags": ["bn", "bn", "zz"], "sentiment": 0},
        )
        assert resp.status_code == 422

    def test_post_missing_item_404(self, client):
        resp = client.post(
            "/api/v1/items/99/annotations",
            json={"annotator_id": "a", "lang_tags": ["bn"], "sentiment": 0},
        )
        assert resp.status_code == 404

    def test_agreement_identical_annotators(self, client):
        for item_id, tags, s in ((1, ["bn", "bn", "bn"], 1), (2, ["en", "en", "en"], -1)):
            for who in ("a", "b"):
                client.post(
                    f"/api/v1/items/{item_id}/annotations",
                    json={"annotator_id": who, "lang_tags": tags, "sentiment": s},
                )
        body = client.get("/api/v1/agreement", params={"a": "a", "b": "b"}).json()
        assert body == {"kappa_language": 1.0, "kappa_sentiment": 1.0, "n_items": 2}

    def test_agreement_no_pairs(self, client):
        body = client.get("/api/v1/agreement", params={"a": "x", "b": "y"}).json()
        assert body == {"kappa_language": None, "kappa_sentiment": None, "n_items": 0}

    def test_agreement_matches_direct_computation(self, client, store):
        store.add_annotation(1, "a", ["bn", "bn", "un"], 1)
        store.add_annotation(1, "b", ["bn", "en", "un"], 0)
        store.add_annotation(3, "a", ["bn", "en", "bn"], 0)
        store.add_annotation(3, "b", ["bn", "en", "bn"], 0)
        body = client.get("/api/v1/agreement", params={"a": "a", "b": "b"}).json()
        lang_a = ["bn", "bn", "un", "bn", "en", "bn"]
        lang_b = ["bn", "en", "un", "bn", "en", "bn"]
        assert body["kappa_language"] == pytest.approx(cohen_kappa(lang_a, lang_b))
        assert body["kappa_sentiment"] == pytest.approx(cohen_kappa([1, 0], [0, 0]))
        assert body["n_items"] == 2

    def test_guidelines(self, client):
        body = client.get("/api/v1/guidelines").json()
        ids = [g["id"] for g in body["guidelines"]]
        assert len(ids) == len(set(ids)) >= 10
        categories = {g["category"] for g in body["guidelines"]}
        assert categories == {"language", "sentiment"}

    def test_stats(self, client):
        body = client.get("/api/v1/stats").json()
        assert body["n_records"] == 3
        assert set(body["complexity"]) == {"cmi", "lf", "sf", "mf", "cf1", "cf2", "cf3"}
        docs = sum(a["documents"] for a in body["aspects"].values())
        assert docs == 3


@pytest.fixture
def workdir(tmp_path):
    raw = tmp_path / "raw.ndjson"
    lines = [
        {"id": 1, "text": "ami bhalo achi ajke"},
        {"id": 2, "text": "ok"},
        {"id": 3, "text": "ami bhalo achi ajke"},
        {"id": 4, "text": "khub kharap laglo movie ta"},
    ]
    raw.write_text("".join(json.dumps(o) + "\n" for o in lines))
    seeds = tmp_path / "seeds.tsv"
    seeds.write_text("ami\t10\nbhalo\t8\nkhub\t5\nkharap\t4\n")
    return tmp_path


def run(args):
    result = CliRunner().invoke(main, [str(a) for a in args])
    assert result.exit_code == 0, result.output
    return result.output


class TestCli:
    def test_filter(self, workdir):
        kept = workdir / "kept.jsonl"
        rej = workdir / "rejected.jsonl"
        out = run(
            [
                "filter",
                "--alpha", 2, "--beta", 3,
                "--seeds", workdir / "seeds.tsv",
                "--in", workdir / "raw.ndjson",
                "--out-kept", kept, "--out-rejected", rej,
            ]
        )
        assert "kept 2, rejected 2" in out
        kept_ids = [json.loads(l)["id"] for l in kept.read_text().splitlines()]
        assert kept_ids == [1, 4]
        reasons = {
            json.loads(l)["id"]: json.loads(l)["reason"]
            for l in rej.read_text().splitlines()
        }
        assert reasons == {2: "below_beta", 3: "duplicate"}
        manifest = json.loads((workdir / "kept.jsonl.manifest.json").read_text())
        assert manifest["command"] == "filter"
        assert "config_hash" in manifest

    def test_seed(self, workdir):
        out_path = workdir / "seeds_out.tsv"
        run(["seed", "--in", fixture_path("mini_gold.json"), "--out", out_path])
        rows = [l.split("\t") for l in out_path.read_text().splitlines()]
        freqs = [int(f) for _, f in rows]
        assert freqs == sorted(freqs, reverse=True)

    def test_language_model_workflow(self, workdir):
        model_path = workdir / "lang.model"
        run(["train-lang", "--lexicons", fixture_path("lexicons"), "--out", model_path])
        tagged_path = workdir / "tagged.json"
        run(
            [
                "tag-lang",
                "--lexicons", fixture_path("lexicons"),
                "--model", model_path,
                "--in", workdir / "raw.ndjson",
                "--out", tagged_path,
            ]
        )
        rows = json.loads(tagged_path.read_text())
        assert len(rows) == 4
        first = next(r for r in rows if r["id"] == 1)
        assert first["lang_tagged_text"].split(" ")[0] == "ami\\bn"

    def test_sentiment_workflow(self, workdir):
        model_path = workdir / "sent.model"
        vocab_path = workdir / "vocab.json"
        run(
            [
                "train-sent",
                "--lexicons", fixture_path("lexicons"),
                "--train", fixture_path("mini_gold.json"),
                "--kind", "sgdc",
                "--out", model_path, "--vocab-out", vocab_path,
                "--seed", 13,
            ]
        )
        pred_path = workdir / "pred.json"
        run(
            [
                "classify",
                "--lexicons", fixture_path("lexicons"),
                "--model", model_path, "--vocab", vocab_path,
                "--in", fixture_path("mini_gold.json"),
                "--out", pred_path,
            ]
        )
        preds = json.loads(pred_path.read_text())
        assert all(p["sentiment"] in (-1, 0, 1) for p in preds)
        out = run(["evaluate", "--gold", fixture_path("mini_gold.json"), "--pred", pred_path])
        acc = float(next(l.split()[1] for l in out.splitlines() if l.startswith("accuracy")))
        assert acc >= 70.0

    def test_metrics(self, workdir):
        out_path = workdir / "complexity.json"
        run(["metrics", "--in", fixture_path("mini_gold.json"), "--out", out_path])
        payload = json.loads(out_path.read_text())
        assert len(payload["records"]) == 150
        assert 0.0 <= payload["mean"]["cmi"] <= 50.0

    def test_kappa_release_files_self(self, workdir):
        out = run(
            [
                "kappa",
                "--gold", fixture_path("mini_gold.json"),
                "--pred", fixture_path("mini_gold.json"),
            ]
        )
        payload = json.loads(out)
        assert payload["kappa_language"] == 1.0
        assert payload["kappa_sentiment"] == 1.0
        assert payload["n_items"] == 150

    def test_store_workflow_and_api_cli_kappa_equal(self, workdir, lexicons):
        store_dir = workdir / "store"
        store = AnnotationStore.initialize(str(store_dir), seed_items())
        store.add_annotation(1, "a", ["bn", "bn", "un"], 1)
        store.add_annotation(1, "b", ["bn", "en", "un"], 1)
        store.add_annotation(2, "a", ["en", "en", "en"], -1)
        store.add_annotation(2, "b", ["en", "en", "en"], 0)

        out = run(["kappa", "--store", store_dir, "-a", "a", "-b", "b"])
        cli_payload = json.loads(out)

        client = TestClient(create_app(store, lexicons))
        api_payload = client.get("/api/v1/agreement", params={"a": "a", "b": "b"}).json()
        assert cli_payload == api_payload

        release = workdir / "release.json"
        run(["export", "--store", store_dir, "--out", release, "--adjudicator", "a"])
        records = parse_release(release.read_bytes())
        assert [r.id for r in records] == [1, 2, 3]
        prov = json.loads((workdir / "release.json.provenance.json").read_text())
        by_id = {p["item_id"]: p["decided_by"] for p in prov}
        assert by_id[1] == "adjudicator:a"
        assert by_id[3] == "system"

    def test_kappa_requires_arguments(self):
        result = CliRunner().invoke(main, ["kappa"])
        assert result.exit_code != 0

    def test_init_store(self, workdir):
        lang_model = workdir / "lang.model"
        sent_model = workdir / "sent.model"
        vocab = workdir / "vocab.json"
        run(["train-lang", "--lexicons", fixture_path("lexicons"), "--out", lang_model])
        run(
            [
                "train-sent",
                "--lexicons", fixture_path("lexicons"),
                "--train", fixture_path("mini_gold.json"),
                "--out", sent_model, "--vocab-out", vocab,
            ]
        )
        store_dir = workdir / "store2"
        run(
            [
                "init-store",
                "--lexicons", fixture_path("lexicons"),
                "--lang-model", lang_model,
                "--sent-model", sent_model,
                "--vocab", vocab,
                "--in", workdir / "raw.ndjson",
                "--store", store_dir,
            ]
        )
        store = AnnotationStore(str(store_dir))
        assert store.item_ids() == [1, 2, 3, 4]
        item = store.get_item(1)
        assert item.system_record.lang_tags[0] == "bn"
