"""Flat-file annotation store: one JSON file per item, atomic writes.

Each item file holds the work-queue item (text, tokens, status) and every
annotation record for it. The system pre-annotation is written at
initialization time, before any human record, and each (item, annotator)
pair keeps only its newest record. All writes go through a single lock and
a write-temp-then-rename step, so a crash mid-write never leaves a
half-written file behind.
"""

from __future__ import annotations

import datetime as dt
import json
import os
import tempfile
import threading
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .corpusworks import CorpusRecord
from .langid import LangTag

SYSTEM_ANNOTATOR = "system"


class StoreError(Exception):
    pass


@dataclass
class AnnotationRecord:
    item_id: int
    annotator_id: str
    lang_tags: List[str]  # "bn" / "en" / "un", aligned with item tokens
    sentiment: int
    created_at: str
    source: str  # "system" or "human"

    def to_dict(self) -> Dict:
        return dict(self.__dict__)

    @classmethod
    def from_dict(cls, obj: Dict) -> "AnnotationRecord":
        return cls(
            item_id=int(obj["item_id"]),
            annotator_id=str(obj["annotator_id"]),
            lang_tags=list(obj["lang_tags"]),
            sentiment=int(obj["sentiment"]),
            created_at=str(obj["created_at"]),
            source=str(obj["source"]),
        )


@dataclass
class WorkQueueItem:
    item_id: int
    text: str
    tokens: List[str]
    status: str = "pending"  # "pending" or "done"
    records: List[AnnotationRecord] = field(default_factory=list)

    @property
    def system_record(self) -> Optional[AnnotationRecord]:
        for rec in self.records:
            if rec.source == "system":
                return rec
        return None

    def to_dict(self) -> Dict:
        return {
            "item": {
                "item_id": self.item_id,
                "text": self.text,
                "tokens": self.tokens,
                "status": self.status,
            },
            "records": [r.to_dict() for r in self.records],
        }

    @classmethod
    def from_dict(cls, obj: Dict) -> "WorkQueueItem":
        item = obj["item"]
        return cls(
            item_id=int(item["item_id"]),
            text=str(item["text"]),
            tokens=list(item["tokens"]),
            status=str(item["status"]),
            records=[AnnotationRecord.from_dict(r) for r in obj.get("records", [])],
        )


def _now() -> str:
    return dt.datetime.now(dt.timezone.utc).isoformat()


class AnnotationStore:
    """Directory-backed store with one JSON file per work-queue item."""

    def __init__(self, directory: str):
        self.directory = directory
        self.items_dir = os.path.join(directory, "items")
        self._write_lock = threading.Lock()
        if not os.path.isdir(self.items_dir):
            raise StoreError(f"not an initialized store: {directory}")
        # Fail fast on corruption instead of serving bad data later.
        for item_id in self.item_ids():
            self._load(item_id)

    # -- initialization -------------------------------------------------

    @classmethod
    def initialize(
        cls,
        directory: str,
        items: Sequence[Tuple[int, str, Sequence[str], Sequence[str], int]],
    ) -> "AnnotationStore":
        """Create a store from (item_id, text, tokens, system_tags,
        system_sentiment) tuples. Every item gets its system pre-annotation
        immediately."""
        items_dir = os.path.join(directory, "items")
        os.makedirs(items_dir, exist_ok=True)
        for item_id, text, tokens, tags, sentiment in items:
            if len(tokens) != len(tags):
                raise StoreError(f"item {item_id}: token/tag length mismatch")
            item = WorkQueueItem(item_id=item_id, text=text, tokens=list(tokens))
            item.records.append(
                AnnotationRecord(
                    item_id=item_id,
                    annotator_id=SYSTEM_ANNOTATOR,
                    lang_tags=list(tags),
                    sentiment=int(sentiment),
                    created_at=_now(),
                    source="system",
                )
            )
            _atomic_write_json(
                os.path.join(items_dir, f"{item_id}.json"), item.to_dict()
            )
        return cls(directory)

    # -- reads ----------------------------------------------------------

    def item_ids(self) -> List[int]:
        ids = []
        for name in os.listdir(self.items_dir):
            if name.endswith(".json"):
                ids.append(int(name[: -len(".json")]))
        return sorted(ids)

    def _path(self, item_id: int) -> str:
        return os.path.join(self.items_dir, f"{item_id}.json")

    def _load(self, item_id: int) -> WorkQueueItem:
        path = self._path(item_id)
        if not os.path.exists(path):
            raise KeyError(item_id)
        try:
            with open(path, encoding="utf-8") as fh:
                return WorkQueueItem.from_dict(json.load(fh))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise StoreError(f"corrupt item file {path}: {exc}") from exc

    def get_item(self, item_id: int) -> WorkQueueItem:
        return self._load(item_id)

    def list_items(
        self,
        status: Optional[str] = None,
        annotator: Optional[str] = None,
    ) -> List[WorkQueueItem]:
        """All items, optionally narrowed by status. With ``annotator``,
        "pending" means "not yet annotated by that annotator"."""
        out = []
        for item_id in self.item_ids():
            item = self._load(item_id)
            if annotator is not None:
                done = any(r.annotator_id == annotator for r in item.records)
                effective = "done" if done else "pending"
            else:
                effective = item.status
            if status is not None and effective != status:
                continue
            out.append(item)
        return out

    def annotators(self) -> List[str]:
        ids = set()
        for item_id in self.item_ids():
            for rec in self._load(item_id).records:
                ids.add(rec.annotator_id)
        return sorted(ids)

    # -- writes ---------------------------------------------------------

    def add_annotation(
        self, item_id: int, annotator_id: str, lang_tags: Sequence[str], sentiment: int
    ) -> AnnotationRecord:
        valid = {t.value for t in LangTag}
        if any(t not in valid for t in lang_tags):
            raise ValueError(f"invalid language tags: {list(lang_tags)}")
        if sentiment not in (-1, 0, 1):
            raise ValueError(f"invalid sentiment: {sentiment}")
        with self._write_lock:
            item = self._load(item_id)
            if len(lang_tags) != len(item.tokens):
                raise ValueError(
                    f"expected {len(item.tokens)} language tags, got {len(lang_tags)}"
                )
            record = AnnotationRecord(
                item_id=item_id,
                annotator_id=annotator_id,
                lang_tags=list(lang_tags),
                sentiment=int(sentiment),
                created_at=_now(),
                source="system" if annotator_id == SYSTEM_ANNOTATOR else "human",
            )
            # Newest record per annotator replaces any older one.
            item.records = [
                r for r in item.records if r.annotator_id != annotator_id
            ] + [record]
            if any(r.source == "human" for r in item.records):
                item.status = "done"
            _atomic_write_json(self._path(item_id), item.to_dict())
            return record

    # -- agreement / export ---------------------------------------------

    def coannotated(self, a: str, b: str) -> List[Tuple[AnnotationRecord, AnnotationRecord]]:
        pairs = []
        for item_id in self.item_ids():
            item = self._load(item_id)
            rec_a = next((r for r in item.records if r.annotator_id == a), None)
            rec_b = next((r for r in item.records if r.annotator_id == b), None)
            if rec_a and rec_b:
                pairs.append((rec_a, rec_b))
        return pairs

    def export_gold(
        self, adjudicator: Optional[str] = None
    ) -> Tuple[List[CorpusRecord], List[Dict], List[int]]:
        """Adjudication policy: the adjudicator's record if present, else the
        per-token / sentiment majority over human records, else the system
        pre-annotation. Returns (records, provenance sidecar, skipped ids).
        """
        records: List[CorpusRecord] = []
        provenance: List[Dict] = []
        skipped: List[int] = []
        for item_id in self.item_ids():
            item = self._load(item_id)
            if not item.records:
                skipped.append(item_id)
                continue
            chosen, how = self._adjudicate(item, adjudicator)
            records.append(
                CorpusRecord(
                    id=item_id,
                    text=item.text,
                    tokens=tuple(t.replace("\\", "") for t in item.tokens),
                    tags=tuple(LangTag(t) for t in chosen[0]),
                    sentiment=chosen[1],
                )
            )
            provenance.append({"item_id": item_id, "decided_by": how})
        return records, provenance, skipped

    @staticmethod
    def _adjudicate(item: WorkQueueItem, adjudicator: Optional[str]):
        if adjudicator is not None:
            rec = next(
                (r for r in item.records if r.annotator_id == adjudicator), None
            )
            if rec is not None:
                return (rec.lang_tags, rec.sentiment), f"adjudicator:{adjudicator}"
        humans = [r for r in item.records if r.source == "human"]
        if humans:
            tags = []
            for i in range(len(item.tokens)):
                votes: Dict[str, int] = {}
                for rec in humans:
                    votes[rec.lang_tags[i]] = votes.get(rec.lang_tags[i], 0) + 1
                tags.append(max(sorted(votes), key=lambda t: votes[t]))
            votes = {}
            for rec in humans:
                votes[rec.sentiment] = votes.get(rec.sentiment, 0) + 1
            sentiment = max(sorted(votes), key=lambda s: votes[s])
            return (tags, sentiment), "human_majority"
        system = item.system_record
        return (system.lang_tags, system.sentiment), "system"


def _atomic_write_json(path: str, payload: Dict) -> None:
    directory = os.path.dirname(path)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, ensure_ascii=False, indent=2)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
