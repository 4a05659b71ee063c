"""Durable spec store: event log + snapshots behind the spec operations.

Layout under the data directory is one subdirectory per spec_id holding
meta.json (id, name, created_at), events.log and snapshot.json. Writes to
one spec are serialized by a per-spec lock; reads see a consistent
version. The in-memory state only advances after the log append succeeds.
"""

import json
import logging
import threading
import uuid
from datetime import datetime
from pathlib import Path

from crawlwizard.clock import Clock, SystemClock, isoformat_utc
from crawlwizard.errors import NotFoundError, ValidationError
from crawlwizard.specs.description import CrawlDescription, build_description
from crawlwizard.specs.events import EventKind, Provenance, SpecEvent, validate_payload
from crawlwizard.specs.export import export_document
from crawlwizard.specs.model import CrawlSpecification, empty_spec, replay
from crawlwizard.storage.log import EventLog
from crawlwizard.storage.snapshots import load_snapshot, save_snapshot

log = logging.getLogger(__name__)

DEFAULT_SNAPSHOT_INTERVAL = 25


class _LiveSpec:
    def __init__(self, spec: CrawlSpecification, event_log: EventLog):
        self.spec = spec
        self.event_log = event_log
        self.lock = threading.Lock()


class SpecStore:
    def __init__(self, data_dir: Path | str, clock: Clock | None = None,
                 fsync: bool = True,
                 snapshot_interval: int = DEFAULT_SNAPSHOT_INTERVAL):
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self.clock = clock or SystemClock()
        self.fsync = fsync
        self.snapshot_interval = snapshot_interval
        self._specs: dict[str, _LiveSpec] = {}
        self._registry_lock = threading.Lock()

    # -- paths ------------------------------------------------------------

    def _spec_dir(self, spec_id: str) -> Path:
        return self.data_dir / spec_id

    def _meta_path(self, spec_id: str) -> Path:
        return self._spec_dir(spec_id) / "meta.json"

    def _log_path(self, spec_id: str) -> Path:
        return self._spec_dir(spec_id) / "events.log"

    def _snapshot_path(self, spec_id: str) -> Path:
        return self._spec_dir(spec_id) / "snapshot.json"

    # -- lifecycle ---------------------------------------------------------

    def create_spec(self, name: str) -> CrawlSpecification:
        if not name or not name.strip():
            raise ValidationError("spec name must be non-empty", field="name")
        name = name.strip()
        spec_id = uuid.uuid4().hex[:12]
        spec_dir = self._spec_dir(spec_id)
        spec_dir.mkdir(parents=True)
        self._meta_path(spec_id).write_text(json.dumps({
            "spec_id": spec_id,
            "name": name,
            "created_at": isoformat_utc(self.clock.now()),
        }), encoding="utf-8")
        live = _LiveSpec(empty_spec(spec_id, name),
                         EventLog(self._log_path(spec_id), fsync=self.fsync))
        with self._registry_lock:
            self._specs[spec_id] = live
        log.info("created spec %s (%r)", spec_id, name)
        return live.spec

    def _load(self, spec_id: str) -> _LiveSpec:
        with self._registry_lock:
            live = self._specs.get(spec_id)
            if live is not None:
                return live
            meta_path = self._meta_path(spec_id)
            if not meta_path.exists():
                raise NotFoundError(f"no spec with id {spec_id!r}")
            meta = json.loads(meta_path.read_text(encoding="utf-8"))
            event_log = EventLog(self._log_path(spec_id), fsync=self.fsync)
            base = empty_spec(spec_id, meta["name"])
            from_id = 1
            snapshot = load_snapshot(self._snapshot_path(spec_id))
            if snapshot is not None:
                state, version = snapshot
                base = CrawlSpecification.from_dict(state)
                from_id = version + 1
            events = [SpecEvent.from_dict(json.loads(payload))
                      for _, payload in event_log.read_records(from_id)]
            live = _LiveSpec(replay(events, base), event_log)
            self._specs[spec_id] = live
            return live

    # -- reads ---------------------------------------------------------------

    def get_spec(self, spec_id: str) -> CrawlSpecification:
        return self._load(spec_id).spec

    def events(self, spec_id: str, from_id: int = 1) -> list[SpecEvent]:
        live = self._load(spec_id)
        with live.lock:
            return [SpecEvent.from_dict(json.loads(payload))
                    for _, payload in live.event_log.read_records(from_id)]

    def export(self, spec_id: str) -> dict:
        return export_document(self.get_spec(spec_id), generated_at=self.clock.now())

    def describe(self, spec_id: str) -> CrawlDescription:
        live = self._load(spec_id)
        with live.lock:
            events = [SpecEvent.from_dict(json.loads(payload))
                      for _, payload in live.event_log.read_records()]
            return build_description(live.spec.spec_id, live.spec.name, events)

    # -- writes ---------------------------------------------------------------

    def apply_event(self, spec_id: str, kind: EventKind | str, payload: dict,
                    provenance: Provenance | None = None) -> CrawlSpecification:
        """Validate, append and fold one user action.

        No-op adds and removes are still appended; the version advances
        with every logged event. On a storage failure nothing changes.
        """
        try:
            kind = EventKind(kind)
        except ValueError as exc:
            raise ValidationError(f"unknown event kind: {kind!r}", field="kind") from exc
        canonical = validate_payload(kind, payload)
        provenance = provenance or Provenance()

        live = self._load(spec_id)
        with live.lock:
            event = SpecEvent(
                event_id=live.spec.version + 1,
                spec_id=spec_id,
                at=self.clock.now(),
                kind=kind,
                payload=canonical,
                provenance=provenance,
            )
            next_state = live.spec.apply(event)
            assigned = live.event_log.append(
                json.dumps(event.to_dict(), ensure_ascii=False).encode("utf-8"))
            if assigned != event.event_id:
                # Log and fold disagree about history; refuse to continue.
                raise RuntimeError(
                    f"event id mismatch for spec {spec_id}: log says {assigned}, "
                    f"state says {event.event_id}")
            live.spec = next_state
            if self.snapshot_interval and assigned % self.snapshot_interval == 0:
                self._write_snapshot(live)
            return live.spec

    def set_schedule(self, spec_id: str, start: datetime | str,
                     duration_seconds: int,
                     provenance: Provenance | None = None) -> CrawlSpecification:
        start_text = start if isinstance(start, str) else isoformat_utc(start)
        return self.apply_event(
            spec_id, EventKind.SCHEDULE_SET,
            {"start": start_text, "duration_seconds": duration_seconds},
            provenance)

    def snapshot(self, spec_id: str) -> int:
        """Write a snapshot at the current version; returns that version."""
        live = self._load(spec_id)
        with live.lock:
            self._write_snapshot(live)
            return live.spec.version

    def _write_snapshot(self, live: _LiveSpec) -> None:
        save_snapshot(self._snapshot_path(live.spec.spec_id),
                      live.spec.to_dict(), live.spec.version)

    def close(self) -> None:
        with self._registry_lock:
            for live in self._specs.values():
                live.event_log.close()
            self._specs.clear()
