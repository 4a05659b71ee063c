"""Append-only event log with length-prefixed, checksummed records.

Record wire format: 4-byte big-endian payload length, 4-byte big-endian
CRC-32 of the payload, then the payload bytes (the JSON-serialized event).
Records are written in order, one per event, so the Nth record always
holds event_id N; a truncated tail record is discarded on open, while a
corrupted payload inside the log is a hard error naming the event.
"""

import logging
import os
import struct
import zlib
from pathlib import Path

from crawlwizard.errors import CorruptionError, StorageError

log = logging.getLogger(__name__)

_HEADER = struct.Struct(">II")


class EventLog:
    """One spec's log file. A single writer appends; reads rescan the file.

    With `fsync` enabled (the default) every append is durable before it
    returns; disabling it keeps the flush but skips the disk sync, for
    bulk imports.
    """

    def __init__(self, path: Path | str, fsync: bool = True):
        self.path = Path(path)
        self.fsync = fsync
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._count, valid_end = self._scan()
        size = self.path.stat().st_size if self.path.exists() else 0
        if valid_end < size:
            log.warning("discarding %d bytes of partial tail record in %s",
                        size - valid_end, self.path)
            with open(self.path, "r+b") as fh:
                fh.truncate(valid_end)
        self._fh = open(self.path, "ab")

    def _scan(self) -> tuple[int, int]:
        """Count complete records and find the last valid byte offset."""
        if not self.path.exists():
            return 0, 0
        count = 0
        offset = 0
        with open(self.path, "rb") as fh:
            while True:
                header = fh.read(_HEADER.size)
                if len(header) < _HEADER.size:
                    break
                length, _ = _HEADER.unpack(header)
                payload = fh.read(length)
                if len(payload) < length:
                    break
                count += 1
                offset += _HEADER.size + length
        return count, offset

    @property
    def count(self) -> int:
        return self._count

    def append(self, payload: bytes) -> int:
        """Write one record; returns its event_id (= record position).

        The record is flushed (and fsynced unless disabled) before the id
        is returned; on failure the log's count does not advance.
        """
        record = _HEADER.pack(len(payload), zlib.crc32(payload) & 0xFFFFFFFF) + payload
        try:
            self._fh.write(record)
            self._fh.flush()
            if self.fsync:
                os.fsync(self._fh.fileno())
        except OSError as exc:
            raise StorageError(f"append to {self.path} failed: {exc}") from exc
        self._count += 1
        return self._count

    def read_records(self, from_id: int = 1) -> list[tuple[int, bytes]]:
        """All (event_id, payload) pairs with event_id >= from_id, in order.

        Every returned payload has a verified checksum; a mismatch raises
        CorruptionError naming the event. An incomplete tail record (a
        crash artifact) is silently ignored.
        """
        if from_id < 1:
            raise ValueError("from_id must be >= 1")
        records: list[tuple[int, bytes]] = []
        event_id = 0
        with open(self.path, "rb") as fh:
            while True:
                header = fh.read(_HEADER.size)
                if len(header) < _HEADER.size:
                    break
                length, checksum = _HEADER.unpack(header)
                payload = fh.read(length)
                if len(payload) < length:
                    break
                event_id += 1
                if zlib.crc32(payload) & 0xFFFFFFFF != checksum:
                    raise CorruptionError(
                        f"checksum mismatch in {self.path} at event {event_id}",
                        event_id=event_id)
                if event_id >= from_id:
                    records.append((event_id, payload))
        return records

    def close(self) -> None:
        self._fh.close()

    def __enter__(self) -> "EventLog":
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()
