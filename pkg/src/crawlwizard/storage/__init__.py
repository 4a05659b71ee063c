"""File-backed append-only event logs and snapshots."""
