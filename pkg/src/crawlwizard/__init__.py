"""Crawl-specification wizard: build focused-crawl specs from keyword queries.

Federates web and social search connectors, enriches candidate seed pages
with graph-ranked key terms and rule-extracted entities, and records every
user action in an append-only event log from which the final crawl
specification and its provenance description are derived.
"""

__version__ = "0.1.0"
