"""Event-sourced crawl specifications and their provenance descriptions."""
