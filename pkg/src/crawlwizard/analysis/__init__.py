"""Page download, text extraction, key-term ranking and entity extraction."""
