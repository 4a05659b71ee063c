"""HTTP/JSON boundary composing search, analysis and spec building."""
