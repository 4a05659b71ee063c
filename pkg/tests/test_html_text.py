from crawlwizard.analysis.html_text import extract_text, sniff_encoding


def test_minimal_document():
    title, text = extract_text("<html><body><p>Hello</p></body></html>")
    assert text == "Hello"
    assert title == ""


def test_script_and_style_content_removed():
    html = """<html><head><title>T</title><style>p{color:red}</style></head>
    <body><script>var x=1;</script><p>visible</p></body></html>"""
    title, text = extract_text(html)
    assert "var x=1;" not in text
    assert "color:red" not in text
    assert text == "visible"
    assert title == "T"


def test_entities_decoded():
    _, text = extract_text("<p>fish &amp; chips &lt;3</p>")
    assert text == "fish & chips <3"


def test_block_elements_become_paragraph_breaks():
    html = "<div>first</div><div>second</div><span>same </span><span>line</span>"
    _, text = extract_text(html)
    assert text == "first\nsecond\nsame line"


def test_comments_dropped():
    _, text = extract_text("<p>keep</p><!-- secret note -->")
    assert "secret" not in text


def test_malformed_html_does_not_raise():
    _, text = extract_text("<p>unclosed <b>bold <div>and <notatag/ oops")
    assert "unclosed" in text


def test_undecodable_bytes_become_replacement_chars():
    body = "caf\xe9".encode("latin-1")  # invalid as UTF-8
    _, text = extract_text(b"<p>" + body + b"</p>")
    assert text.startswith("caf")


def test_encoding_sniffed_from_meta():
    body = ('<html><head><meta charset="latin-1"></head>'
            "<body><p>caf\xe9</p></body></html>").encode("latin-1")
    assert sniff_encoding(body) == "latin-1"
    _, text = extract_text(body)
    assert text == "café"


def test_declared_encoding_wins_over_sniff():
    assert sniff_encoding(b"<html>", "utf-8") == "utf-8"
    assert sniff_encoding(b"<html>", "bogus-codec") == "utf-8"
