"""Canonical JSON serialization.

The CLI and the HTTP service must produce byte-identical documents, so
both funnel through these two helpers: compact separators, UTF-8, one
trailing newline.
"""

from __future__ import annotations

import json


def dumps(doc) -> str:
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)


def document_text(doc) -> str:
    return dumps(doc) + "\n"


def document_bytes(doc) -> bytes:
    return document_text(doc).encode("utf-8")
