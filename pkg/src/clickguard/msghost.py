"""Native-messaging host: length-prefixed JSON frames over standard streams.

Each frame is a 4-byte little-endian payload length followed by that many
bytes of UTF-8 JSON, capped at 1 MiB in both directions. Requests look like
``{"type": "score", "headline": "..."}`` and get exactly one response each:
``{"type": "result", "score": <float>, "tier": <int>}`` on success or
``{"type": "error", "message": "..."}``. Bad requests are answered in-band;
only framing violations tear the connection down. Diagnostics go to stderr,
never to the message stream.

Browsers discover the host through a native manifest registered under the
name ``deep_breath``.
"""

from __future__ import annotations

import json
import struct
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import BinaryIO

from .errors import ModelFormatError, ProtocolError
from .nn import ModelParams
from .preprocess import Vocabulary
from .scorer import score_headline, severity
from .trainer import load_model

MAX_FRAME_BYTES = 1_048_576
HOST_NAME = "deep_breath"


def read_frame(stream: BinaryIO) -> bytes | None:
    """Read one frame; None signals a clean end of stream before any header."""
    header = _read_exact(stream, 4)
    if header is None:
        return None
    if len(header) < 4:
        raise ProtocolError("stream ended inside a frame header")
    (length,) = struct.unpack("<I", header)
    if length == 0:
        raise ProtocolError("zero-length frame is not a valid message")
    if length > MAX_FRAME_BYTES:
        raise ProtocolError(f"frame of {length} bytes exceeds the 1 MiB limit")
    payload = _read_exact(stream, length)
    if payload is None or len(payload) < length:
        got = 0 if payload is None else len(payload)
        raise ProtocolError(f"stream ended inside a frame payload ({got}/{length} bytes)")
    return payload


def write_frame(stream: BinaryIO, payload: bytes) -> None:
    """Write a length-prefixed frame and flush it."""
    if not payload:
        raise ProtocolError("refusing to write an empty frame")
    if len(payload) > MAX_FRAME_BYTES:
        raise ProtocolError(f"payload of {len(payload)} bytes exceeds the 1 MiB limit")
    stream.write(struct.pack("<I", len(payload)))
    stream.write(payload)
    stream.flush()


def _read_exact(stream: BinaryIO, n: int) -> bytes | None:
    """Read exactly n bytes; None on immediate EOF, short bytes on mid-read EOF."""
    chunks = []
    remaining = n
    while remaining:
        chunk = stream.read(remaining)
        if not chunk:
            break
        chunks.append(chunk)
        remaining -= len(chunk)
    if not chunks:
        return None
    return b"".join(chunks)


@dataclass(frozen=True)
class Host:
    """One loaded model answering score requests."""

    params: ModelParams
    vocab: Vocabulary

    def handle_request(self, payload: bytes) -> bytes:
        """Map one request payload to one response payload, errors in-band."""
        try:
            message = json.loads(payload)
        except (UnicodeDecodeError, json.JSONDecodeError):
            return _error_payload("request payload is not valid JSON")
        if not isinstance(message, dict):
            return _error_payload("request must be a JSON object")
        kind = message.get("type")
        if kind != "score":
            return _error_payload(f"unknown request type: {kind!r}")
        headline = message.get("headline")
        if not isinstance(headline, str):
            return _error_payload("request field 'headline' must be a string")
        score = score_headline(self.params, self.vocab, headline)
        return _json_payload({"type": "result", "score": score, "tier": severity(score)})

    def serve(self, stdin: BinaryIO, stdout: BinaryIO) -> int:
        """Answer frames until EOF. Returns the process exit code."""
        try:
            while True:
                try:
                    payload = read_frame(stdin)
                except ProtocolError as exc:
                    _log(f"protocol error: {exc}")
                    return 1
                if payload is None:
                    return 0
                response = self.handle_request(payload)
                try:
                    write_frame(stdout, response)
                except ProtocolError:
                    write_frame(stdout, _error_payload("internal: response exceeded the frame limit"))
        except KeyboardInterrupt:
            return 0


def serve(model_path: str | Path, stdin: BinaryIO | None = None, stdout: BinaryIO | None = None) -> int:
    """Load the model once, then run the request loop. Nonzero exit on load failure."""
    try:
        params, vocab = load_model(model_path)
    except ModelFormatError as exc:
        _log(f"cannot start host: {exc}")
        return 1
    host = Host(params=params, vocab=vocab)
    return host.serve(stdin or sys.stdin.buffer, stdout or sys.stdout.buffer)


def native_manifest(host_path: str | Path, allowed_extensions: list[str]) -> dict:
    """The native manifest document registering this host with a browser.

    Pass extension IDs like ``clickguard@example.org`` (Firefox
    ``allowed_extensions``) or ``chrome-extension://.../`` origins, which are
    emitted as ``allowed_origins`` for Chromium-family browsers.
    """
    manifest = {
        "name": HOST_NAME,
        "description": "Scores page headlines for clickbait and misinformation risk",
        "path": str(host_path),
        "type": "stdio",
    }
    origins = [e for e in allowed_extensions if e.startswith("chrome-extension://")]
    extensions = [e for e in allowed_extensions if not e.startswith("chrome-extension://")]
    if origins:
        manifest["allowed_origins"] = origins
    if extensions:
        manifest["allowed_extensions"] = extensions
    return manifest


def _json_payload(obj: dict) -> bytes:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":")).encode("utf-8")


def _error_payload(message: str) -> bytes:
    return _json_payload({"type": "error", "message": message})


def _log(message: str) -> None:
    print(f"clickguard-host: {message}", file=sys.stderr, flush=True)
