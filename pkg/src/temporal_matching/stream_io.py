"""Text formats for link streams and matchings.

One plain line-oriented format serves every stage (generated, compressed,
reduced, kernel streams), so stages compose through files:

    # t_min=0
    # t_max=5
    # vertices=a b c
    0 a b
    1 a b

Header lines are "# key=value"; unknown keys are preserved on parse and
ignored otherwise.  Body lines are "t u v" with whitespace-separated
fields, written sorted by (t, u, v).  Without headers the interval is
inferred from the body and the vertex set from the endpoints.  Matching
files reuse the same shape with a mandatory "gamma" header, each body line
naming a gamma-edge by its start instant and endpoints.
"""

from __future__ import annotations

import os
from pathlib import Path

from .core import GammaEdge, GammaMatching, LinkStream, validate_stream

__all__ = [
    "StreamParseError",
    "parse_stream",
    "serialize_stream",
    "parse_matching",
    "serialize_matching",
    "resolve_dataset",
    "DATA_DIR_ENV",
]

#: Directory searched for dataset files named on the command line.
DATA_DIR_ENV = "TMATCH_DATA_DIR"


class StreamParseError(ValueError):
    """Malformed stream or matching file; carries path and line number."""

    def __init__(self, path: str | Path | None, lineno: int | None, message: str):
        where = f"{path or '<text>'}"
        if lineno is not None:
            where += f":{lineno}"
        super().__init__(f"{where}: {message}")
        self.path = path
        self.lineno = lineno


def _token_safe(identifier: str) -> bool:
    return bool(identifier) and not any(ch.isspace() for ch in identifier) and "#" not in identifier


def _parse_lines(text: str, path=None):
    headers: dict[str, str] = {}
    rows: list[tuple[int, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if "=" not in body:
                raise StreamParseError(path, lineno, f"malformed header {line!r}")
            key, _, value = body.partition("=")
            headers[key.strip()] = value.strip()
            continue
        fields = line.split()
        if len(fields) != 3:
            raise StreamParseError(
                path, lineno, f"expected 't u v', got {len(fields)} fields"
            )
        try:
            t = int(fields[0])
        except ValueError:
            raise StreamParseError(path, lineno, f"bad time stamp {fields[0]!r}") from None
        rows.append((t, fields[1], fields[2]))
    return headers, rows


def _interval_from(headers, rows, path) -> tuple[int, int] | None:
    has_min, has_max = "t_min" in headers, "t_max" in headers
    if has_min != has_max:
        raise StreamParseError(path, None, "t_min and t_max must be given together")
    if has_min:
        try:
            return int(headers["t_min"]), int(headers["t_max"])
        except ValueError:
            raise StreamParseError(path, None, "t_min/t_max must be integers") from None
    if not rows:
        raise StreamParseError(path, None, "empty body and no t_min/t_max headers")
    return None


def parse_stream(source: str | Path, strict: bool = True) -> LinkStream:
    """Read a link stream from a file path.

    With ``strict`` (the default) invariant violations such as self-loops
    or out-of-interval edges abort the parse; pass ``strict=False`` to load
    the stream as-is for later inspection with :func:`validate_stream`.
    """
    path = Path(source)
    return parse_stream_text(path.read_text(), path=path, strict=strict)


def parse_stream_text(
    text: str, path: str | Path | None = None, strict: bool = True
) -> LinkStream:
    headers, rows = _parse_lines(text, path)
    interval = _interval_from(headers, rows, path)
    vertices = headers["vertices"].split() if "vertices" in headers else None
    stream = LinkStream(rows, vertices=vertices, time_interval=interval)
    if strict:
        report = validate_stream(stream)
        if not report.ok:
            raise StreamParseError(path, None, f"invalid stream: {report.violations[0]}")
    return stream


def serialize_stream(
    stream: LinkStream, target: str | Path, extra_headers: dict[str, str] | None = None
) -> None:
    """Write a stream so that parsing reproduces it exactly."""
    Path(target).write_text(stream_to_text(stream, extra_headers))


def stream_to_text(stream: LinkStream, extra_headers: dict[str, str] | None = None) -> str:
    for u in stream.vertices:
        if not _token_safe(u):
            raise ValueError(f"vertex id {u!r} cannot be written to the text format")
    lines = [f"# t_min={stream.t_min}", f"# t_max={stream.t_max}"]
    lines.append("# vertices=" + " ".join(sorted(stream.vertices)))
    for key, value in (extra_headers or {}).items():
        lines.append(f"# {key}={value}")
    lines.extend(f"{t} {u} {v}" for t, u, v in stream.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_matching(source: str | Path) -> GammaMatching:
    path = Path(source)
    headers, rows = _parse_lines(path.read_text(), path)
    if "gamma" not in headers:
        raise StreamParseError(path, None, "matching file requires a gamma header")
    try:
        gamma = int(headers["gamma"])
    except ValueError:
        raise StreamParseError(path, None, "gamma header must be an integer") from None
    return GammaMatching(GammaEdge(t, u, v, gamma) for t, u, v in rows)


def serialize_matching(
    matching: GammaMatching, target: str | Path, gamma: int | None = None
) -> None:
    if matching.gamma is not None:
        gamma = matching.gamma
    if gamma is None:
        raise ValueError("gamma needed to serialize an empty matching")
    lines = [f"# gamma={gamma}", f"# size={len(matching)}"]
    lines.extend(f"{e.start} {e.u} {e.v}" for e in matching)
    Path(target).write_text("\n".join(lines) + "\n")


def resolve_dataset(name: str) -> Path:
    """Resolve an input argument to a file.

    An existing path wins; otherwise the directory named by the
    TMATCH_DATA_DIR environment variable is searched for ``name`` and
    ``name``.tsv / ``name``.txt.
    """
    direct = Path(name)
    if direct.exists():
        return direct
    data_dir = os.environ.get(DATA_DIR_ENV)
    if data_dir:
        for candidate in (name, f"{name}.tsv", f"{name}.txt"):
            path = Path(data_dir) / candidate
            if path.exists():
                return path
    raise FileNotFoundError(
        f"no such stream file: {name} (also searched ${DATA_DIR_ENV})"
    )
