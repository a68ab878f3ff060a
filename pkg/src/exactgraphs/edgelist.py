"""Plain-text edge-list format.

::

    # optional comments
    p <n> <m>
    <u> <v> [<w>]
    ...

Indices are 0-based and ``w`` defaults to 1.  :func:`dumps` writes edges in
lexicographic order, so equal graphs always serialize to identical text.
"""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError

__all__ = ["ParseError", "dumps", "loads", "read", "write"]


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def _number(tok: str, lineno: int, what: str):
    try:
        x = float(tok)
    except ValueError:
        raise ParseError(lineno, f"bad {what} {tok!r}") from None
    return int(x) if x.is_integer() else x


def loads(text: str) -> Graph:
    header = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if header is None:
            if toks[0] != "p" or len(toks) != 3:
                raise ParseError(lineno, "expected header 'p <n> <m>'")
            n, m = (_number(t, lineno, "header value") for t in toks[1:])
            if not isinstance(n, int) or not isinstance(m, int) or n < 0 or m < 0:
                raise ParseError(lineno, "header values must be non-negative integers")
            header = (n, m)
            continue
        if len(toks) not in (2, 3):
            raise ParseError(lineno, "expected '<u> <v> [<w>]'")
        u, v = (_number(t, lineno, "vertex index") for t in toks[:2])
        if not isinstance(u, int) or not isinstance(v, int):
            raise ParseError(lineno, "vertex indices must be integers")
        w = _number(toks[2], lineno, "weight") if len(toks) == 3 else 1
        if not (0 <= u < header[0] and 0 <= v < header[0]):
            raise ParseError(lineno, f"vertex index out of range for n={header[0]}")
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        if w <= 0:
            raise ParseError(lineno, "weight must be positive")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(lineno, f"duplicate edge {key[0]} {key[1]}")
        seen.add(key)
        edges.append((u, v, w))
    if header is None:
        raise ParseError(0, "missing header 'p <n> <m>'")
    if len(edges) != header[1]:
        raise ParseError(0, f"header declares {header[1]} edges, found {len(edges)}")
    try:
        return Graph(header[0], tuple(edges))
    except GraphError as exc:
        raise ParseError(0, str(exc)) from None


def dumps(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    for u, v, w in g.edges:
        lines.append(f"{u} {v} {w!r}" if isinstance(w, float) else f"{u} {v} {w}")
    return "\n".join(lines) + "\n"


def read(path) -> Graph:
    return loads(Path(path).read_text())


def write(g: Graph, path) -> None:
    Path(path).write_text(dumps(g))
