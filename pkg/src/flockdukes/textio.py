"""Plain-text flock format.

    # comment
    flocks 1 3
    arc 0 1
    arc 0 2

``arc u v`` means u pecks v. Blank lines and ``#`` comments are ignored.
The canonical form lists arcs ascending by (min(u, v), max(u, v)).
"""

from __future__ import annotations

from .errors import EmptyFlock, FlockSyntaxError, GraphBuildError
from .graph import MultiFlockGraph, build_graph


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FlockSyntaxError(f"{what} must be an integer, got {tok!r}", lineno) from None


def parse_flock_text(text: str) -> MultiFlockGraph:
    """Parse a flock document. Build errors are re-raised with the line number."""
    sizes: list[int] | None = None
    header_line = 0
    arcs: list[tuple[int, int]] = []
    arc_lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head == "flocks":
            if sizes is not None:
                raise FlockSyntaxError("duplicate 'flocks' header", lineno)
            if not rest:
                raise FlockSyntaxError("'flocks' needs at least one size", lineno)
            sizes = [_int(t, lineno, "flock size") for t in rest]
            header_line = lineno
        elif head == "arc":
            if sizes is None:
                raise FlockSyntaxError("'arc' before the 'flocks' header", lineno)
            if len(rest) != 2:
                raise FlockSyntaxError(f"'arc' takes 2 chickens, got {len(rest)}", lineno)
            arcs.append((_int(rest[0], lineno, "chicken"), _int(rest[1], lineno, "chicken")))
            arc_lines.append(lineno)
        else:
            raise FlockSyntaxError(f"unknown directive {head!r}", lineno)
    if sizes is None:
        raise FlockSyntaxError("missing 'flocks' header", max(1, len(text.splitlines())))
    try:
        return build_graph(sizes, arcs)
    except GraphBuildError as exc:
        if exc.arc_index is not None:
            line = arc_lines[exc.arc_index]
        elif isinstance(exc, EmptyFlock):
            line = header_line
        else:
            line = None
        if line is None:
            raise
        annotated = type(exc)(f"line {line}: {exc}", exc.arc_index)
        annotated.line = line
        raise annotated from exc


def read_flock_file(path: str) -> MultiFlockGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_flock_text(fh.read())


def serialize(g: MultiFlockGraph) -> str:
    lines = ["flocks " + " ".join(map(str, g.sizes))]
    lines += [f"arc {u} {v}" for u, v in g.arcs()]
    return "\n".join(lines) + "\n"
