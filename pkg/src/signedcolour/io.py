"""Plain-text formats for graphs, colourings and partitions.

Graph file::

    # comment
    n m
    u v s        (m lines, s is + or -, vertices 0-based)

Colouring file: one ``v c`` line per vertex, sorted by ``v``.

Partition file: sections ``PART i:`` (vertex indices), ``FOREST1:`` /
``FOREST2:`` (``u v`` edge lines) or ``U:`` / ``W:`` (vertex indices).
Section contents may follow the header on the same line.
"""

from __future__ import annotations

import re
from typing import Sequence

from .colour import Colouring
from .graph import PositiveLoopError, SignedGraph, SignedGraphError
from .structure import (
    AcyclicColouring,
    EdgeForestPair,
    IndependentForestPartition,
    VertexForestPartition,
)


class GraphFileError(SignedGraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class GraphSyntaxError(GraphFileError):
    pass


class CountMismatch(GraphFileError):
    pass


def _data_lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _ints(fields: Sequence[str], no: int) -> list[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise GraphSyntaxError(f"expected integers, got {' '.join(fields)!r}", no) from None


def parse_graph_file(text: str) -> SignedGraph:
    lines = _data_lines(text)
    try:
        no, header = next(lines)
    except StopIteration:
        raise GraphSyntaxError("missing 'n m' header") from None
    fields = header.split()
    if len(fields) != 2:
        raise GraphSyntaxError("header must be 'n m'", no)
    n, m = _ints(fields, no)
    if n < 0 or m < 0:
        raise GraphSyntaxError("counts must be nonnegative", no)
    edges = []
    for no, line in lines:
        fields = line.split()
        if len(fields) != 3 or fields[2] not in ("+", "-"):
            raise GraphSyntaxError("edge line must be 'u v s' with s in {+,-}", no)
        u, v = _ints(fields[:2], no)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphSyntaxError(f"vertex out of range 0..{n - 1}", no)
        if u == v and fields[2] == "+":
            raise PositiveLoopError(u, line=no)
        edges.append((u, v, 1 if fields[2] == "+" else -1))
    if len(edges) != m:
        raise CountMismatch(f"header announces {m} edges, found {len(edges)}")
    return SignedGraph(n, edges)


def render_graph(g: SignedGraph) -> str:
    out = [f"{g.n} {g.m}"]
    out += [f"{u} {v} {'+' if s > 0 else '-'}" for u, v, s in g.edges]
    return "\n".join(out) + "\n"


def render_colouring(phi: Sequence[int]) -> str:
    return "".join(f"{v} {c}\n" for v, c in enumerate(phi))


def parse_colouring(text: str) -> Colouring:
    values: dict[int, int] = {}
    for no, line in _data_lines(text):
        fields = line.split()
        if len(fields) != 2:
            raise GraphSyntaxError("colouring line must be 'v c'", no)
        v, c = _ints(fields, no)
        if v in values:
            raise GraphSyntaxError(f"vertex {v} coloured twice", no)
        values[v] = c
    if sorted(values) != list(range(len(values))):
        raise GraphSyntaxError("colouring must cover vertices 0..n-1")
    return tuple(values[v] for v in range(len(values)))


_HEADER = re.compile(r"^(PART\s+(\d+)|FOREST([12])|U|W)\s*:(.*)$", re.IGNORECASE)


def _sections(text: str) -> dict[str, list[tuple[int, str]]]:
    sections: dict[str, list[tuple[int, str]]] = {}
    current = None
    for no, line in _data_lines(text):
        m = _HEADER.match(line)
        if m:
            if m.group(2) is not None:
                current = f"PART {int(m.group(2))}"
            elif m.group(3) is not None:
                current = f"FOREST{m.group(3)}"
            else:
                current = m.group(1).upper()
            if current in sections:
                raise GraphSyntaxError(f"duplicate section {current}", no)
            sections[current] = []
            rest = m.group(4).strip()
            if rest:
                sections[current].append((no, rest))
        elif current is None:
            raise GraphSyntaxError("data before the first section header", no)
        else:
            sections[current].append((no, line))
    return sections


def _vertices(entries: list[tuple[int, str]]) -> list[int]:
    return [v for no, line in entries for v in _ints(line.split(), no)]


def _parts(sections) -> list[list[int]]:
    keys = sorted((k for k in sections if k.startswith("PART ")), key=lambda k: int(k.split()[1]))
    if [int(k.split()[1]) for k in keys] != list(range(1, len(keys) + 1)):
        raise GraphSyntaxError("PART sections must be numbered 1..k")
    return [_vertices(sections[k]) for k in keys]


def parse_partition_file(text: str, kind: str, n: int | None = None):
    """Read a partition of the given kind.

    ``vertex-forests``: PART sections are the forest parts.
    ``acyclic``: PART ``i`` lists the vertices of colour ``i`` (``n`` = vertex count).
    ``two-edge-forests``: FOREST1 and FOREST2 edge lists.
    ``independent-forest``: U (independent) and W (forest) vertex lists.
    """
    sections = _sections(text)
    if kind == "vertex-forests":
        return VertexForestPartition(_parts(sections))
    if kind == "acyclic":
        classes = _parts(sections)
        size = n if n is not None else sum(len(c) for c in classes)
        values = [0] * size
        for i, cls in enumerate(classes, 1):
            for v in cls:
                if not 0 <= v < size:
                    raise GraphSyntaxError(f"vertex {v} out of range")
                values[v] = i
        return AcyclicColouring(values, len(classes))
    if kind == "two-edge-forests":
        forests = []
        for name in ("FOREST1", "FOREST2"):
            edges = []
            for no, line in sections.get(name, []):
                pair = _ints(line.split(), no)
                if len(pair) != 2:
                    raise GraphSyntaxError("forest edge line must be 'u v'", no)
                edges.append(tuple(pair))
            forests.append(edges)
        return EdgeForestPair(*forests)
    if kind == "independent-forest":
        return IndependentForestPartition(_vertices(sections.get("U", [])), _vertices(sections.get("W", [])))
    raise ValueError(f"unknown partition kind {kind!r}")


def render_partition(p) -> str:
    def vs(s):
        return " ".join(str(v) for v in sorted(s))

    if isinstance(p, VertexForestPartition):
        return "".join(f"PART {i}: {vs(part)}\n" for i, part in enumerate(p.parts, 1))
    if isinstance(p, AcyclicColouring):
        return "".join(f"PART {i}: {vs(c)}\n" for i, c in enumerate(p.classes(), 1))
    if isinstance(p, EdgeForestPair):
        out = []
        for name, f in (("FOREST1", p.f1), ("FOREST2", p.f2)):
            out.append(f"{name}:\n")
            out += [f"{u} {v}\n" for u, v in sorted(f)]
        return "".join(out)
    if isinstance(p, IndependentForestPartition):
        return f"U: {vs(p.independent)}\nW: {vs(p.forest)}\n"
    raise TypeError(f"cannot render {type(p).__name__}")
