"""Quivers: parsing, adjacency matrices, path enumeration."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

import numpy as np


class QuiverError(ValueError):
    """Raised for malformed quiver documents."""


class CyclicQuiverError(ValueError):
    """Raised when an operation needs an acyclic quiver."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int  # 0-based
    target: int


@dataclass(frozen=True, order=True)
class QPath:
    """A directed path, arrows listed in traversal order (first applied first).

    The empty arrow tuple is the trivial path at ``start``.
    """

    start: int
    arrows: tuple[str, ...]
    end: int

    @property
    def length(self) -> int:
        return len(self.arrows)

    def __str__(self) -> str:
        if not self.arrows:
            return f"e{self.start + 1}"
        return "*".join(reversed(self.arrows))


@dataclass(frozen=True)
class Quiver:
    """Finite directed multigraph on vertices ``0..n-1``.

    Arrow order is normalised to sorted-by-name so that every enumeration
    built on top of a quiver is deterministic.
    """

    n: int
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if self.n < 1:
            raise QuiverError(f"need at least one vertex, got {self.n}")
        seen = set()
        for a in self.arrows:
            if a.name in seen:
                raise QuiverError(f"duplicate arrow name {a.name!r}")
            seen.add(a.name)
            for v in (a.source, a.target):
                if not 0 <= v < self.n:
                    raise QuiverError(f"arrow {a.name!r}: vertex {v + 1} out of range 1..{self.n}")
        object.__setattr__(self, "arrows", tuple(sorted(self.arrows, key=lambda a: a.name)))

    @classmethod
    def from_edges(cls, n: int, edges) -> "Quiver":
        """Build from ``(name, source, target)`` triples with 1-based vertices."""
        return cls(n, tuple(Arrow(name, s - 1, t - 1) for name, s, t in edges))

    @cached_property
    def arrow(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    @cached_property
    def out_arrows(self) -> tuple[tuple[Arrow, ...], ...]:
        out = [[] for _ in range(self.n)]
        for a in self.arrows:
            out[a.source].append(a)
        return tuple(tuple(x) for x in out)

    @cached_property
    def in_arrows(self) -> tuple[tuple[Arrow, ...], ...]:
        inn = [[] for _ in range(self.n)]
        for a in self.arrows:
            inn[a.target].append(a)
        return tuple(tuple(x) for x in inn)

    @cached_property
    def B(self) -> np.ndarray:
        """Adjacency matrix, ``B[i, j]`` = number of arrows i -> j."""
        b = np.zeros((self.n, self.n), dtype=np.int64)
        for a in self.arrows:
            b[a.source, a.target] += 1
        b.flags.writeable = False
        return b

    @cached_property
    def A(self) -> np.ndarray:
        """Transpose of the adjacency matrix."""
        a = self.B.T.copy()
        a.flags.writeable = False
        return a

    @cached_property
    def topological_order(self) -> tuple[int, ...] | None:
        """Kahn's algorithm; ``None`` when the quiver has an oriented cycle."""
        indeg = [len(x) for x in self.in_arrows]
        ready = [v for v in range(self.n) if indeg[v] == 0]
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for a in self.out_arrows[v]:
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    ready.append(a.target)
        return tuple(order) if len(order) == self.n else None

    @property
    def acyclic(self) -> bool:
        return self.topological_order is not None

    def to_json(self) -> dict:
        return {
            "vertices": self.n,
            "arrows": [{"name": a.name, "source": a.source + 1, "target": a.target + 1} for a in self.arrows],
        }


def parse_quiver(text: str | bytes | dict) -> Quiver:
    """Parse the JSON quiver format ``{"vertices": n, "arrows": [{name, source, target}, ...]}``."""
    if isinstance(text, dict):
        doc = text
    else:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise QuiverError(f"malformed quiver JSON: {exc}") from exc
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise QuiverError("quiver document needs a 'vertices' field")
    n = doc["vertices"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise QuiverError(f"'vertices' must be a positive integer, got {n!r}")
    arrows = []
    for entry in doc.get("arrows", []):
        try:
            name, s, t = entry["name"], entry["source"], entry["target"]
        except (KeyError, TypeError) as exc:
            raise QuiverError(f"bad arrow entry {entry!r}") from exc
        if not isinstance(name, str) or not all(isinstance(v, int) for v in (s, t)):
            raise QuiverError(f"bad arrow entry {entry!r}")
        arrows.append(Arrow(name, s - 1, t - 1))
    return Quiver(n, tuple(arrows))


def load_quiver(path) -> Quiver:
    with open(path, encoding="utf-8") as fh:
        return parse_quiver(fh.read())


def adjacency(q: Quiver) -> np.ndarray:
    return q.B


def max_path_length(q: Quiver) -> int:
    """Length of the longest directed path (longest-path DP over a topological order)."""
    order = q.topological_order
    if order is None:
        raise CyclicQuiverError("longest path is unbounded on a quiver with an oriented cycle")
    longest = [0] * q.n
    for v in order:
        for a in q.out_arrows[v]:
            longest[a.target] = max(longest[a.target], longest[v] + 1)
    return max(longest)


def iter_paths_from(q: Quiver, v: int, max_len: int) -> Iterator[QPath]:
    """Depth-first, arrows tried in name order; trivial path first."""

    def walk(end, arrows):
        yield QPath(v, arrows, end)
        if len(arrows) < max_len:
            for a in q.out_arrows[end]:
                yield from walk(a.target, arrows + (a.name,))

    yield from walk(v, ())


def paths_from(q: Quiver, v: int, max_len: int) -> list[QPath]:
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    return list(iter_paths_from(q, v, max_len))


def opposite(q: Quiver) -> Quiver:
    return Quiver(q.n, tuple(Arrow(a.name, a.target, a.source) for a in q.arrows))


def quiver_to_dot(q: Quiver, name: str = "Q") -> str:
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    lines += [f"  v{i + 1} [label=\"{i + 1}\"];" for i in range(q.n)]
    lines += [f"  v{a.source + 1} -> v{a.target + 1} [label=\"{a.name}\"];" for a in q.arrows]
    lines.append("}")
    return "\n".join(lines) + "\n"
