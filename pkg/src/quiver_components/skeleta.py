"""Skeleta, critical paths and generic projective presentations.

A skeleton with layering S lives in the projective cover ``P = ⊕ Λ z_r`` of
``S_0``. Its elements are paths ``p z_r``; here a path is stored as the top id
``r`` (1-based, tops numbered by vertex) together with the arrows of ``p`` in
traversal order. The string form reads right to left, ``"a5*a3*z2"``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Mapping

import numpy as np

from . import gf
from .layers import Layering, is_realizable, layering
from .quiver import Quiver
from .repcalc import Representation


@dataclass(frozen=True, order=True)
class SkeletonPath:
    top: int
    arrows: tuple[str, ...]
    end: int = field(compare=False)

    @property
    def length(self) -> int:
        return len(self.arrows)

    def extend(self, arrow) -> "SkeletonPath":
        return SkeletonPath(self.top, self.arrows + (arrow.name,), arrow.target)

    def parent(self) -> "SkeletonPath | None":
        return None if not self.arrows else SkeletonPath(self.top, self.arrows[:-1], -1)

    def __str__(self) -> str:
        return "*".join(list(reversed(self.arrows)) + [f"z{self.top}"])


@dataclass(frozen=True)
class Skeleton:
    tops: tuple[int, ...]  # vertex (0-based) of each top element z_1, z_2, ...
    paths: tuple[SkeletonPath, ...]  # sorted
    layering: Layering

    def __contains__(self, item: SkeletonPath) -> bool:
        return item in self._index

    @cached_property
    def _index(self) -> frozenset:
        return frozenset(self.paths)

    @property
    def L(self) -> int:
        return len(self.layering) - 1

    def to_json(self) -> list[str]:
        return [str(p) for p in self.paths]


@dataclass(frozen=True)
class Relation:
    critical: SkeletonPath
    terms: tuple[tuple[SkeletonPath, str], ...]

    def __str__(self) -> str:
        rhs = " + ".join(f"{x} {p}" for p, x in self.terms)
        return f"{self.critical} - ({rhs})" if rhs else str(self.critical)


@dataclass(frozen=True)
class GenericPresentation:
    skeleton: Skeleton
    relations: tuple[Relation, ...]

    @property
    def scalars(self) -> list[str]:
        return [x for rel in self.relations for _, x in rel.terms]

    def to_json(self) -> list[dict]:
        return [
            {"critical": str(r.critical), "terms": [{"path": str(p), "scalar": x} for p, x in r.terms]}
            for r in self.relations
        ]


def tops_for(s0) -> tuple[int, ...]:
    return tuple(v for v, mult in enumerate(s0) for _ in range(mult))


def enumerate_skeleta(s, q: Quiver, limit: int | None = None) -> Iterator[Skeleton]:
    """Yield skeleta with layering ``s`` in lexicographic order.

    Layer ``l + 1`` picks, for every vertex j, ``S_(l+1)[j]`` of the one-arrow
    extensions of layer-l paths that end in j. The number of such extensions
    is ``(S_l . B)[j]``, so for a realizable ``s`` every partial choice
    completes and the search never backtracks out of a dead end.
    """
    s = layering(s)
    if not is_realizable(s, q):
        raise ValueError(f"layering {s} is not realizable over this quiver")
    tops = tops_for(s[0])
    first = [SkeletonPath(r + 1, (), v) for r, v in enumerate(tops)]
    L = len(s) - 1
    count = 0

    def rec(l, current, acc):
        if l == L or not any(any(layer) for layer in s[l + 1:]):
            yield Skeleton(tops, tuple(sorted(acc)), s)
            return
        groups = [[] for _ in range(q.n)]
        for u in current:
            for a in q.out_arrows[u.end]:
                groups[a.target].append(u.extend(a))
        for g in groups:
            g.sort()
        choices = [itertools.combinations(groups[j], s[l + 1][j]) for j in range(q.n)]
        for combo in itertools.product(*choices):
            layer = sorted(itertools.chain.from_iterable(combo))
            yield from rec(l + 1, layer, acc + layer)

    for sk in rec(0, first, list(first)):
        yield sk
        count += 1
        if limit is not None and count >= limit:
            return


def first_skeleton(s, q: Quiver) -> Skeleton:
    for sk in enumerate_skeleta(s, q, limit=1):
        return sk
    raise AssertionError(f"no skeleton found for realizable layering {s}")


def parse_path(text: str, tops: tuple[int, ...], q: Quiver) -> SkeletonPath:
    """Inverse of ``str(SkeletonPath)``."""
    parts = text.strip().split("*")
    head = parts[-1]
    if not head.startswith("z") or not head[1:].isdigit():
        raise ValueError(f"path {text!r} must end in a top element z<r>")
    r = int(head[1:])
    if not 1 <= r <= len(tops):
        raise ValueError(f"top z{r} out of range")
    end = tops[r - 1]
    arrows = tuple(reversed(parts[:-1]))
    for name in arrows:
        a = q.arrow.get(name)
        if a is None or a.source != end:
            raise ValueError(f"path {text!r} does not compose at arrow {name!r}")
        end = a.target
    return SkeletonPath(r, arrows, end)


def skeleton_from_paths(paths, s, q: Quiver) -> Skeleton:
    """Build and validate a skeleton from path strings."""
    s = layering(s)
    tops = tops_for(s[0])
    parsed = sorted({parse_path(p, tops, q) if isinstance(p, str) else p for p in paths})
    sk = Skeleton(tops, tuple(parsed), s)
    problems = skeleton_problems(sk, q)
    if problems:
        raise ValueError("; ".join(problems))
    return sk


def skeleton_problems(sk: Skeleton, q: Quiver) -> list[str]:
    """Violations of the skeleton axioms (empty list when valid)."""
    out = []
    n = q.n
    counts = np.zeros((len(sk.layering), n), dtype=np.int64)
    for p in sk.paths:
        if p.length >= len(sk.layering):
            out.append(f"{p} is longer than the truncation allows")
            continue
        counts[p.length, p.end] += 1
        if p.arrows and SkeletonPath(p.top, p.arrows[:-1], -1) not in sk:
            out.append(f"{p} is in the skeleton but its initial subpath is not")
    for r in range(1, len(sk.tops) + 1):
        if SkeletonPath(r, (), -1) not in sk:
            out.append(f"top z{r} missing")
    if not np.array_equal(counts, np.asarray(sk.layering)):
        out.append("path counts per layer and vertex do not match the layering")
    return out


def critical_paths(sk: Skeleton, q: Quiver, L: int | None = None) -> list[SkeletonPath]:
    """Paths of length <= L outside the skeleton whose proper initial subpaths all lie in it."""
    L = sk.L if L is None else L
    out = []
    for u in sk.paths:
        if u.length >= L:
            continue
        for a in q.out_arrows[u.end]:
            w = u.extend(a)
            if w not in sk:
                out.append(w)
    return sorted(out)


def sigma_of(sk: Skeleton, crit: SkeletonPath) -> list[SkeletonPath]:
    """Skeleton paths at least as long as ``crit`` ending at the same vertex."""
    parent = crit.parent()
    if crit in sk or parent is None or parent not in sk:
        raise ValueError(f"{crit} is not critical for this skeleton")
    return [p for p in sk.paths if p.length >= crit.length and p.end == crit.end]


def build_presentation(sk: Skeleton, q: Quiver, L: int | None = None) -> GenericPresentation:
    """One relation ``q - sum x_(q,p) p`` per critical path, fresh scalar per term."""
    rels = []
    counter = itertools.count(1)
    for crit in critical_paths(sk, q, L):
        terms = tuple((p, f"x{next(counter)}") for p in sigma_of(sk, crit))
        rels.append(Relation(crit, terms))
    return GenericPresentation(sk, tuple(rels))


def random_assignment(pres: GenericPresentation, rng: np.random.Generator, p: int = gf.DEFAULT_PRIME) -> dict[str, int]:
    xs = pres.scalars
    vals = rng.integers(1, p, size=len(xs))
    return {x: int(v) for x, v in zip(xs, vals)}


def instantiate(
    pres: GenericPresentation,
    q: Quiver,
    assignment: Mapping[str, int],
    p: int = gf.DEFAULT_PRIME,
) -> Representation:
    """The module ``P / R(σ)`` with scalars substituted, on the basis σ.

    An arrow sends a basis path u to ``αu`` when that is in σ, to the right-hand
    side of its relation when ``αu`` is critical, and to 0 past the truncation.
    """
    sk = pres.skeleton
    L = sk.L
    index: dict[SkeletonPath, int] = {}
    dims = [0] * q.n
    for path in sk.paths:
        index[path] = dims[path.end]
        dims[path.end] += 1
    rhs = {}
    for rel in pres.relations:
        try:
            rhs[rel.critical] = [(path, assignment[x] % p) for path, x in rel.terms]
        except KeyError as exc:
            raise ValueError(f"no value assigned to scalar {exc.args[0]}") from None
    maps = {}
    for a in q.arrows:
        m = np.zeros((dims[a.target], dims[a.source]), dtype=np.int64)
        for u in sk.paths:
            if u.end != a.source or u.length >= L:
                continue
            w = u.extend(a)
            if w in sk:
                m[index[w], index[u]] = 1
            elif w in rhs:
                for path, val in rhs[w]:
                    m[index[path], index[u]] = (m[index[path], index[u]] + val) % p
            else:
                raise AssertionError(f"{w} is neither a skeleton path nor critical")
        maps[a.name] = m
    return Representation(q, tuple(dims), maps, p)


def skeleton_to_dot(sk: Skeleton, q: Quiver, name: str = "skeleton") -> str:
    """Layered tree: solid edges inside σ, dashed edges to critical paths."""
    ids = {p: f"n{i}" for i, p in enumerate(sk.paths)}
    lines = [f"digraph {name} {{", "  rankdir=TB;", "  node [shape=plaintext];"]
    for p, nid in ids.items():
        lines.append(f"  {nid} [label=\"{p.end + 1}\", tooltip=\"{p}\"];")
    for p in sk.paths:
        if p.arrows:
            parent = ids[SkeletonPath(p.top, p.arrows[:-1], -1)]
            lines.append(f"  {parent} -> {ids[p]} [arrowhead=none, label=\"{p.arrows[-1]}\"];")
    for i, c in enumerate(critical_paths(sk, q)):
        cid = f"c{i}"
        lines.append(f"  {cid} [label=\"{c.end + 1}\", fontcolor=gray, tooltip=\"{c}\"];")
        parent = ids[SkeletonPath(c.top, c.arrows[:-1], -1)]
        lines.append(f"  {parent} -> {cid} [style=dashed, arrowhead=none, label=\"{c.arrows[-1]}\"];")
    by_len: dict[int, list[str]] = {}
    for p, nid in ids.items():
        by_len.setdefault(p.length, []).append(nid)
    for nids in by_len.values():
        lines.append("  { rank=same; " + " ".join(nids) + " }")
    lines.append("}")
    return "\n".join(lines) + "\n"
