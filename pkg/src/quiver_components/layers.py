"""Dimension vectors, semisimple sequences and the dominance order.

A dimension vector is a tuple of nonnegative ints (one entry per vertex) and
stands for the semisimple module with those multiplicities. A semisimple
sequence is a tuple of ``L + 1`` dimension vectors, layer 0 first, stored at
full length with explicit zero layers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .quiver import Quiver

DimVector = tuple[int, ...]
Layering = tuple[DimVector, ...]


def dimvec(v) -> DimVector:
    if isinstance(v, np.ndarray):
        return tuple(v.astype(np.int64, copy=False).tolist())
    return tuple(map(int, v))


def layering(s) -> Layering:
    """Normalise nested lists/arrays to a tuple of int tuples."""
    if isinstance(s, np.ndarray) and s.ndim == 2:
        return tuple(map(tuple, s.astype(np.int64, copy=False).tolist()))
    return tuple(dimvec(layer) for layer in s)


def zero_layering(n: int, L: int) -> Layering:
    return ((0,) * n,) * (L + 1)


def pad(s, L: int) -> Layering:
    """Pad with zero layers up to length ``L + 1``; dropping nonzero layers is an error."""
    s = layering(s)
    if len(s) > L + 1:
        if any(any(x) for x in s[L + 1:]):
            raise ValueError(f"layering has nonzero layers beyond index {L}")
        return s[: L + 1]
    n = len(s[0]) if s else 0
    return s + ((0,) * n,) * (L + 1 - len(s))


def total(s: Sequence[Sequence[int]]) -> DimVector:
    return dimvec(np.sum(np.asarray(s, dtype=np.int64), axis=0))


def _check_len(u, v):
    if len(u) != len(v):
        raise ValueError(f"dimension vectors of different lengths: {len(u)} vs {len(v)}")


def sup(u: Sequence[int], v: Sequence[int]) -> DimVector:
    _check_len(u, v)
    return tuple(max(a, b) for a, b in zip(u, v))


def inf(u: Sequence[int], v: Sequence[int]) -> DimVector:
    _check_len(u, v)
    return tuple(min(a, b) for a, b in zip(u, v))


def vec_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(u, v))


def prefix_sums(s) -> np.ndarray:
    return np.cumsum(np.asarray(s, dtype=np.int64), axis=0)


def dominance_leq(s, s2) -> bool:
    """``s <= s2`` iff every prefix sum of ``s`` is componentwise <= that of ``s2``."""
    a, b = prefix_sums(s), prefix_sums(s2)
    if a.shape != b.shape:
        raise ValueError(f"layerings of different shapes {a.shape} and {b.shape}")
    if not np.array_equal(a[-1], b[-1]):
        raise ValueError("dominance order compares only layerings with the same total dimension vector")
    return bool(np.all(a <= b))


@dataclass(frozen=True)
class LayeredPair:
    rad: Layering
    soc: Layering

    def __post_init__(self):
        object.__setattr__(self, "rad", layering(self.rad))
        object.__setattr__(self, "soc", layering(self.soc))
        if total(self.rad) != total(self.soc):
            raise ValueError("radical and socle layerings must have the same total")


def pair_leq(p: LayeredPair, q: LayeredPair) -> bool:
    return dominance_leq(p.rad, q.rad) and dominance_leq(p.soc, q.soc)


def is_realizable(s, q: Quiver) -> bool:
    """Realizability criterion: ``S[l+1] <= S[l] . B`` for every l."""
    arr = np.asarray(s, dtype=np.int64)
    if np.any(arr < 0):
        return False
    return bool(np.all(arr[1:] <= arr[:-1] @ q.B))


def enumerate_realizable(q: Quiver, d: Sequence[int], L: int) -> Iterator[Layering]:
    """Yield every realizable layering of length ``L + 1`` with total ``d``.

    Layers are chosen one at a time, each bounded by the remaining mass and by
    ``previous . B``; a branch is cut as soon as the remaining mass exceeds
    what the current layer can still generate in the layers left. Output is in
    lexicographic order of the flattened layers.
    """
    if L < 0:
        raise ValueError("L must be nonnegative")
    d = np.asarray(d, dtype=np.int64)
    if d.shape != (q.n,):
        raise ValueError(f"dimension vector has length {d.size}, quiver has {q.n} vertices")
    if np.any(d < 0):
        raise ValueError("dimension vector entries must be nonnegative")
    B = q.B

    def capacity(layer, steps):
        cap = np.zeros(q.n, dtype=np.int64)
        cur = layer
        for _ in range(steps):
            cur = cur @ B
            if not cur.any():
                break
            cap += cur
        return cap

    def rec(prefix, remaining, bound):
        l = len(prefix)
        if l == L:
            if np.all(remaining <= bound):
                yield tuple(prefix) + (dimvec(remaining),)
            return
        upper = np.minimum(remaining, bound)
        for choice in itertools.product(*(range(int(u) + 1) for u in upper)):
            layer = np.array(choice, dtype=np.int64)
            rest = remaining - layer
            if rest.any() and not np.all(rest <= capacity(layer, L - l)):
                continue
            yield from rec(prefix + [choice], rest, layer @ B)

    # layer 0 is unconstrained by any predecessor
    yield from rec([], d, d)
