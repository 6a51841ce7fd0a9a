"""Concrete representations over F_p and their layerings.

This is the brute-force side: radical and socle layerings are read off
subspace chains, and endomorphisms are counted by solving the commutation
equations ``f_t M_a = M_a f_s`` directly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from . import gf
from .layers import Layering, layering
from .quiver import Quiver, opposite


class NotAModuleError(ValueError):
    """The matrices do not satisfy ``J^(L+1) = 0``."""


@dataclass(frozen=True, eq=False)
class Representation:
    quiver: Quiver
    dims: tuple[int, ...]
    maps: Mapping[str, np.ndarray]  # arrow name -> (dim target) x (dim source)
    p: int = gf.DEFAULT_PRIME

    def __post_init__(self):
        if len(self.dims) != self.quiver.n:
            raise ValueError(f"{len(self.dims)} dimensions given for {self.quiver.n} vertices")
        if any(d < 0 for d in self.dims):
            raise ValueError("dimensions must be nonnegative")
        fixed = {}
        for a in self.quiver.arrows:
            shape = (self.dims[a.target], self.dims[a.source])
            m = self.maps.get(a.name)
            m = np.zeros(shape, dtype=np.int64) if m is None else np.asarray(m, dtype=np.int64).reshape(shape) % self.p
            m.flags.writeable = False
            fixed[a.name] = m
        unknown = set(self.maps) - set(fixed)
        if unknown:
            raise ValueError(f"maps given for unknown arrows {sorted(unknown)}")
        object.__setattr__(self, "maps", fixed)
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (
            self.quiver == other.quiver
            and self.dims == other.dims
            and self.p == other.p
            and all(np.array_equal(self.maps[k], other.maps[k]) for k in self.maps)
        )

    def to_json(self) -> dict:
        return {
            "prime": self.p,
            "dims": list(self.dims),
            "maps": {k: v.tolist() for k, v in self.maps.items()},
        }


def parse_representation(doc, q: Quiver, p: int | None = None) -> Representation:
    """Read ``{"dims": [...], "maps": {arrow: [[...]]}, "prime": p}``; ``p`` overrides the file."""
    if isinstance(doc, (str, bytes)):
        doc = json.loads(doc)
    prime = gf.check_prime(p or doc.get("prime", gf.DEFAULT_PRIME))
    maps = {k: np.asarray(v, dtype=np.int64) for k, v in doc.get("maps", {}).items()}
    dims = tuple(doc["dims"])
    for a in q.arrows:
        if a.name in maps and maps[a.name].size != dims[a.target] * dims[a.source]:
            raise ValueError(f"matrix for {a.name} has {maps[a.name].size} entries, expected "
                             f"{dims[a.target]}x{dims[a.source]}")
    return Representation(q, dims, maps, prime)


def _radical_step(m: Representation, spaces: list[np.ndarray]) -> list[np.ndarray]:
    """J . U for a family of per-vertex subspaces U (row bases)."""
    q, p = m.quiver, m.p
    out = []
    for v in range(q.n):
        images = [gf.matmul(spaces[a.source], m.maps[a.name].T, p) for a in q.in_arrows[v]]
        images = [x for x in images if x.size]
        if images:
            out.append(gf.row_basis(np.vstack(images), p))
        else:
            out.append(np.zeros((0, m.dims[v]), dtype=np.int64))
    return out


def radical_powers(m: Representation, L: int) -> list[list[np.ndarray]]:
    """Row bases of ``J^l M`` at every vertex for l = 0..L+1."""
    spaces = [np.eye(d, dtype=np.int64) for d in m.dims]
    chain = [spaces]
    for _ in range(L + 1):
        spaces = _radical_step(m, spaces)
        chain.append(spaces)
    return chain


def radical_layering(m: Representation, L: int) -> Layering:
    chain = radical_powers(m, L)
    dims = np.array([[s.shape[0] for s in level] for level in chain], dtype=np.int64)
    if dims[-1].any():
        raise NotAModuleError(f"J^{L + 1} M is nonzero (dimension vector {dims[-1].tolist()})")
    return layering(dims[:-1] - dims[1:])


def _equations_for(space: np.ndarray, dim: int, p: int) -> np.ndarray:
    """Rows E with ``ker E = span(space)``."""
    if space.shape[0] == 0:
        return np.eye(dim, dtype=np.int64)
    return gf.nullspace(space, p)


def socle_series(m: Representation, L: int) -> list[list[np.ndarray]]:
    """Row bases of ``soc_l M = ann_M J^(l+1)`` at every vertex for l = 0..L."""
    q, p = m.quiver, m.p
    # soc_(-1) = 0
    current = [np.zeros((0, d), dtype=np.int64) for d in m.dims]
    series = []
    for _ in range(L + 1):
        eqs = [_equations_for(current[v], m.dims[v], p) for v in range(q.n)]
        nxt = []
        for v in range(q.n):
            rows = [gf.matmul(eqs[a.target], m.maps[a.name], p) for a in q.out_arrows[v]]
            rows = [r for r in rows if r.size]
            if rows:
                nxt.append(gf.nullspace(np.vstack(rows), p))
            else:
                nxt.append(np.eye(m.dims[v], dtype=np.int64))
        current = nxt
        series.append(current)
    return series


def socle_layering(m: Representation, L: int) -> Layering:
    series = socle_series(m, L)
    dims = np.array([[s.shape[0] for s in level] for level in series], dtype=np.int64)
    if not np.array_equal(dims[-1], np.asarray(m.dims)):
        raise NotAModuleError(f"soc_{L} M is smaller than M; J^{L + 1} M is nonzero")
    return layering(np.diff(np.vstack([np.zeros((1, m.quiver.n), dtype=np.int64), dims]), axis=0))


def endo_system(m: Representation) -> np.ndarray:
    """Coefficient matrix of ``f_t M_a - M_a f_s = 0`` in the entries of (f_v), row-major."""
    q, p = m.quiver, m.p
    offsets = np.concatenate([[0], np.cumsum([d * d for d in m.dims])]).astype(int)
    blocks = []
    for a in q.arrows:
        ds, dt = m.dims[a.source], m.dims[a.target]
        if ds == 0 or dt == 0:
            continue
        mat = m.maps[a.name]
        block = np.zeros((dt * ds, offsets[-1]), dtype=np.int64)
        # vec(f_t M) = (I_t ⊗ M^T) vec(f_t);  vec(M f_s) = (M ⊗ I_s) vec(f_s)
        block[:, offsets[a.target]:offsets[a.target + 1]] += np.kron(np.eye(dt, dtype=np.int64), mat.T)
        block[:, offsets[a.source]:offsets[a.source + 1]] -= np.kron(mat, np.eye(ds, dtype=np.int64))
        blocks.append(block % p)
    if not blocks:
        return np.zeros((0, offsets[-1]), dtype=np.int64)
    return np.vstack(blocks)


def endo_dim(m: Representation) -> int:
    system = endo_system(m)
    return system.shape[1] - gf.rank(system, m.p)


def dualize(m: Representation) -> Representation:
    """Transpose every matrix onto the reversed arrow."""
    return Representation(opposite(m.quiver), m.dims, {k: v.T for k, v in m.maps.items()}, m.p)


def restrict_to_radical_power(m: Representation, l: int, L: int) -> Representation:
    """The submodule ``J^l M`` written in its own bases."""
    spaces = radical_powers(m, L)[l]
    q, p = m.quiver, m.p
    dims = tuple(s.shape[0] for s in spaces)
    maps = {}
    for a in q.arrows:
        src, tgt = spaces[a.source], spaces[a.target]
        if src.shape[0] == 0 or tgt.shape[0] == 0:
            continue
        # images of source basis vectors, expressed in the (reduced echelon) target basis
        imgs = gf.matmul(src, m.maps[a.name].T, p)
        _, piv = gf.rref(tgt, p)
        coords = imgs[:, piv]
        maps[a.name] = coords.T
    return Representation(q, dims, maps, p)
