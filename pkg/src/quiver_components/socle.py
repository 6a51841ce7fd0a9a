"""Generic socle layerings of the modules with a fixed radical layering.

Two independent routes to the socle of ``J^(L-m) G`` for a generic module G
with radical layering S:

* the partial-sum route (:func:`c_layers`), which computes the largest
  semisimple summands ``C_l`` of the radical powers through the
  ``S'`` / ``D`` recursion, and
* the sup route (:func:`partial_vectors`), a running componentwise maximum
  of signed vectors.

Both work for quivers with oriented cycles.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .layers import DimVector, Layering, dimvec, is_realizable, layering
from .quiver import Quiver


@dataclass(frozen=True)
class SocleWork:
    """Intermediate data of the ``C_l`` recursion, all indexed by layer ``l = 0..L``.

    ``soc_radical_powers[l]`` is the dimension vector of ``soc(J^l G)``.
    ``partials[l]`` is the signed vector ∂_l.
    """

    sprime: tuple[DimVector, ...]
    D: tuple[DimVector, ...]
    C: tuple[DimVector, ...]
    partials: tuple[tuple[int, ...], ...]
    soc_radical_powers: tuple[DimVector, ...]


def _require_realizable(s, q):
    if not is_realizable(s, q):
        raise ValueError(f"layering {layering(s)} is not realizable over this quiver")


def e1_dim(t, q: Quiver) -> DimVector:
    """Dimension vector of ``soc(E(T)/T)`` for semisimple T: ``T . A``."""
    return dimvec(np.asarray(t, dtype=np.int64) @ q.A)


def partial_vectors(s, q: Quiver) -> list[tuple[int, ...]]:
    """The vectors ∂_L, ∂_(L-1), ..., ∂_0 (in that order); entries may be negative.

    ∂_k = sum over l = k..L of ``S_l - S_(l+1) . A`` with ``S_(L+1) = 0``.
    """
    arr = np.asarray(s, dtype=np.int64)
    L = arr.shape[0] - 1
    shifted = np.vstack([arr[1:], np.zeros((1, arr.shape[1]), dtype=np.int64)])
    terms = arr - shifted @ q.A
    out = []
    acc = np.zeros(arr.shape[1], dtype=np.int64)
    for k in range(L, -1, -1):
        acc = acc + terms[k]
        out.append(dimvec(acc))
    return out


def generic_socle(s, q: Quiver) -> DimVector:
    """Generic socle of the modules with radical layering ``s`` (sup route)."""
    _require_realizable(s, q)
    return dimvec(np.max(np.asarray(partial_vectors(s, q)), axis=0))


def _recursion(arr: np.ndarray, q: Quiver) -> tuple[np.ndarray, np.ndarray]:
    """``(S', D)`` as arrays indexed by layer."""
    L = arr.shape[0] - 1
    sprime = np.zeros_like(arr)
    D = np.zeros_like(arr)
    for l in range(L - 1, -1, -1):
        avail = arr[l + 1] @ q.A + D[l + 1]
        sprime[l] = np.minimum(arr[l], avail)
        D[l] = avail - sprime[l]
    return sprime, D


def c_layers(s, q: Quiver, check: bool = True) -> SocleWork:
    """Run the ``S'`` / ``D`` recursion from layer L down to 0."""
    if check:
        _require_realizable(s, q)
    arr = np.asarray(s, dtype=np.int64)
    sprime, D = _recursion(arr, q)
    C = arr - sprime
    socs = np.cumsum(C[::-1], axis=0)[::-1]
    partials = partial_vectors(arr, q)[::-1]
    return SocleWork(
        sprime=layering(sprime),
        D=layering(D),
        C=layering(C),
        partials=tuple(partials),
        soc_radical_powers=layering(socs),
    )


def socle_quotient_layering(s, q: Quiver) -> Layering:
    """Generic radical layering of ``G / soc G``: ``(S_l - C_l)`` for l < L, zero-padded."""
    work = c_layers(s, q, check=False)
    arr = np.asarray(s, dtype=np.int64) - np.asarray(work.C, dtype=np.int64)
    arr[-1] = 0
    return layering(arr)


def generic_socle_layering(s, q: Quiver) -> Layering:
    """Generic socle layering S* of the modules with radical layering ``s``.

    ``S*_0`` is the sum of the ``C_l``; the higher socle layers are the
    socles of the iterated socle quotients.
    """
    _require_realizable(s, q)
    cur = np.asarray(s, dtype=np.int64)
    L = cur.shape[0] - 1
    out = np.zeros_like(cur)
    for k in range(L + 1):
        if not cur.any():
            break
        C = cur - _recursion(cur, q)[0]
        out[k] = C.sum(axis=0)
        cur = cur - C
        if cur[-1].any():
            raise AssertionError(f"socle recursion left mass {cur[-1]} in the bottom layer")
    if cur.any():
        raise AssertionError("socle recursion did not exhaust the layering")
    return layering(out)
