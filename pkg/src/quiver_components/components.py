"""Irreducible components of ``Rep_d(Λ)`` for truncated path algebras of acyclic quivers.

A layering S gives a component exactly when ``(S, S*)``, with S* the generic
socle layering, is minimal among all such pairs over realizable S of total d.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from . import gf
from .layers import (
    DimVector,
    LayeredPair,
    Layering,
    dimvec,
    enumerate_realizable,
    layering,
    pair_leq,
    prefix_sums,
    total,
)
from .quiver import Quiver, max_path_length
from .repcalc import endo_dim as rep_endo_dim
from .repcalc import radical_layering
from .skeleta import (
    GenericPresentation,
    Relation,
    Skeleton,
    build_presentation,
    first_skeleton,
    instantiate,
    parse_path,
    random_assignment,
    skeleton_from_paths,
)
from .socle import c_layers, generic_socle_layering

log = logging.getLogger(__name__)

DEFAULT_SEED = 20130101
DEFAULT_TRIALS = 3


class HypothesisViolated(ValueError):
    """The quiver has an oriented cycle, so the classification does not apply."""


@dataclass(frozen=True)
class Component:
    rad: Layering
    soc: Layering
    skeleton: Skeleton
    presentation: GenericPresentation
    c0: DimVector
    endo_dim: int
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    prime: int = gf.DEFAULT_PRIME
    layering_mismatches: int = field(default=0, compare=False)

    @property
    def generically_indecomposable(self) -> bool:
        return self.endo_dim == 1

    @property
    def pair(self) -> LayeredPair:
        return LayeredPair(self.rad, self.soc)

    def to_json(self) -> dict:
        return {
            "rad": [list(x) for x in self.rad],
            "soc": [list(x) for x in self.soc],
            "c0": list(self.c0),
            "endo_dim": self.endo_dim,
            "generically_indecomposable": self.generically_indecomposable,
            "skeleton": self.skeleton.to_json(),
            "presentation": self.presentation.to_json(),
            "endo_trials": {"seed": self.seed, "trials": self.trials, "prime": self.prime},
        }


def component_from_json(doc: dict, q: Quiver) -> Component:
    rad = layering(doc["rad"])
    sk = skeleton_from_paths(doc["skeleton"], rad, q)
    rels = []
    for r in doc["presentation"]:
        crit = parse_path(r["critical"], sk.tops, q)
        terms = tuple((parse_path(t["path"], sk.tops, q), t["scalar"]) for t in r["terms"])
        rels.append(Relation(crit, terms))
    trials = doc.get("endo_trials", {})
    return Component(
        rad=rad,
        soc=layering(doc["soc"]),
        skeleton=sk,
        presentation=GenericPresentation(sk, tuple(rels)),
        c0=dimvec(doc["c0"]),
        endo_dim=int(doc["endo_dim"]),
        seed=trials.get("seed", DEFAULT_SEED),
        trials=trials.get("trials", DEFAULT_TRIALS),
        prime=trials.get("prime", gf.DEFAULT_PRIME),
    )


def rad_soc_pairs(q: Quiver, d, L: int) -> list[LayeredPair]:
    """``(S, S*)`` for every realizable S with total d."""
    return [LayeredPair(s, generic_socle_layering(s, q)) for s in enumerate_realizable(q, d, L)]


def dominance_key(s) -> tuple[int, ...]:
    """Sort key refining the dominance order (flattened prefix sums)."""
    return tuple(int(x) for x in prefix_sums(s).ravel())


def minimal_pairs(pairs: list[LayeredPair]) -> list[LayeredPair]:
    """Pairs with no strictly smaller pair in the list, in dominance-compatible order.

    If ``a <= b`` then the flattened prefix sums of ``a.rad`` are
    lexicographically <= those of ``b.rad``, so after sorting only earlier
    pairs can be strictly below a given one.
    """
    if not pairs:
        return []
    totals = {total(p.rad) for p in pairs}
    if len(totals) > 1:
        raise ValueError("pairs with different total dimension vectors cannot be compared")
    uniq = sorted(set(pairs), key=lambda p: (dominance_key(p.rad), dominance_key(p.soc)))
    top_size = [sum(p.rad[0]) for p in uniq]
    out = []
    for i, p in enumerate(uniq):
        dominated = False
        for j in range(i):
            # q <= p forces |q.rad[0]| <= |p.rad[0]|
            if top_size[j] <= top_size[i] and pair_leq(uniq[j], p):
                dominated = True
                break
        if not dominated:
            out.append(p)
    return out


def generic_top(d, q: Quiver) -> DimVector:
    d = np.asarray(d, dtype=np.int64)
    return dimvec(np.maximum(0, d - d @ q.B))


def hereditary_generic_layering(q: Quiver, d) -> Layering:
    """Generic radical layering of ``Rep_d(KQ)``: peel off generic tops until d is exhausted."""
    L = max_path_length(q)
    rest = np.asarray(d, dtype=np.int64)
    layers = []
    for _ in range(L + 1):
        t = np.maximum(0, rest - rest @ q.B)
        layers.append(t)
        rest = rest - t
    if rest.any():
        raise ArithmeticError(f"top recursion left {rest.tolist()} after {L + 1} layers")
    return layering(layers)


def sample_endo_dim(
    pres: GenericPresentation,
    q: Quiver,
    rng: np.random.Generator,
    trials: int = DEFAULT_TRIALS,
    p: int = gf.DEFAULT_PRIME,
) -> tuple[int, int]:
    """Minimum endomorphism dimension over random instantiations.

    Returns ``(endo_dim, mismatches)`` where ``mismatches`` counts draws whose
    radical layering differed from the skeleton's (non-generic draws).
    """
    best = None
    mismatches = 0
    target = pres.skeleton.layering
    for _ in range(trials):
        m = instantiate(pres, q, random_assignment(pres, rng, p), p)
        if radical_layering(m, len(target) - 1) != target:
            mismatches += 1
        e = rep_endo_dim(m)
        best = e if best is None else min(best, e)
    return best, mismatches


def enrich(
    pair: LayeredPair,
    q: Quiver,
    L: int,
    rng: np.random.Generator,
    trials: int = DEFAULT_TRIALS,
    p: int = gf.DEFAULT_PRIME,
    seed: int = DEFAULT_SEED,
) -> Component:
    sk = first_skeleton(pair.rad, q)
    pres = build_presentation(sk, q, L)
    e, bad = sample_endo_dim(pres, q, rng, trials, p)
    if bad:
        log.warning("%d of %d draws missed layering %s", bad, trials, pair.rad)
    return Component(
        rad=pair.rad,
        soc=pair.soc,
        skeleton=sk,
        presentation=pres,
        c0=c_layers(pair.rad, q).C[0],
        endo_dim=e,
        seed=seed,
        trials=trials,
        prime=p,
        layering_mismatches=bad,
    )


def classify(
    q: Quiver,
    d,
    L: int,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    p: int = gf.DEFAULT_PRIME,
) -> list[Component]:
    """Irreducible components of ``Rep_d(KQ / paths of length L+1)``, one per minimal pair."""
    if not q.acyclic:
        raise HypothesisViolated("Main Theorem hypothesis violated: the quiver has an oriented cycle")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    gf.check_prime(p)
    d = dimvec(d)
    if len(d) != q.n:
        raise ValueError(f"dimension vector has length {len(d)}, quiver has {q.n} vertices")
    pairs = rad_soc_pairs(q, d, L)
    log.info("%d realizable layerings", len(pairs))
    minimal = minimal_pairs(pairs)
    rng = np.random.default_rng(seed)
    comps = [enrich(pr, q, L, rng, trials, p, seed) for pr in minimal]
    return sorted(comps, key=lambda c: dominance_key(c.rad))
