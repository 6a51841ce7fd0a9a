"""Acceptance criteria, one test per criterion.

Run alone with ``pytest tests/test_acceptance.py -v``; the verdict lines are
repeated in the terminal summary. Timings are the fastest of several runs
after one warm-up call.
"""

import numpy as np
import pytest

from quiver_components.components import (
    classify,
    generic_top,
    hereditary_generic_layering,
)
from quiver_components.layers import LayeredPair, is_realizable, pair_leq
from quiver_components.quiver import Arrow, Quiver, opposite
from quiver_components.repcalc import endo_dim, radical_layering, socle_layering
from quiver_components.skeleta import (
    build_presentation,
    critical_paths,
    enumerate_skeleta,
    instantiate,
    random_assignment,
    skeleton_from_paths,
)
from quiver_components.socle import c_layers, generic_socle, generic_socle_layering, partial_vectors

from acceptance_report import best_time, record
from fixtures import (
    DIAGRAM_512,
    EX42_CRITICAL,
    EX42_D,
    EX42_RAD,
    EX42_SKELETON,
    EX42_SOC,
    EX42_TOP,
    EX51_A_RAD,
    EX51_B_EXTRA,
    EX52_RADS,
    EX52_S,
    EX52_S_HAT,
    ONES6,
    ONES7,
)

_found: dict[str, list] = {}


def _ms(t):
    return f"{t * 1e3:.3f} ms"


def test_criterion_01_generic_top(q42):
    top, t = best_time(lambda: generic_top(EX42_D, q42), repeat=50)
    ok = top == EX42_TOP and t < 1e-3
    assert record(1, ok, f"generic top {top}, {_ms(t)} (limit 1 ms)")


def test_criterion_02_generic_socle_layering(q42):
    s = hereditary_generic_layering(q42, EX42_D)
    soc, t = best_time(lambda: generic_socle_layering(s, q42), repeat=20)
    c0 = c_layers(s, q42).C[0]
    ok = s == EX42_RAD and soc == EX42_SOC and c0 == (0, 1, 0, 0, 0, 0, 0, 0, 0) and t < 1e-2
    assert record(2, ok, f"S* matches: {soc == EX42_SOC}, C_0 = {c0}, {_ms(t)} (limit 10 ms)")


def test_criterion_03_critical_paths(q42):
    sk = skeleton_from_paths(EX42_SKELETON, EX42_RAD, q42)
    got = [str(c) for c in critical_paths(sk, q42)]
    assert record(3, set(got) == set(EX42_CRITICAL) and len(got) == 4, f"critical paths {got}")


def test_criterion_04_ex51_uniserial(q51):
    comps, t = best_time(lambda: classify(q51, ONES7, 6), repeat=3)
    _found["4"] = comps
    ok = len(comps) == 1 and comps[0].rad == EX51_A_RAD and t < 1.0
    assert record(4, ok, f"{len(comps)} component(s), rad = (S1, ..., S7): {comps[0].rad == EX51_A_RAD}, "
                         f"{t:.3f} s (limit 1 s)")


def test_criterion_05_ex51_six_components(q51):
    comps, t = best_time(lambda: classify(q51, ONES7, 5), repeat=3)
    _found["5"] = comps
    endo_ok = all(c.endo_dim == 1 and c.trials == 3 for c in comps)
    has_extra = EX51_B_EXTRA in {c.rad for c in comps}
    ok = len(comps) == 6 and endo_ok and has_extra and t < 10.0
    assert record(5, ok, f"{len(comps)} components, all endo_dim 1: {endo_ok}, "
                         f"(S1+S2, S3, ..., S7) present: {has_extra}, {t:.3f} s (limit 10 s)")


def test_criterion_06_ex51_twenty_eight_components(q51):
    comps, t = best_time(lambda: classify(q51, ONES7, 3), repeat=3)
    _found["6"] = comps
    indec = sum(c.endo_dim == 1 for c in comps)
    rads = {c.rad for c in comps}
    missing = [k for k, s in DIAGRAM_512.items() if s not in rads]
    ok = len(comps) == 28 and indec == 12 and not missing and t < 60.0
    assert record(6, ok, f"{len(comps)} components, {indec} with endo_dim 1, "
                         f"diagram layerings missing: {missing or 'none'}, {t:.3f} s (limit 60 s)")


def test_criterion_07_ex52(q52):
    comps = classify(q52, ONES6, 2)
    _found["7"] = comps
    rads_ok = sorted(c.rad for c in comps) == sorted(EX52_RADS)
    p_hat = LayeredPair(EX52_S_HAT, generic_socle_layering(EX52_S_HAT, q52))
    p = LayeredPair(EX52_S, generic_socle_layering(EX52_S, q52))
    strict = pair_leq(p_hat, p) and p_hat != p
    ok = len(comps) == 3 and rads_ok and strict
    assert record(7, ok, f"{len(comps)} components with the listed layerings: {rads_ok}, "
                         f"(S^, S^*) < (S, S*): {strict}")


def _random_quiver(rng, acyclic):
    n = int(rng.integers(1, 7))
    arrows = []
    for i in range(int(rng.integers(0, 9))):
        s, t = (int(x) for x in rng.integers(0, n, size=2))
        if acyclic:
            if s == t:
                continue
            s, t = min(s, t), max(s, t)
        arrows.append(Arrow(f"r{i}", s, t))
    return Quiver(n, tuple(arrows))


def _random_realizable(rng, q):
    L = int(rng.integers(0, 5))
    layers = [rng.integers(0, 4, size=q.n)]
    for _ in range(L):
        cap = np.minimum(layers[-1] @ q.B, 3)
        layers.append(rng.integers(0, cap + 1))
    return tuple(tuple(int(x) for x in layer) for layer in layers)


def test_criterion_08_formula_agreement():
    rng = np.random.default_rng(8)
    checked = mismatches = cyclic = 0
    while checked < 600:
        q = _random_quiver(rng, acyclic=bool(checked % 2))
        s = _random_realizable(rng, q)
        assert is_realizable(s, q)
        cyclic += not q.acyclic
        work = c_layers(s, q)
        partials = np.asarray(partial_vectors(s, q))[::-1]  # index by layer
        for m in range(len(s)):
            sup_form = tuple(int(x) for x in partials[len(s) - 1 - m:].max(axis=0))
            mismatches += work.soc_radical_powers[len(s) - 1 - m] != sup_form
        mismatches += generic_socle(s, q) != work.soc_radical_powers[0]
        checked += 1
    ok = mismatches == 0 and cyclic > 0
    assert record(8, ok, f"{checked} sequences ({cyclic} on cyclic quivers), {mismatches} mismatches")


def test_criterion_09_oracle_agreement(q51, q52):
    if len(_found) < 4:
        _found.setdefault("4", classify(q51, ONES7, 6))
        _found.setdefault("5", classify(q51, ONES7, 5))
        _found.setdefault("6", classify(q51, ONES7, 3))
        _found.setdefault("7", classify(q52, ONES6, 2))
    quivers = {"4": q51, "5": q51, "6": q51, "7": q52}
    rng = np.random.default_rng(9)
    total = redraws = failures = 0
    for key, comps in _found.items():
        q = quivers[key]
        for c in comps:
            total += 1
            L = len(c.rad) - 1
            for attempt in range(4):
                m = instantiate(c.presentation, q, random_assignment(c.presentation, rng))
                if radical_layering(m, L) == c.rad and socle_layering(m, L) == c.soc:
                    break
                redraws += 1
            else:
                failures += 1
    assert record(9, failures == 0, f"{total} components, {redraws} re-draws, {failures} final mismatches")


@pytest.mark.parametrize("name,d,L", [("kron", (1, 2), 1), ("q52", ONES6, 2)])
def test_criterion_10_duality(request, name, d, L):
    q = request.getfixturevalue(name)
    ours = {(c.rad, c.soc) for c in classify(q, d, L)}
    dual = {(c.rad, c.soc) for c in classify(opposite(q), d, L)}
    ok = dual == {(soc, rad) for rad, soc in ours}
    line = f"{name}: {len(ours)} pair(s), swapped pair sets equal: {ok}"
    prev = _found.get("10")
    if prev is not None:
        ok = ok and prev[0]
        line = prev[1] + "; " + line
    _found["10"] = (ok, line)
    assert record(10, ok, line)


def test_criterion_11_kronecker(kron):
    s = ((1, 0), (0, 2))
    soc = generic_socle(s, kron)
    sks = list(enumerate_skeleta(s, kron))
    pres = build_presentation(sks[0], kron)
    m = instantiate(pres, kron, random_assignment(pres, np.random.default_rng(11)))
    # the projective cover of S_1: basis e_1, a1, a2 with the arrows sending e_1 to their own paths
    is_projective = m.dims == (1, 2) and m.maps["a1"].tolist() == [[1], [0]] and m.maps["a2"].tolist() == [[0], [1]]
    e = endo_dim(m)
    ok = soc == (0, 2) and len(sks) == 1 and pres.relations == () and is_projective and e == 1
    assert record(11, ok, f"generic socle {soc}, {len(sks)} skeleton, {len(pres.relations)} relations, "
                          f"module is the projective at 1: {is_projective}, endo_dim {e}")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
