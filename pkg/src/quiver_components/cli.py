"""Command-line interface.

Truncation is always given as L: the algebra is KQ modulo all paths of
length L + 1, so ``J^(L+1) = 0`` and layerings have L + 1 entries.

Exit status: 0 success, 2 invalid input, 3 cyclic quiver passed to ``classify``.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import gf
from .components import (
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    Component,
    HypothesisViolated,
    classify,
    hereditary_generic_layering,
    sample_endo_dim,
)
from .layers import enumerate_realizable, is_realizable, layering, pad
from .quiver import Quiver, load_quiver, max_path_length, quiver_to_dot
from .repcalc import endo_dim, parse_representation, radical_layering, socle_layering
from .skeleta import build_presentation, critical_paths, enumerate_skeleta, first_skeleton, skeleton_to_dot
from .socle import c_layers, generic_socle_layering

EXIT_OK, EXIT_INPUT, EXIT_HYPOTHESIS = 0, 2, 3

log = logging.getLogger("quiver_components")


class InputError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    quiver: Path
    dim: tuple[int, ...] | None = None
    truncate: int | None = None
    layering: tuple | None = None
    rep: Path | None = None
    trials: int = DEFAULT_TRIALS
    seed: int = DEFAULT_SEED
    prime: int | None = None  # None: the default prime (or the one in a --rep file)
    limit: int | None = None
    json_out: Path | None = None
    dot_dir: Path | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InputError(f"unknown subcommand {self.command!r}")
        if self.truncate is not None and self.truncate < 0:
            raise InputError("truncation L must be nonnegative")
        if self.trials < 1:
            raise InputError("trials must be at least 1")

    @property
    def field_prime(self) -> int:
        return gf.DEFAULT_PRIME if self.prime is None else self.prime


def format_layering(s) -> str:
    """``(S_1+S_2^2, S_3, 0)`` style, 1-based vertices, clipped of trailing zeros."""
    s = list(s)
    while len(s) > 1 and not any(s[-1]):
        s.pop()
    parts = []
    for layer in s:
        terms = [f"S{i + 1}" + (f"^{m}" if m > 1 else "") for i, m in enumerate(layer) if m]
        parts.append("+".join(terms) if terms else "0")
    return "(" + ", ".join(parts) + ")"


def _parse_dim(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad dimension vector {text!r}") from exc
    if not vals or any(v < 0 for v in vals):
        raise argparse.ArgumentTypeError(f"bad dimension vector {text!r}")
    return vals


def _parse_layering(text: str):
    try:
        val = json.loads(text)
        return layering(val)
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"bad layering {text!r}: expected JSON array of arrays") from exc


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcomp",
        description="Irreducible components and generic layerings for truncated path algebras.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, dim=False, truncate=False, lay=False, rand=False, out=False):
        p.add_argument("--quiver", type=Path, required=True, help="quiver JSON file")
        if dim:
            p.add_argument("--dim", type=_parse_dim, required=True, help="dimension vector, e.g. 1,1,1")
        if truncate:
            p.add_argument("--truncate", type=_nonneg, required=truncate == "required",
                           help="L: paths of length L+1 vanish")
        if lay:
            p.add_argument("--layering", type=_parse_layering, required=True,
                           help='radical layering as JSON, layer 0 first, e.g. "[[1,0],[0,2]]"')
        if rand:
            p.add_argument("--trials", type=_positive, default=DEFAULT_TRIALS)
            p.add_argument("--seed", type=int, default=DEFAULT_SEED)
            p.add_argument("--prime", type=int, default=None, help=f"field size (default {gf.DEFAULT_PRIME})")
        if out:
            p.add_argument("--json", dest="json_out", type=Path)

    p = sub.add_parser("classify", help="list the irreducible components of Rep_d")
    common(p, dim=True, truncate="required", rand=True, out=True)
    p.add_argument("--emit-dot", dest="dot_dir", type=Path, help="directory for quiver and skeleton DOT files")

    p = sub.add_parser("socle", help="generic socle layering of a radical layering")
    common(p, lay=True, truncate=True, out=True)

    p = sub.add_parser("skeleton", help="skeleta, critical paths and generic presentations")
    common(p, lay=True, truncate=True, out=True)
    p.add_argument("--limit", type=_positive, default=None, help="stop after this many skeleta")
    p.add_argument("--emit-dot", dest="dot_dir", type=Path)

    p = sub.add_parser("endo", help="generic endomorphism dimension for a radical layering")
    common(p, lay=True, truncate=True, rand=True, out=True)

    p = sub.add_parser("hereditary", help="generic radical layering of Rep_d(KQ)")
    common(p, dim=True, out=True)

    p = sub.add_parser("oracle", help="layerings and endo dimension of a concrete representation")
    common(p, truncate="required", out=True)
    p.add_argument("--rep", type=Path, required=True, help="representation JSON file")
    p.add_argument("--prime", type=int, default=None)

    p = sub.add_parser("enumerate", help="all realizable layerings with a dimension vector")
    common(p, dim=True, truncate="required", out=True)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=ns.command,
        quiver=ns.quiver,
        dim=getattr(ns, "dim", None),
        truncate=getattr(ns, "truncate", None),
        layering=getattr(ns, "layering", None),
        rep=getattr(ns, "rep", None),
        trials=getattr(ns, "trials", DEFAULT_TRIALS),
        seed=getattr(ns, "seed", DEFAULT_SEED),
        prime=getattr(ns, "prime", None),
        limit=getattr(ns, "limit", None),
        json_out=getattr(ns, "json_out", None),
        dot_dir=getattr(ns, "dot_dir", None),
    )


_INT_ARRAY = re.compile(r"\[[-\d,\s]*\]")


def _dump(obj) -> str:
    """Indented JSON with integer arrays kept on one line."""
    text = json.dumps(obj, indent=2)
    return _INT_ARRAY.sub(lambda m: json.dumps(json.loads(m.group(0))), text) + "\n"


def emit_json(components: list[Component], path) -> None:
    Path(path).write_text(_dump([c.to_json() for c in components]), encoding="utf-8")


def emit_dot(sk, q: Quiver, path, name: str = "skeleton") -> None:
    Path(path).write_text(skeleton_to_dot(sk, q, name), encoding="utf-8")


def _check_dim(q: Quiver, d):
    if d is not None and len(d) != q.n:
        raise InputError(f"dimension vector has {len(d)} entries, quiver has {q.n} vertices")


def _layering_for(cfg: RunConfig, q: Quiver):
    s = cfg.layering
    if any(len(layer) != q.n for layer in s):
        raise InputError(f"every layer needs {q.n} entries")
    if cfg.truncate is not None:
        s = pad(s, cfg.truncate)
    if not is_realizable(s, q):
        raise InputError(f"layering {format_layering(s)} is not realizable over this quiver")
    return s


def _write(cfg: RunConfig, payload, out) -> None:
    if cfg.json_out is not None:
        cfg.json_out.write_text(_dump(payload), encoding="utf-8")


def cmd_classify(cfg: RunConfig, q: Quiver, out) -> int:
    _check_dim(q, cfg.dim)
    comps = classify(q, cfg.dim, cfg.truncate, trials=cfg.trials, seed=cfg.seed, p=cfg.field_prime)
    print(f"Rep_d for d = {list(cfg.dim)}, L = {cfg.truncate}: {len(comps)} irreducible component(s)", file=out)
    for i, c in enumerate(comps, 1):
        tag = "generically indecomposable" if c.generically_indecomposable else f"endo dim {c.endo_dim}"
        print(f"[{i}] rad {format_layering(c.rad)}", file=out)
        print(f"    soc {format_layering(c.soc)}", file=out)
        print(f"    C0 {format_layering([c.c0])}  {tag}", file=out)
        for r in c.presentation.relations:
            print(f"    relation {r}", file=out)
    print(f"(endo dims: min over {cfg.trials} draws, seed {cfg.seed}, p = {cfg.field_prime})", file=out)
    if cfg.json_out is not None:
        emit_json(comps, cfg.json_out)
    if cfg.dot_dir is not None:
        cfg.dot_dir.mkdir(parents=True, exist_ok=True)
        (cfg.dot_dir / "quiver.dot").write_text(quiver_to_dot(q), encoding="utf-8")
        for i, c in enumerate(comps, 1):
            emit_dot(c.skeleton, q, cfg.dot_dir / f"component_{i:02d}.dot", f"component_{i:02d}")
    return EXIT_OK


def cmd_socle(cfg: RunConfig, q: Quiver, out) -> int:
    s = _layering_for(cfg, q)
    work = c_layers(s, q)
    payload = {
        "rad": [list(x) for x in s],
        "soc": [list(x) for x in generic_socle_layering(s, q)],
        "C": [list(x) for x in work.C],
        "partials": [list(x) for x in work.partials],  # ∂_0 .. ∂_L
    }
    out.write(_dump(payload))
    _write(cfg, payload, out)
    return EXIT_OK


def cmd_skeleton(cfg: RunConfig, q: Quiver, out) -> int:
    s = _layering_for(cfg, q)
    payload = []
    for i, sk in enumerate(enumerate_skeleta(s, q, cfg.limit), 1):
        pres = build_presentation(sk, q)
        print(f"skeleton {i}: {', '.join(sk.to_json())}", file=out)
        print(f"  critical: {', '.join(str(c) for c in critical_paths(sk, q)) or '-'}", file=out)
        for r in pres.relations:
            print(f"  relation {r}", file=out)
        payload.append({"skeleton": sk.to_json(), "presentation": pres.to_json()})
        if cfg.dot_dir is not None:
            cfg.dot_dir.mkdir(parents=True, exist_ok=True)
            emit_dot(sk, q, cfg.dot_dir / f"skeleton_{i:03d}.dot", f"skeleton_{i:03d}")
    _write(cfg, payload, out)
    return EXIT_OK


def cmd_endo(cfg: RunConfig, q: Quiver, out) -> int:
    s = _layering_for(cfg, q)
    p = gf.check_prime(cfg.field_prime)
    pres = build_presentation(first_skeleton(s, q), q)
    e, bad = sample_endo_dim(pres, q, np.random.default_rng(cfg.seed), cfg.trials, p)
    payload = {"rad": [list(x) for x in s], "endo_dim": e, "generically_indecomposable": e == 1,
               "seed": cfg.seed, "trials": cfg.trials, "prime": p, "nongeneric_draws": bad}
    print(f"generic endo dim of {format_layering(s)}: {e}", file=out)
    _write(cfg, payload, out)
    return EXIT_OK


def cmd_hereditary(cfg: RunConfig, q: Quiver, out) -> int:
    _check_dim(q, cfg.dim)
    s = hereditary_generic_layering(q, cfg.dim)
    print(f"L = {max_path_length(q)}; generic radical layering {format_layering(s)}", file=out)
    for l, layer in enumerate(s):
        print(f"  t^({l}) = {list(layer)}", file=out)
    _write(cfg, [list(x) for x in s], out)
    return EXIT_OK


def cmd_oracle(cfg: RunConfig, q: Quiver, out) -> int:
    m = parse_representation(cfg.rep.read_text(encoding="utf-8"), q, cfg.prime)
    rad = radical_layering(m, cfg.truncate)
    soc = socle_layering(m, cfg.truncate)
    e = endo_dim(m)
    payload = {"rad": [list(x) for x in rad], "soc": [list(x) for x in soc], "endo_dim": e, "prime": m.p}
    print(f"radical layering {format_layering(rad)}", file=out)
    print(f"socle layering   {format_layering(soc)}", file=out)
    print(f"endo dim         {e}", file=out)
    _write(cfg, payload, out)
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig, q: Quiver, out) -> int:
    _check_dim(q, cfg.dim)
    seqs = list(enumerate_realizable(q, cfg.dim, cfg.truncate))
    for s in seqs:
        print(format_layering(s), file=out)
    print(f"{len(seqs)} realizable layering(s)", file=out)
    _write(cfg, [[list(x) for x in s] for s in seqs], out)
    return EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "socle": cmd_socle,
    "skeleton": cmd_skeleton,
    "endo": cmd_endo,
    "hereditary": cmd_hereditary,
    "oracle": cmd_oracle,
    "enumerate": cmd_enumerate,
}


def run(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    try:
        q = load_quiver(cfg.quiver)
        return COMMANDS[cfg.command](cfg, q, out)
    except HypothesisViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (OSError, KeyError, ValueError, ArithmeticError) as exc:
        # QuiverError, InputError and NotAModuleError are ValueErrors
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg = config_from_args(ns)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
