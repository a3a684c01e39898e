"""Command line surface: batch computation with machine-readable reports.

Every subcommand prints one JSON report to stdout with the same shape:
command echo, canonicalized inputs, outputs, verification flags, and a
timing slot that stays null unless --timing is passed, so identical inputs
give byte-identical reports.  Numbers that live in Q cross the boundary as
exact rational strings; dimensions, indices, counts and H^3 bits are JSON
integers; Brauer classes are lists of ramified places, real place first.

Exit codes: 0 success, 1 selftest failure, 2 unreadable or malformed
input, 3 mathematical domain error, 4 search bound exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path
from random import Random

from . import hermitian, invol12, quadform, ramlattice, sampling
from .cohomology import BrauerClass
from .config import DEFAULT_LIMITS
from .errors import BoundExceeded, DomainError
from .qarith import ramified_places
from .quat import algebra
from .quadform import (QuadForm, direct_sum, e1, e2, e3, isometric, pfister,
                       scale, signature, witt_decompose, witt_equivalent)


class _LoadError(Exception):
    """Input could not be read, parsed, or decoded into a domain object."""


def _read_source(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        return Path(path).read_text()
    except OSError as exc:
        raise _LoadError(f"cannot read {path}: {exc}") from exc


def _load(path: str, decode):
    text = _read_source(path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _LoadError(f"{path}: not JSON: {exc}") from exc
    try:
        return decode(data)
    except DomainError as exc:
        raise _LoadError(f"{path}: {exc}") from exc


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise _LoadError(f"not a rational number: {text!r}") from exc


def _symbol_pair(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise _LoadError(f"expected 'a,b', got {text!r}")
    return _rational(parts[0]), _rational(parts[1])


def _class_json(cls: BrauerClass) -> list[str]:
    return [str(v) for v in cls.sort_key()]


def _report(command: str, inputs: dict, outputs: dict,
            checks: dict) -> dict:
    return {"command": command, "inputs": inputs, "outputs": outputs,
            "checks": checks, "timing_ms": None}


# --- qf ---------------------------------------------------------------------

def _cmd_qf_invariants(args) -> tuple[dict, int]:
    q = _load(args.form, quadform.from_json)
    det = e1(q)
    in_i2 = q.dim % 2 == 0 and det == 1
    cls = e2(q) if in_i2 else None
    in_i3 = in_i2 and cls.is_zero()
    wd = witt_decompose(q, DEFAULT_LIMITS)
    outputs = {
        "dim": q.dim,
        "e1": str(det),
        "e2": _class_json(cls) if in_i2 else None,
        "signature": signature(q),
        "witt_index": wd.index,
        "e3": e3(q).bit if in_i3 else None,
    }
    return _report("qf invariants", {"form": quadform.to_json(q)},
                   outputs, {}), 0


def _cmd_qf_decompose12(args) -> tuple[dict, int]:
    psi = _load(args.form, quadform.from_json)
    dec = invol12.decompose_split12(psi, DEFAULT_LIMITS)
    outputs = {
        "d": str(dec.d),
        "alphas": [str(a) for a in dec.alphas],
        "betas": [str(b) for b in dec.betas],
    }
    checks = {"round_trip": isometric(dec.reconstruction(), psi)}
    return _report("qf decompose12", {"form": quadform.to_json(psi)},
                   outputs, checks), 0


def _cmd_qf_hyper_over(args) -> tuple[dict, int]:
    q = _load(args.form, quadform.from_json)
    d = _rational(args.d)
    out = quadform.is_hyperbolic_over(q, d)
    return _report("qf hyper-over",
                   {"form": quadform.to_json(q), "d": str(d)},
                   {"hyperbolic": out}, {}), 0


# --- alg --------------------------------------------------------------------

def _cmd_alg_f3(args) -> tuple[dict, int]:
    p = _load(args.presentation, invol12.presentation_from_json)
    via_norms = invol12.f3_via_norms(p, DEFAULT_LIMITS)
    via_symbol = invol12.f3_via_symbol(p, DEFAULT_LIMITS)
    outputs = {
        "f3_norms": via_norms.bit,
        "f3_symbol": via_symbol.bit,
        "f3": via_norms.bit,
        "agree": via_norms == via_symbol,
    }
    return _report("alg f3",
                   {"presentation": invol12.presentation_to_json(p)},
                   outputs, {}), 0


def _cmd_alg_exists(args) -> tuple[dict, int]:
    a1, b1 = _symbol_pair(args.h1)
    a2, b2 = _symbol_pair(args.h2)
    h1, h2 = algebra(a1, b1), algebra(a2, b2)
    outcome = invol12.exists_involution(h1, h2, DEFAULT_LIMITS)
    pres = outcome.presentation
    outputs = {
        "status": outcome.status,
        "presentation": (invol12.presentation_to_json(pres)
                         if pres is not None else None),
    }
    checks = {"trivial_invariants": (invol12.has_trivial_invariants(pres)
                                     if pres is not None else None)}
    inputs = {"h1": [str(a1), str(b1)], "h2": [str(a2), str(b2)]}
    return _report("alg exists", inputs, outputs, checks), 0


def _cmd_alg_additive(args) -> tuple[dict, int]:
    p = _load(args.presentation, invol12.presentation_from_json)
    pairs = invol12.additive_decomposition(p, DEFAULT_LIMITS)
    group = invol12.decomposition_group(p, DEFAULT_LIMITS)
    outputs = {
        "pairs": [[_class_json(h), _class_json(q)] for h, q in pairs],
        "group": [_class_json(c) for c in group],
    }
    checks = {"group_order": len(set(group))}
    return _report("alg additive",
                   {"presentation": invol12.presentation_to_json(p)},
                   outputs, checks), 0


# --- val --------------------------------------------------------------------

def _cmd_val_obstruction(args) -> tuple[dict, int]:
    slots = _load(args.slots, ramlattice.slots_from_json)
    rep = ramlattice.analyze_obstruction(slots)
    table = [{
        "s": [list(v) for v in check.splitting.s_gens()],
        "t": [list(v) for v in check.splitting.t_gens()],
        "intersection": [list(r) for r in check.intersection.rows],
        "separated": check.separated,
    } for check in rep.checks]
    outputs = {
        "obstructed": rep.obstructed,
        "split_factor": rep.split_factor,
        "splittings": len(rep.checks),
        "table": table,
    }
    return _report("val obstruction",
                   {"slots": ramlattice.slots_to_json(rep.slots)},
                   outputs, {}), 0


# --- selftest ---------------------------------------------------------------

def _suite_reciprocity(rng: Random, count: int) -> int:
    for _ in range(count):
        a = sampling.nonzero_int(rng, 10 ** 4)
        b = sampling.nonzero_int(rng, 10 ** 4)
        assert len(ramified_places(a, b)) % 2 == 0, (a, b)
    return count


def _suite_witt_identity(rng: Random, count: int) -> int:
    for _ in range(count):
        lam, mu, nu = (sampling.square_class(rng) for _ in range(3))
        lhs = pfister(lam, mu * nu)
        rhs = direct_sum(pfister(lam, mu), scale(mu, pfister(lam, nu)))
        assert witt_equivalent(lhs, rhs), (lam, mu, nu)
    return count


def _suite_hermitian_disc(rng: Random, count: int) -> int:
    for _ in range(count):
        alg = sampling.split_algebra(rng)
        form = sampling.random_skew_form(rng, alg, rng.randrange(1, 4))
        quad = hermitian.to_quadratic_form(form, DEFAULT_LIMITS)
        assert hermitian.disc_adjoint(form) == e1(quad), form
    return count


def _suite_decompose12(rng: Random, count: int) -> int:
    # constructive search, so a handful of cases is already slow
    cases = max(1, count // 10)
    for _ in range(cases):
        psi, _, _ = sampling.split12_instance(rng)
        dec = invol12.decompose_split12(psi, DEFAULT_LIMITS)
        assert isometric(dec.reconstruction(), psi), psi
    return cases


def _suite_obstruction(rng: Random, count: int) -> int:
    slots = (((1, 0, 0, 0), (0, 1, 0, 0)), ((0, 0, 1, 0), (0, 0, 0, 1)))
    assert ramlattice.obstruction_check(slots)
    return 1


_SUITES = (
    ("reciprocity", _suite_reciprocity),
    ("witt-identity", _suite_witt_identity),
    ("hermitian-disc", _suite_hermitian_disc),
    ("decompose12", _suite_decompose12),
    ("obstruction", _suite_obstruction),
)


def _cmd_selftest(args) -> tuple[dict, int]:
    suites = {}
    failed = False
    for name, run in _SUITES:
        # one independent stream per suite keeps results stable when
        # individual suites change their draw counts
        rng = Random(f"{args.seed}:{name}")
        try:
            cases = run(rng, args.count)
            suites[name] = {"cases": cases, "ok": True}
        except AssertionError as exc:
            failed = True
            suites[name] = {"cases": None, "ok": False,
                            "detail": repr(exc.args[0]) if exc.args else ""}
    report = _report("selftest", {"seed": args.seed, "count": args.count},
                     {"suites": suites, "ok": not failed}, {})
    return report, 1 if failed else 0


# --- driver -----------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wittforge",
        description="Exact invariants of quadratic forms and degree 12 "
                    "involutions over Q.")
    parser.add_argument("--timing", action="store_true",
                        help="fill the timing_ms report field (off by "
                             "default so reports are reproducible)")
    sub = parser.add_subparsers(dest="command", required=True)

    qf = sub.add_parser("qf", help="quadratic forms over Q")
    qf_sub = qf.add_subparsers(dest="subcommand", required=True)
    p = qf_sub.add_parser("invariants",
                          help="dim, e1, e2, signature, Witt index, e3")
    p.add_argument("form", help="form JSON file, or - for stdin")
    p.set_defaults(handler=_cmd_qf_invariants)
    p = qf_sub.add_parser("decompose12",
                          help="three Pfister blocks times a common <<d>>")
    p.add_argument("form", help="form JSON file, or - for stdin")
    p.set_defaults(handler=_cmd_qf_decompose12)
    p = qf_sub.add_parser("hyper-over",
                          help="does the form become hyperbolic over "
                               "Q(sqrt(d))")
    p.add_argument("form", help="form JSON file, or - for stdin")
    p.add_argument("--d", required=True, help="square class, e.g. 5 or -1")
    p.set_defaults(handler=_cmd_qf_hyper_over)

    alg = sub.add_parser("alg", help="degree 12 algebras with involution")
    alg_sub = alg.add_subparsers(dest="subcommand", required=True)
    p = alg_sub.add_parser("f3", help="f3 by both routes plus agreement")
    p.add_argument("presentation", help="presentation JSON file, or -")
    p.set_defaults(handler=_cmd_alg_f3)
    p = alg_sub.add_parser("exists",
                           help="search for an involution with trivial "
                                "e1, e2 on M3(h1 x h2)")
    p.add_argument("--h1", required=True, metavar="a,b",
                   help="first quaternion algebra (a,b)")
    p.add_argument("--h2", required=True, metavar="a,b",
                   help="second quaternion algebra (a,b)")
    p.set_defaults(handler=_cmd_alg_exists)
    p = alg_sub.add_parser("additive",
                           help="the (H_i, Q_i) pairs and their group")
    p.add_argument("presentation", help="presentation JSON file, or -")
    p.set_defaults(handler=_cmd_alg_additive)

    val = sub.add_parser("val", help="value groups of ramified symbols")
    val_sub = val.add_subparsers(dest="subcommand", required=True)
    p = val_sub.add_parser("obstruction",
                           help="no splitting separates the two factors")
    p.add_argument("slots", help="slots JSON file, or - for stdin")
    p.set_defaults(handler=_cmd_val_obstruction)

    p = sub.add_parser("selftest", help="run the seeded property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=25)
    p.set_defaults(handler=_cmd_selftest)
    return parser


def _diagnose(code: int, kind: str, message: str) -> int:
    print(json.dumps({"error": kind, "message": message}, sort_keys=True),
          file=sys.stderr)
    return code


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        report, code = args.handler(args)
    except _LoadError as exc:
        return _diagnose(2, "malformed-input", str(exc))
    except DomainError as exc:
        return _diagnose(3, "domain", str(exc))
    except BoundExceeded as exc:
        return _diagnose(4, "bound-exceeded", str(exc))
    if args.timing:
        report["timing_ms"] = round((time.perf_counter() - start) * 1000)
    print(json.dumps(report, indent=2, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
