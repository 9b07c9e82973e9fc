"""Command-line interface: JSON in, JSON out, one subcommand per subsystem.

Exit codes: 0 on success, 1 on a domain error (structured JSON error on
stdout), 2 on usage errors.  Polynomial arguments accept both the expanded
monomial format and factored input like "(t-1)^2*(t^2-5/2*t+1)".  The
environment variable ONSAGER_PRECISION overrides floating tolerances.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

import numpy as np

from . import chiralpotts, combinat, ideals, quotients, reps
from .core import OAElement
from .polyring import parse_poly
from .scalars import Scalar

SCHEMA = "v1"


def _precision(default: float) -> float:
    env = os.environ.get("ONSAGER_PRECISION")
    if env is None:
        return default
    return float(env)


def _emit(payload: dict) -> None:
    payload = {"schema": SCHEMA, **payload}
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _parse_scalar(text: str) -> Scalar:
    return Scalar.parse(text)


def _parse_spin(text: str) -> Fraction:
    return Fraction(text)


# -- subcommand handlers ---------------------------------------------------------


def cmd_ideal_is_closed(args) -> int:
    P = ideals.ReciprocalPoly.from_poly(parse_poly(args.poly).unit_normalize().monic())
    _emit({"poly": str(P.poly), "closed": ideals.is_closed(P)})
    return 0


def cmd_ideal_member(args) -> int:
    with open(args.element) as fh:
        x = OAElement.from_json(fh.read())
    P = ideals.ReciprocalPoly.from_poly(parse_poly(args.poly).unit_normalize().monic())
    _emit({"poly": str(P.poly), "member": ideals.ideal_member(x, P)})
    return 0


def cmd_ideal_closure(args) -> int:
    P = ideals.ReciprocalPoly.from_poly(parse_poly(args.poly).unit_normalize().monic())
    handle = ideals.central_closure(P)
    _emit(
        {
            "poly": str(P.poly),
            "closed": ideals.is_closed(P),
            "p_modulus": str(handle.p_modulus),
            "q_modulus": str(handle.q_modulus),
        }
    )
    return 0


def cmd_combinat_stirling(args) -> int:
    table = combinat.stirling_build(args.n)
    _emit(
        {
            "max_n": args.n,
            "first_kind": table.first_kind,
            "second_kind": table.second_kind,
        }
    )
    return 0


def cmd_combinat_bernoulli(args) -> int:
    cache = combinat.bernoulli_build(args.j)
    _emit(
        {
            "max_j": args.j,
            "B_paper": [str(cache.B[j]) for j in range(1, args.j + 1)],
            "B_signed": [str(cache.signed_bernoulli(2 * j)) for j in range(1, args.j + 1)],
            "v": [str(cache.v[j]) for j in range(1, args.j + 1)],
            "d": [str(cache.d[2 * j]) for j in range(0, args.j + 1)],
        }
    )
    return 0


def cmd_quotient_build(args) -> int:
    a = _parse_scalar(args.a)
    Q = quotients.build_quotient(a, args.L)
    _emit(Q.to_jsonable())
    return 0


def cmd_quotient_efh(args) -> int:
    data = quotients.efh_basis(args.l)
    payload = data.algebra.to_jsonable()
    payload["change_matrix"] = [[str(c) for c in row] for row in data.change]
    _emit(payload)
    return 0


def cmd_quotient_adspec(args) -> int:
    spec = quotients.ad_spectrum_x0(args.l)
    payload = {
        "l": args.l,
        "eigenvalues": sorted(spec.eigenspaces),
        "multiplicities": {str(k): len(v) for k, v in spec.eigenspaces.items()},
        "eigenvectors": {
            str(lam): [[str(c) for c in vec] for vec in vecs]
            for lam, vecs in spec.eigenspaces.items()
        },
        "basis": [str(lbl) for lbl in spec.quotient.basis],
    }
    _emit(payload)
    return 0


def cmd_rep_build(args) -> int:
    points = [_parse_scalar(p) for p in args.points.split(",")]
    spins = [_parse_spin(s) for s in args.spins.split(",")]
    rep = reps.build_rep(points, spins)
    payload = {
        "points": [str(a) for a in rep.points],
        "spins": [str(s) for s in rep.spins],
        "dim": rep.dim,
        "M0": [[str(c) for c in row] for row in rep.M0],
        "M1": [[str(c) for c in row] for row in rep.M1],
        "kernel_polynomial": str(rep.kernel_polynomial().poly),
        "irreducible": reps.is_irreducible(rep.points),
        "hermitian": reps.is_hermitian(rep.points),
    }
    if args.out:
        with open(args.out, "w") as fh:
            json.dump({"schema": SCHEMA, **payload}, fh, indent=2)
        _emit({"written": args.out, "dim": rep.dim})
    else:
        _emit(payload)
    return 0


def cmd_potts_build(args) -> int:
    chain = chiralpotts.build_chain(args.N, args.sites)
    _emit(
        {
            "N": args.N,
            "sites": args.sites,
            "dim": chain.dim,
            "hermiticity_deviation": chiralpotts.hermiticity_deviation(chain),
            "translation_deviation": chiralpotts.translation_deviation(chain),
            "exact_coefficients": chain.exact,
        }
    )
    return 0


def cmd_potts_dg(args) -> int:
    chain = chiralpotts.build_chain(args.N, args.sites)
    dev = chiralpotts.dg_check_numeric(chain)
    tol = _precision(chiralpotts.DG_TOL)
    _emit(
        {
            "N": args.N,
            "sites": args.sites,
            "deviation": dev,
            "tolerance": tol,
            "pass": bool(dev <= tol),
            "exact": chain.exact,
        }
    )
    return 0


def cmd_potts_fit(args) -> int:
    chain = chiralpotts.build_chain(args.N, args.sites)
    ks = np.linspace(args.kmin, args.kmax, args.samples)
    ks_out, table = chiralpotts.spectrum_sweep(chain, ks)
    tol = _precision(1e-8 if args.N == 2 else 1e-6)
    fit = chiralpotts.fit_onsager_form(ks_out, table, args.N, tol=tol)
    payload = {
        "N": args.N,
        "sites": args.sites,
        "a": fit.a,
        "b": fit.b,
        "thetas": list(fit.thetas),
        "n": fit.n,
        "residual": fit.residual,
        "ok": fit.ok,
        "assignments": [[str(m) for m in row] for row in fit.assignments],
        "trajectories": [
            {
                "a": t.a,
                "b": t.b,
                "thetas": list(t.thetas),
                "m": [str(m) for m in t.m],
                "residual": t.residual,
                "ok": t.ok,
            }
            for t in fit.trajectories
        ],
    }
    if args.out:
        with open(args.out, "w") as fh:
            json.dump({"schema": SCHEMA, **payload}, fh, indent=2)
        _emit({"written": args.out, "residual": fit.residual, "ok": fit.ok})
    else:
        _emit(payload)
    return 0


def cmd_verify(args) -> int:
    from . import verify

    results = verify.run_suite(level=args.level)
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(f"[{status}] {r.name}: {r.detail}")
    bad = [r for r in results if not r.ok]
    print(f"{len(results) - len(bad)}/{len(results)} checks passed")
    return 0 if not bad else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="onsager",
        description="Exact Onsager-algebra computations and chiral Potts spectra",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ideal = sub.add_parser("ideal", help="closed-ideal calculus")
    ideal_sub = ideal.add_subparsers(dest="subcommand", required=True)
    p = ideal_sub.add_parser("is-closed", help="decide closedness of I_P")
    p.add_argument("poly")
    p.set_defaults(func=cmd_ideal_is_closed)
    p = ideal_sub.add_parser("member", help="membership of an element in I_P")
    p.add_argument("element", help="path to an element JSON file {p, q}")
    p.add_argument("poly")
    p.set_defaults(func=cmd_ideal_member)
    p = ideal_sub.add_parser("closure", help="central closure moduli of I_P")
    p.add_argument("poly")
    p.set_defaults(func=cmd_ideal_closure)

    comb = sub.add_parser("combinat", help="exact special sequences")
    comb_sub = comb.add_subparsers(dest="subcommand", required=True)
    p = comb_sub.add_parser("stirling", help="Stirling triangles up to n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_combinat_stirling)
    p = comb_sub.add_parser("bernoulli", help="Bernoulli data up to index j")
    p.add_argument("j", type=int)
    p.set_defaults(func=cmd_combinat_bernoulli)

    quot = sub.add_parser("quotient", help="finite-dimensional quotients")
    quot_sub = quot.add_subparsers(dest="subcommand", required=True)
    p = quot_sub.add_parser("build", help="structure constants of OA_{a,L}")
    p.add_argument("--a", required=True, help="evaluation point, e.g. 2, 1, i, 5/2")
    p.add_argument("--L", required=True, type=int)
    p.set_defaults(func=cmd_quotient_build)
    p = quot_sub.add_parser("efh", help="E/F/H basis of the level-2l quotient")
    p.add_argument("--l", required=True, type=int)
    p.set_defaults(func=cmd_quotient_efh)
    p = quot_sub.add_parser("adspec", help="ad X_0 eigenspaces on the level-2l quotient")
    p.add_argument("--l", required=True, type=int)
    p.set_defaults(func=cmd_quotient_adspec)

    rep = sub.add_parser("rep", help="evaluation representations")
    rep_sub = rep.add_subparsers(dest="subcommand", required=True)
    p = rep_sub.add_parser("build", help="matrices of an evaluation representation")
    p.add_argument("--points", required=True, help="comma list, e.g. 2,3")
    p.add_argument("--spins", required=True, help="comma list, e.g. 1/2,1")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_rep_build)

    potts = sub.add_parser("potts", help="superintegrable chiral Potts chain")
    potts_sub = potts.add_subparsers(dest="subcommand", required=True)
    p = potts_sub.add_parser("build", help="build the chain and report invariants")
    p.add_argument("--N", required=True, type=int)
    p.add_argument("--sites", required=True, type=int)
    p.set_defaults(func=cmd_potts_build)
    p = potts_sub.add_parser("dg", help="Dolan-Grady deviation of the rescaled pair")
    p.add_argument("--N", required=True, type=int)
    p.add_argument("--sites", required=True, type=int)
    p.set_defaults(func=cmd_potts_dg)
    p = potts_sub.add_parser("fit", help="fit the spectrum to the Onsager form")
    p.add_argument("--N", required=True, type=int)
    p.add_argument("--sites", required=True, type=int)
    p.add_argument("--kmin", type=float, default=0.0)
    p.add_argument("--kmax", type=float, default=2.0)
    p.add_argument("--samples", type=int, default=21)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_potts_fit)

    ver = sub.add_parser("verify", help="run the invariant suite")
    ver.add_argument("--level", choices=("fast", "full"), default="fast")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, OSError, AssertionError) as exc:
        json.dump({"schema": SCHEMA, "error": str(exc)}, sys.stdout)
        sys.stdout.write("\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
