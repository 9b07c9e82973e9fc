"""The acceptance suite: every structural claim the package rests on,
re-checked end to end with independent oracles where one exists.

Each criterion is a standalone function returning a CheckResult; run_suite
executes them all.  The "fast" level shrinks the randomized sample counts,
"full" runs the complete advertised ranges.  Randomness is seeded, so both
levels are deterministic.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import chiralpotts, combinat, ideals, linalg, quotients, reps
from .core import (
    OAElement,
    dg_check,
    generator_A,
    generator_G,
    involution_iota,
    random_element,
    random_poly,
)
from .polyring import LaurentPoly, divides, poly_divmod
from .quotients import BasisLabel
from .scalars import Scalar


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str


def _vec_dg(bracket, b0, b1) -> bool:
    c10 = bracket(b1, b0)
    lhs = bracket(b1, bracket(b1, c10))
    if any(x - y * Scalar(16) for x, y in zip(lhs, c10)):
        return False
    c01 = bracket(b0, b1)
    lhs = bracket(b0, bracket(b0, c01))
    return not any(x - y * Scalar(16) for x, y in zip(lhs, c01))


# -- 1: Onsager relations ---------------------------------------------------------


def criterion_onsager_relations(level="full") -> CheckResult:
    start = time.monotonic()
    bound = 8 if level == "full" else 4
    for m in range(-bound, bound + 1):
        for l in range(-bound, bound + 1):
            Am, Al = generator_A(m), generator_A(l)
            Gm, Gl = generator_G(m), generator_G(l)
            if Am.bracket(Al) != generator_G(m - l).scale(4):
                return CheckResult("onsager-relations", False, f"(1a) fails at {m},{l}")
            if Am.bracket(Gl) != generator_A(m - l).scale(2) - generator_A(m + l).scale(2):
                return CheckResult("onsager-relations", False, f"(1b) fails at {m},{l}")
            if not Gm.bracket(Gl).is_zero():
                return CheckResult("onsager-relations", False, f"(1c) fails at {m},{l}")
    dt = time.monotonic() - start
    ok = dt < 1.0
    return CheckResult(
        "onsager-relations", ok, f"all |m|,|l| <= {bound} exact in {dt:.2f}s"
    )


# -- 2: Dolan-Grady everywhere ------------------------------------------------------


def criterion_dolan_grady(level="full") -> CheckResult:
    if not dg_check(generator_A(0), generator_A(1)):
        return CheckResult("dolan-grady", False, "symbolic DG fails for (A0, A1)")
    quotient_params = [(Scalar(2), 3), (Scalar(1), 4), (Scalar(0, 1), 2), (Scalar(-1), 5)]
    for a, L in quotient_params:
        Q = quotients.build_quotient(a, L)
        b0 = quotients.project(generator_A(0), a, L)
        b1 = quotients.project(generator_A(1), a, L)
        if not _vec_dg(Q.bracket_coords, b0, b1):
            return CheckResult("dolan-grady", False, f"DG fails in OA_({a},{L})")
    for points, spins in [((2,), (Fraction(1, 2),)), ((2, 3), (Fraction(1, 2), 1))]:
        rep = reps.build_rep(points, spins)
        if not reps.matrix_dg_check(rep.M0, rep.M1):
            return CheckResult("dolan-grady", False, f"DG fails for rep {points}")
    return CheckResult("dolan-grady", True, "symbolic, quotient and matrix DG all exact")


# -- 3: closed-ideal classification vs brute force -----------------------------------


def _monomial_residue_columns(P: LaurentPoly, exponents) -> dict[int, list[Scalar]]:
    degP = P.degree()
    lowest = min(exponents)
    cols = {}
    for k in exponents:
        _, r = poly_divmod(LaurentPoly.monomial(k - lowest), P)
        cols[k] = [r.coeff(j) for j in range(degP)]
    return cols


def _null_dim(rows: list[list[Scalar]], n_unknowns: int) -> int:
    if not rows:
        return n_unknowns
    return n_unknowns - linalg.rank(rows)


def _brute_force_closed(P: ideals.ReciprocalPoly, margin: int = 4):
    """Window dimensions of I_P and Z(I_P), solved from the divisibility
    conditions of the two defining brackets."""
    degP = P.poly.degree()
    d = degP + margin
    exps = list(range(-d - 1, d + 2))
    res = _monomial_residue_columns(P.poly, exps)
    p_exps = list(range(-d, d + 1))

    def stack(cond_cols) -> list[list[Scalar]]:
        # transpose columns (one per unknown) into equation rows
        n_rows = degP
        return [[col[r] for col in cond_cols] for r in range(n_rows)]

    # I_P p-part: P | p
    cols_A = [res[k] for k in p_exps]
    dim_I_p = _null_dim(stack(cols_A), len(p_exps))
    # Z p-part: P | (p - p~) and P | (t^-1 p - t p~)
    cols_B = [[x - y for x, y in zip(res[k], res[-k])] for k in p_exps]
    cols_C = [[x - y for x, y in zip(res[k - 1], res[1 - k])] for k in p_exps]
    rows = stack(cols_B) + stack(cols_C)
    dim_Z_p = _null_dim(rows, len(p_exps))
    # q-part is the same condition P | q for both I and Z
    cols_q = [[x - y for x, y in zip(res[j], res[-j])] for j in range(1, d + 1)]
    dim_q = _null_dim(stack(cols_q), d)
    return dim_I_p, dim_Z_p, dim_q, 2 * d + 1


def criterion_ideal_classification(level="full") -> CheckResult:
    count = 50 if level == "full" else 10
    rng = random.Random(20240)
    pool = [(1, 1), (-1, 1), (2, 1), (3, 1), (Scalar(0, 1), 1), (Fraction(5, 2), 1)]
    for trial in range(count):
        picks = []
        while not picks:
            picks = [
                (a, rng.randint(1, 2)) for a, _ in pool if rng.random() < 0.45
            ]
        P = ideals.make_reciprocal(picks)
        dim_I_p, dim_Z_p, _, width = _brute_force_closed(P)
        brute_closed = dim_I_p == dim_Z_p  # the q conditions coincide for I and Z
        parity_closed = ideals.is_closed(P)
        if brute_closed != parity_closed:
            return CheckResult(
                "ideal-classification",
                False,
                f"trial {trial}: parity says {parity_closed}, brute force {brute_closed} for {P.poly}",
            )
        # the brute-force Z must match the central-closure modulus of Lemma 2
        handle = ideals.central_closure(P)
        p_mod_deg = 0 if handle.p_modulus.is_zero() else handle.p_modulus.degree()
        if dim_Z_p != width - p_mod_deg or dim_I_p != width - P.poly.degree():
            return CheckResult(
                "ideal-classification",
                False,
                f"trial {trial}: Z window dimension mismatch for {P.poly}",
            )
        if not divides(handle.p_modulus, handle.q_modulus * LaurentPoly.parse("(t-1)*(t+1)")):
            return CheckResult(
                "ideal-classification", False, f"handle invariant fails for {P.poly}"
            )
    return CheckResult(
        "ideal-classification",
        True,
        f"{count} random reciprocal polynomials agree with the brute-force Z(I) oracle",
    )


# -- 4: Chinese remainder lifts ---------------------------------------------------------


def criterion_crt(level="full") -> CheckResult:
    count = 100 if level == "full" else 20
    rng = random.Random(777)
    pool = [
        ideals.make_reciprocal([(1, 2)]),
        ideals.make_reciprocal([(-1, 2)]),
        ideals.make_reciprocal([(2, 1)]),
        ideals.make_reciprocal([(3, 1)]),
        ideals.make_reciprocal([(Scalar(0, 1), 1)]),
        ideals.make_reciprocal([(Fraction(5, 2), 1)]),
    ]
    for trial in range(count):
        j = rng.randint(2, 4)
        moduli = rng.sample(pool, j)
        targets = [(random_element(rng), P) for P in moduli]
        lifted = ideals.crt_lift(targets)
        for x, P in targets:
            if not ideals.ideal_member(lifted - x, P):
                return CheckResult(
                    "crt-lift", False, f"trial {trial}: residue fails for {P.poly}"
                )
    return CheckResult("crt-lift", True, f"{count} random lifts, all residues verified")


# -- 5: quotient dimensions and Jacobi ------------------------------------------------------


def criterion_quotient_dimensions(level="full") -> CheckResult:
    start = time.monotonic()
    max_generic = 6 if level == "full" else 3
    max_one = 9 if level == "full" else 5
    for a in (Scalar(2), Scalar(3), Scalar(0, 1)):
        for L in range(1, max_generic + 1):
            Q = quotients.build_quotient(a, L)
            if Q.dim != 3 * L:
                return CheckResult(
                    "quotient-dimensions", False, f"dim OA_({a},{L}) = {Q.dim} != {3*L}"
                )
            if not (Q.antisymmetry_holds() and Q.jacobi_holds()):
                return CheckResult(
                    "quotient-dimensions", False, f"Jacobi fails in OA_({a},{L})"
                )
    for L in range(1, max_one + 1):
        Q = quotients.build_quotient(1, L)
        if Q.dim != L + L // 2:
            return CheckResult(
                "quotient-dimensions", False, f"dim OA_(1,{L}) = {Q.dim} != {L + L//2}"
            )
        if not (Q.antisymmetry_holds() and Q.jacobi_holds()):
            return CheckResult("quotient-dimensions", False, f"Jacobi fails in OA_(1,{L})")
    dt = time.monotonic() - start
    return CheckResult(
        "quotient-dimensions",
        dt < 10.0,
        f"3L (a = 2,3,i; L <= {max_generic}) and L+[L/2] (a = 1; L <= {max_one}) in {dt:.2f}s",
    )


# -- 6: Y-reduction two ways -------------------------------------------------------------


def criterion_y_reduction(level="full") -> CheckResult:
    top = 10 if level == "full" else 6
    for L in range(2, top + 1):
        quotients.y_reduction(L)  # raises if the two routes ever disagree
    return CheckResult(
        "y-reduction", True, f"linear solve equals the Bernoulli closed form up to L = {top}"
    )


# -- 7: the E/F/H relations ----------------------------------------------------------------


def criterion_efh(level="full") -> CheckResult:
    top = 5 if level == "full" else 3
    for l in range(1, top + 1):
        data = quotients.efh_basis(l)
        alg = data.algebra
        for i, li in enumerate(alg.basis):
            for j in range(i + 1, alg.dim):
                lj = alg.basis[j]
                got = {alg.basis[k]: c for k, c in alg.pair_bracket(i, j)}
                want = {
                    k: v
                    for k, v in quotients.efh_expected_bracket(l, li, lj).items()
                    if not v.is_zero()
                }
                if got != want:
                    return CheckResult(
                        "efh-basis", False, f"l={l}: [{li},{lj}] = {got}, expected {want}"
                    )
    return CheckResult("efh-basis", True, f"all relations exact for l <= {top}")


# -- 8: spectrum of ad X_0 --------------------------------------------------------------------


def criterion_ad_spectrum(level="full") -> CheckResult:
    top = 5 if level == "full" else 3
    for l in range(1, top + 1):
        spec = quotients.ad_spectrum_x0(l)
        Q = spec.quotient
        dims = {lam: len(vs) for lam, vs in spec.eigenspaces.items()}
        if dims != {0: l, 4: l, -4: l}:
            return CheckResult("ad-x0-spectrum", False, f"l={l}: multiplicities {dims}")
        zero_vs = spec.eigenspaces[0]
        for i in range(len(zero_vs)):
            for j in range(i + 1, len(zero_vs)):
                if any(
                    not c.is_zero() for c in Q.bracket_coords(zero_vs[i], zero_vs[j])
                ):
                    return CheckResult(
                        "ad-x0-spectrum", False, f"l={l}: 0-eigenvectors do not commute"
                    )
        # the displayed eigenvector formulas really are eigenvectors
        ad = Q.ad_matrix(_unit_x0(Q))
        for lam, vecs in (
            (0, quotients.displayed_zero_eigenvectors(l)),
            (4, quotients.displayed_pm_eigenvectors(l, +1)),
            (-4, quotients.displayed_pm_eigenvectors(l, -1)),
        ):
            for v in vecs:
                image = linalg.mat_vec(ad, v)
                if any(x - Scalar(lam) * y for x, y in zip(image, v)):
                    return CheckResult(
                        "ad-x0-spectrum", False, f"l={l}: displayed {lam}-vector fails"
                    )
    return CheckResult(
        "ad-x0-spectrum", True, f"eigenvalues (0, +-4) with multiplicities (l,l,l), l <= {top}"
    )


def _unit_x0(Q):
    v = [Scalar(0)] * Q.dim
    v[Q.index(BasisLabel("X", 0))] = Scalar(1)
    return v


# -- 9: the lambda model ------------------------------------------------------------------------


def criterion_lambda_model(level="full") -> CheckResult:
    top = 8 if level == "full" else 4
    for L in range(1, top + 1):
        lm = quotients.lambda_realization(L)
        M = lm.matrix
        try:
            linalg.inverse(M)
        except ValueError:
            return CheckResult("lambda-model", False, f"L={L}: change matrix singular")
        g = [
            [M[lm.target_graded[r]][lm.source_graded[c]] for c in range(lm.source.dim)]
            for r in range(lm.target.dim)
        ]
        if any(
            not g[r][c].is_zero() for r in range(len(g)) for c in range(r + 1, len(g))
        ):
            return CheckResult("lambda-model", False, f"L={L}: not lower triangular")
        n = lm.source.dim
        units = linalg.identity(n)
        for i in range(n):
            for j in range(i + 1, n):
                left = lm.target.bracket_coords(
                    linalg.mat_vec(M, units[i]), linalg.mat_vec(M, units[j])
                )
                right = linalg.mat_vec(M, lm.source.bracket_coords(units[i], units[j]))
                if left != right:
                    return CheckResult(
                        "lambda-model", False, f"L={L}: transport mismatch at ({i},{j})"
                    )
    return CheckResult(
        "lambda-model", True, f"transported structure constants match for L <= {top}"
    )


# -- 10: Stirling / Lah / Bernoulli ---------------------------------------------------------------


def criterion_combinatorics(level="full") -> CheckResult:
    top = 8
    table = combinat.stirling_build(top)
    for a in range(top + 1):
        for b in range(top + 1):
            if not table.inverse_identity_holds(a, b):
                return CheckResult("combinatorics", False, f"inverse identity fails {a},{b}")
            if b <= a and not combinat.lah_identity_check(table, a, b):
                return CheckResult("combinatorics", False, f"Lah identity fails {a},{b}")
    for j in range(top + 1):
        for k in range(top + 1 - j):
            for a in range(top + 1):
                if not combinat.second_identity_check(table, j, k, a):
                    return CheckResult(
                        "combinatorics", False, f"second identity fails {j},{k},{a}"
                    )
    cache = combinat.bernoulli_build(8)
    for k in range(1, 9):
        if not cache.v_recurrence_holds(k):
            return CheckResult("combinatorics", False, f"v-recurrence fails at {k}")
        if not cache.d_identity_holds(k):
            return CheckResult("combinatorics", False, f"d-identity fails at {k}")
    if combinat.solve_alpha(7) != combinat.alpha_closed_form(7):
        return CheckResult("combinatorics", False, "alpha closed form mismatch")
    return CheckResult(
        "combinatorics", True, "Eq.(7), both Lah-type identities, v-recurrence, alpha closed form"
    )


# -- 11: representation kernels and irreducibility ---------------------------------------------------


def _random_rep_datum(rng):
    """Random evaluation points and spins with total dimension <= 16; a third
    of the draws deliberately include a degenerate choice."""
    pool = [Scalar(2), Scalar(3), Scalar(Fraction(5, 2)), Scalar(0, 1), Scalar(-2)]
    n = rng.randint(1, 3)
    points = [rng.choice(pool) for _ in range(n)]
    style = rng.random()
    if style < 0.15 and n >= 2:
        points[1] = points[0]  # repeated class
    elif style < 0.3 and n >= 2:
        points[1] = points[0].inverse()  # reciprocal pair, same class
    elif style < 0.4:
        points[0] = Scalar(rng.choice((1, -1)))  # a = +-1
    dims = 1
    spins = []
    for _ in points:
        s = rng.choice((Fraction(1, 2), Fraction(1, 2), Fraction(1), Fraction(3, 2)))
        while dims * (int(2 * s) + 1) > 16:
            s = Fraction(1, 2)
        dims *= int(2 * s) + 1
        spins.append(s)
    return points, spins


def criterion_representations(level="full") -> CheckResult:
    count = 30 if level == "full" else 8
    rng = random.Random(1234)
    for trial in range(count):
        points, spins = _random_rep_datum(rng)
        rep = reps.build_rep(points, spins)
        P = rep.kernel_polynomial()
        for _ in range(4):
            x = random_element(rng)
            member = ideals.ideal_member(x, P)
            vanishes = linalg.is_zero_matrix(rep.apply(x))
            if member != vanishes:
                return CheckResult(
                    "representations",
                    False,
                    f"trial {trial}: kernel law fails for points {points}",
                )
        # forced member: P * (random element)
        x = random_element(rng)
        forced = OAElement(P.poly * x.p, (P.poly * P.poly.invert_variable()) * x.q)
        if not linalg.is_zero_matrix(rep.apply(forced)):
            return CheckResult(
                "representations", False, f"trial {trial}: forced member not in kernel"
            )
        want_irr = reps.is_irreducible(points)
        M0n, M1n = rep.numeric()
        commutant = reps.commutant_dimension(M0n, M1n)
        if want_irr != (commutant == 1):
            return CheckResult(
                "representations",
                False,
                f"trial {trial}: criterion {want_irr} vs commutant {commutant} for {points}",
            )
    return CheckResult(
        "representations",
        True,
        f"{count} random data: kernel law and irreducibility criterion both verified",
    )


# -- 12: chiral Potts ------------------------------------------------------------------------------


def criterion_chiral_potts(level="full") -> CheckResult:
    start = time.monotonic()
    cases = [(N, sites) for N in (2, 3, 4) for sites in (1, 2, 3) if N**sites <= 64]
    if level != "full":
        cases = [(2, 1), (2, 2), (3, 2), (4, 1)]
    for N, sites in cases:
        chain = chiralpotts.build_chain(N, sites)
        herm = chiralpotts.hermiticity_deviation(chain)
        if herm > 1e-12:
            return CheckResult("chiral-potts", False, f"N={N} sites={sites}: Hermiticity {herm}")
        dev = chiralpotts.dg_check_numeric(chain)
        if N in (2, 4):
            if dev != 0.0:
                return CheckResult(
                    "chiral-potts", False, f"N={N} sites={sites}: exact DG deviation {dev}"
                )
        elif dev > 1e-10:
            return CheckResult("chiral-potts", False, f"N={N} sites={sites}: DG deviation {dev}")
    if not chiralpotts.dg_check_exact_rational(chiralpotts.build_chain(2, 2)):
        return CheckResult("chiral-potts", False, "rational DG check fails for N=2 sites=2")

    ks = np.linspace(0.0, 2.0, 21)
    max_sites = 3 if level == "full" else 2
    for sites in range(1, max_sites + 1):
        chain = chiralpotts.build_chain(2, sites)
        ks_out, table = chiralpotts.spectrum_sweep(chain, ks)
        fit = chiralpotts.fit_onsager_form(ks_out, table, 2, tol=1e-8)
        if not fit.ok or fit.residual >= 1e-8:
            return CheckResult(
                "chiral-potts", False, f"Ising sites={sites}: fit residual {fit.residual}"
            )
        if any(abs(m) != Fraction(1, 2) for t in fit.trajectories for m in t.m):
            return CheckResult(
                "chiral-potts", False, f"Ising sites={sites}: non-spin-1/2 assignment"
            )
    chain = chiralpotts.build_chain(3, 2)
    ks_out, table = chiralpotts.spectrum_sweep(chain, ks)
    fit = chiralpotts.fit_onsager_form(ks_out, table, 3, tol=1e-6)
    if not fit.ok or fit.residual >= 1e-6:
        return CheckResult("chiral-potts", False, f"N=3 sites=2: fit residual {fit.residual}")
    dt = time.monotonic() - start
    return CheckResult(
        "chiral-potts",
        dt < 60.0,
        f"Hermiticity, DG (exact N=2,4) and Onsager-form fits in {dt:.1f}s",
    )


CRITERIA = [
    criterion_onsager_relations,
    criterion_dolan_grady,
    criterion_ideal_classification,
    criterion_crt,
    criterion_quotient_dimensions,
    criterion_y_reduction,
    criterion_efh,
    criterion_ad_spectrum,
    criterion_lambda_model,
    criterion_combinatorics,
    criterion_representations,
    criterion_chiral_potts,
]


def run_suite(level: str = "fast") -> list[CheckResult]:
    return [criterion(level=level) for criterion in CRITERIA]
