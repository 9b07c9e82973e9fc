"""The superintegrable chiral Potts chain H(k') = H0 + k' H1.

H0 and H1 act on the L-fold tensor power of C^N through the clock and
shift operators Z, X with ZX = omega XZ (omega = e^{2 pi i / N}):

    H0 = -2 sum_l sum_{n=1}^{N-1} (1 - omega^-n)^-1 X_l^n,
    H1 = -2 sum_l sum_{n=1}^{N-1} (1 - omega^-n)^-1 Z_l^n Z_{l+1}^{N-n},

with periodic closure Z_{L+1} = Z_1.  The rescaled pair A_0 = -(2/N) H0,
A_1 = -(2/N) H1 satisfies the Dolan-Grady condition, which forces every
eigenvalue trajectory k' -> E(k') into the Ising-like form

    a + b k' + 2 N sum_j m_j sqrt(1 + k'^2 - 2 k' cos(theta_j)),

with half-integer m_j.  This module builds the chain, certifies
Hermiticity and the DG condition (exactly for N = 2 and 4, where omega is
Gaussian rational), sweeps spectra, matches eigenvalue trajectories by
continuity, and fits each trajectory to the closed form.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.optimize import least_squares, linear_sum_assignment

from . import linalg
from .scalars import Scalar

DEFAULT_DIM_CAP = 4096
HERMITICITY_TOL = 1e-12
DG_TOL = 1e-10


@dataclass(frozen=True)
class PottsChain:
    N: int
    sites: int
    omega: complex
    H0: np.ndarray
    H1: np.ndarray
    H0_exact: list | None = field(repr=False, default=None)
    H1_exact: list | None = field(repr=False, default=None)

    @property
    def dim(self) -> int:
        return self.N**self.sites

    @property
    def exact(self) -> bool:
        return self.H0_exact is not None

    def hamiltonian(self, kprime: float) -> np.ndarray:
        return self.H0 + kprime * self.H1


def clock_shift(N: int):
    """Single-site operators with X|m> = |m+1>, Z|m> = omega^m |m>."""
    omega = cmath.exp(2j * cmath.pi / N)
    X = np.zeros((N, N), dtype=complex)
    for m in range(N):
        X[(m + 1) % N, m] = 1.0
    Z = np.diag([omega**m for m in range(N)])
    return X, Z, omega


def _site_operator(local: np.ndarray, site: int, sites: int, N: int) -> np.ndarray:
    out = np.eye(1, dtype=complex)
    for i in range(sites):
        out = np.kron(out, local if i == site else np.eye(N, dtype=complex))
    return out


def _exact_omega(N: int) -> Scalar | None:
    if N == 2:
        return Scalar(-1)
    if N == 4:
        return Scalar(0, 1)
    return None


def _exact_hamiltonians(N: int, sites: int):
    """Gaussian-rational H0, H1 when omega lies in Q(i) (N = 2 or 4).

    X_l^n permutes one base-N digit and Z_l^n Z_{l+1}^{N-n} is diagonal, so
    both Hamiltonians are filled in directly by index arithmetic.
    """
    omega = _exact_omega(N)
    if omega is None:
        return None, None
    dim = N**sites
    omega_pow = [omega ** (m % N) for m in range(N)]
    coeffs = [None] + [Scalar(-2) / (Scalar(1) - omega ** (-n)) for n in range(1, N)]

    def digits(idx):
        out = []
        for _ in range(sites):
            out.append(idx % N)
            idx //= N
        return out  # out[l] is the state of site l

    def pack(ds):
        idx = 0
        for d in reversed(ds):
            idx = idx * N + d
        return idx

    H0 = linalg.zeros(dim, dim)
    H1 = linalg.zeros(dim, dim)
    for col in range(dim):
        ds = digits(col)
        diag = Scalar(0)
        for n in range(1, N):
            for l in range(sites):
                shifted = ds[:]
                shifted[l] = (shifted[l] + n) % N
                row = pack(shifted)
                H0[row][col] = H0[row][col] + coeffs[n]
                lp = (l + 1) % sites
                phase = omega_pow[(n * ds[l] + (N - n) * ds[lp]) % N]
                diag = diag + coeffs[n] * phase
        H1[col][col] = diag
    return H0, H1


def build_chain(N: int, sites: int, dim_cap: int = DEFAULT_DIM_CAP) -> PottsChain:
    """Assemble H0, H1; Hermiticity is certified at build time."""
    if N < 2:
        raise ValueError("need N >= 2 states")
    if sites < 1:
        raise ValueError("need at least one site")
    if N**sites > dim_cap:
        raise ValueError(f"dimension {N**sites} exceeds cap {dim_cap}")
    X, Z, omega = clock_shift(N)
    dim = N**sites
    H0 = np.zeros((dim, dim), dtype=complex)
    H1 = np.zeros((dim, dim), dtype=complex)
    for n in range(1, N):
        coeff = -2.0 / (1.0 - omega ** (-n))
        Xn = np.linalg.matrix_power(X, n)
        Zn = np.linalg.matrix_power(Z, n)
        ZNn = np.linalg.matrix_power(Z, N - n)
        for l in range(sites):
            H0 += coeff * _site_operator(Xn, l, sites, N)
            H1 += coeff * (
                _site_operator(Zn, l, sites, N)
                @ _site_operator(ZNn, (l + 1) % sites, sites, N)
            )
    H0e, H1e = _exact_hamiltonians(N, sites)
    if H0e is not None:
        H0 = linalg.to_complex(H0e)
        H1 = linalg.to_complex(H1e)
    chain = PottsChain(N, sites, omega, H0, H1, H0e, H1e)
    herm = hermiticity_deviation(chain)
    if herm > HERMITICITY_TOL:
        raise AssertionError(f"H0/H1 failed Hermiticity: deviation {herm}")
    return chain


def hermiticity_deviation(chain: PottsChain) -> float:
    return float(
        max(
            np.abs(chain.H0 - chain.H0.conj().T).max(),
            np.abs(chain.H1 - chain.H1.conj().T).max(),
        )
    )


def translation_deviation(chain: PottsChain) -> float:
    """Max deviation of H0, H1 from cyclic-shift invariance."""
    dim, N, sites = chain.dim, chain.N, chain.sites
    perm = np.zeros(dim, dtype=int)
    for idx in range(dim):
        digits = []
        x = idx
        for _ in range(sites):
            digits.append(x % N)
            x //= N
        digits = digits[-1:] + digits[:-1]  # rotate site labels
        new = 0
        for d in reversed(digits):
            new = new * N + d
        perm[idx] = new
    out = 0.0
    for H in (chain.H0, chain.H1):
        shifted = H[np.ix_(perm, perm)]
        out = max(out, float(np.abs(shifted - H).max()))
    return out


def dg_deviation(A0: np.ndarray, A1: np.ndarray) -> float:
    """Relative deviation from the two Dolan-Grady identities."""

    def comm(a, b):
        return a @ b - b @ a

    c10 = comm(A1, A0)
    d1 = comm(A1, comm(A1, c10)) - 16 * c10
    c01 = comm(A0, A1)
    d0 = comm(A0, comm(A0, c01)) - 16 * c01
    scale = max(1.0, float(np.abs(16 * c10).max()))
    return float(max(np.abs(d1).max(), np.abs(d0).max())) / scale


def dg_check_numeric(chain: PottsChain) -> float:
    """DG deviation for A_i = -(2/N) H_i; exactly zero for N = 2 and 4.

    For N = 2 the scaled matrices are integers and for N = 4 Gaussian
    half-integers, so the identity is evaluated in exact integer arithmetic
    (magnitudes stay far below 2^53) and the returned deviation is the true
    one, not a rounding artifact.
    """
    if chain.exact:
        K0 = np.rint(2 * chain.H0.real) + 1j * np.rint(2 * chain.H0.imag)
        K1 = np.rint(2 * chain.H1.real) + 1j * np.rint(2 * chain.H1.imag)
        assert np.abs(K0 - 2 * chain.H0).max() == 0.0
        assert np.abs(K1 - 2 * chain.H1).max() == 0.0
        # A_i = -(2/N) H_i = -(1/N) K_i; DG holds iff
        # [K1,[K1,[K1,K0]]] = 16 N^2 [K1, K0]
        def comm(a, b):
            return a @ b - b @ a

        target = 16 * chain.N**2
        d1 = comm(K1, comm(K1, comm(K1, K0))) - target * comm(K1, K0)
        d0 = comm(K0, comm(K0, comm(K0, K1))) - target * comm(K0, K1)
        dev = float(max(np.abs(d1).max(), np.abs(d0).max()))
        scale = max(1.0, float(np.abs(target * comm(K1, K0)).max()))
        return dev / scale
    A0 = -(2.0 / chain.N) * chain.H0
    A1 = -(2.0 / chain.N) * chain.H1
    return dg_deviation(A0, A1)


def dg_check_exact_rational(chain: PottsChain) -> bool:
    """Fraction-arithmetic DG check; only available when omega is in Q(i)."""
    if not chain.exact:
        raise ValueError("exact DG check needs N = 2 or 4")
    scale = Scalar(Fraction(-2, chain.N))
    A0 = linalg.mat_scale(chain.H0_exact, scale)
    A1 = linalg.mat_scale(chain.H1_exact, scale)
    from .reps import matrix_dg_check

    return matrix_dg_check(A0, A1)


# -- spectra -----------------------------------------------------------------------


def spectrum_sweep(chain: PottsChain, kprimes) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalue trajectories over the k' samples.

    Returns (ks, table) with table[s, i] = value of trajectory i at sample s.
    Trajectories are matched across samples by continuity: each step pairs
    the new spectrum against a linear extrapolation of the previous two
    points (plain nearest-value at the first step).
    """
    ks = np.asarray(sorted(float(k) for k in kprimes), dtype=float)
    if ks.size == 0:
        raise ValueError("need at least one k' sample")
    spectra = [np.linalg.eigvalsh(chain.hamiltonian(k)) for k in ks]
    dim = chain.dim
    table = np.zeros((ks.size, dim))
    table[0] = spectra[0]
    for s in range(1, ks.size):
        if s == 1:
            predicted = table[0]
        else:
            h = (ks[s] - ks[s - 1]) / max(ks[s - 1] - ks[s - 2], 1e-30)
            predicted = table[s - 1] + h * (table[s - 1] - table[s - 2])
        cost = np.abs(predicted[:, None] - spectra[s][None, :])
        rows, cols = linear_sum_assignment(cost)
        ordered = np.empty(dim)
        ordered[rows] = spectra[s][cols]
        table[s] = ordered
    return ks, table


# -- the Onsager form fit ------------------------------------------------------------


@dataclass(frozen=True)
class TrajectoryFit:
    a: float
    b: float
    thetas: tuple[float, ...]
    m: tuple[Fraction, ...]
    residual: float
    ok: bool


@dataclass(frozen=True)
class SpectrumFit:
    a: float
    b: float
    thetas: tuple[float, ...]
    n: int
    assignments: tuple[tuple[Fraction, ...], ...]
    residual: float
    trajectories: tuple[TrajectoryFit, ...]

    @property
    def ok(self) -> bool:
        return all(t.ok for t in self.trajectories)


def _sqrt_basis(ks: np.ndarray, thetas) -> np.ndarray:
    cols = [np.ones_like(ks), ks]
    for th in thetas:
        cols.append(np.sqrt(np.maximum(1 + ks**2 - 2 * ks * math.cos(th), 0.0)))
    return np.vstack(cols).T


def _linear_fit(ks, es, thetas):
    A = _sqrt_basis(ks, thetas)
    coef, *_ = np.linalg.lstsq(A, es, rcond=None)
    resid = es - A @ coef
    return coef, float(np.abs(resid).max())


def _refit_fixed_m(ks, es, thetas0, coeffs, eps=1e-3):
    """Optimize thetas with the sqrt coefficients frozen; a, b stay linear."""
    thetas0 = np.asarray(thetas0, dtype=float)

    def fun(thetas):
        target = es.copy()
        for th, c in zip(thetas, coeffs):
            target = target - c * np.sqrt(np.maximum(1 + ks**2 - 2 * ks * np.cos(th), 0.0))
        A = np.vstack([np.ones_like(ks), ks]).T
        coef, *_ = np.linalg.lstsq(A, target, rcond=None)
        return target - A @ coef

    if thetas0.size == 0:
        r = fun(thetas0)
        A = np.vstack([np.ones_like(ks), ks]).T
        coef, *_ = np.linalg.lstsq(A, es, rcond=None)
        return coef, thetas0, float(np.abs(r).max())
    sol = least_squares(fun, thetas0, bounds=(eps, math.pi - eps), xtol=1e-15, ftol=1e-15, gtol=1e-15)
    thetas = sol.x
    target = es.copy()
    for th, c in zip(thetas, coeffs):
        target = target - c * np.sqrt(np.maximum(1 + ks**2 - 2 * ks * np.cos(th), 0.0))
    A = np.vstack([np.ones_like(ks), ks]).T
    coef, *_ = np.linalg.lstsq(A, target, rcond=None)
    return coef, thetas, float(np.abs(target - A @ coef).max())


def _theta_starts(n: int):
    if n == 1:
        grid = np.linspace(0.08, math.pi - 0.08, 24)
        return [np.array([g]) for g in grid]
    if n == 2:
        grid = np.linspace(0.1, math.pi - 0.1, 12)
        return [np.array([g1, g2]) for i, g1 in enumerate(grid) for g2 in grid[i + 1 :]]
    grid = np.linspace(0.12, math.pi - 0.12, 7)
    out = []
    for i, g1 in enumerate(grid):
        for j in range(i + 1, len(grid)):
            for k in range(j + 1, len(grid)):
                out.append(np.array([g1, grid[j], grid[k]]))
    return out


def fit_trajectory(
    ks: np.ndarray,
    es: np.ndarray,
    N: int,
    tol: float = 1e-8,
    n_max: int = 3,
    max_spin: Fraction = Fraction(9, 2),
) -> TrajectoryFit:
    """Fit one eigenvalue trajectory to a + b k' + 2N sum_j m_j sqrt(...).

    The square-root count n grows until the residual passes tol; each
    square-root coefficient is snapped to 2N times a half-integer m_j and
    the angles are re-optimized with the m_j frozen.
    """
    coef, res = _linear_fit(ks, es, [])
    if res < tol:
        return TrajectoryFit(float(coef[0]), float(coef[1]), (), (), res, True)
    best = TrajectoryFit(float(coef[0]), float(coef[1]), (), (), res, False)
    for n in range(1, n_max + 1):
        candidates = []
        for start in _theta_starts(n):
            def fun(thetas):
                A = _sqrt_basis(ks, thetas)
                c, *_ = np.linalg.lstsq(A, es, rcond=None)
                return es - A @ c

            sol = least_squares(
                fun, start, bounds=(1e-3, math.pi - 1e-3), xtol=1e-14, ftol=1e-14
            )
            coef, res = _linear_fit(ks, es, sol.x)
            candidates.append((res, sol.x, coef))
        candidates.sort(key=lambda c: c[0])
        for res, thetas, coef in candidates[:6]:
            # snap sqrt coefficients to 2N * (half-integers), drop zeros
            kept_thetas = []
            kept_m = []
            for th, c in zip(thetas, coef[2:]):
                m2 = round(2 * c / (2 * N))  # 2*m_j as nearest integer
                m2 = max(-int(2 * max_spin), min(int(2 * max_spin), m2))
                if m2 != 0:
                    kept_thetas.append(th)
                    kept_m.append(Fraction(m2, 2))
            coeffs = [float(2 * N * m) for m in kept_m]
            lin, final_thetas, final_res = _refit_fixed_m(ks, es, kept_thetas, coeffs)
            if final_res < tol:
                order = np.argsort(final_thetas) if len(final_thetas) else []
                thetas_sorted = tuple(float(final_thetas[i]) for i in order)
                m_sorted = tuple(kept_m[i] for i in order)
                return TrajectoryFit(
                    float(lin[0]), float(lin[1]), thetas_sorted, m_sorted, final_res, True
                )
            if final_res < best.residual:
                order = np.argsort(final_thetas) if len(final_thetas) else []
                best = TrajectoryFit(
                    float(lin[0]),
                    float(lin[1]),
                    tuple(float(final_thetas[i]) for i in order),
                    tuple(kept_m[i] for i in order),
                    final_res,
                    False,
                )
    return best


def fit_onsager_form(
    ks: np.ndarray,
    table: np.ndarray,
    N: int,
    tol: float = 1e-8,
    n_max: int = 3,
) -> SpectrumFit:
    """Fit every trajectory of a spectrum sweep; see fit_trajectory.

    a and b of the whole fit are taken from the lowest trajectory at the
    first sample; thetas is the sorted union over trajectories and each
    per-eigenvalue assignment vector lists m_j over that union (zero where
    a trajectory does not use an angle).
    """
    ks = np.asarray(ks, dtype=float)
    fits = []
    for i in range(table.shape[1]):
        fits.append(fit_trajectory(ks, table[:, i], N, tol=tol, n_max=n_max))
    union: list[float] = []
    for f in fits:
        for th in f.thetas:
            if not any(abs(th - u) < 1e-6 for u in union):
                union.append(th)
    union.sort()
    assignments = []
    for f in fits:
        row = [Fraction(0)] * len(union)
        for th, m in zip(f.thetas, f.m):
            idx = min(range(len(union)), key=lambda j: abs(union[j] - th))
            row[idx] = m
        assignments.append(tuple(row))
    ground = int(np.argmin(table[0]))
    residual = max(f.residual for f in fits) if fits else 0.0
    return SpectrumFit(
        fits[ground].a,
        fits[ground].b,
        tuple(union),
        len(union),
        tuple(assignments),
        residual,
        tuple(fits),
    )
