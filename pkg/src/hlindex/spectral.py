"""Adjacency spectra and everything indexed off them: the median eigenvalue
positions H and L, the HL-index R(G) = max(|lambda_H|, |lambda_L|), interval
counts, and a verifier for the two eigenvalue interlacing chains that vertex
deletion induces.

Eigenvalues come from LAPACK's symmetric solver (tridiagonalization based),
which comfortably meets the 1e-9-per-eigenvalue accuracy this package needs
at dense desk scales; the test suite cross-checks it against exact integer
characteristic polynomials.  All comparisons against sqrt(2)-style thresholds
go through a single configurable tolerance EPS and report margins, with
near-threshold cases labelled "boundary" rather than forced to pass/fail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, induced_subgraph

#: Global comparison tolerance for threshold verdicts.
EPS_DEFAULT = 1e-9

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class Spectrum:
    """All n adjacency eigenvalues, nonincreasing."""

    values: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def largest(self, i: int) -> float:
        """i-th largest eigenvalue, 1-based."""
        if not (1 <= i <= self.n):
            raise ValueError(f"index {i} outside 1..{self.n}")
        return self.values[i - 1]

    def smallest(self, i: int) -> float:
        """i-th smallest eigenvalue, 1-based."""
        if not (1 <= i <= self.n):
            raise ValueError(f"index {i} outside 1..{self.n}")
        return self.values[self.n - i]

    def serialize(self) -> str:
        """One eigenvalue per line, 17 significant digits, nonincreasing."""
        return "\n".join(f"{x:.17g}" for x in self.values) + ("\n" if self.values else "")


def eigenvalues(G: Graph) -> Spectrum:
    """Spectrum of the (multi)graph's symmetric adjacency matrix."""
    if G.n == 0:
        return Spectrum(())
    if G.m == 0:
        return Spectrum((0.0,) * G.n)
    a = G.adjacency_matrix().astype(np.float64)
    vals = np.linalg.eigvalsh(a)
    return Spectrum(tuple(float(x) for x in vals[::-1]))


def hl_indices(n: int) -> tuple[int, int]:
    """The 1-based median positions H = floor((n+1)/2), L = ceil((n+1)/2)."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    return (n + 1) // 2, (n + 2) // 2


@dataclass(frozen=True)
class HLResult:
    """Median eigenvalues and the HL-index of one graph."""

    n: int
    H: int
    L: int
    lambda_H: float
    lambda_L: float
    R: float

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "H": self.H,
            "L": self.L,
            "lambda_H": self.lambda_H,
            "lambda_L": self.lambda_L,
            "R": self.R,
        }


def hl_index(G: Graph, spectrum: Spectrum | None = None) -> HLResult:
    """HL-index R(G) = max(|lambda_H|, |lambda_L|) with the median positions."""
    if G.n < 1:
        raise ValueError("HL-index needs at least one vertex")
    s = spectrum if spectrum is not None else eigenvalues(G)
    H, L = hl_indices(G.n)
    lh, ll = s.largest(H), s.largest(L)
    return HLResult(n=G.n, H=H, L=L, lambda_H=lh, lambda_L=ll, R=max(abs(lh), abs(ll)))


def count_in_interval(s: Spectrum, lo: float, hi: float, eps: float = EPS_DEFAULT) -> int:
    """Eigenvalues in the closed interval [lo, hi], endpoints softened by eps."""
    if lo > hi:
        raise ValueError(f"empty interval [{lo}, {hi}]")
    return sum(1 for x in s.values if lo - eps <= x <= hi + eps)


@dataclass(frozen=True)
class InterlacingVerdict:
    """Outcome of checking both interlacing chains for one (G, A) pair.

    worst_margin is the minimum slack over all checked inequalities; the
    verdict passes when it stays above -tolerance.
    """

    n: int
    k: int
    ok: bool
    worst_margin: float
    worst_inequality: str
    tolerance: float

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "ok": self.ok,
            "worst_margin": self.worst_margin,
            "worst_inequality": self.worst_inequality,
            "tolerance": self.tolerance,
        }


def check_interlacing(
    G: Graph, A, tolerance: float = 1e-8
) -> InterlacingVerdict:
    """Verify both interlacing chains for K = G - A.

    For every i <= n-k this checks
    largest:   lambda_i(G) >= lambda_i(K) >= lambda_{i+k}(G)
    smallest:  lambda^-_i(G) <= lambda^-_i(K) <= lambda^-_{i+k}(G)
    and reports the worst margin over all four one-sided inequalities.
    """
    A = set(A)
    k = len(A)
    if k >= G.n:
        raise ValueError("A must be a proper subset of the vertices")
    K, _ = induced_subgraph(G, set(range(G.n)) - A)
    sg = eigenvalues(G)
    sk = eigenvalues(K)
    worst = math.inf
    worst_name = "none (k = 0)"
    for i in range(1, G.n - k + 1):
        checks = (
            (sg.largest(i) - sk.largest(i), f"lambda_{i}(G) >= lambda_{i}(K)"),
            (sk.largest(i) - sg.largest(i + k), f"lambda_{i}(K) >= lambda_{i + k}(G)"),
            (sk.smallest(i) - sg.smallest(i), f"lambda^-_{i}(G) <= lambda^-_{i}(K)"),
            (sg.smallest(i + k) - sk.smallest(i), f"lambda^-_{i}(K) <= lambda^-_{i + k}(G)"),
        )
        for margin, name in checks:
            if margin < worst:
                worst = margin
                worst_name = name
    if not math.isfinite(worst):
        worst = 0.0
    return InterlacingVerdict(
        n=G.n,
        k=k,
        ok=worst >= -tolerance,
        worst_margin=worst,
        worst_inequality=worst_name,
        tolerance=tolerance,
    )


def threshold_status(margin: float, eps: float = EPS_DEFAULT) -> str:
    """'pass' / 'boundary' / 'fail' for an inequality with the given slack."""
    if margin > eps:
        return "pass"
    if margin >= -eps:
        return "boundary"
    return "fail"


def integer_charpoly(G: Graph) -> list[int]:
    """Exact characteristic polynomial coefficients of the adjacency matrix.

    Faddeev-LeVerrier; returns [1, c_1, ..., c_n] with
    p(x) = x^n + c_1 x^{n-1} + ... + c_n.  Isomorphism-invariant, so it doubles
    as a sharp exact invariant for enumeration bucketing.  Runs in int64 and
    retries with unbounded integers should the intermediates ever grow large.
    """
    n = G.n
    for dtype in (np.int64, object):
        a = G.adjacency_matrix().astype(dtype)
        eye = np.eye(n, dtype=dtype)
        coeffs: list[int] = [1]
        m = a.copy()
        ok = True
        for k in range(1, n + 1):
            if dtype is np.int64 and int(np.abs(m).max(initial=0)) > 2**52:
                ok = False
                break
            t = int(m.diagonal().sum())
            assert t % k == 0
            ck = -(t // k)
            coeffs.append(ck)
            if k < n:
                m = a @ (m + ck * eye)
        if ok:
            return coeffs
    raise AssertionError("unreachable")
