"""Entropy of sofic shifts and the numeric side of the entropy bounds.

All logarithms are base 2.  Word counts are exact integers; eigenvalues and
logarithms are doubles compared through explicit tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .automata import AB, Dfa, count_words, dfa_minimize, trim_essential


@dataclass(frozen=True)
class SpectralResult:
    value: float
    entropy_bits: float
    tolerance: float
    iterations: int

    @property
    def lower(self) -> float:
        return self.value - self.tolerance

    @property
    def upper(self) -> float:
        return self.value + self.tolerance


def entropy_word_count(d: Dfa, n_max: int) -> list[float]:
    """``h_n = log2(count_n) / n`` for n = 1 .. n_max."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    out = []
    for n in range(1, n_max + 1):
        count = count_words(d, n)
        if count == 0:
            raise ValueError(f"no words of length {n}: the language is finite or empty")
        out.append(math.log2(count) / n)
    return out


def adjacency_matrix(d: Dfa) -> np.ndarray:
    """Edge counts between states (parallel edges add up)."""
    m = np.zeros((d.n_states, d.n_states))
    for q, _, r in d.transitions():
        m[q, r] += 1
    return m


def _perron_irreducible(m: np.ndarray, tol: float, max_iter: int,
                        warm_start: bool = True) -> tuple[float, float, int]:
    """Collatz-Wielandt bracket ``(lo, hi, iterations)`` for an irreducible matrix.

    For any positive vector v, ``min (Mv)_i / v_i <= rho <= max (Mv)_i / v_i``.
    Iterating with ``I + M`` (primitive even when M is periodic) tightens the
    bracket.  With ``warm_start`` a dense eigensolver supplies the starting
    vector; the bracket is still computed from it, so nothing is taken on trust.
    """
    n = m.shape[0]
    if n == 1:
        return float(m[0, 0]), float(m[0, 0]), 0
    v = np.ones(n)
    if warm_start:
        vals, vecs = np.linalg.eig(m)
        guess = np.abs(np.real(vecs[:, int(np.argmax(np.real(vals)))]))
        if np.all(guess > 0):
            v = guess
    v = v / v.sum()
    shifted = m + np.eye(n)
    lo, hi = 0.0, math.inf
    for it in range(max_iter + 1):
        w = m @ v
        ratios = w / v
        lo, hi = max(lo, float(ratios.min())), min(hi, float(ratios.max()))
        if hi - lo <= 2 * tol:
            return lo, hi, it
        v = shifted @ v
        v = v / v.sum()
        if not np.all(v > 0):
            break
    return lo, hi, max_iter


def spectral_radius(m: np.ndarray, tol: float = 1e-12, max_iter: int = 200_000,
                    warm_start: bool = True) -> SpectralResult:
    """Spectral radius of a nonnegative matrix, maximised over strongly connected components."""
    m = np.asarray(m, dtype=float)
    n = m.shape[0]
    if n == 0:
        return SpectralResult(0.0, -math.inf, tol, 0)
    ncomp, label = connected_components(csr_matrix(m), directed=True, connection="strong")
    lo_best, hi_best, iters = 0.0, 0.0, 0
    for comp in range(ncomp):
        idx = np.flatnonzero(label == comp)
        sub = m[np.ix_(idx, idx)]
        if not sub.any():
            continue
        lo, hi, it = _perron_irreducible(sub, tol, max_iter, warm_start)
        iters += it
        lo_best, hi_best = max(lo_best, lo), max(hi_best, hi)
    if hi_best == 0.0:
        return SpectralResult(0.0, -math.inf, tol, iters)
    # guard against rounding in the last ratio evaluation
    slack = 8 * float(np.finfo(float).eps) * hi_best
    value = (lo_best + hi_best) / 2
    tolerance = (hi_best - lo_best) / 2 + slack
    return SpectralResult(value, math.log2(value), tolerance, iters)


def entropy_spectral(d: Dfa, tol: float = 1e-12) -> SpectralResult:
    """Entropy of the sofic shift presented by ``d`` (a factor-closed language).

    An empty essential graph means a finite language; the result then carries
    ``entropy_bits = -inf``.
    """
    core = trim_essential(dfa_minimize(d))
    return spectral_radius(adjacency_matrix(core), tol)


def gap_root(m: int, k: int, tol: float = 1e-12) -> float:
    """Largest positive root of ``x^(m+1) - x^m - k`` by bisection."""
    if m < 1 or k < 1:
        raise ValueError("m and k must be at least 1")

    def p(x: float) -> float:
        return x ** m * (x - 1) - k

    r = k ** (1 / (m + 1))
    lo, hi = max(1.0, r), r + 1
    while p(hi) <= 0:
        hi *= 2
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if mid in (lo, hi):
            break
        if p(mid) > 0:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def binomial_eps(c: float, tol: float = 1e-12) -> float:
    """The ε in (0, 1] with ``(2e/ε)^ε = c``, or 1 when ``c >= 2e``.

    ``ε -> (2e/ε)^ε`` increases on (0, 1) from 1 to 2e, so bisection on
    ``ε ln(2e/ε) - ln c`` applies.
    """
    if c <= 1:
        raise ValueError("c must exceed 1")
    if c >= 2 * math.e:
        return 1.0
    target = math.log(c)
    lo, hi = 0.0, 1.0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if mid * math.log(2 * math.e / mid) < target:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


@dataclass(frozen=True)
class DensityProfile:
    max_b: dict[int, int | None]

    @property
    def densities(self) -> dict[int, float | None]:
        return {n: None if b is None else b / n for n, b in self.max_b.items()}


def max_b_density(d: Dfa, n_max: int) -> DensityProfile:
    """Largest number of B's in an accepted word of each length 1..n_max (max-plus DP)."""
    if d.alphabet != AB:
        raise ValueError("density profile needs the alphabet A B")
    out: dict[int, int | None] = {}
    if d.initial is None:
        return DensityProfile({n: None for n in range(1, n_max + 1)})
    best = {d.initial: 0}
    for n in range(1, n_max + 1):
        nxt: dict[int, int] = {}
        for q, b in best.items():
            for c, r in enumerate(d.delta[q]):
                if r is not None:
                    nxt[r] = max(nxt.get(r, -1), b + c)
        best = nxt
        vals = [b for q, b in best.items() if q in d.accepting]
        out[n] = max(vals) if vals else None
    return DensityProfile(out)


@dataclass
class BoundRow:
    n: int
    count: int
    max_b: int | None
    ok: bool


@dataclass
class LowerBoundReport:
    rows: list[BoundRow] = field(default_factory=list)

    @property
    def violations(self) -> list[BoundRow]:
        return [r for r in self.rows if not r.ok]

    @property
    def ok(self) -> bool:
        return not self.violations


def lower_bound_check(dX: Dfa, dW: Dfa, n_max: int) -> LowerBoundReport:
    """Check ``|B_n(X)| >= |S|^(max B-count in B_n(W))`` exactly for n = 1..n_max."""
    size = len(dX.alphabet)
    profile = max_b_density(dW, n_max)
    report = LowerBoundReport()
    for n in range(1, n_max + 1):
        count = count_words(dX, n)
        b = profile.max_b[n]
        ok = b is None or count >= size ** b
        report.rows.append(BoundRow(n, count, b, ok))
    return report


@dataclass(frozen=True)
class UpperBoundReport:
    applicable: bool
    h_x: float
    h_w: float
    c: float | None = None
    epsilon: float | None = None
    holds: bool | None = None

    @property
    def message(self) -> str:
        if not self.applicable:
            return "not applicable"
        return f"h(W) = {self.h_w:.6f} {'>=' if self.holds else '<'} eps = {self.epsilon:.6f}"


def upper_bound_check(dX: Dfa, h_w: float, tol: float = 1e-9) -> UpperBoundReport:
    """Compare h(W) against the ε forced by a large h(X).

    Applicable only when ``h(X) > log2(|S| - 1)`` (beyond ``tol``) and
    ``|S| >= 2``.  ε is the root of ``(2e/ε)^ε = 2^h(X) / (|S| - 1)``.
    """
    size = len(dX.alphabet)
    h_x = entropy_spectral(dX).entropy_bits
    if size < 2 or h_x <= math.log2(size - 1) + tol:
        return UpperBoundReport(False, h_x, h_w)
    c = 2 ** h_x / (size - 1)
    eps = binomial_eps(c)
    return UpperBoundReport(True, h_x, h_w, c, eps, h_w >= eps - tol)


def entropy_lower_bound(h_w: float, alphabet_size: int) -> float:
    """Lower bound ``ε log2|S|`` on h(X) implied by h(W(X)) = h_w, with ``k = 2^h_w``."""
    k = 2 ** h_w
    if k <= 1:
        return 0.0
    return binomial_eps(k) * math.log2(alphabet_size)


def log2_binomial(n: int, m: int) -> float:
    return (math.lgamma(n + 1) - math.lgamma(m + 1) - math.lgamma(n - m + 1)) / math.log(2)


def binomial_threshold(eps: float, k: float, n_max: int = 10_000) -> int | None:
    """Smallest N with ``C(n, floor(eps n)) <= k^n`` for every n in [N, n_max].

    Returns None when the inequality fails at ``n_max`` itself.
    """
    ok_from = None
    for n in range(n_max, 0, -1):
        if log2_binomial(n, math.floor(eps * n)) <= n * math.log2(k) + 1e-12:
            ok_from = n
        else:
            break
    return ok_from


def _extension_matrix(core: Dfa, k: int) -> np.ndarray:
    m = np.zeros((core.n_states, core.n_states))
    for q, c, r in core.transitions():
        m[q, r] += k if c == 1 else 1
    return m


def _binary_core(d: Dfa) -> Dfa:
    if len(d.alphabet) != 2:
        raise ValueError("extension entropy needs a binary presentation")
    return trim_essential(dfa_minimize(d))


def extension_entropy(d: Dfa, k: int, tol: float = 1e-12) -> SpectralResult:
    """Entropy of the {0..k}-extension of the binary shift presented by ``d``.

    The extension copies every 1-edge k times, so its adjacency matrix is
    ``M0 + k M1`` on the essential graph of ``d``; no k-letter alphabet is built.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    return spectral_radius(_extension_matrix(_binary_core(d), k), tol)


@dataclass(frozen=True)
class ExtensionRow:
    k: int
    h: float
    relative: float


def extension_table(d: Dfa, kmax: int) -> list[ExtensionRow]:
    """Entropy of the extensions k = 1..kmax and its ratio to log2(k+1)."""
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    core = _binary_core(d)
    rows = []
    for k in range(1, kmax + 1):
        h = spectral_radius(_extension_matrix(core, k)).entropy_bits
        rows.append(ExtensionRow(k, h, h / math.log2(k + 1)))
    return rows
