from __future__ import annotations

import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.optimize import brentq

import oracles
from subshiftgames.automata import (
    AB,
    FiniteLanguage,
    count_words,
    enumerate_words,
    from_language,
    language_equal,
)
from subshiftgames.entropy import (
    binomial_eps,
    binomial_threshold,
    entropy_lower_bound,
    entropy_spectral,
    entropy_word_count,
    extension_entropy,
    extension_table,
    gap_root,
    lower_bound_check,
    max_b_density,
    spectral_radius,
    upper_bound_check,
)
from subshiftgames.regex import build_expected
from subshiftgames.winshift import two_directional_winning_shift, winning_language_dfa
from subshiftgames.zoo import (
    even_shift_fig,
    extend,
    full_shift,
    gap_shift,
    golden_mean,
    named_shift,
    ss_forbidden,
    zoo_shifts,
)

LOG_PHI = math.log2((1 + math.sqrt(5)) / 2)


def largest_real_root(m: int, k: int) -> float:
    coeffs = [1, -1] + [0] * (m - 1) + [-k]
    with mpmath.workdps(40):
        roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=200)
        return float(max(r.real for r in roots if abs(r.imag) < 1e-20))


# -- word counts --------------------------------------------------------------


def test_word_count_entropy():
    assert entropy_word_count(full_shift(1), 6) == [1.0] * 6
    brute = sum("11" not in w for w in oracles.words("01", 10))
    assert brute == 144
    assert entropy_word_count(golden_mean(), 10)[-1] == pytest.approx(math.log2(144) / 10)
    assert round(math.log2(144) / 10, 4) == 0.7170
    hs = entropy_word_count(even_shift_fig(), 64)
    assert all(h > LOG_PHI for h in hs)
    assert all(a >= b for a, b in zip(hs[8::8], hs[16::8]))
    assert hs[-1] - LOG_PHI < 0.02


def test_word_count_errors():
    with pytest.raises(ValueError):
        entropy_word_count(golden_mean(), 0)
    finite = from_language(FiniteLanguage.from_strings("01", ["", "0", "01"]))
    with pytest.raises(ValueError):
        entropy_word_count(finite, 3)


@pytest.mark.parametrize("name", sorted(oracles.SHIFT_PREDICATES))
def test_word_count_envelope(name):
    d = zoo_shifts()[name]
    h = entropy_spectral(d).entropy_bits
    n = 64
    hn = math.log2(count_words(d, n)) / n
    envelope = (math.log2(d.n_states) + 1 + math.log2(n)) / n
    assert -1e-12 <= hn - h <= envelope


# -- spectral radius ----------------------------------------------------------


def test_spectral_examples():
    assert abs(entropy_spectral(golden_mean()).entropy_bits - LOG_PHI) < 1e-9
    assert abs(entropy_spectral(extend(golden_mean(), 2)).entropy_bits - 1.0) < 1e-9
    for m in (2, 3, 4, 5):
        assert abs(entropy_spectral(full_shift(m - 1)).entropy_bits - math.log2(m)) < 1e-12


def test_spectral_result_fields():
    r = entropy_spectral(golden_mean())
    assert r.tolerance > 0 and r.value >= 1
    assert r.lower <= (1 + math.sqrt(5)) / 2 <= r.upper


def test_spectral_edge_cases():
    assert spectral_radius(np.zeros((0, 0))).entropy_bits == -math.inf
    assert spectral_radius(np.array([[0, 1], [0, 0.0]])).entropy_bits == -math.inf
    # a 3-cycle is periodic; plain power iteration would oscillate
    cyc = np.roll(np.eye(3), 1, axis=1)
    for warm in (True, False):
        assert abs(spectral_radius(cyc, warm_start=warm).value - 1) < 1e-9
    # reducible: the largest component wins
    m = np.array([[1, 1, 0], [0, 2, 1], [0, 0, 1.0]])
    assert abs(spectral_radius(m).value - 2) < 1e-9
    finite = from_language(FiniteLanguage.from_strings("01", ["", "0"]))
    assert entropy_spectral(finite).entropy_bits == -math.inf


@st.composite
def nonnegative_matrices(draw):
    n = draw(st.integers(1, 6))
    entries = draw(st.lists(st.integers(0, 3), min_size=n * n, max_size=n * n))
    return np.array(entries, dtype=float).reshape(n, n)


@given(nonnegative_matrices(), st.booleans())
def test_spectral_radius_against_eigvals(m, warm):
    expected = max(abs(np.linalg.eigvals(m)))
    r = spectral_radius(m, warm_start=warm)
    if expected < 1e-9:
        assert r.entropy_bits == -math.inf
    else:
        assert abs(r.value - expected) <= max(r.tolerance, 1e-9 * expected)


@pytest.mark.parametrize("k", range(1, 11))
def test_extension_closed_form(k):
    expected = math.log2(0.5 + math.sqrt(0.25 + k))
    assert abs(entropy_spectral(extend(golden_mean(), k)).entropy_bits - expected) < 1e-9
    assert abs(extension_entropy(golden_mean(), k).entropy_bits - expected) < 1e-9


def test_binary_entropy_equality_even():
    d = even_shift_fig()
    assert abs(entropy_spectral(d).entropy_bits - entropy_spectral(winning_language_dfa(d)).entropy_bits) < 1e-9


@pytest.mark.parametrize("name", ["goldenmean", "zeroone", "sftZ", "gap2", "gap3", "periodic3", "full1"])
def test_binary_entropy_equality_zoo(name):
    d = zoo_shifts()[name]
    assert abs(entropy_spectral(d).entropy_bits - entropy_spectral(winning_language_dfa(d)).entropy_bits) < 1e-9


# -- gap shifts ---------------------------------------------------------------


def test_gap_root_examples():
    assert abs(gap_root(1, 1) - (1 + math.sqrt(5)) / 2) < 1e-12
    assert abs(gap_root(1, 2) - 2) < 1e-12
    # independent bisection on x^3 - x^2 - 1
    assert abs(gap_root(2, 1) - brentq(lambda x: x ** 3 - x ** 2 - 1, 1, 2, xtol=1e-14)) < 1e-12
    assert round(gap_root(2, 1), 7) == 1.4655712
    with pytest.raises(ValueError):
        gap_root(0, 1)
    with pytest.raises(ValueError):
        gap_root(1, 0)


@given(st.integers(1, 8), st.integers(1, 10 ** 6))
def test_gap_root_against_polyroots(m, k):
    root = gap_root(m, k)
    assert abs(root - largest_real_root(m, k)) < 1e-9 * max(1.0, root)


@pytest.mark.parametrize("m", range(1, 5))
@pytest.mark.parametrize("k", range(1, 6))
def test_gap_root_is_extension_entropy(m, k):
    h = entropy_spectral(extend(gap_shift(m), k)).entropy_bits
    assert abs(math.log2(gap_root(m, k)) - h) < 1e-9


def test_gap_root_asymptotics():
    errs = [abs(gap_root(2, 10 ** e) - (10 ** e) ** (1 / 3) - 1 / 3) for e in range(2, 7)]
    assert all(a > b for a, b in zip(errs, errs[1:]))
    assert errs[-1] < 0.01


@pytest.mark.parametrize("m", range(1, 5))
def test_relative_entropy_limit(m):
    k = 10 ** 4
    rel = extension_entropy(gap_shift(m), k).entropy_bits / math.log2(k + 1)
    assert abs(rel - 1 / (m + 1)) < 0.02


def test_extension_table_trend():
    rows = extension_table(golden_mean(), 50)
    assert rows[0].k == 1 and round(rows[0].relative, 4) == 0.6942
    rel = [r.relative for r in rows]
    assert all(a > b for a, b in zip(rel, rel[1:]))
    with pytest.raises(ValueError):
        extension_table(golden_mean(), 0)
    with pytest.raises(ValueError):
        extension_entropy(full_shift(2), 2)


def test_gap_winning_entropy_bracket():
    m = 64
    x = gap_root(m, 1) - 1
    lg = math.log(m)
    assert (lg - 2 * math.log(lg)) / m <= x <= (lg + 2 * math.log(lg)) / m


# -- binomial epsilon ---------------------------------------------------------


def test_binomial_eps_examples():
    assert binomial_eps(2 * math.e) == 1.0
    assert binomial_eps(10.0) == 1.0
    ref = brentq(lambda e: e * math.log(2 * math.e / e) - math.log(2), 1e-12, 1, xtol=1e-15)
    assert abs(binomial_eps(2) - ref) < 1e-11
    for c in (1.0, 0.5):
        with pytest.raises(ValueError):
            binomial_eps(c)


@given(st.floats(1.0001, 2 * math.e - 1e-6))
def test_binomial_eps_solves_equation(c):
    e = binomial_eps(c)
    assert 0 < e <= 1
    assert abs((2 * math.e / e) ** e - c) < 1e-9 * c


def test_binomial_threshold():
    for eps in (0.05, 0.1, 0.2):
        k = (2 * math.e / eps) ** eps * 1.01
        n0 = binomial_threshold(eps, k)
        assert n0 is not None
        for n in (n0, n0 + 1, 5000, 10_000):
            assert math.log2(math.comb(n, math.floor(eps * n))) <= n * math.log2(k) + 1e-9
    assert entropy_lower_bound(0.0, 2) == 0.0
    assert entropy_lower_bound(1.0, 2) == pytest.approx(binomial_eps(2.0))


# -- density and the bound checks ---------------------------------------------


def test_density_examples():
    full = max_b_density(build_expected("(A+B)*", AB), 6)
    assert all(v == 1 for v in full.densities.values())
    ones = max_b_density(build_expected("A*", AB), 6)
    assert all(v == 0 for v in ones.densities.values())
    w = winning_language_dfa(even_shift_fig())
    assert max_b_density(w, 3).max_b[3] == 2
    with pytest.raises(ValueError):
        max_b_density(golden_mean(), 3)


@pytest.mark.parametrize("name", ["even", "sftZ", "gap3", "goldext2", "soficY"])
def test_density_matches_enumeration(name):
    w = winning_language_dfa(zoo_shifts()[name])
    prof = max_b_density(w, 9)
    for n in range(1, 10):
        assert prof.max_b[n] == max(a.count("B") for a in enumerate_words(w, n).strings())
        if n > 1:
            assert 0 <= prof.max_b[n] - prof.max_b[n - 1] <= 1


def test_lower_bound_examples():
    d = even_shift_fig()
    assert lower_bound_check(d, winning_language_dfa(d), 12).ok
    full = lower_bound_check(full_shift(1), build_expected("(A+B)*", AB), 12)
    assert full.ok and all(r.count == 2 ** r.max_b for r in full.rows)
    z = named_shift("zeroone")
    rows = lower_bound_check(z, winning_language_dfa(z), 12).rows
    assert all(r.count == r.n + 1 and r.max_b == 1 for r in rows)


def test_lower_bound_detects_violation():
    report = lower_bound_check(golden_mean(), build_expected("(A+B)*", AB), 5)
    assert not report.ok
    assert report.violations[0].n == 2


def test_upper_bound_examples():
    w = winning_language_dfa(full_shift(1))
    rep = upper_bound_check(full_shift(1), entropy_spectral(w).entropy_bits)
    assert rep.applicable and rep.c == pytest.approx(2.0) and rep.holds
    assert rep.epsilon == pytest.approx(binomial_eps(2.0))
    ss = upper_bound_check(ss_forbidden(3), 0.0)
    assert not ss.applicable and ss.message == "not applicable"
    ext = upper_bound_check(extend(golden_mean(), 2), LOG_PHI)
    assert not ext.applicable


def test_ss_shift_winning_shift():
    # B can only move safely at the very first coordinate, so the two-sided shift is {A^∞}
    d = ss_forbidden(3)
    w = winning_language_dfa(d)
    for n in range(1, 7):
        assert set(enumerate_words(w, n).strings()) == {"A" * n, "B" + "A" * (n - 1)}
    assert language_equal(two_directional_winning_shift(d), build_expected("A*", AB))
