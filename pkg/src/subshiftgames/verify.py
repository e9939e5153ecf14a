"""Property suites run by ``subshiftgames verify``.

Each suite returns a :class:`SuiteResult` with per-batch counts; a suite
fails iff some check fails.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Callable

from .automata import (
    AB,
    BINARY,
    Alphabet,
    FiniteLanguage,
    digits,
    enumerate_words,
    is_factor_closed_upto,
    is_right_extendable_upto,
    from_language,
    language_equal,
    dfa_product,
    relabel,
)
from .entropy import entropy_spectral, lower_bound_check, upper_bound_check
from .langgames import (
    counting_winning_set,
    downward_closure,
    right_special_count,
    winning_set,
)
from .regex import build_expected
from .winshift import is_downward_closed, winning_language_dfa
from .zoo import (
    FIBONACCI,
    golden_mean,
    product_shift,
    substitution_factor_dfa,
    substitution_factors,
    zoo_shifts,
)


@dataclass
class SuiteResult:
    name: str
    lines: list[str] = field(default_factory=list)
    checked: int = 0
    failures: int = 0
    failed: list[str] = field(default_factory=list)

    def record(self, ok: bool, what: str) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            self.failed.append(what)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def summary(self) -> str:
        return f"suite={self.name} checked={self.checked} failures={self.failures}"


def all_languages(alphabet: Alphabet, n: int):
    words = list(itertools.product(range(len(alphabet)), repeat=n))
    for mask in range(1 << len(words)):
        yield FiniteLanguage(alphabet, (w for i, w in enumerate(words) if mask >> i & 1))


def random_language(rng: random.Random, alphabet: Alphabet, n: int, p: float | None = None) -> FiniteLanguage:
    p = rng.random() if p is None else p
    words = itertools.product(range(len(alphabet)), repeat=n)
    return FiniteLanguage(alphabet, (w for w in words if rng.random() < p))


def binary_cardinality(nmax: int = 4, **_) -> SuiteResult:
    """|W(L)| = |L| for every binary L of each length up to nmax."""
    res = SuiteResult("binary-cardinality")
    for n in range(1, nmax + 1):
        count = fails = 0
        for L in all_languages(BINARY, n):
            ok = len(winning_set(L)) == len(L)
            res.record(ok, f"n={n} {L!r}")
            count += 1
            fails += not ok
        res.lines.append(f"{count} languages checked at n={n}, {fails} failures")
    return res


def counting_game(nmax: int = 4, samples: int = 1000, seed: int = 0, **_) -> SuiteResult:
    """|W~(L)| = |L| and W(W~(L)) = W(L) on random ternary languages."""
    res = SuiteResult("counting-game")
    rng = random.Random(seed)
    ternary = digits(2)
    per_n = max(1, samples // nmax + (samples % nmax > 0))
    for n in range(1, nmax + 1):
        before = res.failures
        for _ in range(per_n):
            L = random_language(rng, ternary, n)
            cw = counting_winning_set(L)
            res.record(len(cw) == len(L), f"size n={n} {L!r}")
            res.record(winning_set(cw) == winning_set(L), f"W n={n} {L!r}")
        res.lines.append(f"{per_n} ternary languages checked at n={n}, {res.failures - before} failures")
    return res


def general_cardinality(nmax: int = 4, samples: int = 300, seed: int = 1, **_) -> SuiteResult:
    """|W(L)| <= |L| on random ternary languages."""
    res = SuiteResult("general-cardinality")
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(1, nmax)
        L = random_language(rng, digits(2), n)
        res.record(len(winning_set(L)) <= len(L), f"{L!r}")
    res.lines.append(f"{samples} ternary languages checked, {res.failures} failures")
    return res


def oracle(nmax: int = 10, **_) -> SuiteResult:
    """Automaton-derived B_n(W(X)) against brute-force W(B_n(X)) on the zoo."""
    res = SuiteResult("oracle")
    for name, d in zoo_shifts().items():
        w = winning_language_dfa(d)
        before = res.failures
        for n in range(1, nmax + 1):
            res.record(enumerate_words(w, n) == winning_set(enumerate_words(d, n)), f"{name} n={n}")
        res.lines.append(f"{name}: n=1..{nmax}, {res.failures - before} mismatches")
    return res


def structural(nmax: int = 5, samples: int = 200, seed: int = 2, **_) -> SuiteResult:
    """Downward closure, monotonicity, factor closure, right extendability,
    the product law and the downward-closed fixed point."""
    res = SuiteResult("structural")
    rng = random.Random(seed)

    before = res.failures
    for _ in range(samples):
        n = rng.randint(1, nmax)
        alphabet = digits(rng.choice((1, 2)))
        L = random_language(rng, alphabet, n)
        W = winning_set(L).words
        res.record(downward_closure(W) == set(W), f"downward {L!r}")
        bigger = FiniteLanguage(alphabet, L.words | random_language(rng, alphabet, n).words)
        res.record(W <= winning_set(bigger).words, f"monotone {L!r}")
    res.lines.append(f"{samples} random languages: downward closure and monotonicity, "
                     f"{res.failures - before} failures")

    before = res.failures
    zoo = zoo_shifts()
    for name, d in zoo.items():
        w = winning_language_dfa(d)
        res.record(is_factor_closed_upto(w, 8), f"factor-closed {name}")
        res.record(is_right_extendable_upto(w, 8), f"right-extendable {name}")
        res.record(is_downward_closed(w), f"downward-closed automaton {name}")
        # the same on raw slices, through the brute-force solver
        slices = [winning_set(enumerate_words(d, n)).words for n in range(nmax + 2)]
        for n in range(1, nmax + 1):
            fc = all(a[1:] in slices[n - 1] and a[:-1] in slices[n - 1] for a in slices[n])
            re = all(a + (0,) in slices[n + 1] or a + (1,) in slices[n + 1] for a in slices[n])
            res.record(fc and re, f"slice closure {name} n={n}")
    res.lines.append(f"{len(zoo)} zoo shifts: factor closure, right extendability, downward closure, "
                     f"{res.failures - before} failures")

    before = res.failures
    binary = {k: v for k, v in zoo.items() if v.alphabet == BINARY}
    pairs = [("zeroone", "sftZ"), ("even", "goldenmean"), ("gap2", "periodic2"), ("even", "sftZ")]
    for a, b in pairs:
        prod = product_shift(binary[a], binary[b])
        expected = dfa_product(winning_language_dfa(binary[a]), winning_language_dfa(binary[b]))
        res.record(language_equal(winning_language_dfa(prod), expected), f"product {a} x {b}")
    res.lines.append(f"{len(pairs)} product pairs, {res.failures - before} failures")

    before = res.failures
    fixed = [build_expected("A*", AB), build_expected("A*+A*BA*", AB),
             from_language(FiniteLanguage(AB, ())), _golden_ab()]
    for d in fixed:
        res.record(language_equal(winning_language_dfa(d), d), "fixed point")
    res.lines.append(f"{len(fixed)} downward-closed languages as fixed points, "
                     f"{res.failures - before} failures")
    return res


def _golden_ab():
    # (A + AB)*-factors: golden mean renamed 0 -> A, 1 -> B
    return relabel(golden_mean(), AB, lambda c: c)


def sturmian(nmax: int = 10, **_) -> SuiteResult:
    """Fibonacci slices: W = {at most one B} and exactly one right-special word."""
    res = SuiteResult("sturmian")
    d = substitution_factor_dfa(FIBONACCI, nmax + 1)
    for n in range(1, nmax + 1):
        W = winning_set(substitution_factors(FIBONACCI, n)).words
        expected = {a for a in itertools.product((0, 1), repeat=n) if sum(a) <= 1}
        res.record(W == expected, f"W slice n={n}")
        res.record(right_special_count(d, n) == 1, f"right-special n={n}")
    res.lines.append(f"n=1..{nmax}: {res.failures} failures")
    return res


def bounds(nmax: int = 12, **_) -> SuiteResult:
    """Finite-n density bound on the zoo and applicability of the upper bound."""
    res = SuiteResult("bounds")
    for name, d in zoo_shifts().items():
        w = winning_language_dfa(d)
        report = lower_bound_check(d, w, nmax)
        res.record(report.ok, f"lower bound {name}")
        h_x = entropy_spectral(d).entropy_bits
        size = len(d.alphabet)
        ub = upper_bound_check(d, entropy_spectral(w).entropy_bits)
        expect_na = size < 2 or h_x <= math.log2(size - 1) + 1e-9
        res.record(ub.applicable != expect_na, f"applicability {name}")
        if ub.applicable:
            res.record(bool(ub.holds), f"upper bound {name}")
        res.lines.append(f"{name}: lower bound n<={nmax} {'ok' if report.ok else 'VIOLATED'}, "
                         f"upper bound {ub.message}")
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "binary-cardinality": binary_cardinality,
    "counting-game": counting_game,
    "general-cardinality": general_cardinality,
    "oracle": oracle,
    "structural": structural,
    "sturmian": sturmian,
    "bounds": bounds,
}
