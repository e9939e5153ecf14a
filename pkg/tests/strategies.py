"""Hypothesis strategies shared by the test modules."""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from subshiftgames.automata import Alphabet, Dfa, FiniteLanguage


@st.composite
def dfa_tables(draw, alphabet: str = "01", max_states: int = 5):
    """A random partial DFA together with its plain-table description."""
    n = draw(st.integers(1, max_states))
    delta = {}
    for q in range(n):
        for s in alphabet:
            r = draw(st.one_of(st.none(), st.integers(0, n - 1)))
            if r is not None:
                delta[(q, s)] = r
    accepting = frozenset(draw(st.sets(st.integers(0, n - 1))))
    d = Dfa.from_transitions(alphabet, n, 0, accepting, [(q, s, r) for (q, s), r in delta.items()])
    return d, (alphabet, 0, accepting, delta)


@st.composite
def uniform_languages(draw, alphabet: str = "01", min_n: int = 1, max_n: int = 4):
    """A random language of words of one length, as (FiniteLanguage, set of strings, n)."""
    n = draw(st.integers(min_n, max_n))
    pool = ["".join(p) for p in itertools.product(alphabet, repeat=n)]
    chosen = draw(st.sets(st.sampled_from(pool)))
    return FiniteLanguage.from_strings(Alphabet.of(alphabet), chosen), set(chosen), n
