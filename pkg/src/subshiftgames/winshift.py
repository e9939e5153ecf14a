"""Winning shifts of sofic shifts via alternating automata.

Given a complete DFA for a regular language L over S, the alternating
automaton over {A, B} has the same states; on A it branches existentially
and on B universally over the successors ``{delta(q, c) : c in S}``.  Reading
turn orders from right to left, the set of states from which the remaining
suffix is winning evolves deterministically, which gives a DFA with at most
``2^|Q|`` states for the reversed winning language.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .automata import (
    AB,
    Dfa,
    Nfa,
    dfa_complete,
    dfa_minimize,
    essential_language,
    language_equal,
    language_included,
    reverse,
)
from .langgames import as_order

EXISTENTIAL = "exists"
UNIVERSAL = "forall"


class TwoDirectionalMismatch(RuntimeError):
    """The graph-trim construction and the iterative check disagree."""


def _require_complete(d: Dfa) -> None:
    if not d.complete:
        raise ValueError("automaton must be complete; apply dfa_complete first")


@dataclass(frozen=True)
class AlternatingAutomaton:
    """Alternating automaton over {A, B} sharing its states with a source DFA.

    ``successors[q]`` is ``{delta(q, c) : c in S}``; letter A quantifies over it
    existentially, letter B universally.
    """

    n_states: int
    initial: int
    accepting: frozenset[int]
    successors: tuple[frozenset[int], ...]
    alphabet = AB

    def branch(self, q: int, letter: str) -> tuple[str, frozenset[int]]:
        mode = {"A": EXISTENTIAL, "B": UNIVERSAL}[letter]
        return mode, self.successors[q]

    def holds(self, q: int, word: Sequence[int] | str) -> bool:
        """Evaluate ``q(w)`` by the recursive rule, first letter first."""
        word = as_order(word)

        @lru_cache(maxsize=None)
        def ev(state: int, i: int) -> bool:
            if i == len(word):
                return state in self.accepting
            succ = self.successors[state]
            if word[i] == 0:
                return any(ev(r, i + 1) for r in succ)
            return all(ev(r, i + 1) for r in succ)

        return ev(q, 0)

    def accepts(self, word: Sequence[int] | str) -> bool:
        return self.holds(self.initial, word)


def alternating_from_dfa(d: Dfa) -> AlternatingAutomaton:
    _require_complete(d)
    succ = tuple(frozenset(row) for row in d.delta)
    return AlternatingAutomaton(d.n_states, d.initial, d.accepting, succ)


def winning_reversed_dfa(d: Dfa) -> Dfa:
    """DFA for the reversal of W(L(d)); states are subsets of the states of ``d``.

    The start subset is the accepting set.  Reading A maps P to the states
    with some successor in P, reading B to the states with all successors in
    P.  A subset accepts iff it contains the initial state of ``d``.  The
    empty subset is kept as an explicit sink.  A partial ``d`` is completed
    with a rejecting sink first.
    """
    d = dfa_complete(d)
    start = frozenset(d.accepting)
    index = {start: 0}
    order = [start]
    rows = []
    i = 0
    while i < len(order):
        P = order[i]
        pre_a = frozenset(q for q in range(d.n_states) if any(r in P for r in d.delta[q]))
        pre_b = frozenset(q for q in range(d.n_states) if all(r in P for r in d.delta[q]))
        row = []
        for target in (pre_a, pre_b):
            if target not in index:
                index[target] = len(order)
                order.append(target)
            row.append(index[target])
        rows.append(tuple(row))
        i += 1
    accepting = frozenset(j for j, P in enumerate(order) if d.initial in P)
    labels = tuple(
        "{" + ",".join(d.label(q) for q in sorted(P)) + "}" if P else "∅" for P in order
    )
    return Dfa(AB, len(order), 0, accepting, tuple(rows), labels)


def winning_language_dfa(d: Dfa) -> Dfa:
    """Minimal DFA of W(L(d)), the one-directional winning language."""
    return reverse(winning_reversed_dfa(d))


def _extension_step(d: Dfa) -> Dfa:
    """Minimal DFA of ``{w : a w b in L(d) for some letters a, b}``."""
    nfa = Nfa.from_dfa(d)
    nfa.initials = {r for r in (d.delta[d.initial] if d.initial is not None else ()) if r is not None}
    nfa.accepting = {
        q for q in range(d.n_states) if any(r is not None and r in d.accepting for r in d.delta[q])
    }
    return dfa_minimize(nfa.determinize())


def bi_extendable_fixpoint(d: Dfa, max_rounds: int | None = None) -> Dfa:
    """Iterate the two-sided extension step until the minimal DFA is stable."""
    cur = dfa_minimize(d)
    rounds = max_rounds if max_rounds is not None else cur.n_states + 2
    for _ in range(rounds + 1):
        nxt = _extension_step(cur)
        if nxt == cur:
            return cur
        cur = nxt
    raise TwoDirectionalMismatch(f"extension iteration did not stabilise in {rounds} rounds")


def two_directional_winning_shift(d: Dfa, verify: bool = True) -> Dfa:
    """Factor language of the two-directional winning shift of the shift presented by ``d``.

    The bi-infinite points are those all of whose factors are winning; their
    factor language is read off the essential part of the forward winning DFA.
    With ``verify`` the result is cross-checked by the extension fixpoint.
    """
    forward = winning_language_dfa(d)
    trimmed = essential_language(forward)
    if verify:
        other = bi_extendable_fixpoint(forward)
        if not language_equal(trimmed, other):
            raise TwoDirectionalMismatch("graph trim and extension fixpoint disagree")
    return trimmed


@dataclass(frozen=True)
class WinningShiftPresentation:
    reversed_dfa: Dfa
    forward_dfa: Dfa
    two_directional_dfa: Dfa | None = None


def winning_shift(d: Dfa, two_directional: bool = False) -> WinningShiftPresentation:
    rev = winning_reversed_dfa(d)
    fwd = reverse(rev)
    two = two_directional_winning_shift(d) if two_directional else None
    return WinningShiftPresentation(rev, fwd, two)


def lowering_image(d: Dfa) -> Dfa:
    """Minimal DFA of all orders lying coordinatewise below an accepted order."""
    if d.alphabet != AB:
        raise ValueError("lowering needs the alphabet A B")
    nfa = Nfa.from_dfa(d)
    for q, c, r in d.transitions():
        if c == 1:
            nfa.add(q, 0, r)
    return dfa_minimize(nfa.determinize())


def is_downward_closed(d: Dfa) -> bool:
    return language_included(lowering_image(d), d)


def mixing_witness_check(d: Dfa, a: Sequence[int] | str, b: Sequence[int] | str,
                         kmin: int, kmax: int) -> bool:
    """Whether ``a A^k b`` is accepted for every k in ``[kmin, kmax]``."""
    if kmin > kmax:
        raise ValueError("kmin must not exceed kmax")
    a, b = as_order(a), as_order(b)
    return all(d.accepts(a + (0,) * k + b) for k in range(kmin, kmax + 1))
