"""Finite word games solved by backward induction.

A turn order is a string over ``"AB"`` (or a tuple of 0/1 with ``A = 0``).
Positions outside the prefix tree of the target language are losing for A,
so the induction over the tree of L covers the whole tree of S^n: every
missing branch is the shared losing node.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .automata import AB, Alphabet, Dfa, FiniteLanguage, TrieNode, Word

#: Default enumeration cap, in bits: ``n * log2 |S|`` may not exceed it.
DEFAULT_CAP_BITS = 24.0


class CapExceeded(ValueError):
    pass


def check_cap(n: int, alphabet_size: int, cap_bits: float = DEFAULT_CAP_BITS) -> None:
    if n * math.log2(max(alphabet_size, 1)) > cap_bits + 1e-9:
        raise CapExceeded(f"n={n} over {alphabet_size} symbols exceeds the cap of {cap_bits} bits")


def as_order(a: str | Sequence[int]) -> tuple[int, ...]:
    if isinstance(a, str):
        try:
            return tuple("AB".index(ch) for ch in a)
        except ValueError:
            raise ValueError(f"turn order {a!r} must be over A and B") from None
    order = tuple(a)
    if any(x not in (0, 1) for x in order):
        raise ValueError(f"turn order {a!r} must be over A and B")
    return order


def order_str(a: Sequence[int]) -> str:
    return "".join("AB"[x] for x in a)


@dataclass(frozen=True)
class Strategy:
    """Moves of one player, defined on the prefixes reachable under it."""

    player: str
    moves: Mapping[Word, int] = field(default_factory=dict)

    def __call__(self, prefix: Sequence[int]) -> int:
        return self.moves[tuple(prefix)]

    def __contains__(self, prefix) -> bool:
        return tuple(prefix) in self.moves


@dataclass(frozen=True)
class GameResult:
    winner: str
    witness: Strategy
    order: str


def _slice_root(L: FiniteLanguage, n: int) -> TrieNode:
    if all(len(w) == n for w in L.words):
        return L.trie
    return L.slice(n).trie


def solve_game(L: FiniteLanguage, a: str | Sequence[int]) -> GameResult:
    """Winner of the ordered game on L with turn order ``a`` and a witness strategy.

    Ties between winning moves are broken by the smallest symbol.
    """
    order = as_order(a)
    n = len(order)
    k = len(L.alphabet)
    root = _slice_root(L, n)
    memo: dict[int, bool] = {}

    def wins(node: TrieNode | None, i: int) -> bool:
        # True iff A wins from this position.
        if node is None:
            return False
        if i == n:
            return node.terminal
        key = id(node)
        if key not in memo:
            kids = [node.children.get(c) for c in range(k)]
            if order[i] == 0:
                memo[key] = any(wins(ch, i + 1) for ch in kids)
            else:
                memo[key] = all(wins(ch, i + 1) for ch in kids)
        return memo[key]

    a_wins = wins(root, 0)
    winner = 0 if a_wins else 1
    moves: dict[Word, int] = {}

    def extract(node: TrieNode | None, prefix: Word) -> None:
        i = len(prefix)
        if i == n:
            return
        kids = [None if node is None else node.children.get(c) for c in range(k)]
        if order[i] == winner:
            for c in range(k):
                if wins(kids[c], i + 1) == a_wins:
                    moves[prefix] = c
                    extract(kids[c], prefix + (c,))
                    return
            raise AssertionError("no winning move at a winning position")
        for c in range(k):
            extract(kids[c], prefix + (c,))

    extract(root, ())
    player = "AB"[winner]
    return GameResult(player, Strategy(player, moves), order_str(order))


def verify_witness(L: FiniteLanguage, result: GameResult) -> bool:
    """Replay the witness against every sequence of opposing replies."""
    order = as_order(result.order)
    n, k = len(order), len(L.alphabet)
    me = "AB".index(result.winner)
    target = L.slice(n).words

    def walk(prefix: Word) -> bool:
        i = len(prefix)
        if i == n:
            return (prefix in target) == (me == 0)
        if order[i] == me:
            if prefix not in result.witness:
                return False
            return walk(prefix + (result.witness(prefix),))
        return all(walk(prefix + (c,)) for c in range(k))

    return walk(())


def _winning_orders(root: TrieNode, n: int, k: int) -> frozenset[Word]:
    """Set of winning suffix orders at each node, combined bottom-up."""

    def wins(node: TrieNode, depth: int) -> frozenset[Word]:
        if depth == n:
            return frozenset([()]) if node.terminal else frozenset()
        kids = [wins(ch, depth + 1) for ch in node.children.values()]
        union = frozenset().union(*kids)
        if len(kids) == k:
            inter = frozenset.intersection(*kids)
        else:
            inter = frozenset()
        return frozenset((0,) + s for s in union) | frozenset((1,) + s for s in inter)

    return wins(root, 0)


def winning_set(L: FiniteLanguage, cap_bits: float | None = None) -> FiniteLanguage:
    """All turn orders for which A wins, per length class of L, over ``A B``."""
    k = len(L.alphabet)
    result: set[Word] = set()
    for n in L.lengths():
        if cap_bits is not None:
            check_cap(n, k, cap_bits)
        result |= _winning_orders(_slice_root(L, n), n, k)
    return FiniteLanguage(AB, result)


def counting_alphabet(size: int) -> Alphabet:
    return Alphabet(tuple(str(i) for i in range(1, size + 1)))


def counting_membership(L: FiniteLanguage, sizes: Sequence[int]) -> bool:
    """Whether A wins the counting game where she offers sets of the given sizes."""
    sizes = tuple(sizes)
    n, k = len(sizes), len(L.alphabet)
    if any(not 1 <= s <= k for s in sizes):
        raise ValueError(f"set sizes must lie in [1, {k}]")
    root = _slice_root(L, n)

    def wins(node: TrieNode, i: int) -> bool:
        if i == n:
            return node.terminal
        good = sum(1 for ch in node.children.values() if wins(ch, i + 1))
        return good >= sizes[i]

    return wins(root, 0)


def counting_winning_set(L: FiniteLanguage, cap_bits: float = DEFAULT_CAP_BITS) -> FiniteLanguage:
    """All size sequences A wins with, over the alphabet ``1 .. |S|``.

    Symbol index ``j`` stands for set size ``j + 1``.
    """
    k = len(L.alphabet)
    result: set[Word] = set()
    for n in L.lengths():
        check_cap(n, k, cap_bits)

        def wins(node: TrieNode, depth: int) -> set[Word]:
            if depth == n:
                return {()} if node.terminal else set()
            # suffix order -> number of children from which A wins it
            tally: dict[Word, int] = {}
            for ch in node.children.values():
                for s in wins(ch, depth + 1):
                    tally[s] = tally.get(s, 0) + 1
            return {(j,) + s for s, t in tally.items() for j in range(t)}

        result |= wins(_slice_root(L, n), 0)
    return FiniteLanguage(counting_alphabet(k), result)


def right_special_count(d: Dfa, n: int) -> int:
    """Number of length-n words w with both w0 and w1 accepted."""
    if len(d.alphabet) != 2:
        raise ValueError("right-special counting needs a binary alphabet")
    if d.initial is None:
        return 0
    vec = {d.initial: 1}
    for _ in range(n):
        nxt: dict[int, int] = {}
        for q, m in vec.items():
            for r in d.delta[q]:
                if r is not None:
                    nxt[r] = nxt.get(r, 0) + m
        vec = nxt

    def special(q: int) -> bool:
        if q not in d.accepting:
            return False
        return all(r is not None and r in d.accepting for r in d.delta[q])

    return sum(m for q, m in vec.items() if special(q))


def downward_closure(orders: Iterable[Word]) -> set[Word]:
    """All orders coordinatewise below some given order (``A < B``)."""
    out: set[Word] = set()
    for a in orders:
        bs = [i for i, x in enumerate(a) if x == 1]
        for r in range(len(bs) + 1):
            for keep in itertools.combinations(bs, r):
                out.add(tuple(1 if i in keep else 0 for i in range(len(a))))
    return out


# ---------------------------------------------------------------------------
# Finite-language text format


def format_language(L: FiniteLanguage) -> str:
    lines = ["alphabet: " + " ".join(L.alphabet)]
    lines.extend(s if s else "λ" for s in L.strings())
    return "\n".join(lines) + "\n"


def parse_language(text: str) -> FiniteLanguage:
    rows = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or not rows[0].startswith("alphabet:"):
        raise ValueError("first line must be 'alphabet: ...'")
    alphabet = Alphabet(tuple(rows[0].partition(":")[2].split()))
    return FiniteLanguage(alphabet, (alphabet.parse_word(r) for r in rows[1:]))
