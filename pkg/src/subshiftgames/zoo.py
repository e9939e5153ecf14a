"""Constructors for concrete shifts: SFTs, named examples, extensions, substitutions.

Every constructor returns a minimal complete DFA of the factor language of a
two-sided subshift (the words that extend to bi-infinite points).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .automata import (
    BINARY,
    Alphabet,
    Dfa,
    FiniteLanguage,
    Word,
    digits,
    dfa_minimize,
    essential_language,
    factor_closure,
    from_language,
    path_language,
    relabel,
)
from .regex import build_expected


def sft_from_forbidden(alphabet: Alphabet | str, forbidden: FiniteLanguage | Iterable[str]) -> Dfa:
    """Factor language of the SFT avoiding ``forbidden``.

    Runs an Aho-Corasick matcher over the forbidden words; the states where no
    forbidden word has been completed carry the avoiding words, and the
    essential part of that graph carries the bi-extendable ones.
    """
    if isinstance(alphabet, str):
        alphabet = Alphabet.of(alphabet)
    if not isinstance(forbidden, FiniteLanguage):
        forbidden = FiniteLanguage.from_strings(alphabet, forbidden)
    elif forbidden.alphabet != alphabet:
        raise ValueError("forbidden words use a different alphabet")
    k = len(alphabet)

    goto: list[dict[int, int]] = [{}]
    hit = [False]
    for w in forbidden.words:
        q = 0
        for c in w:
            if c not in goto[q]:
                goto.append({})
                hit.append(False)
                goto[q][c] = len(goto) - 1
            q = goto[q][c]
        hit[q] = True

    fail = [0] * len(goto)
    delta = [[0] * k for _ in goto]
    queue: deque[int] = deque()
    for c in range(k):
        r = goto[0].get(c)
        if r is None:
            delta[0][c] = 0
        else:
            delta[0][c] = r
            queue.append(r)
    while queue:
        q = queue.popleft()
        hit[q] = hit[q] or hit[fail[q]]
        for c in range(k):
            r = goto[q].get(c)
            if r is None:
                delta[q][c] = delta[fail[q]][c]
            else:
                fail[r] = delta[fail[q]][c]
                delta[q][c] = r
                queue.append(r)

    if hit[0]:
        return dfa_minimize(Dfa.empty(alphabet))
    alive = [q for q in range(len(goto)) if not hit[q]]
    index = {q: i for i, q in enumerate(alive)}
    rows = tuple(tuple(index.get(delta[q][c]) for c in range(k)) for q in alive)
    matcher = Dfa(alphabet, len(alive), 0, frozenset(range(len(alive))), rows)
    return essential_language(matcher)


def even_shift_fig() -> Dfa:
    """The four-state even-shift DFA with states a, b, c and the sink d."""
    return Dfa.from_transitions(
        "01", 4, 0, [0, 1, 2],
        [(0, "0", 0), (0, "1", 1), (1, "0", 2), (1, "1", 1),
         (2, "0", 1), (2, "1", 3), (3, "0", 3), (3, "1", 3)],
        labels="abcd",
    )


def golden_mean() -> Dfa:
    return sft_from_forbidden(BINARY, ["11"])


def gap_shift(m: int) -> Dfa:
    """Binary shift forbidding ``1 0^i 1`` for all ``i < m``."""
    if m < 1:
        raise ValueError("gap parameter must be at least 1")
    return sft_from_forbidden(BINARY, ["1" + "0" * i + "1" for i in range(m)])


def full_shift(k: int) -> Dfa:
    """Full shift on ``{0, ..., k}``."""
    alphabet = digits(k)
    return Dfa(alphabet, 1, 0, frozenset([0]), ((0,) * len(alphabet),))


def periodic_shift(p: int) -> Dfa:
    """Orbit of the periodic point ``(0^(p-1) 1)^∞``; for p = 1 the point ``0^∞``."""
    if p < 1:
        raise ValueError("period must be at least 1")
    word = "0" if p == 1 else "0" * (p - 1) + "1"
    cycle = Dfa.from_transitions(
        BINARY, p, 0, range(p), [(i, word[i], (i + 1) % p) for i in range(p)]
    )
    return path_language(cycle)


def sofic_y() -> Dfa:
    """Factors of ``0*(10*20*)*``: nonzero symbols alternate 1, 2, 1, 2, ..."""
    graph = Dfa.from_transitions(
        "012", 2, 0, [0, 1], [(0, "0", 0), (0, "1", 1), (1, "0", 1), (1, "2", 0)]
    )
    return essential_language(graph)


def sft_z() -> Dfa:
    """Factors of ``(01 + 0001)*``."""
    return factor_closure(build_expected("(01+0001)*", BINARY))


NAMED = ("even", "goldenmean", "zeroone", "soficY", "sftZ", "gap", "full", "periodic")


def named_shift(name: str, *params: int) -> Dfa:
    """Presentation of a named example; ``gap``, ``full`` and ``periodic`` take one integer."""
    simple = {
        "even": even_shift_fig,
        "goldenmean": golden_mean,
        "zeroone": lambda: sft_from_forbidden(BINARY, ["10"]),
        "soficY": sofic_y,
        "sftZ": sft_z,
    }
    if name in simple:
        if params:
            raise ValueError(f"{name} takes no parameters")
        return simple[name]()
    param = {"gap": gap_shift, "full": full_shift, "periodic": periodic_shift}
    if name in param:
        if len(params) != 1:
            raise ValueError(f"{name} takes exactly one integer parameter")
        return param[name](int(params[0]))
    raise KeyError(f"unknown shift {name!r}; known: {', '.join(NAMED)}")


def ss_forbidden(size: int) -> Dfa:
    """SFT on ``size`` symbols forbidding every square ``ss`` of a letter."""
    alphabet = digits(size - 1)
    return sft_from_forbidden(alphabet, [s + s for s in alphabet])


def extend(d: Dfa, k: int) -> Dfa:
    """Presentation of the extension to ``{0, ..., k}``: each 1-move is copied for 1..k."""
    if d.alphabet != BINARY:
        raise ValueError("extension needs a presentation over 0 1")
    if k < 1:
        raise ValueError("k must be at least 1")
    rows = tuple((row[0],) + (row[1],) * k for row in d.delta)
    return Dfa(digits(k), d.n_states, d.initial, d.accepting, rows, d.labels)


def counting_projection(d: Dfa) -> Dfa:
    """Image under the map sending the top symbol k to 1 and everything else to 0."""
    top = len(d.alphabet) - 1
    return relabel(d, BINARY, lambda c: 1 if c == top else 0)


def product_shift(d1: Dfa, d2: Dfa) -> Dfa:
    """Presentation of X x Y over the alphabet of symbol pairs."""
    joiner = "" if d1.alphabet.single_char and d2.alphabet.single_char else ","
    pairs = Alphabet(tuple(s + joiner + r for s in d1.alphabet for r in d2.alphabet))
    if d1.initial is None or d2.initial is None:
        return dfa_minimize(Dfa.empty(pairs))
    index: dict[tuple[int, int], int] = {(d1.initial, d2.initial): 0}
    order = [(d1.initial, d2.initial)]
    rows = []
    i = 0
    while i < len(order):
        p, q = order[i]
        row: list[int | None] = []
        for c1, r1 in enumerate(d1.delta[p]):
            for c2, r2 in enumerate(d2.delta[q]):
                if r1 is None or r2 is None:
                    row.append(None)
                    continue
                if (r1, r2) not in index:
                    index[(r1, r2)] = len(order)
                    order.append((r1, r2))
                row.append(index[(r1, r2)])
        rows.append(tuple(row))
        i += 1
    acc = frozenset(j for j, (p, q) in enumerate(order) if p in d1.accepting and q in d2.accepting)
    return dfa_minimize(Dfa(pairs, len(order), 0, acc, tuple(rows)))


def zoo_shifts() -> dict[str, Dfa]:
    """The example corpus used by the verification suites."""
    shifts = {
        "even": named_shift("even"),
        "goldenmean": named_shift("goldenmean"),
        "zeroone": named_shift("zeroone"),
        "soficY": named_shift("soficY"),
        "sftZ": named_shift("sftZ"),
        "full1": full_shift(1),
        "full2": full_shift(2),
    }
    for m in (2, 3, 4):
        shifts[f"gap{m}"] = gap_shift(m)
    for p in (1, 2, 3):
        shifts[f"periodic{p}"] = periodic_shift(p)
    for k in (2, 3):
        shifts[f"goldext{k}"] = extend(golden_mean(), k)
    shifts["ss3"] = ss_forbidden(3)
    return shifts


# ---------------------------------------------------------------------------
# Substitutions


@dataclass(frozen=True)
class Substitution:
    alphabet: Alphabet
    images: tuple[Word, ...]

    def __post_init__(self):
        if len(self.images) != len(self.alphabet):
            raise ValueError("one image per symbol required")
        k = len(self.alphabet)
        for img in self.images:
            if not img:
                raise ValueError("images must be nonempty")
            if any(not 0 <= c < k for c in img):
                raise ValueError("image symbol outside the alphabet")

    @classmethod
    def from_strings(cls, alphabet: Alphabet | str, images: Mapping[str, str]) -> "Substitution":
        if isinstance(alphabet, str):
            alphabet = Alphabet.of(alphabet)
        return cls(alphabet, tuple(alphabet.parse_word(images[s]) for s in alphabet))

    def apply(self, word: Sequence[int]) -> Word:
        return tuple(c for s in word for c in self.images[s])

    def iterate(self, symbol: int, times: int) -> Word:
        w: Word = (symbol,)
        for _ in range(times):
            w = self.apply(w)
        return w

    @property
    def uniform(self) -> bool:
        return len({len(img) for img in self.images}) == 1

    @property
    def primitive(self) -> bool:
        k = len(self.alphabet)
        reach = [set(img) for img in self.images]
        cur = [set(r) for r in reach]
        for _ in range((k - 1) ** 2 + 1):
            if all(len(c) == k for c in cur):
                return True
            cur = [set().union(*(reach[t] for t in c)) for c in cur]
        return all(len(c) == k for c in cur)

    @property
    def growing(self) -> bool:
        k = len(self.alphabet)
        lengths = [1] * k
        history = []
        for _ in range(2 * k + 1):
            history.append(lengths)
            lengths = [sum(lengths[c] for c in img) for img in self.images]
        return any(history[-1][s] > history[k][s] for s in range(k))


FIBONACCI = Substitution.from_strings("01", {"0": "01", "1": "0"})
THUE_MORSE = Substitution.from_strings("01", {"0": "01", "1": "10"})


def _factors(word: Word, n: int) -> set[Word]:
    return {word[i:i + n] for i in range(len(word) - n + 1)}


def substitution_factors(t: Substitution, n: int) -> FiniteLanguage:
    """Length-n factors of the substitution language.

    Iterates t on every symbol, accumulating factors, until two consecutive
    iterates give the same set and every growing iterate is at least n long.
    """
    if n < 1:
        raise ValueError("length must be positive")
    if not t.growing:
        raise ValueError("substitution does not grow")
    k = len(t.alphabet)
    words = [(s,) for s in range(k)]
    seen: set[Word] = set().union(*(_factors(w, n) for w in words))
    prev_len = [1] * k
    while True:
        words = [t.apply(w) for w in words]
        new = seen.union(*(_factors(w, n) for w in words))
        long_enough = all(len(w) >= n or len(w) == prev_len[s] for s, w in enumerate(words))
        prev_len = [len(w) for w in words]
        if new == seen and long_enough:
            return FiniteLanguage(t.alphabet, seen)
        seen = new


def substitution_factor_dfa(t: Substitution, n_max: int) -> Dfa:
    """Automaton of all factors of length at most ``n_max``; factor-closed."""
    words: set[Word] = set()
    for n in range(1, n_max + 1):
        words |= substitution_factors(t, n).words
    words.add(())
    return dfa_minimize(from_language(FiniteLanguage(t.alphabet, words)))
