"""Finite automata and finite languages over small ordered alphabets.

Words are tuples of symbol indices into an :class:`Alphabet`.  A :class:`Dfa`
may have a partial transition function; completion is explicit.  All objects
are immutable after construction.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator, Mapping, Sequence

Word = tuple[int, ...]


class AlphabetMismatch(ValueError):
    pass


class DfaFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(str(s) for s in self.symbols))
        if not self.symbols:
            raise ValueError("alphabet must be nonempty")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"duplicate symbols in alphabet {self.symbols}")
        for s in self.symbols:
            if not s or any(ch.isspace() for ch in s) or s.startswith("#"):
                raise ValueError(f"bad symbol {s!r}")

    @classmethod
    def of(cls, symbols: Iterable[str] | str) -> "Alphabet":
        if isinstance(symbols, str):
            symbols = symbols.split() if " " in symbols else list(symbols)
        return cls(tuple(symbols))

    @cached_property
    def _index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.symbols)}

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise ValueError(f"symbol {symbol!r} not in alphabet {self.symbols}") from None

    @property
    def single_char(self) -> bool:
        return all(len(s) == 1 for s in self.symbols)

    def parse_word(self, text: str) -> Word:
        """Parse ``"0110"`` (single-character alphabets) or ``"10 2 3"``."""
        text = text.strip()
        if text in ("", "λ", "-"):
            return ()
        if " " in text or not self.single_char:
            return tuple(self.index(tok) for tok in text.split())
        return tuple(self.index(ch) for ch in text)

    def format_word(self, word: Sequence[int]) -> str:
        sep = "" if self.single_char else " "
        return sep.join(self.symbols[c] for c in word)


AB = Alphabet(("A", "B"))
BINARY = Alphabet(("0", "1"))


def digits(k: int) -> Alphabet:
    """The alphabet ``{0, ..., k}``."""
    return Alphabet(tuple(str(i) for i in range(k + 1)))


# ---------------------------------------------------------------------------
# Finite languages


class TrieNode:
    __slots__ = ("children", "terminal")

    def __init__(self):
        self.children: dict[int, TrieNode] = {}
        self.terminal = False


class FiniteLanguage:
    """A finite set of words, with a prefix tree built on first use."""

    def __init__(self, alphabet: Alphabet, words: Iterable[Sequence[int]] = ()):
        self.alphabet = alphabet
        k = len(alphabet)
        ws = frozenset(tuple(w) for w in words)
        for w in ws:
            if any(not 0 <= c < k for c in w):
                raise ValueError(f"word {w} has symbols outside the alphabet")
        self.words = ws

    @classmethod
    def from_strings(cls, alphabet: Alphabet | str, words: Iterable[str]) -> "FiniteLanguage":
        if isinstance(alphabet, str):
            alphabet = Alphabet.of(alphabet)
        return cls(alphabet, (alphabet.parse_word(w) for w in words))

    @cached_property
    def trie(self) -> TrieNode:
        root = TrieNode()
        for w in self.words:
            node = root
            for c in w:
                node = node.children.setdefault(c, TrieNode())
            node.terminal = True
        return root

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word) -> bool:
        if isinstance(word, str):
            word = self.alphabet.parse_word(word)
        node = self.trie
        for c in word:
            node = node.children.get(c)
            if node is None:
                return False
        return node.terminal

    def __iter__(self) -> Iterator[Word]:
        return iter(sorted(self.words, key=lambda w: (len(w), w)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteLanguage):
            return NotImplemented
        return self.alphabet == other.alphabet and self.words == other.words

    def __hash__(self) -> int:
        return hash((self.alphabet, self.words))

    def __repr__(self) -> str:
        shown = self.strings()
        if len(shown) > 8:
            shown = shown[:8] + ["..."]
        return f"FiniteLanguage({' '.join(self.alphabet)}: {{{', '.join(shown)}}})"

    def strings(self) -> list[str]:
        return [self.alphabet.format_word(w) for w in self]

    def lengths(self) -> list[int]:
        return sorted({len(w) for w in self.words})

    def slice(self, n: int) -> "FiniteLanguage":
        return FiniteLanguage(self.alphabet, (w for w in self.words if len(w) == n))

    def issubset(self, other: "FiniteLanguage") -> bool:
        return self.words <= other.words

    def reversed(self) -> "FiniteLanguage":
        return FiniteLanguage(self.alphabet, (w[::-1] for w in self.words))


# ---------------------------------------------------------------------------
# Deterministic automata


@dataclass(frozen=True)
class Dfa:
    """Deterministic automaton; ``delta[q][c]`` is a state id or ``None``.

    The automaton with zero states (``initial is None``) accepts nothing.
    ``labels`` are display names only and take no part in equality.
    """

    alphabet: Alphabet
    n_states: int
    initial: int | None
    accepting: frozenset[int]
    delta: tuple[tuple[int | None, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        n, k = self.n_states, len(self.alphabet)
        if n == 0:
            if self.initial is not None or self.accepting or self.delta:
                raise ValueError("empty automaton must have no initial state and no transitions")
            return
        if self.initial is None or not 0 <= self.initial < n:
            raise ValueError(f"initial state {self.initial} out of range")
        if any(not 0 <= q < n for q in self.accepting):
            raise ValueError("accepting state out of range")
        if len(self.delta) != n or any(len(row) != k for row in self.delta):
            raise ValueError("transition table has the wrong shape")
        for row in self.delta:
            for r in row:
                if r is not None and not 0 <= r < n:
                    raise ValueError(f"transition target {r} out of range")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("one label per state required")

    @classmethod
    def empty(cls, alphabet: Alphabet) -> "Dfa":
        return cls(alphabet, 0, None, frozenset(), ())

    @classmethod
    def from_transitions(
        cls,
        alphabet: Alphabet | str,
        n_states: int,
        initial: int,
        accepting: Iterable[int],
        transitions: Iterable[tuple[int, str, int]],
        labels: Sequence[str] | None = None,
    ) -> "Dfa":
        if isinstance(alphabet, str):
            alphabet = Alphabet.of(alphabet)
        table: list[list[int | None]] = [[None] * len(alphabet) for _ in range(n_states)]
        for q, sym, r in transitions:
            c = alphabet.index(sym)
            if table[q][c] is not None:
                raise ValueError(f"duplicate transition from {q} on {sym}")
            table[q][c] = r
        return cls(alphabet, n_states, initial, frozenset(accepting), tuple(map(tuple, table)),
                   tuple(labels) if labels is not None else None)

    @property
    def complete(self) -> bool:
        return self.n_states > 0 and all(r is not None for row in self.delta for r in row)

    @property
    def is_empty_automaton(self) -> bool:
        return self.n_states == 0

    def transitions(self) -> Iterator[tuple[int, int, int]]:
        for q, row in enumerate(self.delta):
            for c, r in enumerate(row):
                if r is not None:
                    yield q, c, r

    def run(self, word: Sequence[int], start: int | None = None) -> int | None:
        q = self.initial if start is None else start
        for c in word:
            if q is None:
                return None
            q = self.delta[q][c]
        return q

    def accepts(self, word: Sequence[int] | str) -> bool:
        if isinstance(word, str):
            word = self.alphabet.parse_word(word)
        q = self.run(word)
        return q is not None and q in self.accepting

    def label(self, q: int) -> str:
        return self.labels[q] if self.labels is not None else str(q)


# ---------------------------------------------------------------------------
# Nondeterministic helpers (internal building blocks)


@dataclass
class Nfa:
    """Nondeterministic automaton with epsilon moves; used only as an intermediate."""

    alphabet: Alphabet
    n_states: int = 0
    initials: set[int] = field(default_factory=set)
    accepting: set[int] = field(default_factory=set)
    moves: dict[tuple[int, int], set[int]] = field(default_factory=dict)
    eps: dict[int, set[int]] = field(default_factory=dict)

    def new_state(self) -> int:
        self.n_states += 1
        return self.n_states - 1

    def add(self, q: int, c: int, r: int) -> None:
        self.moves.setdefault((q, c), set()).add(r)

    def add_eps(self, q: int, r: int) -> None:
        self.eps.setdefault(q, set()).add(r)

    def closure(self, states: Iterable[int]) -> frozenset[int]:
        seen = set(states)
        stack = list(seen)
        while stack:
            q = stack.pop()
            for r in self.eps.get(q, ()):
                if r not in seen:
                    seen.add(r)
                    stack.append(r)
        return frozenset(seen)

    @classmethod
    def from_dfa(cls, d: Dfa) -> "Nfa":
        nfa = cls(d.alphabet, d.n_states)
        if d.initial is not None:
            nfa.initials.add(d.initial)
        nfa.accepting = set(d.accepting)
        for q, c, r in d.transitions():
            nfa.add(q, c, r)
        return nfa

    def reversed(self) -> "Nfa":
        rev = Nfa(self.alphabet, self.n_states, set(self.accepting), set(self.initials))
        for (q, c), rs in self.moves.items():
            for r in rs:
                rev.add(r, c, q)
        for q, rs in self.eps.items():
            for r in rs:
                rev.add_eps(r, q)
        return rev

    def determinize(self, *, keep_empty: bool = False) -> Dfa:
        """Subset construction over reachable subsets only."""
        k = len(self.alphabet)
        start = self.closure(self.initials)
        if not start and not keep_empty:
            return Dfa.empty(self.alphabet)
        index = {start: 0}
        order = [start]
        rows: list[list[int | None]] = []
        queue = deque([start])
        while queue:
            subset = queue.popleft()
            row: list[int | None] = []
            for c in range(k):
                nxt = set()
                for q in subset:
                    nxt.update(self.moves.get((q, c), ()))
                target = self.closure(nxt)
                if not target and not keep_empty:
                    row.append(None)
                    continue
                if target not in index:
                    index[target] = len(order)
                    order.append(target)
                    queue.append(target)
                row.append(index[target])
            rows.append(row)
        accepting = {i for i, s in enumerate(order) if s & self.accepting}
        labels = tuple("{" + ",".join(map(str, sorted(s))) + "}" for s in order)
        return Dfa(self.alphabet, len(order), 0, frozenset(accepting), tuple(map(tuple, rows)), labels)


# ---------------------------------------------------------------------------
# Core operations


def dfa_complete(d: Dfa) -> Dfa:
    """Return a total automaton; missing moves go to a fresh rejecting sink."""
    if d.complete:
        return d
    k = len(d.alphabet)
    if d.n_states == 0:
        return Dfa(d.alphabet, 1, 0, frozenset(), ((0,) * k,), ("sink",))
    sink = d.n_states
    rows = [tuple(sink if r is None else r for r in row) for row in d.delta]
    rows.append((sink,) * k)
    labels = None if d.labels is None else d.labels + ("sink",)
    return Dfa(d.alphabet, d.n_states + 1, d.initial, d.accepting, tuple(rows), labels)


def reachable_states(d: Dfa) -> set[int]:
    if d.initial is None:
        return set()
    seen = {d.initial}
    stack = [d.initial]
    while stack:
        q = stack.pop()
        for r in d.delta[q]:
            if r is not None and r not in seen:
                seen.add(r)
                stack.append(r)
    return seen


def coreachable_states(d: Dfa) -> set[int]:
    preds: dict[int, set[int]] = {}
    for q, _, r in d.transitions():
        preds.setdefault(r, set()).add(q)
    seen = set(d.accepting)
    stack = list(seen)
    while stack:
        r = stack.pop()
        for q in preds.get(r, ()):
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


def canonical(d: Dfa) -> Dfa:
    """Renumber reachable states breadth-first from the initial state."""
    if d.initial is None:
        return d
    order = [d.initial]
    index = {d.initial: 0}
    i = 0
    while i < len(order):
        for r in d.delta[order[i]]:
            if r is not None and r not in index:
                index[r] = len(order)
                order.append(r)
        i += 1
    rows = tuple(tuple(None if r is None else index[r] for r in d.delta[q]) for q in order)
    accepting = frozenset(index[q] for q in order if q in d.accepting)
    labels = None if d.labels is None else tuple(d.labels[q] for q in order)
    return Dfa(d.alphabet, len(order), 0, accepting, rows, labels)


def _hopcroft(d: Dfa) -> list[int]:
    """Block id of each state of a complete DFA (Hopcroft's refinement)."""
    n, k = d.n_states, len(d.alphabet)
    inverse: list[list[list[int]]] = [[[] for _ in range(n)] for _ in range(k)]
    for q, c, r in d.transitions():
        inverse[c][r].append(q)

    finals = set(d.accepting)
    blocks = [b for b in (finals, set(range(n)) - finals) if b]
    block_of = [0] * n
    for i, b in enumerate(blocks):
        for q in b:
            block_of[q] = i
    work = {min(range(len(blocks)), key=lambda i: len(blocks[i]))} if len(blocks) == 2 else set()
    while work:
        splitter = set(blocks[work.pop()])
        for c in range(k):
            preds = {p for r in splitter for p in inverse[c][r]}
            if not preds:
                continue
            touched: dict[int, set[int]] = {}
            for p in preds:
                touched.setdefault(block_of[p], set()).add(p)
            for bi, inside in touched.items():
                block = blocks[bi]
                if len(inside) == len(block):
                    continue
                outside = block - inside
                blocks[bi] = inside
                blocks.append(outside)
                new = len(blocks) - 1
                for q in outside:
                    block_of[q] = new
                if bi in work:
                    work.add(new)
                else:
                    work.add(bi if len(inside) <= len(outside) else new)
    return block_of


def dfa_minimize(d: Dfa) -> Dfa:
    """Minimal complete DFA for L(d), canonically numbered."""
    d = canonical(dfa_complete(d))
    block_of = _hopcroft(d)
    index: dict[int, int] = {}
    for q in range(d.n_states):
        index.setdefault(block_of[q], len(index))
    reps: dict[int, int] = {}
    for q in range(d.n_states):
        reps.setdefault(index[block_of[q]], q)
    rows = tuple(
        tuple(index[block_of[r]] for r in d.delta[reps[b]]) for b in range(len(index))
    )
    accepting = frozenset(index[block_of[q]] for q in d.accepting)
    return canonical(Dfa(d.alphabet, len(index), index[block_of[d.initial]], accepting, rows))


def _same_alphabet(d1: Dfa, d2: Dfa) -> None:
    if d1.alphabet != d2.alphabet:
        raise AlphabetMismatch(f"{d1.alphabet.symbols} != {d2.alphabet.symbols}")


def dfa_product(d1: Dfa, d2: Dfa, mode: str = "intersect") -> Dfa:
    """Reachable product automaton, accepting by conjunction or disjunction."""
    _same_alphabet(d1, d2)
    if mode not in ("intersect", "union"):
        raise ValueError(f"unknown product mode {mode!r}")
    if mode == "union":
        d1, d2 = dfa_complete(d1), dfa_complete(d2)
    if d1.initial is None or d2.initial is None:
        return Dfa.empty(d1.alphabet)
    k = len(d1.alphabet)
    start = (d1.initial, d2.initial)
    index = {start: 0}
    order = [start]
    rows = []
    i = 0
    while i < len(order):
        p, q = order[i]
        row: list[int | None] = []
        for c in range(k):
            r1, r2 = d1.delta[p][c], d2.delta[q][c]
            if r1 is None or r2 is None:
                row.append(None)
                continue
            if (r1, r2) not in index:
                index[(r1, r2)] = len(order)
                order.append((r1, r2))
            row.append(index[(r1, r2)])
        rows.append(tuple(row))
        i += 1
    if mode == "intersect":
        acc = {j for j, (p, q) in enumerate(order) if p in d1.accepting and q in d2.accepting}
    else:
        acc = {j for j, (p, q) in enumerate(order) if p in d1.accepting or q in d2.accepting}
    return Dfa(d1.alphabet, len(order), 0, frozenset(acc), tuple(rows))


def dfa_complement(d: Dfa) -> Dfa:
    d = dfa_complete(d)
    return Dfa(d.alphabet, d.n_states, d.initial,
               frozenset(range(d.n_states)) - d.accepting, d.delta, d.labels)


def is_empty_language(d: Dfa) -> bool:
    return not (reachable_states(d) & d.accepting)


def language_equal(d1: Dfa, d2: Dfa) -> bool:
    _same_alphabet(d1, d2)
    return dfa_minimize(d1) == dfa_minimize(d2)


def language_included(d1: Dfa, d2: Dfa) -> bool:
    """Whether L(d1) is a subset of L(d2)."""
    _same_alphabet(d1, d2)
    return is_empty_language(dfa_product(d1, dfa_complement(d2), "intersect"))


def reverse(d: Dfa) -> Dfa:
    """Minimal DFA of the reversed language."""
    return dfa_minimize(Nfa.from_dfa(d).reversed().determinize())


def _alive(d: Dfa, n: int) -> list[set[int]]:
    """``alive[r]``: states from which some accepted word of length r is readable."""
    alive = [set(d.accepting)]
    for _ in range(n):
        prev = alive[-1]
        alive.append({q for q in range(d.n_states) if any(r in prev for r in d.delta[q] if r is not None)})
    return alive


def enumerate_words(d: Dfa, n: int) -> FiniteLanguage:
    """All accepted words of length exactly ``n``."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    if d.initial is None:
        return FiniteLanguage(d.alphabet)
    alive = _alive(d, n)
    out: list[Word] = []

    def walk(q: int, prefix: list[int], remaining: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for c, r in enumerate(d.delta[q]):
            if r is not None and r in alive[remaining - 1]:
                prefix.append(c)
                walk(r, prefix, remaining - 1)
                prefix.pop()

    if d.initial in alive[n]:
        walk(d.initial, [], n)
    return FiniteLanguage(d.alphabet, out)


def count_words(d: Dfa, n: int) -> int:
    """Exact number of accepted words of length ``n`` (transfer-vector iteration)."""
    if n < 0:
        raise ValueError("length must be nonnegative")
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
    return sum(m for q, m in vec.items() if q in d.accepting)


def induced(d: Dfa, keep: Iterable[int]) -> Dfa:
    """Subautomaton on ``keep`` (order preserved); transitions leaving it are dropped.

    If the initial state is discarded, the smallest kept state becomes initial;
    such results are meant to be read as graphs.
    """
    keep = sorted(set(keep))
    if not keep:
        return Dfa.empty(d.alphabet)
    index = {q: i for i, q in enumerate(keep)}
    rows = tuple(tuple(index.get(r) if r is not None else None for r in d.delta[q]) for q in keep)
    initial = index.get(d.initial, 0)
    labels = None if d.labels is None else tuple(d.labels[q] for q in keep)
    return Dfa(d.alphabet, len(keep), initial,
               frozenset(index[q] for q in d.accepting if q in index), rows, labels)


def trim_essential(d: Dfa) -> Dfa:
    """Restrict to useful states lying on bi-infinite paths.

    Starts from states that are reachable and co-reachable, then repeatedly
    discards states without incoming or outgoing edges.  An empty result means
    the language is finite.
    """
    keep = reachable_states(d) & coreachable_states(d)
    while True:
        has_in, has_out = set(), set()
        for q in keep:
            for r in d.delta[q]:
                if r is not None and r in keep:
                    has_out.add(q)
                    has_in.add(r)
        nxt = keep & has_in & has_out
        if nxt == keep:
            break
        keep = nxt
    return induced(d, keep)


def _all_states_nfa(d: Dfa) -> Nfa:
    nfa = Nfa.from_dfa(d)
    nfa.initials = set(range(d.n_states))
    nfa.accepting = set(range(d.n_states))
    return nfa


def path_language(d: Dfa) -> Dfa:
    """Minimal DFA of all labels of finite paths in the transition graph of ``d``."""
    if d.n_states == 0:
        return dfa_minimize(d)
    return dfa_minimize(_all_states_nfa(d).determinize())


def essential_language(d: Dfa) -> Dfa:
    """Labels of paths in the essential part of ``d``: the bi-extendable words.

    For a DFA of a factor-closed language this is the factor language of the
    two-sided subshift whose points have all their factors in L(d).
    """
    return path_language(trim_essential(d))


def factor_closure(d: Dfa) -> Dfa:
    """Minimal DFA of the set of all factors of words of L(d)."""
    useful = reachable_states(d) & coreachable_states(d)
    return path_language(induced(d, useful))


def from_language(lang: FiniteLanguage) -> Dfa:
    """Trie automaton accepting exactly the words of ``lang``."""
    k = len(lang.alphabet)
    rows: list[list[int | None]] = []
    accepting = set()

    def build(node) -> int:
        q = len(rows)
        rows.append([None] * k)
        if node.terminal:
            accepting.add(q)
        for c, child in sorted(node.children.items()):
            rows[q][c] = build(child)
        return q

    build(lang.trie)
    return Dfa(lang.alphabet, len(rows), 0, frozenset(accepting), tuple(map(tuple, rows)))


def relabel(d: Dfa, target: Alphabet, mapping: Mapping[int, int] | Callable[[int], int]) -> Dfa:
    """Minimal DFA of the image of L(d) under a letter-to-letter map."""
    f = mapping if callable(mapping) else mapping.__getitem__
    nfa = Nfa(target, d.n_states, set() if d.initial is None else {d.initial}, set(d.accepting))
    for q, c, r in d.transitions():
        nfa.add(q, f(c), r)
    return dfa_minimize(nfa.determinize())


def is_factor_closed_upto(d: Dfa, n: int) -> bool:
    """Check factor closure on all accepted words of length at most ``n``."""
    for m in range(1, n + 1):
        for w in enumerate_words(d, m).words:
            if not (d.accepts(w[1:]) and d.accepts(w[:-1])):
                return False
    return True


def is_right_extendable_upto(d: Dfa, n: int) -> bool:
    k = len(d.alphabet)
    for m in range(n + 1):
        for w in enumerate_words(d, m).words:
            if not any(d.accepts(w + (c,)) for c in range(k)):
                return False
    return True


# ---------------------------------------------------------------------------
# Plain-text DFA format


def format_dfa(d: Dfa, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {line}" for line in comment.splitlines())
    lines.append("alphabet: " + " ".join(d.alphabet))
    lines.append(f"states: {d.n_states}")
    lines.append(f"initial: {'-' if d.initial is None else d.initial}")
    lines.append("accepting:" + "".join(f" {q}" for q in sorted(d.accepting)))
    if d.labels is not None:
        lines.extend(f"# state {q} = {lab}" for q, lab in enumerate(d.labels))
    for q, c, r in d.transitions():
        lines.append(f"{q} {d.alphabet.symbols[c]} {r}")
    return "\n".join(lines) + "\n"


def _header(line: str, key: str, lineno: int) -> str:
    name, sep, value = line.partition(":")
    if not sep or name.strip() != key:
        raise DfaFormatError(f"line {lineno}: expected '{key}:'")
    return value.strip()


_LABEL_COMMENT = re.compile(r"#\s*state\s+(\d+)\s*=\s*(\S.*?)\s*$")


def parse_dfa(text: str) -> Dfa:
    """Inverse of :func:`format_dfa`; ``# state i = label`` comments restore labels."""
    items = []
    named: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        m = _LABEL_COMMENT.match(raw.strip())
        if m:
            named[int(m.group(1))] = m.group(2)
        line = raw.split("#", 1)[0].strip()
        if line:
            items.append((lineno, line))
    if len(items) < 4:
        raise DfaFormatError("missing header lines")
    try:
        alphabet = Alphabet(tuple(_header(items[0][1], "alphabet", items[0][0]).split()))
    except ValueError as exc:
        raise DfaFormatError(str(exc)) from None
    try:
        n = int(_header(items[1][1], "states", items[1][0]))
        init_text = _header(items[2][1], "initial", items[2][0])
        initial = None if init_text == "-" else int(init_text)
        accepting = [int(t) for t in _header(items[3][1], "accepting", items[3][0]).split()]
    except ValueError as exc:
        raise DfaFormatError(str(exc)) from None
    table: list[list[int | None]] = [[None] * len(alphabet) for _ in range(n)]
    for lineno, line in items[4:]:
        parts = line.split()
        if len(parts) != 3:
            raise DfaFormatError(f"line {lineno}: expected 'from symbol to'")
        try:
            q, c, r = int(parts[0]), alphabet.index(parts[1]), int(parts[2])
        except ValueError as exc:
            raise DfaFormatError(f"line {lineno}: {exc}") from None
        if not 0 <= q < n:
            raise DfaFormatError(f"line {lineno}: state {q} out of range")
        if table[q][c] is not None:
            raise DfaFormatError(f"line {lineno}: duplicate transition from {q} on {parts[1]}")
        table[q][c] = r
    labels = None
    if named and set(named) == set(range(n)):
        labels = tuple(named[q] for q in range(n))
    try:
        return Dfa(alphabet, n, initial, frozenset(accepting), tuple(map(tuple, table)), labels)
    except ValueError as exc:
        raise DfaFormatError(str(exc)) from None
