"""Small regular-expression trees for writing down expected languages.

The concrete syntax follows the usual notation for languages of shifts:
``+`` is union, juxtaposition is concatenation, postfix ``*`` is the Kleene
star and postfix ``^+`` (or ``^*``) marks plus (star).  Symbols are single
characters, so ``A*BB(A+AB)*`` and ``(AB(AA)^+)*`` parse as written.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import Alphabet, Dfa, Nfa, dfa_minimize


class RegexExpr:
    """Base class of expression nodes."""

    def __add__(self, other: "RegexExpr") -> "RegexExpr":
        return Union(self, other)

    def __mul__(self, other: "RegexExpr") -> "RegexExpr":
        return Concat(self, other)


@dataclass(frozen=True)
class Epsilon(RegexExpr):
    pass


@dataclass(frozen=True)
class Literal(RegexExpr):
    symbol: str


@dataclass(frozen=True)
class Concat(RegexExpr):
    left: RegexExpr
    right: RegexExpr


@dataclass(frozen=True)
class Union(RegexExpr):
    left: RegexExpr
    right: RegexExpr


@dataclass(frozen=True)
class Star(RegexExpr):
    inner: RegexExpr


@dataclass(frozen=True)
class Plus(RegexExpr):
    inner: RegexExpr


class RegexSyntaxError(ValueError):
    pass


def parse_regex(text: str) -> RegexExpr:
    """Parse the notation described in the module docstring."""
    src = text.replace(" ", "")
    pos = 0

    def peek() -> str | None:
        return src[pos] if pos < len(src) else None

    def union() -> RegexExpr:
        nonlocal pos
        node = concat()
        while peek() == "+":
            pos += 1
            node = Union(node, concat())
        return node

    def concat() -> RegexExpr:
        parts = []
        while peek() is not None and peek() not in "+)":
            parts.append(postfix())
        if not parts:
            raise RegexSyntaxError(f"empty term at {pos} in {text!r}; write λ for the empty word")
        node = parts[0]
        for p in parts[1:]:
            node = Concat(node, p)
        return node

    def postfix() -> RegexExpr:
        nonlocal pos
        node = atom()
        while True:
            ch = peek()
            if ch == "*":
                pos += 1
                node = Star(node)
            elif ch == "^" and pos + 1 < len(src) and src[pos + 1] in "+*":
                node = Plus(node) if src[pos + 1] == "+" else Star(node)
                pos += 2
            else:
                return node

    def atom() -> RegexExpr:
        nonlocal pos
        ch = peek()
        if ch == "(":
            pos += 1
            node = union()
            if peek() != ")":
                raise RegexSyntaxError(f"missing ')' in {text!r}")
            pos += 1
            return node
        if ch in ("λ", "ε"):
            pos += 1
            return Epsilon()
        if ch is None or ch in "*^":
            raise RegexSyntaxError(f"unexpected {ch!r} at {pos} in {text!r}")
        pos += 1
        return Literal(ch)

    node = union()
    if pos != len(src):
        raise RegexSyntaxError(f"trailing input at {pos} in {text!r}")
    return node


def _literals(e: RegexExpr) -> set[str]:
    if isinstance(e, Literal):
        return {e.symbol}
    if isinstance(e, (Concat, Union)):
        return _literals(e.left) | _literals(e.right)
    if isinstance(e, (Star, Plus)):
        return _literals(e.inner)
    return set()


def _thompson(e: RegexExpr, nfa: Nfa) -> tuple[int, int]:
    s, t = nfa.new_state(), nfa.new_state()
    if isinstance(e, Epsilon):
        nfa.add_eps(s, t)
    elif isinstance(e, Literal):
        nfa.add(s, nfa.alphabet.index(e.symbol), t)
    elif isinstance(e, Concat):
        s1, t1 = _thompson(e.left, nfa)
        s2, t2 = _thompson(e.right, nfa)
        nfa.add_eps(s, s1)
        nfa.add_eps(t1, s2)
        nfa.add_eps(t2, t)
    elif isinstance(e, Union):
        for part in (e.left, e.right):
            s1, t1 = _thompson(part, nfa)
            nfa.add_eps(s, s1)
            nfa.add_eps(t1, t)
    elif isinstance(e, (Star, Plus)):
        s1, t1 = _thompson(e.inner, nfa)
        nfa.add_eps(s, s1)
        nfa.add_eps(t1, t)
        nfa.add_eps(t1, s1)
        if isinstance(e, Star):
            nfa.add_eps(s, t)
    else:
        raise TypeError(f"not an expression: {e!r}")
    return s, t


def build_expected(e: RegexExpr | str, alphabet: Alphabet | str | None = None) -> Dfa:
    """Minimal complete DFA of the language denoted by ``e``.

    Without an explicit alphabet, the sorted set of literals is used.
    """
    if isinstance(e, str):
        e = parse_regex(e)
    if alphabet is None:
        alphabet = Alphabet(tuple(sorted(_literals(e)))) if _literals(e) else Alphabet(("A", "B"))
    elif isinstance(alphabet, str):
        alphabet = Alphabet.of(alphabet)
    nfa = Nfa(alphabet)
    s, t = _thompson(e, nfa)
    nfa.initials = {s}
    nfa.accepting = {t}
    return dfa_minimize(nfa.determinize())
