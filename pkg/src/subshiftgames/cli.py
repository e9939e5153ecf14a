"""Command-line entry point: ``subshiftgames COMMAND [options]``.

Exit status is 0 on success, 1 when an input violates a precondition of the
library (message on stderr) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from pathlib import Path
from typing import Callable, Sequence, TextIO

from .automata import (
    BINARY,
    Dfa,
    FiniteLanguage,
    count_words,
    enumerate_words,
    format_dfa,
    parse_dfa,
)
from .entropy import entropy_spectral, extension_table
from .langgames import (
    as_order,
    check_cap,
    parse_language,
    solve_game,
    verify_witness,
    winning_set,
    format_language,
)
from .verify import SUITES
from .winshift import TwoDirectionalMismatch, winning_shift
from .zoo import NAMED, extend, gap_shift, golden_mean, named_shift, sft_from_forbidden

# n <= 16 over two symbols, n <= 10 over three
DEFAULT_CAP_BITS = 16.0


class DomainError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out: str | None, stdout: TextIO) -> None:
    if out is None:
        stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _load_language(path: str) -> FiniteLanguage:
    return parse_language(_read(path))


def _load_dfa(path: str) -> Dfa:
    return parse_dfa(_read(path))


def _target(args) -> FiniteLanguage:
    """Target set of a game: the language file, or the length-n slice of a DFA."""
    n = len(args.order)
    if args.lang is not None:
        lang = _load_language(args.lang)
    else:
        d = _load_dfa(args.dfa)
        check_cap(n, len(d.alphabet), args.cap_bits)
        return enumerate_words(d, n)
    check_cap(n, len(lang.alphabet), args.cap_bits)
    return lang


def _fmt_prefix(lang: FiniteLanguage, prefix) -> str:
    return lang.alphabet.format_word(prefix) if prefix else "λ"


# ---------------------------------------------------------------------------
# Commands


def cmd_winset(args, stdout: TextIO) -> int:
    lang = _load_language(args.lang)
    _emit(format_language(winning_set(lang, cap_bits=args.cap_bits)), args.out, stdout)
    return 0


def cmd_game(args, stdout: TextIO) -> int:
    as_order(args.order)
    lang = _target(args)
    result = solve_game(lang, args.order)
    if not verify_witness(lang, result):
        raise DomainError("extracted strategy failed verification")
    lines = [f"order: {result.order}", f"winner: {result.winner}", "strategy:"]
    for prefix in sorted(result.witness.moves, key=lambda w: (len(w), w)):
        move = lang.alphabet.symbols[result.witness(prefix)]
        lines.append(f"  {_fmt_prefix(lang, prefix)} -> {move}")
    stdout.write("\n".join(lines) + "\n")
    return 0


def _machine_move(lang: FiniteLanguage, order: tuple[int, ...], prefix: tuple[int, ...], me: int) -> int:
    """Best move from the current position: win if still possible, else the smallest symbol."""
    i = len(prefix)
    residual = FiniteLanguage(lang.alphabet, (w[i:] for w in lang.words if w[:i] == prefix))
    result = solve_game(residual, order[i:])
    if "AB".index(result.winner) == me:
        return result.witness(())
    return 0


def cmd_play(args, stdout: TextIO, stdin: TextIO) -> int:
    order = as_order(args.order)
    lang = _target(args).slice(len(order))
    machine = "AB".index(args.machine) if args.machine else "AB".index(solve_game(lang, order).winner)
    alphabet = lang.alphabet
    stdout.write(f"order {args.order}; machine plays {'AB'[machine]}, you play {'AB'[1 - machine]}\n")
    stdout.write(f"symbols: {' '.join(alphabet)}\n")
    prefix: tuple[int, ...] = ()
    for i, player in enumerate(order):
        if player == machine:
            c = _machine_move(lang, order, prefix, machine)
            stdout.write(f"{i + 1} {'AB'[player]} machine: {alphabet.symbols[c]}\n")
        else:
            while True:
                stdout.write(f"{i + 1} {'AB'[player]} your move> ")
                stdout.flush()
                line = stdin.readline()
                if not line:
                    raise DomainError("input ended before the game was over")
                try:
                    c = alphabet.index(line.strip())
                    break
                except ValueError:
                    stdout.write(f"enter one of: {' '.join(alphabet)}\n")
        prefix += (c,)
    winner = "A" if prefix in lang else "B"
    stdout.write(f"word: {alphabet.format_word(prefix)}\nwinner: {winner}\n")
    return 0


def cmd_winshift(args, stdout: TextIO) -> int:
    d = _load_dfa(args.dfa)
    pres = winning_shift(d, two_directional=args.two_directional)
    if args.emit_reversed:
        text = format_dfa(pres.reversed_dfa, "reversed winning language; states are subsets")
    elif args.two_directional:
        text = format_dfa(pres.two_directional_dfa, "two-directional winning shift")
    else:
        text = format_dfa(pres.forward_dfa, "winning language")
    _emit(text, args.out, stdout)
    return 0


def cmd_entropy(args, stdout: TextIO) -> int:
    d = _load_dfa(args.dfa)
    if args.n < 1:
        raise DomainError("--n must be at least 1")
    rows: list[tuple[str, str, str]] = []
    for n in range(1, args.n + 1):
        count = count_words(d, n)
        h = repr(math.log2(count) / n) if count else ""
        rows.append((str(n), str(count), h))
    if args.spectral:
        res = entropy_spectral(d)
        rows.append(("spectral", "", repr(res.entropy_bits)))
    if args.csv:
        w = csv.writer(stdout, lineterminator="\n")
        w.writerow(("n", "count", "h_n"))
        w.writerows(rows)
    else:
        for n, count, h in rows:
            stdout.write(f"{n:>8} {count:>14} {h}\n")
    return 0


def cmd_zoo(args, stdout: TextIO) -> int:
    if args.forbidden is not None:
        forbidden = _load_language(args.forbidden)
        d = sft_from_forbidden(forbidden.alphabet, forbidden)
        comment = f"SFT avoiding {len(forbidden)} words"
    else:
        name = args.name
        if name == "gap":
            d = named_shift(name, args.m if args.m is not None else 1)
        elif name == "full":
            d = named_shift(name, args.k if args.k is not None else 1)
        elif name == "periodic":
            d = named_shift(name, args.p if args.p is not None else 1)
        else:
            d = named_shift(name)
        comment = name
        if args.k is not None and name != "full":
            if d.alphabet != BINARY:
                raise DomainError(f"--k extends binary shifts only; {name} is not binary")
            d = extend(d, args.k)
            comment += f", extended to 0..{args.k}"
    _emit(format_dfa(d, comment), args.out, stdout)
    return 0


def cmd_table6(args, stdout: TextIO) -> int:
    if args.family == "goldext":
        base = golden_mean()
    else:
        if args.m is None or args.m < 1:
            raise DomainError("gap family needs --m at least 1")
        base = gap_shift(args.m)
    rows = extension_table(base, args.kmax)
    if args.csv:
        w = csv.writer(stdout, lineterminator="\n")
        w.writerow(("k", "h", "h/log2(k+1)"))
        w.writerows((r.k, repr(r.h), repr(r.relative)) for r in rows)
    else:
        for r in rows:
            stdout.write(f"{r.k:>8} {r.h:.12f} {r.relative:.12f}\n")
    return 0


def cmd_verify(args, stdout: TextIO) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    kwargs = {}
    if args.nmax is not None:
        kwargs["nmax"] = args.nmax
    if args.samples is not None:
        kwargs["samples"] = args.samples
    if args.seed is not None:
        kwargs["seed"] = args.seed
    failed = 0
    for name in names:
        result = SUITES[name](**kwargs)
        for line in result.lines:
            stdout.write(line + "\n")
        for what in result.failed[:10]:
            stdout.write(f"FAILED {what}\n")
        stdout.write(result.summary() + "\n")
        failed += not result.ok
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# Parser


def _game_inputs(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--lang", help="finite language file")
    src.add_argument("--dfa", help="DFA file; the game uses its words of length |order|")
    p.add_argument("--order", required=True, help="turn order over A and B, e.g. BAB")
    p.add_argument("--cap-bits", type=float, default=DEFAULT_CAP_BITS,
                   help="refuse n*log2|S| above this (default %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="subshiftgames", description="Word games on subshifts.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("winset", help="winning set of a finite language")
    p.add_argument("--lang", required=True)
    p.add_argument("--cap-bits", type=float, default=DEFAULT_CAP_BITS)
    p.add_argument("--out")

    _game_inputs(sub.add_parser("game", help="solve one game and print a winning strategy"))

    p = sub.add_parser("play", help="play one game against the solver on the terminal")
    _game_inputs(p)
    p.add_argument("--machine", choices=("A", "B"), help="side played by the machine (default: the winner)")

    p = sub.add_parser("winshift", help="winning shift of a sofic shift")
    p.add_argument("--dfa", required=True)
    p.add_argument("--two-directional", action="store_true")
    p.add_argument("--emit-reversed", action="store_true",
                   help="write the subset-construction DFA of the reversed language")
    p.add_argument("--out")

    p = sub.add_parser("entropy", help="word-count and spectral entropy")
    p.add_argument("--dfa", required=True)
    p.add_argument("--n", type=int, default=12, help="largest word length (default %(default)s)")
    p.add_argument("--spectral", action="store_true")
    p.add_argument("--csv", action="store_true")

    p = sub.add_parser("zoo", help="write a presentation of an example shift")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--name", choices=NAMED)
    src.add_argument("--forbidden", help="finite language file of forbidden words")
    p.add_argument("--m", type=int, help="gap parameter")
    p.add_argument("--k", type=int, help="full-shift size, or extension to 0..k for binary shifts")
    p.add_argument("--p", type=int, help="period")
    p.add_argument("--out")

    p = sub.add_parser("table6", help="entropy of extensions against log2(k+1)")
    p.add_argument("--family", choices=("goldext", "gap"), required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--csv", action="store_true")

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("--suite", choices=(*SUITES, "all"), required=True)
    p.add_argument("--nmax", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    return parser


COMMANDS: dict[str, Callable[..., int]] = {
    "winset": cmd_winset,
    "game": cmd_game,
    "winshift": cmd_winshift,
    "entropy": cmd_entropy,
    "zoo": cmd_zoo,
    "table6": cmd_table6,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None,
         stdin: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "play":
            return cmd_play(args, stdout, stdin)
        return COMMANDS[args.command](args, stdout)
    except (DomainError, ValueError, KeyError, TwoDirectionalMismatch) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"subshiftgames {args.command}: {msg}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
