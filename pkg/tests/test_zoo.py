from __future__ import annotations

import pytest

import oracles
from subshiftgames.automata import (
    BINARY,
    Alphabet,
    FiniteLanguage,
    count_words,
    digits,
    dfa_minimize,
    enumerate_words,
    is_empty_language,
    is_factor_closed_upto,
    language_equal,
    trim_essential,
)
from subshiftgames.entropy import adjacency_matrix
from subshiftgames.winshift import winning_language_dfa
from subshiftgames.zoo import (
    FIBONACCI,
    NAMED,
    THUE_MORSE,
    Substitution,
    counting_projection,
    even_shift_fig,
    extend,
    full_shift,
    gap_shift,
    golden_mean,
    named_shift,
    product_shift,
    sft_from_forbidden,
    ss_forbidden,
    substitution_factors,
    zoo_shifts,
)


def strings(d, n):
    return set(enumerate_words(d, n).strings())


def long_word(images: dict[str, str], seed: str, length: int) -> str:
    w = seed
    while len(w) < length:
        w = "".join(images[c] for c in w)
    return w


# -- SFTs ---------------------------------------------------------------------


@pytest.mark.parametrize("name", sorted(oracles.SHIFT_PREDICATES))
def test_zoo_matches_direct_characterisation(name):
    d = zoo_shifts()[name]
    for n in range(9):
        assert strings(d, n) == oracles.shift_slice(name, n), n


@pytest.mark.parametrize("forbidden,alphabet", [
    (["11"], "01"), (["10"], "01"), (["101", "111"], "01"), (["00", "11", "012"], "012"),
    (["0110", "10"], "01"), (["2", "01"], "012"),
])
def test_sft_avoids_forbidden_and_is_bi_extendable(forbidden, alphabet):
    d = sft_from_forbidden(alphabet, forbidden)
    assert is_factor_closed_upto(d, 7)
    pad = oracles.words(alphabet, 6)
    for n in range(6):
        avoid = {w for w in oracles.words(alphabet, n) if not any(f in w for f in forbidden)}
        ok = {w for w in avoid
              if any(not any(f in u + w + v for f in forbidden) for u in pad for v in pad)}
        assert strings(d, n) == ok


def test_sft_examples():
    assert count_words(golden_mean(), 5) == 13
    assert language_equal(sft_from_forbidden("01", ["10"]), named_shift("zeroone"))
    assert strings(gap_shift(2), 4) == oracles.shift_slice("gap2", 4)
    # every word is forbidden once all single letters are
    assert is_empty_language(sft_from_forbidden("01", ["0", "1"]))
    assert is_empty_language(sft_from_forbidden("01", [""]))
    # points 0^∞ and 1^∞ are gone, and nothing else survives either
    assert strings(sft_from_forbidden("01", ["00", "11", "01"]), 2) == set()


def test_forbidden_alphabet_mismatch():
    with pytest.raises(ValueError):
        sft_from_forbidden("01", FiniteLanguage.from_strings(digits(2), ["2"]))


# -- named shifts -------------------------------------------------------------


def test_named_even_is_golden():
    d = named_shift("even")
    assert d == even_shift_fig()
    assert dfa_minimize(d).n_states == 4


def test_named_parameters():
    assert named_shift("full", 1).n_states == 1
    assert language_equal(named_shift("gap", 1), golden_mean())
    with pytest.raises(KeyError):
        named_shift("nonsense")
    with pytest.raises(ValueError):
        named_shift("gap")
    with pytest.raises(ValueError):
        named_shift("even", 2)
    with pytest.raises(ValueError):
        gap_shift(0)
    assert set(NAMED) >= {"even", "goldenmean", "zeroone", "soficY", "sftZ", "gap", "full", "periodic"}


def test_ss_forbidden():
    d = ss_forbidden(3)
    for n in range(7):
        assert strings(d, n) == oracles.shift_slice("ss3", n)


# -- extensions and projections -----------------------------------------------


def test_extend_identity_for_k1():
    for name in ("even", "goldenmean", "gap3"):
        d = zoo_shifts()[name]
        assert language_equal(extend(d, 1), d)


def test_extend_golden_is_two_state_loop():
    core = trim_essential(dfa_minimize(extend(golden_mean(), 2)))
    assert core.n_states == 2
    # self-loop on 0, and a 2-cycle carrying 1, ..., k out and 0 back
    assert adjacency_matrix(core).tolist() in ([[1, 2], [1, 0]], [[0, 1], [2, 1]])


def test_extend_gap_is_cycle():
    core = trim_essential(dfa_minimize(extend(gap_shift(2), 3)))
    m = adjacency_matrix(core)
    assert core.n_states == 3
    assert sorted(m.sum(axis=1).tolist()) == [1, 1, 4]
    assert m.trace() == 1


def test_extend_errors():
    with pytest.raises(ValueError):
        extend(full_shift(2), 2)
    with pytest.raises(ValueError):
        extend(golden_mean(), 0)


def test_counting_projection_examples():
    assert language_equal(counting_projection(full_shift(2)), full_shift(1))
    proj = counting_projection(extend(golden_mean(), 2))
    for n in range(9):
        assert strings(proj, n) == strings(golden_mean(), n)


@pytest.mark.parametrize("name", ["goldenmean", "gap2", "gap3", "gap4", "periodic1"])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_projection_recovers_downward_closed(name, k):
    d = zoo_shifts()[name]
    assert language_equal(counting_projection(extend(d, k)), d)


def test_projection_needs_downward_closure():
    # 21 projects to 10, which 0*1* does not contain
    d = named_shift("zeroone")
    assert not language_equal(counting_projection(extend(d, 2)), d)


@pytest.mark.parametrize("name", ["even", "goldenmean", "zeroone", "sftZ", "gap2", "periodic2", "periodic3"])
@pytest.mark.parametrize("k", [2, 3])
def test_extension_keeps_winning_language(name, k):
    d = zoo_shifts()[name]
    assert language_equal(winning_language_dfa(extend(d, k)), winning_language_dfa(d))


def test_product_alphabet():
    p = product_shift(golden_mean(), full_shift(1))
    assert p.alphabet == Alphabet(("00", "01", "10", "11"))
    assert count_words(p, 4) == count_words(golden_mean(), 4) * 16
    q = product_shift(golden_mean(), named_shift("soficY"))
    assert q.alphabet.symbols[0] == "00" and len(q.alphabet) == 6


# -- substitutions ------------------------------------------------------------


def test_substitution_examples():
    assert set(substitution_factors(FIBONACCI, 3).strings()) == {"001", "010", "100", "101"}
    assert set(substitution_factors(THUE_MORSE, 2).strings()) == {"00", "01", "10", "11"}
    double = Substitution.from_strings("0", {"0": "00"})
    assert set(substitution_factors(double, 5).strings()) == {"00000"}


def test_substitution_flags():
    assert THUE_MORSE.uniform and THUE_MORSE.primitive and THUE_MORSE.growing
    assert not FIBONACCI.uniform and FIBONACCI.primitive
    fixed = Substitution.from_strings("01", {"0": "0", "1": "1"})
    assert not fixed.growing
    with pytest.raises(ValueError):
        substitution_factors(fixed, 2)
    reducible = Substitution.from_strings("01", {"0": "00", "1": "01"})
    assert not reducible.primitive
    with pytest.raises(ValueError):
        Substitution.from_strings("01", {"0": "", "1": "0"})


@pytest.mark.parametrize("n", range(1, 13))
def test_fibonacci_factors_against_long_word(n):
    w = long_word({"0": "01", "1": "0"}, "0", 5000)
    direct = {w[i:i + n] for i in range(len(w) - n)}
    got = set(substitution_factors(FIBONACCI, n).strings())
    assert got == direct
    assert len(got) == n + 1


@pytest.mark.parametrize("n", range(1, 10))
def test_thue_morse_factors_against_long_word(n):
    w0 = long_word({"0": "01", "1": "10"}, "0", 4096)
    w1 = long_word({"0": "01", "1": "10"}, "1", 4096)
    direct = {w[i:i + n] for w in (w0, w1) for i in range(len(w) - n)}
    assert set(substitution_factors(THUE_MORSE, n).strings()) == direct


def test_sturmian_slices():
    for n in range(1, 11):
        target = set(substitution_factors(FIBONACCI, n).strings())
        assert oracles.winning_set(target, n, "01") == {a for a in oracles.words("AB", n) if a.count("B") <= 1}


def test_binary_alphabet_default():
    assert golden_mean().alphabet == BINARY
