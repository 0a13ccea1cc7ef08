import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphgroups.errors import InvalidInput, ParseError
from graphgroups.words import (
    Alphabet,
    AlphabetMismatch,
    FpPresentation,
    FreeWord,
    UnknownSymbol,
    abelianized_relation_matrix,
    free_reduce,
    parse_word,
    word_invert,
    word_multiply,
)

from oracles import naive_free_reduce

SYMS = ["a", "b", "c"]
raw_words = st.lists(st.tuples(st.sampled_from(SYMS), st.integers(-4, 4)), max_size=20)


def test_inverse_cancellation():
    assert free_reduce([("a", 1), ("a", -1)]).letters == ()


def test_nested_cancellation():
    assert free_reduce([("a", 1), ("b", 2), ("b", -2), ("a", 1)]).letters == (("a", 2),)


def test_zero_exponents_dropped():
    assert free_reduce([("a", 0), ("b", 3), ("b", 0), ("b", -1)]).letters == (("b", 2),)


def test_matches_stack_oracle_on_random_words():
    rng = random.Random(7)
    for _ in range(1000):
        raw = [(rng.choice(SYMS), rng.choice([-2, -1, 0, 1, 2])) for _ in range(20)]
        assert free_reduce(raw).letters == naive_free_reduce(raw)


def test_unknown_symbol_against_alphabet():
    with pytest.raises(UnknownSymbol):
        free_reduce([("x", 1)], Alphabet(["a"]))


def test_invert():
    w = free_reduce([("a", 2), ("b", -1)])
    assert word_invert(w).letters == (("b", 1), ("a", -2))


def test_multiply_to_identity():
    assert word_multiply(free_reduce([("a", 1)]), free_reduce([("a", -1)])).letters == ()


def test_alphabet_mismatch():
    u = free_reduce([("a", 1)], Alphabet(["a"]))
    v = free_reduce([("a", 1)], Alphabet(["a", "b"]))
    with pytest.raises(AlphabetMismatch):
        word_multiply(u, v)


def test_associativity_random_triples():
    rng = random.Random(11)
    for _ in range(1000):
        u, v, w = (free_reduce([(rng.choice(SYMS), rng.randint(-3, 3)) for _ in range(6)]) for _ in range(3))
        assert (u * v) * w == u * (v * w)


def test_huge_exponents_are_run_length():
    w = free_reduce([("z", 10 ** 40), ("z", 1)])
    assert w.letters == (("z", 10 ** 40 + 1),)
    assert len(w) == 1


def test_unreduced_word_rejected():
    with pytest.raises(InvalidInput):
        FreeWord((("a", 1), ("a", 1)))


@given(raw_words)
def test_reduce_idempotent(raw):
    w = free_reduce(raw)
    assert free_reduce(w.letters) == w


@given(raw_words)
def test_times_inverse_is_identity(raw):
    w = free_reduce(raw)
    assert (w * ~w).letters == ()
    assert (~w * w).letters == ()


@given(raw_words, st.integers(-3, 3))
def test_power_matches_repeated_product(raw, k):
    w = free_reduce(raw)
    expect = free_reduce([])
    base = w if k >= 0 else ~w
    for _ in range(abs(k)):
        expect = expect * base
    assert w ** k == expect


def test_parse_and_format():
    a = Alphabet(["a", "b"])
    w = parse_word("a^2 b^-3 b a", a)
    assert w.letters == (("a", 2), ("b", -2), ("a", 1))
    assert str(w) == "a^2 b^-2 a"
    assert parse_word("1", a).letters == ()
    assert parse_word("a^2b^-1", a).letters == (("a", 2), ("b", -1))


def test_parse_rejects_garbage():
    with pytest.raises(ParseError):
        parse_word("a * b")


def test_abelianized_bs23():
    p = FpPresentation.from_text(["a", "b"], ["b^-1 a^2 b a^-3"])
    m = abelianized_relation_matrix(p)
    assert m.to_lists() == [[-1, 0]]


def test_abelianized_no_relators():
    p = FpPresentation.from_text(["a", "b", "c"], [])
    m = abelianized_relation_matrix(p)
    assert (m.rows, m.cols) == (0, 3)


def test_abelianized_power():
    assert abelianized_relation_matrix(FpPresentation.from_text(["a"], ["a^5"])).to_lists() == [[5]]


def test_abelianization_kills_conjugate_products():
    rng = random.Random(3)
    p = FpPresentation.from_text(["a", "b", "c"], ["a^2 b a^-1 c^3", "b c b^-1 a^-4", "c^2 a c"])
    m = abelianized_relation_matrix(p)
    alphabet = p.generators
    for _ in range(200):
        w = free_reduce([], alphabet)
        coeffs = [0] * len(p.relators)
        for _ in range(rng.randint(1, 5)):
            i = rng.randrange(len(p.relators))
            s = rng.choice([1, -1])
            h = free_reduce([(rng.choice("abc"), rng.randint(-2, 2)) for _ in range(4)], alphabet)
            w = w * h * (p.relators[i] ** s) * ~h
            coeffs[i] += s
        expsum = [w.exponent_sum(g) for g in alphabet]
        # the exponent-sum vector is the coefficient combination of the matrix rows
        combo = [sum(c * m[i, j] for i, c in enumerate(coeffs)) for j in range(m.cols)]
        assert expsum == combo


def test_presentation_drops_empty_relators():
    p = FpPresentation.from_text(["a"], ["a a^-1", "a^3"])
    assert len(p.relators) == 1


def test_presentation_rejects_foreign_symbol():
    with pytest.raises(InvalidInput):
        FpPresentation.from_text(["a"], ["b"])
