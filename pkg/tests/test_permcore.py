import itertools

import pytest
from hypothesis import given, strategies as st

from bruhat_chains.permcore import (
    MAX_N, Permutation, all_permutations, from_lehmer_code, identity,
    lehmer_code, length, longest_element, multiply, reduced_words,
    transposition, word_to_permutation,
)

from conftest import P, brute_length

perms = st.integers(1, 7).flatmap(lambda n: st.permutations(range(1, n + 1))).map(
    lambda w: Permutation(tuple(w)))


def exhaustive_reduced_words(w):
    """Every word of length l(w) over 1..n-1 that folds to w."""
    return {word for word in itertools.product(range(1, w.n), repeat=w.length)
            if word_to_permutation(word, w.n) == w}


def test_multiply_examples():
    assert multiply(P("132"), transposition(1, 2, 3)) == P("312")
    assert multiply(P("2413"), identity(4)) == P("2413")
    assert multiply(P("321"), P("321")) == identity(3)


def test_multiply_convention_is_composition():
    u, v = P("2314"), P("4132")
    assert all((u * v)(k) == u(v(k)) for k in range(1, 5))


def test_multiply_rejects_mismatched_sizes():
    with pytest.raises(ValueError):
        multiply(P("12"), P("123"))


def test_length_examples():
    assert length(P("123")) == 0
    assert length(P("321")) == 3
    assert length(P("312")) == 2


def test_longest_element():
    assert longest_element(3) == P("321")
    assert longest_element(1) == P("1")
    assert longest_element(4) == P("4321")


@pytest.mark.parametrize("n", range(1, 6))
def test_length_extremes(n):
    lengths = {w: w.length for w in all_permutations(n)}
    top = n * (n - 1) // 2
    assert [w for w, l in lengths.items() if l == 0] == [identity(n)]
    assert [w for w, l in lengths.items() if l == top] == [longest_element(n)]
    assert max(lengths.values()) == top


def test_reduced_words_examples():
    assert set(reduced_words(P("321"))) == {(1, 2, 1), (2, 1, 2)}
    assert reduced_words(identity(3)) == [()]
    assert len(reduced_words(P("4321"))) == 16


@pytest.mark.parametrize("n", [2, 3, 4])
def test_reduced_words_match_exhaustive_search(n):
    for w in all_permutations(n):
        words = reduced_words(w)
        assert len(words) == len(set(words))
        assert set(words) == exhaustive_reduced_words(w)


def test_reduced_word_prefixes_increase_length():
    for w in all_permutations(4):
        for word in reduced_words(w):
            lengths = [word_to_permutation(word[:k], 4).length for k in range(len(word) + 1)]
            assert lengths == list(range(len(word) + 1))


def test_lehmer_code_examples():
    assert lehmer_code(P("321")) == (2, 1, 0)
    assert lehmer_code(identity(4)) == (0, 0, 0, 0)
    assert lehmer_code(P("132")) == (0, 1, 0)


@pytest.mark.parametrize("n", range(1, 6))
def test_lehmer_code_is_bijection_onto_substaircase(n):
    codes = {lehmer_code(w) for w in all_permutations(n)}
    box = set(itertools.product(*(range(n - i + 1) for i in range(1, n + 1))))
    assert codes == box
    for w in all_permutations(n):
        assert sum(lehmer_code(w)) == w.length
        assert from_lehmer_code(lehmer_code(w)) == w


@given(perms)
def test_inverse_properties(w):
    assert w * w.inverse() == identity(w.n)
    assert w.inverse().length == w.length
    assert w.length == brute_length(w.window)


@given(perms, st.data())
def test_descents(w, data):
    for d in w.right_descents():
        assert w.swap_positions(d, d + 1).length == w.length - 1
    for a in w.left_descents():
        assert (transposition(a, a + 1, w.n) * w).length == w.length - 1


def test_parse_and_print():
    assert str(P("2143")) == "2143"
    big = Permutation(tuple(range(10, 0, -1)))
    assert str(big) == "10,9,8,7,6,5,4,3,2,1"
    assert Permutation.parse(str(big)) == big


@pytest.mark.parametrize("bad", ["1123", "abc", "", "0123"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        Permutation.parse(bad)


def test_size_bound():
    with pytest.raises(ValueError):
        Permutation(tuple(range(1, MAX_N + 2)))
