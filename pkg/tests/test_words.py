from hypothesis import given
import hypothesis.strategies as st

from orbicover import words as W

letters = st.integers(1, 3).flatmap(lambda g: st.sampled_from([g, -g]))
word = st.lists(letters, max_size=12).map(tuple)


def test_free_reduction():
    assert W.reduce((1, 2, -2, -1, 3)) == (3,)
    assert W.inverse((1, 2, -3)) == (3, -2, -1)
    assert W.commutator(W.gen(0), W.gen(1)) == (1, 2, -1, -2)


def test_cyclic_and_conjugacy():
    assert W.cyclic_reduce((2, 1, 3, -2)) == (1, 3)
    assert W.is_conjugate((1, 2), (2, 1))
    assert not W.is_conjugate((1, 2), (1, -2))


def test_format():
    assert W.format_word((1, -2, 2, 2, -1), ["a", "b"]) == "a*b^-1*b*b*a^-1"


@given(word)
def test_reduce_idempotent(w):
    r = W.reduce(w)
    assert W.reduce(r) == r
    assert all(x != -y for x, y in zip(r, r[1:]))


@given(word, word)
def test_inverse_is_anti_homomorphism(u, v):
    assert W.reduce(W.concat(u, W.inverse(u))) == ()
    assert W.inverse(W.concat(u, v)) == W.reduce(W.inverse(v) + W.inverse(u))


@given(word)
def test_exponent_vector_additive(u):
    ev = W.exponent_vector(u, 3)
    assert [sum(1 if x == g + 1 else -1 if x == -(g + 1) else 0 for x in u) for g in range(3)] == ev


@given(word, st.lists(word, min_size=3, max_size=3))
def test_substitute_is_homomorphism(u, images):
    v = (2, -1)
    lhs = W.substitute(W.concat(u, v), images)
    rhs = W.reduce(W.substitute(u, images) + W.substitute(v, images))
    assert lhs == rhs


@given(word, st.integers(0, 4))
def test_power_conjugacy(u, k):
    assert W.is_conjugate(W.power(u, k), W.power(W.concat((2,), u, (-2,)), k))
