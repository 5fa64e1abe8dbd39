import json

import pytest
from hypothesis import given, strategies as st

from braidquot.catalog import artin_braid, coxeter_quotient, pure_braid_generator_word, sphere_braid
from braidquot.words import (Presentation, PresentationError, braid_permutation, compose,
                             conjugate, cyclically_reduce, cycles, free_reduce, invert, multiply,
                             quotient_by_normal_closure)

letters = st.integers(1, 4).flatmap(lambda g: st.sampled_from([g, -g]))
words = st.lists(letters, max_size=20).map(tuple)
braid_words = st.lists(st.integers(1, 4).flatmap(lambda g: st.sampled_from([g, -g])),
                       max_size=15).map(tuple)


@pytest.mark.parametrize("w, expected", [
    ((1, -1), ()),
    ((1, 2, -2, -1), ()),
    ((1, 2, 1), (1, 2, 1)),
])
def test_free_reduce(w, expected):
    assert free_reduce(w) == expected


@pytest.mark.parametrize("w, expected", [
    ((1, 2), (-2, -1)),
    ((), ()),
    ((1, -2, 1), (-1, 2, -1)),
])
def test_invert(w, expected):
    assert invert(w) == expected


@pytest.mark.parametrize("w, by, expected", [
    ((1,), (), (1,)),
    ((1,), (2,), (2, 1, -2)),
    ((2,), (2,), (2,)),
])
def test_conjugate(w, by, expected):
    assert conjugate(w, by) == expected


@pytest.mark.parametrize("w, expected", [
    ((-2, 1, 2), (1,)),
    ((1, 2), (1, 2)),
])
def test_cyclically_reduce(w, expected):
    assert cyclically_reduce(w) == expected


def test_cyclically_reduce_worked_example():
    # (-1, -2, 1, 2, 1): ends -1 / 1 cancel -> (-2, 1, 2); ends -2 / 2 cancel -> (1,)
    assert cyclically_reduce((-1, -2, 1, 2, 1)) == (1,)


@given(words)
def test_free_reduce_idempotent_and_shrinking(w):
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert len(r) <= len(w)
    assert all(a != -b for a, b in zip(r, r[1:]))


@given(words)
def test_word_times_inverse_is_identity(w):
    assert multiply(w, invert(w)) == ()


@given(words, words)
def test_conjugation_round_trip(w, u):
    assert conjugate(conjugate(w, u), invert(u)) == free_reduce(w)


@given(words)
def test_cyclic_reduction_is_a_conjugate(w):
    w = free_reduce(w)
    c = cyclically_reduce(w)
    k = (len(w) - len(c)) // 2
    assert conjugate(c, w[:k]) == w


def test_presentation_rejects_unknown_generator():
    with pytest.raises(PresentationError, match="unknown generator"):
        Presentation(("s1",), ((1, 2),))


def test_presentation_stores_reduced_relators():
    p = Presentation(("a", "b"), ((2, 1, -1, 1, -2),))
    assert p.relators == ((1,),)


def test_quotient_by_normal_closure():
    b3 = artin_braid(3)
    q = quotient_by_normal_closure(b3, [(1, 1, 1)])
    assert q.generators == b3.generators
    assert set(q.relators) == set(b3.relators) | {(1, 1, 1)}
    assert quotient_by_normal_closure(b3, []) is b3
    with pytest.raises(PresentationError, match="unknown generator"):
        quotient_by_normal_closure(b3, [(3,)])


def test_quotient_by_s1_s3_inverse_keeps_three_generators():
    p = coxeter_quotient(sphere_braid(4), 5)
    q = quotient_by_normal_closure(p, [(1, -3)])
    assert q.rank == 3 and len(q.relators) == len(p.relators) + 1


@given(words, st.lists(words, max_size=4))
def test_quotient_is_monotone(w, extra):
    p = Presentation(("a", "b", "c", "d"), (w,))
    q = quotient_by_normal_closure(p, extra)
    assert q.generators == p.generators
    assert len(q.relators) == len(p.relators) + len(extra)


def test_braid_permutation_examples():
    assert braid_permutation((1,), 2) == (1, 0)
    assert cycles(braid_permutation((1,), 2)) == [(1, 2)]
    assert braid_permutation((), 4) == (0, 1, 2, 3)
    # A_{1,3} = s2 s1 s1 s2^-1: transpositions (23)(12)(12)(23) = identity
    assert braid_permutation(pure_braid_generator_word(1, 3, 3), 3) == (0, 1, 2)


def test_braid_permutation_rejects_large_generator():
    with pytest.raises(PresentationError):
        braid_permutation((3,), 3)


@given(braid_words, braid_words)
def test_braid_permutation_is_a_homomorphism(u, v):
    n = 5
    assert braid_permutation(u + v, n) == compose(braid_permutation(u, n), braid_permutation(v, n))


def test_json_round_trip_is_bit_exact():
    p = sphere_braid(4)
    text = p.dumps()
    assert json.loads(text) == {"label": "B4(S2)", "generators": ["s1", "s2", "s3"],
                                "relators": [list(r) for r in p.relators]}
    assert Presentation.loads(text) == p


@pytest.mark.parametrize("text", ["{", "[]", '{"generators": ["a"]}',
                                  '{"generators": ["a"], "relators": [[2]]}',
                                  '{"generators": ["a"], "relators": [["x"]]}'])
def test_json_errors(text):
    with pytest.raises(PresentationError):
        Presentation.loads(text)


def test_parse_and_format_words():
    p = sphere_braid(4)
    w = p.parse_word("s1 s3^-1 s2^2")
    assert w == (1, -3, 2, 2)
    assert p.format_word(w) == "s1 s3^-1 s2 s2"
