import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylkit.affine import (
    InvalidAlcoveError,
    ParameterMismatchError,
    affine_group,
)


@pytest.fixture(scope="module")
def a1():
    return affine_group("A", 1, 3)


@pytest.fixture(scope="module")
def a2():
    return affine_group("A", 2, 5)


def test_generator_count_and_involutions(a1, a2):
    for g in (a1, a2):
        gens = g.generators()
        assert len(gens) == g.rs.rank + 1
        for s in gens:
            assert (s * s).is_identity()
            assert s.length == 1


def test_generator_fixed_weights(a1):
    # walls of the base alcove: <v+rho, alpha_vee> = 0 and = -p
    assert a1.generator("s1").dot((-1,)) == (-1,)
    assert a1.generator("s0").dot((-4,)) == (-4,)
    assert a1.generator("s1").dot((-4,)) != (-4,)


def test_dot_action_examples(a1):
    assert a1.generator("s1").dot((-3,)) == (1,)
    assert a1.from_word("s1,s0,s1,s0").dot((-3,)) == (9,)
    # rightmost letter acts first
    assert a1.from_word("s1,s0").dot((-3,)) == (3,)
    assert a1.generator("s0").dot((-3,)) == (-5,)


def test_multiply_examples(a1):
    e = a1.identity
    w = a1.from_word("s1,s0")
    assert w * e == w
    assert (a1.generator("s0") * a1.generator("s0")).is_identity()
    assert w.alcove == (2,)


def test_parameter_mismatch(a1):
    other = affine_group("A", 1, 5)
    with pytest.raises(ParameterMismatchError):
        a1.generator("s1") * other.generator("s1")


def test_length_examples(a1):
    assert a1.identity.length == 0
    assert a1.from_word("s1,s0").length == 2
    for name in a1.generator_names:
        assert a1.generator(name).length == 1


def test_length_changes_by_one(a2):
    for w in a2.elements_up_to(4):
        for name in a2.generator_names:
            assert abs((w * a2.generator(name)).length - w.length) == 1


def test_right_descents(a1):
    assert a1.identity.right_descents() == frozenset()
    assert a1.from_word("s1,s0,s1,s0").right_descents() == {"s0"}
    assert a1.from_word("s1,s0,s1").right_descents() == {"s1"}


def test_longest_finite_element_descents():
    # the element sending -2rho to 0 is the longest finite element; its
    # descent set is the full finite generator set
    for series, rank, p in [("A", 1, 3), ("A", 2, 5), ("B", 2, 5)]:
        g = affine_group(series, rank, p)
        finite = frozenset(n for n in g.generator_names if n != "s0")
        w0 = max(g.parabolic_elements(finite), key=lambda w: w.length)
        assert w0.dot(tuple(-2 for _ in range(rank))) == (0,) * rank
        assert w0.length == len(g.rs.positive_roots)
        assert w0.right_descents() == finite


def test_reduced_words_are_reduced(a2):
    for w in a2.elements_up_to(6):
        word = w.reduced_word()
        assert len(word) == w.length
        assert a2.from_word(word) == w


def test_alcove_round_trip(a2):
    for w in a2.elements_up_to(6):
        assert a2.from_alcove(w.alcove) == w


def test_invalid_alcove_rejected(a1, a2):
    with pytest.raises(InvalidAlcoveError):
        a2.from_alcove((1, 1, 5))
    with pytest.raises(InvalidAlcoveError):
        a2.from_alcove((1, 1))
    # every rank-one tuple is a valid alcove; sanity-check one
    assert a1.from_alcove((-2,)).length == 2


def test_payload_round_trip(a2):
    w = a2.from_word("s1,s2,s0")
    payload = w.to_payload()
    assert payload == {"p": 5, "alcove": list(w.alcove)}
    assert a2.from_payload(payload) == w
    assert a2.from_payload({"word": ["s1", "s2", "s0"]}) == w
    with pytest.raises(ParameterMismatchError):
        a2.from_payload({"p": 7, "alcove": list(w.alcove)})


def test_bruhat_examples(a1):
    s1 = a1.generator("s1")
    assert a1.bruhat_leq(a1.identity, a1.from_word("s0,s1"))
    assert a1.bruhat_leq(s1, a1.from_word("s1,s0,s1"))
    assert not a1.bruhat_leq(a1.from_word("s1,s0,s1"), s1)


def test_bruhat_against_subword_closure(a2):
    els = a2.elements_up_to(5)
    for w in els:
        below = a2.bruhat_interval_below(w)
        for y in els:
            assert a2.bruhat_leq(y, w) == (y in below)


def test_bruhat_length_monotone(a2):
    els = a2.elements_up_to(4)
    for w in els:
        for y in els:
            if a2.bruhat_leq(y, w):
                assert y.length <= w.length


def test_enumerate_dominant_a1(a1):
    ws = a1.enumerate_dominant(4)
    assert [w.dot((-3,)) for w in ws] == [(1,), (3,), (7,), (9,)]
    assert a1.identity not in ws
    # exactly one element per positive length in rank one
    assert [w.length for w in ws] == [1, 2, 3, 4]


def test_dominant_needs_deep_enough_p():
    shallow = affine_group("A", 2, 2)  # p < h
    with pytest.raises(ValueError):
        shallow.base_alcove_points()


def test_stabilizers(a1):
    assert a1.stabilizer((-3,)).stabilizer == frozenset()
    assert a1.stabilizer((-1,)).stabilizer == {"s1"}
    assert a1.stabilizer((-4,)).stabilizer == {"s0"}
    with pytest.raises(ValueError):
        a1.stabilizer((1,))


def test_stabilizer_fixes_and_moves(a2):
    for mu in a2.closure_points():
        desc = a2.stabilizer(mu)
        for name in a2.generator_names:
            if name in desc.stabilizer:
                assert a2.generator(name).dot(mu) == mu
            else:
                assert a2.generator(name).dot(mu) != mu


def test_min_coset_reps(a1):
    J = frozenset({"s1"})
    assert a1.is_min_coset_rep(a1.identity, J)
    assert a1.is_min_coset_rep(a1.from_word("s1,s0"), J)
    assert not a1.is_min_coset_rep(a1.generator("s1"), J)


def test_coset_length_additivity(a2):
    mu = (-1, -4)
    desc = a2.stabilizer(mu)
    sub = a2.parabolic_elements(desc.stabilizer)
    for w in a2.elements_up_to(4):
        if a2.is_min_coset_rep(w, desc):
            for x in sub:
                assert (w * x).length == w.length + x.length


def test_orbit_data_examples(a1):
    mu, w = a1.orbit_data((9,))
    assert mu == (-3,)
    assert w == a1.from_word("s1,s0,s1,s0")
    mu, w = a1.orbit_data((5,))
    assert mu == (-1,)
    assert w == a1.from_word("s1,s0")
    mu, w = a1.orbit_data((-3,))
    assert mu == (-3,) and w.is_identity()


def test_orbit_partition(a2):
    # distinct closure points have disjoint orbits over a weight box
    for x in range(-8, 9, 3):
        for y in range(-8, 9, 3):
            rep = a2.orbit_rep((x, y))
            assert a2.orbit_rep(rep) == rep


def test_translation_element(a1):
    t = a1.translation_element((1,))  # p*alpha = 6 fundamental-weight units
    assert t.dot((1,)) == (7,)
    assert t.dot((-3,)) == (3,)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from(["s0", "s1", "s2"]), max_size=8),
       st.lists(st.sampled_from(["s0", "s1", "s2"]), max_size=8),
       st.tuples(st.integers(-8, 8), st.integers(-8, 8)))
def test_group_action_properties(word_a, word_b, v):
    g = affine_group("A", 2, 5)
    a = g.from_word(word_a)
    b = g.from_word(word_b)
    assert (a * b).dot(v) == a.dot(b.dot(v))
    assert a.inverse().dot(a.dot(v)) == v
    assert (a * a.inverse()).is_identity()


def test_associativity_random(a2):
    els = a2.elements_up_to(4)
    rng = random.Random(7)
    for _ in range(150):
        a, b, c = (rng.choice(els) for _ in range(3))
        assert (a * b) * c == a * (b * c)
