import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylkit.affine import affine_group
from weylkit.charring import (
    WEIGHT,
    WEYL,
    CharElem,
    alternating_orbit_sum,
    brauer_klimyk_product,
    dim,
    frobenius_twist,
    product,
    project_orbit,
    to_weight_basis,
    to_weyl_basis,
    translate,
    weyl_char_of,
    weyl_character,
)
from weylkit.rootdata import build_root_system, weyl_dim


@pytest.fixture(scope="module")
def a1():
    return build_root_system("A", 1)


@pytest.fixture(scope="module")
def a2():
    return build_root_system("A", 2)


def chi(rs, *coords):
    return CharElem.make(rs, WEYL, {tuple(coords): 1})


def test_weyl_character_basics(a1, a2):
    c0 = weyl_character(a1, (0,))
    assert c0.terms == {(0,): 1}
    c2 = weyl_character(a1, (2,))
    assert c2.terms == {(2,): 1, (0,): 1, (-2,): 1}
    adjoint = weyl_character(a2, (1, 1))
    assert dim(adjoint) == 8
    assert adjoint.coeff((0, 0)) == 2
    with pytest.raises(ValueError):
        weyl_character(a1, (-1,))


def test_round_trip_single_characters(a1, a2):
    for rs, nu in [(a1, (5,)), (a2, (2, 1)), (a2, (0, 3))]:
        c = weyl_character(rs, nu)
        assert to_weyl_basis(c).terms == {nu: 1}


def test_product_examples(a1):
    assert product(chi(a1, 3), chi(a1, 2)).terms == {(5,): 1, (3,): 1, (1,): 1}
    assert product(chi(a1, 1), chi(a1, 2)).terms == {(3,): 1, (1,): 1}
    assert product(chi(a1, 3), chi(a1, 0)) == chi(a1, 3)


def test_product_matches_brauer_klimyk(a1, a2):
    cases = [(a1, (3,), (2,)), (a1, (4,), (4,)), (a2, (1, 1), (1, 0)), (a2, (2, 1), (1, 1))]
    for rs, a, b in cases:
        assert product(chi(rs, *a), chi(rs, *b)) == brauer_klimyk_product(a, b, rs)


def test_product_commutative_associative(a2):
    a, b, c = chi(a2, 1, 0), chi(a2, 0, 1), chi(a2, 1, 1)
    assert product(a, b) == product(b, a)
    assert product(product(a, b), c) == product(a, product(b, c))


def test_dim_multiplicative(a2):
    rng = random.Random(3)
    for _ in range(10):
        a = chi(a2, rng.randint(0, 3), rng.randint(0, 3))
        b = chi(a2, rng.randint(0, 3), rng.randint(0, 3))
        assert dim(product(a, b)) == dim(a) * dim(b)


def test_freudenthal_against_alternating_formula(a2):
    # chi(nu) * A_rho == A_(nu+rho), both as weight functions
    rs = a2
    rho = rs.rho
    denom = alternating_orbit_sum(rs, rho)
    for nu in [(0, 0), (1, 0), (1, 1), (2, 1), (3, 2)]:
        c = weyl_character(rs, nu)
        conv: dict = {}
        for w, m in c.terms.items():
            for x, s in denom.items():
                key = rs.weights_add(w, x)
                conv[key] = conv.get(key, 0) + m * s
        conv = {k: v for k, v in conv.items() if v}
        shifted = rs.weights_add(nu, rho)
        assert conv == alternating_orbit_sum(rs, shifted)


def test_freudenthal_dim_against_weyl_formula():
    for series, rank in [("A", 1), ("A", 2), ("B", 2), ("G", 2)]:
        rs = build_root_system(series, rank)
        rng = random.Random(11)
        for _ in range(8):
            nu = tuple(rng.randint(0, 4) for _ in range(rank))
            assert dim(weyl_character(rs, nu)) == weyl_dim(nu, rs)


def test_weyl_char_of_straightening(a1):
    assert weyl_char_of(a1, (-1,)).is_zero
    assert weyl_char_of(a1, (-3,)).terms == {(1,): -1}
    assert weyl_char_of(a1, (2,)).terms == {(2,): 1}


def test_non_symmetric_rejected(a1):
    lopsided = CharElem.make(a1, WEIGHT, {(1,): 1})
    with pytest.raises(ValueError):
        to_weyl_basis(lopsided)


def test_project_orbit(a1):
    g = affine_group("A", 1, 3)
    c = CharElem.make(a1, WEYL, {(3,): 1, (1,): 1})
    assert project_orbit(g, c, (-1,)).is_zero
    c5 = CharElem.make(a1, WEYL, {(5,): 1, (3,): 1, (1,): 1})
    assert project_orbit(g, c5, (-1,)).terms == {(5,): 1}
    # idempotence and partition
    pr = project_orbit(g, c5, (-3,))
    assert project_orbit(g, pr, (-3,)) == pr
    total = project_orbit(g, c5, (-3,)) + project_orbit(g, c5, (-1,))
    assert total == c5


def test_translate_examples(a1):
    g = affine_group("A", 1, 3)
    lam, mu = (-3,), (-1,)
    assert translate(g, lam, mu, chi(a1, 3)).terms == {(5,): 1}
    assert translate(g, lam, mu, chi(a1, 7)).terms == {(5,): 1}
    assert translate(g, mu, lam, chi(a1, 5)).terms == {(7,): 1, (3,): 1}


def test_translate_linear(a1):
    g = affine_group("A", 1, 3)
    lam, mu = (-3,), (-1,)
    rng = random.Random(5)
    orbit_weights = [(1,), (3,), (7,), (9,)]
    coeffs = {w: rng.randint(-3, 3) for w in orbit_weights}
    combo = CharElem.make(a1, WEYL, coeffs)
    left = translate(g, lam, mu, combo)
    right = CharElem.zero(a1)
    for w, c in coeffs.items():
        right = right + translate(g, lam, mu, CharElem.make(a1, WEYL, {w: 1})).scale(c)
    assert left == right


def test_translate_warns_off_orbit(a1):
    g = affine_group("A", 1, 3)
    mixed = CharElem.make(a1, WEYL, {(3,): 1, (5,): 1})  # (5,) is on the (-1,) orbit
    with pytest.warns(UserWarning):
        out = translate(g, (-3,), (-1,), mixed)
    assert out.terms == {(5,): 1}


def test_frobenius_twist(a1):
    tw = frobenius_twist(weyl_character(a1, (1,)), 3)
    assert tw.terms == {(3,): 1, (-3,): 1}
    assert frobenius_twist(chi(a1, 0), 3).terms == {(0,): 1}
    c = weyl_character(a1, (4,))
    assert dim(frobenius_twist(c, 5)) == dim(c)


def test_payload_round_trip(a2):
    c = product(chi(a2, 1, 1), chi(a2, 1, 0))
    payload = c.to_payload()
    assert payload["basis"] == "weyl"
    assert CharElem.from_payload(a2, payload) == c


@settings(max_examples=40, deadline=None)
@given(st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)),
    st.integers(-4, 4), max_size=4,
))
def test_weyl_weight_round_trip(terms):
    rs = build_root_system("A", 2)
    c = CharElem.make(rs, WEYL, terms)
    assert to_weyl_basis(to_weight_basis(c)) == c
