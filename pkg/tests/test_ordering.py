import pytest

from weylkit.affine import affine_group
from weylkit.ordering import (
    OrderContext,
    check_ordersame,
    d_abs,
    d_signed,
    in_shifted_dominant_region,
    leq_C,
    translation_descent_check,
    uparrow_leq,
)


@pytest.fixture(scope="module")
def a1():
    return affine_group("A", 1, 3)


@pytest.fixture(scope="module")
def a2():
    return affine_group("A", 2, 5)


def test_separation_counts(a1):
    ctx = OrderContext.antidominant(a1)
    assert d_abs(a1.identity, ctx) == 0
    assert d_abs(OrderContext.dominant(a1).base, ctx) == 1
    assert d_abs(a1.from_word("s1,s0"), ctx) == 2
    assert d_signed(a1.from_word("s1,s0"), ctx) == 2
    assert d_signed(a1.generator("s0"), ctx) == -1
    assert d_abs(a1.generator("s0"), ctx) == 1


def test_d_abs_bounds_d_signed(a2):
    ctx = OrderContext.antidominant(a2)
    for w in a2.elements_up_to(5):
        assert d_abs(w, ctx) >= abs(d_signed(w, ctx))
    # equality on the dominant side
    for w in a2.enumerate_dominant(5):
        assert d_abs(w, ctx) == d_signed(w, ctx)


def test_length_equals_separation(a2):
    ctx = OrderContext.antidominant(a2)
    for w in a2.elements_up_to(7):
        assert w.length == d_abs(w, ctx)


def test_uparrow_examples(a1):
    assert uparrow_leq(a1, (2,), (2,))
    assert uparrow_leq(a1, (-3,), (1,))
    assert uparrow_leq(a1, (1,), (3,))
    assert not uparrow_leq(a1, (1,), (5,))  # different orbits
    assert not uparrow_leq(a1, (3,), (1,))


def test_uparrow_implies_root_order(a2):
    rs = a2.rs
    pts = [(x, y) for x in range(-6, 7, 2) for y in range(-6, 7, 2)]
    for a in pts:
        for b in pts:
            if a != b and uparrow_leq(a2, a, b):
                delta = rs.to_root_coords(rs.weights_sub(b, a))
                assert all(x >= 0 and x.denominator == 1 for x in delta)


def test_uparrow_antisymmetric_on_orbit(a1):
    pts = [(x,) for x in range(-12, 13)]
    for a in pts:
        for b in pts:
            if a != b:
                assert not (uparrow_leq(a1, a, b) and uparrow_leq(a1, b, a))


def test_leq_examples(a1):
    ctx = OrderContext.antidominant(a1)
    assert leq_C(a1, (1,), (1,), ctx)
    assert leq_C(a1, (1,), (3,), ctx)
    assert not leq_C(a1, (1,), (5,), ctx)
    assert not leq_C(a1, (5,), (1,), ctx)


def test_ordersame_antidominant_base(a1):
    rep = check_ordersame(a1, OrderContext.antidominant(a1), 15)
    assert rep.checked > 0
    assert rep.violations == []


def test_ordersame_dominant_base_boundary_case(a1):
    rep = check_ordersame(a1, OrderContext.dominant(a1), 15)
    assert rep.violations == []
    # the documented discrepancy: base order holds downward across the
    # region boundary while the uparrow order does not
    assert any(
        e["base_order"] and not e["uparrow"]
        and e["lower_in_region"] and not e["upper_in_region"]
        for e in rep.boundary_cases
    )


def test_ordersame_empty_box(a1):
    rep = check_ordersame(a1, OrderContext.antidominant(a1), -1)
    assert rep.checked == 0
    assert rep.violations == [] and rep.boundary_cases == []


def test_region_membership(a1):
    ctx = OrderContext.antidominant(a1)
    assert in_shifted_dominant_region(ctx, (0,))
    assert in_shifted_dominant_region(ctx, (-4,))
    assert not in_shifted_dominant_region(ctx, (-5,))
    ctxp = OrderContext.dominant(a1)
    assert in_shifted_dominant_region(ctxp, (-1,))
    assert not in_shifted_dominant_region(ctxp, (-2,))


def test_translation_descent_examples(a1):
    t = a1.translation_element((1,))
    w = a1.generator("s1")
    tw = t * w
    assert tw.dot((-3,)) == (7,)
    assert w.right_descents() == tw.right_descents() == {"s1"}


def test_translation_descent_sweep(a1):
    rep = translation_descent_check(a1, (1,), 8)
    assert rep.checked > 0
    assert rep.violations == []


def test_translation_descent_zero_vector(a1):
    rep = translation_descent_check(a1, (0,), 6)
    assert rep.violations == []
    assert rep.skipped == 0
    assert rep.checked == len(a1.enumerate_dominant(6))


def test_report_serialization(a1):
    rep = check_ordersame(a1, OrderContext.antidominant(a1), 4)
    data = rep.to_dict()
    assert data["suite"] == "ordersame"
    assert set(data) >= {"checked", "violations", "boundary_cases", "p"}
