import pytest

from weylkit.rootdata import (
    UnsupportedTypeError,
    build_root_system,
    dominant_linear,
    dominant_representative,
    orbit,
    pairing,
    weyl_dim,
)


@pytest.mark.parametrize("series,rank,nroots,h", [
    ("A", 1, 1, 2),
    ("A", 2, 3, 3),
    ("A", 3, 6, 4),
    ("A", 4, 10, 5),
    ("B", 2, 4, 4),
    ("B", 3, 9, 6),
    ("C", 3, 9, 6),
    ("C", 4, 16, 8),
    ("D", 4, 12, 6),
    ("F", 4, 24, 12),
    ("G", 2, 6, 6),
])
def test_counts_and_coxeter_number(series, rank, nroots, h):
    rs = build_root_system(series, rank)
    assert len(rs.positive_roots) == nroots
    assert rs.coxeter_number == h
    # |R+| = h * rank / 2
    assert 2 * nroots == h * rank


@pytest.mark.parametrize("series,rank", [("E", 6), ("A", 5), ("D", 3), ("Z", 2), ("B", 1)])
def test_unsupported_types(series, rank):
    with pytest.raises(UnsupportedTypeError):
        build_root_system(series, rank)


def test_cartan_shape():
    for series, rank in [("A", 2), ("B", 2), ("G", 2), ("C", 3), ("F", 4)]:
        rs = build_root_system(series, rank)
        for i in range(rank):
            assert rs.cartan[i][i] == 2
            for j in range(rank):
                if i != j:
                    assert rs.cartan[i][j] <= 0


def test_rho_pairs_to_one_on_simple_coroots():
    for series, rank in [("A", 2), ("B", 2), ("G", 2), ("A", 3), ("C", 3)]:
        rs = build_root_system(series, rank)
        for i in range(rank):
            b = rs.positive_roots.index(rs.simple_root(i))
            assert rs.pairing(rs.rho, b) == 1


def test_pairing_examples():
    a1 = build_root_system("A", 1)
    assert pairing((1,), 0, a1) == 1
    assert pairing((-3,), 0, a1) == -3
    a2 = build_root_system("A", 2)
    # highest root is last in the height order; <rho, beta_vee> = coroot height
    assert pairing(a2.rho, 2, a2) == 2
    with pytest.raises(IndexError):
        pairing((0, 0), 3, a2)


def test_pairing_additive():
    rs = build_root_system("B", 2)
    vs = [(1, 0), (-2, 3), (4, -1), (0, 0), (-3, -3)]
    for v in vs:
        for w in vs:
            s = tuple(x + y for x, y in zip(v, w))
            for b in range(len(rs.positive_roots)):
                assert rs.pairing(s, b) == rs.pairing(v, b) + rs.pairing(w, b)


def test_dominant_representative_examples():
    a1 = build_root_system("A", 1)
    assert dominant_representative((-1,), a1)[1] == 0
    assert dominant_representative((-3,), a1) == ((1,), -1)
    assert dominant_representative((2,), a1) == ((2,), 1)


def test_dominant_representative_idempotent():
    rs = build_root_system("A", 2)
    for x in range(-6, 7):
        for y in range(-6, 7):
            dom, sign = dominant_representative((x, y), rs)
            dom2, sign2 = dominant_representative(dom, rs)
            assert dom2 == dom
            if sign != 0:
                assert sign2 == 1
                assert rs.is_dominant(dom)


def test_dominant_linear_lands_in_orbit():
    rs = build_root_system("G", 2)
    for x in range(-4, 5):
        for y in range(-4, 5):
            d = dominant_linear((x, y), rs)
            assert rs.is_dominant(d)
            assert (x, y) in orbit(d, rs)


def test_weyl_dim_small_cases():
    a1 = build_root_system("A", 1)
    for n in range(8):
        assert weyl_dim((n,), a1) == n + 1
    a2 = build_root_system("A", 2)
    assert weyl_dim((1, 1), a2) == 8
    assert weyl_dim((1, 0), a2) == 3
    g2 = build_root_system("G", 2)
    assert weyl_dim((0, 1), g2) == 7
    assert weyl_dim((1, 0), g2) == 14
    with pytest.raises(ValueError):
        weyl_dim((-1, 0), a2)


def test_coroot_integrality():
    for series, rank in [("B", 2), ("C", 3), ("G", 2), ("F", 4), ("D", 4)]:
        rs = build_root_system(series, rank)
        for c in rs.coroot_coords:
            assert all(isinstance(x, int) for x in c)
            assert all(x >= 0 for x in c)
