"""Root system data built from Cartan matrices.

Weights live in the fundamental-weight basis: a weight is a tuple of
integers, one coordinate per simple root, and dominance means all
coordinates are >= 0.  Roots are stored in the same basis (the j-th
simple root is the j-th column of the Cartan matrix); every positive
root additionally carries its expansion in the simple-root basis and
the expansion of its coroot in the simple-coroot basis, so that
pairings <v, beta_vee> are plain integer dot products.

Positive roots are enumerated in a fixed order: ascending height
(sum of simple-root coordinates), ties broken lexicographically on the
simple-root coordinates.  Alcove tuples elsewhere index against this
order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

Weight = tuple[int, ...]

# positive-root counts per (series, rank), used as a construction check
_POSITIVE_ROOT_COUNTS = {
    ("A", 1): 1, ("A", 2): 3, ("A", 3): 6, ("A", 4): 10,
    ("B", 2): 4, ("B", 3): 9, ("B", 4): 16,
    ("C", 2): 4, ("C", 3): 9, ("C", 4): 16,
    ("D", 4): 12,
    ("F", 4): 24,
    ("G", 2): 6,
}


class UnsupportedTypeError(ValueError):
    """Raised for (series, rank) pairs outside the supported desk-scale table."""


def _cartan_matrix(series: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with entries a[i][j] = <alpha_j, alpha_i_vee>."""
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def chain(n):
        for i in range(n - 1):
            a[i][i + 1] = -1
            a[i + 1][i] = -1

    if series == "A":
        chain(rank)
    elif series == "B":
        # last simple root is short
        chain(rank)
        a[rank - 1][rank - 2] = -2
    elif series == "C":
        # last simple root is long
        chain(rank)
        a[rank - 2][rank - 1] = -2
    elif series == "D":
        chain(rank - 1)
        a[rank - 3][rank - 1] = -1
        a[rank - 1][rank - 3] = -1
    elif series == "F":
        chain(rank)
        a[2][1] = -2
        a[1][2] = -1
    elif series == "G":
        a[0][1] = -1
        a[1][0] = -3
    else:
        raise UnsupportedTypeError(f"unknown series {series!r}")
    return tuple(tuple(row) for row in a)


def _symmetrizer(cartan) -> tuple[int, ...]:
    """Minimal positive integers d with d[i]*a[i][j] == d[j]*a[j][i]."""
    rank = len(cartan)
    d: list[Fraction | None] = [None] * rank
    d[0] = Fraction(1)
    # propagate along the (connected) Dynkin diagram
    changed = True
    while changed:
        changed = False
        for i in range(rank):
            if d[i] is None:
                continue
            for j in range(rank):
                if cartan[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * cartan[i][j] / cartan[j][i]
                    changed = True
    assert all(x is not None and x > 0 for x in d)
    scale = lcm(*(x.denominator for x in d))
    ints = [int(x * scale) for x in d]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


def _mat_inverse_fractions(m) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse of a small integer matrix via Gauss-Jordan over Fractions."""
    n = len(m)
    aug = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@dataclass(frozen=True)
class RootSystem:
    """Immutable root-system data for one finite type."""

    series: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    # per positive root, all in the fixed enumeration order:
    positive_roots: tuple[Weight, ...]             # fundamental-weight coords
    root_coords: tuple[tuple[int, ...], ...]       # simple-root coords
    coroot_coords: tuple[tuple[int, ...], ...]     # simple-coroot coords
    symmetrizer: tuple[int, ...]                   # d_i = (alpha_i, alpha_i)/2
    cartan_inverse: tuple[tuple[Fraction, ...], ...]
    coxeter_number: int
    affine_root_index: int                         # root whose coroot is highest

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @property
    def key(self) -> tuple[str, int]:
        return (self.series, self.rank)

    def pairing(self, v: Weight, beta: int) -> int:
        """<v, beta_vee> for the beta-th positive root."""
        c = self.coroot_coords[beta]
        return sum(vi * ci for vi, ci in zip(v, c))

    def pairing_coroot(self, v: Weight, coroot: tuple[int, ...]) -> int:
        return sum(vi * ci for vi, ci in zip(v, coroot))

    def simple_root(self, i: int) -> Weight:
        """The i-th simple root in fundamental-weight coordinates."""
        return tuple(self.cartan[k][i] for k in range(self.rank))

    def simple_reflect(self, v: Weight, i: int) -> Weight:
        """Linear reflection s_i(v) = v - <v, alpha_i_vee> alpha_i."""
        vi = v[i]
        alpha = self.simple_root(i)
        return tuple(x - vi * a for x, a in zip(v, alpha))

    def is_dominant(self, v: Weight) -> bool:
        return all(x >= 0 for x in v)

    def to_root_coords(self, v: Weight) -> tuple[Fraction, ...]:
        """Exact expansion of v in the simple-root basis."""
        inv = self.cartan_inverse
        return tuple(sum(inv[j][i] * v[i] for i in range(self.rank)) for j in range(self.rank))

    def root_lattice_coords(self, v: Weight) -> tuple[int, ...] | None:
        """Integer simple-root coordinates of v, or None if v is not in the root lattice."""
        rc = self.to_root_coords(v)
        if any(x.denominator != 1 for x in rc):
            return None
        return tuple(int(x) for x in rc)

    def weights_add(self, a: Weight, b: Weight) -> Weight:
        return tuple(x + y for x, y in zip(a, b))

    def weights_sub(self, a: Weight, b: Weight) -> Weight:
        return tuple(x - y for x, y in zip(a, b))


def _enumerate_roots(cartan):
    """All roots (simple-root coords) as the reflection closure of the simple roots."""
    rank = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for k in frontier:
            fw = tuple(sum(cartan[i][j] * k[j] for j in range(rank)) for i in range(rank))
            for i in range(rank):
                img = tuple(k[j] - (fw[i] if j == i else 0) for j in range(rank))
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return seen


@lru_cache(maxsize=None)
def build_root_system(series: str, rank: int) -> RootSystem:
    """Construct the root system for a supported (series, rank) pair.

    Supported: A1-A4, B2-B4, C2-C4, D4, F4, G2 (rank capped at 4).
    """
    series = series.upper()
    if (series, rank) not in _POSITIVE_ROOT_COUNTS:
        raise UnsupportedTypeError(f"unsupported type {series}{rank}")
    cartan = _cartan_matrix(series, rank)
    d = _symmetrizer(cartan)

    all_roots = _enumerate_roots(cartan)
    positives = sorted((k for k in all_roots if all(x >= 0 for x in k)),
                       key=lambda k: (sum(k), k))
    expected = _POSITIVE_ROOT_COUNTS[(series, rank)]
    assert len(positives) == expected, (series, rank, len(positives))

    fw_roots = []
    coroots = []
    for k in positives:
        fw = tuple(sum(cartan[i][j] * k[j] for j in range(rank)) for i in range(rank))
        norm2 = sum(k[i] * k[j] * d[i] * cartan[i][j] for i in range(rank) for j in range(rank))
        cr = []
        for j in range(rank):
            num = 2 * d[j] * k[j]
            assert num % norm2 == 0
            cr.append(num // norm2)
        fw_roots.append(fw)
        coroots.append(tuple(cr))

    h = 1 + max(sum(k) for k in positives)
    coroot_heights = [sum(c) for c in coroots]
    assert 1 + max(coroot_heights) == h
    assert 2 * expected == h * rank
    affine_idx = coroot_heights.index(h - 1)
    assert coroot_heights.count(h - 1) == 1

    return RootSystem(
        series=series,
        rank=rank,
        cartan=cartan,
        positive_roots=tuple(fw_roots),
        root_coords=tuple(positives),
        coroot_coords=tuple(coroots),
        symmetrizer=d,
        cartan_inverse=_mat_inverse_fractions(cartan),
        coxeter_number=h,
        affine_root_index=affine_idx,
    )


def pairing(v: Weight, beta: int, rs: RootSystem) -> int:
    """<v, beta_vee> against the beta-th positive root of rs."""
    if not 0 <= beta < len(rs.positive_roots):
        raise IndexError(f"positive-root index {beta} out of range")
    return rs.pairing(v, beta)


def dominant_representative(v: Weight, rs: RootSystem) -> tuple[Weight, int]:
    """Normalize v under the shifted finite-Weyl action.

    Returns (mu, sign) where mu = w(v+rho)-rho is dominant and
    sign = det(w), or sign = 0 when v+rho lies on a reflection wall
    (in which case mu is the folded representative).
    """
    u = tuple(x + 1 for x in v)
    sign = 1
    while True:
        i = next((j for j in range(rs.rank) if u[j] < 0), None)
        if i is None:
            break
        u = rs.simple_reflect(u, i)
        sign = -sign
    if any(x == 0 for x in u):
        sign = 0
    return tuple(x - 1 for x in u), sign


def dominant_linear(v: Weight, rs: RootSystem) -> Weight:
    """The dominant representative of v under the unshifted finite-Weyl action."""
    u = v
    while True:
        i = next((j for j in range(rs.rank) if u[j] < 0), None)
        if i is None:
            return u
        u = rs.simple_reflect(u, i)


def signed_orbit(v: Weight, rs: RootSystem) -> list[tuple[Weight, int]]:
    """The finite-Weyl orbit of v with determinant signs, as (w(v), det w) pairs.

    Only meaningful for v off all reflection walls (regular); for wall
    weights duplicate images with opposite signs would collide.
    """
    seen: dict[Weight, int] = {v: 1}
    frontier = [v]
    while frontier:
        nxt = []
        for x in frontier:
            s = seen[x]
            for i in range(rs.rank):
                y = rs.simple_reflect(x, i)
                if y not in seen:
                    seen[y] = -s
                    nxt.append(y)
        frontier = nxt
    return sorted(seen.items())


def orbit(v: Weight, rs: RootSystem) -> list[Weight]:
    """The finite-Weyl orbit of v (linear action)."""
    seen = {v}
    frontier = [v]
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(rs.rank):
                y = rs.simple_reflect(x, i)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def weyl_dim(v: Weight, rs: RootSystem) -> int:
    """Dimension of the irreducible with highest weight v (Weyl dimension formula)."""
    if not rs.is_dominant(v):
        raise ValueError(f"{v} is not dominant")
    num = 1
    den = 1
    vr = tuple(x + 1 for x in v)
    for beta in range(len(rs.positive_roots)):
        num *= rs.pairing(vr, beta)
        den *= rs.pairing(rs.rho, beta)
    assert num % den == 0
    return num // den
