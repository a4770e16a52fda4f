"""The Weyl character ring over exact integers.

A character element is a finite integer combination either of Weyl
characters indexed by dominant weights ("weyl" basis) or of weight
monomials with a finite-Weyl-invariant multiplicity function ("weight"
basis).  Weight multiplicities of a Weyl character come from the
Freudenthal recursion; conversion back to the weyl basis convolves with
the alternating orbit sum of rho and reads off the strictly dominant
entries.  Products convolve in the weight basis.  No floating point
anywhere.
"""

from __future__ import annotations

import warnings
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as iproduct

from .affine import AffineWeylGroup
from .rootdata import (
    RootSystem,
    Weight,
    dominant_linear,
    dominant_representative,
    orbit,
    signed_orbit,
    weyl_dim,
)

WEYL = "weyl"
WEIGHT = "weight"


@dataclass(frozen=True)
class CharElem:
    """A finite integer combination over one of the two character bases."""

    rs: RootSystem = field(compare=False, repr=False)
    basis: str = WEYL
    terms: dict = field(default_factory=dict)

    @staticmethod
    def make(rs: RootSystem, basis: str, terms) -> "CharElem":
        clean = {tuple(w): int(c) for w, c in dict(terms).items() if c}
        return CharElem(rs=rs, basis=basis, terms=clean)

    @staticmethod
    def zero(rs: RootSystem, basis: str = WEYL) -> "CharElem":
        return CharElem(rs=rs, basis=basis, terms={})

    def coeff(self, w: Weight) -> int:
        return self.terms.get(tuple(w), 0)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[Weight]:
        return sorted(self.terms)

    def __add__(self, other: "CharElem") -> "CharElem":
        self._check_compatible(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return CharElem.make(self.rs, self.basis, out)

    def __sub__(self, other: "CharElem") -> "CharElem":
        return self + other.scale(-1)

    def scale(self, c: int) -> "CharElem":
        return CharElem.make(self.rs, self.basis, {w: c * x for w, x in self.terms.items()})

    def _check_compatible(self, other: "CharElem"):
        if self.rs.key != other.rs.key or self.basis != other.basis:
            raise ValueError("character elements over different rings or bases")

    def __eq__(self, other):
        return (isinstance(other, CharElem)
                and self.rs.key == other.rs.key
                and self.basis == other.basis
                and self.terms == other.terms)

    def to_payload(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"weight": list(w), "coeff": c} for w, c in sorted(self.terms.items())],
        }

    @staticmethod
    def from_payload(rs: RootSystem, payload: dict) -> "CharElem":
        basis = payload.get("basis", WEYL)
        if basis not in (WEYL, WEIGHT):
            raise ValueError(f"unknown basis {basis!r}")
        terms: dict[Weight, int] = {}
        for entry in payload.get("terms", []):
            w = tuple(int(x) for x in entry["weight"])
            terms[w] = terms.get(w, 0) + int(entry["coeff"])
        return CharElem.make(rs, basis, terms)


@lru_cache(maxsize=None)
def _weight_multiplicities(rs: RootSystem, nu: Weight) -> tuple[tuple[Weight, int], ...]:
    """Weight multiplicities of the irreducible with highest weight nu (Freudenthal)."""
    rank = rs.rank
    d = rs.symmetrizer
    nroots = len(rs.positive_roots)

    def form_wr(x, k):
        # (x, sum_j k_j alpha_j) for x in fundamental-weight coordinates
        return sum(x[j] * k[j] * d[j] for j in range(rank))

    # dominant weights mu <= nu, indexed by root-coordinate offsets k >= 0
    kmax = []
    for j in range(rank):
        bound = sum(rs.cartan_inverse[j][i] * nu[i] for i in range(rank))
        kmax.append(int(bound))
    doms: list[tuple[int, tuple[int, ...], Weight]] = []
    for k in iproduct(*(range(m + 1) for m in kmax)):
        mu = tuple(nu[i] - sum(rs.cartan[i][j] * k[j] for j in range(rank))
                   for i in range(rank))
        if rs.is_dominant(mu):
            doms.append((sum(k), k, mu))
    doms.sort()

    mult: dict[Weight, int] = {}
    offsets: dict[Weight, tuple[int, ...]] = {}
    for level, k, mu in doms:
        if level == 0:
            mult[mu] = 1
            offsets[mu] = k
            continue
        num = 0
        for b in range(nroots):
            rc = rs.root_coords[b]
            alpha = rs.positive_roots[b]
            jmax = min((k[i] // rc[i]) for i in range(rank) if rc[i] > 0)
            x = mu
            for j in range(1, jmax + 1):
                x = rs.weights_add(x, alpha)
                m = mult.get(dominant_linear(x, rs), 0)
                if m:
                    num += m * form_wr(x, rc)
        two_rho_shift = tuple(nu[i] + mu[i] + 2 for i in range(rank))
        den = form_wr(two_rho_shift, k)
        assert den > 0 and (2 * num) % den == 0
        mult[mu] = (2 * num) // den
        offsets[mu] = k

    out = []
    for mu, m in mult.items():
        if m:
            for x in orbit(mu, rs):
                out.append((x, m))
    return tuple(sorted(out))


def weyl_character(rs: RootSystem, nu: Weight) -> CharElem:
    """The Weyl character of highest weight nu in the weight basis."""
    nu = tuple(nu)
    if not rs.is_dominant(nu):
        raise ValueError(f"{nu} is not dominant")
    return CharElem.make(rs, WEIGHT, dict(_weight_multiplicities(rs, nu)))


def alternating_orbit_sum(rs: RootSystem, x: Weight) -> dict[Weight, int]:
    """The signed finite-Weyl orbit sum of a regular point (test oracle helper)."""
    return {w: s for w, s in signed_orbit(x, rs)}


def to_weight_basis(c: CharElem) -> CharElem:
    if c.basis == WEIGHT:
        return c
    out: dict[Weight, int] = defaultdict(int)
    for nu, coeff in c.terms.items():
        for x, m in _weight_multiplicities(c.rs, nu):
            out[x] += coeff * m
    return CharElem.make(c.rs, WEIGHT, out)


def to_weyl_basis(c: CharElem) -> CharElem:
    """Exact expansion of a symmetric weight-basis element in Weyl characters."""
    if c.basis == WEYL:
        return c
    rs = c.rs
    reps: dict[Weight, int] = {}
    for w, coeff in c.terms.items():
        reps.setdefault(dominant_linear(w, rs), coeff)
    for rep, coeff in reps.items():
        for x in orbit(rep, rs):
            if c.terms.get(x, 0) != coeff:
                raise ValueError("weight-basis element is not Weyl-group symmetric")
    rho = rs.rho
    denom = signed_orbit(rho, rs)
    conv: dict[Weight, int] = defaultdict(int)
    for w, coeff in c.terms.items():
        for x, s in denom:
            conv[rs.weights_add(w, x)] += coeff * s
    out = {}
    for x, val in conv.items():
        if val and all(xi >= 1 for xi in x):
            out[rs.weights_sub(x, rho)] = val
    result = CharElem.make(rs, WEYL, out)
    assert dim(result) == dim(c)
    return result


def product(a: CharElem, b: CharElem) -> CharElem:
    """Ring product, computed by weight-basis convolution; result in the Weyl basis."""
    if a.rs.key != b.rs.key:
        raise ValueError("character elements over different rings")
    aw = to_weight_basis(a)
    bw = to_weight_basis(b)
    if len(bw.terms) < len(aw.terms):
        aw, bw = bw, aw
    out: dict[Weight, int] = defaultdict(int)
    for w1, c1 in aw.terms.items():
        for w2, c2 in bw.terms.items():
            out[a.rs.weights_add(w1, w2)] += c1 * c2
    return to_weyl_basis(CharElem.make(a.rs, WEIGHT, out))


def weyl_char_of(rs: RootSystem, v: Weight) -> CharElem:
    """chi of an arbitrary label, normalized by the shifted dominant representative.

    Zero when v+rho sits on a finite reflection wall, otherwise the sign
    of the normalizing element times the Weyl character of the dominant
    representative; returned in the Weyl basis.
    """
    dom, sign = dominant_representative(v, rs)
    if sign == 0:
        return CharElem.zero(rs)
    return CharElem.make(rs, WEYL, {dom: sign})


def brauer_klimyk_product(a_hw: Weight, b_hw: Weight, rs: RootSystem) -> CharElem:
    """Product of two Weyl characters by straightening shifted weights (test oracle)."""
    out = CharElem.zero(rs)
    for x, m in _weight_multiplicities(rs, tuple(b_hw)):
        term = weyl_char_of(rs, rs.weights_add(tuple(a_hw), x))
        out = out + term.scale(m)
    return out


def project_orbit(group: AffineWeylGroup, c: CharElem, mu: Weight) -> CharElem:
    """Keep the Weyl-basis terms whose label lies in the dot orbit of mu."""
    mu = tuple(mu)
    group.stabilizer(mu)  # validates mu against the base-alcove closure
    cw = to_weyl_basis(c)
    kept = {nu: coeff for nu, coeff in cw.terms.items() if group.orbit_rep(nu) == mu}
    return CharElem.make(c.rs, WEYL, kept)


def translate(group: AffineWeylGroup, lam: Weight, mu: Weight, c: CharElem) -> CharElem:
    """Translation operator between the lam and mu orbits at character level.

    Multiplies by the Weyl character of the dominant representative of
    mu - lam, then projects to the mu orbit.  Terms of c outside the lam
    orbit are discarded with a warning.
    """
    lam, mu = tuple(lam), tuple(mu)
    group.stabilizer(lam)
    group.stabilizer(mu)
    cw = to_weyl_basis(c)
    on_orbit = {nu: x for nu, x in cw.terms.items() if group.orbit_rep(nu) == lam}
    if len(on_orbit) != len(cw.terms):
        warnings.warn("translation input has terms off the source orbit; projecting them away",
                      stacklevel=2)
    cw = CharElem.make(c.rs, WEYL, on_orbit)
    if cw.is_zero:
        return cw
    nu = dominant_linear(c.rs.weights_sub(mu, lam), c.rs)
    return project_orbit(group, product(cw, CharElem.make(c.rs, WEYL, {nu: 1})), mu)


def frobenius_twist(c: CharElem, p: int) -> CharElem:
    """Scale every weight by p; returned in the weight basis."""
    cw = to_weight_basis(c)
    return CharElem.make(c.rs, WEIGHT,
                         {tuple(p * x for x in w): m for w, m in cw.terms.items()})


def dim(c: CharElem) -> int:
    """Total multiplicity: evaluation of the character at the identity."""
    if c.basis == WEIGHT:
        return sum(c.terms.values())
    return sum(coeff * weyl_dim(nu, c.rs) for nu, coeff in c.terms.items())
