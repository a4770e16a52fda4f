"""The affine Weyl group in the alcove model.

Elements act on weights by the rho-shifted (dot) action.  Internally an
element is an affine map u |-> M u + t on shifted coordinates u = v + rho,
with M an integer matrix from the finite Weyl group and t a translation
in p times the root lattice.  The canonical identity of an element is its
alcove tuple (m_beta), indexed by the positive roots of the root system:
the image of the base antidominant alcove (all m_beta = 0) under the
element.  Tuple equality is element equality.

Generators are named "s1".."s<rank>" for the reflections fixing the
finite walls of the base alcove and "s0" for the reflection in its
affine wall.  Words are products read left to right, with the rightmost
letter acting first on weights.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct

from .rootdata import RootSystem, Weight, build_root_system

Matrix = tuple[tuple[int, ...], ...]


class ParameterMismatchError(ValueError):
    """Operands belong to different affine groups."""


class InvalidAlcoveError(ValueError):
    """An integer tuple that is not the alcove of any group element."""


def _identity_matrix(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _mat_vec(a: Matrix, v) -> tuple[int, ...]:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in a)


def _mat_inverse(a: Matrix) -> Matrix:
    """Exact inverse of a unimodular integer matrix."""
    n = len(a)
    aug = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        scale = 1 / aug[col][col]
        aug[col] = [x * scale for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    out = []
    for i in range(n):
        row = aug[i][n:]
        assert all(x.denominator == 1 for x in row)
        out.append(tuple(int(x) for x in row))
    return tuple(out)


@dataclass(frozen=True)
class AffineElement:
    """A group element, canonically identified by its alcove tuple."""

    group: "AffineWeylGroup" = field(compare=False, repr=False)
    linear: Matrix = field(compare=False, repr=False)
    translation: tuple[int, ...] = field(compare=False, repr=False)
    alcove: tuple[int, ...] = ()
    _key: tuple = ()

    @property
    def p(self) -> int:
        return self.group.p

    def apply_shifted(self, u: tuple[int, ...]) -> tuple[int, ...]:
        """Action on rho-shifted coordinates: u |-> M u + t."""
        return tuple(x + t for x, t in zip(_mat_vec(self.linear, u), self.translation))

    def dot(self, v: Weight) -> Weight:
        """Dot action on a weight."""
        u = self.apply_shifted(tuple(x + 1 for x in v))
        return tuple(x - 1 for x in u)

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        if other.group is not self.group and other.group.signature != self.group.signature:
            raise ParameterMismatchError("elements from different groups")
        m = _mat_mul(self.linear, other.linear)
        t = tuple(a + b for a, b in zip(_mat_vec(self.linear, other.translation), self.translation))
        return self.group._element(m, t)

    def inverse(self) -> "AffineElement":
        minv = _mat_inverse(self.linear)
        tinv = tuple(-x for x in _mat_vec(minv, self.translation))
        return self.group._element(minv, tinv)

    @property
    def length(self) -> int:
        """Coxeter length: hyperplanes separating the element's alcove from the base."""
        return sum(abs(m) for m in self.alcove)

    def is_identity(self) -> bool:
        return all(m == 0 for m in self.alcove)

    def reduced_word(self) -> tuple[str, ...]:
        """A reduced word, letters multiplying left to right."""
        return self.group.reduced_word(self)

    @property
    def word_str(self) -> str:
        return ",".join(self.reduced_word()) if not self.is_identity() else "e"

    def right_descents(self) -> frozenset[str]:
        """Generator names s with length(w*s) < length(w)."""
        return self.group.right_descents(self)

    def to_payload(self) -> dict:
        return {"p": self.group.p, "alcove": list(self.alcove)}

    def __hash__(self):
        return hash(self._key)

    def __eq__(self, other):
        return isinstance(other, AffineElement) and self._key == other._key

    def __repr__(self):
        return f"AffineElement({self.group.signature}, alcove={self.alcove})"


@dataclass(frozen=True)
class WallDescriptor:
    """A weight in the closure of the base alcove together with its stabilizer."""

    mu: Weight
    stabilizer: frozenset[str]

    @property
    def is_regular(self) -> bool:
        return not self.stabilizer


class _GeneratorData:
    """Precomputed data for the tuple-level left action of one generator."""

    __slots__ = ("name", "root_index", "offset", "image", "coef")

    def __init__(self, name, root_index, offset, image, coef):
        self.name = name
        self.root_index = root_index   # index a of the reflecting root
        self.offset = offset           # reflection hyperplane <u, a_vee> = offset*p
        self.image = image             # image[b] = (index, sign) with s_a(beta_vee) = sign * coroot
        self.coef = coef               # coef[b] = <alpha_a, beta_vee>


class AffineWeylGroup:
    """The affine Weyl group for a root system and integer parameter p >= 2.

    Holds the generator data and the memo tables (length, Bruhat order,
    reduced words, dominant-element membership).  Instances are intended
    to be shared; all cached results are value-deterministic.
    """

    def __init__(self, rs: RootSystem, p: int):
        if p < 2:
            raise ValueError("p must be at least 2")
        self.rs = rs
        self.p = p
        self.signature = (rs.series, rs.rank, p)
        self._nroots = len(rs.positive_roots)
        self._interior_cache: list[Weight] | None = None
        self._elements: dict[tuple[int, ...], AffineElement] = {}
        self._bruhat_memo: dict[tuple, bool] = {}
        self._word_memo: dict[tuple[int, ...], tuple[str, ...]] = {}
        self._interval_memo: dict[tuple[int, ...], frozenset] = {}
        self._dominant_memo: dict[tuple[int, ...], bool] = {}
        self._fold_memo: dict[Weight, tuple[Weight, tuple[str, ...]]] = {}
        self._gen_data: dict[str, _GeneratorData] = {}
        self._gen_maps: dict[str, tuple[Matrix, tuple[int, ...]]] = {}
        self._build_generators()
        self.identity = self._element(_identity_matrix(rs.rank), (0,) * rs.rank)

    # -- construction ------------------------------------------------

    def _build_generators(self):
        rs = self.rs
        n = rs.rank
        coroot_index = {c: i for i, c in enumerate(rs.coroot_coords)}

        def reflection_matrix(a: int) -> Matrix:
            alpha = rs.positive_roots[a]
            cor = rs.coroot_coords[a]
            return tuple(
                tuple(int(i == j) - alpha[i] * cor[j] for j in range(n))
                for i in range(n)
            )

        def tuple_action(a: int, offset: int) -> _GeneratorData:
            cor_a = rs.coroot_coords[a]
            image = []
            coef = []
            for b in range(self._nroots):
                c_b = rs.pairing(rs.positive_roots[a], b)
                coef.append(c_b)
                img = tuple(x - c_b * y for x, y in zip(rs.coroot_coords[b], cor_a))
                if img in coroot_index:
                    image.append((coroot_index[img], 1))
                else:
                    image.append((coroot_index[tuple(-x for x in img)], -1))
            return _GeneratorData(None, a, offset, tuple(image), tuple(coef))

        names = []
        for i in range(n):
            # simple root alpha_i sits at a known index in the positive-root order
            a = rs.positive_roots.index(rs.simple_root(i))
            name = f"s{i + 1}"
            data = tuple_action(a, 0)
            data.name = name
            self._gen_data[name] = data
            self._gen_maps[name] = (reflection_matrix(a), (0,) * n)
            names.append(name)
        a0 = rs.affine_root_index
        data = tuple_action(a0, -1)
        data.name = "s0"
        self._gen_data["s0"] = data
        alpha0 = rs.positive_roots[a0]
        self._gen_maps["s0"] = (reflection_matrix(a0), tuple(-self.p * x for x in alpha0))
        names.append("s0")
        self.generator_names = tuple(names)

    def _alcove_of_map(self, linear: Matrix, translation) -> tuple[int, ...]:
        rs, h, p = self.rs, self.rs.coxeter_number, self.p
        mrho = _mat_vec(linear, rs.rho)
        out = []
        for b in range(self._nroots):
            num = -p * rs.pairing(mrho, b) + h * rs.pairing(translation, b)
            out.append(num // (h * p) + 1)
        return tuple(out)

    def _element(self, linear: Matrix, translation) -> AffineElement:
        alcove = self._alcove_of_map(linear, translation)
        cached = self._elements.get(alcove)
        if cached is not None:
            return cached
        el = AffineElement(
            group=self,
            linear=linear,
            translation=tuple(translation),
            alcove=alcove,
            _key=(self.signature, alcove),
        )
        self._elements[alcove] = el
        return el

    # -- basic API ---------------------------------------------------

    def generator(self, name: str) -> AffineElement:
        m, t = self._gen_maps[name]
        return self._element(m, t)

    def generators(self) -> list[AffineElement]:
        """The rank+1 Coxeter generators, finite walls first, affine wall last."""
        return [self.generator(name) for name in self.generator_names]

    def from_word(self, word) -> AffineElement:
        """Element from a word of generator names (product left to right)."""
        if isinstance(word, str):
            word = [w for w in word.split(",") if w and w != "e"]
        el = self.identity
        for name in word:
            if name not in self._gen_data:
                raise ValueError(f"unknown generator {name!r}")
            el = el * self.generator(name)
        return el

    def from_alcove(self, alcove) -> AffineElement:
        """Element from its alcove tuple; raises InvalidAlcoveError for junk tuples."""
        alcove = tuple(int(m) for m in alcove)
        if len(alcove) != self._nroots:
            raise InvalidAlcoveError(
                f"expected {self._nroots} coordinates, got {len(alcove)}")
        word = []
        current = list(alcove)
        budget = sum(abs(m) for m in alcove)
        while any(current):
            name = self._separating_generator(current)
            if name is None or budget <= 0:
                raise InvalidAlcoveError(f"{alcove} is not a valid alcove tuple")
            current = self._left_act_tuple(name, current)
            word.append(name)
            budget -= 1
        el = self.from_word(word)
        if el.alcove != alcove:
            raise InvalidAlcoveError(f"{alcove} is not a valid alcove tuple")
        return el

    def from_payload(self, payload: dict) -> AffineElement:
        """Element from {"p":..., "alcove":[...]} or {"word":[...]} payloads."""
        if "p" in payload and payload["p"] != self.p:
            raise ParameterMismatchError(
                f"payload p={payload['p']} does not match group p={self.p}")
        if "alcove" in payload:
            return self.from_alcove(payload["alcove"])
        if "word" in payload:
            return self.from_word(payload["word"])
        raise ValueError("element payload needs 'alcove' or 'word'")

    def translation_element(self, nu_root_coords) -> AffineElement:
        """The translation by p * nu for nu given in simple-root coordinates."""
        rs = self.rs
        nu_fw = tuple(
            sum(rs.cartan[i][j] * nu_root_coords[j] for j in range(rs.rank))
            for i in range(rs.rank)
        )
        return self._element(_identity_matrix(rs.rank),
                             tuple(self.p * x for x in nu_fw))

    # -- words and descents -------------------------------------------

    def _separating_generator(self, m_tuple) -> str | None:
        """A generator whose base wall separates the alcove from the base alcove."""
        rs = self.rs
        for i in range(rs.rank):
            a = self._gen_data[f"s{i + 1}"].root_index
            if m_tuple[a] >= 1:
                return f"s{i + 1}"
        if m_tuple[rs.affine_root_index] <= -1:
            return "s0"
        return None

    def _left_act_tuple(self, name: str, m_tuple):
        """Alcove tuple of g * w from the tuple of w, for a generator g."""
        g = self._gen_data[name]
        off = g.offset
        out = [0] * self._nroots
        for b in range(self._nroots):
            idx, sign = g.image[b]
            if sign == 1:
                out[b] = m_tuple[idx] + off * g.coef[b]
            else:
                out[b] = 1 - m_tuple[idx] + off * g.coef[b]
        return out

    def reduced_word(self, el: AffineElement) -> tuple[str, ...]:
        cached = self._word_memo.get(el.alcove)
        if cached is not None:
            return cached
        word = []
        current = el
        while not current.is_identity():
            name = self._separating_generator(current.alcove)
            assert name is not None
            current = self.generator(name) * current
            word.append(name)
        word_t = tuple(word)
        assert len(word_t) == el.length
        self._word_memo[el.alcove] = word_t
        return word_t

    def right_descents(self, el: AffineElement) -> frozenset[str]:
        out = []
        for name in self.generator_names:
            if (el * self.generator(name)).length < el.length:
                out.append(name)
        return frozenset(out)

    def dot_action(self, w, v: Weight) -> Weight:
        """Dot action of an element or word on a weight."""
        if isinstance(w, AffineElement):
            return w.dot(v)
        return self.from_word(w).dot(v)

    # -- Bruhat order --------------------------------------------------

    def bruhat_leq(self, y: AffineElement, w: AffineElement) -> bool:
        """Bruhat order via the right-descent recursion."""
        if y.length > w.length:
            return False
        if y == w:
            return True
        if w.is_identity():
            return False
        key = (y.alcove, w.alcove)
        cached = self._bruhat_memo.get(key)
        if cached is not None:
            return cached
        s = min(self.right_descents(w))
        ws = w * self.generator(s)
        ys = y * self.generator(s)
        smaller = ys if ys.length < y.length else y
        result = self.bruhat_leq(smaller, ws)
        self._bruhat_memo[key] = result
        return result

    def bruhat_interval_below(self, w: AffineElement) -> frozenset:
        """All elements <= w, by closing a fixed reduced word under subwords."""
        cached = self._interval_memo.get(w.alcove)
        if cached is not None:
            return cached
        word = self.reduced_word(w)
        layer = {self.identity}
        for name in word:
            g = self.generator(name)
            layer |= {el * g for el in layer}
        result = frozenset(layer)
        self._interval_memo[w.alcove] = result
        return result

    # -- distinguished subsets ------------------------------------------

    def base_alcove_points(self) -> list[Weight]:
        """Integral weights interior to the base antidominant alcove (needs p >= h)."""
        rs, p = self.rs, self.p
        box = [range(-p + 1, 0) for _ in range(rs.rank)]
        points = []
        for shifted in iproduct(*box):
            if all(-p < rs.pairing(shifted, b) < 0 for b in range(self._nroots)):
                points.append(tuple(x - 1 for x in shifted))
        if not points:
            raise ValueError(
                f"no integral weights interior to the base alcove (p={p} < h={rs.coxeter_number})")
        return sorted(points)

    def closure_points(self) -> list[Weight]:
        """Integral weights in the closure of the base antidominant alcove."""
        rs, p = self.rs, self.p
        box = [range(-p, 1) for _ in range(rs.rank)]
        points = []
        for shifted in iproduct(*box):
            if all(-p <= rs.pairing(shifted, b) <= 0 for b in range(self._nroots)):
                points.append(tuple(x - 1 for x in shifted))
        return sorted(points)

    def is_dominant_element(self, w: AffineElement) -> bool:
        """Whether w maps every integral point of the base alcove to a dominant weight."""
        cached = self._dominant_memo.get(w.alcove)
        if cached is not None:
            return cached
        result = all(self.rs.is_dominant(w.dot(g)) for g in self._interior_points())
        self._dominant_memo[w.alcove] = result
        return result

    def _interior_points(self):
        if self._interior_cache is None:
            self._interior_cache = self.base_alcove_points()
        return self._interior_cache

    def elements_up_to(self, max_len: int) -> list[AffineElement]:
        """All elements of length <= max_len, sorted by (length, reduced word)."""
        seen = {self.identity}
        frontier = [self.identity]
        for depth in range(1, max_len + 1):
            nxt = []
            for w in frontier:
                for name in self.generator_names:
                    x = w * self.generator(name)
                    if x not in seen:
                        assert x.length == depth
                        seen.add(x)
                        nxt.append(x)
            frontier = nxt
        return sorted(seen, key=lambda w: (w.length, self.reduced_word(w)))

    def enumerate_dominant(self, max_len: int) -> list[AffineElement]:
        """Elements mapping the base-alcove integral points into the dominant cone."""
        return [w for w in self.elements_up_to(max_len) if self.is_dominant_element(w)]

    def stabilizer(self, mu: Weight) -> WallDescriptor:
        """Generators fixing mu, for mu an integral weight in the base-alcove closure."""
        rs = self.rs
        shifted = tuple(x + 1 for x in mu)
        if not all(-self.p <= rs.pairing(shifted, b) <= 0 for b in range(self._nroots)):
            raise ValueError(f"{mu} is not in the closure of the base alcove")
        fixing = frozenset(
            name for name in self.generator_names
            if self.generator(name).dot(mu) == mu
        )
        assert fixing != frozenset(self.generator_names)
        return WallDescriptor(mu=mu, stabilizer=fixing)

    def is_min_coset_rep(self, w: AffineElement, stab: frozenset[str] | WallDescriptor) -> bool:
        """Minimal-length representative test for the right coset w W_J."""
        J = stab.stabilizer if isinstance(stab, WallDescriptor) else stab
        return not (self.right_descents(w) & J)

    def parabolic_elements(self, J: frozenset[str]) -> list[AffineElement]:
        """All elements of the (finite) standard parabolic subgroup generated by J."""
        if frozenset(J) == frozenset(self.generator_names):
            raise ValueError("the full generator set generates an infinite group")
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for name in J:
                    x = w * self.generator(name)
                    if x not in seen:
                        seen.add(x)
                        nxt.append(x)
            frontier = nxt
        return sorted(seen, key=lambda w: (w.length, self.reduced_word(w)))

    def orbit_data(self, gamma: Weight) -> tuple[Weight, AffineElement]:
        """Fold gamma to its orbit representative mu in the base-alcove closure.

        Returns (mu, w) with w.mu == gamma and w the minimal-length element
        doing so (the minimal representative of its coset modulo the
        stabilizer of mu).
        """
        cached = self._fold_memo.get(gamma)
        if cached is not None:
            mu, word = cached
            return mu, self.from_word(word)
        rs = self.rs
        u = tuple(x + 1 for x in gamma)
        letters = []
        while True:
            i = next((j for j in range(rs.rank) if u[j] > 0), None)
            if i is not None:
                name = f"s{i + 1}"
            elif rs.pairing(u, rs.affine_root_index) < -self.p:
                name = "s0"
            else:
                break
            gen = self.generator(name)
            u = gen.apply_shifted(u)
            letters.append(name)
        mu = tuple(x - 1 for x in u)
        w = self.from_word(letters)
        J = self.stabilizer(mu).stabilizer
        while True:
            overlap = self.right_descents(w) & J
            if not overlap:
                break
            w = w * self.generator(min(overlap))
        assert w.dot(mu) == gamma
        self._fold_memo[gamma] = (mu, self.reduced_word(w))
        return mu, w

    def orbit_rep(self, gamma: Weight) -> Weight:
        """The orbit representative of gamma in the base-alcove closure."""
        return self.orbit_data(gamma)[0]


def affine_group(series: str, rank: int, p: int) -> AffineWeylGroup:
    """Convenience constructor from type data."""
    return AffineWeylGroup(build_root_system(series, rank), p)
