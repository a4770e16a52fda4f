"""Kazhdan-Lusztig and R-polynomials for the affine Weyl group.

Polynomials are dense integer coefficient lists in one variable q.
The KL recursion picks the smallest right descent of the longer element,
splits on whether it also descends the shorter one, and subtracts the
mu-coefficient correction terms; R-polynomials use the plain descent
recursion and serve as an independent cross-check through the inversion
identity

    q^(l(w)-l(y)) P_yw(1/q) - P_yw(q) = sum_{y < x <= w} R_yx(q) P_xw(q).

Everything is memoized per group; tables can be persisted to JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .affine import AffineElement, AffineWeylGroup

CACHE_FORMAT = 1


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial in q; coeffs[k] is the q^k coefficient, no trailing zeros."""

    coeffs: tuple[int, ...] = ()

    @staticmethod
    def of(coeffs) -> "IntPoly":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return IntPoly(tuple(cs))

    @staticmethod
    def const(c: int) -> "IntPoly":
        return IntPoly.of([c])

    @staticmethod
    def monomial(deg: int, c: int = 1) -> "IntPoly":
        return IntPoly.of([0] * deg + [c])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly.of([self.coeff(k) + other.coeff(k) for k in range(n)])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly.of([self.coeff(k) - other.coeff(k) for k in range(n)])

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly.of(out)

    def scale(self, c: int) -> "IntPoly":
        return IntPoly.of([c * a for a in self.coeffs])

    def shift(self, k: int) -> "IntPoly":
        """Multiply by q^k."""
        if self.is_zero:
            return self
        return IntPoly.of([0] * k + list(self.coeffs))

    def reversed_to(self, n: int) -> "IntPoly":
        """q^n * P(1/q), valid when n >= degree."""
        assert n >= self.degree
        out = [0] * (n + 1)
        for k, a in enumerate(self.coeffs):
            out[n - k] = a
        return IntPoly.of(out)

    def eval_at(self, x: int) -> int:
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc


ZERO = IntPoly()
ONE = IntPoly.const(1)
Q = IntPoly.monomial(1)
Q_MINUS_1 = IntPoly.of([-1, 1])


class KLTable:
    """Memoized Kazhdan-Lusztig and R-polynomials for one affine group."""

    def __init__(self, group: AffineWeylGroup):
        self.group = group
        self._kl: dict[tuple, IntPoly] = {}
        self._r: dict[tuple, IntPoly] = {}

    # -- R-polynomials ---------------------------------------------------

    def r_poly(self, y: AffineElement, w: AffineElement) -> IntPoly:
        if y == w:
            return ONE
        if not self.group.bruhat_leq(y, w):
            return ZERO
        key = (y.alcove, w.alcove)
        cached = self._r.get(key)
        if cached is not None:
            return cached
        s = self.group.generator(min(self.group.right_descents(w)))
        ws = w * s
        ys = y * s
        if ys.length < y.length:
            result = self.r_poly(ys, ws)
        else:
            result = Q_MINUS_1 * self.r_poly(y, ws) + self.r_poly(ys, ws).shift(1)
        self._r[key] = result
        return result

    # -- KL polynomials ----------------------------------------------------

    def kl_poly(self, y: AffineElement, w: AffineElement) -> IntPoly:
        if y == w:
            return ONE
        if not self.group.bruhat_leq(y, w):
            return ZERO
        key = (y.alcove, w.alcove)
        cached = self._kl.get(key)
        if cached is not None:
            return cached
        result = self._kl_recurse(y, w, min(self.group.right_descents(w)))
        bound = (w.length - y.length - 1) // 2
        if result.degree > bound or any(c < 0 for c in result.coeffs) or result.coeff(0) != 1:
            raise AssertionError(
                f"KL invariant violated for y={y.alcove}, w={w.alcove}: {result.coeffs}")
        self._kl[key] = result
        return result

    def _kl_recurse(self, y: AffineElement, w: AffineElement, s_name: str) -> IntPoly:
        s = self.group.generator(s_name)
        ws = w * s
        ys = y * s
        if ys.length < y.length:
            base = self.kl_poly(ys, ws) + self.kl_poly(y, ws).shift(1)
        else:
            base = self.kl_poly(y, ws) + self.kl_poly(ys, ws).shift(1)
        corr = ZERO
        for z in self.group.bruhat_interval_below(ws):
            if (z * s).length > z.length:
                continue
            m = self.mu(z, ws)
            if m == 0 or not self.group.bruhat_leq(y, z):
                continue
            corr = corr + (self.kl_poly(y, z).scale(m)).shift((w.length - z.length) // 2)
        return base - corr

    def mu(self, z: AffineElement, w: AffineElement) -> int:
        """Coefficient of q^((l(w)-l(z)-1)/2) in P_zw, zero when the gap is even."""
        gap = w.length - z.length
        if gap <= 0 or gap % 2 == 0:
            return 0
        return self.kl_poly(z, w).coeff((gap - 1) // 2)

    def kl_eval_minus_one(self, y: AffineElement, w: AffineElement) -> int:
        return self.kl_poly(y, w).eval_at(-1)

    def kl_eval_one(self, y: AffineElement, w: AffineElement) -> int:
        """Total coefficient mass of P_yw; the character-formula multiplicity.

        This is the evaluation at -1 of the half-power (v) normalization,
        in which the q-variable polynomial 1 + q reads 1 + v^2.
        """
        return self.kl_poly(y, w).eval_at(1)

    def kl_poly_all_descents(self, y: AffineElement, w: AffineElement) -> list[IntPoly]:
        """The recursion evaluated at every right-descent choice (sanity hook)."""
        if y == w or not self.group.bruhat_leq(y, w):
            return [self.kl_poly(y, w)]
        return [self._kl_recurse(y, w, s) for s in sorted(self.group.right_descents(w))]

    def check_inversion_identity(self, y: AffineElement, w: AffineElement) -> bool:
        """The KL/R compatibility identity for one pair."""
        n = w.length - y.length
        p = self.kl_poly(y, w)
        lhs = p.reversed_to(n) - p
        rhs = ZERO
        for x in self.group.bruhat_interval_below(w):
            if x == y or not self.group.bruhat_leq(y, x):
                continue
            rhs = rhs + self.r_poly(y, x) * self.kl_poly(x, w)
        return lhs == rhs

    # -- persistence -------------------------------------------------------

    def to_payload(self) -> dict:
        pairs = [
            {"y": list(y), "w": list(w), "coeffs": list(poly.coeffs)}
            for (y, w), poly in sorted(self._kl.items())
        ]
        series, rank, p = self.group.signature
        return {"format": CACHE_FORMAT, "series": series, "rank": rank, "p": p,
                "pairs": pairs}

    def save(self, path) -> int:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = self.to_payload()
        path.write_text(json.dumps(payload, sort_keys=True, separators=(",", ":")))
        return len(payload["pairs"])

    def load(self, path) -> int:
        payload = json.loads(Path(path).read_text())
        if payload.get("format") != CACHE_FORMAT:
            raise ValueError(f"unsupported cache format {payload.get('format')!r}")
        series, rank, p = self.group.signature
        if (payload["series"], payload["rank"], payload["p"]) != (series, rank, p):
            raise ValueError("cache file belongs to a different group")
        count = 0
        for entry in payload["pairs"]:
            key = (tuple(entry["y"]), tuple(entry["w"]))
            self._kl[key] = IntPoly.of(entry["coeffs"])
            count += 1
        return count

    def clear(self):
        self._kl.clear()
        self._r.clear()

    @property
    def size(self) -> int:
        return len(self._kl)
