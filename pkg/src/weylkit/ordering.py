"""Order relations on weights attached to the affine reflection arrangement.

Three orders live here:

* separation counts between alcoves (signed and absolute);
* the uparrow order, generated by affine reflections that raise a weight
  in the root order;
* the order transported from the Coxeter order on the group through a
  choice of base alcove.

The uparrow decision procedure is complete: every raising chain from a
to b stays inside the simple-root-coordinate interval [a, b], so a BFS
over that finite interval either finds b or proves incomparability.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from .affine import AffineElement, AffineWeylGroup
from .rootdata import Weight


@dataclass(frozen=True)
class OrderContext:
    """A base alcove, carried as the group element mapping the antidominant base to it."""

    base: AffineElement

    @property
    def group(self) -> AffineWeylGroup:
        return self.base.group

    @classmethod
    def antidominant(cls, group: AffineWeylGroup) -> "OrderContext":
        """Base at the top antidominant alcove (all alcove coordinates 0)."""
        return cls(base=group.identity)

    @classmethod
    def dominant(cls, group: AffineWeylGroup) -> "OrderContext":
        """Base at the bottom dominant alcove (all alcove coordinates 1)."""
        n = len(group.rs.positive_roots)
        return cls(base=group.from_alcove((1,) * n))


def _alcove_tuple(target) -> tuple[int, ...]:
    return target.alcove if isinstance(target, AffineElement) else tuple(target)


def d_signed(target, ctx: OrderContext) -> int:
    """Sum of alcove-coordinate differences from the base alcove."""
    t = _alcove_tuple(target)
    b = ctx.base.alcove
    if len(t) != len(b):
        raise ValueError("alcove tuples of different root systems")
    return sum(x - y for x, y in zip(t, b))


def d_abs(target, ctx: OrderContext) -> int:
    """Number of reflection hyperplanes separating the alcove from the base."""
    t = _alcove_tuple(target)
    b = ctx.base.alcove
    if len(t) != len(b):
        raise ValueError("alcove tuples of different root systems")
    return sum(abs(x - y) for x, y in zip(t, b))


def _raising_steps(group: AffineWeylGroup, x: Weight, dmax_delta):
    """Raising reflections applicable at x whose image stays <= the delta cap.

    Yields (step, root_index) with step > 0; the image is x + step * root.
    dmax_delta caps the simple-root-coordinate increment componentwise.
    """
    rs, p = group.rs, group.p
    shifted = tuple(c + 1 for c in x)
    for b in range(len(rs.positive_roots)):
        rc = rs.root_coords[b]
        bound = None
        for i in range(rs.rank):
            if rc[i] > 0:
                cap = dmax_delta[i] // rc[i]
                bound = cap if bound is None else min(bound, cap)
        if bound is None or bound < 1:
            continue
        pair = rs.pairing(shifted, b)
        m0 = pair // p + 1
        step = m0 * p - pair
        while step <= bound:
            yield step, b
            step += p


def uparrow_leq(group: AffineWeylGroup, a: Weight, b: Weight) -> bool:
    """Whether a is below b in the order generated by raising affine reflections."""
    if a == b:
        return True
    rs = group.rs
    delta = rs.to_root_coords(rs.weights_sub(b, a))
    if any(x.denominator != 1 or x < 0 for x in delta):
        return False
    dmax = tuple(int(x) for x in delta)
    return b in uparrow_reachable(group, a, dmax)


def uparrow_reachable(group: AffineWeylGroup, a: Weight, dmax) -> set[Weight]:
    """All weights reachable from a by raising chains within the given root-coordinate cap."""
    rs = group.rs
    seen: dict[Weight, tuple[int, ...]] = {a: (0,) * rs.rank}
    frontier = [a]
    while frontier:
        nxt = []
        for x in frontier:
            dx = seen[x]
            cap = tuple(m - d for m, d in zip(dmax, dx))
            for step, b in _raising_steps(group, x, cap):
                rc = rs.root_coords[b]
                y = tuple(c + step * r for c, r in zip(x, rs.positive_roots[b]))
                if y not in seen:
                    seen[y] = tuple(d + step * r for d, r in zip(dx, rc))
                    nxt.append(y)
        frontier = nxt
    return set(seen)


def leq_base(group: AffineWeylGroup, a: Weight, b: Weight) -> bool:
    """Order transported from the Coxeter order, base at the antidominant alcove.

    Both weights are folded to their orbit representatives; weights in
    different orbits are incomparable.  Minimal-length representatives
    are compared in the Bruhat order.
    """
    mu_a, wa = group.orbit_data(a)
    mu_b, wb = group.orbit_data(b)
    if mu_a != mu_b:
        return False
    return group.bruhat_leq(wa, wb)


def leq_C(group: AffineWeylGroup, a: Weight, b: Weight, ctx: OrderContext) -> bool:
    """Order transported from the Coxeter order with generators at ctx's base alcove.

    Conjugating by the base element reduces to the antidominant base:
    the generators at alcove g.C are the conjugates g s g^-1.
    """
    g_inv = ctx.base.inverse()
    return leq_base(group, g_inv.dot(a), g_inv.dot(b))


def _closure_points_of_alcove(ctx: OrderContext) -> list[Weight]:
    """Integral weights in the closure of the context's base alcove."""
    group = ctx.group
    rs, p = group.rs, group.p
    m = ctx.base.alcove
    simple_idx = [rs.positive_roots.index(rs.simple_root(i)) for i in range(rs.rank)]
    ranges = [range((m[a] - 1) * p - 1, m[a] * p) for a in simple_idx]
    points = []
    for v in iproduct(*ranges):
        shifted = tuple(x + 1 for x in v)
        if all((m[b] - 1) * p <= rs.pairing(shifted, b) <= m[b] * p
               for b in range(len(rs.positive_roots))):
            points.append(tuple(v))
    return points


def in_shifted_dominant_region(ctx: OrderContext, v: Weight,
                               closure_points: list[Weight] | None = None) -> bool:
    """Whether v lies in (dominant weights) + (closure of the base alcove)."""
    group = ctx.group
    if closure_points is None:
        closure_points = _closure_points_of_alcove(ctx)
    return any(group.rs.is_dominant(group.rs.weights_sub(v, nu)) for nu in closure_points)


@dataclass
class OrdersameReport:
    """Outcome of the exhaustive comparison of the two orders over a weight box."""

    series: str
    rank: int
    p: int
    base_alcove: tuple[int, ...]
    box_radius: int
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    boundary_cases: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "suite": "ordersame",
            "series": self.series,
            "rank": self.rank,
            "p": self.p,
            "base_alcove": list(self.base_alcove),
            "box_radius": self.box_radius,
            "checked": self.checked,
            "violations": self.violations,
            "boundary_cases": self.boundary_cases,
        }


def check_ordersame(group: AffineWeylGroup, ctx: OrderContext,
                    box_radius: int) -> OrdersameReport:
    """Compare the base-alcove order with the uparrow order over a coordinate box.

    All ordered pairs of distinct weights in the same dot-action orbit
    are compared.  Disagreements with both weights inside the shifted
    dominant region are violations; disagreements elsewhere are recorded
    as boundary cases.
    """
    rs = group.rs
    report = OrdersameReport(
        series=rs.series, rank=rs.rank, p=group.p,
        base_alcove=ctx.base.alcove, box_radius=box_radius,
    )
    if box_radius < 0:
        return report

    weights = [tuple(v) for v in iproduct(*(range(-box_radius, box_radius + 1)
                                            for _ in range(rs.rank)))]
    orbits: dict[Weight, list[Weight]] = {}
    for v in weights:
        orbits.setdefault(group.orbit_rep(v), []).append(v)

    closure_points = _closure_points_of_alcove(ctx)
    region = {v: in_shifted_dominant_region(ctx, v, closure_points) for v in weights}

    for members in orbits.values():
        members.sort()
        # one reachability sweep per source, capped at the orbit's coordinate hull
        rc_list = [rs.to_root_coords(v) for v in members]
        hull = [max(rc[i] for rc in rc_list) for i in range(rs.rank)]
        for src, rc_src in zip(members, rc_list):
            dmax = tuple(int(h - rc_src[i]) for i, h in enumerate(hull))
            reach = uparrow_reachable(group, src, dmax)
            for dst in members:
                if dst == src:
                    continue
                up = dst in reach
                coxeter = leq_C(group, src, dst, ctx)
                report.checked += 1
                if up == coxeter:
                    continue
                entry = {
                    "lower": list(src),
                    "upper": list(dst),
                    "uparrow": up,
                    "base_order": coxeter,
                    "lower_in_region": region[src],
                    "upper_in_region": region[dst],
                }
                if region[src] and region[dst]:
                    report.violations.append(entry)
                else:
                    report.boundary_cases.append(entry)
    return report


@dataclass
class TranslationDescentReport:
    """Outcome of the descent-set invariance check under root-lattice translations."""

    series: str
    rank: int
    p: int
    nu: tuple[int, ...]
    max_len: int
    checked: int = 0
    skipped: int = 0
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "suite": "elem",
            "series": self.series,
            "rank": self.rank,
            "p": self.p,
            "nu": list(self.nu),
            "max_len": self.max_len,
            "checked": self.checked,
            "skipped": self.skipped,
            "violations": self.violations,
        }


def translation_descent_check(group: AffineWeylGroup, nu_root_coords,
                              max_len: int) -> TranslationDescentReport:
    """Check that composing with a p-scaled root-lattice translation preserves descents.

    For every enumerated w mapping the base-alcove points into the
    dominant cone, if t*w does too (t the translation by p*nu), the two
    right descent sets must coincide.
    """
    rs = group.rs
    nu = tuple(int(x) for x in nu_root_coords)
    report = TranslationDescentReport(
        series=rs.series, rank=rs.rank, p=group.p, nu=nu, max_len=max_len)
    t = group.translation_element(nu)
    for w in group.enumerate_dominant(max_len):
        tw = t * w
        if not group.is_dominant_element(tw):
            report.skipped += 1
            continue
        report.checked += 1
        rw = w.right_descents()
        rtw = tw.right_descents()
        if rw != rtw:
            report.violations.append({
                "word": list(w.reduced_word()),
                "descents": sorted(rw),
                "translated_descents": sorted(rtw),
            })
    return report
