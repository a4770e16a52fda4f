"""Named verification sweeps with JSON-ready reports.

Each suite aggregates one family of exhaustive checks over a
configuration (type, rank, p, bounds).  Reports are plain dicts with a
stable key order and always echo the configuration and library version,
so identical configurations produce byte-identical serialized output.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .affine import AffineWeylGroup, affine_group
from .klpoly import KLTable
from .lcf import CharacterCalculator
from .ordering import (
    OrderContext,
    check_ordersame,
    d_abs,
    translation_descent_check,
)

SUITE_NAMES = ("length", "ordersame", "elem", "tr", "tothe", "mult", "newlinkage", "kl")

_GROUPS: dict[tuple, AffineWeylGroup] = {}
_CALCS: dict[tuple, CharacterCalculator] = {}
_KL: dict[tuple, KLTable] = {}


def get_group(series: str, rank: int, p: int) -> AffineWeylGroup:
    key = (series.upper(), rank, p)
    if key not in _GROUPS:
        _GROUPS[key] = affine_group(*key)
    return _GROUPS[key]


def get_kl_table(group: AffineWeylGroup) -> KLTable:
    if group.signature not in _KL:
        _KL[group.signature] = KLTable(group)
    return _KL[group.signature]


def get_calculator(group: AffineWeylGroup, assume_lcf: bool) -> CharacterCalculator:
    key = (group.signature, assume_lcf)
    if key not in _CALCS:
        _CALCS[key] = CharacterCalculator(group, assume_lcf=assume_lcf,
                                          kl=get_kl_table(group))
    return _CALCS[key]


def resolve_lambda(group: AffineWeylGroup, lam) -> tuple[int, ...]:
    """A regular base-orbit weight from explicit coordinates or the "auto" rule."""
    if lam is None or lam == "auto":
        return CharacterCalculator(group, kl=get_kl_table(group)).default_regular_weight()
    lam = tuple(int(x) for x in lam)
    if not group.stabilizer(lam).is_regular:
        raise ValueError(f"{lam} is not a regular weight in the base alcove")
    return lam


def _finish(report: dict) -> dict:
    report["version"] = __version__
    return report


def run_length_suite(group: AffineWeylGroup, max_len: int) -> dict:
    """Coxeter length against the hyperplane-separation count, exhaustively."""
    ctx = OrderContext.antidominant(group)
    violations = []
    checked = 0
    seen = {group.identity}
    frontier = [group.identity]
    depth = 0
    while frontier and depth <= max_len:
        for w in frontier:
            checked += 1
            separation = d_abs(w, ctx)
            if separation != depth or w.length != depth:
                violations.append({
                    "alcove": list(w.alcove),
                    "bfs_depth": depth,
                    "separation": separation,
                    "length": w.length,
                })
        depth += 1
        if depth > max_len:
            break
        nxt = []
        for w in frontier:
            for name in group.generator_names:
                x = w * group.generator(name)
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    series, rank, p = group.signature
    return _finish({
        "suite": "length",
        "series": series, "rank": rank, "p": p,
        "max_len": max_len,
        "checked": checked,
        "violations": violations,
    })


def run_kl_suite(group: AffineWeylGroup, max_len: int) -> dict:
    """KL/R inversion identity, degree bounds, and descent-choice independence."""
    kl = get_kl_table(group)
    violations = []
    checked = 0
    for w in group.elements_up_to(max_len):
        for y in sorted(group.bruhat_interval_below(w),
                        key=lambda e: (e.length, e.alcove)):
            checked += 1
            poly = kl.kl_poly(y, w)
            if not kl.check_inversion_identity(y, w):
                violations.append({"y": list(y.alcove), "w": list(w.alcove),
                                   "reason": "inversion identity",
                                   "coeffs": list(poly.coeffs)})
            if y != w and 2 * poly.degree > w.length - y.length - 1:
                violations.append({"y": list(y.alcove), "w": list(w.alcove),
                                   "reason": "degree bound",
                                   "coeffs": list(poly.coeffs)})
    series, rank, p = group.signature
    return _finish({
        "suite": "kl",
        "series": series, "rank": rank, "p": p,
        "max_len": max_len,
        "checked": checked,
        "violations": violations,
    })


def _merge_parts(suite: str, group: AffineWeylGroup, parts: list[dict],
                 extra: dict | None = None) -> dict:
    series, rank, p = group.signature
    out = {
        "suite": suite,
        "series": series, "rank": rank, "p": p,
        "checked": sum(part["checked"] for part in parts),
        "violations": [v for part in parts for v in part["violations"]],
        "parts": parts,
    }
    if extra:
        out.update(extra)
    return _finish(out)


def run_suite(name: str, *, series: str, rank: int, p: int,
              max_len: int = 6, box_radius: int = 10,
              base: str = "antidominant", lam="auto", mu=None,
              nu=None, assume_lcf: bool = False, jobs: int = 1) -> dict:
    """Dispatch a named suite; reports carry config echo and version."""
    if name not in SUITE_NAMES:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITE_NAMES}")
    group = get_group(series, rank, p)

    if name == "length":
        return run_length_suite(group, max_len)

    if name == "kl":
        return run_kl_suite(group, max_len)

    if name == "ordersame":
        if base not in ("antidominant", "dominant"):
            raise ValueError("base must be 'antidominant' or 'dominant'")
        ctx = (OrderContext.antidominant(group) if base == "antidominant"
               else OrderContext.dominant(group))
        report = check_ordersame(group, ctx, box_radius).to_dict()
        report["base"] = base
        return _finish(report)

    if name == "elem":
        if nu is not None:
            nus = [tuple(int(x) for x in nu)]
        else:
            nus = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
        runner = lambda v: translation_descent_check(group, v, max_len).to_dict()
        parts = _map_jobs(runner, nus, jobs)
        return _merge_parts("elem", group, parts, {"max_len": max_len})

    if name in ("tr", "tothe"):
        # both directions live on the quantum side; no regime flag involved
        calc = get_calculator(group, assume_lcf)
        lam_w = resolve_lambda(group, lam)
        if mu is not None:
            walls = [tuple(int(x) for x in mu)]
        else:
            walls = [w for _, w in calc.wall_weights()]
        if name == "tr":
            runner = lambda m: calc.verify_translation_identities(lam_w, m, max_len).to_dict()
        else:
            runner = lambda m: calc.verify_tothe(lam_w, m, max_len).to_dict()
        parts = _map_jobs(runner, walls, jobs)
        return _merge_parts(name, group, parts,
                            {"lambda": list(lam_w), "max_len": max_len})

    # mult / newlinkage need the regime flag
    calc = get_calculator(group, assume_lcf)
    lam_w = resolve_lambda(group, lam)
    if name == "mult":
        report = calc.verify_mult(lam_w, max_len).to_dict()
    else:
        report = calc.verify_newlinkage(lam_w, max_len).to_dict()
    return _finish(report)


def _map_jobs(fn, items, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))
