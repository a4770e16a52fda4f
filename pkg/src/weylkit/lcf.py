"""Irreducible characters via the Lusztig character formula and Steinberg recursion.

Quantum irreducible characters at a p-th root of unity come from the
alternating Kazhdan-Lusztig sum over the dominant part of a Bruhat
interval.  Modular irreducible characters are only computed under an
explicit regime flag (the character formula for the algebraic group is
known to fail for some p): restricted weights take the quantum
character, everything else factors through the Steinberg tensor
recursion with a Frobenius twist.  The decomposition of a quantum
character into modular ones is a unitriangular solve whose coefficients
carry the right-descent-set linkage checked by the verify sweeps.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .affine import AffineElement, AffineWeylGroup
from .charring import (
    CharElem,
    WEYL,
    dim,
    frobenius_twist,
    product,
    to_weyl_basis,
    translate,
    weyl_character,
)
from .klpoly import KLTable
from .rootdata import Weight, weyl_dim


class RegimeError(ValueError):
    """A modular-character operation was requested without the regime flag."""


class RegimeViolationError(ValueError):
    """A decomposition produced a negative coefficient: the regime assumption failed."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial or {}


@dataclass(frozen=True)
class RestrictedDecomp:
    """gamma = gamma0 + p*gamma1 with 0 <= <gamma0, alpha_vee> <= p-1 on simple coroots."""

    gamma: Weight
    gamma0: Weight
    gamma1: Weight


def restricted_decompose(gamma: Weight, p: int) -> RestrictedDecomp:
    """Unique restricted splitting of a dominant weight (componentwise divmod)."""
    gamma = tuple(gamma)
    if any(x < 0 for x in gamma):
        raise ValueError(f"{gamma} is not dominant")
    gamma0 = tuple(x % p for x in gamma)
    gamma1 = tuple((x - r) // p for x, r in zip(gamma, gamma0))
    return RestrictedDecomp(gamma=gamma, gamma0=gamma0, gamma1=gamma1)


def in_lowest_alcove_closure(rs, p: int, gamma: Weight) -> bool:
    """Whether gamma+rho pairs at most p with every positive coroot."""
    shifted = tuple(x + 1 for x in gamma)
    return all(rs.pairing(shifted, b) <= p for b in range(len(rs.positive_roots)))


def in_shifted_restricted_region(rs, p: int, gamma: Weight) -> bool:
    """The rho-shifted restricted condition <gamma+rho, alpha_vee> < p on simple coroots.

    Recorded alongside the standard restricted region (coordinates in
    [0, p-1]); the two differ on the upper boundary and only the
    standard one makes the Steinberg splitting total.
    """
    return all(0 <= x and x + 1 < p for x in gamma)


def chi(rs, nu: Weight) -> CharElem:
    return CharElem.make(rs, WEYL, {tuple(nu): 1})


@dataclass
class DecompReport:
    """Decomposition of one quantum irreducible character into modular ones."""

    series: str
    rank: int
    p: int
    lam: Weight
    weight: Weight
    word: list[str]
    coefficients: dict[Weight, int]
    descents: list[str]
    descent_ok: bool
    witnesses: list[dict] = field(default_factory=list)

    def coefficients_payload(self) -> dict:
        return {",".join(str(x) for x in w): c for w, c in sorted(self.coefficients.items())}

    def to_dict(self) -> dict:
        return {
            "series": self.series,
            "rank": self.rank,
            "p": self.p,
            "lambda": list(self.lam),
            "weight": list(self.weight),
            "word": self.word,
            "coefficients": self.coefficients_payload(),
            "descents": self.descents,
            "descent_ok": self.descent_ok,
            "witnesses": self.witnesses,
        }


@dataclass
class SweepReport:
    """Aggregate outcome of a verification sweep."""

    suite: str
    series: str
    rank: int
    p: int
    params: dict
    checked: int = 0
    skipped: int = 0
    violations: list[dict] = field(default_factory=list)
    classes: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        out = {
            "suite": self.suite,
            "series": self.series,
            "rank": self.rank,
            "p": self.p,
            "checked": self.checked,
            "skipped": self.skipped,
            "violations": self.violations,
        }
        out.update(self.params)
        if self.classes:
            out["classes"] = self.classes
        if self.notes:
            out["notes"] = self.notes
        return out


class CharacterCalculator:
    """Shared caches for quantum and modular irreducible characters of one group."""

    def __init__(self, group: AffineWeylGroup, assume_lcf: bool = False,
                 kl: KLTable | None = None):
        self.group = group
        self.rs = group.rs
        self.assume_lcf = assume_lcf
        self.kl = kl if kl is not None else KLTable(group)
        self._quantum: dict[tuple, CharElem] = {}
        self._quantum_simple: dict[Weight, CharElem] = {}
        self._modular: dict[Weight, CharElem] = {}

    # -- weights ---------------------------------------------------------

    def default_regular_weight(self) -> Weight:
        """Deepest integral point of the base alcove; lexicographic tie-break."""
        rs, p = self.rs, self.group.p
        best = None
        for v in self.group.base_alcove_points():
            shifted = tuple(x + 1 for x in v)
            margin = min(
                min(rs.pairing(shifted, b) + p, -rs.pairing(shifted, b))
                for b in range(len(rs.positive_roots))
            )
            key = (-margin, v)
            if best is None or key < best:
                best = key
        return best[1]

    def is_regular(self, mu: Weight) -> bool:
        return self.group.stabilizer(mu).is_regular

    # -- quantum characters -------------------------------------------------

    def quantum_irred_char(self, w: AffineElement, lam: Weight) -> CharElem:
        """Character of the quantum irreducible labelled w.lam, lam regular.

        Alternating sum of Weyl characters over the dominant part of the
        Bruhat interval below w, weighted by KL polynomials at -1.
        """
        lam = tuple(lam)
        key = (w.alcove, lam)
        cached = self._quantum.get(key)
        if cached is not None:
            return cached
        group = self.group
        if not self.is_regular(lam):
            raise ValueError(f"{lam} is not regular")
        if not group.is_dominant_element(w):
            raise ValueError("element does not map the base alcove into the dominant cone")
        terms: dict[Weight, int] = {}
        lw = w.length
        for y in group.bruhat_interval_below(w):
            if not group.is_dominant_element(y):
                continue
            coeff = self.kl.kl_eval_one(y, w)
            if (lw - y.length) % 2:
                coeff = -coeff
            terms[y.dot(lam)] = coeff
        result = CharElem.make(self.rs, WEYL, terms)
        assert result.coeff(w.dot(lam)) == 1
        assert dim(result) > 0
        self._quantum[key] = result
        return result

    def quantum_simple_char(self, gamma: Weight) -> CharElem:
        """Character of the quantum irreducible of any dominant highest weight.

        Lowest-alcove-closure weights are Weyl characters; regular orbits
        go through the character formula; singular orbits are translated
        to the wall from the deepest regular point.
        """
        gamma = tuple(gamma)
        cached = self._quantum_simple.get(gamma)
        if cached is not None:
            return cached
        rs, p = self.rs, self.group.p
        if not rs.is_dominant(gamma):
            raise ValueError(f"{gamma} is not dominant")
        if in_lowest_alcove_closure(rs, p, gamma):
            result = chi(rs, gamma)
        else:
            mu, w = self.group.orbit_data(gamma)
            if self.is_regular(mu):
                result = self.quantum_irred_char(w, mu)
            else:
                lam = self.default_regular_weight()
                if not self.group.is_dominant_element(w):
                    raise ValueError(
                        f"orbit representative of {gamma} is not a dominant element")
                base = self.quantum_irred_char(w, lam)
                result = translate(self.group, lam, mu, base)
                assert result.coeff(gamma) == 1
        assert dim(result) > 0
        self._quantum_simple[gamma] = result
        return result

    def quantum_steinberg_dim(self, gamma: Weight) -> int:
        """Dimension by the quantum Steinberg factorization (cross-check oracle)."""
        parts = restricted_decompose(gamma, self.group.p)
        return dim(self.quantum_simple_char(parts.gamma0)) * weyl_dim(parts.gamma1, self.rs)

    def steinberg_route_char(self, gamma: Weight) -> CharElem | None:
        """Quantum simple character bypassing wall translation, where available.

        Uses the Steinberg factorization with a restricted factor taken
        either from the lowest alcove closure or from a regular orbit;
        returns None when neither applies.
        """
        rs, p = self.rs, self.group.p
        gamma = tuple(gamma)
        parts = restricted_decompose(gamma, p)
        if parts.gamma1 == (0,) * rs.rank:
            return chi(rs, gamma) if in_lowest_alcove_closure(rs, p, gamma) else None
        if in_lowest_alcove_closure(rs, p, parts.gamma0):
            base = chi(rs, parts.gamma0)
        else:
            mu, w = self.group.orbit_data(parts.gamma0)
            if not self.is_regular(mu):
                return None
            base = self.quantum_irred_char(w, mu)
        twisted = frobenius_twist(weyl_character(rs, parts.gamma1), p)
        return product(base, twisted)

    # -- modular characters ---------------------------------------------------

    def _require_regime(self):
        if not self.assume_lcf:
            raise RegimeError(
                "modular characters need the character-formula regime flag (assume_lcf)")

    def modular_simple_char(self, gamma: Weight) -> CharElem:
        """Character of the modular irreducible, valid in the assumed regime.

        Restricted weights take the quantum simple character; otherwise
        the Steinberg recursion factors off a Frobenius twist.
        """
        self._require_regime()
        gamma = tuple(gamma)
        cached = self._modular.get(gamma)
        if cached is not None:
            return cached
        rs, p = self.rs, self.group.p
        parts = restricted_decompose(gamma, p)
        if parts.gamma1 == (0,) * rs.rank:
            result = self.quantum_simple_char(parts.gamma0)
        else:
            head = self.quantum_simple_char(parts.gamma0)
            tail = frobenius_twist(self.modular_simple_char(parts.gamma1), p)
            result = product(head, tail)
        result = to_weyl_basis(result)
        assert result.coeff(gamma) == 1
        self._modular[gamma] = result
        return result

    # -- decomposition ---------------------------------------------------------

    def _order_key(self, nu: Weight):
        _, w = self.group.orbit_data(nu)
        return (w.length, nu)

    def expand_in_modular_basis(self, c: CharElem,
                                allow_negative: bool = False) -> dict[Weight, int]:
        """Unitriangular expansion of a Weyl-basis element in modular simple characters."""
        self._require_regime()
        residual = to_weyl_basis(c)
        coeffs: dict[Weight, int] = {}
        last_key = None
        while not residual.is_zero:
            nu = max(residual.terms, key=self._order_key)
            key = self._order_key(nu)
            assert last_key is None or key < last_key, "expansion is not unitriangular"
            last_key = key
            c_nu = residual.coeff(nu)
            if c_nu < 0 and not allow_negative:
                raise RegimeViolationError(
                    f"negative coefficient {c_nu} at {nu}: regime assumption violated",
                    partial=dict(coeffs))
            coeffs[nu] = c_nu
            residual = residual - self.modular_simple_char(nu).scale(c_nu)
        return coeffs

    def decompose(self, w: AffineElement, lam: Weight) -> DecompReport:
        """Coefficients of the quantum irreducible at w.lam in modular irreducibles."""
        lam = tuple(lam)
        target = self.quantum_irred_char(w, lam)
        coeffs = self.expand_in_modular_basis(target)
        assert coeffs.get(w.dot(lam)) == 1
        total = sum(c * dim(self.modular_simple_char(nu)) for nu, c in coeffs.items())
        assert total == dim(target)
        rw = w.right_descents()
        witnesses = []
        for nu in sorted(coeffs):
            _, x = self.group.orbit_data(nu)
            rx = x.right_descents()
            if rx != rw:
                witnesses.append({
                    "weight": list(nu),
                    "word": list(x.reduced_word()),
                    "descents": sorted(rx),
                    "expected": sorted(rw),
                })
        rs = self.rs
        return DecompReport(
            series=rs.series, rank=rs.rank, p=self.group.p,
            lam=lam, weight=w.dot(lam), word=list(w.reduced_word()),
            coefficients=coeffs, descents=sorted(rw),
            descent_ok=not witnesses, witnesses=witnesses,
        )

    # -- verification sweeps -----------------------------------------------------

    def verify_mult(self, lam: Weight, max_len: int) -> SweepReport:
        """Descent-set inclusion across every decomposition up to the length bound."""
        return self._verify_descents(lam, max_len, "mult", require_equality=False)

    def verify_newlinkage(self, lam: Weight, max_len: int) -> SweepReport:
        """Descent-set equality across every decomposition up to the length bound."""
        return self._verify_descents(lam, max_len, "newlinkage", require_equality=True)

    def _verify_descents(self, lam: Weight, max_len: int, suite: str,
                         require_equality: bool) -> SweepReport:
        lam = tuple(lam)
        rs = self.rs
        report = SweepReport(
            suite=suite, series=rs.series, rank=rs.rank, p=self.group.p,
            params={"lambda": list(lam), "max_len": max_len})
        classes: dict[str, list] = {}
        for w in self.group.enumerate_dominant(max_len):
            rep = self.decompose(w, lam)
            report.checked += 1
            rw = frozenset(rep.descents)
            class_key = ",".join(sorted(rw)) or "-"
            classes.setdefault(class_key, []).append(
                ",".join(str(x) for x in rep.weight))
            for nu in sorted(rep.coefficients):
                _, x = self.group.orbit_data(nu)
                rx = x.right_descents()
                bad = (rx != rw) if require_equality else (not rw <= rx)
                if bad:
                    report.violations.append({
                        "word": rep.word,
                        "weight": list(rep.weight),
                        "factor_weight": list(nu),
                        "descents": sorted(rw),
                        "factor_descents": sorted(rx),
                    })
        report.classes = {k: classes[k] for k in sorted(classes)}
        return report

    def verify_tothe(self, lam: Weight, mu: Weight, max_len: int) -> SweepReport:
        """Wall translation of quantum simples: exact match or vanishing by coset type.

        For each enumerated dominant element w, the translated character
        must equal the quantum simple at w.mu when w is a minimal coset
        representative (checked against the Steinberg-route character
        when available, else by the Steinberg dimension), and must vanish
        otherwise.
        """
        lam, mu = tuple(lam), tuple(mu)
        rs = self.rs
        stab = self.group.stabilizer(mu)
        report = SweepReport(
            suite="tothe", series=rs.series, rank=rs.rank, p=self.group.p,
            params={"lambda": list(lam), "mu": list(mu), "max_len": max_len})
        exact = dim_only = 0
        for w in self.group.enumerate_dominant(max_len):
            translated = translate(self.group, lam, mu,
                                   self.quantum_irred_char(w, lam))
            report.checked += 1
            if not self.group.is_min_coset_rep(w, stab):
                if not translated.is_zero:
                    report.violations.append({
                        "word": list(w.reduced_word()),
                        "expected": "zero",
                        "got_dim": dim(translated),
                    })
                continue
            target = w.dot(mu)
            oracle = self.steinberg_route_char(target)
            if oracle is not None:
                exact += 1
                if to_weyl_basis(oracle) != translated:
                    report.violations.append({
                        "word": list(w.reduced_word()),
                        "weight": list(target),
                        "expected": to_weyl_basis(oracle).to_payload(),
                        "got": translated.to_payload(),
                    })
            else:
                dim_only += 1
                want = self.quantum_steinberg_dim(target)
                if dim(translated) != want or translated.coeff(target) != 1:
                    report.violations.append({
                        "word": list(w.reduced_word()),
                        "weight": list(target),
                        "expected_dim": want,
                        "got_dim": dim(translated),
                    })
        report.notes.append(f"exact={exact} dim_only={dim_only}")
        return report

    def verify_translation_identities(self, lam: Weight, mu: Weight,
                                      max_len: int) -> SweepReport:
        """Both translation identities on Weyl characters over the wall data (lam, mu).

        Into the wall: chi(y x.lam) translates to chi(y.mu) for y a
        minimal dominant representative and x in the wall stabilizer.
        Out of the wall: chi(y.mu) translates to the sum of chi(y z.lam)
        over the stabilizer.
        """
        lam, mu = tuple(lam), tuple(mu)
        rs = self.rs
        group = self.group
        stab = group.stabilizer(mu)
        subgroup = group.parabolic_elements(stab.stabilizer)
        report = SweepReport(
            suite="tr", series=rs.series, rank=rs.rank, p=self.group.p,
            params={"lambda": list(lam), "mu": list(mu), "max_len": max_len})
        for y in group.enumerate_dominant(max_len):
            if not group.is_min_coset_rep(y, stab):
                continue
            expected_out = CharElem.zero(rs)
            for z in subgroup:
                yz = y * z
                got = translate(group, lam, mu, chi(rs, yz.dot(lam)))
                report.checked += 1
                if got != chi(rs, y.dot(mu)):
                    report.violations.append({
                        "direction": "to_wall",
                        "word": list(yz.reduced_word()),
                        "expected": chi(rs, y.dot(mu)).to_payload(),
                        "got": got.to_payload(),
                    })
                expected_out = expected_out + chi(rs, yz.dot(lam))
            got_out = translate(group, mu, lam, chi(rs, y.dot(mu)))
            report.checked += 1
            if got_out != expected_out:
                report.violations.append({
                    "direction": "from_wall",
                    "word": list(y.reduced_word()),
                    "expected": expected_out.to_payload(),
                    "got": got_out.to_payload(),
                })
        return report

    def wall_weights(self) -> list[tuple[str, Weight]]:
        """One singular weight per generator wall: stabilizer exactly that generator.

        Deterministic choice: deepest on the wall, then lexicographically
        smallest.  Needs p >= h for every wall to carry such a weight.
        """
        rs, p = self.rs, self.group.p
        best: dict[str, tuple] = {}
        for v in self.group.closure_points():
            stab = self.group.stabilizer(v).stabilizer
            if len(stab) != 1:
                continue
            (name,) = stab
            shifted = tuple(x + 1 for x in v)
            margin = min(
                (min(rs.pairing(shifted, b) + p, -rs.pairing(shifted, b))
                 for b in range(len(rs.positive_roots))
                 if rs.pairing(shifted, b) not in (0, -p)),
                default=p,
            )
            key = (-margin, v)
            if name not in best or key < best[name][0]:
                best[name] = (key, v)
        return sorted((name, data[1]) for name, data in best.items())
