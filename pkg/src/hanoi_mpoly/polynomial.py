"""M-polynomials of H_p^n and the operator calculus acting on them.

:class:`MPolynomial` holds integer edge counts keyed by endpoint degree
pairs ``(i, j)`` with ``i <= j``. :class:`GeneralPolynomial` is what the
operators act on: exponents are rationals (fractional and negative values
appear mid-pipeline) and coefficients are exact ``Fraction`` values until a
non-integer operator power forces them to ``float``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterator, Mapping, Union

from hanoi_mpoly.combinatorics import binomial, falling_factorial, stirling2
from hanoi_mpoly.edges import cross_class_edges, within_class_edges
from hanoi_mpoly.errors import DomainError, SingularOperatorError
from hanoi_mpoly.occupancy import HanoiParams, degree_of_occupancy, occupancy_count, refined_count

log = logging.getLogger(__name__)

Coefficient = Union[Fraction, float]
Exponent = Fraction


@dataclass(frozen=True)
class MPolynomial:
    params: HanoiParams
    terms: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        normalized: dict[tuple[int, int], int] = {}
        for (i, j), c in self.terms.items():
            if c < 0:
                raise DomainError(f"negative coefficient {c} at ({i}, {j})")
            if c:
                key = (i, j) if i <= j else (j, i)
                normalized[key] = normalized.get(key, 0) + c
        object.__setattr__(self, "terms", dict(sorted(normalized.items())))

    def __iter__(self) -> Iterator[tuple[int, int, int]]:
        for (i, j), c in self.terms.items():
            yield i, j, c

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.terms.get((min(i, j), max(i, j)), 0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def to_general(self) -> GeneralPolynomial:
        return GeneralPolynomial(
            {(Fraction(i), Fraction(j)): Fraction(c) for (i, j), c in self.terms.items()}
        )

    def evaluate(self, x=1, y=1) -> Fraction:
        return evaluate(self.to_general(), x, y)

    def edge_count(self) -> int:
        return sum(self.terms.values())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}·x^{i}·y^{j}" for (i, j), c in self.terms.items())


class GeneralPolynomial:
    """Sparse bivariate polynomial with rational exponents. Immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[Exponent, Exponent], Coefficient] | None = None):
        merged: dict[tuple[Exponent, Exponent], Coefficient] = {}
        for (ex, ey), c in (terms or {}).items():
            key = (Fraction(ex), Fraction(ey))
            merged[key] = merged.get(key, 0) + c
        self._terms = {k: v for k, v in sorted(merged.items()) if v != 0}

    @property
    def terms(self) -> dict[tuple[Exponent, Exponent], Coefficient]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GeneralPolynomial) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __add__(self, other: GeneralPolynomial) -> GeneralPolynomial:
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return GeneralPolynomial(out)

    def scale(self, factor: Coefficient) -> GeneralPolynomial:
        return GeneralPolynomial({k: factor * v for k, v in self._terms.items()})

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*x^{ex}*y^{ey}" for (ex, ey), c in self._terms.items())
        return f"GeneralPolynomial({body or '0'})"


def _power(base: Fraction, alpha) -> Coefficient:
    """``base ** alpha``: exact for integer ``alpha``, binary64 otherwise."""
    alpha = Fraction(alpha)
    if alpha.denominator == 1:
        if base == 0 and alpha < 0:
            raise SingularOperatorError("zero exponent raised to a negative power")
        return base ** int(alpha)
    if base < 0:
        raise DomainError(f"real power {alpha} of negative exponent {base}")
    if base == 0:
        if alpha < 0:
            raise SingularOperatorError("zero exponent raised to a negative power")
        return 0.0
    return float(base) ** float(alpha)


def _derivative(g: GeneralPolynomial, axis: int, power) -> GeneralPolynomial:
    return GeneralPolynomial({k: c * _power(k[axis], power) for k, c in g.items()})


def _integral(g: GeneralPolynomial, axis: int, power, drop_zero: bool) -> GeneralPolynomial:
    out = {}
    for k, c in g.items():
        if k[axis] == 0:
            if not drop_zero:
                raise SingularOperatorError(
                    f"integral operator on term with zero exponent at {k}"
                )
            log.warning("dropping zero-exponent term x^%s y^%s (coefficient %s)", k[0], k[1], c)
            continue
        out[k] = c / _power(k[axis], power)
    return GeneralPolynomial(out)


def op_Dx(g: GeneralPolynomial, power=1) -> GeneralPolynomial:
    """``x d/dx`` applied ``power`` times (real powers act monomial-wise)."""
    return _derivative(g, 0, power)


def op_Dy(g: GeneralPolynomial, power=1) -> GeneralPolynomial:
    return _derivative(g, 1, power)


def op_Sx(g: GeneralPolynomial, power=1, drop_zero: bool = False) -> GeneralPolynomial:
    """Integral ``int_0^x g(t, y) / t dt``, i.e. divide by the x exponent."""
    return _integral(g, 0, power, drop_zero)


def op_Sy(g: GeneralPolynomial, power=1, drop_zero: bool = False) -> GeneralPolynomial:
    return _integral(g, 1, power, drop_zero)


def op_J(g: GeneralPolynomial) -> GeneralPolynomial:
    """Substitute ``y := x``; monomials meeting on one exponent are added."""
    out: dict[tuple[Exponent, Exponent], Coefficient] = {}
    for (ex, ey), c in g.items():
        key = (ex + ey, Fraction(0))
        out[key] = out.get(key, 0) + c
    return GeneralPolynomial(out)


def op_Q(g: GeneralPolynomial, alpha) -> GeneralPolynomial:
    """Multiply by ``x**alpha``."""
    a = Fraction(alpha)
    return GeneralPolynomial({(ex + a, ey): c for (ex, ey), c in g.items()})


def _monomial(value, exponent: Fraction) -> Coefficient:
    if exponent == 0 or value == 1:
        return Fraction(1)
    if value == 0 and exponent < 0:
        raise DomainError("0 raised to a negative power")
    if exponent.denominator == 1:
        return value ** int(exponent)
    if value < 0:
        raise DomainError(f"fractional power {exponent} of negative value {value}")
    return float(value) ** float(exponent)


def evaluate(g: GeneralPolynomial, x=1, y=1) -> Coefficient:
    """``sum c * x**ex * y**ey``; exact whenever the inputs allow."""
    x = x if isinstance(x, float) else Fraction(x)
    y = y if isinstance(y, float) else Fraction(y)
    total: Coefficient = Fraction(0)
    for (ex, ey), c in g.items():
        total += c * _monomial(x, ex) * _monomial(y, ey)
    return total


def m_polynomial(params: HanoiParams) -> MPolynomial:
    """Canonical M-polynomial from the within/cross class edge counts.

    Keys are actual degree values, so when ``r == p`` the classes ``p - 1``
    and ``p`` (same degree) land on the same diagonal key by themselves.
    """
    terms: dict[tuple[int, int], int] = {}
    r = params.r
    for mu in range(1, r + 1):
        lam = degree_of_occupancy(params, mu)
        terms[lam, lam] = terms.get((lam, lam), 0) + within_class_edges(params, mu)
        if mu < r:
            key = (lam, degree_of_occupancy(params, mu + 1))
            terms[key] = terms.get(key, 0) + cross_class_edges(params, mu)
    return MPolynomial(params, terms)


# --- literal coefficient formulas of the closed-form theorem -----------------


@dataclass(frozen=True)
class LiteralTerm:
    formula: str
    key: tuple[int, int]
    literal: Fraction
    canonical: int
    note: str = ""

    @property
    def mismatch(self) -> bool:
        return self.literal != self.canonical


@dataclass(frozen=True)
class TheoremReport:
    params: HanoiParams
    rows: tuple[LiteralTerm, ...]
    literal_terms: dict[tuple[int, int], Fraction]
    canonical: MPolynomial

    @property
    def divergent(self) -> bool:
        return any(row.mismatch for row in self.rows) or self.polynomial_mismatches() != []

    def polynomial_mismatches(self) -> list[tuple[tuple[int, int], Fraction, int]]:
        keys = sorted(set(self.literal_terms) | set(self.canonical.terms))
        out = []
        for k in keys:
            lit = self.literal_terms.get(k, Fraction(0))
            can = self.canonical[k]
            if lit != can:
                out.append((k, lit, can))
        return out

    @property
    def literal_total(self) -> Fraction:
        return sum(self.literal_terms.values(), Fraction(0))


def _refined(params: HanoiParams, mu: int, nu: int) -> int:
    # the literal formulas reach for classes outside [1, r]; those are empty
    if not 1 <= mu <= params.r or not 0 <= nu <= mu:
        return 0
    return refined_count(params, mu, nu)


def _occ(params: HanoiParams, mu: int) -> int:
    return occupancy_count(params, mu) if 1 <= mu <= params.r else 0


def _lam(params: HanoiParams, mu: int) -> int:
    return binomial(params.p, 2) - binomial(params.p - mu, 2) if 0 <= mu <= params.p else 0


def paper_theorem_report(params: HanoiParams) -> TheoremReport:
    """Evaluate the published per-class coefficient formulas literally.

    Each row pairs a literal value with the canonical coefficient at the
    key where the closed-form theorem places it. Informational only: no
    index computation reads from here.
    """
    p, n, r = params.p, params.n, params.r
    canonical = m_polynomial(params)
    rows: list[LiteralTerm] = []
    literal: dict[tuple[int, int], Fraction] = {}

    def emit(formula: str, key: tuple[int, int], value: Fraction, note: str = "",
             assemble: bool = True) -> None:
        key = (min(key), max(key))
        rows.append(LiteralTerm(formula, key, value, canonical[key], note))
        if assemble:
            literal[key] = literal.get(key, Fraction(0)) + value

    for mu in range(1, min(r, p - 2) + 1):
        s = sum(
            (3 * mu * mu - 2 * p * mu - mu + 4 * p * nu - 4 * mu * nu) * _refined(params, mu, nu)
            for nu in range(mu + 1)
        )
        lam = _lam(params, mu)
        emit(f"diagonal mu={mu}", (lam, lam), Fraction(s, 4),
             f"canonical within-class count {within_class_edges(params, mu)}")

    top = r == p
    if top:
        delta = _lam(params, p)
        emit("top diagonal", (delta, delta),
             Fraction((p * p - p) * (_occ(params, p) + _occ(params, p - 1)), 4))
        emit("top diagonal (Stirling form)", (delta, delta),
             Fraction(falling_factorial(p, p) * (p * p - p)
                      * (stirling2(n, p) + stirling2(n, p - 1)), 4),
             "alternative form of the top diagonal", assemble=False)
        emit("top diagonal (compact identity)", (delta, delta),
             Fraction(p * stirling2(n + 1, p), 4),
             "compact identity", assemble=False)

    for mu in range(2, min(r, p - 1) + 1):
        s = sum((p - mu + 1) * (mu - 1 - nu) * _refined(params, mu - 1, nu) for nu in range(mu))
        emit(f"off-diagonal mu={mu - 1}->{mu}", (_lam(params, mu - 1), _lam(params, mu)),
             Fraction(s), f"canonical cross-class count {cross_class_edges(params, mu - 1)}")

    if top:
        s = sum((p - 1 - nu) * _refined(params, p - 1, nu) for nu in range(p))
        s += sum(2 * (p - 2 - nu) * _refined(params, p - 2, nu) for nu in range(p - 1))
        emit("off-diagonal to top", (_lam(params, p - 1), _lam(params, p)), Fraction(s),
             "lands on the top diagonal key because f(p-1) = f(p)")

    return TheoremReport(params, tuple(rows), literal, canonical)
