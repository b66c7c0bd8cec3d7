"""Degree-based topological indices, by edge sum and by operator pipeline.

Both routes read the same :class:`MPolynomial` but share no arithmetic:
:func:`indices_direct` applies each index's edge function to the degree
pairs, :func:`indices_via_operators` pushes the polynomial through the
differential/integral operators and evaluates at 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Union

from hanoi_mpoly.errors import DomainError
from hanoi_mpoly.occupancy import HanoiParams, degree_of_occupancy, occupancy_count
from hanoi_mpoly.polynomial import (
    MPolynomial,
    evaluate,
    m_polynomial,
    op_Dx,
    op_Dy,
    op_J,
    op_Q,
    op_Sx,
    op_Sy,
)

Value = Union[int, Fraction, float]

DEFAULT_ALPHAS = (Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-1, 2))


@dataclass(frozen=True)
class IndexReport:
    """The ten indices. Rational ones are exact ``Fraction`` values.

    ``r_alpha``/``rr_alpha`` are exact for integer ``alpha`` and binary64
    otherwise. The augmented Zagreb index is rational too and is kept exact.
    """

    edges: int
    m1: int
    m2: int
    f: int
    mm2: Fraction
    ssd: Fraction
    h: Fraction
    isi: Fraction
    a: Fraction
    r_alpha: dict[Fraction, Value] = field(default_factory=dict)
    rr_alpha: dict[Fraction, Value] = field(default_factory=dict)


def _alphas(alphas: Iterable | None) -> tuple[Fraction, ...]:
    return tuple(Fraction(a) for a in (DEFAULT_ALPHAS if alphas is None else alphas))


def _as_int(v) -> int:
    v = Fraction(v)
    if v.denominator != 1:
        raise DomainError(f"expected an integer, got {v}")
    return int(v)


def _edge_power(d: int, alpha: Fraction) -> Value:
    """``d ** alpha`` for a degree product ``d``."""
    if alpha.denominator == 1:
        return Fraction(d) ** int(alpha)
    return float(d) ** float(alpha)


def indices_direct(poly: MPolynomial, alphas: Iterable | None = None) -> IndexReport:
    alphas = _alphas(alphas)
    m1 = m2 = f = 0
    mm2 = ssd = h = isi = a = Fraction(0)
    r_alpha: dict[Fraction, Value] = {al: 0 for al in alphas}
    rr_alpha: dict[Fraction, Value] = {al: 0 for al in alphas}
    for i, j, c in poly:
        m1 += c * (i + j)
        m2 += c * i * j
        f += c * (i * i + j * j)
        mm2 += Fraction(c, i * j)
        ssd += c * (Fraction(i, j) + Fraction(j, i))
        h += Fraction(2 * c, i + j)
        isi += Fraction(c * i * j, i + j)
        if i + j != 2:  # the (1, 1) pair has a zero denominator and contributes 0
            a += c * Fraction(i * j, i + j - 2) ** 3
        for al in alphas:
            r_alpha[al] += c * _edge_power(i * j, al)
            rr_alpha[al] += c * _edge_power(i * j, -al)
    return IndexReport(poly.edge_count(), m1, m2, f, mm2, ssd, h, isi, a, r_alpha, rr_alpha)


def _at_one(g) -> Value:
    return evaluate(g, 1, 1)


def indices_via_operators(poly: MPolynomial, alphas: Iterable | None = None) -> IndexReport:
    alphas = _alphas(alphas)
    g = poly.to_general()
    dx, dy = op_Dx(g), op_Dy(g)
    jd = op_J(op_Dx(op_Dy(g)))
    a_pipe = op_Sx(
        op_Q(op_J(op_Dx(op_Dy(g, 3), 3)), -2), 3, drop_zero=True
    )
    return IndexReport(
        edges=_as_int(_at_one(g)),
        m1=_as_int(_at_one(dx + dy)),
        m2=_as_int(_at_one(op_Dx(dy))),
        f=_as_int(_at_one(op_Dx(g, 2) + op_Dy(g, 2))),
        mm2=_at_one(op_Sx(op_Sy(g))),
        ssd=_at_one(op_Dx(op_Sy(g)) + op_Dy(op_Sx(g))),
        h=2 * _at_one(op_Sx(op_J(g))),
        isi=_at_one(op_Sx(jd)),
        a=_at_one(a_pipe),
        r_alpha={al: _at_one(op_Dx(op_Dy(g, al), al)) for al in alphas},
        rr_alpha={al: _at_one(op_Sx(op_Sy(g, al), al)) for al in alphas},
    )


def vertex_form_first_zagreb(params: HanoiParams) -> int:
    """``sum_v deg(v)**2`` from the occupancy classes."""
    return sum(
        occupancy_count(params, mu) * degree_of_occupancy(params, mu) ** 2
        for mu in params.occupancies()
    )


def relative_error(a: Value, b: Value) -> float:
    a, b = float(a), float(b)
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0 else abs(a - b) / scale


# --- integer sequences --------------------------------------------------------

def _index(p: int, n: int) -> IndexReport:
    return indices_direct(m_polynomial(HanoiParams(p, n)), alphas=())


def _floor(v: Fraction) -> int:
    return math.floor(v)


def _ceil(v: Fraction) -> int:
    return math.ceil(v)


# slug -> (description, term k -> value)
SEQUENCES: dict[str, tuple[str, Callable[[int], int]]] = {
    "m1-h3k": ("M1(H_3^k)", lambda k: _index(3, k).m1),
    "m2-h3k": ("M2(H_3^k)", lambda k: _index(3, k).m2),
    "floor-mm2-h3k": ("floor(MM2(H_3^k))", lambda k: _floor(_index(3, k).mm2)),
    "ssd-h3k": ("SSD(H_3^k)", lambda k: _as_int(_index(3, k).ssd)),
    "floor-h-h3k": ("floor(H(H_3^k))", lambda k: _floor(_index(3, k).h)),
    "m1-hk1": ("M1(H_k^1)", lambda k: _index(k, 1).m1),
    "m2-hk1": ("M2(H_k^1)", lambda k: _index(k, 1).m2),
    "ssd-hk1": ("SSD(H_k^1)", lambda k: _as_int(_index(k, 1).ssd)),
    "f-hk1": ("F(H_k^1)", lambda k: _index(k, 1).f),
    "floor-mm2-hk3": ("floor(MM2(H_k^3))", lambda k: _floor(_index(k, 3).mm2)),
    "ceil-mm2-hk3": ("ceil(MM2(H_k^3))", lambda k: _ceil(_index(k, 3).mm2)),
}


def oeis_sequence(name: str, k_max: int) -> list[int]:
    """First ``k_max`` terms (``k = 1 .. k_max``) of a named index sequence."""
    try:
        _, term = SEQUENCES[name]
    except KeyError:
        known = ", ".join(SEQUENCES)
        raise DomainError(f"unknown sequence {name!r}; known: {known}") from None
    if k_max < 0:
        raise DomainError(f"k_max must be >= 0, got {k_max}")
    return [term(k) for k in range(1, k_max + 1)]
