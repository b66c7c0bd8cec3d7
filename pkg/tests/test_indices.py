from fractions import Fraction

import pytest

from hanoi_mpoly.errors import DomainError
from hanoi_mpoly.indices import (
    DEFAULT_ALPHAS,
    SEQUENCES,
    indices_direct,
    indices_via_operators,
    oeis_sequence,
    relative_error,
    vertex_form_first_zagreb,
)
from hanoi_mpoly.occupancy import HanoiParams
from hanoi_mpoly.oracle import brute_force_summary
from hanoi_mpoly.polynomial import MPolynomial, m_polynomial

from reference_tables import TABLE11

F = Fraction


def report(p, n, alphas=None):
    return indices_direct(m_polynomial(HanoiParams(p, n)), alphas)


def test_table_spot_values():
    r = report(4, 3)
    assert (r.m1, r.m2, r.f) == (1800, 4836, 9792)
    r = report(5, 2)
    assert (r.edges, r.m1, r.m2) == (80, 1060, 3500)


def test_single_edge_graph():
    r = report(2, 1)
    assert (r.m1, r.m2, r.mm2, r.ssd, r.h, r.isi, r.a, r.f) == (2, 1, 1, 2, 1, F(1, 2), 0, 2)


def test_worked_example_indices():
    r = report(3, 3)
    assert (r.m1, r.m2) == (228, 333)
    assert r.h == F(67, 5)
    r = report(4, 2)
    assert (r.m1, r.m2) == (336, 780)
    assert r.isi == F(165, 2)


def test_operator_examples():
    assert indices_via_operators(m_polynomial(HanoiParams(3, 3))).h == F(67, 5)
    assert indices_via_operators(m_polynomial(HanoiParams(3, 4))).ssd == 241
    assert indices_via_operators(m_polynomial(HanoiParams(4, 2))).isi == F(165, 2)


def test_randic_ties():
    for p, n in [(3, 3), (4, 5), (5, 2), (2, 2)]:
        r = report(p, n)
        assert r.r_alpha[1] == r.m2
        assert r.rr_alpha[1] == r.mm2
        assert r.r_alpha[-1] == r.mm2


def test_half_integer_randic_is_float():
    r = report(4, 2)
    assert isinstance(r.r_alpha[F(1, 2)], float)
    assert r.r_alpha[F(1, 2)] == pytest.approx(12 * 15**0.5 + 24 * 5)


def test_custom_alpha():
    r = report(3, 3, alphas=[F(2), F(1, 3)])
    assert r.r_alpha[2] == 6 * 36 + 33 * 81
    assert r.r_alpha[F(1, 3)] == pytest.approx(6 * 6 ** (1 / 3) + 33 * 9 ** (1 / 3))


def test_forgotten_identity():
    for p in range(1, 9):
        for n in range(0, 9):
            poly = m_polynomial(HanoiParams(p, n))
            r = indices_direct(poly, ())
            assert r.f + 2 * r.m2 == sum(c * (i + j) ** 2 for i, j, c in poly)


def test_zero_denominator_pair_contributes_nothing():
    poly = MPolynomial(HanoiParams(2, 3), {(1, 1): 4})
    assert indices_direct(poly).a == 0
    assert indices_via_operators(poly).a == 0


def test_empty_graph():
    for p, n in [(1, 4), (3, 0)]:
        r = report(p, n)
        assert (r.edges, r.m1, r.m2, r.f, r.mm2, r.ssd, r.h, r.isi, r.a) == (0,) * 9


@pytest.mark.parametrize("p", range(1, 9))
def test_direct_equals_operators(p):
    for n in range(0, 11):
        poly = m_polynomial(HanoiParams(p, n))
        d, o = indices_direct(poly), indices_via_operators(poly)
        for name in ("edges", "m1", "m2", "f", "mm2", "ssd", "h", "isi", "a"):
            assert getattr(d, name) == getattr(o, name), (p, n, name)
        for al in DEFAULT_ALPHAS:
            for a, b in ((d.r_alpha[al], o.r_alpha[al]), (d.rr_alpha[al], o.rr_alpha[al])):
                if al.denominator == 1:
                    assert a == b
                else:
                    assert relative_error(a, b) <= 1e-12


@pytest.mark.parametrize("p,n,expected", [(3, 3, 228), (4, 2, 336), (1, 3, 0)])
def test_vertex_form(p, n, expected):
    assert vertex_form_first_zagreb(HanoiParams(p, n)) == expected


def test_vertex_form_equals_edge_form():
    for p in range(1, 9):
        for n in range(0, 13):
            assert vertex_form_first_zagreb(HanoiParams(p, n)) == report(p, n, ()).m1


@pytest.mark.parametrize("p,n", [(3, 5), (4, 5), (5, 4)])
def test_indices_from_oracle_census(p, n):
    summary = brute_force_summary(HanoiParams(p, n))
    from_oracle = indices_direct(MPolynomial(HanoiParams(p, n), summary.degree_pair_census))
    assert from_oracle == report(p, n)


def test_oracle_h53():
    summary = brute_force_summary(HanoiParams(5, 3))
    r = indices_direct(MPolynomial(HanoiParams(5, 3), summary.degree_pair_census), ())
    assert (r.edges, r.m1) == (490, 7880)


@pytest.mark.parametrize("name", sorted(TABLE11))
def test_sequences(name):
    assert oeis_sequence(name, 8) == list(TABLE11[name])


def test_first_mm2_term_is_three_quarters():
    assert report(3, 1).mm2 == F(3, 4)
    assert oeis_sequence("floor-mm2-h3k", 1) == [0]


def test_sequence_errors():
    assert set(SEQUENCES) == set(TABLE11)
    with pytest.raises(DomainError):
        oeis_sequence("A277105", 3)
    with pytest.raises(DomainError):
        oeis_sequence("m1-h3k", -1)
    assert oeis_sequence("m1-h3k", 0) == []


def test_sequences_extend_past_the_table():
    terms = oeis_sequence("floor-h-h3k", 12)
    # floor(H(H_3^k)) = (3^k - 1) / 2
    assert terms == [(3**k - 1) // 2 for k in range(1, 13)]
