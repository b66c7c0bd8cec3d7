"""Exact edge counts of H_p^n.

Three move types partition the edges (orienting each edge from the lower
occupancy endpoint):

* ``e1``: singleton peg -> empty peg, occupancy unchanged;
* ``e2``: multiton peg -> occupied peg, occupancy unchanged;
* ``e3``: multiton peg -> empty peg, occupancy goes up by one.

``a1``/``a2`` are the two halves of the directed move count split by
target peg (occupied / empty). Within-class counts come from balancing the
degree sum of a class against its cross-class incidences.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from hanoi_mpoly.combinatorics import binomial
from hanoi_mpoly.errors import ConsistencyError, DomainError
from hanoi_mpoly.occupancy import (
    HanoiParams,
    degree_of_occupancy,
    occupancy_count,
    refined_count,
)


def _as_count(value: Fraction, what: str) -> int:
    if value.denominator != 1 or value < 0:
        raise ConsistencyError(f"{what} evaluated to {value}, not a nonnegative integer")
    return int(value)


def total_edges(params: HanoiParams) -> int:
    """``|E| = (1/4) sum_mu mu (2p - mu - 1) O(mu)``."""
    p = params.p
    s = sum(mu * (2 * p - mu - 1) * occupancy_count(params, mu) for mu in params.occupancies())
    return _as_count(Fraction(s, 4), "|E|")


def total_edges_by_degree_sum(params: HanoiParams) -> int:
    """Half the degree sum; must agree with :func:`total_edges`."""
    s = sum(
        occupancy_count(params, mu) * degree_of_occupancy(params, mu)
        for mu in params.occupancies()
    )
    return _as_count(Fraction(s, 2), "|E| (degree sum)")


def block_counts(params: HanoiParams) -> tuple[int, int]:
    """``(a1, a2)``: halves of the directed moves onto occupied / empty pegs."""
    p = params.p
    a1 = a2 = 0
    for mu in params.occupancies():
        o = occupancy_count(params, mu)
        a1 += binomial(mu, 2) * o
        a2 += mu * (p - mu) * o
    return _as_count(Fraction(a1, 2), "|A1|"), _as_count(Fraction(a2, 2), "|A2|")


def e1_class(params: HanoiParams, mu: int) -> int:
    """Singleton -> empty edges inside occupancy class ``mu``."""
    s = sum(nu * refined_count(params, mu, nu) for nu in range(mu + 1))
    return _as_count(Fraction((params.p - mu) * s, 2), f"e1 class {mu}")


def cross_class_edges(params: HanoiParams, mu: int) -> int:
    """Edges joining occupancy class ``mu`` to class ``mu + 1``.

    Every such edge is a move of a multiton's top disc onto an empty peg,
    seen from the class-``mu`` endpoint; no halving.
    """
    if not 1 <= mu <= params.r:
        raise DomainError(f"occupancy mu={mu} outside [1, {params.r}] for {params}")
    p = params.p
    return sum((p - mu) * (mu - nu) * refined_count(params, mu, nu) for nu in range(mu + 1))


def within_class_edges(params: HanoiParams, mu: int) -> int:
    """Edges with both endpoints in occupancy class ``mu``.

    ``[O(mu) f(mu) - cross(mu - 1) - cross(mu)] / 2``: the class degree sum
    minus its incidences with the neighbouring classes, halved.
    """
    o = occupancy_count(params, mu)  # validates mu
    incident = o * degree_of_occupancy(params, mu)
    below = cross_class_edges(params, mu - 1) if mu > 1 else 0
    bracket = incident - below - cross_class_edges(params, mu)
    if bracket < 0 or bracket % 2:
        raise ConsistencyError(
            f"degree balance for class mu={mu} of {params} gave {bracket}"
        )
    return bracket // 2


def move_type_counts(params: HanoiParams) -> tuple[int, int, int]:
    """``(e1, e2, e3)``; ``e2`` is what remains of ``|E|``."""
    e1 = sum(e1_class(params, mu) for mu in params.occupancies())
    e3 = sum(cross_class_edges(params, mu) for mu in params.occupancies())
    e2 = total_edges(params) - e1 - e3
    if e2 < 0:
        raise ConsistencyError(f"e2 negative ({e2}) for {params}")
    return e1, e2, e3


@dataclass(frozen=True)
class EdgeCensus:
    total: int
    a1: int
    a2: int
    e1: int
    e2: int
    e3: int
    cross: dict[int, int] = field(default_factory=dict)
    within: dict[int, int] = field(default_factory=dict)
    e1_class: dict[int, int] = field(default_factory=dict)

    def check(self) -> None:
        """Raise :class:`ConsistencyError` if any partition identity fails."""
        problems = []
        if self.a1 + self.a2 != self.total:
            problems.append("a1 + a2 != total")
        if self.e1 + self.e2 + self.e3 != self.total:
            problems.append("e1 + e2 + e3 != total")
        if sum(self.cross.values()) != self.e3:
            problems.append("sum(cross) != e3")
        if sum(self.within.values()) != self.e1 + self.e2:
            problems.append("sum(within) != e1 + e2")
        for mu, w in self.within.items():
            if not 0 <= self.e1_class.get(mu, 0) <= w:
                problems.append(f"e1_class({mu}) outside [0, within({mu})]")
        if problems:
            raise ConsistencyError("; ".join(problems))


def edge_census(params: HanoiParams) -> EdgeCensus:
    a1, a2 = block_counts(params)
    e1, e2, e3 = move_type_counts(params)
    mus = params.occupancies()
    census = EdgeCensus(
        total=total_edges(params),
        a1=a1,
        a2=a2,
        e1=e1,
        e2=e2,
        e3=e3,
        cross={mu: cross_class_edges(params, mu) for mu in mus},
        within={mu: within_class_edges(params, mu) for mu in mus},
        e1_class={mu: e1_class(params, mu) for mu in mus},
    )
    census.check()
    return census
