"""Occupancy classes of H_p^n: degree law, degree spectrum, state counts.

A state's degree depends only on its occupancy ``mu`` (the number of
nonempty pegs), so every count below is indexed by ``mu`` and, when the
split matters, by the number ``nu`` of pegs holding exactly one disc.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from hanoi_mpoly.combinatorics import (
    binomial,
    falling_factorial,
    stirling2,
    stirling2_assoc2,
)
from hanoi_mpoly.errors import DomainError


@dataclass(frozen=True, order=True)
class HanoiParams:
    """``p`` pegs and ``n`` discs."""

    p: int
    n: int

    def __post_init__(self) -> None:
        if isinstance(self.p, bool) or not isinstance(self.p, int) or self.p < 1:
            raise DomainError(f"peg count must be an integer >= 1, got {self.p!r}")
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
            raise DomainError(f"disc count must be an integer >= 0, got {self.n!r}")

    @property
    def r(self) -> int:
        """Largest attainable occupancy, ``min(n, p)``."""
        return min(self.n, self.p)

    def occupancies(self) -> range:
        return range(1, self.r + 1)


@dataclass(frozen=True)
class DegreeSpectrum:
    degrees: tuple[int, ...]
    class_of_degree: dict[int, tuple[int, ...]] = field(default_factory=dict)

    @property
    def max_degree(self) -> int | None:
        return self.degrees[-1] if self.degrees else None

    @property
    def min_degree(self) -> int | None:
        return self.degrees[0] if self.degrees else None


def _check_mu(params: HanoiParams, mu: int) -> None:
    if not 1 <= mu <= params.r:
        raise DomainError(f"occupancy mu={mu} outside [1, {params.r}] for {params}")


def degree_of_occupancy(params: HanoiParams, mu: int) -> int:
    """Degree shared by every state with ``mu`` occupied pegs.

    The smallest top disc can go to any of the other ``p - 1`` pegs, the
    next smallest to ``p - 2`` of them, and so on, giving
    ``C(p, 2) - C(p - mu, 2)``.
    """
    _check_mu(params, mu)
    return binomial(params.p, 2) - binomial(params.p - mu, 2)


def degree_spectrum(params: HanoiParams) -> DegreeSpectrum:
    classes: dict[int, list[int]] = {}
    for mu in params.occupancies():
        classes.setdefault(degree_of_occupancy(params, mu), []).append(mu)
    return DegreeSpectrum(
        degrees=tuple(sorted(classes)),
        class_of_degree={d: tuple(m) for d, m in sorted(classes.items())},
    )


def occupancy_count(params: HanoiParams, mu: int) -> int:
    """Number of states with exactly ``mu`` occupied pegs."""
    _check_mu(params, mu)
    return stirling2(params.n, mu) * falling_factorial(params.p, mu)


def refined_count(params: HanoiParams, mu: int, nu: int) -> int:
    """Number of states with ``mu`` occupied pegs, ``nu`` of them singletons.

    Choose the singleton discs, split the rest into ``mu - nu`` stacks of
    at least two, then place the ``mu`` stacks on distinct pegs.
    """
    _check_mu(params, mu)
    if not 0 <= nu <= mu:
        raise DomainError(f"singleton count nu={nu} outside [0, {mu}]")
    n = params.n
    if nu > n:
        return 0
    return (
        binomial(n, nu)
        * stirling2_assoc2(n - nu, mu - nu)
        * falling_factorial(params.p, mu)
    )


def refined_table(params: HanoiParams) -> dict[tuple[int, int], int]:
    """All nonzero ``(mu, nu) -> count`` cells."""
    table = {}
    for mu in params.occupancies():
        for nu in range(mu + 1):
            c = refined_count(params, mu, nu)
            if c:
                table[mu, nu] = c
    return table


def vertex_count(params: HanoiParams) -> int:
    """Sum of the occupancy classes; 0 when ``n == 0``."""
    return sum(occupancy_count(params, mu) for mu in params.occupancies())
