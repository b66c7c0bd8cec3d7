"""Exact M-polynomials and degree-based indices of generalized Hanoi graphs.

The closed-form side (occupancy enumerators, edge census, M-polynomial,
indices) is pure integer/rational arithmetic. :mod:`hanoi_mpoly.oracle`
builds the state graph by brute force so every closed-form number can be
checked against an independent count.
"""

import logging

from hanoi_mpoly.combinatorics import (
    binomial,
    falling_factorial,
    stirling2,
    stirling2_assoc2,
)
from hanoi_mpoly.edges import (
    EdgeCensus,
    block_counts,
    cross_class_edges,
    edge_census,
    move_type_counts,
    total_edges,
    within_class_edges,
)
from hanoi_mpoly.errors import (
    ConsistencyError,
    DomainError,
    HanoiError,
    ResourceError,
    SingularOperatorError,
)
from hanoi_mpoly.indices import (
    IndexReport,
    indices_direct,
    indices_via_operators,
    oeis_sequence,
    vertex_form_first_zagreb,
)
from hanoi_mpoly.occupancy import (
    DegreeSpectrum,
    HanoiParams,
    degree_of_occupancy,
    degree_spectrum,
    occupancy_count,
    refined_count,
)
from hanoi_mpoly.polynomial import (
    GeneralPolynomial,
    MPolynomial,
    evaluate,
    m_polynomial,
    paper_theorem_report,
)

__version__ = "0.1.0"

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = [
    "ConsistencyError",
    "DegreeSpectrum",
    "DomainError",
    "EdgeCensus",
    "GeneralPolynomial",
    "HanoiError",
    "HanoiParams",
    "IndexReport",
    "MPolynomial",
    "ResourceError",
    "SingularOperatorError",
    "binomial",
    "block_counts",
    "cross_class_edges",
    "degree_of_occupancy",
    "degree_spectrum",
    "edge_census",
    "evaluate",
    "falling_factorial",
    "indices_direct",
    "indices_via_operators",
    "m_polynomial",
    "move_type_counts",
    "occupancy_count",
    "oeis_sequence",
    "paper_theorem_report",
    "refined_count",
    "stirling2",
    "stirling2_assoc2",
    "total_edges",
    "vertex_form_first_zagreb",
    "within_class_edges",
]
