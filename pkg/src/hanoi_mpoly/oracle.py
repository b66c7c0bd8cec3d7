"""Brute-force construction of H_p^n.

A state is the tuple ``peg_of_disc`` (disc 0 is the smallest) encoded as
``sum peg_of_disc[d] * p**d``. The top disc of a peg is the smallest disc
assigned to it, so stacks never need to be stored.

:func:`brute_force_summary` walks the whole state range in chunks with
numpy. It never consults the closed forms: degrees are counted from legal
moves, occupancies from peg loads, and each undirected edge is tallied
once, from the endpoint whose move goes to the higher-numbered peg.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from hanoi_mpoly.edges import edge_census
from hanoi_mpoly.errors import DomainError, ResourceError
from hanoi_mpoly.occupancy import (
    HanoiParams,
    degree_of_occupancy,
    refined_count,
    vertex_count,
)
from hanoi_mpoly.polynomial import m_polynomial

DEFAULT_STATE_CAP = 20_000_000
CAP_ENV = "HANOI_MPOLY_STATE_CAP"
CHUNK = 1 << 16

MOVE_TYPES = ("sp_ep", "sp_op", "mp_ep", "mp_op")


def state_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_STATE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise DomainError(f"{CAP_ENV}={raw!r} is not an integer") from None
    if cap < 1:
        raise DomainError(f"{CAP_ENV} must be positive, got {cap}")
    return cap


# --- single states --------------------------------------------------------------

def encode(pegs: tuple[int, ...] | list[int], p: int) -> int:
    code = 0
    for d in reversed(range(len(pegs))):
        code = code * p + pegs[d]
    return code


def decode(code: int, params: HanoiParams) -> tuple[int, ...]:
    if not 0 <= code < params.p ** params.n:
        raise DomainError(f"state code {code} outside [0, {params.p ** params.n})")
    pegs = []
    for _ in range(params.n):
        code, peg = divmod(code, params.p)
        pegs.append(peg)
    return tuple(pegs)


def legal_moves(state: int, params: HanoiParams) -> list[int]:
    """Encodings of all states one legal move away from ``state``."""
    p, n = params.p, params.n
    pegs = decode(state, params)
    top = [n] * p  # n marks an empty peg
    for d in reversed(range(n)):
        top[pegs[d]] = d
    out = []
    for a in range(p):
        t = top[a]
        if t == n:
            continue
        for b in range(p):
            if b != a and t < top[b]:
                out.append(state + (b - a) * p ** t)
    return out


def occupancy(state: int, params: HanoiParams) -> int:
    return len(set(decode(state, params)))


# --- exhaustive summary ---------------------------------------------------------

@dataclass
class GraphSummary:
    """Streaming tallies over every state and every edge.

    ``state_census`` maps ``(mu, nu, degree)`` to a state count and
    ``edge_census`` maps ``(mu_u, mu_v, deg_u, deg_v)`` (sorted so that
    ``(mu_u, deg_u) <= (mu_v, deg_v)``) to an edge count; every other
    census is a projection of those two. ``moves`` counts directed moves by
    source/target kind: ``sp``/``mp`` singleton/multiton source, ``ep``/``op``
    empty/occupied target.
    """

    params: HanoiParams
    state_census: Counter = field(default_factory=Counter)
    edge_census: Counter = field(default_factory=Counter)
    moves: Counter = field(default_factory=Counter)

    def merge(self, other: GraphSummary) -> GraphSummary:
        if other.params != self.params:
            raise DomainError("cannot merge summaries of different graphs")
        return GraphSummary(
            self.params,
            self.state_census + other.state_census,
            self.edge_census + other.edge_census,
            self.moves + other.moves,
        )

    @property
    def vertex_count(self) -> int:
        return sum(self.state_census.values())

    @property
    def edge_count(self) -> int:
        return sum(self.edge_census.values())

    @property
    def degree_histogram(self) -> dict[int, int]:
        out: Counter = Counter()
        for (_, _, deg), c in self.state_census.items():
            out[deg] += c
        return dict(sorted(out.items()))

    @property
    def occupancy_census(self) -> dict[tuple[int, int], int]:
        out: Counter = Counter()
        for (mu, nu, _), c in self.state_census.items():
            out[mu, nu] += c
        return dict(sorted(out.items()))

    @property
    def degree_pair_census(self) -> dict[tuple[int, int], int]:
        out: Counter = Counter()
        for (_, _, du, dv), c in self.edge_census.items():
            out[min(du, dv), max(du, dv)] += c
        return dict(sorted(out.items()))

    @property
    def class_pair_census(self) -> dict[tuple[int, int], int]:
        out: Counter = Counter()
        for (mu, mv, _, _), c in self.edge_census.items():
            out[mu, mv] += c
        return dict(sorted(out.items()))

    @property
    def move_type_census(self) -> dict[str, int]:
        """Undirected move-type and block tallies folded from directed moves.

        ``sp_ep`` and ``mp_op`` moves come in reversible pairs and are halved;
        an ``mp_ep`` move is the one orientation of an occupancy-raising edge.
        """
        m = self.moves
        return {
            "e1": m["sp_ep"] // 2,
            "e2": m["mp_op"] // 2,
            "e3": m["mp_ep"],
            "e3_reverse": m["sp_op"],
            "a1": (m["sp_op"] + m["mp_op"]) // 2,
            "a2": (m["sp_ep"] + m["mp_ep"]) // 2,
        }


def _tops(digits: np.ndarray, p: int, n: int) -> np.ndarray:
    """``tops[s, k]`` = smallest disc on peg ``k`` of state ``s`` (``n`` if empty)."""
    rows = np.arange(digits.shape[0])
    tops = np.full((digits.shape[0], p), n, dtype=np.int64)
    for d in reversed(range(n)):
        tops[rows, digits[:, d]] = d
    return tops


def _degrees(tops: np.ndarray, p: int) -> np.ndarray:
    deg = np.zeros(tops.shape[0], dtype=np.int64)
    for a in range(p):
        for b in range(p):
            if a != b:
                deg += tops[:, a] < tops[:, b]
    return deg


def _loads(digits: np.ndarray, p: int) -> np.ndarray:
    return np.stack([(digits == k).sum(axis=1) for k in range(p)], axis=1)


def _digits(codes: np.ndarray, p: int, n: int) -> np.ndarray:
    digits = np.empty((codes.shape[0], n), dtype=np.int64)
    rest = codes.copy()
    for d in range(n):
        digits[:, d] = rest % p
        rest //= p
    return digits


def _tally(counter: Counter, columns: list[np.ndarray]) -> None:
    if columns[0].size == 0:
        return
    keys, counts = np.unique(np.stack(columns, axis=1), axis=0, return_counts=True)
    for key, c in zip(keys.tolist(), counts.tolist()):
        counter[tuple(key)] += c


def _state_info(digits: np.ndarray, p: int, n: int):
    tops = _tops(digits, p, n)
    loads = _loads(digits, p)
    mu = (loads > 0).sum(axis=1)
    nu = (loads == 1).sum(axis=1)
    return tops, loads, mu, nu, _degrees(tops, p)


def summarize_range(params: HanoiParams, start: int, stop: int) -> GraphSummary:
    """Summary restricted to source states ``start <= code < stop``."""
    p, n = params.p, params.n
    summary = GraphSummary(params)
    codes = np.arange(start, stop, dtype=np.int64)
    if codes.size == 0:
        return summary
    if n == 0:
        # the single empty arrangement: no pegs occupied, no moves
        summary.state_census[0, 0, 0] += int(codes.size)
        return summary
    digits = _digits(codes, p, n)
    tops, loads, mu, nu, deg = _state_info(digits, p, n)
    _tally(summary.state_census, [mu, nu, deg])

    powers = p ** np.arange(n, dtype=np.int64)
    rows = np.arange(codes.size)
    for a in range(p):
        src_top = tops[:, a]
        src_single = loads[:, a] == 1
        for b in range(p):
            if a == b:
                continue
            legal = src_top < tops[:, b]
            tgt_empty = loads[:, b] == 0
            for kind, mask in (
                ("sp_ep", src_single & tgt_empty),
                ("sp_op", src_single & ~tgt_empty),
                ("mp_ep", ~src_single & tgt_empty),
                ("mp_op", ~src_single & ~tgt_empty),
            ):
                summary.moves[kind] += int(np.count_nonzero(legal & mask))
            if b < a:
                continue
            idx = rows[legal]
            if idx.size == 0:
                continue
            # rebuild each target state from scratch and measure it directly
            tgt_codes = codes[idx] + (b - a) * powers[src_top[idx]]
            _, _, t_mu, _, t_deg = _state_info(_digits(tgt_codes, p, n), p, n)
            s_mu, s_deg = mu[idx], deg[idx]
            swap = (t_mu < s_mu) | ((t_mu == s_mu) & (t_deg < s_deg))
            _tally(summary.edge_census, [
                np.where(swap, t_mu, s_mu), np.where(swap, s_mu, t_mu),
                np.where(swap, t_deg, s_deg), np.where(swap, s_deg, t_deg),
            ])
    return summary


def _chunks(total: int, size: int) -> list[tuple[int, int]]:
    return [(lo, min(lo + size, total)) for lo in range(0, total, size)]


def _run_chunk(args) -> GraphSummary:
    return summarize_range(*args)


def brute_force_summary(
    params: HanoiParams,
    cap: int | None = None,
    workers: int = 1,
    chunk: int = CHUNK,
) -> GraphSummary:
    """Exhaustive censuses of H_p^n over all ``p**n`` states."""
    cap = state_cap() if cap is None else cap
    states = params.p ** params.n
    if states > cap:
        raise ResourceError(
            f"{params} has {states} states, above the cap {cap}; "
            f"raise it with --cap or {CAP_ENV}",
            required=states,
            cap=cap,
        )
    jobs = [(params, lo, hi) for lo, hi in _chunks(states, chunk)]
    total = GraphSummary(params)
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_chunk, jobs))
    else:
        parts = [_run_chunk(job) for job in jobs]
    for part in parts:
        total = total.merge(part)
    return total


# --- verification ---------------------------------------------------------------

@dataclass
class Comparison:
    name: str
    expected: object
    observed: object

    @property
    def ok(self) -> bool:
        return self.expected == self.observed


@dataclass
class VerificationReport:
    params: HanoiParams
    states: int
    checks: list[Comparison] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def mismatches(self) -> list[Comparison]:
        return [c for c in self.checks if not c.ok]

    def add(self, name: str, expected, observed) -> None:
        self.checks.append(Comparison(name, expected, observed))


def _edge_invariant_violations(summary: GraphSummary) -> int:
    """Edges breaking the occupancy-step or degree-step rules."""
    p = summary.params.p
    bad = 0
    for (mu, mv, du, dv), c in summary.edge_census.items():
        if abs(mu - mv) > 1 or abs(du - dv) not in (0, p - max(mu, mv)):
            bad += c
    return bad


def verify(
    params: HanoiParams,
    cap: int | None = None,
    workers: int = 1,
    summary: GraphSummary | None = None,
) -> VerificationReport:
    """Compare every closed-form count for ``params`` with the oracle."""
    if summary is None:
        summary = brute_force_summary(params, cap=cap, workers=workers)
    report = VerificationReport(params, params.p ** params.n)
    mus = list(params.occupancies())

    occ = {k: v for k, v in summary.occupancy_census.items() if k[0] >= 1}
    if params.n == 0:
        report.notes.append(
            "n = 0: the oracle sees one empty arrangement (occupancy 0); "
            "the closed forms count occupancy classes 1..r only, which is empty"
        )
    report.add("vertices (occupancy >= 1)", vertex_count(params), sum(occ.values()))
    closed_occ = {}
    for mu in mus:
        for nu in range(mu + 1):
            c = refined_count(params, mu, nu)
            if c:
                closed_occ[mu, nu] = c
    report.add("states by (mu, nu)", closed_occ, occ)

    expected_deg = {(mu, degree_of_occupancy(params, mu)) for mu in mus}
    seen_deg = {(mu, d) for (mu, _, d) in summary.state_census if mu >= 1}
    report.add("degree of every state = f(occupancy)", set(), seen_deg - expected_deg)

    census = edge_census(params)
    poly = m_polynomial(params)
    report.add("|E|", census.total, summary.edge_count)
    report.add("degree-pair census m_ij", poly.terms, summary.degree_pair_census)
    classes = summary.class_pair_census
    report.add("cross-class edges by mu",
               {mu: c for mu, c in census.cross.items() if c},
               {mu: c for (mu, mv), c in classes.items() if mv == mu + 1})
    report.add("within-class edges by mu",
               {mu: c for mu, c in census.within.items() if c},
               {mu: c for (mu, mv), c in classes.items() if mv == mu})
    moves = summary.move_type_census
    report.add("(e1, e2, e3)", (census.e1, census.e2, census.e3),
               (moves["e1"], moves["e2"], moves["e3"]))
    report.add("e3 seen from the upper endpoint", census.e3, moves["e3_reverse"])
    report.add("(a1, a2)", (census.a1, census.a2), (moves["a1"], moves["a2"]))
    report.add("edges breaking adjacency rules", 0, _edge_invariant_violations(summary))
    degree_sum = sum(d * c for d, c in summary.degree_histogram.items())
    report.add("handshake: degree sum = 2|E|", Fraction(degree_sum, 2), summary.edge_count)
    return report
