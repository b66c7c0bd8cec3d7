from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hanoi_mpoly.errors import DomainError, ResourceError
from hanoi_mpoly.occupancy import HanoiParams, degree_of_occupancy
from hanoi_mpoly.oracle import (
    CAP_ENV,
    GraphSummary,
    brute_force_summary,
    decode,
    encode,
    legal_moves,
    occupancy,
    state_cap,
    summarize_range,
    verify,
)

from oracles import graph_by_walk
from reference_tables import TABLE4


def test_encoding_is_a_bijection():
    params = HanoiParams(3, 4)
    codes = [encode(pegs, 3) for pegs in product(range(3), repeat=4)]
    assert sorted(codes) == list(range(81))
    for code in range(81):
        assert encode(decode(code, params), 3) == code
    with pytest.raises(DomainError):
        decode(81, params)


def test_all_on_one_peg_has_p_minus_one_moves():
    assert len(legal_moves(0, HanoiParams(3, 3))) == 2


def test_two_discs_on_distinct_pegs():
    params = HanoiParams(4, 2)
    assert len(legal_moves(encode((0, 1), 4), params)) == 5


def test_larger_disc_cannot_land_on_smaller():
    params = HanoiParams(3, 2)
    state = encode((1, 0), 3)  # small disc on peg 1, large on peg 0
    targets = {decode(t, params) for t in legal_moves(state, params)}
    assert targets == {(0, 0), (2, 0), (1, 2)}


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 6), st.integers(0, 7), st.data())
def test_moves_are_reversible_and_degree_follows_occupancy(p, n, data):
    params = HanoiParams(p, n)
    state = data.draw(st.integers(0, p**n - 1))
    moves = legal_moves(state, params)
    assert len(set(moves)) == len(moves)
    for t in moves:
        assert state in legal_moves(t, params)
        assert abs(occupancy(t, params) - occupancy(state, params)) <= 1
    if n:
        assert len(moves) == degree_of_occupancy(params, occupancy(state, params))


@pytest.mark.parametrize("p,n", [(3, 3), (4, 3), (2, 4), (5, 2), (1, 3), (6, 2)])
def test_vectorized_summary_matches_explicit_walk(p, n):
    adj, occ = graph_by_walk(p, n)
    summary = brute_force_summary(HanoiParams(p, n))
    assert summary.vertex_count == p**n
    assert summary.edge_count == sum(len(v) for v in adj.values()) // 2
    hist = {}
    for nbrs in adj.values():
        hist[len(nbrs)] = hist.get(len(nbrs), 0) + 1
    assert summary.degree_histogram == dict(sorted(hist.items()))
    pairs = {}
    for u, nbrs in adj.items():
        for v in nbrs:
            if u < v:
                key = tuple(sorted((occ[u], occ[v])))
                pairs[key] = pairs.get(key, 0) + 1
    assert summary.class_pair_census == dict(sorted(pairs.items()))


def test_scalar_moves_match_summary():
    params = HanoiParams(4, 4)
    summary = brute_force_summary(params)
    directed = sum(len(legal_moves(s, params)) for s in range(4**4))
    assert directed == 2 * summary.edge_count
    assert sum(summary.moves.values()) == directed


def test_example_summaries():
    s = brute_force_summary(HanoiParams(4, 2))
    assert (s.vertex_count, s.edge_count) == (16, 36)
    assert s.degree_pair_census == {(3, 5): 12, (5, 5): 24}
    s = brute_force_summary(HanoiParams(4, 7))
    assert s.degree_pair_census[6, 6] == 45444 and s.edge_count == 48768


def test_handshake():
    s = brute_force_summary(HanoiParams(5, 4))
    assert 2 * s.edge_count == sum(d * c for d, c in s.degree_histogram.items())


def test_empty_disc_set():
    s = brute_force_summary(HanoiParams(3, 0))
    assert s.vertex_count == 1 and s.edge_count == 0
    assert s.occupancy_census == {(0, 0): 1}


@pytest.mark.parametrize("workers,chunk", [(1, 7), (1, 1000), (3, 50), (2, 4096)])
def test_partitioning_does_not_change_the_summary(workers, chunk):
    params = HanoiParams(4, 5)
    reference = brute_force_summary(params)
    other = brute_force_summary(params, workers=workers, chunk=chunk)
    assert other.state_census == reference.state_census
    assert other.edge_census == reference.edge_census
    assert other.moves == reference.moves


def test_merge_is_associative_and_order_free():
    params = HanoiParams(3, 5)
    a, b, c = (summarize_range(params, lo, hi) for lo, hi in [(0, 50), (50, 170), (170, 243)])
    left, right = a.merge(b).merge(c), a.merge(b.merge(c))
    flipped = c.merge(a).merge(b)
    for s in (right, flipped):
        assert s.edge_census == left.edge_census and s.state_census == left.state_census
    with pytest.raises(DomainError):
        a.merge(GraphSummary(HanoiParams(4, 5)))


def test_cap():
    with pytest.raises(ResourceError) as info:
        brute_force_summary(HanoiParams(5, 8), cap=1000)
    assert info.value.required == 390625 and info.value.cap == 1000


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv(CAP_ENV, "100")
    assert state_cap() == 100
    with pytest.raises(ResourceError):
        brute_force_summary(HanoiParams(3, 5))
    monkeypatch.setenv(CAP_ENV, "lots")
    with pytest.raises(DomainError):
        state_cap()


@pytest.mark.parametrize("p,n,edges", [(3, 3, 39), (4, 8, 195840), (1, 4, 0), (2, 5, None)])
def test_verify_passes(p, n, edges):
    report = verify(HanoiParams(p, n))
    assert report.passed, [(c.name, c.expected, c.observed) for c in report.mismatches]
    if edges is not None:
        assert next(c for c in report.checks if c.name == "|E|").observed == edges


def test_verify_h48_top_coefficient():
    report = verify(HanoiParams(4, 8))
    pairs = next(c for c in report.checks if c.name == "degree-pair census m_ij")
    assert pairs.observed == pairs.expected == TABLE4[8][0]


def test_verify_reports_mismatch():
    params = HanoiParams(3, 3)
    summary = brute_force_summary(params)
    summary.edge_census[1, 2, 2, 3] += 1
    report = verify(params, summary=summary)
    assert not report.passed
    assert {c.name for c in report.mismatches} >= {"|E|", "degree-pair census m_ij"}


def test_verify_flags_rule_breaking_edges():
    params = HanoiParams(4, 3)
    summary = brute_force_summary(params)
    summary.edge_census[1, 3, 3, 6] += 1
    report = verify(params, summary=summary)
    assert "edges breaking adjacency rules" in {c.name for c in report.mismatches}


def test_verify_notes_empty_disc_set():
    report = verify(HanoiParams(4, 0))
    assert report.passed and report.notes
