import json

import pytest

import oracles
from grundytd import (
    CapacityError,
    DomainError,
    Graph,
    build_family,
    chain_violations,
    complete,
    compute_report,
    cycle,
    game_total_domination_number,
    grundy_domination_number,
    grundy_total_domination_number,
    interpolation_witnesses,
    is_minimal_total_dominating_set,
    is_total_dominating_sequence,
    is_total_dominating_set,
    path,
    semistrong_matching_number,
    star,
    strong_matching_number,
    total_dominating_sequence_of_length,
    total_domination_number,
    upper_total_domination_number,
)


def test_p4_closed_value():
    assert grundy_domination_number(path(4))[0] == 3


def test_p4_upper_total_domination():
    assert upper_total_domination_number(path(4))[0] == 2


def test_c6_total_domination():
    value, witness = total_domination_number(cycle(6))
    assert value == 4
    assert is_total_dominating_set(cycle(6), witness)


def test_k2_game_needs_both_vertices():
    assert game_total_domination_number(path(2))[0] == 2


def test_c6_game_forced_to_four():
    assert game_total_domination_number(cycle(6))[0] == 4


def test_p4_matching_numbers():
    assert strong_matching_number(path(4))[0] == 1
    assert semistrong_matching_number(path(4))[0] == 2
    assert grundy_total_domination_number(path(4))[0] == 4


def test_two_disjoint_edges_strong_matching():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert strong_matching_number(g)[0] == 2


def test_p5_interpolation_lengths():
    wits = interpolation_witnesses(path(5))
    assert sorted(wits) == [3, 4]
    for length, seq in wits.items():
        assert len(seq) == length
        assert is_total_dominating_sequence(path(5), seq)


def test_c6_interpolation_single_length():
    assert sorted(interpolation_witnesses(cycle(6))) == [4]


def test_sequence_of_exact_length():
    seq = total_dominating_sequence_of_length(path(5), 3)
    assert len(seq) == 3
    assert is_total_dominating_sequence(path(5), seq)


def test_sequence_of_unattainable_length():
    assert total_dominating_sequence_of_length(cycle(6), 5) is None
    assert total_dominating_sequence_of_length(cycle(6), 3) is None


def test_isolated_vertex_rejected():
    g = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(DomainError):
        total_domination_number(g)


def test_cap_blocks_oversized_input(monkeypatch):
    g = complete(30)
    with pytest.raises(CapacityError):
        grundy_total_domination_number(g)
    monkeypatch.setenv("GRUNDY_CAP", "30")
    assert grundy_total_domination_number(g)[0] == 2


def test_explicit_cap_argument_wins():
    with pytest.raises(CapacityError):
        grundy_total_domination_number(path(10), cap=5)


def test_witnesses_are_deterministic():
    g = cycle(7)
    a = grundy_total_domination_number(g)
    b = grundy_total_domination_number(g)
    assert a == b


def test_minimal_total_dominating_set_predicate():
    g = cycle(6)
    assert is_minimal_total_dominating_set(g, (0, 1, 3, 4))
    assert not is_minimal_total_dominating_set(g, (0, 1, 2, 3, 4))


def test_report_values_and_json_roundtrip():
    g = build_family("petersen")
    rep = compute_report(g)
    values = {k: r.value for k, r in rep.results.items()}
    assert values == {
        "gamma_t": 4,
        "Gamma_t": 6,
        "gamma_tg": 5,
        "gamma_grt": 6,
        "gamma_gr": 5,
        "nu_s": 3,
        "nu_ss": 3,
    }
    blob = json.dumps(rep.to_json_dict())
    parsed = json.loads(blob)
    assert parsed["n"] == 10
    assert parsed["invariants"]["gamma_grt"]["value"] == 6
    assert all(r.micros >= 0 for r in rep.results.values())


def test_report_subset_of_keys():
    rep = compute_report(path(6), keys=["gamma_t", "gamma_grt"])
    assert sorted(rep.results) == ["gamma_grt", "gamma_t"]


def test_chain_violations_empty_on_real_graphs(connected_upto_6):
    for g in connected_upto_6:
        assert chain_violations(compute_report(g)) == []


def test_named_fixture_values():
    fixtures = {
        "complete:5": {"gamma_grt": 2, "gamma_gr": 1},
        "complete:8": {"gamma_grt": 2, "gamma_gr": 1},
        "star:8": {"gamma_grt": 2, "gamma_gr": 8},
        "spider:3": {"gamma_tg": 2, "gamma_grt": 6},
        "gm:4": {"gamma_t": 4, "gamma_grt": 4},
        "gm:3": {"gamma_grt": 4},
        "k_kk:5": {"gamma_grt": 2},
        "gk:2": {"gamma_grt": 4},
        "gk:3": {"gamma_grt": 6},
    }
    for spec, want in fixtures.items():
        rep = compute_report(build_family(spec), keys=list(want))
        got = {k: r.value for k, r in rep.results.items()}
        assert got == want, spec


def test_solver_matches_subset_sweep_oracle(connected_upto_6):
    for g in connected_upto_6:
        assert total_domination_number(g)[0] == oracles.total_domination_number(g)
        assert upper_total_domination_number(g)[0] == oracles.upper_total_domination(g)
