import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from watchwalk import (Digraph, all_minimum_dominating_sets,
                       connected_domination_numbers, cycle_domination_number,
                       domination_number, domination_report, is_dominating_set,
                       total_domination_number, transitive)
from watchwalk.core import bits
from watchwalk.families import circulant, paley, random_tournament

from conftest import oracle_gamma


def test_windmill_gamma(figs):
    wind = figs["fig2_windmill"]
    gamma, witness = domination_number(wind)
    assert gamma == 4
    assert is_dominating_set(wind, witness)
    # the set named in the figure is one of the optima
    named = (1 << 6) | (1 << 7) | (1 << 9) | (1 << 11)
    assert named in all_minimum_dominating_sets(wind)


def test_unique14_gamma(figs):
    gamma, witness = domination_number(figs["fig_unique14"])
    assert gamma == 2
    # {v1, v5} = {0, 4} is a minimum dominating set
    assert (1 << 0) | (1 << 4) in all_minimum_dominating_sets(figs["fig_unique14"])


def test_paley7_minimum_sets():
    p = paley(7)
    gamma, _ = domination_number(p)
    assert gamma == 3
    sets = all_minimum_dominating_sets(p)
    # {v1, v2, v6} = {0, 1, 5} from the rotation orbit; 35 triples minus the
    # 7 non-dominating ones (each equal to some closed out-neighbourhood
    # complement) leaves 28
    assert (1 << 0) | (1 << 1) | (1 << 5) in sets
    assert len(sets) == 28
    as_tuples = [tuple(bits(mask)) for mask in sets]
    assert as_tuples == sorted(as_tuples)  # lexicographic vertex-tuple order


def test_all_minimum_sets_small(three_cycle):
    assert all_minimum_dominating_sets(transitive(3)) == [0b001]
    assert all_minimum_dominating_sets(three_cycle) == [0b011, 0b101, 0b110]


def test_total_domination(three_cycle):
    assert total_domination_number(transitive(2)) is None
    assert total_domination_number(three_cycle)[0] == 3
    assert total_domination_number(circulant(7, {1, 2, 3}))[0] == 3


def test_cycle_domination(figs, three_cycle):
    assert cycle_domination_number(figs["fig1_path"]) is None
    assert cycle_domination_number(paley(7))[0] == 3
    length, cycle = cycle_domination_number(three_cycle)
    assert length == 3 and cycle[0] == cycle[-1]


def test_cycle_domination_digon():
    # digon dominating the third vertex
    d = Digraph.from_arcs(3, [(0, 1), (1, 0), (0, 2)])
    assert cycle_domination_number(d)[0] == 2


def test_connected_domination(figs, three_cycle):
    wc, sc = connected_domination_numbers(figs["fig1_path"])
    assert wc is not None and sc is None
    # {v1,v2,v3,v4} dominates (v4 covers v5) and induces a weakly connected
    # path, so the minimum is 4
    assert wc[0] == 4 and wc[1] == 0b01111
    wc, sc = connected_domination_numbers(figs["fig2_windmill"])
    assert sc[0] == 7 and sc[1] == 0b1111111  # {v1..v7}
    wc, sc = connected_domination_numbers(three_cycle)
    assert wc[0] == 2
    assert sc[0] == 3  # a 2-set induces a single arc, not strong


def test_report_witnesses_validate(figs):
    for d in figs.values():
        rep = domination_report(d)
        assert is_dominating_set(d, rep.gamma_witness)
        for size, witness in ((rep.gamma_t, rep.gamma_t_witness),
                              (rep.gamma_wc, rep.gamma_wc_witness),
                              (rep.gamma_sc, rep.gamma_sc_witness)):
            if size is not None:
                assert witness.bit_count() == size
                assert is_dominating_set(d, witness)
                assert rep.gamma <= size
        if rep.gamma_cyc is not None:
            cyc = rep.gamma_cyc_witness
            assert len(cyc) - 1 == rep.gamma_cyc
            assert all(d.has_arc(a, b) for a, b in zip(cyc, cyc[1:]))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.integers(0, 2**63))
def test_gamma_matches_power_set_oracle(n, seed):
    t = random_tournament(n, seed)
    assert domination_number(t)[0] == oracle_gamma(t)


@pytest.mark.parametrize("seed", range(30))
def test_small_order_gamma_bounds(seed):
    # gamma <= 2 below order 7, <= 3 below order 19
    t = random_tournament(3 + seed % 4, seed)
    assert domination_number(t)[0] <= 2
    big = random_tournament(7 + seed % 12, seed)
    assert domination_number(big)[0] <= 3
