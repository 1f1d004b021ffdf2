import pytest

from watchwalk import (PartitionSpec, ScoreSequence, add_sink, add_source,
                       bipartite_walk_construction, circulant,
                       domination_number, is_dominating_set,
                       is_strongly_connected, is_simple, local_transitivity,
                       paley, random_orientation, random_tournament,
                       score_sequence, strongify, transitive, watchman_number)
from watchwalk.core import Digraph, hamilton_cycle
from watchwalk.errors import PreconditionError
from watchwalk.families import SplitMix64


def test_transitive():
    t = transitive(5)
    assert score_sequence(t).scores == (0, 1, 2, 3, 4)
    assert t.has_arc(0, 4) and not t.has_arc(4, 0)
    assert transitive(1).n == 1


def test_paley():
    assert paley(3).out == circulant(3, {1}).out
    assert paley(7).out == circulant(7, {1, 2, 4}).out
    p11 = paley(11)
    assert all(p11.out_degree(v) == 5 for v in range(11))
    with pytest.raises(PreconditionError):
        paley(9)  # prime power, not prime
    with pytest.raises(PreconditionError):
        paley(5)  # 1 mod 4


def test_circulant_validation():
    with pytest.raises(PreconditionError):
        circulant(6, {1, 2})  # even order
    with pytest.raises(PreconditionError):
        circulant(5, {1, 4})  # both s and n-s
    with pytest.raises(PreconditionError):
        circulant(5, {1})  # wrong size
    assert circulant(3, {1}).is_tournament()


def test_random_reproducibility():
    assert random_tournament(9, 42).out == random_tournament(9, 42).out
    assert random_tournament(9, 42).out != random_tournament(9, 43).out
    assert random_tournament(7, 1).arc_count == 21
    spec = PartitionSpec((3, 3))
    d = random_orientation(spec, 1)
    assert d.arc_count == 9 and not d.has_digon()
    assert random_orientation(spec, 1).out == d.out


def test_splitmix_reference_values():
    # first outputs for seed 0 of the published SplitMix64 algorithm
    rng = SplitMix64(0)
    assert rng.next64() == 0xE220A8397B1DCDAF
    assert rng.next64() == 0x6E789E6AA1B965F4


def test_add_source_sink():
    p = paley(7)
    src = add_source(p)
    assert domination_number(src)[0] == 1
    snk = add_sink(p)
    assert snk.n == 8 and all(snk.has_arc(v, 7) for v in range(7))
    assert add_sink(transitive(3)).out == transitive(4).out


def test_strongify():
    base = add_sink(paley(7))
    s = strongify(base)
    assert s.n == 9
    assert is_strongly_connected(s)
    assert domination_number(s)[0] == 3
    assert all(s.has_arc(u, v) for u, v in base.arcs())
    assert hamilton_cycle(s) is not None
    with pytest.raises(PreconditionError):
        strongify(transitive(5))  # gamma = 1
    with pytest.raises(PreconditionError):
        strongify(paley(7))  # already strong


def test_score_sequence_validation():
    with pytest.raises(ValueError):
        ScoreSequence((1, 0, 2))  # not sorted
    with pytest.raises(ValueError):
        ScoreSequence((0, 0, 3))  # Landau prefix fails
    with pytest.raises(ValueError):
        ScoreSequence((0, 1, 3))  # wrong sum


def test_is_simple(three_cycle):
    assert is_simple(transitive(4))
    assert is_simple(three_cycle)
    assert not is_simple(paley(7))


def test_local_transitivity(figs):
    assert local_transitivity(figs["fig_unique14"]) == (True, True, True)
    assert local_transitivity(transitive(6)) == (True, True, True)
    in_ok, out_ok, both = local_transitivity(paley(7))
    assert not both


def test_partition_spec():
    with pytest.raises(PreconditionError):
        PartitionSpec((4,))
    with pytest.raises(PreconditionError):
        PartitionSpec((0, 2))
    assert PartitionSpec((2, 3)).part_masks() == [0b00011, 0b11100]


def test_bipartite_walk_construction():
    # A = {0, 1}, B = {2, 3}; b2->a1, a2->b2, b3->a2, a1->b3
    d = Digraph.from_arcs(4, [(2, 0), (1, 2), (3, 1), (0, 3)])
    walk = bipartite_walk_construction(d, 0b0011, 0b1100)
    assert walk.length == 4  # 2|A|
    assert walk.is_valid_in(d)
    assert is_dominating_set(d, walk.vertex_mask())
    assert watchman_number(d).w <= 4
    with pytest.raises(PreconditionError):
        bipartite_walk_construction(d, 0b0011, 0b0100)  # a2 undominated
    with pytest.raises(PreconditionError):
        # not an orientation of a complete bipartite graph
        bipartite_walk_construction(Digraph.from_arcs(4, [(0, 1)]), 0b0011, 0b1100)


def test_k12_has_no_valid_instance():
    # no orientation of K_{1,2} reaches delta-minus >= 1: vertices 1 and 2
    # can only be dominated by 0, which then has no in-neighbour left, so
    # the smallest instance satisfying the hypothesis has |A| >= 2
    for pattern in range(4):
        out = [0, 0, 0]  # vertex 0 alone in part A
        for j, b in ((1, pattern & 1), (2, pattern >> 1)):
            if b:
                out[0] |= 1 << j
            else:
                out[j] |= 1
        d = Digraph(3, tuple(out))
        assert any(d.in_mask(v) == 0 for v in range(3))
        with pytest.raises(PreconditionError):
            bipartite_walk_construction(d, 0b001, 0b110)


def test_fixture_shapes(figs):
    assert figs["fig1_path"].n == 5 and figs["fig1_path"].arc_count == 4
    wind = figs["fig2_windmill"]
    assert wind.n == 15 and wind.arc_count == 32
    assert figs["fig_paley7"].out == paley(7).out
    assert figs["fig_unique14"].out == circulant(7, {1, 2, 3}).out
