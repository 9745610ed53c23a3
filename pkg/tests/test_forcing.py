import pytest

from oracles import (adj_sets, brute_force_min_certificate, brute_force_z,
                     is_forcing_naive, naive_closure)
from zeroforcing.errors import BudgetExceededError, InputError
from zeroforcing.forcing import (closure, is_forcing_set, validate_chronicle,
                                 zero_forcing_number_exact,
                                 zero_forcing_upper_heuristic)
from zeroforcing.graph import (complete_graph, cycle_graph,
                               graph_from_edge_list, mask_from, min_degree,
                               path_graph, petersen_graph)
from zeroforcing.rng import SplitMix64


def test_closure_examples():
    p4 = path_graph(4)
    ch = closure(p4, 0b0001)
    assert ch.final_black == 0b1111
    assert ch.steps == ((0, 1), (1, 2), (2, 3))

    stuck = closure(p4, 0b0010)
    assert stuck.final_black == 0b0010 and stuck.steps == ()

    k4 = complete_graph(4)
    ch4 = closure(k4, 0b0111)
    assert ch4.final_black == 0b1111
    assert ch4.steps == ((0, 3),)

    with pytest.raises(InputError):
        closure(p4, 0b10000)


def test_chronicle_structure_and_validation(small_corpus):
    rng = SplitMix64(55)
    for g in small_corpus:
        initial = rng.next_u64() & g.full_mask
        ch = closure(g, initial)
        validate_chronicle(g, ch)
        forced = [w for _, w in ch.steps]
        assert len(set(forced)) == len(forced)
        assert all(not (initial >> w) & 1 for w in forced)
        assert ch.final_black == initial | mask_from(forced)
        # forcers black with a unique white neighbour at their moment
        black = set(v for v in range(g.n) if (initial >> v) & 1)
        nbrs = adj_sets(g)
        for forcer, forcee in ch.steps:
            assert forcer in black
            assert nbrs[forcer] - black == {forcee}
            black.add(forcee)


def test_closure_is_order_independent(small_corpus):
    rng = SplitMix64(77)
    for g in small_corpus[:25]:
        initial = rng.next_u64() & g.full_mask
        ours = closure(g, initial).final_black
        initial_set = {v for v in range(g.n) if (initial >> v) & 1}
        nbrs = adj_sets(g)
        for _ in range(50):
            randomized = naive_closure(nbrs, initial_set, rng=rng)
            assert mask_from(randomized) == ours


def test_closure_monotone_and_idempotent(small_corpus):
    rng = SplitMix64(99)
    for g in small_corpus:
        s = rng.next_u64() & g.full_mask
        extra = rng.next_u64() & g.full_mask
        bigger = s | extra
        a = closure(g, s).final_black
        b = closure(g, bigger).final_black
        assert a | b == b  # monotone
        assert closure(g, a).final_black == a  # idempotent


def test_is_forcing_set_examples():
    c5 = cycle_graph(5)
    assert is_forcing_set(c5, 0b00011)
    assert not is_forcing_set(c5, 0b00001)
    assert is_forcing_set(c5, c5.full_mask)


def test_exact_known_values():
    assert zero_forcing_number_exact(path_graph(7)).z == 1
    assert zero_forcing_number_exact(complete_graph(7)).z == 6
    assert zero_forcing_number_exact(petersen_graph()).z == 5
    assert zero_forcing_number_exact(cycle_graph(6)).z == 2
    assert zero_forcing_number_exact(graph_from_edge_list(0, [])).z == 0
    assert zero_forcing_number_exact(graph_from_edge_list(4, [])).z == 4


def test_exact_matches_brute_force(tiny_corpus):
    for g in tiny_corpus:
        result = zero_forcing_number_exact(g)
        assert result.z == brute_force_z(g)
        assert result.optimal_set.bit_count() == result.z
        assert is_forcing_set(g, result.optimal_set)
        validate_chronicle(g, result.chronicle)
        if g.n:
            assert result.z >= min_degree(g) - 1
        assert result.stats.closures > 0


def test_exact_certificate_is_lexicographically_smallest(tiny_corpus):
    for g in tiny_corpus[:25]:
        result = zero_forcing_number_exact(g)
        expected = brute_force_min_certificate(g)
        assert result.optimal_set == mask_from(expected)


def test_exact_budget_exhaustion():
    pet = petersen_graph()
    with pytest.raises(BudgetExceededError) as info:
        zero_forcing_number_exact(pet, budget=5)
    err = info.value
    assert err.evaluations <= 5
    assert err.best_upper >= 5  # true Z
    assert is_forcing_set(pet, err.best_upper_set)
    assert err.excluded_below < 5
    with pytest.raises(InputError):
        zero_forcing_number_exact(pet, budget=0)


def test_heuristic_examples():
    size, mask = zero_forcing_upper_heuristic(path_graph(10), restarts=5, seed=3)
    assert size <= 3
    assert is_forcing_naive(path_graph(10),
                            [v for v in range(10) if (mask >> v) & 1])
    size5, _ = zero_forcing_upper_heuristic(complete_graph(5), restarts=3, seed=0)
    assert size5 == 4
    sizep, _ = zero_forcing_upper_heuristic(petersen_graph(), restarts=20, seed=1)
    assert sizep <= 6
    with pytest.raises(InputError):
        zero_forcing_upper_heuristic(path_graph(3), restarts=0)


def test_heuristic_never_beats_exact(tiny_corpus):
    for g in tiny_corpus[:30]:
        exact = zero_forcing_number_exact(g).z
        upper, mask = zero_forcing_upper_heuristic(g, restarts=4, seed=11)
        assert upper >= exact
        assert is_forcing_set(g, mask)
