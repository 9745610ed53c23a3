import math

import pytest

from oracles import (contains_kab_naive, girth_by_edge_removal, is_connected)
from zeroforcing.errors import InputError, ResourceError
from zeroforcing.graph import (Gf2Matrix, Graph, check_graph_invariants,
                               circulant_graph, complete_bipartite_graph,
                               complete_graph, contains_kab, cycle_graph,
                               format_edge_list, gf2_rank, girth, gnp_sample,
                               graph_from_edge_list, is_regular, line_graph,
                               mask_from, max_degree, min_degree,
                               odd_inner_product_graph, parse_edge_list,
                               path_graph, petersen_graph,
                               random_regular_sample, standard_graph)
from zeroforcing.rng import SplitMix64, hash_combine, pair_draw53


def test_edge_list_basics():
    p4 = graph_from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    assert p4.edge_count == 3 and p4.degrees() == [1, 2, 2, 1]
    empty = graph_from_edge_list(3, [])
    assert empty.edge_count == 0
    dup = graph_from_edge_list(4, [(0, 1), (1, 0)])
    assert dup.edge_count == 1


def test_edge_list_rejects_bad_input():
    with pytest.raises(InputError):
        graph_from_edge_list(3, [(0, 3)])
    with pytest.raises(InputError):
        graph_from_edge_list(3, [(1, 1)])


def test_standard_graphs():
    k5 = complete_graph(5)
    assert k5.edge_count == 10 and set(k5.degrees()) == {4}
    c10 = circulant_graph(10, {1, 2})
    assert is_regular(c10) == 4
    assert all(c10.has_edge(i, (i + 1) % 10) for i in range(10))
    pet = petersen_graph()
    assert pet.n == 10 and is_regular(pet) == 3 and girth(pet) == 5
    assert standard_graph("petersen").adj == pet.adj
    with pytest.raises(InputError):
        standard_graph("moebius")
    with pytest.raises(InputError):
        standard_graph("path")  # missing n
    with pytest.raises(InputError):
        circulant_graph(6, {6})  # offset 0 mod n


def _generator_zoo():
    zoo = [
        path_graph(6), cycle_graph(7), complete_graph(5),
        complete_bipartite_graph(3, 4), petersen_graph(),
        circulant_graph(10, {1, 2}), circulant_graph(12, {1, 6}),
        line_graph(complete_graph(4))[0],
        odd_inner_product_graph(3)[0], odd_inner_product_graph(5)[0],
        gnp_sample(30, 0.3, 99), random_regular_sample(16, 3, 5),
    ]
    return zoo


def test_every_generator_output_is_a_valid_graph():
    for g in _generator_zoo():
        check_graph_invariants(g)


def test_line_graph_small_cases():
    p3 = path_graph(3)
    lg, index = line_graph(p3)
    assert lg.n == 2 and lg.edge_count == 1
    assert set(index) == {(0, 1), (1, 2)}

    c5 = cycle_graph(5)
    lg5, _ = line_graph(c5)
    assert lg5.n == 5 and is_regular(lg5) == 2 and is_connected(lg5)

    k4 = complete_graph(4)
    lg4, index4 = line_graph(k4)
    assert lg4.n == 6 and is_regular(lg4) == 4
    # independent adjacency re-check: edges adjacent iff they share a vertex
    rev = {i: e for e, i in index4.items()}
    for i in range(6):
        for j in range(i + 1, 6):
            share = bool(set(rev[i]) & set(rev[j]))
            assert lg4.has_edge(i, j) == share


def test_line_graph_vertex_count_and_regularity(small_corpus):
    for g in small_corpus:
        if g.edge_count == 0:
            continue
        lg, index = line_graph(g)
        assert lg.n == g.edge_count == len(index)
    for n, d in ((10, 3), (12, 4)):
        g = random_regular_sample(n, d, seed=n)
        lg, _ = line_graph(g)
        assert is_regular(lg) == 2 * d - 2


def test_odd_inner_product_graph():
    g3, lab3 = odd_inner_product_graph(3)
    assert g3.n == 3 and g3.edge_count == 0
    g5, lab5 = odd_inner_product_graph(5)
    assert g5.n == 15 and is_regular(g5) == 6
    g7, lab7 = odd_inner_product_graph(7)
    assert g7.n == 63 and is_regular(g7) == 30
    for labels, m in ((lab3, 3), (lab5, 5), (lab7, 7)):
        assert all(x.bit_count() % 2 == 1 for x in labels.rows)
        assert (1 << m) - 1 not in labels.rows
        assert len(labels.rows) == 2 ** (m - 1) - 1
    # adjacency really is the parity of the inner product
    for i in range(g5.n):
        for j in range(i + 1, g5.n):
            parity = (lab5.rows[i] & lab5.rows[j]).bit_count() & 1
            assert g5.has_edge(i, j) == bool(parity)
    with pytest.raises(InputError):
        odd_inner_product_graph(4)
    with pytest.raises(InputError):
        odd_inner_product_graph(1)


def test_girth_examples():
    assert girth(petersen_graph()) == 5
    assert girth(path_graph(4)) == math.inf
    assert girth(complete_graph(4)) == 3
    assert girth(cycle_graph(9)) == 9
    assert girth(complete_bipartite_graph(2, 3)) == 4


def test_girth_matches_oracle(small_corpus):
    for g in small_corpus:
        assert girth(g) == girth_by_edge_removal(g)


def test_degree_queries():
    assert min_degree(complete_graph(5)) == 4
    assert min_degree(path_graph(4)) == 1
    assert max_degree(complete_bipartite_graph(2, 3)) == 3
    assert is_regular(petersen_graph()) == 3
    assert is_regular(path_graph(3)) is None
    with pytest.raises(InputError):
        min_degree(graph_from_edge_list(0, []))


def test_contains_kab_examples():
    k33 = complete_bipartite_graph(3, 3)
    found = contains_kab(k33, 2, 2)
    assert found is not None
    aset, bset = found
    assert all(k33.has_edge(x, y) for x in aset for y in bset)
    assert contains_kab(cycle_graph(5), 2, 2) is None
    assert contains_kab(petersen_graph(), 2, 2) is None
    assert contains_kab(complete_graph(3), 4, 4) is None  # a > n
    with pytest.raises(InputError):
        contains_kab(k33, 3, 2)


def test_contains_kab_matches_oracle(small_corpus):
    for g in small_corpus:
        for a in (1, 2, 3):
            for b in range(a, 4):
                got = contains_kab(g, a, b)
                assert (got is not None) == contains_kab_naive(g, a, b)
                if got is not None:
                    aset, bset = got
                    assert len(set(aset)) == a and len(set(bset)) == b
                    assert not set(aset) & set(bset)
                    assert all(g.has_edge(x, y) for x in aset for y in bset)


def test_gf2_rank():
    assert gf2_rank(Gf2Matrix(rows=(0b001, 0b010, 0b100), width=3)) == 3
    assert gf2_rank(Gf2Matrix(rows=(0b101, 0b110, 0b011), width=3)) == 2
    assert gf2_rank(Gf2Matrix(rows=(), width=4)) == 0
    with pytest.raises(InputError):
        Gf2Matrix(rows=(0b100,), width=2)


def test_gnp_degenerate_and_deterministic():
    assert gnp_sample(5, 0.0, 7).edge_count == 0
    assert gnp_sample(5, 1.0, 7).edge_count == 10
    a = gnp_sample(40, 0.37, 123)
    b = gnp_sample(40, 0.37, 123)
    c = gnp_sample(40, 0.37, 124)
    assert a.adj == b.adj
    assert a.adj != c.adj
    with pytest.raises(InputError):
        gnp_sample(5, 1.5, 0)


def test_gnp_matches_scalar_pair_draws():
    n, p, seed = 12, 0.31, 991
    g = gnp_sample(n, p, seed)
    threshold = round(p * (1 << 53))
    for u in range(n):
        for v in range(u + 1, n):
            expected = pair_draw53(seed, u, v) < threshold
            assert g.has_edge(u, v) == expected


def test_gnp_edge_count_concentration():
    # binomial check: 100 seeds, edge count within 4 sigma of the mean
    n, p = 1000, 0.5
    pairs = n * (n - 1) // 2
    mean = p * pairs
    sigma = math.sqrt(pairs * p * (1 - p))
    for seed in range(100):
        m = gnp_sample(n, p, seed).edge_count
        assert abs(m - mean) < 4 * sigma, (seed, m)


def test_random_regular_basics():
    k4 = random_regular_sample(4, 3, seed=11)
    assert k4.adj == complete_graph(4).adj
    g = random_regular_sample(10, 3, seed=2)
    assert is_regular(g) == 3 and g.edge_count == 15
    a = random_regular_sample(14, 3, seed=9)
    b = random_regular_sample(14, 3, seed=9)
    assert a.adj == b.adj
    assert random_regular_sample(6, 0, seed=1).edge_count == 0
    with pytest.raises(InputError):
        random_regular_sample(5, 3, seed=1)  # nd odd
    with pytest.raises(InputError):
        random_regular_sample(4, 4, seed=1)  # d >= n
    with pytest.raises(ResourceError):
        random_regular_sample(4, 3, seed=1, restart_cap=0)


def test_random_regular_connectivity_rate():
    connected = sum(
        is_connected(random_regular_sample(50, 3, seed=s)) for s in range(100))
    assert connected >= 95


def test_random_regular_dense_degrees():
    g = random_regular_sample(64, 40, seed=17)
    assert is_regular(g) == 40
    check_graph_invariants(g)


def test_edge_list_round_trip(tmp_path):
    g = petersen_graph()
    text = format_edge_list(g)
    assert parse_edge_list(text).adj == g.adj
    path = tmp_path / "pet.el"
    path.write_text(text + "# trailing comment\n")
    assert parse_edge_list(path.read_text()).adj == g.adj


def test_edge_list_parse_errors_cite_lines():
    with pytest.raises(InputError, match="line 3"):
        parse_edge_list("3 2\n0 1\n1 5\n")
    with pytest.raises(InputError, match="line 2"):
        parse_edge_list("2 1\n0\n")
    with pytest.raises(InputError, match="line 4"):
        parse_edge_list("2 1\n# fine\n0 1\n1 0\n")
    with pytest.raises(InputError, match="declared 3"):
        parse_edge_list("4 3\n0 1\n")
    with pytest.raises(InputError, match="line 1"):
        parse_edge_list("# nothing\n")
    with pytest.raises(InputError, match="line 2"):
        parse_edge_list("3 1\n1 1\n")


def test_mask_helpers():
    assert mask_from([0, 2, 5]) == 0b100101
    g = path_graph(3)
    assert g.full_mask == 0b111
    assert list(g.edges()) == [(0, 1), (1, 2)]


def test_splitmix_stream_determinism():
    a = SplitMix64(5)
    b = SplitMix64(5)
    assert [a.next_u64() for _ in range(5)] == [b.next_u64() for _ in range(5)]
    assert hash_combine(1, 2, 3) != hash_combine(1, 3, 2)
    items = list(range(10))
    SplitMix64(3).shuffle(items)
    assert sorted(items) == list(range(10))
