import pytest

from indequiv.factors import f_poly_by_division
from indequiv.graphs import (
    Graph,
    a_graph,
    b_graph,
    cycle,
    d_graph,
    delete_closed_neighborhood,
    delete_vertex,
    e_graph,
    named_graph,
    path,
    union,
)
from indequiv.indpoly import (
    PolyCache,
    independence_number,
    indpoly,
    indpoly_bruteforce,
    indpoly_edge_rule_check,
)
from indequiv.intpoly import IntPoly, ONE, X, cycle_poly, path_poly

from conftest import naive_independent_counts, random_graph


def test_bruteforce_examples():
    assert indpoly_bruteforce(cycle(3)) == IntPoly([1, 3])
    assert indpoly_bruteforce(d_graph(5)) == IntPoly([1, 5, 5])
    assert indpoly_bruteforce(Graph(0)) == ONE


def test_bruteforce_matches_subset_enumeration(rng):
    for _ in range(25):
        g = random_graph(rng, rng.randint(0, 9))
        assert list(indpoly_bruteforce(g).coeffs) == naive_independent_counts(g)


def test_bruteforce_refuses_large():
    with pytest.raises(ValueError):
        indpoly_bruteforce(Graph(31))


def test_engine_examples():
    cache = PolyCache()
    assert indpoly(cycle(9), cache) == IntPoly([1, 9, 27, 30, 9])
    assert indpoly(union(cycle(3), named_graph("Ga")), cache) == cycle_poly(9)
    assert indpoly(union(cycle(3), cycle(5), a_graph(3, 1)), cache) == cycle_poly(15)


CORPUS = [
    cycle(3), cycle(4), cycle(9), cycle(14),
    d_graph(4), d_graph(9), d_graph(13),
    path(1), path(7), path(12),
    a_graph(1, 1), a_graph(2, 1), a_graph(4, 3), a_graph(5, 6),
    b_graph(0, 1, 1), b_graph(2, 3, 1), b_graph(3, 4, 4),
    e_graph(1, 2), e_graph(4, 2), e_graph(2, 8),
    *(named_graph(n) for n in ("Ga", "Gb", "Gc", "Gd", "Ga'", "Gb'", "Gc'")),
    union(cycle(3), d_graph(5), path(4)),
    union(e_graph(1, 1), b_graph(0, 2, 2)),
]


@pytest.mark.parametrize("idx", range(len(CORPUS)))
def test_engine_matches_bruteforce_on_corpus(idx):
    g = CORPUS[idx]
    assert g.n <= 18
    assert indpoly(g) == indpoly_bruteforce(g)


def test_engine_matches_bruteforce_on_random_unions(rng):
    cache = PolyCache()
    pieces = [cycle(5), d_graph(4), path(3), a_graph(1, 2), cycle(3)]
    for _ in range(10):
        parts = rng.sample(pieces, k=rng.randint(1, 3))
        g = union(*parts)
        if g.n <= 18:
            assert indpoly(g, cache) == indpoly_bruteforce(g)


def test_union_multiplies(rng):
    cache = PolyCache()
    for _ in range(10):
        g = random_graph(rng, rng.randint(1, 7))
        h = random_graph(rng, rng.randint(1, 7))
        assert indpoly(union(g, h), cache) == indpoly(g, cache) * indpoly(h, cache)


def test_vertex_deletion_identity(rng):
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 10))
        v = rng.randrange(g.n)
        lhs = indpoly_bruteforce(g)
        rhs = indpoly_bruteforce(delete_vertex(g, v)) + X * indpoly_bruteforce(
            delete_closed_neighborhood(g, v)
        )
        assert lhs == rhs


def test_edge_rule_check():
    cache = PolyCache()
    for e in cycle(5).sorted_edges():
        assert indpoly_edge_rule_check(cycle(5), e, cache)
    d9 = d_graph(9)
    triangle_edge = (0, 1)  # the edge of the triangle not on the tail side
    assert indpoly_edge_rule_check(d9, triangle_edge, cache)
    for e in a_graph(2, 1).sorted_edges():
        assert indpoly_edge_rule_check(a_graph(2, 1), e, cache)


def test_independence_numbers():
    assert independence_number(cycle(9)) == 4
    assert independence_number(Graph(0)) == 0
    assert independence_number(a_graph(2, 1)) == 3 == f_poly_by_division(9).degree


def test_cycle_equals_tailed_triangle_small():
    cache = PolyCache()
    for n in range(4, 21):
        assert indpoly(d_graph(n), cache) == cycle_poly(n)


def test_a_family_path_identity():
    cache = PolyCache()
    for m1 in range(1, 6):
        for m2 in range(1, 6):
            want = path_poly(m1 + m2 + 2) + X * path_poly(m1) * path_poly(m2)
            assert indpoly(a_graph(m1, m2), cache) == want


def test_b_family_closed_form():
    cache = PolyCache()
    for m1 in range(0, 5):
        for m2 in range(1, 6):
            for m3 in range(1, 6):
                first = cycle_poly(m1 + 3) * path_poly(m2) * path_poly(m3)
                # with no stem, removing the fork's closed neighborhood
                # leaves a bare edge of the triangle
                second = cycle_poly(m1 + 2) if m1 >= 1 else path_poly(2)
                rest = X * second * path_poly(m2 - 1) * path_poly(m3 - 1)
                assert indpoly(b_graph(m1, m2, m3), cache) == first + rest


def test_low_coefficients(rng):
    cache = PolyCache()
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 10))
        p = indpoly(g, cache)
        assert p[0] == 1
        assert p[1] == g.n
        assert p[2] == g.n * (g.n - 1) // 2 - g.n_edges


def test_pivot_choice_is_irrelevant(rng):
    def poly_random_pivot(g: Graph, rnd) -> IntPoly:
        if g.n == 0:
            return ONE
        v = rnd.randrange(g.n)
        return poly_random_pivot(delete_vertex(g, v), rnd) + X * poly_random_pivot(
            delete_closed_neighborhood(g, v), rnd
        )

    for _ in range(10):
        g = random_graph(rng, rng.randint(1, 9))
        assert poly_random_pivot(g, rng) == indpoly(g)


def test_cache_round_trip(tmp_path):
    cache = PolyCache()
    indpoly(union(cycle(9), d_graph(6)), cache)
    path_ = tmp_path / "poly.jsonl"
    cache.save(str(path_))
    loaded = PolyCache.load(str(path_))
    assert len(loaded) == len(cache)
    warm = indpoly(cycle(9), loaded)
    assert warm == cycle_poly(9)
    assert loaded.hits > 0


def test_cache_skips_corrupt_lines(tmp_path, caplog):
    cache = PolyCache()
    indpoly(cycle(9), cache)
    p = tmp_path / "cache.jsonl"
    cache.save(str(p))
    good = p.read_text().splitlines()
    # inject garbage: broken json, bad base64, wrong constant term
    lines = [
        "not json at all",
        '{"key": "???", "coeffs": ["1"]}',
        '{"key": "AAAA", "coeffs": ["7", "1"]}',
        *good,
    ]
    p.write_text("\n".join(lines) + "\n")
    loaded = PolyCache.load(str(p))
    assert len(loaded) == len(cache)
    assert indpoly(cycle(9), loaded) == cycle_poly(9)


def test_cache_stats_track_hits():
    cache = PolyCache()
    indpoly(cycle(9), cache)
    before = cache.hits
    indpoly(cycle(9), cache)
    assert cache.hits > before


def decode_component_key(data: bytes, offset: int):
    """Reverse the canonical component encoding: 2-byte vertex count, then
    column-major upper-triangle adjacency bits, zero-padded."""
    n = int.from_bytes(data[offset:offset + 2], "big")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 7) // 8
    raw = data[offset + 2:offset + 2 + nbytes]
    bits = []
    for byte in raw:
        bits.extend((byte >> k) & 1 for k in range(7, -1, -1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges), offset + 2 + nbytes


def test_cache_keys_decode_to_their_graphs():
    # the engine memoizes per connected component; each cache key is a
    # faithful encoding of its component, so reconstructing the graph and
    # recomputing its polynomial by brute force must reproduce the entry
    from indequiv.canon import connected_canonical_form

    cache = PolyCache()
    indpoly(union(cycle(9), d_graph(6)), cache)
    indpoly(a_graph(3, 2), cache)
    checked = 0
    for key, poly in cache._entries.items():
        g, offset = decode_component_key(key, 0)
        assert offset == len(key)
        assert connected_canonical_form(g)[0] == key
        assert indpoly_bruteforce(g) == poly
        checked += 1
    assert checked > 5
