import pytest

from indequiv.canon import is_isomorphic
from indequiv.graph6 import emit_graph6
from indequiv.graphs import GraphSpecError, a_graph, cycle, named_graph, union
from indequiv.gspec import parse_spec


def test_compact_forms():
    assert is_isomorphic(parse_spec("C9").build(), cycle(9))
    assert parse_spec("P5").build().n_edges == 4
    assert parse_spec("D7").build().n == 7
    assert is_isomorphic(parse_spec("A(2,1)").build(), a_graph(2, 1))
    assert parse_spec("B(0,1,1)").build().n == 6
    assert parse_spec("E(1,2)").build().n == 6
    assert parse_spec("K1_3").build().n_edges == 3
    assert parse_spec("K4-e").build().n_edges == 5
    assert is_isomorphic(parse_spec("Gd").build(), named_graph("Gd"))
    assert is_isomorphic(parse_spec("Ga'").build(), named_graph("Ga'"))


def test_unions():
    g = parse_spec("C3 + A(2,1)").build()
    assert is_isomorphic(g, union(cycle(3), a_graph(2, 1)))
    assert parse_spec("C3+C5+A(3,1)").build().n == 15
    assert parse_spec("C3 + A(2,1)").describe() == "C3 + A(2,1)"


def test_long_forms():
    assert is_isomorphic(parse_spec("Cycle(9)").build(), cycle(9))
    assert parse_spec("Dn(5)").build().n == 5
    assert parse_spec("Path(4)").build().n == 4
    assert is_isomorphic(parse_spec("Named(Gd)").build(), named_graph("Gd"))
    assert parse_spec("Union(Cycle(3), A(2,1))").build().n == 9
    assert parse_spec("Union(Cycle(3), Cycle(5), A(3,1))").build().n == 15


def test_graph6_specs():
    s = emit_graph6(cycle(9))
    assert is_isomorphic(parse_spec(f"g6:{s}").build(), cycle(9))
    assert is_isomorphic(parse_spec(f"Graph6({s})").build(), cycle(9))


def test_bounds_named_in_errors():
    with pytest.raises(GraphSpecError, match="n >= 4"):
        parse_spec("D3")
    with pytest.raises(GraphSpecError, match="m1, m2 >= 1"):
        parse_spec("A(0,2)")
    with pytest.raises(GraphSpecError, match="n >= 3"):
        parse_spec("C2")
    with pytest.raises(GraphSpecError, match="m2, m3 >= 1"):
        parse_spec("B(1,0,1)")


def test_parse_errors():
    for bad in ("", "garbage", "Q7", "A(1)", "A(1,2,3)", "A(x,y)", "Union(",
                "C3 + + C5"):
        with pytest.raises(GraphSpecError):
            parse_spec(bad)


def test_describe():
    assert parse_spec("C9").describe() == "C9"
    assert parse_spec("B(0,1,1)").describe() == "B(0,1,1)"
    assert parse_spec("Gd").describe() == "Gd"
