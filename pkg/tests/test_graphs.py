"""Digraph construction, pattern detection, products, and maps."""

import pytest

from conftest import random_digraph

from pathint import (BasedDigraph, Digraph, DigraphMap, GraphError, MapError,
                     box_product, compose_maps, cylinder, directed_cycle,
                     double_edge, enumerate_patterns, identity_map,
                     is_digraph_map, line_digraph, standard_square,
                     standard_triangle, validate_digraph, wedge_of_cycles)


def test_rejects_self_loops():
    with pytest.raises(GraphError):
        Digraph(["a", "b"], [("a", "a")])


def test_rejects_duplicate_arrows():
    with pytest.raises(GraphError):
        Digraph(["a", "b"], [("a", "b"), ("a", "b")])


def test_rejects_unknown_endpoints():
    with pytest.raises(GraphError):
        Digraph(["a", "b"], [("a", "c")])


def test_rejects_duplicate_vertices():
    with pytest.raises(GraphError):
        Digraph(["a", "a"], [])


def test_based_digraph_requires_member_base():
    with pytest.raises(GraphError):
        BasedDigraph(["a", "b"], [("a", "b")], "z")


def test_validate_digraph_returns_based_when_base_given():
    g = validate_digraph(["a", "b"], [("a", "b")], "a")
    assert isinstance(g, BasedDigraph) and g.base == "a"
    plain = validate_digraph(["a", "b"], [("a", "b")])
    assert not isinstance(plain, BasedDigraph)


def test_triangle_detection():
    T = standard_triangle()
    assert T.is_triangle_set("v0", "v1", "v2")
    assert T.is_triangle_set("v2", "v0", "v1")  # unordered
    assert not T.is_triangle_set("v0", "v1", "v1")
    embeddings = enumerate_patterns(T, "triangle")
    assert len(embeddings) == 1
    assert all(e.validate(T) for e in embeddings)


def test_square_detection():
    S = standard_square()
    assert S.is_square_tuple(("v0", "v1", "v2", "v3"))
    assert S.is_square_tuple(("v1", "v2", "v3", "v0"))  # cyclic shift
    assert not S.is_square_tuple(("v0", "v1", "v3", "v2"))
    assert len(enumerate_patterns(S, "square")) == 1
    assert len(enumerate_patterns(S, "triangle")) == 0


def test_plain_fixtures_have_no_patterns():
    for g in (double_edge(), directed_cycle(4), wedge_of_cycles()):
        assert not enumerate_patterns(g, "triangle")
        assert not enumerate_patterns(g, "square")


def test_directed_cycle_needs_three_vertices():
    with pytest.raises(ValueError):
        directed_cycle(2)


def test_line_digraph_shape():
    I3 = line_digraph(["f", "b", "f"])
    assert len(I3.vertices) == 4
    assert I3.has_arrow(0, 1) and I3.has_arrow(2, 1) and I3.has_arrow(2, 3)
    assert I3.base == 0


def test_box_product_counts(rng):
    g = random_digraph(rng, max_vertices=4)
    h = random_digraph(rng, max_vertices=4)
    prod = box_product(g, h)
    assert len(prod.vertices) == len(g.vertices) * len(h.vertices)
    assert len(prod.arrows) == (len(g.arrows) * len(h.vertices)
                                + len(g.vertices) * len(h.arrows))


def test_cylinder_contains_both_ends():
    T = standard_triangle()
    point = Digraph(["p"], [])
    collapse = DigraphMap(T, point, {v: "p" for v in T.vertices})
    cyl = cylinder(collapse)
    assert len(cyl.vertices) == len(T.vertices) + 1
    # every source vertex connects to its image through the cylinder arrow
    for v in T.vertices:
        assert cyl.has_arrow(("src", v), ("dst", "p"))


def test_digraph_map_validation():
    T = standard_triangle()
    D = double_edge()
    with pytest.raises(MapError):
        DigraphMap(T, D, {"v0": "v0", "v1": "v1"})  # not total
    ok = {"v0": "v0", "v1": "v1", "v2": "v0"}
    assert is_digraph_map(ok, T, D)
    f = DigraphMap(T, D, ok)
    assert f("v2") == "v0"


def test_compose_maps_is_g_after_f():
    T = standard_triangle()
    f = identity_map(T)
    g = DigraphMap(T, T, {"v0": "v0", "v1": "v1", "v2": "v2"})
    assert compose_maps(g, f) == g
    with pytest.raises(MapError):
        compose_maps(DigraphMap(double_edge(), double_edge(),
                                {"v0": "v0", "v1": "v1"}), f)


def test_pattern_embeddings_revalidate(rng):
    for _ in range(10):
        g = random_digraph(rng)
        for kind in ("triangle", "square"):
            for e in enumerate_patterns(g, kind):
                assert e.validate(g)


def test_graph_equality_and_hash():
    a = standard_triangle()
    b = standard_triangle()
    assert a == b and hash(a) == hash(b)
    assert a != double_edge()
