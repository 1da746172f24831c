"""Small standard digraphs used throughout the tests and examples."""

from __future__ import annotations

from .graphs import BasedDigraph


def standard_triangle() -> BasedDigraph:
    """Arrows a1: v0->v1, a2: v1->v2, a3: v0->v2, based at v0."""
    return BasedDigraph(
        ["v0", "v1", "v2"],
        [("v0", "v1"), ("v1", "v2"), ("v0", "v2")],
        "v0")


def standard_square() -> BasedDigraph:
    """Arrows a1: v0->v1, a2: v1->v3, a3: v0->v2, a4: v2->v3, based at v0."""
    return BasedDigraph(
        ["v0", "v1", "v2", "v3"],
        [("v0", "v1"), ("v1", "v3"), ("v0", "v2"), ("v2", "v3")],
        "v0")


def double_edge() -> BasedDigraph:
    """Arrows a1: v0->v1 and a2: v1->v0, based at v0."""
    return BasedDigraph(["v0", "v1"], [("v0", "v1"), ("v1", "v0")], "v0")


def directed_cycle(n: int = 4) -> BasedDigraph:
    """The directed n-cycle v0 -> v1 -> ... -> v0, based at v0."""
    if n < 3:
        raise ValueError("a directed cycle needs at least 3 vertices")
    vertices = [f"v{i}" for i in range(n)]
    arrows = [(f"v{i}", f"v{(i + 1) % n}") for i in range(n)]
    return BasedDigraph(vertices, arrows, "v0")


def wedge_of_cycles() -> BasedDigraph:
    """Two directed 4-cycles glued at v0: the first through v1, v2, v3 and
    the second through v4, v5, v6."""
    vertices = [f"v{i}" for i in range(7)]
    arrows = [
        ("v0", "v1"), ("v1", "v2"), ("v2", "v3"), ("v3", "v0"),
        ("v0", "v4"), ("v4", "v5"), ("v5", "v6"), ("v6", "v0"),
    ]
    return BasedDigraph(vertices, arrows, "v0")
