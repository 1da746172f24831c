"""Digraphs, digraph maps, and the standard constructions on them.

A digraph is a finite set of vertices plus a set of arrows (ordered vertex
pairs).  Self-loops are forbidden, duplicate arrows are forbidden, and every
enumeration below iterates in input order so results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import GraphError, MapError

Vertex = Hashable
Arrow = tuple  # (source, target)

FORWARD = "f"
BACKWARD = "b"

_ORIENT_ALIASES = {
    "f": FORWARD,
    "forward": FORWARD,
    "b": BACKWARD,
    "backward": BACKWARD,
}


def normalize_orientation(flag: str) -> str:
    try:
        return _ORIENT_ALIASES[flag]
    except (KeyError, TypeError):
        raise GraphError(f"unknown orientation flag {flag!r}") from None


class Digraph:
    """Immutable digraph with ordered vertex and arrow lists."""

    def __init__(self, vertices: Iterable[Vertex], arrows: Iterable[Sequence[Vertex]]):
        self.vertices: tuple[Vertex, ...] = tuple(vertices)
        self.vertex_set = frozenset(self.vertices)
        if len(self.vertex_set) != len(self.vertices):
            raise GraphError("duplicate vertex in vertex list")
        arr: list[Arrow] = []
        seen: set[Arrow] = set()
        for raw in arrows:
            a = (raw[0], raw[1])
            if a[0] == a[1]:
                raise GraphError(f"self-loop at vertex {a[0]!r}")
            if a in seen:
                raise GraphError(f"duplicate arrow {a!r}")
            for end in a:
                if end not in self.vertex_set:
                    raise GraphError(f"unknown endpoint {end!r} in arrow {a!r}")
            seen.add(a)
            arr.append(a)
        self.arrows: tuple[Arrow, ...] = tuple(arr)
        self.arrow_set = frozenset(self.arrows)
        self.arrow_index: dict[Arrow, int] = {a: i for i, a in enumerate(self.arrows)}
        self._out: dict[Vertex, tuple[Arrow, ...]] = {v: () for v in self.vertices}
        self._in: dict[Vertex, tuple[Arrow, ...]] = {v: () for v in self.vertices}
        for a in self.arrows:
            self._out[a[0]] += (a,)
            self._in[a[1]] += (a,)
        # pattern caches, built on demand
        self._triangle_sets: frozenset[frozenset] | None = None
        self._square_role_tuples: frozenset[tuple] | None = None

    def has_arrow(self, u: Vertex, v: Vertex) -> bool:
        return (u, v) in self.arrow_set

    def out_arrows(self, v: Vertex) -> tuple[Arrow, ...]:
        return self._out[v]

    def in_arrows(self, v: Vertex) -> tuple[Arrow, ...]:
        return self._in[v]

    def __eq__(self, other):
        return (
            isinstance(other, Digraph)
            and self.vertices == other.vertices
            and self.arrows == other.arrows
        )

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def __repr__(self):
        return f"Digraph({len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    # -- pattern predicates ------------------------------------------------

    def triangle_sets(self) -> frozenset[frozenset]:
        """Vertex triples {x,y,z} admitting an ordering with x->y, y->z, x->z."""
        if self._triangle_sets is None:
            found = set()
            for x, y in self.arrows:
                for a in self.out_arrows(y):
                    z = a[1]
                    if z != x and self.has_arrow(x, z):
                        found.add(frozenset((x, y, z)))
            self._triangle_sets = frozenset(found)
        return self._triangle_sets

    def square_role_tuples(self) -> frozenset[tuple]:
        """Ordered tuples (v0,v1,v2,v3) of distinct vertices realizing the
        standard square arrow pattern v0->v1, v1->v3, v0->v2, v2->v3."""
        if self._square_role_tuples is None:
            found = set()
            for v0, v1 in self.arrows:
                for a in self.out_arrows(v1):
                    v3 = a[1]
                    if v3 == v0:
                        continue
                    for b in self.in_arrows(v3):
                        v2 = b[0]
                        if v2 in (v0, v1, v3):
                            continue
                        if self.has_arrow(v0, v2):
                            found.add((v0, v1, v2, v3))
            self._square_role_tuples = frozenset(found)
        return self._square_role_tuples

    def is_triangle_set(self, x: Vertex, y: Vertex, z: Vertex) -> bool:
        return frozenset((x, y, z)) in self.triangle_sets()

    def is_square_tuple(self, quad: Sequence[Vertex]) -> bool:
        """True if some cyclic shift of the tuple realizes the standard square."""
        t = tuple(quad)
        if len(set(t)) != 4:
            return False
        roles = self.square_role_tuples()
        return any(t[i:] + t[:i] in roles for i in range(4))


class BasedDigraph(Digraph):
    """Digraph with a distinguished base vertex."""

    def __init__(self, vertices, arrows, base: Vertex):
        super().__init__(vertices, arrows)
        if base not in self.vertex_set:
            raise GraphError(f"base vertex {base!r} is not a listed vertex")
        self.base = base

    def __eq__(self, other):
        return (
            isinstance(other, BasedDigraph)
            and super().__eq__(other)
            and self.base == other.base
        )

    def __hash__(self):
        return hash((self.vertices, self.arrows, self.base))

    def __repr__(self):
        return (
            f"BasedDigraph({len(self.vertices)} vertices, "
            f"{len(self.arrows)} arrows, base={self.base!r})"
        )


def validate_digraph(vertices: Iterable[Vertex], arrows: Iterable[Sequence[Vertex]],
                     base: Vertex | None = None) -> Digraph:
    """Build a digraph from raw lists, raising GraphError with a distinct
    diagnostic for self-loops, duplicate arrows, and unknown endpoints."""
    if base is None:
        return Digraph(vertices, arrows)
    return BasedDigraph(vertices, arrows, base)


def is_digraph_map(mapping: Mapping[Vertex, Vertex], g: Digraph, h: Digraph) -> bool:
    """True iff every g-arrow maps to an h-arrow or to a diagonal pair."""
    for v in g.vertices:
        if v not in mapping or mapping[v] not in h.vertex_set:
            return False
    for u, v in g.arrows:
        fu, fv = mapping[u], mapping[v]
        if fu != fv and not h.has_arrow(fu, fv):
            return False
    return True


class DigraphMap:
    """A validated digraph map f: source -> target."""

    def __init__(self, source: Digraph, target: Digraph, mapping: Mapping[Vertex, Vertex]):
        self.source = source
        self.target = target
        self.mapping = dict(mapping)
        for v in source.vertices:
            if v not in self.mapping:
                raise MapError(f"mapping is not total: vertex {v!r} has no image")
            if self.mapping[v] not in target.vertex_set:
                raise MapError(f"image {self.mapping[v]!r} of {v!r} is not a target vertex")
        for u, v in source.arrows:
            fu, fv = self.mapping[u], self.mapping[v]
            if fu != fv and not target.has_arrow(fu, fv):
                raise MapError(
                    f"arrow {(u, v)!r} maps to {(fu, fv)!r}, "
                    "which is neither an arrow nor diagonal"
                )

    def __call__(self, v: Vertex) -> Vertex:
        return self.mapping[v]

    def __eq__(self, other):
        return (
            isinstance(other, DigraphMap)
            and self.source == other.source
            and self.target == other.target
            and self.mapping == other.mapping
        )

    def __repr__(self):
        return f"DigraphMap({self.source!r} -> {self.target!r})"


def identity_map(g: Digraph) -> DigraphMap:
    return DigraphMap(g, g, {v: v for v in g.vertices})


def compose_maps(g: DigraphMap, f: DigraphMap) -> DigraphMap:
    """The composite g after f (first apply f, then g)."""
    if f.target != g.source:
        raise MapError("maps are not composable: target of f differs from source of g")
    return DigraphMap(f.source, g.target, {v: g(f(v)) for v in f.source.vertices})


def line_digraph(orientations: Sequence[str]) -> BasedDigraph:
    """The line digraph I_n: vertices 0..n, one arrow per step as oriented,
    based at 0.  The empty sequence gives the single-vertex I_0."""
    flags = [normalize_orientation(o) for o in orientations]
    n = len(flags)
    vertices = list(range(n + 1))
    arrows = []
    for i, o in enumerate(flags):
        if o == FORWARD:
            arrows.append((i, i + 1))
        else:
            arrows.append((i + 1, i))
    return BasedDigraph(vertices, arrows, 0)


def box_product(g: Digraph, h: Digraph) -> Digraph:
    """The box product: vertices are pairs, an arrow moves exactly one
    coordinate along an arrow of its factor."""
    vertices = [(x, y) for x in g.vertices for y in h.vertices]
    arrows = []
    for x, xp in g.arrows:
        for y in h.vertices:
            arrows.append(((x, y), (xp, y)))
    for x in g.vertices:
        for y, yp in h.arrows:
            arrows.append(((x, y), (x, yp)))
    return Digraph(vertices, arrows)


def cylinder(f: DigraphMap, direction: str = "direct") -> Digraph:
    """Mapping cylinder of f: disjoint union of source and target plus one
    rung per source vertex, v -> f(v) for direction "direct" and
    f(v) -> v for "inverse"."""
    if direction not in ("direct", "inverse"):
        raise GraphError(f"unknown cylinder direction {direction!r}")
    src, dst = f.source, f.target
    vertices = [("src", v) for v in src.vertices] + [("dst", w) for w in dst.vertices]
    arrows = [(("src", u), ("src", v)) for u, v in src.arrows]
    arrows += [(("dst", u), ("dst", v)) for u, v in dst.arrows]
    for v in src.vertices:
        rung_tail, rung_head = ("src", v), ("dst", f(v))
        if direction == "inverse":
            rung_tail, rung_head = rung_head, rung_tail
        arrows.append((rung_tail, rung_head))
    return Digraph(vertices, arrows)


PATTERN_KINDS = ("triangle", "square", "double-edge")


@dataclass(frozen=True)
class PatternEmbedding:
    """An embedded standard pattern.

    kind      one of PATTERN_KINDS
    vertices  the host vertices in role order (v0, v1, v2[, v3])
    arrows    the bound arrows in role order (a1, a2, a3[, a4])
    """

    kind: str
    vertices: tuple
    arrows: tuple

    def validate(self, g: Digraph) -> bool:
        """Re-check the standard-pattern incidence table in the host."""
        if any(a not in g.arrow_set for a in self.arrows):
            return False
        v = self.vertices
        if self.kind == "triangle":
            return len(set(v)) == 3 and self.arrows == (
                (v[0], v[1]), (v[1], v[2]), (v[0], v[2]))
        if self.kind == "square":
            return len(set(v)) == 4 and self.arrows == (
                (v[0], v[1]), (v[1], v[3]), (v[0], v[2]), (v[2], v[3]))
        if self.kind == "double-edge":
            return len(set(v)) == 2 and self.arrows == (
                (v[0], v[1]), (v[1], v[0]))
        return False


def enumerate_patterns(g: Digraph, kind: str) -> list[PatternEmbedding]:
    """All injective embeddings of the standard pattern as a subdigraph,
    deduplicated by bound arrow set, in deterministic input order."""
    if kind not in PATTERN_KINDS:
        raise GraphError(f"unknown pattern kind {kind!r}")
    out: list[PatternEmbedding] = []
    seen: set[frozenset] = set()
    if kind == "triangle":
        for v0, v1 in g.arrows:
            for a in g.out_arrows(v1):
                v2 = a[1]
                if v2 == v0 or not g.has_arrow(v0, v2):
                    continue
                emb = PatternEmbedding(
                    "triangle", (v0, v1, v2),
                    ((v0, v1), (v1, v2), (v0, v2)))
                key = frozenset(emb.arrows)
                if key not in seen:
                    seen.add(key)
                    out.append(emb)
    elif kind == "square":
        for v0, v1 in g.arrows:
            for a in g.out_arrows(v1):
                v3 = a[1]
                if v3 == v0:
                    continue
                for b in g.in_arrows(v3):
                    v2 = b[0]
                    if v2 in (v0, v1, v3) or not g.has_arrow(v0, v2):
                        continue
                    emb = PatternEmbedding(
                        "square", (v0, v1, v2, v3),
                        ((v0, v1), (v1, v3), (v0, v2), (v2, v3)))
                    key = frozenset(emb.arrows)
                    if key not in seen:
                        seen.add(key)
                        out.append(emb)
    else:
        for v0, v1 in g.arrows:
            if g.has_arrow(v1, v0):
                emb = PatternEmbedding(
                    "double-edge", (v0, v1), ((v0, v1), (v1, v0)))
                key = frozenset(emb.arrows)
                if key not in seen:
                    seen.add(key)
                    out.append(emb)
    return out
