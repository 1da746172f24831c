"""0-forms, 1-forms, the differential d, the two-chain space, closedness.

A 0-form assigns a rational to every vertex, a 1-form to every arrow.  The
two-chain space is spanned by the allowed 2-paths u->v->w (consecutive
arrows); its boundary drops the middle term e_{uw} exactly when u = w, and a
chain belongs to the space when every boundary component over a non-arrow
vertex pair vanishes.  A 1-form is closed when it pairs to zero with every
boundary, equivalently when it satisfies the triangle, square, and
double-edge linear conditions over all pattern embeddings.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .errors import FormError
from .graphs import Arrow, Digraph, DigraphMap, Vertex, enumerate_patterns
from .linalg import Vector, kernel


class ZeroForm:
    """A rational-valued function on vertices, dense over the host."""

    def __init__(self, graph: Digraph, values: Mapping[Vertex, Fraction] | None = None):
        self.graph = graph
        vals = dict(values or {})
        for v in vals:
            if v not in graph.vertex_set:
                raise FormError(f"unknown vertex {v!r}")
        self.values = {v: Fraction(vals.get(v, 0)) for v in graph.vertices}

    def __call__(self, v: Vertex) -> Fraction:
        return self.values[v]

    def __eq__(self, other):
        return (isinstance(other, ZeroForm) and self.graph == other.graph
                and self.values == other.values)

    def __repr__(self):
        return f"ZeroForm({self.values!r})"


class OneForm:
    """A rational-valued function on arrows, dense over the host."""

    def __init__(self, graph: Digraph, values: Mapping[Arrow, Fraction] | None = None):
        self.graph = graph
        vals = dict(values or {})
        for a in vals:
            if a not in graph.arrow_set:
                raise FormError(f"unknown arrow {a!r}")
        self.values = {a: Fraction(vals.get(a, 0)) for a in graph.arrows}

    @classmethod
    def basis(cls, graph: Digraph, arrow: Arrow) -> "OneForm":
        if arrow not in graph.arrow_set:
            raise FormError(f"unknown arrow {arrow!r}")
        return cls(graph, {arrow: Fraction(1)})

    @classmethod
    def from_vector(cls, graph: Digraph, vec: Sequence[Fraction]) -> "OneForm":
        if len(vec) != len(graph.arrows):
            raise FormError("vector length differs from arrow count")
        return cls(graph, dict(zip(graph.arrows, vec)))

    def vector(self) -> Vector:
        return tuple(self.values[a] for a in self.graph.arrows)

    def __call__(self, arrow: Arrow) -> Fraction:
        return self.values[arrow]

    def __add__(self, other: "OneForm") -> "OneForm":
        if self.graph != other.graph:
            raise FormError("forms live on different digraphs")
        return OneForm(self.graph,
                       {a: self.values[a] + other.values[a] for a in self.graph.arrows})

    def __sub__(self, other: "OneForm") -> "OneForm":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "OneForm":
        c = Fraction(scalar)
        return OneForm(self.graph, {a: c * v for a, v in self.values.items()})

    def __neg__(self) -> "OneForm":
        return (-1) * self

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values.values())

    def __eq__(self, other):
        return (isinstance(other, OneForm) and self.graph == other.graph
                and self.values == other.values)

    def __repr__(self):
        nz = {a: str(v) for a, v in self.values.items() if v != 0}
        return f"OneForm({nz!r})"


TwoPath = tuple  # (u, v, w) with (u,v) and (v,w) arrows


class TwoChain:
    """A finitely supported rational combination of allowed 2-paths."""

    def __init__(self, graph: Digraph, coeffs: Mapping[TwoPath, Fraction] | None = None):
        self.graph = graph
        allowed = set(allowed_two_paths(graph))
        self.coeffs: dict[TwoPath, Fraction] = {}
        for p, c in (coeffs or {}).items():
            key = tuple(p)
            if key not in allowed:
                raise FormError(f"{key!r} is not an allowed 2-path")
            c = Fraction(c)
            if c != 0:
                self.coeffs[key] = c

    def boundary(self) -> dict[tuple, Fraction]:
        """Boundary as a combination of vertex pairs; the middle term is
        dropped when the 2-path closes up (u = w)."""
        out: dict[tuple, Fraction] = {}

        def add(pair, c):
            new = out.get(pair, Fraction(0)) + c
            if new == 0:
                out.pop(pair, None)
            else:
                out[pair] = new

        for (u, v, w), c in self.coeffs.items():
            add((v, w), c)
            add((u, v), c)
            if u != w:
                add((u, w), -c)
        return out

    def __eq__(self, other):
        return (isinstance(other, TwoChain) and self.graph == other.graph
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return f"TwoChain({({p: str(c) for p, c in self.coeffs.items()})!r})"


def d0(f: ZeroForm) -> OneForm:
    """df = sum over arrows of (f(head) - f(tail)) e^a."""
    g = f.graph
    return OneForm(g, {a: f(a[1]) - f(a[0]) for a in g.arrows})


def allowed_two_paths(g: Digraph) -> list[TwoPath]:
    """Consecutive arrow pairs u->v->w, in arrow input order."""
    out = []
    for u, v in g.arrows:
        for a in g.out_arrows(v):
            out.append((u, v, a[1]))
    return out


def omega2_basis(g: Digraph) -> list[TwoChain]:
    """Basis of the chains whose boundary is supported on arrows only.

    Variables are the allowed 2-paths; there is one linear condition per
    vertex pair (u, w) with u != w that is not an arrow: the total
    coefficient of e_{uw} in the boundary must vanish.
    """
    paths = allowed_two_paths(g)
    if not paths:
        return []
    index = {p: i for i, p in enumerate(paths)}
    rows_by_pair: dict[tuple, list[Fraction]] = {}
    for (u, v, w), i in index.items():
        if u != w and not g.has_arrow(u, w):
            row = rows_by_pair.setdefault((u, w), [Fraction(0)] * len(paths))
            row[i] += 1
    rows = [rows_by_pair[k] for k in sorted(rows_by_pair, key=lambda p: (str(p[0]), str(p[1])))]
    basis = kernel(rows, len(paths))
    return [TwoChain(g, {p: vec[i] for p, i in index.items() if vec[i] != 0})
            for vec in basis]


def _closed_condition_rows(g: Digraph, method: str) -> list[list[Fraction]]:
    n = len(g.arrows)
    idx = g.arrow_index
    rows: list[list[Fraction]] = []
    if method == "kernel":
        for chain in omega2_basis(g):
            row = [Fraction(0)] * n
            for pair, c in chain.boundary().items():
                row[idx[pair]] = c
            rows.append(row)
    elif method == "patterns":
        for emb in enumerate_patterns(g, "triangle"):
            a1, a2, a3 = emb.arrows
            row = [Fraction(0)] * n
            row[idx[a1]] += 1
            row[idx[a2]] += 1
            row[idx[a3]] -= 1
            rows.append(row)
        for emb in enumerate_patterns(g, "square"):
            a1, a2, a3, a4 = emb.arrows
            row = [Fraction(0)] * n
            row[idx[a1]] += 1
            row[idx[a2]] += 1
            row[idx[a3]] -= 1
            row[idx[a4]] -= 1
            rows.append(row)
        for emb in enumerate_patterns(g, "double-edge"):
            a1, a2 = emb.arrows
            row = [Fraction(0)] * n
            row[idx[a1]] += 1
            row[idx[a2]] += 1
            rows.append(row)
    else:
        raise FormError(f"unknown closedness method {method!r}")
    return rows


@lru_cache(maxsize=None)
def _closed_basis_vectors(g: Digraph, method: str) -> tuple:
    n = len(g.arrows)
    if n == 0:
        return ()
    return tuple(kernel(_closed_condition_rows(g, method), n))


def closed_one_forms(g: Digraph, method: str = "kernel") -> list[OneForm]:
    """Basis of the closed 1-forms, by boundary pairing ("kernel") or by the
    triangle/square/double-edge linear conditions ("patterns")."""
    if method not in ("kernel", "patterns"):
        raise FormError(f"unknown closedness method {method!r}")
    return [OneForm.from_vector(g, vec) for vec in _closed_basis_vectors(g, method)]


@lru_cache(maxsize=None)
def _omega2_boundaries(g: Digraph) -> tuple:
    return tuple(tuple(chain.boundary().items()) for chain in omega2_basis(g))


def is_closed(omega: OneForm) -> bool:
    """True iff omega pairs to zero with every two-chain boundary."""
    for row in _omega2_boundaries(omega.graph):
        total = Fraction(0)
        for pair, c in row:
            total += c * omega(pair)
        if total != 0:
            return False
    return True


def pullback_one_form(f: DigraphMap, omega: OneForm) -> OneForm:
    """(f* omega)(u -> v) = omega(f(u) -> f(v)), zero on collapsed arrows."""
    if omega.graph != f.target:
        raise FormError("form does not live on the map's target digraph")
    vals = {}
    for u, v in f.source.arrows:
        fu, fv = f(u), f(v)
        if fu != fv:
            vals[(u, v)] = omega((fu, fv))
    return OneForm(f.source, vals)
