"""Path maps on a digraph: construction, step calculus, and reduction.

A path map is a vertex sequence v0..vn together with one orientation flag
per step.  A step with equal endpoints is trivial (normalized to forward);
otherwise the flag says whether the step traverses an arrow forwards or
backwards.  Equality is syntactic on (host, vertices, orientations), which
makes reduced paths canonical representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .errors import PathError
from .graphs import BACKWARD, FORWARD, Arrow, Digraph, DigraphMap, Vertex, normalize_orientation


@dataclass(frozen=True)
class ForwardArrow:
    arrow: Arrow


@dataclass(frozen=True)
class InverseArrow:
    arrow: Arrow


@dataclass(frozen=True)
class Trivial:
    vertex: Vertex


Step = Union[ForwardArrow, InverseArrow, Trivial]


class PathMap:
    """A digraph map from a line digraph, stored as its vertex sequence."""

    def __init__(self, graph: Digraph, vertices: tuple, orientations: tuple):
        self.graph = graph
        self.vertices = vertices
        self.orientations = orientations

    @property
    def length(self) -> int:
        return len(self.orientations)

    @property
    def start(self) -> Vertex:
        return self.vertices[0]

    @property
    def end(self) -> Vertex:
        return self.vertices[-1]

    @property
    def is_loop(self) -> bool:
        return self.start == self.end

    def __eq__(self, other):
        return (
            isinstance(other, PathMap)
            and self.graph == other.graph
            and self.vertices == other.vertices
            and self.orientations == other.orientations
        )

    def __hash__(self):
        return hash((self.vertices, self.orientations))

    def __repr__(self):
        walk = "".join(
            f"{v!r}" + (f" -{o}- " if o else "")
            for v, o in zip(self.vertices, self.orientations + ("",))
        )
        return f"PathMap({walk})"


class LoopMap(PathMap):
    """A path map whose endpoints coincide."""

    def __init__(self, graph, vertices, orientations):
        super().__init__(graph, vertices, orientations)
        if vertices[0] != vertices[-1]:
            raise PathError("loop endpoints differ")

    @property
    def base(self) -> Vertex:
        return self.vertices[0]


def _build(graph: Digraph, vertices: tuple, orientations: tuple) -> PathMap:
    cls = LoopMap if vertices[0] == vertices[-1] else PathMap
    return cls(graph, vertices, orientations)


def make_path(graph: Digraph, vertices: Sequence[Vertex],
              orientations: Sequence[str]) -> PathMap:
    """Validate and normalize a path map; trivial steps become forward.

    Raises PathError naming the first offending step index.
    """
    vs = tuple(vertices)
    if not vs:
        raise PathError("a path needs at least one vertex")
    os = tuple(normalize_orientation(o) for o in orientations)
    if len(os) != len(vs) - 1:
        raise PathError(
            f"expected {len(vs) - 1} orientation flags, got {len(os)}")
    for v in vs:
        if v not in graph.vertex_set:
            raise PathError(f"unknown vertex {v!r}")
    norm = []
    for i, o in enumerate(os):
        u, w = vs[i], vs[i + 1]
        if u == w:
            norm.append(FORWARD)
        elif o == FORWARD:
            if not graph.has_arrow(u, w):
                raise PathError(
                    f"step {i + 1}: ({u!r}, {w!r}) is not an arrow "
                    "and the step is oriented forward")
            norm.append(FORWARD)
        else:
            if not graph.has_arrow(w, u):
                raise PathError(
                    f"step {i + 1}: ({w!r}, {u!r}) is not an arrow "
                    "and the step is oriented backward")
            norm.append(BACKWARD)
    return _build(graph, vs, tuple(norm))


def trivial_path(graph: Digraph, v: Vertex) -> PathMap:
    return make_path(graph, (v,), ())


def steps(path: PathMap) -> tuple[Step, ...]:
    """Classify each step as a forward arrow, an inverse arrow, or trivial."""
    out: list[Step] = []
    for i, o in enumerate(path.orientations):
        u, w = path.vertices[i], path.vertices[i + 1]
        if u == w:
            out.append(Trivial(u))
        elif o == FORWARD:
            out.append(ForwardArrow((u, w)))
        else:
            out.append(InverseArrow((w, u)))
    return tuple(out)


def _steps_to_path(graph: Digraph, start: Vertex, step_seq: Sequence[Step]) -> PathMap:
    vs = [start]
    os = []
    for s in step_seq:
        if isinstance(s, Trivial):
            vs.append(vs[-1])
            os.append(FORWARD)
        elif isinstance(s, ForwardArrow):
            vs.append(s.arrow[1])
            os.append(FORWARD)
        else:
            vs.append(s.arrow[0])
            os.append(BACKWARD)
    return _build(graph, tuple(vs), tuple(os))


def concat(a: PathMap, b: PathMap) -> PathMap:
    """Concatenation a then b.  Mismatched hosts or endpoints are errors."""
    if a.graph != b.graph:
        raise PathError("cannot concatenate paths on different digraphs")
    if a.end != b.start:
        raise PathError(
            f"cannot concatenate: first path ends at {a.end!r}, "
            f"second starts at {b.start!r}")
    return _build(a.graph, a.vertices + b.vertices[1:],
                  a.orientations + b.orientations)


def inverse(a: PathMap) -> PathMap:
    """Reversed vertex sequence with orientation flags reversed and flipped."""
    flipped = tuple(
        FORWARD if a.vertices[i] == a.vertices[i + 1]
        else (BACKWARD if o == FORWARD else FORWARD)
        for i, o in enumerate(a.orientations)
    )
    return _build(a.graph, a.vertices[::-1], flipped[::-1])


def cut(a: PathMap, i: int, j: int) -> PathMap:
    """The sub-path on step interval [i, j] (vertex indices, 0 <= i <= j <= n)."""
    if not (0 <= i <= j <= a.length):
        raise PathError(f"cut interval [{i}, {j}] out of range for length {a.length}")
    return _build(a.graph, a.vertices[i:j + 1], a.orientations[i:j])


def insert_trivial(a: PathMap, i: int) -> PathMap:
    """Splice a trivial step at vertex position i (0 <= i <= n)."""
    if not (0 <= i <= a.length):
        raise PathError(f"insertion position {i} out of range for length {a.length}")
    vs = a.vertices[:i + 1] + (a.vertices[i],) + a.vertices[i + 1:]
    os = a.orientations[:i] + (FORWARD,) + a.orientations[i:]
    return _build(a.graph, vs, os)


def _cancels(s: Step, t: Step) -> bool:
    if isinstance(s, ForwardArrow) and isinstance(t, InverseArrow):
        return s.arrow == t.arrow
    if isinstance(s, InverseArrow) and isinstance(t, ForwardArrow):
        return s.arrow == t.arrow
    return False


def reduce(a: PathMap) -> PathMap:
    """Remove trivial steps and cancel adjacent inverse step pairs, leftmost
    innermost, until no redex remains.  The result is the canonical reduced
    representative of a's elementary equivalence class."""
    stack: list[Step] = []
    for s in steps(a):
        if isinstance(s, Trivial):
            continue
        if stack and _cancels(stack[-1], s):
            stack.pop()
        else:
            stack.append(s)
    return _steps_to_path(a.graph, a.start, stack)


def is_reduced(a: PathMap) -> bool:
    ss = steps(a)
    if any(isinstance(s, Trivial) for s in ss):
        return False
    return not any(_cancels(ss[i], ss[i + 1]) for i in range(len(ss) - 1))


def elem_equivalent(a: PathMap, b: PathMap) -> bool:
    """True iff the reductions coincide verbatim."""
    if a.graph != b.graph:
        raise PathError("paths live on different digraphs")
    return reduce(a) == reduce(b)


def push_forward(f: DigraphMap, a: PathMap) -> PathMap:
    """The image path f o a; steps collapsing to a diagonal become trivial."""
    if a.graph != f.source:
        raise PathError("path does not live on the map's source digraph")
    vs = tuple(f(v) for v in a.vertices)
    os = tuple(
        FORWARD if vs[i] == vs[i + 1] else o
        for i, o in enumerate(a.orientations)
    )
    return make_path(f.target, vs, os)


def _extensions(g: Digraph, v: Vertex) -> list[tuple[Vertex, str]]:
    out = [(a[1], FORWARD) for a in g.out_arrows(v)]
    out += [(a[0], BACKWARD) for a in g.in_arrows(v)]
    return out


def enumerate_paths(g: Digraph, base: Vertex, max_length: int,
                    loops_only: bool = False) -> Iterator[PathMap]:
    """All path maps from base with non-trivial steps, by increasing length.

    Within one length, paths come in step-choice order: forward arrows in
    input order, then backward arrows in input order.  With loops_only only
    paths returning to base are yielded (the trivial loop first).
    """
    if base not in g.vertex_set:
        raise PathError(f"unknown base vertex {base!r}")
    frontier: list[tuple[tuple, tuple]] = [((base,), ())]
    for length in range(max_length + 1):
        next_frontier = []
        for vs, os in frontier:
            if not loops_only or vs[0] == vs[-1]:
                yield _build(g, vs, os)
            if length < max_length:
                for w, o in _extensions(g, vs[-1]):
                    next_frontier.append((vs + (w,), os + (o,)))
        frontier = next_frontier
