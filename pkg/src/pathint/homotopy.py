"""Combinatorial homotopy of loops and the homotopy-invariant subalgebra.

The five local moves on vertex sequences (triangle contraction, square
replacement, square contraction, backtrack removal, trivial-step removal)
and their inverses generate the homotopy relation on path maps.  This module
enumerates one-move neighbors with replayable certificates, searches for
bounded homotopies, checks invariance of integration functionals against
move pairs, computes the degree-bounded homotopy-invariant candidate space,
and transports loop functionals along a connecting path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .algebra import (AlgebraElement, BasedFunctional, from_forms,
                      word_element, zero)
from .errors import MapError, PathError
from .forms import OneForm, closed_one_forms, is_closed
from .graphs import Arrow, Digraph, DigraphMap, Vertex, enumerate_patterns
from .integrals import Word, all_words, pair, word_pairing, word_pairings_all
from .linalg import complement_basis, kernel
from .paths import (FORWARD, BACKWARD, ForwardArrow, InverseArrow, PathMap,
                    enumerate_paths, inverse, make_path, steps)

MOVE_KINDS = ("triangle-contract", "square-replace", "square-contract",
              "backtrack", "trivial-drop")

Window = tuple[tuple, tuple]  # (vertices, orientations) of a path segment


@dataclass(frozen=True)
class Move:
    """One local rewrite of a path: the window starting at vertex index
    `position` is removed and replaced; both windows share endpoints."""
    kind: str
    direction: str  # "apply" | "unapply"
    position: int
    before: Window
    after: Window


def invert_move(move: Move) -> Move:
    flipped = "unapply" if move.direction == "apply" else "apply"
    return Move(move.kind, flipped, move.position, move.after, move.before)


def apply_move(path: PathMap, move: Move) -> PathMap:
    """Replay a move on a path, checking the recorded window verbatim."""
    bv, bo = move.before
    av, ao = move.after
    p = move.position
    k = len(bv)
    if p < 0 or p + k > len(path.vertices):
        raise PathError(f"move window out of range at position {p}")
    if path.vertices[p:p + k] != bv or path.orientations[p:p + k - 1] != bo:
        raise PathError("move window does not match the path")
    vertices = path.vertices[:p] + av + path.vertices[p + k:]
    orientations = path.orientations[:p] + ao + path.orientations[p + k - 1:]
    return make_path(path.graph, vertices, orientations)


@dataclass(frozen=True)
class MoveCertificate:
    """A replayable chain of moves connecting two loops."""
    start: PathMap
    moves: tuple[Move, ...]
    end: PathMap

    def replay(self) -> list[PathMap]:
        """All intermediate paths, including both endpoints; raises if any
        move fails to apply or the chain does not land on `end`."""
        states = [self.start]
        for move in self.moves:
            states.append(apply_move(states[-1], move))
        if states[-1] != self.end:
            raise PathError("certificate does not land on its end loop")
        return states


def _step_flags(g: Digraph, u: Vertex, v: Vertex) -> list[str]:
    """Valid orientation flags for one step from u to v."""
    if u == v:
        return [FORWARD]
    flags = []
    if g.has_arrow(u, v):
        flags.append(FORWARD)
    if g.has_arrow(v, u):
        flags.append(BACKWARD)
    return flags


def _segment_fills(g: Digraph, vertices: Sequence[Vertex]) -> list[tuple[str, ...]]:
    """All orientation tuples realizing the given vertex sequence."""
    choices = [_step_flags(g, vertices[i], vertices[i + 1])
               for i in range(len(vertices) - 1)]
    if any(not c for c in choices):
        return []
    return [tuple(combo) for combo in product(*choices)]


def move_neighbors(loop: PathMap) -> list[tuple[PathMap, Move]]:
    """All one-move results on the loop, both directions, every position,
    with vertex-sequence moves instantiated over every orientation
    realization the host's arrows allow."""
    g = loop.graph
    V = loop.vertices
    O = loop.orientations
    n = loop.length
    out: list[tuple[PathMap, Move]] = []

    def emit(kind: str, direction: str, p: int, before: Window, after: Window):
        move = Move(kind, direction, p, before, after)
        out.append((apply_move(loop, move), move))

    for p in range(n - 1):
        window = (V[p], V[p + 1], V[p + 2])
        before = (window, O[p:p + 2])
        # (i) triangle contraction: v0 v1 v2 -> v0 v2
        if g.is_triangle_set(*window):
            for fill in _segment_fills(g, (V[p], V[p + 2])):
                emit("triangle-contract", "apply", p, before,
                     ((V[p], V[p + 2]), fill))
        # (ii) square replacement: v0 v1 v3 -> v0 v2 v3
        for v2 in g.vertices:
            if g.is_square_tuple((V[p], V[p + 1], v2, V[p + 2])):
                for fill in _segment_fills(g, (V[p], v2, V[p + 2])):
                    emit("square-replace", "apply", p, before,
                         ((V[p], v2, V[p + 2]), fill))
        # (iv) backtrack removal: v0 v1 v0 -> v0 v0
        if V[p] == V[p + 2]:
            emit("backtrack", "apply", p, before,
                 ((V[p], V[p]), (FORWARD,)))

    # (iii) square contraction: v0 v1 v3 v2 -> v0 v2
    for p in range(n - 2):
        quad = (V[p], V[p + 1], V[p + 3], V[p + 2])
        if g.is_square_tuple(quad):
            before = (V[p:p + 4], O[p:p + 3])
            for fill in _segment_fills(g, (V[p], V[p + 3])):
                emit("square-contract", "apply", p, before,
                     ((V[p], V[p + 3]), fill))

    # (v) trivial-step removal, any position (a stationary step is dropped)
    for p in range(n):
        if V[p] == V[p + 1]:
            emit("trivial-drop", "apply", p,
                 ((V[p], V[p]), (O[p],)), ((V[p],), ()))

    # inverse directions
    for p in range(n):
        # (i) expansion: v0 v2 -> v0 v1 v2 through a triangle
        before = (V[p:p + 2], O[p:p + 1])
        for v1 in g.vertices:
            if g.is_triangle_set(V[p], v1, V[p + 1]):
                for fill in _segment_fills(g, (V[p], v1, V[p + 1])):
                    emit("triangle-contract", "unapply", p, before,
                         ((V[p], v1, V[p + 1]), fill))
        # (iii) expansion: v0 v2 -> v0 v1 v3 v2 through a square
        for v1, v3 in product(g.vertices, repeat=2):
            if g.is_square_tuple((V[p], v1, V[p + 1], v3)):
                for fill in _segment_fills(g, (V[p], v1, v3, V[p + 1])):
                    emit("square-contract", "unapply", p, before,
                         ((V[p], v1, v3, V[p + 1]), fill))
        # (iv) expansion: a trivial step opens into a backtrack v0 v1 v0
        if V[p] == V[p + 1]:
            before = ((V[p], V[p]), (O[p],))
            for v1 in g.vertices:
                if v1 == V[p] or g.has_arrow(V[p], v1) or g.has_arrow(v1, V[p]):
                    for fill in _segment_fills(g, (V[p], v1, V[p])):
                        emit("backtrack", "unapply", p, before,
                             ((V[p], v1, V[p]), fill))

    # (v) expansion: insert a trivial step at any vertex
    for p in range(n + 1):
        emit("trivial-drop", "unapply", p,
             ((V[p],), ()), ((V[p], V[p]), (FORWARD,)))

    return out


@dataclass(frozen=True)
class HomotopyVerdict:
    """Outcome of a bounded homotopy decision."""
    status: str  # "yes" | "certified-no" | "unknown"
    certificate: MoveCertificate | None = None
    invariant: AlgebraElement | None = None
    values: tuple[Fraction, Fraction] | None = None
    length_bound: int = 0
    depth_bound: int = 0


def _theorem_backed_invariants(g: Digraph) -> Iterable[AlgebraElement]:
    """Separating functionals whose homotopy invariance is certified: the
    all-ones 1-form when closed (total winding), then the closed basis, then
    degree-2 arrow words passing the sufficiency test."""
    ones = OneForm(g, {a: Fraction(1) for a in g.arrows})
    if is_closed(ones):
        yield from_forms(g, [ones])
    for omega in closed_one_forms(g):
        yield from_forms(g, [omega])
    for w in all_words(g.arrows, 2, min_degree=2):
        forms = [OneForm.basis(g, a) for a in w]
        if invariant_sufficient(forms, g):
            yield word_element(g, w)


def homotopic_loops(a: PathMap, b: PathMap, length_bound: int = 12,
                    depth_bound: int = 8) -> HomotopyVerdict:
    """Decide move-equivalence of two loops at a common base, within bounds.

    Certified separations are attempted first with theorem-backed invariant
    functionals; otherwise a bidirectional search over the move graph looks
    for a certificate.  Exhausting the bounds yields an honest "unknown".
    """
    if a.graph != b.graph:
        raise PathError("loops live on different digraphs")
    if not (a.is_loop and b.is_loop):
        raise PathError("homotopy search requires loops")
    if a.start != b.start:
        raise PathError(
            f"loops are based at different vertices: {a.start!r} and {b.start!r}")

    if a == b:
        return HomotopyVerdict("yes", certificate=MoveCertificate(a, (), b),
                               length_bound=length_bound,
                               depth_bound=depth_bound)

    for elem in _theorem_backed_invariants(a.graph):
        va, vb = pair(elem, a), pair(elem, b)
        if va != vb:
            return HomotopyVerdict("certified-no", invariant=elem,
                                   values=(va, vb),
                                   length_bound=length_bound,
                                   depth_bound=depth_bound)

    # Bidirectional breadth-first search; parents map each state to the
    # (previous state, move from it) pair on its own side.
    parents_a: dict[PathMap, tuple[PathMap, Move] | None] = {a: None}
    parents_b: dict[PathMap, tuple[PathMap, Move] | None] = {b: None}
    frontier_a, frontier_b = [a], [b]
    depth_used = 0
    meet: PathMap | None = None

    while meet is None and depth_used < depth_bound and frontier_a and frontier_b:
        if len(frontier_a) <= len(frontier_b):
            frontier, parents, other = frontier_a, parents_a, parents_b
            side_a = True
        else:
            frontier, parents, other = frontier_b, parents_b, parents_a
            side_a = False
        new_frontier: list[PathMap] = []
        for state in frontier:
            for nb, move in move_neighbors(state):
                if nb.length > length_bound or nb in parents:
                    continue
                parents[nb] = (state, move)
                new_frontier.append(nb)
                if nb in other:
                    meet = nb
                    break
            if meet is not None:
                break
        if side_a:
            frontier_a = new_frontier
        else:
            frontier_b = new_frontier
        depth_used += 1

    if meet is None:
        return HomotopyVerdict("unknown", length_bound=length_bound,
                               depth_bound=depth_bound)

    moves: list[Move] = []
    node = meet
    while parents_a[node] is not None:
        prev, move = parents_a[node]
        moves.append(move)
        node = prev
    moves.reverse()
    node = meet
    while parents_b[node] is not None:
        prev, move = parents_b[node]
        moves.append(invert_move(move))
        node = prev
    cert = MoveCertificate(a, tuple(moves), b)
    cert.replay()
    return HomotopyVerdict("yes", certificate=cert,
                           length_bound=length_bound, depth_bound=depth_bound)


def one_step_map_homotopy(f: DigraphMap, g: DigraphMap) -> bool:
    """True iff the box product of the source with a single arrow extends
    f, g to a digraph map, i.e. every rung (f(v), g(v)) is an arrow or
    diagonal; both rung directions are tried."""
    if f.source != g.source or f.target != g.target:
        raise MapError("maps must share source and target")
    h = f.target

    def rungs_ok(p: DigraphMap, q: DigraphMap) -> bool:
        return all(p(v) == q(v) or h.has_arrow(p(v), q(v))
                   for v in f.source.vertices)

    return rungs_ok(f, g) or rungs_ok(g, f)


def _pair_values(word: Sequence[OneForm], p: Arrow, q: Arrow) -> list[tuple[Fraction, Fraction]]:
    return [(omega(p), omega(q)) for omega in word]


def _isosceles_on_pair(word: Sequence[OneForm], p: Arrow, q: Arrow) -> bool:
    """Tuple products over {p, q} are permutation-symmetric."""
    r = len(word)
    values = _pair_values(word, p, q)
    if r <= 6:
        # The permutation orbit of a tuple over a two-letter alphabet is the
        # set of tuples with the same letter counts, so full symmetry is
        # equality of the product within each count class.
        reference: dict[int, Fraction] = {}
        for t in product((0, 1), repeat=r):
            prod = Fraction(1)
            for i, pick in enumerate(t):
                prod *= values[i][pick]
            k = sum(t)
            if k not in reference:
                reference[k] = prod
            elif reference[k] != prod:
                return False
        return True
    if any(vp == 0 and vq == 0 for vp, vq in values):
        return True
    return all(values[i][0] * values[j][1] == values[j][0] * values[i][1]
               for i in range(r) for j in range(i + 1, r))


def is_isosceles(word: Sequence[OneForm], g: Digraph) -> bool:
    """Permutation symmetry of the word's products over the composable side
    arrows of every embedded triangle, and over each of the two side pairs
    of every embedded square; brute force for short words, the pairwise
    determinant criterion beyond length 6."""
    for omega in word:
        if omega.graph != g:
            raise PathError("form lives on a different digraph")
    if len(word) <= 1:
        return True
    for emb in enumerate_patterns(g, "triangle"):
        a1, a2, _ = emb.arrows
        if not _isosceles_on_pair(word, a1, a2):
            return False
    for emb in enumerate_patterns(g, "square"):
        a1, a2, a3, a4 = emb.arrows
        if not _isosceles_on_pair(word, a1, a2):
            return False
        if not _isosceles_on_pair(word, a3, a4):
            return False
    return True


def invariant_sufficient(word: Sequence[OneForm], g: Digraph) -> bool:
    """Sufficient condition for homotopy invariance of the word's iterated
    integral: every letter closed and every contiguous subword isosceles."""
    if not all(is_closed(omega) for omega in word):
        return False
    r = len(word)
    for i in range(r):
        for j in range(i + 1, r + 1):
            if not is_isosceles(word[i:j], g):
                return False
    return True


@lru_cache(maxsize=16)
def _move_pair_sample(g: Digraph, base: Vertex,
                      length_bound: int) -> tuple[tuple[PathMap, PathMap, Move], ...]:
    """(loop, neighbor, move) triples for every loop at base up to the
    length bound, in enumeration order."""
    out = []
    for loop in enumerate_paths(g, base, length_bound, loops_only=True):
        for nb, move in move_neighbors(loop):
            out.append((loop, nb, move))
    return tuple(out)


def _net_counts(path: PathMap) -> dict[Arrow, int]:
    counts: dict[Arrow, int] = {}
    for s in steps(path):
        if isinstance(s, ForwardArrow):
            counts[s.arrow] = counts.get(s.arrow, 0) + 1
        elif isinstance(s, InverseArrow):
            counts[s.arrow] = counts.get(s.arrow, 0) - 1
    return counts


@dataclass(frozen=True)
class InvarianceVerdict:
    """Outcome of checking a functional against sampled move pairs."""
    status: str  # "invariant-on-sample" | "counterexample"
    base: Vertex
    length_bound: int
    loop: PathMap | None = None
    neighbor: PathMap | None = None
    move: Move | None = None
    values: tuple[Fraction, Fraction] | None = None


def invariance_verify(elem: AlgebraElement, base: Vertex,
                      length_bound: int = 10) -> InvarianceVerdict:
    """Compare the element's pairing across every loop at base up to the
    length bound and each of its one-move neighbors; the first differing
    pair is a counterexample, otherwise the sample certifies nothing beyond
    itself and says so."""
    g = elem.graph
    degree_one = all(len(w) == 1 for w in elem.coeffs)
    memo: dict = {}

    def value(path: PathMap) -> Fraction:
        got = memo.get(path)
        if got is None:
            if degree_one:
                net = _net_counts(path)
                got = sum((c * net.get(w[0], 0) for w, c in elem.coeffs.items()),
                          Fraction(0))
            else:
                got = pair(elem, path)
            memo[path] = got
        return got

    for loop, nb, move in _move_pair_sample(g, base, length_bound):
        va, vb = value(loop), value(nb)
        if va != vb:
            return InvarianceVerdict("counterexample", base, length_bound,
                                     loop=loop, neighbor=nb, move=move,
                                     values=(va, vb))
    return InvarianceVerdict("invariant-on-sample", base, length_bound)


@dataclass(frozen=True)
class Pi1Candidate:
    element: AlgebraElement
    certified: bool


@dataclass(frozen=True)
class Pi1Result:
    graph: Digraph
    base: Vertex
    degree_bound: int
    length_bound: int
    candidates: tuple[Pi1Candidate, ...]
    invariant_kernel: tuple[AlgebraElement, ...]


def _certify(elem: AlgebraElement) -> bool:
    """Theorem-backed certification per homogeneous component: the degree-1
    part must assemble to a closed form, and every supported word of higher
    degree must pass the sufficiency test letterwise."""
    g = elem.graph
    deg1 = {w[0]: c for w, c in elem.coeffs.items() if len(w) == 1}
    if deg1 and not is_closed(OneForm(g, deg1)):
        return False
    for w in elem.coeffs:
        if len(w) >= 2:
            forms = [OneForm.basis(g, a) for a in w]
            if not invariant_sufficient(forms, g):
                return False
    return True


def pi1_candidates(g: Digraph, base: Vertex, degree_bound: int,
                   length_bound: int = 6) -> Pi1Result:
    """Kernel of the single-move pairing-difference system over word
    coefficients of degree 1..degree_bound, quotiented by the functionals
    that vanish on every sampled loop; each representative is flagged
    certified when the sufficiency theorem covers it, sample-only
    otherwise."""
    if degree_bound < 1:
        raise PathError("degree_bound must be at least 1")
    words = all_words(g.arrows, degree_bound, min_degree=1)
    ncols = len(words)
    if ncols == 0:
        return Pi1Result(g, base, degree_bound, length_bound, (), ())

    sig_memo: dict[PathMap, dict[Word, Fraction]] = {}

    def sig(path: PathMap) -> dict[Word, Fraction]:
        got = sig_memo.get(path)
        if got is None:
            got = word_pairings_all(path, degree_bound)
            sig_memo[path] = got
        return got

    move_rows: set[tuple] = set()
    loop_rows: set[tuple] = set()
    for loop, nb, _ in _move_pair_sample(g, base, length_bound):
        sa, sb = sig(loop), sig(nb)
        row = tuple(sa[w] - sb[w] for w in words)
        if any(v != 0 for v in row):
            move_rows.add(row)
        lrow = tuple(sa[w] for w in words)
        if any(v != 0 for v in lrow):
            loop_rows.add(lrow)

    invariant_basis = kernel(sorted(move_rows), ncols)
    null_basis = kernel(sorted(move_rows | loop_rows), ncols)
    reps = complement_basis(null_basis, invariant_basis, ncols)

    def to_elem(vec) -> AlgebraElement:
        return AlgebraElement(g, {w: c for w, c in zip(words, vec) if c != 0})

    candidates = tuple(Pi1Candidate(to_elem(v), _certify(to_elem(v)))
                       for v in reps)
    return Pi1Result(g, base, degree_bound, length_bound, candidates,
                     tuple(to_elem(v) for v in invariant_basis))


def change_base_point(gamma: PathMap, elem):
    """Transport a loop functional along gamma from x to y back to x: each
    word splits in two, the outer parts integrating over gamma's inverse
    and gamma itself.  Adjoint to conjugating loops by gamma."""
    wrapped = isinstance(elem, BasedFunctional)
    inner = elem.elem if wrapped else elem
    if inner.graph != gamma.graph:
        raise PathError("element and path live on different digraphs")
    if wrapped:
        if elem.flavor != "loop":
            raise PathError("base-point change transports loop functionals")
        if elem.base != gamma.end:
            raise PathError(
                f"functional based at {elem.base!r}, path ends at {gamma.end!r}")
    gamma_inv = inverse(gamma)
    out = zero(inner.graph)
    for w, c in inner.coeffs.items():
        r = len(w)
        for i in range(r + 1):
            head = word_pairing(gamma_inv, w[:i])
            if head == 0:
                continue
            for j in range(i, r + 1):
                tail = word_pairing(gamma, w[j:])
                if tail == 0:
                    continue
                out = out + AlgebraElement(
                    inner.graph, {w[i:j]: c * head * tail})
    if wrapped:
        return BasedFunctional(out, gamma.start, "loop")
    return out
