"""Shuffle algebra of arrow words with its Hopf structure.

Elements are finitely supported rational combinations of arrow words.  The
product is the shuffle, the coproduct is deconcatenation, the counit picks
the empty-word coefficient, and the antipode is signed reversal.  Functional
equality of elements (as integration functionals on based paths or loops) is
decided up to a caller-supplied length bound with explicit verdicts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from typing import Callable, Iterable, Sequence

from .errors import PairingError
from .forms import OneForm
from .graphs import Arrow, BasedDigraph, Digraph, DigraphMap
from .integrals import Word, all_words, pair, word_pairing, word_pairings_all
from .paths import PathMap, concat, enumerate_paths, inverse


def _clean(coeffs: dict) -> dict:
    return {k: v for k, v in coeffs.items() if v != 0}


class AlgebraElement:
    """Rational combination of arrow words on a fixed host digraph."""

    def __init__(self, graph: Digraph, coeffs: dict[Word, Fraction] | None = None):
        self.graph = graph
        clean: dict[Word, Fraction] = {}
        for w, c in (coeffs or {}).items():
            word = tuple(w)
            for a in word:
                if a not in graph.arrow_set:
                    raise PairingError(f"word uses unknown arrow {a!r}")
            c = Fraction(c)
            if c != 0:
                clean[word] = clean.get(word, Fraction(0)) + c
        self.coeffs = _clean(clean)

    @property
    def degree(self) -> int:
        """Largest supported word length (0 for the zero element)."""
        return max((len(w) for w in self.coeffs), default=0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def homogeneous_component(self, r: int) -> "AlgebraElement":
        return AlgebraElement(
            self.graph, {w: c for w, c in self.coeffs.items() if len(w) == r})

    def support(self) -> list[Word]:
        idx = self.graph.arrow_index
        return sorted(self.coeffs, key=lambda w: (len(w), tuple(idx[a] for a in w)))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_host(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, Fraction(0)) + c
        return AlgebraElement(self.graph, out)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_host(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, Fraction(0)) - c
        return AlgebraElement(self.graph, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.graph, {w: -c for w, c in self.coeffs.items()})

    def __rmul__(self, scalar) -> "AlgebraElement":
        s = Fraction(scalar)
        return AlgebraElement(self.graph, {w: s * c for w, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return shuffle(self, other)
        return AlgebraElement(
            self.graph, {w: c * Fraction(other) for w, c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.graph == other.graph and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.graph, frozenset(self.coeffs.items())))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "AlgebraElement(0)"
        bits = []
        for w in self.support():
            label = ".".join(f"{a[0]}->{a[1]}" for a in w) if w else "1"
            bits.append(f"{self.coeffs[w]}*{label}")
        return f"AlgebraElement({' + '.join(bits)})"

    def _check_host(self, other: "AlgebraElement") -> None:
        if self.graph != other.graph:
            raise PairingError("elements live on different digraphs")


def zero(graph: Digraph) -> AlgebraElement:
    return AlgebraElement(graph, {})


def unit(graph: Digraph) -> AlgebraElement:
    return AlgebraElement(graph, {(): Fraction(1)})


def word_element(graph: Digraph, word: Iterable[Arrow],
                 coeff=1) -> AlgebraElement:
    return AlgebraElement(graph, {tuple(word): Fraction(coeff)})


def from_forms(graph: Digraph, forms: Sequence[OneForm]) -> AlgebraElement:
    """Expand a word of 1-forms into the arrow-word basis multilinearly."""
    terms: dict[Word, Fraction] = {(): Fraction(1)}
    for omega in forms:
        if omega.graph != graph:
            raise PairingError("form lives on a different digraph")
        new: dict[Word, Fraction] = {}
        for w, c in terms.items():
            for a in graph.arrows:
                v = omega(a)
                if v != 0:
                    key = w + (a,)
                    new[key] = new.get(key, Fraction(0)) + c * v
        terms = new
        if not terms:
            break
    return AlgebraElement(graph, terms)


@lru_cache(maxsize=None)
def _interleavings(r: int, s: int) -> tuple[tuple[int, ...], ...]:
    """All 0/1 source patterns of length r+s with exactly r zeros, i.e. the
    (r, s)-shuffles read as which word each slot draws from."""
    out = []
    for left in combinations(range(r + s), r):
        pattern = [1] * (r + s)
        for i in left:
            pattern[i] = 0
        out.append(tuple(pattern))
    return tuple(out)


def shuffle_words(w1: Word, w2: Word) -> dict[Word, int]:
    """Shuffle of two basis words, with integer multiplicities."""
    if not w1:
        return {tuple(w2): 1}
    if not w2:
        return {tuple(w1): 1}
    out: dict[Word, int] = {}
    for pattern in _interleavings(len(w1), len(w2)):
        i = j = 0
        merged = []
        for flag in pattern:
            if flag == 0:
                merged.append(w1[i])
                i += 1
            else:
                merged.append(w2[j])
                j += 1
        key = tuple(merged)
        out[key] = out.get(key, 0) + 1
    return out


def _shuffle_int(d1: dict[Word, int], d2: dict[Word, int]) -> dict[Word, int]:
    out: dict[Word, int] = {}
    for w1, c1 in d1.items():
        for w2, c2 in d2.items():
            c = c1 * c2
            for w, m in shuffle_words(w1, w2).items():
                out[w] = out.get(w, 0) + c * m
    return {w: c for w, c in out.items() if c != 0}


def shuffle(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """Shuffle product, the bilinear extension of the basis shuffle."""
    u._check_host(v)
    out: dict[Word, Fraction] = {}
    for w1, c1 in u.coeffs.items():
        for w2, c2 in v.coeffs.items():
            c = c1 * c2
            for w, m in shuffle_words(w1, w2).items():
                out[w] = out.get(w, Fraction(0)) + c * m
    return AlgebraElement(u.graph, out)


class TensorPair:
    """Rational combination of ordered pairs of arrow words."""

    def __init__(self, graph: Digraph,
                 coeffs: dict[tuple[Word, Word], Fraction] | None = None):
        self.graph = graph
        self.coeffs = _clean({(tuple(k[0]), tuple(k[1])): Fraction(v)
                              for k, v in (coeffs or {}).items()})

    def __add__(self, other: "TensorPair") -> "TensorPair":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + c
        return TensorPair(self.graph, out)

    def __sub__(self, other: "TensorPair") -> "TensorPair":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) - c
        return TensorPair(self.graph, out)

    def __rmul__(self, scalar) -> "TensorPair":
        s = Fraction(scalar)
        return TensorPair(self.graph, {k: s * c for k, c in self.coeffs.items()})

    def __mul__(self, other: "TensorPair") -> "TensorPair":
        """Componentwise shuffle on tensor factors."""
        out: dict[tuple[Word, Word], Fraction] = {}
        for (u1, u2), c1 in self.coeffs.items():
            for (v1, v2), c2 in other.coeffs.items():
                c = c1 * c2
                left = shuffle_words(u1, v1)
                right = shuffle_words(u2, v2)
                for wl, ml in left.items():
                    for wr, mr in right.items():
                        key = (wl, wr)
                        out[key] = out.get(key, Fraction(0)) + c * ml * mr
        return TensorPair(self.graph, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorPair):
            return NotImplemented
        return self.graph == other.graph and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TensorPair({len(self.coeffs)} terms)"


def coproduct(u: AlgebraElement) -> TensorPair:
    """Deconcatenation: each word splits into all prefix/suffix pairs."""
    out: dict[tuple[Word, Word], Fraction] = {}
    for w, c in u.coeffs.items():
        for i in range(len(w) + 1):
            key = (w[:i], w[i:])
            out[key] = out.get(key, Fraction(0)) + c
    return TensorPair(u.graph, out)


def counit(u: AlgebraElement) -> Fraction:
    return u.coeffs.get((), Fraction(0))


def antipode(u: AlgebraElement) -> AlgebraElement:
    """Signed reversal: a word of length r maps to (-1)^r times its reverse."""
    out: dict[Word, Fraction] = {}
    for w, c in u.coeffs.items():
        key = tuple(reversed(w))
        sign = -1 if len(w) % 2 else 1
        out[key] = out.get(key, Fraction(0)) + sign * c
    return AlgebraElement(u.graph, out)


def pullback_element(f: DigraphMap, u: AlgebraElement) -> AlgebraElement:
    """Pull a shuffle element on the target back to the source, letter by
    letter: the basis form of an arrow pulls back to the sum of the basis
    forms of its non-degenerate preimage arrows."""
    if u.graph != f.target:
        raise PairingError("element does not live on the map's target")
    fiber: dict[Arrow, list[Arrow]] = {a: [] for a in f.target.arrows}
    for b in f.source.arrows:
        image = (f(b[0]), f(b[1]))
        if image in fiber:
            fiber[image].append(b)
    out: dict[Word, Fraction] = {}
    for w, c in u.coeffs.items():
        pools = [fiber[a] for a in w]
        if any(not pool for pool in pools):
            continue
        for choice in product(*pools):
            out[choice] = out.get(choice, Fraction(0)) + c
    return AlgebraElement(f.source, out)


@dataclass(frozen=True)
class FunctionalVerdict:
    """Outcome of a bounded functional-equality search."""
    status: str  # "equal-up-to-bound" | "certified-unequal"
    base: object
    flavor: str  # "path" | "loop"
    length_bound: int
    witness: PathMap | None = None
    values: tuple[Fraction, Fraction] | None = None

    @property
    def separated(self) -> bool:
        return self.status == "certified-unequal"


def functional_equal(u: AlgebraElement, v: AlgebraElement, base,
                     flavor: str = "loop",
                     length_bound: int = 8) -> FunctionalVerdict:
    """Compare two elements as integration functionals on paths (or loops)
    from base, by enumerating all of them up to the length bound."""
    u._check_host(v)
    if flavor not in ("path", "loop"):
        raise PairingError(f"unknown flavor {flavor!r}")
    if length_bound < 1:
        raise PairingError("length_bound must be at least 1")
    diff = u - v
    if diff.is_zero():
        return FunctionalVerdict("equal-up-to-bound", base, flavor, length_bound)
    loops_only = flavor == "loop"
    for p in enumerate_paths(u.graph, base, length_bound, loops_only=loops_only):
        a = pair(u, p)
        b = pair(v, p)
        if a != b:
            return FunctionalVerdict("certified-unequal", base, flavor,
                                     length_bound, witness=p, values=(a, b))
    return FunctionalVerdict("equal-up-to-bound", base, flavor, length_bound)


class BasedFunctional:
    """A shuffle element read as an integration functional on based paths or
    loops; equality is the bounded functional test, never syntactic."""

    def __init__(self, elem: AlgebraElement, base, flavor: str = "loop"):
        if flavor not in ("path", "loop"):
            raise PairingError(f"unknown flavor {flavor!r}")
        if base not in elem.graph.vertex_set:
            raise PairingError(f"unknown base vertex {base!r}")
        self.elem = elem
        self.base = base
        self.flavor = flavor

    def __call__(self, path: PathMap) -> Fraction:
        if path.start != self.base:
            raise PairingError(f"path does not start at {self.base!r}")
        if self.flavor == "loop" and not path.is_loop:
            raise PairingError("loop functional applied to a non-loop")
        return pair(self.elem, path)

    def equal(self, other: "BasedFunctional",
              length_bound: int = 8) -> FunctionalVerdict:
        if (self.base, self.flavor) != (other.base, other.flavor):
            raise PairingError("functionals have different base or flavor")
        return functional_equal(self.elem, other.elem, self.base,
                                self.flavor, length_bound)


def _word_sort_key(graph: Digraph):
    idx = graph.arrow_index
    return lambda w: (len(w), tuple(idx[a] for a in w))


def hopf_axiom_report(graph: Digraph, degree_bound: int, base=None,
                      loop_length_bound: int = 8,
                      antipode_fn: Callable[[AlgebraElement], AlgebraElement] | None = None,
                      max_failures: int = 5) -> dict:
    """Exhaustively verify the Hopf axioms on all arrow words up to
    degree_bound, plus the dual pairing laws on all enumerated loops up to
    loop_length_bound when a base vertex is available.  A report maps axiom
    names to pass flags and offending instances; antipode_fn is injectable
    so a deliberately broken antipode is caught (negative control)."""
    if antipode_fn is None:
        antipode_fn = antipode
    words = sorted(all_words(graph.arrows, degree_bound), key=_word_sort_key(graph))
    axioms: dict[str, dict] = {}

    def record(name: str, failures: list) -> None:
        axioms[name] = {"passed": not failures, "failures": failures[:max_failures]}

    # Associativity over unordered triples (shuffle is checked commutative
    # separately, so ordered triples add nothing).
    failures = []
    int_words = {w: {w: 1} for w in words}
    for u, v, w in combinations_with_replacement(words, 3):
        left = _shuffle_int(_shuffle_int(int_words[u], int_words[v]), int_words[w])
        right = _shuffle_int(int_words[u], _shuffle_int(int_words[v], int_words[w]))
        if left != right:
            failures.append({"words": (u, v, w)})
            if len(failures) >= max_failures:
                break
    record("associativity", failures)

    failures = []
    for u, v in combinations(words, 2):
        if shuffle_words(u, v) != shuffle_words(v, u):
            failures.append({"words": (u, v)})
            if len(failures) >= max_failures:
                break
    record("commutativity", failures)

    failures = []
    for w in words:
        left: dict[tuple, int] = {}
        right: dict[tuple, int] = {}
        for i in range(len(w) + 1):
            for j in range(i, len(w) + 1):
                key = (w[:i], w[i:j], w[j:])
                left[key] = left.get(key, 0) + 1    # split first factor again
                right[key] = right.get(key, 0) + 1  # split second factor again
        if left != right:
            failures.append({"word": w})
    record("coassociativity", failures)

    failures = []
    for w in words:
        elem = word_element(graph, w)
        delta = coproduct(elem)
        left = zero(graph)
        right = zero(graph)
        for (w1, w2), c in delta.coeffs.items():
            if not w1:
                left = left + AlgebraElement(graph, {w2: c})
            if not w2:
                right = right + AlgebraElement(graph, {w1: c})
        if left != elem or right != elem:
            failures.append({"word": w})
    record("counit", failures)

    failures = []
    for u, v in combinations_with_replacement(words, 2):
        uu = word_element(graph, u)
        vv = word_element(graph, v)
        if coproduct(shuffle(uu, vv)) != coproduct(uu) * coproduct(vv):
            failures.append({"words": (u, v)})
            if len(failures) >= max_failures:
                break
    record("bialgebra", failures)

    failures = []
    for w in words:
        elem = word_element(graph, w)
        target = counit(elem) * unit(graph)
        lhs = zero(graph)
        rhs = zero(graph)
        for (w1, w2), c in coproduct(elem).coeffs.items():
            lhs = lhs + c * shuffle(antipode_fn(word_element(graph, w1)),
                                    word_element(graph, w2))
            rhs = rhs + c * shuffle(word_element(graph, w1),
                                    antipode_fn(word_element(graph, w2)))
        if lhs != target or rhs != target:
            failures.append({"word": w})
            if len(failures) >= max_failures:
                break
    record("antipode", failures)

    failures = []
    for w in words:
        elem = word_element(graph, w)
        if antipode_fn(antipode_fn(elem)) != elem:
            failures.append({"word": w})
    record("antipode_involution", failures)

    if base is None and isinstance(graph, BasedDigraph):
        base = graph.base
    report = {
        "degree_bound": degree_bound,
        "loop_length_bound": loop_length_bound,
        "base": base,
        "axioms": axioms,
    }
    if base is None:
        report["dual_laws"] = "skipped: no base vertex"
        report["all_passed"] = all(a["passed"] for a in axioms.values())
        return report

    loops = list(enumerate_paths(graph, base, loop_length_bound, loops_only=True))
    sig = {l: word_pairings_all(l, degree_bound) for l in loops}

    # pair(u . v, l) = pair(u, l) * pair(v, l)
    failures = []
    split_pairs = [(u, v) for u, v in combinations_with_replacement(words, 2)
                   if len(u) + len(v) <= degree_bound]
    for l in loops:
        s = sig[l]
        for u, v in split_pairs:
            combined = sum(m * s[w] for w, m in shuffle_words(u, v).items())
            if combined != s[u] * s[v]:
                failures.append({"loop": l, "words": (u, v)})
                break
        if len(failures) >= max_failures:
            break
    record("dual_shuffle", failures)

    # pair(u, a * b) = sum over deconcatenations of pair products; checked on
    # every loop pair whose concatenation still fits the length bound
    failures = []
    for la, lb in product(loops, repeat=2):
        if la.length + lb.length > loop_length_bound:
            continue
        cat_sig = word_pairings_all(concat(la, lb), degree_bound)
        sa, sb = sig[la], sig[lb]
        for w in words:
            expected = sum(sa[w[:i]] * sb[w[i:]] for i in range(len(w) + 1))
            if cat_sig[w] != expected:
                failures.append({"loops": (la, lb), "word": w})
                break
        if len(failures) >= max_failures:
            break
    record("dual_concat", failures)

    # pair(j(u), l) = pair(u, l^{-1})
    failures = []
    for l in loops:
        s = sig[l]
        s_inv = sig[inverse(l)]
        for w in words:
            ju = antipode_fn(word_element(graph, w))
            value = sum(c * s[x] for x, c in ju.coeffs.items())
            if value != s_inv[w]:
                failures.append({"loop": l, "word": w})
                break
        if len(failures) >= max_failures:
            break
    record("dual_antipode", failures)

    report["all_passed"] = all(a["passed"] for a in axioms.values())
    return report
