"""Iterated integrals of words of 1-forms over path maps.

The integral of omega_1..omega_r over a path of n steps is the sum over all
non-decreasing index sequences 1 <= t_1 <= .. <= t_r <= n of the product of
step pairings divided by the volume number of the sequence.  The evaluator
of record is a step-by-step dynamic program over word prefixes (each step
extends the path by one arrow, whose single-step integrals are
product/k!); the direct combinatorial sum is kept alongside as a reference
implementation and test oracle.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Iterable, Sequence

from .errors import PairingError, PathError
from .forms import OneForm
from .graphs import Arrow, Digraph
from .paths import (ForwardArrow, InverseArrow, PathMap, Step, Trivial, concat,
                    inverse, steps)

Word = tuple[Arrow, ...]


def volume_number(seq: Sequence[int]) -> int:
    """Product of factorials of the value multiplicities of a non-decreasing
    sequence of positive integers."""
    total = 1
    run = 0
    prev = None
    for t in seq:
        if prev is not None and t < prev:
            raise PairingError(f"index sequence {tuple(seq)!r} is not non-decreasing")
        if t == prev:
            run += 1
        else:
            run = 1
        prev = t
        total *= run
    return total


def step_pairing(omega: OneForm, s: Step) -> Fraction:
    """<omega, step>: omega(a) forward, -omega(a) backward, 0 trivial."""
    if isinstance(s, ForwardArrow):
        return omega(s.arrow)
    if isinstance(s, InverseArrow):
        return -omega(s.arrow)
    if isinstance(s, Trivial):
        return Fraction(0)
    raise PairingError(f"not a step: {s!r}")


def iterated_integral(path: PathMap, word: Sequence[OneForm]) -> Fraction:
    """Dynamic-programming evaluation, O(steps * degree^2) exact."""
    r = len(word)
    for w in word:
        if w.graph != path.graph:
            raise PairingError("form and path live on different digraphs")
    prefix = [Fraction(1)] + [Fraction(0)] * r
    factorial = [math.factorial(k) for k in range(r + 1)]
    for s in steps(path):
        pairings = [step_pairing(w, s) for w in word]
        new = list(prefix)
        for j in range(1, r + 1):
            acc = prefix[j]
            prod = Fraction(1)
            for i in range(j - 1, -1, -1):
                prod *= pairings[i]
                if prod == 0:
                    break
                acc += prefix[i] * prod / factorial[j - i]
            new[j] = acc
        prefix = new
    return prefix[r]


def iterated_integral_direct(path: PathMap, word: Sequence[OneForm]) -> Fraction:
    """Reference evaluation straight from the definition: sum over
    non-decreasing index sequences of pairing products over volume numbers."""
    r = len(word)
    if r == 0:
        return Fraction(1)
    ss = steps(path)
    n = len(ss)
    total = Fraction(0)
    for seq in combinations_with_replacement(range(1, n + 1), r):
        prod = Fraction(1)
        for w, t in zip(word, seq):
            prod *= step_pairing(w, ss[t - 1])
            if prod == 0:
                break
        if prod != 0:
            total += prod / volume_number(seq)
    return total


def _signed_step(s: Step) -> tuple[Arrow, int] | None:
    if isinstance(s, ForwardArrow):
        return s.arrow, 1
    if isinstance(s, InverseArrow):
        return s.arrow, -1
    return None


def word_pairing(path: PathMap, word: Word) -> Fraction:
    """Iterated integral of the arrow basis word e^{a_1}..e^{a_r}."""
    r = len(word)
    prefix = [Fraction(1)] + [Fraction(0)] * r
    factorial = [math.factorial(k) for k in range(r + 1)]
    for s in steps(path):
        sa = _signed_step(s)
        if sa is None:
            continue
        arrow, sign = sa
        new = list(prefix)
        for j in range(1, r + 1):
            acc = prefix[j]
            signed = 1
            for k in range(1, j + 1):
                if word[j - k] != arrow:
                    break
                signed *= sign
                acc += prefix[j - k] * Fraction(signed, factorial[k])
            new[j] = acc
        prefix = new
    return prefix[r]


def all_words(arrows: Sequence[Arrow], max_degree: int,
              min_degree: int = 0) -> list[Word]:
    """All arrow words with min_degree <= length <= max_degree, by degree
    then lexicographic in arrow input order."""
    out: list[Word] = []
    for d in range(min_degree, max_degree + 1):
        out.extend(product(arrows, repeat=d))
    return out


def word_pairings_all(path: PathMap, max_degree: int) -> dict[Word, Fraction]:
    """Pairings of every arrow word up to max_degree against path, computed
    in one sweep (the degree-truncated signature of the path)."""
    g = path.graph
    words = all_words(g.arrows, max_degree)
    prefix: dict[Word, Fraction] = {w: Fraction(0) for w in words}
    prefix[()] = Fraction(1)
    factorial = [math.factorial(k) for k in range(max_degree + 1)]
    for s in steps(path):
        sa = _signed_step(s)
        if sa is None:
            continue
        arrow, sign = sa
        new = dict(prefix)
        for w in words:
            t = len(w)
            acc = prefix[w]
            signed = 1
            for k in range(1, t + 1):
                if w[t - k] != arrow:
                    break
                signed *= sign
                acc += prefix[w[:t - k]] * Fraction(signed, factorial[k])
            if acc != prefix[w]:
                new[w] = acc
        prefix = new
    return prefix


PathCombination = Iterable[tuple[Fraction, PathMap]]


def pair(elem, paths: PathMap | PathCombination) -> Fraction:
    """Bilinear pairing of an algebra element with a path or a rational
    combination of paths sharing host and start vertex."""
    if isinstance(paths, PathMap):
        combo: list[tuple[Fraction, PathMap]] = [(Fraction(1), paths)]
    else:
        combo = [(Fraction(c), p) for c, p in paths]
    base = None
    for _, p in combo:
        if p.graph != elem.graph:
            raise PairingError("element and path live on different digraphs")
        if base is None:
            base = p.start
        elif p.start != base:
            raise PairingError(
                f"paths start at different vertices: {base!r} and {p.start!r}")
    total = Fraction(0)
    for c, p in combo:
        for w, coeff in elem.coeffs.items():
            if coeff != 0:
                total += c * coeff * word_pairing(p, w)
    return total


def order(path: PathMap, max_degree: int) -> int | None:
    """Smallest r <= max_degree with a nonzero degree-r arrow-word pairing;
    None means every such pairing vanishes up to max_degree (order is at
    least max_degree + 1).  Exact by finite enumeration per degree."""
    if max_degree < 1:
        raise PairingError("max_degree must be at least 1")
    sig = word_pairings_all(path, max_degree)
    for r in range(1, max_degree + 1):
        for w in product(path.graph.arrows, repeat=r):
            if sig[w] != 0:
                return r
    return None


def commutator(a: PathMap, b: PathMap) -> PathMap:
    """[a, b] = a * b * a^{-1} * b^{-1} for loops at a common base."""
    if a.graph != b.graph:
        raise PathError("loops live on different digraphs")
    if not (a.is_loop and b.is_loop):
        raise PathError("commutator arguments must be loops")
    if a.start != b.start:
        raise PathError(
            f"loops are based at different vertices: {a.start!r} and {b.start!r}")
    return concat(concat(concat(a, b), inverse(a)), inverse(b))
