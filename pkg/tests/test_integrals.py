"""The iterated-integral engine: volume numbers, evaluators, pairings."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import random_digraph, random_path, random_word

from pathint import (OneForm, PairingError, all_words, commutator, concat,
                     double_edge, inverse, iterated_integral,
                     iterated_integral_direct, make_path, order, pair,
                     standard_triangle, step_pairing, trivial_path,
                     volume_number, wedge_of_cycles, word_element,
                     word_pairing, word_pairings_all)
from pathint.paths import steps


def test_volume_number_values():
    assert volume_number([]) == 1
    assert volume_number([2]) == 1
    assert volume_number([1, 1, 1]) == 6
    assert volume_number([1, 2, 2, 5, 5, 5]) == 12


def test_volume_number_rejects_decreasing():
    with pytest.raises(PairingError):
        volume_number([2, 1])


def test_step_pairing_signs():
    T = standard_triangle()
    omega = OneForm(T, {("v0", "v1"): Fraction(3, 2)})
    p = make_path(T, ["v0", "v1", "v1", "v0"], ["f", "f", "b"])
    fwd, triv, back = steps(p)
    assert step_pairing(omega, fwd) == Fraction(3, 2)
    assert step_pairing(omega, triv) == 0
    assert step_pairing(omega, back) == Fraction(-3, 2)


def test_empty_word_integrates_to_one(rng):
    g = random_digraph(rng)
    p = random_path(rng, g)
    assert iterated_integral(p, []) == 1


def test_trivial_path_kills_positive_degree(rng):
    g = random_digraph(rng)
    w = random_word(rng, g)
    assert iterated_integral(trivial_path(g, g.vertices[0]), w) == 0


def test_dp_matches_direct_evaluator(rng):
    for _ in range(200):
        g = random_digraph(rng)
        p = random_path(rng, g, max_len=6)
        w = random_word(rng, g, max_degree=3)
        assert iterated_integral(p, w) == iterated_integral_direct(p, w)


def test_graph_mismatch_raises():
    T = standard_triangle()
    D = double_edge()
    p = make_path(T, ["v0", "v1"], ["f"])
    with pytest.raises(PairingError):
        iterated_integral(p, [OneForm.basis(D, ("v0", "v1"))])


def test_word_pairing_matches_integral(rng):
    for _ in range(50):
        g = random_digraph(rng)
        p = random_path(rng, g, max_len=6)
        for r in (1, 2):
            for w in list(all_words(g.arrows, r, min_degree=r))[:10]:
                word = [OneForm.basis(g, a) for a in w]
                assert word_pairing(p, w) == iterated_integral(p, word)


def test_word_pairings_all_consistency(rng):
    for _ in range(20):
        g = random_digraph(rng, max_vertices=4)
        p = random_path(rng, g, max_len=5)
        sig = word_pairings_all(p, 2)
        for w, value in sig.items():
            assert value == word_pairing(p, w)


def test_all_words_order_and_count():
    T = standard_triangle()
    words = list(all_words(T.arrows, 2))
    assert words[0] == ()
    assert len(words) == 1 + 3 + 9
    index = {a: i for i, a in enumerate(T.arrows)}
    key = lambda w: (len(w), tuple(index[a] for a in w))
    assert words == sorted(words, key=key)


def test_pair_is_bilinear(rng):
    g = random_digraph(rng)
    p = random_path(rng, g, max_len=5)
    u = word_element(g, (g.arrows[0],))
    v = word_element(g, (g.arrows[0], g.arrows[0]))
    combo = 2 * u - 3 * v
    assert pair(combo, p) == 2 * pair(u, p) - 3 * pair(v, p)


def test_pair_rejects_mixed_starts():
    D = double_edge()
    u = word_element(D, (("v0", "v1"),))
    a = make_path(D, ["v0", "v1"], ["f"])
    b = make_path(D, ["v1", "v0"], ["f"])
    with pytest.raises(PairingError):
        pair(u, [(Fraction(1), a), (Fraction(1), b)])


def test_order_examples():
    D = double_edge()
    loop = make_path(D, ["v0", "v1", "v0"], ["f", "f"])
    assert order(loop, 3) == 1
    assert order(trivial_path(D, "v0"), 3) is None
    with pytest.raises(PairingError):
        order(loop, 0)


def test_filtration_additivity():
    # pairings of degree < r + s vanish on a product of high-order loops
    W = wedge_of_cycles()
    alpha = make_path(W, ["v0", "v1", "v2", "v3", "v0"], ["f"] * 4)
    beta = make_path(W, ["v0", "v4", "v5", "v6", "v0"], ["f"] * 4)
    c = commutator(alpha, beta)
    assert order(alpha, 2) == 1 and order(c, 2) == 2
    for a in W.arrows:
        assert (word_pairing(concat(alpha, beta), (a,))
                == word_pairing(alpha, (a,)) + word_pairing(beta, (a,)))


def test_commutator_requires_shared_base():
    W = wedge_of_cycles()
    alpha = make_path(W, ["v0", "v1", "v2", "v3", "v0"], ["f"] * 4)
    shifted = make_path(W, ["v1", "v2", "v3", "v0", "v1"], ["f"] * 4)
    with pytest.raises(Exception):
        commutator(alpha, shifted)


@given(st.integers(min_value=1, max_value=4))
def test_inverse_identity_on_basis_words(r):
    D = double_edge()
    p = make_path(D, ["v0", "v1", "v0", "v1"], ["f", "f", "f"])
    for w in all_words(D.arrows, r, min_degree=r):
        word = [OneForm.basis(D, a) for a in w]
        assert (iterated_integral(inverse(p), word)
                == (-1) ** r * iterated_integral(p, word[::-1]))
