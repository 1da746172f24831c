"""Shared fixtures, seeded random generators, and the acceptance-summary
terminal hook (one pass/fail line per criterion at the end of a run)."""

from __future__ import annotations

import os
import random
from fractions import Fraction

import pytest
from hypothesis import settings

from pathint import OneForm, ZeroForm, make_path, validate_digraph

SEED = int(os.environ.get("PATHINT_SEED", "20260819"))

settings.register_profile("suite", max_examples=25, deadline=None,
                          derandomize=True)
settings.load_profile("suite")


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)


def random_digraph(rng: random.Random, max_vertices: int = 6, p: float = 0.4):
    n = rng.randint(2, max_vertices)
    vs = [f"v{i}" for i in range(n)]
    arrows = [(u, v) for u in vs for v in vs if u != v and rng.random() < p]
    if not arrows:
        arrows = [(vs[0], vs[1])]
    return validate_digraph(vs, arrows)


def random_path(rng: random.Random, g, max_len: int = 8, start=None,
                length=None, allow_trivial: bool = True):
    v = start if start is not None else rng.choice(g.vertices)
    steps = length if length is not None else rng.randint(0, max_len)
    verts, flags = [v], []
    for _ in range(steps):
        moves = [(a[1], "f") for a in g.out_arrows(v)]
        moves += [(a[0], "b") for a in g.in_arrows(v)]
        if allow_trivial or not moves:
            moves.append((v, "f"))
        nxt, flag = rng.choice(moves)
        verts.append(nxt)
        flags.append(flag)
        v = nxt
    return make_path(g, verts, flags)


def random_rational(rng: random.Random, zero_ok: bool = True) -> Fraction:
    num = rng.randint(-3, 3)
    if not zero_ok and num == 0:
        num = 1
    return Fraction(num, rng.randint(1, 3))


def random_form(rng: random.Random, g, zero_p: float = 0.3) -> OneForm:
    vals = {}
    for a in g.arrows:
        if rng.random() >= zero_p:
            c = random_rational(rng)
            if c:
                vals[a] = c
    return OneForm(g, vals)


def random_word(rng: random.Random, g, max_degree: int = 4,
                min_degree: int = 1) -> list[OneForm]:
    return [random_form(rng, g)
            for _ in range(rng.randint(min_degree, max_degree))]


def random_zero_form(rng: random.Random, g) -> ZeroForm:
    return ZeroForm(g, {v: random_rational(rng) for v in g.vertices})


# ------------------------------------------------- acceptance summary lines

_ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        if report.when == "call":
            _ACCEPTANCE[name] = report.outcome
        elif report.when == "setup" and report.outcome != "passed":
            _ACCEPTANCE[name] = report.outcome


def _criterion_key(name: str) -> int:
    # test_criterion_07_invariance -> 7
    try:
        return int(name.split("_")[2])
    except (IndexError, ValueError):
        return 99


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=_criterion_key):
        n = _criterion_key(name)
        label = " ".join(name.split("_")[3:])
        verdict = {"passed": "PASS", "failed": "FAIL"}.get(
            _ACCEPTANCE[name], _ACCEPTANCE[name].upper())
        terminalreporter.write_line(f"criterion {n:2d} [{verdict}] {label}")
