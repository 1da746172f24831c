"""JSON (and DOT-subset) readers and writers for every value the command
line tool consumes or emits.  All rationals travel as strings like "3/2";
all emitted structures re-parse to equal values."""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .algebra import AlgebraElement, TensorPair
from .errors import FormError, GraphError, PathError
from .forms import OneForm, TwoChain
from .graphs import Arrow, BasedDigraph, Digraph, validate_digraph
from .paths import PathMap, make_path


def format_rational(x) -> str:
    return str(Fraction(x))


def parse_rational(s: str) -> Fraction:
    try:
        return Fraction(str(s).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise FormError(f"not a rational: {s!r}") from exc


# ---------------------------------------------------------------- digraphs

def digraph_to_dict(g: Digraph) -> dict:
    out = {"vertices": list(g.vertices),
           "arrows": [list(a) for a in g.arrows]}
    if isinstance(g, BasedDigraph):
        out["base"] = g.base
    return out


def digraph_from_dict(d: dict) -> Digraph:
    if "vertices" not in d or "arrows" not in d:
        raise GraphError('digraph JSON needs "vertices" and "arrows"')
    arrows = [tuple(a) for a in d["arrows"]]
    return validate_digraph(d["vertices"], arrows, d.get("base"))


_DOT_EDGE = re.compile(r'"([^"]+)"|([A-Za-z0-9_.]+)|(->)|(\{)|(\})|(;)|(digraph|strict)')


def parse_dot(text: str) -> Digraph:
    """Minimal DOT reader: directed edges only, no attributes.  Vertices
    appear in first-mention order; chained edges a -> b -> c are allowed."""
    body = re.sub(r'//[^\n]*|#[^\n]*', ' ', text)
    body = re.sub(r'/\*.*?\*/', ' ', body, flags=re.S)
    if '[' in body or '=' in body:
        raise GraphError("DOT attributes are not supported")
    brace_open = body.find('{')
    brace_close = body.rfind('}')
    if brace_open < 0 or brace_close < brace_open:
        raise GraphError("not a DOT digraph: missing braces")
    head = body[:brace_open]
    if 'digraph' not in head:
        raise GraphError("only directed DOT graphs are supported")
    vertices: list = []
    seen = set()
    arrows: list[tuple] = []

    def note(v: str):
        if v not in seen:
            seen.add(v)
            vertices.append(v)

    for statement in re.split(r'[;\n]', body[brace_open + 1:brace_close]):
        statement = statement.strip()
        if not statement:
            continue
        names = [m.group(1) or m.group(2)
                 for m in re.finditer(r'"([^"]+)"|([A-Za-z0-9_.]+)', statement)]
        chain = [t for t in re.split(r'\s*->\s*', statement) if t.strip()]
        if len(chain) != len(names):
            raise GraphError(f"unsupported DOT statement: {statement!r}")
        for v in names:
            note(v)
        for u, v in zip(names, names[1:]):
            if (u, v) not in arrows:
                arrows.append((u, v))
    return validate_digraph(vertices, arrows)


def parse_digraph(text: str) -> Digraph:
    """Auto-detect JSON or DOT input."""
    stripped = text.lstrip()
    if stripped.startswith("{") and "digraph" not in stripped[:60].lower().split("{")[0]:
        try:
            return digraph_from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise GraphError(f"malformed digraph JSON: {exc}") from exc
    return parse_dot(text)


# ------------------------------------------------------------------- paths

def path_to_dict(p: PathMap) -> dict:
    return {"vertices": list(p.vertices), "orientations": list(p.orientations)}


def path_from_dict(g: Digraph, d: dict) -> PathMap:
    if "vertices" not in d:
        raise PathError('path JSON needs "vertices"')
    vertices = list(d["vertices"])
    orientations = d.get("orientations")
    if orientations is None:
        orientations = []
        for u, v in zip(vertices, vertices[1:]):
            if u == v:
                orientations.append("f")
            elif g.has_arrow(u, v):
                orientations.append("f")
            elif g.has_arrow(v, u):
                orientations.append("b")
            else:
                raise PathError(f"no arrow between {u!r} and {v!r}")
    return make_path(g, vertices, orientations)


# ------------------------------------------------------------------- forms

def arrow_label(a: Arrow) -> str:
    return f"{a[0]}->{a[1]}"


def parse_arrow_label(g: Digraph, label: str) -> Arrow:
    if "->" not in label:
        raise FormError(f"arrow label {label!r} is not of the form src->dst")
    u, _, v = label.partition("->")
    arrow = (u, v)
    if arrow not in g.arrow_set:
        raise FormError(f"unknown arrow {label!r}")
    return arrow


def one_form_to_dict(omega: OneForm) -> dict:
    return {"form": {arrow_label(a): format_rational(v)
                     for a, v in omega.values.items() if v != 0}}


def one_form_from_dict(g: Digraph, d: dict) -> OneForm:
    if "form" not in d:
        raise FormError('1-form JSON needs "form"')
    return OneForm(g, {parse_arrow_label(g, k): parse_rational(v)
                       for k, v in d["form"].items()})


def word_to_dict(word) -> dict:
    return {"word": [one_form_to_dict(w) for w in word]}


def word_from_dict(g: Digraph, d: dict) -> list[OneForm]:
    if "word" not in d:
        raise FormError('word JSON needs "word"')
    return [one_form_from_dict(g, item) for item in d["word"]]


def two_chain_to_dict(chain: TwoChain) -> dict:
    return {"chain": {",".join(p): format_rational(c)
                      for p, c in chain.coeffs.items()}}


def two_chain_from_dict(g: Digraph, d: dict) -> TwoChain:
    if "chain" not in d:
        raise FormError('2-chain JSON needs "chain"')
    return TwoChain(g, {tuple(k.split(",")): parse_rational(v)
                        for k, v in d["chain"].items()})


# ---------------------------------------------------------------- elements

def word_label(word) -> str:
    return ",".join(arrow_label(a) for a in word)


def parse_word_label(g: Digraph, label: str) -> tuple:
    if not label:
        return ()
    return tuple(parse_arrow_label(g, part) for part in label.split(","))


def element_to_dict(u: AlgebraElement) -> dict:
    return {"element": {word_label(w): format_rational(c)
                        for w, c in u.coeffs.items()}}


def element_from_dict(g: Digraph, d: dict) -> AlgebraElement:
    if "element" not in d:
        raise FormError('element JSON needs "element"')
    return AlgebraElement(g, {parse_word_label(g, k): parse_rational(v)
                              for k, v in d["element"].items()})


def tensor_to_dict(t: TensorPair) -> dict:
    return {"tensor": {f"{word_label(a)}|{word_label(b)}": format_rational(c)
                       for (a, b), c in t.coeffs.items()}}


def tensor_from_dict(g: Digraph, d: dict) -> TensorPair:
    if "tensor" not in d:
        raise FormError('tensor JSON needs "tensor"')
    coeffs = {}
    for key, v in d["tensor"].items():
        left, sep, right = key.partition("|")
        if not sep:
            raise FormError(f"tensor key {key!r} is not of the form left|right")
        coeffs[(parse_word_label(g, left), parse_word_label(g, right))] = parse_rational(v)
    return TensorPair(g, coeffs)


def canonical_dumps(obj) -> str:
    """Byte-deterministic JSON used by the command line tool."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
