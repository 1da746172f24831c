"""Command line interface.  One subcommand per operation cluster; all output
is deterministic, with exact rationals rendered as "p/q" strings."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import serialization as ser
from .algebra import antipode, coproduct, hopf_axiom_report
from .errors import GraphError, PathintError
from .forms import closed_one_forms, omega2_basis
from .graphs import BasedDigraph, Digraph, enumerate_patterns
from .homotopy import change_base_point, homotopic_loops, pi1_candidates
from .integrals import iterated_integral, order, pair, volume_number
from .linalg import span_equal
from .paths import PathMap, elem_equivalent, reduce


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graph(args) -> Digraph:
    return ser.parse_digraph(_read(args.graph))


def _load_path(g: Digraph, filename: str) -> PathMap:
    import json
    try:
        data = json.loads(_read(filename))
    except json.JSONDecodeError as exc:
        raise PathintError(f"malformed JSON in {filename}: {exc}") from exc
    return ser.path_from_dict(g, data)


def _load_json(filename: str) -> dict:
    import json
    try:
        return json.loads(_read(filename))
    except json.JSONDecodeError as exc:
        raise PathintError(f"malformed JSON in {filename}: {exc}") from exc


def _json_safe(obj):
    """Recursively convert to plain JSON types: Fractions become "p/q"
    strings, tuples become lists, paths become their JSON dicts."""
    if isinstance(obj, Fraction):
        return ser.format_rational(obj)
    if isinstance(obj, PathMap):
        return ser.path_to_dict(obj)
    if isinstance(obj, dict):
        return {str(k): _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(x) for x in obj]
    return obj


def _resolve_base(g: Digraph, explicit):
    base = explicit if explicit is not None else getattr(g, "base", None)
    if base is not None and base not in g.vertex_set:
        raise GraphError(f"base vertex {base!r} is not in the digraph")
    return base


# ------------------------------------------------------------- subcommands

def _cmd_validate(args):
    g = _load_graph(args)
    triangles = len(enumerate_patterns(g, "triangle"))
    squares = len(enumerate_patterns(g, "square"))
    payload = {"valid": True,
               "vertices": len(g.vertices),
               "arrows": len(g.arrows),
               "base": getattr(g, "base", None),
               "triangles": triangles,
               "squares": squares}
    text = (f"valid: {payload['vertices']} vertices, {payload['arrows']} arrows, "
            f"{triangles} triangle(s), {squares} square(s)")
    return payload, text


def _cmd_integrate(args):
    g = _load_graph(args)
    p = _load_path(g, args.path)
    word = ser.word_from_dict(g, _load_json(args.word))
    value = iterated_integral(p, word)
    return {"value": ser.format_rational(value)}, ser.format_rational(value)


def _cmd_pair(args):
    g = _load_graph(args)
    u = ser.element_from_dict(g, _load_json(args.element))
    p = _load_path(g, args.path)
    value = pair(u, p)
    return {"value": ser.format_rational(value)}, ser.format_rational(value)


def _cmd_reduce(args):
    g = _load_graph(args)
    p = reduce(_load_path(g, args.path))
    payload = ser.path_to_dict(p)
    return payload, ser.canonical_dumps(payload).rstrip("\n")


def _cmd_equiv(args):
    g = _load_graph(args)
    a = _load_path(g, args.path_a)
    b = _load_path(g, args.path_b)
    verdict = elem_equivalent(a, b)
    return {"equivalent": verdict}, "true" if verdict else "false"


def _cmd_shuffle(args):
    g = _load_graph(args)
    u = ser.element_from_dict(g, _load_json(args.element_a))
    v = ser.element_from_dict(g, _load_json(args.element_b))
    payload = ser.element_to_dict(u * v)
    return payload, ser.canonical_dumps(payload).rstrip("\n")


def _cmd_coproduct(args):
    g = _load_graph(args)
    u = ser.element_from_dict(g, _load_json(args.element))
    payload = ser.tensor_to_dict(coproduct(u))
    return payload, ser.canonical_dumps(payload).rstrip("\n")


def _cmd_antipode(args):
    g = _load_graph(args)
    u = ser.element_from_dict(g, _load_json(args.element))
    payload = ser.element_to_dict(antipode(u))
    return payload, ser.canonical_dumps(payload).rstrip("\n")


def _cmd_hopf_check(args):
    g = _load_graph(args)
    base = _resolve_base(g, args.base)
    report = hopf_axiom_report(g, args.max_degree, base=base,
                               loop_length_bound=args.loop_bound)
    payload = _json_safe(report)
    lines = [f"{name}: {'ok' if entry['passed'] else 'FAIL'}"
             for name, entry in sorted(report["axioms"].items())]
    lines.append("all passed" if report["all_passed"] else "FAILURES FOUND")
    return payload, "\n".join(lines)


def _cmd_closed_forms(args):
    g = _load_graph(args)
    if args.method == "both":
        bases = {m: closed_one_forms(g, m) for m in ("kernel", "patterns")}
        n = len(g.arrows)
        agree = span_equal([f.vector() for f in bases["kernel"]],
                           [f.vector() for f in bases["patterns"]], n)
        payload = {"method": "both",
                   "bases": {m: [ser.one_form_to_dict(f) for f in fs]
                             for m, fs in bases.items()},
                   "dimensions": {m: len(fs) for m, fs in bases.items()},
                   "agree": agree}
        text = (f"kernel dimension {len(bases['kernel'])}, pattern dimension "
                f"{len(bases['patterns'])}, agree: {'true' if agree else 'false'}")
    else:
        basis = closed_one_forms(g, args.method)
        payload = {"method": args.method,
                   "basis": [ser.one_form_to_dict(f) for f in basis],
                   "dimension": len(basis)}
        text = f"dimension {len(basis)}"
    return payload, text


def _cmd_omega2(args):
    g = _load_graph(args)
    basis = omega2_basis(g)
    payload = {"basis": [ser.two_chain_to_dict(c) for c in basis],
               "dimension": len(basis)}
    return payload, f"dimension {len(basis)}"


def _cmd_order(args):
    g = _load_graph(args)
    p = _load_path(g, args.path)
    k = order(p, args.max_degree)
    if k is None:
        payload = {"order": None, "max_degree": args.max_degree,
                   "lower_bound": args.max_degree + 1}
        text = f">= {args.max_degree + 1}"
    else:
        payload = {"order": k, "max_degree": args.max_degree}
        text = str(k)
    return payload, text


def _move_to_dict(move) -> dict:
    return {"kind": move.kind,
            "direction": move.direction,
            "position": move.position,
            "before": {"vertices": list(move.before[0]),
                       "orientations": list(move.before[1])},
            "after": {"vertices": list(move.after[0]),
                      "orientations": list(move.after[1])}}


def _cmd_homotopy(args):
    g = _load_graph(args)
    a = _load_path(g, args.loop_a)
    b = _load_path(g, args.loop_b)
    verdict = homotopic_loops(a, b, length_bound=args.length_bound,
                              depth_bound=args.depth_bound)
    payload = {"status": verdict.status,
               "length_bound": verdict.length_bound,
               "depth_bound": verdict.depth_bound,
               "certificate": None,
               "invariant": None,
               "values": None}
    if verdict.certificate is not None:
        cert = verdict.certificate
        payload["certificate"] = {"start": ser.path_to_dict(cert.start),
                                  "moves": [_move_to_dict(m) for m in cert.moves],
                                  "end": ser.path_to_dict(cert.end)}
        text = f"homotopic ({len(cert.moves)} move(s))"
    elif verdict.status == "certified-no":
        payload["invariant"] = ser.element_to_dict(verdict.invariant)
        payload["values"] = [ser.format_rational(v) for v in verdict.values]
        text = (f"not homotopic: invariant values "
                f"{payload['values'][0]} vs {payload['values'][1]}")
    else:
        text = "unknown (search bounds exhausted)"
    return payload, text


def _cmd_pi1(args):
    g = _load_graph(args)
    base = _resolve_base(g, args.base)
    if base is None:
        raise GraphError("a base vertex is required (use --base or a based digraph)")
    result = pi1_candidates(g, base, args.degree, length_bound=args.length_bound)
    payload = {"base": base,
               "degree_bound": result.degree_bound,
               "length_bound": result.length_bound,
               "candidates": [{"element": ser.element_to_dict(c.element)["element"],
                               "certified": c.certified}
                              for c in result.candidates],
               "invariant_kernel": [ser.element_to_dict(u)["element"]
                                    for u in result.invariant_kernel]}
    certified = sum(1 for c in result.candidates if c.certified)
    text = (f"{len(result.candidates)} candidate(s), {certified} certified, "
            f"invariant kernel dimension {len(result.invariant_kernel)}")
    return payload, text


def _cmd_change_base(args):
    g = _load_graph(args)
    gamma = _load_path(g, args.path)
    u = ser.element_from_dict(g, _load_json(args.element))
    payload = ser.element_to_dict(change_base_point(gamma, u))
    return payload, ser.canonical_dumps(payload).rstrip("\n")


def _cmd_volume(args):
    try:
        seq = [int(part) for part in args.seq.split(",") if part.strip()]
    except ValueError as exc:
        raise PathintError(f"malformed index sequence {args.seq!r}") from exc
    value = volume_number(seq)
    return {"value": str(value)}, str(value)


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text",
                        help="output format (default: text)")

    parser = argparse.ArgumentParser(
        prog="pathint",
        description="Exact iterated path integrals on directed graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, handler, help_text, **flags):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for flag, kwargs in flags.items():
            p.add_argument("--" + flag.replace("_", "-"), **kwargs)
        p.set_defaults(handler=handler)
        return p

    graph = {"required": True, "help": "digraph file (JSON or DOT)"}
    path = {"required": True, "help": "path JSON file"}
    element = {"required": True, "help": "algebra element JSON file"}

    cmd("validate", _cmd_validate, "check a digraph file", graph=graph)
    cmd("integrate", _cmd_integrate, "iterated integral of a word over a path",
        graph=graph, path=path,
        word={"required": True, "help": "word JSON file"})
    cmd("pair", _cmd_pair, "pair an algebra element with a path",
        graph=graph, element=element, path=path)
    cmd("reduce", _cmd_reduce, "elementary reduction of a path",
        graph=graph, path=path)
    cmd("equiv", _cmd_equiv, "decide elementary equivalence of two paths",
        graph=graph,
        path_a={"required": True, "help": "first path JSON file"},
        path_b={"required": True, "help": "second path JSON file"})
    cmd("shuffle", _cmd_shuffle, "shuffle product of two elements",
        graph=graph,
        element_a={"required": True, "help": "first element JSON file"},
        element_b={"required": True, "help": "second element JSON file"})
    cmd("coproduct", _cmd_coproduct, "deconcatenation coproduct",
        graph=graph, element=element)
    cmd("antipode", _cmd_antipode, "signed-reversal antipode",
        graph=graph, element=element)
    cmd("hopf-check", _cmd_hopf_check, "verify the Hopf axioms up to a degree",
        graph=graph,
        max_degree={"type": int, "default": 2,
                    "help": "degree bound (default: 2)"},
        base={"default": None, "help": "base vertex for the dual pairing laws"},
        loop_bound={"type": int, "default": 8,
                    "help": "loop length bound for dual laws (default: 8)"})
    cmd("closed-forms", _cmd_closed_forms, "basis of closed 1-forms",
        graph=graph,
        method={"choices": ("kernel", "patterns", "both"), "default": "kernel",
                "help": "construction method (default: kernel)"})
    cmd("omega2", _cmd_omega2, "basis of the 2-chain space", graph=graph)
    cmd("order", _cmd_order, "order of a path up to a degree bound",
        graph=graph, path=path,
        max_degree={"type": int, "default": 4,
                    "help": "search bound (default: 4)"})
    cmd("homotopy", _cmd_homotopy, "decide whether two loops are homotopic",
        graph=graph,
        loop_a={"required": True, "help": "first loop JSON file"},
        loop_b={"required": True, "help": "second loop JSON file"},
        length_bound={"type": int, "default": 12,
                      "help": "max intermediate loop length (default: 12)"},
        depth_bound={"type": int, "default": 8,
                     "help": "max search depth per side (default: 8)"})
    cmd("pi1", _cmd_pi1, "homotopy-invariant functional candidates",
        graph=graph,
        base={"default": None, "help": "base vertex"},
        degree={"type": int, "required": True, "help": "word degree bound"},
        length_bound={"type": int, "default": 6,
                      "help": "loop/move sampling bound (default: 6)"})
    cmd("change-base", _cmd_change_base, "transport a functional along a path",
        graph=graph, path=path, element=element)
    cmd("volume", _cmd_volume, "volume number of an index sequence",
        seq={"required": True, "help": "comma-separated indices, e.g. 5,5"})
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        payload, text = args.handler(args)
    except PathintError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        sys.stdout.write(ser.canonical_dumps(payload))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
