"""Command-line front end.  Every subcommand prints one JSON document.

Exit status: 0 on success, 1 with ``{"error": code, "detail": ...}`` on a
domain or input error, 2 on usage errors.
"""

import argparse
import json
import sys
from pathlib import Path

from . import algebra as alg_mod
from . import catalog
from .classify import (
    OrientationCoefficients,
    check_bipartite_obstruction,
    construct_vertex_fixing_iso,
    decide_equivalent,
    decide_isomorphic,
    orientation_to_coefficients,
    verify_homomorphism,
)
from .coefficients import (
    CohomologyClass,
    SkewCoefficients,
    class_of,
    construct_from_class,
    cycle_product,
    format_scalar,
    ones,
    path_product,
)
from .cycles import fundamental_basis
from .errors import SkewZigzagError
from .graphs import (
    Walk,
    double_quiver,
    enumerate_automorphisms,
    is_bipartite,
    is_connected,
    parse_graph,
)


class InputError(SkewZigzagError):
    code = "InputError"


def _read_json(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None


def load_graph(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(text)


def load_coeffs(graph, spec):
    """``ones``, ``orientation:<file>`` or a coefficients JSON file."""
    if spec == "ones":
        return ones(graph)
    if spec.startswith("orientation:"):
        omega = OrientationCoefficients.from_json(graph, _read_json(spec.partition(":")[2]))
        return orientation_to_coefficients(omega)
    return SkewCoefficients.from_json(graph, _read_json(spec))


def load_element(algebra, spec):
    if spec in algebra.index or spec.startswith("["):
        return algebra.element(spec)
    return algebra.element(_read_json(spec))


# subcommands

def cmd_graph_info(args):
    g = load_graph(args.graph)
    parity = is_bipartite(g)
    out = {
        "vertices": list(g.vertices),
        "edges": len(g.edges),
        "connected": is_connected(g),
        "bipartite": parity.bipartite,
        "degrees": {x: g.degree(x) for x in g.vertices},
        "automorphisms": len(enumerate_automorphisms(g)),
    }
    if parity.bipartite:
        out["parts"] = [list(p) for p in parity.parts]
    else:
        out["odd_cycle"] = list(parity.odd_cycle.vertices)
    return out


def cmd_graph_dot(args):
    g = load_graph(args.graph)
    return double_quiver(g).to_dot() if args.double else g.to_dot()


def cmd_cycles(args):
    g = load_graph(args.graph)
    return fundamental_basis(g).to_json()


def cmd_coeffs_validate(args):
    g = load_graph(args.graph)
    return load_coeffs(g, args.coeffs).to_json()


def cmd_coeffs_class(args):
    g = load_graph(args.graph)
    v = load_coeffs(g, args.coeffs)
    f = class_of(v)
    return {"class": f.to_json(), "basis": f.basis.to_json()}


def cmd_coeffs_from_class(args):
    g = load_graph(args.graph)
    f = CohomologyClass.from_json(fundamental_basis(g), _read_json(args.cls))
    return construct_from_class(f).to_json()


def cmd_algebra_build(args):
    g = load_graph(args.graph)
    a = alg_mod.build(g, load_coeffs(g, args.coeffs))
    if args.table_csv:
        Path(args.table_csv).write_text(a.table_csv())
    return a.to_json()


def cmd_algebra_mul(args):
    g = load_graph(args.graph)
    a = alg_mod.build(g, load_coeffs(g, args.coeffs))
    return alg_mod.multiply(load_element(a, args.left), load_element(a, args.right)).to_json()


def cmd_algebra_gram(args):
    g = load_graph(args.graph)
    a = alg_mod.build(g, load_coeffs(g, args.coeffs))
    return {
        "basis": a.labels(),
        "gram": [[format_scalar(q) for q in row] for row in alg_mod.gram(a)],
        "report": alg_mod.check_frobenius(a).to_json(),
    }


def _pair(args):
    g = load_graph(args.graph)
    return g, load_coeffs(g, args.left), load_coeffs(g, args.right)


def cmd_classify_equiv(args):
    g, v, u = _pair(args)
    verdict = decide_equivalent(v, u)
    out = {"equivalent": verdict.equivalent}
    if verdict.equivalent:
        scaling = construct_vertex_fixing_iso(v, u)
        out["edge_scaling"] = scaling.to_json()
        out["verified"] = verify_homomorphism(
            scaling, alg_mod.build(g, v), alg_mod.build(g, u)).ok
    else:
        out["obstruction"] = verdict.obstruction.to_json()
    return out


def cmd_classify_iso(args):
    g, v, u = _pair(args)
    cert = decide_isomorphic(v, u)
    out = cert.to_json()
    if cert.is_isomorphic:
        out["verified"] = verify_homomorphism(
            cert, alg_mod.build(g, v), alg_mod.build(g, u)).ok
    return out


def cmd_orientation_induce(args):
    g = load_graph(args.graph)
    omega = OrientationCoefficients.from_json(g, _read_json(args.orientation))
    return orientation_to_coefficients(omega).to_json()


def cmd_obstruction_check(args):
    g = load_graph(args.graph)
    return check_bipartite_obstruction(g, seed=args.seed).to_json()


def cmd_paper_example(args):
    v = catalog.kite_family()
    p1, p2 = Walk(catalog.KITE_P1), Walk(catalog.KITE_P2)
    p12 = p1.concat(p2)
    return {
        "graph": v.graph.to_json(),
        "P1": list(p1.vertices),
        "P2": list(p2.vertices),
        "path_P1": format_scalar(path_product(v, p1)),
        "path_P2": format_scalar(path_product(v, p2)),
        "path_P1P2": format_scalar(path_product(v, p12)),
        "cycle_P1": format_scalar(cycle_product(v, p1)),
        "cycle_P2": format_scalar(cycle_product(v, p2)),
        "cycle_P1P2": format_scalar(cycle_product(v, p12)),
    }


def build_parser():
    parser = argparse.ArgumentParser(
        prog="skewzigzag", description="Skew-zigzag algebras of graphs, exactly over Q.")
    parser.add_argument("-o", "--output", help="write the result here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, graph=True, coeffs=False):
        p = sub.add_parser(name, help=help_text)
        if graph:
            p.add_argument("--graph", required=True, help="graph JSON (or V={..}, E={..}) file")
        if coeffs:
            p.add_argument("--coeffs", default="ones",
                           help="coefficients JSON file, 'ones', or 'orientation:<file>'")
        p.set_defaults(func=func)
        return p

    add("graph-info", cmd_graph_info, "connectivity, bipartiteness, degrees, |Aut|")
    add("graph-dot", cmd_graph_dot, "DOT drawing of the graph or its double quiver") \
        .add_argument("--double", action="store_true", help="draw the double quiver")
    add("cycles", cmd_cycles, "fundamental cycle basis")
    add("coeffs-validate", cmd_coeffs_validate, "check and complete a coefficient family",
        coeffs=True)
    add("coeffs-class", cmd_coeffs_class, "cohomology class of a family", coeffs=True)
    add("coeffs-from-class", cmd_coeffs_from_class, "a family realising a class") \
        .add_argument("--class", dest="cls", required=True, help="class JSON file")
    add("algebra-build", cmd_algebra_build, "dimension and basis of A_v(G)", coeffs=True) \
        .add_argument("--table-csv", help="also write the multiplication table here")
    p = add("algebra-mul", cmd_algebra_mul, "multiply two elements", coeffs=True)
    p.add_argument("--left", required=True, help="basis label or element JSON file")
    p.add_argument("--right", required=True, help="basis label or element JSON file")
    add("algebra-gram", cmd_algebra_gram, "trace form and Frobenius report", coeffs=True)
    for name, func, text in (
            ("classify-equiv", cmd_classify_equiv, "vertex-fixing isomorphism test"),
            ("classify-iso", cmd_classify_iso, "graded isomorphism test")):
        p = add(name, func, text)
        p.add_argument("--left", required=True, help="coefficients for the first algebra")
        p.add_argument("--right", required=True, help="coefficients for the second algebra")
    add("orientation-induce", cmd_orientation_induce, "family induced by orientation coefficients") \
        .add_argument("--orientation", required=True, help="orientation JSON file")
    add("obstruction-check", cmd_obstruction_check,
        "zigzag algebra versus every orientation-induced algebra") \
        .add_argument("--seed", type=int, default=0, help="seed for sampled orientations")
    add("paper-example", cmd_paper_example, "the four-vertex worked example", graph=False)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
        status = 0
    except SkewZigzagError as exc:
        result = {"error": exc.code, "detail": str(exc)}
        status = 1
    text = result if isinstance(result, str) else json.dumps(result, indent=2) + "\n"
    if args.output and status == 0:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
