"""Command-line interface: ``compute``, ``verify`` and ``ops``.

Exit codes: 0 success, 1 verification failures, 2 argument errors,
3 parse errors, 4 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import classic, complexes
from .corpus import DEFAULT_PROBABILITIES, random_corpus
from .errors import CapacityError, DomainError, GraphError, ParseError
from .graph import Graph, cartesian_product, complement, disjoint_union, expansion, join
from .graphio import iter_graph6_file, load_graph, write_edge_list, write_graph6
from .identities import DEFAULT_KINDS, IdentityKind, run_suite
from .polynomial import bivariate_text, bivariate_to_json, to_json, to_latex, to_text

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARSE, EXIT_CAPACITY = 0, 1, 2, 3, 4

POLYNOMIALS = ("N", "Ni", "Nc", "Nd", "I", "D", "S", "Q")

LATEX_NAMES = {
    "N": "N(G,x)",
    "Ni": "N^{(i)}(G,x)",
    "Nc": "N^{(c)}(G,x)",
    "Nd": "N^{(d)}(G,x)",
    "I": "I(G,x)",
    "D": "D(G,x)",
    "S": "S(G,x)",
    "Q": "Q(G;x,y)",
}

_COMPLEX = {
    "N": complexes.neighborhood_polynomial,
    "Ni": complexes.independent_neighborhood_polynomial,
    "Nc": complexes.connected_neighborhood_polynomial,
    "Nd": complexes.disconnected_neighborhood_polynomial,
}


class UsageError(Exception):
    pass


def compute_polynomial(G: Graph, name: str, method: str):
    """Return ``(polynomial, method_used)`` for one polynomial name."""
    if name in _COMPLEX:
        if G.n == 0:
            raise DomainError("neighborhood polynomials are undefined for the graph of order 0")
        used = complexes.resolve_method(G, method)
        return _COMPLEX[name](G, used), used
    if name == "I":
        used = "oracle" if method == "oracle" else "recursive"
        return classic.independence_polynomial(G, used), used
    if name == "D":
        used = "oracle" if method == "oracle" else "via_complement"
        return classic.domination_polynomial(G, used), used
    if name == "S":
        used = "oracle" if method == "oracle" else "growth"
        return classic.subgraph_polynomial(G, used), used
    if name == "Q":
        return classic.subgraph_component_polynomial(G), "oracle"
    raise UsageError(f"unknown polynomial {name!r}; choose from {','.join(POLYNOMIALS)}")


def _render(name: str, poly, fmt: str, graph6: str, method: str) -> str:
    bivariate = name == "Q"
    if fmt == "json":
        coeffs = bivariate_to_json(poly) if bivariate else to_json(poly)
        return json.dumps(
            {"graph": graph6, "polynomial_name": name, "coefficients": coeffs, "method": method}
        )
    if fmt == "latex":
        body = bivariate_text(poly, latex=True) if bivariate else to_latex(poly)
        return f"\\({LATEX_NAMES[name]} = {body}\\)"
    body = bivariate_text(poly) if bivariate else to_text(poly)
    return f"{name} = {body}"


def cmd_compute(args, out: TextIO) -> int:
    doc = load_graph(args.graph)
    names = [w.strip() for w in args.which.split(",") if w.strip()]
    for name in names:
        if name not in POLYNOMIALS:
            raise UsageError(f"unknown polynomial {name!r}; choose from {','.join(POLYNOMIALS)}")
    graph6 = write_graph6(doc.graph).decode()
    for name in names:
        poly, used = compute_polynomial(doc.graph, name, args.method)
        print(_render(name, poly, args.format, graph6, used), file=out)
    return EXIT_OK


def parse_random_spec(spec: str) -> dict:
    """Parse ``n=<int|lo-hi>,count=<int>,p=<float>,seed=<int>``."""
    fields = {}
    for part in filter(None, spec.split(",")):
        key, sep, value = part.partition("=")
        if not sep:
            raise UsageError(f"malformed random corpus field {part!r}")
        fields[key.strip()] = value.strip()
    unknown = set(fields) - {"n", "count", "p", "seed"}
    if unknown:
        raise UsageError(f"unknown random corpus field(s): {', '.join(sorted(unknown))}")
    try:
        lo, _, hi = fields.get("n", "10").partition("-")
        n_min, n_max = int(lo), int(hi or lo)
        count = int(fields.get("count", "100"))
        probs = (float(fields["p"]),) if "p" in fields else DEFAULT_PROBABILITIES
        seed = int(fields.get("seed", "0"))
    except ValueError as exc:
        raise UsageError(f"bad random corpus spec {spec!r}: {exc}") from None
    if not 1 <= n_min <= n_max or count < 0 or not all(0 <= p <= 1 for p in probs):
        raise UsageError(f"random corpus spec out of range: {spec!r}")
    return {"count": count, "n_min": n_min, "n_max": n_max, "probabilities": probs, "seed": seed}


def _kinds(raw: str) -> list[IdentityKind]:
    kinds: list[IdentityKind] = []
    for tag in filter(None, (t.strip() for t in raw.split(","))):
        if tag == "all":
            kinds.extend(DEFAULT_KINDS)
        else:
            try:
                kinds.append(IdentityKind.parse(tag))
            except GraphError as exc:
                raise UsageError(str(exc)) from None
    return kinds


def cmd_verify(args, out: TextIO) -> int:
    kinds = _kinds(args.identity)
    if args.corpus:
        corpus = list(iter_graph6_file(args.corpus))
        seed = args.seed if args.seed is not None else 0
    else:
        r = parse_random_spec(args.random)
        corpus = random_corpus(r["count"], r["n_max"], r["seed"], r["probabilities"], r["n_min"])
        seed = args.seed if args.seed is not None else r["seed"]
    reports, summary = run_suite(
        corpus, kinds, pairs=args.pairs, seed=seed, method=args.method, max_order=args.max_order
    )
    for rep in reports:
        if args.format == "json":
            print(json.dumps(rep.to_record()), file=out)
        else:
            residual = "-" if rep.residual is None else to_text(rep.residual)
            print(f"{rep.verdict.upper():12} {rep.identity.name} [{' '.join(rep.inputs)}] residual={residual}",
                  file=out)
    if args.format == "json":
        print(json.dumps({"summary": summary.to_record(), "failures": summary.failures}), file=out)
    else:
        for tag, counts in summary.to_record().items():
            print(f"# {tag}: " + ", ".join(f"{k}={v}" for k, v in counts.items()), file=out)
    return EXIT_FAIL if summary.failures else EXIT_OK


def apply_op(op: str, graphs: Sequence[Graph]) -> Graph:
    name, _, arg = op.partition(":")
    unary = {"complement", "expand"}
    binary = {"union": disjoint_union, "join": join, "cartesian": cartesian_product}
    if name not in unary and name not in binary:
        raise UsageError(f"unknown op {op!r}")
    want = 1 if name in unary else 2
    if len(graphs) != want:
        raise UsageError(f"op {name} takes {want} input(s), got {len(graphs)}")
    if name == "complement":
        if arg:
            raise UsageError("complement takes no argument")
        return complement(graphs[0])
    if name == "expand":
        try:
            r = int(arg)
        except ValueError:
            raise UsageError(f"expand needs an integer factor, e.g. expand:2 (got {op!r})") from None
        return expansion(graphs[0], r)
    return binary[name](*graphs)


def cmd_ops(args, out: TextIO) -> int:
    graphs = [load_graph(spec).graph for spec in args.inputs]
    result = apply_op(args.op, graphs)
    if args.out_format == "graph6":
        text = write_graph6(result).decode() + "\n"
    else:
        text = write_edge_list(result)
    if args.output == "-":
        out.write(text)
    else:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nbpoly", description="Neighborhood complex polynomials and identity checks."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute graph polynomials")
    p.add_argument("--graph", required=True, help="graph file (graph6 / edge list) or family:name:args")
    p.add_argument("--which", default="N,Ni,Nc,Nd", help=f"comma list from {','.join(POLYNOMIALS)}")
    p.add_argument("--method", choices=complexes.METHODS, default="auto")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check identities over a corpus")
    p.add_argument("--identity", required=True, help="identity tag, comma list, or 'all'")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--corpus", help="graph6 file, one graph per line")
    src.add_argument("--random", help="n=<int|lo-hi>,count=<int>,p=<float>,seed=<int>")
    p.add_argument("--pairs", type=int, default=200, help="sampled pairs per pair identity")
    p.add_argument("--seed", type=int, default=None, help="pair sampling seed")
    p.add_argument("--method", choices=complexes.METHODS, default="auto")
    p.add_argument("--max-order", type=int, default=16,
                   help="largest composite (union/join/product/expansion) order to test")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ops", help="apply a graph operation")
    p.add_argument("--op", required=True, help="complement | union | join | cartesian | expand:r")
    p.add_argument("--inputs", nargs="+", required=True, help="graph files or family expressions")
    p.add_argument("--output", required=True, help="output path, or - for stdout")
    p.add_argument("--out-format", choices=("graph6", "edgelist"), default="graph6")
    p.set_defaults(func=cmd_ops)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except CapacityError as exc:
        print(f"nbpoly: capacity error: {exc}", file=err)
        return EXIT_CAPACITY
    except ParseError as exc:
        print(f"nbpoly: parse error: {exc}", file=err)
        return EXIT_PARSE
    except (UsageError, DomainError, GraphError) as exc:
        print(f"nbpoly: error: {exc}", file=err)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
