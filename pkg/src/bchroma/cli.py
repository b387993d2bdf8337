"""Command-line driver: solve, count, construct, verify, export."""

import argparse
import json
import os
import sys
from dataclasses import dataclass

from bchroma import coloring as col
from bchroma import constructions as cons
from bchroma import formulas
from bchroma import graph as gr
from bchroma import solver
from bchroma.operators import cartesian_product, line_graph, total_graph, graph_power

SCHEMA = "bchroma/1"
EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


# --- GraphSpec grammar ------------------------------------------------------

@dataclass(frozen=True)
class GraphSpec:
    """Parsed spec expression: star:N, complete:N, path:N, cycle:N,
    prod(A,B), line(A), total(A), pow(A,K), file:PATH."""

    kind: str
    args: tuple

    def __str__(self):
        if self.kind in ("star", "complete", "path", "cycle"):
            return "%s:%d" % (self.kind, self.args[0])
        if self.kind == "file":
            return "file:%s" % self.args[0]
        if self.kind == "pow":
            return "pow(%s,%d)" % (self.args[0], self.args[1])
        return "%s(%s)" % (self.kind, ",".join(str(a) for a in self.args))

    def build(self):
        if self.kind == "star":
            return gr.star(self.args[0])
        if self.kind == "complete":
            return gr.complete(self.args[0])
        if self.kind == "path":
            return gr.path(self.args[0])
        if self.kind == "cycle":
            return gr.cycle(self.args[0])
        if self.kind == "file":
            return _load_graph_file(self.args[0])
        if self.kind == "prod":
            return cartesian_product(self.args[0].build(), self.args[1].build())
        if self.kind == "line":
            return line_graph(self.args[0].build())
        if self.kind == "total":
            return total_graph(self.args[0].build())
        if self.kind == "pow":
            return graph_power(self.args[0].build(), self.args[1])
        raise ValueError("unknown spec kind %r" % self.kind)


def _load_graph_file(path):
    with open(path) as fh:
        text = fh.read()
    if path.endswith(".json"):
        return gr.from_json_text(text)
    return gr.from_edge_list_text(text)


class SpecError(ValueError):
    def __init__(self, message, pos):
        super().__init__("%s (at position %d)" % (message, pos))
        self.pos = pos


_GENERATORS = ("star", "complete", "path", "cycle")
_OPERATORS = {"prod": 2, "line": 1, "total": 1, "pow": 2}


def parse_spec(text):
    spec, pos = _parse_spec(text, 0)
    while pos < len(text) and text[pos].isspace():
        pos += 1
    if pos != len(text):
        raise SpecError("trailing input %r" % text[pos:], pos)
    return spec


def _parse_spec(text, pos):
    while pos < len(text) and text[pos].isspace():
        pos += 1
    start = pos
    while pos < len(text) and (text[pos].isalnum() or text[pos] == "_"):
        pos += 1
    name = text[start:pos]
    if not name:
        raise SpecError("expected a graph spec", start)
    if pos < len(text) and text[pos] == ":":
        pos += 1
        if name == "file":
            end = pos
            while end < len(text) and text[end] not in ",)":
                end += 1
            path = text[pos:end].strip()
            if not path:
                raise SpecError("empty file path", pos)
            return GraphSpec("file", (path,)), end
        if name not in _GENERATORS:
            raise SpecError("unknown generator %r" % name, start)
        num, pos = _parse_int(text, pos)
        return GraphSpec(name, (num,)), pos
    if pos < len(text) and text[pos] == "(":
        if name not in _OPERATORS:
            raise SpecError("unknown operator %r" % name, start)
        pos += 1
        args = []
        first, pos = _parse_spec(text, pos)
        args.append(first)
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos < len(text) and text[pos] == ",":
                pos += 1
                if name == "pow" and len(args) == 1:
                    num, pos = _parse_int(text, pos)
                    args.append(num)
                else:
                    sub, pos = _parse_spec(text, pos)
                    args.append(sub)
            elif pos < len(text) and text[pos] == ")":
                pos += 1
                break
            else:
                raise SpecError("expected ',' or ')'", pos)
        if len(args) != _OPERATORS[name]:
            raise SpecError("%s takes %d argument(s), got %d"
                            % (name, _OPERATORS[name], len(args)), start)
        return GraphSpec(name, tuple(args)), pos
    raise SpecError("expected ':' or '(' after %r" % name, pos)


def _parse_int(text, pos):
    while pos < len(text) and text[pos].isspace():
        pos += 1
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if start == pos:
        raise SpecError("expected an integer", start)
    return int(text[start:pos]), pos


# --- shared helpers ---------------------------------------------------------

def _default_max_nodes():
    env = os.environ.get("BCHROMA_MAX_NODES")
    if env:
        return int(env)
    return solver.DEFAULT_MAX_NODES


def _add_budget_flags(p):
    p.add_argument("--max-nodes", type=int, default=None,
                   help="search node budget (env BCHROMA_MAX_NODES overrides"
                        " the built-in default)")
    p.add_argument("--max-seconds", type=float, default=solver.DEFAULT_MAX_SECONDS)
    p.add_argument("--workers", type=int, default=1)


def _budget(args):
    max_nodes = args.max_nodes if args.max_nodes is not None else _default_max_nodes()
    return solver.SolverBudget(max_nodes=max_nodes, max_seconds=args.max_seconds)


def _emit(obj):
    print(json.dumps(obj, indent=2))


# --- commands ---------------------------------------------------------------

def cmd_phi(args):
    g = args.spec.build()
    try:
        report = solver.b_chromatic_number(g, budget=_budget(args),
                                           workers=args.workers)
    except solver.BudgetExceeded as exc:
        _emit({"schema": SCHEMA, "command": "phi", "spec": str(args.spec),
               "error": "budget exceeded", "nodes": exc.nodes,
               "partial": exc.partial})
        return EXIT_BUDGET
    obj = {"schema": SCHEMA, "command": "phi", "spec": str(args.spec)}
    obj.update(report.to_json_obj(g))
    _emit(obj)
    return EXIT_OK


def _scalar_command(args, name, fn):
    g = args.spec.build()
    _emit({"schema": SCHEMA, "command": name, "spec": str(args.spec),
           "value": fn(g)})
    return EXIT_OK


def cmd_chi(args):
    return _scalar_command(args, "chi",
                           lambda g: solver.chromatic_number(g, budget=_budget(args)))


def cmd_omega(args):
    return _scalar_command(args, "omega", solver.clique_number)


def cmd_mdegree(args):
    return _scalar_command(args, "mdegree", solver.m_degree)


def cmd_count(args):
    g = args.spec.build()
    try:
        report = solver.count_b_colorings(g, args.k, budget=_budget(args),
                                          workers=args.workers,
                                          factor_colors=not args.direct)
    except solver.BudgetExceeded as exc:
        _emit({"schema": SCHEMA, "command": "count", "spec": str(args.spec),
               "k": args.k, "error": "budget exceeded", "nodes": exc.nodes,
               "partial": exc.partial})
        return EXIT_BUDGET
    obj = {"schema": SCHEMA, "command": "count", "spec": str(args.spec)}
    obj.update(report.to_json_obj())
    _emit(obj)
    return EXIT_OK


_THEOREMS = {
    "thm3.1": ("star product, m+2 colors", 2),
    "thm3.2": ("line graph of the star product, m+n colors", 2),
    "thm3.3": ("total graph of the star product", 2),
    "thm4.2": ("power of the star product", 3),
    "thm4.4-grid": ("published rook grid", 1),
}


def cmd_construct(args):
    name = args.theorem
    if name not in _THEOREMS:
        print("unknown theorem id %r; choose from %s"
              % (name, ", ".join(sorted(_THEOREMS))), file=sys.stderr)
        return EXIT_USAGE
    arity = _THEOREMS[name][1]
    params = args.params
    if len(params) != arity:
        print("%s takes %d parameter(s), got %d" % (name, arity, len(params)),
              file=sys.stderr)
        return EXIT_USAGE
    if name == "thm4.4-grid":
        try:
            grid = cons.rook_grid_coloring(params[0])
        except ValueError as exc:
            print("precondition failed: %s" % exc, file=sys.stderr)
            return EXIT_USAGE
        obj = {"schema": SCHEMA, "command": "construct", "theorem": name,
               "params": params, "valid": grid.b_error() is None}
        obj.update(grid.to_json_obj())
        _emit(obj)
        print(grid.to_text(), end="", file=sys.stderr)
        return EXIT_OK
    builders = {
        "thm3.1": (cons.color_star_product, cons.star_product),
        "thm3.2": (cons.color_line_star_product, cons.line_star_product),
        "thm3.3": (cons.color_total_star_product, cons.total_star_product),
        "thm4.2": (cons.color_power_star_product, cons.power_star_product),
    }
    build_cert, build_graph = builders[name]
    try:
        cert = build_cert(*params)
        g = build_graph(*params)
    except ValueError as exc:
        print("precondition failed: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    err = col.certificate_error(g, cert)
    obj = {"schema": SCHEMA, "command": "construct", "theorem": name,
           "params": params, "k": cert.coloring.k, "valid": err is None,
           "certificate": col.coloring_to_json_obj(g, cert)}
    if err:
        obj["error"] = err
    _emit(obj)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(col.to_dot(g, cert.coloring))
    return EXIT_OK if err is None else EXIT_MISMATCH


def cmd_export(args):
    g = args.spec.build()
    if args.format == "edges":
        out = gr.to_edge_list_text(g)
    elif args.format == "json":
        obj = {"schema": SCHEMA}
        obj.update(gr.to_json_obj(g))
        out = json.dumps(obj, indent=2) + "\n"
    else:
        coloring = None
        if args.coloring:
            with open(args.coloring) as fh:
                loaded = col.coloring_from_json_obj(g, json.load(fh))
            coloring = (loaded.coloring if isinstance(loaded, col.BColoringCertificate)
                        else loaded)
        out = col.to_dot(g, coloring)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


# --- verify -----------------------------------------------------------------

def _parse_range(text, default):
    if text is None:
        return default
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _agreement(formula, solver_value):
    if solver_value is None:
        return "budget"
    if formula.is_exact:
        return "match" if solver_value == formula.exact else "MISMATCH"
    return "bounds-contain" if formula.contains(solver_value) else "MISMATCH"


def _row(params, formula, solver_value, construction_k, cert_valid):
    if formula is None:
        formula_text = "-"
    elif formula.is_exact:
        formula_text = str(formula.exact)
    else:
        formula_text = "[%d,%d]" % (formula.lower, formula.upper)
    agreement = _agreement(formula, solver_value) if formula is not None else "match"
    if construction_k is not None and cert_valid is False:
        agreement = "MISMATCH"
    if (construction_k is not None and formula is not None
            and not formula.contains(construction_k)):
        agreement = "MISMATCH"
    return {"parameters": params, "formula": formula_text,
            "solver_value": solver_value if solver_value is not None else "budget",
            "construction_k": construction_k, "certificate_valid": cert_valid,
            "agreement": agreement}


def _solve_phi(g, budget, workers):
    try:
        return solver.b_chromatic_number(g, budget=budget, workers=workers).phi
    except solver.BudgetExceeded:
        return None


def _verify_thm31(args, budget):
    rows = []
    for m in _parse_range(args.m, [1, 2, 3, 4, 5]):
        for n in _parse_range(args.n, [1, 2, 3, 4, 5]):
            if n < m:
                continue
            formula = formulas.phi_star_product(n, m)
            phi = _solve_phi(cons.star_product(n, m), budget, args.workers)
            ck = valid = None
            if m >= 2:
                cert = cons.color_star_product(n, m)
                ck = cert.coloring.k
                valid = col.validate_certificate(cons.star_product(n, m), cert)
            rows.append(_row({"n": n, "m": m}, formula, phi, ck, valid))
    return rows


def _verify_thm32(args, budget):
    rows = []
    for m in _parse_range(args.m, [1, 2, 3]):
        for n in _parse_range(args.n, [1, 2, 3, 4]):
            if n < m:
                continue
            formula = formulas.phi_line_star_product(n, m)
            phi = _solve_phi(cons.line_star_product(n, m), budget, args.workers)
            cert = cons.color_line_star_product(n, m)
            valid = col.validate_certificate(cons.line_star_product(n, m), cert)
            rows.append(_row({"n": n, "m": m}, formula, phi, cert.coloring.k, valid))
    return rows


def _verify_thm33(args, budget):
    rows = []
    for m in _parse_range(args.m, [3]):
        for n in _parse_range(args.n, [4, 5]):
            if n < m or m < 3:
                continue
            formula = formulas.phi_total_star_product(n, m)
            phi = _solve_phi(cons.total_star_product(n, m), budget, args.workers)
            cert = cons.color_total_star_product(n, m)
            valid = col.validate_certificate(cons.total_star_product(n, m), cert)
            rows.append(_row({"n": n, "m": m}, formula, phi, cert.coloring.k, valid))
    return rows


def _verify_thm41(args, budget):
    rows = []
    for n in _parse_range(args.n, [1, 2, 3, 4, 5]):
        for k in _parse_range(args.k, [1, 2, 3]):
            formula = formulas.phi_star_power(n, k)
            phi = _solve_phi(graph_power(gr.star(n), k), budget, args.workers)
            rows.append(_row({"n": n, "k": k}, formula, phi, None, None))
    return rows


def _verify_thm42(args, budget):
    rows = []
    for m in _parse_range(args.m, [2, 3]):
        for n in _parse_range(args.n, [2, 3, 4]):
            if n < m:
                continue
            for k in _parse_range(args.k, [2]):
                formula = formulas.phi_star_product_power(n, m, k)
                phi = _solve_phi(cons.power_star_product(n, m, k), budget,
                                 args.workers)
                cert = cons.color_power_star_product(n, m, k)
                valid = col.validate_certificate(cons.power_star_product(n, m, k),
                                                 cert)
                rows.append(_row({"n": n, "m": m, "k": k}, formula, phi,
                                 cert.coloring.k, valid))
    return rows


def _verify_thm44(args, budget):
    rows = []
    for n in _parse_range(args.n, [3, 4, 5]):
        formula = formulas.phi_rook_bounds(n, 3)
        g = cartesian_product(gr.complete(n), gr.complete(3))
        phi = _solve_phi(g, budget, args.workers)
        grid = cons.rook_grid_coloring(n)
        valid = grid.b_error() is None
        rows.append(_row({"n": n, "m": 3}, formula, phi, grid.color_count(), valid))
    return rows


_REMARK41 = [(3, 3, 12), (4, 5, 11384), (5, 6, 570240)]


def _verify_remark41(args, budget):
    rows = []
    for n, k, expected in _REMARK41:
        g = cartesian_product(gr.complete(n), gr.complete(3))
        try:
            report = solver.count_b_colorings(g, k, budget=budget,
                                              workers=args.workers)
            count = report.count
        except solver.BudgetExceeded:
            count = None
        rows.append({"parameters": {"n": n, "m": 3, "k": k},
                     "formula": str(expected),
                     "solver_value": count if count is not None else "budget",
                     "construction_k": None, "certificate_valid": None,
                     "agreement": "budget" if count is None
                     else ("match" if count == expected else "MISMATCH")})
    return rows


def _verify_mdegree(args, budget):
    family = args.family
    if family is None:
        print("lemma-mdegree needs --family", file=sys.stderr)
        return None
    builders = {
        "star_product": cons.star_product,
        "line_star_product": cons.line_star_product,
        "total_star_product": cons.total_star_product,
        "power2": lambda n, m: cons.power_star_product(n, m, 2),
        "power3": lambda n, m: cons.power_star_product(n, m, 3),
    }
    if family not in builders:
        print("unknown family %r" % family, file=sys.stderr)
        return None
    rows = []
    lo = 3 if family == "total_star_product" else 2
    for m in _parse_range(args.m, list(range(lo, 7))):
        for n in _parse_range(args.n, list(range(lo, 7))):
            if n < m:
                continue
            predicted = formulas.m_degree_formula(family, n, m)
            actual = solver.m_degree(builders[family](n, m))
            rows.append({"parameters": {"n": n, "m": m},
                         "formula": str(predicted), "solver_value": actual,
                         "construction_k": None, "certificate_valid": None,
                         "agreement": "match" if predicted == actual
                         else "MISMATCH"})
    return rows


_SUITES = {
    "thm3.1": _verify_thm31,
    "thm3.2": _verify_thm32,
    "thm3.3": _verify_thm33,
    "thm4.1": _verify_thm41,
    "thm4.2": _verify_thm42,
    "thm4.4": _verify_thm44,
    "remark4.1": _verify_remark41,
    "lemma-mdegree": _verify_mdegree,
}


def cmd_verify(args):
    if args.suite not in _SUITES:
        print("unknown suite %r; choose from %s"
              % (args.suite, ", ".join(sorted(_SUITES))), file=sys.stderr)
        return EXIT_USAGE
    rows = _SUITES[args.suite](args, _budget(args))
    if rows is None:
        return EXIT_USAGE
    if args.json:
        _emit({"schema": SCHEMA, "command": "verify", "suite": args.suite,
               "rows": rows})
    else:
        header = ("parameters", "formula", "solver", "construction", "valid",
                  "agreement")
        table = [header]
        for r in rows:
            table.append((
                ",".join("%s=%s" % kv for kv in sorted(r["parameters"].items())),
                r["formula"], str(r["solver_value"]),
                str(r["construction_k"]) if r["construction_k"] is not None else "-",
                str(r["certificate_valid"]) if r["certificate_valid"] is not None
                else "-",
                r["agreement"]))
        widths = [max(len(row[i]) for row in table) for i in range(len(header))]
        for row in table:
            print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)))
    mismatches = sum(1 for r in rows if r["agreement"] == "MISMATCH")
    return EXIT_MISMATCH if mismatches else EXIT_OK


# --- entry point ------------------------------------------------------------

def _spec_arg(text):
    try:
        return parse_spec(text)
    except SpecError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser():
    top = argparse.ArgumentParser(
        prog="bchroma",
        description="b-chromatic numbers of star products and their "
                    "operator graphs")
    sub = top.add_subparsers(dest="command", required=True)

    for name, fn in (("phi", cmd_phi), ("chi", cmd_chi), ("omega", cmd_omega),
                     ("mdegree", cmd_mdegree)):
        p = sub.add_parser(name)
        p.add_argument("spec", type=_spec_arg)
        _add_budget_flags(p)
        p.set_defaults(fn=fn)

    p = sub.add_parser("count")
    p.add_argument("spec", type=_spec_arg)
    p.add_argument("k", type=int)
    p.add_argument("--direct", action="store_true",
                   help="enumerate every labeled assignment instead of "
                        "factoring out color permutations")
    _add_budget_flags(p)
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("construct")
    p.add_argument("theorem")
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--dot", metavar="FILE", help="also write Graphviz output")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("verify")
    p.add_argument("suite")
    p.add_argument("--n")
    p.add_argument("--m")
    p.add_argument("--k")
    p.add_argument("--family")
    p.add_argument("--json", action="store_true")
    _add_budget_flags(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("export")
    p.add_argument("spec", type=_spec_arg)
    p.add_argument("--format", choices=("dot", "json", "edges"), default="dot")
    p.add_argument("--coloring", metavar="FILE",
                   help="coloring JSON to render as fills (dot format)")
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(fn=cmd_export)
    return top


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
