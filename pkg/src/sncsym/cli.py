#!/usr/bin/env python3
"""
Command-line front end.

    sncsym enumerate --n 2 --m 2
    sncsym convert --to p "m[({0},{0,1},{2})]"
    sncsym convert --from m --to h --n 2 --m 1
    sncsym product "m[({0},{1})]" "m[({0},{1})]"
    sncsym project "e[({0},{0,2},{1,3})]"
    sncsym lift "h[(1;)]"
    sncsym inner --n 2 --m 1 --from p --to p
    sncsym mobius "({0},{0,1},{2})" --chains
    sncsym schur "(2,1;)" --positive
    sncsym kostka --n 3 --m 1 --kind 2
    sncsym verify --max-degree 4

Exit status is 0 on success, 1 on usage or input errors and 2 when an
identity check fails.
"""

import argparse
import csv
import io
import logging
import sys
from contextlib import contextmanager
from typing import Iterable, List, Optional, Sequence, TextIO

from . import __version__
from . import algebra
from . import combinat as sc
from . import notation
from . import oracle
from . import ssym
from . import tableaux
from . import verify
from .bases import Basis, SymBasis
from .config import FORMATS, Settings
from .errors import SncsymError
from .rational import format_rational
from .superpartition import superpartitions

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(SncsymError):
    """Bad command-line arguments"""


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None, help="output format")
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    common.add_argument("--config", metavar="FILE", help="JSON settings file")
    common.add_argument("-v", "--verbose", action="count", default=0, help="more logging (repeatable)")

    parser = ArgumentParser(prog="sncsym", description=(
        "Symmetric functions in noncommuting variables in superspace"))
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    verbs = parser.add_subparsers(dest="verb", metavar="COMMAND", parser_class=ArgumentParser)
    verbs.required = True

    p = verbs.add_parser("enumerate", parents=[common], help="list set superpartitions or superpartitions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, help="fermionic degree (all when omitted)")
    p.add_argument("--superpartitions", action="store_true", help="list superpartitions instead")

    p = verbs.add_parser("expand", parents=[common], help="write an element out over N variables")
    p.add_argument("element")
    p.add_argument("--num-vars", type=int)

    p = verbs.add_parser("convert", parents=[common], help="change basis of an element, or print a matrix")
    p.add_argument("element", nargs="?")
    p.add_argument("--from", dest="source")
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--commuting", action="store_true", help="work in the commuting algebra")

    p = verbs.add_parser("product", parents=[common], help="multiply two elements")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--basis", help="basis of the result (default: that of the left factor)")
    p.add_argument("--commuting", action="store_true")

    p = verbs.add_parser("project", parents=[common], help="project to commuting variables")
    p.add_argument("element")

    p = verbs.add_parser("lift", parents=[common], help="lift a commuting element")
    p.add_argument("element")

    p = verbs.add_parser("inner", parents=[common], help="inner product of two elements or a Gram matrix")
    p.add_argument("left", nargs="?")
    p.add_argument("right", nargs="?")
    p.add_argument("--from", dest="source", default="m")
    p.add_argument("--to", dest="target", default="h")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--commuting", action="store_true")

    p = verbs.add_parser("mobius", parents=[common], help="Mobius function mu(0,K) or mu(K,L)")
    p.add_argument("indices", nargs="+", metavar="INDEX")
    p.add_argument("--chains", action="store_true", help="also count chains")

    p = verbs.add_parser("schur", parents=[common], help="Schur function of a superpartition")
    p.add_argument("shape")
    p.add_argument("--kind", type=int, choices=(1, 2), default=1)
    p.add_argument("--positive", action="store_true", help="positive form over partial indices")
    p.add_argument("--commuting", action="store_true", help="s or sbar in commuting variables")
    p.add_argument("--tableaux", metavar="WEIGHT", help="list the tableaux of this weight, e.g. '~2,~1'")

    p = verbs.add_parser("kostka", parents=[common], help="Kostka-type coefficients")
    p.add_argument("shape", nargs="?")
    p.add_argument("weight", nargs="?")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--kind", type=int, choices=(1, 2), default=1)

    p = verbs.add_parser("verify", parents=[common], help="run the identity suite")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--check", action="append", metavar="NAME", help="run only these checks")
    return parser


# ---------------------------------------------------------------- output

class Output:
    """Collects text and renders it in the requested format"""

    def __init__(self, fmt: str, stream: TextIO):
        self.fmt = fmt
        self.stream = stream

    def write(self, text: str):
        self.stream.write(text)
        if not text.endswith("\n"):
            self.stream.write("\n")

    def json(self, data):
        self.write(notation.dumps(data))

    def rows(self, rows: Iterable[Sequence]):
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        for row in rows:
            writer.writerow(row)
        self.write(buffer.getvalue())

    def element(self, el):
        if self.fmt == "json":
            self.json(notation.element_to_json(el))
        elif self.fmt == "csv":
            self.rows([("index", "coeff")] + [(str(i), format_rational(c)) for i, c in el.items()])
        else:
            self.write(str(el))

    def scalar(self, name: str, value):
        if self.fmt == "json":
            self.json({name: notation.rational_to_json(value)})
        elif self.fmt == "csv":
            self.rows([(name,), (format_rational(value),)])
        else:
            self.write(format_rational(value))

    def matrix(self, row_labels: List[str], column_labels: List[str], entries):
        if self.fmt == "json":
            self.json({
                "rows": row_labels,
                "columns": column_labels,
                "entries": [[notation.rational_to_json(v) for v in row] for row in entries],
            })
            return
        table = [[""] + column_labels] + [
            [label] + [format_rational(v) for v in row] for label, row in zip(row_labels, entries)]
        if self.fmt == "csv":
            self.rows(table)
            return
        widths = [max(len(row[c]) for row in table) for c in range(len(table[0]))]
        self.write("\n".join(
            "  ".join(cell.rjust(width) for cell, width in zip(row, widths)).rstrip() for row in table))


@contextmanager
def open_output(path: Optional[str], stdout: TextIO):
    if not path:
        yield stdout
        return
    try:
        with open(path, "w", encoding="utf-8") as f:
            yield f
    except OSError as e:
        raise SncsymError(f"Cannot write {path}: {e}")


# ---------------------------------------------------------------- commands

_FLAGS = {"source": "--from", "target": "--to"}


def _require(args, *names):
    missing = [_FLAGS.get(name, f"--{name}") for name in names if getattr(args, name) is None]
    if missing:
        raise UsageError(f"{args.verb} needs {' and '.join(missing)}")


def _check_degree(n: int, m: int):
    if n < 0 or m < 0:
        raise UsageError("degrees must be nonnegative")


def cmd_enumerate(args, settings: Settings, out: Output) -> int:
    ms = [args.m] if args.m is not None else list(range(args.n + 2))
    if args.superpartitions:
        items = [(args.n, m, shape) for m in ms for shape in superpartitions(args.n, m)]
        encode = notation.superpartition_to_json
    else:
        items = [(args.n, m, index) for m in ms for index in sc.set_superpartitions(args.n, m)]
        encode = notation.index_to_json
    logger.info("Enumerated %d objects of degree %d", len(items), args.n)
    if out.fmt == "json":
        out.json({"n": args.n, "m": args.m, "count": len(items),
                  "items": [{"m": m, "index": encode(item)} for _, m, item in items]})
    elif out.fmt == "csv":
        out.rows([("n", "m", "index")] + [(n, m, str(item)) for n, m, item in items])
    else:
        out.write("\n".join(str(item) for _, _, item in items) + f"\n{len(items)} total")
    return EXIT_OK


def _bidegree_of(el) -> tuple:
    bidegrees = el.bidegrees()
    if not bidegrees:
        return 0, 0
    return max(bidegrees, key=lambda b: b[0] + b[1])


def cmd_expand(args, settings: Settings, out: Output) -> int:
    el = notation.parse_element(args.element)
    N = args.num_vars or settings.num_vars(*_bidegree_of(el))
    polynomial = oracle.expand_element(el, N)
    if out.fmt == "json":
        out.json({"num_vars": N, "terms": [
            {"theta": list(mono.theta), "x": list(mono.x), "coeff": notation.rational_to_json(c)}
            for mono, c in polynomial.items()]})
    elif out.fmt == "csv":
        out.rows([("coeff", "theta", "x")] + [
            (format_rational(c), " ".join(map(str, mono.theta)), " ".join(map(str, mono.x)))
            for mono, c in polynomial.items()])
    else:
        out.write(str(polynomial))
    return EXIT_OK


def _matrix_labels(n: int, m: int, commuting: bool) -> List[str]:
    if commuting:
        return [str(shape) for shape in superpartitions(n, m)]
    return [str(index) for index in sc.set_superpartitions(n, m)]


def cmd_convert(args, settings: Settings, out: Output) -> int:
    if args.element is not None:
        if args.commuting:
            el = notation.parse_ssym_element(args.element)
            result = ssym.convert_ssym(el, SymBasis.parse(args.target))
        else:
            el = notation.parse_element(args.element)
            if args.source and Basis.parse(args.source) != el.basis:
                el = algebra.convert(el, args.source)
            result = algebra.convert(el, Basis.parse(args.target))
        out.element(result)
        return EXIT_OK
    _require(args, "source", "n", "m")
    _check_degree(args.n, args.m)
    labels = _matrix_labels(args.n, args.m, args.commuting)
    if args.commuting:
        source, target = SymBasis.parse(args.source), SymBasis.parse(args.target)
        shapes = superpartitions(args.n, args.m)
        columns = [ssym.convert_ssym(ssym.SSymElement.of(source, shape), target) for shape in shapes]
        entries = [[col.coefficient(row) for col in columns] for row in shapes]
    else:
        entries = algebra.matrix_entries(
            algebra.transition_matrix(args.source, args.target, args.n, args.m)) if labels else []
    out.matrix(labels, labels, entries)
    return EXIT_OK


def _parse_any(text: str, commuting: bool):
    return notation.parse_ssym_element(text) if commuting else notation.parse_element(text)


def cmd_product(args, settings: Settings, out: Output) -> int:
    left, right = _parse_any(args.left, args.commuting), _parse_any(args.right, args.commuting)
    if args.commuting:
        result = ssym.product_ssym(left, right)
        if args.basis:
            result = ssym.convert_ssym(result, args.basis)
    else:
        result = algebra.product(left, right)
        if args.basis:
            result = algebra.convert(result, args.basis)
    out.element(result)
    return EXIT_OK


def cmd_project(args, settings: Settings, out: Output) -> int:
    out.element(ssym.rho(notation.parse_element(args.element)))
    return EXIT_OK


def cmd_lift(args, settings: Settings, out: Output) -> int:
    out.element(ssym.lift(notation.parse_ssym_element(args.element)))
    return EXIT_OK


def cmd_inner(args, settings: Settings, out: Output) -> int:
    pairing = ssym.inner_product_ssym if args.commuting else algebra.inner_product
    if args.left is not None:
        if args.right is None:
            raise UsageError("inner needs two elements, or --n and --m for a Gram matrix")
        left, right = _parse_any(args.left, args.commuting), _parse_any(args.right, args.commuting)
        out.scalar("inner", pairing(left, right))
        return EXIT_OK
    _require(args, "n", "m")
    _check_degree(args.n, args.m)
    if args.commuting:
        keys = superpartitions(args.n, args.m)
        make = ssym.SSymElement.of
        source, target = SymBasis.parse(args.source), SymBasis.parse(args.target)
    else:
        keys = sc.set_superpartitions(args.n, args.m)
        make = algebra.SymbolicElement.of
        source, target = Basis.parse(args.source), Basis.parse(args.target)
    entries = [[pairing(make(source, a), make(target, b)) for b in keys] for a in keys]
    labels = [str(k) for k in keys]
    out.matrix(labels, labels, entries)
    return EXIT_OK


def cmd_mobius(args, settings: Settings, out: Output) -> int:
    if len(args.indices) > 2:
        raise UsageError("mobius takes one or two indices")
    parsed = [notation.parse_index(text) for text in args.indices]
    if len(parsed) == 1:
        K, L = sc.zero(*parsed[0].bidegree), parsed[0]
    else:
        K, L = parsed
    sc.check_bidegree(K, L)
    value = sc.mobius(K, L)
    chains = sc.count_chains(K, L) if args.chains else None
    if out.fmt == "json":
        data = {"lower": notation.index_to_json(K), "upper": notation.index_to_json(L), "mobius": value}
        if chains is not None:
            data["chains"] = chains
        out.json(data)
    elif out.fmt == "csv":
        header, row = ["lower", "upper", "mobius"], [str(K), str(L), value]
        if chains is not None:
            header.append("chains")
            row.append(chains)
        out.rows([header, row])
    else:
        text = f"mu({K}, {L}) = {value}"
        if chains is not None:
            text += f"\nchains: {chains}"
        out.write(text)
    return EXIT_OK


def cmd_schur(args, settings: Settings, out: Output) -> int:
    shape = notation.parse_superpartition(args.shape)
    if args.tableaux is not None:
        found = tableaux.enumerate_tableaux(shape, tableaux.parse_weight(args.tableaux), args.kind)
        if out.fmt == "json":
            out.json([{"chain": [str(s) for s in t.chain], "inv": t.inv()} for t in found])
        elif out.fmt == "csv":
            out.rows([("chain", "inv")] + [(tableaux.render_chain(t), t.inv()) for t in found])
        else:
            out.write("\n\n".join(tableaux.render_tableau(t) for t in found) if found else "no tableaux")
        return EXIT_OK
    if args.commuting:
        out.element(tableaux.schur_ssym(shape, args.kind))
        return EXIT_OK
    el = tableaux.schur(shape, args.kind)
    if not args.positive:
        out.element(el)
        return EXIT_OK
    terms = tableaux.positive_form(el)
    if out.fmt == "json":
        out.json({"basis": "m", "terms": [
            {"index": notation.index_to_json(i), "coeff": notation.rational_to_json(c)} for i, c in terms]})
    elif out.fmt == "csv":
        out.rows([("index", "coeff")] + [(str(i), format_rational(c)) for i, c in terms])
    else:
        out.write(algebra.format_terms("m", terms))
    return EXIT_OK


def cmd_kostka(args, settings: Settings, out: Output) -> int:
    if args.shape is not None:
        if args.weight is None:
            raise UsageError("kostka needs a shape and a weight, or --n and --m")
        shape = notation.parse_superpartition(args.shape)
        weight = notation.parse_superpartition(args.weight)
        out.scalar("kostka", tableaux.kostka(shape, weight, args.kind))
        return EXIT_OK
    _require(args, "n", "m")
    _check_degree(args.n, args.m)
    labels = [str(shape) for shape in superpartitions(args.n, args.m)]
    out.matrix(labels, labels, tableaux.kostka_matrix(args.n, args.m, args.kind))
    return EXIT_OK


def cmd_verify(args, settings: Settings, out: Output) -> int:
    max_degree = args.max_degree if args.max_degree is not None else settings.max_degree
    try:
        report = verify.run_checks(max_degree, args.check)
    except ValueError as e:
        raise UsageError(str(e))
    if out.fmt == "json":
        out.json(report.to_json())
    elif out.fmt == "csv":
        out.rows([("name", "passed", "cases", "counterexample")] + [
            (r.name, r.passed, r.cases, r.counterexample or "") for r in report.results])
    else:
        lines = []
        for r in report.results:
            status = "ok" if r.passed else "FAILED"
            line = f"{r.name:<18} {status:<6} {r.cases:>6} cases  {r.description}"
            if not r.passed:
                line += f"\n    counterexample: {r.counterexample}"
            lines.append(line)
        lines.append("all identities hold" if report.passed else "some identities FAILED")
        out.write("\n".join(lines))
    return EXIT_OK if report.passed else EXIT_FAILED


COMMANDS = {
    "enumerate": cmd_enumerate,
    "expand": cmd_expand,
    "convert": cmd_convert,
    "product": cmd_product,
    "project": cmd_project,
    "lift": cmd_lift,
    "inner": cmd_inner,
    "mobius": cmd_mobius,
    "schur": cmd_schur,
    "kostka": cmd_kostka,
    "verify": cmd_verify,
}


def configure_logging(settings: Settings, verbose: int):
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, settings.log_level.upper(), logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    """Run one command; returns the exit status"""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        settings = Settings.load(args.config).updated(output_format=args.format)
        configure_logging(settings, args.verbose)
        with open_output(args.out, stdout) as stream:
            return COMMANDS[args.verb](args, settings, Output(settings.output_format, stream))
    except SncsymError as e:
        stderr.write(f"sncsym: error: {e}\n")
        return EXIT_USAGE
