"""
Command-line front end: ``python -m latmod <command> ...``.

Exit codes: 0 = true / verified, 1 = property false or counterexample found,
2 = input error, 3 = cap exceeded or internal error.
"""

import argparse
import sys
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from tqdm import tqdm

from latmod.cli.dot_export import write_dot
from latmod.cli.lattice_file import dump_lattice, read_lattice_file, write_lattice_file
from latmod.cli.reports import Report, ReportSchemaError, lattice_key
from latmod.congruence.congruence import all_congruences, brute_force_congruences
from latmod.congruence.quotient import maximum_graded_quotient
from latmod.console import error, get_verbosity, info, ok, set_verbosity, warn
from latmod.constructions.families import FAMILIES, lattice_from_spec, named_lattice
from latmod.core.lattice import Lattice
from latmod.enumeration.catalog import catalog_load, catalog_save, filter_corpus
from latmod.enumeration.generator import enumerate_lattices
from latmod.errors import (
    CapExceeded,
    CatalogError,
    HypothesisFailed,
    LatticeFileError,
    ParamOutOfRange,
    TooLarge,
    UnknownFamily,
)
from latmod.harness.birkhoff import certify_supersolvable
from latmod.harness.lemmas import verify_lemma_suite
from latmod.harness.pq import verify_pq_all_chains
from latmod.harness.theorem import family_controls, verify_theorem1
from latmod.harness.universal import generating_pairs, universal_property_check
from latmod.properties.checks import find_left_modular_chain, is_graded
from latmod.properties.registry import check_properties, property_names
from latmod.settings import SettingsError, load_settings

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3

FAMILY_PARAMS = ("k", "n", "m", "r", "s")


def _progress(desc: str) -> Callable[[Iterable], Iterable]:
    return lambda it: tqdm(it, desc=desc, unit="lattice", file=sys.stderr, disable=get_verbosity() == 0)


def _emit(report: Report, args: argparse.Namespace, lines: Sequence[str] = ()) -> int:
    if args.json:
        print(report.dumps())
    else:
        for line in lines:
            print(line)
    return EXIT_OK if report.verdict else EXIT_FALSE


# ---------------- single-lattice commands ----------------
def cmd_check(args: argparse.Namespace) -> int:
    L = read_lattice_file(args.file)
    names = None if args.property == "all" else [p.strip() for p in args.property.split(",")]
    report = Report("check", lattice_key(L))
    with report.timed("check"):
        try:
            results = check_properties(L, names)
        except KeyError as e:
            raise ParamOutOfRange(e.args[0])
    report.verdict = all(r.verdict for r in results)
    report.witnesses = [r.to_dict() for r in results]
    lines = [f"{r.name}: {'yes' if r.verdict else 'no'}" + (f"  ({r.detail})" if r.detail else "") for r in results]
    return _emit(report, args, lines)


def cmd_congruences(args: argparse.Namespace) -> int:
    L = read_lattice_file(args.file)
    report = Report("congruences", lattice_key(L))
    with report.timed("congruences"):
        found = brute_force_congruences(L) if args.oracle else all_congruences(L, args.cap)
    report.summary = {"count": len(found)}
    if args.list:
        report.witnesses = [{"classes": [list(c) for c in theta.classes()]} for theta in found]
        lines = [" ".join("{" + ",".join(L.label(e) for e in c) + "}" for c in theta.classes()) for theta in found]
    else:
        lines = [str(len(found))]
    return _emit(report, args, lines)


def cmd_graded_quotient(args: argparse.Namespace) -> int:
    L = read_lattice_file(args.file)
    report = Report("graded-quotient", lattice_key(L))
    with report.timed("quotient"):
        found = maximum_graded_quotient(L, args.cap)
    if found is None:
        report.verdict = False
        if not args.json:
            warn(f"{L.name or args.file} has no maximum graded quotient")
        return _emit(report, args)
    Q, projection = found
    report.witnesses = [{"size": Q.size, "covers": [list(c) for c in Q.covers], "projection": list(projection)}]
    if args.output:
        write_lattice_file(Q, args.output)
        ok(f"wrote graded quotient with {Q.size} elements to {args.output}")
        return _emit(report, args)
    return _emit(report, args, [dump_lattice(Q).rstrip("\n")])


def cmd_construct(args: argparse.Namespace) -> int:
    if "(" in args.family:
        L = lattice_from_spec(args.family)
    else:
        params = {p: getattr(args, p) for p in FAMILY_PARAMS if getattr(args, p) is not None}
        L = named_lattice(args.family, params)
    report = Report("construct", lattice_key(L))
    report.witnesses = [{"name": L.name, "size": L.size, "covers": [list(c) for c in L.covers]}]
    if args.output:
        write_lattice_file(L, args.output)
        ok(f"wrote {L.name} ({L.size} elements) to {args.output}")
        return _emit(report, args)
    return _emit(report, args, [dump_lattice(L).rstrip("\n")])


def cmd_export_dot(args: argparse.Namespace) -> int:
    L = read_lattice_file(args.file)
    report = Report("export-dot", lattice_key(L))
    with report.timed("export"):
        path = write_dot(L, args.output)
    report.summary = {"path": str(path)}
    ok(f"wrote DOT for {L.size} elements to {path}")
    return _emit(report, args)


# ---------------- corpus commands ----------------
def cmd_enumerate(args: argparse.Namespace) -> int:
    predicates = [p for p in (args.filter or "").split(",") if p.strip()]
    record = [p for p in (args.record or "").split(",") if p.strip()]
    stream = enumerate_lattices(args.max_size, cap=args.cap, workers=args.workers)
    catalog = filter_corpus(stream, predicates, directory=args.out, record=record,
                            progress=_progress("filter"))
    target = catalog_save(catalog)
    report = Report("enumerate", None, True, summary={"sizes": {str(n): c for n, c in catalog.sizes().items()},
                                                      "directory": str(target)})
    ok(f"catalog of {len(catalog)} lattices at {target}")
    return _emit(report, args, [f"{n}: {c}" for n, c in catalog.sizes().items()])


def _corpus(args: argparse.Namespace) -> List[Lattice]:
    if args.corpus:
        lattices = list(catalog_load(args.corpus))
    elif args.max_size:
        lattices = list(enumerate_lattices(args.max_size, cap=args.cap, workers=args.workers))
    else:
        lattices = []
    if args.families:
        lattices += family_controls()
    if not lattices:
        raise ParamOutOfRange("verify needs --corpus, --max-size or --families")
    return lattices


def _verify_each(lattices: Sequence[Lattice], check: Callable[[Lattice], Optional[Dict]], desc: str) -> List[Dict]:
    failures = []
    for L in _progress(desc)(lattices):
        failure = check(L)
        if failure is not None:
            failures.append(dict(failure, lattice=lattice_key(L), covers=[list(c) for c in L.covers]))
    return failures


def _lemmas(cap: Optional[int]) -> Callable[[Lattice], Optional[Dict]]:
    def check(L: Lattice) -> Optional[Dict]:
        suite = verify_lemma_suite(L, cap)
        return None if suite else {"reports": [r.to_dict() for r in suite.failures()]}
    return check


def _pq(max_t: int) -> Callable[[Lattice], Optional[Dict]]:
    def check(L: Lattice) -> Optional[Dict]:
        x = find_left_modular_chain(L)
        if x is None or not is_graded(L):
            return None
        report = verify_pq_all_chains(L, x, max_t)
        return None if report else report.to_dict()
    return check


def _birkhoff(L: Lattice) -> Optional[Dict]:
    x = find_left_modular_chain(L)
    if x is None or not is_graded(L):
        return None
    try:
        result = certify_supersolvable(L, x.elements)
    except TooLarge as e:
        warn(f"skipping certification of {L.name or L.size}: {e}")
        return None
    return None if result else result.failure.to_dict()


def _universal(L: Lattice) -> Optional[Dict]:
    if not is_graded(L):
        return None
    for c, w in generating_pairs(L):
        report = universal_property_check(len(c) - 1, L, c, w)
        if not report:
            return dict(report.to_dict(), chain=list(c.elements), w=w)
    return None


def cmd_verify(args: argparse.Namespace) -> int:
    lattices = _corpus(args)
    report = Report(f"verify:{args.suite}")
    with report.timed(args.suite):
        if args.suite == "theorem1":
            summary = verify_theorem1(lattices, workers=args.workers, progress=_progress("theorem1"))
            report.summary = summary.to_dict()
            report.witnesses = report.summary["violations"]
        else:
            checks = {
                "lemmas": _lemmas(args.cap),
                "pq": _pq(args.t or load_settings().pq_max_t),
                "birkhoff": _birkhoff,
                "universal": _universal,
            }
            report.witnesses = _verify_each(lattices, checks[args.suite], args.suite)
            report.summary = {"total": len(lattices), "failures": len(report.witnesses)}
    report.verdict = not report.witnesses
    lines = [f"{args.suite}: {len(lattices)} lattices, {len(report.witnesses)} violations"]
    if report.verdict:
        ok(lines[0])
    else:
        error(lines[0])
    return _emit(report, args, lines)


# ---------------- argument parsing ----------------
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print a JSON report on stdout.")
    common.add_argument("-q", "--quiet", action="store_true", help="Only print errors on stderr.")
    common.add_argument("-v", "--verbose", action="store_true", help="Print progress details on stderr.")
    common.add_argument("--cap", type=int, default=None, help="Override the size cap of the command.")
    common.add_argument("--workers", type=int, default=None, help="Worker processes (default from settings).")

    parser = argparse.ArgumentParser(prog="latmod", description="Finite lattice toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="Evaluate lattice properties.")
    p.add_argument("file", help="Lattice file (JSON).")
    p.add_argument("--property", default="all",
                   help=f"Comma-separated properties or 'all' (known: {', '.join(property_names())}).")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("congruences", parents=[common], help="Count or list congruences.")
    p.add_argument("file", help="Lattice file (JSON).")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="Print the number of congruences (default).")
    mode.add_argument("--list", action="store_true", help="Print every congruence as its classes.")
    p.add_argument("--oracle", action="store_true", help="Use brute-force partition filtering.")
    p.set_defaults(handler=cmd_congruences)

    p = sub.add_parser("graded-quotient", parents=[common], help="Compute the maximum graded quotient.")
    p.add_argument("file", help="Lattice file (JSON).")
    p.add_argument("-o", "--output", default=None, help="Write the quotient here instead of stdout.")
    p.set_defaults(handler=cmd_graded_quotient)

    p = sub.add_parser("construct", parents=[common], help="Build a named lattice.")
    p.add_argument("family", help=f"Family name ({', '.join(sorted(FAMILIES))}) or an expression like 'product(chain(1),boolean(2))'.")
    for name in FAMILY_PARAMS:
        p.add_argument(f"--{name}", type=int, default=None, help=f"Family parameter {name}.")
    p.add_argument("-o", "--output", default=None, help="Output lattice file (default: stdout).")
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("enumerate", parents=[common], help="Enumerate lattices into a catalog.")
    p.add_argument("--max-size", type=int, required=True, help="Largest lattice size.")
    p.add_argument("--filter", default="", help="Comma-separated predicates, e.g. 'graded,!supersolvable'.")
    p.add_argument("--record", default="", help="Extra property flags to store for every entry.")
    p.add_argument("--out", default=None, help="Catalog directory (default: settings or LATMOD_CACHE).")
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="Run a verification suite over a corpus.")
    p.add_argument("suite", choices=["theorem1", "lemmas", "pq", "birkhoff", "universal"])
    p.add_argument("--corpus", default=None, help="Catalog directory to load.")
    p.add_argument("--max-size", type=int, default=None, help="Enumerate lattices up to this size.")
    p.add_argument("--families", action="store_true", help="Add the named-family controls.")
    p.add_argument("--t", type=int, default=None, help="Largest t for the pq suite.")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("export-dot", parents=[common], help="Write a Graphviz Hasse diagram.")
    p.add_argument("file", help="Lattice file (JSON).")
    p.add_argument("-o", "--output", required=True, help="Output .gv file.")
    p.set_defaults(handler=cmd_export_dot)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    set_verbosity(0 if args.quiet else 2 if args.verbose else 1)
    info(f"latmod {args.command}")
    try:
        return args.handler(args)
    except (LatticeFileError, UnknownFamily, ParamOutOfRange, CatalogError, HypothesisFailed,
            SettingsError, ValueError) as e:
        error(str(e))
        return EXIT_INPUT
    except (TooLarge, CapExceeded) as e:
        error(str(e))
        return EXIT_INTERNAL
    except ReportSchemaError as e:
        error(f"internal error: {e}")
        return EXIT_INTERNAL
    except Exception as e:
        error(f"internal error: {type(e).__name__}: {e}")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
