"""Command-line front end: ``gastruct <command> ...``.

Exit codes: 0 all requested checks pass, 1 a check failed, 2 unreadable input
(parse error, unknown label, malformed file), 3 the ideal does not define a
valid Artinian local algebra.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import catalog as cat
from . import curves
from . import linalg as la
from .artinian import build_algebra, fingerprint, gorenstein, hilbert_samuel, socle_dimension
from .groebner import AlgebraError, Ideal
from .polynomial import ParseError, parse_polynomial
from .representation import (
    build_representation,
    centralizer_dimension,
    check_derivative_relations,
    check_solutions,
    dual_intertwiner,
    fixed_locus,
    is_faithful,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_ALGEBRA = 0, 1, 2, 3


class InputError(ValueError):
    """Malformed input file or argument (exit code 2)."""


@dataclass
class IdealFile:
    n: int
    generators: list

    @property
    def ideal(self) -> Ideal:
        return Ideal(self.generators, self.n)


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def parse_ideal_file(text: str) -> IdealFile:
    lines = list(_content_lines(text))
    if not lines:
        raise InputError("empty ideal file: expected a 'vars: n' header")
    lineno, header = lines[0]
    key, _, value = header.partition(":")
    if key.strip() != "vars" or not value.strip().isdigit():
        raise InputError(f"line {lineno}: expected header 'vars: n', got {header!r}")
    n = int(value)
    if n < 1:
        raise InputError(f"line {lineno}: number of variables must be at least 1")
    gens = []
    for lineno, line in lines[1:]:
        try:
            gens.append(parse_polynomial(line, n))
        except ParseError as exc:
            raise InputError(f"line {lineno}: {exc}") from None
    if not gens:
        raise InputError("ideal file lists no generators")
    return IdealFile(n, gens)


def parse_matrix_file(text: str) -> list:
    rows = []
    for lineno, line in _content_lines(text):
        try:
            rows.append([Fraction(tok) for tok in line.split()])
        except (ValueError, ZeroDivisionError):
            raise InputError(f"line {lineno}: not a row of rationals: {line!r}") from None
    if not rows or any(len(r) != len(rows) for r in rows):
        raise InputError("matrix must be square and nonempty")
    return rows


def parse_series_file(text: str, N: int) -> list:
    """Series separated by commas or newlines, e.g. ``t^2, t^3``."""
    out = []
    for lineno, line in _content_lines(text):
        for item in line.split(","):
            if item.strip():
                try:
                    out.append(curves.TruncatedSeries.parse(item, N))
                except ParseError as exc:
                    raise InputError(f"line {lineno}: {exc}") from None
    return out


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


# --------------------------------------------------------------------------
# rendering

def fmt(x) -> str:
    if isinstance(x, bool):
        return "yes" if x else "no"
    if isinstance(x, (list, tuple)):
        return "(" + ", ".join(fmt(v) for v in x) + ")"
    return str(x)


def _emit(args, report: dict, lines: list):
    if args.json:
        print(json.dumps(cat.exact_json(report), indent=2))
    else:
        for line in lines:
            print(line)


# --------------------------------------------------------------------------
# commands

def _load_algebra(path):
    f = parse_ideal_file(_read(path))
    return f, build_algebra(f.ideal)


def cmd_analyze(args) -> int:
    f, R = _load_algebra(args.path)
    rep = build_representation(R)
    fp = fingerprint(R)
    report = {
        "command": "analyze",
        "ideal": [str(g) for g in f.generators],
        "arity": R.n,
        "length": R.length,
        "hilbert_samuel": list(hilbert_samuel(R)),
        "socle_dimension": socle_dimension(R),
        "gorenstein": gorenstein(R),
        "faithful": is_faithful(R),
        "fixed_locus_dimension": len(fixed_locus(rep)),
        "basis": [str(R.element([Fraction(int(i == k)) for i in range(R.length)])) for k in range(R.length)],
        "fingerprint": fp.as_dict(),
    }
    lines = [
        f"ideal: {fmt(report['ideal'])}",
        f"length: {R.length}",
        f"hilbert-samuel: {fmt(report['hilbert_samuel'])}",
        f"socle dimension: {report['socle_dimension']}",
        f"gorenstein: {fmt(report['gorenstein'])}",
        f"faithful: {fmt(report['faithful'])}",
        f"fixed-locus dimension: {report['fixed_locus_dimension']}",
        "fingerprint:",
    ] + [f"  {k}: {fmt(v)}" for k, v in report["fingerprint"].items()]
    _emit(args, report, lines)
    return EXIT_OK


def cmd_coords(args) -> int:
    _, R = _load_algebra(args.path)
    rep = build_representation(R)
    f = [str(p) for p in rep.coordinate_functions]
    report = {"command": "coords", "coordinate_functions": f,
              "exponential": [[str(e) for e in row] for row in rep.exponential]}
    lines = ["f = (" + ", ".join(f) + ")", "exp(x.S) ="]
    lines += ["  [" + ", ".join(row) + "]" for row in report["exponential"]]
    status = EXIT_OK
    if args.check:
        deriv = check_derivative_relations(rep)
        sols = check_solutions(rep)
        report["checks"] = {"derivative_relations": deriv.ok, "solutions": sols}
        lines.append(f"derivative relations: {'pass' if deriv.ok else 'FAIL'} ({len(deriv.checked)} checked)")
        lines.append(f"solutions: {'pass' if sols else 'FAIL'}")
        if not (deriv.ok and sols):
            status = EXIT_FAIL
    _emit(args, report, lines)
    return status


def cmd_dual(args) -> int:
    _, R = _load_algebra(args.path)
    rep = build_representation(R)
    gor = gorenstein(R)
    T = dual_intertwiner(rep, strict=args.strict)
    dual = T is not None
    report = {"command": "dual", "socle_dimension": socle_dimension(R), "gorenstein": gor,
              "self_dual": dual, "agree": gor == dual, "intertwiner": T}
    lines = [f"socle dimension: {report['socle_dimension']}",
             f"Gorenstein: {fmt(gor)}; self-dual: {fmt(dual)}"]
    if T is not None:
        lines.append("intertwiner:")
        lines += ["  [" + ", ".join(str(x) for x in row) + "]" for row in T]
    if gor != dual:
        lines.append("verdicts DISAGREE")
    _emit(args, report, lines)
    return EXIT_OK if gor == dual else EXIT_FAIL


def cmd_catalog(args) -> int:
    if args.action == "verify":
        report = cat.verify_catalog(workers=args.workers)
        projective = [e for e in report.entries if e.group in cat.PROJECTIVE_COUNTS]
        bad = [e for e in projective if not e.ok]
        undecided = [p for p in report.pairs if p.verdict != "distinct"]
        lines = []
        if not bad and not undecided:
            lines.append(f"{len(projective)} projective entries OK, all pairwise distinguished")
        else:
            lines.append(f"{len(projective)} projective entries, {len(bad)} failing; "
                         f"{len(undecided)} pair(s) not distinguished")
        others = [e for e in report.entries if e.group not in cat.PROJECTIVE_COUNTS]
        lines.append(f"{sum(e.ok for e in others)}/{len(others)} further entries OK")
        lines += [f"FAIL {f}" for f in report.failures]
        _emit(args, {"command": "catalog verify"} | report.as_dict(), lines)
        return EXIT_OK if report.ok else EXIT_FAIL
    if args.action == "export":
        if not args.label:
            raise InputError("catalog export needs an output path")
        count = cat.export_catalog(args.label)
        _emit(args, {"command": "catalog export", "path": args.label, "records": count},
              [f"wrote {count} records to {args.label}"])
        return EXIT_OK
    if not args.label:
        raise InputError("catalog show needs a label")
    try:
        e = cat.entry(args.label)
    except KeyError:
        raise InputError(f"unknown catalog label {args.label!r}") from None
    rec = cat.export_records([e])[0]
    lines = [f"label: {e.label}", f"ideal: [{', '.join(e.generators)}]"]
    if e.printed:
        lines.append(f"printed: [{', '.join(e.printed)}]")
    lines.append(f"expected length: {e.expected_length}")
    if rec["chi"] is not None:
        lines.append(f"hilbert-samuel: {fmt(rec['chi'])}")
    if e.expected_quadratic_rank is not None:
        lines.append(f"quadratic form rank: {e.expected_quadratic_rank}")
    lines.append(f"source: {e.citation}")
    if e.note:
        lines.append(f"note: {e.note}")
    _emit(args, {"command": "catalog show"} | rec, lines)
    return EXIT_OK


def _positive(text, what):
    try:
        v = int(text)
    except ValueError:
        raise InputError(f"{what} must be an integer, got {text!r}") from None
    if v < 1:
        raise InputError(f"{what} must be positive")
    return v


def cmd_curve(args) -> int:
    if args.action == "stable":
        if len(args.rest) != 2:
            raise InputError("usage: curve stable <subspace-file> <N>")
        N = _positive(args.rest[1], "N")
        series = parse_series_file(_read(args.rest[0]), N)
        if args.span:
            vecs = la.row_space_basis([p.vector() for p in series if any(p.vector())])
        else:
            # the ideal of F[t]/t^N generated by the listed series
            vecs = la.row_space_basis([(p * curves.TruncatedSeries.monomial(k, N)).vector()
                                       for p in series for k in range(N)])
            vecs = [v for v in vecs if any(v)]
        V = curves.SubspaceModTruncation([curves.TruncatedSeries.from_vector(v, N) for v in vecs], N)
        ok = curves.is_stable_subspace(V)
        report = {"command": "curve stable", "N": N, "subspace": str(V), "dimension": V.dimension,
                  "stable": ok}
        _emit(args, report, [f"subspace: {V}", f"N = {N}: {'stable' if ok else 'not stable'}"])
        return EXIT_OK if ok else EXIT_FAIL
    if args.action == "enumerate":
        if len(args.rest) != 1:
            raise InputError("usage: curve enumerate <N>")
        N = _positive(args.rest[0], "N")
        try:
            c = curves.classify_stable_subspaces(N, args.perturbations, args.seed)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        spans = [str(curves.SubspaceModTruncation.monomial(s, N)) for s in c.stable]
        report = {"command": "curve enumerate", "N": N, "stable": spans, "count": len(spans),
                  "chain_of_tails": c.chain_ok, "perturbations_tested": c.perturbations_tested,
                  "stable_perturbations": c.stable_perturbations}
        lines = [f"N = {N}: {len(spans)} stable monomial subspaces"] + [f"  {s}" for s in spans]
        lines.append(f"exactly the tails: {fmt(c.chain_ok)}")
        if c.perturbations_tested:
            lines.append(f"perturbations: {c.perturbations_tested} tested, "
                         f"{len(c.stable_perturbations)} stable")
        _emit(args, report, lines)
        return EXIT_OK if c.ok else EXIT_FAIL
    if len(args.rest) != 2:
        raise InputError("usage: curve semigroup <set> <B>")
    B = _positive(args.rest[1], "B")
    try:
        sigma = curves.parse_exponent_set(args.rest[0])
        sg = curves.semigroup_check(sigma, B)
        ring = curves.ring_closure_check(sigma, B)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    report = {"command": "curve semigroup", "set": sorted(set(sigma)), "B": B,
              "semigroup": sg, "ring_closure": ring, "agree": sg == ring}
    lines = [f"semigroup: {'closed' if sg else 'not closed'}",
             f"ring closure: {'closed' if ring else 'not closed'}"]
    _emit(args, report, lines)
    return EXIT_OK if sg and ring else EXIT_FAIL


def cmd_centralizer(args) -> int:
    M = parse_matrix_file(_read(args.path))
    d = centralizer_dimension(M)
    _emit(args, {"command": "centralizer", "size": len(M), "dimension": d}, [str(d)])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gastruct", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    add("analyze", cmd_analyze, "invariants of F[S]/I").add_argument("path")
    sp = add("coords", cmd_coords, "coordinate functions and exp(x.S)")
    sp.add_argument("path")
    sp.add_argument("--check", action="store_true", help="verify derivative relations and solutions")
    sp = add("dual", cmd_dual, "Gorenstein versus self-dual")
    sp.add_argument("path")
    sp.add_argument("--strict", action="store_true",
                    help="require T M_i = -M_i^T T instead of allowing x -> -x")
    sp = add("catalog", cmd_catalog, "the catalog of structures")
    sp.add_argument("action", choices=["verify", "export", "show"])
    sp.add_argument("label", nargs="?", help="entry label (show) or output path (export)")
    sp.add_argument("--workers", type=int, default=1)
    sp = add("curve", cmd_curve, "stable subspaces of F[t]/t^N and semigroups")
    sp.add_argument("action", choices=["stable", "enumerate", "semigroup"])
    sp.add_argument("rest", nargs="*")
    sp.add_argument("--span", action="store_true",
                    help="stable: take the listed series as a basis, not ideal generators")
    sp.add_argument("--perturbations", type=int, default=0)
    sp.add_argument("--seed", type=int, default=0)
    add("centralizer", cmd_centralizer, "dimension of the centralizer of a matrix").add_argument("path")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ALGEBRA


if __name__ == "__main__":
    sys.exit(main())
