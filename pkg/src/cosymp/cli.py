"""Command-line front end.

Exit codes: 0 the command ran (whatever the verdict), 1 a catalog run had
failing expectations, 2 parse or schema error, 3 mathematically invalid input
(Jacobi identity, d^2 != 0, invalid mapping-torus spec).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import __version__
from .cdga import CdgaError, betti_numbers, cohomology
from .dsl import DslError, DslMathError, detect_kind, parse_cdga_dsl, parse_expression, parse_lie_dsl, \
    parse_mapping_torus_spec, parse_rational, format_lie
from .exactlinalg import Matrix
from .liealg import (
    CosymplecticData,
    JacobiError,
    LieAlgebraError,
    SymplecticDerivationData,
    ce_cdga,
    cosymplectic_check,
    cosymplectic_exists,
    extend_by_derivation,
    split_cosymplectic,
)
from .mappingtorus import (
    HypothesisError,
    InvalidSpecError,
    formality_verdict,
    mv_cohomology,
    partial_minimal_model,
)
from .massey import MasseyError, quadruple_massey, triple_massey

EXIT_OK, EXIT_FAILURES, EXIT_PARSE, EXIT_MATH = 0, 1, 2, 3


class UsageError(Exception):
    """Bad command-line input that is not a document parse error."""


@dataclass
class Report:
    command: str
    verdict: str | None = None
    data: dict = field(default_factory=dict)
    lines: list[str] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def emit_report(report: Report, fmt: str = "text") -> str:
    if fmt == "structured":
        doc = {
            "tool": "cosymp",
            "version": __version__,
            "command": report.command,
            "verdict": report.verdict,
            "data": _jsonable(report.data),
            "diagnostics": list(report.diagnostics),
        }
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    out = list(report.lines)
    if report.verdict is not None and not any(l.startswith("verdict:") for l in out):
        out.append(f"verdict: {report.verdict}")
    out += [f"diagnostic: {d}" for d in report.diagnostics]
    return "\n".join(out) + "\n"


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str):
    text = _read(path)
    kind = detect_kind(text)
    if kind == "lie":
        return kind, parse_lie_dsl(text)
    if kind == "cdga":
        return kind, parse_cdga_dsl(text)
    return kind, parse_mapping_torus_spec(text)


def _load_lie(path: str):
    kind, obj = _load(path)
    if kind != "lie":
        raise UsageError(f"{path} is a {kind} document; a Lie algebra is required")
    return obj


def _fmt_tuple(t) -> str:
    return "(" + ", ".join(str(x) for x in t) + ")"


# commands

def cmd_cohomology(args) -> Report:
    kind, obj = _load(args.file)
    rep = Report("cohomology")
    if kind == "mapping_torus":
        mv = mv_cohomology(obj)
        rep.data = {"kind": kind, "betti": mv.betti,
                    "classes": {p: mv.classes(obj.fiber, p) for p in range(len(mv.betti))}}
        rep.lines.append(f"betti: {_fmt_tuple(mv.betti)}")
        for p in range(len(mv.betti)):
            rep.lines.append(f"H^{p}: " + ", ".join(mv.classes(obj.fiber, p)))
        return rep
    c = ce_cdga(obj) if kind == "lie" else obj
    top = c.max_degree - 1
    if args.max_degree is not None:
        if args.max_degree > top:
            raise UsageError(f"--max-degree {args.max_degree} exceeds the computable range {top}")
        top = args.max_degree
    bet = betti_numbers(c, top)
    reps = {}
    for k in range(top + 1):
        reps[k] = [repr(c.from_vector(k, v)) for v in cohomology(c, k).reps]
    rep.data = {"kind": kind, "betti": bet, "representatives": reps}
    rep.lines.append(f"betti: {_fmt_tuple(bet)}")
    for k in range(top + 1):
        rep.lines.append(f"H^{k}: " + ", ".join(f"[{r}]" for r in reps[k]))
    return rep


def cmd_check(args) -> Report:
    s = _load_lie(args.file)
    eta = parse_expression(args.eta, s.table)
    F = parse_expression(args.F, s.table)
    chk = cosymplectic_check(s, eta, F)
    verdict = "COSYMPLECTIC" if chk.ok else "NOT_COSYMPLECTIC"
    rep = Report("check-cosymplectic", verdict)
    rep.data = {"eta_closed": chk.eta_closed, "F_closed": chk.F_closed, "volume_coefficient": chk.volume_coefficient}
    rep.lines += [f"d eta = 0: {chk.eta_closed}", f"d F = 0: {chk.F_closed}",
                  f"eta ^ F^n coefficient: {chk.volume_coefficient}"]
    rep.diagnostics = chk.diagnostics()
    return rep


def cmd_find(args) -> Report:
    s = _load_lie(args.file)
    v = cosymplectic_exists(s)
    rep = Report("find-cosymplectic", v.verdict)
    rep.data = {"closed_one_forms": [repr(x) for x in v.closed_one_forms],
                "closed_two_forms": [repr(x) for x in v.closed_two_forms],
                "terms_expanded": v.terms_expanded}
    if v.witness is not None:
        rep.data["witness"] = {"eta": repr(v.witness.eta), "F": repr(v.witness.F)}
        rep.lines.append(f"witness: eta = {v.witness.eta!r}, F = {v.witness.F!r}")
    rep.lines.append(v.certificate())
    return rep


def _parse_D(text: str, n: int) -> Matrix:
    rows = []
    for r in text.split(";"):
        toks = r.replace(",", " ").split()
        rows.append([parse_rational(t) for t in toks])
    if len(rows) != n or any(len(r) != n for r in rows):
        raise UsageError(f"--D must be a {n}x{n} matrix written as rows separated by ';'")
    return Matrix(rows)


def cmd_split(args) -> Report:
    g = _load_lie(args.file)
    data = CosymplecticData(parse_expression(args.eta, g.table), parse_expression(args.F, g.table))
    out = split_cosymplectic(g, data)
    rep = Report("split", "SPLIT")
    rep.data = {"h": format_lie(out.h), "omega": repr(out.omega), "D": out.D.tolist()}
    rep.lines += ["ideal h = ker(eta):", format_lie(out.h).rstrip(), f"omega = {out.omega!r}",
                  "D = ad(xi) on h (columns are images):"]
    rep.lines += ["  " + " ".join(str(x) for x in row) for row in out.D.rows]
    return rep


def cmd_extend(args) -> Report:
    h = _load_lie(args.file)
    omega = parse_expression(args.omega, h.table)
    D = _parse_D(args.D, h.dim)
    g, cs = extend_by_derivation(SymplecticDerivationData(h, omega, D))
    rep = Report("extend", "COSYMPLECTIC")
    rep.data = {"g": format_lie(g), "eta": repr(cs.eta), "F": repr(cs.F)}
    rep.lines += [format_lie(g).rstrip(), f"eta = {cs.eta!r}", f"F = {cs.F!r}"]
    return rep


def cmd_mapping_torus(args) -> Report:
    kind, s = _load(args.file)
    if kind != "mapping_torus":
        raise UsageError(f"{args.file} is a {kind} document; a mapping-torus spec is required")
    mv = mv_cohomology(s)
    rep_f = formality_verdict(s)
    rep = Report("mapping-torus", rep_f.label)
    ring = s.fiber
    checklist = [{"degree": c.degree, "dims": c.dims, "r": c.r, "jordan_blocks": c.jordan_blocks}
                 for c in rep_f.checklist]
    rep.data = {"betti": mv.betti, "checklist": checklist, "certificate": rep_f.certificate,
                "notes": rep_f.notes}
    rep.lines.append(f"betti: {_fmt_tuple(mv.betti)}")
    for p in range(len(mv.betti)):
        rep.lines.append(f"H^{p}: " + ", ".join(mv.classes(ring, p)))
    rep.lines.append("eigenvalue-1 data:")
    for c in rep_f.checklist:
        rep.lines.append(f"  degree {c.degree}: dims {list(c.dims)}, r = {c.r}, blocks {list(c.jordan_blocks)}")
    if rep_f.witness is not None:
        w = rep_f.witness
        rep.data["witness"] = {
            "p": w.p, "alpha": ring.format_class(w.p, w.alpha), "beta": ring.format_class(w.p, w.beta),
            "xi": ring.format_class(s.n - w.p, w.xi), "kappa": w.kappa,
            "obligations": {k: v for k, v in w.obligations},
        }
        rep.lines.append(f"witness (degree {w.p}): alpha = {ring.format_class(w.p, w.alpha)}, "
                         f"beta = {ring.format_class(w.p, w.beta)}, xi = {ring.format_class(s.n - w.p, w.xi)}, "
                         f"kappa = {w.kappa}")
        for k, v in w.obligations:
            rep.lines.append(f"  checked: {k}: {'ok' if v else 'FAILED'}")
    rep.lines.append(f"verdict: {rep_f.label}" + (f" ({rep_f.certificate})" if rep_f.certificate else ""))
    rep.lines += [f"note: {n}" for n in rep_f.notes]
    if args.model or args.degree is not None:
        p = args.degree if args.degree is not None else rep_f.p
        if p is None:
            raise UsageError("no degree with eigenvalue 1; pass --degree")
        m = partial_minimal_model(s, p)
        rep.data["model"] = {"p": p, "layers": m.layers, "differential": m.differential,
                             "fragment_betti": m.fragment_betti, "verified": m.verify()}
        rep.lines.append(f"partial minimal model through degree {p}: generator a (degree 1), "
                         f"layers {list(m.layer_dims)} in degree {p}")
        for name, target in m.differential.items():
            terms = " + ".join(f"{c}*{g}" if c != 1 else g for g, c in target.items())
            rep.lines.append(f"  d {name} = a*({terms})")
        rep.lines.append(f"  fragment betti {_fmt_tuple(m.fragment_betti)}; matches through degree {p}: {m.verify()}")
    return rep


def cmd_massey(args) -> Report:
    kind, obj = _load(args.file)
    if kind == "mapping_torus":
        raise UsageError("massey needs a Lie algebra or CDGA document")
    c = ce_cdga(obj) if kind == "lie" else obj
    texts = [t.strip() for t in args.classes.split(",")]
    if len(texts) not in (3, 4):
        raise UsageError("--classes takes three or four comma-separated cocycles")
    xs = [parse_expression(t, c.table) for t in texts]
    if args.unsigned and len(xs) != 4:
        raise UsageError("--unsigned applies to quadruple products only")
    conv = "unsigned" if args.unsigned else "signed"
    v = triple_massey(c, *xs) if len(xs) == 3 else quadruple_massey(c, *xs, convention=conv)
    verdict = "UNDEFINED" if not v.defined else ("NONZERO" if v.nonzero else "ZERO_MOD_INDETERMINACY")
    rep = Report("massey", verdict)
    rep.data = {"defined": v.defined, "degree": v.degree, "representative": v.representative,
                "basis": list(v.labels), "value": v.format(),
                "indeterminacy_dim": v.indeterminacy.dim if v.indeterminacy is not None else None,
                "reason": v.reason, "note": v.note}
    rep.lines.append(f"<{', '.join(texts)}> in degree {v.degree}: {v.format()}")
    if v.defined:
        rep.lines.append(f"indeterminacy dimension: {v.indeterminacy.dim}")
    if v.note:
        rep.lines.append(f"note: {v.note}")
    return rep


def cmd_catalog(args) -> Report:
    from .catalog import catalog_entries, run_catalog

    if args.action == "list":
        entries = catalog_entries()
        rep = Report("catalog list")
        rep.data = {"entries": [{"name": e.name, "kind": e.kind, "description": e.description,
                                 "fixture": e.fixture_name} for e in entries]}
        rep.lines += [f"{e.name:24s} {e.kind:14s} {e.description}" for e in entries]
        return rep
    r = run_catalog(args.pattern)
    rep = Report("catalog run", "PASS" if r.ok else "FAIL")
    rep.data = {"results": [{"entry": x.entry, "check": x.check, "args": list(x.args), "ok": x.ok,
                             "expected": repr(x.expected), "observed": repr(x.observed), "source": x.source}
                            for x in r.results]}
    for x in r.results:
        rep.lines.append(f"{'pass' if x.ok else 'FAIL'}  {x.entry}: {x.check}{_fmt_tuple(x.args) if x.args else ''}"
                         f" [{x.source}]" + ("" if x.ok else f" expected {x.expected!r}, got {x.observed!r} {x.error}"))
    rep.lines.append(f"{len(r.results) - len(r.failures)}/{len(r.results)} expectations passed")
    if not r.results:
        rep.diagnostics.append(f"no catalog entry matches {args.pattern!r}")
    rep.diagnostics += [f"{x.entry}: {x.check} failed" for x in r.failures]
    return rep


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cosymp", description="Exact cohomology, co-symplectic structures, "
                                "Massey products and mapping-torus formality.")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--version", action="version", version=f"cosymp {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cohomology", help="cohomology of a Lie algebra, CDGA or mapping torus")
    c.add_argument("file")
    c.add_argument("--max-degree", type=int)
    c.set_defaults(func=cmd_cohomology)

    c = sub.add_parser("check-cosymplectic", help="check a candidate (eta, F)")
    c.add_argument("file")
    c.add_argument("--eta", required=True)
    c.add_argument("--F", required=True)
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("find-cosymplectic", help="decide whether a co-symplectic structure exists")
    c.add_argument("file")
    c.set_defaults(func=cmd_find)

    c = sub.add_parser("split", help="split a co-symplectic algebra as R xi + h")
    c.add_argument("file")
    c.add_argument("--eta", required=True)
    c.add_argument("--F", required=True)
    c.set_defaults(func=cmd_split)

    c = sub.add_parser("extend", help="extend a symplectic algebra by a symplectic derivation")
    c.add_argument("file")
    c.add_argument("--omega", required=True)
    c.add_argument("--D", required=True, help="rows separated by ';', e.g. '1 0; 0 -1'")
    c.set_defaults(func=cmd_extend)

    c = sub.add_parser("mapping-torus", help="cohomology and formality verdict of a mapping torus")
    c.add_argument("file")
    c.add_argument("--degree", type=int)
    c.add_argument("--model", action="store_true", help="also build the partial minimal model")
    c.set_defaults(func=cmd_mapping_torus)

    c = sub.add_parser("massey", help="triple or quadruple Massey product")
    c.add_argument("file")
    c.add_argument("--classes", required=True)
    c.add_argument("--unsigned", action="store_true", help="quadruple products without the sign bars")
    c.set_defaults(func=cmd_massey)

    c = sub.add_parser("catalog", help="list or run the built-in examples")
    c.add_argument("action", choices=("list", "run"))
    c.add_argument("pattern", nargs="?")
    c.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format
    try:
        rep = args.func(args)
        code = EXIT_FAILURES if rep.verdict == "FAIL" else EXIT_OK
    except DslMathError as exc:
        rep, code = Report(args.command, "INVALID", diagnostics=[str(exc)]), EXIT_MATH
    except (DslError, UsageError) as exc:
        rep, code = Report(args.command, "ERROR", diagnostics=[str(exc)]), EXIT_PARSE
    except (JacobiError, InvalidSpecError, HypothesisError, LieAlgebraError, MasseyError, CdgaError) as exc:
        rep, code = Report(args.command, "INVALID", diagnostics=[str(exc)]), EXIT_MATH
    out = emit_report(rep, fmt)
    ok = code in (EXIT_OK, EXIT_FAILURES) or fmt == "structured"
    (sys.stdout if ok else sys.stderr).write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
