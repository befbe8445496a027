"""Text formats: structure equations, free CDGAs and mapping-torus specs.

Lie algebras
    ``lie compact (0,0,12,13,14+23)`` (or just the tuple): entry k lists
    d e^k; ``ij`` stands for e^i ^ e^j, so indices are single digits and the
    dimension is at most 9.  Terms may carry a rational coefficient ``q*``.

    ``lie dim 5 basis e1..e5`` (or ``basis a b c``) followed by lines
    ``d e5 = e1^e4 + e2^e3``; generators without a line are closed.

CDGAs
    ``cdga`` then ``truncate T`` (optional), ``gen NAME DEGREE`` and
    ``d NAME = expression`` lines.

Mapping tori
    ``mapping_torus [name]`` then a ``[fiber]`` section (``torus n`` or
    ``dims``/``labels``/``cup``/``fundamental`` lines), a ``[phi]`` section of
    ``k: row ; row ; ...`` matrices (row-major), and optionally
    ``derive-exterior-powers true`` and ``symplectic v1 v2 ...``.

Rationals are written ``p/q``; decimals are rejected.  ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .cdga import Cdga, CohomologyRing, Element, GeneratorTable
from .exactlinalg import Matrix, exterior_power
from .liealg import LieAlgebraSpec, jacobi_check


class DslError(ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.message = message
        self.line = line
        self.col = col
        where = f"line {line}, col {col}: " if line is not None else ""
        super().__init__(where + message)


class DslMathError(DslError):
    """Well-formed input describing an invalid object (Jacobi, d^2, spec validation)."""


_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")
_DECIMAL = re.compile(r"\d*\.\d+|\d+\.\d*")


def parse_rational(tok: str, line: int | None = None, col: int | None = None) -> Fraction:
    tok = tok.strip()
    if _DECIMAL.fullmatch(tok.lstrip("+-")):
        raise DslError(f"decimal literal {tok!r} not accepted; write p/q", line, col)
    if not _RATIONAL.fullmatch(tok):
        raise DslError(f"bad rational {tok!r}", line, col)
    q = Fraction(tok)
    return q


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


# expressions

_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?|\d*\.\d+)\s*\*)?\s*([A-Za-z_][\w]*(?:\*\*\d+)?(?:\s*\^\s*[A-Za-z_][\w]*(?:\*\*\d+)?)*|\d+(?:/\d+)?)\s*")


def _parse_terms(text: str, line: int | None = None, col0: int = 1) -> list[tuple[Fraction, list[tuple[str, int]], int]]:
    """Split ``-1/2*e1^e2 + x**2`` into (coefficient, [(name, power)], column) triples."""
    pos = 0
    terms = []
    text = text.rstrip()
    if not text.strip():
        raise DslError("empty expression", line, col0)
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise DslError(f"unexpected {text[pos:pos + 8]!r}", line, col0 + pos)
        sign, coeff, body = m.group(1), m.group(2), m.group(3)
        col = col0 + m.start(3)
        if sign is None and not first:
            raise DslError("expected '+' or '-' between terms", line, col0 + m.start())
        first = False
        c = Fraction(1) if coeff is None else parse_rational(coeff, line, col0 + m.start(2))
        if sign == "-":
            c = -c
        if re.fullmatch(r"\d+(?:/\d+)?", body):
            c *= Fraction(body)
            factors: list[tuple[str, int]] = []
        else:
            factors = []
            for f in body.split("^"):
                f = f.strip()
                if "**" in f:
                    nm, pw = f.split("**")
                    factors.append((nm, int(pw)))
                else:
                    factors.append((f, 1))
        terms.append((c, factors, col))
        pos = m.end()
    return terms


def parse_expression(text: str, table: GeneratorTable, degree: int | None = None,
                     line: int | None = None, col0: int = 1) -> Element:
    """Element of the free algebra on ``table`` written as a sum of monomials."""
    if _DECIMAL.search(text):
        m = _DECIMAL.search(text)
        raise DslError(f"decimal literal {m.group(0)!r} not accepted; write p/q", line, col0 + m.start())
    parts = []
    for c, factors, col in _parse_terms(text, line, col0):
        e = Element.one(table)
        for name, pw in factors:
            if name not in table.names:
                raise DslError(f"unknown generator {name!r}", line, col)
            g = Element.generator(table, name)
            for _ in range(pw):
                e = e * g
        e = e * c
        if not e.is_zero():
            if parts and e.degree != parts[0].degree:
                raise DslError("terms of different degrees", line, col)
            parts.append(e)
    if not parts:
        return Element.zero(table, degree or 0)
    out = parts[0]
    for e in parts[1:]:
        out = out + e
    if out.is_zero():
        return Element.zero(table, degree if degree is not None else parts[0].degree)
    if degree is not None and out.degree != degree:
        raise DslError(f"expression has degree {out.degree}, expected {degree}", line, col0)
    return out


def format_element(e: Element) -> str:
    return repr(e)


# Lie algebras

@dataclass
class DslDocument:
    kind: str
    body: object
    spans: dict[str, tuple[int, int]] = field(default_factory=dict)


def _lines(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if line.strip():
            yield i, line


def _parse_compact(body: str, line: int, col0: int) -> LieAlgebraSpec:
    s = body.strip()
    off = col0 + (len(body) - len(body.lstrip()))
    if not (s.startswith("(") and s.endswith(")")):
        raise DslError("compact form must be a parenthesised tuple", line, off)
    inner = s[1:-1]
    entries = inner.split(",")
    n = len(entries)
    if n > 9:
        raise DslError(f"compact form is limited to dimension 9 (got {n}); use the explicit form", line, off)
    names = [f"e{i + 1}" for i in range(n)]
    structure = []
    pos = off + 1
    for k, ent in enumerate(entries):
        d: dict[tuple[int, int], Fraction] = {}
        if ent.strip() != "0":
            for c, factors, col in _parse_compact_terms(ent, line, pos):
                i, j = factors
                if not (1 <= i <= n and 1 <= j <= n) or i == j:
                    raise DslError(f"bad index pair {i}{j} in a {n}-dimensional algebra", line, col)
                if i > j:
                    i, j, c = j, i, -c
                d[(i - 1, j - 1)] = d.get((i - 1, j - 1), Fraction(0)) + c
        structure.append({k2: v for k2, v in d.items() if v})
        pos += len(ent) + 1
    return LieAlgebraSpec(tuple(names), tuple(structure))


_CTERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*)?\s*(\d)(\d)\s*")


def _parse_compact_terms(text: str, line: int, col0: int):
    if _DECIMAL.search(text):
        m = _DECIMAL.search(text)
        raise DslError(f"decimal literal {m.group(0)!r} not accepted; write p/q", line, col0 + m.start())
    pos = 0
    out = []
    first = True
    while pos < len(text):
        m = _CTERM.match(text, pos)
        if not m or m.end() == pos:
            raise DslError(f"bad compact term near {text[pos:pos + 6]!r}", line, col0 + pos)
        if m.group(1) is None and not first:
            raise DslError("expected '+' or '-' between terms", line, col0 + m.start())
        first = False
        c = Fraction(1) if m.group(2) is None else Fraction(m.group(2))
        if m.group(1) == "-":
            c = -c
        out.append((c, (int(m.group(3)), int(m.group(4))), col0 + m.start(3)))
        pos = m.end()
    return out


def _parse_basis(spec: str, line: int, col: int) -> list[str]:
    m = re.fullmatch(r"\s*([A-Za-z_]+)(\d+)\.\.([A-Za-z_]+)(\d+)\s*", spec)
    if m:
        if m.group(1) != m.group(3):
            raise DslError("range endpoints use different prefixes", line, col)
        lo, hi = int(m.group(2)), int(m.group(4))
        return [f"{m.group(1)}{i}" for i in range(lo, hi + 1)]
    names = spec.split()
    for nm in names:
        if not re.fullmatch(r"[A-Za-z_]\w*", nm):
            raise DslError(f"bad basis name {nm!r}", line, col)
    return names


def parse_lie_dsl(text: str, check: bool = True) -> LieAlgebraSpec:
    lines = list(_lines(text))
    if not lines:
        raise DslError("empty document", 1, 1)
    ln, first = lines[0]
    head = first.strip()
    if head.startswith("("):
        spec = _parse_compact(first, ln, 1)
        rest = lines[1:]
    elif head.startswith("lie compact"):
        idx = first.index("compact") + len("compact")
        spec = _parse_compact(first[idx:], ln, idx + 1)
        rest = lines[1:]
    elif head.startswith("lie dim"):
        m = re.match(r"\s*lie\s+dim\s+(\d+)\s+basis\s+(.+)$", first)
        if not m:
            raise DslError("expected 'lie dim N basis NAMES'", ln, 1)
        n = int(m.group(1))
        names = _parse_basis(m.group(2), ln, m.start(2) + 1)
        if len(names) != n:
            raise DslError(f"dim {n} but {len(names)} basis names", ln, m.start(2) + 1)
        if len(set(names)) != n:
            raise DslError("repeated basis name", ln, m.start(2) + 1)
        table = GeneratorTable.exterior(names)
        diffs: dict[str, dict] = {}
        for ln2, l2 in lines[1:]:
            mm = re.match(r"\s*d\s+([A-Za-z_]\w*)\s*=\s*(.*)$", l2)
            if not mm:
                raise DslError("expected 'd NAME = expression'", ln2, 1)
            g = mm.group(1)
            if g not in names:
                raise DslError(f"unknown basis element {g!r}", ln2, mm.start(1) + 1)
            if g in diffs:
                raise DslError(f"second definition of d {g}", ln2, 1)
            e = parse_expression(mm.group(2), table, degree=2, line=ln2, col0=mm.start(2) + 1)
            diffs[g] = {tuple(table.names[i] for i in mono): c for mono, c in e.terms.items()}
        spec = LieAlgebraSpec.from_differentials(names, diffs)
        rest = []
    else:
        raise DslError("expected 'lie compact (...)', 'lie dim N basis ...' or a tuple", ln, 1)
    if rest:
        raise DslError("unexpected content after compact form", rest[0][0], 1)
    if check:
        res = jacobi_check(spec)
        if not res.ok:
            raise DslMathError(f"Jacobi identity fails for {res.triple} in component {res.component}")
    return spec


def _compact_ok(spec: LieAlgebraSpec) -> bool:
    return spec.dim <= 9 and list(spec.basis_names) == [f"e{i + 1}" for i in range(spec.dim)]


def _coef_prefix(c: Fraction, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    a = abs(c)
    return sign + ("" if a == 1 else f"{a}*")


def format_lie(spec: LieAlgebraSpec, compact: bool | None = None) -> str:
    """Canonical text; compact when the basis is e1..en with n <= 9."""
    if compact is None:
        compact = _compact_ok(spec)
    if compact:
        entries = []
        for d in spec.structure:
            if not d:
                entries.append("0")
                continue
            parts = []
            for (i, j), c in sorted(d.items()):
                parts.append(_coef_prefix(c, not parts) + f"{i + 1}{j + 1}")
            entries.append("".join(parts))
        return "lie compact (" + ",".join(entries) + ")\n"
    out = [f"lie dim {spec.dim} basis " + " ".join(spec.basis_names)]
    for k, name in enumerate(spec.basis_names):
        if spec.structure[k]:
            out.append(f"d {name} = {spec.d_of_generator(k)!r}")
    return "\n".join(out) + "\n"


# CDGAs

def parse_cdga_dsl(text: str) -> Cdga:
    lines = list(_lines(text))
    if not lines or lines[0][1].strip() != "cdga":
        raise DslError("document must start with 'cdga'", lines[0][0] if lines else 1, 1)
    gens: list[tuple[str, int]] = []
    dlines = []
    trunc = None
    for ln, l in lines[1:]:
        s = l.strip()
        if s.startswith("gen "):
            m = re.fullmatch(r"gen\s+([A-Za-z_]\w*)\s+(\d+)", s)
            if not m:
                raise DslError("expected 'gen NAME DEGREE'", ln, 1)
            if int(m.group(2)) < 1:
                raise DslError("generator degree must be positive", ln, m.start(2) + 1)
            if any(g == m.group(1) for g, _ in gens):
                raise DslError(f"duplicate generator {m.group(1)!r}", ln, m.start(1) + 1)
            gens.append((m.group(1), int(m.group(2))))
        elif s.startswith("truncate"):
            m = re.fullmatch(r"truncate\s+(\d+)", s)
            if not m:
                raise DslError("expected 'truncate N'", ln, 1)
            trunc = int(m.group(1))
        elif s.startswith("d "):
            dlines.append((ln, l))
        else:
            raise DslError(f"unexpected line {s!r}", ln, 1)
    if not gens:
        raise DslError("no generators", lines[0][0], 1)
    table = GeneratorTable.from_pairs(gens)
    diff = {}
    degs = dict(gens)
    for ln, l in dlines:
        m = re.match(r"\s*d\s+([A-Za-z_]\w*)\s*=\s*(.*)$", l)
        if not m:
            raise DslError("expected 'd NAME = expression'", ln, 1)
        g = m.group(1)
        if g not in degs:
            raise DslError(f"unknown generator {g!r}", ln, m.start(1) + 1)
        diff[g] = parse_expression(m.group(2), table, degree=degs[g] + 1, line=ln, col0=m.start(2) + 1)
    from .cdga import DSquaredError

    try:
        return Cdga(table, diff, truncation_degree=trunc)
    except DSquaredError as exc:
        raise DslMathError(str(exc)) from None


def format_cdga(c: Cdga) -> str:
    out = ["cdga"]
    if c.truncation_degree is not None:
        out.append(f"truncate {c.truncation_degree}")
    for nm, dg in zip(c.table.names, c.table.degrees):
        out.append(f"gen {nm} {dg}")
    for nm in c.table.names:
        e = c.d_generator(nm)
        if not e.is_zero():
            out.append(f"d {nm} = {e!r}")
    return "\n".join(out) + "\n"


# mapping tori

_CUP = re.compile(r"cup\s*\(\s*(\d+)\s*:\s*(\d+)\s*,\s*(\d+)\s*:\s*(\d+)\s*\)\s*->\s*(.*)$")
_PAIR = re.compile(r"\s*([+-])?\s*\(\s*(\d+)\s*,\s*([+-]?\d+(?:/\d+)?)\s*\)\s*")


def _parse_matrix(text: str, line: int, col: int) -> list[list[Fraction]]:
    rows = []
    for r in text.split(";"):
        toks = r.split()
        if not toks:
            raise DslError("empty matrix row", line, col)
        rows.append([parse_rational(t, line, col) for t in toks])
    if len({len(r) for r in rows}) != 1:
        raise DslError("matrix rows have different lengths", line, col)
    return rows


def parse_mapping_torus_spec(text: str, validate: bool = True):
    from .mappingtorus import MappingTorusSpec, validate_spec

    lines = list(_lines(text))
    if not lines or not lines[0][1].strip().startswith("mapping_torus"):
        raise DslError("document must start with 'mapping_torus'", lines[0][0] if lines else 1, 1)
    name = lines[0][1].strip()[len("mapping_torus"):].strip()
    section = None
    dims = None
    torus_n = None
    torus_names = None
    labels: dict[int, list[str]] = {}
    cups: dict[tuple[int, int], dict[tuple[int, int], dict[int, Fraction]]] = {}
    fundamental = None
    phi: dict[int, list[list[Fraction]]] = {}
    derive = False
    symp = None
    for ln, l in lines[1:]:
        s = l.strip()
        if s in ("[fiber]", "[phi]"):
            section = s[1:-1]
            continue
        if s.startswith("derive-exterior-powers"):
            val = s.split()[-1]
            if val not in ("true", "false"):
                raise DslError("derive-exterior-powers takes true or false", ln, 1)
            derive = val == "true"
            continue
        if s.startswith("symplectic"):
            symp = tuple(parse_rational(t, ln, 1) for t in s.split()[1:])
            continue
        if section == "fiber":
            if s.startswith("torus"):
                parts = s.split()
                if len(parts) < 2 or not parts[1].isdigit():
                    raise DslError("expected 'torus N [names...]'", ln, 1)
                torus_n = int(parts[1])
                torus_names = parts[2:] or None
                if torus_names is not None and len(torus_names) != torus_n:
                    raise DslError("torus names do not match the dimension", ln, 1)
            elif s.startswith("dims"):
                try:
                    dims = [int(t) for t in s.split()[1:]]
                except ValueError:
                    raise DslError("dims must be integers", ln, 1) from None
            elif s.startswith("labels"):
                m = re.fullmatch(r"labels\s+(\d+)\s*:\s*(.*)", s)
                if not m:
                    raise DslError("expected 'labels P: name ...'", ln, 1)
                labels[int(m.group(1))] = m.group(2).split()
            elif s.startswith("cup"):
                m = _CUP.match(s)
                if not m:
                    raise DslError("expected 'cup (p:i, q:j) -> (k, c) + ...'", ln, 1)
                p, i, q, j = (int(m.group(t)) for t in range(1, 5))
                rhs = m.group(5)
                vals: dict[int, Fraction] = {}
                pos = 0
                first = True
                while pos < len(rhs):
                    mm = _PAIR.match(rhs, pos)
                    if not mm or mm.end() == pos:
                        raise DslError(f"bad cup term near {rhs[pos:pos + 8]!r}", ln, m.start(5) + pos + 1)
                    if mm.group(1) is None and not first:
                        raise DslError("expected '+' between cup terms", ln, m.start(5) + pos + 1)
                    first = False
                    c = parse_rational(mm.group(3), ln, m.start(5) + mm.start(3) + 1)
                    if mm.group(1) == "-":
                        c = -c
                    k = int(mm.group(2))
                    vals[k] = vals.get(k, Fraction(0)) + c
                    pos = mm.end()
                cups.setdefault((p, q), {})[(i, j)] = vals
            elif s.startswith("fundamental"):
                try:
                    fundamental = int(s.split()[1])
                except (IndexError, ValueError):
                    raise DslError("expected 'fundamental INDEX'", ln, 1) from None
            else:
                raise DslError(f"unexpected fiber line {s!r}", ln, 1)
        elif section == "phi":
            m = re.fullmatch(r"(\d+)\s*:\s*(.*)", s)
            if not m:
                raise DslError("expected 'k: row ; row ; ...'", ln, 1)
            phi[int(m.group(1))] = _parse_matrix(m.group(2), ln, m.start(2) + 1)
        else:
            raise DslError(f"line outside a section: {s!r}", ln, 1)

    if torus_n is not None:
        ring = CohomologyRing.exterior(torus_n, torus_names)
    else:
        if dims is None:
            raise DslError("fiber section needs 'dims' or 'torus N'")
        n = len(dims) - 1
        cup = {}
        for (p, q), entries in cups.items():
            if p + q > n or p < 1 or q < 1:
                raise DslError(f"cup product degrees ({p}, {q}) out of range")
            tab = [[tuple(Fraction(0) for _ in range(dims[p + q])) for _ in range(dims[q])] for _ in range(dims[p])]
            for (i, j), vals in entries.items():
                if i >= dims[p] or j >= dims[q] or any(k >= dims[p + q] for k in vals):
                    raise DslError(f"cup index out of range in degrees ({p}, {q})")
                v = [Fraction(0)] * dims[p + q]
                for k, c in vals.items():
                    v[k] = c
                tab[i][j] = tuple(v)
            cup[(p, q)] = tab
        labs = None
        if labels:
            labs = []
            for p in range(n + 1):
                l = labels.get(p, ["1"] if p == 0 else [f"h{p}_{i}" for i in range(dims[p])])
                if len(l) != dims[p]:
                    raise DslError(f"labels for degree {p}: {len(l)} names for dimension {dims[p]}")
                labs.append(tuple(l))
            labs = tuple(labs)
        ring = CohomologyRing(dims=tuple(dims), cup=cup, top_degree=n, fundamental=fundamental, labels=labs)
    n = ring.top_degree
    mats = []
    if derive:
        if torus_n is None:
            raise DslError("derive-exterior-powers needs a torus fiber")
        if 1 not in phi:
            raise DslError("phi section needs the degree-1 matrix")
        m1 = Matrix(phi[1])
        extra = sorted(set(phi) - {0, 1})
        if extra:
            raise DslError(f"degrees {extra} given although exterior powers are derived")
        mats = [Matrix(phi[0]) if 0 in phi else Matrix([[1]])] + [exterior_power(m1, k) for k in range(1, n + 1)]
    else:
        for k in range(n + 1):
            if k not in phi:
                if k == 0:
                    mats.append(Matrix([[1]]))
                    continue
                if ring.dim(k) == 0:
                    mats.append(Matrix.zeros(0, 0))
                    continue
                raise DslError(f"phi section is missing degree {k}")
            mats.append(Matrix(phi[k]))
    spec = MappingTorusSpec(ring, mats, name=name, symplectic_class=symp, derived_exterior_powers=derive)
    if validate:
        res = validate_spec(spec)
        if not res:
            raise DslMathError("spec validation failed: " + "; ".join(res.diagnostics))
    return spec


def _is_standard_torus(ring: CohomologyRing) -> tuple[bool, list[str] | None]:
    n = ring.top_degree
    if len(ring.dims) != n + 1 or ring.dim(1) != n:
        return False, None
    names = list(ring.labels[1]) if ring.labels else None
    try:
        std = CohomologyRing.exterior(n, names)
    except Exception:
        return False, None
    same = std.dims == ring.dims and std.fundamental == ring.fundamental and all(
        std.cup_product(p, u, q, v) == ring.cup_product(p, u, q, v)
        for p in range(1, n) for q in range(1, n + 1 - p)
        for u in _units(ring.dim(p)) for v in _units(ring.dim(q))
    ) and std.labels == ring.labels
    default = names == [f"e{i + 1}" for i in range(n)]
    return same, None if default else names


def _units(m: int):
    for i in range(m):
        yield tuple(Fraction(int(j == i)) for j in range(m))


def _format_matrix(m: Matrix) -> str:
    return " ; ".join(" ".join(format_rational(x) for x in row) for row in m.rows)


def format_mapping_torus_spec(spec) -> str:
    ring = spec.fiber
    out = [f"mapping_torus {spec.name}".rstrip(), "[fiber]"]
    torus, names = _is_standard_torus(ring)
    n = ring.top_degree
    if torus:
        out.append(f"torus {n}" + ("" if names is None else " " + " ".join(names)))
    else:
        out.append("dims " + " ".join(str(d) for d in ring.dims))
        if ring.labels:
            for p in range(1, n + 1):
                out.append(f"labels {p}: " + " ".join(ring.labels[p]))
        for (p, q) in sorted(ring.cup):
            tab = ring.cup[(p, q)]
            for i, row in enumerate(tab):
                for j, v in enumerate(row):
                    terms = [(k, c) for k, c in enumerate(v) if c]
                    if terms:
                        rhs = " + ".join(f"({k}, {format_rational(c)})" for k, c in terms)
                        out.append(f"cup ({p}:{i}, {q}:{j}) -> {rhs}")
        if ring.fundamental is not None:
            out.append(f"fundamental {ring.fundamental}")
    out.append("[phi]")
    if spec.derived_exterior_powers and torus:
        out.append(f"1: {_format_matrix(spec.phi[1])}")
        out.append("derive-exterior-powers true")
    else:
        for k, m in enumerate(spec.phi):
            if m.nrows:
                out.append(f"{k}: {_format_matrix(m)}")
    if spec.symplectic_class is not None:
        out.append("symplectic " + " ".join(format_rational(x) for x in spec.symplectic_class))
    return "\n".join(out) + "\n"


def detect_kind(text: str) -> str:
    for _, l in _lines(text):
        s = l.strip()
        if s.startswith("mapping_torus"):
            return "mapping_torus"
        if s == "cdga":
            return "cdga"
        if s.startswith("lie") or s.startswith("("):
            return "lie"
        break
    raise DslError("cannot tell document kind; start with 'lie', 'cdga' or 'mapping_torus'", 1, 1)


def parse_document(text: str) -> DslDocument:
    kind = detect_kind(text)
    if kind == "lie":
        body = parse_lie_dsl(text)
    elif kind == "cdga":
        body = parse_cdga_dsl(text)
    else:
        body = parse_mapping_torus_spec(text)
    return DslDocument(kind, body)


def format_document(doc: DslDocument | object) -> str:
    from .mappingtorus import MappingTorusSpec

    body = doc.body if isinstance(doc, DslDocument) else doc
    if isinstance(body, LieAlgebraSpec):
        return format_lie(body)
    if isinstance(body, Cdga):
        return format_cdga(body)
    if isinstance(body, MappingTorusSpec):
        return format_mapping_torus_spec(body)
    raise TypeError(f"cannot format {type(body).__name__}")
