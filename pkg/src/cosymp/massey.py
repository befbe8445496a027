"""Triple and quadruple Massey products in finite-dimensional CDGAs.

Classes are passed as cocycles: either :class:`~cosymp.cdga.Element` values of a
free :class:`~cosymp.cdga.Cdga`, or ``(degree, coordinate vector)`` pairs for any
algebra with the linear interface (``dim``, ``d_matrix``, ``mul``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cdga import Cdga, CdgaError, CohomologyGroup, Element, TruncationError, cohomology
from .exactlinalg import Matrix, Subspace, Vector, is_zero, kernel_basis, lincomb, solve, vadd, vscale, vsub


class MasseyError(CdgaError):
    pass


@dataclass
class MasseyVerdict:
    defined: bool
    degree: int
    representative: Vector = ()
    indeterminacy: Subspace | None = None
    nonzero: bool = False
    cocycle: Vector = ()
    reason: str = ""
    labels: tuple[str, ...] = ()
    note: str = ""
    cochains: dict[str, Vector] = field(default_factory=dict)

    def format(self) -> str:
        if not self.defined:
            return f"undefined: {self.reason}"
        parts = [f"{c}*[{l}]" if c != 1 else f"[{l}]" for c, l in zip(self.representative, self.labels) if c]
        return " + ".join(parts) if parts else "0"


def _cocycle(alg, x) -> tuple[int, Vector]:
    if isinstance(x, Element):
        if not isinstance(alg, Cdga):
            raise MasseyError("Element passed for an algebra without generators")
        return x.degree, alg.to_vector(x)
    k, v = x
    return k, tuple(Fraction(c) for c in v)


def _guard(alg, degree: int) -> None:
    # the class of a degree-k cochain needs d on degree k, i.e. degree k+1 stored
    top = alg.max_degree - 1 if isinstance(alg, Cdga) else alg.max_degree
    if degree > top:
        raise TruncationError(f"Massey product lands in degree {degree}, beyond the usable range {top}")


def _check_cocycle(alg, k: int, v: Vector, name: str) -> None:
    if len(v) != alg.dim(k):
        raise MasseyError(f"{name}: vector of length {len(v)} in degree {k} of dimension {alg.dim(k)}")
    if not is_zero(alg.d_vec(k, v)):
        raise MasseyError(f"{name} is not a cocycle")


def _bar(k: int, v: Vector) -> Vector:
    return v if k % 2 else vscale(-1, v)


def _primitive(alg, k: int, target: Vector) -> Vector | None:
    """Echelon-canonical u of degree k-1 with du = target, or None."""
    if k == 0:
        return None if not is_zero(target) else ()
    return solve(alg.d_matrix(k - 1), target)


def _classes_times(alg, k: int, v: Vector, other_deg: int, left: bool, H: CohomologyGroup) -> list[Vector]:
    """Coordinates in H of v * h (or h * v) for h over a basis of H^other_deg."""
    if other_deg < 0:
        return []
    if other_deg == 0:
        reps = [(Fraction(1),)]
    else:
        reps = list(cohomology(alg, other_deg).reps)
    out = []
    for h in reps:
        prod = alg.mul(k, v, other_deg, h) if left else alg.mul(other_deg, h, k, v)
        out.append(H.coordinates(prod))
    return out


def triple_massey(alg, a, b, c) -> MasseyVerdict:
    """<[x],[y],[z]> with ds = (-1)^|x| x y, dt = (-1)^|y| y z and
    w = (-1)^|x| x t + (-1)^(|x|+|y|-1) s z.

    The indeterminacy x H^(|y|+|z|-1) + H^(|x|+|y|-1) z is returned as a subspace of
    cohomology coordinates.
    """
    (p, x), (q, y), (r, z) = _cocycle(alg, a), _cocycle(alg, b), _cocycle(alg, c)
    for k, v, nm in ((p, x, "first class"), (q, y, "second class"), (r, z, "third class")):
        _check_cocycle(alg, k, v, nm)
    deg = p + q + r - 1
    _guard(alg, deg)
    labels = tuple(alg.labels(deg)) if hasattr(alg, "labels") else ()
    xy = alg.mul(p, x, q, y)
    yz = alg.mul(q, y, r, z)
    s = _primitive(alg, p + q, vscale((-1) ** p, xy))
    if s is None:
        return MasseyVerdict(False, deg, reason="first product is not zero in cohomology")
    t = _primitive(alg, q + r, vscale((-1) ** q, yz))
    if t is None:
        return MasseyVerdict(False, deg, reason="second product is not zero in cohomology")
    w = vadd(vscale((-1) ** p, alg.mul(p, x, q + r - 1, t)), vscale((-1) ** (p + q - 1), alg.mul(p + q - 1, s, r, z)))
    H = cohomology(alg, deg)
    coords = H.coordinates(w)
    gens = _classes_times(alg, p, x, q + r - 1, True, H) + _classes_times(alg, r, z, p + q - 1, False, H)
    ind = Subspace.span(H.betti, gens)
    rep_labels = tuple(_rep_label(labels, v) for v in H.reps)
    return MasseyVerdict(
        True, deg, coords, ind, not ind.contains(coords), w, labels=rep_labels,
        cochains={"s": s, "t": t},
    )


def _rep_label(labels: Sequence[str], v: Vector) -> str:
    if not labels:
        return "?"
    parts = []
    for c, l in zip(v, labels):
        if c:
            parts.append(l if c == 1 else f"-{l}" if c == -1 else f"{c}*{l}")
    s = " + ".join(parts).replace("+ -", "- ")
    return s if len(parts) == 1 else f"({s})"


def quadruple_massey(alg, a1, a2, a3, a4, convention: str = "signed") -> MasseyVerdict:
    """<[x1],[x2],[x3],[x4]> with the signed defining-system convention

        d a_ij = sum_k bar(a_ik) a_(k+1)j,   value = sum_k bar(a_1k) a_(k+1)4,

    where bar(u) = (-1)^(1+|u|) u and a_ii = x_i.  The secondary cochains a12,
    a23, a34 are shifted by cohomology classes until both a13 and a24 exist
    (a linear system); the canonical solution sets free parameters to zero.
    ``indeterminacy`` is the variation family: changes of the value along the
    solution set of that system plus x1 H + H x4.  A class outside it is
    certainly nonzero; a class inside it is *not* certified to vanish.

    ``convention="unsigned"`` drops the bars (d a_ij = sum a_ik a_(k+1)j).  It is
    only meaningful when the resulting value is still a cocycle, which is checked.
    """
    if convention not in ("signed", "unsigned"):
        raise MasseyError(f"unknown convention {convention!r}")
    vs = [_cocycle(alg, t) for t in (a1, a2, a3, a4)]
    for i, (k, v) in enumerate(vs):
        _check_cocycle(alg, k, v, f"class {i + 1}")
    (d1, x1), (d2, x2), (d3, x3), (d4, x4) = vs
    deg = d1 + d2 + d3 + d4 - 2
    _guard(alg, deg)
    labels = tuple(alg.labels(deg)) if hasattr(alg, "labels") else ()
    note = "nonvanishing is certified; vanishing modulo the variation family is not a proof of vanishing"

    def bar(k, v):
        return vscale((-1) ** (1 + k), v) if convention == "signed" else v

    mul = alg.mul
    e12, e23, e34 = d1 + d2 - 1, d2 + d3 - 1, d3 + d4 - 1
    e13, e24 = d1 + d2 + d3 - 2, d2 + d3 + d4 - 2
    base = {}
    for name, (k, u), (l, v), e in (("a12", vs[0], vs[1], e12), ("a23", vs[1], vs[2], e23), ("a34", vs[2], vs[3], e34)):
        sol = _primitive(alg, e + 1, mul(k, bar(k, u), l, v))
        if sol is None:
            return MasseyVerdict(False, deg, reason=f"product for {name} is not zero in cohomology", note=note)
        base[name] = sol
    H12 = list(cohomology(alg, e12).reps) if e12 > 0 else []
    H23 = list(cohomology(alg, e23).reps) if e23 > 0 else []
    H34 = list(cohomology(alg, e34).reps) if e34 > 0 else []
    n12, n23, n34 = len(H12), len(H23), len(H34)
    nparam = n12 + n23 + n34

    def secondaries(P):
        lam, mu, nu = P[:n12], P[n12:n12 + n23], P[n12 + n23:]
        a12 = vadd(base["a12"], lincomb(lam, H12, len(base["a12"])))
        a23 = vadd(base["a23"], lincomb(mu, H23, len(base["a23"])))
        a34 = vadd(base["a34"], lincomb(nu, H34, len(base["a34"])))
        return a12, a23, a34

    def rhs(P):
        a12, a23, a34 = secondaries(P)
        r13 = vadd(mul(d1, bar(d1, x1), e23, a23), mul(e12, bar(e12, a12), d3, x3))
        r24 = vadd(mul(d2, bar(d2, x2), e34, a34), mul(e23, bar(e23, a23), d4, x4))
        return r13, r24

    H13 = cohomology(alg, e13 + 1)
    H24 = cohomology(alg, e24 + 1)

    def obstruction(P):
        r13, r24 = rhs(P)
        return H13.coordinates(r13) + H24.coordinates(r24)

    zeroP = (Fraction(0),) * nparam
    c0 = obstruction(zeroP)
    cols = []
    for i in range(nparam):
        e = tuple(Fraction(int(j == i)) for j in range(nparam))
        cols.append(vsub(obstruction(e), c0))
    M = Matrix.from_columns(cols, len(c0))
    P0 = solve(M, vscale(-1, c0))
    if P0 is None:
        return MasseyVerdict(
            False, deg,
            reason=f"no defining system: the {len(c0)}x{nparam} system for the shifts of a12, a23, a34 is inconsistent",
            note=note,
        )

    H = cohomology(alg, deg)

    def value(P):
        a12, a23, a34 = secondaries(P)
        r13, r24 = rhs(P)
        a13 = _primitive(alg, e13 + 1, r13)
        a24 = _primitive(alg, e24 + 1, r24)
        w = vadd(vadd(mul(d1, bar(d1, x1), e24, a24), mul(e12, bar(e12, a12), e34, a34)), mul(e13, bar(e13, a13), d4, x4))
        return w, {"a12": a12, "a23": a23, "a34": a34, "a13": a13, "a24": a24}

    w, system = value(P0)
    if not is_zero(alg.d_vec(deg, w)):
        raise MasseyError("defining-system value is not a cocycle")
    coords = H.coordinates(w)
    # the value is quadratic along the solution set; first and second differences span its variation
    dirs = kernel_basis(M).basis
    f0 = coords
    fs = [H.coordinates(value(vadd(P0, k))[0]) for k in dirs]
    gens = [vsub(f, f0) for f in fs]
    for i, ki in enumerate(dirs):
        for j in range(i, len(dirs)):
            kj = dirs[j]
            fij = H.coordinates(value(vadd(vadd(P0, ki), kj))[0])
            gens.append(vadd(vsub(vsub(fij, fs[i]), fs[j]), f0))
    gens += _classes_times(alg, d1, x1, e24, True, H) + _classes_times(alg, d4, x4, e13, False, H)
    ind = Subspace.span(H.betti, gens)
    rep_labels = tuple(_rep_label(labels, v) for v in H.reps)
    return MasseyVerdict(True, deg, coords, ind, not ind.contains(coords), w, labels=rep_labels, note=note, cochains=system)
