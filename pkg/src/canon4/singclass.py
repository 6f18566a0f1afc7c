"""Exact classification of curve singularities on a (2,3) scheme.

Every singular point of the curve that is not a singular point of both
defining hypersurfaces lies on at least one smooth hypersurface (the
quadric or the cubic).  We parametrize that hypersurface near the point
by an exact implicit solve, restrict the other equation to get a planar
function germ, and normalize the germ by iterated square splitting: keep
solving the critical-point equation of a variable whose square appears
and substituting back, each round splitting off one square.  What is
left decides the type:

* nothing left (corank 0): an ordinary node, A1;
* one variable left: the residual valuation m gives A_{m-1}, certified
  whenever m is at most the jet order;
* two variables left: a square-free cubic jet gives D4, anything
  degenerate lands in the coarse Corank2Other bucket.

Types are certified from finite jet data only, so a residual that
vanishes to the working order is reported as inconclusive rather than
silently promoted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import scanning
from .domains import QQ, QuadExtElement, QuadExtField
from .linalg import bareiss_det, generic_rank, primitive_vector
from .multipoly import MultiPoly
from .resultants import binary_cubic_discriminant, sylvester_matrix
from .scheme import CURVE_VARS, SchemeError, TwoThreeScheme, factor_split_quadric
from .series import poly_implicit_solve, poly_substitute_truncated
from .unipoly import poly_gcd, split_roots, trim

DEFAULT_JET_ORDER = 16

CHART_VARS = ("u1", "u2", "u3")


class PointNotOnScheme(SchemeError):
    pass


class PointNotSingular(SchemeError):
    pass


class SimultaneousSingularPoint(SchemeError):
    """Both gradients vanish: the point is singular on quadric and cubic."""

    def __init__(self, point):
        super().__init__(f"both hypersurfaces are singular at {point}")
        self.point = tuple(point)


@dataclass(frozen=True)
class SingType:
    kind: str
    k: int | None = None
    jet_order: int | None = None

    @classmethod
    def A(cls, k: int) -> "SingType":
        if k < 1:
            raise ValueError("A_k needs k >= 1")
        return cls("A", k=k)

    @classmethod
    def D4(cls) -> "SingType":
        return cls("D4")

    @classmethod
    def corank2_other(cls) -> "SingType":
        return cls("Corank2Other")

    @classmethod
    def non_isolated(cls) -> "SingType":
        return cls("NonIsolated")

    @classmethod
    def inconclusive(cls, order: int) -> "SingType":
        return cls("Inconclusive", jet_order=order)

    @property
    def label(self) -> str:
        if self.kind == "A":
            return f"A{self.k}"
        if self.kind == "Inconclusive":
            return f"InconclusiveAtJet({self.jet_order})"
        return self.kind

    def __str__(self):
        return self.label


def parse_sing_type(label: str) -> SingType:
    if label.startswith("A") and label[1:].isdigit():
        return SingType.A(int(label[1:]))
    if label == "D4":
        return SingType.D4()
    if label == "Corank2Other":
        return SingType.corank2_other()
    if label == "NonIsolated":
        return SingType.non_isolated()
    if label.startswith("InconclusiveAtJet(") and label.endswith(")"):
        return SingType.inconclusive(int(label[len("InconclusiveAtJet("):-1]))
    raise ValueError(f"unknown singularity label {label!r}")


# ----------------------------------------------------------------------
# the splitting engine


def classify_affine_singularity(g: MultiPoly, order: int = DEFAULT_JET_ORDER):
    """Classify a germ with g(0) = 0 and vanishing differential.

    Returns (SingType, details); details records the corank, the number
    of squares split off, and the residual jet for inspection.
    """
    dom = g.dom
    g = g.truncate(order)
    origin = [0] * len(g.vars)
    if g.evaluate(origin) != dom.zero:
        raise ValueError("germ must vanish at the origin")
    for v in g.vars:
        if g.partial(v).evaluate(origin):
            raise ValueError("germ must have vanishing differential")
    splits = 0
    while g.vars:
        q2 = g.homogeneous_component(2)
        if not q2:
            break
        n = len(g.vars)
        pivot = None
        for i, v in enumerate(g.vars):
            e = tuple(2 if t == i else 0 for t in range(n))
            if q2.coefficient(e):
                pivot = v
                break
        if pivot is None:
            # no square present: a cross term exists; the shear
            # x_j -> x_j + x_i creates the square of x_i
            found = False
            for i in range(n):
                for j in range(i + 1, n):
                    e = tuple(1 if t in (i, j) else 0 for t in range(n))
                    if q2.coefficient(e):
                        images = {
                            v: MultiPoly.variable(v, g.vars, dom) for v in g.vars
                        }
                        images[g.vars[j]] = images[g.vars[j]] + images[g.vars[i]]
                        g = poly_substitute_truncated(g, images, order)
                        pivot = g.vars[i]
                        found = True
                        break
                if found:
                    break
        crit = g.partial(pivot)
        psi = poly_implicit_solve(crit, pivot, order)
        rest = tuple(v for v in g.vars if v != pivot)
        images = {v: MultiPoly.variable(v, rest, dom) for v in rest}
        images[pivot] = psi
        g = poly_substitute_truncated(g, images, order)
        splits += 1
    corank = len(g.vars)
    details = {"corank": corank, "splits": splits, "residual": g}
    if corank == 0:
        return SingType.A(1), details
    if corank == 1:
        if not g:
            return SingType.inconclusive(order), details
        m = min(sum(e) for e in g.terms)
        if m < 3:
            raise AssertionError("residual valuation below 3 after splitting")
        return SingType.A(m - 1), details
    if corank == 2:
        c3 = g.homogeneous_component(3)
        if c3:
            n2 = len(g.vars)
            coeffs = [
                c3.coefficient(tuple(3 - i if t == 0 else i if t == 1 else 0 for t in range(n2)))
                for i in range(4)
            ]
            if binary_cubic_discriminant(coeffs):
                return SingType.D4(), details
        return SingType.corank2_other(), details
    return SingType.corank2_other(), details


# ----------------------------------------------------------------------
# points on the scheme


@dataclass
class PointRecord:
    point: tuple
    sing_type: SingType
    host: str
    location: str
    corank: int
    tangent: tuple | None = None
    notes: tuple = ()

    @property
    def field_label(self) -> str:
        ext = next((c for c in self.point if isinstance(c, QuadExtElement)), None)
        if ext is None:
            return "QQ"
        return ext.field.name

    def to_wire(self):
        return {
            "point": [_scalar_wire(c) for c in self.point],
            "field": self.field_label,
            "type": self.sing_type.label,
            "host": self.host,
            "location": self.location,
            "corank": self.corank,
            "tangent": None if self.tangent is None else [_scalar_wire(c) for c in self.tangent],
            "notes": list(self.notes),
        }


def _scalar_wire(c):
    if isinstance(c, QuadExtElement):
        return {"a0": str(c.a0), "a1": str(c.a1)}
    return str(Fraction(c))


def _point_domain(point):
    ext = next((c for c in point if isinstance(c, QuadExtElement)), None)
    if ext is None:
        return QQ, tuple(Fraction(c) for c in point)
    K = ext.field
    return K, tuple(K.coerce(c) for c in point)


def verify_singular_point(scheme: TwoThreeScheme, point, dom=None):
    """Check membership and singularity; returns (dom, pt, grad_q, grad_f).

    Raises PointNotOnScheme / PointNotSingular, and
    SimultaneousSingularPoint when both gradients vanish (the point is
    then outside the reach of hypersurface-germ analysis).
    """
    dom, pt = _point_domain(point)
    if all(not c for c in pt):
        raise PointNotOnScheme("zero vector is not a projective point")
    q = scheme.q if dom == QQ else scheme.q.change_domain(dom)
    f = scheme.f if dom == QQ else scheme.f.change_domain(dom)
    if q.evaluate(pt) != dom.zero:
        raise PointNotOnScheme(f"quadric does not vanish at {point}")
    if f.evaluate(pt) != dom.zero:
        raise PointNotOnScheme(f"cubic does not vanish at {point}")
    gq = [q.partial(v).evaluate(pt) for v in CURVE_VARS]
    gf = [f.partial(v).evaluate(pt) for v in CURVE_VARS]
    if not any(gq) and not any(gf):
        raise SimultaneousSingularPoint(pt)
    for i in range(4):
        for j in range(i + 1, 4):
            if gq[i] * gf[j] - gq[j] * gf[i]:
                raise PointNotSingular(f"curve is smooth at {point}")
    return dom, pt, gq, gf


def classify_point(scheme: TwoThreeScheme, point, order: int = DEFAULT_JET_ORDER) -> PointRecord:
    """Full local classification of one singular point of the curve."""
    dom, pt, gq, gf = verify_singular_point(scheme, point)
    q = scheme.q if dom == QQ else scheme.q.change_domain(dom)
    f = scheme.f if dom == QQ else scheme.f.change_domain(dom)
    if any(gq):
        host, other, host_label = q, f, "quadric"
    else:
        host, other, host_label = f, q, "cubic"

    lead = next(i for i in range(4) if pt[i])
    frame_cols = [list(pt)] + [
        [dom.coerce(1 if t == j else 0) for t in range(4)] for j in range(4) if j != lead
    ]
    # affine chart around the point: x = pt + u1 c1 + u2 c2 + u3 c3
    images = {}
    for i, name in enumerate(CURVE_VARS):
        terms = {(0, 0, 0): pt[i]}
        for j in range(1, 4):
            c = frame_cols[j][i]
            if c:
                e = tuple(1 if t == j - 1 else 0 for t in range(3))
                terms[e] = terms.get(e, dom.zero) + c
        images[name] = MultiPoly(dom, CHART_VARS, terms)
    host_aff = host.substitute(images)
    other_aff = other.substitute(images)

    solve_var = None
    for v in CHART_VARS:
        if host_aff.partial(v).evaluate((0, 0, 0)):
            solve_var = v
            break
    if solve_var is None:
        raise AssertionError("host gradient vanished in the chart")
    psi = poly_implicit_solve(host_aff, solve_var, order)
    rest = tuple(v for v in CHART_VARS if v != solve_var)
    sub = {v: MultiPoly.variable(v, rest, dom) for v in rest}
    sub[solve_var] = psi
    germ = poly_substitute_truncated(other_aff, sub, order)
    if germ.evaluate((0, 0)) != dom.zero or any(
        germ.partial(v).evaluate((0, 0)) for v in rest
    ):
        raise PointNotSingular(f"restricted germ is regular at {point}")
    sing_type, details = classify_affine_singularity(germ, order)

    # location relative to the quadric's singular locus
    G = scheme.gram
    gv = [sum(dom.coerce(G[i][j]) * pt[j] for j in range(4)) for i in range(4)]
    if any(gv):
        location = "quadric_smooth_point"
    else:
        location = "quadric_vertex" if scheme.quadric_rank() == 3 else "quadric_singular_line"

    tangent = _branch_tangent(germ, psi, solve_var, rest, frame_cols, dom)
    notes = []
    if details["corank"] >= 3:
        notes.append("residual corank >= 3")
    return PointRecord(
        point=pt,
        sing_type=sing_type,
        host=host_label,
        location=location,
        corank=details["corank"],
        tangent=tangent,
        notes=tuple(notes),
    )


def _branch_tangent(germ, psi, solve_var, rest, frame_cols, dom):
    """Tangent direction of the (unique) branch line for A_k, k >= 2.

    For corank-1 germs the quadratic part has a one-dimensional kernel;
    pushed through the chart it spans, with the point, the tangent line
    of every branch.  Nodes (corank 0 quadratic part of rank 2) have two
    tangents and return None.
    """
    q2 = germ.homogeneous_component(2)
    if not q2:
        return None
    a = q2.coefficient((2, 0))
    b = q2.coefficient((1, 1))
    c = q2.coefficient((0, 2))
    # 2x2 Gram [[a, b/2], [b/2, c]] must have rank 1
    if 4 * (a * c) - b * b:
        return None
    half = dom.coerce(Fraction(1, 2))
    rows = [[a, b * half], [b * half, c]]
    row = rows[0] if any(rows[0]) else rows[1]
    alpha, beta = -row[1], row[0]
    lin = {v: psi.partial(v).evaluate((0, 0)) for v in rest}
    chart_dir = {rest[0]: alpha, rest[1]: beta, solve_var: lin[rest[0]] * alpha + lin[rest[1]] * beta}
    d = [dom.zero] * 4
    for j, v in enumerate(CHART_VARS):
        comp = chart_dir[v]
        if comp:
            for i in range(4):
                d[i] = d[i] + comp * frame_cols[j + 1][i]
    if all(isinstance(x, Fraction) for x in d):
        return tuple(Fraction(x) for x in primitive_vector(d))
    return tuple(d)


# ----------------------------------------------------------------------
# whole-scheme analysis


@dataclass
class ScanCheck:
    prime: int
    scan_count: int
    expected_count: int
    matched: bool | None
    note: str = ""

    def to_wire(self):
        return {
            "prime": self.prime,
            "scan_count": self.scan_count,
            "expected_count": self.expected_count,
            "matched": self.matched,
            "note": self.note,
        }


@dataclass
class SchemeAnalysis:
    scheme: TwoThreeScheme
    records: list
    simultaneous: list
    quadric_rank: int
    quadric_kernel: list
    complete_intersection: bool
    scan_checks: list = field(default_factory=list)

    @property
    def complete(self):
        """True when every scan agreed with the exact point list."""
        usable = [c.matched for c in self.scan_checks if c.matched is not None]
        if not usable:
            return None
        return all(usable)

    @property
    def type_labels(self):
        return sorted(r.sing_type.label for r in self.records)

    def to_wire(self):
        return {
            "quadric_rank": self.quadric_rank,
            "quadric_kernel": [[str(x) for x in v] for v in self.quadric_kernel],
            "complete_intersection": self.complete_intersection,
            "points": [r.to_wire() for r in self.records],
            "simultaneous_points": [[_scalar_wire(c) for c in pt] for pt in self.simultaneous],
            "scans": [c.to_wire() for c in self.scan_checks],
            "complete": self.complete,
            "types": self.type_labels,
        }


def classify_scheme(
    scheme: TwoThreeScheme,
    points=(),
    order: int = DEFAULT_JET_ORDER,
    primes=(101, 103),
    scan: bool = True,
) -> SchemeAnalysis:
    """Classify the given candidate singular points and cross-check mod p.

    The exact side classifies each candidate; the scan side enumerates
    all F_p singular points for each prime and checks they are exactly
    the reductions of the candidates, which certifies completeness of
    the candidate list (two primes are used so that a single unlucky
    reduction cannot hide a point).
    """
    records = []
    simultaneous = []
    for pt in points:
        try:
            records.append(classify_point(scheme, pt, order))
        except SimultaneousSingularPoint as exc:
            simultaneous.append(exc.point)
    checks = []
    if scan:
        for p in primes:
            try:
                actual = scanning.curve_singular_points(scheme, p)
                expected = set()
                for pt in list(points):
                    expected.update(scanning.reduce_point_mod_p(pt, p))
                checks.append(
                    ScanCheck(p, len(actual), len(expected), actual == expected)
                )
            except scanning.PrimeUnusable as exc:
                checks.append(ScanCheck(p, -1, -1, None, note=str(exc)))
    return SchemeAnalysis(
        scheme=scheme,
        records=records,
        simultaneous=simultaneous,
        quadric_rank=scheme.quadric_rank(),
        quadric_kernel=scheme.quadric_kernel(),
        complete_intersection=scheme.is_complete_intersection(),
        scan_checks=checks,
    )


# ----------------------------------------------------------------------
# plane components through a singular point


@dataclass
class PlaneTestResult:
    verdict: bool | None
    kind: str
    detail: str

    def to_wire(self):
        return {"verdict": self.verdict, "kind": self.kind, "detail": self.detail}


def plane_component_test(scheme: TwoThreeScheme, record: PointRecord) -> PlaneTestResult:
    """Does a plane component of the curve pass through this point?

    Only meaningful for A_k points with k >= 2 (a single branch tangent
    line L): any plane component through the point is a curve branch
    there, so its tangent is L and the plane contains L.  On a split
    (rank <= 2) quadric every component is planar.  Otherwise candidates
    are the line L itself (when it lies on the quadric) or a conic cut
    by a plane of the pencil through L; the pencil is searched exactly
    through a resultant in the pencil parameter.
    """
    if scheme.quadric_rank() <= 2:
        return PlaneTestResult(True, "split_quadric", "the quadric is a union of planes; every component is planar")
    if record.sing_type.kind != "A" or (record.sing_type.k or 0) < 2:
        return PlaneTestResult(None, "not_applicable", "test needs an A_k point with k >= 2")
    if record.tangent is None:
        return PlaneTestResult(None, "no_tangent", "branch tangent unavailable")
    dom, pt = _point_domain(record.point)
    if dom != QQ:
        return PlaneTestResult(None, "irrational_point", "pencil search implemented over Q only")
    d = tuple(Fraction(x) for x in record.tangent)
    q, f = scheme.q, scheme.f
    if q.evaluate(d) == 0:
        # tangent line lies on the quadric: it is the only candidate
        line_vals = _restrict_to_span(f, [pt, d])
        if not line_vals:
            return PlaneTestResult(True, "line_component", f"the tangent line through {_pt_str(pt)} lies on the curve")
        return PlaneTestResult(
            False,
            "tangent_line_off_curve",
            "the branch tangent lies on the quadric but not on the cubic; "
            "plane sections through it split off that line, so no plane "
            "component can pass through the point",
        )
    # pencil of planes through the tangent line
    for attempt in range(3):
        basis = _complete_basis(pt, d, attempt)
        if basis is None:
            continue
        w0, w1 = basis
        res = _pencil_resultant(q, f, pt, d, w0, w1)
        if res is None:
            continue
        gcd_poly = res
        if len(trim(gcd_poly)) == 0:
            # resultant identically zero in the pencil: retry with a new frame
            continue
        candidates = []
        rational, quads, unresolved = (None, None, None)
        if len(trim(gcd_poly)) == 1:
            rational, quads, unresolved = [], [], []
        else:
            out = split_roots(gcd_poly)
            if out is None:
                return PlaneTestResult(None, "gcd_intractable", "pencil polynomial too large to factor")
            rational, quads, unresolved = out
        for t0 in rational:
            w = [a + t0 * b for a, b in zip(w0, w1)]
            witness = _plane_common_component(q, f, pt, d, w, QQ)
            if witness:
                return PlaneTestResult(True, "plane_witness", witness)
        for (b, c) in quads:
            K = QuadExtField(b, c)
            th = K.gen
            w = [K.coerce(a) + th * K.coerce(bb) for a, bb in zip(w0, w1)]
            witness = _plane_common_component(q, f, pt, d, w, K)
            if witness:
                return PlaneTestResult(True, "plane_witness", witness)
        # the plane at infinity of the pencil
        witness = _plane_common_component(q, f, pt, d, w1, QQ)
        if witness:
            return PlaneTestResult(True, "plane_witness", witness)
        if unresolved:
            return PlaneTestResult(None, "unresolved_roots", "pencil parameter polynomial has an unfactored piece of degree >= 3")
        return PlaneTestResult(
            False,
            "pencil_resultant",
            "no plane through the branch tangent cuts a common component "
            "(resultant certificate over the full pencil)",
        )
    return PlaneTestResult(None, "degenerate_frames", "could not find a nondegenerate pencil frame")


def _pt_str(pt):
    return "(" + " : ".join(str(x) for x in pt) + ")"


def _restrict_to_span(F: MultiPoly, vectors):
    """Restriction of F to the projective span of the given points."""
    dom = F.dom
    k = len(vectors)
    vars = tuple(f"s{i}" for i in range(k))
    images = {}
    for i, name in enumerate(F.vars):
        terms = {}
        for j, v in enumerate(vectors):
            c = dom.coerce(v[i])
            if c:
                terms[tuple(1 if t == j else 0 for t in range(k))] = c
        images[name] = MultiPoly(dom, vars, terms)
    return F.substitute(images)


def _complete_basis(pt, d, attempt):
    """Two rational vectors completing (pt, d) to a basis of Q^4."""
    from .linalg import rank as mat_rank

    pool = [
        [Fraction(1 if t == j else 0) for t in range(4)] for j in range(4)
    ]
    if attempt == 1:
        pool = pool[::-1]
    elif attempt == 2:
        pool = [
            [Fraction(1), Fraction(1), Fraction(0), Fraction(0)],
            [Fraction(0), Fraction(1), Fraction(1), Fraction(0)],
            [Fraction(0), Fraction(0), Fraction(1), Fraction(1)],
            [Fraction(1), Fraction(0), Fraction(0), Fraction(1)],
        ]
    base = [list(map(Fraction, pt)), list(map(Fraction, d))]
    out = []
    for cand in pool:
        if mat_rank(base + [cand]) > len(base):
            base.append(cand)
            out.append(cand)
        if len(out) == 2:
            return out
    return None


def _pencil_resultant(q, f, pt, d, w0, w1):
    """Gcd over Q[t] of the (al, be)-coefficients of Res_ga(q|P_t, f|P_t).

    P_t = span(pt, d, w0 + t w1).  Returns None when the resultant is
    identically zero (degenerate frame), otherwise the gcd coefficient
    list (low degree first).
    """
    vars = ("al", "be", "ga", "t")
    dom = QQ
    images = {}
    for i, name in enumerate(CURVE_VARS):
        terms = {}
        if pt[i]:
            terms[(1, 0, 0, 0)] = Fraction(pt[i])
        if d[i]:
            terms[(0, 1, 0, 0)] = Fraction(d[i])
        if w0[i]:
            terms[(0, 0, 1, 0)] = Fraction(w0[i])
        if w1[i]:
            terms[(0, 0, 1, 1)] = Fraction(w1[i])
        images[name] = MultiPoly(dom, vars, terms)
    qP = q.substitute(images)
    fP = f.substitute(images)
    # Sylvester in ga with fixed shape (2, 3)
    qc = _ga_coeffs(qP, 2)
    fc = _ga_coeffs(fP, 3)
    M = sylvester_matrix(qc, fc)
    one = MultiPoly.constant(1, ("al", "be", "t"), dom)
    R = bareiss_det(M, one, lambda a, b: a.exact_div(b))
    if not R:
        return None
    # collect coefficients of al^i be^j as polynomials in t
    buckets = {}
    ti = R.vars.index("t")
    for e, c in R.terms.items():
        key = tuple(x for i, x in enumerate(e) if i != ti)
        buckets.setdefault(key, {})[e[ti]] = c
    g = []
    for tb in buckets.values():
        coeffs = [tb.get(i, Fraction(0)) for i in range(max(tb) + 1)]
        g = poly_gcd(g, coeffs) if g else trim(coeffs)
        if len(g) == 1:
            break
    return g


def _ga_coeffs(P: MultiPoly, deg: int):
    """Coefficients of ga^deg ... ga^0 as polynomials in (al, be, t)."""
    gi = P.vars.index("ga")
    rest = tuple(v for v in P.vars if v != "ga")
    out = [dict() for _ in range(deg + 1)]
    for e, c in P.terms.items():
        k = e[gi]
        if k > deg:
            raise ValueError("ga-degree exceeds expected bound")
        key = tuple(x for i, x in enumerate(e) if i != gi)
        out[k][key] = out[k].get(key, Fraction(0)) + c
    return [MultiPoly(P.dom, rest, out[k]) for k in range(deg, -1, -1)]


def _plane_common_component(q, f, pt, d, w, dom):
    """Verify honestly whether the plane span(pt, d, w) cuts a common
    component of quadric and cubic passing through pt.

    Returns a human-readable witness string, or None.
    """
    vecs = [pt, d, w]
    if dom != QQ:
        qe = q.change_domain(dom)
        fe = f.change_domain(dom)
        vecs = [[dom.coerce(x) for x in v] for v in vecs]
    else:
        qe, fe = q, f
    qP = _restrict_to_span(qe, vecs)
    fP = _restrict_to_span(fe, vecs)
    if not qP:
        return None  # plane inside the quadric cannot happen for rank >= 3
    if not fP:
        return f"cubic vanishes on the whole plane through {_pt_str(pt)}"
    # full conic divides the cubic?
    quot, rem = fP.divmod_poly(qP)
    if not rem:
        return "plane section of the quadric is a conic component of the curve"
    # degenerate conic: try splitting into lines
    G3 = _gram3(qP)
    if generic_rank(G3) <= 2:
        try:
            if dom == QQ:
                l1, l2 = factor_split_quadric(qP)
            else:
                l1 = l2 = None
        except SchemeError:
            l1 = l2 = None
        if l1 is not None:
            for ell in (l1, l2):
                fE = fP.change_domain(ell.dom) if ell.dom != fP.dom else fP
                if not fE.divmod_poly(ell)[1] and ell.evaluate((1, 0, 0)) == ell.dom.zero:
                    return "plane section splits off a line component through the point"
            return None
        return None
    return None


def _sym_e(i, j, n):
    e = [0] * n
    e[i] += 1
    e[j] += 1
    return tuple(e)


def _gram3(qP: MultiPoly):
    dom = qP.dom
    half = dom.coerce(Fraction(1, 2))
    n = len(qP.vars)
    G = [[dom.zero for _ in range(n)] for _ in range(n)]
    for e, c in qP.terms.items():
        idx = [i for i, x in enumerate(e) if x]
        if len(idx) == 1:
            G[idx[0]][idx[0]] = c
        else:
            i, j = idx
            G[i][j] = c * half
            G[j][i] = c * half
    return G
