"""Cubic threefolds with a marked double point, and the (2,3) dictionary.

A cubic hypersurface in P^4 that is double at (1,0,...,0) can be written
as x0*q(x1..x4) + f(x1..x4); conversely a quadric/cubic pair in P^3
determines such a threefold.  This module carries singularity data back
and forth across that construction: the type of the threefold at the
marked point is a function of the quadric's rank and the curve's local
type at the vertex, and the other singular points of the threefold sit
one per singular curve point at which the quadric is smooth.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import scanning
from .domains import QQ
from .linalg import primitive_vector
from .multipoly import MultiPoly
from .resultants import binary_cubic_discriminant
from .scheme import CURVE_VARS, SchemeError, TwoThreeScheme
from .singclass import (
    DEFAULT_JET_ORDER,
    PointRecord,
    SingType,
    _point_domain,
    _scalar_wire,
    classify_affine_singularity,
)

CUBIC_VARS = ("x0", "x1", "x2", "x3", "x4")
CHART4 = ("u1", "u2", "u3", "u4")


class CorrespondenceError(ValueError):
    """Raised when an operation's hypotheses are violated."""


# ----------------------------------------------------------------------
# the threefold


class CubicThreefold:
    """Homogeneous cubic in five variables, optionally with a marked
    double point."""

    __slots__ = ("F", "marked")

    def __init__(self, F: MultiPoly, marked=None):
        if F.vars != CUBIC_VARS:
            if set(F.vars) <= set(CUBIC_VARS):
                F = F.with_vars(CUBIC_VARS)
            else:
                raise CorrespondenceError(
                    f"cubic must use variables {CUBIC_VARS}"
                )
        if F.dom != QQ:
            raise CorrespondenceError("cubic must have rational coefficients")
        if F.is_zero() or not F.is_homogeneous(3):
            raise CorrespondenceError("F must be a nonzero homogeneous cubic")
        self.F = F.monic()
        if marked is not None:
            marked = tuple(primitive_vector([Fraction(c) for c in marked]))
            if len(marked) != 5 or not any(marked):
                raise CorrespondenceError("marked point must be a point of P^4")
            if self.multiplicity_at(marked) < 2:
                raise CorrespondenceError(
                    f"marked point {marked} is not a double point of the cubic"
                )
        self.marked = marked

    @classmethod
    def parse(cls, text: str, marked=None) -> "CubicThreefold":
        return cls(MultiPoly.parse(text, CUBIC_VARS), marked)

    def multiplicity_at(self, point) -> int:
        """Multiplicity of the hypersurface at a point (0 if off it)."""
        pt = [Fraction(c) for c in point]
        if self.F.evaluate(pt):
            return 0
        if any(g.evaluate(pt) for g in self.F.gradient()):
            return 1
        M = _frame_through(pt)
        G = self.F.substitute_linear(M)
        if any(e[0] == 1 for e in G.terms):
            return 2
        return 3

    def transformed(self, matrix) -> "CubicThreefold":
        """Pull back along x = M * y; the marked point moves by M^{-1}."""
        new_marked = None
        if self.marked is not None:
            from .linalg import invert, mat_vec

            Minv = invert([[Fraction(c) for c in row] for row in matrix])
            new_marked = mat_vec(Minv, [Fraction(c) for c in self.marked])
        return CubicThreefold(self.F.substitute_linear(matrix), new_marked)

    def __eq__(self, other):
        if not isinstance(other, CubicThreefold):
            return NotImplemented
        return self.F == other.F and self.marked == other.marked

    def __hash__(self):
        return hash((self.F, self.marked))

    def to_wire(self):
        return {
            "F": self.F.to_wire(),
            "marked": None
            if self.marked is None
            else [str(c) for c in self.marked],
        }

    @classmethod
    def from_wire(cls, obj):
        marked = obj.get("marked")
        if marked is not None:
            marked = [Fraction(c) for c in marked]
        return cls(MultiPoly.from_wire(obj["F"]), marked)

    def __repr__(self):
        return f"CubicThreefold({self.F}, marked={self.marked})"


def _frame_through(point):
    """Invertible 5x5 rational matrix whose first column is the point."""
    pt = [Fraction(c) for c in point]
    lead = next(i for i in range(5) if pt[i])
    cols = [pt] + [
        [Fraction(1 if t == j else 0) for t in range(5)]
        for j in range(5)
        if j != lead
    ]
    return [[cols[j][i] for j in range(5)] for i in range(5)]


def _embed_curve_poly(p: MultiPoly) -> MultiPoly:
    """View a polynomial in x1..x4 as one in x0..x4 (no x0 content)."""
    terms = {(0,) + e: c for e, c in p.terms.items()}
    return MultiPoly(p.dom, CUBIC_VARS, terms)


# ----------------------------------------------------------------------
# the two constructions


def curve_to_cubic(scheme: TwoThreeScheme) -> CubicThreefold:
    """Threefold x0*q + f, double at the marked point (1,0,0,0,0)."""
    x0 = MultiPoly.variable("x0", CUBIC_VARS)
    F = x0 * _embed_curve_poly(scheme.q) + _embed_curve_poly(scheme.f)
    return CubicThreefold(F, (1, 0, 0, 0, 0))


def cubic_to_curve(X: CubicThreefold, point=None) -> TwoThreeScheme:
    """Quadric/cubic pair seen from a double point of the threefold.

    An exact linear change moves the point to (1,0,...,0), after which
    the equation splits as x0*q + f; the scheme constructor reduces f
    modulo q so the result does not depend on the splitting.
    """
    if point is None:
        point = X.marked
    if point is None:
        raise CorrespondenceError("no point given and the cubic has no mark")
    pt = [Fraction(c) for c in point]
    mult = X.multiplicity_at(pt)
    if mult == 0:
        raise CorrespondenceError(f"point {tuple(pt)} is not on the cubic")
    if mult == 1:
        raise CorrespondenceError(f"point {tuple(pt)} is a smooth point")
    if mult >= 3:
        raise CorrespondenceError(
            f"point {tuple(pt)} is a triple point; the projection has no "
            "well-defined quadric there"
        )
    G = X.F.substitute_linear(_frame_through(pt))
    q_terms, f_terms = {}, {}
    for e, c in G.terms.items():
        if e[0] == 1:
            q_terms[e[1:]] = c
        elif e[0] == 0:
            f_terms[e[1:]] = c
        else:
            raise AssertionError("double point left x0-degree >= 2 terms")
    q = MultiPoly(QQ, CURVE_VARS, q_terms)
    f = MultiPoly(QQ, CURVE_VARS, f_terms)
    if f.is_zero():
        raise CorrespondenceError(
            "projection is a double quadric surface, not a (2,3) scheme"
        )
    return TwoThreeScheme(q, f)


# ----------------------------------------------------------------------
# classifying points on the threefold


def classify_cubic_point(
    X: CubicThreefold, point, order: int = DEFAULT_JET_ORDER
) -> PointRecord:
    """Local type of the threefold at a singular point, via the same
    square-splitting reduction used for curves (a germ and its
    stabilization share their label)."""
    dom, pt = _point_domain(point)
    F = X.F if dom == QQ else X.F.change_domain(dom)
    if F.evaluate(pt) != dom.zero:
        raise CorrespondenceError(f"point {tuple(pt)} is not on the cubic")
    if any(g.evaluate(pt) for g in F.gradient()):
        raise CorrespondenceError(f"point {tuple(pt)} is a smooth point")
    lead = next(i for i in range(5) if pt[i])
    images = {}
    for i, name in enumerate(CUBIC_VARS):
        terms = {(0, 0, 0, 0): pt[i]}
        k = 0
        for j in range(5):
            if j == lead:
                continue
            if i == j:
                e = tuple(1 if t == k else 0 for t in range(4))
                terms[e] = terms.get(e, dom.zero) + dom.one
            k += 1
        images[name] = MultiPoly(dom, CHART4, terms)
    germ = F.substitute(images)
    sing_type, details = classify_affine_singularity(germ, order)
    marked = X.marked is not None and _same_projective_point(pt, X.marked, dom)
    return PointRecord(
        point=tuple(pt),
        sing_type=sing_type,
        host="threefold",
        location="marked" if marked else "off_marked",
        corank=details["corank"],
    )


def _same_projective_point(a, b, dom):
    b = [dom.coerce(c) for c in b]
    la = next(i for i in range(len(a)) if a[i])
    if not b[la]:
        return False
    s, t = b[la], a[la]
    return all(a[i] * s == b[i] * t for i in range(len(a)))


# ----------------------------------------------------------------------
# the type of the threefold at the marked point, by the rank table


def marked_point_type(
    scheme: TwoThreeScheme, order: int = DEFAULT_JET_ORDER
) -> SingType:
    """Type of x0*q + f at (1,0,...,0), read off the quadric's geometry.

    Rank 4 gives A1.  Rank 3 gives A2 when the curve misses the vertex,
    and A_{k+2} when the curve has an A_k singularity there.  Rank 2
    gives D4 provided the curve meets the quadric's singular line in
    three distinct points.  Everything else is refused: the table does
    not extend.
    """
    from .singclass import classify_point

    rank = scheme.quadric_rank()
    if rank == 4:
        return SingType.A(1)
    if rank == 3:
        v = scheme.quadric_kernel()[0]
        if scheme.f.evaluate(v):
            return SingType.A(2)
        rec = classify_point(scheme, v, order)
        if rec.sing_type.kind != "A":
            raise CorrespondenceError(
                f"vertex singularity {rec.sing_type} is outside the A range "
                "covered by the rank-3 row of the table"
            )
        return SingType.A(rec.sing_type.k + 2)
    if rank == 2:
        roots = singular_line_intersections(scheme)
        if roots == "zero":
            raise CorrespondenceError(
                "the cubic vanishes on the quadric's singular line; the "
                "threefold is singular along a plane conic"
            )
        if roots != "distinct":
            raise CorrespondenceError(
                "the curve meets the quadric's singular line in fewer than "
                "three distinct points; the table does not apply"
            )
        return SingType.D4()
    raise CorrespondenceError(
        f"quadric rank {rank} is below the range of the marked-point table"
    )


def singular_line_intersections(scheme: TwoThreeScheme) -> str:
    """How the curve meets the singular line of a rank-2 quadric.

    Returns "distinct" (three distinct points), "repeated" (a multiple
    root) or "zero" (the whole line lies on the cubic).
    """
    if scheme.quadric_rank() != 2:
        raise SchemeError("the quadric's singular locus is a line only for rank 2")
    v0, v1 = scheme.quadric_kernel()
    svars = ("s", "t")
    images = {}
    for i, name in enumerate(CURVE_VARS):
        terms = {}
        if v0[i]:
            terms[(1, 0)] = Fraction(v0[i])
        if v1[i]:
            terms[(0, 1)] = Fraction(v1[i])
        images[name] = MultiPoly(QQ, svars, terms)
    g = scheme.f.substitute(images)
    if g.is_zero():
        return "zero"
    coeffs = [g.coefficient((3 - i, i)) for i in range(4)]
    return "distinct" if binary_cubic_discriminant(coeffs) else "repeated"


# ----------------------------------------------------------------------
# the full two-sided check


@dataclass
class CorrespondenceReport:
    scheme: TwoThreeScheme
    cubic: CubicThreefold
    marked_engine: SingType
    marked_table: SingType | None
    marked_table_note: str | None
    pairs: list
    exceptional: list
    blowup_consistent: bool
    scan_checks: list = field(default_factory=list)

    @property
    def matched(self) -> bool:
        return (
            all(rec.sing_type == xrec.sing_type for rec, xrec in self.pairs)
            and self.blowup_consistent
            and (self.marked_table is None or self.marked_table == self.marked_engine)
            and all(ok for _, ok in self.scan_checks)
        )

    def to_wire(self):
        return {
            "marked_type": self.marked_engine.label,
            "marked_type_by_table": None
            if self.marked_table is None
            else self.marked_table.label,
            "marked_table_note": self.marked_table_note,
            "pairs": [
                {
                    "curve_point": [_scalar_wire(c) for c in rec.point],
                    "curve_type": rec.sing_type.label,
                    "cubic_point": [_scalar_wire(c) for c in xrec.point],
                    "cubic_type": xrec.sing_type.label,
                }
                for rec, xrec in self.pairs
            ],
            "exceptional": [
                {
                    "curve_point": [_scalar_wire(c) for c in rec.point],
                    "curve_type": rec.sing_type.label,
                }
                for rec in self.exceptional
            ],
            "blowup_consistent": self.blowup_consistent,
            "scans": [
                {"p": p, "agreed": ok} for p, ok in self.scan_checks
            ],
            "matched": self.matched,
        }


def lift_to_cubic_point(scheme: TwoThreeScheme, record: PointRecord):
    """The second singular point of x0*q + f on the line through the
    marked point and a curve singularity where the quadric is smooth."""
    if record.host != "quadric":
        raise CorrespondenceError(
            "only curve singularities at smooth points of the quadric lift"
        )
    dom, pt = _point_domain(record.point)
    gq = [g.evaluate(pt) for g in (scheme.q if dom == QQ else scheme.q.change_domain(dom)).gradient()]
    gf = [g.evaluate(pt) for g in (scheme.f if dom == QQ else scheme.f.change_domain(dom)).gradient()]
    i = next(j for j in range(4) if gq[j])
    x0 = -gf[i] / gq[i]
    return (x0, pt[0], pt[1], pt[2], pt[3])


def correspondence_check(
    scheme: TwoThreeScheme,
    points=(),
    order: int = DEFAULT_JET_ORDER,
    primes=(101, 103),
) -> CorrespondenceReport:
    """Check the two-way singularity dictionary on a candidate point list.

    Curve singularities at smooth points of the quadric must lift to
    singular points of the threefold of the same type; those at singular
    points of the quadric must instead match the blow-up structure of
    the marked point (an A_k mark leaves one A_{k-2} behind, a D4 mark
    three A1's).  Scans over two primes corroborate the counts.
    """
    from .singclass import classify_point

    X = curve_to_cubic(scheme)
    germ = scheme.q + scheme.f
    marked_engine, _ = classify_affine_singularity(germ, order)
    try:
        marked_table = marked_point_type(scheme, order)
        table_note = None
    except CorrespondenceError as exc:
        marked_table = None
        table_note = str(exc)

    records = [classify_point(scheme, pt, order) for pt in points]
    pairs = []
    exceptional = []
    for rec in records:
        if rec.host == "quadric":
            xpt = lift_to_cubic_point(scheme, rec)
            pairs.append((rec, classify_cubic_point(X, xpt, order)))
        else:
            exceptional.append(rec)

    blowup_ok = _blowup_residue_matches(marked_engine, exceptional)

    checks = []
    for p in primes:
        try:
            data = scanning.cubic_offpoint_singular_data(scheme, p)
            seen_pairs, seen_excl = set(), set()
            for rec, _ in pairs:
                seen_pairs.update(scanning.reduce_point_mod_p(rec.point, p))
            for rec in exceptional:
                seen_excl.update(scanning.reduce_point_mod_p(rec.point, p))
            want_pairs, want_excl = len(seen_pairs), len(seen_excl)
            ok = (
                data["count"] == want_pairs
                and data["curve_only"] == want_excl
                and not data["nonisolated"]
            )
            checks.append((p, ok))
        except scanning.PrimeUnusable:
            continue
    return CorrespondenceReport(
        scheme=scheme,
        cubic=X,
        marked_engine=marked_engine,
        marked_table=marked_table,
        marked_table_note=table_note,
        pairs=pairs,
        exceptional=exceptional,
        blowup_consistent=blowup_ok,
        scan_checks=checks,
    )


def _blowup_residue_matches(marked: SingType, exceptional) -> bool:
    """Exceptional-divisor baggage of the marked point versus the curve
    singularities sitting at singular points of the quadric."""
    types = sorted(rec.sing_type.label for rec in exceptional)
    if marked.kind == "A":
        if marked.k <= 2:
            return types == []
        return types == [f"A{marked.k - 2}"]
    if marked.kind == "D4":
        return types == ["A1", "A1", "A1"]
    return False


# ----------------------------------------------------------------------
# ribbon / chordal detection


STANDARD_RNC = ("s^3", "s^2*t", "s*t^2", "t^3")
SIGNED_RNC = ("s^3", "s^2*t", "-s*t^2", "t^3")


@dataclass
class RibbonResult:
    status: str  # "ribbon" | "reduced" | "unknown"
    witness: tuple | None = None
    smooth_point: tuple | None = None
    notes: tuple = ()

    def __bool__(self):
        return self.status == "ribbon"

    def to_wire(self):
        return {
            "status": self.status,
            "witness": None
            if self.witness is None
            else [str(c) for c in self.witness],
            "smooth_point": None
            if self.smooth_point is None
            else [str(c) for c in self.smooth_point],
            "notes": list(self.notes),
        }


def _parse_rnc(cands):
    svars = ("s", "t")
    return tuple(MultiPoly.parse(c, svars) for c in cands)


def _rnc_spans(phi) -> bool:
    """The four binary cubics must be linearly independent (a degree-3
    rational curve that spans P^3, hence a rational normal curve)."""
    rows = []
    for comp in phi:
        rows.append([Fraction(comp.coefficient((3 - i, i))) for i in range(4)])
    from .linalg import rank as mat_rank

    return mat_rank(rows) == 4


def _is_ribbon_witness(scheme: TwoThreeScheme, phi) -> bool:
    """phi certifies a double structure when both equations and all six
    Jacobian minors vanish identically along it."""
    if not _rnc_spans(phi):
        return False
    images = dict(zip(CURVE_VARS, phi))
    if scheme.q.substitute(images) or scheme.f.substitute(images):
        return False
    gq = [g.substitute(images) for g in scheme.q.gradient()]
    gf = [g.substitute(images) for g in scheme.f.gradient()]
    for i in range(4):
        for j in range(i + 1, 4):
            if gq[i] * gf[j] - gq[j] * gf[i]:
                return False
    return True


def _small_smooth_point(scheme: TwoThreeScheme, bound: int = 3):
    """A small rational point of the scheme where the Jacobian has rank
    two, certifying a reduced branch."""
    from itertools import product
    from math import gcd

    seen = set()
    rng = range(-bound, bound + 1)
    for cand in product(rng, repeat=4):
        if not any(cand):
            continue
        g = 0
        for c in cand:
            g = gcd(g, abs(c))
        norm = tuple(c // g for c in cand)
        lead = next(c for c in norm if c)
        if lead < 0:
            norm = tuple(-c for c in norm)
        if norm in seen:
            continue
        seen.add(norm)
        pt = [Fraction(c) for c in norm]
        if scheme.q.evaluate(pt) or scheme.f.evaluate(pt):
            continue
        gq = [g.evaluate(pt) for g in scheme.q.gradient()]
        gf = [g.evaluate(pt) for g in scheme.f.gradient()]
        for i in range(4):
            for j in range(i + 1, 4):
                if gq[i] * gf[j] - gq[j] * gf[i]:
                    return norm
    return None


def chordal_detect(
    scheme: TwoThreeScheme, hints=(), primes=(101, 103)
) -> RibbonResult:
    """Decide whether the cycle of the scheme is a doubled twisted cubic.

    Tries explicit degree-3 parametrizations (the standard one, a signed
    variant, then any hints) as witnesses for a double structure on a
    rational normal curve; failing that, looks for a small smooth
    rational point as a certificate of a reduced branch.  When neither
    side produces a certificate the answer is an honest "unknown".
    """
    candidates = [_parse_rnc(STANDARD_RNC), _parse_rnc(SIGNED_RNC)]
    for hint in hints:
        candidates.append(_parse_rnc(hint) if isinstance(hint[0], str) else tuple(hint))
    notes = []
    for phi in candidates:
        if _is_ribbon_witness(scheme, phi):
            for p in primes:
                try:
                    pts = scanning.projective_points(p, 4)
                    on = (scanning.eval_mod(scheme.q, pts, p) == 0) & (
                        scanning.eval_mod(scheme.f, pts, p) == 0
                    )
                    n = int(on.sum())
                    notes.append(f"{n} points mod {p} (line count {p + 1})")
                    if n != p + 1:
                        notes.append("support point count disagrees with P^1")
                except scanning.PrimeUnusable:
                    continue
            return RibbonResult(
                status="ribbon",
                witness=tuple(str(c) for c in phi),
                notes=tuple(notes),
            )
    pt = _small_smooth_point(scheme)
    if pt is not None:
        return RibbonResult(status="reduced", smooth_point=pt)
    return RibbonResult(
        status="unknown",
        notes=("no ribbon witness found and no small smooth rational point",),
    )
