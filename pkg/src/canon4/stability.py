"""GIT stability verdicts for (2,3) space curves and cubic threefolds.

Two finite decision tables drive everything: one for complete
intersection curves of a quadric and a cubic in P^3, one for cubic
threefolds in P^4.  Both consume the exact singularity inventories
produced by ``singclass``; neither ever guesses.  A separate
Hilbert-Mumford engine searches for destabilizing one-parameter
subgroups with exact linear programming and returns certificates that
can be rechecked independently.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .correspond import singular_line_intersections
from .linalg import nullspace, primitive_vector
from .lp import feasible_point

RIBBON_ORBIT = "C_{A,B} with 4A/B^2 = 1"
AMBIGUOUS_A5_ORBIT = "C_{2A5} or C_{A,B} with 4A/B^2 != 1"


@dataclass(frozen=True)
class OnePS:
    """A diagonal one-parameter subgroup given by integer weights.

    ``convention`` records the normalization: "sum_zero" for an SL
    weight vector, "r_nonneg" for nonnegative r_i in the N+1 choose
    basis (converted to sum-zero by w_i = (N+1) r_i - sum r).
    """

    weights: tuple
    convention: str = "sum_zero"

    def __post_init__(self):
        w = tuple(int(v) for v in self.weights)
        object.__setattr__(self, "weights", w)
        if self.convention == "sum_zero":
            if sum(w) != 0:
                raise ValueError("weights do not sum to zero")
        elif self.convention == "r_nonneg":
            if any(v < 0 for v in w):
                raise ValueError("r-convention weights must be nonnegative")
        else:
            raise ValueError(f"unknown convention {self.convention!r}")

    def sum_zero(self):
        """The same subgroup in sum-zero normalization."""
        if self.convention == "sum_zero":
            return self
        n = len(self.weights)
        s = sum(self.weights)
        return OnePS(tuple(n * r - s for r in self.weights), "sum_zero")

    def to_wire(self):
        return {"weights": list(self.weights), "convention": self.convention}

    @classmethod
    def from_wire(cls, data):
        return cls(tuple(data["weights"]), data["convention"])


def torus_weight_min(poly, w):
    """Minimal weight of the support of ``poly`` under a diagonal 1-PS.

    The limit of w(t).poly as t -> 0 exists iff this is >= 0 and kills
    the polynomial iff it is > 0, so a strictly positive value is a
    destabilization certificate for the standard linearization.
    """
    if isinstance(w, OnePS):
        w = w.sum_zero().weights
    if not poly.terms:
        raise ValueError("zero polynomial has no support")
    if len(w) != len(poly.vars):
        raise ValueError("weight length disagrees with variable count")
    return min(sum(e * wi for e, wi in zip(exp, w)) for exp in poly.terms)


def zero_weight_oneps(poly):
    """Primitive sum-zero weight vectors fixing every term of ``poly``.

    Returns a basis of the stabilizing torus directions: w with
    <e, w> = 0 for all exponents e in the support and sum w = 0.  A
    nonempty answer exhibits a positive-dimensional stabilizer, the
    hallmark of a strictly semistable normal form.
    """
    n = len(poly.vars)
    rows = [[Fraction(e) for e in exp] for exp in poly.terms]
    rows.append([Fraction(1)] * n)
    return [OnePS(tuple(primitive_vector(v))) for v in nullspace(rows)]


@dataclass(frozen=True)
class TorusCertificate:
    """A frame and weight vector witnessing instability.

    In the coordinates y = frame^-1 x the polynomial has all support
    weights >= min_weight > 0 against ``w``.
    """

    w: OnePS
    frame: tuple
    min_weight: Fraction

    def to_wire(self):
        return {
            "weights": [int(w) for w in self.w.weights],
            "convention": self.w.convention,
            "frame": [[str(x) for x in row] for row in self.frame],
            "min_weight": str(self.min_weight),
        }


def _identity(n):
    return tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
    )


def random_unimodular_frames(n, count, seed=0):
    """Deterministic pseudo-random integer frames of determinant +-1.

    Each frame is a product of elementary shears and swaps, so the
    inverse is integral as well and substitution stays exact.
    """
    rng = random.Random(seed)
    frames = []
    for _ in range(count):
        m = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
        for _ in range(2 * n):
            op = rng.randrange(3)
            i = rng.randrange(n)
            j = rng.randrange(n)
            if op == 0 and i != j:
                c = rng.choice([-2, -1, 1, 2])
                for k in range(n):
                    m[k][j] += c * m[k][i]
            elif op == 1 and i != j:
                for k in range(n):
                    m[k][i], m[k][j] = m[k][j], m[k][i]
            else:
                for k in range(n):
                    m[k][i] = -m[k][i]
        frames.append(tuple(tuple(row) for row in m))
    return frames


def destabilize_search(poly, frames=(), seed=0, random_frames=100):
    """Search coordinate frames for a strictly destabilizing torus.

    For each frame the support of the transformed polynomial is fed to
    an exact LP asking for sum-zero w with <e, w> >= 1 on every
    exponent.  The first feasible frame yields a TorusCertificate; the
    identity frame is always tried first and the random tail is
    reproducible from ``seed``.
    """
    n = len(poly.vars)
    all_frames = [_identity(n)]
    all_frames.extend(tuple(tuple(Fraction(v) for v in row) for row in f) for f in frames)
    all_frames.extend(random_unimodular_frames(n, random_frames, seed=seed))
    for frame in all_frames:
        g = poly.substitute_linear(frame)
        cons = [([1] * n, "==", 0)]
        for exp in g.terms:
            cons.append((list(exp), ">=", 1))
        sol = feasible_point(cons, n)
        if sol is None:
            continue
        prim = primitive_vector(sol)
        lead = next(i for i, v in enumerate(sol) if v)
        if (sol[lead] > 0) != (prim[lead] > 0):
            prim = [-v for v in prim]
        w = OnePS(tuple(prim))
        mw = torus_weight_min(g, w)
        if mw <= 0:
            raise AssertionError("LP certificate failed recheck")
        return TorusCertificate(w, frame, mw)
    return None


def linearization_balance(a, b):
    """Whether O(a) x O(b) weights make the (quadric, cubic) pencil
    t.(q, f) = (t^-2 q, t^3 f) act with net weight zero, i.e. 2a = 3b."""
    return 2 * a == 3 * b


def mumford_rhs(r, big_n, degree, r_weights):
    """Degree-weighted threshold (r+1)/(N+1) * deg * sum(r_i) in the
    nonnegative r-convention."""
    r_weights = tuple(int(v) for v in r_weights)
    if any(v < 0 for v in r_weights):
        raise ValueError("r-convention weights must be nonnegative")
    if len(r_weights) != big_n + 1:
        raise ValueError("expected N+1 weights")
    return Fraction((r + 1) * degree * sum(r_weights), big_n + 1)


@dataclass(frozen=True)
class SchubertBound:
    """Outcome of the hyperplane degeneration count for a sextic cycle
    split across the two planes of a rank-2 quadric."""

    bound: Fraction
    threshold: Fraction
    admissible: bool


def schubert_bound(deg_c1, deg_c2_cap_h1):
    """Lower bound 2 deg(C1) + deg(C2 . H1) against the threshold 9.

    Exceeding 9 certifies instability at weights (0,1,1,1); the only
    split passing is (3,3), two plane cubics.  The degenerate (0,0)
    input is allowed as the empty-cycle sanity case.
    """
    d1 = int(deg_c1)
    d2 = int(deg_c2_cap_h1)
    if (d1, d2) != (0, 0) and d1 + d2 != 6:
        raise ValueError("component degrees must sum to 6")
    bound = Fraction(2 * d1 + d2)
    threshold = mumford_rhs(1, 3, 6, (0, 1, 1, 1))
    return SchubertBound(bound, threshold, bound <= threshold)


@dataclass(frozen=True)
class StabilityVerdict:
    """A verdict with the table clauses that produced it.

    ``status`` is one of Stable, StrictlySemistable, Unstable,
    NotApplicable; ``clauses`` cites the deciding rows, ``minimal_orbit``
    names the closed orbit in the closure for strictly semistable
    points, and ``certificate`` optionally carries a destabilizing or
    stabilizing torus datum.
    """

    status: str
    clauses: tuple = ()
    minimal_orbit: str = None
    certificate: object = None
    notes: tuple = ()

    def to_wire(self):
        out = {
            "status": self.status,
            "clauses": list(self.clauses),
            "notes": list(self.notes),
        }
        if self.minimal_orbit is not None:
            out["minimal_orbit"] = self.minimal_orbit
        if self.certificate is not None:
            cert = self.certificate
            out["certificate"] = cert.to_wire() if hasattr(cert, "to_wire") else cert
        return out


def _plane_flag(plane_tests, idx):
    """Normalize a plane-component flag to True/False/None."""
    if plane_tests is None:
        return None
    val = plane_tests.get(idx)
    if val is None:
        return None
    if hasattr(val, "verdict"):
        val = val.verdict
    if isinstance(val, str):
        return {"yes": True, "no": False}.get(val)
    return bool(val)


def _minimal_orbit(records, rank):
    types = [r.sing_type for r in records]
    if rank == 2 or any(t.kind == "D4" for t in types):
        return "C_D"
    vertex = [r.sing_type for r in records if r.location == "quadric_vertex"]
    smooth = [r.sing_type for r in records if r.location == "quadric_smooth_point"]
    has_a5_smooth = any(t.kind == "A" and t.k == 5 for t in smooth)
    has_a3_vertex = any(t.kind == "A" and t.k == 3 for t in vertex)
    if has_a5_smooth or has_a3_vertex:
        labels = sorted(t.label for t in types)
        if rank == 4 and labels == ["A5", "A5"]:
            return "C_{2A5}"
        if rank == 3 and has_a3_vertex and has_a5_smooth:
            others = [t for t in types if not (t.kind == "A" and t.k in (3, 5))]
            if all(t.kind == "A" and t.k == 1 for t in others):
                return "C_{A,B}"
        return AMBIGUOUS_A5_ORBIT
    return RIBBON_ORBIT


def degeneration_target(records, rank, ribbon=False):
    """Closed-orbit label a strictly semistable curve degenerates to.

    Trichotomy: a D4 singularity or a rank-2 quadric forces C_D; an A5
    at a smooth point or an A3 at the vertex gives C_{2A5} or a
    C_{A,B} with 4A/B^2 != 1; everything else lands on the ribbon
    C_{A,B} with 4A/B^2 = 1.
    """
    if ribbon:
        return RIBBON_ORBIT
    types = [r.sing_type for r in records]
    if rank == 2 or any(t.kind == "D4" for t in types):
        return "C_D"
    vertex = [r.sing_type for r in records if r.location == "quadric_vertex"]
    smooth = [r.sing_type for r in records if r.location == "quadric_smooth_point"]
    if any(t.kind == "A" and t.k == 5 for t in smooth) or any(
        t.kind == "A" and t.k == 3 for t in vertex
    ):
        return AMBIGUOUS_A5_ORBIT
    return RIBBON_ORBIT


def git_verdict(analysis, ribbon=None, plane_tests=None):
    """Stability of a (2,3) curve from its singularity inventory.

    ``analysis`` is a ``SchemeAnalysis``; ``ribbon`` an optional
    ``RibbonResult`` settling reducedness when the scans cannot;
    ``plane_tests`` maps record indices to plane-component outcomes for
    the singularities whose clause consults them (A_k with k >= 6 at a
    smooth point, k >= 4 at the vertex).
    """
    sch = analysis.scheme
    if not analysis.complete_intersection:
        return StabilityVerdict(
            "Unstable",
            ("0",),
            notes=("the quadric and cubic share a component, so the cycle has excess dimension",),
        )
    if ribbon is not None and getattr(ribbon, "status", None) == "ribbon":
        return StabilityVerdict(
            "StrictlySemistable",
            ("0",),
            minimal_orbit=RIBBON_ORBIT,
            notes=("non-reduced cycle: a double structure on a twisted cubic",),
        )
    if analysis.simultaneous:
        return StabilityVerdict(
            "Unstable",
            ("0'",),
            notes=("the quadric and cubic are singular at a common point",),
        )
    if analysis.complete is False:
        return StabilityVerdict(
            "NotApplicable",
            (),
            notes=("modular scans disagree with the candidate singular set",),
        )
    notes = []
    if analysis.complete is None:
        notes.append("no modular completeness check was run")

    records = list(analysis.records)
    types = [r.sing_type for r in records]
    rank = analysis.quadric_rank

    if rank <= 1:
        return StabilityVerdict(
            "Unstable",
            ("not (1)", "not (2)"),
            notes=("quadric of rank at most 1",),
        )

    if rank == 2:
        # the deciding clause looks only at how the cubic meets the
        # quadric's singular line, not at the singularity types
        mode = singular_line_intersections(sch)
        if mode == "distinct":
            return StabilityVerdict(
                "StrictlySemistable",
                ("2.iii",),
                minimal_orbit="C_D",
                notes=tuple(notes + ["cubic meets the quadric's singular line in three distinct points"]),
            )
        note = (
            "cubic vanishes on the quadric's singular line"
            if mode == "zero"
            else "cubic meets the quadric's singular line with multiplicity"
        )
        return StabilityVerdict("Unstable", ("not (2.iii)",), notes=(note,))

    for t in types:
        if t.kind == "Inconclusive":
            return StabilityVerdict(
                "NotApplicable",
                (),
                notes=(f"jet order too small to settle a singularity ({t.label})",),
            )
    if any(t.kind == "NonIsolated" for t in types):
        return StabilityVerdict(
            "Unstable",
            ("not (1)", "not (2)"),
            notes=("non-isolated singular point on a reduced cycle",),
        )
    bad = [t for t in types if t.kind not in ("A", "D4")]
    if bad:
        return StabilityVerdict(
            "Unstable",
            ("not (1)", "not (2)"),
            notes=(f"singularity outside the A_k / D4 range: {bad[0].label}",),
        )

    # rank 3 or 4: singularities live at smooth points of Q, plus
    # possibly the vertex when rank is 3
    vertex_idx = [i for i, r in enumerate(records) if r.location == "quadric_vertex"]
    smooth_idx = [i for i, r in enumerate(records) if r.location == "quadric_smooth_point"]

    if rank == 3 and vertex_idx:
        vt = records[vertex_idx[0]].sing_type
        if vt.kind != "A":
            return StabilityVerdict(
                "Unstable",
                ("not (2.ii)",),
                notes=(f"singularity at the quadric vertex outside the A range: {vt.label}",),
            )
        vertex_k = vt.k
    else:
        vertex_k = 0

    # plane-component gate: a high A_k on a plane component of the
    # cycle is destabilizing regardless of the rest
    consulted = [(i, records[i].sing_type.k) for i in smooth_idx if records[i].sing_type.kind == "A" and records[i].sing_type.k >= 6]
    if vertex_k >= 4:
        consulted.extend((i, vertex_k) for i in vertex_idx)
    for idx, k in consulted:
        flag = _plane_flag(plane_tests, idx)
        if flag is True:
            return StabilityVerdict(
                "Unstable",
                ("not (2.i.beta)" if rank == 4 else "not (2.ii.beta)",),
                notes=(f"A{k} singularity on a plane component of the cycle",),
            )
        if flag is None:
            return StabilityVerdict(
                "NotApplicable",
                (),
                notes=(f"plane-component flag unresolved for the A{k} point, blocking clause "
                       + ("2.i.beta" if rank == 4 else "2.ii.beta"),),
            )

    smooth_types = [records[i].sing_type for i in smooth_idx]
    smooth_d4 = any(t.kind == "D4" for t in smooth_types)
    smooth_a5 = any(t.kind == "A" and t.k == 5 for t in smooth_types)
    smooth_high = any(t.kind == "A" and t.k >= 6 for t in smooth_types)
    smooth_tame = all(t.kind == "A" and t.k <= 4 for t in smooth_types)

    if rank == 4:
        if smooth_tame:
            return StabilityVerdict("Stable", ("1",), notes=tuple(notes))
        clauses = []
        if smooth_d4 or smooth_a5:
            clauses.append("2.i.alpha")
        if smooth_high:
            clauses.append("2.i.beta")
        return StabilityVerdict(
            "StrictlySemistable",
            tuple(clauses),
            minimal_orbit=_minimal_orbit(records, rank),
            notes=tuple(notes),
        )

    # rank 3
    if smooth_tame and not smooth_d4 and vertex_k <= 2:
        return StabilityVerdict("Stable", ("1",), notes=tuple(notes))
    clauses = []
    if smooth_d4 or smooth_a5 or vertex_k == 3:
        clauses.append("2.ii.alpha")
    if smooth_high or vertex_k >= 4:
        clauses.append("2.ii.beta")
    if not clauses:
        raise AssertionError("rank-3 case analysis missed a configuration")
    return StabilityVerdict(
        "StrictlySemistable",
        tuple(clauses),
        minimal_orbit=_minimal_orbit(records, rank),
        notes=tuple(notes),
    )


def allcock_verdict(types, chordal=False, nonisolated=False, plane_flags=None):
    """Stability of a cubic threefold from its singularity list.

    ``types`` are SingType values at the isolated singular points;
    ``plane_flags`` maps indices of A_k (k >= 6) entries to whether some
    plane in the threefold contains the null line of that point.
    Unstable tests run first, then stability, then the strictly
    semistable degenerations.
    """
    types = list(types)
    if nonisolated:
        if chordal:
            return StabilityVerdict(
                "StrictlySemistable",
                ("3.d",),
                minimal_orbit="chordal cubic",
                notes=("singular along a rational normal curve's secant structure",),
            )
        return StabilityVerdict(
            "Unstable",
            ("4.a",),
            notes=("non-isolated singular locus, not the chordal cubic",),
        )
    for t in types:
        if t.kind == "Inconclusive":
            return StabilityVerdict(
                "NotApplicable",
                (),
                notes=(f"jet order too small to settle a singularity ({t.label})",),
            )
    bad = [t for t in types if not (t.kind == "D4" or (t.kind == "A" and 1 <= t.k <= 5))]
    high = [(i, t) for i, t in enumerate(types) if t.kind == "A" and t.k >= 6]
    for t in bad:
        if t.kind == "A":
            continue
        return StabilityVerdict(
            "Unstable",
            ("4.b",),
            notes=(f"isolated singularity outside A1..A5, D4: {t.label}",),
        )
    for idx, t in high:
        flag = _plane_flag(plane_flags, idx)
        if flag is True:
            return StabilityVerdict(
                "Unstable",
                ("4.b",),
                notes=(f"{t.label} whose null line lies on a plane of the threefold",),
            )
        if flag is None:
            return StabilityVerdict(
                "NotApplicable",
                (),
                notes=(f"plane flag unresolved for the {t.label} point, blocking clause 3.c",),
            )
    if all(t.kind == "A" and t.k <= 4 for t in types):
        return StabilityVerdict("Stable", ("1",))
    clauses = []
    target = None
    if any(t.kind == "D4" for t in types):
        clauses.append("3.a")
        target = "F_D"
    if any(t.kind == "A" and t.k == 5 for t in types):
        clauses.append("3.b")
        target = target or "F_{A,B} with 4A/B^2 != 1"
    if high:
        clauses.append("3.c")
        target = target or "F_c"
    return StabilityVerdict(
        "StrictlySemistable",
        tuple(clauses),
        minimal_orbit=target,
    )
