"""Resultants of binary forms via fraction-free elimination.

The geometry below restricts quadric and cubic equations to lines, which
produces homogeneous binary forms whose coefficients are themselves
polynomials in auxiliary variables.  Their resultant (vanishing iff the
forms share a projective root) is the determinant of the Sylvester
matrix, computed by the Bareiss algorithm so that no rational functions
appear when the entries are polynomials.
"""

from __future__ import annotations

from .linalg import bareiss_det
from .multipoly import MultiPoly


def binary_form_coeffs(F: MultiPoly, svar: str, uvar: str):
    """Coefficient list [c_d, ..., c_0] of F = sum c_i s^i u^(d-i).

    F must be homogeneous as a form in (svar, uvar); coefficients come
    back as polynomials in the remaining variables.
    """
    si = F.vars.index(svar)
    ui = F.vars.index(uvar)
    rest = [i for i in range(len(F.vars)) if i not in (si, ui)]
    rest_vars = tuple(F.vars[i] for i in rest)
    if not F.terms:
        raise ValueError("zero polynomial has no well-defined binary degree")
    degs = {e[si] + e[ui] for e in F.terms}
    if len(degs) != 1:
        raise ValueError(f"not homogeneous in ({svar}, {uvar}): degrees {sorted(degs)}")
    d = degs.pop()
    coeffs = [dict() for _ in range(d + 1)]
    for e, c in F.terms.items():
        key = tuple(e[i] for i in rest)
        coeffs[e[si]][key] = coeffs[e[si]].get(key, F.dom.zero) + c
    return d, [MultiPoly(F.dom, rest_vars, coeffs[i]) for i in range(d, -1, -1)]


def sylvester_matrix(g_coeffs, h_coeffs):
    """Sylvester matrix from descending coefficient lists."""
    m = len(g_coeffs) - 1
    n = len(h_coeffs) - 1
    size = m + n
    zero = g_coeffs[0] * 0
    M = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(g_coeffs):
            row[i + j] = c
        M.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(h_coeffs):
            row[i + j] = c
        M.append(row)
    return M


def resultant_binary(F: MultiPoly, G: MultiPoly, svar: str, uvar: str) -> MultiPoly:
    """Resultant of two binary forms, eliminating (svar, uvar).

    Returns a polynomial in the remaining variables; it vanishes exactly
    when the forms have a common projective zero (over the algebraic
    closure).  Degenerate inputs with a zero form are rejected.
    """
    dF, cF = binary_form_coeffs(F, svar, uvar)
    dG, cG = binary_form_coeffs(G, svar, uvar)
    if all(not c for c in cF) or all(not c for c in cG):
        raise ValueError("resultant of a zero form is not defined")
    if dF == 0 or dG == 0:
        # constant form: Res = c^(other degree)
        if dF == 0:
            return cF[0] ** dG
        return cG[0] ** dF
    M = sylvester_matrix(cF, cG)
    one = MultiPoly.constant(1, cF[0].vars, F.dom)
    return bareiss_det(M, one, lambda a, b: a.exact_div(b))


def binary_cubic_discriminant(coeffs):
    """Discriminant of a*s^3 + b*s^2*u + c*s*u^2 + d*u^3 from [a, b, c, d].

    Nonzero exactly when the cubic form has three distinct projective
    roots.  Entries may be any exact scalars or polynomials.
    """
    a, b, c, d = coeffs
    return (
        18 * (a * b * c * d)
        - 4 * (b ** 3 * d)
        + b ** 2 * c ** 2
        - 4 * (a * c ** 3)
        - 27 * (a ** 2 * d ** 2)
    )
