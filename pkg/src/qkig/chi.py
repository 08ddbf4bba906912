"""Reconstruction of K-classes from sheaf Euler-characteristic tables.

A structure-sheaf class [O_Y] expands over the ideal-sheaf classes of
Schubert boundaries, with coefficients the Euler characteristics chi of the
intersections of Y with general translates of opposite Schubert varieties.
Converting back to the structure-sheaf basis is an exact integer inversion
of the Bruhat-order zeta matrix.

The chi tables implemented here cover the two families the closed formulas
expand: the special Richardson classes and the divisor products.  Running
them through the pipeline independently re-derives richardson_special_expand
and classical_chevalley.
"""

from functools import lru_cache

from .linalg import invert_lower_unitriangular
from .pairs import (
    _check_n,
    basis_list,
    bruhat_leq,
    dual_pair,
    require_valid,
)
from .ring import RingElement


@lru_cache(maxsize=None)
def ideal_to_schubert(n):
    """Basis, zeta matrix Z and its exact integer inverse M.

    Z[i][j] = 1 iff basis[j] <= basis[i] in the Bruhat order, so row i lists
    the ideal-sheaf classes entering O_{basis[i]}; Z is lower unitriangular
    in the basis order and M = Z^{-1} is integral.
    """
    _check_n(n)
    basis = basis_list(n)
    z = [[1 if bruhat_leq(n, basis[j], basis[i]) else 0
          for j in range(len(basis))]
         for i in range(len(basis))]
    m = invert_lower_unitriangular(z)
    return basis, z, m


def chi_xuv(n, p, r):
    """chi of the special Richardson class against the opposite pair r.

    Total function: 0 outside the stated support, values in {0, 1, 2}.
    """
    _check_n(n)
    if not 1 <= p <= n:
        raise ValueError(f"p must lie in [1, n], got {p}")
    r1, r2 = require_valid(n, r)
    s = r1 + r2
    if s < 2 * n + 1:
        return 0
    if r2 <= 2 * n - p:
        return 0
    if s == 2 * n + 2:
        return 2 if r2 > 2 * n + 1 - p else 1
    return 1


def chi_chevalley(n, q, r):
    """chi of the divisor-times-O_q Richardson against the opposite pair r."""
    q1, q2 = require_valid(n, q)
    r1, r2 = require_valid(n, r)
    top = 2 * n
    nonempty = ((q1 + r2 >= top + 2 and q2 + r1 >= top + 1)
                or (q1 + r2 >= top + 1 and q2 + r1 >= top + 2))
    if not nonempty:
        return 0
    if q1 + q2 == r1 + r2 == q1 + r2 == q2 + r1 == top + 2:
        return 2
    return 1


def _reconstruct(n, chi_of_opposite_pair):
    """Schubert expansion of the class with the given chi table.

    The table is indexed by the pair of the opposite variety being
    intersected; the ideal-sheaf class it weights sits at the dual pair
    (the Schubert variety through the same torus-fixed plane).  The
    expansion coefficients are then the row vector chi^T M.
    """
    basis, _, m = ideal_to_schubert(n)
    chi_vec = [chi_of_opposite_pair(dual_pair(n, w)) for w in basis]
    size = len(basis)
    coeffs = {}
    for j in range(size):
        c = sum(chi_vec[i] * m[i][j] for i in range(j, size))
        if c:
            coeffs[(0, basis[j])] = c
    return RingElement(n, coeffs)


def reconstruct_xuv(n, p):
    """Re-derive the special Richardson expansion from its chi table."""
    if not 1 <= p <= n:
        raise ValueError(f"p must lie in [1, n], got {p}")
    return _reconstruct(n, lambda r: chi_xuv(n, p, r))


def reconstruct_classical_chevalley(n, v):
    """Re-derive the classical divisor product on O_v from its chi table."""
    v = require_valid(n, v)
    return _reconstruct(n, lambda r: chi_chevalley(n, v, r))
