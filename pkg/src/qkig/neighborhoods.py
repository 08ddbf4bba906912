"""Curve neighborhoods of pairs of Schubert varieties and their classification.

A degree-d neighborhood of (X_u, X^v) is the locus swept by degree-d rational
curves meeting both varieties; the broken variant restricts to chains with a
degree-1 tail.  For IG(2, 2n) every neighborhood the closed formulas describe
is either everything, empty, a "meets a coordinate subspace" variety, or is
known only through its dimension; the Descriptor type records exactly that.

The index conditions (C1), (C2) and (L1) decide whether the evaluation maps
onto these neighborhoods are birational, have rationally connected fibers, or
are generically two-to-one, which in turn pins the q-support of the products.
"""

from dataclasses import dataclass

from .pairs import (
    _check_n,
    codim_schubert,
    delta,
    dim_space,
    fano_index,
    require_valid,
    richardson_dim,
    richardson_nonempty,
)


def lower_flag(n, p):
    """Index set of the coordinate subspace E_p = <e_1, ..., e_p>."""
    _check_n(n)
    if not 0 <= p <= 2 * n:
        raise ValueError(f"flag index out of range: {p}")
    return frozenset(range(1, p + 1))


def upper_flag(n, q):
    """Index set of the opposite subspace E^q = <e_{2n+1-q}, ..., e_{2n}>."""
    _check_n(n)
    if not 0 <= q <= 2 * n:
        raise ValueError(f"flag index out of range: {q}")
    return frozenset(range(2 * n + 1 - q, 2 * n + 1))


@dataclass(frozen=True)
class Descriptor:
    """Symbolic description of a curve neighborhood.

    kind: "whole" | "empty" | "meets" | "dim_only".  For "meets", ``indices``
    spans the coordinate subspace the 2-planes must meet and ``dim`` is the
    dimension min(4n-5, |S| + 2n - 4) of that locus.
    """
    kind: str
    indices: tuple = ()
    dim: int | None = None
    note: str = ""

    def to_dict(self):
        return {"kind": self.kind, "indices": list(self.indices),
                "dim": self.dim}


def whole_space(n):
    return Descriptor("whole", dim=dim_space(n))


def empty_locus():
    return Descriptor("empty", dim=None)


def meets_subspace(n, indices):
    """Descriptor of { z : V_z meets span(e_i : i in S) }, normalized.

    Empty S gives the empty locus; |S| >= 2n - 1 gives the whole space.
    """
    s = frozenset(indices)
    if not s:
        return empty_locus()
    if len(s) >= 2 * n - 1:
        return whole_space(n)
    return Descriptor("meets", tuple(sorted(s)),
                      min(dim_space(n), len(s) + 2 * n - 4))


def dim_only(value, note=""):
    return Descriptor("dim_only", dim=value, note=note)


def condition_C1(n, u, v):
    """p1 + q1 = 2n = p2 = q2."""
    p1, p2 = require_valid(n, u)
    q1, q2 = require_valid(n, v)
    return p1 + q1 == 2 * n and p2 == 2 * n and q2 == 2 * n


def condition_C2(n, u, v):
    """p1 + q2 = 2n = p2 + q1 with equal index gaps >= 2 and max(dp, dq) = 1."""
    p1, p2 = require_valid(n, u)
    q1, q2 = require_valid(n, v)
    return (p1 + q2 == 2 * n and p2 + q1 == 2 * n
            and p2 - p1 == q2 - q1 and p2 - p1 >= 2
            and max(delta(n, p1, p2), delta(n, q1, q2)) == 1)


def condition_L1(n, u, v):
    """The degree-1 birationality condition on the index pairs."""
    p1, p2 = require_valid(n, u)
    q1, q2 = require_valid(n, v)
    if p2 == 2 * n and q2 == 2 * n:
        return p1 + q1 <= 2 * n - 1
    return p1 + q1 <= 2 * n - 1 + min(delta(n, p1, p2), delta(n, q1, q2))


def deg2_birational_case(n, u, v):
    """Which of the three degree-2 birationality cases holds, or None."""
    p1, p2 = require_valid(n, u)
    q1, q2 = require_valid(n, v)
    two_n = 2 * n
    maxd = max(delta(n, p1, p2), delta(n, q1, q2))
    if p1 + q2 < two_n and p2 + q1 < two_n:
        return 1
    if p1 + q2 == two_n and p2 + q1 < two_n and maxd == 1:
        return 2
    if p1 + q2 < two_n and p2 + q1 == two_n and maxd == 1:
        return 3
    return None


@dataclass(frozen=True)
class Classification:
    """Predicates for the evaluation maps of (u, v) at a fixed degree."""
    n: int
    u: tuple
    v: tuple
    degree: int
    c1: bool
    c2: bool
    l1: bool
    deg2_case: int | None
    ev_birational: bool
    ev_broken_two_to_one: bool
    gamma_equal: bool

    def to_dict(self):
        return {
            "n": self.n, "u": list(self.u), "v": list(self.v),
            "degree": self.degree,
            "C1": self.c1, "C2": self.c2, "L1": self.l1,
            "deg2_birational_case": self.deg2_case,
            "ev_birational": self.ev_birational,
            "ev_broken_two_to_one": self.ev_broken_two_to_one,
            "gamma_equal": self.gamma_equal,
        }


def classify(n, u, v, d):
    """Evaluate all predicates for the degree-d evaluation maps of (u, v)."""
    u = require_valid(n, u)
    v = require_valid(n, v)
    if d < 1:
        raise ValueError("classification starts at degree 1")
    c1 = condition_C1(n, u, v)
    c2 = condition_C2(n, u, v)
    l1 = condition_L1(n, u, v)
    case = deg2_birational_case(n, u, v)
    if d == 1:
        birational = l1
        two_to_one = c1
    elif d == 2:
        birational = case is not None
        two_to_one = c2
    else:
        birational = False
        two_to_one = False
    return Classification(n, u, v, d, c1, c2, l1, case, birational,
                          two_to_one, gamma_equal=not birational)


def dim_moduli(n, u, v, d):
    """Dimension of the space of degree-d 3-pointed curves through (X_u, X^v)."""
    u = require_valid(n, u)
    v = require_valid(n, v)
    if d < 0:
        raise ValueError("degree must be nonnegative")
    out = dim_space(n) + d * fano_index(n) - codim_schubert(n, *u) \
        - codim_schubert(n, *v)
    if d == 2:
        p1, p2 = u
        q1, q2 = v
        assert out == (p1 + p2 + q1 + q2 - 3
                       - delta(n, p1, p2) - delta(n, q1, q2))
    return out


def gamma1_schubert(n, v):
    """Degree-1 neighborhood of the opposite Schubert variety of v alone."""
    q1, q2 = require_valid(n, v)
    return meets_subspace(n, upper_flag(n, q2))


def _deg2_meets_set(n, u, v):
    p1, p2 = u
    q1, q2 = v
    return (lower_flag(n, p1)
            | (lower_flag(n, p2) & upper_flag(n, q2))
            | upper_flag(n, q1))


def gamma_pair(n, u, v, d):
    """Descriptor of the degree-d neighborhood of (X_u, X^v)."""
    u = require_valid(n, u)
    v = require_valid(n, v)
    if d < 1:
        raise ValueError("degree 0 is the Richardson intersection; "
                         "use the index operations")
    p1, p2 = u
    q1, q2 = v
    if d >= 4:
        return whole_space(n)
    if d == 3:
        return meets_subspace(n, lower_flag(n, p2) | upper_flag(n, q2))
    if d == 2:
        if deg2_birational_case(n, u, v) is not None:
            return dim_only(dim_moduli(n, u, v, 2))
        return meets_subspace(n, _deg2_meets_set(n, u, v))
    # d == 1
    if condition_C1(n, u, v):
        return whole_space(n)
    if condition_L1(n, u, v):
        if p2 + q2 >= 2 * n + 1:
            return dim_only(dim_moduli(n, u, v, 1))
        return empty_locus()
    return meets_subspace(n, lower_flag(n, p2) & upper_flag(n, q2))


def gamma_broken(n, u, v, d):
    """Descriptor of the degree-(d-1, 1) broken-chain neighborhood."""
    u = require_valid(n, u)
    v = require_valid(n, v)
    if d < 1:
        raise ValueError("degree 0 is the Richardson intersection; "
                         "use the index operations")
    p1, p2 = u
    q1, q2 = v
    if d >= 4:
        return whole_space(n)
    if d == 3:
        return meets_subspace(n, lower_flag(n, p2) | upper_flag(n, q2))
    if d == 2:
        if p2 + q2 > 2 * n:
            return meets_subspace(n, _deg2_meets_set(n, u, v))
        return empty_locus()
    # d == 1
    if condition_C1(n, u, v):
        return whole_space(n)
    if condition_L1(n, u, v):
        if richardson_nonempty(n, u, v):
            return dim_only(dim_moduli(n, u, v, 1) - 1,
                            note="divisor inside the degree-1 neighborhood")
        return empty_locus()
    return meets_subspace(n, lower_flag(n, p2) & upper_flag(n, q2))


def q_support_product(n, u, v):
    """Powers of q carrying a nonzero term in O_u * O^v.

    Assembled degree by degree: d = 0 from Richardson nonemptiness, d = 1
    from (L1)-birationality or (C1), d = 2 from degree-2 birationality or
    (C2).  The result is asserted to be a nonempty integer interval.
    """
    u = require_valid(n, u)
    v = require_valid(n, v)
    p1, p2 = u
    q1, q2 = v
    support = set()
    if richardson_nonempty(n, u, v):
        support.add(0)
    if condition_C1(n, u, v) or (
            condition_L1(n, u, v) and p2 + q2 >= 2 * n + 1):
        support.add(1)
    if condition_C2(n, u, v) or deg2_birational_case(n, u, v) is not None:
        support.add(2)
    assert support and max(support) - min(support) + 1 == len(support), \
        (n, u, v, support)
    return support


def seidel_neighborhood(n, u):
    """Minimal degree and image index for the shifted neighborhood of u.

    Returns (d_min, pair): the index-shift product contributes exactly
    q^d_min times the class of ``pair``.
    """
    p1, p2 = require_valid(n, u)
    if p2 <= n:
        return (2, (p1 + n, p2 + n))
    if p1 <= n:
        return (1, (p2 - n, p1 + n))
    return (0, (p1 - n, p2 - n))


def gamma_point_pair(n, d):
    """Membership predicate for the degree-d neighborhood of two general points.

    Returns a callable on three planes from the geometry oracle.  Degrees
    d <= 1 are not covered here: membership on a line is V_z containing
    V_x cap V_y inside V_x + V_y.
    """
    _check_n(n)
    if d <= 1:
        raise ValueError("no point-pair criterion at degree <= 1")
    from .oracle import dim_sum

    if d == 2:
        return lambda x, y, z: dim_sum(x, y, z) <= 4
    if d == 3:
        return lambda x, y, z: dim_sum(x, y, z) <= 5
    return lambda x, y, z: True


def richardson_dim_or_none(n, u, v):
    return richardson_dim(n, u, v) if richardson_nonempty(n, u, v) else None
