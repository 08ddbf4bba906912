"""Exact symplectic linear algebra: sampling, witnesses and ground truth.

Points of IG(2, 2n) are rank-2 row spaces of 2 x 2n rational matrices,
stored in a canonical primitive-integer form.  Every arithmetic step is
exact; ranks come from fraction-free elimination.  The constructions mirror
the curve-chain arguments behind the closed formulas: two-line chains
through general points, degree-3 witnesses, broken-conic middle points,
Richardson points built from flag intersections.  Each constructed witness
is re-verified against the incidence and isotropy conditions it claims.

Randomness is always seeded; suite reports embed the seed for exact replay.
"""

import random
from fractions import Fraction
from functools import lru_cache

from .linalg import (
    in_rowspace,
    intersect_rowspaces,
    nullspace,
    primitive_int_row,
    rank,
    row_basis,
    rref,
    stack,
)
from .pairs import _check_n, basis_list, require_valid

_COORD_BOUND = 100  # sampled numerators stay small; ranks are on tiny matrices
_MAX_TRIES = 64


class GeometryError(ValueError):
    """Degenerate input configuration for a geometric construction."""


class SamplingError(RuntimeError):
    """A seeded sampler exhausted its retry budget."""


def omega(n, u, v):
    """Value of the symplectic form on two coordinate vectors."""
    return sum(u[i] * v[2 * n - 1 - i] - u[2 * n - 1 - i] * v[i]
               for i in range(n))


def omega_dual(n, u):
    """Row vector w with omega(u, x) = w . x for all x."""
    out = [0] * (2 * n)
    for j in range(2 * n):
        out[j] = u[2 * n - 1 - j] if j >= n else -u[2 * n - 1 - j]
    return out


def perp_basis(n, rows):
    """Basis of the omega-orthogonal of the span of ``rows``."""
    mat = [omega_dual(n, r) for r in rows]
    return [primitive_int_row(v) for v in nullspace(mat, ncols=2 * n)]


class Plane2:
    """An exact rank-2 row space in the 2n-dimensional ambient space.

    Rows are canonicalized (reduced echelon, primitive integers), so two
    planes are equal iff they have the same row space.  Isotropy is a
    property to test, not an invariant of the type.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n, rows):
        _check_n(n)
        rows = [list(r) for r in rows]
        if any(len(r) != 2 * n for r in rows):
            raise GeometryError(f"rows must have length 2n = {2 * n}")
        reduced = rref(rows)
        if len(reduced) != 2:
            raise GeometryError(
                f"rows span a space of dimension {len(reduced)}, need 2")
        self.n = n
        self.rows = tuple(primitive_int_row(r) for r in reduced)

    def is_isotropic(self):
        return omega(self.n, self.rows[0], self.rows[1]) == 0

    def matrix(self):
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        return (isinstance(other, Plane2)
                and self.n == other.n and self.rows == other.rows)

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Plane2(n={self.n}, rows={self.rows})"


def _rows_of(obj):
    if isinstance(obj, Plane2):
        return list(obj.rows)
    return [tuple(r) for r in obj]


def dim_sum(*objs):
    """Dimension of the span of the row spaces of the arguments."""
    return rank(stack(*[_rows_of(o) for o in objs]))


def dim_intersect(a, b):
    ra, rb = _rows_of(a), _rows_of(b)
    return rank(ra) + rank(rb) - rank(stack(ra, rb))


def intersect_basis(a, b):
    return intersect_rowspaces(_rows_of(a), _rows_of(b))


def gram_rank(n, *objs):
    """Rank of the symplectic form restricted to the span of the arguments."""
    rows = row_basis(stack(*[_rows_of(o) for o in objs]))
    g = [[omega(n, u, v) for v in rows] for u in rows]
    return rank(g)


def coordinate_plane(n, i, j):
    e_i = [0] * (2 * n)
    e_i[i - 1] = 1
    e_j = [0] * (2 * n)
    e_j[j - 1] = 1
    return Plane2(n, [e_i, e_j])


def _support_within(plane, lo, hi):
    """All row support inside 1-based columns [lo, hi]."""
    for row in plane.rows:
        for idx, x in enumerate(row, start=1):
            if x != 0 and not lo <= idx <= hi:
                return False
    return True


def _dim_meet_prefix(plane, k):
    """dim of the row space intersected with <e_1, ..., e_k>."""
    tail = [r[k:] for r in plane.rows]
    return 2 - rank(tail)


def _dim_meet_suffix(plane, k):
    """dim of the row space intersected with <e_{2n+1-k}, ..., e_{2n}>."""
    two_n = 2 * plane.n
    head = [r[:two_n - k] for r in plane.rows]
    return 2 - rank(head)


def in_schubert(n, plane, pair, opposite=False):
    """Exact membership of a plane in the (closed) Schubert variety of ``pair``."""
    a, b = require_valid(n, pair)
    if opposite:
        return (_support_within(plane, 2 * n + 1 - b, 2 * n)
                and _dim_meet_suffix(plane, a) >= 1)
    return (_support_within(plane, 1, b)
            and _dim_meet_prefix(plane, a) >= 1)


def _rng_of(seed, rng):
    if rng is not None:
        return rng
    return random.Random(0 if seed is None else seed)


def _random_vector(rng, length, support=None):
    """Random nonzero integer vector, optionally on a 1-based support set."""
    idxs = list(range(length)) if support is None else [i - 1 for i in support]
    for _ in range(_MAX_TRIES):
        v = [0] * length
        for i in idxs:
            v[i] = rng.randint(-_COORD_BOUND, _COORD_BOUND)
        if any(v):
            return v
    raise SamplingError("could not draw a nonzero vector")


def _orthogonal_partner(n, a, candidate, within=None):
    """Adjust ``candidate`` inside span(within) to be omega-orthogonal to a.

    ``within`` is a list of basis vectors (default: ambient coordinates).
    Returns an exact integer vector, or None if no pivot exists and the
    candidate already pairs to zero.
    """
    two_n = 2 * n
    basis = within if within is not None else \
        [[1 if j == i else 0 for j in range(two_n)] for i in range(two_n)]
    c = omega(n, a, candidate)
    if c == 0:
        return list(candidate)
    for u in basis:
        d = omega(n, a, u)
        if d != 0:
            return [d * x - c * y for x, y in zip(candidate, u)]
    return None  # a pairs to zero with the whole space; candidate unusable


def random_isotropic_plane(n, seed=None, rng=None):
    """Seeded random point of IG(2, 2n) with small integer coordinates."""
    rng = _rng_of(seed, rng)
    two_n = 2 * n
    for _ in range(_MAX_TRIES):
        v1 = _random_vector(rng, two_n)
        v2 = _orthogonal_partner(n, v1, _random_vector(rng, two_n))
        if v2 is None or not any(v2):
            continue
        if rank([v1, v2]) == 2:
            return Plane2(n, [v1, v2])
    raise SamplingError(f"random isotropic plane failed for n={n}")


def random_point_in_cell(n, pair, orientation="standard", seed=None, rng=None):
    """Point of the open cell of ``pair``: meets E_a in dimension exactly 1,
    sits inside E_b, and meets no smaller flag subspace than forced.

    ``orientation="opposite"`` produces the mirrored cell for the E^ flag.
    Verified post-hoc; resamples on genericity failure.
    """
    rng = _rng_of(seed, rng)
    a, b = require_valid(n, pair)
    if orientation not in ("standard", "opposite"):
        raise ValueError(f"unknown orientation {orientation!r}")
    two_n = 2 * n
    for _ in range(_MAX_TRIES):
        v1 = _random_vector(rng, two_n, support=range(1, a + 1))
        if v1[a - 1] == 0:
            continue
        cand = _random_vector(rng, two_n, support=range(1, b + 1))
        e_basis = [[1 if j == i else 0 for j in range(two_n)] for i in range(b)]
        v2 = _orthogonal_partner(n, v1, cand, within=e_basis)
        if v2 is None or not any(v2) or len(v2) != two_n:
            continue
        if v2[b - 1] == 0 or rank([v1, v2]) != 2:
            continue
        plane = Plane2(n, [v1, v2])
        if not plane.is_isotropic():
            continue
        profile_ok = all(
            _dim_meet_prefix(plane, k) == (1 if k >= a else 0) + (1 if k >= b else 0)
            for k in range(1, two_n + 1))
        if not profile_ok:
            continue
        if orientation == "opposite":
            plane = Plane2(n, [list(reversed(r)) for r in plane.rows])
        return plane
    raise SamplingError(f"cell sampling failed for n={n}, pair={pair}")


def general_position_pair(n, seed=None, rng=None):
    """Two isotropic planes spanning a 4-space on which omega has rank 4."""
    rng = _rng_of(seed, rng)
    for _ in range(_MAX_TRIES):
        x = random_isotropic_plane(n, rng=rng)
        y = random_isotropic_plane(n, rng=rng)
        if dim_sum(x, y) == 4 and gram_rank(n, x, y) == 4:
            return x, y
    raise SamplingError(f"general-position pair failed for n={n}")


def chain2_through(x, y):
    """Middle point of a two-line chain through general points x and y.

    Picks a in V_x and the (unique up to scale) b in V_y with omega(a, b) = 0;
    the plane <a, b> is isotropic, meets both V_x and V_y, and lies in their
    span.  Requires V_x and V_y transverse with omega of rank 4 on the span.
    """
    n = x.n
    if dim_intersect(x, y) != 0:
        raise GeometryError("x and y must span a 4-space (got a common line)")
    if gram_rank(n, x, y) != 4:
        raise GeometryError("omega is degenerate on the span of x and y")
    a = x.rows[0]
    r0, r1 = y.rows
    c0, c1 = omega(n, a, r0), omega(n, a, r1)
    # rank-4 pairing makes omega(a, .) nonzero on V_y; its kernel is a line
    b = [c1 * p - c0 * q for p, q in zip(r0, r1)]
    if not any(b):
        raise GeometryError("degenerate pairing against V_y")
    t = Plane2(n, [a, b])
    assert verify_two_line_chain(x, y, t), (x, y, t)
    return t


def verify_two_line_chain(x, y, t):
    """Check the incidences claimed for a two-line chain middle point."""
    return (t.is_isotropic()
            and dim_intersect(t, x) >= 1
            and dim_intersect(t, y) >= 1
            and dim_sum(x, y, t) <= 4)


def gamma3_witness(x, y, z):
    """Witness that z is swept by a broken cubic through general x and y.

    Returns an isotropic plane t inside V_x + V_y meeting V_z (so t and z
    span a line while x, y, t sit on a common conic), or None when the span
    of the three planes is too big for one to exist.
    """
    n = x.n
    if dim_sum(x, y) != 4:
        raise GeometryError("x and y must span a 4-space")
    span = stack(_rows_of(x), _rows_of(y))
    meet = intersect_basis(span, z)
    if not meet:
        return None
    v = primitive_int_row(meet[0])
    w = None
    for cand in intersect_rowspaces(span, perp_basis(n, _rows_of(z))):
        if rank([v, cand]) == 2:
            w = primitive_int_row(cand)
            break
    if w is None:
        raise GeometryError("no independent direction in the orthogonal slice")
    t = Plane2(n, [v, w])
    assert verify_gamma3_witness(x, y, z, t), (x, y, z, t)
    return t


def verify_gamma3_witness(x, y, z, t):
    """Check the incidences claimed for a degree-3 witness."""
    return (t.is_isotropic()
            and dim_sum(x, y, t) <= 4
            and dim_intersect(t, z) >= 1)


def gamma4_witness(x, y, z, seed=None, rng=None):
    """Witness that any z is swept in degree 4: a middle point t with a conic
    through x, y, t and a conic through t, z."""
    rng = _rng_of(seed, rng)
    n = x.n
    if dim_sum(x, y) != 4 or gram_rank(n, x, y) != 4:
        raise GeometryError("x and y must be in general position")
    span = [list(r) for r in row_basis(stack(_rows_of(x), _rows_of(y)))]
    for _ in range(_MAX_TRIES):
        coeffs = [rng.randint(-9, 9) for _ in span]
        a = [sum(c * row[i] for c, row in zip(coeffs, span))
             for i in range(2 * n)]
        if not any(a):
            continue
        cand_coeffs = [rng.randint(-9, 9) for _ in span]
        cand = [sum(c * row[i] for c, row in zip(cand_coeffs, span))
                for i in range(2 * n)]
        b = _orthogonal_partner(n, a, cand, within=span)
        if b is None or not any(b) or rank([a, b]) != 2:
            continue
        t = Plane2(n, [a, b])
        if not t.is_isotropic():
            continue
        if dim_sum(t, z) == 4 and gram_rank(n, t, z) == 4:
            assert verify_gamma4_witness(x, y, z, t)
            return t
    return None


def verify_gamma4_witness(x, y, z, t):
    n = x.n
    return (t.is_isotropic()
            and dim_sum(x, y, t) <= 4
            and gram_rank(n, x, y) == 4
            and dim_sum(t, z) == 4
            and gram_rank(n, t, z) == 4)


def broken_conic_middle(x, y, z):
    """Unique middle point of a line-pair through collinear x, y touching z.

    Requires x, y on a line, the three planes spanning a 4-space with omega
    of rank 4, and z off the line through x and y.  The middle point is the
    plane spanned by V_x cap V_y and the line where V_z meets V_x + V_y.
    """
    n = x.n
    if dim_intersect(x, y) != 1:
        raise GeometryError("x and y must lie on a line (common direction)")
    if dim_sum(x, y, z) != 4:
        raise GeometryError("x, y, z must span a 4-space")
    if gram_rank(n, x, y, z) != 4:
        raise GeometryError("omega is degenerate on the span")
    common = intersect_basis(x, y)
    v1 = primitive_int_row(common[0])
    line = stack(_rows_of(x), _rows_of(y))
    meet = intersect_basis(line, z)
    if len(meet) != 1:
        raise GeometryError("z meets the plane of the line in the wrong dimension")
    s = primitive_int_row(meet[0])
    if rank([v1, s]) != 2:
        raise GeometryError("z lies on the line through x and y")
    t = Plane2(n, [v1, s])
    assert t.is_isotropic()
    assert dim_intersect(t, x) >= 1 and dim_intersect(t, y) >= 1
    assert dim_sum(x, y, t) <= 3  # t is on the line through x and y
    assert dim_intersect(t, z) >= 1
    return t


@lru_cache(maxsize=None)
def _geometric_fixed_points(n, pair):
    """Fixed coordinate planes inside the Schubert variety, by membership."""
    return frozenset(
        (i, j) for (i, j) in basis_list(n)
        if in_schubert(n, coordinate_plane(n, i, j), pair))


def bruhat_oracle(n, p, q):
    """Containment of torus-fixed-point sets, computed geometrically."""
    p = require_valid(n, p)
    q = require_valid(n, q)
    return _geometric_fixed_points(n, p) <= _geometric_fixed_points(n, q)


def richardson_witness(n, u, v, seed=None, rng=None):
    """Construct a point of X_u cap X^v from flag intersections, or None.

    Builds V = <a', b'> with a' in E_{p1} cap E^{q2} and b' in
    E_{p2} cap E^{q1} orthogonal to a'.  Returns None exactly when one of
    the two index intervals is empty.
    """
    rng = _rng_of(seed, rng)
    p1, p2 = require_valid(n, u)
    q1, q2 = require_valid(n, v)
    two_n = 2 * n
    lo1 = max(1, two_n + 1 - q2)
    lo2 = max(1, two_n + 1 - q1)
    if lo1 > p1 or lo2 > p2:
        return None
    support1 = list(range(lo1, p1 + 1))
    support2 = list(range(lo2, p2 + 1))
    if len(support2) == 1:
        # b' is forced to e_{p2}; a' must avoid the coordinate pairing with it
        k = two_n + 1 - p2
        support1 = [i for i in support1 if i != k]
        if not support1:
            raise SamplingError(
                f"no isotropic witness support for u={u}, v={v}, n={n}")
    for _ in range(_MAX_TRIES):
        a = _random_vector(rng, two_n, support=support1)
        pairing = []
        for k in support2:
            e_k = [0] * two_n
            e_k[k - 1] = 1
            pairing.append(omega(n, a, e_k))
        if all(c == 0 for c in pairing):
            b = _random_vector(rng, two_n, support=support2)
        else:
            piv = next(i for i, c in enumerate(pairing) if c != 0)
            b = [Fraction(0)] * two_n
            acc = Fraction(0)
            for i, k in enumerate(support2):
                if i == piv:
                    continue
                coef = rng.randint(-_COORD_BOUND, _COORD_BOUND)
                b[k - 1] = Fraction(coef)
                acc += coef * pairing[i]
            b[support2[piv] - 1] = -acc / pairing[piv]
            b = list(primitive_int_row(b))
        if not any(b) or rank([a, b]) != 2:
            continue
        plane = Plane2(n, [a, b])
        if (plane.is_isotropic()
                and in_schubert(n, plane, u)
                and in_schubert(n, plane, v, opposite=True)):
            return plane
    raise SamplingError(f"richardson witness failed for u={u}, v={v}, n={n}")


def line_witness(n, u, v, seed=None, rng=None):
    """Points of X_u and X^v on a common line, built from flag data, or None.

    The common direction is drawn from E_{p2} cap E^{q2} and extended into
    each variety by an orthogonal vector from the smaller flag subspace, so
    success is exactly p2 + q2 >= 2n + 1: the nonemptiness criterion for the
    degree-1 neighborhood of the pair.
    """
    rng = _rng_of(seed, rng)
    p1, p2 = require_valid(n, u)
    q1, q2 = require_valid(n, v)
    two_n = 2 * n
    lo = max(1, two_n + 1 - q2)
    if lo > p2:
        return None
    support = range(lo, p2 + 1)
    lower = [[1 if j == i else 0 for j in range(two_n)] for i in range(p1)]
    upper = [[1 if j == two_n - 1 - i else 0 for j in range(two_n)]
             for i in range(q1)]
    for _ in range(_MAX_TRIES):
        direction = _random_vector(rng, two_n, support=support)
        a = _orthogonal_partner(n, direction,
                                _random_vector(rng, two_n, support=range(1, p1 + 1)),
                                within=lower)
        b = _orthogonal_partner(n, direction,
                                _random_vector(rng, two_n,
                                               support=range(two_n + 1 - q1, two_n + 1)),
                                within=upper)
        if a is None or b is None or not any(a) or not any(b):
            continue
        if rank([direction, a]) != 2 or rank([direction, b]) != 2:
            continue
        x = Plane2(n, [direction, a])
        y = Plane2(n, [direction, b])
        if (x.is_isotropic() and y.is_isotropic()
                and in_schubert(n, x, u)
                and in_schubert(n, y, v, opposite=True)
                and dim_intersect(x, y) >= 1):
            return x, y
    raise SamplingError(f"line witness failed for u={u}, v={v}, n={n}")


def _conic_certificate(n, x, y, z):
    """z lies on a conic through x and y: all three on the quadric of V_x + V_y."""
    span = stack(_rows_of(x), _rows_of(y))
    return (gram_rank(n, x, y) == 4
            and z.is_isotropic()
            and all(in_rowspace(r, span) for r in z.rows))


def _sample_z(n, x, y, mode, rng):
    """Sample a test plane: inside the span of x and y, touching it, or free."""
    span = [list(r) for r in row_basis(stack(_rows_of(x), _rows_of(y)))]
    two_n = 2 * n
    if mode == "generic":
        return random_isotropic_plane(n, rng=rng)
    for _ in range(_MAX_TRIES):
        coeffs = [rng.randint(-9, 9) for _ in span]
        a = [sum(c * row[i] for c, row in zip(coeffs, span))
             for i in range(two_n)]
        if not any(a):
            continue
        if mode == "inside":
            cand_coeffs = [rng.randint(-9, 9) for _ in span]
            cand = [sum(c * row[i] for c, row in zip(cand_coeffs, span))
                    for i in range(two_n)]
            b = _orthogonal_partner(n, a, cand, within=span)
        else:  # touch: one direction inside the span, one outside
            b = _orthogonal_partner(n, a, _random_vector(rng, two_n))
        if b is None or not any(b) or rank([a, b]) != 2:
            continue
        plane = Plane2(n, [a, b])
        if plane.is_isotropic():
            return plane
    raise SamplingError(f"z sampling failed for mode {mode!r}, n={n}")


def membership_suite(n, trials, seed):
    """Compare witness constructions with the span-dimension criteria.

    Each trial draws a general pair (x, y), validates the two-line chain
    through them, then tests three z-samples against the degree 2, 3 and 4
    membership rules.  Returns a JSON-ready report; failures embed the
    offending matrices and the per-trial seed.
    """
    _check_n(n)
    failures = []
    checks = 0
    outcomes = {d: {"true": 0, "false": 0} for d in ("deg2", "deg3", "deg4")}

    def fail(trial_seed, what, x, y, z, extra=None):
        failures.append({
            "what": what, "trial_seed": trial_seed,
            "x": x.matrix(), "y": y.matrix(),
            "z": z.matrix() if z is not None else None,
            "extra": extra,
        })

    for trial in range(trials):
        trial_seed = seed * 1_000_003 + trial
        rng = random.Random(trial_seed)
        x, y = general_position_pair(n, rng=rng)
        checks += 1
        try:
            mid = chain2_through(x, y)
            if not verify_two_line_chain(x, y, mid):
                fail(trial_seed, "two_line_chain", x, y, None)
        except (GeometryError, SamplingError) as exc:
            fail(trial_seed, "two_line_chain", x, y, None, extra=str(exc))
        for mode in ("inside", "touch", "generic"):
            z = _sample_z(n, x, y, mode, rng)
            ds = dim_sum(x, y, z)
            crit2, crit3 = ds <= 4, ds <= 5
            wit2 = _conic_certificate(n, x, y, z)
            t3 = gamma3_witness(x, y, z)
            wit3 = t3 is not None and verify_gamma3_witness(x, y, z, t3)
            t4 = gamma4_witness(x, y, z, rng=rng)
            wit4 = t4 is not None and verify_gamma4_witness(x, y, z, t4)
            checks += 3
            outcomes["deg2"]["true" if crit2 else "false"] += 1
            outcomes["deg3"]["true" if crit3 else "false"] += 1
            outcomes["deg4"]["true"] += 1
            if wit2 != crit2:
                fail(trial_seed, "deg2", x, y, z, extra={"dim_sum": ds})
            if wit3 != crit3:
                fail(trial_seed, "deg3", x, y, z, extra={"dim_sum": ds})
            if not wit4:
                fail(trial_seed, "deg4", x, y, z, extra={"dim_sum": ds})
    return {"suite": "membership", "n": n, "trials": trials, "seed": seed,
            "checks": checks, "outcomes": outcomes, "failures": failures}
