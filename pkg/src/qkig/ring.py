"""Ring elements of QK(IG(2, 2n)) and the closed-form multiplication rules.

Elements are finitely supported integer combinations of q^d * O_{a,b}.  The
implemented operators are multiplication by the Schubert divisor O_{2n-2,2n}
(classical and quantum), multiplication by the index-shift class O_{n-1,n},
and the two special Richardson products available when the conditions (C1)
or (C2) on the index pairs hold.  Products outside these families are
rejected rather than approximated.
"""

from typing import NamedTuple

from .pairs import (
    InvalidPairError,
    _check_n,
    codim_schubert,
    divisor_pair,
    fano_index,
    is_valid_pair,
    require_valid,
    unit_pair,
)
from .neighborhoods import condition_C1, condition_C2


class UnsupportedFamilyError(ValueError):
    """Requested a product outside the closed-form families."""


class NormalizedTerm(NamedTuple):
    """Result of rewriting an extended index into the basis range.

    ``pair`` is None when the index rewrites to zero; ``antidiagonal`` flags
    the a + b = 1 (mod 2n) indices, which the multiplication formulas never
    produce, so the flag separates formula bugs from legitimate zeros.
    """
    shift: int
    pair: tuple | None
    antidiagonal: bool = False


def normalize_extended(n, a, b):
    """Rewrite the extended index O_{a,b} as q^shift * O_{pair} or zero.

    A nonpositive first index trades for a power of q via (a, b) -> (b, a+2n);
    the recursion terminates in at most two steps for a > -2n.
    """
    _check_n(n)
    if a >= b:
        raise InvalidPairError(f"extended index needs a < b, got ({a},{b})")
    period = 2 * n
    shift = 0
    while True:
        if (a + b) % period == 1 % period:
            return NormalizedTerm(shift, None, antidiagonal=True)
        if is_valid_pair(n, a, b):
            return NormalizedTerm(shift, (a, b))
        if a <= 0:
            a, b = b, a + period
            shift += 1
            if a >= b:
                return NormalizedTerm(shift, None)
            continue
        # a >= 1 with b > 2n: outside the quasi-periodic range
        return NormalizedTerm(shift, None)


def _term_key(item):
    (d, (a, b)), _ = item
    return (d, a + b, a)


class RingElement:
    """Immutable integer combination of q^d * O_{a,b} for a fixed n."""

    __slots__ = ("n", "_terms")

    def __init__(self, n, terms=None):
        _check_n(n)
        clean = {}
        for (d, pair), coeff in (terms or {}).items():
            if not isinstance(coeff, int) or isinstance(coeff, bool):
                raise TypeError(f"coefficient must be an integer, got {coeff!r}")
            if not isinstance(d, int) or d < 0:
                raise ValueError(f"q-power must be a nonnegative integer, got {d!r}")
            if coeff == 0:
                continue
            clean[(d, require_valid(n, pair))] = coeff
        self.n = n
        self._terms = clean

    @classmethod
    def zero(cls, n):
        return cls(n, {})

    @classmethod
    def basis(cls, n, pair, d=0, coeff=1):
        return cls(n, {(d, tuple(pair)): coeff})

    @classmethod
    def unit(cls, n):
        return cls.basis(n, unit_pair(n))

    def sorted_terms(self):
        """Terms as ((d, pair), coeff), sorted by (d, a + b, a)."""
        return sorted(self._terms.items(), key=_term_key)

    def coefficient(self, d, pair):
        return self._terms.get((d, tuple(pair)), 0)

    def q_support(self):
        return {d for (d, _) in self._terms}

    def q_part(self, d):
        """The terms with the exact q-power d (power kept as-is)."""
        return RingElement(self.n, {k: v for k, v in self._terms.items() if k[0] == d})

    def at_q0(self):
        return self.q_part(0)

    def times_q(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"q-shift must be a nonnegative integer, got {k!r}")
        if k == 0:
            return self
        return RingElement(self.n, {(d + k, p): c for (d, p), c in self._terms.items()})

    def scale(self, k):
        if k == 0:
            return RingElement.zero(self.n)
        return RingElement(self.n, {key: k * c for key, c in self._terms.items()})

    def _merged(self, other, sign):
        if not isinstance(other, RingElement):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"mixed ambient parameters: {self.n} vs {other.n}")
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + sign * c
        return RingElement(self.n, out)

    def __add__(self, other):
        return self._merged(other, 1)

    def __sub__(self, other):
        return self._merged(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def __rmul__(self, k):
        if isinstance(k, int):
            return self.scale(k)
        return NotImplemented

    __mul__ = __rmul__

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        return (isinstance(other, RingElement)
                and self.n == other.n and self._terms == other._terms)

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def to_dict(self):
        """Canonical JSON form: terms sorted by (q, a + b, a)."""
        return {
            "n": self.n,
            "terms": [{"q": d, "pair": [a, b], "coeff": c}
                      for (d, (a, b)), c in self.sorted_terms()],
        }

    def to_text(self):
        if not self._terms:
            return "0"
        parts = []
        for (d, (a, b)), c in self.sorted_terms():
            mag = abs(c)
            body = f"O_{{{a},{b}}}"
            if d == 1:
                body = "q*" + body
            elif d > 1:
                body = f"q^{d}*" + body
            if mag != 1:
                body = f"{mag}*" + body
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"RingElement(n={self.n}, {self.to_text()})"


def _chevalley_raw_cases(n, q1, q2, quantum):
    """Coefficient/index list for the divisor product, before normalization.

    Five-case dispatch on (q1, q2); the quantum and classical rules share the
    same index lists except at q1 + q2 = 2n + 2 where the quantum rule splits
    off the (2, 2n) class.
    """
    s = q1 + q2
    top = 2 * n
    if q1 == q2 - 1:
        return [(1, (q1 - 1, q2))]
    if s not in (top + 2, top + 3):
        return [(1, (q1 - 1, q2)), (1, (q1, q2 - 1)), (-1, (q1 - 1, q2 - 1))]
    if s == top + 3:
        return [(1, (q1 - 1, q2)), (1, (q1, q2 - 1)), (-1, (q1 - 1, q2 - 2)),
                (-1, (q1 - 2, q2 - 1)), (1, (q1 - 2, q2 - 2))]
    # s == 2n + 2
    if quantum and q1 == 2 and q2 == top and n >= 3:
        return [(2, (q1 - 1, q2 - 1)), (1, (q1, q2 - 2)), (-2, (q1 - 1, q2 - 2)),
                (-1, (q1 - 2, q2 - 1)), (1, (q1 - 2, q2 - 2))]
    if q1 == n:  # q2 == n + 2
        return [(2, (q1 - 1, q2 - 1)), (1, (q1 - 2, q2)), (-2, (q1 - 2, q2 - 1)),
                (-1, (q1 - 1, q2 - 2)), (1, (q1 - 2, q2 - 2))]
    return [(2, (q1 - 1, q2 - 1)), (1, (q1 - 2, q2)), (1, (q1, q2 - 2)),
            (-2, (q1 - 2, q2 - 1)), (-2, (q1 - 1, q2 - 2)), (1, (q1 - 2, q2 - 2))]


def _classical_chevalley_pair(n, pair):
    q1, q2 = require_valid(n, pair)
    out = {}
    for coeff, (a, b) in _chevalley_raw_cases(n, q1, q2, quantum=False):
        if is_valid_pair(n, a, b):
            key = (0, (a, b))
            out[key] = out.get(key, 0) + coeff
    return RingElement(n, out)


def _quantum_chevalley_pair(n, pair):
    q1, q2 = require_valid(n, pair)
    if n == 2 and q1 + q2 == 2 * n + 2:
        # (2, 4) is the only such pair at n = 2 and both sum-(2n+2) special
        # cases collide on it; the six-term list would hit the degenerate
        # index (2, 2).  Its q-part is the two-to-one correction
        # q(O_{2n-2,2n} - 1) on top of the classical product.
        return _classical_chevalley_pair(n, pair) + RingElement(
            n, {(1, unit_pair(n)): -1, (1, divisor_pair(n)): 1})
    out = {}
    for coeff, (a, b) in _chevalley_raw_cases(n, q1, q2, quantum=True):
        assert a >= 0, (n, pair, (a, b))
        nt = normalize_extended(n, a, b)
        assert not nt.antidiagonal, (n, pair, (a, b))
        if nt.pair is None:
            continue
        key = (nt.shift, nt.pair)
        out[key] = out.get(key, 0) + coeff
    return RingElement(n, out)


def _seidel_pair(n, pair):
    a, b = require_valid(n, pair)
    nt = normalize_extended(n, a - n, b - n)
    assert nt.pair is not None and not nt.antidiagonal, (n, pair)
    return RingElement(n, {(nt.shift, nt.pair): 1})


def _apply_termwise(pair_op, n, element):
    if element.n != n:
        raise ValueError(f"element has n={element.n}, expected {n}")
    out = RingElement.zero(n)
    for (d, pair), coeff in element.sorted_terms():
        out = out + pair_op(n, pair).times_q(d).scale(coeff)
    return out


def classical_chevalley(n, element):
    """Multiplication by the Schubert divisor class in K(X), termwise."""
    return _apply_termwise(_classical_chevalley_pair, n, element)


def quantum_chevalley(n, element):
    """Multiplication by the Schubert divisor class in QK(X), termwise."""
    return _apply_termwise(_quantum_chevalley_pair, n, element)


def seidel(n, element):
    """Multiplication by O_{n-1,n}: the index shift (a, b) -> (a-n, b-n)."""
    return _apply_termwise(_seidel_pair, n, element)


def richardson_special_expand(n, p):
    """Basis expansion of the class of { V meets E_p } cap { V meets E^{2n-p} }.

    Defined for p in [1, 2n-1]; for p > n the two flags swap roles and the
    class equals the one for 2n - p (translates share a K-class).
    """
    _check_n(n)
    if not 1 <= p <= 2 * n - 1:
        raise ValueError(f"p must lie in [1, 2n-1], got {p}")
    if p > n:
        p = 2 * n - p
    terms = []
    if p < n:
        terms.append((1, (p, 2 * n - p)))
        for k in range(1, p):
            terms.append((2, (k, 2 * n - k)))
        terms.append((-2, (p - 1, 2 * n - p)))
        for k in range(1, p - 1):
            terms.append((-3, (k, 2 * n - 1 - k)))
        for k in range(1, p - 1):
            terms.append((1, (k, 2 * n - 2 - k)))
    else:
        for k in range(1, n):
            terms.append((2, (k, 2 * n - k)))
        terms.append((-1, (n - 1, n)))
        for k in range(1, n - 1):
            terms.append((-3, (k, 2 * n - 1 - k)))
        for k in range(1, n - 1):
            terms.append((1, (k, 2 * n - 2 - k)))
    out = {}
    for coeff, (a, b) in terms:
        if is_valid_pair(n, a, b):
            key = (0, (a, b))
            out[key] = out.get(key, 0) + coeff
    return RingElement(n, out)


def product_C1(n, u, v):
    """Product O_u * O^v when (C1) holds: p1 + q1 = 2n = p2 = q2."""
    u = require_valid(n, u)
    v = require_valid(n, v)
    if not condition_C1(n, u, v):
        raise UnsupportedFamilyError(
            f"condition (C1) fails for u={u}, v={v}, n={n}")
    out = richardson_special_expand(n, u[0])
    return out + RingElement(n, {(1, unit_pair(n)): -1, (1, divisor_pair(n)): 1})


def product_C2(n, u, v):
    """Product O_u * O^v when (C2) holds."""
    u = require_valid(n, u)
    v = require_valid(n, v)
    if not condition_C2(n, u, v):
        raise UnsupportedFamilyError(
            f"condition (C2) fails for u={u}, v={v}, n={n}")
    out = richardson_special_expand(n, u[0] + v[0]).times_q(1)
    return out + RingElement(n, {(2, unit_pair(n)): -1, (2, divisor_pair(n)): 1})


def special_product(n, u, v):
    """The C1 or C2 product for (u, v); raises UnsupportedFamilyError otherwise."""
    u = require_valid(n, u)
    v = require_valid(n, v)
    if condition_C1(n, u, v):
        return product_C1(n, u, v)
    if condition_C2(n, u, v):
        return product_C2(n, u, v)
    raise UnsupportedFamilyError(
        f"unsupported family: u={u}, v={v} satisfy neither (C1) nor (C2) for n={n}")


def chevalley_q_part_geometric(n, v):
    """The q^1 part of the divisor product, from the line-neighborhood classes.

    Independent cross-check of quantum_chevalley: nonzero only when the index
    conditions make degree-1 curves contribute.
    """
    q1, q2 = require_valid(n, v)
    top = 2 * n
    if (q1, q2) == (2, top):
        return RingElement(n, {(1, unit_pair(n)): -1, (1, divisor_pair(n)): 1})
    if q1 == 1 and q2 <= top - 1:
        out = {(1, (q2, top)): 1}
        if is_valid_pair(n, q2 - 1, top):
            # at q2 = 2 the Richardson behind the boundary term is empty
            out[(1, (q2 - 1, top))] = -1
        return RingElement(n, out)
    return RingElement.zero(n)


def sign_check(element, cu, cv):
    """Check codimension-alternating signs on a product expansion.

    For each term q^d * coeff * O_w the sign (-1)^(cu + cv + cw + d(2n-1))
    must make the coefficient nonnegative, where cu, cv are the codimensions
    of the two factors and cw the codimension of w.  Returns (ok, violations).
    """
    n = element.n
    r = fano_index(n)
    violations = []
    for (d, pair), coeff in element.sorted_terms():
        cw = codim_schubert(n, *pair)
        parity = (cu + cv + cw + d * r) % 2
        if (-1) ** parity * coeff < 0:
            violations.append({"q": d, "pair": pair, "coeff": coeff,
                               "parity": parity})
    return (not violations, violations)


def q_support(element):
    return element.q_support()


def apply_word(n, word, start=None):
    """Fold a word of operators over an element (default: the unit).

    Tokens: "divisor", "seidel", "q" or ("q", k), ("scalar", k).
    """
    out = RingElement.unit(n) if start is None else start
    for token in word:
        if token == "divisor":
            out = quantum_chevalley(n, out)
        elif token == "seidel":
            out = seidel(n, out)
        elif token == "q":
            out = out.times_q(1)
        elif isinstance(token, tuple) and len(token) == 2 and token[0] == "q":
            out = out.times_q(token[1])
        elif isinstance(token, tuple) and len(token) == 2 and token[0] == "scalar":
            out = out.scale(token[1])
        else:
            raise ValueError(f"unknown operator token: {token!r}")
    return out
