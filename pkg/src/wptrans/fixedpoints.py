"""Fixed-point counts for automorphisms, and Schoeneberg's criterion.

Macbeath's formulas give the number of fixed points F(t) of an
automorphism t of order d in terms of the periods m_1, ..., m_r of the
lifted Fuchsian group.  Two cases are implemented: a cyclic group of
order n, and PSL(2,q).  All evaluation is in exact rationals and the
result is asserted to be an integer; a non-integral value means the
(group, periods, d) combination is not realizable and is reported as a
caller error, never rounded.

Schoeneberg's criterion: an automorphism of a surface of genus >= 2
fixing more than 4 points fixes only Weierstrass points.
"""

from fractions import Fraction
from math import gcd

__all__ = [
    "cyclic_fixed_points",
    "psl2q_fixed_points",
    "schoeneberg_is_weierstrass",
    "is_realizable_order",
]


def _prime_power(q):
    """Decompose q = p**n with p prime, or raise ValueError."""
    if not isinstance(q, int) or isinstance(q, bool) or q < 2:
        raise ValueError("prime power expected, got %r" % (q,))
    for p in range(2, q + 1):
        if p * p > q:
            return q, 1  # q itself is prime
        if q % p == 0:
            m, n = q, 0
            while m % p == 0:
                m //= p
                n += 1
            if m != 1:
                raise ValueError("%d is not a prime power" % q)
            return p, n
    return q, 1


def _divisor_sum(periods, d):
    """sum of 1/m_i over the periods divisible by d, exact."""
    total = Fraction(0)
    for m in periods:
        if m % d == 0:
            total += Fraction(1, m)
    return total


def _as_integer(value, context):
    if value.denominator != 1:
        raise ValueError("non-integral fixed point count %s for %s; "
                         "the inputs do not describe a realizable action" % (value, context))
    n = value.numerator
    assert n >= 0, "negative fixed point count %d for %s" % (n, context)
    return n


def cyclic_fixed_points(n, periods, d):
    """F(t) = n * sum over periods m_i divisible by d of 1/m_i.

    Here the automorphism group is cyclic of order n with lift periods
    m_1, ..., m_r; t is any element of order d >= 2.  A cyclic quotient
    forces every period to divide n, which is checked (it also makes
    the sum automatically integral: each term contributes n/m_i).  A d
    that divides no period gives 0.
    """
    if n < 1:
        raise ValueError("group order must be positive")
    if d < 2:
        raise ValueError("element order must be >= 2")
    for m in periods:
        if m < 2 or n % m != 0:
            raise ValueError(
                "period %r does not divide the cyclic group order %d" % (m, n)
            )
    value = n * _divisor_sum(periods, d)
    return _as_integer(value, "cyclic n=%d, periods=%s, d=%d" % (n, tuple(periods), d))


def is_realizable_order(q, d):
    """Arithmetic validity of d as an element order of PSL(2,q).

    d is accepted when d divides (q-1)/gcd(2,q-1) or (q+1)/gcd(2,q-1)
    or d equals the characteristic p.  This is the purely arithmetic
    predicate; the brute-force order census gives the same answer for
    every q it can reach.
    """
    if d < 1:
        return False
    if d == 1:
        return True
    p, _ = _prime_power(q)
    half = gcd(2, q - 1)
    return (q - 1) % (half * d) == 0 or (q + 1) % (half * d) == 0 or d == p


def psl2q_fixed_points(q, periods, d):
    """Fixed points of an order-d element of PSL(2,q) with the given lift periods.

    Macbeath's formula, q = p**n odd:

        (q-1) * sum_{d|m_i} 1/m_i          if d | (q-1)/2
        (q+1) * sum_{d|m_i} 1/m_i          if d | (q+1)/2
        gcd(n,2)/2 * p^(n-1)*(p-1) * #{m_i = p}   if d = p

    and q even:

        2(q-1) * sum_{d|m_i} 1/m_i         if d | q-1
        2(q+1) * sum_{d|m_i} 1/m_i         if d | q+1
        2^(n-1) * #{m_i = 2}               if d = 2

    The branches are mutually exclusive for d >= 2 (consecutive halves
    are coprime, and p divides neither q-1 nor q+1), so dispatch is by
    explicit divisibility tests.  A d matching no branch is not an
    element order of PSL(2,q) and is rejected.
    """
    p, n = _prime_power(q)
    if d < 2:
        raise ValueError("element order must be >= 2")
    for m in periods:
        if m < 2:
            raise ValueError("every period must be >= 2, got %r" % (m,))
    context = "PSL(2,%d), periods=%s, d=%d" % (q, tuple(periods), d)

    if q % 2 == 1:
        branches = [
            ((q - 1) // 2 % d == 0, (q - 1) * _divisor_sum(periods, d)),
            ((q + 1) // 2 % d == 0, (q + 1) * _divisor_sum(periods, d)),
            (d == p,
             Fraction(gcd(n, 2), 2) * p ** (n - 1) * (p - 1)
             * sum(1 for m in periods if m == p)),
        ]
    else:
        branches = [
            ((q - 1) % d == 0, 2 * (q - 1) * _divisor_sum(periods, d)),
            ((q + 1) % d == 0, 2 * (q + 1) * _divisor_sum(periods, d)),
            (d == 2, Fraction(2 ** (n - 1) * sum(1 for m in periods if m == 2))),
        ]

    hits = [value for applies, value in branches if applies]
    if not hits:
        raise ValueError("order %d is not realizable in PSL(2,%d)" % (d, q))
    assert len(hits) == 1, "fixed point branches overlap for %s" % context
    return _as_integer(Fraction(hits[0]), context)


def schoeneberg_is_weierstrass(fixed_count):
    """Schoeneberg: more than 4 fixed points forces Weierstrass points.

    Strictly more than 4; the boundary value 4 proves nothing.
    """
    if fixed_count < 0:
        raise ValueError("fixed point count cannot be negative")
    return fixed_count > 4
