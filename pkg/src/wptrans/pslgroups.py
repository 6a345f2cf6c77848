"""PSL(2,q) made concrete: GF(p^n) arithmetic, a brute-force element
census, Macbeath's Hurwitz classification, and transitivity verdicts.

The census is the oracle of this package: it enumerates the matrices of
SL(2,q) directly (no group-theory shortcuts), canonicalizes modulo +-I,
and reads off element orders from the permutation each matrix induces
on the q+1 points of the projective line.  Everything the fixed-point
formulas assume about element orders is cross-checked against it.

The transitivity verdicts encode a case analysis as data: the
fixed-point counts they quote are computed, but facts like the
maximality of the (2,3,7) triangle group are recorded, not re-derived.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from .fixedpoints import is_realizable_order, psl2q_fixed_points
from .orbitweights import (
    TransitivityStatus,
    TransitivityVerdict,
    classify,
    orbit_profile,
    solve_weight_equation,
)

__all__ = [
    "FiniteField",
    "field_build",
    "prime_power",
    "psl2_order",
    "OrderCensus",
    "order_census",
    "HurwitzStatus",
    "is_hurwitz_psl2q",
    "hurwitz_genus",
    "psl2q_transitivity_verdict",
    "modular_surface_verdict",
]

CENSUS_Q_LIMIT = 32
WORKERS_ENV = "WPTRANS_WORKERS"


def _is_prime(m):
    if m < 2:
        return False
    f = 2
    while f * f <= m:
        if m % f == 0:
            return False
        f += 1
    return True


def prime_power(q):
    """Decompose q = p**n, p prime, n >= 1; ValueError otherwise."""
    if not isinstance(q, int) or isinstance(q, bool) or q < 2:
        raise ValueError("prime power expected, got %r" % (q,))
    p = 2
    while p * p <= q:
        if q % p == 0:
            m, n = q, 0
            while m % p == 0:
                m //= p
                n += 1
            if m != 1:
                raise ValueError("%d is not a prime power" % q)
            return p, n
        p += 1
    return q, 1


# ---------------------------------------------------------------------------
# GF(p^n)

def _poly_mul_mod(u, v, p, modulus):
    """Product of coefficient tuples u, v over GF(p), reduced mod modulus."""
    n = len(modulus) - 1
    out = [0] * (len(u) + len(v) - 1)
    for i, ui in enumerate(u):
        if ui:
            for j, vj in enumerate(v):
                out[i + j] = (out[i + j] + ui * vj) % p
    # long division by the monic modulus
    for i in range(len(out) - 1, n - 1, -1):
        coeff = out[i]
        if coeff:
            out[i] = 0
            for j in range(n):
                out[i - n + j] = (out[i - n + j] - coeff * modulus[j]) % p
    return tuple(out[:n]) + (0,) * (n - len(out))


def _poly_divisible(num, den, p):
    """Whether den divides num over GF(p) (both little-endian, den monic-led)."""
    num = list(num)
    dd = len(den) - 1
    while len(den) > 1 and den[-1] == 0:
        den = den[:-1]
        dd -= 1
    lead_inv = pow(den[-1], p - 2, p)
    for i in range(len(num) - 1, dd - 1, -1):
        coeff = num[i]
        if coeff:
            factor = coeff * lead_inv % p
            for j in range(dd + 1):
                num[i - dd + j] = (num[i - dd + j] - factor * den[j]) % p
    return not any(num)


class FiniteField:
    """GF(p^n) with elements encoded as integers 0..q-1 (base-p digits).

    The modulus is the lexicographically first monic irreducible of
    degree n (constant coefficient varying fastest), verified
    irreducible at construction by trial division against every monic
    polynomial of degree at most n/2.  Encoding 0 is zero and encoding
    1 is one for every field.
    """

    def __init__(self, p, n, modulus):
        self.p = p
        self.n = n
        self.q = p ** n
        self.modulus = modulus  # little-endian, length n+1, monic
        self._tables = None

    def decode(self, code):
        digits = []
        for _ in range(self.n):
            code, r = divmod(code, self.p)
            digits.append(r)
        return tuple(digits)

    def encode(self, digits):
        code = 0
        for d in reversed(digits):
            code = code * self.p + d
        return code

    def add(self, x, y):
        xd, yd = self.decode(x), self.decode(y)
        return self.encode(tuple((a + b) % self.p for a, b in zip(xd, yd)))

    def neg(self, x):
        return self.encode(tuple((-a) % self.p for a in self.decode(x)))

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        return self.encode(_poly_mul_mod(self.decode(x), self.decode(y), self.p, self.modulus))

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(x, self.q - 2)

    def pow(self, x, k):
        result, base = 1, x
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def elements(self):
        return range(self.q)

    def tables(self):
        """(add, mul, inv, neg) lookup tables; inv[0] is None."""
        if self._tables is None:
            q = self.q
            add = [[self.add(x, y) for y in range(q)] for x in range(q)]
            mul = [[self.mul(x, y) for y in range(q)] for x in range(q)]
            inv = [None] + [self.inv(x) for x in range(1, q)]
            neg = [self.neg(x) for x in range(q)]
            self._tables = (add, mul, inv, neg)
        return self._tables


def field_build(p, n):
    """Construct GF(p^n) with a verified-irreducible canonical modulus.

    p must be prime (trial division) and p**n at most 2**16.
    """
    if not _is_prime(p):
        raise ValueError("%r is not prime" % (p,))
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    if p ** n > 2 ** 16:
        raise ValueError("field size %d exceeds the 2^16 desk-scale bound" % p ** n)

    if n == 1:
        return FiniteField(p, 1, (0, 1))  # modulus x: GF(p) itself

    # candidate moduli x^n + (digits of m), m counting upward; the first
    # irreducible is the canonical choice.
    for m in range(p ** n):
        digits = []
        mm = m
        for _ in range(n):
            mm, r = divmod(mm, p)
            digits.append(r)
        candidate = tuple(digits) + (1,)
        if _candidate_irreducible(candidate, p, n):
            return FiniteField(p, n, candidate)
    raise AssertionError("no irreducible polynomial of degree %d over GF(%d)" % (n, p))


def _candidate_irreducible(candidate, p, n):
    # trial division by every monic polynomial of degree 1..n//2
    for deg in range(1, n // 2 + 1):
        for m in range(p ** deg):
            digits = []
            mm = m
            for _ in range(deg):
                mm, r = divmod(mm, p)
                digits.append(r)
            divisor = tuple(digits) + (1,)
            if _poly_divisible(candidate, divisor, p):
                return False
    return True


# ---------------------------------------------------------------------------
# PSL(2,q) census

def psl2_order(q):
    """|PSL(2,q)| = q(q^2-1)/gcd(2,q-1).

    Defined for every prime power q >= 2; the group is simple only for
    q >= 4 (PSL(2,2) and PSL(2,3) are S3 and A4).
    """
    prime_power(q)
    return q * (q * q - 1) // gcd(2, q - 1)


@dataclass(frozen=True)
class OrderCensus:
    """Element-order histogram of PSL(2,q) from brute-force enumeration."""

    q: int
    group_order: int
    counts: dict

    def __post_init__(self):
        assert sum(self.counts.values()) == self.group_order, "census does not cover the group"
        assert self.counts.get(1) == 1, "identity must be counted exactly once"

    def orders(self):
        return sorted(self.counts)

    def rows(self):
        return [(d, self.counts[d]) for d in self.orders()]


def _perm_order_and_fixed(images):
    """(multiplicative order, fixed point count) of a permutation."""
    size = len(images)
    seen = bytearray(size)
    order = 1
    fixed = 0
    for start in range(size):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = 1
            x = images[x]
            length += 1
        if length == 1:
            fixed += 1
        order = order * length // gcd(order, length)
    return order, fixed


def _census_shard(p, n, a_codes):
    """Census counts contributed by matrices whose top-left entry is in a_codes.

    Enumerates SL(2,q) directly: for a != 0, d = (1+bc)/a; for a = 0,
    bc = -1 forces c and leaves d free.  For odd q only the canonical
    representative of {M, -M} is visited (first nonzero entry e with
    code(e) < code(-e)), so every PSL element is seen exactly once.
    Each element's order comes from its permutation of the projective
    line (points: the q field codes plus a point at infinity); fixed
    point sanity (non-identity elements fix at most 2 points, order-p
    elements exactly one) is asserted on the fly.
    """
    field = field_build(p, n)
    add, mul, inv, neg = field.tables()
    q = field.q
    odd = q % 2 == 1
    INF = q
    counts = {}

    def visit(a, b, c, d):
        images = []
        row_ax = mul[a]
        row_cx = mul[c]
        for x in range(q):
            den = add[row_cx[x]][d]
            if den == 0:
                images.append(INF)
            else:
                images.append(mul[add[row_ax[x]][b]][inv[den]])
        images.append(mul[a][inv[c]] if c != 0 else INF)
        order, fixed = _perm_order_and_fixed(images)
        if order > 1:
            assert fixed <= 2, "non-identity element fixing %d > 2 points" % fixed
            if order == p:
                assert fixed == 1, "order-%d element must fix exactly one point" % p
        counts[order] = counts.get(order, 0) + 1

    for a in a_codes:
        if a != 0:
            if odd and neg[a] < a:
                continue
            ia = inv[a]
            for b in range(q):
                row_b = mul[b]
                for c in range(q):
                    d = mul[add[row_b[c]][1]][ia]  # d = (1 + b c) / a
                    visit(a, b, c, d)
        else:
            for b in range(1, q):
                if odd and neg[b] < b:
                    continue
                c = neg[inv[b]]  # bc = -1
                for d in range(q):
                    visit(0, b, c, d)
    return counts


def _worker_count(workers):
    if workers is not None:
        return max(1, int(workers))
    return max(1, int(os.environ.get(WORKERS_ENV, "1")))


def order_census(q, workers=None):
    """Brute-force element-order census of PSL(2,q), q <= 32.

    Totals are checked against q(q^2-1)/gcd(2,q-1) and every occurring
    order is checked against the arithmetic realizability predicate.
    workers > 1 shards the enumeration by the top-left matrix entry
    (default from the WPTRANS_WORKERS environment variable).
    """
    p, n = prime_power(q)
    if q > CENSUS_Q_LIMIT:
        raise ValueError(
            "census is a desk-scale oracle, q <= %d; use the arithmetic "
            "order predicates for larger q" % CENSUS_Q_LIMIT
        )
    workers = _worker_count(workers)

    if workers == 1:
        counts = _census_shard(p, n, range(q))
    else:
        chunks = [list(range(start, q, workers)) for start in range(workers)]
        counts = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_census_shard, [p] * workers, [n] * workers, chunks):
                for order, count in part.items():
                    counts[order] = counts.get(order, 0) + count

    census = OrderCensus(q, psl2_order(q), counts)
    for d in census.orders():
        assert is_realizable_order(q, d), (
            "census found order %d in PSL(2,%d) outside the arithmetic predicate" % (d, q)
        )
    return census


# ---------------------------------------------------------------------------
# Hurwitz classification and verdicts

class HurwitzStatus(NamedTuple):
    q: int
    is_hurwitz: bool
    reason: str


def is_hurwitz_psl2q(q):
    """Macbeath's classification of the Hurwitz groups among PSL(2,q).

    PSL(2,q) is a Hurwitz group exactly when (i) q = 7, or (ii) q = p
    prime with p = +-1 mod 7, or (iii) q = p^3 with p = +-2 or +-3
    mod 7.
    """
    p, n = prime_power(q)
    if q == 7:
        return HurwitzStatus(q, True, "clause (i): q = 7")
    if n == 1 and p % 7 in (1, 6):
        return HurwitzStatus(q, True, "clause (ii): prime q = %d = %s1 mod 7"
                             % (p, "+" if p % 7 == 1 else "-"))
    if n == 3 and p % 7 in (2, 3, 4, 5):
        sign = {2: "+2", 3: "+3", 4: "-3", 5: "-2"}[p % 7]
        return HurwitzStatus(q, True, "clause (iii): q = %d^3 with %d = %s mod 7" % (p, p, sign))
    return HurwitzStatus(q, False, "no clause applies (q = %d^%d, p mod 7 = %d)" % (p, n, p % 7))


def hurwitz_genus(group_order):
    """Genus on which a Hurwitz group of the given order acts: 1 + order/84."""
    if group_order < 84 or group_order % 84 != 0:
        raise ValueError("%d is not a Hurwitz order (must be a positive multiple of 84)"
                         % group_order)
    return 1 + group_order // 84


_SCHOENEBERG = "Schoeneberg criterion: more than 4 fixed points forces Weierstrass points"


def psl2q_transitivity_verdict(q, t):
    """Transitivity of PSL(2,q) on the Weierstrass points of X_{t,q}.

    X_{t,q} is the surface from the kernel of a (2,3,t) triangle-group
    epimorphism onto PSL(2,q); the caller asserts such an epimorphism
    exists (Macbeath: every q except 9 is a quotient of the modular
    group), it is not searched for here.

    The case analysis: q > 15 is never transitive (Macbeath fixed-point
    counts for orders 2 and 3 exceed the Schoeneberg threshold, the
    fixed points land on edge-centres and vertices of the associated
    regular map, no map automorphism mixes those classes, and the
    triangle group is maximal so map and surface automorphisms agree).
    q = 11 and q = t = 13 are not transitive.  (7,7) and (8,7) are
    transitive by the weight-equation counting argument.  (13,7) is
    undecided: with Streit's vanishing for vertices and face-centres,
    at most two orbits remain.  Anything else is outside the documented
    coverage.
    """
    prime_power(q)
    if t < 7:
        raise ValueError("hyperbolic (2,3,t) needs t >= 7, got %r" % (t,))

    if q > 15:
        f2 = psl2q_fixed_points(q, (2, 3, t), 2)
        f3 = psl2q_fixed_points(q, (2, 3, t), 3)
        assert f2 > 4 and f3 > 4, "fixed point engine broke: F(2)=%d, F(3)=%d" % (f2, f3)
        return TransitivityVerdict(
            TransitivityStatus.NOT_TRANSITIVE, (2, 4), (
                "Macbeath formula: an order-2 element fixes %d points, an order-3 "
                "element fixes %d; both exceed 4" % (f2, f3),
                _SCHOENEBERG,
                "order-2 fixed points are edge-centres and order-3 fixed points are "
                "vertices of the associated regular map; no map automorphism mixes "
                "the two classes, and by maximality of the triangle group the map "
                "and surface automorphism groups coincide",
            ))

    if q == 11:
        return TransitivityVerdict(
            TransitivityStatus.NOT_TRANSITIVE, (2, 4), (
                "recorded claim: elements of order 2 and of order 5 each fix 5 points, "
                "so edge-centres and face-centres are Weierstrass points and cannot "
                "be mixed by map automorphisms",
                _SCHOENEBERG,
                "discrepancy note: direct evaluation of the stated Macbeath formula "
                "with periods (2,3,11) gives 6 fixed points for order 2 and 0 for "
                "order 5 (or 2 for order 5 with periods (2,3,5)), never 5; the "
                "verdict rests on the recorded theorem, not on a guessed reading",
            ))

    if q == 13 and t == 13:
        f13 = psl2q_fixed_points(13, (2, 3, 13), 13)
        return TransitivityVerdict(
            TransitivityStatus.NOT_TRANSITIVE, (2, 4), (
                "Macbeath formula: the order-13 element fixes %d points" % f13,
                _SCHOENEBERG,
                "face-centres and edge-centres are both Weierstrass points, and no "
                "map automorphism mixes the two classes",
            ))

    if q in (7, 8) and t == 7:
        order = psl2_order(q)
        genus = hurwitz_genus(order)
        profile = orbit_profile(order, (2, 3, 7))
        sols = solve_weight_equation(profile.orbit_sizes, genus ** 3 - genus)
        verdict = classify(sols, profile=profile)
        assert verdict.status is TransitivityStatus.TRANSITIVE
        surface = "Klein quartic (genus 3)" if q == 7 else "Macbeath surface (genus 7)"
        return TransitivityVerdict(
            verdict.status, verdict.orbit_count_range,
            verdict.reasons + ("weight-equation counting argument on the %s" % surface,),
            verdict.guaranteed_orbits)

    if q == 13 and t == 7:
        profile = orbit_profile(1092, (2, 3, 7))
        sols = solve_weight_equation(profile.orbit_sizes, 14 ** 3 - 14)
        verdict = classify(sols, zero_indices=(0, 1), profile=profile)
        assert verdict.status is TransitivityStatus.UNDECIDED
        assert verdict.orbit_count_range == (1, 2)
        return TransitivityVerdict(
            verdict.status, verdict.orbit_count_range,
            verdict.reasons + (
                "Streit: vertices and face-centres of the genus-14 Hurwitz surfaces "
                "are not Weierstrass points, so w1 = w2 = 0",
                "the 546 edge-centres are Weierstrass points in every surviving case",
                "genus note: the surface of the order-1092 Hurwitz action has genus "
                "14 (1092 = 84*13); a stray genus value of 13 sometimes quoted for "
                "it is inconsistent with the weight total 2730 = 14^3-14",
            ),
            verdict.guaranteed_orbits)

    return TransitivityVerdict(
        TransitivityStatus.UNDECIDED, (1, 4), (
            "the pair (q, t) = (%d, %d) is outside the documented case analysis" % (q, t),
        ))


def modular_surface_verdict(p):
    """Transitivity on the Weierstrass points of the modular surface X(p).

    X(p) is the compactified quotient by the principal congruence
    subgroup of level p; it coincides with X_{p,p}, so the verdict
    delegates to the (q, t) = (p, p) case.  Transitive exactly for
    p = 7.  X(5) has genus 0 and the question is void there.
    """
    if not _is_prime(p) or p < 5:
        raise ValueError("p must be a prime >= 5, got %r" % (p,))
    if p == 5:
        return TransitivityVerdict(
            TransitivityStatus.UNDECIDED, (0, 0), (
                "X(5) has genus 0: no Weierstrass points, the question is void",
            ))
    verdict = psl2q_transitivity_verdict(p, p)
    return TransitivityVerdict(
        verdict.status, verdict.orbit_count_range,
        verdict.reasons + ("X(%d) = X_{%d,%d}: the modular surface of level %d" % (p, p, p, p),),
        verdict.guaranteed_orbits)
