"""Fermat curve x^n + y^n + z^n = 0: genus, distinguished Weierstrass
points, weight accounting, and the transitivity theorem.

Two families of special points are tracked. The trivial points are the
3n points with a vanishing coordinate; Hasse computed their weight.
The Leopoldt points are the 3n^2 points (gamma, beta_1, beta_2) with
gamma^n = 2 and beta_i^n = -1 (in some coordinate order); Towse bounded
their weight, exactly for n <= 8.  The full automorphism group is
(Z_n + Z_n) x| S_3, of order 6n^2, and both families are single orbits.

Points are symbolic: a coordinate is a formal tag (1, beta, or gamma)
times a power of the primitive n-th root of unity zeta = beta^2, and
the action only shuffles exponents.  gamma^n = 2 and beta^n = -1 are
never evaluated.
"""

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .orbitweights import TransitivityStatus, TransitivityVerdict

__all__ = [
    "PointClass",
    "FermatPoint",
    "FermatAutomorphism",
    "generators",
    "automorphism_group_order",
    "fermat_genus",
    "trivial_point_weight",
    "leopoldt_weight_bound",
    "trivial_points",
    "leopoldt_points",
    "orbit_enumerate",
    "AccountingReport",
    "weight_accounting",
    "fermat_transitivity",
]


class PointClass(Enum):
    TRIVIAL = "trivial"
    LEOPOLDT = "leopoldt"


@dataclass(frozen=True)
class FermatPoint:
    """Projective point in one of the two distinguished families.

    TRIVIAL with position k and exponents (a,): coordinate k is 0, the
    lower-indexed of the other two slots is zeta^a, the higher is 1.
    There are 3n such points.

    LEOPOLDT with position k and exponents (t1, t2): coordinate k is
    gamma, the other two slots in index order are zeta^t1 * beta and
    zeta^t2 * beta.  There are 3n^2 such points; the gamma slot's
    normalization to exponent 0 uses up the projective scaling by
    n-th roots of unity.
    """

    n: int
    kind: PointClass
    position: int
    exponents: tuple

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("Fermat exponent n must be >= 3, got %r" % (self.n,))
        if self.position not in (0, 1, 2):
            raise ValueError("position must index one of 3 coordinates")
        want = 1 if self.kind is PointClass.TRIVIAL else 2
        if len(self.exponents) != want or any(
                not 0 <= e < self.n for e in self.exponents):
            raise ValueError("need %d exponent(s) reduced mod %d" % (want, self.n))

    def slots(self):
        """Expand to three (tag, zeta_exponent) slots; the zero slot is None."""
        others = [i for i in range(3) if i != self.position]
        out = [None, None, None]
        if self.kind is PointClass.TRIVIAL:
            out[self.position] = None
            out[others[0]] = ("one", self.exponents[0])
            out[others[1]] = ("one", 0)
        else:
            out[self.position] = ("gamma", 0)
            out[others[0]] = ("beta", self.exponents[0])
            out[others[1]] = ("beta", self.exponents[1])
        return out


def _from_slots(n, slots):
    """Renormalize a slot triple back to a canonical FermatPoint.

    Projective scaling by zeta is the only scaling that preserves the
    tag semantics; it shifts every exponent equally.  Trivial points
    renormalize the higher-indexed nonzero slot to exponent 0,
    Leopoldt points the gamma slot.
    """
    zero_pos = [i for i, s in enumerate(slots) if s is None]
    if zero_pos:
        (k,) = zero_pos
        others = [i for i in range(3) if i != k]
        tags = [slots[i][0] for i in others]
        assert tags == ["one", "one"], "trivial point slots must be pure roots of unity"
        shift = slots[others[1]][1]
        a = (slots[others[0]][1] - shift) % n
        return FermatPoint(n, PointClass.TRIVIAL, k, (a,))
    gamma_pos = [i for i, s in enumerate(slots) if s[0] == "gamma"]
    assert len(gamma_pos) == 1, "exactly one gamma coordinate expected"
    (k,) = gamma_pos
    others = [i for i in range(3) if i != k]
    assert all(slots[i][0] == "beta" for i in others)
    shift = slots[k][1]
    t = tuple((slots[i][1] - shift) % n for i in others)
    return FermatPoint(n, PointClass.LEOPOLDT, k, t)


@dataclass(frozen=True)
class FermatAutomorphism:
    """Element of (Z_n + Z_n) x| S_3 acting on the curve's coordinates.

    Acts as diag(zeta^u, zeta^v, 1) followed by the coordinate
    permutation sending slot i to slot perm[i].  The third twist
    component is normalized away: global zeta-scalars act trivially on
    projective points.
    """

    n: int
    twist: tuple
    perm: tuple

    def __post_init__(self):
        if sorted(self.perm) != [0, 1, 2]:
            raise ValueError("perm must be a permutation of (0,1,2)")
        if len(self.twist) != 2 or any(not 0 <= t < self.n for t in self.twist):
            raise ValueError("twist must be a pair of residues mod n")

    @classmethod
    def identity(cls, n):
        return cls(n, (0, 0), (0, 1, 2))

    def apply(self, point):
        assert point.n == self.n
        slots = point.slots()
        t3 = (self.twist[0], self.twist[1], 0)
        scaled = [None if s is None else (s[0], (s[1] + t3[i]) % self.n)
                  for i, s in enumerate(slots)]
        moved = [None, None, None]
        for i in range(3):
            moved[self.perm[i]] = scaled[i]
        image = _from_slots(self.n, moved)
        assert image.kind is point.kind, "the action must preserve the point class"
        return image

    def compose(self, other):
        """self after other, via the semidirect-product law.

        With phi = P_sigma D_t (t3 normalized to 0), conjugation gives
        P_sigma2 D_s P_sigma1 D_t = P_(sigma2 sigma1) D_(s o sigma1 + t),
        then the diagonal scalar is normalized away again.
        """
        assert self.n == other.n
        n = self.n
        s3 = (self.twist[0], self.twist[1], 0)
        t3 = (other.twist[0], other.twist[1], 0)
        combined = [(s3[other.perm[i]] + t3[i]) % n for i in range(3)]
        perm = tuple(self.perm[other.perm[i]] for i in range(3))
        u, v = (combined[0] - combined[2]) % n, (combined[1] - combined[2]) % n
        return FermatAutomorphism(n, (u, v), perm)


def generators(n):
    """Two independent twists, a transposition, and a 3-cycle.

    These generate the whole automorphism group: the twists span
    Z_n + Z_n and the permutations span S_3.
    """
    return (
        FermatAutomorphism(n, (1, 0), (0, 1, 2)),
        FermatAutomorphism(n, (0, 1), (0, 1, 2)),
        FermatAutomorphism(n, (0, 0), (1, 0, 2)),
        FermatAutomorphism(n, (0, 0), (1, 2, 0)),
    )


def automorphism_group_order(n):
    """|Aut F_n| = 6 n^2 for n >= 4 (n = 3 is the exceptional elliptic case)."""
    if n < 4:
        raise ValueError("the 6n^2 count holds for n >= 4, got %r" % (n,))
    return 6 * n * n


def fermat_genus(n):
    """(n-1)(n-2)/2.  n = 3 gives genus 1: no Weierstrass points there."""
    if n < 3:
        raise ValueError("Fermat exponent must be >= 3, got %r" % (n,))
    return (n - 1) * (n - 2) // 2


def trivial_point_weight(n):
    """Hasse: each trivial point has weight (n-1)(n-2)(n-3)(n+4)/24."""
    if n < 3:
        raise ValueError("Fermat exponent must be >= 3, got %r" % (n,))
    num = (n - 1) * (n - 2) * (n - 3) * (n + 4)
    assert num % 24 == 0, "Hasse weight must be an integer"
    return num // 24


def leopoldt_weight_bound(n):
    """Towse: per-point weight bound for the Leopoldt points.

    (n-1)(n-3)/8 for odd n, (n-2)(n-4)/8 for even n; returns
    (bound, is_exact) with exactness exactly for n <= 8.
    """
    if n < 5:
        raise ValueError("no Leopoldt points for n < 5 (got %r)" % (n,))
    num = (n - 1) * (n - 3) if n % 2 else (n - 2) * (n - 4)
    assert num % 8 == 0, "Towse bound must be an integer"
    return num // 8, n <= 8


def trivial_points(n):
    return [FermatPoint(n, PointClass.TRIVIAL, k, (a,))
            for k in range(3) for a in range(n)]


def leopoldt_points(n):
    if n < 5:
        raise ValueError("no Leopoldt points for n < 5 (got %r)" % (n,))
    return [FermatPoint(n, PointClass.LEOPOLDT, k, (t1, t2))
            for k in range(3) for t1 in range(n) for t2 in range(n)]


def orbit_enumerate(n, seed):
    """Size of the orbit of seed under the full automorphism group.

    Breadth-first closure under the generator set; the group itself is
    never materialized.  Trivial seeds need n >= 4 (genus >= 3),
    Leopoldt seeds n >= 5.
    """
    if seed.kind is PointClass.TRIVIAL and n < 4:
        raise ValueError("trivial-point orbits need n >= 4")
    if seed.kind is PointClass.LEOPOLDT and n < 5:
        raise ValueError("no Leopoldt points for n < 5")
    assert seed.n == n
    gens = generators(n)
    seen = {seed}
    queue = deque((seed,))
    while queue:
        point = queue.popleft()
        for gen in gens:
            image = gen.apply(point)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return len(seen)


@dataclass(frozen=True)
class AccountingReport:
    """Weight ledger: trivial + Leopoldt contributions against g^3 - g."""

    n: int
    genus: int
    total: int
    trivial_count: int
    trivial_weight: int
    trivial_subtotal: int
    leopoldt_count: int
    leopoldt_weight: int
    leopoldt_is_exact: bool
    leopoldt_subtotal: int
    residual: int
    conclusion: str

    def __post_init__(self):
        assert self.trivial_subtotal == self.trivial_count * self.trivial_weight
        assert self.leopoldt_subtotal == self.leopoldt_count * self.leopoldt_weight
        assert self.residual == self.total - self.trivial_subtotal - self.leopoldt_subtotal
        assert self.residual >= 0, (
            "located weight exceeds g^3 - g: the bounds are inconsistent")


def weight_accounting(n):
    """Account the total weight g^3 - g against the two known families.

    Residual 0 with exact weights locates every Weierstrass point;
    a positive residual with exact weights (6 <= n <= 8) proves further
    Weierstrass points exist.  For n >= 9 the Leopoldt weights are only
    lower bounds and the residual is only a cap on unlocated weight.
    """
    if n < 4:
        raise ValueError("accounting needs n >= 4 (F_3 has genus 1), got %r" % (n,))
    genus = fermat_genus(n)
    total = genus ** 3 - genus
    t_count, t_weight = 3 * n, trivial_point_weight(n)
    if n >= 5:
        l_count = 3 * n * n
        l_weight, exact = leopoldt_weight_bound(n)
    else:
        l_count, l_weight, exact = 0, 0, True
    residual = total - t_count * t_weight - l_count * l_weight
    if residual == 0 and exact:
        conclusion = "all Weierstrass points are located in the listed families"
    elif exact:
        conclusion = ("further Weierstrass points exist: exact weights leave "
                      "residual %d" % residual)
    else:
        conclusion = ("Leopoldt weights are lower bounds for n >= 9, so the "
                      "residual %d only caps the unlocated weight" % residual)
    return AccountingReport(
        n, genus, total, t_count, t_weight, t_count * t_weight,
        l_count, l_weight, exact, l_count * l_weight, residual, conclusion)


def fermat_transitivity(n):
    """Transitive exactly for n = 4.

    For n = 4 the 12 trivial points of weight 2 exhaust g^3 - g = 24
    and form one orbit.  For n >= 5 the trivial and Leopoldt families
    are disjoint orbits that both consist of Weierstrass points, so at
    least two orbits exist.
    """
    if n < 4:
        raise ValueError("F_%d has genus 1: no Weierstrass points" % n
                         if n == 3 else "need n >= 4, got %r" % (n,))
    report = weight_accounting(n)
    if n == 4:
        orbit = orbit_enumerate(4, trivial_points(4)[0])
        assert orbit == 12 and report.residual == 0
        return TransitivityVerdict(
            TransitivityStatus.TRANSITIVE, (1, 1), (
                "Hasse: the 12 trivial points each have weight 2, "
                "and 12 * 2 = 24 = g^3 - g",
                "the trivial points form a single orbit (closure size 12 = 3n)",
                "Leopoldt points exist only for n >= 5",
            ))
    reasons = [
        "the 3n = %d trivial points form one orbit with Hasse weight %d each"
        % (report.trivial_count, report.trivial_weight),
        "the 3n^2 = %d Leopoldt points form a disjoint orbit with weight %s %d each"
        % (report.leopoldt_count,
           "exactly" if report.leopoldt_is_exact else "at least",
           report.leopoldt_weight),
        "both families consist of Weierstrass points, so no single orbit exists",
        report.conclusion,
    ]
    if report.residual == 0 and report.leopoldt_is_exact:
        bounds = (2, 2)
    elif report.leopoldt_is_exact:
        # residual > 0 with exact weights proves unlocated points; each
        # extra orbit soaks up weight >= 1
        bounds = (3, 2 + report.residual)
    else:
        bounds = (2, 2 + report.residual)
    return TransitivityVerdict(
        TransitivityStatus.NOT_TRANSITIVE, bounds, tuple(reasons))
