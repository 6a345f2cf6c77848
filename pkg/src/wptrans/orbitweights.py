"""Orbit sizes, the weight equation, and transitivity classification.

For a group G acting on a surface through a regular map, the candidate
orbits of Weierstrass points are the geometric-point orbits (stabilizer
orders given by the map periods) plus one free orbit.  Writing sigma_j
for the orbit sizes and w_j for the unknown per-point weights in each
orbit, the total-weight identity becomes the linear equation

    sum_j sigma_j * w_j = g^3 - g

over nonnegative integers.  (Older accounts sometimes write sigma for
the unknowns as well; here coefficients are always the orbit sizes and
the unknowns are always the weights.)  Published solution lists for
this equation say "positive integers" but contain zeros; the solver
enumerates nonnegative vectors, which is what the data means.

This module also carries the necessary-condition arithmetic
w = |G_p| (g^3 - g) / |G| and the simple-point elimination chain.
"""

import enum
from dataclasses import dataclass

from .surfacecore import total_weight

__all__ = [
    "OrbitProfile",
    "WeightEquationSolutionSet",
    "TransitivityStatus",
    "TransitivityVerdict",
    "orbit_profile",
    "solve_weight_equation",
    "classify",
    "necessary_weight",
    "hurwitz_divisibility",
    "simple_point_analysis",
    "SimplePointOutcome",
    "DEFAULT_MAX_GROUP_ORDER",
]


class TransitivityStatus(enum.Enum):
    TRANSITIVE = "Transitive"
    NOT_TRANSITIVE = "NotTransitive"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class TransitivityVerdict:
    """Classification result with the facts that justify it.

    orbit_count_range is the (min, max) number of Weierstrass point
    orbits consistent with the evidence.  reasons are human-readable
    strings, each naming the theorem it leans on.  guaranteed_orbits
    lists 0-based coordinate indices that are nonzero in every
    surviving solution, i.e. orbits certain to consist of Weierstrass
    points.
    """

    status: TransitivityStatus
    orbit_count_range: tuple
    reasons: tuple
    guaranteed_orbits: tuple = ()

    def __post_init__(self):
        lo, hi = self.orbit_count_range
        assert lo <= hi, "empty orbit count range"
        if self.status is TransitivityStatus.TRANSITIVE:
            assert self.orbit_count_range == (1, 1), "transitive means exactly one orbit"


@dataclass(frozen=True)
class OrbitProfile:
    """Orbit sizes |G|/stabilizer for the geometric points, plus the free orbit.

    stabilizer_orders is sorted descending and always ends with 1 (the
    free orbit), mirroring the usual presentation: the smallest orbit
    first, the free orbit last.
    """

    group_order: int
    stabilizer_orders: tuple
    orbit_sizes: tuple

    def __post_init__(self):
        assert self.stabilizer_orders[-1] == 1, "free orbit must be last"
        for size in self.orbit_sizes:
            assert self.group_order % size == 0, "orbit size must divide the group order"


def orbit_profile(group_order, periods):
    """Profile for a map action: one orbit per period plus the free orbit.

    For the Klein action of order 168 with periods (2,3,7) the sizes
    are (24, 56, 84, 168): 168/7 vertices-or-faces first, the free
    orbit of size 168 last.
    """
    if group_order < 1:
        raise ValueError("group order must be positive")
    stabs = sorted(periods, reverse=True)
    for m in stabs:
        if m < 2 or group_order % m != 0:
            raise ValueError("period %r does not divide the group order %d" % (m, group_order))
    stabs.append(1)
    sizes = tuple(group_order // m for m in stabs)
    return OrbitProfile(group_order, tuple(stabs), sizes)


@dataclass(frozen=True)
class WeightEquationSolutionSet:
    """All nonnegative solutions of sum(c_j w_j) = target, lex sorted."""

    coefficients: tuple
    target: int
    solutions: tuple

    def __post_init__(self):
        for v in self.solutions:
            assert sum(c * w for c, w in zip(self.coefficients, v)) == self.target, (
                "solution %r fails its own equation" % (v,)
            )
        assert list(self.solutions) == sorted(self.solutions), "solutions must be lex sorted"


def solve_weight_equation(coefficients, target):
    """Exhaustively enumerate nonnegative integer solutions of sum c_j w_j = target.

    Plain bounded depth-first search: coordinate j ranges over
    0..remaining/c_j.  Enumeration order is lexicographic by
    construction.  Every solution is re-verified exactly before the set
    is returned; an empty set is a valid answer.
    """
    coeffs = tuple(coefficients)
    if not coeffs or any(c < 1 for c in coeffs):
        raise ValueError("coefficients must be positive integers")
    if target < 0:
        raise ValueError("target must be nonnegative")

    solutions = []
    prefix = [0] * len(coeffs)

    def extend(j, remaining):
        if j == len(coeffs) - 1:
            w, r = divmod(remaining, coeffs[j])
            if r == 0:
                prefix[j] = w
                solutions.append(tuple(prefix))
            return
        c = coeffs[j]
        for w in range(remaining // c + 1):
            prefix[j] = w
            extend(j + 1, remaining - c * w)
        prefix[j] = 0

    extend(0, target)
    return WeightEquationSolutionSet(coeffs, target, tuple(solutions))


def classify(sol_set, zero_indices=(), profile=None):
    """Transitivity verdict from a weight-equation solution set.

    zero_indices force coordinates to zero before classification; this
    is how external vanishing facts (for instance Streit's result that
    vertex and face-centre weights vanish on the genus-14 Hurwitz
    surfaces) are injected without hard-coding conclusions.  An empty
    set after masking means the constraints are inconsistent.

    Verdicts:
      - every surviving solution concentrated on one and the same
        coordinate, with one surviving weight: Transitive;
      - every surviving solution spread over >= 2 coordinates:
        NotTransitive (at least two orbits however the weights fall);
      - otherwise Undecided, with orbit_count_range spanning the
        number of nonzero coordinates over surviving solutions.

    A coordinate nonzero in every surviving solution is reported in
    guaranteed_orbits: that orbit consists of Weierstrass points in
    every consistent scenario.
    """
    if not sol_set.solutions:
        raise ValueError("cannot classify an empty solution set")
    mask = tuple(sorted(set(zero_indices)))
    for i in mask:
        if not 0 <= i < len(sol_set.coefficients):
            raise ValueError("mask index %d out of range" % i)
    survivors = [v for v in sol_set.solutions if all(v[i] == 0 for i in mask)]
    if not survivors:
        raise ValueError("inconsistent constraints: no solutions survive the mask")

    reasons = []
    if mask:
        reasons.append(
            "mask forces w%s = 0; %d of %d solutions survive"
            % (",w".join(str(i + 1) for i in mask), len(survivors), len(sol_set.solutions))
        )

    supports = [tuple(j for j, w in enumerate(v) if w != 0) for v in survivors]
    counts = [len(s) for s in supports]
    guaranteed = tuple(
        j for j in range(len(sol_set.coefficients))
        if all(v[j] != 0 for v in survivors)
    )
    for j in guaranteed:
        reasons.append(
            "coordinate w%d is nonzero in every surviving solution: "
            "that orbit is certainly made of Weierstrass points" % (j + 1)
        )

    if min(counts) == 1 and max(counts) == 1 and len({s[0] for s in supports}) == 1:
        j = supports[0][0]
        weights = sorted({v[j] for v in survivors})
        if profile is not None and profile.stabilizer_orders[j] == 1:
            reasons.append(
                "the single surviving orbit is the free orbit (trivial stabilizer)"
            )
        if len(weights) == 1:
            reasons.append(
                "unique solution concentrates all weight on orbit %d with weight %d: "
                "the action is transitive on the Weierstrass points" % (j + 1, weights[0])
            )
            return TransitivityVerdict(
                TransitivityStatus.TRANSITIVE, (1, 1), tuple(reasons), guaranteed
            )
        reasons.append(
            "one orbit in every scenario but its weight is not determined "
            "(candidates %s)" % (weights,)
        )
        return TransitivityVerdict(
            TransitivityStatus.UNDECIDED, (1, 1), tuple(reasons), guaranteed
        )
    if min(counts) >= 2:
        reasons.append(
            "every surviving solution involves at least %d orbits: not transitive"
            % min(counts)
        )
        return TransitivityVerdict(
            TransitivityStatus.NOT_TRANSITIVE,
            (min(counts), max(counts)),
            tuple(reasons),
            guaranteed,
        )
    reasons.append(
        "surviving solutions allow between %d and %d orbits: undecided"
        % (min(counts), max(counts))
    )
    return TransitivityVerdict(
        TransitivityStatus.UNDECIDED, (min(counts), max(counts)), tuple(reasons), guaranteed
    )


def necessary_weight(group_order, stabilizer_order, g):
    """Common weight w = |G_p| (g^3 - g) / |G| forced by a transitive action.

    Returns the exact integer when the division is exact, else None:
    transitivity with that stabilizer order is impossible because the
    forced weight would not be an integer.
    """
    if group_order < 1 or stabilizer_order < 1:
        raise ValueError("orders must be positive")
    numerator = stabilizer_order * total_weight(_at_least(g, 2))
    if numerator % group_order != 0:
        return None
    return numerator // group_order


def _at_least(g, minimum):
    if g < minimum:
        raise ValueError("genus must be >= %d, got %r" % (minimum, g))
    return g


def hurwitz_divisibility(g):
    """Admissible stabilizer orders for a transitive Hurwitz action.

    A Hurwitz group has order 84(g-1) and stabilizer orders among
    {2, 3, 7}; the forced weight m*(g^3-g)/(84(g-1)) = m*g(g+1)/84 is
    integral exactly when 42, 28 or 12 divides g(g+1) respectively.
    An empty set rules transitivity out; a nonempty set is merely
    inconclusive.
    """
    _at_least(g, 2)
    return {m for m in (7, 3, 2) if (m * g * (g + 1)) % 84 == 0}


DEFAULT_MAX_GROUP_ORDER = {2: 48, 3: 168, 4: 120, 5: 192, 6: 150, 7: 504, 8: 336}
"""M(g), the largest automorphism group order in genus g, for g = 2..8.

Values for g = 6, 7, 8 are the regular-map census values (150, 504,
336); the rest are the classical ones.  Surfaces with more than
24(g-1) automorphisms carry regular maps, which is why the census is
the right place to read M(g) from.
"""


@dataclass(frozen=True)
class SimplePointOutcome:
    genus: int
    survives: bool
    label: str
    reason: str


def simple_point_analysis(M_table=None):
    """Elimination chain for surfaces whose Weierstrass points are all simple.

    If all g^3 - g Weierstrass points have weight 1 and the action is
    transitive, then g^3 - g = |W| <= |G| <= 84(g-1) (Hurwitz), so
    g <= 8; and |W| <= M(g).  Genus 2 falls below the hypothesis (every
    genus-2 surface is hyperelliptic, weights there are not simple
    under a transitive action of this kind).  The survivors, by the
    regular-map case analysis, are Klein's surface (g=3), a possible
    free S4 action in genus 3, and Bring's surface (g=4).
    """
    table = dict(DEFAULT_MAX_GROUP_ORDER if M_table is None else M_table)
    for g in range(2, 9):
        if g not in table:
            raise ValueError("M(%d) missing from the group order table" % g)

    outcomes = []
    for g in range(2, 9):
        wcount = total_weight(g)
        if g == 2:
            outcomes.append(SimplePointOutcome(
                2, False, "excluded",
                "below the theorem hypothesis g > 2 (genus 2 is hyperelliptic)"))
            continue
        if wcount > 84 * (g - 1):
            outcomes.append(SimplePointOutcome(
                g, False, "excluded",
                "%d = g^3-g exceeds the Hurwitz bound %d" % (wcount, 84 * (g - 1))))
            continue
        if wcount > table[g]:
            outcomes.append(SimplePointOutcome(
                g, False, "excluded",
                "%d = g^3-g exceeds M(%d) = %d" % (wcount, g, table[g])))
            continue
        if g == 7:
            outcomes.append(SimplePointOutcome(
                7, False, "excluded",
                "the order-504 surface has Weierstrass points of weight 2 "
                "(not simple), and the next order 288 < 336 = 7^3-7"))
            continue
        if g == 5:
            outcomes.append(SimplePointOutcome(
                5, False, "excluded",
                "the unique candidate is the order-120 map of type {3,10}, "
                "whose Weierstrass points have weight 10"))
            continue
        if g == 4:
            outcomes.append(SimplePointOutcome(
                4, True, "Bring",
                "orders 120 (map type {4,5}) or 60 realize the action; the 60 "
                "edge-centres of Bring's surface are simple Weierstrass points"))
            continue
        if g == 3:
            outcomes.append(SimplePointOutcome(
                3, True, "Klein",
                "the regular-map case forces order 168 and map type {3,7}: "
                "Klein's surface"))
            outcomes.append(SimplePointOutcome(
                3, True, "S4-free-action-possible",
                "a non-map alternative: |G| = 24, G = S4, lifting to signature "
                "(0; 2,2,2,3), acting freely on the Weierstrass points; it is "
                "open whether this occurs"))
            continue
        # reachable only with a nonstandard M table (the defaults exclude
        # g = 6 and 8 here); never drop a genus silently
        outcomes.append(SimplePointOutcome(
            g, True, "unresolved",
            "no obstruction recorded: g^3-g = %d fits under M(%d) = %d"
            % (wcount, g, table[g])))
    return outcomes
