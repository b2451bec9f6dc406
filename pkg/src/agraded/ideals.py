"""A-graded monomial ideals: tests, flips, coherence, enumeration.

A monomial ideal is A-graded when its quotient has exactly one standard
monomial in every degree of the column monoid and none elsewhere.  The
certificate used throughout is exact K-polynomial equality against a fixed
initial ideal of the toric ideal; both series share the same denominator,
so numerator equality is Hilbert-function equality.

Flips are the local moves of the flip graph: a minimal generator x^a trades
places with the unique standard monomial x^b of its degree when both
markings of the wall ideal reproduce the expected sides.  Every flip label
is automatically a Graver pair: a conformal decomposition of (a, b) would
contradict either the minimality of x^a or the standardness of x^b.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .binomials import (
    Binomial,
    canonical_pair,
    initial_ideal,
    toric_ideal,
    wall_initial,
    wall_recovers_source,
)
from .grading import positive_combination
from .graver import graver_basis
from .lp import lp_strict_feasible
from .monomials import (
    MonomialIdeal,
    divides,
    exp_sub,
    fiber,
    k_polynomial,
    minimalize,
)


class FlipError(Exception):
    pass


class NotApplicable(FlipError):
    """Neither orientation pairs a minimal generator with an outside monomial."""


class NotFlippable(FlipError):
    """The wall ideal does not reproduce the source under the reverse marking."""


class GuardExceeded(RuntimeError):
    pass


class IncompleteInput(ValueError):
    pass


class BadLength(ValueError):
    pass


@dataclass(frozen=True)
class FlipMove:
    source: MonomialIdeal
    a: tuple  # minimal generator of source
    b: tuple  # the standard monomial it trades with
    target: MonomialIdeal

    @property
    def label(self):
        return canonical_pair(self.a, self.b)


class AGradedContext:
    """Shared caches for one grading matrix.

    Everything heavy (toric ideal, Graver basis, reference numerator,
    degree fibers, K-polynomials) is computed once on demand and reused;
    all cached values are immutable.
    """

    def __init__(self, matrix, reference_weight=None):
        self.A = matrix
        self.reference_weight = (
            tuple(reference_weight) if reference_weight is not None
            else matrix.certificate_weights
        )
        self._fibers = {}
        self._kpoly_memo = {}
        self._kpoly = {}
        self._agraded = {}
        self._standard = {}

    @cached_property
    def graver(self):
        return graver_basis(self.A)

    @cached_property
    def reference_ideal(self):
        return initial_ideal(self.A, self.reference_weight)

    @cached_property
    def reference_numerator(self):
        return self.k_polynomial(self.reference_ideal)

    def fiber(self, b):
        b = tuple(b)
        got = self._fibers.get(b)
        if got is None:
            got = self._fibers[b] = fiber(self.A, b)
        return got

    def k_polynomial(self, ideal):
        got = self._kpoly.get(ideal)
        if got is None:
            got = self._kpoly[ideal] = k_polynomial(ideal, self.A, memo=self._kpoly_memo)
        return got

    def standard_monomial(self, ideal, b):
        """The unique monomial of degree b outside an A-graded ideal.

        Backtracks over exponents in lexicographic order, pruning as soon
        as the partial exponent is divisible by a generator whose support
        is already fully decided.
        """
        b = tuple(b)
        key = (ideal, b)
        cached = self._standard.get(key)
        if cached is not None:
            return cached
        n = self.A.n
        weights = self.A.certificate_weights
        budget = positive_combination(self.A, b)
        if budget < 0:
            raise ValueError(f"degree {b} is outside the monoid")
        cols = self.A.columns
        nonneg = self.A.nonnegative
        buckets = [[] for _ in range(n)]
        for g in ideal.gens:
            top = max((i for i, e in enumerate(g) if e), default=0)
            buckets[top].append(g)
        u = [0] * n

        def rec(j, residual, budget):
            if j == n:
                return all(x == 0 for x in residual)
            if nonneg and any(x < 0 for x in residual):
                return False
            col = cols[j]
            for k in range(budget // weights[j] + 1):
                u[j] = k
                if any(divides(g, u) for g in buckets[j]):
                    break  # larger k stays divisible
                if rec(j + 1, tuple(r - k * c for r, c in zip(residual, col)),
                       budget - k * weights[j]):
                    return True
            u[j] = 0
            return False

        if not rec(0, b, budget):
            raise ValueError(f"no standard monomial in degree {b}")
        found = tuple(u)
        self._standard[key] = found
        return found


def is_agraded(ideal, ctx):
    """Exact K-polynomial equality with the toric reference."""
    got = ctx._agraded.get(ideal)
    if got is None:
        got = ctx._agraded[ideal] = (
            ctx.k_polynomial(ideal) == ctx.reference_numerator
        )
    return got


def is_weakly_agraded(ideal, ctx):
    """Whether every Graver pair has at least one side in the ideal."""
    return all(
        ideal.contains(u) or ideal.contains(v) for u, v in ctx.graver
    )


def definition_flip_ideal(ideal, a, b, graver):
    """Flip target built directly from the Graver basis.

    Generated by x^b and every Graver-pair side other than x^a that lies in
    the ideal while its partner does not.  Used as an independent
    cross-check of the wall-ideal route.
    """
    a, b = tuple(a), tuple(b)
    gens = [b]
    for u, v in graver:
        for side, partner in ((u, v), (v, u)):
            if side != a and ideal.contains(side) and not ideal.contains(partner):
                gens.append(side)
    return minimalize(gens)


def flip(ideal, pair, ctx, validate=False):
    """Flip an ideal over a Graver pair, or raise.

    The pair is oriented so that one side is a minimal generator and the
    other lies outside (NotApplicable otherwise).  The move is accepted iff
    re-marking the wall ideal toward the generator side reproduces the
    ideal, in which case the opposite marking is the A-graded target.
    """
    if isinstance(pair, Binomial):
        u, v = pair.lead, pair.trail
    else:
        u, v = (tuple(x) for x in pair)
    if u in ideal.gens and not ideal.contains(v):
        a, b = u, v
    elif v in ideal.gens and not ideal.contains(u):
        a, b = v, u
    else:
        raise NotApplicable(f"{u} / {v} does not match a generator/standard split")
    if ctx.A.degree(a) != ctx.A.degree(b):
        raise ValueError("pair is not homogeneous")
    if not wall_recovers_source(ideal, a, b):
        raise NotFlippable(f"wall of {a} - {b} does not re-mark to the source")
    target = wall_initial(ideal, a, b, "b_leads")
    if validate:
        direct = definition_flip_ideal(ideal, a, b, ctx.graver)
        assert direct == target, (ideal, a, b, direct, target)
    return FlipMove(ideal, a, b, target)


def neighbors(ideal, ctx, validate=False):
    """All flips out of an A-graded monomial ideal, in generator order.

    Candidates pair each minimal generator with the unique standard
    monomial of its degree; no other Graver pair can satisfy the flip
    preconditions, and each candidate is itself a Graver pair.
    """
    moves = []
    for a in ideal.gens:
        b = ctx.standard_monomial(ideal, ctx.A.degree(a))
        try:
            moves.append(flip(ideal, (a, b), ctx, validate=validate))
        except NotFlippable:
            continue
    return tuple(moves)


def is_coherent(ideal, ctx):
    """Initial-ideal test by exact LP.  Returns (flag, witness-or-None).

    A monomial A-graded ideal is an initial ideal of the toric ideal iff
    some w satisfies w.(g - std(deg g)) >= 1 over its minimal generators:
    the candidate reduced basis pairing each generator with the standard
    monomial of its degree is marked consistently by such a w, which makes
    the ideal contain, hence equal, the corresponding initial ideal.  Any
    witness also splits every Graver pair toward its ideal side.
    """
    rows = []
    for g in ideal.gens:
        std = ctx.standard_monomial(ideal, ctx.A.degree(g))
        rows.append(exp_sub(g, std))
    witness = lp_strict_feasible(sorted(set(rows)), nvars=ctx.A.n)
    return (witness is not None), witness


def graver_split_rows(ideal, ctx):
    """The full marking system w.(u - v) >= 1 over split Graver pairs.

    One row per Graver pair with exactly one side in the ideal, oriented
    toward the ideal side; feasibility of this larger system is equivalent
    to the minimal-generator system used by is_coherent.
    """
    rows = []
    for u, v in ctx.graver:
        in_u = ideal.contains(u)
        in_v = ideal.contains(v)
        if in_u and not in_v:
            rows.append(exp_sub(u, v))
        elif in_v and not in_u:
            rows.append(exp_sub(v, u))
    return sorted(set(rows))


def special_ideals(ctx, all_ideals, expected_count=None):
    """The intersection of all monomial A-graded ideals and the pair ideal.

    ``all_ideals`` must be the complete enumeration; when
    ``expected_count`` is given a mismatch raises IncompleteInput.  Returns
    (intersection, pair_ideal); the pair ideal, generated by the products
    of the two sides of each Graver pair, is always contained in the
    intersection.
    """
    all_ideals = sorted(set(all_ideals))
    if expected_count is not None and len(all_ideals) != expected_count:
        raise IncompleteInput(
            f"got {len(all_ideals)} ideals, expected {expected_count}"
        )
    if not all_ideals:
        raise IncompleteInput("empty enumeration")
    meet = all_ideals[0]
    for ideal in all_ideals[1:]:
        meet = meet.intersect(ideal)
    pair_ideal = minimalize(
        tuple(x + y for x, y in zip(u, v)) for u, v in ctx.graver
    )
    assert all(meet.contains(g) for g in pair_ideal.gens)
    return meet, pair_ideal


def brute_force_enumerate(ctx, guard=None):
    """All monomial A-graded ideals by side choices over the Graver basis.

    Depth-first over the pairs in increasing degree: each pair must have a
    side inside the ideal, so branch on which one, recording the rejected
    side as permanently standard.  Choices implied by divisibility are
    forced, two standard monomials of equal degree prune the branch, and
    every leaf is filtered by the exact A-gradedness certificate.  ``guard``
    bounds the number of leaves visited.
    """
    pairs = sorted(
        ctx.graver,
        key=lambda p: (positive_combination(ctx.A, ctx.A.degree(p[0])), p),
    )
    degrees = [ctx.A.degree(u) for u, _ in pairs]
    small_degrees = sorted(set(degrees),
                           key=lambda b: positive_combination(ctx.A, b))[:6]

    def add_gen(chosen, g):
        # keep the chosen set minimal; the span is unchanged
        return tuple(c for c in chosen if not divides(g, c)) + (g,)

    leaves = 0
    candidates = set()
    # frames: (pair index, chosen gens, forbidden monomials, forbidden degrees)
    stack = [(0, (), (), frozenset())]
    while stack:
        idx, chosen, forbidden, fdegs = stack.pop()
        while idx < len(pairs):
            u, v = pairs[idx]
            u_in = any(divides(g, u) for g in chosen)
            v_in = any(divides(g, v) for g in chosen)
            if u_in or v_in:
                idx += 1
                continue
            u_out = any(divides(u, f) for f in forbidden)
            v_out = any(divides(v, f) for f in forbidden)
            if u_out and v_out:
                idx = None
                break
            if u_out:
                chosen = add_gen(chosen, v)
            elif v_out:
                chosen = add_gen(chosen, u)
            else:
                # branch: u in the ideal, or u standard and v forced in
                if degrees[idx] not in fdegs:
                    stack.append(
                        (idx + 1, add_gen(chosen, v), forbidden + (u,),
                         fdegs | {degrees[idx]})
                    )
                chosen = add_gen(chosen, u)
            idx += 1
        if idx is None:
            continue
        leaves += 1
        if guard is not None and leaves > guard:
            raise GuardExceeded(f"more than {guard} leaves")
        candidates.add(minimalize(chosen))

    def plausible(ideal):
        for b in small_degrees:
            standard = sum(1 for m in ctx.fiber(b) if not ideal.contains(m))
            if standard != 1:
                return False
        return True

    result = [
        ideal for ideal in sorted(candidates)
        if plausible(ideal) and is_agraded(ideal, ctx)
    ]
    return tuple(result)


# -- the two-by-five curve family ---------------------------------------------

def curve_rows(j):
    """Two-by-five matrix whose toric variety is a monomial curve in P^4."""
    if j < 1:
        raise BadLength("family index must be >= 1")
    return [[1, 1, 1, 1, 1], [0, 1, 3 + 3 * j, 4 + 3 * j, 6 + 3 * j]]


def curve_monomial_ideal(j):
    """The distinguished initial ideal of the family, j flips above minimum."""
    gens = (
        [(0, 0, 2, 0, 1), (0, 1, 1, 0, 0), (2, 0, 0, 0, 1),
         (1, 0, 1, 0, 1), (1, 0, 0, 0, j + 2)]
        + [(0, 1, 0, 0, j + 1), (2, 0, j + 1, 0, 0),
           (0, 4, 0, 0, j), (0, 0, j + 2, 0, 0)]
        + [(5 + 3 * t, 0, j - t, 0, 0) for t in range(j)]
        + [(0, 7 + 3 * t, 0, 0, j - 1 - t) for t in range(j)]
    )
    return minimalize(gens)


def curve_binomial_families(j):
    """The four binomial families attached to the curve ideal.

    Returned as a dict with keys "p", "q", "r", "s"; the "q", "r" and "s"
    binomials are exactly the flips of the distinguished initial ideal,
    while the "p" ones are not flippable.
    """
    p = [
        Binomial((0, 0, 2, 0, 1), (0, 0, 0, 3, 0)),
        Binomial((0, 1, 1, 0, 0), (1, 0, 0, 1, 0)),
        Binomial((2, 0, 0, 0, 1), (0, 2, 0, 1, 0)),
        Binomial((1, 0, 1, 0, 1), (0, 1, 0, 2, 0)),
        Binomial((1, 0, 0, 0, j + 2), (0, 0, j, 3, 0)),
    ]
    q = [
        Binomial((0, 1, 0, 0, j + 1), (0, 0, j + 1, 1, 0)),
        Binomial((2, 0, j + 1, 0, 0), (0, 3, 0, 0, j)),
        Binomial((0, 4, 0, 0, j), (3, 0, j, 1, 0)),
        Binomial((0, 0, j + 2, 0, 0), (1, 0, 0, 0, j + 1)),
    ]
    r = [
        Binomial((5 + 3 * t, 0, j - t, 0, 0), (0, 6 + 3 * t, 0, 0, j - 1 - t))
        for t in range(j)
    ]
    s = [
        Binomial((0, 7 + 3 * t, 0, 0, j - 1 - t), (6 + 3 * t, 0, j - 1 - t, 1, 0))
        for t in range(j)
    ]
    return {"p": p, "q": q, "r": r, "s": s}


def curve_parametric_family(j, coefficients):
    """Mixed generators with scalar coefficients on the high-degree strand.

    ``coefficients`` holds j rationals; zero entries degenerate the
    corresponding binomials to monomials.  For every choice the generators
    are a Groebner basis under the weight (1, 1, 2, 0, 2) with initial
    ideal curve_monomial_ideal(j).
    """
    coefficients = [Fraction(c) for c in coefficients]
    if len(coefficients) != j:
        raise BadLength(f"need exactly {j} coefficients")
    fams = curve_binomial_families(j)
    gens = [b.lead for b in fams["p"]] + [b.lead for b in fams["q"]]
    for t, mu in enumerate(coefficients):
        lead = (5 + 3 * t, 0, j - t, 0, 0)
        trail = (0, 6 + 3 * t, 0, 0, j - 1 - t)
        gens.append(lead if mu == 0 else Binomial(lead, trail, mu))
    gens += [b.lead for b in fams["s"]]
    return gens
