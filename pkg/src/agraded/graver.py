"""Graver bases via the Lawrence construction, with a brute-force oracle.

A Graver element is an unordered pair {u, v} of disjointly supported
exponent vectors with A.u = A.v such that no other kernel pair sits
conformally below it.  The production route doubles the matrix into its
Lawrence lifting, where every reduced Groebner basis of the toric ideal
coincides with the Graver basis, and projects back.  The oracle enumerates
kernel pairs degree by degree and filters conformal minimality directly;
it is complete up to its weight bound and validates the production route.
"""

from dataclasses import dataclass
from functools import lru_cache

from .grading import GradingMatrix, positive_combination
from .linalg import rank
from .monomials import TermOrder, support
from .binomials import Binomial, buchberger, canonical_pair, toric_ideal


@dataclass(frozen=True)
class GraverBasis:
    """Canonically ordered unordered pairs, larger side first."""

    elements: tuple

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, pair):
        u, v = pair
        return canonical_pair(u, v) in set(self.elements)

    def by_degree(self, matrix):
        index = {}
        for u, v in self.elements:
            index.setdefault(matrix.degree(u), []).append((u, v))
        return index


def lawrence_lifting(matrix):
    """The (d+n) x 2n block matrix [[A, 0], [I, I]] as a GradingMatrix."""
    d, n = matrix.d, matrix.n
    rows = [tuple(row) + (0,) * n for row in matrix.rows]
    for i in range(n):
        unit = tuple(1 if j == i else 0 for j in range(n))
        rows.append(unit + unit)
    cert = (0,) * d + (1,) * n  # pairs to 1 on every column
    lifted = GradingMatrix(tuple(rows), cert)
    assert all(w == 1 for w in lifted.certificate_weights)
    assert rank(rows) == d + n
    return lifted


@lru_cache(maxsize=None)
def graver_basis(matrix):
    """Complete Graver basis through the Lawrence lifting."""
    lifted = lawrence_lifting(matrix)
    n = matrix.n
    order = TermOrder((0,) * (2 * n))  # pure lexicographic
    gb = buchberger(toric_ideal(lifted), order, lifted)
    assert gb.monomials.is_zero()
    pairs = set()
    for b in gb.binomials:
        u, ytail = b.lead[:n], b.lead[n:]
        v, yhead = b.trail[:n], b.trail[n:]
        assert ytail == v and yhead == u, "Lawrence element is not a mirror pair"
        pairs.add(canonical_pair(u, v))
    return GraverBasis(tuple(sorted(pairs)))


def graver_oracle(matrix, bound):
    """All Graver elements of certificate weight at most ``bound``.

    Enumerates every monomial of weight <= bound, pairs same-degree
    monomials, and keeps the conformally minimal pairs.  Because conformal
    comparison never increases the weight, the result equals the weight
    filter of the full Graver basis; it is the whole basis whenever bound
    dominates the largest Graver weight.
    """
    if bound <= 0:
        raise ValueError("bound must be positive")
    n = matrix.n
    weights = matrix.certificate_weights
    by_degree = {}
    u = [0] * n

    def enumerate_monomials(j, budget):
        if j == n:
            mono = tuple(u)
            by_degree.setdefault(matrix.degree(mono), []).append(mono)
            return
        for k in range(budget // weights[j] + 1):
            u[j] = k
            enumerate_monomials(j + 1, budget - k * weights[j])
        u[j] = 0

    enumerate_monomials(0, bound)

    candidates = set()
    for degree, monos in by_degree.items():
        if len(monos) < 2:
            continue
        for i in range(len(monos)):
            for j in range(i + 1, len(monos)):
                a, b = monos[i], monos[j]
                if all(x == 0 or y == 0 for x, y in zip(a, b)):
                    candidates.add(canonical_pair(a, b))

    def weight_of(pair):
        return positive_combination(matrix, matrix.degree(pair[0]))

    minimal = []
    for pair in sorted(candidates, key=lambda p: (weight_of(p), p)):
        u1, v1 = pair
        reducible = False
        for u0, v0 in minimal:
            if (all(x <= y for x, y in zip(u0, u1)) and all(x <= y for x, y in zip(v0, v1))) or (
                all(x <= y for x, y in zip(v0, u1)) and all(x <= y for x, y in zip(u0, v1))
            ):
                reducible = True
                break
        if not reducible:
            minimal.append(pair)
    return GraverBasis(tuple(sorted(minimal)))


@dataclass(frozen=True)
class Circuit:
    """Primitive kernel vector with minimally dependent support."""

    t: tuple
    t_plus: tuple
    t_minus: tuple


def is_circuit(matrix, pair):
    """Circuit certificate for a kernel pair, or None.

    The support columns must be dependent with every proper subset
    independent, and the difference vector primitive.
    """
    if isinstance(pair, Binomial):
        u, v = pair.lead, pair.trail
    else:
        u, v = pair
    t = tuple(a - b for a, b in zip(u, v))
    assert matrix.degree(u) == matrix.degree(v)
    supp = support(t)
    if not supp:
        return None
    cols = matrix.columns
    sub = [cols[i] for i in supp]  # rank is transpose-invariant
    if rank(sub) != len(supp) - 1:
        return None
    for leave_out in range(len(supp)):
        subset = [sub[i] for i in range(len(sub)) if i != leave_out]
        if subset and rank(subset) != len(subset):
            return None
    g = 0
    for x in t:
        g = _gcd(g, abs(x))
    if g != 1:
        return None
    return Circuit(
        t,
        tuple(i for i in supp if t[i] > 0),
        tuple(i for i in supp if t[i] < 0),
    )


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
