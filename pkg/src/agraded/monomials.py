"""Monomials as exponent vectors, term orders, monomial ideals, K-polynomials.

Monomials are plain integer tuples (the exponent of x^u).  Monomial ideals
are kept in canonical form: the tuple of minimal generators, sorted, so two
ideals are equal iff their representations are identical.  The K-polynomial
of an ideal is the numerator of the multigraded Hilbert series of the
quotient over the common denominator prod_i (1 - t^{deg x_i}); equality of
K-polynomials is therefore equality of Hilbert functions.
"""

from dataclasses import dataclass

from .grading import positive_combination
from .linalg import dot


# -- exponent vector helpers -------------------------------------------------

def divides(g, u):
    return all(a <= b for a, b in zip(g, u))

def exp_lcm(u, v):
    return tuple(max(a, b) for a, b in zip(u, v))

def exp_add(u, v):
    return tuple(a + b for a, b in zip(u, v))

def exp_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))

def exp_min(u, v):
    return tuple(min(a, b) for a, b in zip(u, v))

def support(u):
    return tuple(i for i, a in enumerate(u) if a)

def support_exp(u):
    return tuple(1 if a else 0 for a in u)

def coprime(u, v):
    return all(a == 0 or b == 0 for a, b in zip(u, v))


@dataclass(frozen=True)
class TermOrder:
    """Weight vector refined by lexicographic tie-break.

    Comparison is total on monomials of equal degree for any grading; the
    weight may have negative entries.  The tie-break priority is a variable
    permutation, by default x1 > x2 > ... > xn.
    """

    weight: tuple
    priority: tuple = None

    def compare(self, u, v):
        """-1, 0 or 1 as u is smaller, equal or larger than v."""
        if u == v:
            return 0
        wu = dot(self.weight, u)
        wv = dot(self.weight, v)
        if wu != wv:
            return 1 if wu > wv else -1
        order = self.priority if self.priority is not None else range(len(u))
        for i in order:
            if u[i] != v[i]:
                return 1 if u[i] > v[i] else -1
        return 0

    def max(self, terms):
        best = None
        for t in terms:
            if best is None or self.compare(t, best) > 0:
                best = t
        return best


def cheapest_variable_order(n, i):
    """Order making x_i as cheap as possible: weight -e_i, lex tie-break."""
    return TermOrder(tuple(-1 if j == i else 0 for j in range(n)))


# -- monomial ideals ---------------------------------------------------------

@dataclass(frozen=True, order=True)
class MonomialIdeal:
    """Canonical monomial ideal: sorted minimal generators."""

    gens: tuple

    def contains(self, u):
        return any(divides(g, u) for g in self.gens)

    def is_zero(self):
        return not self.gens

    def colon(self, m):
        """(self : x^m)."""
        return minimalize(exp_sub(g, exp_min(g, m)) for g in self.gens)

    def radical(self):
        """Squarefree ideal generated by the supports of the generators."""
        return minimalize(support_exp(g) for g in self.gens)

    def intersect(self, other):
        return minimalize(exp_lcm(g, h) for g in self.gens for h in other.gens)

    def __repr__(self):
        return f"MonomialIdeal({list(map(list, self.gens))})"


def minimalize(gens):
    """Canonical MonomialIdeal spanned by the given generators."""
    items = sorted(set(tuple(g) for g in gens), key=lambda g: (sum(g), g))
    keep = []
    for g in items:
        if not any(divides(h, g) for h in keep):
            keep.append(g)
    return MonomialIdeal(tuple(sorted(keep)))


# -- degree fibers -----------------------------------------------------------

def fiber(matrix, b):
    """All u >= 0 with A.u = b, sorted lexicographically.

    Backtracking bounded by the positivity certificate: c.(A u) = c.b caps
    every coordinate.  Empty when b is not a nonnegative combination.
    """
    b = tuple(b)
    n = matrix.n
    weights = matrix.certificate_weights
    budget = positive_combination(matrix, b)
    if budget < 0 or (budget == 0 and any(b)):
        return ()
    cols = matrix.columns
    nonneg = matrix.nonnegative
    out = []
    u = [0] * n

    def rec(j, residual, budget):
        if j == n:
            if all(x == 0 for x in residual):
                out.append(tuple(u))
            return
        if nonneg and any(x < 0 for x in residual):
            return
        col = cols[j]
        top = budget // weights[j]
        for k in range(top + 1):
            u[j] = k
            rec(j + 1, tuple(r - k * c for r, c in zip(residual, col)),
                budget - k * weights[j])
        u[j] = 0

    rec(0, b, budget)
    return tuple(sorted(out))


# -- K-polynomials -----------------------------------------------------------

class KPolynomial:
    """Sparse integer-coefficient function on Z^d degrees."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data = dict(terms) if not isinstance(terms, dict) else dict(terms)
        self.terms = {k: v for k, v in data.items() if v}

    @classmethod
    def one(cls, d):
        return cls({(0,) * d: 1})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, KPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __sub__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) - v
        return KPolynomial(out)

    def shifted(self, by):
        """Multiply by t^by."""
        return KPolynomial({exp_add(k, by): v for k, v in self.terms.items()})

    def coefficient(self, k):
        return self.terms.get(tuple(k), 0)

    def items(self):
        return sorted(self.terms.items())

    def __repr__(self):
        return f"KPolynomial({self.items()})"


def _largest_degree_pivot(gens):
    return max(gens, key=lambda g: (sum(g), g))


def k_polynomial(ideal, matrix, memo=None, pivot=None):
    """Hilbert-series numerator of the quotient by a monomial ideal.

    Uses the exact generator recursion
        N(<G, m>) = N(<G>) - t^{A.m} N(<G> : m)
    with base case N(<>) = 1, memoised on canonical generator tuples.  The
    result does not depend on the pivot choice; the default takes the
    generator of largest total degree.
    """
    if memo is None:
        memo = {}
    if pivot is None:
        pivot = _largest_degree_pivot
    d = matrix.d
    one = KPolynomial.one(d)

    def rec(gens):
        if not gens:
            return one
        if len(gens) == 1 and not any(gens[0]):
            return KPolynomial()
        val = memo.get(gens)
        if val is not None:
            return val
        m = pivot(gens)
        rest = tuple(g for g in gens if g != m)
        rest_ideal = MonomialIdeal(rest)
        colon = rest_ideal.colon(m)
        val = rec(rest) - rec(colon.gens).shifted(matrix.degree(m))
        memo[gens] = val
        return val

    return rec(ideal.gens)
