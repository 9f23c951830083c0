"""Finite abelian groups as explicit direct sums of cyclic groups.

A group is a tuple of moduli (m_1, ..., m_k), each >= 2, and an element
is an integer tuple of the same length with component i reduced mod m_i.
Addition is componentwise.  Everything here is exhaustive and meant for
desk-scale groups (order up to a few thousand).
"""

from itertools import product
from math import gcd, prod

from .errors import MalformedElementError, NotASubgroupError


class AbelianGroup:
    """Direct sum of cyclic groups Z_{m_1} + ... + Z_{m_k}."""

    def __init__(self, moduli):
        moduli = tuple(int(m) for m in moduli)
        if not moduli or any(m < 2 for m in moduli):
            raise ValueError("moduli must be a nonempty list of integers >= 2")
        self.moduli = moduli
        self.rank = len(moduli)
        self.order = prod(moduli)
        self.zero = (0,) * self.rank

    def __eq__(self, other):
        return isinstance(other, AbelianGroup) and self.moduli == other.moduli

    def __hash__(self):
        return hash(self.moduli)

    def __repr__(self):
        return "AbelianGroup(%s)" % (self.moduli,)

    def __iter__(self):
        return iter(self.elements())

    def elements(self):
        """All elements in lexicographic order."""
        return [tuple(v) for v in product(*(range(m) for m in self.moduli))]

    def check_element(self, x):
        if len(x) != self.rank or any(
            not (0 <= xi < mi) for xi, mi in zip(x, self.moduli)
        ):
            raise MalformedElementError(
                "%r is not an element of %r" % (x, self)
            )
        return tuple(x)

    def reduce(self, x):
        """Reduce an arbitrary integer vector into the group."""
        if len(x) != self.rank:
            raise MalformedElementError(
                "vector %r has wrong length for %r" % (x, self)
            )
        return tuple(xi % mi for xi, mi in zip(x, self.moduli))

    def add(self, x, y):
        return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

    def neg(self, x):
        return tuple((-a) % m for a, m in zip(x, self.moduli))

    def sub(self, x, y):
        return tuple((a - b) % m for a, b, m in zip(x, y, self.moduli))

    def scale(self, k, x):
        return tuple((k * a) % m for a, m in zip(x, self.moduli))

    def element_order(self, x):
        """Additive order: lcm over components of m_i / gcd(x_i, m_i)."""
        self.check_element(x)
        n = 1
        for a, m in zip(x, self.moduli):
            d = m // gcd(a, m)
            n = n * d // gcd(n, d)
        return n


def subgroup_closure(group, gens):
    """Smallest subset containing gens and 0, closed under + and negation.

    Worklist saturation: keep adding pairwise sums until nothing new shows
    up.  Negation comes for free in a finite group.
    """
    for g in gens:
        group.check_element(g)
    closed = {group.zero}
    frontier = [group.zero]
    gens = list(dict.fromkeys(tuple(g) for g in gens))
    for g in gens:
        if g not in closed:
            closed.add(g)
            frontier.append(g)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = group.add(x, g)
            if y not in closed:
                closed.add(y)
                frontier.append(y)
    return frozenset(closed)


def is_subgroup(group, subset):
    subset = set(subset)
    if group.zero not in subset:
        return False
    return all(group.add(x, y) in subset for x in subset for y in subset)


def invariant_factors(group, subset):
    """Invariant factors d_1 | d_2 | ... | d_k of a subgroup, from its
    element-order census.

    For each prime p dividing |S|, counting the elements killed by p^j
    determines the p-part of the factor decomposition (the counts give the
    conjugate partition of the p-exponents).  The factors then assemble by
    aligning the largest parts of each prime.
    """
    subset = [group.check_element(x) for x in subset]
    if len(set(subset)) != len(subset):
        raise NotASubgroupError("element set has repeats")
    subset = set(subset)
    if not is_subgroup(group, subset):
        raise NotASubgroupError("set is not closed under addition")
    n = len(subset)
    if n == 1:
        return []

    # For each prime p: r_j = #{cyclic factors of the p-part with exponent
    # >= j}, read off from the census c_j = #{x in S : p^j x = 0} via
    # c_j / c_{j-1} = p^{r_j}.  The exponent partition is the conjugate.
    exps_by_prime = {}
    for p in _prime_factors(n):
        r = []
        prev = 1
        while True:
            pj = p ** (len(r) + 1)
            cur = sum(
                1
                for x in subset
                if all((pj * a) % m == 0 for a, m in zip(x, group.moduli))
            )
            if cur == prev:
                break
            r.append(_int_log(cur // prev, p))
            prev = cur
        exps = [sum(1 for rj in r if rj >= i + 1) for i in range(max(r))]
        exps_by_prime[p] = exps  # largest exponent first

    k = max(len(e) for e in exps_by_prime.values())
    factors = [1] * k
    for p, exps in exps_by_prime.items():
        for i, e in enumerate(exps):
            factors[k - 1 - i] *= p**e
    assert prod(factors) == n
    for a, b in zip(factors, factors[1:]):
        assert b % a == 0
    return factors


def _int_log(x, p):
    e = 0
    while x > 1 and x % p == 0:
        x //= p
        e += 1
    return e


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class QuotientRing:
    """Z_n[t] / (p(t)) for a monic polynomial p, coefficients ascending.

    Elements are coefficient tuples of length deg(p) over Z_n, so the ring
    has n^deg(p) elements.  The class of t is a unit exactly when the
    constant coefficient p(0) is a unit mod n (the multiplication-by-t
    matrix has determinant +-p(0)); ``t_is_unit`` records that, and
    constructions needing t^{-1} must refuse rings where it is False.
    """

    def __init__(self, n, coeffs):
        from .errors import InvalidPolynomialError

        n = int(n)
        if n < 2:
            raise InvalidPolynomialError("modulus n must be >= 2")
        coeffs = [int(c) % n for c in coeffs]
        if coeffs and coeffs[-1] == 0:
            # a monic polynomial cannot end in zero coefficients
            raise InvalidPolynomialError("polynomial is not monic mod %d" % n)
        if len(coeffs) < 2:
            raise InvalidPolynomialError("polynomial must have degree >= 1")
        if coeffs[-1] != 1:
            raise InvalidPolynomialError(
                "polynomial must be monic (leading coefficient 1 mod n)"
            )
        self.n = n
        self.coeffs = tuple(coeffs)
        self.degree = len(coeffs) - 1
        self.size = n**self.degree
        self.zero = (0,) * self.degree
        self.one = (1,) + (0,) * (self.degree - 1)
        # class of t; for degree 1, p = t + c0 forces t = -c0
        if self.degree == 1:
            self.t = ((-coeffs[0]) % n,)
        else:
            self.t = (0, 1) + (0,) * (self.degree - 2)
        self.t_is_unit = gcd(coeffs[0], n) == 1

    def __repr__(self):
        return "QuotientRing(n=%d, p=%s)" % (self.n, list(self.coeffs))

    def elements(self):
        return [tuple(v) for v in product(*(range(self.n),) * self.degree)]

    def add(self, a, b):
        return tuple((x + y) % self.n for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.n for x in a)

    def sub(self, a, b):
        return tuple((x - y) % self.n for x, y in zip(a, b))

    def mul(self, a, b):
        # schoolbook product, then reduce by p using monicity
        prod_coeffs = [0] * (2 * self.degree - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod_coeffs[i + j] += x * y
        for k in range(len(prod_coeffs) - 1, self.degree - 1, -1):
            c = prod_coeffs[k] % self.n
            if c:
                # t^k = -(p_0 t^{k-d} + ... + p_{d-1} t^{k-1})
                for j in range(self.degree):
                    prod_coeffs[k - self.degree + j] -= c * self.coeffs[j]
            prod_coeffs[k] = 0
        return tuple(c % self.n for c in prod_coeffs[: self.degree])

    def t_times(self, a):
        return self.mul(self.t, a)

    def inverse(self, a):
        """Multiplicative inverse by exhaustive search, or None."""
        for b in self.elements():
            if self.mul(a, b) == self.one:
                return b
        return None


def ring_make(n, coeffs):
    """Build Z_n[t]/(p(t)); see QuotientRing for validation rules."""
    return QuotientRing(n, coeffs)
