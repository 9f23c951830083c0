from math import prod

import pytest

from tsracks.errors import (
    InvalidPolynomialError,
    MalformedElementError,
    NotASubgroupError,
)
from tsracks.groups import (
    AbelianGroup,
    QuotientRing,
    invariant_factors,
    is_subgroup,
    ring_make,
    subgroup_closure,
)


Z4 = AbelianGroup([4])
Z12 = AbelianGroup([12])
Z2Z2 = AbelianGroup([2, 2])


def members(group, *values):
    return [(v,) for v in values]


class TestSubgroupClosure:
    def test_order_two_element(self):
        assert subgroup_closure(Z4, [(2,)]) == {(0,), (2,)}

    def test_empty_generating_set(self):
        assert subgroup_closure(Z4, []) == {(0,)}

    def test_order_three_element_of_z12(self):
        assert subgroup_closure(Z12, [(4,)]) == {(0,), (4,), (8,)}

    def test_malformed_generator(self):
        with pytest.raises(MalformedElementError):
            subgroup_closure(Z4, [(4,)])
        with pytest.raises(MalformedElementError):
            subgroup_closure(Z4, [(1, 1)])

    def test_idempotent(self):
        for gens in ([(3,)], [(2,), (9,)], [(6,), (8,)]):
            once = subgroup_closure(Z12, gens)
            assert subgroup_closure(Z12, once) == once

    def test_lagrange(self):
        for g in Z12.elements():
            assert Z12.order % len(subgroup_closure(Z12, [g])) == 0
        for g in Z2Z2.elements():
            assert Z2Z2.order % len(subgroup_closure(Z2Z2, [g])) == 0


class TestInvariantFactors:
    def test_order_two_subgroup(self):
        assert invariant_factors(Z4, [(0,), (2,)]) == [2]

    def test_klein_four(self):
        assert invariant_factors(Z2Z2, Z2Z2.elements()) == [2, 2]

    def test_even_residues_of_z12(self):
        evens = [(x,) for x in range(0, 12, 2)]
        assert invariant_factors(Z12, evens) == [6]

    def test_not_closed(self):
        with pytest.raises(NotASubgroupError):
            invariant_factors(Z4, [(0,), (1,)])

    def test_full_groups_recover_their_own_factors(self):
        cases = {
            (12,): [12],
            (2, 4): [2, 4],
            (6,): [6],
            (2, 6): [2, 6],
            (2, 2, 2): [2, 2, 2],
            (3, 4): [12],
        }
        for moduli, expected in cases.items():
            g = AbelianGroup(moduli)
            assert invariant_factors(g, g.elements()) == expected

    def test_divisor_chain_and_product(self):
        g = AbelianGroup([2, 12])
        for gens in ([(1, 2)], [(0, 3), (1, 0)], [(1, 6), (0, 4)]):
            sub = subgroup_closure(g, gens)
            factors = invariant_factors(g, sub)
            assert prod(factors) == len(sub)
            assert all(b % a == 0 for a, b in zip(factors, factors[1:]))

    def test_census_determines_factors(self):
        # two distinct order-4 subgroups of Z2+Z4 with cyclic census
        g = AbelianGroup([2, 4])
        s1 = subgroup_closure(g, [(0, 1)])
        s2 = subgroup_closure(g, [(1, 1)])
        assert s1 != s2
        assert invariant_factors(g, s1) == invariant_factors(g, s2) == [4]


class TestQuotientRing:
    def test_degree_one(self):
        r = ring_make(2, [1, 1])  # t + 1
        assert r.size == 2
        assert r.t == (1,)
        assert r.t_is_unit

    def test_t_squared_plus_one_mod_two(self):
        r = ring_make(2, [1, 0, 1])
        assert r.size == 4
        assert r.t_is_unit
        # t^2 = -1 = 1 mod 2, so t is its own inverse
        assert r.mul(r.t, r.t) == r.one
        assert r.inverse(r.t) == r.t

    def test_z4_linear_quotient(self):
        r = ring_make(4, [-3, 1])  # t - 3
        assert r.size == 4
        assert r.t == (3,)
        assert r.mul(r.t, (3,)) == r.one  # 3 * 3 = 9 = 1 mod 4

    def test_non_monic_rejected(self):
        with pytest.raises(InvalidPolynomialError):
            ring_make(4, [1, 2])
        with pytest.raises(InvalidPolynomialError):
            ring_make(2, [1])
        with pytest.raises(InvalidPolynomialError):
            ring_make(2, [1, 1, 0])

    def test_unit_detection_matches_exhaustive_search(self):
        for n, coeffs in [(2, [1, 1]), (2, [1, 0, 1]), (4, [2, 0, 1]),
                          (4, [1, 1, 1]), (6, [3, 0, 1]), (6, [5, 1])]:
            r = ring_make(n, coeffs)
            assert r.t_is_unit == (r.inverse(r.t) is not None)

    def test_ring_axioms_sampled(self):
        r = ring_make(4, [1, 2, 1])
        elems = r.elements()
        for a in elems[:6]:
            for b in elems[:6]:
                assert r.mul(a, b) == r.mul(b, a)
                for c in elems[:4]:
                    left = r.mul(a, r.add(b, c))
                    right = r.add(r.mul(a, b), r.mul(a, c))
                    assert left == right


def test_is_subgroup():
    assert is_subgroup(Z4, {(0,), (2,)})
    assert not is_subgroup(Z4, {(0,), (1,)})
    assert not is_subgroup(Z4, {(2,)})
