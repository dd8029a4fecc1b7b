"""Iso-class poset, chain bisets, Moebius matrices, Euler characteristics."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from catrank.exactq import QMatrix, mat_invert
from catrank.fincat import (
    FiniteCategory,
    classify,
    coproduct,
    delooping,
    from_json,
    opposite,
    poset_category,
    product,
    validate,
)
from catrank.grouptheory import build_group, cyclic_group, symmetric_group
from catrank.moebius import (
    Chain,
    ChainBiset,
    chi_f2_via_eta,
    double_coset_count,
    enumerate_chains,
    euler_characteristics,
    integral_moebius,
    iso_order,
    mu_bar2_chains,
    nerve_euler_characteristic,
    omega_bar2,
    perm_module_dim,
)

import genrandom
from test_fincat import retract_pair, indiscrete_pair, divisor_poset


def span_category() -> FiniteCategory:
    return FiniteCategory(
        ["0", "1", "2"], [0, 1, 2, 0, 0], [0, 1, 2, 1, 2], [0, 1, 2],
        {(0, 0): 0, (1, 1): 1, (2, 2): 2, (3, 0): 3, (1, 3): 3, (4, 0): 4, (2, 4): 4},
    )


def parallel_pair() -> FiniteCategory:
    return FiniteCategory(
        ["0", "1"], [0, 1, 0, 0], [0, 1, 1, 1], [0, 1],
        {(0, 0): 0, (1, 1): 1, (2, 0): 2, (1, 2): 2, (3, 0): 3, (1, 3): 3},
    )


def subsets_category(q: int) -> FiniteCategory:
    """Nonempty subsets of {0..q}; one arrow J -> K whenever K is inside J."""
    elems = []
    for mask in range(1, 1 << (q + 1)):
        elems.append(mask)
    return poset_category([str(m) for m in elems],
                          lambda a, b: (int(a) | int(b)) == int(a))


def collapsed_action_category() -> FiniteCategory:
    """x < y < z with aut(y) of order 2 acting trivially on mor(x, y) and on
    mor(y, z): EI but not free, so chain inversion and matrix inversion of
    omega genuinely part ways."""
    return FiniteCategory(
        ["x", "y", "z"],
        [0, 1, 2, 1, 0, 1, 0],
        [0, 1, 2, 1, 1, 2, 2],
        [0, 1, 2],
        {
            (0, 0): 0, (1, 1): 1, (2, 2): 2,
            (3, 3): 1, (1, 3): 3, (3, 1): 3,
            (4, 0): 4, (1, 4): 4, (3, 4): 4,
            (5, 1): 5, (2, 5): 5, (5, 3): 5,
            (6, 0): 6, (2, 6): 6,
            (5, 4): 6,
        },
    )


def classical_mobius(leq_pairs, elems):
    """Recursive poset Moebius function, the textbook definition."""
    memo = {}

    def mu(x, y):
        if x == y:
            return 1
        if (x, y) not in leq_pairs:
            return 0
        if (x, y) not in memo:
            memo[(x, y)] = -sum(
                mu(x, z) for z in elems if (x, z) in leq_pairs and (z, y) in leq_pairs and z != y
            )
        return memo[(x, y)]

    return mu


class TestIsoOrder:
    def test_rejects_non_ei(self):
        with pytest.raises(ValueError, match="EI"):
            iso_order(retract_pair())
        with pytest.raises(ValueError, match="EI"):
            omega_bar2(retract_pair())
        with pytest.raises(ValueError, match="EI"):
            euler_characteristics(retract_pair())

    def test_span_order(self):
        poset = iso_order(span_category())
        assert poset.labels == ("0", "1", "2")
        assert poset.lengths == (0, 1, 1)
        assert poset.leq[0][1] and poset.leq[0][2]
        assert not poset.leq[1][2] and not poset.leq[2][1]

    def test_merges_isomorphic_objects(self):
        poset = iso_order(indiscrete_pair())
        assert poset.size == 1
        assert poset.members == (("0", "1"),)

    def test_length_orders_levels(self):
        poset = iso_order(divisor_poset(12))
        assert poset.labels == ("1", "2", "3", "4", "6", "12")
        assert poset.lengths == (0, 1, 1, 2, 2, 3)

    def test_chain_enumeration(self):
        poset = iso_order(divisor_poset(12))
        chains = list(enumerate_chains(poset, 0, end=5))
        # 1<12, 1<2<12, 1<3<12, 1<4<12, 1<6<12, 1<2<4<12, 1<2<6<12, 1<3<6<12
        assert sorted(c.classes for c in chains) == sorted([
            (0, 5), (0, 1, 5), (0, 2, 5), (0, 3, 5), (0, 4, 5),
            (0, 1, 3, 5), (0, 1, 4, 5), (0, 2, 4, 5),
        ])
        assert all(ch.length <= 1 for ch in enumerate_chains(poset, 0, max_length=1))


class TestChainBiset:
    def test_singleton_chain_is_aut(self):
        cat = delooping(symmetric_group(3))
        poset = iso_order(cat)
        b = ChainBiset(poset, Chain((0,)))
        assert b.size == 6
        assert b.left_orbit_count() == 1
        assert double_coset_count(b) == 1

    def test_interior_quotient_collapses(self):
        poset = iso_order(collapsed_action_category())
        chain = Chain((0, 1, 2))
        b = ChainBiset(poset, chain)
        # two raw tuples (h, f) and (h, s o f) but s acts trivially on both
        # sides, so the middle quotient identifies nothing; |S| stays 1*1 = 1
        assert b.size == 1

    def test_actions_commute(self):
        cat = delooping(build_group("q8"))
        poset = iso_order(cat)
        b = ChainBiset(poset, Chain((0,)))
        for a in range(8):
            for c in range(8):
                for e in b.elements:
                    assert b.act_right(b.act_left(a, e), c) == b.act_left(a, b.act_right(e, c))


class TestPermModuleDim:
    def test_regular(self):
        g = symmetric_group(3)
        action = [[g.table[a][b] for b in range(6)] for a in range(6)]
        assert perm_module_dim(6, action) == 1

    def test_trivial_action(self):
        # all stabilizers are the full group, so each point contributes 1/2
        assert perm_module_dim(2, [[0, 1, 2], [0, 1, 2]]) == Fraction(3, 2)

    def test_coset_action(self):
        from catrank.grouptheory import left_cosets, subgroups

        g = symmetric_group(3)
        for h in subgroups(g):
            cosets = left_cosets(g, h)
            idx = {c: i for i, c in enumerate(cosets)}
            action = [
                [idx[frozenset(g.table[a][e] for e in c)] for c in cosets]
                for a in range(6)
            ]
            assert perm_module_dim(6, action) == Fraction(1, len(h))

    def test_empty_set(self):
        assert perm_module_dim(4, [[], [], [], []]) == 0


class TestMatrices:
    def test_omega_span(self):
        om = omega_bar2(span_category())
        assert [om.row(i) for i in range(3)] == [(1, 1, 1), (0, 1, 0), (0, 0, 1)]

    def test_mu_span(self):
        mu = mu_bar2_chains(span_category())
        assert [mu.row(i) for i in range(3)] == [(1, -1, -1), (0, 1, 0), (0, 0, 1)]

    def test_omega_unit_upper_triangular(self):
        rng = random.Random(5)
        for _ in range(8):
            cat = genrandom.poset_of_groups(rng)
            om = omega_bar2(cat)
            for i in range(om.rows):
                assert om.get(i, i) == 1
                for j in range(i):
                    assert om.get(i, j) == 0

    def test_mu_inverts_omega_when_free(self):
        rng = random.Random(9)
        cats = [
            span_category(), parallel_pair(), divisor_poset(30),
            delooping(symmetric_group(3)),
            product(delooping(cyclic_group(2)), divisor_poset(4)),
            coproduct(delooping(cyclic_group(3)), span_category()),
        ] + [genrandom.poset_of_groups(rng) for _ in range(6)]
        for cat in cats:
            assert classify(cat).is_free
            om = omega_bar2(cat)
            mu = mu_bar2_chains(cat)
            assert om.mul(mu).is_identity()
            assert mu.mul(om).is_identity()
            assert mu == mat_invert(om)

    def test_mu_differs_from_inverse_when_not_free(self):
        cat = collapsed_action_category()
        rep = classify(cat)
        assert rep.is_ei and not rep.is_free
        mu = mu_bar2_chains(cat)
        inv = mat_invert(omega_bar2(cat))
        assert mu != inv
        assert mu.at("x", "z") == 0 and inv.at("x", "z") == Fraction(-1, 2)

    def test_max_chain_length_truncates(self):
        mu0 = mu_bar2_chains(span_category(), max_chain_length=0)
        assert mu0.is_identity()
        full = mu_bar2_chains(divisor_poset(12))
        assert mu_bar2_chains(divisor_poset(12), max_chain_length=5) == full


class TestIntegralMoebius:
    def test_requires_skeletal_trivial_endos(self):
        with pytest.raises(ValueError, match="skeletal"):
            integral_moebius(delooping(cyclic_group(2)))
        with pytest.raises(ValueError, match="skeletal"):
            integral_moebius(indiscrete_pair())

    def test_two_chain(self):
        a, b = integral_moebius(divisor_poset(2))
        assert [a.row(0), a.row(1)] == [(1, 0), (1, 1)]
        assert [b.row(0), b.row(1)] == [(1, 0), (-1, 1)]

    def test_parallel_pair(self):
        a, b = integral_moebius(parallel_pair())
        assert [a.row(0), a.row(1)] == [(1, 0), (2, 1)]
        assert [b.row(0), b.row(1)] == [(1, 0), (-2, 1)]

    @pytest.mark.parametrize("n", [4, 12, 30, 36])
    def test_divisor_posets_match_classical_recursion(self, n):
        cat = divisor_poset(n)
        a, b = integral_moebius(cat)
        divs = [d for d in range(1, n + 1) if n % d == 0]
        leq = {(x, y) for x in divs for y in divs if y % x == 0}
        mu = classical_mobius(leq, divs)
        for i, di in enumerate(b.row_labels):
            for j, dj in enumerate(b.col_labels):
                assert b.get(i, j) == mu(int(dj), int(di))

    def test_divisor_anchor_values(self):
        _, b = integral_moebius(divisor_poset(4))
        assert b.at("4", "1") == 0
        assert b.at("2", "1") == -1

    def test_mutually_inverse(self):
        rng = random.Random(21)
        for _ in range(6):
            cat = genrandom.random_dag_category(rng)
            a, b = integral_moebius(cat)
            assert a.is_integral() and b.is_integral()
            assert a.mul(b).is_identity() and b.mul(a).is_identity()


class TestEuler:
    def test_span(self):
        rep = euler_characteristics(span_category())
        assert rep.chi_f.entries == (-1, 1, 1)
        assert rep.chi == 1 and rep.chi2 == 1

    def test_parallel_pair(self):
        rep = euler_characteristics(parallel_pair())
        assert rep.chi_f.entries == (-1, 1)
        assert rep.chi == 0 and rep.chi2 == 0

    def test_subsets_have_terminal_homotopy_type(self):
        for q in (1, 2):
            cat = subsets_category(q)
            rep = euler_characteristics(cat)
            assert rep.chi == 1
            assert nerve_euler_characteristic(cat) == 1

    def test_delooping(self):
        for spec in ("cyclic:2", "sym:3", "q8"):
            g = build_group(spec)
            rep = euler_characteristics(delooping(g))
            assert rep.chi_f.entries == (1,)
            assert rep.chi == 1
            assert rep.chi_f2.entries == (Fraction(1, g.order),)
            assert rep.chi2 == Fraction(1, g.order)

    def test_orbit_poset_of_order_two(self):
        cat = FiniteCategory(
            ["a", "b"], [0, 1, 0, 0], [0, 1, 0, 1], [0, 1],
            {(0, 0): 0, (1, 1): 1, (2, 2): 0, (0, 2): 2, (2, 0): 2,
             (3, 0): 3, (3, 2): 3, (1, 3): 3},
        )
        assert validate(cat) == []
        rep = euler_characteristics(cat)
        assert rep.chi_f2.entries == (0, 1)
        assert rep.chi_f.entries == (0, 1)
        assert chi_f2_via_eta(cat).entries == (0, 1)

    def test_eta_route_matches_direct(self):
        rng = random.Random(13)
        cats = [span_category(), divisor_poset(12),
                delooping(symmetric_group(3))]
        cats += [genrandom.poset_of_groups(rng) for _ in range(6)]
        for cat in cats:
            rep = euler_characteristics(cat)
            assert chi_f2_via_eta(cat) == rep.chi_f2
            # omega applied to chi_f2 recovers the 1/|aut| vector
            poset = iso_order(cat)
            eta = omega_bar2(cat).mul_vec(rep.chi_f2)
            assert eta.entries == tuple(
                Fraction(1, poset.aut_order(i)) for i in range(poset.size)
            )

    def test_eta_route_requires_free(self):
        with pytest.raises(ValueError, match="free"):
            chi_f2_via_eta(collapsed_action_category())

    def test_chi_f_integral(self):
        rng = random.Random(17)
        for _ in range(6):
            cat = genrandom.poset_of_groups(rng)
            rep = euler_characteristics(cat)
            assert rep.chi_f.is_integral()

    def test_invariant_under_opposite_for_groupoids(self):
        # one-object groupoids: the opposite group is isomorphic, same counts
        for spec in ("sym:3", "q8"):
            cat = delooping(build_group(spec))
            a = euler_characteristics(cat)
            b = euler_characteristics(opposite(cat))
            assert a.chi == b.chi and a.chi2 == b.chi2

    def test_max_chain_length_zero(self):
        rep = euler_characteristics(span_category(), max_chain_length=0)
        assert rep.chi_f.entries == (1, 1, 1)


class TestNerve:
    def test_rejects_endomorphism_loops(self):
        with pytest.raises(ValueError, match="infinite"):
            nerve_euler_characteristic(delooping(cyclic_group(2)))
        with pytest.raises(ValueError, match="infinite"):
            nerve_euler_characteristic(indiscrete_pair())

    def test_discrete(self):
        cat = coproduct(
            poset_category(["a"], [("a", "a")]),
            poset_category(["b"], [("b", "b")]),
        )
        assert nerve_euler_characteristic(cat) == 2

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10 ** 6))
    def test_matches_chain_formula_on_one_way_categories(self, seed):
        rng = random.Random(seed)
        cat = genrandom.random_dag_category(rng)
        rep = euler_characteristics(cat)
        assert nerve_euler_characteristic(cat) == rep.chi
        assert rep.chi == rep.chi2


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_free_ei_identities_hold_randomly(seed):
    rng = random.Random(seed)
    cat = genrandom.poset_of_groups(rng)
    om = omega_bar2(cat)
    mu = mu_bar2_chains(cat)
    assert om.mul(mu).is_identity()
    rep = euler_characteristics(cat)
    assert chi_f2_via_eta(cat) == rep.chi_f2
    assert rep.chi_f.is_integral()
