"""Group builders, subgroup lattices, Weyl groups, marks."""

import itertools

import pytest

from catrank.grouptheory import (
    FiniteGroup,
    build_group,
    cyclic_group,
    dihedral_group,
    symmetric_group,
    product_group,
    perm_group,
    subgroups,
    subgroup_classes,
    conjugate_subgroup,
    normalizer,
    weyl_group,
    left_cosets,
    fixed_point_count,
    table_of_marks,
    nu_matrix_via_chains,
)


# primitive subgroup oracle: every subset closed under the operation
def all_subgroups_bruteforce(g):
    elems = range(g.order)
    found = set()
    for r in range(1, g.order + 1):
        for sub in itertools.combinations(elems, r):
            s = set(sub)
            if 0 not in s:
                continue
            if all(g.table[a][b] in s for a in s for b in s):
                found.add(frozenset(s))
    return found


class TestBuilders:
    def test_cyclic(self):
        g = cyclic_group(6)
        assert g.order == 6
        assert g.mul(2, 5) == 1

    def test_cyclic_one(self):
        assert cyclic_group(1).order == 1

    def test_dihedral(self):
        g = dihedral_group(4)
        assert g.order == 8
        # reflections are involutions
        assert sum(1 for x in range(8) if x != 0 and g.mul(x, x) == 0) == 5

    def test_symmetric(self):
        assert symmetric_group(3).order == 6
        assert symmetric_group(4).order == 24

    def test_product(self):
        g = product_group(cyclic_group(2), cyclic_group(3))
        assert g.order == 6
        # isomorphic to cyclic 6: has an element of order 6
        orders = set()
        for x in range(6):
            k, y = 1, x
            while y != 0:
                y = g.mul(y, x)
                k += 1
            orders.add(k)
        assert 6 in orders

    def test_perm_closure(self):
        g = perm_group([(1, 2, 0)])
        assert g.order == 3

    def test_perm_cap(self):
        with pytest.raises(ValueError):
            perm_group([(1, 2, 3, 4, 0)], cap=3)

    def test_alias_klein(self):
        g = build_group("klein")
        assert g.order == 4
        assert all(g.mul(x, x) == 0 for x in range(4))

    def test_alias_q8(self):
        g = build_group("q8")
        assert g.order == 8
        # quaternion group: a unique involution
        assert sum(1 for x in range(1, 8) if g.mul(x, x) == 0) == 1

    def test_alias_a4(self):
        g = build_group("a4")
        assert g.order == 12
        assert len(subgroups(g)) == 10

    def test_string_specs(self):
        assert build_group("cyclic:5").order == 5
        assert build_group("dihedral:3").order == 6
        assert build_group("sym:4").order == 24
        assert build_group("product:cyclic:2+cyclic:2").order == 4
        assert build_group("trivial").order == 1

    def test_dict_specs(self):
        assert build_group({"kind": "cyclic", "n": 7}).order == 7
        g = build_group({"kind": "table", "table": [[0, 1], [1, 0]]})
        assert g.order == 2
        p = build_group({"kind": "perm", "generators": [[1, 0, 2]]})
        assert p.order == 2

    def test_bad_specs(self):
        with pytest.raises(ValueError):
            build_group("nonsense:3")
        with pytest.raises(ValueError):
            build_group({"kind": "mystery"})
        with pytest.raises(ValueError):
            build_group({"kind": "table", "table": [[0, 1], [0, 1]]})  # not Latin

    def test_group_axioms_rejected(self):
        # associativity failure: a Latin square that is not a group table
        bad = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with pytest.raises(ValueError):
            FiniteGroup(bad)

    def test_inverse_and_conj(self):
        g = symmetric_group(3)
        for x in range(6):
            assert g.mul(x, g.inv[x]) == 0
        assert g.conj(0, 3) == 3


class TestSubgroups:
    @pytest.mark.parametrize(
        "g",
        [cyclic_group(6), symmetric_group(3), dihedral_group(4),
         build_group("klein"), build_group("a4"), build_group("q8")],
        ids=["c6", "s3", "d4", "v4", "a4", "q8"],
    )
    def test_against_bruteforce(self, g):
        got = {frozenset(h) for h in subgroups(g)}
        assert got == all_subgroups_bruteforce(g)

    def test_s3_classes(self):
        cls = subgroup_classes(symmetric_group(3))
        assert len(cls) == 4
        assert [len(c.representative) for c in cls] == [1, 2, 3, 6]
        assert [len(c.conjugates) for c in cls] == [1, 3, 1, 1]
        assert [c.weyl_order for c in cls] == [6, 1, 2, 1]

    def test_v4_classes(self):
        cls = subgroup_classes(build_group("klein"))
        assert len(cls) == 5
        assert [c.weyl_order for c in cls] == [4, 2, 2, 2, 1]

    def test_a4_classes(self):
        cls = subgroup_classes(build_group("a4"))
        assert [c.weyl_order for c in cls] == [12, 2, 1, 3, 1]

    def test_q8_all_normal(self):
        g = build_group("q8")
        cls = subgroup_classes(g)
        assert len(cls) == 6
        assert all(len(c.conjugates) == 1 for c in cls)

    def test_conjugate_and_normalizer(self):
        g = symmetric_group(3)
        c2 = (0, 1)
        assert sorted(normalizer(g, c2)) == [0, 1]
        c3 = (0, 3, 4)
        assert sorted(normalizer(g, c3)) == list(range(6))
        moved = conjugate_subgroup(g, c2, 3)
        assert set(moved) != set(c2) and len(moved) == 2

    def test_weyl_groups(self):
        g = symmetric_group(3)
        assert weyl_group(g, (0, 1)).order == 1
        assert weyl_group(g, (0, 3, 4)).order == 2
        w = weyl_group(g, (0,))
        assert w.order == 6
        assert w.table == g.table  # singleton cosets in element order

    def test_weyl_rejects_nonsubgroup(self):
        with pytest.raises(ValueError):
            weyl_group(symmetric_group(3), (0, 3))

    def test_left_cosets(self):
        g = symmetric_group(3)
        cs = left_cosets(g, (0, 1))
        assert len(cs) == 3
        assert cs[0] == frozenset({0, 1})
        assert sorted(x for c in cs for x in c) == list(range(6))


class TestMarks:
    def test_fixed_points_trivial_acting(self):
        g = dihedral_group(4)
        for cls in subgroup_classes(g):
            k = cls.representative
            assert fixed_point_count(g, (0,), k) == g.order // len(k)

    def test_fixed_points_self(self):
        g = symmetric_group(3)
        for cls in subgroup_classes(g):
            h = cls.representative
            assert fixed_point_count(g, h, h) == cls.weyl_order

    def test_fixed_points_incomparable(self):
        g = symmetric_group(3)
        assert fixed_point_count(g, (0, 3, 4), (0, 1)) == 0

    def test_marks_cyclic_prime(self):
        for p in (2, 3, 5):
            m = table_of_marks(cyclic_group(p)).matrix
            assert [m.row(0), m.row(1)] == [(p, 1), (0, 1)]

    def test_marks_v4(self):
        m = table_of_marks(build_group("klein")).matrix
        assert [m.get(i, i) for i in range(5)] == [4, 2, 2, 2, 1]
        assert m.row(0) == (4, 2, 2, 2, 1)

    @pytest.mark.parametrize(
        "g",
        [symmetric_group(3), dihedral_group(4), build_group("a4"), build_group("q8")],
        ids=["s3", "d4", "a4", "q8"],
    )
    def test_marks_shape(self, g):
        cls = subgroup_classes(g)
        m = table_of_marks(g).matrix
        n = len(cls)
        for i in range(n):
            # diagonal counts the Weyl group; below it everything vanishes
            assert m.get(i, i) == cls[i].weyl_order
            for j in range(i):
                assert m.get(i, j) == 0
            assert m.get(0, i) == g.order // len(cls[i].representative)

    def test_marks_s3_exact(self):
        m = table_of_marks(symmetric_group(3)).matrix
        assert [m.row(i) for i in range(4)] == [
            (6, 3, 2, 1),
            (0, 1, 0, 1),
            (0, 0, 2, 1),
            (0, 0, 0, 1),
        ]


class TestNuChains:
    def test_cyclic_prime(self):
        for p in (2, 3, 5):
            nu = nu_matrix_via_chains(cyclic_group(p))
            assert [nu.row(0), nu.row(1)] == [(1, -1), (0, 1)]

    def test_diagonal_ones(self):
        for g in (symmetric_group(3), build_group("klein")):
            nu = nu_matrix_via_chains(g)
            assert all(nu.get(i, i) == 1 for i in range(nu.rows))
