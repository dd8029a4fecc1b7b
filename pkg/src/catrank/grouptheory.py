"""Finite groups as Cayley tables: subgroup lattice, conjugacy classes of
subgroups, Weyl groups, fixed-point counts, table of marks, nu matrix and
Burnside congruences.

Elements are integers 0..n-1 with 0 the identity. Subgroups are frozensets of
element indices. The canonical order on subgroup classes is ascending |H| with
ties broken by the lexicographically least sorted conjugate; that order makes
the marks matrix upper-triangular.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .exactq import QMatrix

DEFAULT_CAP = 200


class FiniteGroup:
    __slots__ = ("order", "table", "names", "inv")

    def __init__(self, table: Sequence[Sequence[int]], names: Sequence[str] | None = None):
        self.order = len(table)
        self.table: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in table)
        if names is None:
            names = [str(i) for i in range(self.order)]
        self.names: tuple[str, ...] = tuple(names)
        if len(self.names) != self.order:
            raise ValueError("names length does not match order")
        _check_group_table(self.table)
        inv = [None] * self.order
        for a in range(self.order):
            for b in range(self.order):
                if self.table[a][b] == 0:
                    inv[a] = b
                    break
        self.inv: tuple[int, ...] = tuple(inv)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def conj(self, g: int, h: int) -> int:
        """g h g^-1."""
        return self.table[self.table[g][h]][self.inv[g]]

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"

    def to_json(self) -> dict:
        return {"order": self.order, "table": [list(r) for r in self.table], "names": list(self.names)}


def _check_group_table(table: tuple[tuple[int, ...], ...]) -> None:
    n = len(table)
    if n == 0:
        raise ValueError("empty table; the trivial group has order 1")
    full = set(range(n))
    for i, row in enumerate(table):
        if len(row) != n:
            raise ValueError(f"row {i} has wrong length")
        if set(row) != full:
            raise ValueError(f"row {i} is not a permutation of 0..{n-1}")
    for j in range(n):
        if {table[i][j] for i in range(n)} != full:
            raise ValueError(f"column {j} is not a permutation of 0..{n-1}")
    for i in range(n):
        if table[0][i] != i or table[i][0] != i:
            raise ValueError("element 0 is not a two-sided identity")
    for a in range(n):
        ta = table[a]
        for b in range(n):
            tab = table[ta[b]]
            tb = table[b]
            for c in range(n):
                if tab[c] != ta[tb[c]]:
                    raise ValueError(f"associativity fails at ({a},{b},{c})")


# ---------------------------------------------------------------- builders


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)])


def dihedral_group(n: int) -> FiniteGroup:
    """Order 2n; element s*n + i stands for r^i s^(s in {0,1}); s r s = r^-1."""
    if n < 1:
        raise ValueError("dihedral group needs n >= 1")

    def idx(i, s):
        return s * n + i

    table = [[0] * (2 * n) for _ in range(2 * n)]
    names = [f"r{i}" for i in range(n)] + [f"sr{i}" for i in range(n)]
    for i1 in range(n):
        for s1 in range(2):
            for i2 in range(n):
                for s2 in range(2):
                    i = (i1 + (i2 if s1 == 0 else -i2)) % n
                    table[idx(i1, s1)][idx(i2, s2)] = idx(i, s1 ^ s2)
    return FiniteGroup(table, names)


def _perm_mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # (p*q)(i) = p(q(i))
    return tuple(p[q[i]] for i in range(len(p)))


def symmetric_group(n: int) -> FiniteGroup:
    if not (1 <= n <= 5):
        raise ValueError("symmetric group supported for 1 <= n <= 5")
    import itertools

    elems = sorted(itertools.permutations(range(n)))
    return _group_from_perms(elems)


def _group_from_perms(elems: list[tuple[int, ...]]) -> FiniteGroup:
    index = {p: i for i, p in enumerate(elems)}
    table = [[index[_perm_mul(p, q)] for q in elems] for p in elems]
    names = ["".join(map(str, p)) for p in elems]
    return FiniteGroup(table, names)


def perm_group(generators: Iterable[Sequence[int]], cap: int = DEFAULT_CAP) -> FiniteGroup:
    gens = [tuple(g) for g in generators]
    if not gens:
        raise ValueError("need at least one generator")
    deg = len(gens[0])
    for g in gens:
        if len(g) != deg or sorted(g) != list(range(deg)):
            raise ValueError(f"not a permutation of 0..{deg-1}: {g}")
    ident = tuple(range(deg))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = _perm_mul(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
                    if len(seen) > cap:
                        raise ValueError(f"closure exceeds cap {cap}")
        frontier = nxt
    # identity is lexicographically least, so sorting puts it at index 0
    return _group_from_perms(sorted(seen))


def product_group(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    n1, n2 = g1.order, g2.order

    def idx(a, b):
        return a * n2 + b

    table = [[0] * (n1 * n2) for _ in range(n1 * n2)]
    for a1 in range(n1):
        for b1 in range(n2):
            for a2 in range(n1):
                for b2 in range(n2):
                    table[idx(a1, b1)][idx(a2, b2)] = idx(g1.table[a1][a2], g2.table[b1][b2])
    names = [f"{g1.names[a]}|{g2.names[b]}" for a in range(n1) for b in range(n2)]
    return FiniteGroup(table, names)


_ALIASES = {
    "trivial": {"kind": "cyclic", "n": 1},
    "klein": {"kind": "product", "factors": [{"kind": "cyclic", "n": 2}, {"kind": "cyclic", "n": 2}]},
    "a4": {"kind": "perm", "generators": [[1, 2, 0, 3], [1, 0, 3, 2]]},
    "q8": {"kind": "perm", "generators": [[1, 2, 3, 0, 5, 6, 7, 4], [4, 7, 6, 5, 2, 1, 0, 3]]},
}


def build_group(spec, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Build a group from a dict spec or the CLI string mini-language.

    Dict kinds: cyclic / dihedral / symmetric / product / table / perm.
    Strings: "cyclic:N", "dihedral:N", "sym:N", "product:SPEC+SPEC",
    "perm:[[...],[...]]", plus the aliases trivial, klein, a4, q8.
    """
    if isinstance(spec, str):
        spec = _parse_group_string(spec)
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ValueError(f"malformed group spec: {spec!r}")
    kind = spec["kind"]
    if kind == "cyclic":
        g = cyclic_group(int(spec["n"]))
    elif kind == "dihedral":
        g = dihedral_group(int(spec["n"]))
    elif kind == "symmetric":
        g = symmetric_group(int(spec["n"]))
    elif kind == "product":
        factors = [build_group(f, cap) for f in spec["factors"]]
        if not factors:
            raise ValueError("product needs at least one factor")
        g = factors[0]
        for f in factors[1:]:
            g = product_group(g, f)
    elif kind == "table":
        g = FiniteGroup(spec["table"], spec.get("names"))
    elif kind == "perm":
        g = perm_group(spec["generators"], cap)
    else:
        raise ValueError(f"unknown group kind: {kind!r}")
    if g.order > cap:
        raise ValueError(f"group order {g.order} exceeds cap {cap}")
    return g


def _parse_group_string(s: str) -> dict:
    s = s.strip()
    if s in _ALIASES:
        return _ALIASES[s]
    if ":" not in s:
        raise ValueError(f"malformed group spec string: {s!r}")
    kind, rest = s.split(":", 1)
    kind = kind.strip().lower()
    if kind in ("cyclic", "c"):
        return {"kind": "cyclic", "n": int(rest)}
    if kind in ("dihedral", "d"):
        return {"kind": "dihedral", "n": int(rest)}
    if kind in ("sym", "symmetric", "s"):
        return {"kind": "symmetric", "n": int(rest)}
    if kind in ("product", "prod"):
        return {"kind": "product", "factors": [_parse_group_string(p) for p in rest.split("+")]}
    if kind == "perm":
        return {"kind": "perm", "generators": json.loads(rest)}
    raise ValueError(f"unknown group kind in spec string: {s!r}")


# ---------------------------------------------------------- subgroup lattice


def closure(g: FiniteGroup, elems: Iterable[int]) -> frozenset[int]:
    """Smallest subgroup containing elems (finite, so closure under * suffices)."""
    seen = set(elems)
    seen.add(0)
    frontier = list(seen)
    while frontier:
        nxt = []
        for a in tuple(seen):
            for b in frontier:
                for c in (g.table[a][b], g.table[b][a]):
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
        frontier = nxt
    return frozenset(seen)


def subgroups(g: FiniteGroup) -> list[frozenset[int]]:
    """All subgroups, by join-closure starting from the cyclic subgroups."""
    return list(_subgroups_cached(g))


@lru_cache(maxsize=None)
def _subgroups_cached(g: FiniteGroup) -> tuple[frozenset[int], ...]:
    cyclics = {closure(g, [x]) for x in range(g.order)}
    subs: set[frozenset[int]] = {frozenset([0])} | cyclics
    work = list(subs)
    while work:
        h = work.pop()
        for c in cyclics:
            if c <= h:
                continue
            j = closure(g, h | c)
            if j not in subs:
                subs.add(j)
                work.append(j)
    return tuple(sorted(subs, key=lambda s: (len(s), tuple(sorted(s)))))


def conjugate_subgroup(g: FiniteGroup, h: Iterable[int], x: int) -> frozenset[int]:
    return frozenset(g.conj(x, e) for e in h)


def normalizer(g: FiniteGroup, h: Iterable[int]) -> frozenset[int]:
    hs = frozenset(h)
    return frozenset(x for x in range(g.order) if conjugate_subgroup(g, hs, x) == hs)


class SubgroupClass:
    __slots__ = ("representative", "conjugates", "normalizer", "weyl_order")

    def __init__(self, g: FiniteGroup, h: frozenset[int]):
        orbit = {conjugate_subgroup(g, h, x) for x in range(g.order)}
        self.conjugates: tuple[frozenset[int], ...] = tuple(
            sorted(orbit, key=lambda s: tuple(sorted(s)))
        )
        self.representative: frozenset[int] = self.conjugates[0]
        self.normalizer: frozenset[int] = normalizer(g, self.representative)
        assert len(self.normalizer) % len(self.representative) == 0
        self.weyl_order: int = len(self.normalizer) // len(self.representative)

    @property
    def label(self) -> tuple[int, ...]:
        return tuple(sorted(self.representative))

    def __repr__(self) -> str:
        return f"SubgroupClass(rep={self.label}, weyl={self.weyl_order})"


def subgroup_classes(g: FiniteGroup) -> list[SubgroupClass]:
    return list(_subgroup_classes_cached(g))


@lru_cache(maxsize=None)
def _subgroup_classes_cached(g: FiniteGroup) -> tuple[SubgroupClass, ...]:
    classes: dict[frozenset[int], SubgroupClass] = {}
    for h in subgroups(g):
        cls = SubgroupClass(g, h)
        classes.setdefault(cls.representative, cls)
    return tuple(
        sorted(classes.values(), key=lambda c: (len(c.representative), c.label))
    )


def left_cosets(g: FiniteGroup, h: frozenset[int], within: frozenset[int] | None = None) -> list[frozenset[int]]:
    """Left cosets xh (of h in the whole group or in a subgroup), sorted by least element."""
    ambient = sorted(within) if within is not None else range(g.order)
    seen: set[int] = set()
    cosets = []
    for x in ambient:
        if x in seen:
            continue
        coset = frozenset(g.table[x][e] for e in h)
        seen |= coset
        cosets.append(coset)
    return sorted(cosets, key=min)


def weyl_group(g: FiniteGroup, h: frozenset[int]) -> FiniteGroup:
    return weyl_group_with_cosets(g, h)[0]


def weyl_group_with_cosets(g: FiniteGroup, h: frozenset[int]) -> tuple[FiniteGroup, list[frozenset[int]]]:
    """N_G(h)/h as a Cayley table; cosets sorted by least element, so h itself is index 0."""
    if closure(g, h) != frozenset(h):
        raise ValueError("not a subgroup")
    n = normalizer(g, h)
    cosets = left_cosets(g, h, within=n)
    index = {c: i for i, c in enumerate(cosets)}
    lookup = {}
    for i, c in enumerate(cosets):
        for e in c:
            lookup[e] = i
    k = len(cosets)
    table = [[0] * k for _ in range(k)]
    for i, ci in enumerate(cosets):
        ri = min(ci)
        for j, cj in enumerate(cosets):
            table[i][j] = lookup[g.table[ri][min(cj)]]
    names = [str(min(c)) for c in cosets]
    wg = FiniteGroup(table, names)
    assert index[frozenset(h)] == 0
    return wg, cosets


def fixed_point_count(g: FiniteGroup, h: Iterable[int], k: Iterable[int]) -> int:
    """|(G/K)^H| = number of cosets xK with x^-1 H x contained in K."""
    hs = frozenset(h)
    ks = frozenset(k)
    count = 0
    for coset in left_cosets(g, ks):
        x = min(coset)
        xi = g.inv[x]
        if all(g.table[g.table[xi][e]][x] in ks for e in hs):
            count += 1
    return count


class MarksMatrix:
    """Fixed-point counts |(G/K)^H|: row (H), column (K), canonical class order."""

    __slots__ = ("matrix", "classes")

    def __init__(self, matrix: QMatrix, classes: list[SubgroupClass]):
        self.matrix = matrix
        self.classes = classes

    def __repr__(self) -> str:
        return f"MarksMatrix({self.matrix!r})"


def table_of_marks(g: FiniteGroup) -> MarksMatrix:
    classes = subgroup_classes(g)
    labels = [c.label for c in classes]
    rows = [
        [fixed_point_count(g, ch.representative, ck.representative) for ck in classes]
        for ch in classes
    ]
    return MarksMatrix(QMatrix.from_rows(rows, labels, labels), classes)


# ------------------------------------------------------- nu and congruences


@lru_cache(maxsize=None)
def nu_matrix(g: FiniteGroup) -> QMatrix:
    """Integer matrix D mubar2 D^-1 over subgroup classes, D = diag(|W_G H|).

    Non-integrality would mean the orbit-category Moebius data is wrong, so it
    is an internal assertion, not an input error.
    """
    from .moebius import mu_bar2_chains
    from .orbitcat import orbit_category

    oc = orbit_category(g)
    classes = oc.classes
    labels = [c.label for c in classes]
    mu = mu_bar2_chains(oc.category)
    object_order = [oc.object_of_class(i) for i in range(len(classes))]
    mu = mu.reorder(object_order, object_order)
    weyl = [c.weyl_order for c in classes]
    ent = []
    for i in range(len(classes)):
        for j in range(len(classes)):
            v = Fraction(weyl[i]) * mu.get(i, j) / weyl[j]
            assert v.denominator == 1, f"nu matrix entry not integral at ({i},{j}): {v}"
            ent.append(v)
    return QMatrix(len(classes), len(classes), ent, labels, labels)


def nu_matrix_via_chains(g: FiniteGroup) -> QMatrix:
    """Cross-check route for nu: alternating sums over chains of subgroup classes.

    Entry (row (K), col (H)) = sum over l >= 0 of (-1)^l times the number-of-
    orbit products Prod_{t=1..l} |W(H_t) \\ mor(G/H_{t-1}, G/H_t)| over chains
    (K) = (H_0) < ... < (H_l) = (H). Orbit counts are computed directly from
    coset actions, not by dividing cardinalities.
    """
    classes = subgroup_classes(g)
    labels = [c.label for c in classes]
    k = len(classes)
    # strict subconjugacy: (A) < (B) iff A is conjugate into B and (A) != (B)
    reps = [c.representative for c in classes]
    less = [[False] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i != j and fixed_point_count(g, reps[i], reps[j]) > 0:
                less[i][j] = True

    def orbit_count(i: int, j: int) -> int:
        # cosets xB fixed by A, modulo right translation by N_G(B)
        a, b = reps[i], reps[j]
        nb = sorted(normalizer(g, b))
        fixed = []
        for coset in left_cosets(g, b):
            x = min(coset)
            xi = g.inv[x]
            if all(g.table[g.table[xi][e]][x] in b for e in a):
                fixed.append(coset)
        fixed_set = {c: c for c in fixed}
        seen: set[frozenset[int]] = set()
        orbits = 0
        for c in fixed:
            if c in seen:
                continue
            orbits += 1
            stack = [c]
            seen.add(c)
            while stack:
                cur = stack.pop()
                x = min(cur)
                for n in nb:
                    img = frozenset(g.table[g.table[x][n]][e] for e in b)
                    img = fixed_set[img]
                    if img not in seen:
                        seen.add(img)
                        stack.append(img)
        return orbits

    ocount: dict[tuple[int, int], int] = {}

    def oc(i, j):
        if (i, j) not in ocount:
            ocount[(i, j)] = orbit_count(i, j)
        return ocount[(i, j)]

    ent = [[Fraction(0)] * k for _ in range(k)]
    for start in range(k):
        # DFS over strictly increasing chains from (K)=start
        stack = [(start, 1, (start,))]
        while stack:
            cur, prod, chain = stack.pop()
            l = len(chain) - 1
            sign = -1 if l % 2 else 1
            ent[start][cur] += sign * prod
            for nxt in range(k):
                if less[cur][nxt]:
                    stack.append((nxt, prod * oc(cur, nxt), chain + (nxt,)))
    return QMatrix.from_rows(ent, labels, labels)


def burnside_check(g: FiniteGroup, xi: Sequence[int]) -> bool:
    """True iff nu(xi) vanishes mod |W_G H| at every class (H)."""
    classes = subgroup_classes(g)
    if len(xi) != len(classes):
        raise ValueError(f"xi must have one entry per subgroup class ({len(classes)})")
    nu = nu_matrix(g)
    for i, cls in enumerate(classes):
        v = sum(nu.get(i, j) * int(xi[j]) for j in range(len(classes)))
        assert v.denominator == 1
        if v.numerator % cls.weyl_order != 0:
            return False
    return True
