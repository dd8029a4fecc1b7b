"""Rank-valued Moebius inversion and Euler characteristics for finite EI
categories.

The isomorphism classes of an EI category are partially ordered by
"there is a morphism from here to there".  Strictly increasing chains of
classes carry a set S(c): tuples (f_l, ..., f_1) of morphisms along the chain,
divided by the automorphism groups of the interior objects acting between
consecutive slots.  The automorphisms of the two endpoint objects still act on
the quotient, and all the invariants below are signed sums of orbit counts of
those actions:

  - omega_bar2: |mor(y, x)| / |aut y|, unit upper triangular.
  - mu_bar2_chains: sum over chains of +/- |S(c)| / |aut y|; inverse to
    omega_bar2 whenever the category is free.
  - euler_characteristics: per-class functorial values (double cosets of S(c),
    integers) and their rank-weighted counterparts (left orbits / |aut y|),
    plus the totals.
  - integral_moebius: the integer zeta/Moebius pair for skeletal categories
    with trivial endomorphisms.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterator, Sequence

from .exactq import QMatrix, QVector
from .fincat import FiniteCategory, classify, iso_classes


class IsoPoset:
    """Iso classes of an EI category, in canonical order: ascending by
    (longest chain strictly below, representative object index).  The
    representative of a class is its least-index object."""

    __slots__ = ("cat", "labels", "members", "reps", "leq", "lengths")

    def __init__(self, cat, labels, members, reps, leq, lengths):
        self.cat = cat
        self.labels = labels
        self.members = members
        self.reps = reps
        self.leq = leq
        self.lengths = lengths

    @property
    def size(self) -> int:
        return len(self.labels)

    def aut_order(self, i: int) -> int:
        return len(self.cat.aut(self.reps[i]))

    def class_of(self, obj) -> int:
        for i, mem in enumerate(self.members):
            if obj in mem:
                return i
        raise KeyError(obj)

    def __repr__(self) -> str:
        return f"IsoPoset({self.size} classes)"


def iso_order(cat: FiniteCategory) -> IsoPoset:
    for m in range(cat.n_morphisms):
        if cat.dom[m] == cat.cod[m] and not cat.is_iso(m):
            raise ValueError(
                "iso class order needs an EI category; "
                f"morphism {m} is a non-invertible endomorphism"
            )
    classes = iso_classes(cat)
    reps = [cat.obj_index(c[0]) for c in classes]
    k = len(classes)
    leq = [[bool(cat.hom(reps[i], reps[j])) for j in range(k)] for i in range(k)]
    for i in range(k):
        for j in range(k):
            if i != j:
                assert not (leq[i][j] and leq[j][i]), "EI forces antisymmetry"

    lengths = [-1] * k

    def length(i):
        if lengths[i] < 0:
            below = [length(j) for j in range(k) if j != i and leq[j][i]]
            lengths[i] = 1 + max(below) if below else 0
        return lengths[i]

    for i in range(k):
        length(i)
    order = sorted(range(k), key=lambda i: (lengths[i], reps[i]))
    return IsoPoset(
        cat,
        tuple(cat.objects[reps[i]] for i in order),
        tuple(tuple(classes[i]) for i in order),
        tuple(reps[i] for i in order),
        tuple(tuple(leq[i][j] for j in order) for i in order),
        tuple(lengths[i] for i in order),
    )


class Chain:
    """A strictly increasing tuple of class indices in an IsoPoset."""

    __slots__ = ("classes",)

    def __init__(self, classes: Sequence[int]):
        self.classes = tuple(classes)

    @property
    def length(self) -> int:
        return len(self.classes) - 1

    def __repr__(self) -> str:
        return f"Chain{self.classes}"


def enumerate_chains(
    poset: IsoPoset,
    start: int,
    end: int | None = None,
    max_length: int | None = None,
) -> Iterator[Chain]:
    """All strictly increasing chains from start (to end, if given)."""
    cap = poset.size - 1 if max_length is None else max_length

    def walk(prefix):
        last = prefix[-1]
        if end is None or last == end:
            yield Chain(prefix)
        if len(prefix) - 1 >= cap:
            return
        for j in range(poset.size):
            if j != last and poset.leq[last][j]:
                if end is not None and not (j == end or poset.leq[j][end]):
                    continue
                yield from walk(prefix + (j,))

    if end is not None and not (start == end or poset.leq[start][end]):
        return
    yield from walk((start,))


class ChainBiset:
    """S(c) for a chain c: tuples (f_l, ..., f_1) of morphisms between the
    class representatives, modulo the interior automorphism actions, with the
    residual left aut(top) and right aut(bottom) actions."""

    __slots__ = ("poset", "chain", "elements", "_find", "_left", "_right")

    def __init__(self, poset: IsoPoset, chain: Chain):
        self.poset = poset
        self.chain = chain
        cat = poset.cat
        reps = [poset.reps[c] for c in chain.classes]
        l = chain.length
        if l == 0:
            raw = [(m,) for m in cat.hom(reps[0], reps[0])]
        else:
            slots = [cat.hom(reps[i - 1], reps[i]) for i in range(l, 0, -1)]
            raw = list(itertools.product(*slots))

        parent = {t: t for t in raw}

        def find(t):
            while parent[t] != t:
                parent[t] = parent[parent[t]]
                t = parent[t]
            return t

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                # keep the lexicographically least tuple as the root
                lo, hi = (ra, rb) if ra < rb else (rb, ra)
                parent[hi] = lo

        for t in raw:
            for i in range(1, l):
                hi = l - i - 1  # slot of f_{i+1}
                lo = l - i      # slot of f_i
                for a in cat.aut(reps[i]):
                    ainv = cat.inverse(a)
                    t2 = list(t)
                    t2[hi] = cat.compose(t[hi], a)
                    t2[lo] = cat.compose(ainv, t[lo])
                    union(t, tuple(t2))

        self._find = {t: find(t) for t in raw}
        self.elements = tuple(sorted(set(self._find.values())))
        self._left = tuple(cat.aut(reps[-1]))
        self._right = tuple(cat.aut(reps[0]))

    @property
    def size(self) -> int:
        return len(self.elements)

    def act_left(self, a: int, elem: tuple) -> tuple:
        cat = self.poset.cat
        raw = (cat.compose(a, elem[0]),) + elem[1:]
        return self._find[raw]

    def act_right(self, elem: tuple, b: int) -> tuple:
        cat = self.poset.cat
        raw = elem[:-1] + (cat.compose(elem[-1], b),)
        return self._find[raw]

    def left_orbit_count(self) -> int:
        return self._orbit_count(use_left=True, use_right=False)

    def double_orbit_count(self) -> int:
        return self._orbit_count(use_left=True, use_right=True)

    def _orbit_count(self, use_left: bool, use_right: bool) -> int:
        todo = set(self.elements)
        count = 0
        while todo:
            count += 1
            seed = todo.pop()
            frontier = [seed]
            while frontier:
                e = frontier.pop()
                nbrs = []
                if use_left:
                    nbrs += [self.act_left(a, e) for a in self._left]
                if use_right:
                    nbrs += [self.act_right(e, b) for b in self._right]
                for n in nbrs:
                    if n in todo:
                        todo.remove(n)
                        frontier.append(n)
        return count


def chain_biset(poset: IsoPoset, chain: Chain) -> ChainBiset:
    return ChainBiset(poset, chain)


def double_coset_count(biset: ChainBiset) -> int:
    return biset.double_orbit_count()


def perm_module_dim(group_order: int, action: Sequence[Sequence[int]]) -> Fraction:
    """Rank of the permutation module of a group action, |T| / |G|.

    action[g][t] is the image of t under the g-th group element; the
    orbit-stabilizer identity sum(1/|stab|) over orbit representatives is
    checked against the returned value.
    """
    assert len(action) == group_order and group_order > 0
    if not action[0]:
        return Fraction(0)
    size = len(action[0])
    todo = set(range(size))
    acc = Fraction(0)
    while todo:
        t = todo.pop()
        orbit = {t}
        frontier = [t]
        while frontier:
            e = frontier.pop()
            for g in range(group_order):
                img = action[g][e]
                if img not in orbit:
                    orbit.add(img)
                    frontier.append(img)
        todo -= orbit
        stab = sum(1 for g in range(group_order) if action[g][t] == t)
        assert stab * len(orbit) == group_order
        acc += Fraction(1, stab)
    assert acc == Fraction(size, group_order)
    return acc


# ------------------------------------------------------------------ matrices


def omega_bar2(cat: FiniteCategory) -> QMatrix:
    """Entry at (row y-class, column x-class): |mor(y, x)| / |aut y|."""
    poset = iso_order(cat)
    k = poset.size
    rows = [
        [
            Fraction(len(poset.cat.hom(poset.reps[i], poset.reps[j])), poset.aut_order(i))
            for j in range(k)
        ]
        for i in range(k)
    ]
    return QMatrix.from_rows(rows, poset.labels, poset.labels)


def mu_bar2_chains(cat: FiniteCategory, max_chain_length: int | None = None) -> QMatrix:
    """Entry at (y-class, x-class): alternating sum of |S(c)| / |aut y| over
    the chains c from y-class to x-class."""
    poset = iso_order(cat)
    k = poset.size
    rows = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        ai = poset.aut_order(i)
        for j in range(k):
            total = Fraction(0)
            for chain in enumerate_chains(poset, i, end=j, max_length=max_chain_length):
                s = ChainBiset(poset, chain).size
                total += Fraction((-1) ** chain.length * s, ai)
            rows[i][j] = total
    return QMatrix.from_rows(rows, poset.labels, poset.labels)


def integral_moebius(cat: FiniteCategory) -> tuple[QMatrix, QMatrix]:
    """The integer incidence pair (A, B) for a skeletal category with trivial
    endomorphisms: A counts morphisms, B is the alternating count of
    nondegenerate paths, and the two are mutually inverse."""
    rep = classify(cat)
    if not (rep.is_skeletal and rep.has_trivial_endomorphisms):
        raise ValueError(
            "integral Moebius inversion needs a skeletal category with "
            "trivial endomorphisms"
        )
    poset = iso_order(cat)
    k = poset.size
    a_rows = [
        [Fraction(len(cat.hom(poset.reps[j], poset.reps[i]))) for j in range(k)]
        for i in range(k)
    ]
    # nonidentity morphism counts, row = target
    n = [[len(cat.hom(poset.reps[j], poset.reps[i])) - (i == j) for j in range(k)]
         for i in range(k)]
    b = [[Fraction(i == j) for j in range(k)] for i in range(k)]
    power = [row[:] for row in n]
    sign = -1
    while any(any(row) for row in power):
        for i in range(k):
            for j in range(k):
                b[i][j] += sign * power[i][j]
        power = [
            [sum(n[i][t] * power[t][j] for t in range(k)) for j in range(k)]
            for i in range(k)
        ]
        sign = -sign
    labels = poset.labels
    return (
        QMatrix.from_rows(a_rows, labels, labels),
        QMatrix.from_rows(b, labels, labels),
    )


# --------------------------------------------------------------------- euler


class EulerReport:
    __slots__ = ("labels", "chi_f", "chi", "chi_f2", "chi2")

    def __init__(self, labels, chi_f: QVector, chi, chi_f2: QVector, chi2):
        self.labels = labels
        self.chi_f = chi_f
        self.chi = chi
        self.chi_f2 = chi_f2
        self.chi2 = chi2

    def __repr__(self) -> str:
        return f"EulerReport(chi={self.chi}, chi2={self.chi2})"

    def to_json(self) -> dict:
        from .exactq import rat_str

        return {
            "classes": [str(x) for x in self.labels],
            "chi_functorial": [rat_str(v) for v in self.chi_f.entries],
            "chi": rat_str(self.chi),
            "chi_functorial_l2": [rat_str(v) for v in self.chi_f2.entries],
            "chi_l2": rat_str(self.chi2),
        }


def euler_characteristics(cat: FiniteCategory, max_chain_length: int | None = None) -> EulerReport:
    """Functorial and rank-weighted Euler characteristics of a finite EI
    category, by alternating orbit counts over chains out of each class."""
    poset = iso_order(cat)
    k = poset.size
    chi_f = []
    chi_f2 = []
    for i in range(k):
        ai = poset.aut_order(i)
        acc_f = 0
        acc_f2 = Fraction(0)
        for chain in enumerate_chains(poset, i, max_length=max_chain_length):
            b = ChainBiset(poset, chain)
            sign = (-1) ** chain.length
            acc_f += sign * b.double_orbit_count()
            acc_f2 += Fraction(sign * b.left_orbit_count(), ai)
        chi_f.append(Fraction(acc_f))
        chi_f2.append(acc_f2)
    return EulerReport(
        poset.labels,
        QVector(chi_f, poset.labels),
        sum(chi_f, Fraction(0)),
        QVector(chi_f2, poset.labels),
        sum(chi_f2, Fraction(0)),
    )


def chi_f2_via_eta(cat: FiniteCategory, max_chain_length: int | None = None) -> QVector:
    """The rank-weighted functorial values as mu_bar2 applied to the vector
    1/|aut|; agrees with euler_characteristics for free EI categories."""
    rep = classify(cat)
    if not rep.is_ei:
        raise ValueError("requires an EI category")
    if not rep.is_free:
        raise ValueError("requires a free EI category")
    mu = mu_bar2_chains(cat, max_chain_length)
    poset = iso_order(cat)
    eta = QVector([Fraction(1, poset.aut_order(i)) for i in range(poset.size)], poset.labels)
    return mu.mul_vec(eta)


def nerve_euler_characteristic(cat: FiniteCategory) -> int:
    """Alternating count of nondegenerate simplex chains of the nerve.

    Defined only when chains of nonidentity morphisms cannot cycle; a category
    with a loop of nonidentity morphisms has simplices in every dimension.
    """
    nonid = [m for m in range(cat.n_morphisms) if not cat.is_identity(m)]
    adj = {x: set() for x in range(cat.n_objects)}
    for m in nonid:
        adj[cat.dom[m]].add(cat.cod[m])
    color = {}

    def cyclic(x):
        color[x] = 1
        for y in adj[x]:
            c = color.get(y, 0)
            if c == 1 or (c == 0 and cyclic(y)):
                return True
        color[x] = 2
        return False

    for x in range(cat.n_objects):
        if color.get(x, 0) == 0 and cyclic(x):
            raise ValueError(
                "nerve is infinite: nonidentity morphisms form a cycle"
            )

    chi = cat.n_objects
    counts = {m: 1 for m in nonid}
    sign = -1
    while counts:
        chi += sign * sum(counts.values())
        nxt = {}
        for g in nonid:
            total = sum(c for f, c in counts.items() if cat.cod[f] == cat.dom[g])
            if total:
                nxt[g] = total
        counts = nxt
        sign = -sign
    return chi
