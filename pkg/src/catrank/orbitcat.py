"""Orbit categories of finite groups and equivariant cell censuses."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exactq import QVector
from .fincat import FiniteCategory, _build
from .grouptheory import (
    FiniteGroup,
    SubgroupClass,
    build_group,
    fixed_point_count,
    left_cosets,
    subgroup_classes,
)
from .moebius import omega_bar2


class OrbitCategory:
    """The category of homogeneous spaces G/H with equivariant maps.

    One object per conjugacy class of subgroups; the morphisms G/H -> G/K are
    the cosets gK with g^-1 H g inside K, acting by right translation."""

    __slots__ = ("category", "classes", "class_of_object", "coset_of_morphism")

    def __init__(self, category, classes, class_of_object, coset_of_morphism):
        self.category = category
        self.classes = classes
        self.class_of_object = class_of_object
        self.coset_of_morphism = coset_of_morphism

    def object_of_class(self, i: int) -> str:
        return f"G/{i}"

    def __repr__(self) -> str:
        return f"OrbitCategory({len(self.classes)} classes, {self.category.n_morphisms} maps)"


@lru_cache(maxsize=None)
def orbit_category(g: FiniteGroup, cap: int = 64) -> OrbitCategory:
    """Build Or(G) with one object per subgroup class.

    A coset g0*K qualifies as a map G/H -> G/K iff g0^-1 H g0 is inside K;
    composition follows the right-translation law R_g2 o R_g1 = R_(g1 g2)."""
    if g.order > cap:
        raise ValueError(f"orbit category cap exceeded: |G| = {g.order} > {cap}")
    classes = tuple(subgroup_classes(g))
    reps = [c.representative for c in classes]
    objects = [f"G/{i}" for i in range(len(classes))]

    def qualifies(h: frozenset[int], coset: frozenset[int], k: frozenset[int]) -> bool:
        x = min(coset)
        xi = g.inv[x]
        return all(g.table[g.table[xi][e]][x] in k for e in h)

    morphs = []
    for i, h in enumerate(reps):
        for j, k in enumerate(reps):
            for coset in left_cosets(g, k):
                if qualifies(h, coset, k):
                    morphs.append((i, j, coset))

    def identity_of(i):
        return (i, i, reps[i])

    def compose(gd, fd):
        # fd: G/H0 -> G/H1 as g1*H1, gd: G/H1 -> G/H2 as g2*H2; result g1*g2*H2
        p = g.table[min(fd[2])][min(gd[2])]
        return (fd[0], gd[1], frozenset(g.table[p][e] for e in reps[gd[1]]))

    cat = _build(objects, morphs, identity_of, compose)

    # recover the descriptor attached to each morphism id for the dictionaries
    ids = [identity_of(i) for i in range(len(objects))]
    ordered = ids + [d for d in morphs if d not in ids]
    class_of_object = {objects[i]: classes[i] for i in range(len(objects))}
    coset_of_morphism = {m: ordered[m][2] for m in range(len(ordered))}
    return OrbitCategory(cat, classes, class_of_object, coset_of_morphism)


# ------------------------------------------------------------ cell censuses


class GCWComplex:
    """A finite equivariant cell census: dimensions and stabilizer classes.

    Attaching maps are irrelevant to every invariant computed here, so only
    the list of (dim, stabilizer class index) pairs is kept."""

    __slots__ = ("group", "classes", "cells")

    def __init__(self, group: FiniteGroup, cells):
        self.group = group
        self.classes = tuple(subgroup_classes(group))
        norm = []
        for dim, stab in cells:
            if not isinstance(dim, int) or dim < 0:
                raise ValueError(f"cell dimension must be a nonnegative integer: {dim!r}")
            norm.append((dim, self._class_index(stab)))
        self.cells = tuple(norm)

    def _class_index(self, stab) -> int:
        members = frozenset(stab)
        if not members or not members <= set(range(self.group.order)):
            raise ValueError(f"stabilizer is not a subgroup: {sorted(stab)!r}")
        for a in members:
            for b in members:
                if self.group.table[a][b] not in members:
                    raise ValueError(f"stabilizer is not a subgroup: {sorted(stab)!r}")
        for i, cls in enumerate(self.classes):
            if members in cls.conjugates:
                return i
        raise AssertionError("subgroup missed every conjugacy class")

    def __repr__(self) -> str:
        return f"GCWComplex(|G|={self.group.order}, {len(self.cells)} cells)"


def gcw_from_json(doc: dict) -> GCWComplex:
    """Parse {"group": spec, "cells": [{"dim": n, "stabilizer": [elements]}]}."""
    if not isinstance(doc, dict) or "group" not in doc or "cells" not in doc:
        raise ValueError("cell complex document needs 'group' and 'cells'")
    group = build_group(doc["group"])
    cells = []
    for rec in doc["cells"]:
        if not isinstance(rec, dict) or "dim" not in rec or "stabilizer" not in rec:
            raise ValueError(f"malformed cell record: {rec!r}")
        cells.append((rec["dim"], rec["stabilizer"]))
    return GCWComplex(group, cells)


def chi_G(x: GCWComplex) -> QVector:
    """Signed count of cells per stabilizer class."""
    counts = [0] * len(x.classes)
    for dim, ci in x.cells:
        counts[ci] += (-1) ** dim
    return QVector([Fraction(c) for c in counts], labels=[c.label for c in x.classes])


def fixed_point_euler(x: GCWComplex, h) -> int:
    """Euler characteristic of the H-fixed subcomplex: each cell with
    stabilizer class (K) contributes (-1)^dim |(G/K)^H|."""
    if isinstance(h, SubgroupClass):
        h_rep = h.representative
    elif isinstance(h, int):
        h_rep = x.classes[h].representative
    else:
        h_rep = x.classes[GCWComplex._class_index(x, h)].representative
    total = 0
    for dim, ci in x.cells:
        total += (-1) ** dim * fixed_point_count(x.group, h_rep, x.classes[ci].representative)
    return total


def verify_omega_relation(x: GCWComplex):
    """Check omega_bar2(Or(G)) applied to chi_G(X) against the vector of
    fixed-point Euler characteristics divided by Weyl group orders.

    Returns (equal, left side, right side), both sides in subgroup class order."""
    oc = orbit_category(x.group)
    om = omega_bar2(oc.category)
    labels = [c.label for c in x.classes]
    v = chi_G(x)
    # omega is indexed by iso classes of Or(G); translate class order <-> object order
    obj_order = [oc.object_of_class(i) for i in range(len(x.classes))]
    v_iso = QVector([v[obj_order.index(lbl)] for lbl in om.col_labels], labels=om.col_labels)
    image = om.mul_vec(v_iso)
    lhs = QVector([image.at(obj) for obj in obj_order], labels=labels)
    rhs = QVector(
        [Fraction(fixed_point_euler(x, cls), cls.weyl_order) for cls in x.classes],
        labels=labels,
    )
    equal = all(lhs[i] == rhs[i] for i in range(len(labels)))
    return equal, lhs, rhs
