"""Finite categories as explicit tables: validation, classification predicates,
and constructions (opposite, product, coproduct, delooping, poset, biset,
full subcategory, skeleton), plus functor data, coverings and isofibrations.

A category is stored as: a tuple of object ids (strings by convention, so JSON
round-trips), per-morphism dom/cod object indices, an identity morphism per
object, and a composition dict keyed by (g, f) for exactly the composable
pairs (cod f = dom g). Morphism ids are dense 0..m-1 and constructors always
put the identities first, in object order, so golden outputs stay stable.
"""

from __future__ import annotations

from typing import Any, Callable, Iterable, Sequence

from .grouptheory import FiniteGroup


class FiniteCategory:
    __slots__ = ("objects", "dom", "cod", "identity", "compose_table",
                 "_obj_index", "_hom", "_inverse", "_from_obj")

    def __init__(
        self,
        objects: Sequence,
        dom: Sequence[int],
        cod: Sequence[int],
        identity: Sequence[int],
        compose_table: dict[tuple[int, int], int],
    ):
        self.objects: tuple = tuple(objects)
        self.dom: tuple[int, ...] = tuple(dom)
        self.cod: tuple[int, ...] = tuple(cod)
        self.identity: tuple[int, ...] = tuple(identity)
        self.compose_table: dict[tuple[int, int], int] = dict(compose_table)
        if len(set(self.objects)) != len(self.objects):
            raise ValueError("duplicate object ids")
        if len(self.dom) != len(self.cod):
            raise ValueError("dom/cod length mismatch")
        m = len(self.dom)
        n = len(self.objects)
        if len(self.identity) != n:
            raise ValueError("identity map must cover every object")
        for x in list(self.dom) + list(self.cod):
            if not (0 <= x < n):
                raise ValueError("morphism endpoint references unknown object")
        for mid in self.identity:
            if not (0 <= mid < m):
                raise ValueError("identity references unknown morphism")
        for (gid, fid), cid in self.compose_table.items():
            if not (0 <= gid < m and 0 <= fid < m and 0 <= cid < m):
                raise ValueError("composition references unknown morphism")
        self._obj_index = {o: i for i, o in enumerate(self.objects)}
        self._hom: dict[tuple[int, int], tuple[int, ...]] | None = None
        self._inverse: tuple | None = None
        self._from_obj: tuple[tuple[int, ...], ...] | None = None

    # ------------------------------------------------------------- basics

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_morphisms(self) -> int:
        return len(self.dom)

    def obj_index(self, obj) -> int:
        return self._obj_index[obj]

    def is_identity(self, m: int) -> bool:
        return self.identity[self.dom[m]] == m or self.identity[self.cod[m]] == m

    def compose(self, g: int, f: int) -> int:
        """g after f; raises KeyError when the pair is not composable."""
        return self.compose_table[(g, f)]

    def hom(self, i: int, j: int) -> tuple[int, ...]:
        """Morphism ids from object index i to object index j."""
        if self._hom is None:
            hom: dict[tuple[int, int], list[int]] = {}
            for m in range(self.n_morphisms):
                hom.setdefault((self.dom[m], self.cod[m]), []).append(m)
            self._hom = {k: tuple(v) for k, v in hom.items()}
        return self._hom.get((i, j), ())

    def morphisms_from(self, i: int) -> tuple[int, ...]:
        if self._from_obj is None:
            buckets: list[list[int]] = [[] for _ in range(self.n_objects)]
            for m in range(self.n_morphisms):
                buckets[self.dom[m]].append(m)
            self._from_obj = tuple(tuple(b) for b in buckets)
        return self._from_obj[i]

    def inverse(self, m: int) -> int | None:
        if self._inverse is None:
            inv: list[int | None] = [None] * self.n_morphisms
            for f in range(self.n_morphisms):
                if inv[f] is not None:
                    continue
                x, y = self.dom[f], self.cod[f]
                for g in self.hom(y, x):
                    if (
                        self.compose_table.get((g, f)) == self.identity[x]
                        and self.compose_table.get((f, g)) == self.identity[y]
                    ):
                        inv[f] = g
                        inv[g] = f
                        break
            self._inverse = tuple(inv)
        return self._inverse[m]

    def is_iso(self, m: int) -> bool:
        return self.inverse(m) is not None

    def aut(self, i: int) -> tuple[int, ...]:
        """Automorphisms of the object with index i."""
        return tuple(m for m in self.hom(i, i) if self.is_iso(m))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteCategory)
            and self.objects == other.objects
            and self.dom == other.dom
            and self.cod == other.cod
            and self.identity == other.identity
            and self.compose_table == other.compose_table
        )

    def __hash__(self):
        return hash((self.objects, self.dom, self.cod, self.identity,
                     tuple(sorted(self.compose_table.items()))))

    def __repr__(self) -> str:
        return f"FiniteCategory({self.n_objects} objects, {self.n_morphisms} morphisms)"


# ------------------------------------------------------------------ validate


def validate(cat: FiniteCategory) -> list[dict]:
    """All category axioms, as a list of violation records (empty iff valid)."""
    out: list[dict] = []
    m = cat.n_morphisms
    for x in range(cat.n_objects):
        e = cat.identity[x]
        if cat.dom[e] != x or cat.cod[e] != x:
            out.append({"kind": "identity_endpoints", "object": cat.objects[x], "morphism": e})
    composable = {(g, f) for f in range(m) for g in range(m) if cat.cod[f] == cat.dom[g]}
    for key in cat.compose_table:
        if key not in composable:
            out.append({"kind": "extra_composite", "pair": list(key)})
    for key in sorted(composable):
        if key not in cat.compose_table:
            out.append({"kind": "missing_composite", "pair": list(key)})
    if out:
        # endpoint or coverage problems make the remaining checks unreliable
        return out
    for (g, f), c in sorted(cat.compose_table.items()):
        if cat.dom[c] != cat.dom[f] or cat.cod[c] != cat.cod[g]:
            out.append({"kind": "composite_endpoints", "pair": [g, f], "composite": c})
    if out:
        return out
    for f in range(m):
        if cat.compose_table[(cat.identity[cat.cod[f]], f)] != f:
            out.append({"kind": "identity_law", "side": "left", "morphism": f})
        if cat.compose_table[(f, cat.identity[cat.dom[f]])] != f:
            out.append({"kind": "identity_law", "side": "right", "morphism": f})
    for (g, f), gf in cat.compose_table.items():
        for h in cat.morphisms_from(cat.cod[g]):
            if cat.compose_table[(h, gf)] != cat.compose_table[(cat.compose_table[(h, g)], f)]:
                out.append({"kind": "associativity", "triple": [h, g, f]})
    return out


# ---------------------------------------------------------------- predicates


class PredicateReport:
    __slots__ = (
        "is_ei",
        "is_directly_finite",
        "is_cauchy_complete",
        "is_free",
        "is_skeletal",
        "is_groupoid",
        "is_connected_groupoid",
        "has_trivial_endomorphisms",
        "witnesses",
    )

    def __init__(self, **kw):
        for name in self.__slots__:
            setattr(self, name, kw[name])

    def flags(self) -> dict[str, bool]:
        return {name: getattr(self, name) for name in self.__slots__ if name != "witnesses"}

    def __repr__(self) -> str:
        on = [k for k, v in self.flags().items() if v]
        return f"PredicateReport({', '.join(on) or 'none'})"

    def to_json(self) -> dict:
        doc: dict[str, Any] = dict(self.flags())
        doc["witnesses"] = {k: list(v) for k, v in self.witnesses.items()}
        return doc


def classify(cat: FiniteCategory) -> PredicateReport:
    """Exhaustive predicate checks; witnesses record a counterexample per failed flag."""
    wit: dict[str, tuple] = {}

    is_ei = True
    for m in range(cat.n_morphisms):
        if cat.dom[m] == cat.cod[m] and not cat.is_iso(m):
            is_ei = False
            wit["is_ei"] = (m,)
            break

    is_df = True
    for u in range(cat.n_morphisms):
        x, y = cat.dom[u], cat.cod[u]
        for v in cat.hom(y, x):
            if cat.compose_table[(v, u)] == cat.identity[x] and cat.compose_table[(u, v)] != cat.identity[y]:
                is_df = False
                wit["is_directly_finite"] = (u, v)
                break
        if not is_df:
            break

    is_cc = True
    for p in range(cat.n_morphisms):
        x = cat.dom[p]
        if cat.cod[p] != x or cat.compose_table[(p, p)] != p:
            continue
        split = False
        for z in range(cat.n_objects):
            for i in cat.hom(z, x):
                for r in cat.hom(x, z):
                    if cat.compose_table[(r, i)] == cat.identity[z] and cat.compose_table[(i, r)] == p:
                        split = True
                        break
                if split:
                    break
            if split:
                break
        if not split:
            is_cc = False
            wit["is_cauchy_complete"] = (p,)
            break

    is_free = True
    for y in range(cat.n_objects):
        auts = [a for a in cat.aut(y) if a != cat.identity[y]]
        if not auts:
            continue
        for x in range(cat.n_objects):
            for f in cat.hom(x, y):
                for a in auts:
                    if cat.compose_table[(a, f)] == f:
                        is_free = False
                        wit["is_free"] = (a, f)
                        break
                if not is_free:
                    break
            if not is_free:
                break
        if not is_free:
            break

    is_skeletal = True
    for m in range(cat.n_morphisms):
        if cat.dom[m] != cat.cod[m] and cat.is_iso(m):
            is_skeletal = False
            wit["is_skeletal"] = (m,)
            break

    is_groupoid = True
    for m in range(cat.n_morphisms):
        if not cat.is_iso(m):
            is_groupoid = False
            wit["is_groupoid"] = (m,)
            break

    is_cg = is_groupoid
    if is_groupoid:
        for i in range(cat.n_objects):
            for j in range(cat.n_objects):
                if not cat.hom(i, j):
                    is_cg = False
                    wit["is_connected_groupoid"] = (cat.objects[i], cat.objects[j])
                    break
            if not is_cg:
                break
    else:
        wit["is_connected_groupoid"] = wit["is_groupoid"]

    triv = True
    for x in range(cat.n_objects):
        endos = cat.hom(x, x)
        if len(endos) != 1:
            triv = False
            nonid = next(m for m in endos if m != cat.identity[x])
            wit["has_trivial_endomorphisms"] = (nonid,)
            break

    return PredicateReport(
        is_ei=is_ei,
        is_directly_finite=is_df,
        is_cauchy_complete=is_cc,
        is_free=is_free,
        is_skeletal=is_skeletal,
        is_groupoid=is_groupoid,
        is_connected_groupoid=is_cg,
        has_trivial_endomorphisms=triv,
        witnesses=wit,
    )


def has_nonidentity_idempotent(cat: FiniteCategory) -> bool:
    for p in range(cat.n_morphisms):
        if (
            cat.dom[p] == cat.cod[p]
            and cat.compose_table[(p, p)] == p
            and p != cat.identity[cat.dom[p]]
        ):
            return True
    return False


# -------------------------------------------------------------- iso classes


def iso_classes(cat: FiniteCategory) -> list[list]:
    """Partition of objects by isomorphism; classes ordered by least member."""
    parent = list(range(cat.n_objects))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for m in range(cat.n_morphisms):
        if cat.is_iso(m):
            ra, rb = find(cat.dom[m]), find(cat.cod[m])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for i in range(cat.n_objects):
        groups.setdefault(find(i), []).append(i)
    return [[cat.objects[i] for i in groups[r]] for r in sorted(groups)]


class FunctorData:
    __slots__ = ("source", "target", "object_map", "morphism_map")

    def __init__(self, source: FiniteCategory, target: FiniteCategory,
                 object_map: dict, morphism_map: dict[int, int]):
        self.source = source
        self.target = target
        self.object_map = dict(object_map)
        self.morphism_map = dict(morphism_map)

    def __repr__(self) -> str:
        return f"FunctorData({self.source!r} -> {self.target!r})"


def validate_functor(p: FunctorData) -> list[dict]:
    out: list[dict] = []
    src, tgt = p.source, p.target
    for o in src.objects:
        if o not in p.object_map:
            out.append({"kind": "object_unmapped", "object": o})
        elif p.object_map[o] not in tgt._obj_index:
            out.append({"kind": "object_image_unknown", "object": o})
    for m in range(src.n_morphisms):
        if m not in p.morphism_map:
            out.append({"kind": "morphism_unmapped", "morphism": m})
        elif not (0 <= p.morphism_map[m] < tgt.n_morphisms):
            out.append({"kind": "morphism_image_unknown", "morphism": m})
    if out:
        return out
    omap = {src.obj_index(o): tgt.obj_index(p.object_map[o]) for o in src.objects}
    for m in range(src.n_morphisms):
        fm = p.morphism_map[m]
        if tgt.dom[fm] != omap[src.dom[m]] or tgt.cod[fm] != omap[src.cod[m]]:
            out.append({"kind": "endpoints_not_preserved", "morphism": m})
    for x in range(src.n_objects):
        if p.morphism_map[src.identity[x]] != tgt.identity[omap[x]]:
            out.append({"kind": "identity_not_preserved", "object": src.objects[x]})
    for (g, f), gf in src.compose_table.items():
        img = tgt.compose_table.get((p.morphism_map[g], p.morphism_map[f]))
        if img != p.morphism_map[gf]:
            out.append({"kind": "composition_not_preserved", "pair": [g, f]})
    return out


# ------------------------------------------------------------- constructions


def _build(objects, morphs, identity_of, compose):
    """Assemble a category from morphism descriptors, identities first.

    morphs: list of opaque descriptors with (dom_idx, cod_idx); identity_of:
    descriptor for each object; compose: callable on descriptors.
    """
    ids = [identity_of(i) for i in range(len(objects))]
    rest = [d for d in morphs if d not in ids]
    ordered = ids + rest
    index = {d: i for i, d in enumerate(ordered)}
    dom = [d[0] for d in ordered]
    cod = [d[1] for d in ordered]
    table = {}
    for gi, gd in enumerate(ordered):
        for fi, fd in enumerate(ordered):
            if fd[1] == gd[0]:
                table[(gi, fi)] = index[compose(gd, fd)]
    return FiniteCategory(objects, dom, cod, [index[d] for d in ids], table)


def opposite(cat: FiniteCategory) -> FiniteCategory:
    """Same objects and morphism ids with dom/cod and composition reversed."""
    table = {(f, g): c for (g, f), c in cat.compose_table.items()}
    return FiniteCategory(cat.objects, cat.cod, cat.dom, cat.identity, table)


def full_subcategory(cat: FiniteCategory, objs: Sequence) -> tuple[FiniteCategory, FunctorData]:
    """Full subcategory on the given objects plus the inclusion functor."""
    keep = [cat.obj_index(o) for o in objs]
    keep_set = set(keep)
    old_ids = [cat.identity[i] for i in keep]
    old_rest = [
        m
        for m in range(cat.n_morphisms)
        if cat.dom[m] in keep_set and cat.cod[m] in keep_set and m not in set(old_ids)
    ]
    ordered = old_ids + old_rest
    new_of_old = {old: new for new, old in enumerate(ordered)}
    obj_new = {i: k for k, i in enumerate(keep)}
    dom = [obj_new[cat.dom[m]] for m in ordered]
    cod = [obj_new[cat.cod[m]] for m in ordered]
    table = {}
    for gi, g_old in enumerate(ordered):
        for fi, f_old in enumerate(ordered):
            if cod[fi] == dom[gi]:
                table[(gi, fi)] = new_of_old[cat.compose_table[(g_old, f_old)]]
    sub = FiniteCategory([cat.objects[i] for i in keep], dom, cod,
                         list(range(len(keep))), table)
    inc = FunctorData(sub, cat, {cat.objects[i]: cat.objects[i] for i in keep},
                      {new: old for old, new in new_of_old.items()})
    return sub, inc


def skeleton(cat: FiniteCategory) -> tuple[FiniteCategory, FunctorData]:
    """Full subcategory on the least-id representative of each iso class."""
    reps = [cls[0] for cls in iso_classes(cat)]
    reps.sort(key=cat.obj_index)
    return full_subcategory(cat, reps)


def product(c1: FiniteCategory, c2: FiniteCategory) -> FiniteCategory:
    objects = [f"({o1},{o2})" for o1 in c1.objects for o2 in c2.objects]

    def oidx(i1, i2):
        return i1 * c2.n_objects + i2

    pairs = [
        (oidx(c1.dom[m1], c2.dom[m2]), oidx(c1.cod[m1], c2.cod[m2]), m1, m2)
        for m1 in range(c1.n_morphisms)
        for m2 in range(c2.n_morphisms)
    ]

    def identity_of(o):
        i1, i2 = divmod(o, c2.n_objects)
        m1, m2 = c1.identity[i1], c2.identity[i2]
        return (oidx(c1.dom[m1], c2.dom[m2]), oidx(c1.cod[m1], c2.cod[m2]), m1, m2)

    def compose(gd, fd):
        m1 = c1.compose_table[(gd[2], fd[2])]
        m2 = c2.compose_table[(gd[3], fd[3])]
        return (fd[0], gd[1], m1, m2)

    return _build(objects, pairs, identity_of, compose)


def coproduct(c1: FiniteCategory, c2: FiniteCategory) -> FiniteCategory:
    objects = [f"L.{o}" for o in c1.objects] + [f"R.{o}" for o in c2.objects]
    n1 = c1.n_objects

    def left(m):
        return (c1.dom[m], c1.cod[m], 0, m)

    def right(m):
        return (n1 + c2.dom[m], n1 + c2.cod[m], 1, m)

    morphs = [left(m) for m in range(c1.n_morphisms)] + [right(m) for m in range(c2.n_morphisms)]

    def identity_of(o):
        return left(c1.identity[o]) if o < n1 else right(c2.identity[o - n1])

    def compose(gd, fd):
        assert gd[2] == fd[2]
        side = c1 if gd[2] == 0 else c2
        m = side.compose_table[(gd[3], fd[3])]
        return left(m) if gd[2] == 0 else right(m)

    return _build(objects, morphs, identity_of, compose)


def delooping(g: FiniteGroup, obj="*") -> FiniteCategory:
    """One object whose endomorphisms are the group; g o f = table[g][f]."""
    table = {(a, b): g.table[a][b] for a in range(g.order) for b in range(g.order)}
    return FiniteCategory([obj], [0] * g.order, [0] * g.order, [0], table)


def poset_category(elements: Sequence, leq: Callable[[Any, Any], bool] | Iterable[tuple]) -> FiniteCategory:
    """At most one morphism x -> y, present iff x <= y; leq must be a partial order."""
    elems = list(elements)
    n = len(elems)
    if callable(leq):
        rel = {(i, j) for i in range(n) for j in range(n) if leq(elems[i], elems[j])}
    else:
        byidx = {e: i for i, e in enumerate(elems)}
        rel = {(byidx[a], byidx[b]) for a, b in leq}
        rel |= {(i, i) for i in range(n)}
    for i in range(n):
        if (i, i) not in rel:
            raise ValueError("relation is not reflexive")
    for i, j in rel:
        if (j, i) in rel and i != j:
            raise ValueError(f"relation is not antisymmetric at {elems[i]}, {elems[j]}")
    for i, j in list(rel):
        for k in range(n):
            if (j, k) in rel and (i, k) not in rel:
                raise ValueError(f"relation is not transitive at {elems[i]}, {elems[j]}, {elems[k]}")

    morphs = sorted(rel, key=lambda p: (p[0] != p[1], p))

    def identity_of(i):
        return (i, i)

    def compose(gd, fd):
        return (fd[0], gd[1])

    return _build(elems, morphs, identity_of, compose)


def biset_category(
    g: FiniteGroup,
    h: FiniteGroup,
    left: Sequence[Sequence[int]],
    right: Sequence[Sequence[int]],
) -> FiniteCategory:
    """Two objects x, y with end(x) = H, end(y) = G, mor(x,y) = S, mor(y,x) empty.

    left[a][s] is the left G-action, right[s][b] the right H-action; the two
    must commute, and composition is s o b = s.b and a o s = a.s.
    """
    size = len(right)
    if len(left) != g.order or any(len(row) != size for row in left):
        raise ValueError("left action table must be |G| x |S|")
    if any(len(row) != h.order for row in right):
        raise ValueError("right action table must be |S| x |H|")
    for s in range(size):
        if left[0][s] != s or right[s][0] != s:
            raise ValueError("identity must act trivially")
    for a1 in range(g.order):
        for a2 in range(g.order):
            prod = g.table[a1][a2]
            for s in range(size):
                if left[a1][left[a2][s]] != left[prod][s]:
                    raise ValueError("left table is not a G-action")
    for b1 in range(h.order):
        for b2 in range(h.order):
            prod = h.table[b1][b2]
            for s in range(size):
                if right[right[s][b1]][b2] != right[s][prod]:
                    raise ValueError("right table is not an H-action")
    for a in range(g.order):
        for b in range(h.order):
            for s in range(size):
                if left[a][right[s][b]] != right[left[a][s]][b]:
                    raise ValueError("biset actions do not commute")

    # morphism descriptors: ('h', b) endo of x, ('g', a) endo of y, ('s', s) x -> y
    objects = ["x", "y"]
    morphs = (
        [(0, 0, "h", b) for b in range(h.order)]
        + [(1, 1, "g", a) for a in range(g.order)]
        + [(0, 1, "s", s) for s in range(size)]
    )

    def identity_of(o):
        return (0, 0, "h", 0) if o == 0 else (1, 1, "g", 0)

    def compose(gd, fd):
        if gd[2] == "h" and fd[2] == "h":
            return (0, 0, "h", h.table[gd[3]][fd[3]])
        if gd[2] == "g" and fd[2] == "g":
            return (1, 1, "g", g.table[gd[3]][fd[3]])
        if gd[2] == "s" and fd[2] == "h":
            return (0, 1, "s", right[gd[3]][fd[3]])
        if gd[2] == "g" and fd[2] == "s":
            return (0, 1, "s", left[gd[3]][fd[3]])
        raise AssertionError("non-composable descriptor pair")

    return _build(objects, morphs, identity_of, compose)


class CayleyGroupRef:
    """An automorphism group extracted from a category object, with the
    morphism id carried by each group element (element 0 = identity)."""

    __slots__ = ("group", "morphism_ids", "object")

    def __init__(self, group: FiniteGroup, morphism_ids: tuple[int, ...], obj):
        self.group = group
        self.morphism_ids = morphism_ids
        self.object = obj


def aut_group(cat: FiniteCategory, obj) -> CayleyGroupRef:
    i = cat.obj_index(obj)
    auts = list(cat.aut(i))
    auts.remove(cat.identity[i])
    ids = [cat.identity[i]] + auts
    index = {m: k for k, m in enumerate(ids)}
    table = [[index[cat.compose_table[(a, b)]] for b in ids] for a in ids]
    return CayleyGroupRef(FiniteGroup(table, [str(m) for m in ids]), tuple(ids), obj)


# ------------------------------------------------------ coverings and fibers


def _require_connected_finite_groupoid(cat: FiniteCategory, who: str) -> None:
    rep = classify(cat)
    if not rep.is_groupoid or not rep.is_connected_groupoid:
        raise ValueError(f"{who} requires connected finite groupoids")


def is_covering(p: FunctorData) -> tuple[bool, int | None]:
    """Star bijections at every object of a functor between connected groupoids.

    Returns (True, n) with the constant sheet count n, or (False, None).
    """
    _require_connected_finite_groupoid(p.source, "is_covering")
    _require_connected_finite_groupoid(p.target, "is_covering")
    bad = validate_functor(p)
    if bad:
        raise ValueError(f"not a functor: {bad[0]}")
    src, tgt = p.source, p.target
    images = {p.object_map[o] for o in src.objects}
    if images != set(tgt.objects):
        return False, None
    for e in range(src.n_objects):
        star = src.morphisms_from(e)
        image = [p.morphism_map[m] for m in star]
        target_star = tgt.morphisms_from(tgt.obj_index(p.object_map[src.objects[e]]))
        if len(set(image)) != len(star) or set(image) != set(target_star):
            return False, None
    fiber_sizes = {}
    for o in src.objects:
        fiber_sizes[p.object_map[o]] = fiber_sizes.get(p.object_map[o], 0) + 1
    counts = set(fiber_sizes.values())
    assert len(counts) == 1, "star bijections force a constant sheet count"
    return True, counts.pop()


def is_isofibration(p: FunctorData) -> bool:
    """Every iso of the target ending at p(e) lifts to an iso ending at e."""
    bad = validate_functor(p)
    if bad:
        raise ValueError(f"not a functor: {bad[0]}")
    src, tgt = p.source, p.target
    tgt_isos = [m for m in range(tgt.n_morphisms) if tgt.is_iso(m)]
    for e in range(src.n_objects):
        pe = tgt.obj_index(p.object_map[src.objects[e]])
        lifted = {
            p.morphism_map[f]
            for f in range(src.n_morphisms)
            if src.cod[f] == e and src.is_iso(f)
        }
        for m in tgt_isos:
            if tgt.cod[m] == pe and m not in lifted:
                return False
    return True


def fiber_category(p: FunctorData, b_obj) -> FiniteCategory:
    """Subcategory of the source over one target object: objects mapping to it,
    morphisms mapping to its identity."""
    tgt = p.target
    bi = tgt.obj_index(b_obj)
    objs = [o for o in p.source.objects if p.object_map[o] == b_obj]
    src = p.source
    keep_obj = {src.obj_index(o) for o in objs}
    id_b = tgt.identity[bi]
    keep = [
        m
        for m in range(src.n_morphisms)
        if src.dom[m] in keep_obj and src.cod[m] in keep_obj and p.morphism_map[m] == id_b
    ]
    ids = [src.identity[src.obj_index(o)] for o in objs]
    ordered = ids + [m for m in keep if m not in set(ids)]
    new_of_old = {old: new for new, old in enumerate(ordered)}
    obj_new = {src.obj_index(o): k for k, o in enumerate(objs)}
    dom = [obj_new[src.dom[m]] for m in ordered]
    cod = [obj_new[src.cod[m]] for m in ordered]
    table = {}
    for gi, go in enumerate(ordered):
        for fi, fo in enumerate(ordered):
            if cod[fi] == dom[gi]:
                c = src.compose_table[(go, fo)]
                # closed because p(g o f) = id o id = id
                table[(gi, fi)] = new_of_old[c]
    return FiniteCategory(objs, dom, cod, list(range(len(objs))), table)


# ------------------------------------------------------------------- JSON io


def to_json(cat: FiniteCategory) -> dict:
    return {
        "objects": list(cat.objects),
        "morphisms": [
            {"id": m, "dom": cat.objects[cat.dom[m]], "cod": cat.objects[cat.cod[m]]}
            for m in range(cat.n_morphisms)
        ],
        "identities": {str(cat.objects[x]): cat.identity[x] for x in range(cat.n_objects)},
        "composition": [[g, f, c] for (g, f), c in sorted(cat.compose_table.items())],
    }


def from_json(doc: dict) -> FiniteCategory:
    """Parse the category schema; raises ValueError naming the first format problem."""
    if not isinstance(doc, dict):
        raise ValueError("category document must be a JSON object")
    for key in ("objects", "morphisms", "identities", "composition"):
        if key not in doc:
            raise ValueError(f"missing key: {key}")
    objects = list(doc["objects"])
    if len(set(map(str, objects))) != len(objects):
        raise ValueError("duplicate object ids")
    obj_index = {str(o): i for i, o in enumerate(objects)}
    morphs = doc["morphisms"]
    m = len(morphs)
    dom = [0] * m
    cod = [0] * m
    seen = set()
    for rec in morphs:
        if not isinstance(rec, dict) or not {"id", "dom", "cod"} <= set(rec):
            raise ValueError(f"malformed morphism record: {rec!r}")
        mid = rec["id"]
        if not isinstance(mid, int) or not (0 <= mid < m) or mid in seen:
            raise ValueError(f"morphism ids must be exactly 0..{m-1}: got {mid!r}")
        seen.add(mid)
        if str(rec["dom"]) not in obj_index or str(rec["cod"]) not in obj_index:
            raise ValueError(f"morphism {mid} references unknown object")
        dom[mid] = obj_index[str(rec["dom"])]
        cod[mid] = obj_index[str(rec["cod"])]
    identities = doc["identities"]
    if set(identities) != set(map(str, objects)):
        raise ValueError("identities must cover exactly the objects")
    identity = [0] * len(objects)
    for o, mid in identities.items():
        if not isinstance(mid, int) or not (0 <= mid < m):
            raise ValueError(f"identity of {o!r} references unknown morphism")
        identity[obj_index[o]] = mid
    table: dict[tuple[int, int], int] = {}
    for rec in doc["composition"]:
        if not (isinstance(rec, (list, tuple)) and len(rec) == 3):
            raise ValueError(f"malformed composition record: {rec!r}")
        g, f, c = rec
        for v in (g, f, c):
            if not isinstance(v, int) or not (0 <= v < m):
                raise ValueError(f"composition record references unknown morphism: {rec!r}")
        if (g, f) in table:
            raise ValueError(f"duplicate composition record for pair ({g},{f})")
        table[(g, f)] = c
    return FiniteCategory(objects, dom, cod, identity, table)


def canonical_json(cat: FiniteCategory) -> str:
    import json

    return json.dumps(to_json(cat), indent=2) + "\n"
