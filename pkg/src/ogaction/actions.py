"""Partial ordered actions of ordered groupoids on algebras, and partial
actions of inverse semigroups: axiom validation, strength and the
composition law, restrictions of global actions, equivalence search, and
the transfers along the inverse-semigroup/groupoid correspondence."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .algebras import (
    Algebra,
    identity_of,
    is_ideal,
    is_multiplicatively_closed,
    is_ring_iso,
    subalgebra_on,
)
from .errors import (
    BudgetExceeded,
    GroupoidMismatch,
    InvalidAction,
    NotAnIdeal,
    NotContained,
    NotGlobal,
    NotMonotone,
    NotMultiplicativelyClosed,
    NotPreunital,
    NotUnital,
)
from .groupoids import OrderedGroupoid
from .linalg import LinMap, Subspace, Vector, express
from .semigroups import InverseSemigroup, esn_to_groupoid
from .validation import ValidationReport

ACTION_CLAUSES = ("IDEAL", "ISO", "P1", "P2", "P3", "PO", "INV", "IMG")
INV_ACTION_CLAUSES = ("IDEAL'", "ISO'", "P1'", "P2'", "P3'")


@dataclass
class POAction:
    """A family (A_g, alpha_g) indexed by the arrows of an ordered groupoid.

    ideal_of[g] is a subspace of the carrier's space; map_of[g] sends
    ideal_of[inv g] to ideal_of[g].  `inclusion`, when set by a restriction
    builder, embeds the carrier into the parent action's carrier.
    """

    groupoid: OrderedGroupoid
    carrier: Algebra
    ideal_of: tuple[Subspace, ...]
    map_of: tuple[LinMap, ...]
    name: str = field(default="", compare=False)
    inclusion: Optional[LinMap] = field(default=None, compare=False)
    _units: dict[int, Optional[Vector]] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        n = self.groupoid.n
        if len(self.ideal_of) != n or len(self.map_of) != n:
            raise InvalidAction("one ideal and one map required per arrow")
        self.ideal_of = tuple(self.ideal_of)
        self.map_of = tuple(self.map_of)

    def arrows(self) -> range:
        return self.groupoid.arrows()

    def objects(self) -> tuple[int, ...]:
        return tuple(sorted(self.groupoid.objects))

    def apply(self, g: int, v: Sequence[int]) -> Vector:
        return self.map_of[g].apply(v)

    def unit_vector(self, g: int) -> Optional[Vector]:
        """Central idempotent identity of ideal_of[g], cached; None if absent."""
        if g not in self._units:
            try:
                ident = identity_of(self.carrier, self.ideal_of[g])
            except NotMultiplicativelyClosed:
                ident = None
            if ident is None or not (ident.central and ident.idempotent):
                self._units[g] = None
            else:
                self._units[g] = ident.element.coeffs
        return self._units[g]


def validate_po_action(a: POAction) -> ValidationReport:
    """Full axiom check: ideal chains, iso property, the three partial-action
    conditions, order compatibility, and the two derived identities."""
    a.groupoid.require_valid()
    g0 = a.groupoid
    nm = g0.names
    rep = ValidationReport(a.name or "action", ACTION_CLAUSES)
    full = a.carrier.space()
    for e in g0.objects:
        try:
            if not is_ideal(a.carrier, a.ideal_of[e], full):
                rep.add("IDEAL", f"ideal at object {nm[e]} does not absorb the carrier")
        except NotContained:
            rep.add("IDEAL", f"ideal at object {nm[e]} is not inside the carrier")
    for g in g0.arrows():
        outer = a.ideal_of[g0.ran[g]]
        try:
            if not is_ideal(a.carrier, a.ideal_of[g], outer):
                rep.add("IDEAL", f"ideal at {nm[g]} does not absorb the range ideal")
        except NotContained:
            rep.add("IDEAL", f"ideal at {nm[g]} is not inside the range ideal")
    iso_ok = {}
    for g in g0.arrows():
        m = a.map_of[g]
        ok = m.domain == a.ideal_of[g0.inv[g]] and m.codomain == a.ideal_of[g]
        if not ok:
            rep.add("ISO", f"map at {nm[g]} has wrong endpoints")
        elif not is_ring_iso(m, a.carrier, a.carrier):
            rep.add("ISO", f"map at {nm[g]} is not a ring isomorphism")
            ok = False
        iso_ok[g] = ok
    for e in g0.objects:
        if iso_ok[e]:
            ide = LinMap.identity(a.ideal_of[e])
            if not a.map_of[e].agrees_with(ide, a.ideal_of[e]):
                rep.add("P1", f"map at object {nm[e]} is not the identity")
    total = Subspace.zero(a.carrier.dim, a.carrier.p)
    for e in g0.objects:
        total = total.add(a.ideal_of[e])
    if total != full:
        rep.add("P1", "object ideals do not sum to the carrier")
    for g in g0.arrows():
        for h in g0.arrows():
            if not g0.composable(g, h) or not (iso_ok[g] and iso_ok[h]):
                continue
            gh = g0.comp[(g, h)]
            inter = a.ideal_of[g0.inv[g]].intersect(a.ideal_of[h])
            pulled = a.map_of[h].preimage_of(inter)
            if not a.ideal_of[g0.inv[gh]].contains_subspace(pulled):
                rep.add("P2", f"pulled-back overlap of ({nm[g]},{nm[h]}) escapes its target")
            if not iso_ok.get(gh, False):
                continue
            for v in pulled.basis:
                mid = a.map_of[h].apply(v)
                if not a.map_of[g].domain.contains(mid):
                    rep.add("P3", f"composite at ({nm[g]},{nm[h]}) leaves the domain")
                    continue
                lhs = a.map_of[g].apply(mid)
                if not a.map_of[gh].domain.contains(v):
                    rep.add("P3", f"product map at ({nm[g]},{nm[h]}) undefined on the overlap")
                    continue
                if lhs != a.map_of[gh].apply(v):
                    rep.add("P3", f"composite and product map differ at ({nm[g]},{nm[h]})")
    for g in g0.arrows():
        for h in g0.arrows():
            if g == h or not g0.le(g, h):
                continue
            if not a.ideal_of[h].contains_subspace(a.ideal_of[g]):
                rep.add("PO", f"{nm[g]} <= {nm[h]} but ideals are not nested")
                continue
            if iso_ok[g] and iso_ok[h]:
                dom = a.ideal_of[g0.inv[g]]
                if not a.map_of[h].domain.contains_subspace(dom):
                    rep.add("PO", f"map at {nm[h]} does not extend the one at {nm[g]}")
                    continue
                if not all(a.map_of[h].apply(v) == a.map_of[g].apply(v) for v in dom.basis):
                    rep.add("PO", f"maps at {nm[g]} <= {nm[h]} disagree")
    for g in g0.arrows():
        if iso_ok[g] and iso_ok[g0.inv[g]]:
            inv_map = a.map_of[g].inverse()
            other = a.map_of[g0.inv[g]]
            if not (inv_map.domain == other.domain and inv_map.agrees_with(other, other.domain)):
                rep.add("INV", f"inverse of map at {nm[g]} differs from map at inv({nm[g]})")
    for g in g0.arrows():
        for h in g0.arrows():
            if not g0.composable(g, h) or not iso_ok[g]:
                continue
            gh = g0.comp[(g, h)]
            inter = a.ideal_of[g0.inv[g]].intersect(a.ideal_of[h])
            image = a.map_of[g].image_of(inter.intersect(a.map_of[g].domain))
            expected = a.ideal_of[g].intersect(a.ideal_of[gh])
            if image != expected:
                rep.add("IMG", f"image identity fails on ({nm[g]},{nm[h]})")
    return rep


def require_valid_action(a: POAction) -> None:
    rep = validate_po_action(a)
    if not rep.ok:
        raise InvalidAction(str(rep))


def is_global(a: POAction) -> bool:
    return all(a.ideal_of[g] == a.ideal_of[a.groupoid.ran[g]] for g in a.arrows())


def is_preunital(a: POAction) -> bool:
    return all(a.unit_vector(e) is not None for e in a.groupoid.objects)


def is_unital(a: POAction) -> bool:
    return all(a.unit_vector(g) is not None for g in a.arrows())


def first_non_unital_arrow(a: POAction) -> Optional[int]:
    for g in a.arrows():
        if a.unit_vector(g) is None:
            return g
    return None


def is_strong(a: POAction) -> bool:
    """Corestriction ideals equal object-arrow intersections everywhere."""
    g0 = a.groupoid
    for g in g0.arrows():
        for e in g0.objects:
            if g0.le(e, g0.ran[g]):
                co = g0.corestriction(e, g)
                if a.ideal_of[co] != a.ideal_of[e].intersect(a.ideal_of[g]):
                    return False
    return True


def meets_compatible(a: POAction) -> bool:
    """Object meets carry exactly the ideal intersections.

    This does not follow from the corestriction condition alone: two
    incomparable objects may share ideal content above a small meet.  The
    composition law along pseudoproducts is equivalent to strength plus
    this condition.
    """
    g0 = a.groupoid
    objs = sorted(g0.objects)
    for e in objs:
        for f in objs:
            m = g0.meet_objects(e, f)
            if m is None:
                continue
            if a.ideal_of[m] != a.ideal_of[e].intersect(a.ideal_of[f]):
                return False
    return True


def satisfies_ps(a: POAction) -> bool:
    """Composition law along pseudoproducts, as a partial-map equality.

    Both sides must have the same domain (the pulled-back overlap on the
    left, the product-side intersection on the right) and the same values.
    """
    g0 = a.groupoid
    for g in g0.arrows():
        for h in g0.arrows():
            gh = g0.pseudoproduct(g, h)
            if gh is None:
                continue
            inter = a.ideal_of[g0.inv[g]].intersect(a.ideal_of[h])
            left_dom = a.map_of[h].preimage_of(inter)
            right_dom = a.ideal_of[g0.inv[gh]].intersect(a.ideal_of[g0.inv[h]])
            if left_dom != right_dom:
                return False
            for v in left_dom.basis:
                mid = a.map_of[h].apply(v)
                if not a.map_of[g].domain.contains(mid):
                    return False
                if a.map_of[g].apply(mid) != a.map_of[gh].apply(v):
                    return False
    return True


def _pull_coords(ambient_sub: Subspace, s: Subspace) -> Subspace:
    """Rewrite s (inside ambient_sub) in ambient_sub's coordinate system."""
    rows = [ambient_sub.coordinates_of(v) for v in s.basis]
    return Subspace.span(ambient_sub.rank, rows, ambient_sub.p)


def _restrict_global(
    beta: POAction,
    carrier_sub: Subspace,
    object_family: dict[int, Subspace],
    name: str,
) -> POAction:
    g0 = beta.groupoid
    small, incl = subalgebra_on(beta.carrier, carrier_sub, name=name)
    ideals_b: list[Subspace] = [None] * g0.n  # type: ignore[list-item]
    for e in g0.objects:
        ideals_b[e] = object_family[e]
    for g in g0.arrows():
        if g in g0.objects:
            continue
        moved = beta.map_of[g].image_of(
            object_family[g0.dom[g]].intersect(beta.map_of[g].domain)
        )
        ideals_b[g] = object_family[g0.ran[g]].intersect(moved)
    ideals = tuple(_pull_coords(carrier_sub, s) for s in ideals_b)
    maps = []
    for g in g0.arrows():
        dom = ideals[g0.inv[g]]
        images = []
        for v in dom.basis:
            big = carrier_sub.from_coordinates(v)
            out = beta.map_of[g].apply(big)
            images.append(carrier_sub.coordinates_of(out))
        maps.append(LinMap.from_images(dom, ideals[g], images))
    out_action = POAction(g0, small, tuple(ideals), tuple(maps), name=name, inclusion=incl)
    return out_action


def standard_restriction(beta: POAction, a_ideal: Subspace) -> POAction:
    """Restrict a global ordered action to a two-sided ideal of its carrier."""
    beta.groupoid.require_valid()
    if not is_global(beta):
        raise NotGlobal("standard restriction needs a global ordered action")
    try:
        if not is_ideal(beta.carrier, a_ideal, beta.carrier.space()):
            raise NotAnIdeal("restriction target is not a two-sided ideal")
    except NotContained as exc:
        raise NotAnIdeal(str(exc))
    family = {e: a_ideal.intersect(beta.ideal_of[e]) for e in beta.groupoid.objects}
    restricted = _restrict_global(
        beta, a_ideal, family, name=f"{beta.name or 'action'}|ideal"
    )
    rep = validate_po_action(restricted)
    if not rep.ok:
        raise InvalidAction(f"standard restriction failed to validate:\n{rep}")
    if not is_strong(restricted):
        raise InvalidAction("standard restriction is unexpectedly not strong")
    return restricted


def general_restriction(beta: POAction, family: dict[int, Subspace]) -> POAction:
    """Restrict a global ordered action along a monotone family of ideals."""
    beta.groupoid.require_valid()
    g0 = beta.groupoid
    if not is_global(beta):
        raise NotGlobal("restriction needs a global ordered action")
    if set(family) != set(g0.objects):
        raise NotAnIdeal("family must assign one ideal per object")
    for e, sub in family.items():
        try:
            if not is_ideal(beta.carrier, sub, beta.carrier.space()):
                raise NotAnIdeal(f"family entry at {g0.names[e]} is not a two-sided ideal")
        except NotContained as exc:
            raise NotAnIdeal(str(exc))
        if not beta.ideal_of[e].contains_subspace(sub):
            raise NotAnIdeal(f"family entry at {g0.names[e]} escapes the object ideal")
    for e in g0.objects:
        for f in g0.objects:
            if g0.le(e, f) and not family[f].contains_subspace(family[e]):
                raise NotMonotone(
                    f"family is not monotone on {g0.names[e]} <= {g0.names[f]}"
                )
    carrier_sub = Subspace.zero(beta.carrier.dim, beta.carrier.p)
    for e in g0.objects:
        carrier_sub = carrier_sub.add(family[e])
    restricted = _restrict_global(
        beta, carrier_sub, dict(family), name=f"{beta.name or 'action'}|family"
    )
    rep = validate_po_action(restricted)
    if not rep.ok:
        raise InvalidAction(f"restriction failed to validate:\n{rep}")
    return restricted


@dataclass
class EquivalenceWitness:
    """Ring isomorphisms per object, mapping one action's ideals to another's."""

    maps: dict[int, LinMap]

    def inverse(self) -> "EquivalenceWitness":
        return EquivalenceWitness({e: m.inverse() for e, m in self.maps.items()})

    def compose(self, then: "EquivalenceWitness") -> "EquivalenceWitness":
        return EquivalenceWitness(
            {e: m.then(then.maps[e]) for e, m in self.maps.items()}
        )


def identity_witness(a: POAction) -> EquivalenceWitness:
    return EquivalenceWitness({e: LinMap.identity(a.ideal_of[e]) for e in a.groupoid.objects})


def verify_equivalence(a: POAction, c: POAction, w: EquivalenceWitness) -> bool:
    """Object-wise isos matching ideals and intertwining the partial maps."""
    if a.groupoid != c.groupoid:
        raise GroupoidMismatch("equivalence is defined over a single groupoid")
    g0 = a.groupoid
    for e in g0.objects:
        m = w.maps.get(e)
        if m is None or m.domain != a.ideal_of[e] or m.codomain.dim != c.carrier.dim:
            return False
        if m.image() != c.ideal_of[e]:
            return False
        if not is_ring_iso(m, a.carrier, c.carrier):
            return False
    for g in g0.arrows():
        if w.maps[g0.ran[g]].image_of(a.ideal_of[g]) != c.ideal_of[g]:
            return False
    for g in g0.arrows():
        phi_r = w.maps[g0.ran[g]]
        phi_d = w.maps[g0.dom[g]]
        for v in a.ideal_of[g0.inv[g]].basis:
            lhs = phi_r.apply(a.map_of[g].apply(v))
            moved = phi_d.apply(v)
            if not c.map_of[g].domain.contains(moved):
                return False
            if lhs != c.map_of[g].apply(moved):
                return False
    return True


@dataclass
class EquivalenceSearch:
    witness: Optional[EquivalenceWitness]
    disproof: Optional[str]
    tested: int

    @property
    def found(self) -> bool:
        return self.witness is not None

    @property
    def definitive_no(self) -> bool:
        return self.disproof is not None


def _commutative_on(alg: Algebra, sub: Subspace) -> bool:
    return all(
        alg.mul(u, v) == alg.mul(v, u) for u in sub.basis for v in sub.basis
    )


def _primitive_idempotents(alg: Algebra, sub: Subspace, cap: int) -> Optional[list[Vector]]:
    """Primitive idempotents of a commutative subring, by exhaustive scan.

    Returns None unless they are pairwise orthogonal and span the subspace
    (the split-semisimple shape the witness strategy relies on).
    """
    if sub.rank == 0:
        return []
    count = alg.p ** sub.rank
    if count > cap:
        return None
    idems = [
        v for v in sub.vectors() if any(v) and alg.mul(v, v) == v
    ]
    prims = []
    for u in idems:
        strictly_below = [
            w for w in idems if w != u and alg.mul(w, u) == w and alg.mul(u, w) == w
        ]
        if not strictly_below:
            prims.append(u)
    if len(prims) != sub.rank:
        return None
    if Subspace.span(sub.dim, prims, sub.p).rank != sub.rank:
        return None
    for i, u in enumerate(prims):
        for v in prims[i + 1 :]:
            if any(alg.mul(u, v)) or any(alg.mul(v, u)):
                return None
    return sorted(prims)


def _linear_extension(
    dom: Subspace, cod: Subspace, prims_a: list[Vector], prims_c: list[Vector]
) -> Optional[LinMap]:
    """The linear map sending each primitive idempotent to its partner."""
    images = []
    for v in dom.basis:
        combo = express(prims_a, v, dom.p)
        if combo is None:
            return None
        img = [0] * cod.dim
        for coef, w in zip(combo, prims_c):
            for j, x in enumerate(w):
                img[j] = (img[j] + coef * x) % dom.p
        if not cod.contains(img):
            return None
        images.append(tuple(img))
    return LinMap.from_images(dom, cod, images)


def _object_candidates(
    a: POAction, c: POAction, e: int, budget: int
) -> list[LinMap]:
    dom = a.ideal_of[e]
    cod = c.ideal_of[e]
    if dom.rank == 0:
        return [LinMap(dom, cod, ())] if cod.rank == 0 else []
    if _commutative_on(a.carrier, dom) and _commutative_on(c.carrier, cod):
        prims_a = _primitive_idempotents(a.carrier, dom, budget)
        prims_c = _primitive_idempotents(c.carrier, cod, budget)
        if prims_a is not None and prims_c is not None and len(prims_a) == len(prims_c):
            out = []
            for perm in itertools.permutations(prims_c):
                m = _linear_extension(dom, cod, prims_a, list(perm))
                if m is not None and is_ring_iso(m, a.carrier, c.carrier):
                    out.append(m)
            return out
    # exhaustive fallback over all matrices, only viable for tiny ideals
    r = dom.rank
    if cod.rank != r:
        return []
    total = a.carrier.p ** (r * r)
    if total > budget:
        raise BudgetExceeded(
            f"matrix enumeration at object {a.groupoid.names[e]} needs {total} nodes"
        )
    out = []
    for flat in itertools.product(range(a.carrier.p), repeat=r * r):
        matrix = tuple(tuple(flat[i * r : (i + 1) * r]) for i in range(r))
        m = LinMap(dom, cod, matrix)
        if m.is_iso and is_ring_iso(m, a.carrier, c.carrier):
            out.append(m)
    return out


def search_equivalence(a: POAction, c: POAction, budget: int = 200_000) -> EquivalenceSearch:
    """Look for an equivalence witness within the idempotent-matching class.

    Dimension mismatches are a definitive refusal.  Exceeding the budget in
    either candidate generation or combination raises BudgetExceeded, which
    is an inconclusive outcome distinct from an exhausted search.
    """
    if a.groupoid != c.groupoid:
        raise GroupoidMismatch("equivalence is defined over a single groupoid")
    for g in a.arrows():
        da, dc = a.ideal_of[g].rank, c.ideal_of[g].rank
        if da != dc:
            return EquivalenceSearch(
                None,
                f"ideal at {a.groupoid.names[g]} has dimension {da} on one side, {dc} on the other",
                0,
            )
    objects = a.objects()
    per_object = [_object_candidates(a, c, e, budget) for e in objects]
    combos = 1
    for cands in per_object:
        combos *= max(len(cands), 1)
        if combos > budget:
            raise BudgetExceeded(f"witness combinations exceed budget {budget}")
    if any(not cands for cands in per_object):
        return EquivalenceSearch(None, None, 0)
    tested = 0
    for combo in itertools.product(*per_object):
        tested += 1
        w = EquivalenceWitness(dict(zip(objects, combo)))
        if verify_equivalence(a, c, w):
            return EquivalenceSearch(w, None, tested)
    return EquivalenceSearch(None, None, tested)


# -- inverse-semigroup actions ------------------------------------------


@dataclass
class InvSgpAction:
    """A family (A_s, alpha_s) indexed by an inverse semigroup's elements."""

    semigroup: InverseSemigroup
    carrier: Algebra
    ideal_of: tuple[Subspace, ...]
    map_of: tuple[LinMap, ...]
    name: str = field(default="", compare=False)
    _units: dict[int, Optional[Vector]] = field(default_factory=dict, repr=False, compare=False)

    def elements(self) -> range:
        return self.semigroup.elements()

    def unit_vector(self, s: int) -> Optional[Vector]:
        if s not in self._units:
            try:
                ident = identity_of(self.carrier, self.ideal_of[s])
            except NotMultiplicativelyClosed:
                ident = None
            if ident is None or not (ident.central and ident.idempotent):
                self._units[s] = None
            else:
                self._units[s] = ident.element.coeffs
        return self._units[s]


def validate_inv_sgp_action(a: InvSgpAction) -> ValidationReport:
    a.semigroup.require_valid()
    s0 = a.semigroup
    nm = s0.names
    rep = ValidationReport(a.name or "semigroup action", INV_ACTION_CLAUSES)
    full = a.carrier.space()
    for s in s0.elements():
        anchor = s0.mul(s, s0.inverse(s))
        try:
            if not is_ideal(a.carrier, a.ideal_of[anchor], full):
                rep.add("IDEAL'", f"ideal at {nm[anchor]} does not absorb the carrier")
        except NotContained:
            rep.add("IDEAL'", f"ideal at {nm[anchor]} is not inside the carrier")
        try:
            if not is_ideal(a.carrier, a.ideal_of[s], a.ideal_of[anchor]):
                rep.add("IDEAL'", f"ideal at {nm[s]} does not absorb its anchor ideal")
        except NotContained:
            rep.add("IDEAL'", f"ideal at {nm[s]} is not inside its anchor ideal")
    iso_ok = {}
    for s in s0.elements():
        m = a.map_of[s]
        ok = m.domain == a.ideal_of[s0.inverse(s)] and m.codomain == a.ideal_of[s]
        if not ok:
            rep.add("ISO'", f"map at {nm[s]} has wrong endpoints")
        elif not is_ring_iso(m, a.carrier, a.carrier):
            rep.add("ISO'", f"map at {nm[s]} is not a ring isomorphism")
            ok = False
        iso_ok[s] = ok
    total = Subspace.zero(a.carrier.dim, a.carrier.p)
    for e in s0.idempotents():
        total = total.add(a.ideal_of[e])
    if total != full:
        rep.add("P1'", "idempotent ideals do not sum to the carrier")
    for s in s0.elements():
        for t in s0.elements():
            if not (iso_ok[s] and iso_ok[t]):
                continue
            st = s0.mul(s, t)
            inter = a.ideal_of[s0.inverse(s)].intersect(a.ideal_of[t])
            image = a.map_of[s].image_of(inter)
            if image != a.ideal_of[s].intersect(a.ideal_of[st]):
                rep.add("P2'", f"moved overlap of ({nm[s]},{nm[t]}) misses its target")
    for s in s0.elements():
        for t in s0.elements():
            st = s0.mul(s, t)
            if not (iso_ok[s] and iso_ok[t] and iso_ok[st]):
                continue
            dom = a.ideal_of[s0.inverse(t)].intersect(a.ideal_of[s0.inverse(st)])
            for v in dom.basis:
                mid = a.map_of[t].apply(v)
                if not a.map_of[s].domain.contains(mid):
                    rep.add("P3'", f"composite at ({nm[s]},{nm[t]}) leaves the domain")
                    continue
                if a.map_of[s].apply(mid) != a.map_of[st].apply(v):
                    rep.add("P3'", f"composite and product map differ at ({nm[s]},{nm[t]})")
    return rep


def inv_action_is_global(a: InvSgpAction) -> bool:
    s0 = a.semigroup
    return all(
        a.ideal_of[s] == a.ideal_of[s0.mul(s, s0.inverse(s))] for s in s0.elements()
    )


def inv_action_is_preunital(a: InvSgpAction) -> bool:
    return all(a.unit_vector(e) is not None for e in a.semigroup.idempotents())


def inv_action_is_unital(a: InvSgpAction) -> bool:
    return all(a.unit_vector(s) is not None for s in a.elements())


def semigroup_action_to_groupoid_action(a: InvSgpAction) -> POAction:
    """Reindex a preunital semigroup action over the derived groupoid.

    The result must validate and be strong; a counterexample would
    contradict the transfer argument, so it raises rather than returns.
    """
    rep = validate_inv_sgp_action(a)
    if not rep.ok:
        raise InvalidAction(str(rep))
    if not inv_action_is_preunital(a):
        raise NotPreunital("semigroup action has a non-unital idempotent ideal")
    g = esn_to_groupoid(a.semigroup)
    out = POAction(g, a.carrier, a.ideal_of, a.map_of, name=f"{a.name or 'action'}@groupoid")
    out_rep = validate_po_action(out)
    if not out_rep.ok:
        raise InvalidAction(f"transferred action fails validation (finding):\n{out_rep}")
    if not is_strong(out):
        raise InvalidAction("transferred action is not strong (finding)")
    return out


def groupoid_action_to_semigroup_action(a: POAction, s: InverseSemigroup) -> InvSgpAction:
    """Transport a global action over the derived groupoid back to s."""
    if esn_to_groupoid(s) != a.groupoid:
        raise GroupoidMismatch("action's groupoid was not derived from this semigroup")
    if not is_global(a):
        raise NotGlobal("only global actions transport back to the semigroup")
    out = InvSgpAction(s, a.carrier, a.ideal_of, a.map_of, name=f"{a.name or 'action'}@semigroup")
    rep = validate_inv_sgp_action(out)
    if not rep.ok:
        raise InvalidAction(f"transported action fails validation:\n{rep}")
    return out


def relabel_action(a: POAction, perm: Sequence[int]) -> POAction:
    """The same action with groupoid arrows renumbered by perm."""
    g = a.groupoid.relabeled(perm)
    n = a.groupoid.n
    ideals: list[Subspace] = [None] * n  # type: ignore[list-item]
    maps: list[LinMap] = [None] * n  # type: ignore[list-item]
    for i in range(n):
        ideals[perm[i]] = a.ideal_of[i]
        maps[perm[i]] = a.map_of[i]
    return POAction(g, a.carrier, tuple(ideals), tuple(maps), name=f"{a.name or 'action'}~relabeled")
