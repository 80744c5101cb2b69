"""Partial skew rings graded by groupoid arrows or semigroup elements,
their ordered quotients, and the Morita-context verification between the
quotient of a unital action and the quotient of its globalization."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Union

from .actions import (
    InvSgpAction,
    POAction,
    inv_action_is_preunital,
    inv_action_is_unital,
    is_preunital,
    is_unital,
    validate_inv_sgp_action,
    validate_po_action,
)
from .algebras import Algebra, _associator_failures, ideal_closure, quotient
from .errors import (
    InvalidAction,
    NotAGlobalization,
    NotAssociative,
    NotPreunital,
    NotUnital,
)
from .globalize import Globalization, InvSgpGlobalization, verify_globalization
from .linalg import LinMap, Subspace, Vector, vec_sub
from .validation import ValidationReport

MORITA_CLAUSES = (
    "MOR(i)",
    "MOR(ii)",
    "MOR(iii)",
    "MOR(iv)",
    "MOR(compat)",
    "MOR(surj)",
    "MOR(unital)",
    "MOR(idem)",
)

Action = Union[POAction, InvSgpAction]


class _Graded:
    """Uniform view of the two graded sources of a skew ring."""

    def __init__(self, action: Action):
        self.action = action
        if isinstance(action, POAction):
            g = action.groupoid
            self.count = g.n
            self.names = g.names
            self.inv = lambda i: g.inv[i]
            self.prod = lambda i, j: g.comp.get((i, j))
            self.le = g.le
            self.anchors = tuple(sorted(g.objects))
            self.ran = lambda i: g.ran[i]
            self.dom = lambda i: g.dom[i]
        else:
            s = action.semigroup
            s.require_valid()
            self.count = s.n
            self.names = s.names
            self.inv = s.inverse
            self.prod = lambda i, j: s.mul(i, j)
            self.le = s.natural_le
            self.anchors = tuple(sorted(s.idempotents()))
            self.ran = lambda i: s.mul(i, s.inverse(i))
            self.dom = lambda i: s.mul(s.inverse(i), i)

    @property
    def carrier(self) -> Algebra:
        return self.action.carrier

    def ideal(self, i: int) -> Subspace:
        return self.action.ideal_of[i]

    def map(self, i: int) -> LinMap:
        return self.action.map_of[i]

    def unit(self, i: int) -> Optional[Vector]:
        return self.action.unit_vector(i)


@dataclass
class SkewRing:
    """Graded algebra on symbols delta_g: one block per grade, sized by the
    grade's ideal.  Built without the associativity gate; run
    check_skew_associative before quotienting."""

    source: Action
    algebra: Algebra
    grading: tuple[int, ...]
    offsets: tuple[int, ...]
    _view: _Graded = field(repr=False)

    def lift(self, grade: int, v: Sequence[int]) -> Vector:
        """Skew-ring vector holding v (a member of the grade's ideal) at delta_grade."""
        coords = self._view.ideal(grade).coordinates_of(v)
        out = [0] * self.algebra.dim
        base = self.offsets[grade]
        for k, c in enumerate(coords):
            out[base + k] = c
        return tuple(out)


def build_skew(a: Action) -> SkewRing:
    """Skew ring of a validated action; grading recorded per basis vector."""
    if isinstance(a, POAction):
        rep = validate_po_action(a)
    else:
        rep = validate_inv_sgp_action(a)
    if not rep.ok:
        raise InvalidAction(f"skew ring needs a valid action:\n{rep}")
    view = _Graded(a)
    offsets = []
    grading: list[int] = []
    dim = 0
    for g in range(view.count):
        offsets.append(dim)
        r = view.ideal(g).rank
        grading.extend([g] * r)
        dim += r
    carrier = view.carrier
    p = carrier.p
    zero = (0,) * dim

    basis_members: list[tuple[int, Vector]] = []
    for g in range(view.count):
        for v in view.ideal(g).basis:
            basis_members.append((g, v))

    def lift(grade: int, v: Sequence[int]) -> Vector:
        coords = view.ideal(grade).coordinates_of(v)
        out = [0] * dim
        for k, c in enumerate(coords):
            out[offsets[grade] + k] = c
        return tuple(out)

    table = []
    for g, vg in basis_members:
        row = []
        twisted = view.map(view.inv(g)).apply(vg)
        for h, vh in basis_members:
            gh = view.prod(g, h)
            if gh is None:
                row.append(zero)
                continue
            y = carrier.mul(twisted, vh)
            if not view.map(g).domain.contains(y):
                raise InvalidAction(
                    f"twisted product at ({view.names[g]},{view.names[h]}) leaves its domain"
                )
            z = view.map(g).apply(y)
            if not view.ideal(gh).contains(z):
                raise InvalidAction(
                    f"twisted product at ({view.names[g]},{view.names[h]}) escapes grade "
                    f"{view.names[gh]}"
                )
            row.append(lift(gh, z))
        table.append(row)
    unit = None
    if all(view.unit(e) is not None for e in view.anchors):
        cand = [0] * dim
        for e in view.anchors:
            u = view.unit(e)
            assert u is not None
            for k, c in enumerate(view.ideal(e).coordinates_of(u)):
                cand[offsets[e] + k] = c
        unit = tuple(cand)
    alg = Algebra(p, dim, table, unit=None, check=False, name="skew ring")
    if unit is not None:
        ok = all(
            alg.mul(unit, alg.basis_vector(i)) == alg.basis_vector(i)
            and alg.mul(alg.basis_vector(i), unit) == alg.basis_vector(i)
            for i in range(dim)
        )
        if ok:
            alg.unit = unit
    return SkewRing(a, alg, tuple(grading), tuple(offsets), view)


def check_skew_associative(s: SkewRing) -> ValidationReport:
    """Associator scan over all basis triples, reported with grades."""
    rep = ValidationReport("skew ring", ("ASSOC",))
    for i, j, k in _associator_failures(s.algebra):
        rep.add(
            "ASSOC",
            f"associator at grades ({s._view.names[s.grading[i]]},"
            f"{s._view.names[s.grading[j]]},{s._view.names[s.grading[k]]})",
        )
    return rep


@dataclass
class OrderedSkewRing:
    skew: SkewRing
    n_ideal: Subspace
    quotient: Algebra
    projection: LinMap

    def project_lift(self, grade: int, v: Sequence[int]) -> Vector:
        return self.projection.apply(self.skew.lift(grade, v))


def build_ordered_skew(s: SkewRing) -> OrderedSkewRing:
    """Quotient by the ideal identifying each graded copy along the order."""
    assoc = check_skew_associative(s)
    if not assoc.ok:
        raise NotAssociative(str(assoc))
    view = s._view
    p = s.algebra.p
    gens = []
    for g in range(view.count):
        for h in range(view.count):
            if g == h or not view.le(g, h):
                continue
            for v in view.ideal(g).basis:
                if not view.ideal(h).contains(v):
                    raise InvalidAction(
                        f"ordered pair {view.names[g]} <= {view.names[h]} with non-nested ideals"
                    )
                gens.append(vec_sub(s.lift(g, v), s.lift(h, v), p))
    n_ideal = ideal_closure(s.algebra, gens)
    q, proj = quotient(s.algebra, n_ideal)
    return OrderedSkewRing(s, n_ideal, q, proj)


def skew_unit(o: OrderedSkewRing) -> Vector:
    """Image of the sum of the anchor units; verified two-sided in the quotient."""
    view = o.skew._view
    if any(view.unit(e) is None for e in view.anchors):
        raise NotPreunital("some anchor ideal has no central idempotent identity")
    total = (0,) * o.skew.algebra.dim
    p = o.skew.algebra.p
    for e in view.anchors:
        u = view.unit(e)
        assert u is not None
        lifted = o.skew.lift(e, u)
        total = tuple((x + y) % p for x, y in zip(total, lifted))
    img = o.projection.apply(total)
    q = o.quotient
    for i in range(q.dim):
        b = q.basis_vector(i)
        if q.mul(img, b) != b or q.mul(b, img) != b:
            raise InvalidAction("anchor unit image is not an identity of the quotient")
    return img


def build_inv_sgp_skew(a: InvSgpAction) -> OrderedSkewRing:
    """Skew ring of a unital inverse-semigroup action, quotiented along the
    natural partial order."""
    rep = validate_inv_sgp_action(a)
    if not rep.ok:
        raise InvalidAction(f"skew ring needs a valid action:\n{rep}")
    if not inv_action_is_unital(a):
        bad = next(x for x in a.elements() if a.unit_vector(x) is None)
        raise NotUnital(
            f"ideal at {a.semigroup.names[bad]} has no central idempotent identity", arrow=bad
        )
    return build_ordered_skew(build_skew(a))


def _span_products(alg: Algebra, left: Sequence[Vector], right: Sequence[Vector]) -> Subspace:
    rows = [alg.mul(x, y) for x in left for y in right]
    return Subspace.span(alg.dim, rows, alg.p)


@dataclass
class MoritaReport:
    """Corner-subspace identities and context checks inside the globalized
    quotient, with the intrinsic quotient kept for dimension comparison."""

    r_ring: OrderedSkewRing
    t_ring: OrderedSkewRing
    one_r: Vector
    right_module: Subspace  # T * 1_R
    left_module: Subspace  # 1_R * T
    corner: Subspace  # 1_R * T * 1_R
    double: Subspace  # T * 1_R * T
    embedded_copy: Subspace
    clauses: dict[str, bool]
    dims: dict[str, int]
    objects_finite: bool = True

    @property
    def ok(self) -> bool:
        return all(self.clauses.values())

    def report(self) -> ValidationReport:
        rep = ValidationReport("morita context", MORITA_CLAUSES)
        for label, good in self.clauses.items():
            if not good:
                rep.add(label, "identity fails (see dims payload)")
        return rep


def morita_context(a: POAction, gl: Globalization) -> MoritaReport:
    """Verify the corner identities and context axioms for an action and a
    globalization of it, identifying the carrier with its embedded image."""
    if gl.base is not a and gl.base != a:
        raise NotAGlobalization("globalization does not belong to this action")
    if not is_unital(a):
        raise NotUnital("the corner identities need a unital action")
    checklist = verify_globalization(gl)
    if not checklist.ok:
        raise NotAGlobalization(str(checklist))
    r_ring = build_ordered_skew(build_skew(a))
    t_ring = build_ordered_skew(build_skew(gl.global_action))
    g0 = a.groupoid
    b = gl.global_action

    def anchor_pairs():
        for g in g0.arrows():
            yield g, g0.ran[g], g0.dom[g]

    return _morita_core(
        a,
        b,
        gl.embeddings,
        r_ring,
        t_ring,
        anchors=tuple(sorted(g0.objects)),
        triples=tuple(anchor_pairs()),
    )


def inv_sgp_morita(a: InvSgpAction, gl: InvSgpGlobalization) -> MoritaReport:
    """Same corner identities for an inverse-semigroup action and the
    globalization produced by the pipeline."""
    if gl.action.semigroup != a.semigroup:
        raise NotAGlobalization("globalization belongs to a different semigroup")
    if not inv_action_is_unital(a):
        raise NotUnital("the corner identities need a unital action")
    r_ring = build_inv_sgp_skew(a)
    t_ring = build_ordered_skew(build_skew(gl.action))
    s0 = a.semigroup

    def anchor_pairs():
        for s in s0.elements():
            yield s, s0.mul(s, s0.inverse(s)), s0.mul(s0.inverse(s), s)

    return _morita_core(
        a,
        gl.action,
        gl.embeddings,
        r_ring,
        t_ring,
        anchors=tuple(sorted(s0.idempotents())),
        triples=tuple(anchor_pairs()),
    )


def _morita_core(
    a: Action,
    b: Action,
    phi: dict[int, LinMap],
    r_ring: OrderedSkewRing,
    t_ring: OrderedSkewRing,
    anchors: tuple[int, ...],
    triples: tuple[tuple[int, int, int], ...],
) -> MoritaReport:
    q = t_ring.quotient
    p = q.p
    full = q.space()
    basis = [q.basis_vector(i) for i in range(q.dim)]

    one = [0] * q.dim
    for e in anchors:
        u = a.unit_vector(e)
        assert u is not None
        img = t_ring.project_lift(e, phi[e].apply(u))
        for i, x in enumerate(img):
            one[i] = (one[i] + x) % p
    one_r = tuple(one)

    right_module = Subspace.span(q.dim, [q.mul(t, one_r) for t in basis], p)  # T 1_R
    left_module = Subspace.span(q.dim, [q.mul(one_r, t) for t in basis], p)  # 1_R T
    corner = Subspace.span(q.dim, [q.mul(one_r, q.mul(t, one_r)) for t in basis], p)
    double = _span_products(q, right_module.basis, basis)  # T 1_R T

    def graded_sum(pieces: Sequence[tuple[int, Subspace]]) -> Subspace:
        total = Subspace.zero(q.dim, p)
        rows = []
        for grade, sub in pieces:
            for v in sub.basis:
                rows.append(t_ring.project_lift(grade, v))
        return total.add(Subspace.span(q.dim, rows, p))

    moved_pieces = []
    range_pieces = []
    embedded_pieces = []
    for g, anchor_r, anchor_d in triples:
        img_d = phi[anchor_d].image()
        moved = b.map_of[g].image_of(img_d.intersect(b.map_of[g].domain))
        moved_pieces.append((g, moved))
        range_pieces.append((g, phi[anchor_r].image()))
        embedded_pieces.append((g, phi[anchor_r].image_of(a.ideal_of[g])))
    sum_moved = graded_sum(moved_pieces)
    sum_range = graded_sum(range_pieces)
    embedded_copy = graded_sum(embedded_pieces)

    compat = True
    for x in left_module.basis:
        for xp in right_module.basis:
            for y in left_module.basis:
                if q.mul(q.mul(x, xp), y) != q.mul(x, q.mul(xp, y)):
                    compat = False
    for xp in left_module.basis:  # second law with the roles exchanged
        for x in right_module.basis:
            for yp in right_module.basis:
                if q.mul(q.mul(x, xp), yp) != q.mul(x, q.mul(xp, yp)):
                    compat = False

    pair_to_r = _span_products(q, left_module.basis, right_module.basis)
    pair_to_t = _span_products(q, right_module.basis, left_module.basis)

    unital_modules = (
        _span_products(q, corner.basis, left_module.basis) == left_module
        and _span_products(q, left_module.basis, basis) == left_module
        and _span_products(q, basis, right_module.basis) == right_module
        and _span_products(q, right_module.basis, corner.basis) == right_module
    )
    idempotent_rings = (
        _span_products(q, corner.basis, corner.basis) == corner
        and _span_products(q, basis, basis) == full
    )

    clauses = {
        "MOR(i)": right_module == sum_moved,
        "MOR(ii)": left_module == sum_range,
        "MOR(iii)": corner == embedded_copy,
        "MOR(iv)": double == full,
        "MOR(compat)": compat,
        "MOR(surj)": pair_to_r == embedded_copy and pair_to_t == full,
        "MOR(unital)": unital_modules,
        "MOR(idem)": idempotent_rings,
    }
    dims = {
        "T": q.dim,
        "R": r_ring.quotient.dim,
        "embedded_copy": embedded_copy.rank,
        "corner": corner.rank,
        "T1R": right_module.rank,
        "1RT": left_module.rank,
        "T1RT": double.rank,
        "one_r_idempotent": int(q.mul(one_r, one_r) == one_r),
        "copy_faithful": int(embedded_copy.rank == r_ring.quotient.dim),
    }
    return MoritaReport(
        r_ring=r_ring,
        t_ring=t_ring,
        one_r=one_r,
        right_module=right_module,
        left_module=left_module,
        corner=corner,
        double=double,
        embedded_copy=embedded_copy,
        clauses=clauses,
        dims=dims,
    )
