"""Globalization of partial ordered actions.

Both constructions embed the carrier into a product ring indexed by the
arrows, push the ideals around with arrow translations, and cut out the
subring generated by the translated images.  The full construction
translates along restriction-then-compose over the down-range arrow sets;
the minimal one translates along pseudoproducts over the pseudo-composable
sets and only sums over arrows with equal range.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .actions import (
    InvSgpAction,
    POAction,
    first_non_unital_arrow,
    groupoid_action_to_semigroup_action,
    inv_action_is_preunital,
    inv_action_is_unital,
    is_global,
    is_preunital,
    is_strong,
    is_unital,
    satisfies_ps,
    semigroup_action_to_groupoid_action,
    validate_po_action,
)
from .algebras import (
    Algebra,
    is_ideal,
    is_ring_hom,
    product_ring,
    subalgebra_on,
    subring_closure,
)
from .errors import (
    InvalidAction,
    NotContained,
    NotPreunital,
    NotPseudoassociative,
    NotStrong,
    NotUnital,
)
from .linalg import LinMap, Subspace, Vector
from .validation import ValidationReport

GLOBALIZATION_CLAUSES = (
    "GLOB(valid)",
    "GLOB(global)",
    "GLOB(mono)",
    "GLOB(i)",
    "GLOB(ii)",
    "GLOB(iii)",
    "GLOB(iv)",
    "GLOB(iv')",
    "GLOB(restr)",
)

SEMIGROUP_GLOBALIZATION_CLAUSES = ("SGLOB(i)", "SGLOB(ii)", "SGLOB(iii)", "SGLOB(iv)")


@dataclass
class Globalization:
    """A global action together with the embeddings that witness it.

    `ambient` and `gamma` carry the product-ring scaffolding when the
    globalization was built here; externally supplied globalizations leave
    them unset and are still checkable by verify_globalization.
    """

    base: POAction
    global_action: POAction
    embeddings: dict[int, LinMap]
    minimal: bool = False
    ambient: Optional[Algebra] = None
    ambient_inclusion: Optional[LinMap] = None
    gamma: Optional[dict[int, LinMap]] = None


def as_globalization(
    base: POAction,
    global_action: POAction,
    embeddings: dict[int, LinMap],
    minimal: bool = False,
) -> Globalization:
    """Wrap an externally supplied global action for verification."""
    return Globalization(base, global_action, dict(embeddings), minimal=minimal)


def _blocks_subspace(total_dim: int, p: int, block_dim: int, blocks: Sequence[int]) -> Subspace:
    rows = []
    for b in blocks:
        for i in range(block_dim):
            row = [0] * total_dim
            row[b * block_dim + i] = 1
            rows.append(row)
    return Subspace.span(total_dim, rows, p)


def _translation_map(
    total_dim: int,
    p: int,
    block_dim: int,
    in_blocks: Sequence[int],
    out_blocks: Sequence[int],
    source_of: dict[int, int],
) -> LinMap:
    """Map F-vectors supported on in_blocks to out_blocks; output block h
    copies input block source_of[h]."""
    domain = _blocks_subspace(total_dim, p, block_dim, sorted(in_blocks))
    codomain = _blocks_subspace(total_dim, p, block_dim, sorted(out_blocks))
    images = []
    for k in sorted(in_blocks):
        for i in range(block_dim):
            img = [0] * total_dim
            for h in out_blocks:
                if source_of[h] == k:
                    img[h * block_dim + i] = 1
            images.append(tuple(img))
    return LinMap.from_images(domain, codomain, images)


def _embedding_vector(
    a: POAction, e: int, v: Vector, support: Sequence[int], total_dim: int
) -> Vector:
    """The product-ring vector with block h holding alpha_{h^{-1}}(v * 1_h)."""
    g0 = a.groupoid
    n = a.carrier.dim
    out = [0] * total_dim
    for h in support:
        unit_h = a.unit_vector(h)
        assert unit_h is not None
        cut = a.carrier.mul(v, unit_h)
        moved = a.map_of[g0.inv[h]].apply(cut)
        for i, x in enumerate(moved):
            out[h * n + i] = x
    return tuple(out)


def _build(a: POAction, minimal: bool) -> Globalization:
    rep = validate_po_action(a)
    if not rep.ok:
        raise InvalidAction(f"cannot globalize an invalid action:\n{rep}")
    bad = first_non_unital_arrow(a)
    if bad is not None:
        raise NotUnital(
            f"ideal at {a.groupoid.names[bad]} has no central idempotent identity",
            arrow=bad,
        )
    g0 = a.groupoid
    if minimal:
        if not is_strong(a):
            raise NotStrong("minimal globalization needs a strong action")
        if not satisfies_ps(a):
            # strength alone does not grant the composition law: object
            # meets must also carry exactly the ideal intersections
            raise NotStrong(
                "action is strong but fails the composition law along pseudoproducts"
            )
        if not g0.is_pseudoassociative():
            raise NotPseudoassociative("minimal globalization needs a pseudoassociative groupoid")
    n = a.carrier.dim
    count = g0.n
    ambient = product_ring(a.carrier, count)
    total = ambient.dim
    p = a.carrier.p

    if minimal:
        support_of = {g: g0.pseudo_composable_set(g) for g in g0.arrows()}
    else:
        support_of = {g: g0.down_range_set(g) for g in g0.arrows()}

    gamma: dict[int, LinMap] = {}
    for g in g0.arrows():
        gi = g0.inv[g]
        out_blocks = support_of[g]
        in_blocks = support_of[gi]
        source_of = {}
        for h in out_blocks:
            if minimal:
                src = g0.pseudoproduct(gi, h)
                assert src is not None
            else:
                src = g0.comp[(g0.restriction(gi, g0.ran[h]), h)]
            source_of[h] = src
        gamma[g] = _translation_map(total, p, n, in_blocks, out_blocks, source_of)

    emb_support = {
        e: (support_of[e] if minimal else tuple(h for h in g0.arrows() if g0.ran[h] == e))
        for e in g0.objects
    }
    phi_raw: dict[int, LinMap] = {}
    for e in sorted(g0.objects):
        dom = a.ideal_of[e]
        images = [
            _embedding_vector(a, e, v, emb_support[e], total) for v in dom.basis
        ]
        cod = Subspace.span(total, images, p)
        phi_raw[e] = LinMap.from_images(dom, cod, images)

    piece: dict[int, Subspace] = {}
    for g in g0.arrows():
        if minimal:
            gens_arrows = [h for h in g0.arrows() if g0.ran[h] == g0.ran[g]]
        else:
            gens_arrows = [h for h in g0.arrows() if g0.le(g0.ran[h], g0.ran[g])]
        parts = []
        for h in gens_arrows:
            img = phi_raw[g0.dom[h]].image()
            parts.append(gamma[h].image_of(img))
        piece[g] = subring_closure(ambient, parts)

    carrier_sub = Subspace.zero(total, p)
    for e in g0.objects:
        carrier_sub = carrier_sub.add(piece[e])
    big_algebra, inclusion = subalgebra_on(
        ambient, carrier_sub, name=f"{a.name or 'action'}::globalized-carrier"
    )

    def pull(sub: Subspace) -> Subspace:
        rows = [carrier_sub.coordinates_of(v) for v in sub.basis]
        return Subspace.span(carrier_sub.rank, rows, p)

    ideals = tuple(pull(piece[g]) for g in g0.arrows())
    maps = []
    for g in g0.arrows():
        dom = ideals[g0.inv[g]]
        images = []
        for v in dom.basis:
            big = carrier_sub.from_coordinates(v)
            out = gamma[g].apply(big)
            if not carrier_sub.contains(out):
                raise InvalidAction(
                    f"translated carrier escapes the generated subring at {g0.names[g]} (finding)"
                )
            images.append(carrier_sub.coordinates_of(out))
        maps.append(LinMap.from_images(dom, ideals[g], images))
    beta = POAction(
        g0,
        big_algebra,
        ideals,
        tuple(maps),
        name=f"{a.name or 'action'}::globalized" + ("-minimal" if minimal else ""),
    )
    embeddings = {}
    for e in sorted(g0.objects):
        dom = a.ideal_of[e]
        images = [carrier_sub.coordinates_of(v) for v in (phi_raw[e].apply(w) for w in dom.basis)]
        embeddings[e] = LinMap.from_images(dom, ideals[e], images)

    built = Globalization(
        base=a,
        global_action=beta,
        embeddings=embeddings,
        minimal=minimal,
        ambient=ambient,
        ambient_inclusion=inclusion,
        gamma=gamma,
    )
    report = verify_globalization(built)
    if not report.ok:
        raise InvalidAction(f"construction failed its own checklist (finding):\n{report}")
    if minimal and not satisfies_ps(beta):
        raise InvalidAction("minimal construction violates the composition law (finding)")
    return built


def build_globalization(a: POAction) -> Globalization:
    """Globalize a unital partial ordered action over the down-range sets."""
    return _build(a, minimal=False)


def build_minimal_globalization(a: POAction) -> Globalization:
    """Globalize a unital strong action over pseudoproduct translations,
    generating each piece only from arrows of equal range."""
    return _build(a, minimal=True)


def verify_globalization(gl: Globalization) -> ValidationReport:
    """Checklist for a global action plus embeddings to be a globalization.

    Clause (iv') is evaluated only when the globalization claims minimality.
    The final clause rebuilds the restriction data of the global action
    along the embedding images and checks it is equivalent to the base.
    """
    checked = GLOBALIZATION_CLAUSES if gl.minimal else tuple(
        c for c in GLOBALIZATION_CLAUSES if c != "GLOB(iv')"
    )
    rep = ValidationReport("globalization", checked)
    a, b = gl.base, gl.global_action
    g0 = a.groupoid
    nm = g0.names
    if g0 != b.groupoid:
        rep.add("GLOB(valid)", "base and global actions live over different groupoids")
        return rep
    beta_rep = validate_po_action(b)
    if not beta_rep.ok:
        rep.add("GLOB(valid)", f"global action fails validation: {beta_rep.issues[0]}")
    if not is_global(b):
        rep.add("GLOB(global)", "some ideal differs from its range ideal")
    for e in sorted(g0.objects):
        m = gl.embeddings.get(e)
        if m is None or m.domain != a.ideal_of[e]:
            rep.add("GLOB(mono)", f"embedding at {nm[e]} missing or with wrong domain")
            return rep
        if not m.is_injective:
            rep.add("GLOB(mono)", f"embedding at {nm[e]} is not injective")
        if not is_ring_hom(m, a.carrier, b.carrier):
            rep.add("GLOB(mono)", f"embedding at {nm[e]} is not multiplicative")
        if not b.ideal_of[e].contains_subspace(m.image()):
            rep.add("GLOB(mono)", f"embedding at {nm[e]} escapes the object ideal")
    images = {e: gl.embeddings[e].image() for e in g0.objects}
    for e in sorted(g0.objects):
        try:
            if not is_ideal(b.carrier, images[e], b.ideal_of[e]):
                rep.add("GLOB(i)", f"embedded ideal at {nm[e]} does not absorb its object ideal")
        except NotContained:
            rep.add("GLOB(i)", f"embedded ideal at {nm[e]} is not inside its object ideal")
    phi = gl.embeddings
    for g in g0.arrows():
        r, d = g0.ran[g], g0.dom[g]
        lhs = phi[r].image_of(a.ideal_of[g])
        moved = b.map_of[g].image_of(images[d].intersect(b.map_of[g].domain))
        rhs = images[r].intersect(moved)
        if lhs != rhs:
            rep.add("GLOB(ii)", f"embedded ideal at {nm[g]} is not the stated intersection")
    for g in g0.arrows():
        r, d = g0.ran[g], g0.dom[g]
        for v in a.ideal_of[g0.inv[g]].basis:
            lhs = phi[r].apply(a.map_of[g].apply(v))
            moved = phi[d].apply(v)
            if not b.map_of[g].domain.contains(moved):
                rep.add("GLOB(iii)", f"embedded vector escapes the map domain at {nm[g]}")
                continue
            if lhs != b.map_of[g].apply(moved):
                rep.add("GLOB(iii)", f"intertwining fails at {nm[g]}")
    for g in g0.arrows():
        gens = [h for h in g0.arrows() if g0.le(g0.ran[h], g0.ran[g])]
        total = Subspace.zero(b.carrier.dim, b.carrier.p)
        for h in gens:
            dh = g0.dom[h]
            total = total.add(b.map_of[h].image_of(images[dh].intersect(b.map_of[h].domain)))
        if total != b.ideal_of[g]:
            rep.add("GLOB(iv)", f"piece at {nm[g]} differs from the down-range sum")
    if gl.minimal:
        for g in g0.arrows():
            gens = [h for h in g0.arrows() if g0.ran[h] == g0.ran[g]]
            total = Subspace.zero(b.carrier.dim, b.carrier.p)
            for h in gens:
                dh = g0.dom[h]
                total = total.add(b.map_of[h].image_of(images[dh].intersect(b.map_of[h].domain)))
            if total != b.ideal_of[g]:
                rep.add("GLOB(iv')", f"piece at {nm[g]} differs from the equal-range sum")
    # Restriction data along the embedded family: the pieces the family cuts
    # out of the global action must be the embedded base ideals, with the
    # embeddings intertwining the maps.  (The family need not be monotone:
    # the per-object embeddings may have disjoint supports.)
    for g in g0.arrows():
        r, d = g0.ran[g], g0.dom[g]
        moved = b.map_of[g].image_of(images[d].intersect(b.map_of[g].domain))
        piece = images[r].intersect(moved)
        if phi[r].image_of(a.ideal_of[g]) != piece:
            rep.add("GLOB(restr)", f"restriction piece at {nm[g]} is not the embedded ideal")
            continue
        for v in a.ideal_of[g0.inv[g]].basis:
            moved_v = phi[d].apply(v)
            if not b.map_of[g].domain.contains(moved_v):
                rep.add("GLOB(restr)", f"restriction map undefined at {nm[g]}")
                continue
            if b.map_of[g].apply(moved_v) != phi[r].apply(a.map_of[g].apply(v)):
                rep.add("GLOB(restr)", f"restricted map differs from the base at {nm[g]}")
    return rep


@dataclass
class InvSgpGlobalization:
    """Result of the inverse-semigroup pipeline: a global semigroup action,
    its embeddings, the checklist report, and the inner groupoid build."""

    action: InvSgpAction
    embeddings: dict[int, LinMap]
    report: ValidationReport
    inner: Globalization


def globalize_inverse_semigroup_action(a: InvSgpAction) -> InvSgpGlobalization:
    """Transfer to the derived groupoid, build the minimal globalization,
    and transport the result back, checking the semigroup checklist."""
    if not inv_action_is_preunital(a):
        raise NotPreunital("pipeline needs unital idempotent ideals")
    if not inv_action_is_unital(a):
        bad = next(s for s in a.elements() if a.unit_vector(s) is None)
        raise NotUnital(
            f"ideal at {a.semigroup.names[bad]} has no central idempotent identity",
            arrow=bad,
        )
    omega = semigroup_action_to_groupoid_action(a)
    inner = build_minimal_globalization(omega)
    beta = groupoid_action_to_semigroup_action(inner.global_action, a.semigroup)
    embeddings = dict(inner.embeddings)
    rep = _verify_semigroup_globalization(a, beta, embeddings)
    return InvSgpGlobalization(beta, embeddings, rep, inner)


def _verify_semigroup_globalization(
    a: InvSgpAction, b: InvSgpAction, phi: dict[int, LinMap]
) -> ValidationReport:
    rep = ValidationReport("semigroup globalization", SEMIGROUP_GLOBALIZATION_CLAUSES)
    s0 = a.semigroup
    nm = s0.names
    images = {e: phi[e].image() for e in s0.idempotents()}
    for e in s0.idempotents():
        try:
            if not is_ideal(b.carrier, images[e], b.ideal_of[e]):
                rep.add("SGLOB(i)", f"embedded ideal at {nm[e]} does not absorb its object ideal")
        except NotContained:
            rep.add("SGLOB(i)", f"embedded ideal at {nm[e]} escapes its object ideal")
    for s in s0.elements():
        anchor = s0.mul(s, s0.inverse(s))
        co_anchor = s0.mul(s0.inverse(s), s)
        lhs = phi[anchor].image_of(a.ideal_of[s])
        moved = b.map_of[s].image_of(images[co_anchor].intersect(b.map_of[s].domain))
        if lhs != images[anchor].intersect(moved):
            rep.add("SGLOB(ii)", f"embedded ideal at {nm[s]} is not the stated intersection")
    for s in s0.elements():
        anchor = s0.mul(s, s0.inverse(s))
        co_anchor = s0.mul(s0.inverse(s), s)
        for v in a.ideal_of[s0.inverse(s)].basis:
            lhs = phi[anchor].apply(a.map_of[s].apply(v))
            moved = phi[co_anchor].apply(v)
            if not b.map_of[s].domain.contains(moved):
                rep.add("SGLOB(iii)", f"embedded vector escapes the map domain at {nm[s]}")
                continue
            if lhs != b.map_of[s].apply(moved):
                rep.add("SGLOB(iii)", f"intertwining fails at {nm[s]}")
    for s in s0.elements():
        anchor = s0.mul(s, s0.inverse(s))
        total = Subspace.zero(b.carrier.dim, b.carrier.p)
        for t in s0.elements():
            if s0.mul(t, s0.inverse(t)) != anchor:
                continue
            co = s0.mul(s0.inverse(t), t)
            total = total.add(
                b.map_of[t].image_of(images[co].intersect(b.map_of[t].domain))
            )
        if total != b.ideal_of[s]:
            rep.add("SGLOB(iv)", f"piece at {nm[s]} differs from the equal-anchor sum")
    return rep
