"""Finite inverse semigroups, the natural partial order, the two ESN
conversions, and premorphism verification (including maps into the
symmetric inverse structure on subspaces of an algebra)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .algebras import Algebra
from .errors import InvalidSemigroup, NotInductive
from .groupoids import OrderedGroupoid
from .linalg import LinMap, compose_partial, partial_inverse
from .validation import ValidationReport

SEMIGROUP_CLAUSES = ("ASSOC", "INVERSES", "IDEMPOTENTS")
PREMORPHISM_CLAUSES = ("PM(i)", "PM(ii)", "PM(iii)")
PREMORPHISM_DIAGNOSTICS = ("PM(dom)", "PM(meet)")


class InverseSemigroup:
    """A finite inverse semigroup given by its full multiplication table."""

    def __init__(self, names: Sequence[str], mult: Sequence[Sequence[int]]):
        self.names = tuple(names)
        self.n = len(self.names)
        if len(set(self.names)) != self.n:
            raise InvalidSemigroup("duplicate element names")
        if len(mult) != self.n or any(len(row) != self.n for row in mult):
            raise InvalidSemigroup("multiplication table must be n x n")
        self.mult = tuple(tuple(int(x) for x in row) for row in mult)
        self._report: Optional[ValidationReport] = None
        self._inverse: Optional[tuple[int, ...]] = None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, InverseSemigroup)
            and self.names == other.names
            and self.mult == other.mult
        )

    def __hash__(self):
        return hash((self.names, self.mult))

    def __repr__(self):
        return f"<inverse semigroup: {self.n} elements>"

    def elements(self) -> range:
        return range(self.n)

    def mul(self, s: int, t: int) -> int:
        return self.mult[s][t]

    def idempotents(self) -> tuple[int, ...]:
        return tuple(e for e in self.elements() if self.mult[e][e] == e)

    def validate(self) -> ValidationReport:
        if self._report is not None:
            return self._report
        rep = ValidationReport("inverse semigroup", SEMIGROUP_CLAUSES)
        nm = self.names
        for a in self.elements():
            for b in self.elements():
                for c in self.elements():
                    if self.mult[self.mult[a][b]][c] != self.mult[a][self.mult[b][c]]:
                        rep.add("ASSOC", f"({nm[a]}{nm[b]}){nm[c]} != {nm[a]}({nm[b]}{nm[c]})")
        inverse = []
        for s in self.elements():
            partners = [
                t
                for t in self.elements()
                if self.mult[self.mult[s][t]][s] == s and self.mult[self.mult[t][s]][t] == t
            ]
            if len(partners) != 1:
                rep.add("INVERSES", f"{nm[s]} has {len(partners)} inverse partner(s)")
                inverse.append(s)
            else:
                inverse.append(partners[0])
        idem = self.idempotents()
        for e in idem:
            for f in idem:
                if self.mult[e][f] != self.mult[f][e]:
                    rep.add("IDEMPOTENTS", f"idempotents {nm[e]}, {nm[f]} do not commute")
        if rep.clause_ok("INVERSES"):
            self._inverse = tuple(inverse)
        self._report = rep
        return rep

    def is_valid(self) -> bool:
        return self.validate().ok

    def require_valid(self) -> None:
        if not self.validate().ok:
            raise InvalidSemigroup(str(self.validate()))

    def inverse(self, s: int) -> int:
        self.require_valid()
        assert self._inverse is not None
        return self._inverse[s]

    def natural_le(self, s: int, t: int) -> bool:
        """s below t iff s = t*e for some idempotent e."""
        self.require_valid()
        return any(self.mult[t][e] == s for e in self.idempotents())

    def relabeled(self, perm: Sequence[int]) -> "InverseSemigroup":
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the elements")
        names = [""] * self.n
        mult = [[0] * self.n for _ in range(self.n)]
        for i in range(self.n):
            names[perm[i]] = self.names[i]
        for a in range(self.n):
            for b in range(self.n):
                mult[perm[a]][perm[b]] = perm[self.mult[a][b]]
        return InverseSemigroup(names, mult)


def validate_inverse_semigroup(s: InverseSemigroup) -> ValidationReport:
    return s.validate()


def natural_order(s: InverseSemigroup, a: int, b: int) -> bool:
    return s.natural_le(a, b)


def esn_to_groupoid(s: InverseSemigroup) -> OrderedGroupoid:
    """Elements become arrows; composition is defined on matching idempotents;
    the order is the natural partial order.  The result is inductive."""
    s.require_valid()
    comp = {}
    for a in s.elements():
        for b in s.elements():
            if s.mul(s.inverse(a), a) == s.mul(b, s.inverse(b)):
                comp[(a, b)] = s.mul(a, b)
    dom = [s.mul(s.inverse(a), a) for a in s.elements()]
    ran = [s.mul(a, s.inverse(a)) for a in s.elements()]
    leq = [
        [s.natural_le(a, b) for b in s.elements()]
        for a in s.elements()
    ]
    g = OrderedGroupoid(
        s.names, set(s.idempotents()), [s.inverse(a) for a in s.elements()], comp, dom, ran, leq
    )
    g.require_valid()
    if not g.is_inductive():
        raise NotInductive("derived groupoid is not inductive")
    return g


def esn_to_semigroup(g: OrderedGroupoid) -> InverseSemigroup:
    """Total multiplication by pseudoproduct; requires an inductive groupoid."""
    g.require_valid()
    if not g.is_inductive():
        raise NotInductive("pseudoproduct is not total without object meets")
    mult = [[0] * g.n for _ in range(g.n)]
    for a in g.arrows():
        for b in g.arrows():
            prod = g.pseudoproduct(a, b)
            assert prod is not None
            mult[a][b] = prod
    s = InverseSemigroup(g.names, mult)
    s.require_valid()
    return s


@dataclass(frozen=True)
class PartialBijections:
    """Target marker for premorphisms into the partial linear bijections
    of an algebra's underlying space (never materialized as a table)."""

    algebra: Algebra


Structure = Union[InverseSemigroup, OrderedGroupoid, PartialBijections]


@dataclass
class Premorphism:
    """A candidate premorphism between finite structures.

    `kind` selects the defining conditions: "inverse-semigroup" maps are
    checked on all pairs against the natural order; "inductive-groupoid"
    maps on composable pairs against the groupoid order.  Targets may be a
    concrete structure (mapping holds element indices) or PartialBijections
    (mapping holds one LinMap per source element).
    """

    source: Union[InverseSemigroup, OrderedGroupoid]
    target: Structure
    mapping: Sequence[Union[int, LinMap]]
    kind: str = "inverse-semigroup"


def _source_pairs(p: Premorphism):
    src = p.source
    if p.kind == "inverse-semigroup":
        if not isinstance(src, InverseSemigroup):
            raise InvalidSemigroup("inverse-semigroup premorphism needs a semigroup source")
        for a in src.elements():
            for b in src.elements():
                yield a, b, src.mul(a, b)
    elif p.kind == "inductive-groupoid":
        if not isinstance(src, OrderedGroupoid):
            raise InvalidSemigroup("inductive-groupoid premorphism needs a groupoid source")
        for a in src.arrows():
            for b in src.arrows():
                if src.composable(a, b):
                    yield a, b, src.compose(a, b)
    else:
        raise ValueError(f"unknown premorphism kind {p.kind!r}")


def _src_inverse(p: Premorphism, a: int) -> int:
    if isinstance(p.source, InverseSemigroup):
        return p.source.inverse(a)
    return p.source.inv[a]


def _src_le(p: Premorphism, a: int, b: int) -> bool:
    if isinstance(p.source, InverseSemigroup):
        return p.source.natural_le(a, b)
    return p.source.le(a, b)


def _verify_into_structure(p: Premorphism, rep: ValidationReport) -> None:
    tgt = p.target
    mapping = [int(x) for x in p.mapping]
    if isinstance(tgt, InverseSemigroup):
        tgt.require_valid()
        prod = tgt.mul
        t_inv = tgt.inverse
        t_le = tgt.natural_le
    else:
        assert isinstance(tgt, OrderedGroupoid)
        tgt.require_valid()
        prod = tgt.pseudoproduct
        t_inv = lambda a: tgt.inv[a]
        t_le = tgt.le
    src_names = p.source.names
    tgt_names = tgt.names
    for a, b, ab in _source_pairs(p):
        img = prod(mapping[a], mapping[b])
        if img is None or not t_le(img, mapping[ab]):
            rep.add(
                "PM(i)",
                f"image product of ({src_names[a]},{src_names[b]}) not below image of product",
            )
    for a in range(len(mapping)):
        if t_inv(mapping[a]) != mapping[_src_inverse(p, a)]:
            rep.add("PM(ii)", f"image of inverse of {src_names[a]} is not the inverse image")
    for a in range(len(mapping)):
        for b in range(len(mapping)):
            if _src_le(p, a, b) and not t_le(mapping[a], mapping[b]):
                rep.add(
                    "PM(iii)",
                    f"{src_names[a]} below {src_names[b]} but images {tgt_names[mapping[a]]}, "
                    f"{tgt_names[mapping[b]]} are unordered",
                )


def _verify_into_partial_bijections(p: Premorphism, rep: ValidationReport) -> None:
    maps: list[LinMap] = list(p.mapping)  # type: ignore[arg-type]
    names = p.source.names
    for a, b, ab in _source_pairs(p):
        composite = compose_partial(maps[a], maps[b])
        if not composite.as_partial_le(maps[ab]):
            rep.add(
                "PM(i)",
                f"composite of images of ({names[a]},{names[b]}) is not a restriction "
                "of the image of the product",
            )
    for a in range(len(maps)):
        inv_img = maps[_src_inverse(p, a)]
        back = partial_inverse(maps[a])
        if not (
            back.domain == inv_img.domain
            and back.agrees_with(inv_img, back.domain)
        ):
            rep.add("PM(ii)", f"image of inverse of {names[a]} is not the inverse partial map")
    for a in range(len(maps)):
        for b in range(len(maps)):
            if _src_le(p, a, b) and not maps[a].as_partial_le(maps[b]):
                rep.add("PM(iii)", f"{names[a]} below {names[b]} but images are unordered")
    if p.kind == "inductive-groupoid" and isinstance(p.source, OrderedGroupoid):
        g = p.source
        for a in g.arrows():
            # d(psi(a)) is the identity on the image map's domain
            if not maps[g.dom[a]].domain.contains_subspace(maps[a].domain):
                rep.add("PM(dom)", f"domain of image of {names[a]} escapes the domain object image")
        for a in g.arrows():
            for e in g.objects:
                if g.le(e, g.ran[a]):
                    co = g.corestriction(e, a)
                    expected = maps[e].domain.intersect(maps[a].image())
                    if maps[co].image() != expected:
                        rep.add(
                            "PM(meet)",
                            f"range of image of ({names[e]}|{names[a]}) is not the object-meet",
                        )


def verify_premorphism(p: Premorphism) -> ValidationReport:
    checked = PREMORPHISM_CLAUSES
    if p.kind == "inductive-groupoid" and isinstance(p.target, PartialBijections):
        checked = PREMORPHISM_CLAUSES + PREMORPHISM_DIAGNOSTICS
    rep = ValidationReport(f"{p.kind} premorphism", checked)
    if len(p.mapping) != (
        p.source.n if isinstance(p.source, (InverseSemigroup, OrderedGroupoid)) else 0
    ):
        raise InvalidSemigroup("mapping must cover every source element")
    if isinstance(p.target, PartialBijections):
        _verify_into_partial_bijections(p, rep)
    else:
        _verify_into_structure(p, rep)
    return rep
