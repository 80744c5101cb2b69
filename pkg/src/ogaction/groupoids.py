"""Finite ordered groupoids: category axioms, order axioms, restrictions,
object meets, pseudoproducts, and the derived arrow sets used by the
globalization constructions."""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .errors import (
    InvalidGroupoid,
    NotBelowDomain,
    NotBelowRange,
)
from .validation import Issue, ValidationReport

GROUPOID_CLAUSES = ("CAT", "INV", "OBJ")
ORDER_CLAUSES = ("ORD", "OG1", "OG2", "OG3", "OG3*")


def _closure(n: int, pairs: Iterable[tuple[int, int]]) -> tuple[tuple[bool, ...], ...]:
    leq = [[i == j for j in range(n)] for i in range(n)]
    for a, b in pairs:
        leq[a][b] = True
    changed = True
    while changed:
        changed = False
        for a in range(n):
            for b in range(n):
                if leq[a][b]:
                    for c in range(n):
                        if leq[b][c] and not leq[a][c]:
                            leq[a][c] = True
                            changed = True
    return tuple(tuple(row) for row in leq)


class OrderedGroupoid:
    """Arrows 0..n-1 with partial composition, inverses, and a partial order.

    The order is stored as a full boolean matrix; `from_parts` closes the
    authored generating pairs reflexively and transitively before storing.
    """

    def __init__(
        self,
        names: Sequence[str],
        objects: Iterable[int],
        inv: Sequence[int],
        comp: dict[tuple[int, int], int],
        dom: Sequence[int],
        ran: Sequence[int],
        leq: Sequence[Sequence[bool]],
    ):
        self.names = tuple(names)
        self.n = len(self.names)
        self.objects = frozenset(objects)
        self.inv = tuple(inv)
        self.comp = dict(comp)
        self.dom = tuple(dom)
        self.ran = tuple(ran)
        self.leq = tuple(tuple(bool(x) for x in row) for row in leq)
        self._groupoid_report: Optional[ValidationReport] = None
        self._order_report: Optional[ValidationReport] = None

    @classmethod
    def from_parts(
        cls,
        names: Sequence[str],
        objects: Iterable[str],
        inv: dict[str, str],
        comp_triples: Iterable[tuple[str, str, str]],
        order_pairs: Iterable[tuple[str, str]],
    ) -> "OrderedGroupoid":
        index = {nm: i for i, nm in enumerate(names)}
        n = len(names)
        if len(index) != n:
            raise InvalidGroupoid("duplicate arrow names")

        def look(nm: str) -> int:
            try:
                return index[nm]
            except KeyError:
                raise InvalidGroupoid(f"unknown arrow name {nm!r}")

        obj = [look(o) for o in objects]
        inv_t = []
        for nm in names:
            if nm not in inv:
                raise InvalidGroupoid(f"no inverse listed for arrow {nm!r}")
            inv_t.append(look(inv[nm]))
        comp = {}
        for g, h, gh in comp_triples:
            comp[(look(g), look(h))] = look(gh)
        dom = [-1] * n
        ran = [-1] * n
        for g in range(n):
            dom[g] = comp.get((inv_t[g], g), -1)
            ran[g] = comp.get((g, inv_t[g]), -1)
        if any(d < 0 for d in dom) or any(r < 0 for r in ran):
            missing = [names[g] for g in range(n) if dom[g] < 0 or ran[g] < 0]
            raise InvalidGroupoid(f"missing inverse products for: {', '.join(missing)}")
        leq = _closure(n, [(look(a), look(b)) for a, b in order_pairs])
        return cls(names, obj, inv_t, comp, dom, ran, leq)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrderedGroupoid)
            and self.names == other.names
            and self.objects == other.objects
            and self.inv == other.inv
            and self.comp == other.comp
            and self.leq == other.leq
        )

    def __hash__(self):
        return hash((self.names, self.objects, self.inv, tuple(sorted(self.comp.items())), self.leq))

    def __repr__(self):
        return f"<groupoid: {self.n} arrows, {len(self.objects)} objects>"

    def arrows(self) -> range:
        return range(self.n)

    def composable(self, g: int, h: int) -> bool:
        return self.dom[g] == self.ran[h]

    def compose(self, g: int, h: int) -> int:
        try:
            return self.comp[(g, h)]
        except KeyError:
            raise InvalidGroupoid(f"arrows {self.names[g]}, {self.names[h]} do not compose")

    def le(self, g: int, h: int) -> bool:
        return self.leq[g][h]

    # -- validation ----------------------------------------------------

    def validate_groupoid(self) -> ValidationReport:
        if self._groupoid_report is not None:
            return self._groupoid_report
        rep = ValidationReport("groupoid", GROUPOID_CLAUSES)
        nm = self.names
        for e in self.objects:
            if self.inv[e] != e:
                rep.add("OBJ", f"object {nm[e]} is not its own inverse")
            if self.dom[e] != e or self.ran[e] != e:
                rep.add("OBJ", f"object {nm[e]} is not its own domain/range")
        for g in self.arrows():
            if self.dom[g] not in self.objects:
                rep.add("OBJ", f"domain of {nm[g]} is not an object")
            if self.ran[g] not in self.objects:
                rep.add("OBJ", f"range of {nm[g]} is not an object")
            if self.inv[self.inv[g]] != g:
                rep.add("INV", f"inverse of {nm[g]} is not an involution")
        for g in self.arrows():
            for h in self.arrows():
                defined = (g, h) in self.comp
                if defined != self.composable(g, h):
                    rep.add(
                        "CAT",
                        f"product {nm[g]}*{nm[h]} defined iff domains match fails",
                    )
        for (g, h), gh in self.comp.items():
            if self.composable(g, h):
                if self.dom[gh] != self.dom[h] or self.ran[gh] != self.ran[g]:
                    rep.add("CAT", f"endpoints of {nm[g]}*{nm[h]} are wrong")
        for g in self.arrows():
            if self.comp.get((g, self.dom[g])) != g:
                rep.add("CAT", f"{nm[g]} * its domain is not {nm[g]}")
            if self.comp.get((self.ran[g], g)) != g:
                rep.add("CAT", f"range * {nm[g]} is not {nm[g]}")
            if self.comp.get((self.inv[g], g)) != self.dom[g]:
                rep.add("INV", f"inv({nm[g]}) * {nm[g]} is not the domain object")
            if self.comp.get((g, self.inv[g])) != self.ran[g]:
                rep.add("INV", f"{nm[g]} * inv({nm[g]}) is not the range object")
        for (g, h), gh in self.comp.items():
            for k in self.arrows():
                if (h, k) not in self.comp:
                    continue
                hk = self.comp[(h, k)]
                left = self.comp.get((gh, k))
                right = self.comp.get((g, hk))
                if left is None or right is None or left != right:
                    rep.add("CAT", f"associativity fails on ({nm[g]},{nm[h]},{nm[k]})")
        self._groupoid_report = rep
        return rep

    def validate_order(self) -> ValidationReport:
        if self._order_report is not None:
            return self._order_report
        rep = ValidationReport("groupoid order", ORDER_CLAUSES)
        nm = self.names
        for a in self.arrows():
            if not self.leq[a][a]:
                rep.add("ORD", f"order is not reflexive at {nm[a]}")
            for b in self.arrows():
                if a != b and self.leq[a][b] and self.leq[b][a]:
                    rep.add("ORD", f"order is not antisymmetric on {nm[a]}, {nm[b]}")
                if self.leq[a][b]:
                    for c in self.arrows():
                        if self.leq[b][c] and not self.leq[a][c]:
                            rep.add("ORD", f"order is not transitive via {nm[a]}<={nm[b]}<={nm[c]}")
        for g in self.arrows():
            for h in self.arrows():
                if self.leq[g][h] and not self.leq[self.inv[g]][self.inv[h]]:
                    rep.add("OG1", f"{nm[g]} <= {nm[h]} but inverses are unordered")
        for g in self.arrows():
            for h in self.arrows():
                if not self.leq[g][h]:
                    continue
                for k in self.arrows():
                    for l in self.arrows():
                        if not self.leq[k][l]:
                            continue
                        if self.composable(g, k) and self.composable(h, l):
                            if not self.leq[self.comp[(g, k)]][self.comp[(h, l)]]:
                                rep.add(
                                    "OG2",
                                    f"products of {nm[g]}<={nm[h]} with {nm[k]}<={nm[l]} are unordered",
                                )
        for g in self.arrows():
            for e in self.objects:
                if self.leq[e][self.dom[g]]:
                    found = [x for x in self.arrows() if self.leq[x][g] and self.dom[x] == e]
                    if len(found) != 1:
                        rep.add(
                            "OG3",
                            f"restriction of {nm[g]} at {nm[e]}: {len(found)} candidates",
                        )
                if self.leq[e][self.ran[g]]:
                    found = [x for x in self.arrows() if self.leq[x][g] and self.ran[x] == e]
                    if len(found) != 1:
                        rep.add(
                            "OG3*",
                            f"corestriction of {nm[g]} at {nm[e]}: {len(found)} candidates",
                        )
        self._order_report = rep
        return rep

    def is_valid(self) -> bool:
        return self.validate_groupoid().ok and self.validate_order().ok

    def require_valid(self) -> None:
        if not self.validate_groupoid().ok:
            raise InvalidGroupoid(str(self.validate_groupoid()))
        if not self.validate_order().ok:
            raise InvalidGroupoid(str(self.validate_order()))

    # -- order machinery -----------------------------------------------

    def restriction(self, g: int, e: int) -> int:
        """The unique arrow below g with domain e (e below dom g)."""
        if e not in self.objects or not self.leq[e][self.dom[g]]:
            raise NotBelowDomain(
                f"{self.names[e]} is not an object below the domain of {self.names[g]}"
            )
        found = [x for x in self.arrows() if self.leq[x][g] and self.dom[x] == e]
        if len(found) != 1:
            raise InvalidGroupoid(
                f"restriction of {self.names[g]} at {self.names[e]} is not unique"
            )
        return found[0]

    def corestriction(self, e: int, g: int) -> int:
        """The unique arrow below g with range e (e below ran g)."""
        if e not in self.objects or not self.leq[e][self.ran[g]]:
            raise NotBelowRange(
                f"{self.names[e]} is not an object below the range of {self.names[g]}"
            )
        found = [x for x in self.arrows() if self.leq[x][g] and self.ran[x] == e]
        if len(found) != 1:
            raise InvalidGroupoid(
                f"corestriction of {self.names[g]} at {self.names[e]} is not unique"
            )
        return found[0]

    def meet_objects(self, e: int, f: int) -> Optional[int]:
        lower = [
            x
            for x in sorted(self.objects)
            if self.leq[x][e] and self.leq[x][f]
        ]
        greatest = [z for z in lower if all(self.leq[w][z] for w in lower)]
        return greatest[0] if len(greatest) == 1 else None

    def pseudoproduct(self, g: int, h: int) -> Optional[int]:
        """(g | d(g)∧r(h)) * (d(g)∧r(h) | h) when the object meet exists."""
        m = self.meet_objects(self.dom[g], self.ran[h])
        if m is None:
            return None
        left = self.restriction(g, m)
        right = self.corestriction(m, h)
        return self.comp[(left, right)]

    def is_inductive(self) -> bool:
        objs = sorted(self.objects)
        return all(
            self.meet_objects(e, f) is not None for e in objs for f in objs
        )

    def is_pseudoassociative(self) -> bool:
        """Existence of (g*h)*k and g*(h*k) agree on all triples.

        When both sides exist they must coincide; a difference would break
        the ordered-groupoid axioms and raises instead of returning False.
        """
        for g in self.arrows():
            for h in self.arrows():
                gh = self.pseudoproduct(g, h)
                for k in self.arrows():
                    hk = self.pseudoproduct(h, k)
                    left = None if gh is None else self.pseudoproduct(gh, k)
                    right = None if hk is None else self.pseudoproduct(g, hk)
                    if (left is None) != (right is None):
                        return False
                    if left is not None and left != right:
                        raise InvalidGroupoid(
                            "pseudoproducts exist on both sides but differ on "
                            f"({self.names[g]},{self.names[h]},{self.names[k]})"
                        )
        return True

    def down_range_set(self, g: int) -> tuple[int, ...]:
        """Arrows whose range lies below ran(g)."""
        r = self.ran[g]
        return tuple(h for h in self.arrows() if self.leq[self.ran[h]][r])

    def pseudo_composable_set(self, g: int) -> tuple[int, ...]:
        """Arrows h with inv(g) * h defined."""
        gi = self.inv[g]
        return tuple(
            h
            for h in self.arrows()
            if self.meet_objects(self.dom[gi], self.ran[h]) is not None
        )

    def relabeled(self, perm: Sequence[int]) -> "OrderedGroupoid":
        """Rebuild with arrow i renamed to position perm[i]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the arrows")
        names = [""] * self.n
        inv = [0] * self.n
        dom = [0] * self.n
        ran = [0] * self.n
        for i in range(self.n):
            names[perm[i]] = self.names[i]
            inv[perm[i]] = perm[self.inv[i]]
            dom[perm[i]] = perm[self.dom[i]]
            ran[perm[i]] = perm[self.ran[i]]
        comp = {(perm[g], perm[h]): perm[gh] for (g, h), gh in self.comp.items()}
        leq = [[False] * self.n for _ in range(self.n)]
        for a in range(self.n):
            for b in range(self.n):
                leq[perm[a]][perm[b]] = self.leq[a][b]
        return OrderedGroupoid(names, {perm[o] for o in self.objects}, inv, comp, dom, ran, leq)


def validate_groupoid(g: OrderedGroupoid) -> ValidationReport:
    return g.validate_groupoid()


def validate_order(g: OrderedGroupoid) -> ValidationReport:
    return g.validate_order()
