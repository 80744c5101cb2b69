"""Finite-dimensional algebras over a prime field, given by structure constants.

An algebra of dimension n stores a rank-3 table c with basis products
b_i * b_j = sum_k c[i][j][k] * b_k.  Associativity (and the unit law when a
unit is declared) is checked at construction unless check=False is passed;
downstream operations assume it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from .errors import (
    AmbientMismatch,
    InvalidAlgebra,
    NotAnIdeal,
    NotCentralIdempotent,
    NotContained,
    NotMultiplicativelyClosed,
)
from .linalg import (
    LinMap,
    Matrix,
    PrimeModulus,
    Subspace,
    Vector,
    as_modulus,
    express,
    is_zero_vec,
    vec,
    vec_add,
    vec_scale,
    zero_vec,
)
from .validation import Issue, ValidationReport


class Algebra:
    """An associative F_p-algebra on an explicit basis."""

    def __init__(
        self,
        modulus: PrimeModulus | int,
        dim: int,
        table: Sequence[Sequence[Sequence[int]]],
        unit: Optional[Sequence[int]] = None,
        check: bool = True,
        name: str = "",
    ):
        self.modulus = as_modulus(modulus)
        self.p = self.modulus.p
        self.dim = int(dim)
        if len(table) != self.dim:
            raise AmbientMismatch("structure table must have dim rows")
        tab = []
        for row in table:
            if len(row) != self.dim:
                raise AmbientMismatch("structure table must be dim x dim")
            tab.append(tuple(vec(entry, self.p) for entry in row))
            for entry in tab[-1]:
                if len(entry) != self.dim:
                    raise AmbientMismatch("structure vectors must have length dim")
        self.table: tuple[tuple[Vector, ...], ...] = tuple(tab)
        self.unit: Optional[Vector] = vec(unit, self.p) if unit is not None else None
        self.name = name
        self._commutative: Optional[bool] = None
        if check:
            report = validate_algebra(self)
            if not report.ok:
                raise InvalidAlgebra(str(report))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Algebra)
            and self.p == other.p
            and self.dim == other.dim
            and self.table == other.table
            and self.unit == other.unit
        )

    def __hash__(self):
        return hash((self.p, self.dim, self.table, self.unit))

    def __repr__(self):
        tag = self.name or "algebra"
        return f"<{tag}: dim {self.dim} over F_{self.p}>"

    def space(self) -> Subspace:
        return Subspace.full(self.dim, self.p)

    def zero(self) -> Vector:
        return zero_vec(self.dim)

    def basis_vector(self, i: int) -> Vector:
        return tuple(1 if j == i else 0 for j in range(self.dim))

    def mul(self, x: Sequence[int], y: Sequence[int]) -> Vector:
        if len(x) != self.dim or len(y) != self.dim:
            raise AmbientMismatch("element length differs from algebra dimension")
        out = [0] * self.dim
        p = self.p
        for i, a in enumerate(x):
            a %= p
            if not a:
                continue
            row = self.table[i]
            for j, b in enumerate(y):
                b %= p
                if not b:
                    continue
                c = (a * b) % p
                for k, t in enumerate(row[j]):
                    if t:
                        out[k] = (out[k] + c * t) % p
        return tuple(out)

    def element(self, coeffs: Sequence[int]) -> "Element":
        return Element(vec(coeffs, self.p), self)

    def one(self) -> "Element":
        if self.unit is None:
            raise InvalidAlgebra("algebra has no declared unit")
        return Element(self.unit, self)

    def is_commutative(self) -> bool:
        if self._commutative is None:
            self._commutative = all(
                self.table[i][j] == self.table[j][i]
                for i in range(self.dim)
                for j in range(i + 1, self.dim)
            )
        return self._commutative

    def is_idempotent_vec(self, v: Vector) -> bool:
        return self.mul(v, v) == vec(v, self.p)

    def is_central_vec(self, v: Vector) -> bool:
        return all(
            self.mul(v, self.basis_vector(i)) == self.mul(self.basis_vector(i), v)
            for i in range(self.dim)
        )


@dataclass(frozen=True)
class Element:
    coeffs: Vector
    algebra: Algebra

    def __post_init__(self):
        if len(self.coeffs) != self.algebra.dim:
            raise AmbientMismatch("coefficient vector length differs from algebra dim")

    def __add__(self, other: "Element") -> "Element":
        self._same(other)
        return Element(vec_add(self.coeffs, other.coeffs, self.algebra.p), self.algebra)

    def __sub__(self, other: "Element") -> "Element":
        self._same(other)
        p = self.algebra.p
        return Element(tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)), self.algebra)

    def __mul__(self, other):
        if isinstance(other, Element):
            self._same(other)
            return Element(self.algebra.mul(self.coeffs, other.coeffs), self.algebra)
        return Element(vec_scale(int(other), self.coeffs, self.algebra.p), self.algebra)

    __rmul__ = __mul__

    def __neg__(self) -> "Element":
        return Element(vec_scale(-1, self.coeffs, self.algebra.p), self.algebra)

    def is_zero(self) -> bool:
        return is_zero_vec(self.coeffs)

    def _same(self, other: "Element") -> None:
        if self.algebra is not other.algebra and self.algebra != other.algebra:
            raise AmbientMismatch("elements of different algebras")


def mul(alg: Algebra, x: Sequence[int], y: Sequence[int]) -> Vector:
    return alg.mul(x, y)


# int64 products of residues stay exact as long as a full inner sum fits.
_INT64_SAFE = 2**62


def _associator_failures(alg: Algebra, limit: int = 32) -> list[tuple[int, int, int]]:
    n, p = alg.dim, alg.p
    if n == 0:
        return []
    if n * (p - 1) * (p - 1) < _INT64_SAFE:
        c = np.array(alg.table, dtype=np.int64)
        bad: list[tuple[int, int, int]] = []
        for i in range(n):
            left = np.einsum("jm,mkl->jkl", c[i], c) % p
            right = np.einsum("jkm,ml->jkl", c, c[i]) % p
            if left.shape != right.shape:
                raise AmbientMismatch("malformed structure table")
            mism = np.argwhere((left != right).any(axis=-1))
            for j, k in mism:
                bad.append((i, int(j), int(k)))
                if len(bad) >= limit:
                    return bad
        return bad
    bad = []
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs = alg.mul(alg.mul(alg.basis_vector(i), alg.basis_vector(j)), alg.basis_vector(k))
        rhs = alg.mul(alg.basis_vector(i), alg.mul(alg.basis_vector(j), alg.basis_vector(k)))
        if lhs != rhs:
            bad.append((i, j, k))
            if len(bad) >= limit:
                break
    return bad


def validate_algebra(alg: Algebra) -> ValidationReport:
    """Report every non-associative basis triple and any unit violation."""
    issues = []
    for i, j, k in _associator_failures(alg):
        issues.append(Issue("ASSOC", f"(b{i}*b{j})*b{k} != b{i}*(b{j}*b{k})"))
    if alg.unit is not None:
        for i in range(alg.dim):
            b = alg.basis_vector(i)
            if alg.mul(alg.unit, b) != b:
                issues.append(Issue("UNIT", f"unit fails on the left of b{i}"))
            if alg.mul(b, alg.unit) != b:
                issues.append(Issue("UNIT", f"unit fails on the right of b{i}"))
    return ValidationReport(alg.name or "algebra", ("ASSOC", "UNIT"), issues)


def is_multiplicatively_closed(alg: Algebra, sub: Subspace) -> bool:
    return all(
        sub.contains(alg.mul(u, v)) for u in sub.basis for v in sub.basis
    )


def ideal_closure(alg: Algebra, gens: Iterable[Sequence[int]]) -> Subspace:
    """Smallest subspace containing gens and absorbing basis multiplication.

    Breadth-first fixpoint over (basis x generator) products; terminates by
    the ambient dimension bound.
    """
    current = Subspace.span(alg.dim, [vec(g, alg.p) for g in gens], alg.p)
    while True:
        new_rows = list(current.basis)
        for v in current.basis:
            for i in range(alg.dim):
                b = alg.basis_vector(i)
                new_rows.append(alg.mul(b, v))
                new_rows.append(alg.mul(v, b))
        grown = Subspace.span(alg.dim, new_rows, alg.p)
        if grown.rank == current.rank:
            return grown
        current = grown


def subring_closure(alg: Algebra, parts: Iterable[Subspace]) -> Subspace:
    """Smallest subspace containing all parts and closed under the product."""
    rows: list[Vector] = []
    for part in parts:
        if part.dim != alg.dim or part.p != alg.p:
            raise AmbientMismatch("part lives in a different ambient space")
        rows.extend(part.basis)
    current = Subspace.span(alg.dim, rows, alg.p)
    while True:
        new_rows = list(current.basis)
        for u in current.basis:
            for v in current.basis:
                new_rows.append(alg.mul(u, v))
        grown = Subspace.span(alg.dim, new_rows, alg.p)
        if grown.rank == current.rank:
            return grown
        current = grown


class SubringIdentity(NamedTuple):
    element: Element
    central: bool
    idempotent: bool


def identity_of(alg: Algebra, sub: Subspace) -> Optional[SubringIdentity]:
    """Two-sided identity of a multiplicatively closed subspace, if any.

    The zero subspace counts as the zero ring with identity 0.  Also reports
    whether the identity is central and idempotent in the ambient algebra.
    """
    if sub.dim != alg.dim or sub.p != alg.p:
        raise AmbientMismatch("subspace lives in a different ambient space")
    if not is_multiplicatively_closed(alg, sub):
        raise NotMultiplicativelyClosed("subspace is not closed under the product")
    if sub.rank == 0:
        return SubringIdentity(alg.element(alg.zero()), True, True)
    rows = []
    target: list[int] = []
    for v in sub.basis:
        stacked_l = [alg.mul(u, v) for u in sub.basis]
        stacked_r = [alg.mul(v, u) for u in sub.basis]
        rows.append([x for lv, rv in zip(stacked_l, stacked_r) for x in (*lv, *rv)])
        target.extend((*v, *v))
    # rows[i] is the concatenated contribution of basis vector u_i; solve
    # sum_i c_i rows[i] = target for the identity's coordinates.
    stacked = [
        [rows[i][j] for j in range(len(target))] for i in range(sub.rank)
    ]
    combo = express(stacked, target, alg.p)
    if combo is None:
        return None
    u = sub.from_coordinates(combo)
    return SubringIdentity(
        alg.element(u), alg.is_central_vec(u), alg.is_idempotent_vec(u)
    )


def is_ideal(alg: Algebra, inner: Subspace, outer: Subspace) -> bool:
    """True iff inner absorbs multiplication by outer's basis (inner ⊆ outer)."""
    if not outer.contains_subspace(inner):
        raise NotContained("inner subspace is not contained in the outer one")
    for b in outer.basis:
        for x in inner.basis:
            if not inner.contains(alg.mul(b, x)):
                return False
            if not inner.contains(alg.mul(x, b)):
                return False
    return True


class QuotientResult(NamedTuple):
    algebra: Algebra
    projection: LinMap


def quotient(alg: Algebra, ideal: Subspace) -> QuotientResult:
    """Quotient algebra on the ideal's pivot-free coordinates, plus projection."""
    if not is_ideal(alg, ideal, alg.space()):
        raise NotAnIdeal("quotient requires a two-sided ideal")
    coords = ideal.complement_coordinates()
    m = len(coords)

    def project(v: Sequence[int]) -> Vector:
        w = ideal.reduce(v)
        return tuple(w[c] for c in coords)

    reps = [alg.basis_vector(c) for c in coords]
    table = [[project(alg.mul(reps[i], reps[j])) for j in range(m)] for i in range(m)]
    unit = project(alg.unit) if alg.unit is not None else None
    q = Algebra(alg.p, m, table, unit=unit, check=True, name=f"{alg.name or 'algebra'}/ideal")
    proj = LinMap.from_images(
        alg.space(), q.space(), [project(alg.basis_vector(i)) for i in range(alg.dim)]
    )
    return QuotientResult(q, proj)


def is_ring_iso(m: LinMap, dom_alg: Algebra, cod_alg: Algebra) -> bool:
    """Bijective between its subspaces and multiplicative on the domain basis."""
    if m.domain.dim != dom_alg.dim or m.codomain.dim != cod_alg.dim:
        raise AmbientMismatch("map endpoints do not live in the stated algebras")
    if not m.is_iso:
        return False
    for u in m.domain.basis:
        for v in m.domain.basis:
            prod = dom_alg.mul(u, v)
            if not m.domain.contains(prod):
                return False
            if m.apply(prod) != cod_alg.mul(m.apply(u), m.apply(v)):
                return False
    return True


def is_ring_hom(m: LinMap, dom_alg: Algebra, cod_alg: Algebra) -> bool:
    for u in m.domain.basis:
        for v in m.domain.basis:
            prod = dom_alg.mul(u, v)
            if not m.domain.contains(prod):
                return False
            if m.apply(prod) != cod_alg.mul(m.apply(u), m.apply(v)):
                return False
    return True


def product_ring(alg: Algebra, copies: int) -> Algebra:
    """Componentwise product on copies of alg; block i occupies [i*n, (i+1)*n)."""
    if copies < 1:
        raise ValueError("at least one copy required")
    n, p = alg.dim, alg.p
    total = n * copies
    zero = zero_vec(total)
    table = []
    for a in range(copies):
        for i in range(n):
            row = []
            for b in range(copies):
                for j in range(n):
                    if a != b:
                        row.append(zero)
                    else:
                        entry = [0] * total
                        for k, t in enumerate(alg.table[i][j]):
                            entry[a * n + k] = t
                        row.append(tuple(entry))
            table.append(row)
    unit = None
    if alg.unit is not None:
        unit = tuple(alg.unit[i % n] for i in range(total))
    return Algebra(p, total, table, unit=unit, check=True, name=f"{alg.name or 'algebra'}^{copies}")


def block_inject(n: int, copies: int, index: int, v: Sequence[int]) -> Vector:
    out = [0] * (n * copies)
    for k, x in enumerate(v):
        out[index * n + k] = x
    return tuple(out)


def block_project(n: int, copies: int, index: int, v: Sequence[int]) -> Vector:
    return tuple(v[index * n + k] for k in range(n))


def local_units_witness(
    alg: Algebra, sub: Subspace, candidates: Iterable[Sequence[int]]
) -> bool:
    """Close central idempotents under e∨f = e+f-ef, then absorb sub's basis."""
    pool = []
    for cand in candidates:
        u = vec(cand, alg.p)
        if not (alg.is_central_vec(u) and alg.is_idempotent_vec(u)):
            raise NotCentralIdempotent(f"candidate {u} is not a central idempotent")
        pool.append(u)
    closed = set(pool)
    frontier = list(closed)
    while frontier:
        e = frontier.pop()
        for f in list(closed):
            ef = alg.mul(e, f)
            join = tuple((a + b - c) % alg.p for a, b, c in zip(e, f, ef))
            if join not in closed:
                closed.add(join)
                frontier.append(join)
    for v in sub.basis:
        if not any(alg.mul(b, v) == v for b in closed):
            return False
    return True


class SubalgebraResult(NamedTuple):
    algebra: Algebra
    inclusion: LinMap


def subalgebra_on(alg: Algebra, sub: Subspace, name: str = "") -> SubalgebraResult:
    """Re-coordinatize a multiplicatively closed subspace as its own algebra."""
    if sub.dim != alg.dim or sub.p != alg.p:
        raise AmbientMismatch("subspace lives in a different ambient space")
    if not is_multiplicatively_closed(alg, sub):
        raise NotMultiplicativelyClosed("subspace is not closed under the product")
    r = sub.rank
    table = [
        [sub.coordinates_of(alg.mul(sub.basis[i], sub.basis[j])) for j in range(r)]
        for i in range(r)
    ]
    ident = identity_of(alg, sub)
    unit = sub.coordinates_of(ident.element.coeffs) if ident is not None else None
    small = Algebra(alg.p, r, table, unit=unit, check=True, name=name or "subalgebra")
    incl = LinMap.from_images(small.space(), sub, list(sub.basis))
    return SubalgebraResult(small, incl)


def diagonal_algebra(p: PrimeModulus | int, n: int, name: str = "") -> Algebra:
    """F_p^n with the pointwise product."""
    mod = as_modulus(p)
    table = [
        [
            tuple(1 if i == j == k else 0 for k in range(n))
            for j in range(n)
        ]
        for i in range(n)
    ]
    return Algebra(mod, n, table, unit=(1,) * n, name=name or f"F{mod.p}^{n}")
