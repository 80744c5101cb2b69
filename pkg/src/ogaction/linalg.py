"""Exact linear algebra over a prime field.

Vectors are tuples of residues in [0, p).  Subspaces are kept in reduced
row echelon form, so subspace equality is plain tuple equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import AmbientMismatch

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeModulus:
    """A prime p with 2 <= p <= 2**31, checked at construction."""

    p: int

    def __post_init__(self):
        if not (2 <= self.p <= 2**31):
            raise ValueError(f"modulus {self.p} out of range [2, 2^31]")
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")


def as_modulus(p: "PrimeModulus | int") -> PrimeModulus:
    return p if isinstance(p, PrimeModulus) else PrimeModulus(int(p))


def vec(values: Iterable[int], p: int) -> Vector:
    return tuple(int(v) % p for v in values)


def zero_vec(dim: int) -> Vector:
    return (0,) * dim


def vec_add(u: Vector, v: Vector, p: int) -> Vector:
    return tuple((a + b) % p for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector, p: int) -> Vector:
    return tuple((a - b) % p for a, b in zip(u, v))


def vec_scale(c: int, v: Vector, p: int) -> Vector:
    c %= p
    return tuple((c * a) % p for a in v)


def is_zero_vec(v: Vector) -> bool:
    return all(a == 0 for a in v)


def rref(rows: Iterable[Sequence[int]], p: int) -> Matrix:
    """Reduced row echelon form; zero rows dropped, pivots by column."""
    work = [[int(x) % p for x in row] for row in rows]
    if not work:
        return ()
    ncols = len(work[0])
    for row in work:
        if len(row) != ncols:
            raise AmbientMismatch("rows of unequal length")
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = pow(work[rank][col], -1, p)
        work[rank] = [(inv * x) % p for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                c = work[r][col]
                work[r] = [(x - c * y) % p for x, y in zip(work[r], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return tuple(tuple(row) for row in work[:rank] if any(row))


def _pivots(basis: Matrix) -> tuple[int, ...]:
    return tuple(next(i for i, x in enumerate(row) if x) for row in basis)


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of F_p^dim with a canonical RREF basis."""

    dim: int
    p: int
    basis: Matrix

    @staticmethod
    def span(dim: int, vectors: Iterable[Sequence[int]], p: "PrimeModulus | int") -> "Subspace":
        p = as_modulus(p).p
        rows = [list(v) for v in vectors]
        for row in rows:
            if len(row) != dim:
                raise AmbientMismatch(f"vector of length {len(row)} in ambient of dim {dim}")
        return Subspace(dim, p, rref(rows, p))

    @staticmethod
    def zero(dim: int, p: "PrimeModulus | int") -> "Subspace":
        return Subspace(dim, as_modulus(p).p, ())

    @staticmethod
    def full(dim: int, p: "PrimeModulus | int") -> "Subspace":
        p = as_modulus(p).p
        eye = tuple(tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim))
        return Subspace(dim, p, eye)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return _pivots(self.basis)

    def _check_ambient(self, other: "Subspace") -> None:
        if self.dim != other.dim or self.p != other.p:
            raise AmbientMismatch(
                f"ambient mismatch: dim {self.dim}/mod {self.p} vs dim {other.dim}/mod {other.p}"
            )

    def reduce(self, v: Sequence[int]) -> Vector:
        """Residual of v after elimination against the basis."""
        if len(v) != self.dim:
            raise AmbientMismatch(f"vector of length {len(v)} in ambient of dim {self.dim}")
        w = [int(x) % self.p for x in v]
        for row, piv in zip(self.basis, self.pivots):
            c = w[piv]
            if c:
                for j in range(piv, self.dim):
                    w[j] = (w[j] - c * row[j]) % self.p
        return tuple(w)

    def contains(self, v: Sequence[int]) -> bool:
        return is_zero_vec(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(self.contains(row) for row in other.basis)

    def coordinates_of(self, v: Sequence[int]) -> Vector:
        """Coefficients of v over the canonical basis; raises if v is outside."""
        if len(v) != self.dim:
            raise AmbientMismatch(f"vector of length {len(v)} in ambient of dim {self.dim}")
        w = [int(x) % self.p for x in v]
        coords = []
        for row, piv in zip(self.basis, self.pivots):
            c = w[piv]
            coords.append(c)
            if c:
                for j in range(piv, self.dim):
                    w[j] = (w[j] - c * row[j]) % self.p
        if not is_zero_vec(tuple(w)):
            raise ValueError("vector not in subspace")
        return tuple(coords)

    def from_coordinates(self, coords: Sequence[int]) -> Vector:
        if len(coords) != self.rank:
            raise AmbientMismatch(f"{len(coords)} coordinates for rank {self.rank}")
        out = [0] * self.dim
        for c, row in zip(coords, self.basis):
            c = int(c) % self.p
            if c:
                for j, x in enumerate(row):
                    out[j] = (out[j] + c * x) % self.p
        return tuple(out)

    def add(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace(self.dim, self.p, rref(list(self.basis) + list(other.basis), self.p))

    def intersect(self, other: "Subspace") -> "Subspace":
        # Zassenhaus: eliminate [U|U] over [V|0]; zero-left rows carry U∩V.
        self._check_ambient(other)
        n = self.dim
        rows = [list(r) + list(r) for r in self.basis]
        rows += [list(r) + [0] * n for r in other.basis]
        reduced = rref(rows, self.p)
        inter = [row[n:] for row in reduced if all(x == 0 for x in row[:n])]
        return Subspace(n, self.p, rref(inter, self.p))

    def complement_coordinates(self) -> tuple[int, ...]:
        """Ambient coordinates not used as pivots (a complement's support)."""
        piv = set(self.pivots)
        return tuple(i for i in range(self.dim) if i not in piv)

    def vectors(self) -> Iterator[Vector]:
        """All p**rank member vectors; intended for small subspaces only."""
        for coords in itertools.product(range(self.p), repeat=self.rank):
            yield self.from_coordinates(coords)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains_subspace(self)


def span(dim: int, vectors: Iterable[Sequence[int]], p: "PrimeModulus | int") -> Subspace:
    return Subspace.span(dim, vectors, p)


def sum_subspaces(u: Subspace, v: Subspace) -> Subspace:
    return u.add(v)


def intersect_subspaces(u: Subspace, v: Subspace) -> Subspace:
    return u.intersect(v)


def express(rows: Sequence[Sequence[int]], target: Sequence[int], p: int) -> Optional[Vector]:
    """Coefficients c with sum(c_i * rows_i) = target, or None."""
    if not rows:
        return () if all(int(x) % p == 0 for x in target) else None
    n = len(rows[0])
    k = len(rows)
    aug = [list(r) + [1 if i == j else 0 for j in range(k)] for i, r in enumerate(rows)]
    reduced = rref(aug, p)
    w = [int(x) % p for x in target]
    combo = [0] * k
    for row in reduced:
        piv = next(i for i, x in enumerate(row) if x)
        if piv >= n:
            continue
        c = w[piv]
        if c:
            for j in range(n):
                w[j] = (w[j] - c * row[j]) % p
            for j in range(k):
                combo[j] = (combo[j] + c * row[n + j]) % p
    if any(w):
        return None
    return tuple(combo)


def kernel(matrix: Sequence[Sequence[int]], nrows: int, p: int) -> Matrix:
    """Basis of the left kernel {x : x @ matrix = 0} of an nrows-row matrix."""
    if nrows == 0:
        return ()
    ncols = len(matrix[0]) if matrix else 0
    aug = [list(matrix[i]) + [1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
    reduced = rref(aug, p)
    out = [row[ncols:] for row in reduced if all(x == 0 for x in row[:ncols])]
    return rref(out, p)


@dataclass(frozen=True)
class LinMap:
    """A linear map between two canonical subspaces.

    Row i of `matrix` holds the codomain coordinates of the image of the
    i-th canonical basis vector of the domain.  The two subspaces may live
    in different ambient spaces (same modulus).
    """

    domain: Subspace
    codomain: Subspace
    matrix: Matrix

    def __post_init__(self):
        if self.domain.p != self.codomain.p:
            raise AmbientMismatch("domain and codomain moduli differ")
        if len(self.matrix) != self.domain.rank:
            raise AmbientMismatch("matrix row count != domain rank")
        for row in self.matrix:
            if len(row) != self.codomain.rank:
                raise AmbientMismatch("matrix column count != codomain rank")

    @property
    def p(self) -> int:
        return self.domain.p

    @staticmethod
    def from_images(domain: Subspace, codomain: Subspace, images: Sequence[Sequence[int]]) -> "LinMap":
        """Build from ambient images of the domain's canonical basis."""
        if len(images) != domain.rank:
            raise AmbientMismatch("one image per domain basis vector required")
        matrix = tuple(codomain.coordinates_of(img) for img in images)
        return LinMap(domain, codomain, matrix)

    @staticmethod
    def identity(sub: Subspace) -> "LinMap":
        eye = tuple(tuple(1 if i == j else 0 for j in range(sub.rank)) for i in range(sub.rank))
        return LinMap(sub, sub, eye)

    def apply(self, v: Sequence[int]) -> Vector:
        coords = self.domain.coordinates_of(v)
        out = [0] * self.codomain.rank
        for c, row in zip(coords, self.matrix):
            if c:
                for j, x in enumerate(row):
                    out[j] = (out[j] + c * x) % self.p
        return self.codomain.from_coordinates(out)

    def image(self) -> Subspace:
        imgs = [self.codomain.from_coordinates(row) for row in self.matrix]
        return Subspace.span(self.codomain.dim, imgs, self.p)

    def image_of(self, sub: Subspace) -> Subspace:
        if not self.domain.contains_subspace(sub):
            raise AmbientMismatch("subspace not inside the map's domain")
        return Subspace.span(self.codomain.dim, [self.apply(v) for v in sub.basis], self.p)

    def preimage_of(self, sub: Subspace) -> Subspace:
        """{v in domain : f(v) in sub}, as a subspace of the domain's ambient."""
        if sub.dim != self.codomain.dim or sub.p != self.p:
            raise AmbientMismatch("preimage target lives in the wrong ambient")
        target = sub.intersect(self.codomain)
        coords = Subspace.span(
            self.codomain.rank,
            [self.codomain.coordinates_of(v) for v in target.basis],
            self.p,
        )
        reduced_rows = [coords.reduce(row) for row in self.matrix]
        ker = kernel(reduced_rows, self.domain.rank, self.p)
        vecs = [self.domain.from_coordinates(row) for row in ker]
        return Subspace.span(self.domain.dim, vecs, self.p)

    @property
    def rank_of_map(self) -> int:
        return len(rref(self.matrix, self.p))

    @property
    def is_iso(self) -> bool:
        return (
            self.domain.rank == self.codomain.rank
            and self.rank_of_map == self.domain.rank
        )

    @property
    def is_injective(self) -> bool:
        return self.rank_of_map == self.domain.rank

    def inverse(self) -> "LinMap":
        if not self.is_iso:
            raise ValueError("map is not invertible")
        inv_imgs = []
        for v in self.codomain.basis:
            combo = express(list(self.matrix), self.codomain.coordinates_of(v), self.p)
            if combo is None:
                raise ValueError("map is not surjective onto its codomain")
            inv_imgs.append(self.domain.from_coordinates(combo))
        return LinMap.from_images(self.codomain, self.domain, inv_imgs)

    def then(self, after: "LinMap") -> "LinMap":
        """Composite v -> after(self(v)); the image must fit after's domain."""
        imgs = [self.codomain.from_coordinates(row) for row in self.matrix]
        for img in imgs:
            if not after.domain.contains(img):
                raise AmbientMismatch("composite escapes the second map's domain")
        return LinMap.from_images(self.domain, after.codomain, [after.apply(v) for v in imgs])

    def restrict(self, sub: Subspace, codomain: Optional[Subspace] = None) -> "LinMap":
        if not self.domain.contains_subspace(sub):
            raise AmbientMismatch("restriction outside the domain")
        cod = codomain if codomain is not None else self.codomain
        return LinMap.from_images(sub, cod, [self.apply(v) for v in sub.basis])

    def agrees_with(self, other: "LinMap", on: Subspace) -> bool:
        return all(self.apply(v) == other.apply(v) for v in on.basis)

    def as_partial_le(self, other: "LinMap") -> bool:
        """Restriction order on partial maps: self = other on self's domain."""
        if self.domain.dim != other.domain.dim or self.codomain.dim != other.codomain.dim:
            return False
        return other.domain.contains_subspace(self.domain) and other.agrees_with(self, self.domain)


def compose_partial(f: LinMap, g: LinMap) -> LinMap:
    """Composition f∘g of partial linear bijections, restricted to where it is defined.

    The result's domain is g^{-1}(dom f ∩ im g); this is the product in the
    symmetric inverse structure on subspaces of the ambient spaces.
    """
    if g.codomain.dim != f.domain.dim or g.p != f.p:
        raise AmbientMismatch("inner codomain and outer domain ambient mismatch")
    middle = f.domain.intersect(g.image())
    dom = g.preimage_of(middle)
    imgs = [f.apply(g.apply(v)) for v in dom.basis]
    cod = Subspace.span(f.codomain.dim, imgs, f.p)
    return LinMap.from_images(dom, cod, imgs)


def partial_inverse(f: LinMap) -> LinMap:
    """Inverse of a partial linear bijection, image becoming the domain."""
    img = f.image()
    if img.rank != f.domain.rank:
        raise ValueError("partial map is not injective")
    back = []
    for v in img.basis:
        combo = express(list(f.matrix), f.codomain.coordinates_of(v), f.p)
        if combo is None:
            raise ValueError("image vector not reachable")
        back.append(f.domain.from_coordinates(combo))
    return LinMap.from_images(img, f.domain, back)
