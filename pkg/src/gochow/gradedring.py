"""Finitely presented graded rings over Z, one degree at a time.

A graded piece ``P_m`` is the cokernel of the lattice spanned by all
monomial multiples of the relations that land in degree ``m``.  Everything
here is per-degree integer linear algebra; no Groebner bases are involved.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Mapping, Sequence

from .polycore import (DegreeError, GradedContext, Polynomial, enumerate_monomials,
                       substitute)
from .zlattice import (Cokernel, FGAbelianGroup, IntMatrix, KernelResult,
                       QuotientPresentation, kernel_of_induced_map)


class IllDefinedMapError(ValueError):
    """A ring map sends some relation to a nonzero class."""

    def __init__(self, message, relation=None, degree=None):
        super().__init__(message)
        self.relation = relation
        self.degree = degree


@dataclass(frozen=True, eq=False)
class RingPresentation:
    context: GradedContext
    relations: tuple[Polynomial, ...] = ()
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def __post_init__(self):
        rels = []
        for r in self.relations:
            if r.ctx != self.context:
                raise ValueError("relation lives in a different context")
            if r.is_zero():
                continue
            d = r.degree()  # raises DegreeError when inhomogeneous
            if d < 1:
                raise DegreeError(f"relation {r} has degree 0")
            rels.append(r)
        object.__setattr__(self, "relations", tuple(rels))

    def __repr__(self):
        label = self.name or "RingPresentation"
        return f"<{label}: {len(self.context.names)} generators, {len(self.relations)} relations>"

    def with_relations(self, extra: Sequence[Polynomial], name: str = "") -> "RingPresentation":
        return RingPresentation(self.context, self.relations + tuple(extra), name=name)

    def piece(self, m: int) -> "GradedPiece":
        return graded_piece(self, m)

    def var(self, name: str) -> Polynomial:
        return self.context.var(name)


class GradedPiece:
    """The degree-``m`` part of a presented ring, as a f.g. abelian group.

    Structure coordinates put one residue per invariant factor first, then
    the free coordinates (see :class:`gochow.zlattice.Cokernel`).
    """

    def __init__(self, presentation: RingPresentation, m: int):
        if m < 0:
            raise ValueError("degree must be nonnegative")
        self.presentation = presentation
        self.degree = m
        ctx = presentation.context
        self.basis = enumerate_monomials(ctx, m)
        self.index = {mono: i for i, mono in enumerate(self.basis)}
        self._relation_vectors = list(self._relation_multiples())
        self.cokernel = Cokernel(len(self.basis), self._relation_vectors)
        self.structure = self.cokernel.group

    def _relation_multiples(self):
        ctx = self.presentation.context
        for r in self.presentation.relations:
            d = r.degree()
            if d > self.degree:
                continue
            for mu in enumerate_monomials(ctx, self.degree - d):
                vec = {}
                for mono, c in r.items():
                    vec[self.index[tuple(a + b for a, b in zip(mono, mu))]] = c
                yield vec

    @cached_property
    def relation_lattice(self) -> QuotientPresentation:
        return QuotientPresentation.from_vectors(len(self.basis), self._relation_vectors)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def ngens(self) -> int:
        return self.cokernel.ngens

    @property
    def torsion_count(self) -> int:
        return len(self.structure.invariant_factors)

    @property
    def torsion(self) -> FGAbelianGroup:
        return self.structure.torsion()

    def vector(self, f: Polynomial) -> dict:
        if f.ctx != self.presentation.context:
            raise ValueError("polynomial is not in this presentation's context")
        out = {}
        for mono, c in f.items():
            i = self.index.get(mono)
            if i is None:
                raise DegreeError(f"term {f.ctx.format_monomial(mono)} is not of degree {self.degree}")
            out[i] = c
        return out

    def polynomial(self, vec: Mapping[int, int]) -> Polynomial:
        return Polynomial(self.presentation.context, {self.basis[i]: c for i, c in vec.items()})

    def coords(self, f: Polynomial) -> tuple[int, ...]:
        return self.cokernel.coords(self.vector(f))

    def coords_of_vector(self, vec) -> tuple[int, ...]:
        return self.cokernel.coords(vec)

    def order(self, f: Polynomial):
        return self.cokernel.order(self.vector(f))

    def is_zero(self, f: Polynomial) -> bool:
        return not any(self.coords(f))

    def generator(self, i: int) -> Polynomial:
        return self.polynomial(self.cokernel.generator(i))

    def generators(self) -> list[Polynomial]:
        return [self.generator(i) for i in range(self.ngens)]

    def torsion_generators(self) -> list[Polynomial]:
        return [self.generator(i) for i in range(self.torsion_count)]

    def from_coords(self, coords: Sequence[int]) -> Polynomial:
        return self.polynomial(self.cokernel.lift(coords))

    def diagonal_presentation(self) -> QuotientPresentation:
        return self.cokernel.diagonal_presentation()

    def normal_form(self, f: Polynomial) -> Polynomial:
        """Canonical representative of the class of ``f``."""
        return self.polynomial(self.cokernel.normal_form(self.vector(f)))

    def __repr__(self):
        return f"<GradedPiece degree {self.degree}: {self.structure}>"


def graded_piece(P: RingPresentation, m: int) -> GradedPiece:
    """Return ``P_m``; pieces are memoised on the presentation."""
    cache = P._cache
    piece = cache.get(m)
    if piece is None:
        piece = GradedPiece(P, m)
        with P._lock:
            piece = cache.setdefault(m, piece)
    return piece


def element_class(P: RingPresentation, f: Polynomial, degree: int | None = None) -> tuple[int, ...]:
    """Structure coordinates of the class of a homogeneous ``f``."""
    m = f.degree()
    if m is None:
        if degree is None:
            raise DegreeError("the zero polynomial needs an explicit degree")
        m = degree
    return graded_piece(P, m).coords(f)


@dataclass
class RingMapSpec:
    """A graded ring map given by images of the source generators."""

    source: RingPresentation
    target: RingPresentation
    images: dict[str, Polynomial]
    name: str = ""
    _validated_to: int = field(default=-1, repr=False)
    _monomial_images: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        src, tgt = self.source.context, self.target.context
        for var, d in src.variables:
            if var not in self.images:
                raise ValueError(f"no image for generator {var!r}")
            img = self.images[var]
            if img.ctx != tgt:
                raise ValueError(f"image of {var!r} is not in the target context")
            if img and img.degree() != d:
                raise DegreeError(f"image of {var!r} has degree {img.degree()}, expected {d}")

    def apply(self, f: Polynomial) -> Polynomial:
        return substitute(f, self.images, target=self.target.context)

    def apply_monomial(self, mono) -> Polynomial:
        """Image of a single monomial, memoised across calls."""
        cache = self._monomial_images
        hit = cache.get(mono)
        if hit is not None:
            return hit
        i = max((k for k, e in enumerate(mono) if e), default=None)
        if i is None:
            img = self.target.context.one()
        else:
            rest = mono[:i] + (mono[i] - 1,) + mono[i + 1:]
            img = self.apply_monomial(rest) * self.images[self.source.context.names[i]]
        cache[mono] = img
        return img

    def validate(self, max_degree: int) -> None:
        """Check that every relation of degree <= max_degree maps to zero."""
        for r in self.source.relations:
            d = r.degree()
            if self._validated_to < d <= max_degree:
                if not graded_piece(self.target, d).is_zero(self.apply(r)):
                    raise IllDefinedMapError(f"relation {r} does not map to zero", relation=r, degree=d)
        self._validated_to = max(self._validated_to, max_degree)

    def compose(self, other: "RingMapSpec") -> "RingMapSpec":
        """``other`` after ``self``."""
        if self.target is not other.source:
            raise ValueError("maps are not composable")
        images = {v: other.apply(img) for v, img in self.images.items()}
        return RingMapSpec(self.source, other.target, images, name=f"{other.name}.{self.name}")


@dataclass(frozen=True)
class InducedMap:
    """A homomorphism between two graded pieces.

    ``matrix`` is in monomial coordinates on the source (columns follow the
    source monomial basis) and structure coordinates on the target;
    ``structure_matrix`` uses structure coordinates on both sides.
    """

    source: GradedPiece
    target: GradedPiece
    matrix: IntMatrix
    structure_matrix: IntMatrix
    kernel_result: KernelResult

    @property
    def kernel(self) -> FGAbelianGroup:
        return self.kernel_result.group

    @property
    def image(self) -> FGAbelianGroup:
        return self.kernel_result.image

    @property
    def witnesses(self) -> tuple:
        return self.kernel_result.preimage_basis

    def kernel_generators(self) -> list[Polynomial]:
        return [self.source.from_coords([v.get(i, 0) for i in range(self.source.ngens)])
                for v in self.kernel_result.generators]

    @property
    def is_injective(self) -> bool:
        return self.kernel.is_trivial

    @property
    def is_surjective(self) -> bool:
        return self.image == self.target.structure

    def apply_coords(self, coords: Sequence[int]) -> tuple[int, ...]:
        vec = self.structure_matrix.apply(list(coords))
        return tuple(vec.get(i, 0) % mod if mod else vec.get(i, 0)
                     for i, mod in enumerate(self.target.cokernel.moduli))


def _induced(S: GradedPiece, T: GradedPiece, func: Callable) -> InducedMap:
    """``func`` maps a source exponent vector to a target polynomial."""
    moduli = T.cokernel.moduli
    mono_cols = [T.coords(func(mono)) for mono in S.basis]
    matrix = IntMatrix.from_columns(mono_cols, T.ngens)
    struct_cols = []
    for i in range(S.ngens):
        acc = [0] * T.ngens
        for b, c in S.cokernel.generator(i).items():
            for k, z in enumerate(mono_cols[b]):
                acc[k] += c * z
        struct_cols.append([z % mod if mod else z for z, mod in zip(acc, moduli)])
    smatrix = IntMatrix.from_columns(struct_cols, T.ngens)
    kres = kernel_of_induced_map(S.diagonal_presentation(), T.diagonal_presentation(), smatrix)
    return InducedMap(S, T, matrix, smatrix, kres)


def induced_map_in_degree(phi: RingMapSpec, m: int) -> InducedMap:
    phi.validate(m)
    return _induced(graded_piece(phi.source, m), graded_piece(phi.target, m), phi.apply_monomial)


def multiplication_map(P: RingPresentation, f: Polynomial, m: int) -> InducedMap:
    """Multiplication by a homogeneous ``f`` from ``P_m`` to ``P_{m + deg f}``."""
    d = f.degree()
    if d is None:
        d = 0
    ctx = P.context
    return _induced(graded_piece(P, m), graded_piece(P, m + d), lambda mono: ctx.monomial(mono) * f)


def quotient_presentation(P: RingPresentation, f: Polynomial) -> RingPresentation:
    if f.is_zero():
        return P
    key = ("quotient", f)
    q = P._cache.get(key)
    if q is None:
        q = P.with_relations([f], name=f"{P.name}/({f})")
        with P._lock:
            q = P._cache.setdefault(key, q)
    return q


def quotient_piece(P: RingPresentation, f: Polynomial, m: int) -> GradedPiece:
    """Degree-``m`` piece of ``P / (f)``."""
    return graded_piece(quotient_presentation(P, f), m)


@dataclass(frozen=True)
class TorsionEntry:
    degree: int
    invariant_factors: tuple[int, ...]

    @property
    def cardinality(self) -> int:
        return math.prod(self.invariant_factors)


@dataclass(frozen=True)
class TorsionSummary:
    entries: tuple[TorsionEntry, ...]

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, m):
        return next(e for e in self.entries if e.degree == m)

    def factors(self) -> list[tuple[int, ...]]:
        return [e.invariant_factors for e in self.entries]

    def cardinalities(self) -> list[int]:
        return [e.cardinality for e in self.entries]


def torsion_summary(P: RingPresentation, max_degree: int, min_degree: int = 0) -> TorsionSummary:
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    return TorsionSummary(tuple(
        TorsionEntry(m, graded_piece(P, m).structure.invariant_factors)
        for m in range(min_degree, max_degree + 1)))


def hilbert_function(P: RingPresentation, max_degree: int) -> list[int]:
    """Free ranks of ``P_0, ..., P_max_degree``."""
    return [graded_piece(P, m).structure.free_rank for m in range(max_degree + 1)]
