"""Sparse multivariate polynomials over the integers with graded variables.

Polynomials are immutable maps from exponent tuples to nonzero Python ints.
Every polynomial is bound to a :class:`GradedContext`, which fixes the
variable names, their degrees and their canonical order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

Monomial = tuple  # exponent vector, one entry per context variable


class ContextError(ValueError):
    """Operands live in different contexts or reference unknown variables."""


class DegreeError(ValueError):
    """A homogeneity or degree requirement was violated."""


@dataclass(frozen=True)
class GradedContext:
    """Ordered graded variables, e.g. ``GradedContext.of(("l", 1), ("c1", 1))``."""

    names: tuple[str, ...]
    degrees: tuple[int, ...]
    _index: dict = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if len(self.names) != len(self.degrees):
            raise ValueError("names and degrees differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        for name, d in zip(self.names, self.degrees):
            if not isinstance(d, int) or d < 1:
                raise ValueError(f"variable {name!r} needs a positive degree, got {d!r}")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(self.names)})

    @classmethod
    def of(cls, *variables: tuple[str, int]) -> "GradedContext":
        return cls(tuple(v[0] for v in variables), tuple(int(v[1]) for v in variables))

    @property
    def arity(self) -> int:
        return len(self.names)

    @property
    def variables(self) -> list[tuple[str, int]]:
        return list(zip(self.names, self.degrees))

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ContextError(f"unknown variable {name!r}") from None

    def degree_of(self, mono: Monomial) -> int:
        return sum(e * d for e, d in zip(mono, self.degrees))

    def var(self, name: str) -> "Polynomial":
        i = self.index(name)
        mono = tuple(1 if j == i else 0 for j in range(self.arity))
        return Polynomial(self, {mono: 1})

    def gens(self) -> list["Polynomial"]:
        return [self.var(n) for n in self.names]

    def const(self, c: int) -> "Polynomial":
        return Polynomial(self, {self.one_monomial(): c} if c else {})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def one_monomial(self) -> Monomial:
        return (0,) * self.arity

    def monomial(self, mono: Monomial, coeff: int = 1) -> "Polynomial":
        if len(mono) != self.arity:
            raise ContextError("exponent vector length does not match context arity")
        return Polynomial(self, {tuple(mono): coeff} if coeff else {})

    def format_monomial(self, mono: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, mono):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


class Polynomial:
    """Immutable sparse polynomial; supports ``+ - *`` and ``**`` with ints."""

    __slots__ = ("ctx", "_terms", "_hash")

    def __init__(self, ctx: GradedContext, terms: Mapping[Monomial, int] | None = None):
        self.ctx = ctx
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[tuple(m)] = int(c)
        self._terms = clean
        self._hash = None

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, mono: Monomial) -> int:
        return self._terms.get(tuple(mono), 0)

    # ---- arithmetic -----------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ctx != self.ctx:
                raise ContextError("polynomials belong to different contexts")
            return other
        if isinstance(other, int):
            return self.ctx.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ctx, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.ctx, {m: c * other for m, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx == other.ctx and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self._terms.items())))
        return self._hash

    # ---- grading --------------------------------------------------------

    def degrees(self) -> set[int]:
        return {self.ctx.degree_of(m) for m in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int | None:
        """Degree of a homogeneous polynomial; ``None`` for zero."""
        ds = self.degrees()
        if not ds:
            return None
        if len(ds) > 1:
            raise DegreeError(f"polynomial is not homogeneous: degrees {sorted(ds)}")
        return ds.pop()

    def __repr__(self):
        return f"Polynomial({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for mono in sorted(self._terms, key=_grlex_key, reverse=True):
            c = self._terms[mono]
            body = self.ctx.format_monomial(mono)
            if body == "1":
                text = str(abs(c))
            elif abs(c) == 1:
                text = body
            else:
                text = f"{abs(c)}*{body}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, text))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out


def _grlex_key(mono: Monomial):
    return (sum(mono), mono)


def multiply(a: Polynomial, b: Polynomial) -> Polynomial:
    """Exact product of two polynomials in the same context."""
    if a.ctx != b.ctx:
        raise ContextError("polynomials belong to different contexts")
    out: dict = {}
    for ma, ca in a._terms.items():
        for mb, cb in b._terms.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            out[m] = out.get(m, 0) + ca * cb
    return Polynomial(a.ctx, out)


def homogeneous_component(p: Polynomial, m: int) -> Polynomial:
    deg = p.ctx.degree_of
    return Polynomial(p.ctx, {mono: c for mono, c in p._terms.items() if deg(mono) == m})


@lru_cache(maxsize=None)
def _enumerate(degrees: tuple[int, ...], m: int) -> tuple[Monomial, ...]:
    if not degrees:
        return ((),) if m == 0 else ()
    head, rest = degrees[0], degrees[1:]
    out = []
    for e in range(m // head, -1, -1):
        for tail in _enumerate(rest, m - e * head):
            out.append((e,) + tail)
    return tuple(out)


def enumerate_monomials(ctx: GradedContext, m: int) -> list[Monomial]:
    """All monomials of weighted degree ``m`` in canonical order.

    The order is graded-lexicographic on exponent vectors: larger total
    exponent first, ties broken lexicographically (first variable dominant).
    """
    if m < 0:
        return []
    monos = list(_enumerate(ctx.degrees, m))
    monos.sort(key=_grlex_key, reverse=True)
    return monos


def substitute(p: Polynomial, images: Mapping[str, Polynomial], target: GradedContext | None = None,
               check_degrees: bool = True) -> Polynomial:
    """Evaluate the ring map sending each variable of ``p`` to its image.

    ``images`` maps variable names of ``p.ctx`` to polynomials in a common
    target context. Images must be homogeneous of the variable's degree
    unless ``check_degrees`` is false (zero is always allowed).
    """
    ctx = p.ctx
    if target is None:
        ctxs = {img.ctx for img in images.values()}
        if len(ctxs) > 1:
            raise ContextError("images live in different contexts")
        target = ctxs.pop() if ctxs else ctx
    imgs = []
    for name, d in zip(ctx.names, ctx.degrees):
        if name not in images:
            imgs.append(None)
            continue
        img = images[name]
        if img.ctx != target:
            raise ContextError(f"image of {name!r} is not in the target context")
        if check_degrees and img:
            degs = img.degrees()
            if len(degs) > 1:
                raise DegreeError(f"image of {name!r} is inhomogeneous")
            if degs != {d}:
                raise DegreeError(f"image of {name!r} has degree {degs.pop()}, expected {d}")
        imgs.append(img)

    powers: dict = {}

    def power(i: int, e: int) -> Polynomial:
        key = (i, e)
        if key not in powers:
            powers[key] = imgs[i] ** e
        return powers[key]

    result: dict = {}
    for mono, c in p._terms.items():
        term = target.const(c)
        for i, e in enumerate(mono):
            if e == 0:
                continue
            if imgs[i] is None:
                raise ContextError(f"no image given for variable {ctx.names[i]!r}")
            term = term * power(i, e)
            if not term:
                break
        for m2, c2 in term._terms.items():
            result[m2] = result.get(m2, 0) + c2
    return Polynomial(target, result)


def from_terms(ctx: GradedContext, terms: Iterable[tuple[int, Monomial]]) -> Polynomial:
    out: dict = {}
    for c, m in terms:
        m = tuple(m)
        out[m] = out.get(m, 0) + c
    return Polynomial(ctx, out)
