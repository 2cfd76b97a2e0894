"""The concrete rings and maps: GO(2n), O(2n), the maximal torus, B, Kunneth.

Variable names are ASCII: ``l`` is the similitude class lambda, ``c1 .. c2n``
are the Chern classes of the defining representation, ``t1 .. tn`` are the
first Chern classes of the torus characters.
"""

from __future__ import annotations

import re
from functools import lru_cache
from math import comb
from pathlib import Path

from .gradedring import RingMapSpec, RingPresentation
from .polycore import (DegreeError, GradedContext, Monomial, Polynomial,
                       enumerate_monomials, homogeneous_component)

LAMBDA = "l"


def binom(a: int, b: int) -> int:
    if b < 0 or b > a or a < 0:
        return 0
    return comb(a, b)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


@lru_cache(maxsize=None)
def go_context(n: int) -> GradedContext:
    _check_n(n)
    return GradedContext.of((LAMBDA, 1), *((f"c{i}", i) for i in range(1, 2 * n + 1)))


@lru_cache(maxsize=None)
def torus_context(n: int) -> GradedContext:
    _check_n(n)
    return GradedContext.of((LAMBDA, 1), *((f"t{j}", 1) for j in range(1, n + 1)))


def chern(ctx: GradedContext, i: int) -> Polynomial:
    return ctx.one() if i == 0 else ctx.var(f"c{i}")


def go_relation(n: int, p: int) -> Polynomial:
    """``-c_p + sum_{i=0}^{p} (-1)^i C(2n-i, p-i) c_i l^(p-i)``."""
    ctx = go_context(n)
    lam = ctx.var(LAMBDA)
    out = -chern(ctx, p)
    for i in range(p + 1):
        coeff = (-1) ** i * binom(2 * n - i, p - i)
        if coeff:
            out = out + coeff * chern(ctx, i) * lam ** (p - i)
    return out


def go_relations(n: int) -> list[Polynomial]:
    _check_n(n)
    return [go_relation(n, p) for p in range(1, 2 * n + 1)]


def odd_doubling_rhs(n: int, p: int) -> Polynomial:
    """Right-hand side of ``2 c_p = sum_{i<p} (-1)^i C(2n-i, p-i) c_i l^(p-i)``."""
    ctx = go_context(n)
    lam = ctx.var(LAMBDA)
    out = ctx.zero()
    for i in range(p):
        out = out + (-1) ** i * binom(2 * n - i, p - i) * chern(ctx, i) * lam ** (p - i)
    return out


@lru_cache(maxsize=None)
def go_presentation(n: int) -> RingPresentation:
    """``R = Z[l, c1..c2n] / (relations)``."""
    return RingPresentation(go_context(n), tuple(go_relations(n)), name=f"R_GO({2 * n})")


@lru_cache(maxsize=None)
def o_presentation(k: int) -> RingPresentation:
    """``Z[c1..ck] / (2 c_p : p odd)``; with ``k = 2n`` this is the ring for O(2n)."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    ctx = GradedContext.of(*((f"c{i}", i) for i in range(1, k + 1)))
    rels = tuple(2 * ctx.var(f"c{p}") for p in range(1, k + 1, 2))
    return RingPresentation(ctx, rels, name=f"A_O({k})")


@lru_cache(maxsize=None)
def torus_presentation(n: int) -> RingPresentation:
    return RingPresentation(torus_context(n), (), name=f"A_Gamma(n={n})")


@lru_cache(maxsize=None)
def b_presentation(n: int) -> RingPresentation:
    """The polynomial ring ``Z[l, c2, c4, ..., c2n]`` on its own."""
    _check_n(n)
    ctx = GradedContext.of((LAMBDA, 1), *((f"c{2 * i}", 2 * i) for i in range(1, n + 1)))
    return RingPresentation(ctx, (), name=f"B(n={n})")


@lru_cache(maxsize=None)
def chern_image_table(n: int) -> dict[str, Polynomial]:
    """Images of ``l`` and ``c_i`` under restriction to the maximal torus.

    The torus acts on the defining representation with weights ``l + t_j``
    and ``-t_j``, so the total Chern class restricts to
    ``prod_j (1 + l + t_j)(1 - t_j)``.
    """
    ctx = torus_context(n)
    lam = ctx.var(LAMBDA)
    total = ctx.one()
    for j in range(1, n + 1):
        t = ctx.var(f"t{j}")
        total = total * (1 + lam + t) * (1 - t)
    table = {LAMBDA: lam}
    for i in range(1, 2 * n + 1):
        table[f"c{i}"] = homogeneous_component(total, i)
    return table


@lru_cache(maxsize=None)
def torus_map(n: int) -> RingMapSpec:
    """Restriction ``R -> Z[l, t1..tn]``, validated as an exact identity."""
    spec = RingMapSpec(go_presentation(n), torus_presentation(n), dict(chern_image_table(n)),
                       name=f"torus(n={n})")
    for p, r in enumerate(go_presentation(n).relations, start=1):
        if not spec.apply(r).is_zero():
            raise AssertionError(f"relation {p} does not vanish on the torus")
    spec._validated_to = 2 * n
    return spec


@lru_cache(maxsize=None)
def o_map(n: int) -> RingMapSpec:
    """``R -> A_O(2n)``: ``l -> 0``, ``c_i -> c_i``."""
    src, tgt = go_presentation(n), o_presentation(2 * n)
    images = {LAMBDA: tgt.context.zero()}
    images.update({f"c{i}": tgt.var(f"c{i}") for i in range(1, 2 * n + 1)})
    return RingMapSpec(src, tgt, images, name=f"R->O(n={n})")


@lru_cache(maxsize=None)
def o_from_quotient_map(n: int) -> RingMapSpec:
    """The same map, but from ``R/(l)``."""
    from .gradedring import quotient_presentation

    src = quotient_presentation(go_presentation(n), go_context(n).var(LAMBDA))
    base = o_map(n)
    return RingMapSpec(src, base.target, dict(base.images), name=f"R/(l)->O(n={n})")


@lru_cache(maxsize=None)
def b_inclusion(n: int) -> RingMapSpec:
    """``B -> R`` sending each generator to the generator of the same name."""
    src, tgt = b_presentation(n), go_presentation(n)
    return RingMapSpec(src, tgt, {v: tgt.var(v) for v in src.context.names}, name=f"B->R(n={n})")


def b_basis(n: int, m: int) -> list[Monomial]:
    """Monomials of ``Z[l, c_even]`` of degree ``m``, as exponent vectors of the GO context."""
    ctx = go_context(n)
    bctx = b_presentation(n).context
    pos = [ctx.index(name) for name in bctx.names]
    out = []
    for mono in enumerate_monomials(bctx, m):
        full = [0] * ctx.arity
        for i, e in zip(pos, mono):
            full[i] = e
        out.append(tuple(full))
    return out


def b_basis_polynomials(n: int, m: int) -> list[Polynomial]:
    ctx = go_context(n)
    return [ctx.monomial(mono) for mono in b_basis(n, m)]


def kunneth_extend(P: RingPresentation, name: str = LAMBDA) -> RingPresentation:
    """Adjoin a free degree-1 generator ``name`` (tensor with ``Z[l]``)."""
    ctx = P.context
    if name in ctx.names:
        raise ValueError(f"generator {name!r} already present")
    new = GradedContext.of(*ctx.variables, (name, 1))
    rels = tuple(Polynomial(new, {mono + (0,): c for mono, c in r.items()}) for r in P.relations)
    label = f"{P.name or 'P'} x Z[{name}]"
    return RingPresentation(new, rels, name=label)


# ---------------------------------------------------------------------------
# presentation files

class PresentationFormatError(ValueError):
    def __init__(self, message, line=None, column=None):
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
        self.column = column


_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def parse_presentation(text: str, name: str = "") -> RingPresentation:
    """Parse the line-oriented ``generator`` / ``relation`` format."""
    from .exprparse import ParseError, parse_poly_expression

    if not text.isascii():
        bad = next(i for i, ch in enumerate(text) if not ch.isascii())
        line = text.count("\n", 0, bad) + 1
        col = bad - (text.rfind("\n", 0, bad) + 1) + 1
        raise PresentationFormatError("non-ASCII character", line, col)
    gens: list[tuple[str, int]] = []
    rel_lines: list[tuple[int, int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        stripped = body.strip()
        if not stripped:
            continue
        indent = len(body) - len(body.lstrip())
        keyword, _, rest = stripped.partition(" ")
        rest_col = indent + len(keyword) + 2
        if keyword == "generator":
            if rel_lines:
                raise PresentationFormatError("generators must precede relations", lineno, indent + 1)
            parts = rest.split()
            if len(parts) != 2:
                raise PresentationFormatError("expected 'generator <name> <degree>'", lineno, indent + 1)
            gname, deg = parts
            if not _NAME.match(gname):
                raise PresentationFormatError(f"bad generator name {gname!r}", lineno, rest_col)
            if not deg.isdigit() or int(deg) < 1:
                raise PresentationFormatError(f"degree must be a positive integer, got {deg!r}",
                                              lineno, body.index(deg, rest_col - 1) + 1)
            if gname in (g for g, _ in gens):
                raise PresentationFormatError(f"duplicate generator {gname!r}", lineno, rest_col)
            gens.append((gname, int(deg)))
        elif keyword == "relation":
            rel_lines.append((lineno, rest_col, rest))
        else:
            raise PresentationFormatError(f"unknown keyword {keyword!r}", lineno, indent + 1)
    ctx = GradedContext.of(*gens)
    rels = []
    for lineno, col, expr in rel_lines:
        try:
            poly = parse_poly_expression(expr, ctx)
        except ParseError as exc:
            raise PresentationFormatError(str(exc.message), lineno, col + exc.position) from None
        degs = poly.degrees()
        if len(degs) > 1:
            lead = max(degs)
            bad = next(m for m, _ in poly.items() if ctx.degree_of(m) != lead)
            raise PresentationFormatError(
                f"inhomogeneous relation: term {ctx.format_monomial(bad)} has degree "
                f"{ctx.degree_of(bad)}, other terms have degree {lead}", lineno, col)
        if degs == {0}:
            raise PresentationFormatError("relation has degree 0", lineno, col)
        rels.append(poly)
    return RingPresentation(ctx, tuple(rels), name=name)


def load_presentation(path) -> RingPresentation:
    path = Path(path)
    return parse_presentation(path.read_text(encoding="ascii"), name=path.stem)


def format_presentation(P: RingPresentation) -> str:
    lines = [f"generator {n} {d}" for n, d in P.context.variables]
    lines += [f"relation {r}" for r in P.relations]
    return "\n".join(lines) + "\n"


def odd_index_monomial_count(n: int, m: int) -> int:
    """Degree-``m`` monomials in ``c1..c2n`` containing an odd-index variable."""
    ctx = o_presentation(2 * n).context
    count = 0
    for mono in enumerate_monomials(ctx, m):
        if any(e for i, e in enumerate(mono) if (i + 1) % 2 == 1):
            count += 1
    return count


__all__ = [
    "LAMBDA", "binom", "go_context", "torus_context", "go_relation", "go_relations",
    "odd_doubling_rhs", "go_presentation", "o_presentation", "torus_presentation",
    "b_presentation", "chern_image_table", "torus_map", "o_map", "o_from_quotient_map",
    "b_inclusion", "b_basis", "b_basis_polynomials", "kunneth_extend",
    "PresentationFormatError", "parse_presentation", "load_presentation",
    "format_presentation", "odd_index_monomial_count", "DegreeError",
]
