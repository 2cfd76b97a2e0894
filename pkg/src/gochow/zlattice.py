"""Exact integer linear algebra: Hermite/Smith normal forms and abelian groups.

Vectors handed around internally are sparse ``dict`` maps ``index -> int``.
Public functions also accept dense sequences.  All arithmetic uses Python
ints, so nothing overflows.

Conventions follow the column picture: a :class:`QuotientPresentation`
presents ``Z^a / L`` where ``L`` is spanned by the *columns* of its relation
matrix, and a map ``Z^a -> Z^b`` is a ``b x a`` matrix acting on columns.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

INFINITY = math.inf


class LatticeError(ValueError):
    pass


class DimensionError(LatticeError):
    pass


class WellDefinednessError(LatticeError):
    """A map of quotients does not send source relations into target relations."""

    def __init__(self, message, column=None):
        super().__init__(message)
        self.column = column


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``g = s*a + t*b = gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def _sparse(vec) -> dict:
    if isinstance(vec, dict):
        return {k: v for k, v in vec.items() if v}
    return {i: int(v) for i, v in enumerate(vec) if v}


def _axpy(y: dict, a: int, x: dict) -> None:
    """In place ``y += a * x`` on sparse vectors."""
    for k, v in x.items():
        s = y.get(k, 0) + a * v
        if s:
            y[k] = s
        else:
            y.pop(k, None)


def _combine(a: int, x: dict, b: int, y: dict) -> dict:
    out = {k: a * v for k, v in x.items()} if a else {}
    if b:
        _axpy(out, b, y)
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# matrices


class IntMatrix:
    """Immutable sparse integer matrix."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: dict | None = None):
        if rows < 0 or cols < 0:
            raise DimensionError("negative dimension")
        self.rows = rows
        self.cols = cols
        clean = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise DimensionError(f"entry ({i}, {j}) outside {rows}x{cols}")
            if v:
                clean[(i, j)] = int(v)
        self._entries = clean

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), cols, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v})

    @classmethod
    def from_columns(cls, columns: Sequence, rows: int) -> "IntMatrix":
        entries = {}
        for j, col in enumerate(columns):
            for i, v in _sparse(col).items():
                if i >= rows:
                    raise DimensionError(f"column {j} longer than {rows}")
                entries[(i, j)] = v
        return cls(rows, len(columns), entries)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) outside {self.rows}x{self.cols}")
        return self._entries.get((i, j), 0)

    def nonzero_items(self):
        return self._entries.items()

    def to_rows(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self._entries.items():
            out[i][j] = v
        return out

    def column(self, j: int) -> dict:
        return {i: v for (i, jj), v in self._entries.items() if jj == j}

    def columns(self) -> list[dict]:
        cols = [dict() for _ in range(self.cols)]
        for (i, j), v in self._entries.items():
            cols[j][i] = v
        return cols

    def row(self, i: int) -> dict:
        return {j: v for (ii, j), v in self._entries.items() if ii == i}

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self._entries.items()})

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        by_row: dict = {}
        for (k, j), v in other._entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: dict = {}
        for (i, k), a in self._entries.items():
            for j, b in by_row.get(k, ()):
                out[(i, j)] = out.get((i, j), 0) + a * b
        return IntMatrix(self.rows, other.cols, out)

    def apply(self, vec) -> dict:
        """Matrix times a (sparse or dense) column vector, as a sparse dict."""
        x = _sparse(vec)
        out: dict = {}
        for (i, j), a in self._entries.items():
            if j in x:
                out[i] = out.get(i, 0) + a * x[j]
        return {i: v for i, v in out.items() if v}

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self):
        return hash((self.shape, frozenset(self._entries.items())))

    def __repr__(self):
        return f"IntMatrix({self.to_rows()!r})"

    def is_diagonal(self) -> bool:
        return all(i == j for (i, j) in self._entries)

    def diagonal(self) -> list[int]:
        return [self._entries.get((i, i), 0) for i in range(min(self.rows, self.cols))]

    def determinant(self) -> int:
        """Bareiss fraction-free determinant (square matrices only)."""
        if self.rows != self.cols:
            raise DimensionError("determinant of a non-square matrix")
        a = self.to_rows()
        n = self.rows
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k]), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1


# ---------------------------------------------------------------------------
# abelian groups


@dataclass(frozen=True)
class FGAbelianGroup:
    """``Z^free_rank + Z/d_1 + ... + Z/d_k`` with ``d_1 | d_2 | ... | d_k``."""

    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        facs = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", facs)
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for d in facs:
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
        for a, b in zip(facs, facs[1:]):
            if b % a:
                raise ValueError(f"invariant factors {facs} violate divisibility")

    @classmethod
    def from_orders(cls, free_rank: int, orders: Iterable[int]) -> "FGAbelianGroup":
        """Normalise arbitrary cyclic orders (0 meaning Z) into invariant factors."""
        orders = list(orders)
        free_rank += sum(1 for d in orders if d == 0)
        diag = [abs(d) for d in orders if d not in (0, 1, -1)]
        return cls(free_rank, tuple(invariant_factors_of(diag)))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def torsion_order(self) -> int:
        return math.prod(self.invariant_factors)

    def order(self):
        return self.torsion_order if self.is_finite else INFINITY

    def torsion(self) -> "FGAbelianGroup":
        return FGAbelianGroup(0, self.invariant_factors)

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "invariant_factors": list(self.invariant_factors),
                "text": str(self)}


def invariant_factors_of(orders: Sequence[int]) -> list[int]:
    """Turn a list of cyclic orders into the invariant-factor chain."""
    primes: dict = {}
    for d in orders:
        d = abs(d)
        p = 2
        while d > 1 and p * p <= d:
            while d % p == 0:
                e = 0
                while d % p == 0:
                    d //= p
                    e += 1
                primes.setdefault(p, []).append(e)
            p += 1
        if d > 1:
            primes.setdefault(d, []).append(1)
    if not primes:
        return []
    length = max(len(v) for v in primes.values())
    out = [1] * length
    for p, exps in primes.items():
        exps = sorted(exps)
        exps = [0] * (length - len(exps)) + exps
        for i, e in enumerate(exps):
            out[i] *= p ** e
    return [d for d in out if d > 1]


# ---------------------------------------------------------------------------
# Hermite normal form on sparse rows


class HermiteLattice:
    """A sublattice of ``Z^n`` held as a row-echelon basis of sparse vectors.

    Rows are inserted incrementally; :meth:`reduce_fully` brings the basis into
    Hermite normal form (positive pivots, entries above each pivot reduced into
    ``[0, pivot)``), after which :meth:`normal_form` gives canonical
    representatives of ``Z^n / L``.
    """

    def __init__(self, dim: int | None = None):
        self.dim = dim
        self.rows: dict[int, dict] = {}
        self._reduced = True

    def copy(self) -> "HermiteLattice":
        other = HermiteLattice(self.dim)
        other.rows = {p: dict(r) for p, r in self.rows.items()}
        other._reduced = self._reduced
        return other

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def basis(self) -> list[dict]:
        return [dict(self.rows[p]) for p in self.pivots]

    def add(self, vec) -> bool:
        """Insert a vector; return True if the lattice grew."""
        v = _sparse(vec)
        grew = False
        while v:
            p = min(v)
            b = v[p]
            h = self.rows.get(p)
            if h is None:
                if b < 0:
                    v = {k: -x for k, x in v.items()}
                self.rows[p] = v
                self._reduced = False
                return True
            a = h[p]
            if b % a == 0:
                _axpy(v, -(b // a), h)
                continue
            g, s, t = xgcd(a, b)
            self.rows[p] = _combine(s, h, t, v)
            v = _combine(a // g, v, -(b // g), h)
            self._reduced = False
            grew = True
        return grew

    def extend(self, vecs: Iterable) -> "HermiteLattice":
        for v in vecs:
            self.add(v)
        return self

    def reduce_fully(self) -> "HermiteLattice":
        if self._reduced:
            return self
        piv = self.pivots
        for idx, p in enumerate(piv):
            h = self.rows[p]
            d = h[p]
            for q in piv[:idx]:
                r = self.rows[q]
                x = r.get(p)
                if x is not None and not (0 <= x < d):
                    _axpy(r, -(x // d), h)
        self._reduced = True
        return self

    def normal_form(self, vec) -> dict:
        """Canonical representative of ``vec + L``."""
        self.reduce_fully()
        v = _sparse(vec)
        for p in self.pivots:
            x = v.get(p)
            if x is None:
                continue
            h = self.rows[p]
            q = x // h[p]
            if q:
                _axpy(v, -q, h)
        return v

    def __contains__(self, vec) -> bool:
        v = _sparse(vec)
        while v:
            p = min(v)
            h = self.rows.get(p)
            if h is None or v[p] % h[p]:
                return False
            _axpy(v, -(v[p] // h[p]), h)
        return True

    def coordinates(self, vec) -> dict:
        """Coefficients of ``vec`` in the echelon basis, keyed by pivot column.

        Raises ``LatticeError`` if ``vec`` is not in the lattice.
        """
        v = _sparse(vec)
        out = {}
        while v:
            p = min(v)
            h = self.rows.get(p)
            if h is None or v[p] % h[p]:
                raise LatticeError("vector is not in the lattice")
            c = v[p] // h[p]
            out[p] = c
            _axpy(v, -c, h)
        return out


# ---------------------------------------------------------------------------
# Smith normal form (dense, with transforms)


def _snf_dense(a: list[list[int]], left: bool = True, right: bool = True):
    """Smith normal form of a dense matrix ``a`` (modified in place).

    Returns ``(a, U, V, Uinv, Vinv)`` with ``U @ A @ V == a``; transforms on
    a side that is not tracked come back as ``None``.  The pivot is always
    the nonzero entry of least absolute value in the active block, ties
    going to the smallest row, then column.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)] if left else None
    Ui = [[int(i == j) for j in range(m)] for i in range(m)] if left else None
    V = [[int(i == j) for j in range(n)] for i in range(n)] if right else None
    Vi = [[int(i == j) for j in range(n)] for i in range(n)] if right else None

    def row_add(dst, src, c):  # row_dst += c * row_src
        ad, as_ = a[dst], a[src]
        for j in range(n):
            if as_[j]:
                ad[j] += c * as_[j]
        if left:
            ud, us = U[dst], U[src]
            for j in range(m):
                if us[j]:
                    ud[j] += c * us[j]
            for r in Ui:  # Uinv col_src -= c * col_dst
                if r[dst]:
                    r[src] -= c * r[dst]

    def col_add(dst, src, c):  # col_dst += c * col_src
        for r in a:
            if r[src]:
                r[dst] += c * r[src]
        if right:
            for r in V:
                if r[src]:
                    r[dst] += c * r[src]
            vd, vs = Vi[dst], Vi[src]
            for j in range(n):  # Vinv row_src -= c * row_dst
                if vd[j]:
                    vs[j] -= c * vd[j]

    def row_swap(i, k):
        a[i], a[k] = a[k], a[i]
        if left:
            U[i], U[k] = U[k], U[i]
            for r in Ui:
                r[i], r[k] = r[k], r[i]

    def col_swap(i, k):
        for r in a:
            r[i], r[k] = r[k], r[i]
        if right:
            for r in V:
                r[i], r[k] = r[k], r[i]
            Vi[i], Vi[k] = Vi[k], Vi[i]

    def row_neg(i):
        a[i] = [-x for x in a[i]]
        if left:
            U[i] = [-x for x in U[i]]
            for r in Ui:
                r[i] = -r[i]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        if i != t:
            row_swap(i, t)
        if j != t:
            col_swap(j, t)
        while True:
            done = True
            for i in range(t + 1, m):
                x = a[i][t]
                if x:
                    q = x // a[t][t]
                    row_add(i, t, -q)
                    if a[i][t]:
                        done = False
            for j in range(t + 1, n):
                x = a[t][j]
                if x:
                    q = x // a[t][t]
                    col_add(j, t, -q)
                    if a[t][j]:
                        done = False
            if done:
                piv = a[t][t]
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if a[i][j] % piv), None)
                if bad is None:
                    break
                row_add(t, bad[0], 1)
                done = False
            # move the smallest remaining entry of row/column t onto the pivot
            best = (abs(a[t][t]), t, t)
            for i in range(t + 1, m):
                x = a[i][t]
                if x and abs(x) < best[0]:
                    best = (abs(x), i, t)
            for j in range(t + 1, n):
                x = a[t][j]
                if x and abs(x) < best[0]:
                    best = (abs(x), t, j)
            if best[1] != t:
                row_swap(best[1], t)
            if best[2] != t:
                col_swap(best[2], t)
        if a[t][t] < 0:
            row_neg(t)
    return a, U, V, Ui, Vi


def smith_normal_form(M: IntMatrix, with_inverses: bool = False):
    """Smith normal form ``U @ M @ V == D`` with unimodular ``U`` and ``V``.

    ``D`` is diagonal with nonnegative entries ``d_1 | d_2 | ...``.  With
    ``with_inverses`` the inverses of ``U`` and ``V`` are returned as well.
    """
    if M.rows == 0 or M.cols == 0:
        D, U, V = IntMatrix(M.rows, M.cols), IntMatrix.identity(M.rows), IntMatrix.identity(M.cols)
        return (D, U, V, U, V) if with_inverses else (D, U, V)
    d, U, V, Ui, Vi = _snf_dense(M.to_rows())
    out = (IntMatrix.from_rows(d, M.cols), IntMatrix.from_rows(U, M.rows), IntMatrix.from_rows(V, M.cols))
    if with_inverses:
        out += (IntMatrix.from_rows(Ui, M.rows), IntMatrix.from_rows(Vi, M.cols))
    return out


# ---------------------------------------------------------------------------
# quotients Z^a / L


class Cokernel:
    """Structure of ``Z^a / L`` together with canonical coordinates.

    Built from relation vectors (sparse dicts or dense lists).  Coordinates of
    a class are a tuple ``(t_1, ..., t_k, f_1, ..., f_r)``: first one residue
    ``0 <= t_i < d_i`` per invariant factor, then the free coordinates.

    Relations with a unit entry are used first to eliminate coordinates
    outright (sparsest row, then sparsest column); only the leftover,
    unit-free part goes through a dense Smith normal form.  This keeps
    coefficients small where a plain Hermite reduction would blow up.
    """

    def __init__(self, ambient_rank: int, relations: Iterable = ()):
        self.ambient_rank = ambient_rank
        rows = []
        for r in relations:
            v = _sparse(r)
            if any(not 0 <= j < ambient_rank for j in v):
                raise DimensionError("relation longer than the ambient rank")
            if v:
                rows.append(v)
        self._elims, rest = _eliminate_units(rows)
        gone = {j for j, _ in self._elims}
        self._residual_cols = [j for j in range(ambient_rank) if j not in gone]
        col_pos = {j: k for k, j in enumerate(self._residual_cols)}
        rest = list({tuple(sorted(r.items())): r for r in rest}.values())
        c = len(self._residual_cols)
        mat = [[0] * max(len(rest), 1) for _ in range(c)]
        for k, r in enumerate(rest):
            for j, v in r.items():
                mat[col_pos[j]][k] = v  # columns are relations
        if c and rest:
            d, U, _, Ui, _ = _snf_dense(mat, right=False)
            diag = [d[i][i] if i < len(d[0]) else 0 for i in range(c)]
        else:
            U = Ui = None  # identity
            diag = [0] * c
        self._col_pos = col_pos
        self._U = U
        self._Ui = Ui
        tors = [i for i, x in enumerate(diag) if x > 1]
        free = [i for i, x in enumerate(diag) if x == 0]
        self._slots = tors + free
        self._moduli = [diag[i] for i in tors] + [0] * len(free)
        self.group = FGAbelianGroup(len(free), tuple(diag[i] for i in tors))

    @property
    def ngens(self) -> int:
        return len(self._slots)

    @property
    def moduli(self) -> list[int]:
        """Order of each structure generator, 0 meaning infinite."""
        return list(self._moduli)

    @property
    def rank(self) -> int:
        """Rank of the relation lattice."""
        return self.ambient_rank - self.group.free_rank

    def _residual(self, vec) -> dict:
        v = _sparse(vec)
        for j, r in self._elims:
            x = v.get(j)
            if x:
                _axpy(v, -x * r[j], r)
        return v

    def coords(self, vec) -> tuple[int, ...]:
        v = _sparse(vec)
        if any(not 0 <= j < self.ambient_rank for j in v):
            raise DimensionError("vector longer than the ambient rank")
        v = self._residual(v)
        out = []
        if self._U is None:
            return tuple(v.get(self._residual_cols[slot], 0) for slot in self._slots)
        col_pos = self._col_pos
        for slot, mod in zip(self._slots, self._moduli):
            urow = self._U[slot]
            z = sum(urow[col_pos[j]] * x for j, x in v.items())
            out.append(z % mod if mod else z)
        return tuple(out)

    def lift(self, coords: Sequence[int]) -> dict:
        """The canonical vector of ``Z^a`` whose class has the given coordinates."""
        if len(coords) != self.ngens:
            raise DimensionError("wrong number of coordinates")
        out: dict = {}
        if self._Ui is None:
            return {self._residual_cols[slot]: z for slot, z in zip(self._slots, coords) if z}
        for slot, z in zip(self._slots, coords):
            if not z:
                continue
            for k, j in enumerate(self._residual_cols):
                x = self._Ui[k][slot]
                if x:
                    out[j] = out.get(j, 0) + z * x
        return {j: v for j, v in out.items() if v}

    def normal_form(self, vec) -> dict:
        """Canonical representative of ``vec + L``."""
        return self.lift(self.coords(vec))

    def generator(self, i: int) -> dict:
        z = [0] * self.ngens
        z[i] = 1
        return self.lift(z)

    def is_zero(self, vec) -> bool:
        return not any(self.coords(vec))

    def order_of_coords(self, coords: Sequence[int]):
        order = 1
        for z, mod in zip(coords, self._moduli):
            if mod == 0:
                if z:
                    return INFINITY
            elif z % mod:
                order = math.lcm(order, mod // math.gcd(z, mod))
        return order

    def order(self, vec):
        return self.order_of_coords(self.coords(vec))

    def diagonal_presentation(self) -> "QuotientPresentation":
        """The same group presented on its structure generators."""
        cols = [{i: mod} for i, mod in enumerate(self._moduli) if mod]
        return QuotientPresentation.from_vectors(self.ngens, cols)


def _eliminate_units(rows: list[dict]) -> tuple[list, list[dict]]:
    """Sparse elimination of coordinates through relations with a +-1 entry.

    Returns the eliminations ``(column, relation)`` in order and the
    remaining relations.  Each recorded relation has a unit at its column
    and vanishes at every earlier eliminated column.
    """
    rows = {i: r for i, r in enumerate(rows)}
    cols: dict = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)
    elims = []
    while True:
        best = None
        for i, r in rows.items():
            if best is not None and len(r) >= best[0]:
                continue
            for j, v in r.items():
                if v == 1 or v == -1:
                    key = (len(r), len(cols[j]), j, i)
                    if best is None or key < best:
                        best = key
        if best is None:
            break
        _, _, j, i = best
        piv = rows.pop(i)
        for k in piv:
            cols[k].discard(i)
        u = piv[j]
        for i2 in list(cols[j]):
            r = rows[i2]
            before = set(r)
            _axpy(r, -r[j] * u, piv)
            after = set(r)
            for k in before - after:
                cols[k].discard(i2)
            for k in after - before:
                cols.setdefault(k, set()).add(i2)
            if not r:
                del rows[i2]
        elims.append((j, piv))
    return elims, [r for r in rows.values()]


@dataclass(frozen=True, eq=False)
class QuotientPresentation:
    """Presents ``Z^ambient_rank / L`` with ``L`` spanned by matrix columns."""

    ambient_rank: int
    relation_generators: IntMatrix = field(default=None)

    def __post_init__(self):
        if self.relation_generators is None:
            object.__setattr__(self, "relation_generators", IntMatrix(self.ambient_rank, 0))
        if self.relation_generators.rows != self.ambient_rank:
            raise DimensionError("relation columns must have length ambient_rank")

    @classmethod
    def from_vectors(cls, ambient_rank: int, vectors: Iterable) -> "QuotientPresentation":
        return cls(ambient_rank, IntMatrix.from_columns(list(vectors), ambient_rank))

    def relations(self) -> list[dict]:
        return self.relation_generators.columns()

    @cached_property
    def lattice(self) -> HermiteLattice:
        """Hermite basis of ``L`` (computed on first use)."""
        return HermiteLattice(self.ambient_rank).extend(self.relations()).reduce_fully()

    @cached_property
    def cokernel(self) -> Cokernel:
        return Cokernel(self.ambient_rank, self.relations())


def cokernel_structure(q: QuotientPresentation) -> FGAbelianGroup:
    return q.cokernel.group


def element_order_in_quotient(q: QuotientPresentation, x):
    """Smallest ``N >= 1`` with ``N*x`` in ``L``, or ``math.inf``."""
    v = _sparse(x)
    if not isinstance(x, dict) and len(x) != q.ambient_rank:
        raise DimensionError(f"vector of length {len(x)} in ambient rank {q.ambient_rank}")
    if any(not 0 <= j < q.ambient_rank for j in v):
        raise DimensionError("index outside the ambient rank")
    if not v:
        return 1
    cok = q.cokernel
    # rank(L + x) > rank(L) exactly when x has a nonzero free coordinate
    grown = Cokernel(q.ambient_rank, q.relations() + [v])
    if grown.rank > cok.rank:
        return INFINITY
    return cok.order(v)


def integer_kernel(columns: Sequence[dict], moduli: Sequence[int] = ()) -> list[dict]:
    """Basis of ``{x in Z^k : sum_j x_j columns[j] == 0 mod (moduli)}``.

    ``moduli[i]`` (0 = no modulus) applies to coordinate ``i`` of the columns.
    """
    k = len(columns)
    width = 1 + max([max(c) for c in columns if c] + [len(moduli) - 1, -1])
    lat = HermiteLattice()
    for j, col in enumerate(columns):
        row = dict(col)
        row[width + j] = 1
        lat.add(row)
    for i, d in enumerate(moduli):
        if d:
            lat.add({i: d})
    basis = []
    for p in lat.pivots:
        if p >= width:
            basis.append({j - width: v for j, v in lat.rows[p].items()})
    return basis


def solve_in_quotient(gens: Sequence, target, relations: Iterable = ()) -> list[int] | None:
    """Integers ``a`` with ``sum a_i gens_i - target`` in span(relations), or None."""
    gens = [_sparse(g) for g in gens]
    rels = [_sparse(r) for r in relations]
    t = _sparse(target)
    width = 1 + max([max(v) for v in gens + rels + [t] if v] + [-1])
    lat = HermiteLattice()
    for i, g in enumerate(gens):
        row = dict(g)
        row[width + i] = 1
        lat.add(row)
    for r in rels:
        lat.add(r)
    v = dict(t)
    while v:
        p = min(v)
        if p >= width:
            break
        h = lat.rows.get(p)
        if h is None or v[p] % h[p]:
            return None
        _axpy(v, -(v[p] // h[p]), h)
    return [-v.get(width + i, 0) for i in range(len(gens))]


@dataclass(frozen=True)
class KernelResult:
    """Kernel of an induced map of quotients, with witnesses.

    ``preimage_basis`` spans ``{x : Mx in L_dst}``; ``generators`` are source
    vectors whose classes generate the kernel, one per invariant factor and
    free generator of ``group``, in the same order.
    """

    group: FGAbelianGroup
    preimage_basis: tuple
    generators: tuple
    image: FGAbelianGroup

    def __eq__(self, other):
        if isinstance(other, FGAbelianGroup):
            return self.group == other
        if isinstance(other, KernelResult):
            return self.group == other.group and self.image == other.image
        return NotImplemented

    def __hash__(self):
        return hash((self.group, self.image))


def kernel_of_induced_map(src: QuotientPresentation, dst: QuotientPresentation, M: IntMatrix) -> KernelResult:
    """Kernel (and image) of ``Z^a/L_src -> Z^b/L_dst`` induced by ``M``."""
    if M.rows != dst.ambient_rank or M.cols != src.ambient_rank:
        raise DimensionError(f"map of shape {M.shape} does not fit {src.ambient_rank} -> {dst.ambient_rank}")
    cok = dst.cokernel
    for j, rel in enumerate(src.relations()):
        if not cok.is_zero(M.apply(rel)):
            raise WellDefinednessError(f"relation column {j} of the source does not map into the target lattice",
                                       column=j)
    cols = [dict(enumerate(cok.coords(c))) for c in M.columns()]
    pre = integer_kernel(cols, cok.moduli)
    pre_lat = HermiteLattice(src.ambient_rank).extend(pre).reduce_fully()
    basis = pre_lat.basis()
    piv = pre_lat.pivots
    pos = {p: i for i, p in enumerate(piv)}
    rel_coords = []
    for rel in src.relations():
        c = pre_lat.coordinates(rel)
        rel_coords.append({pos[p]: v for p, v in c.items()})
    sub = Cokernel(len(basis), rel_coords)
    gens = []
    for i in range(sub.ngens):
        coeffs = sub.generator(i)
        vec: dict = {}
        for b, c in coeffs.items():
            _axpy(vec, c, basis[b])
        gens.append(vec)
    image = Cokernel(src.ambient_rank, basis).group
    return KernelResult(sub.group, tuple(basis), tuple(gens), image)
