"""Independent reference implementations used to cross-check the package.

Nothing here imports from gochow.  Matrices are lists of rows of Python ints.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, gcd

import sympy


# ---------------------------------------------------------------- dense SNF

def snf_diagonal(matrix):
    """Invariant factors (nonzero diagonal of the Smith form) by textbook reduction.

    Each round moves the smallest nonzero entry of the remaining block to the
    corner and reduces its row and column with it; rounds repeat until the
    row and column are clear and the corner divides the whole block.
    """
    a = [list(r) for r in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    for t in range(min(rows, cols)):
        while True:
            entries = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
            if not entries:
                return diag
            _, pi, pj = min(entries)
            a[t], a[pi] = a[pi], a[t]
            for r in a:
                r[t], r[pj] = r[pj], r[t]
            p = a[t][t]
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for r in a:
                        r[j] -= q * r[t]
            if any(a[i][t] for i in range(t + 1, rows)) or any(a[t][j] for j in range(t + 1, cols)):
                continue
            bad = next((i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p), None)
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        diag.append(abs(a[t][t]))
    return diag


def group_from_relations(ambient, relation_columns):
    """(free_rank, invariant factors > 1) of Z^ambient / span(columns)."""
    if not relation_columns or ambient == 0:
        return ambient, []
    rows = [[col[i] for col in relation_columns] for i in range(ambient)]
    diag = snf_diagonal(rows)
    return ambient - len(diag), [d for d in diag if d > 1]


# ------------------------------------------------- determinantal divisors

def _det(m):
    return int(sympy.Matrix(m).det()) if m else 1


def determinantal_group(ambient, relation_columns):
    """Same answer via gcds of k x k minors (small matrices only)."""
    rows = [[col[i] for col in relation_columns] for i in range(ambient)]
    k_max = min(ambient, len(relation_columns))
    divisors = [1]
    for k in range(1, k_max + 1):
        g = 0
        for ri in itertools.combinations(range(ambient), k):
            for ci in itertools.combinations(range(len(relation_columns)), k):
                g = gcd(g, _det([[rows[i][j] for j in ci] for i in ri]))
        if g == 0:
            break
        divisors.append(g)
    rank = len(divisors) - 1
    factors = [divisors[k] // divisors[k - 1] for k in range(1, rank + 1)]
    return ambient - rank, [d for d in factors if d > 1]


def rational_rank(relation_columns):
    rows = [[Fraction(x) for x in col] for col in relation_columns]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def quotient_mod_k_size(ambient, relation_columns, k):
    """#(G / kG) for G = Z^a / L by exhaustive enumeration.

    Counts y in (Z/k)^a with y . g = 0 mod k for every generator g; that set
    is the dual of (Z/k)^a / (L mod k), which has the same size as G/kG.
    """
    count = 0
    for y in itertools.product(range(k), repeat=ambient):
        if all(sum(a * b for a, b in zip(y, g)) % k == 0 for g in relation_columns):
            count += 1
    return count


def in_lattice(ambient, relation_columns, x):
    """Membership of x in span_Z(columns): adding x must not shrink the quotient."""
    return group_from_relations(ambient, relation_columns) == \
        group_from_relations(ambient, list(relation_columns) + [list(x)])


# --------------------------------------------------- the GO(2n) relations

def go_symbols(n):
    lam = sympy.Symbol("l")
    cs = [sympy.Integer(1)] + [sympy.Symbol(f"c{i}") for i in range(1, 2 * n + 1)]
    return lam, cs


def go_relation_sympy(n, p):
    lam, c = go_symbols(n)
    expr = -c[p]
    for i in range(p + 1):
        if 0 <= p - i <= 2 * n - i:
            expr += (-1) ** i * comb(2 * n - i, p - i) * c[i] * lam ** (p - i)
    return sympy.expand(expr)


def weighted_monomials(degrees, m):
    """All exponent tuples with sum e_i * deg_i = m, by brute force."""
    ranges = [range(m // d + 1) for d in degrees]
    return [e for e in itertools.product(*ranges) if sum(a * d for a, d in zip(e, degrees)) == m]


def go_degree_presentation(n, m):
    """Basis and relation columns of degree m of Z[l, c]/(rel_p), all through sympy."""
    lam, c = go_symbols(n)
    gens = [lam] + c[1:]
    degs = [1] + list(range(1, 2 * n + 1))
    basis = weighted_monomials(degs, m)
    index = {e: i for i, e in enumerate(basis)}
    columns = []
    for p in range(1, 2 * n + 1):
        if p > m:
            continue
        rel = go_relation_sympy(n, p)
        for mu in weighted_monomials(degs, m - p):
            mult = sympy.Integer(1)
            for g, e in zip(gens, mu):
                mult *= g ** e
            poly = sympy.Poly(sympy.expand(mult * rel), *gens)
            col = [0] * len(basis)
            for mono, coeff in poly.terms():
                col[index[tuple(mono)]] += int(coeff)
            if any(col):
                columns.append(col)
    return basis, columns


def torus_image_sympy(n, expr):
    """Substitute c_i -> degree-i part of prod_j (1 + l + t_j)(1 - t_j)."""
    lam, c = go_symbols(n)
    ts = sympy.symbols(f"t1:{n + 1}")
    s = sympy.Symbol("s")
    total = sympy.Integer(1)
    for t in ts:
        total *= (1 + s * (lam + t)) * (1 - s * t)
    total = sympy.Poly(sympy.expand(total), s)
    subs = {c[i]: total.coeff_monomial(s ** i) for i in range(1, 2 * n + 1)}
    return sympy.expand(expr.subs(subs))


# ---------------------------------------------------------- counting

def count_b_monomials(n, m):
    """Degree-m monomials of Z[l, c2, c4, ..., c2n]."""
    return len(weighted_monomials([1] + [2 * i for i in range(1, n + 1)], m))


def count_odd_index_monomials(n, m):
    degs = list(range(1, 2 * n + 1))
    return sum(1 for e in weighted_monomials(degs, m) if any(e[i] for i in range(0, 2 * n, 2)))
