"""Degree-by-degree verification suite for the GO(2n) presentation.

Each check is a decidable statement about finitely generated abelian groups
(or an exact polynomial identity), evaluated for a given ``n`` and degree
bound.  All statements are made about the presented ring ``R``; the
comparison ring ``A`` is not computable and enters only through the
isomorphism these checks support.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import catalog
from .catalog import LAMBDA
from .gradedring import (GradedPiece, graded_piece, induced_map_in_degree, multiplication_map,
                         quotient_piece)
from .polycore import Polynomial, enumerate_monomials
from .zlattice import INFINITY, Cokernel, solve_in_quotient

HEADER = ("All checks are statements about R = Z[l, c1..c2n]/(relations); "
          "R is the ring the comparison map is proved to be an isomorphism from.")


class ResourceLimitExceeded(RuntimeError):
    """A graded piece would exceed the configured size cap (not a check failure)."""


@dataclass(frozen=True)
class CheckId:
    id: str
    title: str
    statement: str


CHECKS = {c.id: c for c in [
    CheckId("C1", "relations vanish on the torus",
            "every defining relation maps to the zero polynomial in Z[l, t1..tn]"),
    CheckId("C2", "odd doubling lies in l*R",
            "for odd p, rel_p + 2c_p is an explicit multiple of l, and 2c_p*mu lies in l*R"),
    CheckId("C3", "even relations divisible by l",
            "for even p the c_p terms cancel and rel_p is divisible by l"),
    CheckId("C4", "B embeds",
            "Z[l, c_even] -> R is injective in each degree"),
    CheckId("C5", "R/(l) is the O(2n) ring",
            "R/(l) -> Z[c1..c2n]/(2c_odd) is an isomorphism compatible with multiplication by each c_i"),
    CheckId("C6", "torsion is the torus kernel",
            "the kernel of R_m -> A_Gamma,m equals the torsion subgroup of R_m"),
    CheckId("C7", "torsion is elementary 2-torsion",
            "every invariant factor of the torsion of R_m equals 2"),
    CheckId("C8", "2-power denominators",
            "R_m / B_m is a finite 2-group"),
    CheckId("C9", "kernel counting",
            "#ker(l: R_m -> R_m+1) = #(torsion of the O(2n) ring in degree m)"),
    CheckId("C10", "l kills torsion and ker l = torsion",
            "l annihilates the torsion of R_m and ker(l on R_m) is exactly that torsion"),
    CheckId("C11", "torsion surjects",
            "torsion of R_m maps onto the torsion of the O(2n) ring in degree m"),
    CheckId("C12", "odd orders",
            "l*c_q has odd order modulo l*B_q, and 2*gamma has odd order modulo B_m"),
]}

NOTES = {
    "C9": "Only the R-side count and the O-side count are computable; the A-side count "
          "is covered by the isomorphism itself.",
}


@dataclass
class DegreeResult:
    m: int
    passed: bool
    witness: dict | None = None
    detail: str = ""

    def to_json(self) -> dict:
        return {"m": self.m, "status": "pass" if self.passed else "fail",
                "witness": self.witness if not self.passed else None}


@dataclass
class CheckReport:
    check: str
    n: int
    max_degree: int
    per_degree: list[DegreeResult] = field(default_factory=list)
    wall_time: float = 0.0
    note: str = ""

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.per_degree)

    def failures(self) -> list[DegreeResult]:
        return [r for r in self.per_degree if not r.passed]

    def to_json(self) -> dict:
        return {"check": self.check, "n": self.n, "max_degree": self.max_degree,
                "per_degree": [r.to_json() for r in self.per_degree], "passed": self.passed}


# ---------------------------------------------------------------------------


class _Workspace:
    """Pieces and maps for one ``n``, with a size cap."""

    def __init__(self, n: int, max_monomials: int):
        self.n = n
        self.cap = max_monomials
        self.R = catalog.go_presentation(n)
        self.O = catalog.o_presentation(2 * n)
        self.ctx = self.R.context
        self.lam = self.ctx.var(LAMBDA)

    def _guard(self, P, m):
        size = len(enumerate_monomials(P.context, m))
        if size > self.cap:
            raise ResourceLimitExceeded(
                f"degree {m} piece of {P.name} has {size} monomials (cap {self.cap})")

    def piece(self, P, m) -> GradedPiece:
        self._guard(P, m)
        return graded_piece(P, m)

    def r(self, m):
        return self.piece(self.R, m)

    def o(self, m):
        return self.piece(self.O, m)

    def lam_map(self, m):
        self._guard(self.R, m + 1)
        return multiplication_map(self.R, self.lam, m)

    def b_quotient(self, m, extra=()) -> Cokernel:
        """``R_m / span(B_m, extra)`` on the structure generators of ``R_m``."""
        piece = self.r(m)
        rels = [{i: d} for i, d in enumerate(piece.cokernel.moduli) if d]
        for f in catalog.b_basis_polynomials(self.n, m):
            rels.append(dict(enumerate(piece.coords(f))))
        for f in extra:
            rels.append(dict(enumerate(piece.coords(f))))
        return Cokernel(piece.ngens, rels)


def _group(g) -> str:
    return str(g)


def _check_c1(ws: _Workspace, max_degree: int):
    phi = catalog.torus_map(ws.n)
    for p, rel in enumerate(ws.R.relations, start=1):
        img = phi.apply(rel)
        ok = img.is_zero()
        yield DegreeResult(p, ok, None if ok else {"relation": str(rel), "image": str(img)},
                           f"rel_{p} -> 0")


def _check_c2(ws: _Workspace, max_degree: int):
    n, ctx = ws.n, ws.ctx
    odd = [p for p in range(1, 2 * n + 1, 2)]
    for m in range(max_degree + 1):
        bad = None
        for p in odd:
            if p > m:
                continue
            if p == m:
                rhs = catalog.odd_doubling_rhs(n, p)
                lhs = catalog.go_relation(n, p) + 2 * ctx.var(f"c{p}")
                if lhs != rhs or any(mono[0] == 0 for mono, _ in rhs.items()):
                    bad = {"p": p, "difference": str(lhs - rhs)}
                    break
            piece = quotient_piece(ws.R, ws.lam, m)
            for mu in enumerate_monomials(ctx, m - p):
                f = 2 * ctx.var(f"c{p}") * ctx.monomial(mu)
                if not piece.is_zero(f):
                    bad = {"p": p, "element": str(f), "class_mod_l": list(piece.coords(f))}
                    break
            if bad:
                break
        yield DegreeResult(m, bad is None, bad, f"odd p <= {min(m, 2 * n)}")


def _check_c3(ws: _Workspace, max_degree: int):
    for p in range(2, 2 * ws.n + 1, 2):
        rel = ws.R.relations[p - 1]
        cp = ws.ctx.var(f"c{p}")
        ok = rel.coefficient(next(iter(cp.terms))) == 0 and all(mono[0] >= 1 for mono, _ in rel.items())
        yield DegreeResult(p, ok, None if ok else {"relation": str(rel)}, f"rel_{p} in (l)")


def _check_c4(ws: _Workspace, max_degree: int):
    phi = catalog.b_inclusion(ws.n)
    for m in range(max_degree + 1):
        ws.r(m)
        ind = induced_map_in_degree(phi, m)
        ok = ind.kernel.is_trivial
        yield DegreeResult(m, ok, None if ok else {
            "kernel": _group(ind.kernel), "kernel_generators": [str(g) for g in ind.kernel_generators()]},
            f"rank B_m = {ind.source.rank}")


def _check_c5(ws: _Workspace, max_degree: int):
    n = ws.n
    phi = catalog.o_from_quotient_map(n)
    Q = phi.source
    for m in range(max_degree + 1):
        ws.r(m)
        qm, om = quotient_piece(ws.R, ws.lam, m), ws.o(m)
        ind = induced_map_in_degree(phi, m)
        witness = None
        if qm.structure != om.structure or not ind.is_injective or not ind.is_surjective:
            witness = {"quotient": _group(qm.structure), "o_piece": _group(om.structure),
                       "kernel": _group(ind.kernel), "image": _group(ind.image)}
        else:
            for i in range(1, 2 * n + 1):
                if m + i > max_degree:
                    break
                ci_q = Q.var(f"c{i}")
                ci_o = ws.O.var(f"c{i}")
                up = induced_map_in_degree(phi, m + i)
                mq = multiplication_map(Q, ci_q, m)
                mo = multiplication_map(ws.O, ci_o, m)
                for g in range(qm.ngens):
                    e = [0] * qm.ngens
                    e[g] = 1
                    left = up.apply_coords(mq.apply_coords(e))
                    right = mo.apply_coords(ind.apply_coords(e))
                    if left != right:
                        witness = {"c": i, "generator": str(qm.generator(g)),
                                   "via_quotient": list(left), "via_o": list(right)}
                        break
                if witness:
                    break
        yield DegreeResult(m, witness is None, witness, f"{qm.structure} ~ {om.structure}")


def _check_c6(ws: _Workspace, max_degree: int):
    phi = catalog.torus_map(ws.n)
    for m in range(max_degree + 1):
        piece = ws.r(m)
        ind = induced_map_in_degree(phi, m)
        ok = ind.kernel.is_finite and ind.kernel == piece.torsion
        yield DegreeResult(m, ok, None if ok else {
            "kernel": _group(ind.kernel), "torsion": _group(piece.torsion)},
            f"ker = {ind.kernel}")


def _check_c7(ws: _Workspace, max_degree: int):
    for m in range(max_degree + 1):
        facs = ws.r(m).structure.invariant_factors
        ok = all(d == 2 for d in facs)
        yield DegreeResult(m, ok, None if ok else {"invariant_factors": list(facs)},
                           f"(Z/2)^{len(facs)}")


def _check_c8(ws: _Workspace, max_degree: int):
    for m in range(max_degree + 1):
        g = ws.b_quotient(m).group
        ok = g.is_finite and all(d & (d - 1) == 0 for d in g.invariant_factors)
        yield DegreeResult(m, ok, None if ok else {"quotient": _group(g)}, f"R_m/B_m = {g}")


def _check_c9(ws: _Workspace, max_degree: int):
    for m in range(max_degree + 1):
        ker = ws.lam_map(m).kernel
        t_o = ws.o(m).torsion
        ok = ker.is_finite and ker.order() == t_o.order()
        yield DegreeResult(m, ok, None if ok else {"ker_l": _group(ker), "torsion_O": _group(t_o)},
                           f"#ker = {ker.order()}")


def _check_c10(ws: _Workspace, max_degree: int):
    for m in range(max_degree + 1):
        piece = ws.r(m)
        lam = ws.lam_map(m)
        witness = None
        for g in range(piece.torsion_count):
            e = [0] * piece.ngens
            e[g] = 1
            if any(lam.apply_coords(e)):
                witness = {"torsion_generator": str(piece.generator(g)),
                           "l_times": list(lam.apply_coords(e))}
                break
        if witness is None and not (lam.kernel.is_finite and lam.kernel == piece.torsion):
            witness = {"ker_l": _group(lam.kernel), "torsion": _group(piece.torsion)}
        yield DegreeResult(m, witness is None, witness, f"ker l = {lam.kernel}")


def _check_c11(ws: _Workspace, max_degree: int):
    phi = catalog.o_map(ws.n)
    for m in range(max_degree + 1):
        piece, om = ws.r(m), ws.o(m)
        ind = induced_map_in_degree(phi, m)
        rels = [{i: d} for i, d in enumerate(om.cokernel.moduli) if d]
        for g in range(piece.torsion_count):
            e = [0] * piece.ngens
            e[g] = 1
            rels.append(dict(enumerate(ind.apply_coords(e))))
        rest = Cokernel(om.ngens, rels).group
        ok = not rest.invariant_factors and rest.free_rank == om.structure.free_rank
        yield DegreeResult(m, ok, None if ok else {"torsion_O": _group(om.torsion),
                                                    "cokernel": _group(rest)},
                           f"T_R -> T_O onto {om.torsion}")


def _is_odd(order) -> bool:
    return order != INFINITY and order % 2 == 1


def _check_c12(ws: _Workspace, max_degree: int):
    n, ctx = ws.n, ws.ctx
    for m in range(max_degree + 1):
        witness = None
        q = m - 1
        if q >= 1 and q % 2 == 1 and q <= 2 * n - 1:
            extra = [ws.lam * f for f in catalog.b_basis_polynomials(n, q)]
            piece = ws.r(m)
            rels = [{i: d} for i, d in enumerate(piece.cokernel.moduli) if d]
            rels += [dict(enumerate(piece.coords(f))) for f in extra]
            cok = Cokernel(piece.ngens, rels)
            target = ws.lam * ctx.var(f"c{q}")
            order = cok.order(piece.coords(target))
            if not _is_odd(order):
                witness = {"element": str(target), "order": _order_json(order)}
        if witness is None:
            piece = ws.r(m)
            cok = ws.b_quotient(m)
            for mono in piece.basis:
                order = cok.order(piece.coords(2 * ctx.monomial(mono)))
                if not _is_odd(order):
                    witness = {"element": f"2*{ctx.format_monomial(mono)}", "order": _order_json(order)}
                    break
        yield DegreeResult(m, witness is None, witness, "orders odd")


def _order_json(order):
    return "inf" if order == INFINITY else order


_RUNNERS: dict[str, Callable] = {
    "C1": _check_c1, "C2": _check_c2, "C3": _check_c3, "C4": _check_c4,
    "C5": _check_c5, "C6": _check_c6, "C7": _check_c7, "C8": _check_c8,
    "C9": _check_c9, "C10": _check_c10, "C11": _check_c11, "C12": _check_c12,
}

DEFAULT_MAX_MONOMIALS = 5000


def default_max_degree(n: int) -> int:
    return 2 * n + 6


def run_check(check_id: str, n: int, max_degree: int | None = None,
              max_monomials: int = DEFAULT_MAX_MONOMIALS) -> CheckReport:
    """Run one named check; see :data:`CHECKS` for the table."""
    if check_id not in _RUNNERS:
        raise KeyError(f"unknown check {check_id!r}; valid: {', '.join(CHECKS)}")
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    if max_degree is None:
        max_degree = default_max_degree(n)
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    ws = _Workspace(n, max_monomials)
    start = time.perf_counter()
    results = sorted(_RUNNERS[check_id](ws, max_degree), key=lambda r: r.m)
    note = HEADER + (" " + NOTES[check_id] if check_id in NOTES else "")
    return CheckReport(check_id, n, max_degree, results, time.perf_counter() - start, note)


# ---------------------------------------------------------------------------
# torsion lifts


@dataclass(frozen=True)
class TorsionLift:
    """A 2-torsion element of ``R_p`` reducing to ``c_p`` modulo ``l``."""

    n: int
    p: int
    element: Polynomial
    coordinates: dict  # monomial exponent vector -> coefficient

    def certificate(self) -> dict:
        R = catalog.go_presentation(self.n)
        piece = graded_piece(R, self.p)
        doubled_dies = piece.is_zero(2 * self.element)
        phi = catalog.o_map(self.n)
        O = phi.target
        diff = phi.apply(self.element) - O.var(f"c{self.p}")
        maps_to_cp = graded_piece(O, self.p).is_zero(diff)
        return {"twice_in_relations": doubled_dies, "maps_to_c_p": maps_to_cp}

    def verify(self) -> bool:
        return all(self.certificate().values())


def find_torsion_lift(n: int, p: int) -> TorsionLift:
    """Solve for ``beta`` in ``R_p`` with ``2*beta = 0`` and ``beta = c_p`` mod ``l``."""
    if p % 2 == 0 or not 1 <= p < 2 * n:
        raise ValueError(f"p must be odd with 1 <= p < 2n, got p={p}, n={n}")
    R = catalog.go_presentation(n)
    piece = graded_piece(R, p)
    ind = induced_map_in_degree(catalog.o_map(n), p)
    om = ind.target
    # the 2-torsion of R_p is generated by (d/2) e_i over even invariant factors
    halves = []
    for i, d in enumerate(piece.cokernel.moduli):
        if d and d % 2 == 0:
            e = [0] * piece.ngens
            e[i] = d // 2
            halves.append(e)
    images = [dict(enumerate(ind.apply_coords(e))) for e in halves]
    target = dict(enumerate(om.coords(om.presentation.var(f"c{p}"))))
    rels = [{i: d} for i, d in enumerate(om.cokernel.moduli) if d]
    sol = solve_in_quotient(images, target, rels)
    if sol is None:
        raise ArithmeticError(f"no 2-torsion lift of c{p} exists in degree {p} (n={n})")
    coords = [0] * piece.ngens
    for a, e in zip(sol, halves):
        for i, z in enumerate(e):
            coords[i] += a * z
    coords = [z % d if d else z for z, d in zip(coords, piece.cokernel.moduli)]
    beta = piece.from_coords(coords)
    lift = TorsionLift(n, p, beta, dict(beta.items()))
    if not lift.verify():
        raise AssertionError("torsion lift failed its own certificate")
    return lift


def _lift_report(n: int, max_degree: int) -> CheckReport:
    start = time.perf_counter()
    results = []
    for p in range(1, 2 * n, 2):
        try:
            lift = find_torsion_lift(n, p)
            results.append(DegreeResult(p, True, None, f"beta_{p} = {lift.element}"))
        except (ArithmeticError, AssertionError) as exc:
            results.append(DegreeResult(p, False, {"error": str(exc)}))
    return CheckReport("LIFT", n, max_degree, results, time.perf_counter() - start, HEADER)


def _run_one(args):
    check_id, n, max_degree, cap = args
    if check_id == "LIFT":
        return _lift_report(n, max_degree)
    return run_check(check_id, n, max_degree, cap)


def run_suite(n: int, max_degree: int | None = None, workers: int = 1,
              max_monomials: int = DEFAULT_MAX_MONOMIALS) -> list[CheckReport]:
    """Run C1..C12 and the torsion lifts; reports come back in check order."""
    if max_degree is None:
        max_degree = default_max_degree(n)
    jobs = [(c, n, max_degree, max_monomials) for c in list(CHECKS) + ["LIFT"]]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_run_one, jobs))
    else:
        reports = [_run_one(j) for j in jobs]
    order = {c: i for i, c in enumerate(list(CHECKS) + ["LIFT"])}
    return sorted(reports, key=lambda r: order[r.check])


def t_o_cardinality_oracle(n: int, m: int) -> int:
    """``#(T_O)_m`` from counting: an F_2 basis is the monomials with an odd c."""
    return 2 ** catalog.odd_index_monomial_count(n, m)


__all__ = ["CHECKS", "CheckId", "CheckReport", "DegreeResult", "ResourceLimitExceeded",
           "TorsionLift", "find_torsion_lift", "run_check", "run_suite", "default_max_degree",
           "t_o_cardinality_oracle"]
