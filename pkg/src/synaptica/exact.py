"""Exact rational linear algebra for small state polytopes.

Everything here works over fractions.Fraction so vertex coordinates come
out as exact rationals. The polytopes we care about all have the shape

    { x in [0, 1]^n : A x = b }

(state spaces of finite effect algebras, probability simplexes). Vertex
enumeration parametrizes the affine solution set of the equalities and
then enumerates basic feasible solutions of the box constraints, the
classic combinations-of-active-rows scan. Infeasibility is certified
exactly: either an inconsistent combination of the equalities, or a
Fourier-Motzkin refutation of the reduced inequality system with the
nonnegative multipliers traced back to the original rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

__all__ = [
    "rref",
    "solve_square",
    "affine_solution_set",
    "AffineSet",
    "InfeasibilityCertificate",
    "VertexEnumeration",
    "enumerate_box_vertices",
]

F = Fraction


def _frac_rows(rows) -> list[list[Fraction]]:
    return [[F(v) for v in row] for row in rows]


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form (copy) and the pivot column list."""
    m = [row[:] for row in rows]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = F(1) / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [vi - factor * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def solve_square(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """Solve a d x d system exactly; None when singular."""
    d = len(a)
    aug = [row[:] + [b[i]] for i, row in enumerate(a)]
    reduced, pivots = rref(aug)
    if pivots != list(range(d)):  # singular coefficient block
        return None
    return [reduced[i][d] for i in range(d)]


@dataclass(frozen=True)
class InfeasibilityCertificate:
    """Exact witness that a constraint system has no solution.

    kind is "equalities" (a rational combination of the equality rows
    reduces to 0 = nonzero), "bound" (a coordinate is forced outside
    [0, 1] by the equalities alone), or "inequalities" (nonnegative
    multipliers over the inequality rows sum to 0 <= negative).
    multipliers pairs row indices with their rational coefficients.
    """

    kind: str
    multipliers: tuple[tuple[int, Fraction], ...]
    detail: str


@dataclass
class AffineSet:
    """Solution set of A x = b as x = particular + basis @ t."""

    particular: list[Fraction]
    basis: list[list[Fraction]]  # one column vector per free parameter

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def point(self, t: list[Fraction]) -> list[Fraction]:
        x = self.particular[:]
        for j, col in enumerate(self.basis):
            if t[j] != 0:
                for i in range(len(x)):
                    x[i] += col[i] * t[j]
        return x


def affine_solution_set(
    a_rows, b_vals, n: int
) -> AffineSet | InfeasibilityCertificate:
    """Parametrize {x: A x = b} or certify inconsistency.

    The reduction carries an identity block so every reduced row knows
    which rational combination of the original equalities produced it.
    """
    a = _frac_rows(a_rows)
    b = [F(v) for v in b_vals]
    nrows = len(a)
    # layout per row: n coefficient cols | nrows multiplier cols | rhs
    aug = [a[i][:] + [F(int(i == j)) for j in range(nrows)] + [b[i]] for i in range(nrows)]

    m = [row[:] for row in aug]
    pivots: list[int] = []
    r = 0
    for c in range(n):  # only eliminate over the coefficient columns
        pivot_row = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = F(1) / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [vi - factor * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break

    for i in range(r, nrows):
        if m[i][-1] != 0:  # 0 = nonzero
            mults = tuple(
                (j, m[i][n + j]) for j in range(nrows) if m[i][n + j] != 0
            )
            return InfeasibilityCertificate(
                "equalities",
                mults,
                f"combination of equalities reduces to 0 = {m[i][-1]}",
            )

    free_cols = [c for c in range(n) if c not in pivots]
    particular = [F(0)] * n
    for row_i, c in enumerate(pivots):
        particular[c] = m[row_i][-1]
    basis = []
    for fc in free_cols:
        col = [F(0)] * n
        col[fc] = F(1)
        for row_i, c in enumerate(pivots):
            col[c] = -m[row_i][fc]
        basis.append(col)
    return AffineSet(particular, basis)


def _fourier_motzkin(rows: list[tuple[list[Fraction], Fraction]]) -> InfeasibilityCertificate | None:
    """Refute {t: rows} or return None if consistent.

    rows are (coeffs, rhs) meaning coeffs . t <= rhs. Multipliers over
    the original row list are tracked through every combination step.
    """
    d = len(rows[0][0]) if rows else 0
    work = [
        (coeffs[:], rhs, {i: F(1)}) for i, (coeffs, rhs) in enumerate(rows)
    ]
    for var in range(d):
        pos = [r for r in work if r[0][var] > 0]
        neg = [r for r in work if r[0][var] < 0]
        zero = [r for r in work if r[0][var] == 0]
        new = list(zero)
        for cp, rp, mp in pos:
            for cn, rn, mn in neg:
                # scale so the var cancels; multipliers stay nonnegative
                sp = F(1) / cp[var]
                sn = F(-1) / cn[var]
                coeffs = [sp * x + sn * y for x, y in zip(cp, cn)]
                rhs = sp * rp + sn * rn
                mults: dict[int, Fraction] = {}
                for k, v in mp.items():
                    mults[k] = mults.get(k, F(0)) + sp * v
                for k, v in mn.items():
                    mults[k] = mults.get(k, F(0)) + sn * v
                new.append((coeffs, rhs, mults))
        work = new
    for coeffs, rhs, mults in work:
        if rhs < 0:  # all coeffs are zero by now
            return InfeasibilityCertificate(
                "inequalities",
                tuple(sorted((k, v) for k, v in mults.items() if v != 0)),
                f"nonnegative combination of inequality rows gives 0 <= {rhs}",
            )
    return None


@dataclass
class VertexEnumeration:
    """Outcome of exact vertex enumeration over {x in [0,1]^n : Ax = b}."""

    feasible: bool
    dimension: int
    vertices: list[list[Fraction]] = field(default_factory=list)
    certificate: InfeasibilityCertificate | None = None
    # inequality rows in parameter space, for reports: (coeffs, rhs)
    rows: list[tuple[tuple[Fraction, ...], Fraction]] = field(default_factory=list)


def enumerate_box_vertices(a_rows, b_vals, n: int) -> VertexEnumeration:
    """All vertices of {x in [0,1]^n : A x = b}, exactly.

    Every returned point satisfies the constraints exactly and is a
    basic feasible solution (d active independent rows), hence a true
    vertex. A bounded nonempty polytope has at least one vertex, so an
    empty vertex list means infeasible and comes with a certificate.
    """
    sol = affine_solution_set(a_rows, b_vals, n)
    if isinstance(sol, InfeasibilityCertificate):
        return VertexEnumeration(False, -1, certificate=sol)
    d = sol.dimension

    if d == 0:
        x = sol.particular
        for i, v in enumerate(x):
            if v < 0 or v > 1:
                cert = InfeasibilityCertificate(
                    "bound", ((i, F(1)),), f"coordinate {i} is forced to {v}"
                )
                return VertexEnumeration(False, 0, certificate=cert)
        return VertexEnumeration(True, 0, vertices=[x])

    # box constraints in parameter space: 0 <= particular + basis t <= 1
    raw_rows: list[tuple[tuple[Fraction, ...], Fraction]] = []
    for i in range(n):
        coeffs = tuple(sol.basis[j][i] for j in range(d))
        p = sol.particular[i]
        if all(c == 0 for c in coeffs):
            if p < 0 or p > 1:
                cert = InfeasibilityCertificate(
                    "bound", ((i, F(1)),), f"coordinate {i} is forced to {p}"
                )
                return VertexEnumeration(False, d, certificate=cert)
            continue
        raw_rows.append((tuple(-c for c in coeffs), p))        # -(basis t) <= p
        raw_rows.append((coeffs, F(1) - p))                    # basis t <= 1 - p

    # dedupe identical left sides, keeping the tightest right side
    best: dict[tuple[Fraction, ...], Fraction] = {}
    for coeffs, rhs in raw_rows:
        if coeffs not in best or rhs < best[coeffs]:
            best[coeffs] = rhs
    rows = sorted(best.items())

    def satisfied(t: list[Fraction]) -> bool:
        return all(
            sum(c * tv for c, tv in zip(coeffs, t)) <= rhs for coeffs, rhs in rows
        )

    seen: set[tuple[Fraction, ...]] = set()
    verts: list[list[Fraction]] = []
    for combo in combinations(range(len(rows)), d):
        a_sub = [list(rows[i][0]) for i in combo]
        b_sub = [rows[i][1] for i in combo]
        t = solve_square(a_sub, b_sub)
        if t is None or not satisfied(t):
            continue
        key = tuple(t)
        if key in seen:
            continue
        seen.add(key)
        verts.append(sol.point(t))

    if not verts:
        cert = _fourier_motzkin([(list(c), r) for c, r in rows])
        if cert is None:
            raise RuntimeError("no vertices found for a feasible bounded system")
        return VertexEnumeration(False, d, certificate=cert, rows=rows)

    verts.sort(key=tuple)
    return VertexEnumeration(True, d, vertices=verts, rows=rows)
