"""States: effect-algebra valuations, density matrices, probability vectors.

A state on a finite effect algebra is a [0,1]-valuation additive on
defined orthosums with value 1 at the top; the collection of all of
them is a polytope cut out by the orthosum table, and its vertices are
enumerated exactly over the rationals. States on the two order-unit
instances are positive normalized linear functionals, represented
canonically by a density matrix (rho(a) = trace(D a)) or a probability
vector. The bijection with effect-interval morphisms goes through the
extension machinery of order_unit.

The extremal-state story of the commutative instance is implemented in
full: vertex membership, point evaluations, multiplicativity, zero-one
values on projections, and the min-rule on positive pairs are computed
independently so that their equivalence is a checked fact rather than a
definition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import numpy as np

from .effect_algebras import FiniteEffectAlgebra
from .exact import InfeasibilityCertificate, enumerate_box_vertices
from .order_unit import (
    Element,
    ExtendedLinearMap,
    FunctionSpace,
    SymmetricMatrixSpace,
    extend_effect_morphism,
    in_unit_interval,
)

__all__ = [
    "EffectAlgebraState",
    "DensityMatrixState",
    "ProbabilityVectorState",
    "is_state",
    "StatePolytope",
    "state_polytope",
    "extremal_states",
    "simplex_vertices",
    "RestrictedValuation",
    "FunctionalState",
    "restrict_state_to_effects",
    "extend_effects_valuation",
    "rho_omega_bijection",
    "density_matrix_from_functional",
    "probability_vector_from_functional",
    "ElementDualityReport",
    "element_duality_report",
    "StateNormReport",
    "state_norm_report",
    "CommutativeExtremalReport",
    "extremal_commutative_characterization",
]

STATE_TOL = 1e-9


class EffectAlgebraState:
    """Valuation table on a finite effect algebra; values may be exact."""

    def __init__(self, ea: FiniteEffectAlgebra, values):
        self.ea = ea
        vals = list(values)
        if len(vals) != ea.n:
            raise ValueError("need one value per element")
        self.values = tuple(vals)

    def __call__(self, e: int):
        return self.values[e]

    def is_exact(self) -> bool:
        return all(isinstance(v, Rational) for v in self.values)

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(v) for v in self.values)

    def __repr__(self) -> str:
        return f"EffectAlgebraState({list(self.values)!r})"


class DensityMatrixState:
    """rho(a) = trace(D a) for a symmetric PSD unit-trace D."""

    def __init__(self, space: SymmetricMatrixSpace, matrix):
        self.space = space
        m = np.asarray(matrix, dtype=float)
        self.matrix = (m + m.T) / 2.0
        self.matrix.flags.writeable = False

    def __call__(self, a: Element) -> float:
        return float(np.trace(self.matrix @ a.payload))

    def __repr__(self) -> str:
        return f"DensityMatrixState(n={self.space.n})"


class ProbabilityVectorState:
    """rho(a) = sum of mu(x) a(x) over the points of a function algebra."""

    def __init__(self, space: FunctionSpace, weights):
        self.space = space
        w = np.asarray(weights, dtype=float)
        w.flags.writeable = False
        self.weights = w

    def __call__(self, a: Element) -> float:
        return float(np.dot(self.weights, a.payload))

    def __repr__(self) -> str:
        return f"ProbabilityVectorState({self.weights.tolist()!r})"


def _ea_state_values(ea: FiniteEffectAlgebra, candidate):
    if isinstance(candidate, EffectAlgebraState):
        return list(candidate.values)
    if isinstance(candidate, dict):
        return [candidate[lab] for lab in ea.labels]
    return list(candidate)


def is_state(structure, candidate, tol: float = STATE_TOL) -> bool:
    """Dispatch on the structure kind; exact when the data is exact.

    Effect algebras: value 1 at the top, values in [0, 1], additive on
    every defined orthosum. Matrix instance: symmetric PSD unit-trace
    density. Function instance: nonnegative weights summing to one.
    """
    if isinstance(structure, FiniteEffectAlgebra):
        vals = _ea_state_values(structure, candidate)
        exact = all(isinstance(v, Rational) for v in vals)
        if exact:
            one = Fraction(1)
            if vals[structure.one] != one:
                return False
            if any(v < 0 or v > 1 for v in vals):
                return False
            for e in range(structure.n):
                for f in range(structure.n):
                    g = structure.table[e][f]
                    if g is not None and vals[e] + vals[f] != vals[g]:
                        return False
            return True
        fvals = [float(v) for v in vals]
        if abs(fvals[structure.one] - 1.0) > tol:
            return False
        if any(v < -tol or v > 1.0 + tol for v in fvals):
            return False
        for e in range(structure.n):
            for f in range(structure.n):
                g = structure.table[e][f]
                if g is not None and abs(fvals[e] + fvals[f] - fvals[g]) > tol:
                    return False
        return True

    if isinstance(structure, SymmetricMatrixSpace):
        if isinstance(candidate, DensityMatrixState):
            m = candidate.matrix
        else:
            m = np.asarray(candidate, dtype=float)
        if m.shape != (structure.n, structure.n):
            return False
        if np.max(np.abs(m - m.T)) > 1e-10:
            return False
        if abs(float(np.trace(m)) - 1.0) > tol:
            return False
        w = np.linalg.eigvalsh((m + m.T) / 2.0)
        if w.min() < -tol:
            return False
        # positivity through the functional, on sampled squares
        rng = np.random.default_rng(99)
        for _ in range(4):
            b = structure.random_element(rng)
            if float(np.trace(m @ (b.payload @ b.payload))) < -tol:
                return False
        return True

    if isinstance(structure, FunctionSpace):
        if isinstance(candidate, ProbabilityVectorState):
            w = candidate.weights
        else:
            w = np.asarray(candidate, dtype=float)
        if w.shape != (structure.dimension,):
            return False
        return bool(w.min() >= -1e-12 and abs(float(w.sum()) - 1.0) <= tol)

    raise TypeError(f"no state notion for {structure!r}")


# ---------------------------------------------------------------------------
# The state polytope of a finite effect algebra


@dataclass
class StatePolytope:
    """H-representation and exact vertex data of the state space.

    equalities holds (e, f, g) index triples meaning w(e) + w(f) = w(g),
    together with the implicit w(zero) = 0 and w(one) = 1; the box
    constraints 0 <= w <= 1 complete the description. dimension is the
    dimension of the affine hull cut out by the equalities (-1 when the
    equalities are already inconsistent).
    """

    ea: FiniteEffectAlgebra
    equalities: list[tuple[int, int, int]]
    dimension: int
    feasible: bool
    vertices: list[EffectAlgebraState] = field(default_factory=list)
    certificate: InfeasibilityCertificate | None = None


def state_polytope(ea: FiniteEffectAlgebra) -> StatePolytope:
    """Cut out the state space and enumerate its vertices exactly.

    Every vertex is re-verified to be an exact state and, pairwise, not
    a proper convex combination of two other vertices.
    """
    n = ea.n
    triples = []
    for e in range(n):
        for f in range(e, n):
            g = ea.table[e][f]
            if g is not None:
                triples.append((e, f, g))

    rows: list[list[int]] = []
    rhs: list[int] = []
    row = [0] * n
    row[ea.zero] = 1
    rows.append(row)
    rhs.append(0)
    row = [0] * n
    row[ea.one] = 1
    rows.append(row)
    rhs.append(1)
    for e, f, g in triples:
        row = [0] * n
        row[e] += 1
        row[f] += 1
        row[g] -= 1
        if any(row):
            rows.append(row)
            rhs.append(0)

    enum = enumerate_box_vertices(rows, rhs, n)
    verts = [EffectAlgebraState(ea, v) for v in enum.vertices]
    for st in verts:
        if not is_state(ea, st):
            raise AssertionError("enumerated vertex is not a state")
    _assert_no_proper_combinations(verts)
    return StatePolytope(
        ea=ea,
        equalities=triples,
        dimension=enum.dimension,
        feasible=enum.feasible,
        vertices=verts,
        certificate=enum.certificate,
    )


def _assert_no_proper_combinations(verts: list[EffectAlgebraState]) -> None:
    pts = [st.values for st in verts]
    for i, u in enumerate(pts):
        for j, v in enumerate(pts):
            for k in range(j + 1, len(pts)):
                w = pts[k]
                if j == i or k == i:
                    continue
                # is u = t v + (1-t) w for some t in (0,1), exactly?
                t = None
                ok = True
                for uc, vc, wc in zip(u, v, w):
                    denom = vc - wc
                    if denom == 0:
                        if uc != wc:
                            ok = False
                            break
                        continue
                    cand = Fraction(uc - wc, 1) / denom
                    if t is None:
                        t = cand
                    elif cand != t:
                        ok = False
                        break
                if ok and t is not None and 0 < t < 1:
                    raise AssertionError(
                        f"vertex {i} is a proper combination of vertices {j} and {k}"
                    )


def extremal_states(arg) -> list[EffectAlgebraState]:
    """Vertex list of the state polytope (accepts an algebra or polytope)."""
    poly = arg if isinstance(arg, StatePolytope) else state_polytope(arg)
    return list(poly.vertices)


@lru_cache(maxsize=None)
def _simplex_vertex_data(k: int) -> tuple[tuple[Fraction, ...], ...]:
    enum = enumerate_box_vertices([[1] * k], [1], k)
    return tuple(tuple(v) for v in enum.vertices)


def simplex_vertices(space: FunctionSpace) -> list[list[Fraction]]:
    """Exact vertices of the probability simplex over the point set.

    The enumeration depends only on the dimension, so it is memoized;
    callers get fresh lists.
    """
    return [list(v) for v in _simplex_vertex_data(space.dimension)]


# ---------------------------------------------------------------------------
# States <-> effect-interval morphisms


class RestrictedValuation:
    """A state restricted to the unit interval; rejects non-effects."""

    def __init__(self, space, rho):
        self.space = space
        self.rho = rho

    def __call__(self, e: Element):
        if not in_unit_interval(e):
            raise ValueError("argument is not an effect")
        return self.rho(e)


class FunctionalState:
    """State produced by linear extension of an effect valuation."""

    def __init__(self, space, xi: ExtendedLinearMap):
        self.space = space
        self.xi = xi

    def __call__(self, a: Element) -> float:
        value = self.xi(a)
        return float(value)


def restrict_state_to_effects(space, rho) -> RestrictedValuation:
    return RestrictedValuation(space, rho)


def extend_effects_valuation(space, omega, tol: float = STATE_TOL) -> FunctionalState:
    xi = extend_effect_morphism(omega, space, target_unit=1.0, tol=tol)
    return FunctionalState(space, xi)


def rho_omega_bijection(space, x):
    """Round-trip direction chosen by the argument's type.

    State-like objects are restricted to the unit interval; a bare
    callable is taken as an effect valuation and extended to a state.
    """
    if isinstance(x, (DensityMatrixState, ProbabilityVectorState, FunctionalState)):
        return restrict_state_to_effects(space, x)
    if callable(x):
        return extend_effects_valuation(space, x)
    raise TypeError("expected a state or an effect valuation")


def density_matrix_from_functional(space: SymmetricMatrixSpace, rho) -> DensityMatrixState:
    """Recover the representing density matrix from functional values."""
    n = space.n
    d = np.zeros((n, n))
    for i in range(n):
        m = np.zeros((n, n))
        m[i, i] = 1.0
        d[i, i] = rho(Element(space, m))
    for i in range(n):
        for j in range(i + 1, n):
            m = np.zeros((n, n))
            m[i, j] = m[j, i] = 1.0
            v = rho(Element(space, m)) / 2.0
            d[i, j] = d[j, i] = v
    return DensityMatrixState(space, d)


def probability_vector_from_functional(space: FunctionSpace, rho) -> ProbabilityVectorState:
    w = [rho(space.indicator([i])) for i in range(space.dimension)]
    return ProbabilityVectorState(space, w)


# ---------------------------------------------------------------------------
# Order and norm through the extremal states


@dataclass(frozen=True)
class ElementDualityReport:
    """Positivity and norm of an element read off the extremal states."""

    min_extremal: float
    sup_abs_extremal: float
    norm: float
    is_positive: bool
    positivity_matches: bool
    norm_matches: bool
    witness_state: object | None


def element_duality_report(a: Element, tol: float = STATE_TOL) -> ElementDualityReport:
    space = a.space
    if isinstance(space, SymmetricMatrixSpace):
        w, u = np.linalg.eigh(a.payload)
        i_min = int(np.argmin(w))
        min_val = float(w[i_min])
        sup_abs = float(np.max(np.abs(w)))
        vec = u[:, i_min : i_min + 1]
        witness = DensityMatrixState(space, vec @ vec.T) if min_val < 0 else None
    else:
        vals = a.payload
        i_min = int(np.argmin(vals))
        min_val = float(vals[i_min])
        sup_abs = float(np.max(np.abs(vals)))
        witness = (
            ProbabilityVectorState(space, (np.arange(space.dimension) == i_min).astype(float))
            if min_val < 0
            else None
        )
    is_pos = space.contains_positive(a)
    return ElementDualityReport(
        min_extremal=min_val,
        sup_abs_extremal=sup_abs,
        norm=a.norm(),
        is_positive=is_pos,
        positivity_matches=is_pos == (min_val >= -tol),
        norm_matches=abs(a.norm() - sup_abs) <= tol,
        witness_state=witness,
    )


@dataclass(frozen=True)
class StateNormReport:
    """||rho|| over the unit ball, its maximizer, and rho at the unit."""

    norm: float
    value_at_unit: float
    maximizer: Element
    maximizer_in_ball: bool
    identity_holds: bool


def state_norm_report(space, state, tol: float = STATE_TOL) -> StateNormReport:
    """The norm of a positive functional is its value at the order unit.

    The documented maximizer: the sign combination of eigenprojections
    of the density matrix, or the sign vector of the weights; for a
    genuine state both collapse to the order unit itself.
    """
    if isinstance(state, DensityMatrixState):
        w, u = np.linalg.eigh(state.matrix)
        signs = np.where(w >= 0, 1.0, -1.0)
        maximizer = Element(space, (u * signs) @ u.T)
        norm = float(np.sum(np.abs(w)))
    elif isinstance(state, ProbabilityVectorState):
        signs = np.where(state.weights >= 0, 1.0, -1.0)
        maximizer = Element(space, signs)
        norm = float(np.sum(np.abs(state.weights)))
    else:
        raise TypeError("need a canonical state representation")
    value_at_unit = state(space.unit())
    return StateNormReport(
        norm=norm,
        value_at_unit=value_at_unit,
        maximizer=maximizer,
        maximizer_in_ball=maximizer.norm() <= 1.0 + tol,
        identity_holds=abs(norm - state(maximizer)) <= tol
        and abs(norm - value_at_unit) <= tol,
    )


# ---------------------------------------------------------------------------
# Extremal states of the commutative instance


@dataclass(frozen=True)
class CommutativeExtremalReport:
    """Four equivalent extremality conditions plus the min-rule.

    is_vertex: membership in the exactly enumerated simplex vertex set.
    point_evaluation: the point label when the state is evaluation at a
    point. is_multiplicative: rho(ab) = rho(a) rho(b) on a spanning
    family. zero_one_on_projections: rho of every indicator lies in
    {0, 1}. The min-rule holds at extremal states for all positive
    pairs and fails somewhere otherwise; the witness records a failing
    pair of indicators when one exists.
    """

    is_vertex: bool
    point_evaluation: str | None
    is_multiplicative: bool
    zero_one_on_projections: bool
    all_equivalent: bool
    min_rule_holds: bool
    min_rule_witness: tuple[str, str] | None


def extremal_commutative_characterization(
    space, state, tol: float = 1e-9
) -> CommutativeExtremalReport:
    if not isinstance(space, FunctionSpace):
        raise ValueError("commutative algebras only")
    if isinstance(state, ProbabilityVectorState):
        mu = state.weights
    else:
        mu = np.asarray(state, dtype=float)
    if not is_state(space, mu):
        raise ValueError("not a state on the function algebra")
    rho = ProbabilityVectorState(space, mu)
    k = space.dimension
    if k > 16:
        raise ValueError("projection scan is exhaustive; keep the point set small")

    verts = simplex_vertices(space)
    is_vertex = any(
        all(abs(float(vc) - m) <= tol for vc, m in zip(vert, mu)) for vert in verts
    )

    point_evaluation = None
    for i, p in enumerate(space.points):
        gamma = (np.arange(k) == i).astype(float)
        if np.max(np.abs(mu - gamma)) <= tol:
            point_evaluation = p
            break

    is_multiplicative = True
    for i in range(k):
        di = space.indicator([i])
        for j in range(k):
            dj = space.indicator([j])
            prod = Element(space, di.payload * dj.payload)
            if abs(rho(prod) - rho(di) * rho(dj)) > tol:
                is_multiplicative = False
                break
        if not is_multiplicative:
            break

    zero_one = True
    for mask in range(1 << k):
        p = space.indicator([i for i in range(k) if mask >> i & 1])
        v = rho(p)
        if min(abs(v), abs(v - 1.0)) > tol:
            zero_one = False
            break

    flags = (is_vertex, point_evaluation is not None, is_multiplicative, zero_one)
    all_equivalent = len(set(flags)) == 1

    min_rule_holds = True
    witness = None
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            a = space.indicator([i])
            b = space.indicator([j])
            m = Element(space, np.minimum(a.payload, b.payload))
            if abs(rho(m) - min(rho(a), rho(b))) > tol:
                min_rule_holds = False
                witness = (space.points[i], space.points[j])
                break
        if not min_rule_holds:
            break

    return CommutativeExtremalReport(
        is_vertex=is_vertex,
        point_evaluation=point_evaluation,
        is_multiplicative=is_multiplicative,
        zero_one_on_projections=zero_one,
        all_equivalent=all_equivalent,
        min_rule_holds=min_rule_holds,
        min_rule_witness=witness,
    )
