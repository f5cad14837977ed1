"""Synaptic-algebra operations over the two concrete instances.

The ambient associative product is ordinary matrix multiplication for
SymmetricMatrixSpace and the pointwise product for FunctionSpace; the
symmetric part of the matrix product is the Jordan product. Everything
spectral (square roots, carriers, step projections, reconstruction) is
phrased so the defining formulas stay separate from the
eigendecomposition oracle used to test them:

  carrier(a)      rank-thresholded projection onto the range of a
  step(a, lam)    1 - carrier((a - lam)^+), the spectral step family
  reconstruction  Riemann-Stieltjes sums against the step family

Numerical policy, the single source of truth for rank-like decisions:
eigenvalue clustering and rank thresholds are relative at 1e-8, cone
tests live in order_unit, and the FunctionSpace instance computes
exactly (its carriers and spectra involve no tolerance at all).
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass

import numpy as np

from .order_unit import Element, FunctionSpace, SymmetricMatrixSpace, in_unit_interval

__all__ = [
    "RANK_RTOL",
    "jordan",
    "quadratic",
    "sqrt",
    "decompose",
    "carrier",
    "SpectralResolution",
    "spectral_resolution",
    "step_projection",
    "stieltjes_reconstruct",
    "spectrum",
    "is_invertible",
    "inverse",
    "is_positive_element",
    "is_projection",
    "is_effect",
    "simple_form",
    "apply_polynomial",
    "commutant",
    "double_commutant",
    "center",
    "in_span",
    "proj_meet",
    "proj_join",
    "SynapticMorphismReport",
    "check_synaptic_morphism",
    "proper_effect_decomposition",
    "supremum_of_ascending_chain",
]

RANK_RTOL = 1e-8     # relative threshold for rank, clustering, invertibility
PROJ_TOL = 1e-9      # residual allowed in ||p^2 - p|| for the projection test


def _same_space(a: Element, b: Element) -> None:
    if a.space is not b.space:
        raise ValueError("elements live in different spaces")


def _is_matrix(a: Element) -> bool:
    return isinstance(a.space, SymmetricMatrixSpace)


def jordan(a: Element, b: Element) -> Element:
    """Symmetrized product (ab + ba) / 2; the plain product pointwise."""
    _same_space(a, b)
    ab = a.space.product(a, b)
    if _is_matrix(a):
        return Element(a.space, (ab + ab.T) / 2.0)
    return Element(a.space, ab)


def quadratic(a: Element, b: Element) -> Element:
    """The map b -> aba expressed through Jordan products alone."""
    _same_space(a, b)
    return 2.0 * jordan(a, jordan(a, b)) - jordan(jordan(a, a), b)


def _eigh(a: Element) -> tuple[np.ndarray, np.ndarray]:
    return np.linalg.eigh(a.payload)


def sqrt(a: Element) -> Element:
    """Unique positive square root of a positive element."""
    if not a.space.contains_positive(a):
        raise ValueError("not in positive cone")
    if _is_matrix(a):
        w, u = _eigh(a)
        w = np.clip(w, 0.0, None)  # cone tolerance may leave tiny negatives
        return Element(a.space, (u * np.sqrt(w)) @ u.T)
    return Element(a.space, np.sqrt(np.clip(a.payload, 0.0, None)))


def decompose(a: Element) -> tuple[Element, Element, Element]:
    """(|a|, a_plus, a_minus) with a = a_plus - a_minus, a_plus a_minus = 0.

    |a| is the positive square root of a^2; the parts are the usual
    half-sum and half-difference with a.
    """
    if _is_matrix(a):
        w, u = _eigh(a)
        absolute = Element(a.space, (u * np.abs(w)) @ u.T)
    else:
        absolute = Element(a.space, np.abs(a.payload))
    plus = 0.5 * (absolute + a)
    minus = 0.5 * (absolute - a)
    return absolute, plus, minus


def carrier(a: Element) -> Element:
    """Smallest projection c with ca = a: the support of a.

    Matrix instance: projection onto the span of eigenvectors whose
    eigenvalues clear the relative rank threshold. Function instance:
    the exact support indicator.
    """
    if _is_matrix(a):
        w, u = _eigh(a)
        scale = max(1.0, float(np.max(np.abs(w))))
        keep = np.abs(w) > RANK_RTOL * scale
        cols = u[:, keep]
        return Element(a.space, cols @ cols.T)
    return Element(a.space, (a.payload != 0.0).astype(float))


@dataclass(frozen=True)
class SpectralResolution:
    """Finite spectral data: ascending eigenvalues and their projections.

    step(lam) is the resolution family p_lam, the projection onto the
    part of the spectrum at or below lam. lower and upper are the
    spectral bounds (the extreme eigenvalues).
    """

    element: Element
    eigenvalues: tuple[float, ...]
    projections: tuple[Element, ...]

    @property
    def lower(self) -> float:
        return self.eigenvalues[0]

    @property
    def upper(self) -> float:
        return self.eigenvalues[-1]

    def step(self, lam: float) -> Element:
        acc = self.element.space.zero_element()
        for val, proj in zip(self.eigenvalues, self.projections):
            if val <= lam:
                acc = acc + proj
            else:
                break
        return acc

    def reconstruct(self) -> Element:
        acc = self.element.space.zero_element()
        for val, proj in zip(self.eigenvalues, self.projections):
            acc = acc + float(val) * proj
        return acc


def spectral_resolution(a: Element, verify: bool = True) -> SpectralResolution:
    """Cluster the spectrum of a and build its projection family.

    verify re-checks the family (projections, pairwise orthogonality,
    sum one, reconstruction) and cross-checks the step family against
    the defining formula 1 - carrier((a - lam)^+) at every eigenvalue
    and midpoint. Disable it inside tight loops.
    """
    space = a.space
    if _is_matrix(a):
        w, u = _eigh(a)
        scale = max(1.0, float(np.max(np.abs(w))))
        tol = RANK_RTOL * scale
        clusters: list[list[int]] = [[0]]
        for i in range(1, len(w)):
            if w[i] - w[clusters[-1][-1]] <= tol:
                clusters[-1].append(i)
            else:
                clusters.append([i])
        values = tuple(float(np.mean(w[c])) for c in clusters)
        projections = tuple(
            Element(space, u[:, c] @ u[:, c].T) for c in clusters
        )
    else:
        vals = sorted(set(float(v) for v in a.payload))
        values = tuple(vals)
        projections = tuple(
            Element(space, (a.payload == v).astype(float)) for v in vals
        )

    res = SpectralResolution(a, values, projections)
    if verify:
        _verify_resolution(res)
    return res


def _verify_resolution(res: SpectralResolution, tol: float = 1e-9) -> None:
    a = res.element
    scale = max(1.0, a.norm())
    for i, p in enumerate(res.projections):
        pp = p.space.product(p, p)
        if np.max(np.abs(pp - p.payload)) > tol * scale:
            raise AssertionError(f"resolution member {i} is not a projection")
        for q in res.projections[i + 1 :]:
            if np.max(np.abs(p.space.product(p, q))) > tol * scale:
                raise AssertionError("resolution projections are not orthogonal")
    total = res.projections[0]
    for p in res.projections[1:]:
        total = total + p
    if np.max(np.abs(total.payload - a.space.unit().payload)) > tol * scale:
        raise AssertionError("resolution does not sum to the identity")
    recon = res.reconstruct()
    if np.max(np.abs(recon.payload - a.payload)) > tol * scale:
        raise AssertionError("resolution does not reconstruct the element")
    # cross-check the step family against the carrier formula
    points = list(res.eigenvalues)
    points += [
        (x + y) / 2.0 for x, y in zip(res.eigenvalues, res.eigenvalues[1:])
    ]
    for lam in points:
        direct = res.step(lam)
        formula = step_projection(a, lam)
        if np.max(np.abs(direct.payload - formula.payload)) > tol * scale:
            raise AssertionError(f"step family disagrees with carrier formula at {lam}")


def step_projection(a: Element, lam: float) -> Element:
    """The defining formula for the resolution: 1 - carrier((a - lam)^+)."""
    shifted = a - float(lam) * a.space.unit()
    _, plus, _ = decompose(shifted)
    return a.space.unit() - carrier(plus)


def stieltjes_reconstruct(a: Element, mesh: float, partition=None) -> Element:
    """Riemann-Stieltjes sum of lam d(step) with right-endpoint tags.

    With the default partition (steps of at most mesh from just below
    the least eigenvalue up to the greatest), the result is within mesh
    of a in the order-unit norm. Passing partition points that hit the
    eigenvalues exactly reproduces a to working precision.
    """
    if not mesh > 0.0:
        raise ValueError("mesh must be positive")
    res = spectral_resolution(a, verify=False)
    lo, hi = res.lower, res.upper
    if partition is None:
        steps = max(1, math.ceil((hi - (lo - mesh)) / mesh))
        partition = list(np.linspace(lo - mesh, hi, steps + 1))
    else:
        partition = [float(t) for t in partition]
        if any(y <= x for x, y in zip(partition, partition[1:])):
            raise ValueError("partition must be strictly increasing")
        if partition[0] >= lo or partition[-1] < hi:
            raise ValueError("partition must cover the spectrum")

    acc = a.space.zero_element()
    for val, proj in zip(res.eigenvalues, res.projections):
        # right endpoint of the cell (t_{j-1}, t_j] containing val
        j = bisect.bisect_left(partition, val)
        tag = partition[min(j, len(partition) - 1)]
        acc = acc + float(tag) * proj
    return acc


def spectrum(a: Element) -> tuple[float, ...]:
    return spectral_resolution(a, verify=False).eigenvalues


def is_invertible(a: Element) -> bool:
    if _is_matrix(a):
        w = np.linalg.eigvalsh(a.payload)
        scale = max(1.0, float(np.max(np.abs(w))))
        return bool(np.min(np.abs(w)) > RANK_RTOL * scale)
    return bool(np.all(a.payload != 0.0))


def inverse(a: Element) -> Element:
    if not is_invertible(a):
        raise ValueError("not invertible")
    if _is_matrix(a):
        w, u = _eigh(a)
        return Element(a.space, (u / w) @ u.T)
    return Element(a.space, 1.0 / a.payload)


def is_positive_element(a: Element) -> bool:
    return a.space.contains_positive(a)


def is_projection(a: Element) -> bool:
    if _is_matrix(a):
        res = a.space.product(a, a) - a.payload
        return bool(np.max(np.abs(res)) <= PROJ_TOL * max(1.0, a.norm()))
    return bool(np.all((a.payload == 0.0) | (a.payload == 1.0)))


def is_effect(a: Element) -> bool:
    return in_unit_interval(a)


def simple_form(space, coefficients, projections) -> Element:
    """Assemble sum(lam_i p_i) from a strictly increasing coefficient list
    and a resolution of the identity into commuting projections."""
    coefficients = [float(c) for c in coefficients]
    if len(coefficients) != len(projections) or not projections:
        raise ValueError("need one coefficient per projection")
    if any(y <= x for x, y in zip(coefficients, coefficients[1:])):
        raise ValueError("coefficients must be strictly increasing")
    for p in projections:
        if p.space is not space:
            raise ValueError("projection from a different space")
        if not is_projection(p):
            raise ValueError("not a projection")
    for i, p in enumerate(projections):
        for q in projections[i + 1 :]:
            if not space.commutes(p, q):
                raise ValueError("projections do not commute")
    total = projections[0]
    for p in projections[1:]:
        total = total + p
    if np.max(np.abs(total.payload - space.unit().payload)) > PROJ_TOL:
        raise ValueError("projections do not sum to the identity")
    acc = space.zero_element()
    for c, p in zip(coefficients, projections):
        acc = acc + c * p
    return acc


def apply_polynomial(a: Element, f) -> Element:
    """Functional calculus on a simple element: f applied to the spectrum."""
    res = spectral_resolution(a, verify=False)
    acc = a.space.zero_element()
    for val, proj in zip(res.eigenvalues, res.projections):
        acc = acc + float(f(val)) * proj
    return acc


# ---------------------------------------------------------------------------
# Commutants


def _sym_basis_arrays(n: int) -> list[np.ndarray]:
    out = []
    for i in range(n):
        m = np.zeros((n, n))
        m[i, i] = 1.0
        out.append(m)
    for i in range(n):
        for j in range(i + 1, n):
            m = np.zeros((n, n))
            m[i, j] = m[j, i] = 1.0
            out.append(m)
    return out


def commutant(space, generators) -> list[Element]:
    """Basis of {x in A : xg = gx for every generator g}.

    Solved as a null-space problem over the coordinates of symmetric
    matrices; the function instance is commutative, so its commutant is
    always the whole algebra.
    """
    generators = list(generators)
    if isinstance(space, FunctionSpace):
        return space.basis()
    n = space.n
    basis = _sym_basis_arrays(n)
    if not generators:
        return [Element(space, m) for m in basis]
    for g in generators:
        if g.space is not space:
            raise ValueError("generator from a different space")
    # one column per coordinate of Sym(n), one block row per generator
    cols = []
    for s in basis:
        col = np.concatenate([(s @ g.payload - g.payload @ s).ravel() for g in generators])
        cols.append(col)
    c = np.stack(cols, axis=1)
    u, sv, vt = np.linalg.svd(c)
    tol = RANK_RTOL * max(1.0, float(sv[0]) if sv.size else 0.0)
    rank = int(np.sum(sv > tol))
    null = vt[rank:]
    out = []
    for coeffs in null:
        m = np.zeros((n, n))
        for w, s in zip(coeffs, basis):
            m += w * s
        out.append(Element(space, m))
    return out


def double_commutant(space, generators) -> list[Element]:
    return commutant(space, commutant(space, generators))


def center(space) -> list[Element]:
    """Elements commuting with the whole algebra."""
    return commutant(space, space.basis() if isinstance(space, SymmetricMatrixSpace) else [])


def in_span(basis: list[Element], a: Element, tol: float = 1e-8) -> bool:
    """Least-squares membership of a in the linear span of basis."""
    if not basis:
        return bool(np.max(np.abs(a.payload)) <= tol)
    mat = np.stack([b.payload.ravel() for b in basis], axis=1)
    target = a.payload.ravel()
    coeffs, *_ = np.linalg.lstsq(mat, target, rcond=None)
    residual = mat @ coeffs - target
    return bool(np.max(np.abs(residual)) <= tol * max(1.0, a.norm()))


# ---------------------------------------------------------------------------
# Projection lattice


def _require_projection(p: Element) -> None:
    if not is_projection(p):
        raise ValueError("not a projection")


def proj_meet(p: Element, q: Element) -> Element:
    """Projection onto range(p) intersect range(q).

    Computed from the null space of the stacked [1-p; 1-q], so no
    commutativity is assumed. Exact pointwise minimum on the function
    instance.
    """
    _same_space(p, q)
    _require_projection(p)
    _require_projection(q)
    space = p.space
    if isinstance(space, FunctionSpace):
        return Element(space, np.minimum(p.payload, q.payload))
    n = space.n
    eye = np.eye(n)
    stacked = np.vstack([eye - p.payload, eye - q.payload])
    u, sv, vt = np.linalg.svd(stacked)
    tol = RANK_RTOL * max(1.0, float(sv[0]) if sv.size else 0.0)
    rank = int(np.sum(sv > tol))
    null = vt[rank:]  # orthonormal rows spanning the intersection
    return Element(space, null.T @ null)


def proj_join(p: Element, q: Element) -> Element:
    space = p.space
    one = space.unit()
    return one - proj_meet(one - p, one - q)


# ---------------------------------------------------------------------------
# Morphisms


@dataclass(frozen=True)
class SynapticMorphismReport:
    passed: bool
    violation: str | None = None


def check_synaptic_morphism(phi, dom, cod, samples, tol: float = 1e-9) -> SynapticMorphismReport:
    """Check the defining conditions of a synaptic morphism on samples.

    phi maps Elements of dom to Elements of cod. Conditions, in order:
    unit preservation, squares (phi(a^2) = phi(a)^2 which with linearity
    gives Jordan multiplicativity), commutation preservation on sample
    pairs that commute, and carrier preservation phi(carrier a) =
    carrier(phi a).
    """
    one_img = phi(dom.unit())
    if np.max(np.abs(one_img.payload - cod.unit().payload)) > tol:
        return SynapticMorphismReport(False, "unit is not preserved")
    samples = list(samples)
    for i, a in enumerate(samples):
        img = phi(a)
        lhs = phi(jordan(a, a))
        rhs = jordan(img, img)
        if np.max(np.abs(lhs.payload - rhs.payload)) > tol * max(1.0, a.norm() ** 2):
            return SynapticMorphismReport(False, f"square of sample {i} is not preserved")
    for i, a in enumerate(samples):
        for j, b in enumerate(samples):
            if j <= i:
                continue
            if dom.commutes(a, b) and not cod.commutes(phi(a), phi(b)):
                return SynapticMorphismReport(
                    False, f"commuting samples {i}, {j} have non-commuting images"
                )
    for i, a in enumerate(samples):
        lhs = phi(carrier(a))
        rhs = carrier(phi(a))
        if np.max(np.abs(lhs.payload - rhs.payload)) > tol:
            return SynapticMorphismReport(False, f"carrier of sample {i} is not preserved")
    return SynapticMorphismReport(True, None)


# ---------------------------------------------------------------------------
# Extreme points and monotone limits


def proper_effect_decomposition(e: Element, gap: float = 1e-6) -> tuple[Element, Element] | None:
    """Split an effect strictly between two others when possible.

    Returns (x, y) with e = (x + y) / 2, x != y, both effects, when e
    has a spectral value bounded away from {0, 1} by gap; None
    otherwise. Projections admit no such split, which is exactly the
    statement that they are the extreme points of the unit interval.
    """
    if not in_unit_interval(e):
        raise ValueError("not an effect")
    if _is_matrix(e):
        w, u = _eigh(e)
        for idx, t in enumerate(w):
            if gap < t < 1.0 - gap:
                vec = u[:, idx : idx + 1]
                d = Element(e.space, vec @ vec.T)
                mu = min(t, 1.0 - t)
                return e + mu * d, e - mu * d
        return None
    for idx, t in enumerate(e.payload):
        if gap < t < 1.0 - gap:
            d = Element(e.space, (np.arange(e.space.dimension) == idx).astype(float))
            mu = min(t, 1.0 - t)
            return e + mu * d, e - mu * d
    return None


def supremum_of_ascending_chain(chain: list[Element], tol: float = 1e-9) -> Element:
    """Supremum of an eventually constant ascending commuting chain.

    Finite-dimensional stand-in for monotone completeness: the chain
    must already have stabilized (last two members equal within tol).
    """
    chain = list(chain)
    if not chain:
        raise ValueError("chain must be nonempty")
    for x, y in zip(chain, chain[1:]):
        if not x.space.contains_positive(y - x):
            raise ValueError("chain is not ascending")
        if not x.space.commutes(x, y):
            raise ValueError("chain members do not commute")
    if len(chain) >= 2:
        if np.max(np.abs(chain[-1].payload - chain[-2].payload)) > tol:
            raise ValueError("chain has not stabilized")
    return chain[-1]
