"""Desk-scale laboratory for the quantum-structures hierarchy.

Finite posets and orthomodular lattices, effect algebras and
MV-algebras, order-unit normed spaces, synaptic algebras over real
symmetric matrices and finite function algebras, their state spaces,
and the Stone/functional representation of the commutative case. Every
constructive definition is executable and every structural claim is
checked by exhaustive scan or an independent numerical oracle.
"""

from .posets import (
    BoundedOrtholattice,
    Classification,
    FinitePoset,
    StructureError,
    classify,
    is_oml,
    join,
    meet,
    subset_inf_sup,
)
from .effect_algebras import (
    AxiomViolation,
    EffectAlgebraError,
    FiniteEffectAlgebra,
    FiniteMVAlgebra,
    check_ea_axioms,
    check_morphism,
    check_mv_axioms,
    ea_to_mv,
    induced_order,
    is_mv_effect_algebra,
    is_sub_effect_algebra,
    mv_to_ea,
    oml_to_ea,
    orthosum_family,
)
from .exact import (
    AffineSet,
    InfeasibilityCertificate,
    VertexEnumeration,
    affine_solution_set,
    enumerate_box_vertices,
)
from .order_unit import (
    Element,
    FunctionSpace,
    SymmetricMatrixSpace,
    extend_effect_morphism,
    in_unit_interval,
    order_unit_norm,
    positive_decomposition,
)
from .synaptic import (
    SpectralResolution,
    carrier,
    commutant,
    decompose,
    double_commutant,
    inverse,
    is_effect,
    is_invertible,
    is_projection,
    jordan,
    proj_join,
    proj_meet,
    quadratic,
    simple_form,
    spectral_resolution,
    spectrum,
    sqrt,
    step_projection,
    stieltjes_reconstruct,
)
from .states import (
    DensityMatrixState,
    EffectAlgebraState,
    ProbabilityVectorState,
    StatePolytope,
    element_duality_report,
    extremal_commutative_characterization,
    extremal_states,
    is_state,
    rho_omega_bijection,
    state_norm_report,
    state_polytope,
)
from .stone import (
    FunctionalRepresentation,
    StoneSpace,
    functional_representation,
    rickart_completeness_report,
    stone_map,
    stone_space,
    transport_state,
)

__all__ = [
    "BoundedOrtholattice",
    "Classification",
    "FinitePoset",
    "StructureError",
    "classify",
    "is_oml",
    "join",
    "meet",
    "subset_inf_sup",
    "AxiomViolation",
    "EffectAlgebraError",
    "FiniteEffectAlgebra",
    "FiniteMVAlgebra",
    "check_ea_axioms",
    "check_morphism",
    "check_mv_axioms",
    "ea_to_mv",
    "induced_order",
    "is_mv_effect_algebra",
    "is_sub_effect_algebra",
    "mv_to_ea",
    "oml_to_ea",
    "orthosum_family",
    "AffineSet",
    "InfeasibilityCertificate",
    "VertexEnumeration",
    "affine_solution_set",
    "enumerate_box_vertices",
    "Element",
    "FunctionSpace",
    "SymmetricMatrixSpace",
    "extend_effect_morphism",
    "in_unit_interval",
    "order_unit_norm",
    "positive_decomposition",
    "SpectralResolution",
    "carrier",
    "commutant",
    "decompose",
    "double_commutant",
    "inverse",
    "is_effect",
    "is_invertible",
    "is_projection",
    "jordan",
    "proj_join",
    "proj_meet",
    "quadratic",
    "simple_form",
    "spectral_resolution",
    "spectrum",
    "sqrt",
    "step_projection",
    "stieltjes_reconstruct",
    "DensityMatrixState",
    "EffectAlgebraState",
    "ProbabilityVectorState",
    "StatePolytope",
    "element_duality_report",
    "extremal_commutative_characterization",
    "extremal_states",
    "is_state",
    "rho_omega_bijection",
    "state_norm_report",
    "state_polytope",
    "FunctionalRepresentation",
    "StoneSpace",
    "functional_representation",
    "rickart_completeness_report",
    "stone_map",
    "stone_space",
    "transport_state",
]

__version__ = "0.1.0"
