"""Exact finite computations for exchangeable random graphs and graph limits."""

from .characters import (
    SymmetricFunctional,
    check_character,
    check_dissociated,
    gexp_mass,
    reflection_matrix,
    reflection_positivity,
    rho_from_graph,
)
from .definetti import (
    DeFinettiReport,
    definetti_report,
    induced_marginal,
    smooth_distribution,
)
from .errors import CapacityError, DegenerateFamilyError, DomainError, GraphLimitsError
from .graphons import (
    StepGraphon,
    graphon_character,
    mc_estimate_character,
    sample_w_random,
    step_graphon_from_graph,
)
from .graphs import (
    LabeledGraph,
    UnlabeledGraph,
    canonical_form,
    disjoint_union,
    edge_subset_contains,
    enumerate_labeled,
    induced_subgraph,
    isomorphism_classes,
    relabel,
    strip_isolated,
)
from .homomorphisms import (
    DensityReport,
    densities,
    hom_count,
    inj_count,
    sample_dist_hom,
    sample_dist_inj,
    sampling_gap,
)
from .linalg import is_psd, jacobi_eigenvalues
from .mobius import (
    GraphDistribution,
    MobiusParams,
    is_exchangeable,
    is_valid_mobius,
    p_from_z,
    z_from_p,
)

__version__ = "0.1.0"
