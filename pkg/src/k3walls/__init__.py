"""Exact wall-and-chamber numerics for degree-k elliptic K3 surfaces.

Lattice pairings, central-ray walls, destabilization-type strata and their
dimensions, plus two independent combinatorial oracles (displacement tableaux
and elliptic-chain ramification data) for the pencil-adjusted Brill-Noether
numbers.
"""

from .errors import DomainError, OracleViolation, SearchBudgetExceeded
from .lattice import (
    MukaiVector,
    PicClass,
    SurfaceParams,
    chi,
    discriminant,
    gram_signature,
    intersection,
    line_bundle_vector,
    mukai_pairing,
    square,
)
from .hbn import (
    DegeneracyDims,
    EllDecomposition,
    SplittingType,
    balanced_correspondence,
    degeneracy_dims,
    ell_decompose,
    pencil_power_h0,
    rho,
    rho_k,
    splitting_nonneg_part,
)
from .stability import (
    INFINITE_SLOPE,
    StabilityParams,
    StabilityPoint,
    WallPoint,
    central_charge,
    default_epsilon,
    epsilon_threshold,
    lemma_key_scan,
    nowall_threshold,
    projection,
    slope,
    spherical_scan,
    wall_on_axis,
)
from .strata import (
    DegreeCase,
    NonemptinessVerdict,
    StabilityType,
    TypeEnumeration,
    Verdict,
    balanced_nonempty,
    ell_value,
    enumerate_types,
    residual_vector,
    stratum_dimension,
    validate_type,
    wall_sequence,
)
from .tableaux import Tableau, is_valid, max_omitted, oracle_check
from .chains import (
    ChainComponent,
    ChainSeries,
    RamificationSequence,
    adjusted_rho,
    build_chain,
    complement,
    verify_chain,
)

__version__ = "0.1.0"
