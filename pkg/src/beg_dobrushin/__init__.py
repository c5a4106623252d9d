"""Dobrushin uniqueness region of the Blume-Emery-Griffiths model."""

from .bounds import (
    ExponentPair,
    beta_critical,
    exponents,
    lemma1_bound,
    lemma2_bound,
    lemma3_bound,
    psi,
    psi_bound,
    r_of_t,
    theorem1_bound,
    theta,
    theta_sum_bound,
)
from .errors import CapacityError, DegenerateGroundStateError, DomainError
from .model import (
    MajorRegion,
    ModelParams,
    NeighborConfig,
    RegionLabel,
    SubRegion,
    classify_region,
    ground_pairs,
    pair_energy,
)
from .region import (
    UniquenessCurve,
    blume_capel_xc,
    curve_x,
    in_dobrushin_region,
    solve_t_d,
)
from .specification import (
    DobrushinReport,
    SpinDistribution,
    conditional_distribution,
    exact_max_tv,
    finite_volume_marginal,
    total_variation,
)
from .verify import (
    Check,
    SweepReport,
    SweepSpec,
    default_certification_spec,
    find_failure_beta,
    run_sweep,
)

__all__ = [
    "CapacityError",
    "Check",
    "DegenerateGroundStateError",
    "DobrushinReport",
    "DomainError",
    "ExponentPair",
    "MajorRegion",
    "ModelParams",
    "NeighborConfig",
    "RegionLabel",
    "SpinDistribution",
    "SubRegion",
    "SweepReport",
    "SweepSpec",
    "UniquenessCurve",
    "beta_critical",
    "blume_capel_xc",
    "classify_region",
    "conditional_distribution",
    "curve_x",
    "default_certification_spec",
    "exact_max_tv",
    "exponents",
    "find_failure_beta",
    "finite_volume_marginal",
    "ground_pairs",
    "in_dobrushin_region",
    "lemma1_bound",
    "lemma2_bound",
    "lemma3_bound",
    "pair_energy",
    "psi",
    "psi_bound",
    "r_of_t",
    "run_sweep",
    "solve_t_d",
    "theorem1_bound",
    "theta",
    "theta_sum_bound",
    "total_variation",
]
