"""Bures-Wasserstein geometry on positive-definite and density matrices."""
from ._config import Tolerances, get_tolerances, set_tolerances, tolerances
from .bw import (
    GeodesicPN,
    bw_distance_pn,
    bw_metric,
    bw_norm,
    exp_pn,
    geodesic_pn,
    horizontal_lift,
    horizontal_project,
    log_pn,
    submersion_differential,
    submersion_pi,
    vertical_part,
)
from .classical import (
    e_representation,
    fisher_distance,
    fisher_metric,
    hellinger_distance,
    sqrt_map_isometry_check,
)
from .density import GeodesicDN, bw_distance_dn, geodesic_dn
from .errors import BWGeomError, DomainError, ValidationError
from .matfun import (
    EigenDecomposition,
    dlog_frechet,
    hermitian_eig,
    lyapunov_solve,
    matrix_exp,
    matrix_log,
    matrix_power,
    matrix_sqrt,
    unitary_polar_factor,
)
from .qmetrics import (
    bogoliubov_e_to_m,
    bogoliubov_m_to_e,
    bogoliubov_metric,
    fubini_study_distance,
    horizontal_metric_gh,
    lyapunov_horizontal_residual,
    pure_state_density,
    sld_e_rep,
    sld_m_rep,
    sld_metric,
    square_map_isometry_residual,
    wigner_yanase_isometry_residual,
    wigner_yanase_metric,
)

__version__ = "0.1.0"
