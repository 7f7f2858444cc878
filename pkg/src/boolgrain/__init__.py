"""boolgrain: germ-grain (Boolean model) simulation with heavy-tailed
homothetic grains, volume-fraction estimators on windows / excursion levels /
hyperplane sections, and statistical verification of their stable and
Gaussian scaling limits at desk scale."""

from .charlier import CharlierBasis, charlier_coeff, charlier_poly, orthogonality_check
from .estimators import (
    EstimateWithError,
    HyperplaneSpec,
    RescaleMode,
    TestFunction,
    alpha0_of,
    covariance_decay_check,
    covariance_rX,
    cXi,
    ell_direction,
    hyperplane_fraction,
    model_mu,
    rescale_stat,
    sigma2,
    volume_fraction,
    weighted_functional,
)
from .field import (
    Realization,
    RngStream,
    Window,
    raster_counts,
    raster_field,
    simulate_realization,
    write_pgm,
)
from .grains import (
    GrainModel,
    GrainSample,
    HeavyTailLaw,
    grain_contains,
    grain_slice_measure,
    grain_tail_volume,
    lilypond_grow,
    sample_grain,
    sample_R,
)
from .limitlaw import (
    GaussianLaw,
    LimitSpec,
    StableLaw,
    cf_distance,
    hill_estimator,
    ks_distance,
    levy_cf,
    limit_law_from_model,
    normality_check,
    stability_index_fit,
    stable_cdf,
    stable_sample,
)

__version__ = "0.1.0"
