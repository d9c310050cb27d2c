"""notseg: narrowest-over-threshold change-point detection.

Detects multiple generalised change-points (mean jumps, kinks, slope and
variance shifts) in univariate series by scanning randomly drawn
subsamples with scenario-specific contrast statistics and always
splitting at the narrowest subsample whose contrast clears the current
threshold.  The whole threshold-indexed family of solutions is computable
at once, and an information criterion picks the final model from it.
"""

from .bench import run_benchmark, run_replicate
from .contrast import (
    BasisVectors,
    ContrastProfile,
    basis_vectors,
    contrast_ht,
    contrast_mean_var,
    contrast_pcws_const,
    contrast_pcws_lin,
    contrast_pcws_lin_cont,
    contrast_pcws_quad,
    gamma_vector,
    one_vector,
    phi_vector,
    profile,
    psi_vector,
)
from .core import (
    ChangePointSet,
    Interval,
    Scenario,
    TimeSeries,
    admissible_b_range,
    break_ties_min,
)
from .detector import DetectionConfig, ProfileCache, not_detect
from .fitting import SegmentFit, fit_segments, mad_sigma
from .metrics import RunReport, hausdorff_scaled, mse
from .path import SegTreeNode, SolutionPath, solution_path
from .sampler import IntervalEnsemble, deterministic_grid, draw_ensemble
from .select import (
    ScoredModel,
    detect_auto,
    n_params_for,
    select_on_path,
    select_scenario,
    ssic_score,
)
from .simulate import NoiseSpec, SignalSpec, gen_noise, gen_signal

__version__ = "0.1.0"

__all__ = [
    "BasisVectors",
    "ChangePointSet",
    "ContrastProfile",
    "DetectionConfig",
    "Interval",
    "IntervalEnsemble",
    "NoiseSpec",
    "ProfileCache",
    "RunReport",
    "Scenario",
    "ScoredModel",
    "SegTreeNode",
    "SegmentFit",
    "SignalSpec",
    "SolutionPath",
    "TimeSeries",
    "admissible_b_range",
    "basis_vectors",
    "break_ties_min",
    "contrast_ht",
    "contrast_mean_var",
    "contrast_pcws_const",
    "contrast_pcws_lin",
    "contrast_pcws_lin_cont",
    "contrast_pcws_quad",
    "detect_auto",
    "deterministic_grid",
    "draw_ensemble",
    "fit_segments",
    "gamma_vector",
    "gen_noise",
    "gen_signal",
    "hausdorff_scaled",
    "mad_sigma",
    "mse",
    "n_params_for",
    "not_detect",
    "one_vector",
    "phi_vector",
    "profile",
    "psi_vector",
    "run_benchmark",
    "run_replicate",
    "select_on_path",
    "select_scenario",
    "solution_path",
    "ssic_score",
]
