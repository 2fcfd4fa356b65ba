"""Degeneracy instants, Morse-index jumps and bifurcation classification
for product families ``g0 + lambda * g1`` of constant scalar curvature
metrics, computed exactly from the factors' Laplace-Beltrami spectra."""

from .bifurcation import (
    Classification,
    Contributor,
    DegeneracyInstant,
    RigidityInterval,
    classify_instant,
    enumerate_instants,
    morse_index,
    rigidity_intervals,
)
from .errors import (
    DegeneratePairError,
    DimensionError,
    InsufficientTruncationError,
    MissingVolumeError,
    SpectrumParseError,
    SpectrumValidationError,
    YamabifError,
)
from .family import BranchClass, BranchKind, ProductFamily, branch_classify, kappa_lambda, make_family, sigma_eval
from .oracle import brute_morse_index, grid_scan_instants
from .report import AnalysisReport, build_report
from .spectra import (
    FactorSpectrum,
    SpectrumEntry,
    harmonic_dim,
    load_factor,
    projective_spectrum,
    save_factor,
    sphere_spectrum,
)
from .sphere_case import (
    ObstructionResult,
    closed_form_instant,
    closed_form_rigidity,
    crosscheck_sphere,
    yamabe_obstruction,
)

__version__ = "0.1.0"
