"""Vacuum photon-gas model of the two-plate Casimir pressure.

The vacuum between two parallel conducting plates is modeled as a gas of
virtual photons whose momentum occupancy f is a pluggable distribution.
The net pressure on the plates reduces to a dimensionless sum-minus-integral
bracket scaled by pi^2 hbar c / (4 d^4); this package evaluates the bracket
by direct summation, by a boundary-derivative expansion and by Monte Carlo,
classifies candidate distributions against the cutoff criteria, and converts
a thermal-looking occupancy edge into an implied temperature.
"""

from .constants import (
    PhysicalConstants,
    PlateGeometry,
    cutoff_frequency,
    make_constants,
)
from .distributions import (
    ComplianceReport,
    DistributionSpec,
    Family,
    check_cutoff_compliance,
    eval_f,
    eval_f_second_derivative,
)
from .errors import (
    ConvergenceError,
    DegenerateEstimateError,
    DifferentiationError,
    DomainError,
    ModelRegimeWarning,
    SingularityError,
    UnsupportedFamilyError,
    VacgasError,
)
from .montecarlo import (
    McConfig,
    McEstimate,
    bracket_monte_carlo,
    estimate_p_in,
    photon_flux_density,
    pressure_inside_from_mc,
)
from .pressure import (
    PressureResult,
    SweepResult,
    ideal_casimir_pressure,
    lamoreaux_sweep,
    pressure_difference,
)
from .quadrature import QuadResult, integrate
from .reduction import (
    ReducedIntegrand,
    inner_integral,
    reduce_distribution,
    reduced_big_f,
)
from .summation import (
    BernoulliTable,
    BracketResult,
    Method,
    bernoulli,
    bracket_direct,
    bracket_euler_maclaurin,
)
from .temperature import (
    Convention,
    TemperatureEstimate,
    affinity_from_temperature,
    temperature_from_affinity,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "PhysicalConstants",
    "PlateGeometry",
    "cutoff_frequency",
    "make_constants",
    "ComplianceReport",
    "DistributionSpec",
    "Family",
    "check_cutoff_compliance",
    "eval_f",
    "eval_f_second_derivative",
    "ConvergenceError",
    "DegenerateEstimateError",
    "DifferentiationError",
    "DomainError",
    "ModelRegimeWarning",
    "SingularityError",
    "UnsupportedFamilyError",
    "VacgasError",
    "McConfig",
    "McEstimate",
    "bracket_monte_carlo",
    "estimate_p_in",
    "photon_flux_density",
    "pressure_inside_from_mc",
    "PressureResult",
    "SweepResult",
    "ideal_casimir_pressure",
    "lamoreaux_sweep",
    "pressure_difference",
    "QuadResult",
    "integrate",
    "ReducedIntegrand",
    "inner_integral",
    "reduce_distribution",
    "reduced_big_f",
    "BernoulliTable",
    "BracketResult",
    "Method",
    "bernoulli",
    "bracket_direct",
    "bracket_euler_maclaurin",
    "Convention",
    "TemperatureEstimate",
    "affinity_from_temperature",
    "temperature_from_affinity",
]
