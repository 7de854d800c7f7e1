"""Critical temperatures of a trapped, weakly interacting condensing gas.

The package splits into:

* :mod:`bosecrit.units` -- constants, parameter validation, unit system;
* :mod:`bosecrit.specialfn` -- Bose-Einstein functions, zeta values and the
  weighted double sum;
* :mod:`bosecrit.field` -- one-loop thermal potential and its symmetry
  breaking;
* :mod:`bosecrit.semiclassical` -- self-consistent gas thermodynamics,
  condensation temperature and shift;
* :mod:`bosecrit.scale` -- field-density scale estimate from the healing
  length;
* :mod:`bosecrit.cli` -- the ``bosecrit`` command-line tool.
"""

from .errors import (BosecritError, ConvergenceError, DomainError,
                     IdealGasDivergence, InconsistentParameters,
                     NegativeRadicand, NonPhysical, ParseError, PoleError,
                     QuadratureError, ValidationError)
from .field import (FieldPotentialInput, SymmetryReport, minima,
                    potential_value, symmetry_breaking_temperature,
                    thermal_term_identity)
from .scale import (RB87_PAPER, HealingInput, KappaResult,
                    healing_length_from_mu, kappa_from_healing, kappa_sweep)
from .scenario import BUILTIN_SCENARIOS, Scenario, load_scenario, parse_scenario
from .semiclassical import (DensityProfile, TemperatureReport, ThermalState,
                            TsbTcRelation, build_temperature_report,
                            chemical_potential_from_number, condensation_shift,
                            critical_chemical_potential, discrepancy_report,
                            energy_spectrum, first_order_density,
                            ideal_condensation_temperature, local_fugacity,
                            numeric_condensation_temperature,
                            self_consistent_density, theta_constant,
                            theta_from_double_sum, theta_info,
                            thermal_prefactor, total_number, tsb_tc_relation)
from .specialfn import (DEFAULT_ACCURACY, SeriesAccuracy, bose_function,
                        bose_function_quadrature, check_derivative_identity,
                        g_double_sum, g_double_sum_info,
                        g_double_sum_truncated, zeta)
from .units import SI, GasParameters, PhysicalConstants, harmonic_length, validate

__version__ = "0.1.0"
