"""Certificates and convergence checks computed from runs."""
from .energy import EnergyCheck, EnergyTrace, check_energy_decrease, energy_trace, level_set_violations
from .kkt import kkt_residual
from .merit import MeritEstimate, merit_estimate, reference_values, sigma_k, u0_estimate
from .pareto import pareto_distance, problem_pareto_distance
from .rates import RateReport, check_rate_bound

__all__ = [
    "EnergyCheck",
    "EnergyTrace",
    "MeritEstimate",
    "RateReport",
    "check_energy_decrease",
    "check_rate_bound",
    "energy_trace",
    "kkt_residual",
    "level_set_violations",
    "merit_estimate",
    "pareto_distance",
    "problem_pareto_distance",
    "reference_values",
    "sigma_k",
    "u0_estimate",
]
