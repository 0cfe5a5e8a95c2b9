"""
Pydantic models for experiment configuration and summaries.

This module defines the data models used for validating and parsing
experiment configuration files. Pydantic provides the validation,
type checking and JSON serialization; the same models generate the
JSON schema printed by ``accmo validate --schema``.
"""
import math
from typing import Annotated, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .constants import SUPPORTED_METHODS

Method = Literal["SD", "Inertial", "AccG", "AccGNoQ", "AccGSwitch", "NesterovRef"]


class BacktrackingConfig(BaseModel):
    """
    Backtracking parameters.

    Attributes:
        s0: Initial step size
        sigma: Reduction factor in (0, 1)
    """
    model_config = ConfigDict(extra="forbid")

    s0: float = Field(..., gt=0, description="Initial step size")
    sigma: float = Field(0.5, gt=0, lt=1, description="Reduction factor")


class SolverConfig(BaseModel):
    """
    Configuration of one iterative method.

    ``step_size`` is the constant step s; with backtracking it is ignored in
    favour of ``backtracking.s0``. ``alpha`` and ``h`` belong to the inertial
    method, ``switch_at`` to the switching accelerated method and
    ``nesterov_alpha`` to the single-objective reference scheme.
    """
    model_config = ConfigDict(extra="forbid")

    method: Method
    name: Optional[str] = Field(None, description="Label used in traces and summaries")
    step_size: float = Field(5e-3, gt=0, description="Step size s")
    alpha: Optional[float] = Field(None, gt=0, description="Inertial friction")
    h: Optional[float] = Field(None, gt=0, description="Inertial discretization step")
    max_iters: int = Field(1000, ge=1, description="k_max")
    tol: float = Field(1e-4, ge=0, description="Stop when ||f(x^k) - f(x^{k-1})||_inf < tol")
    backtracking: Optional[BacktrackingConfig] = None
    switch_at: Optional[int] = Field(None, ge=1, description="AccGSwitch: first iteration using the QP step")
    nesterov_alpha: float = Field(3.0, ge=3, description="NesterovRef momentum parameter")

    @model_validator(mode="after")
    def check_method_parameters(self) -> "SolverConfig":
        if self.method == "Inertial" and (self.alpha is None or self.h is None):
            raise ValueError("Inertial method requires both 'alpha' and 'h'")
        if self.method == "AccGSwitch" and self.switch_at is None:
            raise ValueError("AccGSwitch method requires 'switch_at'")
        return self

    @property
    def label(self) -> str:
        return self.name or self.method

    @property
    def initial_step(self) -> float:
        if self.backtracking is not None:
            return self.backtracking.s0
        return self.step_size


class LogSumExpSpec(BaseModel):
    """
    Convex log-sum-exp problem with random data matrices.

    Attributes:
        n: Dimension
        m: Number of objectives
        p: Rows per data matrix
        seed: Generator seed
        box_low / box_high: Entry sampling interval
    """
    model_config = ConfigDict(extra="forbid")

    kind: Literal["logsumexp"] = "logsumexp"
    n: int = Field(20, ge=1)
    m: int = Field(3, ge=1)
    p: int = Field(50, ge=1)
    seed: int = Field(0, ge=0, lt=2**64)
    box_low: float = -1.0
    box_high: float = 1.0

    @model_validator(mode="after")
    def check_box(self) -> "LogSumExpSpec":
        if not self.box_low < self.box_high:
            raise ValueError("box_low must be smaller than box_high")
        return self

    @property
    def dimension(self) -> int:
        return self.n


class WittingSpec(BaseModel):
    """Nonconvex biobjective problem in two variables."""
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    kind: Literal["witting"] = "witting"
    lam: float = Field(0.6, ge=0, alias="lambda")

    @property
    def dimension(self) -> int:
        return 2


class QuadraticSpec(BaseModel):
    """Biobjective f_i(x) = 0.5 ||x - a_i||^2 with the segment [a1, a2] as Pareto set."""
    model_config = ConfigDict(extra="forbid")

    kind: Literal["quadratic"] = "quadratic"
    a1: List[float]
    a2: List[float]

    @model_validator(mode="after")
    def check_anchors(self) -> "QuadraticSpec":
        if len(self.a1) != len(self.a2) or not self.a1:
            raise ValueError("a1 and a2 must be non-empty and of equal length")
        if self.a1 == self.a2:
            raise ValueError("a1 and a2 must differ")
        if not all(math.isfinite(v) for v in self.a1 + self.a2):
            raise ValueError("anchor entries must be finite")
        return self

    @property
    def dimension(self) -> int:
        return len(self.a1)


ProblemSpec = Annotated[Union[LogSumExpSpec, WittingSpec, QuadraticSpec], Field(discriminator="kind")]


class StartsConfig(BaseModel):
    """
    Starting points: either explicit ``points`` or ``count`` samples drawn
    uniformly from the box [low, high]^n with ``seed``.
    """
    model_config = ConfigDict(extra="forbid")

    points: Optional[List[List[float]]] = None
    count: Optional[int] = Field(None, ge=1)
    low: float = -2.0
    high: float = 2.0
    seed: int = Field(0, ge=0, lt=2**64)

    @model_validator(mode="after")
    def check_mode(self) -> "StartsConfig":
        if (self.points is None) == (self.count is None):
            raise ValueError("give exactly one of 'points' or 'count'")
        if self.points is not None:
            if not self.points:
                raise ValueError("'points' must contain at least one start")
            if not all(math.isfinite(v) for point in self.points for v in point):
                raise ValueError("start coordinates must be finite")
        if not (math.isfinite(self.low) and math.isfinite(self.high)):
            raise ValueError("sampling bounds must be finite")
        if not self.low < self.high:
            raise ValueError("'low' must be smaller than 'high'")
        return self


class OutputsConfig(BaseModel):
    """Output directory and trace options."""
    model_config = ConfigDict(extra="forbid")

    directory: str = "results"
    thinning: int = Field(1, ge=1, description="Write every n-th trace row (the last row is always kept)")
    formats: List[Literal["csv", "json", "plot"]] = Field(default_factory=lambda: ["csv", "json"])
    energies: bool = Field(True, description="Add energy_i columns for energy-carrying methods")
    kkt_trace: bool = Field(True, description="Record the KKT residual at every iterate (final residual is always reported)")


class ExperimentConfig(BaseModel):
    """
    Root experiment configuration.

    Validates that explicit start points match the problem dimension.
    """
    model_config = ConfigDict(extra="forbid")

    name: str = "experiment"
    problem: ProblemSpec
    solvers: List[SolverConfig] = Field(..., min_length=1)
    starts: StartsConfig
    outputs: OutputsConfig = Field(default_factory=OutputsConfig)

    @model_validator(mode="after")
    def check_dimensions(self) -> "ExperimentConfig":
        if self.starts.points is not None:
            n = self.problem.dimension
            for index, point in enumerate(self.starts.points):
                if len(point) != n:
                    raise ValueError(f"start {index} has length {len(point)}, problem dimension is {n}")
        labels = [solver.label for solver in self.solvers]
        if len(set(labels)) != len(labels):
            raise ValueError("solver labels must be unique (set 'name' to disambiguate)")
        return self

    @field_validator("solvers")
    @classmethod
    def check_methods(cls, solvers: List[SolverConfig]) -> List[SolverConfig]:
        for solver in solvers:
            if solver.method not in SUPPORTED_METHODS:
                raise ValueError(f"Unsupported method: {solver.method}")
        return solvers


class SummaryRow(BaseModel):
    """One (solver, start) cell of an experiment."""
    solver: str
    method: str
    start_id: int
    iterations: int
    k_final: int
    termination: Literal["max_iters", "tol_met", "eval_failure", "error"]
    final_values: List[float]
    final_kkt_residual: Optional[float] = None
    final_pareto_distance: Optional[float] = None
    final_step_size: Optional[float] = None
    wall_time: float = 0.0
    error: Optional[str] = None
