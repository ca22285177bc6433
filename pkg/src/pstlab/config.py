"""Tolerance and resource configuration shared by the CLI.

Defaults can be overridden by PSTLAB_* environment variables; explicit CLI
flags win over the environment.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields


@dataclass
class Config:
    grouping_tol: float = 1e-8
    support_tol: float = 1e-9
    residual_tol: float = 1e-9
    fidelity_tol: float = 1e-9
    weight_tol: float = 1e-8
    max_denominator: int = 10**6
    t_max: float = 50.0
    scan_grid: int = 10**4
    zero_grid: int = 10**4
    workers: int = None

    def __post_init__(self):
        for name in ("grouping_tol", "support_tol", "residual_tol",
                     "fidelity_tol", "weight_tol"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    @classmethod
    def from_env(cls, environ=None) -> "Config":
        environ = os.environ if environ is None else environ
        kwargs = {}
        for f in fields(cls):
            key = "PSTLAB_" + f.name.upper()
            if key in environ:
                caster = int if f.type in ("int", int) else float
                kwargs[f.name] = caster(environ[key])
        return cls(**kwargs)

    def check_kwargs(self) -> dict:
        """Keyword arguments for transfer.check_transfer."""
        return dict(
            grouping_tol=self.grouping_tol,
            support_tol=self.support_tol,
            weight_tol=self.weight_tol,
            fidelity_tol=self.fidelity_tol,
            max_denominator=self.max_denominator,
            residual_tol=self.residual_tol,
            t_max=self.t_max,
            scan_grid=self.scan_grid,
        )
