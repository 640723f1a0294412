"""Central tolerance table for the numeric code and the acceptance checks.

The environment variable RECTSURF_TOLERANCES may point to a JSON file with
a subset of the fields below; those values replace the defaults."""

from __future__ import annotations

import dataclasses
import json
import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    # acceptance thresholds
    centre: float = 1e-9
    complementarity: float = 1e-9
    fd_oracle: float = 1e-4
    involution: float = 1e-12
    harmonicity: float = 1e-8
    tangency: float = 1e-2
    lie_residual: float = 1e-3
    binding_parallel: float = 1e-6
    centre_slope: float = 1e-6
    unit_norm: float = 1e-12
    # numerical knobs
    series_term: float = 1e-17
    pole_guard: float = 1e-6
    tangency_rho: float = 1e-4        # distance from the corner, relative to min(a, b)
    tangency_fd: float = 1e-4         # FD step relative to that distance
    tau_window: tuple = (0.2, 0.8)
    streamline_step: float = 2e-3     # relative to min(a, b)
    streamline_margin: float = 1e-4   # relative to min(a, b)
    binding_tau: float = 1e-9
    binding_min_component: float = 1e-2
    slope_probe: float = 1e-3         # distance to a horizontal side (turns, relative to b)
    slope_limit: float = 0.05
    fan_gap: float = 1e-3

    def as_dict(self) -> dict:
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in dataclasses.asdict(self).items()}

    def replaced(self, **changes) -> "Tolerances":
        known = {f.name for f in dataclasses.fields(self)}
        bad = set(changes) - known
        if bad:
            raise KeyError("unknown tolerance field(s): %s" % ", ".join(sorted(bad)))
        changes = {k: tuple(v) if isinstance(v, list) else v for k, v in changes.items()}
        return dataclasses.replace(self, **changes)


def load(path: str | None = None) -> Tolerances:
    path = os.environ.get("RECTSURF_TOLERANCES") if path is None else path
    if not path:
        return Tolerances()
    with open(path) as fh:
        return Tolerances().replaced(**json.load(fh))


TOL = load()
