"""Run configuration shared by the solver, curve analysis, and the CLI."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class RunConfig:
    precision_bits: int = 128
    tolerance: float = 1e-12
    max_precision_bits: int = 4096
    max_k: int = 24
    grid_resolution: int = 64
    output_format: str = "text"

    def __post_init__(self):
        if self.precision_bits > self.max_precision_bits:
            raise ValueError("precision_bits exceeds max_precision_bits")
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if self.output_format not in ("text", "json"):
            raise ValueError("output_format must be 'text' or 'json'")
