"""Exact finite-size distribution tables for map parameters."""

from __future__ import annotations

import csv
import json
import os
from dataclasses import dataclass, field
from fractions import Fraction

from .scalars import Quad3


@dataclass
class DistTable:
    n: int
    unit: str                  # "faces-2" or "edges"
    parameter: str
    support: list
    masses: list
    exact: bool
    notes: str = ""

    def __post_init__(self):
        if list(self.support) != sorted(set(self.support)):
            raise ValueError("support must be strictly increasing")
        if self.exact:
            total = sum(self.masses, Fraction(0))
            if total != 1:
                raise ValueError(f"masses sum to {total}, not 1")
            if any(m < 0 for m in self.masses):
                raise ValueError("negative mass")
        else:
            total = float(sum(self.masses))
            if abs(total - 1.0) > 1e-12:
                raise ValueError(f"masses sum to {total}, not 1")
            if any(m < -1e-15 for m in self.masses):
                raise ValueError("negative mass")

    def mass(self, value):
        try:
            return self.masses[self.support.index(value)]
        except ValueError:
            return Fraction(0) if self.exact else 0.0

    def mean(self):
        return sum(v * m for v, m in zip(self.support, self.masses))

    def as_float(self):
        return {v: float(m) for v, m in zip(self.support, self.masses)}

    def support_step(self):
        """gcd of support gaps (the residue multiplicity of the law)."""
        import math
        if len(self.support) < 2:
            return 1
        g = 0
        for a, b in zip(self.support, self.support[1:]):
            g = math.gcd(g, b - a)
        return max(g, 1)

    # -- export ----------------------------------------------------------

    def header(self):
        return {
            "n": self.n,
            "unit": self.unit,
            "parameter": self.parameter,
            "exact": self.exact,
            "notes": self.notes,
        }

    def write_csv(self, path):
        tmp = str(path) + ".tmp"
        with open(tmp, "w", newline="") as fh:
            w = csv.writer(fh)
            for key, val in self.header().items():
                w.writerow([f"# {key}", val])
            w.writerow(["param_value", "mass"])
            for v, m in zip(self.support, self.masses):
                w.writerow([v, str(m)])
        os.replace(tmp, path)

    def write_json(self, path):
        tmp = str(path) + ".tmp"
        payload = {
            "schema": "cubicmaps-dist/1",
            **self.header(),
            "rows": [
                {"param_value": v, "mass": str(m) if self.exact else float(m)}
                for v, m in zip(self.support, self.masses)
            ],
        }
        with open(tmp, "w") as fh:
            json.dump(payload, fh, indent=1)
        os.replace(tmp, path)


def table_from_weights(weights, n, unit, parameter, exact, notes=""):
    """Normalize a {value: weight} map into a DistTable."""
    support = sorted(v for v, w in weights.items() if w)
    if exact:
        total = sum((weights[v] for v in support), Fraction(0))
        masses = [Fraction(weights[v]) / total for v in support]
    else:
        total = float(sum(weights[v] for v in support))
        masses = [float(weights[v]) / total for v in support]
    return DistTable(n, unit, parameter, support, masses, exact, notes)
