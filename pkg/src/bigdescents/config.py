"""Size guards and defaults, overridable per call or from a JSON config file.

Exhaustive enumeration over S_n grows factorially and over avoider classes
like the Catalan numbers, so every brute-force entry point is guarded.  The
defaults below keep any single call comfortably inside a desk-scale budget;
reproduction scripts rely on the hard defaults, and callers that need more
can pass an explicit limit or load a config file with larger guards.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields


@dataclass(frozen=True)
class Limits:
    """Hard defaults for enumeration budgets and expansion orders."""

    # enumerate_avoiders / distribution_table over the full symmetric group
    avoider_guard_empty: int = 11
    # ... and over a nonempty pattern class
    avoider_guard_patterns: int = 14
    # quasisymmetric sums enumerate avoiders of weight n
    qsym_guard: int = 8
    # default truncation order for generating function expansions
    series_order: int = 12
    # starting line index for b-file output
    bfile_offset: int = 1

    def validated(self) -> "Limits":
        for f in fields(self):
            if getattr(self, f.name) <= 0 and f.name != "bfile_offset":
                raise ValueError(f"guard {f.name} must be positive")
        return self


DEFAULT_LIMITS = Limits()


def load_limits(path: str) -> Limits:
    """Read guard overrides from a JSON object keyed by field name."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    known = {f.name for f in fields(Limits)}
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    return Limits(**data).validated()
