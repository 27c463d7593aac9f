"""Verification reports: per-cell pass/fail records for identity checkers.

Checkers never raise on a mismatch; they collect cells so a failing identity
is documented with its witness values instead of aborting a sweep.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from .laurent import LaurentPoly


def render_value(v) -> object:
    """Canonical text/JSON form for rationals, polynomials, and series."""
    if isinstance(v, LaurentPoly):
        if v.is_constant():
            return str(v.constant_value())
        return v.to_json()
    if isinstance(v, (int, Fraction)):
        return str(v)
    if hasattr(v, "to_json"):
        return v.to_json()
    return str(v)


@dataclass
class CheckCell:
    indices: tuple
    lhs: object
    rhs: object
    passed: bool
    note: str = ""

    @property
    def residual(self):
        try:
            return self.lhs - self.rhs
        except TypeError:
            return None

    def to_json(self) -> dict:
        out = {
            "indices": list(self.indices),
            "lhs": render_value(self.lhs),
            "rhs": render_value(self.rhs),
            "residual": render_value(self.residual) if self.residual is not None else None,
            "pass": self.passed,
        }
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class Report:
    identity: str
    params: dict
    cells: List[CheckCell] = field(default_factory=list)

    def check(self, indices: Sequence, lhs, rhs, note: str = "") -> CheckCell:
        cell = CheckCell(tuple(indices), lhs, rhs, lhs == rhs, note)
        self.cells.append(cell)
        return cell

    def skip(self, indices: Sequence, note: str) -> CheckCell:
        cell = CheckCell(tuple(indices), None, None, True, note)
        self.cells.append(cell)
        return cell

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cells)

    @property
    def failures(self) -> List[CheckCell]:
        return [c for c in self.cells if not c.passed]

    def to_json(self) -> dict:
        params = {
            k: v if isinstance(v, (str, int, bool, float, type(None))) else render_value(v)
            for k, v in self.params.items()
        }
        return {
            "identity": self.identity,
            "params": params,
            "pass": self.passed,
            "cells": [c.to_json() for c in self.cells],
        }

    def to_json_str(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_json(), indent=indent, sort_keys=False)

    def summary(self) -> str:
        n_fail = len(self.failures)
        status = "pass" if n_fail == 0 else f"FAIL ({n_fail}/{len(self.cells)} cells)"
        return f"{self.identity}: {status}"
