"""Deterministic CSV and JSON report emission.

All numeric cells use 17-significant-digit decimals and LF line endings so
identical inputs produce byte-identical files; the JSON summary lists the
scenario parameters and one entry per executed check.
"""
import json
from typing import NamedTuple

__all__ = ["CheckResult", "check", "format_cell", "write_csv",
           "summary_payload", "write_summary"]


class CheckResult(NamedTuple):
    name: str
    passed: bool
    worst_slack: float
    details: str


def check(name, slack, details):
    """A check passes exactly when its slack is nonnegative."""
    return CheckResult(name, bool(slack >= 0.0), float(slack), details)


def format_cell(value):
    if isinstance(value, str):
        return value
    return format(float(value), ".17g")


def write_csv(path, header, rows):
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(format_cell(cell) for cell in row) + "\n")


def summary_payload(params, checks):
    """Summary document: {params: {q, beta, gamma}, checks: [...]}"""
    return {
        "params": {"q": params.q, "beta": params.beta, "gamma": params.gamma},
        "checks": [
            {"name": c.name, "pass": c.passed, "worst_slack": c.worst_slack,
             "details": c.details}
            for c in checks
        ],
    }


def write_summary(path, payload):
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")
