"""Annular non-crossing families, ribbon graphs and random matrix moments."""

import json
from fractions import Fraction

from ._annular import (
    CapExceeded,
    DomainMismatch,
    Error,
    InvalidArgument,
    InvariantViolation,
    ParseError,
    Permutation,
    annulus_frame,
    disk_frame,
    euler_defect,
    is_delta_symmetric,
    is_noncrossing,
    klein_frame,
    nc_family,
    ribbon_family,
    run_cli,
    set_thread_count,
    thread_count,
    torus_frame,
)
from . import _annular

__all__ = [
    "CapExceeded",
    "DomainMismatch",
    "Error",
    "InvalidArgument",
    "InvariantViolation",
    "ParseError",
    "Permutation",
    "annulus_frame",
    "disk_frame",
    "euler_defect",
    "is_delta_symmetric",
    "is_noncrossing",
    "klein_frame",
    "mc_moment",
    "moment",
    "nc_family",
    "oracle_moment",
    "ribbon_family",
    "run_cli",
    "set_thread_count",
    "thread_count",
    "torus_frame",
    "verify",
]


def moment(ensemble, n, method="wick"):
    """E Tr M^n as {(power of N, power of c): Fraction}."""
    terms = json.loads(_annular.moment_json(ensemble, n, method))["terms"]
    return {(t["N"], t["c"]): Fraction(int(t["num"]), int(t["den"])) for t in terms}


def oracle_moment(ensemble, n, N, M=None):
    """The moment by literal index summation, as a Fraction."""
    num, den = _annular.oracle_moment(ensemble, n, N, M)
    return Fraction(int(num), int(den))


def verify(name, n, p=0, hat_map="inverse"):
    """Exhaustive bijection report as a dict."""
    return json.loads(_annular.verify_json(name, n, p, hat_map))


def mc_moment(ensemble, n, N, M=None, samples=100000, seed=1):
    """Monte Carlo estimate of E Tr M^n as a dict."""
    return json.loads(_annular.mc_moment_json(ensemble, n, N, M, samples, seed))
