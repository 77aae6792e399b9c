"""Exact symplectic spinor calculus: operators, kernels and verification reports.

Spinors are passed as text (``"x1*q1 - 2i*x3"``); the Gaussian factor
e^{-|q|^2/2} is implicit throughout.
"""

import json

from ._sympspin import (
    CONVENTION,
    Error,
    apply,
    monogenic_basis,
    monogenic_dim,
    normalize,
    sector_dim,
    twistor_kernel_basis,
    twistor_kernel_dim,
    verify_json,
)


def verify(n=2, h_max=3, Q=4, parity="both", suites="all", threads=0):
    """Run verification suites and return the report document as a dict."""
    if not isinstance(suites, str):
        suites = ",".join(suites)
    return json.loads(verify_json(n, h_max, Q, parity, suites, threads))


__all__ = [
    "CONVENTION",
    "Error",
    "apply",
    "monogenic_basis",
    "monogenic_dim",
    "normalize",
    "sector_dim",
    "twistor_kernel_basis",
    "twistor_kernel_dim",
    "verify",
]
