"""Theta-constant modular polynomials: exact construction and numerical verification."""

from ._core import (
    Poly,
    b_seq,
    build_qn,
    check,
    constant_term,
    enumerate_triplets,
    euler_phi,
    homogeneous_elimination,
    homogeneous_relation,
    MissingSeedError,
    omega,
    power_of_two_fixture,
    psi,
    run_suite,
    theta,
)

__all__ = [
    "Poly",
    "b_seq",
    "build_qn",
    "check",
    "constant_term",
    "enumerate_triplets",
    "euler_phi",
    "homogeneous_elimination",
    "homogeneous_relation",
    "MissingSeedError",
    "omega",
    "power_of_two_fixture",
    "psi",
    "run_suite",
    "theta",
]
