"""Yang-Baxter triplets for two-state vertex models."""

from ._core import (
    ConstraintViolation,
    Error,
    NoExactRoot,
    ParseError,
    ScalarMismatch,
    SingularMatrix,
    Triplet,
    apply_diagonal_gauge,
    apply_K,
    apply_word,
    build_5v,
    build_6v_rational,
    build_6v_trig,
    build_8v,
    build_8v_baxter,
    complete_K,
    eight_vertex_invariants,
    jacobi,
    k_map_8v,
    orbit_period,
)

__all__ = [
    "ConstraintViolation",
    "Error",
    "NoExactRoot",
    "ParseError",
    "ScalarMismatch",
    "SingularMatrix",
    "Triplet",
    "apply_diagonal_gauge",
    "apply_K",
    "apply_word",
    "build_5v",
    "build_6v_rational",
    "build_6v_trig",
    "build_8v",
    "build_8v_baxter",
    "complete_K",
    "eight_vertex_invariants",
    "jacobi",
    "k_map_8v",
    "orbit_period",
]
