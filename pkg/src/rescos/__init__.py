"""Residual affine subspaces of shifted root hyperplane arrangements."""

from .arrangement import AffineFlat, IndexReport, intersect, order_flat, order_point
from .residual import enumerate_residual, verify_all
from .rootsys import ParameterFunction, RootSystem, build_root_system

__all__ = [
    "AffineFlat",
    "IndexReport",
    "ParameterFunction",
    "RootSystem",
    "build_root_system",
    "enumerate_residual",
    "intersect",
    "order_flat",
    "order_point",
    "verify_all",
]
