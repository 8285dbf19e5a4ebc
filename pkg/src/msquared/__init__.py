"""Certified computation of ms and cs for quadratic ideals and edge rings of graphs."""
from __future__ import annotations

__version__ = "0.1.0"

from .exactfield import FieldCtx, make_field, rref
from .quadspace import QuadIdeal, hilbert_function, monomial_ideal, span_quad, squares_ideal
from .invariants import (
    InvariantReport,
    SearchConfig,
    compute_cs,
    compute_ms,
    cs_check,
    ms_check,
)
from .graphs import Graph, edge_ideal, independence_number

__all__ = [
    "FieldCtx", "make_field", "rref",
    "QuadIdeal", "hilbert_function", "monomial_ideal", "span_quad", "squares_ideal",
    "InvariantReport", "SearchConfig", "compute_cs", "compute_ms", "cs_check", "ms_check",
    "Graph", "edge_ideal", "independence_number",
]
