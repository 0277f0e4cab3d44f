"""Exact k-domination, k-tuple domination and 2-packing toolkit for small graphs."""

from .graph import (
    MAX_ORDER,
    Graph,
    VertexSet,
    closed_neighborhood,
    degree_in,
    join,
    max_degree,
    min_degree,
)
from .graph6 import Graph6Error, from_graph6, to_graph6
from .solvers import (
    Parameter,
    ParameterUndefined,
    SolveResult,
    gamma_k,
    gamma_xk,
    is_2_packing,
    is_k_dominating,
    is_ktuple_dominating,
    oracle_solve,
    rho,
)

__all__ = [
    "MAX_ORDER", "Graph", "VertexSet", "closed_neighborhood", "degree_in", "join",
    "max_degree", "min_degree", "Graph6Error", "from_graph6", "to_graph6", "Parameter",
    "ParameterUndefined", "SolveResult", "gamma_k", "gamma_xk", "is_2_packing",
    "is_k_dominating", "is_ktuple_dominating", "oracle_solve", "rho",
]
