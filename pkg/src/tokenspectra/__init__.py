"""Token graphs F_k(G), their Laplacian spectra, and the lifting operators B_{n,k,l}."""

__version__ = "0.1.0"

from .combinatorics import binomial, enumerate_subsets, rank_colex, symmetric_difference, unrank_colex
from .errors import (ConsistencyError, NumericalError, ParseError, ResourceError,
                     TokenSpectraError, ValidationError)
from .formats import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from .graphs import Graph, cartesian_product, complement, family, laplacian
from .lifting import LiftOperator, apply_B, apply_Bt, commutation_residual, kernel_basis
from .spectra import (Spectrum, cluster, eig_sym, lambda_max, lambda_min_nontrivial,
                      nontrivial_spectrum, spectrum_contains, token_spectrum)
from .tokens import TokenGraph, dk_operator, internal_edges, restrict, token_degree, token_graph

__all__ = [
    "__version__",
    "binomial", "enumerate_subsets", "rank_colex", "symmetric_difference", "unrank_colex",
    "ConsistencyError", "NumericalError", "ParseError", "ResourceError", "TokenSpectraError",
    "ValidationError",
    "emit_edge_list", "emit_graph6", "parse_edge_list", "parse_graph6",
    "Graph", "cartesian_product", "complement", "family", "laplacian",
    "LiftOperator", "apply_B", "apply_Bt", "commutation_residual", "kernel_basis",
    "Spectrum", "cluster", "eig_sym", "lambda_max", "lambda_min_nontrivial",
    "nontrivial_spectrum", "spectrum_contains", "token_spectrum",
    "TokenGraph", "dk_operator", "internal_edges", "restrict", "token_degree", "token_graph",
]
