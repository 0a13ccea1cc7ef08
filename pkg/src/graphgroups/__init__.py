"""Executable constructions for graphs of groups and graph products of cyclic groups."""
from .coxeter import CosetTable, enumerate_cosets
from .gog import (
    GraphOfGroups,
    Kind,
    central_quotient,
    free_product_decomposition,
    is_balanced,
    pi1_presentation,
    validate,
    z_homomorphism_criterion,
)
from .gprod import GraphProduct, GPWord, VertexGroupSpec, canonical_coset_rep, coset_action, kernel_factorization, kill_vertex
from .gs import GSElement, GSGroup, gs_build
from .words import Alphabet, FpPresentation, FreeWord, free_reduce, parse_word
from .zmat import IntMatrix, integer_kernel_basis, smith_normal_form

__version__ = "0.1.0"
