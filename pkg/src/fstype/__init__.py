"""Admissible bases and presentations of Feigin-Stoyanovsky type subspaces
of standard modules for affine Lie algebras of type C_l^(1)."""

from .admissibility import ChainWitness, character, dc_check, enumerate_basis, ic_check, max_nested_chain
from .core import (
    Color,
    HighestWeight,
    Monomial,
    Polynomial,
    Variable,
    compare_colors,
    compare_monomials,
    compare_variables,
    leading_term,
    lower,
    monomials,
    multiply,
    parse_monomial,
    parse_polynomial,
    var,
)
from .relations import GeneratorSet, generators, leading_terms, lowering_orbit, seed_dc, seed_ic
from .verifier import GradedReport, graded_component, standard_monomials, verify_presentation

__version__ = "0.1.0"
