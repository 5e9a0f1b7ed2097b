"""Groebner bases, cone decompositions and degree bounds for algebras of solvable type."""

from .algebra import (
    Polynomial,
    SolvableAlgebra,
    associated_graded,
    commutative,
    dehomogenize_poly,
    homogenize_poly,
    lie,
    opposite,
    rees,
    tensor,
    validate,
    weyl,
)
from .bounds import BoundValue, dube_bound, evaluate
from .errors import AlgebraMismatch, DimensionError, ParseError, SemanticError, ValidationError
from .fields import QQ, PrimeField
from .groebner import (
    GroebnerBasis,
    buchberger,
    groebner,
    groebner_via_homogenization,
    is_groebner,
    membership,
    normal_form,
    reduce_basis,
)
from .monomials import DegLex, Lex, Opposite, Product, Weight
from .syzygy import colon_ideal, syzygies_of_tuple
from .twosided import is_two_sided_gb, two_sided_groebner
