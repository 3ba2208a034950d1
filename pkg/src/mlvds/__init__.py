"""Double shuffle algebras of multiple L-values and level-N multiple zeta values."""

from .core import (
    LEVEL,
    MLV,
    AlgebraError,
    Alphabet,
    AlphabetMismatchError,
    DomainError,
    IndexVector,
    Letter,
    NCPoly,
    Subspace,
    Word,
    classify,
    level_alphabet,
    mlv_alphabet,
    reduce_r,
)
from .cyclotomic import Cyclo
from .evaluator import (
    ComplexApprox,
    DivergenceError,
    EvalConfig,
    RouteDisagreementError,
    eval_L_shuffle,
    eval_L_star,
    eval_poly,
    eval_zeta3_aux,
    eval_zeta_N,
)
from .grammar import ParseError, format_poly, parse_poly
from .leveln import expansion_coefficients, fds_N_element, map_J, map_J_inv, shuffle_N, stuffle_N
from .mlv import fds_element, map_I, map_I_inv, rds_element, reg_shuffle, reg_star, shuffle, stuffle

__version__ = "0.1.0"
