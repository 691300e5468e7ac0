"""Gröbner bases of polynomial ideals in Tate algebras over Q_p.

Coefficients are exact rationals; the p-adic structure only enters through
valuations.  The main entry points are re-exported here.
"""

from .buchberger import GroebnerBasis, groebner, is_groebner, minimalize
from .fan import (
    candidate_universal_gb,
    check_universal,
    groebner_homogenized,
    initial_terms,
    sample_initial_ideals,
)
from .ideals import (
    EliminationError,
    IdealPresentation,
    colon,
    eliminate,
    ideal_product,
    ideal_sum,
    ideals_equal,
    intersect,
    saturate,
)
from .mora import WnfResult, certificate_problems, wnf, wnf_with_cofactors
from .order import GREVLEX, LEX, MonomialOrder, TateOrder, Term, parse_order, parse_radii
from .overconv import (
    OverconvParams,
    ReducedToZeroAtBudget,
    Remainder,
    ecart_sr0,
    ecart_sr1,
    groebner_overconv,
    wnf_overconv,
)
from .poly import Polynomial, format_polynomial, parse_polynomial
from .systems import cyclic, katsura

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
