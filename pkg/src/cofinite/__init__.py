"""Cofiniteness of submonoids and ideals of affine semigroups, with exact arithmetic."""
from .affine import (
    AffineSemigroup,
    CofinitenessReport,
    RelativeGaps,
    axis_generators_are_minimal_check,
    axis_semigroup,
    extreme_rays,
    factorizations,
    gap_box,
    gaps_Nn,
    in_cone,
    is_C_cofinite,
    is_Nn_cofinite,
    member,
    minimal_generators,
    mixing_coefficient,
    preimage_monoid_generators,
    relative_gaps,
    relative_gaps_detail,
    remove_gap_generators,
)
from .diophantine import (
    HomogeneousSolutionBasis,
    InhomogeneousMinimalSolutions,
    axis_projection,
    check_solutions,
    hilbert_basis,
    minimal_solutions,
)
from .errors import (
    AlgorithmDisagreement,
    CofiniteError,
    DimensionMismatch,
    NotContained,
    PreconditionError,
)
from .groebner import (
    BinomialElement,
    GroebnerBasis,
    apery_groebner,
    buchberger,
    ideal_complement_groebner,
    normal_form,
    standard_monomials,
    toric_ideal,
    zero_dimensional,
)
from .ideal import (
    IdealComplementResult,
    SemigroupIdeal,
    apery,
    apery_extreme_rays,
    complement_by_box,
    complement_by_preimage,
    ideal_complement,
    in_ideal,
    is_ideal_cofinite,
    min_multiple_in_ideal,
    preimage_ideal_minimals,
)
from .lattice import GREVLEX, GRLEX, LEX, BlockOrder, TermOrder, minimals, natural_leq, term_compare
from .numerical import NumericalSemigroup, frobenius, gaps_1d, is_numerical_semigroup, minimal_generators_1d

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
