"""Exact branching bases for classical Lie algebras in the function realization."""

from .algebra import (
    E,
    F,
    Generator,
    HighestWeight,
    IndicatorExponents,
    Series,
    expand_generator,
    indicator_exponents,
    subalgebra_generators,
    weight,
)
from .minors import (
    LeftShift,
    Minor,
    MinorPolynomial,
    canonical_minor,
    cartan_weight,
    is_admissible,
    left_act,
    minor,
    right_act,
)
from .oracle import (
    GroupPoint,
    evaluate,
    evaluation_rank,
    is_zero_function,
    sample_group_point,
    verify_relation_suite,
    z_normal_form,
)
from .highest import check_defining_conditions, highest_vector, indicator_check
from .rank2 import catalog, enumerate_tableaux2, vector_of_tableau2, weight_of_tableau2
from .extension import (
    enumerate_tableaux_n,
    vector_of_tableau_n,
    weight_of_tableau_n,
)
from .dimension import branching_multiplicities, verify_branching, weyl_dimension

__version__ = "0.1.0"
