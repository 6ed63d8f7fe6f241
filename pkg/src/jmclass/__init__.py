"""Exact class expansions of symmetric functions evaluated at Jucys-Murphy
elements, with brute-force and character-theoretic cross-checks."""

from .arith import Poly, TSeries, binomial, series_exp_linear
from .catalan import gen_catalan, phi_closed_form_z1, phi_series, psi_series
from .characters import (
    central_character,
    char_table,
    check_moment_series,
    check_theorem4,
    content_eval,
    content_power_sum,
    dimension,
    mn_character,
    moment,
    transition_measure,
)
from .expansion import (
    ReducedExpansion,
    assemble,
    content_identity_check,
    e1ek_expansion,
    elementary_expansion,
    he_expansion,
    hook_expansion,
    leading_coefficient,
    moment_expansion,
    pkl_expansion,
    reduced_coeffs,
)
from .groupalg import (
    AlgebraElement,
    ClassExpansion,
    class_expand,
    compose,
    cycle_type,
    evaluate,
    jm_element,
    oracle_expansion,
)
from .partitions import Partition, conjugate, partitions_of
from .symfun import SymFunSpec

__version__ = "0.1.0"
