"""Exact arithmetic of ramification filtrations for degree-p local field data.

The package computes break sequences, upper/lower ramification filtrations
with their Herbrand transition maps, discriminant exponents, and the cyclic
contribution to the degree-p mass of a local field, all in exact rational
arithmetic. A brute-force line-counting oracle and a battery of invariant
checks (`ramify.verify`) cross-validate the closed forms.
"""

from .breaks import (
    BreakSequence,
    a_of,
    b_lower,
    b_upper,
    break_sequence,
    c_truncation,
    prime_to_p_breaks,
)
from .filtration import (
    FieldParams,
    FilteredSpace,
    HerbrandMap,
    RamificationFiltration,
    cyclic_discriminant,
    different_exponent_closed,
    different_exponent_oracle,
    dim_at_level,
    discriminant_exponent,
    herbrand_phi,
    herbrand_psi,
    index_table,
    lower_filtration,
    orthogonal_index,
    splitting_data,
    tres_ramifiee_discriminant,
    unit_space_model,
    upper_filtration,
    v_space_model,
)
from .fpspace import (
    FpMatrix,
    FpSubspace,
    GroupAlgebraElement,
    apply_idempotent,
    count_lines,
    eigenspace,
    enumerate_lines,
    fp_matrix,
    idempotent,
    multiplicative_order,
    subspace,
)
from .mass import (
    MassReport,
    average_c_closed_form,
    average_c_cyclotomic,
    brute_force_mass,
    cyclic_mass,
    lines_with_break_count,
    series_value,
    serre_total_mass,
    tres_ramifiee_count,
)
from .rationals import (
    decimal_string,
    geometric_sum_finite,
    geometric_sum_infinite,
    rat_reduce,
)

__version__ = "0.1.0"

__all__ = [
    "BreakSequence",
    "FieldParams",
    "FilteredSpace",
    "FpMatrix",
    "FpSubspace",
    "GroupAlgebraElement",
    "HerbrandMap",
    "MassReport",
    "RamificationFiltration",
    "a_of",
    "apply_idempotent",
    "average_c_closed_form",
    "average_c_cyclotomic",
    "b_lower",
    "b_upper",
    "break_sequence",
    "brute_force_mass",
    "c_truncation",
    "count_lines",
    "cyclic_discriminant",
    "cyclic_mass",
    "decimal_string",
    "different_exponent_closed",
    "different_exponent_oracle",
    "dim_at_level",
    "discriminant_exponent",
    "eigenspace",
    "enumerate_lines",
    "fp_matrix",
    "geometric_sum_finite",
    "geometric_sum_infinite",
    "herbrand_phi",
    "herbrand_psi",
    "idempotent",
    "index_table",
    "lines_with_break_count",
    "lower_filtration",
    "multiplicative_order",
    "orthogonal_index",
    "prime_to_p_breaks",
    "rat_reduce",
    "series_value",
    "serre_total_mass",
    "splitting_data",
    "subspace",
    "tres_ramifiee_count",
    "tres_ramifiee_discriminant",
    "unit_space_model",
    "upper_filtration",
    "v_space_model",
]
