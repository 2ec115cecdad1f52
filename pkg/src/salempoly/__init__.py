"""Exact arithmetic for Salem and Pisot polynomials.

Classification of integer polynomials by root location relative to the unit
circle, minimal-polynomial extraction, Salem's infinite families with their
cyclotomic factor schedules, and a gap-bounded interval search enumerating
all Salem polynomials of a given length.
"""

from .cyclofactor import (
    CycFactorization,
    pisot_minpoly,
    quotient_is_cyclotomic,
    salem_minpoly,
    strip_cyclotomic,
)
from .families import (
    DegreeSchedule,
    FamilySpec,
    cyclotomic_schedule,
    family_poly,
    family_spec,
    find_n0,
    min_degree,
    pisot_exception_indices,
    r_value,
    repeated_factor_indices,
    rho_sequence,
    trinomial_pisot_inventory,
)
from .intpoly import (
    DomainError,
    Enclosure,
    ExactDivisionError,
    IntPoly,
    compose_znegz,
    compose_zsq,
    cyclotomic,
    derivative,
    eval_interval,
    exact_div,
    gcd_primitive,
    parse_poly,
    poly_length,
    reciprocal,
    resultant,
    resultant_in_y,
    to_human,
    to_machine,
)
from .search import (
    SearchConfig,
    SearchReport,
    ShortnessResult,
    SporadicCode,
    decode_sporadic,
    encode_sporadic,
    gap_bound,
    goncalves_upper_bound,
    run_search,
    shortness,
)
from .tables import verify_table
from .unitcircle import (
    RootLocationCertificate,
    classify,
    count_real_roots,
    count_unit_circle,
    is_trinomial_zero_free,
    refine_real_root,
    salem_root_bracket,
)

__version__ = "0.1.0"
