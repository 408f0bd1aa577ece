"""Exact computation of global Euler obstructions, polar multiplicities,
Milnor numbers and Euler characteristics of affine varieties over Q."""

from .config import RunConfig
from .errors import EulerDataError
from .euler import (BetaSeries, InvariantReport, MilnorRecord, beta_series_isolated, chi_isolated,
                    chi_minus_eu, global_euler_obstruction, milnor_number, sectional_milnor,
                    singular_points)
from .geometry import (GenericForm, VarietySpec, generic_linear_form, generic_slice, load_variety,
                       plane_section_count, singular_ideal)
from .ideal import (Ideal, PointCount, distinct_point_count, eliminate, groebner_basis, krull_dimension,
                    normal_form, quotient_vector_dimension, saturation)
from .polar import AlphaSeries, alpha_one, alpha_series
from .poly import (GREVLEX, LEX, MonomialOrder, Polynomial, elimination_order, minors,
                   parse_polynomial, partial_derivative, substitute_affine)
from .strat import (StratificationFixture, StratumRecord, check_duality, eval_chi_pencil,
                    eval_formula_one, eval_formula_two, load_fixture)

__version__ = "0.1.0"
