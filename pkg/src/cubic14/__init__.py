"""Exact computer algebra over GF(p) for a discriminant-14 cubic fourfold witness."""

from .field import DEFAULT_PRIME, FieldConfig, uv_roots
from .poly import GREVLEX, LEX, MonomialOrder, ParseError, Polynomial, Ring, elimination_order
from .groebner import (FreeModule, FreeModuleElement, GroebnerBasis, contains, groebner_basis, is_reduced,
                       normal_form, s_pairs_reduce_to_zero, syzygies)
from .ideals import (HilbertPoly, HilbertSeries, Ideal, dim_deg, eliminate, hilbert_series, ideal_quotient,
                     intersect, saturate)
from .homological import GradedModule, HomModule, Resolution, free_resolution, graded_hom, sheaf_h0
from .geometry import (GeometryError, ProjectiveScheme, RationalPoint, are_skew_lines, h0_normal_sheaf,
                       internal_projection, quadric_rank, random_hypersurface_containing,
                       sample_rational_point, singular_locus, type_II_certificate)
from .numerics import (DimensionLedger, RankTwoLattice, SurfaceInvariants, chi_ideal_twist,
                       flag_dimension_ledger, hassett_admissible_divisor, hassett_discriminant, noether_c2,
                       residual_class_solver, self_intersection_in_cubic)
from .report import Check, VerificationReport
from .witness import WitnessBundle, WitnessError, construct_witness, load_witness
from .pipeline import VerifyConfig, run_verification

__version__ = "0.1.0"
