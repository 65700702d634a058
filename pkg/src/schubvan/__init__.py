"""Schubert polynomials, Schubert coefficients and their vanishing, in all classical types."""

from .weyl import (LieType, Permutation, SignedPermutation, elements, length, long_element,
                   matrix_representative, parse_element)
from .polyring import Poly, parse_poly
from .schubert import (coeff_exact, coeff_ps, coeff_ps_structure, kostka, pipe_dreams,
                       product_expansion, schubert_poly, schubert_poly_dd, schubert_poly_pd)
from .filters import FilterCertificate, filter_vanish
from .purbhoo import VanishVerdict, lie_nilpotent_basis, random_unipotent, vanish_test, z_subspace
from .lifted import (LiftedSystem, StiefelPattern, build_type_a, build_type_b, build_type_c,
                     build_type_d, build_uniform, coefficient_system, deserialize, serialize)
from .groebner import QuotientInfo, buchberger, count_system, solution_count, specialize

__all__ = [
    "LieType", "Permutation", "SignedPermutation", "elements", "length", "long_element",
    "matrix_representative", "parse_element", "Poly", "parse_poly", "coeff_exact", "coeff_ps",
    "coeff_ps_structure", "kostka", "pipe_dreams", "product_expansion", "schubert_poly",
    "schubert_poly_dd", "schubert_poly_pd", "FilterCertificate", "filter_vanish", "VanishVerdict",
    "lie_nilpotent_basis", "random_unipotent", "vanish_test", "z_subspace", "LiftedSystem",
    "StiefelPattern", "build_type_a", "build_type_b", "build_type_c", "build_type_d",
    "build_uniform", "coefficient_system", "deserialize", "serialize", "QuotientInfo",
    "buchberger", "count_system", "solution_count", "specialize",
]

__version__ = "0.1.0"
