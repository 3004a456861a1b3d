"""Pseudo-Frobenius elements, Betti numbers and RF-matrices of affine semigroups."""

from .classify import SymmetryReport, classify_symmetry, quasi_frobenius, wilf_check
from .core import AffineSemigroup, contains, factorizations, new_semigroup
from .errors import SemigroupError
from .gaps import frobenius_element, gaps, is_c_semigroup, pseudo_frobenius
from .gluing import find_gluings, pf_of_gluing, rf_generation_transfer, rf_of_gluing, verify_gluing
from .orders import GREVLEX, GRLEX, LEX, TermOrder
from .resolution import betti_number, betti_table, frobenius_from_hilbert, is_mpd, k_polynomial
from .rf import check_zero_pattern, generated_by_rf, rf_matrices, rf_matrix, rf_relations
from .toric import Binomial, apery_set, is_generic, is_indispensable, minimal_generators, toric_groebner

__version__ = "0.1.0"
