"""Exact weighted enumeration of strong Bruhat chains and padded Schubert calculus."""

from .bruhat import Cover, NotACover, NotComparable, cover_stats, covers_up, interval, symmetry_image
from .chainsum import WeightSpec, chain_count, preset, stembridge_product, verify_example_15, verify_theorem
from .operator_verify import SchubertOperator, verify_lemma
from .permcore import Permutation, identity, lehmer_code, length, longest_element, multiply, reduced_words
from .polyring import Poly, divided_difference, reduce_mod_I, substitute, y_derivative
from .schubert import (delta, delta_on_quotient, expand_in_schubert_basis, macdonald_sum, monk_product,
                       padded_schubert, principal_specialization, schubert)

__version__ = "0.1.0"
