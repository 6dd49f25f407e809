"""Simplicial toric varieties that are set-theoretic complete intersections in one characteristic.

Builds the binomial defining systems of the family and checks them by
exact computation over finite fields.
"""

__version__ = "0.1.0"

from .errors import (BudgetError, ConditionIFailure, ConditionIIFailure, ConditionIIIFailure,
                     NoSuchRootOfUnity, ValidationError)
from .family import EquationSystem, FamilyParams, build_system, phi, rank_report, validate
from .finitefield import FieldElement, embed, make_field, nth_roots, primitive_root_of_unity
from .toric import Binomial, build_matrix, in_ideal, kernel_basis, monic_kernel_search
from .verify import (check_lemma1, check_lemma2, check_prop1, check_prop2, image_set,
                     membership_oracle, witness_F, witness_pair, zero_set)
