"""Normal forms in the quantum matrix bialgebra and commutation relations of quantum minors."""

from .commutation import Relation, VerificationError, case_tag, commute, commute_q_special, gl_less
from .csets import CSetFamily, IndexPair, csets_column, csets_rowcol, phi_subset, psi_subset
from .fg import apply_F, apply_G, coeff_E, reorder_cols, reorder_rows
from .laurent import ONE, Q, QDIFF, QINV, ZERO, LaurentPoly, neg_q_power, poly_add, poly_eval_at_one, poly_mul, q_power
from .manin import abc, congruent, normal_form, relation_R, relation_R_applied, relation_S, relation_S_applied
from .minors import MinorSpec, antipode_image, col_minor, inversion_length, parse_minor, row_minor, sort_minor
from .tensor import Tensor, column_action, is_in_column_order, is_in_row_order, row_action, tensor_add, tensor_mul, word
from .towers import Tower, int_total, intc, intr, standard_col_tower, standard_col_transposition, standard_row_tower, standard_row_transposition
from .verify import SweepConfig, sweep, verify_relation

__version__ = "0.1.0"
