"""Admissible pictures and Littlewood-Richardson crystals of type A."""

from .crystal import (AdditionTrace, Reading, add_letters, decompose_tensor, lr_coefficient_crystal,
                      lr_crystal, read)
from .errors import BudgetExceeded, ContractViolation, OrderValidationError
from .oracle import is_ballot, lr_coefficient_ballot, lr_fillings
from .orders import (TotalCellOrder, enumerate_admissible_orders, is_admissible, leq_F, leq_J, leq_P,
                     order_from_comparator)
from .pictures import PictureMap, enumerate_pictures, is_admissible_picture, is_pa_standard, phi, psi
from .shapes import Cell, Composition, Partition, SkewShape, cells, contains, is_young, size
from .tableaux import Tableau, enumerate_ssyt, level_set, p_index

__version__ = "0.1.0"
