from .balanced_mtx import MatrixError, BalancedMatrix, DominantMatrix, \
    Extremes, from_off_diagonals, from_dominant, extremes, total_mass, matvec
from .mtx_gen import random_balanced, random_dominant, worst_case_family
from .mtx_file import MatrixFormatError
from . import mtx_file
