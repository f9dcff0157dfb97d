from .field import GF, ExtField, field
from .matrix import (mat_mul, mat_inv, rank, kernel_dim, det, charpoly, nu,
                     fixed_space_dim, eigenspace_dim, eigenspace_dim_via_kernel)
from .classical import MatrixGroup, build_classical, matrix_group
from .actions import act_on, matrix_of, gaussian_binomial

__all__ = ["GF", "ExtField", "field", "mat_mul", "mat_inv", "rank", "kernel_dim", "det",
           "charpoly", "nu", "fixed_space_dim", "eigenspace_dim", "eigenspace_dim_via_kernel",
           "MatrixGroup", "build_classical", "matrix_group", "act_on", "matrix_of",
           "gaussian_binomial"]
