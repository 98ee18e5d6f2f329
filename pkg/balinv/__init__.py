"""
Copyright 2024 BalInv authors.  See LICENSE for details.

BalInv: the structured approximate inverse of a balanced symmetric matrix
with positive elements, its error bound, and two applications of it
(preconditioned conjugate gradients and beta-model fitting).
"""
