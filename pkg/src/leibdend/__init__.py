"""Exact-arithmetic workbench for Leibniz-dendriform structures.

All computation is over Q via fractions.Fraction.  The package is split
into: tensorkit (exact linear and tensor algebra), algebra (axiom
checkers), rep (bimodules, semidirect products, matched pairs), ybe
(r-tensor calculus and operator conditions), bialgebra (coalgebras,
doubles, classification), forms (bilinear-form structures and the
Rota-Baxter correspondences), quadri (four-operation splittings), and
cli/fileio (structure files and commands).
"""

from .tensorkit import Matrix, Scalar, Tensor2, Tensor3, mat_inverse, place_product, solve_linear
from .algebra import BilinearOp, DendAlgebra, LeibnizAlgebra, Violation, check_ld, check_leibniz

__all__ = [
    "Matrix",
    "Scalar",
    "Tensor2",
    "Tensor3",
    "mat_inverse",
    "place_product",
    "solve_linear",
    "BilinearOp",
    "DendAlgebra",
    "LeibnizAlgebra",
    "Violation",
    "check_ld",
    "check_leibniz",
]

__version__ = "0.1.0"
