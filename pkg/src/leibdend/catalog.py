"""Built-in example structures used by the golden suite, the CLI and tests.

Basis labels follow the convention e1..en for a base space and e1*..en*
for an adjoined dual block.
"""

from __future__ import annotations

from .tensorkit import Tensor2, q
from .algebra import BilinearOp, DendAlgebra, LeibnizAlgebra
from .rep import dual_regular_rep, semidirect


def zero_dend(dim: int) -> DendAlgebra:
    return DendAlgebra(BilinearOp.zero(dim), BilinearOp.zero(dim))


def zero_leibniz(dim: int) -> LeibnizAlgebra:
    return LeibnizAlgebra(BilinearOp.zero(dim))


def dend1(p, q_) -> DendAlgebra:
    """One-dimensional splitting e > e = p e, e < e = q e (valid iff p = -q)."""
    return DendAlgebra(
        BilinearOp.from_entries(1, {(0, 0, 0): q(p)}),
        BilinearOp.from_entries(1, {(0, 0, 0): q(q_)}),
    )


def dend2_abelian() -> DendAlgebra:
    """Two-dimensional splitting whose derived Leibniz product vanishes."""
    succ = BilinearOp.from_entries(2, {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1})
    prec = BilinearOp.from_entries(2, {(0, 0, 0): -1, (0, 1, 1): -1, (1, 0, 1): -1})
    return DendAlgebra(succ, prec)


def dend2_nonabelian() -> DendAlgebra:
    """Two-dimensional splitting with nonzero derived Leibniz product."""
    succ = BilinearOp.from_entries(2, {(0, 0, 0): 1, (0, 1, 1): 1})
    prec = BilinearOp.from_entries(2, {(0, 0, 0): -1, (1, 0, 1): -1})
    return DendAlgebra(succ, prec)


def dend4_extension() -> DendAlgebra:
    """The 4-dimensional extension of the nonabelian 2-dim algebra by the
    dual of its regular bimodule; basis (e1, e2, e1*, e2*)."""
    base = dend2_nonabelian()
    return semidirect(base, dual_regular_rep(base))


def skew_solution4(t=1) -> Tensor2:
    """The skew family t(e2 (x) e1* - e1* (x) e2) on the 4-dim extension."""
    r = Tensor2.zero(4)
    r.coeff[1][2] = q(t)
    r.coeff[2][1] = -q(t)
    return r


def basis_labels(dim: int, split: int | None = None) -> list[str]:
    """e1..en, or e1..ek, e1*..e(n-k)* when a dual split point is given."""
    if split is None:
        return [f"e{i + 1}" for i in range(dim)]
    return [f"e{i + 1}" for i in range(split)] + [f"e{i + 1}*" for i in range(dim - split)]
