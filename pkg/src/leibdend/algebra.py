"""Core algebra types and the Leibniz / Leibniz-dendriform axiom checkers.

Structure-constant orientation, used everywhere in this package:

    c[i][j][k]  means  e_i . e_j = sum_k c[i][j][k] e_k

Axioms are verified on all basis triples, which is exhaustive by
multilinearity.  Checkers return full residual vectors, not just flags.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .tensorkit import (
    Matrix,
    PreconditionError,
    ShapeError,
    ZERO,
    q,
    solve_linear,
    vec_add,
    vec_is_zero,
    vec_sub,
    zero_vec,
)


@dataclass(frozen=True)
class Violation:
    """One failed identity instance: which law, at which basis indices."""

    identity: str
    indices: tuple[int, ...]
    residual: tuple[Fraction, ...]


class BilinearOp:
    """One binary operation as a rank-3 structure-constant tensor."""

    __slots__ = ("dim", "c", "_left", "_right")

    def __init__(self, c: Sequence[Sequence[Sequence]]):
        self.c = [[[q(x) for x in row] for row in plane] for plane in c]
        self.dim = len(self.c)
        if any(len(plane) != self.dim or any(len(row) != self.dim for row in plane) for plane in self.c):
            raise ShapeError("structure constants must form an n*n*n array")
        self._left: list[Matrix | None] = [None] * self.dim
        self._right: list[Matrix | None] = [None] * self.dim

    @classmethod
    def zero(cls, dim: int) -> "BilinearOp":
        return cls([[[ZERO] * dim for _ in range(dim)] for _ in range(dim)])

    @classmethod
    def from_entries(cls, dim: int, entries: dict[tuple[int, int, int], object]) -> "BilinearOp":
        """Build from a sparse {(i, j, k): coefficient} description."""
        op = cls.zero(dim)
        for (i, j, k), v in entries.items():
            op.c[i][j][k] = q(v)
        return op

    def basis_product(self, i: int, j: int) -> list[Fraction]:
        return self.c[i][j]

    def mul(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> list[Fraction]:
        out = zero_vec(self.dim)
        for i, a in enumerate(u):
            if not a:
                continue
            row = self.c[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, w in enumerate(row[j]):
                    if w:
                        out[k] += ab * w
        return out

    def left_matrix(self, i: int) -> Matrix:
        """Matrix of left multiplication by e_i (columns are images)."""
        cached = self._left[i]
        if cached is None:
            cached = Matrix([[self.c[i][j][k] for j in range(self.dim)] for k in range(self.dim)])
            self._left[i] = cached
        return cached

    def right_matrix(self, i: int) -> Matrix:
        """Matrix of right multiplication by e_i."""
        cached = self._right[i]
        if cached is None:
            cached = Matrix([[self.c[j][i][k] for j in range(self.dim)] for k in range(self.dim)])
            self._right[i] = cached
        return cached

    def left_of(self, x: Sequence[Fraction]) -> Matrix:
        out = Matrix.zeros(self.dim, self.dim)
        for i, a in enumerate(x):
            if a:
                out = out + self.left_matrix(i).scale(a)
        return out

    def __add__(self, other: "BilinearOp") -> "BilinearOp":
        if self.dim != other.dim:
            raise ShapeError("operation dimension mismatch")
        return BilinearOp(
            [
                [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(p1, p2)]
                for p1, p2 in zip(self.c, other.c)
            ]
        )

    def __neg__(self) -> "BilinearOp":
        return BilinearOp([[[-a for a in row] for row in plane] for plane in self.c])

    def __sub__(self, other: "BilinearOp") -> "BilinearOp":
        return self + (-other)

    def scale(self, factor) -> "BilinearOp":
        f = q(factor)
        return BilinearOp([[[f * a for a in row] for row in plane] for plane in self.c])

    def flip(self) -> "BilinearOp":
        """Opposite operation (x, y) -> y . x."""
        return BilinearOp(
            [[self.c[j][i] for j in range(self.dim)] for i in range(self.dim)]
        )

    def is_zero(self) -> bool:
        return all(not a for plane in self.c for row in plane for a in row)

    def __eq__(self, other) -> bool:
        return isinstance(other, BilinearOp) and self.dim == other.dim and self.c == other.c


class LeibnizAlgebra:
    """A vector space with one operation whose left multiplications derive."""

    def __init__(self, circ: BilinearOp):
        self.circ = circ
        self.dim = circ.dim

    def is_valid(self) -> bool:
        return not check_leibniz(self.circ)

    def __eq__(self, other) -> bool:
        return isinstance(other, LeibnizAlgebra) and self.circ == other.circ


class DendAlgebra:
    """A pair of operations splitting a Leibniz product."""

    def __init__(self, succ: BilinearOp, prec: BilinearOp):
        if succ.dim != prec.dim:
            raise ShapeError("the two operations must share a dimension")
        self.succ = succ
        self.prec = prec
        self.dim = succ.dim

    @cached_property
    def circ(self) -> BilinearOp:
        # x o y = x > y + x < y
        return self.succ + self.prec

    @cached_property
    def odot(self) -> BilinearOp:
        # x (.) y = x > y + y < x
        return self.succ + self.prec.flip()

    @cached_property
    def star(self) -> BilinearOp:
        # x * y = x o y + y o x
        return self.circ + self.circ.flip()

    def leibniz(self) -> LeibnizAlgebra:
        return LeibnizAlgebra(self.circ)

    def is_valid(self) -> bool:
        return not check_ld(self)

    def __eq__(self, other) -> bool:
        return isinstance(other, DendAlgebra) and self.succ == other.succ and self.prec == other.prec


def check_leibniz(op: BilinearOp) -> list[Violation]:
    """x o (y o z) = (x o y) o z + y o (x o z) on every basis triple."""
    n = op.dim
    out = []
    for i in range(n):
        for j in range(n):
            ij = op.c[i][j]
            for k in range(n):
                lhs = op.mul(basis_support(n, i), op.c[j][k])
                rhs = vec_add(op.mul(ij, basis_support(n, k)), op.mul(basis_support(n, j), op.c[i][k]))
                res = vec_sub(lhs, rhs)
                if not vec_is_zero(res):
                    out.append(Violation("leibniz", (i, j, k), tuple(res)))
    return out


def basis_support(n: int, i: int) -> list[Fraction]:
    # tiny helper kept local to the checkers; avoids importing basis_vec everywhere
    v = zero_vec(n)
    v[i] = Fraction(1)
    return v


def check_ld(a: DendAlgebra) -> list[Violation]:
    """The three splitting identities on every basis triple.

    Ld1: (x o y) > z = x > (y > z) - y > (x > z)
    Ld2: y < (x o z) + (x > y) < z = x > (y < z)
    Ld3: x < (y o z) = (x < y) < z + y > (x < z)
    """
    n = a.dim
    succ, prec, circ = a.succ, a.prec, a.circ
    out = []
    for i in range(n):
        ei = basis_support(n, i)
        for j in range(n):
            ej = basis_support(n, j)
            circ_ij = circ.c[i][j]
            succ_ij = succ.c[i][j]
            for k in range(n):
                ek = basis_support(n, k)
                res1 = vec_sub(
                    succ.mul(circ_ij, ek),
                    vec_sub(succ.mul(ei, succ.c[j][k]), succ.mul(ej, succ.c[i][k])),
                )
                if not vec_is_zero(res1):
                    out.append(Violation("Ld1", (i, j, k), tuple(res1)))
                res2 = vec_sub(
                    vec_add(prec.mul(ej, circ.c[i][k]), prec.mul(succ_ij, ek)),
                    succ.mul(ei, prec.c[j][k]),
                )
                if not vec_is_zero(res2):
                    out.append(Violation("Ld2", (i, j, k), tuple(res2)))
                res3 = vec_sub(
                    prec.mul(ei, circ.c[j][k]),
                    vec_add(prec.mul(prec.c[i][j], ek), succ.mul(ej, prec.c[i][k])),
                )
                if not vec_is_zero(res3):
                    out.append(Violation("Ld3", (i, j, k), tuple(res3)))
    return out


def derive_ops(a: DendAlgebra) -> tuple[BilinearOp, BilinearOp, BilinearOp]:
    """The three derived operations (o, (.), *) of a splitting."""
    return a.circ, a.odot, a.star


def check_hom(f: Matrix, src: DendAlgebra, dst: DendAlgebra) -> list[Violation]:
    """f(x > y) = f(x) > f(y) and f(x < y) = f(x) < f(y) on basis pairs."""
    if f.cols != src.dim or f.rows != dst.dim:
        raise ShapeError("map shape does not match source/target dimensions")
    out = []
    cols = f.columns()
    for i in range(src.dim):
        for j in range(src.dim):
            for name, s_op, d_op in (("hom-succ", src.succ, dst.succ), ("hom-prec", src.prec, dst.prec)):
                res = vec_sub(f.apply(s_op.c[i][j]), d_op.mul(cols[i], cols[j]))
                if not vec_is_zero(res):
                    out.append(Violation(name, (i, j), tuple(res)))
    return out


def check_hom_leibniz(f: Matrix, src: LeibnizAlgebra, dst: LeibnizAlgebra) -> list[Violation]:
    """Leibniz-only variant of the homomorphism check."""
    if f.cols != src.dim or f.rows != dst.dim:
        raise ShapeError("map shape does not match source/target dimensions")
    out = []
    cols = f.columns()
    for i in range(src.dim):
        for j in range(src.dim):
            res = vec_sub(f.apply(src.circ.c[i][j]), dst.circ.mul(cols[i], cols[j]))
            if not vec_is_zero(res):
                out.append(Violation("hom-circ", (i, j), tuple(res)))
    return out


def in_span(span: Matrix, vec: Sequence[Fraction]) -> bool:
    return solve_linear(span, Matrix([[x] for x in vec])).solution is not None


def check_subalgebra(a: DendAlgebra, span: Matrix) -> bool:
    """True iff the column span is closed under both operations."""
    if span.rows != a.dim:
        raise ShapeError("span lives in the wrong space")
    if span.cols and span.rank() != span.cols:
        raise PreconditionError("span columns must be linearly independent")
    cols = span.columns()
    for u in cols:
        for v in cols:
            if not in_span(span, a.succ.mul(u, v)):
                return False
            if not in_span(span, a.prec.mul(u, v)):
                return False
    return True


def check_subalgebra_leibniz(l: LeibnizAlgebra, span: Matrix) -> bool:
    if span.rows != l.dim:
        raise ShapeError("span lives in the wrong space")
    if span.cols and span.rank() != span.cols:
        raise PreconditionError("span columns must be linearly independent")
    cols = span.columns()
    return all(in_span(span, l.circ.mul(u, v)) for u in cols for v in cols)


def direct_sum(a: DendAlgebra, b: DendAlgebra) -> DendAlgebra:
    """Componentwise operations on the direct sum of the underlying spaces."""

    def block(op1: BilinearOp, op2: BilinearOp) -> BilinearOp:
        n, m = op1.dim, op2.dim
        out = BilinearOp.zero(n + m)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    out.c[i][j][k] = op1.c[i][j][k]
        for i in range(m):
            for j in range(m):
                for k in range(m):
                    out.c[n + i][n + j][n + k] = op2.c[i][j][k]
        return out

    return DendAlgebra(block(a.succ, b.succ), block(a.prec, b.prec))


def change_basis(a: DendAlgebra, s: Matrix) -> DendAlgebra:
    """Transport the structure along an invertible matrix whose columns
    are the new basis vectors written in the old one."""
    inv = s.inverse()
    if inv is None:
        raise PreconditionError("change of basis requires an invertible matrix")
    cols = s.columns()

    def transport(op: BilinearOp) -> BilinearOp:
        out = BilinearOp.zero(a.dim)
        for i in range(a.dim):
            for j in range(a.dim):
                out.c[i][j] = inv.apply(op.mul(cols[i], cols[j]))
        return out

    return DendAlgebra(transport(a.succ), transport(a.prec))
