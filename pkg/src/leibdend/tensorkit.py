"""Exact rational scalars, matrices, and small dense tensors.

Everything in this package computes over Q with `fractions.Fraction`; no
floating point is used anywhere.  Vectors are plain lists of Fractions.
The slot-placement product `place_product` realizes every r_{kl} * r_{mn}
style tensor product used by the higher modules.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Sequence

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class ShapeError(ValueError):
    """Dimension or shape mismatch between operands."""


class PlacementError(ValueError):
    """Invalid slot assignment in a tensor placement product."""


class PreconditionError(ValueError):
    """A documented precondition of an operation was violated."""


def q(value) -> Fraction:
    """Coerce ints, Fractions or 'p/q' strings to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def format_scalar(value: Fraction) -> str:
    # str(Fraction) already yields "p" or "p/q" with positive denominator
    return str(value)


# ---------------------------------------------------------------------------
# vectors


def zero_vec(n: int) -> list[Fraction]:
    return [ZERO] * n


def basis_vec(n: int, i: int) -> list[Fraction]:
    v = [ZERO] * n
    v[i] = ONE
    return v


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> list[Fraction]:
    return [a + b for a, b in zip(u, v)]


def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> list[Fraction]:
    return [a - b for a, b in zip(u, v)]


def vec_scale(c: Fraction, u: Sequence[Fraction]) -> list[Fraction]:
    return [c * a for a in u]


def vec_is_zero(u: Sequence[Fraction]) -> bool:
    return all(not a for a in u)


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Dense exact matrix; entries are Fractions, data is row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence]):
        self.data = [[q(x) for x in row] for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        if any(len(row) != self.cols for row in self.data):
            raise ShapeError("ragged rows")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        m = cls.__new__(cls)
        m.data = [[ZERO] * cols for _ in range(rows)]
        m.rows, m.cols = rows, cols
        return m

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        m = cls.zeros(n, n)
        for i in range(n):
            m.data[i][i] = ONE
        return m

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[Fraction]]) -> "Matrix":
        rows = len(cols[0]) if cols else 0
        return cls([[q(col[r]) for col in cols] for r in range(rows)])

    def column(self, j: int) -> list[Fraction]:
        return [row[j] for row in self.data]

    def columns(self) -> list[list[Fraction]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "Matrix":
        return Matrix([[self.data[r][c] for r in range(self.rows)] for c in range(self.cols)])

    def apply(self, vec: Sequence[Fraction]) -> list[Fraction]:
        if len(vec) != self.cols:
            raise ShapeError("matrix/vector size mismatch")
        out = []
        for row in self.data:
            s = ZERO
            for a, x in zip(row, vec):
                if a and x:
                    s += a * x
            out.append(s)
        return out

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.data])

    def scale(self, c) -> "Matrix":
        c = q(c)
        return Matrix([[c * a for a in row] for row in self.data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeError("matrix product size mismatch")
        out = Matrix.zeros(self.rows, other.cols)
        odata = other.data
        for i, row in enumerate(self.data):
            orow = out.data[i]
            for k, a in enumerate(row):
                if not a:
                    continue
                brow = odata[k]
                for j, b in enumerate(brow):
                    if b:
                        orow[j] += a * b
        return out

    def is_zero(self) -> bool:
        return all(not a for row in self.data for a in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_scalar(a) for a in row) for row in self.data)
        return f"Matrix[{body}]"

    def _same_shape(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeError("matrix shape mismatch")

    # -- elimination-based kernels ------------------------------------------

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form and the list of pivot columns."""
        m = [row[:] for row in self.data]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            pivot = next((k for k in range(r, self.rows) if m[k][c]), None)
            if pivot is None:
                continue
            m[r], m[pivot] = m[pivot], m[r]
            inv = ONE / m[r][c]
            m[r] = [inv * a for a in m[r]]
            for k in range(self.rows):
                if k != r and m[k][c]:
                    f = m[k][c]
                    m[k] = [a - f * b for a, b in zip(m[k], m[r])]
            pivots.append(c)
            r += 1
        out = Matrix.__new__(Matrix)
        out.data, out.rows, out.cols = m, self.rows, self.cols
        return out, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> Fraction:
        if not self.is_square():
            raise ShapeError("determinant requires a square matrix")
        m = [row[:] for row in self.data]
        n = self.rows
        det = ONE
        for c in range(n):
            pivot = next((k for k in range(c, n) if m[k][c]), None)
            if pivot is None:
                return ZERO
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
                det = -det
            det *= m[c][c]
            inv = ONE / m[c][c]
            for k in range(c + 1, n):
                if m[k][c]:
                    f = m[k][c] * inv
                    m[k] = [a - f * b for a, b in zip(m[k], m[c])]
        return det

    def inverse(self) -> "Matrix | None":
        """Exact inverse, or None when the matrix is singular."""
        if not self.is_square():
            raise ShapeError("inverse requires a square matrix")
        n = self.rows
        aug = Matrix([row + ident_row for row, ident_row in zip(self.data, Matrix.identity(n).data)])
        red, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            return None
        return Matrix([row[n:] for row in red.data])


def mat_inverse(m: Matrix) -> Matrix | None:
    """Exact inverse of a square matrix; None flags a singular input."""
    return m.inverse()


class LinearSolution(NamedTuple):
    solution: Matrix | None  # particular solution, None when inconsistent
    kernel: list[list[Fraction]]  # basis of the kernel of the coefficient matrix


def solve_linear(a: Matrix, b: Matrix) -> LinearSolution:
    """Solve a @ x = b exactly.

    Returns a particular solution (None when the system is inconsistent)
    together with a basis of the kernel of `a`.  `b` may have several
    columns; the solution then has matching columns.
    """
    if a.rows != b.rows:
        raise ShapeError("left and right sides need equal row counts")
    aug = Matrix([ra + rb for ra, rb in zip(a.data, b.data)])
    red, pivots = aug.rref()
    pivots_a = [c for c in pivots if c < a.cols]
    consistent = len(pivots_a) == len(pivots)

    kernel: list[list[Fraction]] = []
    free_cols = [c for c in range(a.cols) if c not in pivots_a]
    for fc in free_cols:
        v = zero_vec(a.cols)
        v[fc] = ONE
        for r, pc in enumerate(pivots_a):
            v[pc] = -red.data[r][fc]
        kernel.append(v)

    if not consistent:
        return LinearSolution(None, kernel)
    sol = Matrix.zeros(a.cols, b.cols)
    for r, pc in enumerate(pivots_a):
        for j in range(b.cols):
            sol.data[pc][j] = red.data[r][a.cols + j]
    return LinearSolution(sol, kernel)


# ---------------------------------------------------------------------------
# tensors in A (x) A and A (x) A (x) A


class Tensor2:
    """Element of A (x) A; coeff[i][j] multiplies e_i (x) e_j."""

    __slots__ = ("dim", "coeff")

    def __init__(self, coeff: Sequence[Sequence]):
        self.coeff = [[q(x) for x in row] for row in coeff]
        self.dim = len(self.coeff)
        if any(len(row) != self.dim for row in self.coeff):
            raise ShapeError("Tensor2 requires a square coefficient array")

    @classmethod
    def zero(cls, dim: int) -> "Tensor2":
        t = cls.__new__(cls)
        t.coeff = [[ZERO] * dim for _ in range(dim)]
        t.dim = dim
        return t

    @classmethod
    def basis(cls, dim: int, i: int, j: int, value=ONE) -> "Tensor2":
        t = cls.zero(dim)
        t.coeff[i][j] = q(value)
        return t

    def tau(self) -> "Tensor2":
        """Flip of the two tensor factors."""
        return Tensor2([[self.coeff[j][i] for j in range(self.dim)] for i in range(self.dim)])

    def __add__(self, other: "Tensor2") -> "Tensor2":
        self._same_dim(other)
        return Tensor2([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.coeff, other.coeff)])

    def __sub__(self, other: "Tensor2") -> "Tensor2":
        self._same_dim(other)
        return Tensor2([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.coeff, other.coeff)])

    def __neg__(self) -> "Tensor2":
        return Tensor2([[-a for a in row] for row in self.coeff])

    def scale(self, c) -> "Tensor2":
        c = q(c)
        return Tensor2([[c * a for a in row] for row in self.coeff])

    def is_zero(self) -> bool:
        return all(not a for row in self.coeff for a in row)

    def is_symmetric(self) -> bool:
        return all(
            self.coeff[i][j] == self.coeff[j][i] for i in range(self.dim) for j in range(i + 1, self.dim)
        )

    def is_skew(self) -> bool:
        return all(
            self.coeff[i][j] == -self.coeff[j][i] for i in range(self.dim) for j in range(i, self.dim)
        )

    def entries(self) -> Iterator[tuple[int, int, Fraction]]:
        """Nonzero entries as (i, j, coefficient)."""
        for i, row in enumerate(self.coeff):
            for j, a in enumerate(row):
                if a:
                    yield i, j, a

    def __eq__(self, other) -> bool:
        return isinstance(other, Tensor2) and self.dim == other.dim and self.coeff == other.coeff

    def __repr__(self) -> str:
        terms = [f"{format_scalar(a)}*e{i + 1}(x)e{j + 1}" for i, j, a in self.entries()]
        return "Tensor2<" + (" + ".join(terms) if terms else "0") + ">"

    def _same_dim(self, other: "Tensor2") -> None:
        if self.dim != other.dim:
            raise ShapeError("Tensor2 dimension mismatch")


class Tensor3:
    """Element of A (x) A (x) A; coeff[i][j][k] multiplies e_i (x) e_j (x) e_k."""

    __slots__ = ("dim", "coeff")

    def __init__(self, coeff: Sequence[Sequence[Sequence]]):
        self.coeff = [[[q(x) for x in row] for row in plane] for plane in coeff]
        self.dim = len(self.coeff)

    @classmethod
    def zero(cls, dim: int) -> "Tensor3":
        t = cls.__new__(cls)
        t.coeff = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        t.dim = dim
        return t

    def __add__(self, other: "Tensor3") -> "Tensor3":
        self._same_dim(other)
        out = Tensor3.zero(self.dim)
        for i in range(self.dim):
            for j in range(self.dim):
                out.coeff[i][j] = [a + b for a, b in zip(self.coeff[i][j], other.coeff[i][j])]
        return out

    def __sub__(self, other: "Tensor3") -> "Tensor3":
        self._same_dim(other)
        out = Tensor3.zero(self.dim)
        for i in range(self.dim):
            for j in range(self.dim):
                out.coeff[i][j] = [a - b for a, b in zip(self.coeff[i][j], other.coeff[i][j])]
        return out

    def __neg__(self) -> "Tensor3":
        out = Tensor3.zero(self.dim)
        for i in range(self.dim):
            for j in range(self.dim):
                out.coeff[i][j] = [-a for a in self.coeff[i][j]]
        return out

    def is_zero(self) -> bool:
        return all(not a for plane in self.coeff for row in plane for a in row)

    def entries(self) -> Iterator[tuple[int, int, int, Fraction]]:
        for i, plane in enumerate(self.coeff):
            for j, row in enumerate(plane):
                for k, a in enumerate(row):
                    if a:
                        yield i, j, k, a

    def sigma12(self) -> "Tensor3":
        """Swap the first two tensor slots."""
        out = Tensor3.zero(self.dim)
        for i, j, k, a in self.entries():
            out.coeff[j][i][k] = a
        return out

    def sigma13(self) -> "Tensor3":
        """Swap the outer tensor slots."""
        out = Tensor3.zero(self.dim)
        for i, j, k, a in self.entries():
            out.coeff[k][j][i] = a
        return out

    def sigma132(self) -> "Tensor3":
        """Cycle x(x)y(x)z to z(x)x(x)y."""
        out = Tensor3.zero(self.dim)
        for i, j, k, a in self.entries():
            out.coeff[k][i][j] = a
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Tensor3) and self.dim == other.dim and self.coeff == other.coeff

    def __repr__(self) -> str:
        terms = [f"{format_scalar(a)}*e{i + 1}(x)e{j + 1}(x)e{k + 1}" for i, j, k, a in self.entries()]
        return "Tensor3<" + (" + ".join(terms) if terms else "0") + ">"

    def _same_dim(self, other: "Tensor3") -> None:
        if self.dim != other.dim:
            raise ShapeError("Tensor3 dimension mismatch")


def kron_left(m: Matrix, t: Tensor2) -> Tensor2:
    """(M (x) I) applied to a Tensor2."""
    if m.cols != t.dim:
        raise ShapeError("operator/tensor dimension mismatch")
    out = Tensor2.zero(t.dim)
    for p, j, a in t.entries():
        for i in range(t.dim):
            c = m.data[i][p]
            if c:
                out.coeff[i][j] += c * a
    return out


def kron_right(m: Matrix, t: Tensor2) -> Tensor2:
    """(I (x) M) applied to a Tensor2."""
    if m.cols != t.dim:
        raise ShapeError("operator/tensor dimension mismatch")
    out = Tensor2.zero(t.dim)
    for i, p, a in t.entries():
        for j in range(t.dim):
            c = m.data[j][p]
            if c:
                out.coeff[i][j] += c * a
    return out


def place_product(op, r: Tensor2, s: Tensor2, r_slots: tuple[int, int], s_slots: tuple[int, int]) -> Tensor3:
    """Slot-placement product of two Tensor2 operands into a Tensor3.

    Each operand drops its first tensor factor into the first named slot
    and its second factor into the second named slot; the one slot the two
    placements share receives (entry of r) op (entry of s), in that order.
    `op` is any bilinear operation exposing `dim` and `basis_product(i, j)`.
    Reversed subscripts are expressed by the slot pairs themselves, e.g.
    tau(r) placed in slots (1, 2) is the same as r placed in slots (2, 1).
    """
    for slots in (r_slots, s_slots):
        if len(slots) != 2 or any(x not in (1, 2, 3) for x in slots) or slots[0] == slots[1]:
            raise PlacementError(f"bad slot pair {slots}")
    shared = set(r_slots) & set(s_slots)
    if len(shared) != 1:
        raise PlacementError(f"slot pairs {r_slots}/{s_slots} must share exactly one slot")
    if not (r.dim == s.dim == op.dim):
        raise ShapeError("operands and operation must share one dimension")

    collide = shared.pop()
    free_r = r_slots[0] if r_slots[1] == collide else r_slots[1]
    free_s = s_slots[0] if s_slots[1] == collide else s_slots[1]

    out = Tensor3.zero(r.dim)
    pos = [0, 0, 0]
    for i1, i2, a in r.entries():
        r_collide = i1 if r_slots[0] == collide else i2
        r_free = i2 if r_slots[0] == collide else i1
        for j1, j2, b in s.entries():
            s_collide = j1 if s_slots[0] == collide else j2
            s_free = j2 if s_slots[0] == collide else j1
            prod = op.basis_product(r_collide, s_collide)
            c = a * b
            pos[free_r - 1] = r_free
            pos[free_s - 1] = s_free
            for k, w in enumerate(prod):
                if w:
                    pos[collide - 1] = k
                    out.coeff[pos[0]][pos[1]][pos[2]] += c * w
    return out
