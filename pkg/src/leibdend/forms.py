"""Bilinear-form structures: symplectic and quadratic compatibility,
2-cocycles, and the correspondence between factorizable r-tensors and
quadratic Rota-Baxter structures.

Form convention: omega(e_i, e_j) = g[i][j], and the induced musical map
sends x to the functional y -> omega(x, y); its matrix is g transposed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .tensorkit import (
    Matrix,
    PreconditionError,
    ShapeError,
    Tensor2,
    mat_inverse,
    q,
    solve_linear,
    vec_add,
    vec_is_zero,
    vec_sub,
)
from .algebra import DendAlgebra, LeibnizAlgebra, basis_support
from .ybe import check_invariant, check_ldybe, check_rota_baxter, check_rota_baxter_leibniz, t_map, tensor_from_t_map


class BilForm:
    """A bilinear form stored by its Gram matrix."""

    __slots__ = ("dim", "g")

    def __init__(self, g: Matrix):
        if not g.is_square():
            raise ShapeError("a bilinear form needs a square Gram matrix")
        self.g = g
        self.dim = g.rows

    @classmethod
    def identity(cls, n: int) -> "BilForm":
        return cls(Matrix.identity(n))

    @classmethod
    def canonical_pairing(cls, n: int) -> "BilForm":
        """The split pairing on a 2n-dimensional space A + A*:
        omega(x + a, y + b) = <x, b> + <a, y>."""
        g = Matrix.zeros(2 * n, 2 * n)
        for i in range(n):
            g.data[i][n + i] = q(1)
            g.data[n + i][i] = q(1)
        return cls(g)

    def omega(self, u, v) -> Fraction:
        total = q(0)
        for i, a in enumerate(u):
            if not a:
                continue
            row = self.g.data[i]
            for j, b in enumerate(v):
                if b and row[j]:
                    total += a * row[j] * b
        return total

    def is_symmetric(self) -> bool:
        return self.g == self.g.transpose()

    def is_skew(self) -> bool:
        return self.g == -self.g.transpose()

    def is_nondegenerate(self) -> bool:
        return bool(self.g.det())

    def sharp(self) -> Matrix:
        """Matrix of the musical map into the dual space."""
        return self.g.transpose()

    def __eq__(self, other) -> bool:
        return isinstance(other, BilForm) and self.g == other.g

    def __repr__(self) -> str:
        return f"BilForm({self.g!r})"


def check_symplectic(l: LeibnizAlgebra, omega: BilForm) -> bool:
    """omega(z, x o y) = -omega(y, x o z) + omega(x, y o z + z o y) on all
    triples, for a symmetric nondegenerate omega."""
    if not (omega.is_symmetric() and omega.is_nondegenerate()):
        raise PreconditionError("the form must be symmetric and nondegenerate")
    return _bs_holds(l, omega)


def _bs_holds(l: LeibnizAlgebra, omega: BilForm) -> bool:
    n = l.dim
    circ = l.circ
    basis = [basis_support(n, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            cij = circ.c[i][j]
            for k in range(n):
                lhs = omega.omega(basis[k], cij)
                rhs = -omega.omega(basis[j], circ.c[i][k]) + omega.omega(
                    basis[i], vec_add(circ.c[j][k], circ.c[k][j])
                )
                if lhs != rhs:
                    return False
    return True


def dendriform_from_symplectic(l: LeibnizAlgebra, omega: BilForm) -> DendAlgebra:
    """Solve the two invariance identities for a compatible splitting.

    x < y is the vector with omega(x < y, z) = omega(x, y o z + z o y),
    x > y the one with omega(x > y, z) = -omega(y, x o z); both recovered
    through the inverse musical map.
    """
    if not check_symplectic(l, omega):
        raise PreconditionError("the form is not symplectic for this algebra")
    sharp_inv = mat_inverse(omega.sharp())
    if sharp_inv is None:
        raise PreconditionError("degenerate form")
    n = l.dim
    circ = l.circ
    basis = [basis_support(n, i) for i in range(n)]
    from .algebra import BilinearOp

    succ = BilinearOp.zero(n)
    prec = BilinearOp.zero(n)
    for i in range(n):
        for j in range(n):
            f_prec = [omega.omega(basis[i], vec_add(circ.c[j][k], circ.c[k][j])) for k in range(n)]
            f_succ = [-omega.omega(basis[j], circ.c[i][k]) for k in range(n)]
            prec.c[i][j] = sharp_inv.apply(f_prec)
            succ.c[i][j] = sharp_inv.apply(f_succ)
    out = DendAlgebra(succ, prec)
    if out.circ != circ:
        raise PreconditionError("recovered splitting does not sum back to the product")
    return out


def check_quadratic_ld(a: DendAlgebra, omega: BilForm) -> bool:
    """The two invariance identities of a quadratic splitting:

    omega(x < y, z) = omega(x, y o z + z o y)
    omega(x > y, z) = -omega(y, x o z)
    """
    if not (omega.is_symmetric() and omega.is_nondegenerate()):
        raise PreconditionError("the form must be symmetric and nondegenerate")
    n = a.dim
    circ = a.circ
    basis = [basis_support(n, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            pij = a.prec.c[i][j]
            sij = a.succ.c[i][j]
            for k in range(n):
                if omega.omega(pij, basis[k]) != omega.omega(basis[i], vec_add(circ.c[j][k], circ.c[k][j])):
                    return False
                if omega.omega(sij, basis[k]) != -omega.omega(basis[j], circ.c[i][k]):
                    return False
    return True


def check_2cocycle(a: DendAlgebra, omega: BilForm) -> bool:
    """omega(x o y, z) = omega(x, y > z + z < y) - omega(y, x > z) for a
    skew-symmetric omega (degenerate forms allowed)."""
    if not omega.is_skew():
        raise PreconditionError("a 2-cocycle must be skew-symmetric")
    n = a.dim
    basis = [basis_support(n, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            cij = a.circ.c[i][j]
            for k in range(n):
                lhs = omega.omega(cij, basis[k])
                rhs = omega.omega(basis[i], vec_add(a.succ.c[j][k], a.prec.c[k][j])) - omega.omega(
                    basis[j], a.succ.c[i][k]
                )
                if lhs != rhs:
                    return False
    return True


# ---------------------------------------------------------------------------
# quadratic Rota-Baxter structures and the factorizable correspondence


@dataclass
class QuadraticRB:
    """A splitting with a compatible operator P and quadratic form of a
    common weight."""

    alg: DendAlgebra
    p: Matrix
    omega: BilForm
    weight: Fraction

    def __post_init__(self):
        self.weight = q(self.weight)
        if self.p.rows != self.alg.dim or not self.p.is_square() or self.omega.dim != self.alg.dim:
            raise ShapeError("operator and form must match the algebra dimension")


def check_quadratic_rb(qrb: QuadraticRB) -> bool:
    """Quadratic splitting + weighted Rota-Baxter operator + the pairing
    condition omega(Px, y) + omega(x, Py) + weight*omega(x, y) = 0."""
    if not check_quadratic_ld(qrb.alg, qrb.omega):
        return False
    if not check_rota_baxter(qrb.alg, qrb.p, qrb.weight):
        return False
    return _pairing_condition(qrb.p, qrb.omega, qrb.weight)


def _pairing_condition(p: Matrix, omega: BilForm, weight: Fraction) -> bool:
    g = omega.g
    return (p.transpose() @ g + g @ p + g.scale(weight)).is_zero()


def check_rb_symplectic(l: LeibnizAlgebra, p: Matrix, omega: BilForm, weight) -> bool:
    """Companion predicate on the associated one-operation side."""
    lam = q(weight)
    if not check_symplectic(l, omega):
        return False
    if not check_rota_baxter_leibniz(l.circ, p, lam):
        return False
    return _pairing_condition(p, omega, lam)


def omega_sharp(omega: BilForm) -> tuple[Matrix, Tensor2]:
    """The musical matrix together with the tensor r_omega whose operator
    form is its inverse.  In coordinates coeff(r_omega) = g^{-1}."""
    if not omega.is_nondegenerate():
        raise PreconditionError("the form must be nondegenerate")
    g_inv = mat_inverse(omega.g)
    return omega.sharp(), Tensor2(g_inv.data)


def is_factorizable(a: DendAlgebra, r: Tensor2) -> bool:
    """Solution with invariant symmetric part and invertible symmetric-part
    operator (checked locally to keep this module self-contained)."""
    s = r + r.tau()
    return (
        check_ldybe(a, r)
        and check_invariant(a, s)
        and mat_inverse(t_map(s)) is not None
    )


def rb_from_factorizable(a: DendAlgebra, r: Tensor2, weight) -> QuadraticRB:
    """Package a factorizable r as a quadratic Rota-Baxter structure:

    omega(x, y) = -weight * <T_{r+tau(r)}^{-1}(x), y>,   P = T_r o sharp.
    """
    lam = q(weight)
    if not lam:
        raise PreconditionError("the weight must be nonzero")
    if not is_factorizable(a, r):
        raise PreconditionError("r is not factorizable on this algebra")
    s = r + r.tau()
    ts_inv = mat_inverse(t_map(s))
    g = ts_inv.transpose().scale(-lam)
    omega = BilForm(g)
    p = t_map(r) @ omega.sharp()
    out = QuadraticRB(alg=a, p=p, omega=omega, weight=lam)
    if not check_quadratic_rb(out):
        raise PreconditionError("constructed structure failed verification")
    # symmetric part identity: r + tau(r) = -weight * r_omega
    _, r_omega = omega_sharp(omega)
    if s != r_omega.scale(-lam):
        raise PreconditionError("symmetric-part identity failed")
    return out


def factorizable_from_rb(qrb: QuadraticRB) -> Tensor2:
    """Recover the factorizable tensor via T_r = P o sharp^{-1}."""
    if not qrb.weight:
        raise PreconditionError("the weight must be nonzero")
    if not check_quadratic_rb(qrb):
        raise PreconditionError("input is not a valid quadratic Rota-Baxter structure")
    sharp_inv = mat_inverse(qrb.omega.sharp())
    if sharp_inv is None:
        raise PreconditionError("degenerate form")
    r = tensor_from_t_map(qrb.p @ sharp_inv)
    if not is_factorizable(qrb.alg, r):
        raise PreconditionError("recovered tensor failed the factorizability check")
    return r


# ---------------------------------------------------------------------------
# exact searches for example forms (linear solves, never sampling)


def _form_space(dim: int, symmetric: bool, residual_fn) -> list[BilForm]:
    """Kernel of a linear condition on (skew-)symmetric Gram matrices.

    residual_fn maps a BilForm to a flat residual list; it must be linear
    in the form.
    """
    if symmetric:
        coords = [(i, j) for i in range(dim) for j in range(i, dim)]
    else:
        coords = [(i, j) for i in range(dim) for j in range(i + 1, dim)]

    def gram(values) -> BilForm:
        g = Matrix.zeros(dim, dim)
        for (i, j), v in zip(coords, values):
            g.data[i][j] = v
            g.data[j][i] = v if symmetric else -v
        return BilForm(g)

    columns = []
    for idx in range(len(coords)):
        values = [q(0)] * len(coords)
        values[idx] = q(1)
        columns.append(residual_fn(gram(values)))
    if not columns:
        return []
    mat = Matrix.from_columns(columns)
    kernel = solve_linear(mat, Matrix.zeros(mat.rows, 1)).kernel
    return [gram(v) for v in kernel]


def symplectic_space(l: LeibnizAlgebra) -> list[BilForm]:
    """Basis of symmetric forms satisfying the symplectic identity
    (nondegeneracy not imposed; it is not linear)."""
    n = l.dim
    circ = l.circ
    basis = [basis_support(n, i) for i in range(n)]

    def residual(omega: BilForm) -> list[Fraction]:
        out = []
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    out.append(
                        omega.omega(basis[k], circ.c[i][j])
                        + omega.omega(basis[j], circ.c[i][k])
                        - omega.omega(basis[i], vec_add(circ.c[j][k], circ.c[k][j]))
                    )
        return out

    return _form_space(n, True, residual)


def cocycle_space(a: DendAlgebra) -> list[BilForm]:
    """Basis of skew forms satisfying the 2-cocycle identity."""
    n = a.dim
    basis = [basis_support(n, i) for i in range(n)]

    def residual(omega: BilForm) -> list[Fraction]:
        out = []
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    out.append(
                        omega.omega(a.circ.c[i][j], basis[k])
                        - omega.omega(basis[i], vec_add(a.succ.c[j][k], a.prec.c[k][j]))
                        + omega.omega(basis[j], a.succ.c[i][k])
                    )
        return out

    return _form_space(n, False, residual)


def find_nondegenerate(space: list[BilForm], bound: int = 2) -> BilForm | None:
    """Scan small rational combinations of a form-space basis for a
    nondegenerate element; None when the scan finds none."""
    if not space:
        return None
    dim = space[0].dim
    for combo in itertools.product(range(-bound, bound + 1), repeat=len(space)):
        if all(c == 0 for c in combo):
            continue
        g = Matrix.zeros(dim, dim)
        for c, form in zip(combo, space):
            if c:
                g = g + form.g.scale(c)
        candidate = BilForm(g)
        if candidate.is_nondegenerate():
            return candidate
    return None


def all_degenerate(space: list[BilForm]) -> bool:
    """Exactly decide whether every form in the span is degenerate.

    det is a polynomial of degree <= dim in each basis coordinate, so it
    vanishes identically iff it vanishes on a grid with dim+1 points per
    coordinate.
    """
    if not space:
        return True
    dim = space[0].dim
    grid = range(dim + 1)
    for combo in itertools.product(grid, repeat=len(space)):
        g = Matrix.zeros(dim, dim)
        for c, form in zip(combo, space):
            if c:
                g = g + form.g.scale(c)
        if g.det():
            return False
    return True
