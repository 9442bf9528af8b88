"""Four-operation splittings (compass arrows), their horizontal/vertical
projections, the bimodule equivalence, tensor products, and the structures
induced by intertwining operators and nondegenerate 2-cocycles.

Arrow naming: se, ne, sw, nw stand for the four operations usually drawn
as south-east, north-east, south-west and north-west arrows.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .tensorkit import Matrix, PreconditionError, ShapeError, mat_inverse, vec_add, vec_is_zero, vec_sub
from .algebra import BilinearOp, DendAlgebra, Violation, basis_support, check_hom
from .rep import DendRep, check_dend_rep
from .ybe import OOperator, check_o_operator
from .forms import BilForm, check_2cocycle


class QuadriAlgebra:
    """Four binary operations refining a two-operation splitting."""

    def __init__(self, se: BilinearOp, ne: BilinearOp, sw: BilinearOp, nw: BilinearOp):
        dims = {se.dim, ne.dim, sw.dim, nw.dim}
        if len(dims) != 1:
            raise ShapeError("the four operations must share a dimension")
        self.se, self.ne, self.sw, self.nw = se, ne, sw, nw
        self.dim = se.dim

    @classmethod
    def zero(cls, dim: int) -> "QuadriAlgebra":
        z = BilinearOp.zero(dim)
        return cls(z, BilinearOp.zero(dim), BilinearOp.zero(dim), BilinearOp.zero(dim))

    @cached_property
    def succ(self) -> BilinearOp:
        return self.ne + self.se

    @cached_property
    def prec(self) -> BilinearOp:
        return self.nw + self.sw

    @cached_property
    def vee(self) -> BilinearOp:
        return self.se + self.sw

    @cached_property
    def wedge(self) -> BilinearOp:
        return self.ne + self.nw

    @cached_property
    def circ(self) -> BilinearOp:
        return self.succ + self.prec

    def is_valid(self) -> bool:
        return not check_quadri(self)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QuadriAlgebra)
            and self.se == other.se
            and self.ne == other.ne
            and self.sw == other.sw
            and self.nw == other.nw
        )


def check_quadri(quad: QuadriAlgebra) -> list[Violation]:
    """The nine defining identities on all basis triples."""
    n = quad.dim
    se, ne, sw, nw = quad.se, quad.ne, quad.sw, quad.nw
    succ, prec = quad.succ, quad.prec
    vee, wedge, circ = quad.vee, quad.wedge, quad.circ
    out = []
    basis = [basis_support(n, i) for i in range(n)]
    for i in range(n):
        x = basis[i]
        for j in range(n):
            y = basis[j]
            for k in range(n):
                z = basis[k]
                checks = (
                    # (x o y) se z = x se (y se z) - y se (x se z)
                    ("Lq1", vec_sub(
                        se.mul(circ.c[i][j], z),
                        vec_sub(se.mul(x, se.c[j][k]), se.mul(y, se.c[i][k])),
                    )),
                    # (x v y) ne z = x se (y ne z) - y ne (x > z)
                    ("Lq2", vec_sub(
                        ne.mul(vee.c[i][j], z),
                        vec_sub(se.mul(x, ne.c[j][k]), ne.mul(y, succ.c[i][k])),
                    )),
                    # (x ^ y) ne z = x ne (y > z) - y se (x ne z)
                    ("Lq3", vec_sub(
                        ne.mul(wedge.c[i][j], z),
                        vec_sub(ne.mul(x, succ.c[j][k]), se.mul(y, ne.c[i][k])),
                    )),
                    # (x > y) sw z + y sw (x v z) = x se (y sw z)
                    ("Lq4", vec_sub(
                        vec_add(sw.mul(succ.c[i][j], z), sw.mul(y, vee.c[i][k])),
                        se.mul(x, sw.c[j][k]),
                    )),
                    # (x se y) nw z + y nw (x o z) = x se (y nw z)
                    ("Lq5", vec_sub(
                        vec_add(nw.mul(se.c[i][j], z), nw.mul(y, circ.c[i][k])),
                        se.mul(x, nw.c[j][k]),
                    )),
                    # (y ne x) nw z + x sw (y ^ z) = x ne (y < z)
                    ("Lq6", vec_sub(
                        vec_add(nw.mul(ne.c[j][i], z), sw.mul(x, wedge.c[j][k])),
                        ne.mul(x, prec.c[j][k]),
                    )),
                    # x sw (y v z) = (x < y) sw z + y se (x sw z)
                    ("Lq7", vec_sub(
                        sw.mul(x, vee.c[j][k]),
                        vec_add(sw.mul(prec.c[i][j], z), se.mul(y, sw.c[i][k])),
                    )),
                    # x sw (y ^ z) = (x sw y) nw z + y ne (x < z)
                    ("Lq8", vec_sub(
                        sw.mul(x, wedge.c[j][k]),
                        vec_add(nw.mul(sw.c[i][j], z), ne.mul(y, prec.c[i][k])),
                    )),
                    # x nw (y o z) = (x nw y) nw z + y se (x nw z)
                    ("Lq9", vec_sub(
                        nw.mul(x, circ.c[j][k]),
                        vec_add(nw.mul(nw.c[i][j], z), se.mul(y, nw.c[i][k])),
                    )),
                )
                for name, res in checks:
                    if not vec_is_zero(res):
                        out.append(Violation(name, (i, j, k), tuple(res)))
    return out


def horizontal(quad: QuadriAlgebra) -> DendAlgebra:
    """The splitting (ne + se, nw + sw)."""
    return DendAlgebra(quad.succ, quad.prec)


def vertical(quad: QuadriAlgebra) -> DendAlgebra:
    """The splitting (se + sw, ne + nw)."""
    return DendAlgebra(quad.vee, quad.wedge)


@dataclass
class Qq1Report:
    """The three equivalent validity readings of a four-operation splitting."""

    quadri_valid: bool
    horizontal_ok: bool
    vertical_ok: bool

    @property
    def agree(self) -> bool:
        return self.quadri_valid == self.horizontal_ok == self.vertical_ok

    def __bool__(self) -> bool:
        return self.agree


def check_qq1(quad: QuadriAlgebra) -> Qq1Report:
    """Compare: the nine identities; the horizontal splitting plus the
    (L_se, R_ne, L_sw, R_nw) bimodule; the vertical splitting plus the
    (L_se, R_sw, L_ne, R_nw) bimodule."""
    n = quad.dim
    quadri_valid = quad.is_valid()

    hor = horizontal(quad)
    hor_rep = DendRep(
        alg=hor,
        mdim=n,
        lsucc=[quad.se.left_matrix(i) for i in range(n)],
        rsucc=[quad.ne.right_matrix(i) for i in range(n)],
        lprec=[quad.sw.left_matrix(i) for i in range(n)],
        rprec=[quad.nw.right_matrix(i) for i in range(n)],
    )
    horizontal_ok = hor.is_valid() and not check_dend_rep(hor_rep)

    ver = vertical(quad)
    ver_rep = DendRep(
        alg=ver,
        mdim=n,
        lsucc=[quad.se.left_matrix(i) for i in range(n)],
        rsucc=[quad.sw.right_matrix(i) for i in range(n)],
        lprec=[quad.ne.left_matrix(i) for i in range(n)],
        rprec=[quad.nw.right_matrix(i) for i in range(n)],
    )
    vertical_ok = ver.is_valid() and not check_dend_rep(ver_rep)

    return Qq1Report(quadri_valid, horizontal_ok, vertical_ok)


def quadri_tensor(a: DendAlgebra, b: DendAlgebra) -> QuadriAlgebra:
    """Four operations on A (x) B from the two splittings:

    (x(x)a) nw (y(x)b) = (x <1 y)(x)(a <2 b)      sw: (x <1 y)(x)(a >2 b)
    (x(x)a) ne (y(x)b) = (x >1 y)(x)(a <2 b)      se: (x >1 y)(x)(a >2 b)

    Basis index of x_i (x) a_j is i * dim(B) + j.
    """
    n, m = a.dim, b.dim
    dim = n * m

    def build(op1: BilinearOp, op2: BilinearOp) -> BilinearOp:
        out = BilinearOp.zero(dim)
        for i1 in range(n):
            for j1 in range(m):
                row_idx = i1 * m + j1
                for i2 in range(n):
                    v1 = op1.c[i1][i2]
                    for j2 in range(m):
                        v2 = op2.c[j1][j2]
                        target = out.c[row_idx][i2 * m + j2]
                        for k1, c1 in enumerate(v1):
                            if not c1:
                                continue
                            for k2, c2 in enumerate(v2):
                                if c2:
                                    target[k1 * m + k2] += c1 * c2
        return out

    return QuadriAlgebra(
        se=build(a.succ, b.succ),
        ne=build(a.succ, b.prec),
        sw=build(a.prec, b.succ),
        nw=build(a.prec, b.prec),
    )


def quadri_from_o_operator(o: OOperator) -> QuadriAlgebra:
    """Four operations on the module of a weight-0 operator:

    u se v = l>(Tu) v     u ne v = r>(Tv) u
    u sw v = l<(Tu) v     u nw v = r<(Tv) u
    """
    if o.weight:
        raise PreconditionError("only weight-0 operators induce this structure")
    if not check_o_operator(o):
        raise PreconditionError("the operator condition fails")
    m = o.rep.mdim
    cols = o.t.columns()
    se = BilinearOp.zero(m)
    ne = BilinearOp.zero(m)
    sw = BilinearOp.zero(m)
    nw = BilinearOp.zero(m)
    for i in range(m):
        ls = _combine_action(o.rep.lsucc, cols[i])
        lp = _combine_action(o.rep.lprec, cols[i])
        rs = _combine_action(o.rep.rsucc, cols[i])
        rp = _combine_action(o.rep.rprec, cols[i])
        for j in range(m):
            se.c[i][j] = ls.column(j)
            sw.c[i][j] = lp.column(j)
            ne.c[j][i] = rs.column(j)
            nw.c[j][i] = rp.column(j)
    return QuadriAlgebra(se, ne, sw, nw)


def _combine_action(mats: list[Matrix], x) -> Matrix:
    out = Matrix.zeros(mats[0].rows, mats[0].cols)
    for p, a in enumerate(x):
        if a:
            out = out + mats[p].scale(a)
    return out


def subalgebra_image_quadri(o: OOperator) -> QuadriAlgebra:
    """Transported structure on the image of an injective weight-0 operator.

    In the basis given by the operator's columns the transported structure
    constants coincide with the module ones, so injectivity is the only
    extra requirement.
    """
    if o.t.rank() != o.t.cols:
        raise PreconditionError("transport needs an injective operator")
    return quadri_from_o_operator(o)


def quadri_from_cocycle(a: DendAlgebra, omega: BilForm) -> QuadriAlgebra:
    """Compass structure induced by a nondegenerate 2-cocycle.

    The cocycle induces an invertible intertwiner from the dual space, the
    operator builds a compass structure there, and the structure is pulled
    back along the intertwiner; its horizontal splitting is the input one.
    """
    if not omega.is_skew() or not omega.is_nondegenerate():
        raise PreconditionError("the form must be skew-symmetric and nondegenerate")
    if not check_2cocycle(a, omega):
        raise PreconditionError("the form is not a 2-cocycle for this splitting")
    n = a.dim
    # omega(T(f_j), e_k) = delta_jk  <=>  T^t g = I
    t = mat_inverse(omega.g.transpose())
    t_inv = mat_inverse(t)
    from .rep import dual_regular_rep

    o = OOperator(t=t, host=a, rep=dual_regular_rep(a))
    dual_quad = quadri_from_o_operator(o)  # verifies the operator condition
    se = BilinearOp.zero(n)
    ne = BilinearOp.zero(n)
    sw = BilinearOp.zero(n)
    nw = BilinearOp.zero(n)
    basis = [basis_support(n, i) for i in range(n)]
    for i in range(n):
        ai = t_inv.apply(basis[i])
        for j in range(n):
            bj = t_inv.apply(basis[j])
            se.c[i][j] = t.apply(dual_quad.se.mul(ai, bj))
            ne.c[i][j] = t.apply(dual_quad.ne.mul(ai, bj))
            sw.c[i][j] = t.apply(dual_quad.sw.mul(ai, bj))
            nw.c[i][j] = t.apply(dual_quad.nw.mul(ai, bj))
    out = QuadriAlgebra(se, ne, sw, nw)
    if horizontal(out) != DendAlgebra(a.succ, a.prec):
        raise PreconditionError("transported structure lost the original splitting")
    return out


def check_quadri_invariance(quad: QuadriAlgebra, omega: BilForm) -> bool:
    """The four compass invariance identities:

    omega(x se y, z) = -omega(y, x o z)     omega(x sw y, z) = omega(y, x < z)
    omega(x ne y, z) = -omega(x, z (.) y)   omega(x nw y, z) = omega(x, y * z)
    """
    n = quad.dim
    hor = horizontal(quad)
    odot, star, circ, prec = hor.odot, hor.star, hor.circ, hor.prec
    basis = [basis_support(n, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if omega.omega(quad.se.c[i][j], basis[k]) != -omega.omega(basis[j], circ.c[i][k]):
                    return False
                if omega.omega(quad.sw.c[i][j], basis[k]) != omega.omega(basis[j], prec.c[i][k]):
                    return False
                if omega.omega(quad.ne.c[i][j], basis[k]) != -omega.omega(basis[i], odot.c[k][j]):
                    return False
                if omega.omega(quad.nw.c[i][j], basis[k]) != omega.omega(basis[i], star.c[j][k]):
                    return False
    return True


def invariant_form_space(quad: QuadriAlgebra) -> list[BilForm]:
    """Basis of skew forms satisfying the compass invariance identities
    (an exact linear solve; nondegeneracy is not imposed)."""
    from .forms import _form_space

    n = quad.dim
    hor = horizontal(quad)
    odot, star, circ, prec = hor.odot, hor.star, hor.circ, hor.prec
    basis = [basis_support(n, i) for i in range(n)]

    def residual(omega: BilForm):
        out = []
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    out.append(omega.omega(quad.se.c[i][j], basis[k]) + omega.omega(basis[j], circ.c[i][k]))
                    out.append(omega.omega(quad.sw.c[i][j], basis[k]) - omega.omega(basis[j], prec.c[i][k]))
                    out.append(omega.omega(quad.ne.c[i][j], basis[k]) + omega.omega(basis[i], odot.c[k][j]))
                    out.append(omega.omega(quad.nw.c[i][j], basis[k]) - omega.omega(basis[i], star.c[j][k]))
        return out

    return _form_space(n, False, residual)


def hom_from_horizontal(o: OOperator) -> list[Violation]:
    """Report for the operator as a map from the induced horizontal
    splitting into the host algebra."""
    quad = quadri_from_o_operator(o)
    return check_hom(o.t, horizontal(quad), o.host)
