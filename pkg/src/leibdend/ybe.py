"""r-tensor calculus: S-tensors, the Yang-Baxter-type equation, invariance,
and the operator conditions (O-operators, Rota-Baxter operators, weighted
relative variants).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .tensorkit import (
    Matrix,
    PreconditionError,
    ShapeError,
    Tensor2,
    Tensor3,
    kron_left,
    kron_right,
    place_product,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
    q,
)
from .algebra import BilinearOp, DendAlgebra, Violation, basis_support, check_ld
from .rep import DendRep, check_dend_rep, dual_regular_rep, semidirect


def s_tensors(a: DendAlgebra, r: Tensor2) -> dict[str, Tensor3]:
    """The six obstruction tensors of a candidate r.

    S  = r23 o r13 - r12 (.) r23 - r12 > r13
    S1 = r12 (.) r13 + r13 o r23 + r12 > r23
    S2 = r12 * r13 - r12 < r23 + r13 < r23
    S3 = r23 (.) r12 + r23 > r13 - r12 o r13
    S4 = -r13 (.) r12 + r12 o r23 + r13 > r23
    S5 = r23 < r13 + r12 < r13 - r12 * r23
    """
    if r.dim != a.dim:
        raise ShapeError("r must live on the algebra's space")
    circ, odot, star = a.circ, a.odot, a.star
    succ, prec = a.succ, a.prec
    P = place_product
    return {
        "S": P(circ, r, r, (2, 3), (1, 3)) - P(odot, r, r, (1, 2), (2, 3)) - P(succ, r, r, (1, 2), (1, 3)),
        "S1": P(odot, r, r, (1, 2), (1, 3)) + P(circ, r, r, (1, 3), (2, 3)) + P(succ, r, r, (1, 2), (2, 3)),
        "S2": P(star, r, r, (1, 2), (1, 3)) - P(prec, r, r, (1, 2), (2, 3)) + P(prec, r, r, (1, 3), (2, 3)),
        "S3": P(odot, r, r, (2, 3), (1, 2)) + P(succ, r, r, (2, 3), (1, 3)) - P(circ, r, r, (1, 2), (1, 3)),
        "S4": -P(odot, r, r, (1, 3), (1, 2)) + P(circ, r, r, (1, 2), (2, 3)) + P(succ, r, r, (1, 3), (2, 3)),
        "S5": P(prec, r, r, (2, 3), (1, 3)) + P(prec, r, r, (1, 2), (1, 3)) - P(star, r, r, (1, 2), (2, 3)),
    }


def s_tensor(a: DendAlgebra, r: Tensor2) -> Tensor3:
    """Just the primary obstruction S(r)."""
    P = place_product
    return (
        P(a.circ, r, r, (2, 3), (1, 3))
        - P(a.odot, r, r, (1, 2), (2, 3))
        - P(a.succ, r, r, (1, 2), (1, 3))
    )


def check_ldybe(a: DendAlgebra, r: Tensor2) -> bool:
    """True iff S(r) vanishes."""
    return s_tensor(a, r).is_zero()


def t_map(r: Tensor2) -> Matrix:
    """The map A* -> A with <T_r(z), h> = <r, z (x) h>.

    In coordinates this is the transpose of the coefficient array, and
    t_map(tau(r)) is its transpose.
    """
    return Matrix(r.coeff).transpose()


def tensor_from_t_map(m: Matrix) -> Tensor2:
    """Inverse of t_map: recover r from its operator form."""
    if not m.is_square():
        raise ShapeError("operator form of a Tensor2 must be square")
    return Tensor2(m.transpose().data)


def coboundary_rows(a: DendAlgebra, r: Tensor2) -> tuple[list[Tensor2], list[Tensor2]]:
    """Per-basis coboundary rows:

    row_succ(x) = (L(.)(x) (x) I - I (x) R_o(x)) r
    row_prec(x) = (L*(x)  (x) I - I (x) R<(x)) tau(r)
    """
    if r.dim != a.dim:
        raise ShapeError("r must live on the algebra's space")
    tau_r = r.tau()
    succ_rows, prec_rows = [], []
    for i in range(a.dim):
        lod = a.odot.left_matrix(i)
        rc = a.circ.right_matrix(i)
        succ_rows.append(kron_left(lod, r) - kron_right(rc, r))
        lst = a.star.left_matrix(i)
        rp = a.prec.right_matrix(i)
        prec_rows.append(kron_left(lst, tau_r) - kron_right(rp, tau_r))
    return succ_rows, prec_rows


def check_invariant(a: DendAlgebra, r: Tensor2) -> bool:
    """True iff both coboundary rows of r vanish for every basis element."""
    succ_rows, prec_rows = coboundary_rows(a, r)
    return all(t.is_zero() for t in succ_rows) and all(t.is_zero() for t in prec_rows)


def check_invariant_operator(a: DendAlgebra, r: Tensor2) -> bool:
    """Operator form of invariance:

    R_o(x) T_r + T_r L(.)*( x) = 0   and   L*(x) T_r + T_r R<*(x) = 0.
    """
    t = t_map(r)
    for i in range(a.dim):
        m1 = a.circ.right_matrix(i) @ t + t @ (-a.odot.left_matrix(i).transpose())
        if not m1.is_zero():
            return False
        m2 = a.star.left_matrix(i) @ t + t @ (-a.prec.right_matrix(i).transpose())
        if not m2.is_zero():
            return False
    return True


def invariant_space(a: DendAlgebra) -> list[Tensor2]:
    """Basis of the linear space of invariant tensors, by exact solve.

    Invariance is linear in r, so the space is the kernel of the map
    sending r to the concatenated coboundary rows.
    """
    from .tensorkit import solve_linear

    n = a.dim
    unknowns = n * n
    columns: list[list[Fraction]] = []
    for idx in range(unknowns):
        probe = Tensor2.zero(n)
        probe.coeff[idx // n][idx % n] = q(1)
        sr, pr = coboundary_rows(a, probe)
        col: list[Fraction] = []
        for t in sr + pr:
            for row in t.coeff:
                col.extend(row)
        columns.append(col)
    mat = Matrix.from_columns(columns)
    kernel = solve_linear(mat, Matrix.zeros(mat.rows, 1)).kernel
    out = []
    for v in kernel:
        t = Tensor2.zero(n)
        for idx, x in enumerate(v):
            t.coeff[idx // n][idx % n] = x
        out.append(t)
    return out


# ---------------------------------------------------------------------------
# O-operators, Rota-Baxter operators


@dataclass
class OOperator:
    """A linear map V -> A intertwining a bimodule action with the products.

    weight 0 with no background operations is the plain case; a nonzero
    weight requires a pair of background operations making V a module
    algebra over the host.
    """

    t: Matrix
    host: DendAlgebra
    rep: DendRep
    weight: Fraction = q(0)
    background: tuple[BilinearOp, BilinearOp] | None = None

    def __post_init__(self):
        self.weight = q(self.weight)
        if self.t.rows != self.host.dim or self.t.cols != self.rep.mdim:
            raise ShapeError("operator must map the module into the host algebra")
        if self.weight and self.background is None:
            raise PreconditionError("a weighted operator needs background operations on V")
        if self.background is not None and any(op.dim != self.rep.mdim for op in self.background):
            raise ShapeError("background operations must live on the module")


def check_o_operator(o: OOperator) -> bool:
    """T(u) . T(v) = T(l(Tu)v + r(Tv)u + weight * u .V v) for both products."""
    host, rep, t = o.host, o.rep, o.t
    m = rep.mdim
    cols = t.columns()
    bg_succ = o.background[0] if o.background else None
    bg_prec = o.background[1] if o.background else None
    for i in range(m):
        ui = basis_support(m, i)
        for j in range(m):
            uj = basis_support(m, j)
            for s_op, lact, ract, bg in (
                (host.succ, rep.lsucc, rep.rsucc, bg_succ),
                (host.prec, rep.lprec, rep.rprec, bg_prec),
            ):
                lhs = s_op.mul(cols[i], cols[j])
                inner = vec_add(_act(lact, cols[i], uj), _act(ract, cols[j], ui))
                if o.weight:
                    inner = vec_add(inner, vec_scale(o.weight, bg.c[i][j]))
                if not vec_is_zero(vec_sub(lhs, t.apply(inner))):
                    return False
    return True


def _act(mats: list[Matrix], x: list[Fraction], v: list[Fraction]) -> list[Fraction]:
    """Apply the action of an algebra vector x on a module vector v."""
    out = [q(0)] * mats[0].rows
    for p, a in enumerate(x):
        if a:
            out = vec_add(out, vec_scale(a, mats[p].apply(v)))
    return out


def check_rota_baxter(a: DendAlgebra, p: Matrix, weight) -> bool:
    """P(x) . P(y) = P(P(x).y + x.P(y) + weight * x.y) for both products."""
    lam = q(weight)
    if not p.is_square() or p.rows != a.dim:
        raise ShapeError("operator must be square of the algebra dimension")
    cols = p.columns()
    n = a.dim
    for i in range(n):
        ei = basis_support(n, i)
        for j in range(n):
            ej = basis_support(n, j)
            for op in (a.succ, a.prec):
                lhs = op.mul(cols[i], cols[j])
                inner = vec_add(op.mul(cols[i], ej), op.mul(ei, cols[j]))
                if lam:
                    inner = vec_add(inner, vec_scale(lam, op.c[i][j]))
                if not vec_is_zero(vec_sub(lhs, p.apply(inner))):
                    return False
    return True


def check_rota_baxter_leibniz(circ: BilinearOp, p: Matrix, weight) -> bool:
    """Single-operation Rota-Baxter condition on a Leibniz product."""
    lam = q(weight)
    cols = p.columns()
    n = circ.dim
    for i in range(n):
        ei = basis_support(n, i)
        for j in range(n):
            ej = basis_support(n, j)
            lhs = circ.mul(cols[i], cols[j])
            inner = vec_add(circ.mul(cols[i], ej), circ.mul(ei, cols[j]))
            if lam:
                inner = vec_add(inner, vec_scale(lam, circ.c[i][j]))
            if not vec_is_zero(vec_sub(lhs, p.apply(inner))):
                return False
    return True


def solution_from_o_operator(o: OOperator) -> tuple[DendAlgebra, Tensor2]:
    """Promote a weight-0 operator to a skew solution on the extension
    A + V* carrying the dual bimodule action."""
    if o.weight:
        raise PreconditionError("only weight-0 operators induce skew solutions this way")
    if not check_o_operator(o):
        raise PreconditionError("the operator condition fails; nothing to promote")
    hat = semidirect(o.host, dual_rep_of(o.rep))
    n, m = o.host.dim, o.rep.mdim
    r = Tensor2.zero(n + m)
    for i in range(m):
        for k in range(n):
            c = o.t.data[k][i]
            if c:
                r.coeff[k][n + i] += c
                r.coeff[n + i][k] -= c
    return hat, r


def dual_rep_of(rep: DendRep) -> DendRep:
    from .rep import dual_rep

    return dual_rep(rep)


# ---------------------------------------------------------------------------
# relative Rota-Baxter reading of an r-tensor


def background_from_invariant(a: DendAlgebra, s: Tensor2) -> tuple[BilinearOp, BilinearOp]:
    """Background operations on A* induced by a symmetric invariant s:

    z >= h = L_o*(T_s z) h        z <= h = -L<*(T_s z) h
    """
    ts = t_map(s)
    n = a.dim
    succ_v = BilinearOp.zero(n)
    prec_v = BilinearOp.zero(n)
    for i in range(n):
        x = ts.column(i)
        lsm = -a.circ.left_of(x).transpose()
        lpm = a.prec.left_of(x).transpose()
        for j in range(n):
            succ_v.c[i][j] = lsm.column(j)
            prec_v.c[i][j] = lpm.column(j)
    return succ_v, prec_v


def check_relative_rb_from_r(a: DendAlgebra, r: Tensor2) -> bool:
    """Weight -1 relative Rota-Baxter condition for T_r against the dual
    regular bimodule, with background operations built from r + tau(r).

    Precondition: r + tau(r) invariant.  Under it this predicate agrees
    with the Yang-Baxter check.
    """
    s = r + r.tau()
    if not check_invariant(a, s):
        raise PreconditionError("the symmetric part of r must be invariant")
    o = OOperator(
        t=t_map(r),
        host=a,
        rep=dual_regular_rep(a),
        weight=q(-1),
        background=background_from_invariant(a, s),
    )
    return check_o_operator(o)


def check_a_ld(host: DendAlgebra, vops: tuple[BilinearOp, BilinearOp], rep: DendRep) -> list[Violation]:
    """Module-algebra conditions: V is itself a valid splitting, the action
    is a valid bimodule, and nine mixed compatibilities hold."""
    succ_v, prec_v = vops
    out: list[Violation] = []
    vd = DendAlgebra(succ_v, prec_v)
    for v in check_ld(vd):
        out.append(Violation("V-" + v.identity, v.indices, v.residual))
    out.extend(check_dend_rep(rep))
    n, m = host.dim, rep.mdim
    circ_v = vd.circ
    for t in range(n):
        lc = rep.lcirc(t)
        rc = rep.rcirc(t)
        ls, rs, lp, rp = rep.lsucc[t], rep.rsucc[t], rep.lprec[t], rep.rprec[t]
        for i in range(m):
            va = basis_support(m, i)
            for j in range(m):
                vb = basis_support(m, j)
                checks = (
                    # (r_o(x)a) > b = a > l>(x)b - l>(x)(a > b)
                    ("ALD1a", vec_sub(
                        succ_v.mul(rc.column(i), vb),
                        vec_sub(succ_v.mul(va, ls.column(j)), ls.apply(succ_v.c[i][j])),
                    )),
                    # a > l>(x)b - l>(x)(a > b) = -(l_o(x)a) > b
                    ("ALD1b", vec_add(
                        vec_sub(succ_v.mul(va, ls.column(j)), ls.apply(succ_v.c[i][j])),
                        succ_v.mul(lc.column(i), vb),
                    )),
                    # r>(x)(a o b) = a > r>(x)b - b > r>(x)a
                    ("ALD2", vec_sub(
                        rs.apply(circ_v.c[i][j]),
                        vec_sub(succ_v.mul(va, rs.column(j)), succ_v.mul(vb, rs.column(i))),
                    )),
                    # a > (r<(x)b) - r<(x)(a > b) = b < (r_o(x)a)
                    ("ALD3", vec_sub(
                        vec_sub(succ_v.mul(va, rp.column(j)), rp.apply(succ_v.c[i][j])),
                        prec_v.mul(vb, rc.column(i)),
                    )),
                    # a > (l<(x)b) - (r>(x)a) < b = l<(x)(a o b)
                    ("ALD4", vec_sub(
                        vec_sub(succ_v.mul(va, lp.column(j)), prec_v.mul(rs.column(i), vb)),
                        lp.apply(circ_v.c[i][j]),
                    )),
                    # l>(x)(a < b) - (l>(x)a) < b = a < (l_o(x)b)
                    ("ALD5", vec_sub(
                        vec_sub(ls.apply(prec_v.c[i][j]), prec_v.mul(ls.column(i), vb)),
                        prec_v.mul(va, lc.column(j)),
                    )),
                    # a < (r_o(x)b) = r<(x)(a < b) + b > (r<(x)a)
                    ("ALD6", vec_sub(
                        prec_v.mul(va, rc.column(j)),
                        vec_add(rp.apply(prec_v.c[i][j]), succ_v.mul(vb, rp.column(i))),
                    )),
                    # a < (l_o(x)b) = (r<(x)a) < b + l>(x)(a < b)
                    ("ALD7", vec_sub(
                        prec_v.mul(va, lc.column(j)),
                        vec_add(prec_v.mul(rp.column(i), vb), ls.apply(prec_v.c[i][j])),
                    )),
                    # (l<(x)a) < b + a > (l<(x)b) = l<(x)(a o b)
                    ("ALD8", vec_sub(
                        vec_add(prec_v.mul(lp.column(i), vb), succ_v.mul(va, lp.column(j))),
                        lp.apply(circ_v.c[i][j]),
                    )),
                )
                for name, res in checks:
                    if not vec_is_zero(res):
                        out.append(Violation(name, (t, i, j), tuple(res)))
    return out
