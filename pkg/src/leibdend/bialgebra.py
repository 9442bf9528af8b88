"""Coalgebras, bialgebra compatibility, coboundary structures, the
classification of r-tensors, the double construction and its canonical
factorizable tensor, and the phase-space / isotropic-splitting predicates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .tensorkit import (
    Matrix,
    PreconditionError,
    ShapeError,
    Tensor2,
    Tensor3,
    kron_left,
    kron_right,
    mat_inverse,
    q,
    vec_is_zero,
)
from .algebra import (
    BilinearOp,
    DendAlgebra,
    LeibnizAlgebra,
    Violation,
    check_hom,
    check_ld,
    check_leibniz,
    check_subalgebra,
    check_subalgebra_leibniz,
    direct_sum,
)
from .rep import MatchedPairLD, dual_regular_rep
from .ybe import coboundary_rows, check_invariant, s_tensor, t_map
from .forms import BilForm, check_quadratic_ld, check_symplectic


class CoProduct:
    """Two comultiplications stored as one Tensor2 row per basis element."""

    __slots__ = ("dim", "dsucc", "dprec")

    def __init__(self, dsucc: Sequence[Tensor2], dprec: Sequence[Tensor2]):
        self.dsucc = list(dsucc)
        self.dprec = list(dprec)
        self.dim = len(self.dsucc)
        if len(self.dprec) != self.dim or any(t.dim != self.dim for t in self.dsucc + self.dprec):
            raise ShapeError("coproduct rows must be square tensors, one per basis element")

    @classmethod
    def zero(cls, dim: int) -> "CoProduct":
        return cls([Tensor2.zero(dim) for _ in range(dim)], [Tensor2.zero(dim) for _ in range(dim)])

    def delta(self, i: int) -> Tensor2:
        return self.dsucc[i] + self.dprec[i]

    def dodot(self, i: int) -> Tensor2:
        # the combined row entering the compatibility conditions
        return self.dsucc[i] + self.dprec[i].tau()

    def is_zero(self) -> bool:
        return all(t.is_zero() for t in self.dsucc + self.dprec)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CoProduct)
            and self.dim == other.dim
            and self.dsucc == other.dsucc
            and self.dprec == other.dprec
        )


def dualize(cop: CoProduct) -> DendAlgebra:
    """Structure constants on the dual space read off transposed:
    f_i . f_j = sum_k row(e_k)[i][j] f_k."""
    n = cop.dim
    succ = BilinearOp.zero(n)
    prec = BilinearOp.zero(n)
    for k in range(n):
        for i in range(n):
            for j in range(n):
                succ.c[i][j][k] = cop.dsucc[k].coeff[i][j]
                prec.c[i][j][k] = cop.dprec[k].coeff[i][j]
    return DendAlgebra(succ, prec)


def coproduct_from_algebra(dual: DendAlgebra) -> CoProduct:
    """Inverse of dualize."""
    n = dual.dim
    dsucc = [Tensor2.zero(n) for _ in range(n)]
    dprec = [Tensor2.zero(n) for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                dsucc[k].coeff[i][j] = dual.succ.c[i][j][k]
                dprec[k].coeff[i][j] = dual.prec.c[i][j][k]
    return CoProduct(dsucc, dprec)


def _comp_left(rows: Sequence[Tensor2], t: Tensor2) -> Tensor3:
    """sum_ij t[i][j] rows[i] (x) e_j."""
    out = Tensor3.zero(t.dim)
    for i, j, c in t.entries():
        for a, b, w in rows[i].entries():
            out.coeff[a][b][j] += c * w
    return out


def _comp_right(rows: Sequence[Tensor2], t: Tensor2) -> Tensor3:
    """sum_ij t[i][j] e_i (x) rows[j]."""
    out = Tensor3.zero(t.dim)
    for i, j, c in t.entries():
        for a, b, w in rows[j].entries():
            out.coeff[i][a][b] += c * w
    return out


def check_coalgebra(cop: CoProduct) -> list[Violation]:
    """The three coassociativity-type identities, one residual tensor per
    basis element.  Cross-validated by dualize + the splitting axioms."""
    d = [cop.delta(i) for i in range(cop.dim)]
    ds, dp = cop.dsucc, cop.dprec
    out = []
    for t in range(cop.dim):
        ca1 = _comp_left(d, ds[t]) - _comp_right(ds, ds[t]) + _comp_right(ds, ds[t]).sigma12()
        if not ca1.is_zero():
            out.append(Violation("Ca1", (t,), _flat3(ca1)))
        ca2 = _comp_right(dp, ds[t]) - _comp_left(ds, dp[t]) - _comp_right(d, dp[t]).sigma12()
        if not ca2.is_zero():
            out.append(Violation("Ca2", (t,), _flat3(ca2)))
        ca3 = _comp_right(d, dp[t]) - _comp_left(dp, dp[t]) - _comp_right(dp, ds[t]).sigma12()
        if not ca3.is_zero():
            out.append(Violation("Ca3", (t,), _flat3(ca3)))
    return out


def _flat3(t: Tensor3) -> tuple:
    return tuple(x for plane in t.coeff for row in plane for x in row)


def _flat2(t: Tensor2) -> tuple:
    return tuple(x for row in t.coeff for x in row)


def coalgebra_valid(cop: CoProduct) -> bool:
    """Cheap validity route: the dual algebra satisfies the splitting axioms."""
    return not check_ld(dualize(cop))


@dataclass
class Bialgebra:
    alg: DendAlgebra
    cop: CoProduct

    def __post_init__(self):
        if self.alg.dim != self.cop.dim:
            raise ShapeError("algebra and coproduct dimensions differ")


def check_bialgebra(b: Bialgebra) -> list[Violation]:
    """The six compatibility conditions, one residual tensor per basis pair."""
    a, cop = b.alg, b.cop
    n = a.dim
    d = [cop.delta(i) for i in range(n)]
    ds, dp = cop.dsucc, cop.dprec
    dod = [cop.dodot(i) for i in range(n)]

    def mix(rows: Sequence[Tensor2], v) -> Tensor2:
        out = Tensor2.zero(n)
        for k, c in enumerate(v):
            if c:
                out = out + rows[k].scale(c)
        return out

    out = []
    for i in range(n):
        lod_i = a.odot.left_matrix(i)
        ls_i = a.succ.left_matrix(i)
        lc_i = a.circ.left_matrix(i)
        rp_i = a.prec.right_matrix(i)
        for j in range(n):
            rod_j = a.odot.right_matrix(j)
            rs_j = a.succ.right_matrix(j)
            rc_j = a.circ.right_matrix(j)
            lc_j = a.circ.left_matrix(j)
            ls_j = a.succ.left_matrix(j)
            lod_j = a.odot.left_matrix(j)

            k1 = kron_right(lod_i, d[j])
            m1 = kron_right(rod_j, ds[i])
            b1 = mix(d, a.odot.c[i][j]) - k1 + k1.tau() + m1.tau() - m1
            if not b1.is_zero():
                out.append(Violation("B1", (i, j), _flat2(b1)))

            b2 = (
                mix(d, a.succ.c[i][j])
                - kron_left(ls_i, d[j])
                - kron_right(ls_i, d[j])
                - kron_right(rs_j, dod[i])
                + kron_right(rod_j, dod[i]).tau()
            )
            if not b2.is_zero():
                out.append(Violation("B2", (i, j), _flat2(b2)))

            b3 = kron_right(rs_j, dp[i].tau()) - kron_left(rp_i, d[j])
            if not b3.is_zero():
                out.append(Violation("B3", (i, j), _flat2(b3)))

            b4 = (
                mix(dod, a.circ.c[i][j])
                - kron_right(lc_i, dod[j])
                - kron_left(ls_i, dod[j])
                + kron_right(lc_j, dod[i])
                + kron_left(ls_j, dod[i])
            )
            if not b4.is_zero():
                out.append(Violation("B4", (i, j), _flat2(b4)))

            b5 = (
                mix(ds, a.circ.c[i][j])
                - kron_right(rc_j, ds[i])
                - kron_right(lc_i, ds[j])
                - kron_left(lod_i, ds[j])
                + kron_left(lod_j, dod[i])
            )
            if not b5.is_zero():
                out.append(Violation("B5", (i, j), _flat2(b5)))

            b6 = kron_right(rc_j, dp[i].tau()) - kron_left(rp_i, ds[j])
            if not b6.is_zero():
                out.append(Violation("B6", (i, j), _flat2(b6)))
    return out


def bialgebra_valid(b: Bialgebra) -> bool:
    """Full validity: the algebra and the dual algebra satisfy the
    splitting axioms and all six compatibilities hold."""
    return (
        not check_ld(b.alg)
        and coalgebra_valid(b.cop)
        and not check_bialgebra(b)
    )


def cobound(a: DendAlgebra, r: Tensor2) -> CoProduct:
    """The coboundary coproduct of r."""
    succ_rows, prec_rows = coboundary_rows(a, r)
    return CoProduct(succ_rows, prec_rows)


# ---------------------------------------------------------------------------
# classification of r-tensors


@dataclass
class RClass:
    """Classification of an r-tensor together with its witnesses."""

    tag: str  # NotSolution | Triangular | QuasiTriangular | Factorizable
    is_solution: bool
    symmetric_part_invariant: bool
    s_residual: Tensor3
    sym_kernel: list = field(default_factory=list)

    def __str__(self) -> str:
        return self.tag


def classify_r(a: DendAlgebra, r: Tensor2) -> RClass:
    """NotSolution / Triangular / QuasiTriangular / Factorizable with
    residual witnesses for both defining predicates."""
    s_res = s_tensor(a, r)
    solution = s_res.is_zero()
    sym = r + r.tau()
    invariant = check_invariant(a, sym)
    if not solution or not invariant:
        return RClass("NotSolution", solution, invariant, s_res)
    if r.is_skew():
        return RClass("Triangular", True, True, s_res)
    t_sym = t_map(sym)
    if mat_inverse(t_sym) is not None:
        return RClass("Factorizable", True, True, s_res)
    from .tensorkit import solve_linear

    kernel = solve_linear(t_sym, Matrix.zeros(t_sym.rows, 1)).kernel
    return RClass("QuasiTriangular", True, True, s_res, sym_kernel=kernel)


def dual_mult_from_r(a: DendAlgebra, r: Tensor2) -> DendAlgebra:
    """Dual-space multiplication of a coboundary structure in operator form:

    z >_r h = L_o*(T_r z) h - R_(.)*(T_tau(r) h) z
    z <_r h = L<*(T_tau(r) z) h - L**(T_r h) z
    """
    n = a.dim
    tr = t_map(r)
    ttr = tr.transpose()
    succ = BilinearOp.zero(n)
    prec = BilinearOp.zero(n)
    rodot = a.odot.flip()  # right odot multiplications: rodot.left_matrix(i) = R_(.) (e_i)
    for i in range(n):
        ls = -a.circ.left_of(tr.column(i)).transpose()
        lp = -a.prec.left_of(ttr.column(i)).transpose()
        for j in range(n):
            rod = -rodot.left_of(ttr.column(j)).transpose()
            lst = -a.star.left_of(tr.column(j)).transpose()
            succ.c[i][j] = [x - y for x, y in zip(ls.column(j), rod.column(i))]
            prec.c[i][j] = [x - y for x, y in zip(lp.column(j), lst.column(i))]
    return DendAlgebra(succ, prec)


# ---------------------------------------------------------------------------
# the double


def double(b: Bialgebra) -> DendAlgebra:
    """The splitting on A + A* induced by a bialgebra; basis order is
    (e_1..e_n, f_1..f_n)."""
    a = b.alg
    bb = dualize(b.cop)
    n = a.dim
    dim = 2 * n
    succ = BilinearOp.zero(dim)
    prec = BilinearOp.zero(dim)

    for i in range(n):
        for j in range(n):
            for k in range(n):
                succ.c[i][j][k] = a.succ.c[i][j][k]
                prec.c[i][j][k] = a.prec.c[i][j][k]
                succ.c[n + i][n + j][n + k] = bb.succ.c[i][j][k]
                prec.c[n + i][n + j][n + k] = bb.prec.c[i][j][k]

    for i in range(n):
        lc_a = a.circ.left_matrix(i)
        lp_a = a.prec.left_matrix(i)
        for j in range(n):
            m_sb = bb.succ.right_matrix(j) + bb.prec.left_matrix(j)
            m_cb = bb.circ.right_matrix(j) + bb.circ.left_matrix(j)
            for k in range(n):
                # e_i > f_j : A part -(R>B(f_j)+L<B(f_j))^T, A* part -LcA(e_i)^T
                succ.c[i][n + j][k] = -m_sb.data[i][k]
                succ.c[i][n + j][n + k] = -lc_a.data[j][k]
                # e_i < f_j : A part +(RcB+LcB)(f_j)^T, A* part +LpA(e_i)^T
                prec.c[i][n + j][k] = m_cb.data[i][k]
                prec.c[i][n + j][n + k] = lp_a.data[j][k]

    for i in range(n):
        lc_b = bb.circ.left_matrix(i)
        lp_b = bb.prec.left_matrix(i)
        for j in range(n):
            m_sa = a.succ.right_matrix(j) + a.prec.left_matrix(j)
            m_ca = a.circ.right_matrix(j) + a.circ.left_matrix(j)
            for k in range(n):
                # f_i > e_j : A part -LcB(f_i)^T, A* part -(R>A(e_j)+L<A(e_j))^T
                succ.c[n + i][j][k] = -lc_b.data[j][k]
                succ.c[n + i][j][n + k] = -m_sa.data[i][k]
                # f_i < e_j : A part +LpB(f_i)^T, A* part +(RcA+LcA)(e_j)^T
                prec.c[n + i][j][k] = lp_b.data[j][k]
                prec.c[n + i][j][n + k] = m_ca.data[i][k]

    return DendAlgebra(succ, prec)


def matched_pair_from_bialgebra(b: Bialgebra) -> MatchedPairLD:
    """The matched pair whose sum reproduces the double: both algebras act
    on each other through the duals of their regular bimodules."""
    dual_alg = dualize(b.cop)
    return MatchedPairLD(
        a1=b.alg,
        a2=dual_alg,
        rep1=dual_regular_rep(b.alg),
        rep2=dual_regular_rep(dual_alg),
    )


def canonical_r(b: Bialgebra) -> tuple[DendAlgebra, Tensor2, RClass]:
    """The double together with sum_i e_i (x) f_i and its classification.

    Verifies invertibility of the symmetric-part operator and the
    two-component factorization directly instead of pinning a sign
    convention for the operator's dual block.
    """
    d = double(b)
    n = b.alg.dim
    r = Tensor2.zero(2 * n)
    for i in range(n):
        r.coeff[i][n + i] = q(1)
    cls = classify_r(d, r)
    if cls.tag != "Factorizable":
        raise PreconditionError(f"canonical tensor failed to classify as factorizable: {cls.tag}")
    t_sym = t_map(r + r.tau())
    inv = mat_inverse(t_sym)
    tr = t_map(r)
    ttr = tr.transpose()
    for k in range(2 * n):
        x = [q(0)] * (2 * n)
        x[k] = q(1)
        u = inv.apply(x)
        x1 = tr.apply(u)
        x2 = [-v for v in ttr.apply(u)]
        if not vec_is_zero([a - (p - m) for a, p, m in zip(x, x1, x2)]):
            raise PreconditionError("factorization decomposition failed")
    return d, r, cls


def phi_iso(a: DendAlgebra, r: Tensor2) -> tuple[Matrix, list[Violation]]:
    """The map (x, z) -> (x + T_r z, x - T_tau(r) z) from the double of the
    coboundary bialgebra onto the componentwise direct sum A + A.

    Requires r factorizable; the returned matrix is invertible and the
    violation list (empty for valid input) is its homomorphism report.
    """
    cls = classify_r(a, r)
    if cls.tag != "Factorizable":
        raise PreconditionError(f"phi requires a factorizable tensor, got {cls.tag}")
    n = a.dim
    b = Bialgebra(a, cobound(a, r))
    dom = double(b)
    cod = direct_sum(a, a)
    tr = t_map(r)
    ttr = tr.transpose()
    phi = Matrix.zeros(2 * n, 2 * n)
    for i in range(n):
        phi.data[i][i] = q(1)
        phi.data[n + i][i] = q(1)
        for k in range(n):
            phi.data[k][n + i] = tr.data[k][i]
            phi.data[n + k][n + i] = -ttr.data[k][i]
    if mat_inverse(phi) is None:
        raise PreconditionError("phi is not bijective")
    return phi, check_hom(phi, dom, cod)


# ---------------------------------------------------------------------------
# phase spaces and isotropic splittings


def _as_leibniz(d) -> LeibnizAlgebra:
    if isinstance(d, DendAlgebra):
        return d.leibniz()
    if isinstance(d, LeibnizAlgebra):
        return d
    raise TypeError("expected an algebra")


def _block_span(dim: int, start: int, count: int) -> Matrix:
    m = Matrix.zeros(dim, count)
    for j in range(count):
        m.data[start + j][j] = q(1)
    return m


def phase_space_check(d, omega: BilForm | None = None, split: int | None = None) -> bool:
    """True iff the canonical-pairing form makes the underlying Leibniz
    algebra symplectic and both designated blocks are subalgebras."""
    leib = _as_leibniz(d)
    dim = leib.dim
    if split is None:
        if dim % 2:
            raise PreconditionError("phase-space check needs an even dimension")
        split = dim // 2
    if 2 * split != dim:
        raise PreconditionError("the two blocks must have equal dimension")
    if omega is None:
        omega = BilForm.canonical_pairing(split)
    if omega.dim != dim:
        raise ShapeError("form dimension mismatch")
    if not (omega.is_symmetric() and omega.is_nondegenerate()):
        return False
    if not check_symplectic(leib, omega):
        return False
    span_a = _block_span(dim, 0, split)
    span_b = _block_span(dim, split, dim - split)
    return check_subalgebra_leibniz(leib, span_a) and check_subalgebra_leibniz(leib, span_b)


def manin_triple_check(d: DendAlgebra, omega: BilForm, span_a: Matrix, span_b: Matrix) -> bool:
    """True iff (d, omega) is quadratic, both spans are subalgebras, and
    both spans are isotropic for omega."""
    if span_a.rows != d.dim or span_b.rows != d.dim:
        raise ShapeError("spans live in the wrong space")
    combined = Matrix([ra + rb for ra, rb in zip(span_a.data, span_b.data)])
    if span_a.cols + span_b.cols != d.dim or combined.rank() != d.dim:
        raise PreconditionError("the two spans must be complementary")
    if not (omega.is_symmetric() and omega.is_nondegenerate()):
        return False
    if not check_quadratic_ld(d, omega):
        return False
    for span in (span_a, span_b):
        if not check_subalgebra(d, span):
            return False
        cols = span.columns()
        for u in cols:
            for v in cols:
                if omega.omega(u, v):
                    return False
    return True
