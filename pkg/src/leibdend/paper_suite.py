"""Golden regression suite: every published worked value the package is
expected to reproduce exactly, each as a named case.

Each case takes corrupt=False and returns (ok, detail).  With corrupt=True
it runs on a deliberately damaged input and should then fail; the runner
flips the outcome for such a case, so a reported pass means the damage was
detected.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .tensorkit import Matrix, Tensor2, q
from .algebra import BilinearOp, DendAlgebra, check_hom, check_ld
from .rep import check_dend_rep, dual_regular_rep, regular_rep
from . import catalog
from .ybe import (
    OOperator,
    check_invariant,
    check_ldybe,
    check_o_operator,
    check_rota_baxter,
    s_tensors,
    t_map,
)
from .bialgebra import Bialgebra, CoProduct, canonical_r, cobound, dual_mult_from_r
from .forms import (
    BilForm,
    QuadraticRB,
    check_2cocycle,
    check_quadratic_rb,
    factorizable_from_rb,
    omega_sharp,
    rb_from_factorizable,
)
from .quadri import horizontal, invariant_form_space, quadri_tensor


@dataclass
class CaseResult:
    name: str
    ok: bool
    detail: str


def _perturbed(a: DendAlgebra) -> DendAlgebra:
    new_succ = [[list(row) for row in plane] for plane in a.succ.c]
    new_succ[0][0][0] += 1
    return DendAlgebra(BilinearOp(new_succ), a.prec)


def _case_ld_dim2_abelian(corrupt: bool):
    a = catalog.dend2_abelian()
    if corrupt:
        a = _perturbed(a)
    bad = check_ld(a)
    return not bad, f"{len(bad)} axiom violations"


def _case_ld_dim2_nonabelian(corrupt: bool):
    a = catalog.dend2_nonabelian()
    if corrupt:
        a = _perturbed(a)
    bad = check_ld(a)
    return not bad, f"{len(bad)} axiom violations"


def _case_ld_dim1_family(corrupt: bool):
    for p in range(-2, 3):
        for q_ in range(-2, 3):
            valid = not check_ld(catalog.dend1(p, q_))
            want = (p == q_) if corrupt else (p == -q_)
            if valid != want:
                return False, f"mismatch at p={p}, q={q_}"
    return True, "25 grid points match p = -q"


def _case_regular_rep(corrupt: bool):
    a = catalog.dend2_nonabelian()
    if corrupt:
        a = _perturbed(a)
    bad = check_dend_rep(regular_rep(a))
    if bad:
        return False, f"regular action fails {len(bad)} identities"
    try:
        bad = check_dend_rep(dual_regular_rep(a))
    except Exception as exc:
        return False, f"dual action rejected: {exc}"
    return not bad, "regular and dual-regular actions valid"


def _case_semidirect_table(corrupt: bool):
    hat = catalog.dend4_extension()
    expected_succ = {(0, 0): [1, 0, 0, 0], (0, 1): [0, 1, 0, 0], (0, 3): [0, 0, 0, -1]}
    expected_prec = {(0, 0): [-1, 0, 0, 0], (1, 0): [0, -1, 0, 0], (0, 2): [0, 0, -1, 0], (1, 3): [0, 0, -1, 0]}
    if corrupt:
        expected_succ[(0, 3)] = [0, 0, 0, 1]
    for (i, j), want in expected_succ.items():
        if hat.succ.c[i][j] != [q(x) for x in want]:
            return False, f"> product at ({i},{j}) is {hat.succ.c[i][j]}"
    for (i, j), want in expected_prec.items():
        if hat.prec.c[i][j] != [q(x) for x in want]:
            return False, f"< product at ({i},{j}) is {hat.prec.c[i][j]}"
    for i in range(4):
        for j in range(4):
            for op, table in ((hat.succ, expected_succ), (hat.prec, expected_prec)):
                if (i, j) not in table and any(op.c[i][j]):
                    return False, f"unexpected nonzero product at ({i},{j})"
    return True, "all seven listed products match and the rest vanish"


def _case_o_operator_grid(corrupt: bool):
    a = catalog.dend2_nonabelian()
    reg = regular_rep(a)
    for aa in range(-2, 3):
        for bb in range(-2, 3):
            for cc in range(-2, 3):
                for dd in range(-2, 3):
                    ok = check_o_operator(OOperator(t=Matrix([[aa, bb], [cc, dd]]), host=a, rep=reg))
                    want = (aa == 0 and dd == 0) if corrupt else (aa == 0 and dd == 0 and bb * cc == 0)
                    if ok != want:
                        return False, f"mismatch at a={aa}, b={bb}, c={cc}, d={dd}"
    return True, "625 grid points match a=d=0, bc=0"


def _case_skew_solution_family(corrupt: bool):
    hat = catalog.dend4_extension()
    for t in (1, 2, -3):
        r = catalog.skew_solution4(t)
        if corrupt:
            r.coeff[0][2] = q(1)
            r.coeff[2][0] = q(-1)
        if not r.is_skew():
            return False, f"t={t}: not skew"
        if not check_ldybe(hat, r):
            return False, f"t={t}: S(r) nonzero"
    return True, "skew family solves the equation for t in {1, 2, -3}"


def _case_coboundary_values(corrupt: bool):
    hat = catalog.dend4_extension()
    for t in (1, 2, -3):
        cop = cobound(hat, catalog.skew_solution4(t))
        want_succ = {0: Tensor2.basis(4, 2, 1, -t), 3: Tensor2.basis(4, 2, 2, -2 * t)}
        want_prec = {3: Tensor2.basis(4, 2, 2, 2 * t)}
        if corrupt:
            want_prec[3] = Tensor2.basis(4, 2, 2, 3 * t)
        for i in range(4):
            if cop.dsucc[i] != want_succ.get(i, Tensor2.zero(4)):
                return False, f"t={t}: > coproduct row {i} off"
            if cop.dprec[i] != want_prec.get(i, Tensor2.zero(4)):
                return False, f"t={t}: < coproduct row {i} off"
    return True, "all eight coproduct rows match for t in {1, 2, -3}"


def _case_s_tensor_symmetries(corrupt: bool):
    rng = random.Random(20260811)
    hat = catalog.dend4_extension()
    for host in (catalog.dend2_abelian(), catalog.dend2_nonabelian(), hat):
        for _ in range(8):
            n = host.dim
            r = Tensor2.zero(n)
            for i in range(n):
                for j in range(i + 1, n):
                    c = q(rng.randint(-2, 2))
                    r.coeff[i][j] = c
                    r.coeff[j][i] = -c
            if corrupt:
                r.coeff[0][0] = q(1)  # break skewness; the identities rely on it
            s = s_tensors(host, r)
            ok = (
                s["S1"] == s["S"].sigma12()
                and s["S3"] == -s["S"].sigma13()
                and s["S4"] == -s["S"].sigma132()
                and s["S2"] == s["S1"] - s["S4"]
                and s["S5"] == s["S"] - s["S3"]
            )
            if not ok:
                return False, "a permutation identity failed"
    return True, "permutation identities hold on sampled skew tensors"


def _case_canonical_double(corrupt: bool):
    base = catalog.dend2_nonabelian()
    if corrupt:
        base = _perturbed(base)
    try:
        d, r, cls = canonical_r(Bialgebra(base, CoProduct.zero(base.dim)))
    except Exception as exc:
        return False, f"construction rejected: {exc}"
    if cls.tag != "Factorizable":
        return False, f"classified {cls.tag}"
    n = base.dim
    tr = t_map(r)
    for i in range(n):  # operator form sends (z, x) to z
        want = [q(0)] * (2 * n)
        want[n + i] = q(1)
        if tr.column(i) != want or any(tr.column(n + i)):
            return False, "operator block form unexpected"
    if not check_invariant(d, r + r.tau()):
        return False, "symmetric part not invariant"
    return True, "canonical tensor factorizable with invariant symmetric part"


def _case_rb_shift(corrupt: bool):
    a = catalog.dend2_nonabelian()
    found = 0
    for lam in (0, 1):
        for aa in range(-1, 2):
            for bb in range(-1, 2):
                for cc in range(-1, 2):
                    for dd in range(-1, 2):
                        p = Matrix([[aa, bb], [cc, dd]])
                        if check_rota_baxter(a, p, lam):
                            found += 1
                            shifted = -Matrix.identity(2).scale(lam) - p
                            if corrupt:
                                shifted = shifted + Matrix([[1, 0], [0, 0]])
                            if not check_rota_baxter(a, shifted, lam):
                                return False, f"shift symmetry broke at weight {lam}"
    return found > 2, f"{found} grid operators, all shift-symmetric"


def _fact_double():
    base = catalog.dend2_nonabelian()
    return canonical_r(Bialgebra(base, CoProduct.zero(base.dim)))


def _case_quadratic_rb_shift(corrupt: bool):
    d, r, _ = _fact_double()
    qrb = rb_from_factorizable(d, r, 2)
    shifted_p = -Matrix.identity(d.dim).scale(qrb.weight) - qrb.p
    if corrupt:
        shifted_p = shifted_p + Matrix.identity(d.dim)
    shifted = QuadraticRB(alg=d, p=shifted_p, omega=qrb.omega, weight=qrb.weight)
    return check_quadratic_rb(shifted), "weight-shifted operator stays valid"


def _case_tau_r_correspondence(corrupt: bool):
    d, r, _ = _fact_double()
    lam = q(1)
    qrb = rb_from_factorizable(d, r, lam)
    shifted = QuadraticRB(alg=d, p=-Matrix.identity(d.dim).scale(lam) - qrb.p, omega=qrb.omega, weight=lam)
    recovered = factorizable_from_rb(shifted)
    want = r if corrupt else r.tau()
    return recovered == want, "the shifted structure recovers the flipped tensor"


def _case_r_omega_invariant(corrupt: bool):
    d, _, _ = _fact_double()
    omega = BilForm(Matrix.identity(d.dim)) if corrupt else BilForm.canonical_pairing(d.dim // 2)
    _, r_omega = omega_sharp(omega)
    return r_omega.is_symmetric() and check_invariant(d, r_omega), "pairing tensor symmetric and invariant"


def _case_dual_mult_homs(corrupt: bool):
    d, r, _ = _fact_double()
    dual = dual_mult_from_r(d, r)
    tr = t_map(r)
    ttr = tr.transpose()
    if corrupt:
        tr = tr + Matrix.identity(d.dim)
    ok = not check_hom(tr, dual, d) and not check_hom(-ttr, dual, d)
    return ok, "operator and negated flip are splitting maps"


def _combine(mats, x):
    out = Matrix.zeros(mats[0].rows, mats[0].cols)
    for p, a in enumerate(x):
        if a:
            out = out + mats[p].scale(a)
    return out


def _case_o_operator_from_skew(corrupt: bool):
    hat = catalog.dend4_extension()
    r = catalog.skew_solution4(1)
    if corrupt:
        r.coeff[0][2] += 1
        r.coeff[2][0] -= 1
    tr = t_map(r)
    if not check_o_operator(OOperator(t=tr, host=hat, rep=dual_regular_rep(hat))):
        return False, "splitting operator condition failed"
    # one-operation variant against (l>*, -l(.)*)
    n = hat.dim
    circ = hat.circ
    lsucc_star = [-hat.succ.left_matrix(i).transpose() for i in range(n)]
    lodot_star = [hat.odot.left_matrix(i).transpose() for i in range(n)]
    cols = tr.columns()
    for i in range(n):
        for j in range(n):
            lhs = circ.mul(cols[i], cols[j])
            inner = [x + y for x, y in zip(_combine(lsucc_star, cols[i]).column(j), _combine(lodot_star, cols[j]).column(i))]
            if lhs != tr.apply(inner):
                return False, "one-operation variant failed"
    return True, "both operator readings hold for the skew solution"


def _case_quadri_tensor_horizontal(corrupt: bool):
    a = catalog.dend2_nonabelian()
    quad = quadri_tensor(a, a)
    hor = horizontal(quad)
    n = a.dim
    for i1 in range(n):
        for j1 in range(n):
            for i2 in range(n):
                for j2 in range(n):
                    want = [q(0)] * (n * n)
                    for k1, c1 in enumerate(a.prec.c[i1][i2]):
                        if not c1:
                            continue
                        for k2, c2 in enumerate(a.circ.c[j1][j2]):
                            if c2:
                                want[k1 * n + k2] += c1 * c2
                    if corrupt:
                        want[0] += 1
                    if hor.prec.c[i1 * n + j1][i2 * n + j2] != want:
                        return False, "horizontal < does not match the product formula"
    return True, "horizontal operations match the displayed formulas"


def _case_quadri_cocycle_invariance(corrupt: bool):
    a = catalog.dend2_nonabelian()
    quad = quadri_tensor(a, a)
    space = invariant_form_space(quad)
    hor = horizontal(quad)
    for omega in space:
        target = omega
        if corrupt:
            g = [row[:] for row in omega.g.data]
            g[0][1] += 1
            g[1][0] -= 1
            target = BilForm(Matrix(g))
        if not check_2cocycle(hor, target):
            return False, "an invariant form failed the cocycle identity"
    if not space:
        return True, "invariant-form space is zero; cocycle claim vacuous"
    return True, f"{len(space)} invariant forms are cocycles of the horizontal splitting"


CASES: dict[str, Callable[[bool], tuple[bool, str]]] = {
    "ld-dim2-abelian": _case_ld_dim2_abelian,
    "ld-dim2-nonabelian": _case_ld_dim2_nonabelian,
    "ld-dim1-family": _case_ld_dim1_family,
    "regular-rep-dim2": _case_regular_rep,
    "semidirect-dual-table": _case_semidirect_table,
    "o-operator-grid": _case_o_operator_grid,
    "skew-solution-family": _case_skew_solution_family,
    "coboundary-values": _case_coboundary_values,
    "s-tensor-symmetries": _case_s_tensor_symmetries,
    "canonical-double-factorizable": _case_canonical_double,
    "rb-shift-symmetry": _case_rb_shift,
    "quadratic-rb-shift": _case_quadratic_rb_shift,
    "tau-r-correspondence": _case_tau_r_correspondence,
    "r-omega-invariant": _case_r_omega_invariant,
    "dual-mult-homs": _case_dual_mult_homs,
    "o-operator-from-skew-solution": _case_o_operator_from_skew,
    "quadri-tensor-horizontal": _case_quadri_tensor_horizontal,
    "quadri-cocycle-invariance": _case_quadri_cocycle_invariance,
}


def run_suite(only: str | None = None, corrupt: str | None = None) -> list[CaseResult]:
    results = []
    for name, fn in CASES.items():
        if only is not None and only not in name:
            continue
        raw_ok, detail = fn(corrupt == name)
        if corrupt == name:
            ok = not raw_ok
            detail = f"damage detected ({detail})" if ok else f"damage NOT detected ({detail})"
        else:
            ok = raw_ok
        results.append(CaseResult(name, ok, detail))
    return results
