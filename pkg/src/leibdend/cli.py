"""Command-line interface.

Exit codes: 0 = pass/success, 1 = axiom violation or rejected
construction, 2 = input error (parse/shape).
"""

from __future__ import annotations

import argparse
import json
import sys

from .tensorkit import Matrix, PreconditionError, ShapeError
from .algebra import DendAlgebra, LeibnizAlgebra, Violation, check_ld, check_leibniz
from .rep import check_dend_rep, dual_rep, semidirect
from .ybe import OOperator, check_o_operator, solution_from_o_operator
from .bialgebra import (
    Bialgebra,
    canonical_r,
    check_bialgebra,
    check_coalgebra,
    classify_r,
    cobound,
)
from .forms import (
    BilForm,
    QuadraticRB,
    check_2cocycle,
    check_quadratic_ld,
    check_quadratic_rb,
    check_symplectic,
    dendriform_from_symplectic,
    factorizable_from_rb,
    rb_from_factorizable,
)
from .quadri import check_quadri, quadri_from_o_operator, quadri_tensor
from . import fileio, paper_suite
from .fileio import FileFormatError, StructureDoc
from . import catalog


AXIOM_SETS = (
    "ld",
    "leibniz",
    "rep",
    "quadri",
    "coalgebra",
    "bialgebra",
    "quadratic",
    "symplectic",
    "cocycle",
)


def _label(basis: list[str], idx: int) -> str:
    return basis[idx] if 0 <= idx < len(basis) else f"e{idx + 1}"


def _print_violations(violations: list[Violation], basis: list[str]) -> None:
    for v in violations:
        where = ", ".join(_label(basis, i) for i in v.indices)
        residual = ", ".join(str(x) for x in v.residual)
        print(f"{v.identity} violation at ({where}): residual = ({residual})")


def _violations_json(violations: list[Violation], basis: list[str]) -> list[dict]:
    return [
        {
            "identity": v.identity,
            "indices": [_label(basis, i) for i in v.indices],
            "residual": [str(x) for x in v.residual],
        }
        for v in violations
    ]


def _require(doc: StructureDoc, kinds: tuple[str, ...]) -> None:
    if doc.kind not in kinds:
        raise FileFormatError(f"axiom set needs a {' or '.join(kinds)} file, got {doc.kind}")


def cmd_check(args) -> int:
    doc = fileio.load(args.file)
    basis = doc.basis
    violations: list[Violation] = []
    ok_flag: bool | None = None
    reason = ""

    if args.axiom_set == "ld":
        _require(doc, ("dendriform",))
        violations = check_ld(doc.obj)
    elif args.axiom_set == "leibniz":
        _require(doc, ("leibniz", "dendriform"))
        circ = doc.obj.circ if isinstance(doc.obj, (LeibnizAlgebra, DendAlgebra)) else None
        violations = check_leibniz(circ)
    elif args.axiom_set == "rep":
        _require(doc, ("rep",))
        violations = check_dend_rep(doc.obj)
    elif args.axiom_set == "quadri":
        _require(doc, ("quadri",))
        violations = check_quadri(doc.obj)
    elif args.axiom_set == "coalgebra":
        _require(doc, ("coproduct",))
        violations = check_coalgebra(doc.obj)
    elif args.axiom_set == "bialgebra":
        _require(doc, ("bialgebra",))
        b: Bialgebra = doc.obj
        violations = check_ld(b.alg) + check_coalgebra(b.cop) + check_bialgebra(b)
    elif args.axiom_set in ("quadratic", "symplectic", "cocycle"):
        _require(doc, ("form",))
        omega: BilForm = doc.obj
        alg = doc.extras.get("algebra")
        if alg is None:
            raise FileFormatError(f"axiom set {args.axiom_set} needs a form file with an embedded algebra")
        try:
            if args.axiom_set == "quadratic":
                if not isinstance(alg, DendAlgebra):
                    raise FileFormatError("quadratic check needs an embedded dendriform algebra")
                ok_flag = check_quadratic_ld(alg, omega)
            elif args.axiom_set == "symplectic":
                leib = alg.leibniz() if isinstance(alg, DendAlgebra) else alg
                ok_flag = check_symplectic(leib, omega)
            else:
                if not isinstance(alg, DendAlgebra):
                    raise FileFormatError("cocycle check needs an embedded dendriform algebra")
                ok_flag = check_2cocycle(alg, omega)
        except PreconditionError as exc:
            ok_flag = False
            reason = str(exc)

    if ok_flag is None:
        ok_flag = not violations

    if args.json_report:
        print(
            json.dumps(
                {
                    "command": "check",
                    "file": args.file,
                    "axiom_set": args.axiom_set,
                    "ok": ok_flag,
                    "violations": _violations_json(violations, basis),
                    "reason": reason,
                },
                indent=2,
            )
        )
    else:
        _print_violations(violations, basis)
        if reason:
            print(reason)
        print(f"{args.axiom_set}: {'PASS' if ok_flag else 'FAIL'}")
    return 0 if ok_flag else 1


def _load_rtensor_with_algebra(alg_path: str | None, rt_path: str):
    rt_doc = fileio.load(rt_path)
    _require(rt_doc, ("rtensor",))
    alg = rt_doc.extras.get("algebra")
    if alg_path is not None:
        alg_doc = fileio.load(alg_path)
        _require(alg_doc, ("dendriform",))
        alg = alg_doc.obj
    if alg is None:
        raise FileFormatError("no algebra given: pass an algebra file or embed one in the rtensor file")
    return alg, rt_doc.obj


def cmd_classify(args) -> int:
    alg, r = _load_rtensor_with_algebra(args.algebra, args.rtensor)
    cls = classify_r(alg, r)
    payload = {
        "command": "classify",
        "class": cls.tag,
        "is_solution": cls.is_solution,
        "symmetric_part_invariant": cls.symmetric_part_invariant,
        "s_residual_zero": cls.s_residual.is_zero(),
    }
    if args.json_report:
        print(json.dumps(payload, indent=2))
    else:
        print(f"class: {cls.tag}")
        print(f"  solution of the Yang-Baxter-type equation: {cls.is_solution}")
        print(f"  symmetric part invariant: {cls.symmetric_part_invariant}")
        if not cls.is_solution:
            print(f"  obstruction tensor: {cls.s_residual!r}")
        if cls.tag == "QuasiTriangular":
            print(f"  symmetric-part operator kernel dimension: {len(cls.sym_kernel)}")
    return 0


def cmd_construct(args) -> int:
    sub = args.subcommand
    out_doc: dict

    if sub == "dual-rep":
        doc = fileio.load(args.inputs[0])
        _require(doc, ("rep",))
        built = dual_rep(doc.obj)
        if check_dend_rep(built):
            raise PreconditionError("dual action failed verification")
        out_doc = fileio.doc_rep(built, metadata={"construct": "dual-rep"})
    elif sub == "semidirect":
        doc = fileio.load(args.inputs[0])
        _require(doc, ("rep",))
        built = semidirect(doc.obj.alg, doc.obj)
        if check_ld(built):
            raise PreconditionError("semidirect product failed verification")
        out_doc = fileio.doc_dendriform(
            built,
            basis=catalog.basis_labels(built.dim, doc.obj.alg.dim),
            metadata={"construct": "semidirect", "split": doc.obj.alg.dim},
        )
    elif sub == "double":
        doc = fileio.load(args.inputs[0])
        _require(doc, ("bialgebra",))
        from .bialgebra import double as make_double

        built = make_double(doc.obj)
        if check_ld(built):
            raise PreconditionError("double failed verification")
        n = doc.obj.alg.dim
        out_doc = fileio.doc_dendriform(
            built, basis=catalog.basis_labels(built.dim, n), metadata={"construct": "double", "split": n}
        )
    elif sub == "cobound":
        alg, r = _load_rtensor_with_algebra(args.inputs[0] if len(args.inputs) > 1 else None, args.inputs[-1])
        cop = cobound(alg, r)
        out_doc = fileio.doc_coproduct(cop, metadata={"construct": "cobound"})
    elif sub == "canonical-r":
        doc = fileio.load(args.inputs[0])
        _require(doc, ("bialgebra",))
        d, r, cls = canonical_r(doc.obj)
        out_doc = fileio.doc_rtensor(
            r,
            algebra=d,
            basis=catalog.basis_labels(d.dim, doc.obj.alg.dim),
            metadata={"construct": "canonical-r", "classification": cls.tag},
        )
    elif sub == "solution-from-o-operator":
        rep_doc = fileio.load(args.inputs[0])
        _require(rep_doc, ("rep",))
        map_doc = fileio.load(args.inputs[1])
        _require(map_doc, ("map",))
        o = OOperator(t=map_doc.obj, host=rep_doc.obj.alg, rep=rep_doc.obj)
        hat, r = solution_from_o_operator(o)
        from .ybe import check_ldybe

        if not check_ldybe(hat, r):
            raise PreconditionError("promoted tensor failed the equation check")
        out_doc = fileio.doc_rtensor(
            r,
            algebra=hat,
            basis=catalog.basis_labels(hat.dim, rep_doc.obj.alg.dim),
            metadata={"construct": "solution-from-o-operator"},
        )
    elif sub == "quadri-from-o-operator":
        rep_doc = fileio.load(args.inputs[0])
        _require(rep_doc, ("rep",))
        map_doc = fileio.load(args.inputs[1])
        _require(map_doc, ("map",))
        o = OOperator(t=map_doc.obj, host=rep_doc.obj.alg, rep=rep_doc.obj)
        built = quadri_from_o_operator(o)
        if check_quadri(built):
            raise PreconditionError("induced structure failed verification")
        out_doc = fileio.doc_quadri(built, metadata={"construct": "quadri-from-o-operator"})
    elif sub == "quadri-tensor":
        doc1 = fileio.load(args.inputs[0])
        doc2 = fileio.load(args.inputs[1])
        _require(doc1, ("dendriform",))
        _require(doc2, ("dendriform",))
        built = quadri_tensor(doc1.obj, doc2.obj)
        if check_quadri(built):
            raise PreconditionError("tensor-product structure failed verification")
        out_doc = fileio.doc_quadri(built, metadata={"construct": "quadri-tensor"})
    elif sub == "rb-from-factorizable":
        alg, r = _load_rtensor_with_algebra(args.inputs[0] if len(args.inputs) > 1 else None, args.inputs[-1])
        qrb = rb_from_factorizable(alg, r, args.weight)
        out_doc = fileio.doc_map(
            qrb.p,
            algebra=qrb.alg,
            form=qrb.omega,
            weight=qrb.weight,
            metadata={"construct": "rb-from-factorizable"},
        )
    elif sub == "factorizable-from-rb":
        doc = fileio.load(args.inputs[0])
        _require(doc, ("map",))
        if "algebra" not in doc.extras or "form" not in doc.extras or "weight" not in doc.extras:
            raise FileFormatError("factorizable-from-rb needs a map file with algebra, form and weight")
        qrb = QuadraticRB(
            alg=doc.extras["algebra"],
            p=doc.obj,
            omega=doc.extras["form"],
            weight=doc.extras["weight"],
        )
        r = factorizable_from_rb(qrb)
        out_doc = fileio.doc_rtensor(r, algebra=qrb.alg, metadata={"construct": "factorizable-from-rb"})
    elif sub == "dendriform-from-symplectic":
        doc = fileio.load(args.inputs[0])
        _require(doc, ("form",))
        alg = doc.extras.get("algebra")
        if alg is None:
            raise FileFormatError("dendriform-from-symplectic needs a form file with an embedded algebra")
        leib = alg.leibniz() if isinstance(alg, DendAlgebra) else alg
        built = dendriform_from_symplectic(leib, doc.obj)
        if check_ld(built):
            raise PreconditionError("recovered splitting failed verification")
        out_doc = fileio.doc_dendriform(built, metadata={"construct": "dendriform-from-symplectic"})
    else:
        raise FileFormatError(f"unknown construct subcommand {sub!r}")

    fileio.save(out_doc, args.out)
    print(f"wrote {out_doc['kind']} to {args.out}")
    return 0


def cmd_paper_suite(args) -> int:
    results = paper_suite.run_suite(only=args.only, corrupt=args.corrupt)
    if not results:
        print("warning: no golden cases selected; nothing to run")
        return 0
    ok = all(r.ok for r in results)
    if args.json_report:
        print(
            json.dumps(
                {
                    "command": "paper-suite",
                    "ok": ok,
                    "cases": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results],
                },
                indent=2,
            )
        )
    else:
        for r in results:
            print(f"{'PASS' if r.ok else 'FAIL'}  {r.name}: {r.detail}")
        print(f"paper-suite: {sum(r.ok for r in results)}/{len(results)} passed")
    return 0 if ok else 1


def cmd_search(args) -> int:
    bound = args.grid_bound
    if args.target == "dim1-family":
        hits = []
        for p in range(-bound, bound + 1):
            for q_ in range(-bound, bound + 1):
                if not check_ld(catalog.dend1(p, q_)):
                    hits.append((p, q_))
        expected = all(p == -q_ for p, q_ in hits) and len(hits) == 2 * bound + 1
        payload = {
            "command": "search",
            "target": args.target,
            "grid_bound": bound,
            "valid": hits,
            "matches_p_eq_minus_q": expected,
        }
        text = [f"valid (p, q) pairs: {hits}", f"set equals {{p = -q}}: {expected}"]
    elif args.target == "o-operators":
        from .rep import regular_rep

        a = catalog.dend2_nonabelian()
        reg = regular_rep(a)
        hits = []
        for aa in range(-bound, bound + 1):
            for bb in range(-bound, bound + 1):
                for cc in range(-bound, bound + 1):
                    for dd in range(-bound, bound + 1):
                        if check_o_operator(OOperator(t=Matrix([[aa, bb], [cc, dd]]), host=a, rep=reg)):
                            hits.append((aa, bb, cc, dd))
        expected = all(aa == 0 and dd == 0 and bb * cc == 0 for (aa, bb, cc, dd) in hits)
        count_want = 2 * (2 * bound + 1) - 1
        payload = {
            "command": "search",
            "target": args.target,
            "grid_bound": bound,
            "count": len(hits),
            "matches_a_d_zero_bc_zero": expected and len(hits) == count_want,
            "valid": hits,
        }
        text = [
            f"{len(hits)} operator matrices on the grid",
            f"set equals {{a=d=0, bc=0}}: {expected and len(hits) == count_want}",
        ]
    else:
        raise FileFormatError(f"unknown search target {args.target!r}")

    if args.json_report:
        print(json.dumps(payload, indent=2))
    else:
        for line in text:
            print(line)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="leibdend", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="verify an axiom set against a structure file")
    p_check.add_argument("file")
    p_check.add_argument("--axiom-set", choices=AXIOM_SETS, required=True)
    p_check.add_argument("--json-report", action="store_true")
    p_check.set_defaults(fn=cmd_check)

    p_con = sub.add_parser("construct", help="run a verified construction and write its output")
    p_con.add_argument(
        "subcommand",
        choices=(
            "dual-rep",
            "semidirect",
            "double",
            "cobound",
            "canonical-r",
            "solution-from-o-operator",
            "quadri-from-o-operator",
            "quadri-tensor",
            "rb-from-factorizable",
            "factorizable-from-rb",
            "dendriform-from-symplectic",
        ),
    )
    p_con.add_argument("inputs", nargs="+")
    p_con.add_argument("--out", required=True)
    p_con.add_argument("--lambda", dest="weight", default="1", help="nonzero weight for rb-from-factorizable")
    p_con.set_defaults(fn=cmd_construct)

    p_cls = sub.add_parser("classify", help="classify an r-tensor over an algebra")
    p_cls.add_argument("algebra", nargs="?", default=None)
    p_cls.add_argument("rtensor")
    p_cls.add_argument("--json-report", action="store_true")
    p_cls.set_defaults(fn=cmd_classify)

    p_ps = sub.add_parser("paper-suite", help="run the golden regression cases")
    p_ps.add_argument("--only", default=None, help="substring filter on case names")
    p_ps.add_argument("--corrupt", default=None, help="damage the named case's input (self-test mode)")
    p_ps.add_argument("--json-report", action="store_true")
    p_ps.set_defaults(fn=cmd_paper_suite)

    p_se = sub.add_parser("search", help="exhaustive grid sweeps over small families")
    p_se.add_argument("target", choices=("dim1-family", "o-operators"))
    p_se.add_argument("--grid-bound", type=int, default=2)
    p_se.add_argument("--json-report", action="store_true")
    p_se.set_defaults(fn=cmd_search)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (FileFormatError, ShapeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
