"""Structured-text (JSON) file format for every object kind.

One document per object.  All scalars are written as decimal strings
"p/q" (denominator omitted when 1), so files round-trip byte-exactly and
diff cleanly.  Integers are also accepted on input.

Kinds: leibniz, dendriform, quadri, rep, rtensor, coproduct, form, map,
bialgebra, matched_pair.  A form/rtensor/map document may embed the
algebra (and companion data) it belongs with.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .tensorkit import Matrix, Tensor2, format_scalar, q
from .algebra import BilinearOp, DendAlgebra, LeibnizAlgebra
from .rep import DendRep, MatchedPairLD
from .bialgebra import Bialgebra, CoProduct
from .forms import BilForm
from .quadri import QuadriAlgebra

KINDS = (
    "leibniz",
    "dendriform",
    "quadri",
    "rep",
    "rtensor",
    "coproduct",
    "form",
    "map",
    "bialgebra",
    "matched_pair",
)


class FileFormatError(ValueError):
    """Malformed document: unknown kind, bad shape, or unparsable scalar."""


@dataclass
class StructureDoc:
    """A parsed document: the typed object plus labels and metadata."""

    kind: str
    obj: Any
    basis: list[str] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)
    extras: dict = field(default_factory=dict)  # embedded companions (algebra, form, weight)


# -- scalar / array codecs ---------------------------------------------------


def _enc(x) -> str:
    return format_scalar(q(x))


def _dec(x):
    if isinstance(x, bool) or isinstance(x, float):
        raise FileFormatError(f"scalars must be integer or 'p/q' strings, got {x!r}")
    try:
        return q(x)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise FileFormatError(f"bad scalar {x!r}: {exc}") from exc


def _enc_nested(a):
    if isinstance(a, list):
        return [_enc_nested(x) for x in a]
    return _enc(a)


def _dec_nested(a):
    if isinstance(a, list):
        return [_dec_nested(x) for x in a]
    return _dec(a)


def _op_payload(op: BilinearOp):
    return _enc_nested(op.c)


def _op_from(data, dim: int) -> BilinearOp:
    arr = _dec_nested(data)
    if len(arr) != dim or any(len(p) != dim or any(len(r) != dim for r in p) for p in arr):
        raise FileFormatError("structure constants must form an n*n*n array")
    return BilinearOp(arr)


def _matrix_from(data, rows: int, cols: int) -> Matrix:
    arr = _dec_nested(data)
    if len(arr) != rows or any(len(r) != cols for r in arr):
        raise FileFormatError(f"matrix must be {rows}*{cols}")
    return Matrix(arr)


# -- document builders -------------------------------------------------------


def doc_leibniz(l: LeibnizAlgebra, basis=None, metadata=None) -> dict:
    return _with_common(
        {"kind": "leibniz", "dim": l.dim, "circ": _op_payload(l.circ)}, l.dim, basis, metadata
    )


def doc_dendriform(a: DendAlgebra, basis=None, metadata=None) -> dict:
    return _with_common(
        {"kind": "dendriform", "dim": a.dim, "succ": _op_payload(a.succ), "prec": _op_payload(a.prec)},
        a.dim,
        basis,
        metadata,
    )


def doc_quadri(quad: QuadriAlgebra, basis=None, metadata=None) -> dict:
    return _with_common(
        {
            "kind": "quadri",
            "dim": quad.dim,
            "se": _op_payload(quad.se),
            "ne": _op_payload(quad.ne),
            "sw": _op_payload(quad.sw),
            "nw": _op_payload(quad.nw),
        },
        quad.dim,
        basis,
        metadata,
    )


def doc_rep(rep: DendRep, basis=None, metadata=None) -> dict:
    return _with_common(
        {
            "kind": "rep",
            "algebra": doc_dendriform(rep.alg),
            "mdim": rep.mdim,
            "lsucc": [_enc_nested(m.data) for m in rep.lsucc],
            "rsucc": [_enc_nested(m.data) for m in rep.rsucc],
            "lprec": [_enc_nested(m.data) for m in rep.lprec],
            "rprec": [_enc_nested(m.data) for m in rep.rprec],
        },
        rep.alg.dim,
        basis,
        metadata,
    )


def doc_rtensor(r: Tensor2, algebra: DendAlgebra | None = None, basis=None, metadata=None) -> dict:
    doc = _with_common({"kind": "rtensor", "dim": r.dim, "coeff": _enc_nested(r.coeff)}, r.dim, basis, metadata)
    if algebra is not None:
        doc["algebra"] = doc_dendriform(algebra)
    return doc


def doc_coproduct(cop: CoProduct, basis=None, metadata=None) -> dict:
    return _with_common(
        {
            "kind": "coproduct",
            "dim": cop.dim,
            "dsucc": [_enc_nested(t.coeff) for t in cop.dsucc],
            "dprec": [_enc_nested(t.coeff) for t in cop.dprec],
        },
        cop.dim,
        basis,
        metadata,
    )


def doc_form(omega: BilForm, algebra=None, basis=None, metadata=None) -> dict:
    doc = _with_common({"kind": "form", "dim": omega.dim, "matrix": _enc_nested(omega.g.data)}, omega.dim, basis, metadata)
    if isinstance(algebra, DendAlgebra):
        doc["algebra"] = doc_dendriform(algebra)
    elif isinstance(algebra, LeibnizAlgebra):
        doc["algebra"] = doc_leibniz(algebra)
    return doc


def doc_map(m: Matrix, algebra: DendAlgebra | None = None, form: BilForm | None = None, weight=None, metadata=None) -> dict:
    doc = {"kind": "map", "rows": m.rows, "cols": m.cols, "matrix": _enc_nested(m.data)}
    if algebra is not None:
        doc["algebra"] = doc_dendriform(algebra)
    if form is not None:
        doc["form"] = _enc_nested(form.g.data)
    if weight is not None:
        doc["weight"] = _enc(weight)
    if metadata:
        doc["metadata"] = metadata
    return doc


def doc_bialgebra(b: Bialgebra, basis=None, metadata=None) -> dict:
    return _with_common(
        {"kind": "bialgebra", "algebra": doc_dendriform(b.alg), "coproduct": doc_coproduct(b.cop)},
        b.alg.dim,
        basis,
        metadata,
    )


def doc_matched_pair(mp: MatchedPairLD, metadata=None) -> dict:
    def actions(rep: DendRep) -> dict:
        return {
            "lsucc": [_enc_nested(m.data) for m in rep.lsucc],
            "rsucc": [_enc_nested(m.data) for m in rep.rsucc],
            "lprec": [_enc_nested(m.data) for m in rep.lprec],
            "rprec": [_enc_nested(m.data) for m in rep.rprec],
        }

    doc = {
        "kind": "matched_pair",
        "a1": doc_dendriform(mp.a1),
        "a2": doc_dendriform(mp.a2),
        "actions1": actions(mp.rep1),
        "actions2": actions(mp.rep2),
    }
    if metadata:
        doc["metadata"] = metadata
    return doc


def _with_common(doc: dict, dim: int, basis, metadata) -> dict:
    doc["basis"] = list(basis) if basis else [f"e{i + 1}" for i in range(dim)]
    if metadata:
        doc["metadata"] = metadata
    return doc


# -- parsing -----------------------------------------------------------------


def parse_doc(doc: dict) -> StructureDoc:
    if not isinstance(doc, dict):
        raise FileFormatError("document root must be an object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise FileFormatError(f"unknown kind {kind!r}")
    metadata = doc.get("metadata", {})
    basis = doc.get("basis", [])
    extras: dict = {}

    try:
        if kind == "leibniz":
            dim = int(doc["dim"])
            obj = LeibnizAlgebra(_op_from(doc["circ"], dim))
        elif kind == "dendriform":
            dim = int(doc["dim"])
            obj = DendAlgebra(_op_from(doc["succ"], dim), _op_from(doc["prec"], dim))
        elif kind == "quadri":
            dim = int(doc["dim"])
            obj = QuadriAlgebra(*(_op_from(doc[k], dim) for k in ("se", "ne", "sw", "nw")))
        elif kind == "rep":
            alg = _embedded_dendriform(doc["algebra"])
            mdim = int(doc["mdim"])
            fams = {
                k: [_matrix_from(m, mdim, mdim) for m in doc[k]]
                for k in ("lsucc", "rsucc", "lprec", "rprec")
            }
            if any(len(f) != alg.dim for f in fams.values()):
                raise FileFormatError("need one action matrix per algebra basis element")
            obj = DendRep(alg=alg, mdim=mdim, **fams)
        elif kind == "rtensor":
            dim = int(doc["dim"])
            arr = _dec_nested(doc["coeff"])
            if len(arr) != dim or any(len(r) != dim for r in arr):
                raise FileFormatError("coeff must be an n*n array")
            obj = Tensor2(arr)
            if "algebra" in doc:
                extras["algebra"] = _embedded_dendriform(doc["algebra"])
        elif kind == "coproduct":
            dim = int(doc["dim"])
            rows_s = [_matrix_from(t, dim, dim) for t in doc["dsucc"]]
            rows_p = [_matrix_from(t, dim, dim) for t in doc["dprec"]]
            if len(rows_s) != dim or len(rows_p) != dim:
                raise FileFormatError("need one coproduct row per basis element")
            obj = CoProduct([Tensor2(m.data) for m in rows_s], [Tensor2(m.data) for m in rows_p])
        elif kind == "form":
            dim = int(doc["dim"])
            obj = BilForm(_matrix_from(doc["matrix"], dim, dim))
            if "algebra" in doc:
                sub = doc["algebra"]
                if sub.get("kind") == "leibniz":
                    extras["algebra"] = parse_doc(sub).obj
                else:
                    extras["algebra"] = _embedded_dendriform(sub)
        elif kind == "map":
            rows, cols = int(doc["rows"]), int(doc["cols"])
            obj = _matrix_from(doc["matrix"], rows, cols)
            if "algebra" in doc:
                extras["algebra"] = _embedded_dendriform(doc["algebra"])
            if "form" in doc:
                g = _dec_nested(doc["form"])
                extras["form"] = BilForm(Matrix(g))
            if "weight" in doc:
                extras["weight"] = _dec(doc["weight"])
        elif kind == "bialgebra":
            alg = _embedded_dendriform(doc["algebra"])
            cop_doc = parse_doc(doc["coproduct"])
            if cop_doc.kind != "coproduct":
                raise FileFormatError("bialgebra coproduct member must have kind 'coproduct'")
            obj = Bialgebra(alg, cop_doc.obj)
        elif kind == "matched_pair":
            a1 = _embedded_dendriform(doc["a1"])
            a2 = _embedded_dendriform(doc["a2"])

            def rep_from(actions, alg, mdim):
                fams = {
                    k: [_matrix_from(m, mdim, mdim) for m in actions[k]]
                    for k in ("lsucc", "rsucc", "lprec", "rprec")
                }
                return DendRep(alg=alg, mdim=mdim, **fams)

            obj = MatchedPairLD(
                a1=a1,
                a2=a2,
                rep1=rep_from(doc["actions1"], a1, a2.dim),
                rep2=rep_from(doc["actions2"], a2, a1.dim),
            )
        else:  # pragma: no cover
            raise FileFormatError(f"unhandled kind {kind!r}")
    except KeyError as exc:
        raise FileFormatError(f"missing field {exc.args[0]!r} in {kind} document") from exc
    except FileFormatError:
        raise
    except ValueError as exc:
        raise FileFormatError(str(exc)) from exc

    if not basis:
        dim = getattr(obj, "dim", None) or getattr(obj, "alg", None) and obj.alg.dim
        basis = [f"e{i + 1}" for i in range(dim or 0)]
    return StructureDoc(kind=kind, obj=obj, basis=list(basis), metadata=metadata, extras=extras)


def _embedded_dendriform(sub: dict) -> DendAlgebra:
    parsed = parse_doc(sub)
    if parsed.kind != "dendriform":
        raise FileFormatError("embedded algebra must have kind 'dendriform'")
    return parsed.obj


def load(path: str) -> StructureDoc:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}") from exc
    return parse_doc(doc)


def save(doc: dict, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")
