"""JSON and CSV encodings for tensors, designs, decompositions, matrices and
bound tables.

JSON payloads carry a top-level ``"schema": 1`` and are written key-sorted so
that identical inputs give byte-identical output.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
from fractions import Fraction

import numpy as np

from .cone import DecompositionTerm, ProductDecomposition
from .designs import OrthogonalDesign
from .quantum import HermitianMatrix
from .tensors import DenseTensor

SCHEMA = 1


def dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _scalar(x):
    if isinstance(x, (np.integer, int)):
        return int(x)
    return float(x)


def tensor_to_dict(t: DenseTensor) -> dict:
    return {
        "schema": SCHEMA,
        "order": t.order,
        "axis": t.axis,
        "exact": t.is_exact,
        "components": [_scalar(x) for x in t.components],
    }


def tensor_from_dict(payload: dict) -> DenseTensor:
    order, axis = payload["order"], payload["axis"]
    comps = payload["components"]
    if len(comps) != axis ** order:
        raise ValueError(f"expected {axis ** order} components, got {len(comps)}")
    dtype = np.int64 if payload.get("exact", all(isinstance(c, int) for c in comps)) else float
    return DenseTensor(np.asarray(comps, dtype=dtype).reshape((axis,) * order))


def tensor_to_csv(t: DenseTensor) -> str:
    """Header comment with order and axis, then one row per component with
    1-based indices, in row-major order."""
    buf = io.StringIO()
    buf.write(f"# order={t.order} axis={t.axis}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"i{k + 1}" for k in range(t.order)] + ["value"])
    for idx in itertools.product(range(t.axis), repeat=t.order):
        w.writerow([i + 1 for i in idx] + [_scalar(t.data[idx])])
    return buf.getvalue()


def tensor_from_csv(text: str) -> DenseTensor:
    lines = text.splitlines()
    meta = dict(part.split("=") for part in lines[0].lstrip("# ").split())
    order, axis = int(meta["order"]), int(meta["axis"])
    rows = list(csv.reader(lines[2:]))
    values = [r[-1] for r in rows]
    exact = all(v.lstrip("-").isdigit() for v in values)
    data = np.zeros((axis,) * order, dtype=np.int64 if exact else float)
    for r in rows:
        idx = tuple(int(i) - 1 for i in r[:-1])
        data[idx] = int(r[-1]) if exact else float(r[-1])
    return DenseTensor(data)


def design_to_dict(d: OrthogonalDesign, report=()) -> dict:
    """The design matrices as an order-3 tensor (matrix index, row, column)."""
    return {
        "schema": SCHEMA,
        "n": d.n,
        "N": d.N,
        "matrices": tensor_to_dict(DenseTensor(d.stack())),
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in report],
    }


def design_from_dict(payload: dict) -> OrthogonalDesign:
    t = tensor_from_dict(payload["matrices"])
    return OrthogonalDesign(n=payload["n"], N=payload["N"], matrices=tuple(t.data))


def decomposition_to_dict(d: ProductDecomposition) -> dict:
    return {
        "schema": SCHEMA,
        "m": d.m,
        "terms": [{"weight": [t.weight.numerator, t.weight.denominator], "factors": list(t.factors)}
                  for t in d.terms],
    }


def decomposition_from_dict(payload: dict) -> ProductDecomposition:
    terms = tuple(DecompositionTerm(Fraction(*t["weight"]), tuple(t["factors"]))
                  for t in payload["terms"])
    return ProductDecomposition(payload["m"], terms)


def matrix_to_dict(h: HermitianMatrix, exact: bool = False, summary=None) -> dict:
    if exact:
        red = h.reduced()
        payload = {
            "schema": SCHEMA,
            "dim": h.dim,
            "exact": True,
            "denominator": red.denominator,
            "re": red.re.tolist(),
            "im": red.im.tolist(),
        }
    else:
        a = h.to_numpy() if isinstance(h, HermitianMatrix) else np.asarray(h)
        payload = {
            "schema": SCHEMA,
            "dim": a.shape[0],
            "exact": False,
            "entries": [[[float(z.real), float(z.imag)] for z in row] for row in a],
        }
    if summary is not None:
        payload["summary"] = summary
    return payload


def matrix_from_dict(payload: dict):
    """HermitianMatrix for exact payloads, complex ndarray otherwise."""
    if payload.get("exact"):
        return HermitianMatrix(np.asarray(payload["re"], dtype=np.int64),
                               np.asarray(payload["im"], dtype=np.int64),
                               int(payload["denominator"]))
    e = np.asarray(payload["entries"], dtype=float)
    return e[..., 0] + 1j * e[..., 1]


def matrix_to_csv(h, exact: bool = False) -> str:
    """One row per entry: i, j, re, im (1-based).  Exact mode writes integer
    numerators under a ``# denominator=`` header."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if exact:
        red = h.reduced()
        buf.write(f"# dim={red.dim} denominator={red.denominator}\n")
        re, im = red.re, red.im
    else:
        a = h.to_numpy() if isinstance(h, HermitianMatrix) else np.asarray(h)
        buf.write(f"# dim={a.shape[0]}\n")
        re, im = a.real, a.imag
    w.writerow(["i", "j", "re", "im"])
    for i, j in itertools.product(range(re.shape[0]), repeat=2):
        w.writerow([i + 1, j + 1, _scalar(re[i, j]), _scalar(im[i, j])])
    return buf.getvalue()


def bounds_to_csv(reports, asymptote=None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m", "r_lower", "r_upper", "ratio"])
    for r in reports:
        w.writerow([r.m, repr(r.r_lower), repr(r.r_upper), repr(r.ratio)])
    if asymptote is not None:
        w.writerow(["inf", "", "", repr(asymptote)])
    return buf.getvalue()
