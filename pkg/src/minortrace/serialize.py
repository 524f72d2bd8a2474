"""JSON encodings for rings, elements, matrices, and CLI reports.

Emission is byte-canonical (sorted keys, no whitespace), and integers ride
as decimal strings so arbitrary precision survives any JSON implementation.
Ring encodings:

    {"kind":"int"}
    {"kind":"mod","modulus":"<decimal>"}
    {"kind":"gf","p":"<decimal>"}
    {"kind":"poly","base":<ring>,"var":"x"}

Elements of the integer-like rings are decimal strings; polynomial elements
are arrays of base-ring elements, lowest degree first.  A matrix is
{"ring": <ring>, "rows": [[<elem>, ...], ...]}.
"""

from __future__ import annotations

import json

from .matrices import Matrix
from .probe import ProbeReport
from .oracle import EquivalenceReport
from .rings import (
    IntegerRing,
    ModularRing,
    PolynomialRing,
    PrimeFieldRing,
    Ring,
    RingElem,
)
from .structure import MinorWitness, OuterFactors, StructureVerdict


class SerializeError(Exception):
    """Malformed or inconsistent serialized input."""


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, no whitespace variance."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def loads(text: str):
    try:
        return json.loads(text)
    except ValueError as exc:
        raise SerializeError(f"invalid JSON: {exc}") from exc


# ---------------------------------------------------------------------------
# Rings

def ring_to_obj(ring: Ring) -> dict:
    if isinstance(ring, IntegerRing):
        return {"kind": "int"}
    if isinstance(ring, ModularRing):
        return {"kind": "mod", "modulus": str(ring.modulus)}
    if isinstance(ring, PrimeFieldRing):
        return {"kind": "gf", "p": str(ring.p)}
    if isinstance(ring, PolynomialRing):
        return {"kind": "poly", "base": ring_to_obj(ring.base), "var": ring.var}
    raise SerializeError(f"no encoding for ring {ring!r}")


def _parse_int(value, what: str) -> int:
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError:
            pass
    raise SerializeError(f"{what}: expected a decimal integer, got {value!r}")


def ring_from_obj(obj) -> Ring:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise SerializeError(f"ring object expected, got {obj!r}")
    kind = obj["kind"]
    try:
        if kind == "int":
            return IntegerRing()
        if kind == "mod":
            return ModularRing(_parse_int(obj.get("modulus"), "modulus"))
        if kind == "gf":
            return PrimeFieldRing(_parse_int(obj.get("p"), "p"))
        if kind == "poly":
            var = obj.get("var", "x")
            if not isinstance(var, str):
                raise SerializeError(f"var: expected a string, got {var!r}")
            return PolynomialRing(ring_from_obj(obj.get("base")), var)
    except ValueError as exc:
        raise SerializeError(str(exc)) from exc
    raise SerializeError(f"unknown ring kind {kind!r}")


def parse_ring_spec(spec: str) -> Ring:
    """Ring spec strings: "int", "mod:<m>", "gf:<p>", "poly:<base>:<var>"."""
    try:
        if spec == "int":
            return IntegerRing()
        if spec.startswith("mod:"):
            return ModularRing(_parse_int(spec[4:], "modulus"))
        if spec.startswith("gf:"):
            return PrimeFieldRing(_parse_int(spec[3:], "p"))
        if spec.startswith("poly:"):
            base_spec, _, var = spec[5:].rpartition(":")
            if not base_spec:
                raise SerializeError(f"bad ring spec {spec!r}")
            return PolynomialRing(parse_ring_spec(base_spec), var)
    except ValueError as exc:
        raise SerializeError(str(exc)) from exc
    raise SerializeError(f"bad ring spec {spec!r}")


# ---------------------------------------------------------------------------
# Elements and matrices

def elem_to_obj(ring: Ring, value):
    if isinstance(ring, PolynomialRing):
        return [elem_to_obj(ring.base, c) for c in value]
    return str(value)


def elem_from_obj(ring: Ring, obj):
    """Parse one element into canonical raw form."""
    if isinstance(ring, PolynomialRing):
        if not isinstance(obj, list):
            raise SerializeError(f"polynomial element expects an array, got {obj!r}")
        return ring.canon([elem_from_obj(ring.base, c) for c in obj])
    return ring.canon(_parse_int(obj, "element"))


def matrix_to_obj(m: Matrix) -> dict:
    return {
        "ring": ring_to_obj(m.ring),
        "rows": [[elem_to_obj(m.ring, x) for x in row] for row in m.data],
    }


def matrix_from_obj(obj) -> Matrix:
    if not isinstance(obj, dict) or "ring" not in obj or "rows" not in obj:
        raise SerializeError('matrix object needs "ring" and "rows"')
    ring = ring_from_obj(obj["ring"])
    rows = obj["rows"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise SerializeError('"rows" must be an array of arrays')
    return Matrix.from_rows(ring, [[elem_from_obj(ring, x) for x in r] for r in rows])


# ---------------------------------------------------------------------------
# Reports (indices go out 1-based, matching written conventions)

def minor_witness_to_obj(ring: Ring, witness: MinorWitness) -> dict:
    idx = witness.index
    return {
        "rows": [idx.i + 1, idx.j + 1],
        "cols": [idx.k + 1, idx.l + 1],
        "value": elem_to_obj(ring, witness.value.value),
    }


def verdict_to_obj(ring: Ring, verdict: StructureVerdict) -> dict:
    out: dict = {"structured": verdict.structured}
    if verdict.witness is not None:
        out["witness"] = minor_witness_to_obj(ring, verdict.witness)
    return out


def probe_report_to_obj(ring: Ring, report: ProbeReport) -> dict:
    out: dict = {"structured": report.structured}
    w = report.witness
    if w is not None:
        out["witness"] = {
            "minor_rows": [w.minor.i + 1, w.minor.j + 1],
            "minor_cols": [w.minor.k + 1, w.minor.l + 1],
            "minor_value": elem_to_obj(ring, w.minor_value.value),
            "unit_row": w.unit_row + 1,
            "unit_col": w.unit_col + 1,
            "entry_row": w.entry_row + 1,
            "entry_col": w.entry_col + 1,
            "lhs": elem_to_obj(ring, w.lhs.value),
            "rhs": elem_to_obj(ring, w.rhs.value),
        }
    return out


def factors_to_obj(factors: OuterFactors | None) -> dict:
    if factors is None:
        return {"factors": None}
    return {
        "factors": {
            "col": matrix_to_obj(factors.col),
            "row": matrix_to_obj(factors.row),
        }
    }


def equivalence_report_to_obj(report: EquivalenceReport) -> dict:
    return {
        "ring": ring_to_obj(report.ring),
        "n": report.n,
        "total": report.total,
        "set_identity": report.set_identity,
        "set_minors": report.set_minors,
        "agree": report.agree,
        "mismatches": [matrix_to_obj(m) for m in report.mismatches],
    }
