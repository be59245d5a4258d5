"""Reading and writing the JSON documents used by the command line tools.

Rationals travel as strings ("3/4", "-2", "0.5") so nothing is ever rounded;
integers are also accepted, floats never.  Decoding is strict: wrong shapes,
out-of-range residues, and duplicate points are rejected with the offending
position named.  Encoding always emits the canonical form, so a decode of an
encode reproduces the original object exactly.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List, Mapping, Sequence

from .errors import DomainError, ParseError
from .groups import METRICS, SUP, FiniteAbelian, GroupCtx, RationalSpace
from .psums import PSpec, pspec
from .rational import Point, Rat, format_rat, parse_rat
from .series import SeriesSpec, series_spec
from .sets import FiniteSet, finite_set

QD = "Qd"
FINAB = "FinAb"


def _require_mapping(obj: Any, what: str) -> Mapping:
    if not isinstance(obj, Mapping):
        raise ParseError(f"{what} must be a JSON object, got {type(obj).__name__}")
    return obj


def _require_list(obj: Any, what: str) -> Sequence:
    if not isinstance(obj, (list, tuple)):
        raise ParseError(f"{what} must be a JSON array, got {type(obj).__name__}")
    return obj


def _get(obj: Mapping, key: str, what: str) -> Any:
    if key not in obj:
        raise ParseError(f"{what} is missing the required key {key!r}")
    return obj[key]


def _decode_rat(raw: Any, where: str) -> Rat:
    if isinstance(raw, bool) or isinstance(raw, float):
        raise ParseError(f"{where}: rationals must be strings or integers, "
                         f"got {raw!r}")
    if isinstance(raw, int):
        return Rat(raw)
    if isinstance(raw, str):
        try:
            return parse_rat(raw)
        except ParseError as exc:
            raise ParseError(f"{where}: {exc}") from None
    raise ParseError(f"{where}: rationals must be strings or integers, got {raw!r}")


# -- groups -------------------------------------------------------------------

def encode_group(ctx: GroupCtx) -> Dict[str, Any]:
    if isinstance(ctx, FiniteAbelian):
        return {"type": FINAB, "moduli": list(ctx.moduli)}
    return {"type": QD, "dim": ctx.dim, "metric": ctx.metric}


def decode_group(obj: Any) -> GroupCtx:
    doc = _require_mapping(obj, "group")
    kind = _get(doc, "type", "group")
    if kind == QD:
        dim = _get(doc, "dim", "group")
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
            raise ParseError(f"group.dim must be a positive integer, got {dim!r}")
        metric = doc.get("metric", SUP)
        if metric not in METRICS:
            raise ParseError(f"group.metric must be one of {METRICS}, got {metric!r}")
        return RationalSpace(dim, metric)
    if kind == FINAB:
        moduli = _require_list(_get(doc, "moduli", "group"), "group.moduli")
        if not moduli:
            raise ParseError("group.moduli must be nonempty")
        for i, m in enumerate(moduli):
            if not isinstance(m, int) or isinstance(m, bool) or m < 2:
                raise ParseError(f"group.moduli[{i}] must be an integer >= 2, got {m!r}")
        return FiniteAbelian(tuple(moduli))
    raise ParseError(f"group.type must be {QD!r} or {FINAB!r}, got {kind!r}")


# -- point sets ---------------------------------------------------------------

def _decode_point(raw: Any, ctx: GroupCtx, where: str) -> Point:
    coords_raw = _require_list(raw, where)
    if len(coords_raw) != ctx.dim:
        raise ParseError(f"{where} has {len(coords_raw)} coordinates, "
                         f"expected {ctx.dim}")
    coords = tuple(_decode_rat(c, f"{where}[{j}]")
                   for j, c in enumerate(coords_raw))
    if isinstance(ctx, FiniteAbelian):
        for j, (c, m) in enumerate(zip(coords, ctx.moduli)):
            if c.denominator != 1 or not 0 <= c < m:
                raise ParseError(f"{where}[{j}]: residue must be an integer "
                                 f"in [0, {m}), got {format_rat(c)}")
    return coords


def _decode_point_list(raw: Any, ctx: GroupCtx, where: str) -> List[Point]:
    entries = _require_list(raw, where)
    if not entries:
        raise ParseError(f"{where} must be nonempty")
    seen: Dict[Point, int] = {}
    points = []
    for i, entry in enumerate(entries):
        p = _decode_point(entry, ctx, f"{where}[{i}]")
        if p in seen:
            raise ParseError(f"{where}[{i}] duplicates {where}[{seen[p]}]")
        seen[p] = i
        points.append(p)
    return points


def encode_set(A: FiniteSet) -> Dict[str, Any]:
    return {
        "group": encode_group(A.ctx),
        "points": [[format_rat(c) for c in p] for p in A.elements],
    }


def decode_set(obj: Any) -> FiniteSet:
    doc = _require_mapping(obj, "set document")
    ctx = decode_group(_get(doc, "group", "set document"))
    points = _decode_point_list(_get(doc, "points", "set document"), ctx, "points")
    return finite_set(ctx, points)


def decode_family(obj: Any) -> List[FiniteSet]:
    """A shared group plus a list of point sets (duplicate points within one
    set are rejected; the sets themselves may repeat)."""
    doc = _require_mapping(obj, "family document")
    ctx = decode_group(_get(doc, "group", "family document"))
    sets_raw = _require_list(_get(doc, "sets", "family document"), "sets")
    if not sets_raw:
        raise ParseError("sets must be nonempty")
    return [
        finite_set(ctx, _decode_point_list(entry, ctx, f"sets[{i}]"))
        for i, entry in enumerate(sets_raw)
    ]


# -- series and P-specs -------------------------------------------------------

def encode_series(s: SeriesSpec) -> Dict[str, Any]:
    doc: Dict[str, Any] = {"terms": [[format_rat(c) for c in t] for t in s.terms]}
    if not s.terms:
        doc["dim"] = s.dim
    return doc


def decode_series(obj: Any) -> SeriesSpec:
    doc = _require_mapping(obj, "series document")
    terms_raw = _require_list(_get(doc, "terms", "series document"), "terms")
    terms = []
    for i, entry in enumerate(terms_raw):
        if isinstance(entry, (list, tuple)):
            terms.append(tuple(_decode_rat(c, f"terms[{i}][{j}]")
                               for j, c in enumerate(entry)))
        else:
            terms.append((_decode_rat(entry, f"terms[{i}]"),))
    dims = {len(t) for t in terms}
    if len(dims) > 1:
        raise ParseError(f"terms have mixed dimensions {sorted(dims)}")
    dim = doc.get("dim")
    if dim is not None and (isinstance(dim, bool) or not isinstance(dim, int)):
        raise ParseError("dim must be an integer")
    try:
        return series_spec(terms, dim=dim)
    except DomainError as exc:
        raise ParseError(str(exc)) from exc


def encode_pspec(spec: PSpec) -> Dict[str, Any]:
    return {
        "P": [format_rat(c) for c in spec.coeffs],
        "terms": [format_rat(t) for t in spec.terms],
    }


def decode_pspec(obj: Any) -> PSpec:
    doc = _require_mapping(obj, "P-spec document")
    coeffs_raw = _require_list(_get(doc, "P", "P-spec document"), "P")
    terms_raw = _require_list(_get(doc, "terms", "P-spec document"), "terms")
    coeffs = [_decode_rat(c, f"P[{i}]") for i, c in enumerate(coeffs_raw)]
    terms = [_decode_rat(t, f"terms[{i}]") for i, t in enumerate(terms_raw)]
    return pspec(coeffs, terms)


# -- files --------------------------------------------------------------------

def dumps(obj: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def load_path(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from None
