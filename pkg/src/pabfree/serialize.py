"""JSON encoding for reports: stable key order, exact big integers, and
witnesses written as explicit host-vertex lists."""

from __future__ import annotations

import dataclasses
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Mapping

from .graph import Graph, PatternPab
from .oracles import ColouringCertificate
from .subdivision import SubdivisionWitness, pattern_labels

SCHEMA_VERSION = "1.0"

# integers above this are written as decimal strings so no JSON reader
# silently rounds them
SAFE_INT = 2 ** 53


def big_str(x: int) -> str:
    """Decimal string of any int, lifting the interpreter's digit cap."""
    if hasattr(sys, "set_int_max_str_digits"):
        old = sys.get_int_max_str_digits()
        sys.set_int_max_str_digits(0)
        try:
            return str(x)
        finally:
            sys.set_int_max_str_digits(old)
    return str(x)


def encode_int(x: int) -> int | str:
    return x if -SAFE_INT < x < SAFE_INT else big_str(x)


def int_summary(x: int, lead: int = 12) -> int | dict:
    """Exact value when JSON-safe, else digit count and leading digits."""
    if -SAFE_INT < x < SAFE_INT:
        return x
    text = big_str(abs(x))
    return {"digits": len(text), "leading": text[:lead], "sign": -1 if x < 0 else 1}


def _key(k: Any) -> str:
    if isinstance(k, tuple):
        return ",".join(str(x) for x in k)
    return str(k)


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return encode_int(obj)
    if isinstance(obj, Fraction):
        if obj.denominator == 1:
            return big_str(obj.numerator)
        return f"{big_str(obj.numerator)}/{big_str(obj.denominator)}"
    if isinstance(obj, SubdivisionWitness):
        return witness_json(obj)
    if isinstance(obj, ColouringCertificate):
        return certificate_json(obj)
    if isinstance(obj, Graph):
        return {"n": obj.n, "edges": [list(e) for e in obj.edges()]}
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, Mapping):
        return {_key(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(x) for x in items]
    raise TypeError(f"cannot encode {type(obj).__name__}")


def witness_json(w: SubdivisionWitness, pattern: PatternPab | Graph | None = None,
                 id_map: Callable[[int], int] | None = None) -> dict:
    """Branch map and paths in host ids (after ``id_map``), plus pattern
    role labels when the pattern is known."""
    m = id_map or (lambda v: v)
    labels = pattern_labels(pattern) if pattern is not None else {}
    out = {
        "branch": [{"pattern_vertex": v, "role": labels.get(v, str(v)), "host_vertex": m(h)}
                   for v, h in sorted(w.branch.items())],
        "paths": [{"edge": [u, v], "vertices": [m(x) for x in p]}
                  for (u, v), p in sorted(w.paths.items())],
        "vertices": sorted(m(x) for x in w.vertices()),
    }
    return out


def certificate_json(cert: ColouringCertificate, id_map: Callable[[int], int] | None = None) -> dict:
    m = id_map or (lambda v: v)
    return {
        "colours_used": cert.colours_used,
        "colour": {str(m(v)): c for v, c in enumerate(cert.colour)},
    }


def dumps(payload: Any) -> str:
    return json.dumps(to_jsonable(payload), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
