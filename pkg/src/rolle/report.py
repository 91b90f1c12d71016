"""Structured command reports: JSON encoding and human-readable text."""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from importlib import resources
from typing import Any

import numpy as np

from .poly import Poly, format_complex
from .regions import Region

SCHEMA_NAME = "report.schema.json"


def to_jsonable(obj: Any) -> Any:
    """Convert library values to plain JSON types.

    Complex numbers become ``{"re": x, "im": y}``; Python's float repr is the
    shortest string that round-trips, so no precision is lost.
    """
    if isinstance(obj, (bool, str)) or obj is None:
        return obj
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return {"re": float(obj.real) + 0.0, "im": float(obj.imag) + 0.0}
    if isinstance(obj, Fraction):
        return {"numerator": str(obj.numerator), "denominator": str(obj.denominator)}
    if isinstance(obj, Poly):
        return {"degree": obj.degree, "coeffs": [to_jsonable(complex(c)) for c in obj.coeffs]}
    if isinstance(obj, Region):
        return obj.to_spec()
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot encode {type(obj).__name__}")


def _decode_hook(d: dict):
    if d.keys() == {"re", "im"}:
        return complex(d["re"], d["im"])
    if d.keys() == {"numerator", "denominator"}:
        return Fraction(int(d["numerator"]), int(d["denominator"]))
    return d


@dataclass
class Report:
    command: str
    inputs: dict
    outputs: dict
    diagnostics: list = field(default_factory=list)
    version: str = ""

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": to_jsonable(self.inputs),
            "outputs": to_jsonable(self.outputs),
            "diagnostics": [str(d) for d in self.diagnostics],
            "version": self.version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, allow_nan=False)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        d = json.loads(text, object_hook=_decode_hook)
        return cls(d["command"], d["inputs"], d["outputs"], d["diagnostics"], d["version"])

    def to_text(self) -> str:
        lines = [f"{self.command}"]
        for k, v in self.inputs.items():
            lines.append(f"  {k} = {_human(v)}")
        lines.extend(_human_block(self.outputs, 0))
        for d in self.diagnostics:
            lines.append(f"warning: {d}")
        return "\n".join(lines)


def _human(v) -> str:
    if isinstance(v, complex):
        return format_complex(v, 6)
    if isinstance(v, float):
        return f"{v:.6g}"
    if isinstance(v, Enum):
        return v.value
    if isinstance(v, Poly):
        return f"<degree {v.degree} polynomial>"
    if isinstance(v, Region):
        return v.to_spec()
    if isinstance(v, (list, tuple)) and all(isinstance(x, (complex, float, int)) for x in v):
        if len(v) > 12:
            return "[" + ", ".join(_human(x) for x in v[:12]) + f", ... ({len(v)} total)]"
        return "[" + ", ".join(_human(x) for x in v) + "]"
    return str(v)


def _human_block(d: dict, depth: int):
    pad = "  " * depth
    out = []
    for k, v in d.items():
        if dataclasses.is_dataclass(v) and not isinstance(v, type):
            v = {f.name: getattr(v, f.name) for f in dataclasses.fields(v)}
        if isinstance(v, dict):
            out.append(f"{pad}{k}:")
            out.extend(_human_block(v, depth + 1))
        elif isinstance(v, (list, tuple)) and v and isinstance(v[0], dict):
            out.append(f"{pad}{k}:")
            for item in v:
                out.append(f"{pad}  - " + ", ".join(f"{a}={_human(b)}" for a, b in item.items()))
        else:
            out.append(f"{pad}{k}: {_human(v)}")
    return out


def load_schema() -> dict:
    return json.loads(resources.files("rolle").joinpath(SCHEMA_NAME).read_text())
