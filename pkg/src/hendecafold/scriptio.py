"""Lossless structured-text serialization of fold scripts and fold configs.

The on-disk format is versioned JSON in which every geometric number is a
string: exact rationals as "p/q" (or a bare integer), floats via repr, which
round-trips exactly.  Points are {"point": [x, y]}, lines {"line": [a, b, c]}.
The same conventions serve both fold-script files and the standalone
two-fold configuration files accepted by the command line.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .construction import FoldScript, FoldStep, Sheet
from .folds import TwoFoldConfig
from .geometry import Line, Point, Scalar

SCRIPT_FORMAT = "fold-script"
CONFIG_FORMAT = "two-fold-config"
FORMAT_VERSION = 1


class FormatError(ValueError):
    """Malformed or unsupported script/config document."""


def encode_number(value: Scalar) -> str:
    if isinstance(value, float):
        return repr(value)
    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def decode_number(text: str) -> Scalar:
    if not isinstance(text, str):
        raise FormatError(f"numbers must be encoded as strings, got {text!r}")
    if "/" in text:
        return Fraction(text)
    if any(ch in text for ch in ".eE"):
        return float(text)
    try:
        return Fraction(int(text))
    except ValueError as exc:
        raise FormatError(f"unreadable number {text!r}") from exc


def _encode_value(value):
    if isinstance(value, Point):
        return {"point": [encode_number(value.x), encode_number(value.y)]}
    if isinstance(value, Line):
        return {"line": [encode_number(value.a), encode_number(value.b),
                         encode_number(value.c)]}
    raise FormatError(f"cannot encode {value!r}")


def _decode_value(obj):
    if not isinstance(obj, dict) or len(obj) != 1:
        raise FormatError(f"expected a point/line object, got {obj!r}")
    if "point" in obj:
        x, y = obj["point"]
        return Point(decode_number(x), decode_number(y))
    if "line" in obj:
        a, b, c = obj["line"]
        return Line.from_canonical(decode_number(a), decode_number(b),
                                   decode_number(c))
    raise FormatError(f"expected a point/line object, got {obj!r}")


def _step_to_obj(step: FoldStep) -> dict:
    return {
        "id": step.id,
        "kind": step.kind,
        "args": dict(step.args),
        "outputs": list(step.outputs),
        "figures": list(step.figures),
        "annotation": step.annotation,
        "mv": step.mv,
        "expect": {k: _encode_value(v) for k, v in step.expect.items()},
    }


def _step_from_obj(obj: dict) -> FoldStep:
    try:
        return FoldStep(
            id=obj["id"],
            kind=obj["kind"],
            args=dict(obj["args"]),
            outputs=tuple(obj["outputs"]),
            figures=tuple(obj["figures"]),
            annotation=obj.get("annotation", ""),
            mv=obj.get("mv", "crease"),
            expect={k: _decode_value(v) for k, v in obj.get("expect", {}).items()},
        )
    except KeyError as missing:
        raise FormatError(f"step missing field {missing}") from None


def encode_script(script: FoldScript) -> str:
    doc = {
        "format": SCRIPT_FORMAT,
        "version": script.version,
        "frame": {
            "center": [encode_number(script.frame.center.x),
                       encode_number(script.frame.center.y)],
            "side": encode_number(script.frame.side),
        },
        "steps": [_step_to_obj(s) for s in script.steps],
    }
    return json.dumps(doc, indent=1)


def decode_script(text: str) -> FoldScript:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid structured text: {exc}") from exc
    if doc.get("format") != SCRIPT_FORMAT:
        raise FormatError(f"not a {SCRIPT_FORMAT} document")
    if doc.get("version") != FORMAT_VERSION:
        raise FormatError(f"unsupported version {doc.get('version')!r}")
    frame = doc["frame"]
    cx, cy = (decode_number(v) for v in frame["center"])
    sheet = Sheet(center=Point(float(cx), float(cy)),
                  side=float(decode_number(frame["side"])))
    steps = tuple(_step_from_obj(o) for o in doc["steps"])
    return FoldScript(steps=steps, frame=sheet, version=doc["version"])


def encode_two_fold_config(config: TwoFoldConfig) -> str:
    doc = {
        "format": CONFIG_FORMAT,
        "version": FORMAT_VERSION,
        "P": _encode_value(config.P),
        "Q": _encode_value(config.Q),
        "ell": _encode_value(config.ell),
        "m": _encode_value(config.m),
        "n": _encode_value(config.n),
    }
    return json.dumps(doc, indent=1)


def decode_two_fold_config(text: str) -> TwoFoldConfig:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid structured text: {exc}") from exc
    if doc.get("format") != CONFIG_FORMAT:
        raise FormatError(f"not a {CONFIG_FORMAT} document")
    if doc.get("version") != FORMAT_VERSION:
        raise FormatError(f"unsupported version {doc.get('version')!r}")
    try:
        return TwoFoldConfig(
            P=_decode_value(doc["P"]),
            Q=_decode_value(doc["Q"]),
            ell=_decode_value(doc["ell"]),
            m=_decode_value(doc["m"]),
            n=_decode_value(doc["n"]),
        )
    except KeyError as missing:
        raise FormatError(f"config missing field {missing}") from None
