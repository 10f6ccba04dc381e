"""Deterministic SVG diagrams of construction states.

One document per requested figure: the sheet, every landmark visible by that
figure (creases style-coded by their mountain/valley/crease metadata, points
as labeled dots), with the figure's new landmarks highlighted.  A final
document shows the finished polygon.  Output bytes depend only on the input
state and spec: floats are printed with a fixed format and landmarks are
drawn in registry order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from xml.sax.saxutils import escape

from .construction import ConstructionState, Sheet, VERTEX_IDS
from .geometry import Line, Point


class IoFailure(OSError):
    """Could not write a diagram to disk."""


@dataclass(frozen=True)
class Style:
    mountain_dash: str = "0.45 0.12 0.1 0.12"
    valley_dash: str = "0.3 0.18"
    crease_dash: str = "0.1 0.16"
    crease_color: str = "#8a8a8a"
    fold_color: str = "#1f4f8f"
    highlight_color: str = "#c22a1d"
    side_color: str = "#111111"
    point_color: str = "#111111"
    label_points: bool = True
    label_lines: bool = True
    stroke_width: float = 0.035


@dataclass(frozen=True)
class DiagramSpec:
    """Which figures to draw, where, and how."""

    figures: tuple = None          # None means every figure plus the final plate
    viewport: tuple = None         # (xmin, ymin, xmax, ymax), world units
    style: Style = field(default_factory=Style)
    out_dir: Path = None
    margin: float = 0.75


def _fmt(v: float) -> str:
    s = f"{v:.4f}"
    return "0.0000" if s == "-0.0000" else s


def _viewport(spec: DiagramSpec, sheet: Sheet) -> tuple:
    # the viewport always contains the whole sheet
    m = spec.margin
    xmin, ymin = sheet.xmin - m, sheet.ymin - m
    xmax, ymax = sheet.xmax + m, sheet.ymax + m
    if spec.viewport is not None:
        vx0, vy0, vx1, vy1 = spec.viewport
        xmin, ymin = min(xmin, vx0), min(ymin, vy0)
        xmax, ymax = max(xmax, vx1), max(ymax, vy1)
    return xmin, ymin, xmax, ymax


def _clip_line(l: Line, box: tuple):
    """Endpoints of the line clipped to the box, or None if it misses."""
    xmin, ymin, xmax, ymax = box
    pts = []
    if abs(l.b) > 1e-15:
        for x in (xmin, xmax):
            y = -(l.a * x + l.c) / l.b
            if ymin - 1e-9 <= y <= ymax + 1e-9:
                pts.append((x, y))
    if abs(l.a) > 1e-15:
        for y in (ymin, ymax):
            x = -(l.b * y + l.c) / l.a
            if xmin - 1e-9 <= x <= xmax + 1e-9:
                pts.append((x, y))
    uniq = []
    for p in pts:
        if not any(abs(p[0] - q[0]) < 1e-9 and abs(p[1] - q[1]) < 1e-9 for q in uniq):
            uniq.append(p)
    if len(uniq) < 2:
        return None
    uniq.sort()
    return uniq[0], uniq[-1]


def _svg_line(p1, p2, color, width, dash="", cls="") -> str:
    dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
    cls_attr = f' class="{cls}"' if cls else ""
    return (f'<line{cls_attr} x1="{_fmt(p1[0])}" y1="{_fmt(-p1[1])}" '
            f'x2="{_fmt(p2[0])}" y2="{_fmt(-p2[1])}" '
            f'stroke="{color}" stroke-width="{_fmt(width)}"{dash_attr} />')


def _svg_point(p: Point, color: str, label: str, style: Style) -> list:
    parts = [f'<circle cx="{_fmt(p.x)}" cy="{_fmt(-p.y)}" r="0.07" '
             f'fill="{color}" />']
    if style.label_points and label:
        parts.append(
            f'<text x="{_fmt(p.x + 0.12)}" y="{_fmt(-p.y - 0.12)}" '
            f'font-family="sans-serif" font-size="0.3" fill="{color}">'
            f'{escape(label)}</text>')
    return parts


def _landmark_figures(steps) -> dict:
    """First figure in which each landmark is shown.

    A step spanning several figures reveals its outputs one per figure in
    order (the simultaneous fold pair is presented as two plates).
    """
    first = {}
    for step in steps:
        figures = step.figures
        for i, out in enumerate(step.outputs):
            first[out] = figures[min(i, len(figures) - 1)]
    return first


def _segment_endpoints(state: ConstructionState) -> dict:
    """Landmarks drawn as segments (crease_segment between two points)."""
    segments = {}
    for step in state.script.steps:
        if step.kind == "crease_segment" and "p" in step.args:
            p = state.landmarks.get(step.args["p"])
            q = state.landmarks.get(step.args["q"])
            if isinstance(p, Point) and isinstance(q, Point):
                segments[step.outputs[0]] = (p, q)
    return segments


def _dash_for(mv: str, style: Style) -> str:
    return {"mountain": style.mountain_dash,
            "valley": style.valley_dash}.get(mv, style.crease_dash)


def _landmark_mv(steps) -> dict:
    return {out: step.mv for step in steps for out in step.outputs}


def _figure_doc(state: ConstructionState, spec: DiagramSpec, figure: int,
                box: tuple) -> str:
    style = spec.style
    steps = state.script.steps
    first = _landmark_figures(steps)
    mv = _landmark_mv(steps)
    segments = _segment_endpoints(state)
    captions = [s.annotation for s in steps
                if figure in s.figures and s.annotation]

    body = [_sheet_rect(state.sheet)]
    for name, value in state.landmarks.items():
        shown = first.get(name)
        if shown is None or shown > figure:
            continue
        new = shown == figure
        if isinstance(value, Line):
            color = style.highlight_color if new else (
                style.crease_color if mv.get(name) == "crease" else style.fold_color)
            width = style.stroke_width * (1.8 if new else 1.0)
            dash = _dash_for(mv.get(name, "crease"), style)
            if name in segments:
                p, q = segments[name]
                body.append(_svg_line((p.x, p.y), (q.x, q.y), color, width,
                                      dash, cls="side"))
            else:
                clipped = _clip_line(value, box)
                if clipped:
                    body.append(_svg_line(*clipped, color, width, dash, cls="crease"))
            if style.label_lines and new:
                body.extend(_line_label(value, name, box, color))
        else:
            color = style.highlight_color if new else style.point_color
            body.extend(_svg_point(value, color, name, style))
    title = f"Figure {figure}"
    caption = " ".join(captions)
    return _document(title, caption, body, box)


def _line_label(l: Line, name: str, box: tuple, color: str) -> list:
    clipped = _clip_line(l, box)
    if not clipped:
        return []
    (x1, y1), (x2, y2) = clipped
    lx, ly = x1 + 0.82 * (x2 - x1), y1 + 0.82 * (y2 - y1)
    return [f'<text x="{_fmt(lx + 0.1)}" y="{_fmt(-ly - 0.1)}" '
            f'font-family="sans-serif" font-size="0.3" font-style="italic" '
            f'fill="{color}">{escape(name)}</text>']


def _sheet_rect(sheet: Sheet) -> str:
    return (f'<rect x="{_fmt(sheet.xmin)}" y="{_fmt(-sheet.ymax)}" '
            f'width="{_fmt(sheet.side)}" height="{_fmt(sheet.side)}" '
            f'fill="#fdfbf4" stroke="#555555" stroke-width="0.04" />')


def _final_doc(state: ConstructionState, spec: DiagramSpec, box: tuple) -> str:
    style = spec.style
    body = [_sheet_rect(state.sheet)]
    vertices = [state.landmarks.get(v) for v in VERTEX_IDS]
    for k, v in enumerate(vertices):
        if v is None:
            continue
        w = vertices[(k + 1) % 11]
        if w is not None:
            body.append(_svg_line((v.x, v.y), (w.x, w.y), style.side_color,
                                  style.stroke_width * 1.8, cls="side"))
    center = state.landmarks.get("center")
    if isinstance(center, Point):
        body.extend(_svg_point(center, style.point_color, "center", style))
    for k, v in enumerate(vertices):
        if v is not None:
            body.extend(_svg_point(v, style.point_color, f"z{k}", style))
    return _document("Finished polygon", "The regular hendecagon, radius 4.",
                     body, box)


def _document(title: str, caption: str, body: list, box: tuple) -> str:
    xmin, ymin, xmax, ymax = box
    width, height = xmax - xmin, ymax - ymin
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width * 56)}" height="{_fmt(height * 56)}" '
        f'viewBox="{_fmt(xmin)} {_fmt(-ymax)} {_fmt(width)} {_fmt(height)}">',
        f'<title>{escape(title)}</title>',
    ]
    if caption:
        head.append(f'<text x="{_fmt(xmin + 0.15)}" y="{_fmt(-ymax + 0.45)}" '
                    f'font-family="sans-serif" font-size="0.26" '
                    f'fill="#333333">{escape(caption)}</text>')
    return "\n".join(head + body + ["</svg>"]) + "\n"


def emit_svg(state: ConstructionState, spec: DiagramSpec = None) -> list:
    """Render diagrams as (name, document) pairs.

    spec.figures selects the plates; None draws every figure of the script
    plus the final polygon plate (appended whenever the last figure is
    included and the state has vertices).
    """
    spec = spec or DiagramSpec()
    box = _viewport(spec, state.sheet)
    last = state.script.max_figure()
    figures = spec.figures
    if figures is None:
        figures = tuple(range(1, last + 1))
    docs = []
    for figure in sorted(set(figures)):
        docs.append((f"step_{figure:02d}", _figure_doc(state, spec, figure, box)))
    if figures and max(figures) >= last and \
            all(v in state.landmarks for v in VERTEX_IDS):
        docs.append(("final", _final_doc(state, spec, box)))
    return docs


def write_svgs(docs: list, out_dir) -> list:
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
        paths = []
        for name, text in docs:
            path = out / f"{name}.svg"
            path.write_text(text, encoding="utf-8")
            paths.append(path)
    except OSError as exc:
        raise IoFailure(f"cannot write diagrams to {out}: {exc}") from exc
    return paths
