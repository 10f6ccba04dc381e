"""Declarative fold-script engine with verified landmark expectations.

A script is an ordered list of steps over a square sheet.  Each step is one
of five kinds (a single-fold alignment, the coupled two-fold operation, a
crease along known geometry, marking an intersection point, or rotating a
length by a reflection fold) and binds its results to named landmarks.
Steps may declare expected landmark values; the runner checks every
declared expectation against the computed value and aborts on the first
violation, so a finished run certifies the whole construction within the
requested tolerance.

The built-in script folds the regular hendecagon of radius 4 centered at
(0, -1) on the sheet [-4, 4] x [-5, 3]: it creases the reference frame,
runs the two simultaneous folds that solve the quintic, transports the
resulting cosine length to the first vertex, and walks the remaining
vertices around the circle by repeated reflection folds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Mapping, Union

from .folds import (
    FoldThroughTwoPoints,
    LineOntoLine,
    PointOntoLinePerpendicularTo,
    PointOntoLineThroughPoint,
    PointOntoPoint,
    ThroughPointPerpendicularTo,
    TwoFoldConfig,
    TwoPointsOntoTwoLines,
    solve_single_fold,
    solve_two_fold,
)
from .geometry import (
    Line,
    Point,
    Scalar,
    intersect,
    line_defect,
    line_through,
    point_distance,
    reflect_point,
)

Landmark = Union[Point, Line]

DEFAULT_TOL = 1e-9

VERTEX_IDS = tuple(f"z{k}" for k in range(11))


class StepFailed(RuntimeError):
    def __init__(self, step_id: str, residual: float, detail: str = ""):
        self.step_id = step_id
        self.residual = residual
        message = f"step {step_id!r} missed an expectation by {residual:.3e}"
        super().__init__(message + (f" ({detail})" if detail else ""))


class UnknownLandmark(KeyError):
    """A step referenced a landmark that no earlier step produced."""


@dataclass(frozen=True)
class Sheet:
    """The paper square: center point and side length, float units."""

    center: Point
    side: float

    @property
    def xmin(self) -> float:
        return self.center.x - self.side / 2

    @property
    def xmax(self) -> float:
        return self.center.x + self.side / 2

    @property
    def ymin(self) -> float:
        return self.center.y - self.side / 2

    @property
    def ymax(self) -> float:
        return self.center.y + self.side / 2

    def edge_lines(self) -> dict:
        return {
            "sheet_left": Line(1.0, 0.0, -self.xmin),
            "sheet_right": Line(1.0, 0.0, -self.xmax),
            "sheet_bottom": Line(0.0, 1.0, -self.ymin),
            "sheet_top": Line(0.0, 1.0, -self.ymax),
        }

    def contains(self, p: Point, slack: float = 1e-9) -> bool:
        return (self.xmin - slack <= p.x <= self.xmax + slack
                and self.ymin - slack <= p.y <= self.ymax + slack)


@dataclass(frozen=True)
class FoldStep:
    """One script step.

    kind is one of single_fold / two_fold / crease_segment / mark_point /
    rotate_length; args holds the kind-specific landmark references (and,
    for single folds, the alignment variant and optional solution index).
    mv is display metadata: mountain, valley or crease.
    """

    id: str
    kind: str
    args: Mapping
    outputs: tuple
    figures: tuple
    annotation: str = ""
    mv: str = "crease"
    expect: Mapping = field(default_factory=dict)


@dataclass(frozen=True)
class FoldScript:
    steps: tuple
    frame: Sheet
    version: int = 1

    def up_to_figure(self, figure: int) -> "FoldScript":
        kept = tuple(s for s in self.steps if min(s.figures) <= figure)
        return replace(self, steps=kept)

    def max_figure(self) -> int:
        return max(f for s in self.steps for f in s.figures)


@dataclass
class ConstructionState:
    """Landmark registry after a run; treat as immutable once returned."""

    landmarks: dict
    residual_log: list
    script: FoldScript
    mode: str = "float"

    @property
    def sheet(self) -> Sheet:
        return self.script.frame

    def max_residual(self) -> float:
        return max((r for _, r in self.residual_log), default=0.0)


_SINGLE_FOLD_VARIANTS = {
    "through_two_points": (
        FoldThroughTwoPoints, (("p", Point), ("q", Point))),
    "point_onto_point": (
        PointOntoPoint, (("moving", Point), ("target", Point))),
    "line_onto_line": (
        LineOntoLine, (("moving", Line), ("target", Line))),
    "perpendicular": (
        ThroughPointPerpendicularTo, (("through", Point), ("to", Line))),
    "point_onto_line_through_point": (
        PointOntoLineThroughPoint,
        (("moving", Point), ("target", Line), ("pivot", Point))),
    "two_points_onto_two_lines": (
        TwoPointsOntoTwoLines,
        (("moving1", Point), ("target1", Line),
         ("moving2", Point), ("target2", Line))),
    "point_onto_line_perpendicular_to": (
        PointOntoLinePerpendicularTo,
        (("moving", Point), ("target", Line), ("perpendicular_to", Line))),
}


def rotate_length(center: Point, frm: Point, fold_axis: Line) -> Point:
    """Carry a length by folding: reflect `frm` across the crease.

    When the crease passes through `center` (as in every script use), the
    distance from `center` is preserved, which is what transports a radius
    to the next polygon vertex.
    """
    return reflect_point(frm, fold_axis)


def expected_vertices(center: Point, radius: Scalar, phase: float = 0.0) -> list:
    """Analytic vertices of the regular hendecagon, counterclockwise."""
    if not float(radius) > 0:
        raise ValueError("radius must be positive")
    cx, cy, r = float(center.x), float(center.y), float(radius)
    return [
        Point(cx + r * math.cos(phase + 2 * math.pi * k / 11),
              cy + r * math.sin(phase + 2 * math.pi * k / 11))
        for k in range(11)
    ]


def _resolve(landmarks: dict, ref: str, want: type) -> Landmark:
    try:
        value = landmarks[ref]
    except KeyError:
        raise UnknownLandmark(ref) from None
    if not isinstance(value, want):
        raise TypeError(f"landmark {ref!r} is {type(value).__name__}, "
                        f"expected {want.__name__}")
    return value


def _execute_step(step: FoldStep, landmarks: dict, tol: float) -> dict:
    kind, args = step.kind, step.args
    if kind == "single_fold":
        cls, fields = _SINGLE_FOLD_VARIANTS[args["variant"]]
        refs = {name: _resolve(landmarks, args[name], want)
                for name, want in fields}
        folds = solve_single_fold(cls(**refs))
        select = args.get("select")
        if select is not None:
            if select >= len(folds):
                raise StepFailed(step.id, float("inf"),
                                 f"wanted solution {select}, found {len(folds)}")
            folds = [folds[select]]
        if len(folds) != len(step.outputs):
            raise StepFailed(step.id, float("inf"),
                             f"{len(folds)} creases for {len(step.outputs)} outputs")
        return dict(zip(step.outputs, folds))
    if kind == "two_fold":
        config = TwoFoldConfig(
            P=_resolve(landmarks, args["P"], Point),
            Q=_resolve(landmarks, args["Q"], Point),
            ell=_resolve(landmarks, args["ell"], Line),
            m=_resolve(landmarks, args["m"], Line),
            n=_resolve(landmarks, args["n"], Line),
        )
        solutions = solve_two_fold(config, tol)
        index = args.get("select", 0)
        if not 0 <= index < len(solutions):
            raise StepFailed(step.id, float("inf"),
                             f"wanted solution {index}, found {len(solutions)}")
        chosen = solutions[index]
        return dict(zip(step.outputs, (chosen.gamma, chosen.delta)))
    if kind == "mark_point":
        l1 = _resolve(landmarks, args["l1"], Line)
        l2 = _resolve(landmarks, args["l2"], Line)
        return {step.outputs[0]: intersect(l1, l2)}
    if kind == "crease_segment":
        if "along" in args:
            value = _resolve(landmarks, args["along"], Line)
        else:
            value = line_through(_resolve(landmarks, args["p"], Point),
                                 _resolve(landmarks, args["q"], Point))
        return {step.outputs[0]: value}
    if kind == "rotate_length":
        center = _resolve(landmarks, args["center"], Point)
        frm = _resolve(landmarks, args["frm"], Point)
        axis = _resolve(landmarks, args["axis"], Line)
        image = rotate_length(center, frm, axis)
        drift = abs(point_distance(image, center) - point_distance(frm, center))
        if drift > tol:
            raise StepFailed(step.id, drift, "rotation changed the radius")
        return {step.outputs[0]: image}
    raise ValueError(f"unknown step kind {kind!r}")


def _expectation_residual(value: Landmark, expected: Landmark) -> float:
    if isinstance(value, Point) and isinstance(expected, Point):
        return point_distance(value.to_float(), expected.to_float())
    if isinstance(value, Line) and isinstance(expected, Line):
        return line_defect(value, expected)
    raise TypeError(f"cannot compare {value!r} with {expected!r}")


def run_script(script: FoldScript, tol: float = DEFAULT_TOL) -> ConstructionState:
    """Execute every step in order, checking declared expectations.

    Raises StepFailed on the first expectation violated beyond tol and
    UnknownLandmark on a dangling reference.  Landmarks are float mode and
    never overwritten, so a truncated script yields a prefix of the full
    run's registry, bit for bit.
    """
    landmarks = dict(script.frame.edge_lines())
    residual_log = []
    for step in script.steps:
        produced = _execute_step(step, landmarks, tol)
        for out_id, value in produced.items():
            if out_id in landmarks:
                raise ValueError(f"step {step.id!r} rebinds landmark {out_id!r}")
            landmarks[out_id] = value
        for out_id, expected in step.expect.items():
            if out_id not in landmarks:
                raise UnknownLandmark(out_id)
            residual = _expectation_residual(landmarks[out_id], expected)
            residual_log.append((f"{step.id}/{out_id}", residual))
            if residual > tol:
                raise StepFailed(step.id, residual, f"landmark {out_id!r}")
    return ConstructionState(landmarks=landmarks, residual_log=residual_log,
                             script=script)


# ----------------------------------------------------------------------
# Built-in script: the radius-4 hendecagon
# ----------------------------------------------------------------------

def _expected_frame_landmarks():
    t = 2 * math.cos(2 * math.pi / 11)
    center = Point(0.0, -1.0)
    verts = expected_vertices(center, 4.0)
    return t, center, verts


def hendecagon_script() -> FoldScript:
    """The twenty-figure construction of the regular hendecagon.

    Figures 1..7 crease the frame landmarks (the two reference axes, Q, m
    and P), figures 8..9 are the simultaneous two-fold solve, figures 10..11
    transport the solved cosine to the vertical vertex guide, 12..14 rotate
    the radius onto the first two vertices, 15..19 walk the remaining
    vertices around the circle, and figure 20 creases the eleven sides.
    Every named landmark carries its analytic expected value.
    """
    t, center, verts = _expected_frame_landmarks()
    steps = []

    def add(step_id, kind, args, outputs, figures, ann="", mv="crease", expect=None):
        steps.append(FoldStep(
            id=step_id, kind=kind, args=args, outputs=tuple(outputs),
            figures=tuple(figures), annotation=ann, mv=mv,
            expect=dict(expect or {})))

    add("fold_ell", "single_fold",
        {"variant": "line_onto_line", "moving": "sheet_left", "target": "sheet_right"},
        ["ell"], [1], "Fold the left edge onto the right edge: vertical axis.",
        "valley", {"ell": Line(1.0, 0.0, 0.0)})
    add("fold_n", "single_fold",
        {"variant": "line_onto_line", "moving": "sheet_bottom", "target": "sheet_top"},
        ["n"], [1], "Fold the bottom edge onto the top edge: horizontal axis.",
        "valley", {"n": Line(0.0, 1.0, 1.0)})
    add("mark_center", "mark_point", {"l1": "ell", "l2": "n"},
        ["center"], [1], "The crease intersection is the paper center.",
        expect={"center": center})

    add("fold_left_half", "single_fold",
        {"variant": "line_onto_line", "moving": "sheet_left", "target": "ell"},
        ["crease_left_half"], [2], "Fold the left edge onto the vertical axis.",
        expect={"crease_left_half": Line(1.0, 0.0, 2.0)})

    add("fold_top_half", "single_fold",
        {"variant": "line_onto_line", "moving": "sheet_top", "target": "n"},
        ["crease_top_half"], [3], "Fold the top edge onto the horizontal axis.",
        expect={"crease_top_half": Line(0.0, 1.0, -1.0)})
    add("mark_Q", "mark_point", {"l1": "crease_top_half", "l2": "ell"},
        ["Q"], [3], "The crease meets the vertical axis at Q.",
        expect={"Q": Point(0.0, 1.0)})

    add("fold_left_34", "single_fold",
        {"variant": "line_onto_line", "moving": "sheet_left", "target": "crease_left_half"},
        ["crease_left_34"], [4], "Fold the left edge onto the previous crease.",
        expect={"crease_left_34": Line(1.0, 0.0, 3.0)})

    add("fold_m_position", "single_fold",
        {"variant": "line_onto_line", "moving": "crease_left_34", "target": "ell"},
        ["crease_m_prelim"], [5],
        "A short crease at the bottom marks where line m will lie.",
        expect={"crease_m_prelim": Line(1.0, 0.0, 1.5)})

    add("mark_m", "crease_segment", {"along": "crease_m_prelim"},
        ["m"], [6], "Fold the paper backwards along the mark: line m.",
        "mountain", {"m": Line(1.0, 0.0, 1.5)})

    add("fold_bottom_half", "single_fold",
        {"variant": "line_onto_line", "moving": "sheet_bottom", "target": "n"},
        ["crease_bottom_half"], [7], "Fold the bottom edge onto the horizontal axis.",
        expect={"crease_bottom_half": Line(0.0, 1.0, 3.0)})
    add("fold_p_vertical", "single_fold",
        {"variant": "line_onto_line", "moving": "crease_left_half",
         "target": "crease_left_34"},
        ["crease_p_vertical"], [7], "Fold one quarter crease onto the other.",
        expect={"crease_p_vertical": Line(1.0, 0.0, 2.5)})
    add("mark_P", "mark_point",
        {"l1": "crease_p_vertical", "l2": "crease_bottom_half"},
        ["P"], [7], "The crease intersection defines P.",
        expect={"P": Point(-2.5, -3.0)})

    add("twofold", "two_fold",
        {"P": "P", "Q": "Q", "ell": "ell", "m": "m", "n": "n", "select": 0},
        ["gamma", "delta"], [8, 9],
        "Fold simultaneously: gamma carries P onto m while delta carries "
        "Q onto n and lays the vertical axis onto gamma.",
        "valley",
        {"gamma": Line(t * t - 1.0, -2.0 * t, -2.0 * t ** 3),
         "delta": Line(t, -1.0, -t * t)})

    add("fold_horizontal_mid", "single_fold",
        {"variant": "line_onto_line", "moving": "crease_top_half", "target": "n"},
        ["midline_horizontal"], [10], "Crease the horizontal through R.",
        expect={"midline_horizontal": Line(0.0, 1.0, 0.0)})
    add("mark_R", "mark_point", {"l1": "delta", "l2": "midline_horizontal"},
        ["R"], [10], "Delta crosses the horizontal midline at R.",
        expect={"R": Point(t, 0.0)})
    add("mark_Qp", "rotate_length", {"center": "R", "frm": "Q", "axis": "delta"},
        ["Qp"], [10], "Refolding along delta carries Q onto Q'.",
        expect={"Qp": Point(2.0 * t, -1.0)})

    add("fold_vertical_Qp", "single_fold",
        {"variant": "perpendicular", "through": "Qp", "to": "n"},
        ["vertex_guide"], [11], "Fold the vertical line through Q'.",
        expect={"vertex_guide": Line(1.0, 0.0, -2.0 * t)})
    add("mark_A", "mark_point", {"l1": "n", "l2": "sheet_right"},
        ["z0"], [11], "Point A on the right edge is adopted as the first vertex.",
        expect={"z0": verts[0]})

    add("fold_rotate_A", "single_fold",
        {"variant": "point_onto_line_through_point",
         "moving": "z0", "target": "vertex_guide", "pivot": "center"},
        ["rot_up", "rot_dn"], [12, 13],
        "Fold through the center placing A onto the vertical guide; "
        "both creases rotate the 4-unit radius.")

    add("mark_z1", "rotate_length",
        {"center": "center", "frm": "z0", "axis": "rot_up"},
        ["z1"], [14], "The upward rotation lands on vertex D.",
        expect={"z1": verts[1]})
    add("mark_z10", "rotate_length",
        {"center": "center", "frm": "z0", "axis": "rot_dn"},
        ["z10"], [14], "The downward rotation lands on the mirror vertex.",
        expect={"z10": verts[10]})

    chain = [
        # (figure, axis id, through vertex, rotated vertex, new vertex)
        (15, "axis1", "z1", "z0", "z2"),
        (16, "axis2", "z2", "z1", "z3"),
        (16, "axis10", "z10", "z0", "z9"),
        (17, "axis3", "z3", "z2", "z4"),
        (17, "axis9", "z9", "z10", "z8"),
        (18, "axis4", "z4", "z3", "z5"),
        (18, "axis8", "z8", "z9", "z7"),
        (19, "axis7", "z7", "z8", "z6"),
    ]
    for figure, axis_id, through, frm, new in chain:
        add(f"crease_{axis_id}", "single_fold",
            {"variant": "through_two_points", "p": "center", "q": through},
            [axis_id], [figure], f"Crease the radius through {through}.")
        add(f"mark_{new}", "rotate_length",
            {"center": "center", "frm": frm, "axis": axis_id},
            [new], [figure], f"Rotate {frm} across the radius to {new}.",
            expect={new: verts[int(new[1:])]})

    for k in range(11):
        a, b = VERTEX_IDS[k], VERTEX_IDS[(k + 1) % 11]
        add(f"crease_side_{k}", "crease_segment", {"p": a, "q": b},
            [f"side_{k}"], [20], f"Fold the side {a}-{b}.", "mountain",
            expect={f"side_{k}": line_through(verts[k], verts[(k + 1) % 11])})

    return FoldScript(steps=tuple(steps), frame=Sheet(center=Point(0.0, -1.0), side=8.0))


# ----------------------------------------------------------------------
# Verification against the analytic polygon
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    worst: float
    tol: float


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple
    out_of_sheet_points: tuple
    off_sheet_lines: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _line_crosses_sheet(l: Line, sheet: Sheet, slack: float = 1e-9) -> bool:
    corners = [
        Point(sheet.xmin, sheet.ymin), Point(sheet.xmax, sheet.ymin),
        Point(sheet.xmax, sheet.ymax), Point(sheet.xmin, sheet.ymax),
    ]
    residuals = [l.a * p.x + l.b * p.y + l.c for p in corners]
    return min(residuals) <= slack and max(residuals) >= -slack


def verify_hendecagon(state: ConstructionState, tol: float = DEFAULT_TOL) -> VerificationReport:
    """Check the constructed polygon against the analytic radius-4 one.

    Verifies vertex positions, the eleven side lengths against the chord
    2 * r * sin(pi / 11), and every radius; also flags landmarks that left
    the sheet (informational, never failing).
    """
    sheet = state.sheet
    center = state.landmarks.get("center", sheet.center)
    try:
        vertices = [state.landmarks[v] for v in VERTEX_IDS]
    except KeyError as missing:
        raise UnknownLandmark(str(missing)) from None

    expected = expected_vertices(center, 4.0)
    vertex_worst = max(point_distance(v, e) for v, e in zip(vertices, expected))

    side = 8.0 * math.sin(math.pi / 11.0)
    side_worst = max(
        abs(point_distance(vertices[k], vertices[(k + 1) % 11]) - side)
        for k in range(11))

    radius_worst = max(abs(point_distance(v, center) - 4.0) for v in vertices)

    checks = (
        CheckResult("vertex_positions", vertex_worst <= tol, vertex_worst, tol),
        CheckResult("side_lengths", side_worst <= tol, side_worst, tol),
        CheckResult("radii", radius_worst <= tol, radius_worst, tol),
    )
    out_points = tuple(
        name for name, value in state.landmarks.items()
        if isinstance(value, Point) and not sheet.contains(value))
    off_lines = tuple(
        name for name, value in state.landmarks.items()
        if isinstance(value, Line) and not _line_crosses_sheet(value, sheet))
    return VerificationReport(checks=checks, out_of_sheet_points=out_points,
                              off_sheet_lines=off_lines)
