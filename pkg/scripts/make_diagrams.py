#!/usr/bin/env python3
"""Fold the hendecagon and write all 21 diagram plates to ./out."""

import sys
from pathlib import Path

from hendecafold.construction import hendecagon_script, run_script, verify_hendecagon
from hendecafold.render import DiagramSpec, emit_svg, write_svgs


def main() -> int:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("out")
    state = run_script(hendecagon_script())
    paths = write_svgs(emit_svg(state, DiagramSpec()), out)
    report = verify_hendecagon(state)
    print(f"wrote {len(paths)} plates to {out}/")
    print(f"max step residual: {state.max_residual():.3e}")
    for check in report.checks:
        print(f"{check.name}: worst {check.worst:.3e} (tol {check.tol:.0e})")
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
