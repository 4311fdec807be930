"""Regenerate tests/baseline_reports.json from the n <= 3 builtin sweeps.

    python3 tools/lock_baseline.py

Only rerun this after a deliberate change to instance order or report format.
"""

import hashlib
import io
import json
from pathlib import Path

from topoforge.verifier import SweepConfig, TheoremId, run_sweep

THEOREMS = (TheoremId.T46_graph_preimage, TheoremId.T49_equalizer,
            TheoremId.C412_dense_agreement, TheoremId.T414_not_discrete)


def main() -> None:
    out = {}
    for theorem in THEOREMS:
        buf = io.StringIO()
        summary = run_sweep(theorem, SweepConfig(max_n=3), buf)
        out[theorem.value] = {"sha256": hashlib.sha256(buf.getvalue().encode()).hexdigest(), "summary": summary}
        print(theorem.value, summary)
    path = Path(__file__).resolve().parent.parent / "tests" / "baseline_reports.json"
    path.write_text(json.dumps(out, indent=2) + "\n")


if __name__ == "__main__":
    main()
