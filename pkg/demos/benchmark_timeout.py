"""Benchmark systems through the command line, with a timeout as a normal outcome.

Exact rational arithmetic makes some classical systems very slow under a
faithful Mora reduction, so ``bench`` reports a timeout instead of failing.
"""

import io
import json

from tategb.cli import run

for system in ("katsura:2", "cyclic:3", "katsura:3"):
    out = io.StringIO()
    code = run(["bench", "--system", system, "--timeout", "10", "--format", "json"], out=out, err=io.StringIO())
    runs = json.loads(out.getvalue())["runs"]
    summary = ", ".join(f"{r['status']} {r.get('seconds', 0):.2f}s" for r in runs)
    print(f"{system:<10} exit {code}: {summary}")
