"""Compare the compiled scan kernel with the numpy fallback.

    python benchmarks/bench_scan.py [--repeat 3] [--json]

Each case scans every point of exact order L on a curve; both backends must
return identical hit lists.
"""

import argparse
import json
import statistics
import sys
import time

from torsion_cosets.parse import parse_poly
from torsion_cosets.scan import BACKENDS, scan_order

CASES = [
    ("x + y - 1", (60, 120, 240)),
    ("x^2*y^3 - 1", (169, 338, 420)),
    ("x^2 + y^2 + y + 2", (210, 360)),
    ("x^3*y - 2*x*y^2 + x^-1 + 3", (180, 256, 500)),
]


def time_case(f, L, backend, repeat):
    runs = []
    hits = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        hits = scan_order(f, L, backend=backend)
        runs.append(time.perf_counter() - t0)
    return statistics.median(runs), hits


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    rows = []
    for text, orders in CASES:
        f = parse_poly(text).poly
        for L in orders:
            row = {"curve": text, "L": L, "grid": L * L}
            ref = None
            for backend in BACKENDS:
                sec, hits = time_case(f, L, backend, args.repeat)
                if ref is not None and hits != ref:
                    print(f"backend mismatch on {text!r}, L={L}", file=sys.stderr)
                    return 1
                ref = hits
                row[backend] = sec
            row["hits"] = len(ref)
            if "compiled" in row:
                row["speedup"] = row["python"] / row["compiled"]
            rows.append(row)

    if args.json:
        print(json.dumps(rows, indent=2, sort_keys=True))
        return 0
    if "compiled" not in BACKENDS:
        print("compiled kernel not built; timing the numpy fallback only")
    header = f"{'curve':<30} {'L':>5} {'hits':>5} " + " ".join(f"{b:>10}" for b in BACKENDS)
    print(header + ("  speedup" if "compiled" in BACKENDS else ""))
    for r in rows:
        line = f"{r['curve']:<30} {r['L']:>5} {r['hits']:>5} "
        line += " ".join(f"{r[b] * 1e3:>8.1f}ms" for b in BACKENDS)
        if "speedup" in r:
            line += f"  {r['speedup']:6.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
