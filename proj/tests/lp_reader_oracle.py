"""Re-read an exported LP file with HiGHS and check its dimensions.

Usage: lp_reader_oracle.py <path to mvrp binary>
Exits 77 (skipped) when highspy is not installed.
"""

import subprocess
import sys
import tempfile
from pathlib import Path

try:
    import highspy
except ImportError:
    print("highspy not installed; skipping")
    sys.exit(77)


def main() -> int:
    mvrp = sys.argv[1]
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        (tmp / "tri.txt").write_text("N 4 DEPOT 1\n1 0 0\n2 3 0\n3 0 4\n4 9 9\n")
        for n, cluster in ((3, "2,3"), (4, "2,3,4")):
            lp = tmp / f"n{n}.lp"
            subprocess.run(
                [mvrp, "export-lp", "-i", str(tmp / "tri.txt"), "--cluster", cluster, "-o", str(lp)],
                check=True,
            )
            h = highspy.Highs()
            h.setOptionValue("output_flag", False)
            if h.readModel(str(lp)) != highspy.HighsStatus.kOk:
                print(f"HiGHS could not read {lp}")
                return 1
            cols, rows = h.getNumCol(), h.getNumRow()
            want = n * (n - 1) * n
            want_rows = 3 * n + n * n
            print(f"n={n}: {cols} columns, {rows} rows")
            if cols != want or rows != want_rows:
                print(f"expected {want} columns and {want_rows} rows")
                return 1
            integrality = h.getLp().integrality_
            if any(v != highspy.HighsVarType.kInteger for v in integrality):
                print("not every column is integer")
                return 1
            if n == 3:
                h.run()
                obj = h.getInfo().objective_function_value
                print(f"n=3 optimum {obj}")
                if abs(obj - 12.0) > 1e-6:
                    return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
