#!/usr/bin/env python3
"""Compare `gdet det` against the sympy oracle on random elements."""
import json
import random
import subprocess
import sys

from group_det_oracle import group_det


def main():
    cli = sys.argv[1]
    rng = random.Random(int(sys.argv[2]) if len(sys.argv) > 2 else 7)
    bad = 0
    for grp in ("g18-4", "z3xd6", "d18"):
        for _ in range(6):
            c = [rng.randint(-3, 3) for _ in range(18)]
            arg = ",".join(map(str, c))
            out = subprocess.run([cli, "det", "--group", grp, "--emit", "json", "--coeffs", arg],
                                 check=True, capture_output=True, text=True).stdout
            got = int(json.loads(out)["det"])
            want = group_det(grp, c)
            if got != want:
                print(f"{grp} {arg}: cli {got}, oracle {want}")
                bad += 1
    print("mismatches:", bad)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
