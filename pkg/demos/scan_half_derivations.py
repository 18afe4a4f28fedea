"""Scan the homogeneous half-derivation degrees of several algebras.

The scan solves one exact linear system per degree (eps1, eps2, gamma) and
classifies the interior solution space as zero, a scalar line, or
something larger.  Run:  python3 demos/scan_half_derivations.py
"""

from fractions import Fraction

from gradedlie import catalog
from gradedlie.solver import scan

WINDOW = 10
GAMMA_MAX = 2


def show(result):
    print(f"{result.algebra}: window {result.window}, interior {result.interior}")
    nonzero = [r for r in result.reports if r.classification != "zero"]
    if not nonzero:
        print("  every degree is zero")
    for r in nonzero:
        line = (f"  degree {r.degree}: {r.classification}, "
                f"interior dim {r.interior_dim}")
        if r.interior_dim <= 3:
            line += f", basis {r.basis_summary}"
        print(line)
    print(f"  verdict: {result.verdict}")
    print()


def main():
    half = Fraction(1, 2)
    for key in ("pgca", "virasoro", "witt", "abelian"):
        show(scan(catalog.get(key), half, GAMMA_MAX, WINDOW))

    # the same scan at delta = 1 tells derivations apart from
    # half-derivations: ad L_0 appears and the verdict changes
    print("pgca again, now at delta = 1:")
    show(scan(catalog.get("pgca"), Fraction(1), 0, WINDOW))


if __name__ == "__main__":
    main()
