"""List the levels n at which Psi vanishes for a few quadratic points."""
import argparse
from fractions import Fraction

from omegalab.exactmath import QuadElem, sqrt
from omegalab.omega import in_kernel

POINTS = {
    "1,0": (1, 0),
    "1,-1": (1, -1),
    "1,sqrt(2)": (1, sqrt(2)),
    "1,phi-1": (1, QuadElem(Fraction(-1, 2), Fraction(1, 2), 5)),
    "1,sqrt(3)": (1, sqrt(3)),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=100)
    args = parser.parse_args()
    for label, point in POINTS.items():
        zeros = [n for n in range(1, args.n_max + 1) if in_kernel(point, n)]
        print(f"({label}): {zeros}")


if __name__ == "__main__":
    main()
