#!/usr/bin/env python3
"""Write b-file fixtures for the OEIS entries the matcher is tested against.

oeis.org was not reachable from the build machine, so each file is produced
from the entry's defining recurrence and offset instead of being downloaded.
Each file starts with a comment saying so. Replace with real b-files by
running `quadfib oeis-check <d> --cache-dir tests/data/oeis` online after
deleting the generated copies.
"""

import pathlib
import sys

# a_number: (offset, first two terms, (p, q)) for a(n) = p*a(n-1) + q*a(n-2)
ENTRIES = {
    "A000045": (0, (0, 1), (1, 1)),      # Fibonacci
    "A000032": (0, (2, 1), (1, 1)),      # Lucas
    "A000129": (0, (0, 1), (2, 1)),      # Pell
    "A001333": (0, (1, 1), (2, 1)),      # Pell-Lucas / 2
    "A001353": (0, (0, 1), (4, -1)),
    "A001075": (0, (1, 2), (4, -1)),
    "A004189": (0, (0, 1), (10, -1)),
    "A001079": (0, (1, 5), (10, -1)),
    "A077412": (0, (1, 16), (16, -1)),
    "A001081": (0, (1, 8), (16, -1)),
    "A005668": (0, (0, 1), (6, 1)),
    "A005667": (0, (1, 3), (6, 1)),
    "A075843": (1, (0, 3), (20, -1)),
    "A001085": (0, (1, 10), (20, -1)),
    "A006190": (0, (0, 1), (3, 1)),
    "A006497": (0, (2, 3), (3, 1)),
    "A041061": (0, (1, 12), (12, 1)),
    "A097309": (0, (1, 26), (26, -1)),
}

COUNT = 40


def terms(first, coeffs, count):
    a, b = first
    p, q = coeffs
    out = [a, b]
    while len(out) < count:
        a, b = b, p * b + q * a
        out.append(b)
    return out


def main(target):
    target.mkdir(parents=True, exist_ok=True)
    for a_number, (offset, first, coeffs) in ENTRIES.items():
        p, q = coeffs
        lines = [
            f"# {a_number}: generated from a(n) = {p}*a(n-1) + ({q})*a(n-2),",
            f"# a({offset}) = {first[0]}, a({offset + 1}) = {first[1]}; not downloaded.",
        ]
        for i, value in enumerate(terms(first, coeffs, COUNT)):
            lines.append(f"{offset + i} {value}")
        path = target / ("b" + a_number[1:] + ".txt")
        path.write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    root = pathlib.Path(__file__).resolve().parent.parent
    main(pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else root / "tests" / "data" / "oeis")
