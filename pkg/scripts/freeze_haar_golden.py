"""Freeze the alternating free cumulants of a Haar unitary as a golden file.

    python scripts/freeze_haar_golden.py [--order 8] [--out tests/golden/haar_cumulants.json]

The file uses the R-diagonal spec format (order, alpha, beta). Before
overwriting, it spot-checks k_2(u, u*) = phi(u u*) - phi(u) phi(u*) = 1.
"""
import argparse
from pathlib import Path

from freecumulants import io
from freecumulants.cumulants import cumulants_from_moments
from freecumulants.free import haar_unitary, is_r_diagonal, spec_from_cumulants
from freecumulants.words import parse_word

ROOT = Path(__file__).resolve().parent.parent


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--out", default=str(ROOT / "tests" / "golden" / "haar_cumulants.json"))
    args = p.parse_args()

    h = haar_unitary(args.order)
    k = cumulants_from_moments(h)
    uu = parse_word("u u*")
    by_hand = h[uu] - h[uu[:1]] * h[uu[1:]]
    assert k[uu] == by_hand == 1, (k[uu], by_hand)
    assert is_r_diagonal(h)

    spec = spec_from_cumulants(k)
    io.write_spec(spec, args.out)
    print(f"alpha = {[str(x) for x in spec.alpha]}")
    print(f"beta  = {[str(x) for x in spec.beta]}")
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
