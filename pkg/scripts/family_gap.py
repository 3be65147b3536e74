"""Diam - 2cr along a one-parameter family, by default M(-1/3,1/3,1/n)."""
import argparse

from montesinos.experiments import FamilyConfig, family_gaps


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--template", default="M(-1/3,1/3,1/n)")
    ap.add_argument("--lo", type=int, default=3)
    ap.add_argument("--hi", type=int, default=40)
    args = ap.parse_args()

    rows = family_gaps(FamilyConfig(args.template, args.lo, args.hi))
    print(f"{'n':>4} {'Diam':>10} {'cr':>5} {'Diam-2cr':>10}")
    for r in rows:
        print(f"{r.n:>4} {str(r.diameter):>10} {r.crossing_number:>5} {str(r.gap):>10}  ({float(r.gap):.4f})")
    gaps = [r.gap for r in rows]
    print("non-increasing:", all(a >= b for a, b in zip(gaps, gaps[1:])))
    print("min gap:", min(gaps), "> -6:", min(gaps) > -6)


if __name__ == "__main__":
    main()
