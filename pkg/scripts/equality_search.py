"""Search four-tangle knots for equality in the two-witness slope inequality."""
import argparse

from montesinos.experiments import EqualitySearchConfig, SuiteConfig, equality_search
from montesinos.invariants import chi_per_sheet, component_count, remainder, twist
from montesinos.system import KnotSpec


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-den", type=int, default=5)
    args = ap.parse_args()
    cfg = EqualitySearchConfig(suite=SuiteConfig(args.max_den, 4, ordered=True))

    natural = KnotSpec(cfg.natural)
    print(f"{natural}: {component_count(natural)} component(s)")
    report, seen = equality_search(cfg)
    if report is None:
        print(f"no equality case among {seen} inputs")
        return
    print(f"witness after {seen} inputs: {report.knot}")
    for side, w in zip(("max", "min"), report.thm3_witnesses):
        print(f"  {side}: twist {twist(w)}  -chi/#s {chi_per_sheet(w)}  remainder {remainder(w)}")
        print(f"       {w}")


if __name__ == "__main__":
    main()
