"""Run the twist, L/V and remainder oracles over every input up to a denominator bound."""
import argparse
import sys
import time

from montesinos.experiments import OracleConfig, SuiteConfig, run_oracle_suite
from montesinos.oracles import ORACLES, first_mismatch


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-den", type=int, default=9)
    ap.add_argument("--tangles", type=int, default=3)
    ap.add_argument("--oracle", action="append", choices=ORACLES)
    args = ap.parse_args()
    cfg = OracleConfig(SuiteConfig(args.max_den, args.tangles, knots_only=False), tuple(args.oracle or ORACLES))

    t0 = time.perf_counter()
    tallies = run_oracle_suite(cfg)
    for name, t in tallies.items():
        print(f"{name:12s} {t.checked:8d} systems  {len(t.mismatches)} mismatches")
    print(f"elapsed {time.perf_counter() - t0:.1f}s")
    bad = first_mismatch(tallies)
    if bad is not None:
        print("first counterexample:", bad)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
