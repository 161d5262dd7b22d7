"""Run the identity catalog and the three-generator rewrites for n = 1..N and write a JSON report."""

import argparse
import dataclasses
import json
import time
from pathlib import Path

from hildenlift import braidcalc
from hildenlift.hildengen import KMode, run_identity_catalog, verify_generation


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--out", type=Path, default=Path("generation_report.json"))
    args = ap.parse_args()

    runs = []
    for n in range(1, args.max_n + 1):
        for kmode in KMode:
            t0 = time.perf_counter()
            idents = run_identity_catalog(n, kmode)
            gen = verify_generation(n, kmode, strict=False)
            elapsed = time.perf_counter() - t0
            ok_idents = sum(r.result == "PASS" for r in idents)
            ok_gens = sum(r.result == "PASS" for r in gen.records)
            print(f"n={n} {kmode.value:4}  identities {ok_idents}/{len(idents)}  "
                  f"generators {ok_gens}/{len(gen.records)}  {elapsed:.3f}s")
            runs.append({
                "n": n,
                "kmode": kmode.value,
                "identities": [dataclasses.asdict(r) for r in idents],
                "generation": [dataclasses.asdict(r) for r in gen.records],
                "all_pass": ok_idents == len(idents) and gen.all_pass,
                "seconds": round(elapsed, 4),
            })
    doc = {"convention": braidcalc.ORDER_CONVENTION, "runs": runs,
           "all_pass": all(r["all_pass"] for r in runs)}
    args.out.write_text(json.dumps(doc, indent=2) + "\n")
    print(f"wrote {args.out}; all pass: {doc['all_pass']}")


if __name__ == "__main__":
    main()
