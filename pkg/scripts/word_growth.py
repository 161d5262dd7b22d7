"""Tabulate how rewrite lengths and free-group image sizes grow with n."""

import argparse

from hildenlift.braidcalc import gamma
from hildenlift.hildengen import KMode, expand, rewrite, standard_gens


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()

    print(f"{'n':>2} {'mode':>4} {'target':>8} {'letters':>8} {'braid':>7} {'image':>9}")
    for n in range(1, args.max_n + 1):
        for kmode in KMode:
            for member in standard_gens(n, kmode).members:
                (target, _), = member.factors
                word = rewrite(target, n, kmode)
                flat = expand(word, n, kmode)
                image = sum(len(img) for img in gamma(flat).image_letters)
                print(f"{n:>2} {kmode.value:>4} {str(target):>8} {word.letter_count():>8} "
                      f"{len(flat):>7} {image:>9}")


if __name__ == "__main__":
    main()
