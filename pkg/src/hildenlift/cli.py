"""Command-line front end.

Exit codes: 0 success / all checks pass, 1 verification failure (or
``wp`` found the words unequal), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import re
import sys
from pathlib import Path
from typing import Optional

from . import braidcalc
from .abelianize import abelian_invariants, min_generators_lower_bound, smith_normal_form
from .braidcalc import NamedElement, gamma, perm_of
from .freegroup import out_equal, out_witness
from .grammar import parse_braid, parse_presentation
from .hildengen import (KMode, VerificationError, convention_selftest, expand, rewrite,
                        run_identity_catalog, verify_generation)
from .liftcheck import CoverConfig, is_liftable, parity_class
from .render import render_svg

MAX_VERIFY_N = 5

SCOPE_NOTE = ("equalities are decided in the mapping class group of the sphere with "
              "2n+2 marked points (modulo the full twist), not in the braid group")
H1_NOTE = ("first homology of the liftable Hilden group and of the symmetric handlebody "
           "group is not reproduced: it needs presentations not shipped here; use "
           "'snf --presentation FILE' with an externally supplied presentation")


class UsageError(Exception):
    pass


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _kmodes(k: Optional[int]) -> list[KMode]:
    return list(KMode) if k is None else [KMode.from_k(k)]


def cmd_verify(args) -> int:
    if not 1 <= args.n <= MAX_VERIFY_N:
        raise UsageError(f"--n must be between 1 and {MAX_VERIFY_N}")
    if args.k is not None and args.k < 2:
        raise UsageError("--k must be >= 2")
    selftest = convention_selftest(max(args.n, 2))
    doc = {
        "convention": braidcalc.ORDER_CONVENTION,
        "convention_selftest": selftest,
        "scope": SCOPE_NOTE,
        "notes": [H1_NOTE],
        "runs": [],
    }
    lines = [f"convention: {braidcalc.ORDER_CONVENTION} "
             f"(self-test: " + ", ".join(f"{c}={'pass' if v else 'fail'}" for c, v in selftest.items()) + ")",
             f"scope: {SCOPE_NOTE}"]
    failure = None
    for kmode in _kmodes(args.k):
        run = {"n": args.n, "kmode": kmode.value}
        try:
            idents = run_identity_catalog(args.n, kmode, strict=False)
            run["identities"] = [dataclasses.asdict(r) for r in idents]
            bad = [r for r in idents if r.result != "PASS"]
            lines.append(f"[n={args.n} {kmode.value}] identities: "
                         f"{len(idents) - len(bad)}/{len(idents)} PASS")
            for r in idents:
                if args.verbose or r.result != "PASS":
                    lines.append(f"  {r.result:5} {r.label}")
            if bad and failure is None:
                failure = f"identity {bad[0].label} [{kmode.value}]: {bad[0].result}"
            report = verify_generation(args.n, kmode, strict=True)
        except VerificationError as exc:
            failure = failure or str(exc)
            lines.append(f"[n={args.n} {kmode.value}] FAIL: {exc}")
            run["generation"] = {"error": str(exc)}
            doc["runs"].append(run)
            continue
        run["generation"] = {
            "generators": report.generators,
            "records": [dataclasses.asdict(r) for r in report.records],
            "all_pass": report.all_pass,
            "base_generator_count": report.base_generator_count,
            "symmetric_handlebody_generator_count": report.symmetric_handlebody_generator_count,
        }
        doc["runs"].append(run)
        passed = sum(r.result == "PASS" for r in report.records)
        lines.append(f"[n={args.n} {kmode.value}] generators {{{', '.join(report.generators)}}}: "
                     f"{passed}/{len(report.records)} standard generators PASS")
        for r in report.records:
            lines.append(f"  {r.result:5} {r.target:7} = {r.rewrite}  "
                         f"(alphabet {r.alphabet_length}, braid {r.braid_length}, "
                         f"liftable {'yes' if r.liftable else 'no'})")
        lines.append(f"  generated by {report.base_generator_count} elements; "
                     f"lift to the symmetric handlebody group: "
                     f"{report.symmetric_handlebody_generator_count} elements")
    lines.append(f"note: {H1_NOTE}")
    doc["all_pass"] = failure is None
    if failure:
        doc["first_failure"] = failure
        lines.append(f"FAILED: {failure}")
    else:
        lines.append("ALL PASS")
    if args.format == "json":
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    else:
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if failure is None else 1


def _parse_target(token: str, n: int) -> NamedElement:
    match = re.fullmatch(r"(SS|RR|s|T)(\d+)|R", token)
    if not match:
        raise UsageError(f"target must be one of s<i>, SS<i>, RR<i>, T<j>, R; got {token!r}")
    if token == "R":
        return NamedElement("R", n)
    tag = {"SS": "s", "RR": "r", "s": "sigma", "T": "t"}[match.group(1)]
    try:
        return NamedElement(tag, n, int(match.group(2)))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_rewrite(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    kmode = KMode.from_k(args.k)
    target = _parse_target(args.target, args.n)
    try:
        word = rewrite(target, args.n, kmode)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    flat = expand(word, args.n, kmode)
    ok = out_equal(gamma(flat), gamma(braidcalc.named_word(target)))
    doc = {"target": str(target), "n": args.n, "kmode": kmode.value, "rewrite": str(word),
           "alphabet_length": word.letter_count(), "braid_length": len(flat),
           "result": "PASS" if ok else "FAIL"}
    if args.format == "json":
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    else:
        _emit(f"{target} = {word}\n  braid length {len(flat)}: {doc['result']}\n", args.out)
    return 0 if ok else 1


def cmd_lift(args) -> int:
    cfg = CoverConfig(args.n, args.k)
    b = parse_braid(args.word, cfg.m, args.k)
    p = perm_of(b)
    parity = parity_class(p, cfg)
    lifts = is_liftable(b, cfg)
    doc = {"word": str(b), "n": cfg.n, "k": cfg.k, "genus": cfg.genus, "permutation": str(p),
           "parity": parity.value, "liftable": lifts}
    if args.format == "json":
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    else:
        _emit(f"permutation {p}\nparity {parity.value}\nliftable {'yes' if lifts else 'no'}\n", args.out)
    return 0


def cmd_wp(args) -> int:
    b1 = parse_braid(args.word1, args.m, args.k)
    b2 = parse_braid(args.word2, args.m, args.k)
    w = out_witness(gamma(b1), gamma(b2))
    equal = w is not None
    doc = {"m": args.m, "equal": equal, "witness": str(w) if equal else None}
    if args.format == "json":
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    else:
        _emit(f"equal\nconjugator {w}\n" if equal else "unequal\n", args.out)
    return 0 if equal else 1


def _read_matrix(text: str) -> list[list[int]]:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].replace(",", " ").split()
        if not body:
            continue
        try:
            rows.append([int(v) for v in body])
        except ValueError:
            raise UsageError(f"line {lineno}: expected integers") from None
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise UsageError("rows have different lengths")
    return rows


def cmd_snf(args) -> int:
    if (args.matrix is None) == (args.presentation is None):
        raise UsageError("give exactly one of MATRIX or --presentation")
    if args.presentation is not None:
        pres = parse_presentation(Path(args.presentation).read_text())
        mat = pres.relation_matrix()
    else:
        pres = None
        mat = _read_matrix(Path(args.matrix).read_text())
    if mat:
        S, U, V = smith_normal_form(mat)
        diag = [S[i][i] for i in range(min(len(S), len(S[0])))]
    else:
        S, U, V, diag = [], [], [], []
    doc = {"diagonal": diag, "S": S, "U": U, "V": V}
    lines = ["diagonal " + " ".join(map(str, diag))]
    if pres is not None:
        inv = abelian_invariants(pres)
        doc["abelianization"] = {"betti": inv.betti, "torsion": list(inv.torsion),
                                 "text": str(inv),
                                 "min_generators_lower_bound": min_generators_lower_bound(inv)}
        lines.append(f"abelianization {inv}")
        lines.append(f"minimal generator lower bound {min_generators_lower_bound(inv)}")
    if args.format == "json":
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    else:
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_render(args) -> int:
    b = parse_braid(args.word, args.m, args.k)
    _emit(render_svg(b), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hildenlift",
                                     description="Hilden group generation checks and braid tools")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", help="write output to PATH instead of stdout")

    p = sub.add_parser("verify", help="check identities and the three-generator rewrites")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, help="cover degree; omit to run k=2 and k>=3")
    p.add_argument("-v", "--verbose", action="store_true")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rewrite", help="express a standard generator over the three generators")
    p.add_argument("target", help="s<i> (sigma_i), SS<i>, RR<i>, T<j> or R")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_rewrite)

    p = sub.add_parser("lift", help="parity class and liftability of a braid word")
    p.add_argument("word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("wp", help="decide equality of two braid words as mapping classes")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, help="needed only for the token A")
    common(p)
    p.set_defaults(func=cmd_wp)

    p = sub.add_parser("snf", help="Smith normal form of a matrix or a presentation")
    p.add_argument("matrix", nargs="?", help="file with one row of integers per line")
    p.add_argument("--presentation", help="presentation file")
    common(p)
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("render", help="SVG diagram of a braid word")
    p.add_argument("word")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, help="needed only for the token A")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"hildenlift {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
