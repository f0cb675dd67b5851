"""Command line front end: ``chowlab {codes,fy,bijection,fans,verify}``.

Exit status is 0 when everything passes, 1 on a failed verification and 2 on
bad input. Output is TSV by default (``#`` lines are summaries) or JSON with
``--format json``; infinity prints as ``inf`` and marks as ``*``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .bijections import phi, phi_tilde
from .chow import aug_fy_basis, format_monomial, fy_basis_matroid, hilbert_series_fy, parse_monomial
from .codes import code_to_json, enumerate_codes, enumerate_extended_codes, format_code, graded_counts
from .fans import aug_bergman_complex, aug_bergman_cones, bergman_complex, bergman_cones, cone_to_json, format_cone
from .matroid import Matroid, make_boolean, matroid_from_json, parse_matroid_spec
from .verify import SUITES, run_suite

N_LIMIT = 8


class UsageError(Exception):
    pass


def _emit(lines: Sequence[str]) -> None:
    sys.stdout.write("".join(line + "\n" for line in lines))


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=1, sort_keys=False) + "\n")


def _check_n(n: int | None, force: bool, limit: int = N_LIMIT) -> int:
    if n is None:
        raise UsageError("--n is required")
    if n < 1:
        raise UsageError(f"--n must be positive, got {n}")
    if n > limit and not force:
        raise UsageError(f"--n {n} exceeds the limit {limit} (use --force)")
    return n


def load_matroid(spec: str) -> Matroid:
    """``file.json`` or ``family:params``."""
    if spec.endswith(".json") or os.path.isfile(spec):
        try:
            with open(spec, encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as e:
            raise UsageError(f"cannot read {spec}: {e.strerror}") from None
        except json.JSONDecodeError as e:
            raise UsageError(f"{spec}: invalid JSON ({e.msg})") from None
        return matroid_from_json(data)
    return parse_matroid_spec(spec)


def _matroid_arg(args) -> Matroid:
    if args.matroid is not None:
        m = load_matroid(args.matroid)
        _check_n(m.n, args.force)
        return m
    return make_boolean(_check_n(args.n, args.force))


def _counts_text(counts) -> str:
    return ",".join(map(str, counts))


# --- commands ----------------------------------------------------------------


def cmd_codes(args) -> int:
    n = _check_n(args.n, args.force)
    by_index = enumerate_extended_codes(n) if args.extended else enumerate_codes(n)
    counts = graded_counts(by_index)
    if args.format == "json":
        _emit_json(
            {
                "n": n,
                "extended": args.extended,
                "counts": counts,
                "codes": [{"index": j, **code_to_json(c)} for j, cs in by_index.items() for c in cs],
            }
        )
        return 0
    lines = ["# index\tcode"]
    for j, cs in by_index.items():
        lines.extend(f"{j}\t{format_code(c, 'text')}" for c in cs)
    lines.append(f"# total\t{sum(counts)}")
    lines.append(f"# counts\t{_counts_text(counts)}")
    _emit(lines)
    return 0


def cmd_fy(args) -> int:
    m = _matroid_arg(args)
    basis = aug_fy_basis(m) if args.augmented else fy_basis_matroid(m)
    series = hilbert_series_fy(basis)
    degrees = sorted(basis.by_degree) if args.degree is None else [args.degree]
    if args.format == "json":
        _emit_json(
            {
                "matroid": {"n": m.n, "bases": [list(b) for b in m.bases]},
                "augmented": args.augmented,
                "hilbert": series,
                "basis": [d for d in basis.to_json() if d["degree"] in degrees],
            }
        )
        return 0
    lines = ["# degree\tmonomial"]
    for d in degrees:
        lines.extend(f"{d}\t{format_monomial(u)}" for u in basis.by_degree.get(d, []))
    lines.append(f"# hilbert\t{_counts_text(series)}")
    _emit(lines)
    return 0


def cmd_bijection(args) -> int:
    fn = phi_tilde if args.augmented else phi
    if args.monomial is not None:
        if args.n is None or args.n < 1:
            raise UsageError("--monomial needs a positive --n")
        u = parse_monomial(args.monomial)
        rows = [(u.degree, u, fn(args.n, u))]
    else:
        n = _check_n(args.n, args.force)
        basis = aug_fy_basis(make_boolean(n)) if args.augmented else fy_basis_matroid(make_boolean(n))
        degrees = sorted(basis.by_degree) if args.degree is None else [args.degree]
        rows = [(d, u, fn(n, u)) for d in degrees for u in basis.by_degree.get(d, [])]
    if args.format == "json":
        _emit_json(
            [
                {"degree": d, "monomial": format_monomial(u), "index": c.index, "code": code_to_json(c), "latex": format_code(c, "latex")}
                for d, u, c in rows
            ]
        )
        return 0
    lines = ["# degree\tmonomial\tindex\tcode\tlatex"]
    lines.extend(
        f"{d}\t{format_monomial(u)}\t{c.index}\t{format_code(c, 'text')}\t{format_code(c, 'latex')}"
        for d, u, c in rows
    )
    _emit(lines)
    return 0


def cmd_fans(args) -> int:
    m = _matroid_arg(args)
    if args.augmented:
        cones, complex_ = aug_bergman_cones(m), aug_bergman_complex(m)
    else:
        cones, complex_ = bergman_cones(m), bergman_complex(m)
    f = list(complex_.f_vector())
    if args.format == "json":
        _emit_json({"augmented": args.augmented, "f_vector": f, "cones": [cone_to_json(c) for c in cones]})
        return 0
    lines = [format_cone(c) for c in cones]
    lines.append(f"# cones\t{len(cones)}")
    lines.append(f"# f-vector\t{_counts_text(f)}")
    _emit(lines)
    return 0


def cmd_verify(args) -> int:
    m = load_matroid(args.matroid) if args.matroid is not None else None
    n = args.n if args.n is not None else (m.n if m is not None else 4)
    if m is None:
        _check_n(n, args.force)
    report = run_suite(args.suite, n, m, force=args.force)
    if args.format == "json":
        _emit_json(report.to_json())
    else:
        _emit(report.lines())
    return report.exit_status


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chowlab", description="Chow rings of matroids, codes and fans.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, matroid: bool = False):
        sp.add_argument("--n", type=int, help="size of the ground set")
        if matroid:
            sp.add_argument("--matroid", help="file.json, boolean:N or uniform:N,R")
        sp.add_argument("--format", choices=("tsv", "json"), default="tsv")
        sp.add_argument("--force", action="store_true", help=f"lift the n <= {N_LIMIT} and oracle size caps")

    sp = sub.add_parser("codes", help="list Stembridge codes by index")
    common(sp)
    sp.add_argument("--extended", action="store_true", help="extended codes (letters may be inf)")
    sp.set_defaults(func=cmd_codes)

    sp = sub.add_parser("fy", help="FY monomial basis of the (augmented) Chow ring")
    common(sp, matroid=True)
    sp.add_argument("--augmented", action="store_true")
    sp.add_argument("--degree", type=int)
    sp.set_defaults(func=cmd_fy)

    sp = sub.add_parser("bijection", help="monomial to code correspondence for B_n")
    common(sp)
    sp.add_argument("--augmented", action="store_true")
    sp.add_argument("--degree", type=int)
    sp.add_argument("--monomial", help="map a single monomial, e.g. 'x_{14}x_{1247}^2'")
    sp.set_defaults(func=cmd_bijection)

    sp = sub.add_parser("fans", help="cones of the (augmented) Bergman fan")
    common(sp, matroid=True)
    sp.add_argument("--augmented", action="store_true")
    sp.set_defaults(func=cmd_fans)

    sp = sub.add_parser("verify", help="run verification suites")
    common(sp, matroid=True)
    sp.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as e:
        print(f"chowlab: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
