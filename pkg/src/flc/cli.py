"""Command-line interface: characters, tableau listings, verification, dimensions.

Exit codes: 0 success, 1 usage or input error, 2 verification failure or
method disagreement.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from itertools import product as iproduct
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .characters import (
    Group,
    char_alternant,
    char_jacobi_trudi,
    char_raw,
    char_raw_diff,
    char_so_even,
    char_spec,
    dimension,
    make_partition,
    partition_length,
    zero_a,
)
from .hfuncs import HKind, VarSpec, gl_vars, h
from .latticepaths import lgv_signed_sum
from .polyring import (
    ZERO,
    Poly,
    parse_var,
    poly_halve,
    poly_reduce_inverses,
    poly_substitute,
    poly_to_json,
    poly_to_str,
    px,
    pxb,
)
from .tableaux import (
    InvalidShape,
    diff_tableau_sum,
    enumerate_tableaux,
    is_diff_tableau,
    so_even_coefficient,
    so_even_tableau_sum,
    tab_stats,
    tableau_sum,
    tableau_to_json,
    tableau_to_text,
    weight,
)

__all__ = ["main"]

# canonical CLI spellings first, short codes accepted as aliases
_GROUPS: Dict[str, Group] = {
    "gl": Group.GL,
    "sp": Group.SP,
    "so-odd": Group.OO,
    "o-even": Group.EO,
    "o-even-diff": Group.EO_DIFF,
    "so-even-plus": Group.SO_EVEN_PLUS,
    "so-even-minus": Group.SO_EVEN_MINUS,
    "oo": Group.OO,
    "eo": Group.EO,
    "eod": Group.EO_DIFF,
    "so+": Group.SO_EVEN_PLUS,
    "so-": Group.SO_EVEN_MINUS,
}

_CANONICAL = {
    Group.GL: "gl",
    Group.SP: "sp",
    Group.OO: "so-odd",
    Group.EO: "o-even",
    Group.EO_DIFF: "o-even-diff",
    Group.SO_EVEN_PLUS: "so-even-plus",
    Group.SO_EVEN_MINUS: "so-even-minus",
}

_BASE_GROUPS = (Group.GL, Group.SP, Group.OO, Group.EO)


class _Parser(argparse.ArgumentParser):
    """argparse exits with code 2 on bad usage; the contract wants 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise SystemExit(self._fail(message))

    @staticmethod
    def _fail(message: str) -> int:
        print(f"error: {message}", file=sys.stderr)
        return 1


def _parse_group(name: str) -> Group:
    try:
        return _GROUPS[name]
    except KeyError:
        raise ValueError(
            f"unknown group {name!r} (choose from {', '.join(sorted(set(_GROUPS)))})"
        ) from None


def _parse_lambda(text: str, rank: int) -> tuple:
    try:
        parts = [int(p) for p in text.split(",") if p.strip() != ""]
    except ValueError:
        raise ValueError(f"--lambda wants a comma-separated integer list, got {text!r}")
    return make_partition(parts, rank)


def _parse_eval(pairs: Sequence[str]) -> dict:
    out = {}
    for item in pairs:
        name, _, value = item.partition("=")
        if not _ or not value.lstrip("-").isdigit():
            raise ValueError(f"--eval wants var=int, got {item!r}")
        out[parse_var(name)] = int(value)
    return out


def _method_character(group: Group, n: int, lam: tuple, method: str) -> Poly:
    """One character value by the named route, for any CLI group."""
    if group in _BASE_GROUPS:
        spec = char_spec(group, n, lam)
        if method == "alternant":
            return char_alternant(spec)
        if method == "jacobi-trudi":
            return char_jacobi_trudi(spec)
        return tableau_sum(group, n, lam)
    if group is Group.EO_DIFF:
        if method == "alternant":
            return char_raw_diff(n, lam)
        if method == "jacobi-trudi":
            return char_jacobi_trudi(char_spec(group, n, lam))
        # empty first-column subset when lambda_n = 0: the sum is 0
        if partition_length(lam) < n:
            return ZERO
        return diff_tableau_sum(n, lam)
    # so-even plus/minus
    plus = group is Group.SO_EVEN_PLUS
    degenerate = partition_length(lam) < n
    if method == "alternant":
        eo = char_raw(char_spec(Group.EO, n, lam))
        if degenerate:
            return eo
        diff = char_raw_diff(n, lam)
        return poly_halve(eo + diff) if plus else poly_halve(eo - diff)
    if method == "jacobi-trudi":
        return char_so_even(char_spec(group, n, lam))
    if degenerate:
        return tableau_sum(Group.EO, n, lam)
    return so_even_tableau_sum(n, lam, plus)


def _emit(doc: dict, text: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(text)


def cmd_char(args: argparse.Namespace) -> int:
    group = _parse_group(args.group)
    lam = _parse_lambda(args.lam, args.rank)
    methods = (
        ["alternant", "jacobi-trudi", "tableaux"]
        if args.method == "all"
        else [args.method]
    )
    post = _parse_eval(args.eval_pairs or [])

    results = {}
    for m in methods:
        p = _method_character(group, args.rank, lam, m)
        if args.zero_a:
            p = zero_a(p)
        if post:
            p = poly_substitute(p, post)
        results[m] = p

    doc = {"group": _CANONICAL[group], "rank": args.rank, "lambda": list(lam)}
    if len(results) == 1:
        p = next(iter(results.values()))
        doc["polynomial"] = poly_to_json(p)
        _emit(doc, poly_to_str(p), args.format)
        return 0
    agree = len({poly_to_str(p) for p in results.values()}) == 1
    doc["methods"] = {m: poly_to_json(p) for m, p in results.items()}
    doc["agree"] = agree
    lines = [f"{m}: {poly_to_str(p)}" for m, p in results.items()]
    lines.append("AGREE" if agree else "DISAGREE")
    _emit(doc, "\n".join(lines), args.format)
    return 0 if agree else 2


def _listed_tableaux(group: Group, n: int, lam: tuple) -> List[Tuple[object, int]]:
    """(tableau, coefficient) pairs the group's sum actually uses."""
    if group is Group.EO_DIFF:
        if partition_length(lam) < n:
            raise InvalidShape(
                f"the difference sum needs {n} nonzero parts, got {list(lam)}"
            )
        return [
            (t, (-1) ** tab_stats(t, group).bar)
            for t in enumerate_tableaux(Group.EO, n, lam)
            if is_diff_tableau(t, n)
        ]
    if group in (Group.SO_EVEN_PLUS, Group.SO_EVEN_MINUS):
        if partition_length(lam) < n:  # no plus/minus split: plain o(2n) set
            group = Group.EO
        else:
            plus = group is Group.SO_EVEN_PLUS
            return [
                (t, c)
                for t in enumerate_tableaux(Group.EO, n, lam)
                if (c := so_even_coefficient(t, plus))
            ]
    return [
        (t, 1 << tab_stats(t, group).zeta) for t in enumerate_tableaux(group, n, lam)
    ]


def cmd_tableaux(args: argparse.Namespace) -> int:
    group = _parse_group(args.group)
    lam = _parse_lambda(args.lam, args.rank)
    listed = _listed_tableaux(group, args.rank, lam)

    wgroup = Group.EO if group not in _BASE_GROUPS else group
    total = ZERO
    rows_json = []
    lines = []
    for idx, (t, c) in enumerate(listed, start=1):
        w = weight(t, wgroup, args.rank)
        total = total + c * w
        st = tab_stats(t, group)
        rows_json.append(
            {
                "rows": tableau_to_json(t),
                "weight": poly_to_json(w),
                "zeta": st.zeta,
                "bar": st.bar,
                "coeff": c,
            }
        )
        lines.append(f"# {idx}")
        lines.append(tableau_to_text(t) if t.rows else "(empty)")
        lines.append(f"weight = {poly_to_str(w)}")
        lines.append(f"zeta = {st.zeta}  bar = {st.bar}  coeff = {c}")
        lines.append("")
    total = poly_reduce_inverses(total)
    lines.append(f"count = {len(listed)}")
    lines.append(f"sum = {poly_to_str(total)}")
    doc = {
        "group": _CANONICAL[group],
        "rank": args.rank,
        "lambda": list(lam),
        "tableaux": rows_json,
        "count": len(listed),
        "sum": poly_to_json(total),
    }
    _emit(doc, "\n".join(lines), args.format)
    return 0


def cmd_dim(args: argparse.Namespace) -> int:
    group = _parse_group(args.group)
    lam = _parse_lambda(args.lam, args.rank)
    print(dimension(char_spec(group, args.rank, lam)))
    return 0


# ---------------------------------------------------------------------------
# verify


def _shapes(n: int, max_part: int) -> List[tuple]:
    out = []
    for lam in iproduct(range(max_part, -1, -1), repeat=n):
        if all(lam[i] >= lam[i + 1] for i in range(n - 1)):
            out.append(lam)
    return out


def _check_routes(group: Group, max_rank: int, max_part: int) -> bool:
    for n in range(1, max_rank + 1):
        for lam in _shapes(n, max_part):
            spec = char_spec(group, n, lam)
            jt = char_jacobi_trudi(spec)
            if char_raw(spec) != jt or char_alternant(spec) != jt:
                return False
            if tableau_sum(group, n, lam) != jt:
                return False
    return True


_RECUR_KIND = {
    Group.GL: HKind.GL,
    Group.SP: HKind.SP,
    Group.OO: HKind.OO,
    Group.EO: HKind.EO,
}


def _check_recurrence(group: Group, max_rank: int, max_part: int) -> bool:
    kind = _RECUR_KIND[group]
    for j in range(2, max_rank + 1):
        for i in range(1, j):
            for m in range(0, max_part + 2):
                if kind is HKind.GL:
                    left_vs = VarSpec(kind, singles=gl_vars(*range(i, j)))
                    right_vs = VarSpec(kind, singles=gl_vars(*range(i + 1, j + 1)))
                    full_vs = VarSpec(kind, singles=gl_vars(*range(i, j + 1)))
                    factor = px(i) - px(j)
                else:
                    left_vs = VarSpec(kind, pairs=tuple(range(i, j)))
                    right_vs = VarSpec(kind, pairs=tuple(range(i + 1, j + 1)))
                    full_vs = VarSpec(kind, pairs=tuple(range(i, j + 1)))
                    factor = px(i) + pxb(i) - px(j) - pxb(j)
                lhs = h(left_vs, m) - h(right_vs, m)
                rhs = factor * h(full_vs, m - 1)
                if poly_reduce_inverses(lhs) != poly_reduce_inverses(rhs):
                    return False
    return True


def _swap_pairs(p: Poly, i: int, j: int, barred: bool) -> Poly:
    mapping = {parse_var(f"x{i}"): px(j), parse_var(f"x{j}"): px(i)}
    if barred:
        mapping[parse_var(f"xb{i}")] = pxb(j)
        mapping[parse_var(f"xb{j}")] = pxb(i)
    return poly_substitute(p, mapping)


def _check_symmetry(group: Group, max_rank: int, max_part: int) -> bool:
    n = max(2, min(max_rank, 2))
    lam_full = make_partition([min(2, max_part), min(1, max_part)], n)
    specs = [lam_full, make_partition([min(2, max_part)] * n, n)]
    for lam in specs:
        if group is Group.EO_DIFF:
            p = char_raw_diff(n, lam)
        elif group in (Group.SO_EVEN_PLUS, Group.SO_EVEN_MINUS):
            p = char_so_even(char_spec(group, n, lam))
        else:
            p = char_jacobi_trudi(char_spec(group, n, lam))
        if _swap_pairs(p, 1, 2, barred=group is not Group.GL) != p:
            return False
        if group in (Group.SP, Group.OO, Group.EO):
            swapped = poly_substitute(
                p, {parse_var("x1"): pxb(1), parse_var("xb1"): px(1)}
            )
            if poly_reduce_inverses(swapped) != p:
                return False
    return True


def _check_denominator(group: Group, max_rank: int) -> bool:
    from .characters import _denominator_info

    for n in range(1, max_rank + 1):
        for route in ("raw", "alternant"):
            denom, factors, fast = _denominator_info(group, n, route)
            if not fast:  # det failed to match the reduced factor product
                return False
    return True


def _check_lgv(max_rank: int, max_part: int) -> bool:
    for n in range(1, max_rank + 1):
        for lam in _shapes(n, max_part):
            if lgv_signed_sum(n, lam) != char_jacobi_trudi(
                char_spec(Group.GL, n, lam)
            ):
                return False
    return True


def _check_so_even(max_rank: int, max_part: int) -> bool:
    for n in range(1, max_rank + 1):
        for lam in _shapes(n, max_part):
            if partition_length(lam) < n:
                continue
            eo = char_jacobi_trudi(char_spec(Group.EO, n, lam))
            eod = char_jacobi_trudi(char_spec(Group.EO_DIFF, n, lam))
            if char_raw_diff(n, lam) != eod or diff_tableau_sum(n, lam) != eod:
                return False
            plus = char_so_even(char_spec(Group.SO_EVEN_PLUS, n, lam))
            minus = char_so_even(char_spec(Group.SO_EVEN_MINUS, n, lam))
            if so_even_tableau_sum(n, lam, True) != plus:
                return False
            if so_even_tableau_sum(n, lam, False) != minus:
                return False
            if plus + minus != eo or plus - minus != eod:
                return False
    return True


def _verify_checks(
    max_rank: int, max_part: int, groups: set
) -> List[Tuple[str, Callable[[], bool]]]:
    checks: List[Tuple[str, Callable[[], bool]]] = []
    even_family = {
        Group.EO,
        Group.EO_DIFF,
        Group.SO_EVEN_PLUS,
        Group.SO_EVEN_MINUS,
    }
    for g in _BASE_GROUPS:
        if g not in groups:
            continue
        name = _CANONICAL[g]
        checks.append(
            (f"route-agreement[{name}]", lambda g=g: _check_routes(g, max_rank, max_part))
        )
        if max_rank >= 2:
            checks.append(
                (f"recurrence[{name}]", lambda g=g: _check_recurrence(g, max_rank, max_part))
            )
            checks.append(
                (f"symmetry[{name}]", lambda g=g: _check_symmetry(g, max_rank, max_part))
            )
        checks.append(
            (f"denominator[{name}]", lambda g=g: _check_denominator(g, max_rank))
        )
    if Group.GL in groups:
        checks.append(("lgv[gl]", lambda: _check_lgv(max_rank, max_part)))
    if groups & even_family:
        checks.append(
            ("so-even-decomposition", lambda: _check_so_even(max_rank, max_part))
        )
    return checks


def cmd_verify(args: argparse.Namespace) -> int:
    if args.groups:
        groups = {_parse_group(g.strip()) for g in args.groups.split(",")}
    else:
        groups = set(_CANONICAL)
    checks = _verify_checks(args.max_rank, args.max_part, groups)
    threads = max(1, int(os.environ.get("FLC_THREADS", "1")))
    if threads > 1 and len(checks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(lambda c: c[1](), checks))
    else:
        outcomes = [fn() for _, fn in checks]
    failed = 0
    lines = []
    for (name, _), ok in zip(checks, outcomes):
        lines.append(f"{'PASS' if ok else 'FAIL'} {name}")
        failed += 0 if ok else 1
    summary = (
        f"all {len(checks)} checks passed"
        if not failed
        else f"{failed} of {len(checks)} checks failed"
    )
    lines.append(summary)
    if args.format == "json":
        doc = {
            "max_rank": args.max_rank,
            "max_part": args.max_part,
            "checks": [
                {"name": name, "ok": ok}
                for (name, _), ok in zip(checks, outcomes)
            ],
            "ok": not failed,
        }
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(lines))
    return 0 if not failed else 2


# ---------------------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(prog="flc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: _Parser) -> None:
        p.add_argument("--group", required=True, help="gl, sp, so-odd, o-even, o-even-diff, so-even-plus, so-even-minus (codes oo/eo/eod/so+/so- accepted)")
        p.add_argument("--rank", type=int, required=True)
        p.add_argument("--lambda", dest="lam", required=True, help="comma-separated partition, zero-padded to rank")

    p_char = sub.add_parser("char", help="compute a character polynomial")
    common(p_char)
    p_char.add_argument(
        "--method",
        choices=["alternant", "jacobi-trudi", "tableaux", "all"],
        default="jacobi-trudi",
    )
    p_char.add_argument("--zero-a", action="store_true", help="set every a_j to 0")
    p_char.add_argument(
        "--eval",
        dest="eval_pairs",
        nargs="*",
        metavar="VAR=INT",
        help="substitute integer values, e.g. x1=2 xb1=1 a1=0",
    )
    p_char.add_argument("--format", choices=["text", "json"], default="text")
    p_char.set_defaults(fn=cmd_char)

    p_tab = sub.add_parser("tableaux", help="list the tableaux behind a character")
    common(p_tab)
    p_tab.add_argument("--format", choices=["text", "json"], default="text")
    p_tab.set_defaults(fn=cmd_tableaux)

    p_ver = sub.add_parser("verify", help="run the identity verification suites")
    p_ver.add_argument("--max-rank", type=int, default=3)
    p_ver.add_argument("--max-part", type=int, default=3)
    p_ver.add_argument("--groups", help="comma-separated group filter")
    p_ver.add_argument("--format", choices=["text", "json"], default="text")
    p_ver.set_defaults(fn=cmd_verify)

    p_dim = sub.add_parser("dim", help="dimension: a = 0 and every letter = 1")
    common(p_dim)
    p_dim.set_defaults(fn=cmd_dim)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
