"""Command-line interface.

Subcommands: gen (emit a construction), verify (check a code file), count
(closed versus enumerated counts), table (reproduce the reference tables),
saturate (greedily extend a code file). Data goes to stdout or --out;
diagnostics go to stderr. Exit codes: 0 success, 1 check failure, 2 usage or
parse error, 3 guard refusal, 4 not applicable.

The scan guard resolves as: --guard flag, then the CBF_GUARD environment
variable, then the default 2**28.
"""

import argparse
import json
import os
import sys

from . import codes, constructions, enumeration
from .codes import DEFAULT_GUARD
from .enumeration import BRANCH_NOT_APPLICABLE, CountReport
from .errors import GuardExceededError, InvalidInputError, NotApplicableError
from .words import Bipartition, format_word

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_NOT_APPLICABLE = 4

CHECK_NAMES = ("bifix", "cross", "nonexpandable")


def _diag(message: str) -> None:
    print(message, file=sys.stderr)


def _emit(payload: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(payload)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(payload)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _resolve_guard(args) -> int:
    if getattr(args, "guard", None) is not None:
        return args.guard
    env = os.environ.get("CBF_GUARD")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InvalidInputError(f"CBF_GUARD must be an integer, got {env!r}") from None
    return DEFAULT_GUARD


def _parse_symbols(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise InvalidInputError(f"cannot parse symbol list {text!r}") from None


def _bipartition(args) -> Bipartition:
    return Bipartition(args.q, _parse_symbols(args.i_symbols))


def _apply_overrides(code: codes.Code, args) -> codes.Code:
    """Flags beat file headers: rebuild the code with --q / --I applied."""
    q = args.q if getattr(args, "q", None) is not None else code.q
    bip = code.bip
    i_text = getattr(args, "i_symbols", None)
    if i_text is not None:
        if q is None:
            raise InvalidInputError("--I needs an alphabet size (--q or a header)")
        bip = Bipartition(q, _parse_symbols(i_text))
    elif bip is not None and q is not None and bip.q != q:
        bip = None
    return codes.Code(n=code.n, words=code.words, q=q, bip=bip)


def _generate(args, bip: Bipartition, guard: int) -> codes.Code:
    kind = args.construction
    if kind == "s":
        return constructions.build_s(bip, args.n, args.k, guard=guard)
    if kind == "s-classic":
        return constructions.build_s_classic(args.q, args.n, args.k, guard=guard)
    if kind in ("v", "u"):
        params = constructions.ExpansionParams(args.n, args.k)
        codes.check_guard(bip.q, args.n, guard)
        if kind == "v":
            return constructions.build_v(params, bip, args.n)
        return constructions.build_u(params, bip, args.n)
    return constructions.build_expanded(bip, args.n, args.k, guard=guard)


def cmd_gen(args) -> int:
    guard = _resolve_guard(args)
    bip = _bipartition(args)
    code = _generate(args, bip, guard)
    ok, witness = codes.is_cross_bifix_free(code)
    _diag(f"{args.construction}: size {len(code)}; cross-bifix-free: {'yes' if ok else 'no'}")
    if not ok:
        _diag(f"  first overlap: {witness.describe(code.q)}")
    if args.format == "json":
        payload = codes.render_code_json(code, verified=ok)
    else:
        payload = codes.render_code_text(code)
    _emit(payload, args.out)
    return EXIT_OK


def _bifix_violation(code: codes.Code):
    n = code.n
    for w in code.sorted_words():
        for j in range(1, n):
            if w[:j] == w[n - j:]:
                return w, j
    return None


def cmd_verify(args) -> int:
    guard = _resolve_guard(args)
    code = _apply_overrides(codes.parse_code(_read_input(args.path)), args)
    requested = [part.strip() for part in args.checks.split(",") if part.strip()]
    if not requested or any(name not in CHECK_NAMES for name in requested):
        raise InvalidInputError(f"--checks must list some of {', '.join(CHECK_NAMES)}")
    q_text = code.q or 10
    results: list[tuple[str, bool, str]] = []
    for name in requested:
        if name == "bifix":
            violation = _bifix_violation(code)
            if violation is None:
                results.append((name, True, f"{len(code)} words bifix-free"))
            else:
                w, j = violation
                results.append(
                    (name, False, f"{format_word(w, q_text)} repeats its length-{j} affix")
                )
        elif name == "cross":
            ok, witness = codes.is_cross_bifix_free(code)
            detail = "no prefix/suffix collisions" if ok else witness.describe(q_text)
            results.append((name, ok, detail))
        else:
            ok, witness = codes.is_cross_bifix_free(code)
            if not ok:
                results.append((name, False, f"not cross-bifix-free ({witness.describe(q_text)})"))
                continue
            code.alphabet_size()
            verdict = codes.is_non_expandable(code, guard=guard)
            if verdict.non_expandable:
                detail = f"checked {verdict.candidates_examined} outside words"
            else:
                detail = f"can adjoin {format_word(verdict.witness, q_text)}"
            results.append((name, verdict.non_expandable, detail))
    for name, passed, detail in results:
        print(f"{name}: {'pass' if passed else 'fail'} ({detail})")
    return EXIT_OK if all(passed for _, passed, _ in results) else EXIT_CHECK_FAILED


def _render_count_text(report: CountReport) -> str:
    lines = [
        f"n={report.n} k={report.k} q={report.q} |I|={report.size_i} |J|={report.size_j}",
        f"branch: {report.branch}",
    ]
    if report.closed is not None:
        lines.append(f"closed: {report.closed}")
    if report.enumerated is not None:
        lines.append(f"enumerated: {report.enumerated}")
    if report.agree is not None:
        lines.append(f"agree: {'yes' if report.agree else 'no'}")
    return "\n".join(lines) + "\n"


def _render_count_json(report: CountReport) -> str:
    record = {
        "n": report.n,
        "k": report.k,
        "q": report.q,
        "size_i": report.size_i,
        "size_j": report.size_j,
        "branch": report.branch,
        "closed": report.closed,
        "enumerated": report.enumerated,
        "agree": report.agree,
    }
    return json.dumps(record, indent=2) + "\n"


def _emit_count(report: CountReport, args) -> None:
    if args.format == "json":
        _emit(_render_count_json(report), args.out)
    else:
        _emit(_render_count_text(report), args.out)


def cmd_count(args) -> int:
    guard = _resolve_guard(args)
    bip = _bipartition(args)
    n, k = args.n, args.k
    if n < 2 or not 1 <= k <= n - 1:
        raise InvalidInputError(f"need n >= 2 and 1 <= k <= n-1, got n={n}, k={k}")
    reason = None
    if k == n - 1:
        reason = "k = n-1: the leading-run code is already non-expandable"
    elif 2 * k < n:
        reason = "k < n/2: the leading-run code is already non-expandable"
    elif n < 7:
        reason = "n < 7: no filtered-code count here; see gen --construction expanded"
    if reason is not None:
        _diag(f"not applicable: {reason}")
        report = CountReport(
            n=n, k=k, q=bip.q, size_i=len(bip.I), size_j=len(bip.J),
            branch=BRANCH_NOT_APPLICABLE, closed=None,
        )
        _emit_count(report, args)
        return EXIT_NOT_APPLICABLE
    report = enumeration.count_u(bip, n, k, method=args.method, guard=guard)
    _emit_count(report, args)
    if report.agree is False:
        _diag("check failed: closed and enumerated counts disagree")
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_table(args) -> int:
    guard = _resolve_guard(args)
    report = enumeration.reproduce_tables(args.q, guard=guard)
    if args.format == "csv":
        payload = enumeration.render_tables_csv(report)
    elif args.format == "json":
        payload = enumeration.render_tables_json(report)
    else:
        payload = enumeration.render_tables_markdown(report)
    _emit(payload, args.out)
    errata = sum(1 for cell in report.cells if cell.erratum is not None)
    bad = sum(1 for cell in report.cells if not cell.ok)
    _diag(f"{len(report.cells)} cells; errata flagged: {errata}; mismatches: {bad}")
    return EXIT_OK if report.all_match else EXIT_CHECK_FAILED


def cmd_saturate(args) -> int:
    guard = _resolve_guard(args)
    code = _apply_overrides(codes.parse_code(_read_input(args.path)), args)
    code.alphabet_size()
    ok, witness = codes.is_cross_bifix_free(code)
    if not ok:
        _diag(f"input is not cross-bifix-free ({witness.describe(code.q or 10)})")
        return EXIT_CHECK_FAILED
    saturated = codes.greedy_saturate(code, guard=guard)
    _diag(f"added {len(saturated) - len(code)} words")
    if args.format == "json":
        payload = codes.render_code_json(saturated, verified=True, non_expandable=True)
    else:
        payload = codes.render_code_text(saturated)
    _emit(payload, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cbf",
        description="Construct, verify, expand and count cross-bifix-free codes over Z_q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a construction and write it out")
    gen.add_argument("--q", type=int, default=2, help="alphabet size (default 2)")
    gen.add_argument("--n", type=int, required=True, help="word length")
    gen.add_argument("--k", type=int, required=True, help="leading-run parameter")
    gen.add_argument("--I", dest="i_symbols", default="0", metavar="LIST",
                     help="comma-separated symbols of class I (default 0)")
    gen.add_argument("--construction", required=True,
                     choices=["s", "s-classic", "v", "u", "expanded"])
    gen.add_argument("--format", choices=["text", "json"], default="text")
    gen.add_argument("--out", help="write data here instead of stdout")
    gen.add_argument("--guard", type=int, help="max q**n for exhaustive work")
    gen.set_defaults(func=cmd_gen)

    verify = sub.add_parser("verify", help="run checks against a code file")
    verify.add_argument("path", help="code file, or - for stdin")
    verify.add_argument("--checks", default="cross",
                        help="comma list from: bifix, cross, nonexpandable (default cross)")
    verify.add_argument("--q", type=int, help="alphabet size when the file has no header")
    verify.add_argument("--guard", type=int)
    verify.set_defaults(func=cmd_verify)

    count = sub.add_parser("count", help="count the filtered code two ways")
    count.add_argument("--q", type=int, default=2)
    count.add_argument("--n", type=int, required=True)
    count.add_argument("--k", type=int, required=True)
    count.add_argument("--I", dest="i_symbols", default="0", metavar="LIST")
    count.add_argument("--method", choices=["closed", "enumerate", "both"], default="both")
    count.add_argument("--format", choices=["text", "json"], default="text")
    count.add_argument("--out")
    count.add_argument("--guard", type=int)
    count.set_defaults(func=cmd_count)

    table = sub.add_parser("table", help="reproduce the reference tables")
    table.add_argument("--q", type=int, default=2)
    table.add_argument("--format", choices=["markdown", "csv", "json"], default="markdown")
    table.add_argument("--out")
    table.add_argument("--guard", type=int)
    table.set_defaults(func=cmd_table)

    saturate = sub.add_parser("saturate", help="greedily extend a code file")
    saturate.add_argument("path", help="code file, or - for stdin")
    saturate.add_argument("--q", type=int, help="alphabet size when the file has no header")
    saturate.add_argument("--I", dest="i_symbols", metavar="LIST",
                          help="class I for the output header")
    saturate.add_argument("--format", choices=["text", "json"], default="text")
    saturate.add_argument("--out")
    saturate.add_argument("--guard", type=int)
    saturate.set_defaults(func=cmd_saturate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except InvalidInputError as exc:
        _diag(f"error: {exc}")
        return EXIT_USAGE
    except GuardExceededError as exc:
        _diag(f"refused: {exc}")
        return EXIT_GUARD
    except NotApplicableError as exc:
        _diag(f"not applicable: {exc}")
        return EXIT_NOT_APPLICABLE
    except OSError as exc:
        _diag(f"io error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
