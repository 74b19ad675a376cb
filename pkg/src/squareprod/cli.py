"""Command-line frontend: term, squares, valuation, verify, ratio, explore, bench.

Output goes to stdout in text (default), json or csv form.  JSON records have
the fixed shape {command, inputs, result, elapsed_ns}; every integer inside
inputs/result is rendered as a decimal string so arbitrarily large values
survive any JSON parser.  Exit codes: 0 ok, 1 verification failure, 2 usage
or domain error.
"""

import argparse
import csv
import io
import json
import statistics
import sys
import time
from dataclasses import dataclass, field

from .errors import DomainError
from .explorer import SequenceSpec, search_squares
from .pell import enumerate_square_indices, first_square_indices
from .sequence import compute_term
from .valuation import (
    Prime,
    asymptotic_ratio,
    op_count,
    reset_op_count,
    valuation_closed_form,
    valuation_oracle,
)

FORMATS = ("text", "json", "csv")


@dataclass
class CommandOutput:
    result: dict
    text: list[str]
    csv_header: list[str]
    csv_rows: list[list[str]] = field(default_factory=list)
    exit_code: int = 0


def _build_parser() -> argparse.ArgumentParser:
    # global flags live on the main parser; the subparsers accept the same
    # flags with SUPPRESS defaults so a pre-subcommand value is not clobbered
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS,
                        help="output format (default: text)")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="suppress stdout; rely on the exit code")

    parser = argparse.ArgumentParser(
        prog="squareprod",
        description="Squares and prime-power divisibility in the product "
                    "sequence (2^2-1)(3^2-1)...(n^2-1), with exact arithmetic.")
    parser.add_argument("--format", choices=FORMATS, default="text")
    parser.add_argument("--quiet", action="store_true", default=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("term", parents=[common],
                       help="compute one sequence term and test squareness")
    p.add_argument("n", type=int)

    p = sub.add_parser("squares", parents=[common],
                       help="list indices whose term is a perfect square")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--count", type=int, default=None)

    p = sub.add_parser("valuation", parents=[common],
                       help="exponent of a prime in a term, by closed form")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    p.add_argument("--explain", action="store_true",
                   help="include the formula summands")

    p = sub.add_parser("verify", parents=[common],
                       help="sweep closed form against the summation oracle")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--primes", type=str, required=True,
                   help="comma-separated primes, e.g. 2,3,5")

    p = sub.add_parser("ratio", parents=[common],
                       help="exact ratio of the exponent to 2n/(p-1)")
    p.add_argument("p", type=int)
    p.add_argument("--n-list", type=str, required=True,
                   help="comma-separated indices")

    p = sub.add_parser("explore", parents=[common],
                       help="exhaustive square scan of a generalized product")
    p.add_argument("--kind", choices=("minus", "plus"), required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)

    p = sub.add_parser("bench", parents=[common],
                       help="time closed form vs oracle on one (n, p)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--reps", type=int, default=5)

    return parser


def _parse_int_list(text: str, label: str) -> list[int]:
    items = [part.strip() for part in text.split(",") if part.strip()]
    if not items:
        raise DomainError(f"{label}: expected a comma-separated list of integers")
    try:
        return [int(part) for part in items]
    except ValueError as exc:
        raise DomainError(f"{label}: {exc}") from None


def _cmd_term(args) -> CommandOutput:
    t = compute_term(args.n)
    decimal = str(t.value)
    result = {
        "n": str(t.n),
        "value": decimal,
        "digits": str(len(decimal)),
        "is_square": t.is_square,
        "sqrt_witness": None if t.sqrt_witness is None else str(t.sqrt_witness),
    }
    text = [
        f"n: {t.n}",
        f"term: {decimal}",
        f"digits: {len(decimal)}",
        f"square: {'yes' if t.is_square else 'no'}"
        + (f" (root {t.sqrt_witness})" if t.is_square else ""),
    ]
    return CommandOutput(
        result=result,
        text=text,
        csv_header=["n", "value", "digits", "is_square", "sqrt_witness"],
        csv_rows=[[str(t.n), decimal, str(len(decimal)),
                   str(t.is_square).lower(),
                   "" if t.sqrt_witness is None else str(t.sqrt_witness)]],
    )


def _cmd_squares(args) -> CommandOutput:
    if (args.max_n is None) == (args.count is None):
        raise DomainError("squares: give exactly one of --max-n or --count")
    if args.max_n is not None:
        indices = enumerate_square_indices(args.max_n)
    else:
        indices = first_square_indices(args.count)
    records = [
        {"k": str(i.k), "n": str(i.n), "parity": i.parity,
         "root_a": str(i.root_a), "root_b": str(i.root_b)}
        for i in indices
    ]
    text = [f"{len(indices)} square indices"]
    text += [f"k={i.k} n={i.n} parity={i.parity} root_a={i.root_a} root_b={i.root_b}"
             for i in indices]
    return CommandOutput(
        result={"indices": records},
        text=text,
        csv_header=["k", "n", "parity", "root_a", "root_b"],
        csv_rows=[[r["k"], r["n"], r["parity"], r["root_a"], r["root_b"]]
                  for r in records],
    )


def _cmd_valuation(args) -> CommandOutput:
    b = valuation_closed_form(args.n, args.p)
    result = {
        "n": str(b.n), "p": str(b.p), "family": b.family, "total": str(b.total),
    }
    text = [f"v(p={b.p}, n={b.n}) = {b.total}"]
    if args.explain:
        result["summands"] = [{"label": lab, "value": str(v)} for lab, v in b.summands]
        text += [f"  {lab} = {v}" for lab, v in b.summands]
    return CommandOutput(
        result=result,
        text=text,
        csv_header=["n", "p", "family", "summand_1", "summand_2", "summand_3", "total"],
        csv_rows=[[str(b.n), str(b.p), b.family]
                  + [str(v) for _, v in b.summands] + [str(b.total)]],
    )


def _cmd_verify(args) -> CommandOutput:
    primes = [Prime(p) for p in _parse_int_list(args.primes, "--primes")]
    if args.max_n < 2:
        raise DomainError("verify: --max-n must be >= 2")
    # the oracle total is accumulated factor by factor along n, which keeps
    # the sweep linear; after step n it equals valuation_oracle(n, p)
    running = {pr.p: 0 for pr in primes}
    checks = 0
    counterexample = None
    for n in range(2, args.max_n + 1):
        for pr in primes:
            running[pr.p] += _factor_valuation(n, pr.p)
            checks += 1
            if valuation_closed_form(n, pr).total != running[pr.p]:
                counterexample = (n, pr.p)
                break
        if counterexample:
            break
    status = "PASS" if counterexample is None else "FAIL"
    result = {
        "max_n": str(args.max_n),
        "primes": [str(pr.p) for pr in primes],
        "checks": str(checks),
        "status": status,
    }
    text = [f"{status}: {checks} checks (n in [2, {args.max_n}], "
            f"primes {','.join(str(pr.p) for pr in primes)})"]
    bad_n = bad_p = ""
    if counterexample:
        result["counterexample"] = {"n": str(counterexample[0]),
                                    "p": str(counterexample[1])}
        text.append(f"first mismatch at n={counterexample[0]} p={counterexample[1]}")
        bad_n, bad_p = str(counterexample[0]), str(counterexample[1])
    return CommandOutput(
        result=result,
        text=text,
        csv_header=["max_n", "primes", "checks", "status", "first_bad_n", "first_bad_p"],
        csv_rows=[[str(args.max_n),
                   " ".join(str(pr.p) for pr in primes),
                   str(checks), status, bad_n, bad_p]],
        exit_code=0 if counterexample is None else 1,
    )


def _factor_valuation(k: int, q: int) -> int:
    # exponent of q in (k-1)(k+1), the factor joining the product at step k
    total = 0
    for m in (k - 1, k + 1):
        while m % q == 0:
            m //= q
            total += 1
    return total


def _cmd_ratio(args) -> CommandOutput:
    prime = Prime(args.p)
    rows = []
    text = []
    for n in _parse_int_list(args.n_list, "--n-list"):
        rep = asymptotic_ratio(n, prime)
        deviation = abs(rep.ratio - 1)
        rows.append({
            "n": str(rep.n),
            "valuation": str(rep.valuation),
            "ratio": str(rep.ratio),
            "deviation_bound": str(rep.deviation_bound),
            "within_bound": deviation <= rep.deviation_bound,
        })
        text.append(f"n={rep.n} v={rep.valuation} ratio={rep.ratio} "
                    f"bound={rep.deviation_bound}")
    return CommandOutput(
        result={"p": str(prime.p), "reports": rows},
        text=text,
        csv_header=["p", "n", "valuation", "ratio", "deviation_bound", "within_bound"],
        csv_rows=[[str(prime.p), r["n"], r["valuation"], r["ratio"],
                   r["deviation_bound"], str(r["within_bound"]).lower()]
                  for r in rows],
    )


def _cmd_explore(args) -> CommandOutput:
    spec = SequenceSpec(kind=args.kind, a=args.a)
    hits = search_squares(spec, args.max_n)
    records = [{"n": str(h.n), "sqrt_witness": str(h.sqrt_witness)} for h in hits]
    text = [f"{len(hits)} hits in [{spec.start}, {args.max_n}] "
            f"(kind={spec.kind}, a={spec.a}; exhaustive scan, "
            f"nothing claimed beyond max_n)"]
    text += [f"n={h.n} root={h.sqrt_witness}" for h in hits]
    return CommandOutput(
        result={"kind": spec.kind, "a": str(spec.a), "start": str(spec.start),
                "max_n": str(args.max_n), "hits": records},
        text=text,
        csv_header=["kind", "a", "n", "sqrt_witness"],
        csv_rows=[[spec.kind, str(spec.a), r["n"], r["sqrt_witness"]]
                  for r in records],
    )


def _cmd_bench(args) -> CommandOutput:
    if args.reps < 1:
        raise DomainError("bench: --reps must be >= 1")
    prime = Prime(args.p)

    closed_times = []
    for _ in range(args.reps):
        t0 = time.perf_counter_ns()
        closed_total = valuation_closed_form(args.n, prime).total
        closed_times.append(time.perf_counter_ns() - t0)
    oracle_times = []
    for _ in range(args.reps):
        t0 = time.perf_counter_ns()
        oracle_total = valuation_oracle(args.n, prime)
        oracle_times.append(time.perf_counter_ns() - t0)

    reset_op_count()
    valuation_closed_form(args.n, prime)
    closed_ops = op_count()
    reset_op_count()
    valuation_oracle(args.n, prime)
    oracle_ops = op_count()

    agree = closed_total == oracle_total
    closed_median = int(statistics.median(closed_times))
    oracle_median = int(statistics.median(oracle_times))
    result = {
        "n": str(args.n), "p": str(prime.p), "reps": str(args.reps),
        "closed_total": str(closed_total), "oracle_total": str(oracle_total),
        "totals_equal": agree,
        "closed_median_ns": closed_median, "oracle_median_ns": oracle_median,
        "closed_ops": str(closed_ops), "oracle_ops": str(oracle_ops),
    }
    text = [
        f"closed form: total={closed_total} median={closed_median}ns ops={closed_ops}",
        f"oracle:      total={oracle_total} median={oracle_median}ns ops={oracle_ops}",
        f"totals {'agree' if agree else 'DISAGREE'}",
    ]
    return CommandOutput(
        result=result,
        text=text,
        csv_header=["n", "p", "reps", "closed_total", "oracle_total",
                    "closed_median_ns", "oracle_median_ns", "closed_ops", "oracle_ops"],
        csv_rows=[[str(args.n), str(prime.p), str(args.reps),
                   str(closed_total), str(oracle_total),
                   str(closed_median), str(oracle_median),
                   str(closed_ops), str(oracle_ops)]],
        exit_code=0 if agree else 1,
    )


_HANDLERS = {
    "term": _cmd_term,
    "squares": _cmd_squares,
    "valuation": _cmd_valuation,
    "verify": _cmd_verify,
    "ratio": _cmd_ratio,
    "explore": _cmd_explore,
    "bench": _cmd_bench,
}

_INPUT_KEYS = {
    "term": ("n",),
    "squares": ("max_n", "count"),
    "valuation": ("n", "p", "explain"),
    "verify": ("max_n", "primes"),
    "ratio": ("p", "n_list"),
    "explore": ("kind", "a", "max_n"),
    "bench": ("n", "p", "reps"),
}


def _echo_inputs(args) -> dict:
    out = {}
    for key in _INPUT_KEYS[args.command]:
        value = getattr(args, key)
        if value is None:
            continue
        out[key] = value if isinstance(value, (str, bool)) else str(value)
    return out


def _emit(record: dict, output: CommandOutput, fmt: str, quiet: bool) -> None:
    if quiet:
        return
    if fmt == "json":
        print(json.dumps(record, indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(output.csv_header)
        writer.writerows(output.csv_rows)
        sys.stdout.write(buf.getvalue())
    else:
        for line in output.text:
            print(line)


def main(argv=None) -> int:
    # rendering exact decimals is the whole point; lift the interpreter's
    # int-to-str size guard (witnesses can run to hundreds of thousands of digits)
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        t0 = time.perf_counter_ns()
        output = _HANDLERS[args.command](args)
        elapsed = time.perf_counter_ns() - t0
    except DomainError as exc:
        print(f"squareprod {args.command}: {exc}", file=sys.stderr)
        return 2
    record = {
        "command": args.command,
        "inputs": _echo_inputs(args),
        "result": output.result,
        "elapsed_ns": elapsed,
    }
    _emit(record, output, args.format, args.quiet)
    return output.exit_code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
