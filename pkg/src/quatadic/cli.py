"""Command-line front end: ``quatadic gen|complexity|verify|lemma-check``.

Exit codes: 0 all checks pass, 1 a mathematical discrepancy was found,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields

from quatadic.adic import (
    VerificationRecord,
    adic_complexity,
    check_lemma2_part1,
    check_lemma2_part2,
    gauss_sum,
    lemma2_rhs,
    ring_modulus,
    s_a,
    verify_theorem,
)
from quatadic.numtheory import OddPrimeParam, is_prime, p_limit
from quatadic.sequence import (
    SequenceFormatError,
    generate_sequence,
    parse_digits,
    sequence_to_text,
)

EXIT_OK = 0
EXIT_DISCREPANCY = 1
EXIT_USAGE = 2

CSV_HEADER = [
    "p", "N", "d_plus", "d_minus", "d_total", "d_predicted",
    "lemma2_1", "lemma2_2", "theorem_ok", "elapsed_ms",
]


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class ReportRow:
    p: int
    N: int
    d_plus: int
    d_minus: int
    d_total: int
    d_predicted: int
    lemma2_1: bool
    lemma2_2: bool
    theorem_ok: bool
    elapsed_ms: float

    @classmethod
    def from_record(cls, rec: VerificationRecord) -> ReportRow:
        return cls(
            p=rec.p,
            N=rec.n_period,
            d_plus=rec.d_plus,
            d_minus=rec.d_minus,
            d_total=rec.d_total,
            d_predicted=rec.d_predicted,
            lemma2_1=rec.lemma2_part1_ok,
            lemma2_2=rec.lemma2_part2_ok,
            theorem_ok=rec.theorem_ok,
            elapsed_ms=round(rec.elapsed * 1000, 3),
        )

    @property
    def ok(self) -> bool:
        return self.lemma2_1 and self.lemma2_2 and self.theorem_ok

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _fmt_csv(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def rows_to_csv(rows: list[ReportRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for row in rows:
        d = row.as_dict()
        w.writerow([_fmt_csv(d[k]) for k in CSV_HEADER])
    return buf.getvalue()


def rows_to_json(rows: list[ReportRow]) -> str:
    failed = [r.p for r in rows if not r.ok]
    doc = {
        "rows": [r.as_dict() for r in rows],
        "summary": {"primes": len(rows), "passed": len(rows) - len(failed), "failed": failed},
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_report(text: str, fmt: str) -> list[dict]:
    """Parse a report back into row dicts with native types."""
    if fmt == "json":
        return json.loads(text)["rows"]
    out = []
    for raw in csv.DictReader(io.StringIO(text)):
        row = {}
        for k, v in raw.items():
            if v in ("true", "false"):
                row[k] = v == "true"
            elif k == "elapsed_ms":
                row[k] = float(v)
            else:
                row[k] = int(v)
        out.append(row)
    return out


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise UsageError(f"range must look like LO..HI, got {text!r}")
    try:
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"range bounds must be integers, got {text!r}") from None
    if lo_i < 3:
        raise UsageError(f"range start must be >= 3, got {lo_i}")
    if lo_i > hi_i:
        raise UsageError(f"empty range {text!r}")
    limit = p_limit()
    if hi_i > limit:
        raise UsageError(f"range end {hi_i} exceeds the configured limit {limit}")
    return lo_i, hi_i


def odd_primes(lo: int, hi: int) -> list[int]:
    return [n for n in range(max(lo, 3), hi + 1) if n % 2 and is_prime(n)]


def run_verify(lo: int, hi: int, workers: int = 1) -> list[ReportRow]:
    primes = odd_primes(lo, hi)
    if workers > 1 and len(primes) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(verify_theorem, primes))
    else:
        records = [verify_theorem(p) for p in primes]
    return sorted((ReportRow.from_record(r) for r in records), key=lambda r: r.p)


def _param(p: int) -> OddPrimeParam:
    try:
        return OddPrimeParam(p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="ascii", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from None


def cmd_gen(args) -> int:
    param = _param(args.p)
    seq = generate_sequence(param)
    if args.format == "json":
        text = json.dumps({"p": param.p, "symbols": list(seq.symbols)}) + "\n"
    else:
        text = sequence_to_text(seq) + "\n"
    _write(text, args.out)
    return EXIT_OK


def _read_symbols(path: str, m: int) -> list[int]:
    try:
        with open(path, encoding="ascii") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    if text.lstrip().startswith("{"):
        try:
            symbols = json.loads(text)["symbols"]
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"{path}: malformed JSON sequence: {exc}") from None
        for i, s in enumerate(symbols):
            if not isinstance(s, int) or not 0 <= s < m:
                raise UsageError(f"{path}: invalid symbol {s!r} at position {i}")
        return symbols
    try:
        return parse_digits(text, m)
    except SequenceFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_complexity(args) -> int:
    if args.m < 2:
        raise UsageError(f"base must be >= 2, got {args.m}")
    if (args.input is None) == (args.p is None):
        raise UsageError("give exactly one of a sequence file or --p")
    if args.p is not None:
        symbols = list(generate_sequence(_param(args.p)).symbols)
        if any(s >= args.m for s in symbols):
            raise UsageError(f"generated sequence has symbols >= base {args.m}")
    else:
        symbols = _read_symbols(args.input, args.m)
    if not symbols:
        raise UsageError("empty sequence")
    res = adic_complexity(symbols, args.m)
    if args.json:
        doc = {
            "m": res.m,
            "N": res.n_period,
            "d": res.d,
            "exact": res.exact_text(),
            "bits": res.approx_bits,
            "complexity": res.complexity,
        }
        print(json.dumps(doc))
    else:
        print(f"N = {res.n_period}")
        print(f"d = {res.d}")
        print(f"C = {res.exact_text()}")
        print(f"C ~ {res.complexity:.6f} (base {res.m}), {res.approx_bits:.6f} bits "
              f"of {res.n_period}*log2({res.m})")
    return EXIT_OK


def cmd_verify(args) -> int:
    lo, hi = parse_range(args.range)
    if args.workers < 1:
        raise UsageError("--workers must be >= 1")
    rows = run_verify(lo, hi, args.workers)
    text = rows_to_csv(rows) if args.format == "csv" else rows_to_json(rows)
    _write(text, args.out)
    failed = [r.p for r in rows if not r.ok]
    summary = f"verified {len(rows)} primes in {lo}..{hi}: {len(rows) - len(failed)} ok, {len(failed)} failed"
    if failed:
        summary += " (p = " + ", ".join(map(str, failed)) + ")"
    print(summary, file=sys.stderr if args.out in (None, "-") else sys.stdout)
    return EXIT_DISCREPANCY if failed else EXIT_OK


def cmd_lemma_check(args) -> int:
    param = _param(args.p)
    p = param.p
    fmt = hex if args.hex else str
    s = s_a(generate_sequence(param), 4) % ring_modulus(p)
    g = gauss_sum(p)
    part1 = check_lemma2_part1(p)
    part2 = check_lemma2_part2(p)
    print(f"p = {p}, N = {param.n_period}")
    print(f"S_A(4) mod 4^N-1 = {fmt(s)}")
    print(f"lemma2 rhs       = {fmt(lemma2_rhs(p).value)}")
    print(f"G_p              = {fmt(g.value)}")
    print(f"G_p^2            = {fmt((g ** 2).value)}")
    print(f"part1: {str(part1).lower()}")
    print(f"part2: {str(part2).lower()}")
    return EXIT_OK if part1 and part2 else EXIT_DISCREPANCY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quatadic",
        description="4-adic complexity of quaternary cyclotomic sequences of period 2p",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write the period-2p quaternary sequence")
    gen.add_argument("--p", type=int, required=True)
    gen.add_argument("--format", choices=["text", "json"], default="text")
    gen.add_argument("--out", help="output path (default stdout)")
    gen.set_defaults(func=cmd_gen)

    cx = sub.add_parser("complexity", help="m-adic complexity of a sequence")
    cx.add_argument("input", nargs="?", help="sequence file (digits or gen JSON)")
    cx.add_argument("--p", type=int, help="generate the sequence for this prime instead")
    cx.add_argument("--m", type=int, default=4, help="base (default 4)")
    cx.add_argument("--json", action="store_true")
    cx.set_defaults(func=cmd_complexity)

    ver = sub.add_parser("verify", help="check the complexity formula over a prime range")
    ver.add_argument("--range", default="3..199", help="LO..HI (default 3..199)")
    ver.add_argument("--format", choices=["csv", "json"], default="csv")
    ver.add_argument("--out", help="report path (default stdout)")
    ver.add_argument("--workers", type=int, default=1)
    ver.set_defaults(func=cmd_verify)

    lc = sub.add_parser("lemma-check", help="check both Gauss-sum congruences for one p")
    lc.add_argument("--p", type=int, required=True)
    lc.add_argument("--hex", action="store_true", help="print ring values in hex")
    lc.set_defaults(func=cmd_lemma_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
