"""Exit criteria. Each test carries a ``criterion`` marker; the terminal
summary prints one PASS/FAIL line per criterion."""

import math
import time

import pytest

from quatadic.adic import (
    adic_complexity,
    check_lemma2_part1,
    check_lemma2_part2,
    gauss_sum,
    s_a,
    split_gcd,
    verify_theorem,
)
from quatadic.cli import main, parse_report, rows_to_csv, rows_to_json, run_verify
from quatadic.numtheory import crt_lift, legendre_symbol, multiplicative_order, primitive_root_mod_2p
from quatadic.sequence import build_partition, generate_sequence, sequence_to_text

import bruteforce

ODD_PRIMES_199 = [p for p in range(3, 200) if bruteforce.is_prime_td(p)]
ODD_PRIMES_97 = [p for p in ODD_PRIMES_199 if p <= 97]


@pytest.mark.criterion(1, "d = 5 iff 5 | p-2, else 1, for every odd prime in [3, 199] (< 60 s)")
def test_theorem_reproduction():
    assert len(ODD_PRIMES_199) == 45
    start = time.perf_counter()
    for p in ODD_PRIMES_199:
        s = s_a(generate_sequence(p), 4)
        d = math.gcd(s, 4 ** (2 * p) - 1)
        assert d == (5 if (p - 2) % 5 == 0 else 1), p
    assert time.perf_counter() - start < 60


@pytest.mark.criterion(2, "S_A(4) equals the Gauss-sum closed form exactly, p in [3, 97]")
@pytest.mark.parametrize("p", ODD_PRIMES_97)
def test_lemma2_part1(p):
    assert check_lemma2_part1(p)


@pytest.mark.criterion(3, "G_p^2 = (-1/p)(p - (4^N-1)/15) exactly, p in [3, 97]")
@pytest.mark.parametrize("p", ODD_PRIMES_97)
def test_lemma2_part2(p):
    assert check_lemma2_part2(p)


@pytest.mark.criterion(4, "d_minus = 1, d_plus in {1, 5}, 25 does not divide d_plus, p in [3, 97]")
@pytest.mark.parametrize("p", ODD_PRIMES_97)
def test_gcd_structure(p):
    s = s_a(generate_sequence(p), 4)
    d_plus, d_minus = split_gcd(p, s)
    assert d_minus == 1
    assert d_plus in (1, 5)
    assert (d_plus == 5) == ((p - 2) % 5 == 0)
    assert math.gcd(s, 4**p + 1) % 25 != 0


@pytest.mark.criterion(5, "fixtures: G_3 mod 13 = 7, ord_25(4) = 10, p=3 gives 002231 / 1952 / d=1")
def test_fixtures():
    assert gauss_sum(3).value % 13 == 7
    assert (gauss_sum(3).value + 6) % 13 == 0
    assert multiplicative_order(4, 25) == 10
    assert bruteforce.order_by_powering(4, 25) == 10
    seq = generate_sequence(3)
    assert sequence_to_text(seq) == "002231" == "".join(map(str, bruteforce.sequence(3)))
    res = adic_complexity(seq, 4)
    assert res.s_value == 1952 == bruteforce.s_value(bruteforce.sequence(3), 4)
    assert res.d == 1 == bruteforce.d_value(3)


@pytest.mark.criterion(6, "partition, symbol balance, primitive-root independence, Legendre, CRT")
def test_property_suites():
    for p in ODD_PRIMES_199:
        part = build_partition(p)
        assert sorted(x for c in part.classes() for x in c) == list(range(2 * p))
        seq = generate_sequence(p).symbols
        assert [seq.count(k) for k in range(4)] == [(p + 1) // 2, (p - 1) // 2] * 2
        syms = [legendre_symbol(a, p) for a in range(p)]
        assert syms == [bruteforce.legendre_enum(a, p) for a in range(p)]
        assert all(syms[a * b % p] == syms[a] * syms[b] for a in range(1, p) for b in range(1, p))
    for p in ODD_PRIMES_97:
        n = 2 * p
        ref = build_partition(p)
        roots = [g for g in range(1, n) if math.gcd(g, n) == 1
                 and bruteforce.order_by_powering(g, n) == p - 1]
        assert primitive_root_mod_2p(p) == roots[0]
        assert all(build_partition(p, g) == ref for g in roots)
    for p in (q for q in ODD_PRIMES_199 if q <= 50):
        assert sorted(crt_lift(p, a, b) for a in range(p) for b in (0, 1)) == list(range(2 * p))


def _strip_elapsed(text):
    return [line.rsplit(",", 1)[0] for line in text.splitlines()]


@pytest.mark.criterion(7, "verify --range 3..199 is deterministic; parallel equals serial")
def test_determinism(tmp_path):
    paths = [tmp_path / f"r{i}.csv" for i in range(3)]
    assert main(["verify", "--range", "3..199", "--out", str(paths[0])]) == 0
    assert main(["verify", "--range", "3..199", "--out", str(paths[1])]) == 0
    assert main(["verify", "--range", "3..199", "--out", str(paths[2]), "--workers", "4"]) == 0
    texts = [p.read_text() for p in paths]
    assert _strip_elapsed(texts[0]) == _strip_elapsed(texts[1]) == _strip_elapsed(texts[2])
    assert len(texts[0].splitlines()) == 1 + 45

    drop = lambda rows: [{k: v for k, v in r.items() if k != "elapsed_ms"} for r in rows]
    rows = run_verify(3, 199)
    assert drop(parse_report(rows_to_csv(rows), "csv")) == drop(parse_report(rows_to_json(rows), "json"))
    assert all(r.ok for r in rows)
