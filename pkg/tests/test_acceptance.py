"""End-to-end verification gates for the library.

Each test prints one PASS/FAIL line.  Run with `pytest tests/test_acceptance.py -v -s`
to see the lines and timings; the heavy gates share one sieve and one builtin
cache through module fixtures.
"""

import math
import random
import time
from fractions import Fraction

import pytest

from arithfn import (
    MangoldtOf,
    big_omega,
    build_sieve,
    check_series_identity,
    convolve_at,
    custom,
    delta,
    delta_partial,
    dirichlet_convolve,
    dirichlet_partial_sum,
    eval_natural,
    eval_rational,
    h_eval,
    ld,
    mangoldt_eval,
    mangoldt_tabulate,
    parse_expression,
    prime_F,
    quotient_ratio,
    tabulate,
    zeta,
)
from arithfn.cli import run

from oracles import leibniz_delta, naive_divisors, naive_tau

ZETA3 = 1.2020569031595942854  # Apery's constant, high-precision reference


@pytest.fixture(scope="module")
def sieve():
    return build_sieve(10**6)


@pytest.fixture(scope="module")
def cache():
    return {}


def report(num: int, label: str, ok: bool, elapsed: float) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"[acceptance] criterion {num} ({label}): {status}  [{elapsed:.1f} s]")


def test_criterion_1_exact_identity_suite(capsys):
    t0 = time.perf_counter()
    rc = run(["verify", "all", "--limit", "10000"])
    elapsed = time.perf_counter() - t0
    out = capsys.readouterr().out
    ok = rc == 0 and "20/20 identities hold" in out
    with capsys.disabled():
        report(1, "exact identity suite, all presets on [1, 10^4]", ok, elapsed)
    assert ok, out
    assert elapsed < 60.0


def test_criterion_2_spot_values(capsys):
    t0 = time.perf_counter()
    d = delta()

    assert leibniz_delta(60) == 92 and eval_natural(d, 60) == 92
    assert leibniz_delta(8) == 12 and eval_natural(d, 8) == 12

    by_divisors = sum(e * leibniz_delta(6 // e) for e in naive_divisors(6))
    conv = dirichlet_convolve(tabulate(parse_expression("id"), 6), tabulate(parse_expression("delta"), 6))
    assert by_divisors == 10 and conv[6] == 10
    assert Fraction(naive_tau(6) * leibniz_delta(6), 2) == 10

    assert mangoldt_eval(MangoldtOf(ld()), 8) == Fraction(1, 2)  # 8 = 2**3, value 1/2

    oracle = Fraction(leibniz_delta(3) * 2 - leibniz_delta(2) * 3, 2 * 2)
    assert oracle == Fraction(-1, 4) and eval_rational(d, 3, 2) == Fraction(-1, 4)

    ok = True
    with capsys.disabled():
        report(2, "spot values vs brute-force oracles", ok, time.perf_counter() - t0)


def test_criterion_3_property_suite(capsys):
    t0 = time.perf_counter()
    small_sieve = build_sieve(300 * 300)
    fns = [
        delta(),
        delta_partial(2),
        delta_partial(5),
        ld(),
        big_omega(),
        custom("blend", {2: Fraction(2, 7)}, {5: 3}, f_default=1, h_default="identity"),
    ]
    for fn in fns:
        f = [None] + [eval_natural(fn, i, small_sieve) for i in range(1, 301)]
        h = [None] + [h_eval(fn, i, small_sieve) for i in range(1, 301)]
        q = [None] + [f[i] / h[i] for i in range(1, 301)]
        for m in range(1, 301):
            fm, hm, qm = f[m], h[m], q[m]
            for n in range(m, 301):
                mn = m * n
                assert eval_natural(fn, mn, small_sieve) == fm * h[n] + f[n] * hm
                assert quotient_ratio(fn, mn, small_sieve) == qm + q[n]

    rng = random.Random(90210)
    for _ in range(500):
        a, b, c = (rng.randint(1, 200) for _ in range(3))
        fn = fns[rng.randrange(len(fns))]
        assert eval_rational(fn, a * c, b * c) == eval_rational(fn, a, b)

    with capsys.disabled():
        report(3, "Leibniz rule, quotient additivity, rational scaling", True, time.perf_counter() - t0)


def test_criterion_4_zeta_accuracy(capsys):
    t0 = time.perf_counter()
    err2 = abs(zeta(2, 1e-10).value - math.pi**2 / 6)
    err4 = abs(zeta(4, 1e-10).value - math.pi**4 / 90)
    ok = err2 <= 1e-10 and err4 <= 1e-10
    with capsys.disabled():
        report(4, f"zeta closed forms (errors {err2:.2e}, {err4:.2e})", ok, time.perf_counter() - t0)
    assert ok


def test_criterion_5_lambda_ld_series_vs_prime_F(capsys):
    t0 = time.perf_counter()
    limit = 10**6
    lam = mangoldt_tabulate(MangoldtOf(ld()), limit)
    lhs = dirichlet_partial_sum(lam, 2).value
    rhs = prime_F(2, limit).value
    err = abs(lhs - rhs)
    elapsed = time.perf_counter() - t0
    ok = err <= 1e-8 and elapsed < 30.0
    with capsys.disabled():
        report(5, f"sum Lambda_ld(n)/n^2 vs F(2) at 10^6 (error {err:.2e})", ok, elapsed)
    assert err <= 1e-8
    assert elapsed < 30.0


def test_criterion_6_delta_series_closed_form(capsys, sieve, cache):
    t0 = time.perf_counter()
    limit = 10**6
    delta_tab = tabulate(parse_expression("delta"), limit, sieve=sieve, cache=cache)
    lhs = dirichlet_partial_sum(delta_tab, 4).value

    z3 = zeta(3, 1e-10).value
    f3 = prime_F(3, limit)
    rhs = z3 * f3.value
    err = abs(lhs - rhs)

    # independent cross-checks of both closed-form factors
    assert abs(z3 - ZETA3) <= 1e-9
    flags = bytearray(b"\x01") * (10**7 + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(10**7) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(flags[p * p :: p])
    f3_oracle = math.fsum(1.0 / (p**4 - p) for p in range(2, 10**7 + 1) if flags[p])
    assert abs(f3.value - f3_oracle) <= f3.tail_bound

    ok = err <= 1e-6
    with capsys.disabled():
        report(6, f"sum delta(n)/n^4 vs zeta(3) F(3) at 10^6 (error {err:.2e})", ok, time.perf_counter() - t0)
    assert ok


def test_criterion_7_series_corollaries(capsys, sieve, cache):
    t0 = time.perf_counter()
    points = [
        ("cor-tau", 4),
        ("cor-mu", 4),
        ("cor-phi", 5),
        ("cor-sigma", 5),
        ("cor-sigmak", 6),
    ]
    errs = {}
    for name, s in points:
        r = check_series_identity(name, s, 10**6, 10**6, 1e-6, k=2, sieve=sieve, cache=cache)
        errs[name] = r.abs_error
        assert r.passed, (name, r.abs_error)
        tight = check_series_identity(name, s, 100, 10**6, 1e-12, k=2, sieve=sieve, cache=cache)
        assert not tight.passed, (name, tight.abs_error)

    worst = max(errs.values())
    with capsys.disabled():
        report(
            7,
            f"series corollaries at 10^6 within 1e-6 (worst {worst:.2e}); "
            "all fail by design at N=100, tol 1e-12",
            True,
            time.perf_counter() - t0,
        )


def test_criterion_8_convolution_dual_route(capsys):
    t0 = time.perf_counter()
    rng = random.Random(1618)
    leaves = [
        "one", "eps", "id", "id_2", "id_-1", "mu", "tau", "phi",
        "sigma", "sigma_2", "delta", "ld", "big_omega", "mangoldt:ld",
    ]
    scalars = ["1/2", "2", "3/4", "5"]

    def random_side() -> str:
        shape = rng.randrange(3)
        if shape == 0:
            return rng.choice(leaves)
        if shape == 1:
            return f"{rng.choice(leaves)} . {rng.choice(leaves)}"
        return f"{rng.choice(scalars)} . {rng.choice(leaves)}"

    limit = 2000
    for _ in range(10):
        ta, tb = random_side(), random_side()
        ea, eb = parse_expression(ta), parse_expression(tb)
        bulk = dirichlet_convolve(tabulate(ea, limit), tabulate(eb, limit))
        for n in range(1, limit + 1):
            assert convolve_at(ea, eb, n) == bulk[n], (ta, tb, n)

    with capsys.disabled():
        report(8, "divisor enumeration vs harmonic loop on 10 random pairs", True, time.perf_counter() - t0)
