#!/usr/bin/env python3
"""Dirichlet series of the arithmetic derivative, checked against closed forms.

The exact layer supplies coefficients; this layer sums a(n)/n^s in double
precision and compares against products of zeta values and the prime sum
F(s) = sum over p of 1/(p^(s+1) - p).  Every estimate carries an explicit
truncation point, and zeta/F carry rigorous tail bounds.
"""

import math

from arithfn import (
    MangoldtOf,
    check_series_identity,
    dirichlet_partial_sum,
    ld,
    mangoldt_tabulate,
    parse_expression,
    prime_F,
    tabulate,
    zeta,
)

print("zeta estimates carry their own error budget:")
for s in (2, 4):
    est = zeta(s, 1e-10)
    closed = math.pi**2 / 6 if s == 2 else math.pi**4 / 90
    print(f"  zeta({s}) = {est.value.real:.12f}  (N = {est.truncation}, "
          f"tail <= {est.tail_bound:.1e}, true error {abs(est.value - closed):.1e})")

print()
print("the prime sum F(s) converges for Re(s) > 0:")
for p_lim in (10**3, 10**4, 10**5):
    est = prime_F(1, p_lim)
    print(f"  F(1) over primes <= {p_lim:>6} = {est.value.real:.10f}  (tail <= {est.tail_bound:.1e})")

print()
print("coefficients of the attached-to-ld function sum straight to F:")
limit = 10**5
lam = mangoldt_tabulate(MangoldtOf(ld()), limit)
lhs = dirichlet_partial_sum(lam, 2)
rhs = prime_F(2, limit)
print(f"  sum_(n<={limit}) lambda_ld(n)/n^2 = {lhs.value.real:.15f}")
print(f"  F(2) over primes <= {limit}      = {rhs.value.real:.15f}")
print(f"  |difference| = {abs(lhs.value - rhs.value):.2e}")

print()
print("the headline closed form: sum delta(n)/n^s = zeta(s-1) F(s-1) at s = 4:")
delta_tab = tabulate(parse_expression("delta"), limit)
lhs = dirichlet_partial_sum(delta_tab, 4).value
rhs = zeta(3, 1e-10).value * prime_F(3, limit).value
print(f"  truncated sum = {lhs.real:.15f}")
print(f"  closed form   = {rhs.real:.15f}")
print(f"  |difference|  = {abs(lhs - rhs):.2e}")

print()
print("preset checks bundle both sides with a tolerance verdict:")
for name, s in [("thm3.3", 4), ("cor-tau", 4), ("cor-mu", 4)]:
    r = check_series_identity(name, s, limit, limit, 1e-6)
    print(f"  {name:<8} s={s}: |lhs-rhs| = {r.abs_error:.2e}  pass={r.passed}")

print()
print("tolerances are real: the same identity fails when N is tiny and the bar is 1e-12:")
r = check_series_identity("thm3.3", 4, 100, limit, 1e-12)
print(f"  thm3.3 with N=100: |lhs-rhs| = {r.abs_error:.2e}  pass={r.passed}")

print()
print("complex points work too (s = 3 + 1i):")
r = check_series_identity("lemma-Fld", 3 + 1j, 10**4, 10**4, 1e-6)
print(f"  lemma-Fld: lhs = {r.lhs:.12f}")
print(f"             rhs = {r.rhs:.12f}  pass={r.passed}")
