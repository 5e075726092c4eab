#!/usr/bin/env python3
"""Tour of Leibniz-additive functions and the arithmetic derivative.

A function f is Leibniz-additive when a completely multiplicative companion h
satisfies f(mn) = f(m)h(n) + f(n)h(m).  The arithmetic derivative delta
(delta(p) = 1 on primes, product rule everywhere else) is the flagship case
with h(n) = n.
"""

from fractions import Fraction

from arithfn import (
    big_omega,
    delta,
    delta_partial,
    eval_inverse,
    eval_natural,
    eval_rational,
    eval_signed,
    factorize_rational,
    h_eval,
    ld,
    quotient_ratio,
)

d = delta()

print("arithmetic derivative on 1..20:")
print("  n      :", *[f"{n:4d}" for n in range(1, 21)])
print("  delta n:", *[f"{str(eval_natural(d, n)):>4}" for n in range(1, 21)])

print()
print("the product rule delta(mn) = m delta(n) + n delta(m):")
for m, n in [(4, 15), (6, 10), (12, 12)]:
    lhs = eval_natural(d, m * n)
    rhs = m * eval_natural(d, n) + n * eval_natural(d, m)
    print(f"  delta({m}*{n}) = {lhs}, split form gives {rhs}")

print()
print("every L-additive pair works the same way; h is the multiplicative companion:")
for fn in (d, ld(), big_omega(), delta_partial(2)):
    m, n = 12, 35
    lhs = eval_natural(fn, m * n)
    rhs = eval_natural(fn, m) * h_eval(fn, n) + eval_natural(fn, n) * h_eval(fn, m)
    print(f"  {fn.name:<10} f({m*n}) = {lhs} = f({m})h({n}) + f({n})h({m}) = {rhs}")

print()
print("f/h is completely additive (no coprimality needed):")
for m, n in [(8, 6), (9, 15)]:
    q = quotient_ratio(d, m * n)
    print(f"  (delta/id)({m}*{n}) = {q} = {quotient_ratio(d, m)} + {quotient_ratio(d, n)}")

print()
print("extension to positive rationals via the quotient rule:")
print("  delta(1/4)  =", eval_inverse(d, 4), " (equals -delta(4)/h(4)^2)")
print("  delta(3/2)  =", eval_rational(d, 3, 2))
print("  ld(3/2)     =", eval_rational(ld(), 3, 2), " (= ld(3) - ld(2) since h = 1)")

print()
print("the same value drops out of the signed factorization directly:")
sf = factorize_rational(3, 2)
print("  3/2 factors as", [(p, e) for p, e in sf])
print("  signed-exponent formula:", eval_signed(d, sf))
print("  quotient-rule formula:  ", eval_rational(d, 3, 2))

print()
print("well-definedness: scaling numerator and denominator changes nothing:")
for a, b, c in [(3, 2, 7), (10, 4, 9)]:
    assert eval_rational(d, a * c, b * c) == eval_rational(d, a, b)
    print(f"  delta({a*c}/{b*c}) = delta({a}/{b}) = {eval_rational(d, a, b)}")

print()
print("values are exact rationals throughout, e.g. delta(1/2) =", eval_rational(d, 1, 2),
      "of type", type(eval_rational(d, 1, 2)).__name__, "=", Fraction(-1, 4))
