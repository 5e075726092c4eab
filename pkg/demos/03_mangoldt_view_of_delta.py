#!/usr/bin/env python3
"""Generalized von Mangoldt functions: prime-power fingerprints of L-additive functions.

For L-additive f with companion h, the attached function takes the value
f(p)/h(p) on every prime power p**k and vanishes elsewhere.  Convolving it
back against h recovers f, which is what makes Dirichlet series of the
arithmetic derivative tractable.
"""

from arithfn import (
    MangoldtOf,
    delta,
    first_mismatch,
    ld,
    mangoldt_eval,
    mangoldt_tabulate,
    parse_expression,
    tabulate,
    verify_identity,
)

lam_ld = MangoldtOf(ld())

print("the function attached to ld on 1..16 (value 1/p at prime powers):")
t = mangoldt_tabulate(lam_ld, 16)
for n in range(1, 17):
    marker = "" if t[n] == 0 else "   <- prime power"
    print(f"  n = {n:2d}: {t[n]}{marker}")

print()
print("delta and ld share the same attached function, since delta(p)/p = ld(p)/1 = 1/p:")
same = first_mismatch(
    mangoldt_tabulate(MangoldtOf(delta()), 10**4),
    mangoldt_tabulate(lam_ld, 10**4),
) is None
print(f"  identical on [1, 10^4]: {same}")

print()
print("recovering f from its attached function (exact checks on [1, 10^4]):")
for name in ("thm3.1", "cor3.8"):
    r = verify_identity(name, 10**4)
    print(f"  {name:<8} holds={r.holds}  ({r.elapsed_s:.2f} s)")

print()
print("Mobius inversion gives the attached function back from f:")
r = verify_identity("thm3.2", 10**4)
print(f"  thm3.2   holds={r.holds}  ({r.elapsed_s:.2f} s)")

print()
print("the bridge used by the series layer: delta = id * (id . mangoldt:ld)")
lhs = tabulate(parse_expression("delta"), 12)
rhs = tabulate(parse_expression("id * (id . mangoldt:ld)"), 12)
print("  delta(1..12)              :", lhs.values())
print("  id * (id . mangoldt:ld)   :", rhs.values())

print()
print("pointwise values come from factorization, no tables needed:")
for n in (8, 6, 49, 121):
    print(f"  attached-to-ld({n}) = {mangoldt_eval(lam_ld, n)}")
