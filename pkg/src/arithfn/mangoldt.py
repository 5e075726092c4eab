"""Generalized von Mangoldt functions attached to L-additive functions.

For an L-additive f with nonvanishing h, the attached function takes the
value f(p)/h(p) on every prime power p**k (k >= 1) and 0 elsewhere.  It
inverts f through h: f = h * (h . Lambda_f) under Dirichlet convolution.

Importing this module registers the builtin names "mangoldt:<fn>" and the
related identity presets with the convolution verifier.

The classical variant with values log p is irrational-valued and lives in
the float-based series module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .convolution import (
    BuiltinImpl,
    TabulatedFunction,
    register_builtin_resolver,
    register_identity,
)
from .errors import UnknownNameError
from .factor import SieveTable, factorize, primes_up_to
from .ladditive import LAdditiveFunction, l_additive_by_token


@dataclass(frozen=True)
class MangoldtOf:
    """The generalized von Mangoldt function attached to an L-additive base."""

    base: LAdditiveFunction


def mangoldt_eval(m: MangoldtOf, n: int, sieve: Optional[SieveTable] = None) -> Fraction:
    """f(p)/h(p) when n = p**k for some k >= 1, else 0 (including n = 1).

    Prime powers are recognized by factorization: exactly one distinct prime.
    """
    if n < 1:
        raise ValueError("mangoldt_eval requires n >= 1")
    fact = factorize(n, sieve)
    if len(fact) != 1:
        return Fraction(0)
    p = fact.factors[0].prime
    return m.base.f_value(p) / m.base.h_value(p)


def mangoldt_tabulate(m: MangoldtOf, limit: int) -> TabulatedFunction:
    """Tabulation on [1, limit]; nonzero only at the prime powers."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    vals: list = [0] * (limit + 1)
    for p in primes_up_to(limit):
        v = m.base.f_value(p) / m.base.h_value(p)
        q = p
        while q <= limit:
            vals[q] = v
            q *= p
    return TabulatedFunction(limit, vals)


def _mangoldt_resolver(name: str) -> Optional[BuiltinImpl]:
    if not name.startswith("mangoldt:"):
        return None
    try:
        base = l_additive_by_token(name.split(":", 1)[1])
    except UnknownNameError:
        return None
    m = MangoldtOf(base)
    return BuiltinImpl(
        name,
        False,
        lambda limit, sieve, m=m: mangoldt_tabulate(m, limit)._vals,
        lambda n, m=m: mangoldt_eval(m, n),
    )


register_builtin_resolver(_mangoldt_resolver)


def _register_catalog() -> None:
    register_identity(
        "thm3.1",
        "f = h * (h . mangoldt:f) for f in {delta, ld}",
        [
            ("delta", "id * (id . mangoldt:delta)"),
            ("ld", "one * (one . mangoldt:ld)"),
        ],
    )
    register_identity(
        "thm3.2",
        "mangoldt:f = mu * (f/h) = -(one * (mu . f/h)) for f in {delta, ld}",
        [
            ("mangoldt:delta", "mu * (delta . id_-1)"),
            ("mangoldt:delta", "-(one * (mu . delta . id_-1))"),
            ("mangoldt:ld", "mu * ld"),
            ("mangoldt:ld", "-(one * (mu . ld))"),
        ],
    )
    register_identity(
        "eq23",
        "tau * mangoldt:f = 1/2 . (f . tau / h) for f in {delta, ld}",
        [
            ("tau * mangoldt:delta", "1/2 . (tau . delta . id_-1)"),
            ("tau * mangoldt:ld", "1/2 . (tau . ld)"),
        ],
    )
    register_identity(
        "cor3.8",
        "completely additive f recovers from its prime-power values: ld = one * mangoldt:ld",
        [("ld", "one * mangoldt:ld")],
    )
    register_identity(
        "cor3.9",
        "mangoldt:ld = mu * ld = -(one * (mu . ld))",
        [
            ("mangoldt:ld", "mu * ld"),
            ("mangoldt:ld", "-(one * (mu . ld))"),
        ],
    )
    register_identity(
        "delta-from-lambda",
        "delta = id * (id . mangoldt:ld)",
        [("delta", "id * (id . mangoldt:ld)")],
    )


_register_catalog()
