"""Leibniz-additive arithmetic functions over the naturals and positive rationals.

A function f is Leibniz-additive when some completely multiplicative h
satisfies f(mn) = f(m)h(n) + f(n)h(m) for all m, n >= 1.  Such a pair is
pinned down by its values on primes, and f(n) follows from the prime
factorization as h(n) * sum(a_i * f(p_i)/h(p_i)).  Values are exact
rationals; h must never vanish.

The natural-log variant (f(p) = log p) is irrational-valued and therefore
lives in the float-based series module, not here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional, Union

from .errors import UnknownNameError
from .factor import (
    SignedFactorization,
    SieveTable,
    factorize,
    is_prime,
)

Rational = Union[int, Fraction]
# Default rules for primes absent from a custom function's finite maps:
# a constant, the prime itself, or its reciprocal.
DefaultRule = Union[int, Fraction, str]  # "identity" | "reciprocal" | constant


@dataclass(frozen=True)
class LAdditiveFunction:
    """An L-additive function given by its prime values f(p) and h(p)."""

    name: str
    f_at_prime: Callable[[int], Fraction]
    h_at_prime: Callable[[int], Fraction]

    def f_value(self, p: int) -> Fraction:
        return Fraction(self.f_at_prime(p))

    def h_value(self, p: int) -> Fraction:
        v = Fraction(self.h_at_prime(p))
        if v == 0:
            raise ValueError(f"h_{self.name}({p}) = 0; h must be nonzero-valued")
        return v

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return f"LAdditiveFunction({self.name!r})"


def delta() -> LAdditiveFunction:
    """The arithmetic derivative: f(p) = 1 with h(p) = p."""
    return LAdditiveFunction("delta", lambda p: Fraction(1), lambda p: Fraction(p))


def delta_partial(p0: int) -> LAdditiveFunction:
    """Partial arithmetic derivative with respect to the prime p0."""
    if not is_prime(p0):
        raise ValueError(f"delta_partial requires a prime, got {p0}")
    return LAdditiveFunction(
        f"delta_p:{p0}",
        lambda p: Fraction(1 if p == p0 else 0),
        lambda p: Fraction(p),
    )


def ld() -> LAdditiveFunction:
    """The logarithmic derivative delta(n)/n: completely additive, h = 1."""
    return LAdditiveFunction("ld", lambda p: Fraction(1, p), lambda p: Fraction(1))


def big_omega() -> LAdditiveFunction:
    """Prime factor count with multiplicity: completely additive, h = 1."""
    return LAdditiveFunction("big_omega", lambda p: Fraction(1), lambda p: Fraction(1))


def _rule_to_callable(rule: DefaultRule, role: str) -> Callable[[int], Fraction]:
    if rule == "identity":
        return lambda p: Fraction(p)
    if rule == "reciprocal":
        return lambda p: Fraction(1, p)
    if isinstance(rule, (int, Fraction)):
        c = Fraction(rule)
        return lambda p: c
    raise ValueError(f"{role} default rule must be a rational constant, 'identity', or 'reciprocal'")


def custom(
    name: str,
    f_at_prime: Optional[Mapping[int, Rational]] = None,
    h_at_prime: Optional[Mapping[int, Rational]] = None,
    *,
    f_default: DefaultRule = 0,
    h_default: DefaultRule = 1,
) -> LAdditiveFunction:
    """User-defined function: finitely many explicit prime values plus default rules."""
    f_map = {p: Fraction(v) for p, v in (f_at_prime or {}).items()}
    h_map = {p: Fraction(v) for p, v in (h_at_prime or {}).items()}
    for m in (f_map, h_map):
        for p in m:
            if not is_prime(p):
                raise ValueError(f"map key {p} is not prime")
    for p, v in h_map.items():
        if v == 0:
            raise ValueError(f"h({p}) = 0; h must be nonzero-valued")
    if h_default == 0:
        raise ValueError("h default rule must be nonzero")
    f_rule = _rule_to_callable(f_default, "f")
    h_rule = _rule_to_callable(h_default, "h")

    def f(p: int) -> Fraction:
        return f_map[p] if p in f_map else f_rule(p)

    def h(p: int) -> Fraction:
        return h_map[p] if p in h_map else h_rule(p)

    return LAdditiveFunction(name, f, h)


def l_additive_by_token(token: str) -> LAdditiveFunction:
    """Resolve a textual name: delta, ld, big_omega, or delta_p:<prime>."""
    if token == "delta":
        return delta()
    if token == "ld":
        return ld()
    if token == "big_omega":
        return big_omega()
    if token.startswith("delta_p:"):
        tail = token.split(":", 1)[1]
        if not tail.isdigit():
            raise UnknownNameError(token)
        return delta_partial(int(tail))
    raise UnknownNameError(token)


def eval_natural(fn: LAdditiveFunction, n: int, sieve: Optional[SieveTable] = None) -> Fraction:
    """f(n) = h(n) * sum(a_i * f(p_i)/h(p_i)) over the factorization of n."""
    if n < 1:
        raise ValueError("eval_natural requires n >= 1")
    h_n = Fraction(1)
    total = Fraction(0)
    for p, a in factorize(n, sieve):
        hp = fn.h_value(p)
        h_n *= hp**a
        total += a * fn.f_value(p) / hp
    return h_n * total


def h_eval(fn: LAdditiveFunction, n: int, sieve: Optional[SieveTable] = None) -> Fraction:
    """The completely multiplicative companion: h(n) = prod h(p_i)**a_i, h(1) = 1."""
    if n < 1:
        raise ValueError("h_eval requires n >= 1")
    h_n = Fraction(1)
    for p, a in factorize(n, sieve):
        h_n *= fn.h_value(p) ** a
    return h_n


def eval_inverse(fn: LAdditiveFunction, n: int, sieve: Optional[SieveTable] = None) -> Fraction:
    """f(1/n) = -f(n) / h(n)**2."""
    return -eval_natural(fn, n, sieve) / h_eval(fn, n, sieve) ** 2


def eval_rational(
    fn: LAdditiveFunction,
    numerator: int,
    denominator: int,
    sieve: Optional[SieveTable] = None,
) -> Fraction:
    """f(n/m) = (f(n)h(m) - f(m)h(n)) / h(m)**2; agrees with eval_natural at m = 1."""
    if numerator < 1 or denominator < 1:
        raise ValueError("numerator and denominator must be >= 1")
    f_n = eval_natural(fn, numerator, sieve)
    f_m = eval_natural(fn, denominator, sieve)
    h_n = h_eval(fn, numerator, sieve)
    h_m = h_eval(fn, denominator, sieve)
    return (f_n * h_m - f_m * h_n) / h_m**2


def eval_signed(fn: LAdditiveFunction, sf: SignedFactorization) -> Fraction:
    """Evaluate directly on a signed factorization: h(x) * sum(e_i * f(p_i)/h(p_i)).

    Independent of eval_rational; the two are cross-checked in the tests.
    """
    h_x = Fraction(1)
    total = Fraction(0)
    for p, e in sf:
        hp = fn.h_value(p)
        h_x *= hp**e
        total += e * fn.f_value(p) / hp
    return h_x * total


def quotient_ratio(fn: LAdditiveFunction, n: int, sieve: Optional[SieveTable] = None) -> Fraction:
    """f(n)/h(n), which is completely additive whenever h never vanishes."""
    return eval_natural(fn, n, sieve) / h_eval(fn, n, sieve)


def tabulate_l_additive(fn: LAdditiveFunction, limit: int, sieve: SieveTable) -> list:
    """Values f(1..limit) as a padded list (index 0 unused) via the Leibniz split n = p*m.

    Bulk companion to eval_natural; the two paths agree and are tested
    against each other.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if sieve.limit < limit:
        raise ValueError("sieve does not cover the requested limit")
    spf = sieve.spf
    f = [Fraction(0)] * (limit + 1)
    h: list = [1] * (limit + 1)
    prime_pair: dict[int, tuple[Fraction, Fraction]] = {}
    for n in range(2, limit + 1):
        p = spf[n]
        if p == n:
            pair = (fn.f_value(n), fn.h_value(n))
            prime_pair[n] = pair
            f[n], h[n] = pair
            continue
        fp, hp = prime_pair[p]
        m = n // p
        f[n] = fp * h[m] + f[m] * hp
        h[n] = hp * h[m]
    f[0] = 0
    return f
