"""Double-precision Dirichlet series: zeta, the prime sum F, and identity checks.

The exact convolution layer supplies coefficients; this module turns them
into truncated Dirichlet sums and compares those against closed forms built
from zeta(s) and F(s) = sum over primes of 1/(p**(s+1) - p), within an
explicit tolerance.

Supported regions.  zeta is evaluated by direct summation plus the integral
tail correction N**(1-s)/(s-1), which needs Re(s) >= 1.5 to stay cheap and
carries the remainder bound N**(-Re(s)).  F converges for Re(s) > 0 and is
summed over primes up to a limit with an integral tail bound.  There is no
analytic continuation anywhere.

This module also owns the float-valued completely additive adapter (values
log p on primes), which cannot live in the exact engine.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

import numpy as np

from .convolution import TabulatedFunction, parse_expression, tabulate
from .errors import OutOfDomainError, UnknownNameError
from .factor import SieveTable, factorize, primes_up_to

ComplexLike = Union[int, float, complex]

_CHUNK = 1 << 20
_MAX_ZETA_TERMS = 300_000_000


def _as_finite_complex(s: ComplexLike, label: str = "s") -> complex:
    z = complex(s)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{label} must be finite, got {z}")
    return z


@dataclass(frozen=True)
class SeriesEstimate:
    """A truncated-series value together with a bound on what was dropped.

    tail_bound = 0.0 means "truncation only": the omitted tail carries no
    in-code bound (dirichlet_partial_sum reports its cutoff this way).
    """

    value: complex
    truncation: int
    tail_bound: float

    def __post_init__(self) -> None:
        if self.tail_bound < 0:
            raise ValueError("tail_bound must be nonnegative")


def _power_sum(limit: int, s: complex) -> complex:
    """sum of n**(-s) for 1 <= n <= limit, chunked, pairwise-reduced (deterministic)."""
    real_only = s.imag == 0.0
    re = s.real
    parts_re: list[float] = []
    parts_im: list[float] = []
    for start in range(1, limit + 1, _CHUNK):
        stop = min(start + _CHUNK - 1, limit)
        ns = np.arange(start, stop + 1, dtype=np.float64)
        if real_only:
            terms = ns ** (-re)
            parts_re.append(float(np.sum(terms)))
        else:
            terms = np.exp(-s * np.log(ns))
            parts_re.append(float(np.sum(terms.real)))
            parts_im.append(float(np.sum(terms.imag)))
    return complex(math.fsum(parts_re), math.fsum(parts_im) if parts_im else 0.0)


def zeta(s: ComplexLike, target_precision: float = 1e-10) -> SeriesEstimate:
    """zeta(s) for Re(s) >= 1.5 by direct sum plus the tail integral N**(1-s)/(s-1).

    The remainder after the correction is bounded by N**(-Re(s)); N is chosen
    so that the bound meets target_precision.
    """
    z = _as_finite_complex(s)
    re = z.real
    if re < 1.5:
        raise OutOfDomainError(f"zeta supported for Re(s) >= 1.5, got Re(s) = {re}")
    if target_precision <= 0:
        raise ValueError("target_precision must be positive")
    n_terms = max(
        math.ceil(target_precision ** (-1.0 / re)),
        math.ceil(2 * abs(z) ** 2),
        50,
    )
    if n_terms > _MAX_ZETA_TERMS:
        raise ValueError(
            f"target_precision {target_precision} at Re(s) = {re} needs {n_terms} terms; "
            f"limit is {_MAX_ZETA_TERMS}"
        )
    partial = _power_sum(n_terms, z)
    n_f = float(n_terms)
    correction = n_f ** complex(1 - z) / (z - 1) if z.imag else n_f ** (1 - re) / (re - 1)
    value = partial + correction
    return SeriesEstimate(complex(value), n_terms, n_f ** (-re))


def prime_F(
    s: ComplexLike,
    prime_limit: int,
    primes: Optional[Sequence[int]] = None,
) -> SeriesEstimate:
    """F(s) = sum over primes of 1/(p**(s+1) - p), truncated at prime_limit.

    Converges for Re(s) > 0.  Each term obeys
    1/(p**(s+1) - p) <= C * p**(-Re(s)-1) with C = 1/(1 - 2**(-Re(s)))
    (C <= 2 once Re(s) >= 1), so the dropped tail is at most the integral
    C * prime_limit**(-Re(s)) / Re(s).
    """
    z = _as_finite_complex(s)
    re = z.real
    if re <= 0:
        raise OutOfDomainError(f"F(s) requires Re(s) > 0, got Re(s) = {re}")
    if prime_limit < 2:
        raise ValueError("prime_limit must be >= 2")
    ps = np.asarray(primes if primes is not None else primes_up_to(prime_limit), dtype=np.float64)
    if z.imag == 0.0:
        denom = ps ** (re + 1.0) - ps
        value = complex(float(np.sum(1.0 / denom)), 0.0)
    else:
        denom = np.exp((z + 1) * np.log(ps)) - ps
        terms = 1.0 / denom
        value = complex(float(np.sum(terms.real)), float(np.sum(terms.imag)))
    c = 1.0 / (1.0 - 2.0 ** (-re))
    tail = c * prime_limit ** (-re) / re
    return SeriesEstimate(value, prime_limit, tail)


def dirichlet_partial_sum(a: TabulatedFunction, s: ComplexLike) -> SeriesEstimate:
    """sum of a(n)/n**s for n <= a.limit; exact values go to float at the last step.

    tail_bound is reported as 0.0 ("truncation only"): coefficient growth is
    not bounded in-code, so the cutoff a.limit is the only tail information.
    """
    z = _as_finite_complex(s)
    vals = a.values()
    coeffs = np.array([float(v) for v in vals], dtype=np.float64)
    limit = a.limit
    real_only = z.imag == 0.0
    parts_re: list[float] = []
    parts_im: list[float] = []
    for start in range(1, limit + 1, _CHUNK):
        stop = min(start + _CHUNK - 1, limit)
        ns = np.arange(start, stop + 1, dtype=np.float64)
        block = coeffs[start - 1 : stop]
        if real_only:
            terms = block * ns ** (-z.real)
            parts_re.append(float(np.sum(terms)))
        else:
            terms = block * np.exp(-z * np.log(ns))
            parts_re.append(float(np.sum(terms.real)))
            parts_im.append(float(np.sum(terms.imag)))
    value = complex(math.fsum(parts_re), math.fsum(parts_im) if parts_im else 0.0)
    return SeriesEstimate(value, limit, 0.0)


# ---------------------------------------------------------------------------
# Float adapter: completely additive functions with irrational prime values
# ---------------------------------------------------------------------------


def log_eval(n: int, sieve: Optional[SieveTable] = None) -> float:
    """log n evaluated the completely additive way: sum of a*log p over p**a || n.

    Agrees with math.log(n) to within ~1e-12 relative rounding; that float
    slack is why log-valued functions stay out of the exact layer.
    """
    if n < 1:
        raise ValueError("log_eval requires n >= 1")
    return math.fsum(a * math.log(p) for p, a in factorize(n, sieve))


def classical_mangoldt_tabulate(limit: int) -> np.ndarray:
    """Float array v with v[n] = log p if n = p**k (k >= 1), else 0.0; v[0] unused."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    v = np.zeros(limit + 1, dtype=np.float64)
    for p in primes_up_to(limit):
        lp = math.log(p)
        q = p
        while q <= limit:
            v[q] = lp
            q *= p
    return v


# ---------------------------------------------------------------------------
# Series identity presets
# ---------------------------------------------------------------------------

# rhs callback signature: (s, zeta_at, F_at, k) -> complex, where zeta_at and
# F_at evaluate at shifted arguments and the preset owns the shift pattern.
RhsFn = Callable[[complex, Callable[[complex], complex], Callable[[complex], complex], Optional[int]], complex]


@dataclass(frozen=True)
class SeriesPreset:
    name: str
    description: str
    min_re: float  # requires Re(s) > min_re
    coeff: Callable[[Optional[int]], str]  # expression text for the coefficients
    rhs: RhsFn
    parametric: bool = False


def _fixed(text: str) -> Callable[[Optional[int]], str]:
    return lambda k: text


_SERIES_PRESETS: dict[str, SeriesPreset] = {}


def _register(preset: SeriesPreset) -> None:
    _SERIES_PRESETS[preset.name] = preset


_register(
    SeriesPreset(
        "lemma-Fld",
        "sum mangoldt:ld(n)/n^s = F(s); checked for Re(s) > 1",
        1.0,
        _fixed("mangoldt:ld"),
        lambda s, zeta_at, F_at, k: F_at(s),
    )
)
_register(
    SeriesPreset(
        "thm3.3",
        "sum delta(n)/n^s = zeta(s-1) F(s-1); Re(s) > 2",
        2.0,
        _fixed("delta"),
        lambda s, zeta_at, F_at, k: zeta_at(s - 1) * F_at(s - 1),
    )
)
_register(
    SeriesPreset(
        "cor-tau",
        "sum tau(n) delta(n)/n^s = 2 zeta(s-1)^2 F(s-1); Re(s) > 2",
        2.0,
        _fixed("tau . delta"),
        lambda s, zeta_at, F_at, k: 2 * zeta_at(s - 1) ** 2 * F_at(s - 1),
    )
)
_register(
    SeriesPreset(
        "cor-mu",
        "sum mu(n) delta(n)/n^s = -F(s-1) / zeta(s-1); Re(s) > 2",
        2.0,
        _fixed("mu . delta"),
        lambda s, zeta_at, F_at, k: -F_at(s - 1) / zeta_at(s - 1),
    )
)
_register(
    SeriesPreset(
        "cor-phi",
        "sum phi(n) delta(n)/n^s = zeta(s-2)/zeta(s-1) (F(s-2) - F(s-1)); Re(s) > 3",
        3.0,
        _fixed("phi . delta"),
        lambda s, zeta_at, F_at, k: zeta_at(s - 2) / zeta_at(s - 1) * (F_at(s - 2) - F_at(s - 1)),
    )
)
_register(
    SeriesPreset(
        "cor-sigma",
        "sum sigma(n) delta(n)/n^s = zeta(s-1) zeta(s-2) (F(s-2) + F(s-1)); Re(s) > 3",
        3.0,
        _fixed("sigma . delta"),
        lambda s, zeta_at, F_at, k: zeta_at(s - 1) * zeta_at(s - 2) * (F_at(s - 2) + F_at(s - 1)),
    )
)
_register(
    SeriesPreset(
        "cor-sigmak",
        "sum sigma_k(n) delta(n)/n^s = zeta(s-1) zeta(s-k-1) (F(s-1) + F(s-k-1)); "
        "Re(s) > k+2 (k defaults to 2)",
        -1.0,  # depends on k; computed at check time
        lambda k: f"sigma_{k} . delta",
        lambda s, zeta_at, F_at, k: zeta_at(s - 1)
        * zeta_at(s - k - 1)
        * (F_at(s - 1) + F_at(s - k - 1)),
        parametric=True,
    )
)


def list_series_presets() -> list[tuple[str, str]]:
    """Registered series preset names with their formulas, in registration order."""
    return [(p.name, p.description) for p in _SERIES_PRESETS.values()]


@dataclass
class SeriesCheckReport:
    """Tolerance-checked comparison of a truncated Dirichlet sum against a closed form."""

    name: str
    s: complex
    limit: int
    prime_limit: int
    lhs: complex
    rhs: complex
    abs_error: float
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        c = lambda z: {"re": z.real, "im": z.imag}  # noqa: E731
        return {
            "name": self.name,
            "s": c(self.s),
            "N": self.limit,
            "prime_limit": self.prime_limit,
            "lhs": c(self.lhs),
            "rhs": c(self.rhs),
            "abs_error": self.abs_error,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, obj: dict) -> "SeriesCheckReport":
        c = lambda d: complex(d["re"], d["im"])  # noqa: E731
        return cls(
            name=obj["name"],
            s=c(obj["s"]),
            limit=obj["N"],
            prime_limit=obj["prime_limit"],
            lhs=c(obj["lhs"]),
            rhs=c(obj["rhs"]),
            abs_error=obj["abs_error"],
            tolerance=obj["tolerance"],
            passed=obj["pass"],
        )

    @classmethod
    def from_json(cls, text: str) -> "SeriesCheckReport":
        return cls.from_dict(json.loads(text))


def check_series_identity(
    name: str,
    s: ComplexLike,
    limit: int,
    prime_limit: int,
    tolerance: float,
    *,
    k: int = 2,
    sieve: Optional[SieveTable] = None,
    cache: Optional[dict] = None,
) -> SeriesCheckReport:
    """Truncated coefficient sum (lhs) vs. closed form from zeta and F (rhs).

    Passes iff |lhs - rhs| <= tolerance.  The tolerance must absorb the lhs
    truncation error, which is the caller's choice of limit; rhs is computed
    about three digits finer than the tolerance.
    """
    preset = _SERIES_PRESETS.get(name)
    if preset is None:
        raise UnknownNameError(name)
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if prime_limit < 2:
        raise ValueError("prime_limit must be >= 2")
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    if preset.parametric and k < 0:
        raise ValueError("k must be >= 0")
    z = _as_finite_complex(s)
    min_re = float(k + 2) if preset.parametric else preset.min_re
    if z.real <= min_re:
        raise OutOfDomainError(
            f"{name} is checked for Re(s) > {min_re}, got Re(s) = {z.real}"
        )
    expr = parse_expression(preset.coeff(k if preset.parametric else None))
    coeff_tab = tabulate(expr, limit, sieve, cache)
    lhs = dirichlet_partial_sum(coeff_tab, z).value

    zeta_target = max(min(tolerance / 1000.0, 1e-9), 1e-12)
    primes = primes_up_to(prime_limit)

    def zeta_at(arg: complex) -> complex:
        return zeta(arg, zeta_target).value

    def F_at(arg: complex) -> complex:
        return prime_F(arg, prime_limit, primes).value

    rhs = preset.rhs(z, zeta_at, F_at, k if preset.parametric else None)
    abs_error = abs(lhs - rhs)
    return SeriesCheckReport(
        name=name,
        s=z,
        limit=limit,
        prime_limit=prime_limit,
        lhs=lhs,
        rhs=complex(rhs),
        abs_error=abs_error,
        tolerance=tolerance,
        passed=abs_error <= tolerance,
    )
