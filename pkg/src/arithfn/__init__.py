"""Exact arithmetic-function toolkit.

Leibniz-additive functions (the arithmetic derivative and friends), exact
Dirichlet convolution over a finite window with an identity verifier, the
generalized von Mangoldt functions they factor through, and double-precision
Dirichlet series checks against closed forms in zeta and the prime sum F.

Import order matters internally: loading this package registers the mangoldt
builtins and identity presets with the convolution verifier.
"""

from .errors import OutOfDomainError, ParseError, UnknownNameError
from .factor import (
    Factorization,
    PrimePower,
    SieveTable,
    SignedFactorization,
    build_sieve,
    divisors,
    factorize,
    factorize_rational,
    is_prime,
    primes_up_to,
)
from .ladditive import (
    LAdditiveFunction,
    big_omega,
    custom,
    delta,
    delta_partial,
    eval_inverse,
    eval_natural,
    eval_rational,
    eval_signed,
    h_eval,
    l_additive_by_token,
    ld,
    quotient_ratio,
    tabulate_l_additive,
)
from .convolution import (
    Add,
    Builtin,
    Conv,
    Expr,
    Mul,
    Neg,
    Scale,
    TabulatedFunction,
    VerificationReport,
    convolve_at,
    dirichlet_convolve,
    dirichlet_inverse,
    evaluate_at,
    first_mismatch,
    fraction_from_str,
    fraction_to_str,
    list_identity_presets,
    parse_expression,
    register_identity,
    tabulate,
    verify_all,
    verify_identity,
)
from .mangoldt import MangoldtOf, mangoldt_eval, mangoldt_tabulate
from .series import (
    SeriesCheckReport,
    SeriesEstimate,
    check_series_identity,
    classical_mangoldt_tabulate,
    dirichlet_partial_sum,
    list_series_presets,
    log_eval,
    prime_F,
    zeta,
)

__version__ = "0.1.0"

__all__ = [
    "Add",
    "Builtin",
    "Conv",
    "Expr",
    "Factorization",
    "LAdditiveFunction",
    "MangoldtOf",
    "Mul",
    "Neg",
    "OutOfDomainError",
    "ParseError",
    "PrimePower",
    "Scale",
    "SeriesCheckReport",
    "SeriesEstimate",
    "SieveTable",
    "SignedFactorization",
    "TabulatedFunction",
    "UnknownNameError",
    "VerificationReport",
    "big_omega",
    "build_sieve",
    "check_series_identity",
    "classical_mangoldt_tabulate",
    "convolve_at",
    "custom",
    "delta",
    "delta_partial",
    "dirichlet_convolve",
    "dirichlet_inverse",
    "dirichlet_partial_sum",
    "divisors",
    "eval_inverse",
    "eval_natural",
    "eval_rational",
    "eval_signed",
    "evaluate_at",
    "factorize",
    "factorize_rational",
    "first_mismatch",
    "fraction_from_str",
    "fraction_to_str",
    "h_eval",
    "is_prime",
    "l_additive_by_token",
    "ld",
    "list_identity_presets",
    "list_series_presets",
    "log_eval",
    "mangoldt_eval",
    "mangoldt_tabulate",
    "parse_expression",
    "prime_F",
    "primes_up_to",
    "quotient_ratio",
    "register_identity",
    "tabulate",
    "tabulate_l_additive",
    "verify_all",
    "verify_identity",
    "zeta",
]
