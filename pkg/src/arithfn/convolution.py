"""Exact Dirichlet-convolution algebra on the window [1, N] and an identity verifier.

Arithmetic functions are tabulated as exact rationals (Python ints mixed with
fractions.Fraction, both exact), combined through small expression trees, and
compared value-for-value.  No floating point enters this module.

Expression syntax (also used by the command line):

    *   Dirichlet convolution          one * id          -> sigma
    .   pointwise product / scaling    1/2 . tau . delta
    + -                addition, subtraction, unary minus
    ()                 grouping

Builtins: one, eps, id (= id_1), id_<k> (any integer k; id_-1 is 1/n), mu,
tau, phi, sigma (= sigma_1), sigma_<k> (k >= 0), delta, ld, big_omega,
delta_p:<prime>, and mangoldt:<fn> once the mangoldt module is loaded.
Numeric literals are scalars and combine through "." only.
"""

from __future__ import annotations

import csv
import json
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, IO, Iterable, Optional, Sequence, Union

from .errors import ParseError, UnknownNameError
from .factor import SieveTable, build_sieve, divisors, factorize
from .ladditive import (
    LAdditiveFunction,
    big_omega,
    delta,
    eval_natural,
    l_additive_by_token,
    ld,
    tabulate_l_additive,
)

Rational = Union[int, Fraction]

_DELTA = delta()
_LD = ld()
_OMEGA = big_omega()


def fraction_to_str(v: Rational) -> str:
    f = Fraction(v)
    return f"{f.numerator}/{f.denominator}"


def fraction_from_str(s: str) -> Fraction:
    num, _, den = s.partition("/")
    return Fraction(int(num), int(den) if den else 1)


# ---------------------------------------------------------------------------
# Tabulated functions
# ---------------------------------------------------------------------------


class TabulatedFunction:
    """Exact values of an arithmetic function on 1..limit (1-indexed reads)."""

    __slots__ = ("limit", "_vals")

    def __init__(self, limit: int, padded_values: list):
        # padded_values[n] is the value at n; index 0 is unused filler.
        if limit < 1:
            raise ValueError("limit must be >= 1")
        if len(padded_values) != limit + 1:
            raise ValueError("padded value list must have length limit + 1")
        self.limit = limit
        self._vals = padded_values

    @classmethod
    def from_values(cls, values: Iterable[Rational]) -> "TabulatedFunction":
        vals = [0, *values]
        return cls(len(vals) - 1, vals)

    def __getitem__(self, n: int) -> Rational:
        if not 1 <= n <= self.limit:
            raise IndexError(f"index {n} outside [1, {self.limit}]")
        return self._vals[n]

    def __len__(self) -> int:
        return self.limit

    def values(self) -> list:
        """The values at 1..limit as a fresh list."""
        return self._vals[1:]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TabulatedFunction):
            return NotImplemented
        return self.limit == other.limit and self._vals[1:] == other._vals[1:]

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        head = ", ".join(str(v) for v in self._vals[1 : min(self.limit, 6) + 1])
        return f"TabulatedFunction(limit={self.limit}, values=[{head}, ...])"

    def to_csv(self, out: IO[str]) -> None:
        """CSV with columns n, value (value always as 'p/q')."""
        w = csv.writer(out)
        w.writerow(["n", "value"])
        for n in range(1, self.limit + 1):
            w.writerow([n, fraction_to_str(self._vals[n])])

    def to_json_obj(self) -> dict:
        return {
            "limit": self.limit,
            "values": [fraction_to_str(v) for v in self._vals[1:]],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str) -> "TabulatedFunction":
        obj = json.loads(text)
        vals = [fraction_from_str(s) for s in obj["values"]]
        if len(vals) != obj["limit"]:
            raise ValueError("limit does not match number of values")
        return cls.from_values(vals)


# ---------------------------------------------------------------------------
# Expression trees
# ---------------------------------------------------------------------------


class Expr:
    """Base class of expression nodes; build with the constructors below or parse_expression."""

    __slots__ = ()

    def __str__(self) -> str:
        return _render(self, 0)


@dataclass(frozen=True)
class Builtin(Expr):
    name: str


@dataclass(frozen=True)
class Conv(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Scale(Expr):
    coeff: Fraction
    child: Expr

    def __post_init__(self) -> None:
        # floats would silently poison the exact layer
        if isinstance(self.coeff, int):
            object.__setattr__(self, "coeff", Fraction(self.coeff))
        elif not isinstance(self.coeff, Fraction):
            raise TypeError("Scale coefficient must be an exact rational (int or Fraction)")


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Neg(Expr):
    child: Expr


# Precedence: atoms 3, pointwise 2, convolution 1, additive 0.  The binary
# operators are left-associative, so right operands render one level stricter.
def _render(e: Expr, parent: int) -> str:
    if isinstance(e, Builtin):
        return _display_name(e.name)
    if isinstance(e, Mul):
        s = f"{_render(e.left, 2)} . {_render(e.right, 3)}"
        level = 2
    elif isinstance(e, Scale):
        c = e.coeff
        cs = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
        s = f"{cs} . {_render(e.child, 2)}"
        level = 2
    elif isinstance(e, Conv):
        s = f"{_render(e.left, 1)} * {_render(e.right, 2)}"
        level = 1
    elif isinstance(e, Add):
        if isinstance(e.right, Neg):
            s = f"{_render(e.left, 0)} - {_render(e.right.child, 1)}"
        else:
            s = f"{_render(e.left, 0)} + {_render(e.right, 1)}"
        level = 0
    elif isinstance(e, Neg):
        s = f"-{_render(e.child, 3)}"
        level = 0
    else:  # pragma: no cover - exhaustive
        raise TypeError(f"not an expression node: {e!r}")
    return f"({s})" if level < parent else s


def _display_name(name: str) -> str:
    if name == "id_1":
        return "id"
    if name == "sigma_1":
        return "sigma"
    return name


# ---------------------------------------------------------------------------
# Expression parser
# ---------------------------------------------------------------------------

_NAME_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_")
_NAME_BODY = _NAME_START | set("0123456789")


def _lex(text: str) -> list[tuple[str, object]]:
    tokens: list[tuple[str, object]] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            num = int(text[i:j])
            den = 1
            if j < n and text[j] == "/":
                k = j + 1
                if k >= n or not text[k].isdigit():
                    raise ParseError(f"malformed rational at position {i}: {text[i:]!r}")
                m = k
                while m < n and text[m].isdigit():
                    m += 1
                den = int(text[k:m])
                j = m
            tokens.append(("num", Fraction(num, den)))
            i = j
            continue
        if c in _NAME_START:
            j = i
            while j < n and text[j] in _NAME_BODY:
                j += 1
            # "id_-1": a trailing "_-digits" belongs to the name.
            if text[j - 1] == "_" and j + 1 < n and text[j] == "-" and text[j + 1].isdigit():
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
            # colon-joined suffixes: delta_p:5, mangoldt:ld, mangoldt:delta_p:5
            while j < n and text[j] == ":":
                k = j + 1
                while k < n and (text[k] in _NAME_BODY):
                    k += 1
                if k == j + 1:
                    raise ParseError(f"dangling ':' in name at position {i}")
                j = k
            tokens.append(("name", text[i:j]))
            i = j
            continue
        if c in "*.+-()":
            tokens.append(("op", c))
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r} at position {i}")
    tokens.append(("end", None))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _lex(text)
        self.pos = 0

    def peek(self) -> tuple[str, object]:
        return self.tokens[self.pos]

    def take(self) -> tuple[str, object]:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def expect_op(self, op: str) -> None:
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, found {val!r}")

    # sum := term (('+'|'-') term)*
    def parse_sum(self) -> Union[Expr, Fraction]:
        node = self.parse_term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.parse_term()
                node = _as_expr(node)
                rhs = _as_expr(rhs)
                node = Add(node, Neg(rhs) if val == "-" else rhs)
            else:
                return node

    # term := ['-'] conv
    def parse_term(self) -> Union[Expr, Fraction]:
        kind, val = self.peek()
        if kind == "op" and val == "-":
            self.take()
            inner = self.parse_conv()
            if isinstance(inner, Fraction):
                return -inner
            return Neg(inner)
        return self.parse_conv()

    # conv := point ('*' point)*
    def parse_conv(self) -> Union[Expr, Fraction]:
        node = self.parse_point()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                rhs = self.parse_point()
                if isinstance(node, Fraction) or isinstance(rhs, Fraction):
                    raise ParseError(
                        "a bare scalar cannot be a Dirichlet-convolution operand; "
                        "use the constant function 'one' or attach the scalar with '.'"
                    )
                node = Conv(node, rhs)
            else:
                return node

    # point := atom ('.' atom)*   (scalars fold into a Scale coefficient)
    def parse_point(self) -> Union[Expr, Fraction]:
        coeff = Fraction(1)
        chain: Optional[Expr] = None
        for atom in self._point_atoms():
            if isinstance(atom, Fraction):
                coeff *= atom
            else:
                chain = atom if chain is None else Mul(chain, atom)
        if chain is None:
            return coeff
        if coeff != 1:
            return Scale(coeff, chain)
        return chain

    def _point_atoms(self):
        yield self.parse_atom()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == ".":
                self.take()
                yield self.parse_atom()
            else:
                return

    def parse_atom(self) -> Union[Expr, Fraction]:
        kind, val = self.take()
        if kind == "num":
            return val  # type: ignore[return-value]
        if kind == "name":
            node = Builtin(normalize_builtin_name(str(val)))
            resolve_builtin(node.name)  # unknown names fail here, not at tabulation
            return node
        if kind == "op" and val == "(":
            inner = self.parse_sum()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected token {val!r}")


def _as_expr(x: Union[Expr, Fraction]) -> Expr:
    if isinstance(x, Fraction):
        raise ParseError("a bare scalar is not an arithmetic function; multiply it with one via '.'")
    return x


def parse_expression(text: str) -> Expr:
    """Parse the expression grammar; unknown builtin names fail immediately."""
    p = _Parser(text)
    node = p.parse_sum()
    kind, val = p.peek()
    if kind != "end":
        raise ParseError(f"trailing input at token {val!r}")
    return _as_expr(node)


# ---------------------------------------------------------------------------
# Builtin catalog
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BuiltinImpl:
    name: str  # canonical name
    needs_sieve: bool
    tabulate: Callable[[int, Optional[SieveTable]], list]
    at: Callable[[int], Rational]


def _tab_one(limit: int, sieve) -> list:
    v = [1] * (limit + 1)
    v[0] = 0
    return v


def _tab_eps(limit: int, sieve) -> list:
    v = [0] * (limit + 1)
    v[1] = 1
    return v


def _tab_id_k(k: int) -> Callable[[int, Optional[SieveTable]], list]:
    def tab(limit: int, sieve) -> list:
        if k >= 0:
            v = [n**k for n in range(limit + 1)]
            v[0] = 0
            return v
        return [0] + [Fraction(1, n ** (-k)) for n in range(1, limit + 1)]

    return tab


def _tab_mu(limit: int, sieve: SieveTable) -> list:
    spf = sieve.spf
    v = [0] * (limit + 1)
    if limit >= 1:
        v[1] = 1
    for n in range(2, limit + 1):
        p = spf[n]
        m = n // p
        v[n] = 0 if m % p == 0 else -v[m]
    return v


def _tab_phi(limit: int, sieve: SieveTable) -> list:
    spf = sieve.spf
    v = [0] * (limit + 1)
    if limit >= 1:
        v[1] = 1
    for n in range(2, limit + 1):
        p = spf[n]
        m = n // p
        v[n] = v[m] * p if m % p == 0 else v[m] * (p - 1)
    return v


def _tab_tau(limit: int, sieve: SieveTable) -> list:
    spf = sieve.spf
    v = [0] * (limit + 1)
    cnt = [0] * (limit + 1)  # exponent of the smallest prime factor
    if limit >= 1:
        v[1] = 1
    for n in range(2, limit + 1):
        p = spf[n]
        m = n // p
        if m % p == 0:
            c = cnt[m] + 1
            cnt[n] = c
            v[n] = v[m] // c * (c + 1)
        else:
            cnt[n] = 1
            v[n] = v[m] * 2
    return v


def _tab_sigma_k(k: int) -> Callable[[int, SieveTable], list]:
    def tab(limit: int, sieve: SieveTable) -> list:
        spf = sieve.spf
        v = [0] * (limit + 1)
        pe = [0] * (limit + 1)  # smallest-prime-power part of n
        if limit >= 1:
            v[1] = 1
            pe[1] = 1
        for n in range(2, limit + 1):
            p = spf[n]
            m = n // p
            pe[n] = pe[m] * p if m % p == 0 else p
            q = pe[n]
            r = n // q
            if r == 1:
                total = 0
                d = 1
                while d <= q:
                    total += d**k
                    d *= p
                v[n] = total
            else:
                v[n] = v[q] * v[r]
        return v

    return tab


def _tab_delta(limit: int, sieve: SieveTable) -> list:
    # Leibniz split on the smallest prime factor: delta(p*m) = m + p*delta(m).
    spf = sieve.spf
    v = [0] * (limit + 1)
    for n in range(2, limit + 1):
        p = spf[n]
        m = n // p
        v[n] = m + p * v[m]
    return v


def _tab_big_omega(limit: int, sieve: SieveTable) -> list:
    spf = sieve.spf
    v = [0] * (limit + 1)
    for n in range(2, limit + 1):
        v[n] = v[n // spf[n]] + 1
    return v


def _ladd_tab(fn: LAdditiveFunction) -> Callable[[int, SieveTable], list]:
    return lambda limit, sieve: tabulate_l_additive(fn, limit, sieve)


def _ladd_at(fn: LAdditiveFunction) -> Callable[[int], Rational]:
    return lambda n: eval_natural(fn, n)


def _mu_at(n: int) -> int:
    fact = factorize(n)
    if any(a > 1 for _, a in fact):
        return 0
    return -1 if len(fact) % 2 else 1


def _tau_at(n: int) -> int:
    out = 1
    for _, a in factorize(n):
        out *= a + 1
    return out


def _phi_at(n: int) -> int:
    out = 1
    for p, a in factorize(n):
        out *= p ** (a - 1) * (p - 1)
    return out


def _sigma_k_at(n: int, k: int) -> int:
    out = 1
    for p, a in factorize(n):
        total = 0
        d = 1
        for _ in range(a + 1):
            total += d**k
            d *= p
        out *= total
    return out


def _id_k_at(n: int, k: int) -> Rational:
    return n**k if k >= 0 else Fraction(1, n ** (-k))


def normalize_builtin_name(name: str) -> str:
    if name == "id":
        return "id_1"
    if name == "sigma":
        return "sigma_1"
    return name


_SIMPLE_BUILTINS = {
    "one": BuiltinImpl("one", False, _tab_one, lambda n: 1),
    "eps": BuiltinImpl("eps", False, _tab_eps, lambda n: 1 if n == 1 else 0),
    "mu": BuiltinImpl("mu", True, _tab_mu, _mu_at),
    "tau": BuiltinImpl("tau", True, _tab_tau, _tau_at),
    "phi": BuiltinImpl("phi", True, _tab_phi, _phi_at),
    "delta": BuiltinImpl("delta", True, _tab_delta, _ladd_at(_DELTA)),
    "big_omega": BuiltinImpl("big_omega", True, _tab_big_omega, _ladd_at(_OMEGA)),
    "ld": BuiltinImpl("ld", True, _ladd_tab(_LD), _ladd_at(_LD)),
}


def _core_resolver(name: str) -> Optional[BuiltinImpl]:
    impl = _SIMPLE_BUILTINS.get(name)
    if impl is not None:
        return impl
    if name.startswith("id_"):
        tail = name[3:]
        try:
            k = int(tail)
        except ValueError:
            return None
        return BuiltinImpl(name, False, _tab_id_k(k), lambda n, k=k: _id_k_at(n, k))
    if name.startswith("sigma_"):
        tail = name[6:]
        if not tail.isdigit():
            return None
        k = int(tail)
        return BuiltinImpl(name, True, _tab_sigma_k(k), lambda n, k=k: _sigma_k_at(n, k))
    if name.startswith("delta_p:"):
        try:
            fn = l_additive_by_token(name)
        except UnknownNameError:
            return None
        return BuiltinImpl(name, True, _ladd_tab(fn), _ladd_at(fn))
    return None


_RESOLVERS: list[Callable[[str], Optional[BuiltinImpl]]] = [_core_resolver]


def register_builtin_resolver(resolver: Callable[[str], Optional[BuiltinImpl]]) -> None:
    """Extend the builtin catalog (used by the mangoldt module)."""
    _RESOLVERS.append(resolver)


def resolve_builtin(name: str) -> BuiltinImpl:
    canonical = normalize_builtin_name(name)
    for resolver in _RESOLVERS:
        impl = resolver(canonical)
        if impl is not None:
            return impl
    raise UnknownNameError(name)


# ---------------------------------------------------------------------------
# Tabulation and convolution
# ---------------------------------------------------------------------------


def _needs_sieve(expr: Expr) -> bool:
    if isinstance(expr, Builtin):
        return resolve_builtin(expr.name).needs_sieve
    if isinstance(expr, (Conv, Mul, Add)):
        return _needs_sieve(expr.left) or _needs_sieve(expr.right)
    if isinstance(expr, (Scale, Neg)):
        return _needs_sieve(expr.child)
    raise TypeError(f"not an expression node: {expr!r}")


def _convolve_padded(a: list, b: list, limit: int) -> list:
    # Harmonic double loop: O(N log N) exact operations.  Put the sparser
    # factor outside; convolution is commutative.
    na = sum(1 for v in a if v != 0)
    nb = sum(1 for v in b if v != 0)
    if nb < na:
        a, b = b, a
    out: list = [0] * (limit + 1)
    for d in range(1, limit + 1):
        ad = a[d]
        if ad == 0:
            continue
        n = d
        q = 1
        while n <= limit:
            bq = b[q]
            if bq != 0:
                out[n] += ad * bq
            n += d
            q += 1
    return out


def _pointwise(op: str, a: list, b: list) -> list:
    if op == "mul":
        return [x * y for x, y in zip(a, b)]
    return [x + y for x, y in zip(a, b)]


def _tab(expr: Expr, limit: int, sieve: Optional[SieveTable], cache: dict) -> list:
    if isinstance(expr, Builtin):
        impl = resolve_builtin(expr.name)
        key = (impl.name, limit)
        hit = cache.get(key)
        if hit is not None:
            return hit
        vals = impl.tabulate(limit, sieve)
        cache[key] = vals
        return vals
    if isinstance(expr, Conv):
        return _convolve_padded(
            _tab(expr.left, limit, sieve, cache), _tab(expr.right, limit, sieve, cache), limit
        )
    if isinstance(expr, Mul):
        return _pointwise(
            "mul", _tab(expr.left, limit, sieve, cache), _tab(expr.right, limit, sieve, cache)
        )
    if isinstance(expr, Add):
        return _pointwise(
            "add", _tab(expr.left, limit, sieve, cache), _tab(expr.right, limit, sieve, cache)
        )
    if isinstance(expr, Scale):
        c = expr.coeff
        return [c * v for v in _tab(expr.child, limit, sieve, cache)]
    if isinstance(expr, Neg):
        return [-v for v in _tab(expr.child, limit, sieve, cache)]
    raise TypeError(f"not an expression node: {expr!r}")


def tabulate(
    expr: Expr,
    limit: int,
    sieve: Optional[SieveTable] = None,
    cache: Optional[dict] = None,
) -> TabulatedFunction:
    """Pointwise values of the expression on [1, limit]."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if sieve is None and _needs_sieve(expr):
        sieve = build_sieve(max(limit, 2))
    vals = _tab(expr, limit, sieve, cache if cache is not None else {})
    if isinstance(expr, Builtin):
        vals = list(vals)  # builtin tabulations are cached; never alias the cache
    vals[0] = 0
    return TabulatedFunction(limit, vals)


def dirichlet_convolve(a: TabulatedFunction, b: TabulatedFunction) -> TabulatedFunction:
    """(a * b)(n) = sum over d | n of a(d) b(n/d), exactly, for n up to the shared limit."""
    if a.limit != b.limit:
        raise ValueError(f"limit mismatch: {a.limit} != {b.limit}")
    return TabulatedFunction(a.limit, _convolve_padded(a._vals, b._vals, a.limit))


def evaluate_at(expr: Expr, n: int) -> Fraction:
    """Single-point evaluation by divisor enumeration; independent of tabulate."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if isinstance(expr, Builtin):
        return Fraction(resolve_builtin(expr.name).at(n))
    if isinstance(expr, Conv):
        total = Fraction(0)
        for d in divisors(n):
            total += evaluate_at(expr.left, d) * evaluate_at(expr.right, n // d)
        return total
    if isinstance(expr, Mul):
        return evaluate_at(expr.left, n) * evaluate_at(expr.right, n)
    if isinstance(expr, Add):
        return evaluate_at(expr.left, n) + evaluate_at(expr.right, n)
    if isinstance(expr, Scale):
        return expr.coeff * evaluate_at(expr.child, n)
    if isinstance(expr, Neg):
        return -evaluate_at(expr.child, n)
    raise TypeError(f"not an expression node: {expr!r}")


def convolve_at(a_expr: Expr, b_expr: Expr, n: int) -> Fraction:
    """(a * b)(n) by direct divisor enumeration; cross-checks dirichlet_convolve."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = Fraction(0)
    for d in divisors(n):
        av = evaluate_at(a_expr, d)
        if av:
            total += av * evaluate_at(b_expr, n // d)
    return total


def dirichlet_inverse(a: TabulatedFunction, sieve: Optional[SieveTable] = None) -> TabulatedFunction:
    """The Dirichlet inverse on [1, limit]: (a * inverse)(n) = eps(n)."""
    if a[1] == 0:
        raise ValueError("not invertible: value at 1 is 0")
    limit = a.limit
    if sieve is None and limit >= 2:
        sieve = build_sieve(limit)
    av = a._vals
    inv1 = 1 / Fraction(av[1])
    out: list = [0] * (limit + 1)
    out[1] = inv1
    for n in range(2, limit + 1):
        acc = Fraction(0)
        for d in divisors(n, sieve):
            if d > 1:
                ad = av[d]
                if ad != 0:
                    acc += ad * out[n // d]
        out[n] = -inv1 * acc
    return TabulatedFunction(limit, out)


def first_mismatch(
    a: TabulatedFunction, b: TabulatedFunction
) -> Optional[tuple[int, Fraction, Fraction]]:
    """Smallest n where the tabulations differ, with both exact values; None if equal."""
    if a.limit != b.limit:
        raise ValueError(f"limit mismatch: {a.limit} != {b.limit}")
    av, bv = a._vals, b._vals
    for n in range(1, a.limit + 1):
        if av[n] != bv[n]:
            return n, Fraction(av[n]), Fraction(bv[n])
    return None


# ---------------------------------------------------------------------------
# Identity verifier
# ---------------------------------------------------------------------------


@dataclass
class VerificationReport:
    """Outcome of checking one identity preset exactly on [1, limit]."""

    identity: str
    limit: int
    holds: bool
    mismatch_n: Optional[int]
    lhs: Optional[Fraction]
    rhs: Optional[Fraction]
    case: Optional[str]
    elapsed_s: float

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "range": self.limit,
            "holds": self.holds,
            "mismatch_n": self.mismatch_n,
            "lhs": None if self.lhs is None else fraction_to_str(self.lhs),
            "rhs": None if self.rhs is None else fraction_to_str(self.rhs),
            "case": self.case,
            "elapsed_s": self.elapsed_s,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, obj: dict) -> "VerificationReport":
        return cls(
            identity=obj["identity"],
            limit=obj["range"],
            holds=obj["holds"],
            mismatch_n=obj["mismatch_n"],
            lhs=None if obj["lhs"] is None else fraction_from_str(obj["lhs"]),
            rhs=None if obj["rhs"] is None else fraction_from_str(obj["rhs"]),
            case=obj["case"],
            elapsed_s=obj["elapsed_s"],
        )

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))


CheckerResult = Optional[tuple[int, Fraction, Fraction, str]]


@dataclass(frozen=True)
class IdentityPreset:
    name: str
    description: str
    cases: Optional[tuple[tuple[Expr, Expr, str], ...]]
    checker: Optional[Callable[[int, Optional[SieveTable], int], CheckerResult]] = None


_IDENTITY_PRESETS: dict[str, IdentityPreset] = {}


def register_identity(
    name: str,
    description: str,
    cases: Optional[Sequence[tuple[str, str]]] = None,
    checker: Optional[Callable[[int, Optional[SieveTable], int], CheckerResult]] = None,
) -> None:
    parsed = None
    if cases is not None:
        parsed = tuple(
            (parse_expression(lhs), parse_expression(rhs), f"{lhs} = {rhs}") for lhs, rhs in cases
        )
    _IDENTITY_PRESETS[name] = IdentityPreset(name, description, parsed, checker)


def list_identity_presets() -> list[tuple[str, str]]:
    """Registered identity names with their defining formulas, in registration order."""
    return [(p.name, p.description) for p in _IDENTITY_PRESETS.values()]


def verify_identity(
    name: str,
    limit: int,
    *,
    seed: int = 0,
    sieve: Optional[SieveTable] = None,
    cache: Optional[dict] = None,
) -> VerificationReport:
    """Tabulate both sides of a preset and compare exactly on [1, limit]."""
    preset = _IDENTITY_PRESETS.get(name)
    if preset is None:
        raise UnknownNameError(name)
    if limit < 1:
        raise ValueError("limit must be >= 1")
    t0 = time.perf_counter()
    cache = cache if cache is not None else {}
    failure: CheckerResult = None
    if preset.checker is not None:
        failure = preset.checker(limit, sieve, seed)
    else:
        assert preset.cases is not None
        for lhs_e, rhs_e, label in preset.cases:
            lhs_t = tabulate(lhs_e, limit, sieve, cache)
            rhs_t = tabulate(rhs_e, limit, sieve, cache)
            hit = first_mismatch(lhs_t, rhs_t)
            if hit is not None:
                failure = (*hit, label)
                break
    elapsed = time.perf_counter() - t0
    if failure is None:
        return VerificationReport(name, limit, True, None, None, None, None, elapsed)
    n, lv, rv, label = failure
    return VerificationReport(name, limit, False, n, lv, rv, label, elapsed)


def verify_all(limit: int, *, seed: int = 0) -> list[VerificationReport]:
    """Run every registered identity preset with a shared sieve and builtin cache."""
    sieve = build_sieve(max(limit, 2))
    cache: dict = {}
    return [
        verify_identity(name, limit, seed=seed, sieve=sieve, cache=cache)
        for name in _IDENTITY_PRESETS
    ]


# ---------------------------------------------------------------------------
# Preset catalog: convolution-layer identities
# ---------------------------------------------------------------------------


def _compmult_checker(limit: int, sieve: Optional[SieveTable], seed: int) -> CheckerResult:
    # Completely multiplicative h distributes over convolution:
    # h.(u * v) = (h.u) * (h.v), exercised with h = id on random rational tables.
    rng = random.Random(seed)
    u = [0] + [Fraction(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(limit)]
    v = [0] + [Fraction(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(limit)]
    conv_uv = _convolve_padded(u, v, limit)
    lhs = [n * conv_uv[n] for n in range(limit + 1)]
    hu = [n * u[n] for n in range(limit + 1)]
    hv = [n * v[n] for n in range(limit + 1)]
    rhs = _convolve_padded(hu, hv, limit)
    for n in range(1, limit + 1):
        if lhs[n] != rhs[n]:
            return n, Fraction(lhs[n]), Fraction(rhs[n]), "id . (u * v) = (id . u) * (id . v)"
    return None


def _register_catalog() -> None:
    half_tau_delta = "1/2 . (tau . delta)"

    thm22_cases = []
    for g in ("one", "id", "mu . id", "phi . id"):
        thm22_cases.append(
            (
                f"delta * ({g})",
                f"(delta . id_-1) . (id * ({g})) - id * (delta . ({g}) . id_-1)",
            )
        )
    register_identity(
        "thm2.2",
        "f * g = (f/h).(h * g) - h * (f.g/h), with f = delta, h = id, "
        "for g in {one, id, mu.id, phi.id}",
        thm22_cases,
    )

    register_identity(
        "cor2.1",
        "f * (mu.h) = -(h * (mu.f)) for f = delta, h = id",
        [("delta * (mu . id)", "-(id * (mu . delta))")],
    )

    cor22_cases = []
    for g in ("one", "id", "id_2"):
        cor22_cases.append(
            (
                f"delta * ({g})",
                f"(delta . id_-1) . (id * ({g})) - id * (({g}) . delta . id_-1)",
            )
        )
    register_identity(
        "cor2.2",
        "delta * g = (delta/id).(id * g) - id * (g.delta/id) for g in {one, id, id_2}",
        cor22_cases,
    )

    register_identity("eq13", "id * delta = 1/2 . tau . delta", [("id * delta", half_tau_delta)])
    register_identity(
        "eq14",
        "sigma * delta = 1/2 . (one * (tau . delta))",
        [("sigma * delta", "1/2 . (one * (tau . delta))")],
    )
    register_identity(
        "eq15",
        "delta = 1/2 . ((id . mu) * (tau . delta))",
        [("delta", "1/2 . ((id . mu) * (tau . delta))")],
    )
    register_identity(
        "eq16",
        "id * (id . delta) = sigma . delta - id_2 * delta",
        [("id * (id . delta)", "sigma . delta - id_2 * delta")],
    )
    register_identity(
        "cor2.6",
        "(id . mu) * delta = -(id * (mu . delta))",
        [("(id . mu) * delta", "-(id * (mu . delta))")],
    )
    register_identity(
        "cor2.7",
        "(id . phi) * delta = id . delta - id * (phi . delta)",
        [("(id . phi) * delta", "id . delta - id * (phi . delta)")],
    )

    eq19_cases = []
    for g in ("one", "id", "tau"):
        eq19_cases.append(
            (f"ld * ({g})", f"ld . (one * ({g})) - one * (ld . ({g}))")
        )
    register_identity(
        "eq19",
        "f * g = f.(one * g) - one * (f.g) for completely additive f = ld, "
        "g in {one, id, tau}",
        eq19_cases,
    )

    eq20_cases = []
    for g in ("one", "id"):
        eq20_cases.append(
            (f"ld * ({g})", f"ld . (one * ({g})) - one * (ld . ({g}))")
        )
    register_identity(
        "eq20",
        "ld * f = ld.(one * f) - one * (ld.f) for f in {one, id}",
        eq20_cases,
    )

    eq21_cases = []
    for g in ("one", "id", "id_2"):
        eq21_cases.append(
            (f"delta * (id . ({g}))", f"delta . (one * ({g})) - id * (({g}) . delta)")
        )
    register_identity(
        "eq21",
        "delta * (id.f) = delta.(one * f) - id * (f.delta) for f in {one, id, id_2}",
        eq21_cases,
    )

    register_identity(
        "compadd-distr",
        "completely additive f distributes: f.(u * v) = (f.u) * v + u * (f.v), "
        "with f = ld, u = one, v = id",
        [("ld . (one * id)", "(ld . one) * id + one * (ld . id)")],
    )

    register_identity(
        "compmult-distr",
        "completely multiplicative h distributes: h.(u * v) = (h.u) * (h.v), "
        "with h = id on seeded random rational tables",
        checker=_compmult_checker,
    )


_register_catalog()
