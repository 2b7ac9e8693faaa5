"""Exact polynomial and truncated power series arithmetic.

Everything here is coefficient-exact: polynomial coefficients are
``fractions.Fraction`` and no floating point appears anywhere.  Two layers:

- ``MultiPoly``: sparse multivariate polynomials in the fixed variable set
  t, s, u, v, w (statistic markers), with graded-lexicographic term order.
- ``TruncatedSeries``: power series truncated at a fixed order in one formal
  variable (x for length generating functions, z for path-length ones), with
  ``MultiPoly`` coefficients.  Arithmetic results carry the minimum of the
  operand orders.

Division comes in two flavours.  ``TruncatedSeries.__truediv__`` requires the
divisor's constant term to be a nonzero rational (a unit).  ``exact_div``
divides by ``x**k * c`` for a polynomial ``c`` and certifies exactness term by
term; several closed forms in this package divide by non-unit denominators
(x-multiples and t-polynomials) whose cancellation the identities guarantee,
so a failed exact division is a hard error, never a silent truncation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import DivergenceError, InexactDivisionError, NonInvertibleError

VARIABLES = ("t", "s", "u", "v", "w")
_VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_NVARS = len(VARIABLES)
_ZERO_EXP = (0,) * _NVARS

Scalar = Union[int, Fraction]


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _grlex_key(exps: tuple[int, ...]) -> tuple:
    return (sum(exps), exps)


class MultiPoly:
    """Sparse polynomial in t, s, u, v, w with exact rational coefficients.

    Instances are immutable values; no zero coefficient is ever stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], Scalar] | None = None):
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != _NVARS or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent vector {exps!r}")
                q = _as_fraction(coeff)
                if q:
                    clean[exps] = q
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, value: Scalar) -> "MultiPoly":
        return cls({_ZERO_EXP: value})

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls.const(1)

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MultiPoly":
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown variable {name!r} (have {VARIABLES})")
        exps = [0] * _NVARS
        exps[_VAR_INDEX[name]] = power
        return cls({tuple(exps): 1})

    @staticmethod
    def coerce(value: "MultiPoly | Scalar") -> "MultiPoly":
        if isinstance(value, MultiPoly):
            return value
        return MultiPoly.const(value)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or set(self.terms) == {_ZERO_EXP}

    def const_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError(f"{self} is not a constant")
        return self.terms.get(_ZERO_EXP, Fraction(0))

    def used_vars(self) -> set[str]:
        used = set()
        for exps in self.terms:
            for name, e in zip(VARIABLES, exps):
                if e:
                    used.add(name)
        return used

    def degree(self, name: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        i = _VAR_INDEX[name]
        return max(exps[i] for exps in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(exps) for exps in self.terms)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (MultiPoly, int, Fraction)):
            return NotImplemented
        other = MultiPoly.coerce(other)
        terms = dict(self.terms)
        for exps, q in other.terms.items():
            r = terms.get(exps, Fraction(0)) + q
            if r:
                terms[exps] = r
            else:
                terms.pop(exps, None)
        out = MultiPoly.__new__(MultiPoly)
        object.__setattr__(out, "terms", terms)
        return out

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        out = MultiPoly.__new__(MultiPoly)
        object.__setattr__(out, "terms", {e: -q for e, q in self.terms.items()})
        return out

    def __sub__(self, other):
        if not isinstance(other, (MultiPoly, int, Fraction)):
            return NotImplemented
        return self + (-MultiPoly.coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return MultiPoly.coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, (MultiPoly, int, Fraction)):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            if not q:
                return MultiPoly.zero()
            out = MultiPoly.__new__(MultiPoly)
            object.__setattr__(out, "terms", {e: c * q for e, c in self.terms.items()})
            return out
        other = MultiPoly.coerce(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, q1 in self.terms.items():
            for e2, q2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                r = terms.get(exps, Fraction(0)) + q1 * q2
                if r:
                    terms[exps] = r
                else:
                    terms.pop(exps, None)
        out = MultiPoly.__new__(MultiPoly)
        object.__setattr__(out, "terms", terms)
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = MultiPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- calculus, substitution, division ----------------------------------

    def derivative(self, name: str) -> "MultiPoly":
        i = _VAR_INDEX[name]
        terms: dict[tuple[int, ...], Fraction] = {}
        for exps, q in self.terms.items():
            e = exps[i]
            if e:
                new = list(exps)
                new[i] = e - 1
                terms[tuple(new)] = q * e
        return MultiPoly(terms)

    def subs(self, mapping: Mapping[str, "MultiPoly | Scalar"]) -> "MultiPoly":
        """Substitute polynomials or rationals for variables."""
        subs = {name: MultiPoly.coerce(val) for name, val in mapping.items()}
        result = MultiPoly.zero()
        for exps, q in self.terms.items():
            factor = MultiPoly.const(q)
            for name, e in zip(VARIABLES, exps):
                if not e:
                    continue
                if name in subs:
                    factor = factor * subs[name] ** e
                else:
                    factor = factor * MultiPoly.var(name, e)
            result = result + factor
        return result

    def evaluate(self, mapping: Mapping[str, Scalar]) -> Fraction:
        """Evaluate at a rational point; every used variable must be given."""
        missing = self.used_vars() - set(mapping)
        if missing:
            raise ValueError(f"no value supplied for {sorted(missing)}")
        total = Fraction(0)
        for exps, q in self.terms.items():
            value = q
            for name, e in zip(VARIABLES, exps):
                if e:
                    value *= _as_fraction(mapping[name]) ** e
            total += value
        return total

    def leading_term(self) -> tuple[tuple[int, ...], Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=_grlex_key)
        return exps, self.terms[exps]

    def exact_div(self, divisor: "MultiPoly | Scalar") -> "MultiPoly":
        """Exact polynomial division; raises InexactDivisionError otherwise."""
        divisor = MultiPoly.coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if divisor.is_const():
            return self * (1 / divisor.const_value())
        lead_e, lead_q = divisor.leading_term()
        remainder = self
        quotient: dict[tuple[int, ...], Fraction] = {}
        while not remainder.is_zero():
            exps, q = remainder.leading_term()
            diff = tuple(a - b for a, b in zip(exps, lead_e))
            if any(d < 0 for d in diff):
                raise InexactDivisionError(f"{self} is not divisible by {divisor}")
            coeff = q / lead_q
            quotient[diff] = coeff
            remainder = remainder - MultiPoly({diff: coeff}) * divisor
        return MultiPoly(quotient)

    # -- conversion and display --------------------------------------------

    def to_univariate(self, name: str = "t") -> list[Fraction]:
        """Coefficient list (ascending) of a polynomial that uses only `name`."""
        extra = self.used_vars() - {name}
        if extra:
            raise ValueError(f"polynomial also involves {sorted(extra)}")
        i = _VAR_INDEX[name]
        coeffs = [Fraction(0)] * (self.degree(name) + 1 if self.terms else 1)
        if not self.terms:
            return [Fraction(0)]
        for exps, q in self.terms.items():
            coeffs[exps[i]] = q
        return coeffs

    def to_json(self) -> list:
        items = sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]))
        return [[list(exps), q.numerator, q.denominator] for exps, q in items]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, q in sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0])):
            factors = []
            for name, e in zip(VARIABLES, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            if not mono:
                text = str(q)
            elif q == 1:
                text = mono
            elif q == -1:
                text = f"-{mono}"
            else:
                text = f"{q}*{mono}"
            parts.append(text)
        out = parts[0]
        for part in parts[1:]:
            out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


class TruncatedSeries:
    """Power series truncated at a fixed order, with MultiPoly coefficients."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[MultiPoly | Scalar], var: str = "x"):
        polys = tuple(MultiPoly.coerce(c) for c in coeffs)
        if not polys:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", polys)
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, value: MultiPoly | Scalar, order: int, var: str = "x") -> "TruncatedSeries":
        coeffs = [MultiPoly.coerce(value)] + [MultiPoly.zero()] * order
        return cls(coeffs, var)

    @classmethod
    def zero(cls, order: int, var: str = "x") -> "TruncatedSeries":
        return cls.constant(0, order, var)

    @classmethod
    def one(cls, order: int, var: str = "x") -> "TruncatedSeries":
        return cls.constant(1, order, var)

    @classmethod
    def gen(cls, order: int, var: str = "x") -> "TruncatedSeries":
        """The series consisting of the formal variable itself."""
        if order < 1:
            raise ValueError("order must be at least 1 to represent the variable")
        coeffs = [MultiPoly.zero(), MultiPoly.one()] + [MultiPoly.zero()] * (order - 1)
        return cls(coeffs, var)

    def coefficient(self, n: int) -> MultiPoly:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1], self.var)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other.var != self.var:
                raise ValueError(f"mixed series variables {self.var!r} and {other.var!r}")
            return other
        return TruncatedSeries.constant(MultiPoly.coerce(other), self.order, self.var)

    def __add__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], self.var
        )

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs], self.var)

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction, MultiPoly)):
            p = MultiPoly.coerce(other)
            return TruncatedSeries([c * p for c in self.coeffs], self.var)
        other = self._coerce(other)
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = MultiPoly.zero()
            for i in range(k + 1):
                if self.coeffs[i].is_zero() or other.coeffs[k - i].is_zero():
                    continue
                acc = acc + self.coeffs[i] * other.coeffs[k - i]
            out.append(acc)
        return TruncatedSeries(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TruncatedSeries":
        if n < 0:
            raise ValueError("negative series power")
        out = TruncatedSeries.one(self.order, self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            if not q:
                raise ZeroDivisionError("series division by zero")
            return self * (1 / q)
        if isinstance(other, MultiPoly):
            if not other.is_const() or other.is_zero():
                raise NonInvertibleError(
                    "series can only be scaled by a nonzero rational; "
                    "use exact_div for polynomial denominators"
                )
            return self * (1 / other.const_value())
        other = self._coerce(other)
        c0 = other.coeffs[0]
        if not c0.is_const() or c0.is_zero():
            raise NonInvertibleError(
                f"divisor constant term {c0} is not a nonzero rational"
            )
        inv0 = 1 / c0.const_value()
        n = min(self.order, other.order)
        out: list[MultiPoly] = []
        for k in range(n + 1):
            acc = self.coeffs[k]
            for i in range(1, k + 1):
                if other.coeffs[i].is_zero() or out[k - i].is_zero():
                    continue
                acc = acc - other.coeffs[i] * out[k - i]
            out.append(acc * inv0)
        return TruncatedSeries(out, self.var)

    def __rtruediv__(self, other) -> "TruncatedSeries":
        return self._coerce(other) / self

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.var, self.coeffs))

    # -- the operations the generating functions need -----------------------

    def sqrt(self) -> "TruncatedSeries":
        """Square root of a series with constant term exactly 1."""
        if self.coeffs[0] != MultiPoly.one():
            raise ValueError("series square root requires constant term 1")
        half = Fraction(1, 2)
        out = [MultiPoly.one()]
        for k in range(1, self.order + 1):
            acc = self.coeffs[k]
            for i in range(1, k):
                acc = acc - out[i] * out[k - i]
            out.append(acc * half)
        return TruncatedSeries(out, self.var)

    def exact_div(self, k: int, c: MultiPoly | Scalar) -> "TruncatedSeries":
        """Divide by ``var**k * c`` with a term-by-term exactness certificate.

        The first k coefficients must vanish and every remaining coefficient
        must be polynomial-divisible by c; the offending power is reported
        otherwise.  The result has order ``self.order - k``.
        """
        c = MultiPoly.coerce(c)
        if k < 0 or k > self.order:
            raise ValueError(f"cannot shift by {self.var}^{k} at order {self.order}")
        for i in range(k):
            if not self.coeffs[i].is_zero():
                raise InexactDivisionError(
                    f"coefficient of {self.var}^{i} is {self.coeffs[i]}, "
                    f"not divisible by {self.var}^{k}"
                )
        out = []
        for i in range(k, self.order + 1):
            try:
                out.append(self.coeffs[i].exact_div(c))
            except InexactDivisionError as exc:
                raise InexactDivisionError(
                    f"coefficient of {self.var}^{i} is not divisible by {c}: {exc}"
                ) from exc
        return TruncatedSeries(out, self.var)

    def map_coeffs(self, mapping: Mapping[str, MultiPoly | Scalar]) -> "TruncatedSeries":
        """Apply a variable substitution to every coefficient."""
        return TruncatedSeries([c.subs(mapping) for c in self.coeffs], self.var)

    # -- display -----------------------------------------------------------

    def to_json(self) -> dict:
        return {"order": self.order, "var": self.var,
                "coeffs": [c.to_json() for c in self.coeffs]}

    def pretty(self) -> str:
        return "\n".join(f"{n}: {c}" for n, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, var={self.var!r})"


def series_compose(outer: TruncatedSeries,
                   subs: Mapping[str, TruncatedSeries]) -> TruncatedSeries:
    """Compose a series with series substitutions for its variables.

    ``subs`` must substitute the outer formal variable by a series with zero
    constant term (otherwise every truncation order would receive infinitely
    many contributions); coefficient variables (s, t, ...) may be substituted
    by arbitrary series.  Variables not substituted stay symbolic.
    """
    if outer.var not in subs:
        raise ValueError(f"no substitution given for series variable {outer.var!r}")
    inner = subs[outer.var]
    if not inner.coeffs[0].is_zero():
        raise DivergenceError(
            f"substitute for {outer.var!r} has nonzero constant term "
            f"{inner.coeffs[0]}; composition does not converge order by order"
        )
    var_subs = {name: s for name, s in subs.items() if name != outer.var}
    order = min([inner.order] + [s.order for s in var_subs.values()])
    target_var = inner.var

    # Cached powers of each substituted coefficient series.
    pow_cache: dict[str, list[TruncatedSeries]] = {
        name: [TruncatedSeries.one(order, target_var)] for name in var_subs
    }

    def var_power(name: str, e: int) -> TruncatedSeries:
        powers = pow_cache[name]
        while len(powers) <= e:
            powers.append(powers[-1] * var_subs[name].truncate(order))
        return powers[e]

    result = TruncatedSeries.zero(order, target_var)
    z_pow = TruncatedSeries.one(order, target_var)
    for m in range(min(outer.order, order) + 1):
        cm = outer.coeffs[m]
        if not cm.is_zero():
            evaluated = TruncatedSeries.zero(order, target_var)
            for exps, q in cm.terms.items():
                term = TruncatedSeries.constant(q, order, target_var)
                for name, e in zip(VARIABLES, exps):
                    if not e:
                        continue
                    if name in var_subs:
                        term = term * var_power(name, e)
                    else:
                        term = term * MultiPoly.var(name, e)
                evaluated = evaluated + term
            result = result + evaluated * z_pow
        if m < order:
            z_pow = z_pow * inner.truncate(order)
    return result
