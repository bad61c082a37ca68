"""Exact arithmetic kernel.

Python's ``int`` is the arbitrary-precision integer ring and
``fractions.Fraction`` the rationals.  This module adds elements of a real
quadratic field Q(sqrt d) and sparse multivariate polynomials with integer
coefficients, plus :func:`exact_div`, which refuses to round.

Every value here is immutable and no floating point is used anywhere.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Mapping, Protocol, Union, runtime_checkable

__all__ = [
    "RingElem",
    "QuadElem",
    "MultiPoly",
    "VARIABLES",
    "NotDivisible",
    "DivideByZero",
    "MixedRadicand",
    "exact_div",
    "as_integer",
    "is_zero",
    "one_like",
    "zero_like",
    "sqrt",
    "var",
    "variables",
]


@runtime_checkable
class RingElem(Protocol):
    """Commutative ring element with decidable equality.

    Implemented by ``int``, ``Fraction``, :class:`QuadElem` and
    :class:`MultiPoly`.  Exact division goes through :func:`exact_div`.
    """

    def __add__(self, other): ...
    def __sub__(self, other): ...
    def __mul__(self, other): ...
    def __neg__(self): ...
    def __eq__(self, other) -> bool: ...


class NotDivisible(ArithmeticError):
    """Raised when an exact division leaves a remainder."""

    def __init__(self, dividend, divisor, remainder):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(f"{divisor} does not divide {dividend} (remainder {remainder})")


class DivideByZero(ZeroDivisionError):
    pass


class MixedRadicand(ValueError):
    pass


def _is_squarefree(d: int) -> bool:
    if d < 2:
        return False
    f = 2
    while f * f <= d:
        if d % (f * f) == 0:
            return False
        f += 1
    return True


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class QuadElem:
    """``u + v*sqrt(d)`` with rational ``u``, ``v`` and square-free ``d >= 2``."""

    __slots__ = ("_u", "_v", "_d")

    def __init__(self, u=0, v=0, d: int = 5):
        if not isinstance(d, int) or not _is_squarefree(d):
            raise ValueError(f"radicand must be a square-free integer >= 2, got {d!r}")
        self._u = _as_fraction(u)
        self._v = _as_fraction(v)
        self._d = d

    @property
    def u(self) -> Fraction:
        return self._u

    @property
    def v(self) -> Fraction:
        return self._v

    @property
    def d(self) -> int:
        return self._d

    def _coerce(self, other):
        if isinstance(other, QuadElem):
            if other._d != self._d:
                raise MixedRadicand(f"cannot mix sqrt({self._d}) and sqrt({other._d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem(other, 0, self._d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(self._u + o._u, self._v + o._v, self._d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem(self._u - o._u, self._v - o._v, self._d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        u = self._u * o._u + self._d * self._v * o._v
        v = self._u * o._v + self._v * o._u
        return QuadElem(u, v, self._d)

    __rmul__ = __mul__

    def __neg__(self):
        return QuadElem(-self._u, -self._v, self._d)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers")
        result = QuadElem(1, 0, self._d)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "QuadElem":
        return QuadElem(self._u, -self._v, self._d)

    def norm(self) -> Fraction:
        return self._u * self._u - self._d * self._v * self._v

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise DivideByZero("division by zero in Q(sqrt %d)" % self._d)
        n = o.norm()
        num = self * o.conjugate()
        return QuadElem(num._u / n, num._v / n, self._d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def is_rational(self) -> bool:
        return self._v == 0

    def __bool__(self):
        return bool(self._u) or bool(self._v)

    def __eq__(self, other):
        if isinstance(other, QuadElem):
            return (self._d, self._u, self._v) == (other._d, other._u, other._v)
        if isinstance(other, (int, Fraction)):
            return self._v == 0 and self._u == other
        return NotImplemented

    def __hash__(self):
        if self._v == 0:
            return hash(self._u)
        return hash((self._u, self._v, self._d))

    def __repr__(self):
        return f"QuadElem({self._u!s}, {self._v!s}, d={self._d})"

    def __str__(self):
        r = f"sqrt({self._d})"
        if self._v == 0:
            return str(self._u)
        if self._v == 1:
            rad = r
        elif self._v == -1:
            rad = "-" + r
        else:
            rad = f"{self._v}*{r}"
        if self._u == 0:
            return rad
        if rad.startswith("-"):
            return f"{self._u} - {rad[1:]}"
        return f"{self._u} + {rad}"


def sqrt(d: int) -> QuadElem:
    """The element sqrt(d) of Q(sqrt d)."""
    return QuadElem(0, 1, d)


# Fixed variable universe; the order is also the graded-lex order.
VARIABLES = ("x", "y", "a", "b", "alpha", "beta", "zeta", "xi", "theta", "lam")
_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_NVARS = len(VARIABLES)
_ZERO_EXP = (0,) * _NVARS


def _add_exps(e1, e2):
    return tuple([i + j for i, j in zip(e1, e2)])


class MultiPoly:
    """Sparse polynomial with integer coefficients over :data:`VARIABLES`.

    Terms live in a dict mapping full-length exponent tuples to non-zero
    ``int`` coefficients.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, int] | None = None):
        clean = {}
        if terms:
            for exps, c in terms.items():
                if not isinstance(c, int):
                    raise TypeError("MultiPoly coefficients must be int")
                if len(exps) != _NVARS or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent vector {exps!r}")
                if c:
                    clean[tuple(exps)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "MultiPoly":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int) -> "MultiPoly":
        return cls._raw({_ZERO_EXP: c} if c else {})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        if name not in _INDEX:
            raise KeyError(f"unknown variable {name!r}; universe is {VARIABLES}")
        e = [0] * _NVARS
        e[_INDEX[name]] = 1
        return cls._raw({tuple(e): 1})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def variables_used(self) -> tuple:
        used = set()
        for exps in self._terms:
            used.update(i for i, e in enumerate(exps) if e)
        return tuple(VARIABLES[i] for i in sorted(used))

    def is_constant(self) -> bool:
        return all(exps == _ZERO_EXP for exps in self._terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get(_ZERO_EXP, 0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return MultiPoly.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for exps, c in o._terms.items():
            s = terms.get(exps, 0) + c
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        return MultiPoly._raw(terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return MultiPoly._raw({})
            return MultiPoly._raw({e: c * other for e, c in self._terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms: dict = {}
        get = terms.get
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                e = _add_exps(e1, e2)
                terms[e] = get(e, 0) + c1 * c2
        return MultiPoly._raw({e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = MultiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def partial(self, name: str) -> "MultiPoly":
        """Formal partial derivative with respect to ``name``."""
        if name not in _INDEX:
            raise KeyError(f"unknown variable {name!r}; universe is {VARIABLES}")
        i = _INDEX[name]
        terms = {}
        for exps, c in self._terms.items():
            k = exps[i]
            if k:
                e = list(exps)
                e[i] = k - 1
                terms[tuple(e)] = c * k
        return MultiPoly._raw(terms)

    def subs(self, assignment: Mapping[str, object]):
        """Substitute ring elements for some variables.

        Unassigned variables stay symbolic.  The result is a ring element in
        whatever ring the substituted values live in.
        """
        for name in assignment:
            if name not in _INDEX:
                raise KeyError(f"unknown variable {name!r}")
        idx = [(_INDEX[n], v) for n, v in assignment.items()]
        power_cache: dict = {}

        def power(i, val, e):
            key = (i, e)
            if key not in power_cache:
                power_cache[key] = val ** e
            return power_cache[key]

        total = 0
        for exps, c in self._terms.items():
            rest = list(exps)
            term = c
            for i, val in idx:
                if exps[i]:
                    term = term * power(i, val, exps[i])
                    rest[i] = 0
            if any(rest):
                term = term * MultiPoly._raw({tuple(rest): 1})
            total = total + term
        return total

    def eval(self, assignment: Mapping[str, object]):
        """Evaluate with every used variable assigned."""
        missing = [v for v in self.variables_used() if v not in assignment]
        if missing:
            raise KeyError(f"missing assignment for {', '.join(missing)}")
        return self.subs({k: v for k, v in assignment.items() if k in _INDEX})

    def coefficient_gcd(self) -> int:
        g = 0
        for c in self._terms.values():
            g = math.gcd(g, c)
        return g

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            if not other:
                return not self._terms
            return self._terms == {_ZERO_EXP: other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self._terms.get(_ZERO_EXP, 0))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sorted_terms(self) -> list:
        """Terms in graded-lex order, highest first."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                VARIABLES[i] if e == 1 else f"{VARIABLES[i]}^{e}"
                for i, e in enumerate(exps)
                if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"MultiPoly({self})"


def var(name: str) -> MultiPoly:
    return MultiPoly.var(name)


def variables(*names: str) -> tuple:
    """``a, b = variables("a", "b")``"""
    return tuple(MultiPoly.var(n) for n in names)


Exact = Union[int, Fraction, QuadElem, MultiPoly]


def is_zero(x) -> bool:
    return not x


def zero_like(x):
    if isinstance(x, QuadElem):
        return QuadElem(0, 0, x.d)
    if isinstance(x, MultiPoly):
        return MultiPoly.constant(0)
    if isinstance(x, Fraction):
        return Fraction(0)
    return 0


def one_like(x):
    if isinstance(x, QuadElem):
        return QuadElem(1, 0, x.d)
    if isinstance(x, MultiPoly):
        return MultiPoly.constant(1)
    if isinstance(x, Fraction):
        return Fraction(1)
    return 1


def _div_poly(a: MultiPoly, b) -> MultiPoly:
    if isinstance(b, int):
        terms = {}
        for exps, c in a._terms.items():
            q, r = divmod(c, b)
            if r:
                raise NotDivisible(a, b, c % b)
            terms[exps] = q
        return MultiPoly._raw(terms)
    if isinstance(b, MultiPoly):
        if b.is_constant():
            return _div_poly(a, b.constant_value())
        if len(b._terms) != 1:
            raise TypeError("MultiPoly division is only supported by a constant or a monomial")
        (bexp, bc), = b._terms.items()
        terms = {}
        for exps, c in a._terms.items():
            e = tuple(i - j for i, j in zip(exps, bexp))
            q, r = divmod(c, bc)
            if r or any(i < 0 for i in e):
                raise NotDivisible(a, b, MultiPoly._raw({exps: c}))
            terms[e] = q
        return MultiPoly._raw(terms)
    raise TypeError(f"cannot divide MultiPoly by {type(b).__name__}")


def exact_div(a, b):
    """Return ``q`` with ``q * b == a``, or raise.

    Integers must divide evenly (:class:`NotDivisible` carries the
    remainder).  Rationals and quadratic-field elements divide as fields.
    Polynomials divide only by a constant or a single monomial.
    """
    if not b:
        raise DivideByZero(f"exact_div({a}, 0)")
    if isinstance(a, MultiPoly):
        return _div_poly(a, b)
    if isinstance(b, MultiPoly):
        if b.is_constant():
            return exact_div(a, b.constant_value())
        raise NotDivisible(a, b, a)
    if isinstance(a, QuadElem) or isinstance(b, QuadElem):
        return a / b
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise NotDivisible(a, b, r)
        return q
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return Fraction(a) / b
    raise TypeError(f"exact_div not defined for {type(a).__name__} / {type(b).__name__}")


def as_integer(x) -> int:
    """Collapse an exact value that happens to be an integer to ``int``."""
    if isinstance(x, bool):
        raise TypeError("bool is not a ring element here")
    if isinstance(x, int):
        return x
    if isinstance(x, MultiPoly):
        return x.constant_value()
    if isinstance(x, QuadElem):
        if x.v != 0:
            raise ValueError(f"{x} is not rational")
        x = x.u
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise ValueError(f"{x} is not an integer")
        return x.numerator
    raise TypeError(f"cannot read {type(x).__name__} as an integer")

