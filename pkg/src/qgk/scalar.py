"""Laurent polynomials in the deformation parameter q with rational coefficients."""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as an exact coefficient")


def check_point(z) -> complex:
    """Validate an evaluation point: finite, nonzero complex number."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"evaluation point must be finite, got {z!r}")
    if z == 0:
        raise ValueError("cannot evaluate a Laurent polynomial at q = 0")
    return z


class LaurentQ:
    """Element of Q[q, 1/q], stored as ``{exponent: Fraction}`` without zeros.

    Instances are immutable; arithmetic returns new objects.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, c in terms.items():
                c = _as_fraction(c)
                if c:
                    clean[int(k)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> LaurentQ:
        return cls({0: c})

    @classmethod
    def monomial(cls, k: int, c=1) -> LaurentQ:
        return cls({k: c})

    @classmethod
    def q(cls) -> LaurentQ:
        return cls({1: 1})

    @classmethod
    def coerce(cls, x) -> LaurentQ:
        if isinstance(x, LaurentQ):
            return x
        return cls.const(x)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, LaurentQ):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == LaurentQ.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self):
        return LaurentQ._raw({k: -c for k, c in self._terms.items()})

    def __add__(self, other):
        try:
            other = LaurentQ.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentQ._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = LaurentQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentQ.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentQ._raw({})
            return LaurentQ._raw({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, LaurentQ):
            return NotImplemented
        out = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentQ._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials are invertible in Q[q, 1/q]")
            ((k, c),) = self._terms.items()
            return LaurentQ({k * n: c**n})
        result = LaurentQ.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def bar(self) -> LaurentQ:
        """The involution q -> 1/q."""
        return LaurentQ._raw({-k: c for k, c in self._terms.items()})

    def eval(self, z) -> complex:
        z = check_point(z)
        total = 0j
        for k, c in self._terms.items():
            total += float(c) * z**k
        return total

    def subs_one(self) -> Fraction:
        """Exact value at the base point q = 1."""
        return sum(self._terms.values(), Fraction(0))

    def min_degree(self) -> int:
        return min(self._terms) if self._terms else 0

    def max_degree(self) -> int:
        return max(self._terms) if self._terms else 0

    def to_json(self) -> dict:
        return {str(k): str(c) for k, c in sorted(self._terms.items())}

    @classmethod
    def from_json(cls, obj) -> LaurentQ:
        if isinstance(obj, (int, str)) and not isinstance(obj, bool):
            return cls.const(Fraction(obj))
        return cls({int(k): Fraction(v) for k, v in obj.items()})

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in sorted(self._terms.items(), reverse=True):
            if k == 0:
                mono = ""
            elif k == 1:
                mono = "q"
            else:
                mono = f"q^{k}"
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            elif mono:
                s = f"{c}*{mono}"
            else:
                s = str(c)
            parts.append(s)
        return " + ".join(parts).replace("+ -", "- ")


Q = LaurentQ.q()
ONE = LaurentQ.const(1)
ZERO = LaurentQ()


def qnum(k: int) -> LaurentQ:
    """(-q)**k as a Laurent monomial."""
    return LaurentQ.monomial(k, (-1) ** (k % 2))


def laurent_arith(a: LaurentQ, b: LaurentQ, op: str) -> LaurentQ:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def parse_complex(text: str) -> complex:
    """Parse ``"a+bi"`` style input (also accepts Python's ``j``)."""
    s = text.strip().replace(" ", "").replace("i", "j")
    try:
        z = complex(s)
    except ValueError as exc:
        raise ValueError(f"cannot parse complex number {text!r}") from exc
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"complex value must be finite: {text!r}")
    return z


def complex_to_json(z: complex) -> list:
    return [z.real, z.imag]


def near_pole(z: complex, dist: float = 0.1) -> bool:
    """True if z lies within ``dist`` of 0 or of k*pi*i."""
    k = round(z.imag / math.pi)
    return abs(z - 1j * math.pi * k) < dist or abs(z) < dist
