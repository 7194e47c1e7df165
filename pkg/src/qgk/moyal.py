"""Exact Moyal star product on polynomial phase-space symbols.

A symbol in n degrees of freedom is a finite sum of ``c * x^A xi^B hbar^k``
with Gaussian-rational ``c``. On polynomials the bidifferential series
terminates, so the product is exact.

Conventions (fixed by the ``x * xi - xi * x = i hbar`` check):

    a * b = sum_{alpha, beta} (-1)^|beta| (-i hbar / 2)^(|alpha| + |beta|) / (alpha! beta!)
            (d_xi^alpha d_x^beta a) (d_xi^beta d_x^alpha b)

    {a, b} = sum_i (d_xi_i a d_x_i b - d_x_i a d_xi_i b)

so that the hbar^1 coefficient of ``a * b - b * a`` is ``-i {a, b}``.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction


class GaussQ:
    """Element of Q(i) with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, x) -> GaussQ:
        if isinstance(x, GaussQ):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        return cls(x)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            o = GaussQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __neg__(self):
        return GaussQ(-self.re, -self.im)

    def __add__(self, other):
        o = GaussQ.coerce(other)
        return GaussQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-GaussQ.coerce(other))

    def __mul__(self, other):
        o = GaussQ.coerce(other)
        return GaussQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = GaussQ(1)
        for _ in range(n):
            out = out * self
        return out

    def __repr__(self):
        if not self.im:
            return str(self.re)
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"

    def to_json(self) -> list:
        return [str(self.re), str(self.im)]

    @classmethod
    def from_json(cls, obj) -> GaussQ:
        return cls(Fraction(obj[0]), Fraction(obj[1]))


I = GaussQ(0, 1)
MINUS_I_HALF = GaussQ(0, Fraction(-1, 2))


def _falling(a: int, k: int) -> int:
    """a (a-1) ... (a-k+1), i.e. the coefficient of d^k x^a."""
    return math.perm(a, k) if k <= a else 0


class PolySymbol:
    """``{(A, B, k): GaussQ}`` with A, B exponent tuples for x and xi, k the hbar power."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise ValueError("n must be at least 1")
        self.n = n
        clean = {}
        for (A, B, k), c in (terms or {}).items():
            A, B = tuple(A), tuple(B)
            if len(A) != n or len(B) != n or k < 0 or min(A + B, default=0) < 0:
                raise ValueError(f"bad exponent key {(A, B, k)} for n = {n}")
            c = GaussQ.coerce(c)
            if c:
                clean[(A, B, k)] = clean.get((A, B, k), GaussQ()) + c
        self.terms = {key: c for key, c in clean.items() if c}

    @classmethod
    def const(cls, n, c=1):
        return cls(n, {((0,) * n, (0,) * n, 0): c})

    @classmethod
    def x(cls, n, i=0, power=1):
        A = [0] * n
        A[i] = power
        return cls(n, {(tuple(A), (0,) * n, 0): 1})

    @classmethod
    def xi(cls, n, i=0, power=1):
        B = [0] * n
        B[i] = power
        return cls(n, {((0,) * n, tuple(B), 0): 1})

    @classmethod
    def hbar(cls, n, power=1):
        return cls(n, {((0,) * n, (0,) * n, power): 1})

    def _check(self, other):
        if not isinstance(other, PolySymbol) or other.n != self.n:
            raise ValueError("symbols over different phase spaces")

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussQ)):
            other = PolySymbol.const(self.n, other)
        if not isinstance(other, PolySymbol):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __neg__(self):
        return PolySymbol(self.n, {k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, GaussQ()) + c
        return PolySymbol(self.n, out)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> PolySymbol:
        c = GaussQ.coerce(c)
        return PolySymbol(self.n, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        """Pointwise (commutative) product."""
        if not isinstance(other, PolySymbol):
            return self.scale(other)
        self._check(other)
        out = {}
        for (A1, B1, k1), c1 in self.terms.items():
            for (A2, B2, k2), c2 in other.terms.items():
                key = (_add(A1, A2), _add(B1, B2), k1 + k2)
                out[key] = out.get(key, GaussQ()) + c1 * c2
        return PolySymbol(self.n, out)

    __rmul__ = scale

    def derivative(self, dx=None, dxi=None) -> PolySymbol:
        """d_x^dx d_xi^dxi applied termwise (multi-indices)."""
        zero = (0,) * self.n
        dx = tuple(dx or zero)
        dxi = tuple(dxi or zero)
        out = {}
        for (A, B, k), c in self.terms.items():
            f = 1
            for a, d in zip(A + B, dx + dxi):
                f *= _falling(a, d)
                if not f:
                    break
            if f:
                key = (_sub(A, dx), _sub(B, dxi), k)
                out[key] = out.get(key, GaussQ()) + c * f
        return PolySymbol(self.n, out)

    def hbar_coefficient(self, k: int) -> PolySymbol:
        return PolySymbol(self.n, {(A, B, 0): c for (A, B, j), c in self.terms.items() if j == k})

    def at_hbar_zero(self) -> PolySymbol:
        return self.hbar_coefficient(0)

    def degree(self) -> int:
        return max((sum(A) + sum(B) for A, B, _ in self.terms), default=-1)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"x": list(A), "xi": list(B), "hbar": k, "coeff": c.to_json()}
                for (A, B, k), c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, obj) -> PolySymbol:
        n = int(obj["n"])
        return cls(
            n,
            {
                (tuple(t["x"]), tuple(t["xi"]), int(t.get("hbar", 0))): GaussQ.from_json(t["coeff"])
                for t in obj.get("terms", [])
            },
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (A, B, k), c in sorted(self.terms.items()):
            mono = [f"x{i + 1}^{a}" for i, a in enumerate(A) if a]
            mono += [f"xi{i + 1}^{b}" for i, b in enumerate(B) if b]
            if k:
                mono.append(f"hbar^{k}")
            parts.append(f"{c}*{'*'.join(mono) or '1'}")
        return " + ".join(parts)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _multi_indices(bound):
    return itertools.product(*(range(b + 1) for b in bound))


def _mono_star(n, m1, c1, m2, c2, factorials: bool) -> dict:
    (A1, B1, k1), (A2, B2, k2) = m1, m2
    out = {}
    # alpha hits xi on the left and x on the right; beta hits x on the left and xi on the right
    a_bound = tuple(min(b, a) for b, a in zip(B1, A2))
    b_bound = tuple(min(a, b) for a, b in zip(A1, B2))
    for alpha in _multi_indices(a_bound):
        for beta in _multi_indices(b_bound):
            m = sum(alpha) + sum(beta)
            f = Fraction(1)
            for i in range(n):
                f *= _falling(B1[i], alpha[i]) * _falling(A1[i], beta[i])
                f *= _falling(A2[i], alpha[i]) * _falling(B2[i], beta[i])
                if factorials:
                    f /= math.factorial(alpha[i]) * math.factorial(beta[i])
            if sum(beta) % 2:
                f = -f
            coeff = c1 * c2 * MINUS_I_HALF**m * f
            key = (
                _add(_sub(A1, beta), _sub(A2, alpha)),
                _add(_sub(B1, alpha), _sub(B2, beta)),
                k1 + k2 + m,
            )
            out[key] = out.get(key, GaussQ()) + coeff
    return out


def moyal_product(a: PolySymbol, b: PolySymbol, factorials: bool = True) -> PolySymbol:
    """Exact star product. ``factorials=False`` drops the 1/(alpha! beta!) weights."""
    a._check(b)
    out = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            for key, c in _mono_star(a.n, m1, c1, m2, c2, factorials).items():
                out[key] = out.get(key, GaussQ()) + c
    return PolySymbol(a.n, out)


def star_commutator(a: PolySymbol, b: PolySymbol) -> PolySymbol:
    return moyal_product(a, b) - moyal_product(b, a)


def poisson_bracket(a: PolySymbol, b: PolySymbol) -> PolySymbol:
    a._check(b)
    n = a.n
    out = PolySymbol(n)
    for i in range(n):
        e = [0] * n
        e[i] = 1
        out = out + a.derivative(dxi=e) * b.derivative(dx=e) - a.derivative(dx=e) * b.derivative(dxi=e)
    return out


def quantization_check(a: PolySymbol, b: PolySymbol, c: PolySymbol | None = None) -> dict:
    """Exact checks: hbar^1 part of the commutator vs -i {a, b}, and associativity."""
    c = a if c is None else c
    comm = star_commutator(a, b)
    h1 = comm.hbar_coefficient(1)
    target = poisson_bracket(a, b).scale(GaussQ(0, -1))
    lhs = moyal_product(moyal_product(a, b), c)
    rhs = moyal_product(a, moyal_product(b, c))
    return {
        "commutator_h1_matches": h1 == target,
        "associative": lhs == rhs,
        "classical_limit": moyal_product(a, b).at_hbar_zero() == (a * b).at_hbar_zero(),
        "antisymmetric": comm == -star_commutator(b, a),
    }


def random_symbol(rng: random.Random, n: int, max_deg: int, terms: int = 4, hbar: bool = False) -> PolySymbol:
    """Random symbol with small integer / Gaussian coefficients and total degree <= max_deg."""
    out = {}
    for _ in range(terms):
        deg = rng.randint(0, max_deg)
        exps = [0] * (2 * n)
        for _ in range(deg):
            exps[rng.randrange(2 * n)] += 1
        k = rng.randint(0, 1) if hbar else 0
        c = GaussQ(rng.randint(-3, 3), rng.randint(-2, 2))
        key = (tuple(exps[:n]), tuple(exps[n:]), k)
        out[key] = out.get(key, GaussQ()) + c
    return PolySymbol(n, out)
