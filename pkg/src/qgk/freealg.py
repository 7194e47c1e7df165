"""Free associative algebra over Q[q, 1/q] and its tensor powers.

Words are tuples of generator indices. The generator order is the order in
which names are listed; words compare degree-lexicographically.
"""

from __future__ import annotations

from fractions import Fraction

from .scalar import LaurentQ, ONE


class GenSet:
    """Ordered, immutable list of generator names."""

    __slots__ = ("names", "_index")

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __eq__(self, other):
        return isinstance(other, GenSet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"GenSet({list(self.names)})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    def word(self, names) -> tuple:
        return tuple(self.index(n) for n in names)

    def names_of(self, word) -> list:
        return [self.names[i] for i in word]

    def check_word(self, word):
        n = len(self.names)
        for i in word:
            if not 0 <= i < n:
                raise ValueError(f"letter {i} out of range for {n} generators")


def word_key(word):
    """Sort key realising the degree-lexicographic order."""
    return (len(word), word)


def _coeff(c):
    if isinstance(c, LaurentQ):
        return c
    return LaurentQ.const(c)


class NCPoly:
    """Noncommutative polynomial: ``{word: LaurentQ}`` over a fixed GenSet."""

    __slots__ = ("gens", "terms")

    def __init__(self, gens: GenSet, terms=None):
        self.gens = gens
        clean = {}
        if terms:
            for w, c in terms.items():
                c = _coeff(c)
                if c:
                    clean[tuple(w)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, gens, terms):
        obj = cls.__new__(cls)
        obj.gens = gens
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, gens):
        return cls._raw(gens, {})

    @classmethod
    def one(cls, gens):
        return cls._raw(gens, {(): ONE})

    @classmethod
    def from_word(cls, gens, word, coeff=ONE):
        return cls(gens, {tuple(word): coeff})

    @classmethod
    def gen(cls, gens, name, coeff=ONE):
        return cls(gens, {(gens.index(name),): coeff})

    @classmethod
    def from_names(cls, gens, names, coeff=ONE):
        return cls(gens, {gens.word(names): coeff})

    def _check(self, other):
        if self.gens != other.gens:
            raise ValueError("polynomials live over different generator sets")

    def _lift(self, other):
        if isinstance(other, NCPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, LaurentQ)):
            return NCPoly(self.gens, {(): other})
        return None

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.gens == other.gens and self.terms == other.terms
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __neg__(self):
        return NCPoly._raw(self.gens, {w: -c for w, c in self.terms.items()})

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return NCPoly._raw(self.gens, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> NCPoly:
        c = _coeff(c)
        if not c:
            return NCPoly.zero(self.gens)
        return NCPoly._raw(self.gens, {w: v * c for w, v in self.terms.items() if v * c})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentQ)):
            return self.scale(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        self._check(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                s = out.get(w)
                out[w] = c if s is None else s + c
        return NCPoly._raw(self.gens, {w: c for w, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, LaurentQ)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        result = NCPoly.one(self.gens)
        for _ in range(n):
            result = result * self
        return result

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({len(w) for w in self.terms}) <= 1

    def leading_word(self):
        return max(self.terms, key=word_key) if self.terms else None

    def coeff(self, word) -> LaurentQ:
        if isinstance(word, str):
            word = (self.gens.index(word),)
        elif word and isinstance(word[0], str):
            word = self.gens.word(word)
        return self.terms.get(tuple(word), LaurentQ())

    def map_coeffs(self, f) -> NCPoly:
        return NCPoly(self.gens, {w: f(c) for w, c in self.terms.items()})

    def eval_coeffs(self, z) -> dict:
        return {w: c.eval(z) for w, c in self.terms.items()}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: word_key(t[0]))

    def to_json(self) -> dict:
        return {
            "terms": [
                {"word": self.gens.names_of(w), "coeff": c.to_json()}
                for w, c in self.sorted_terms()
            ]
        }

    @classmethod
    def from_json(cls, gens, obj) -> NCPoly:
        out = NCPoly.zero(gens)
        for t in obj.get("terms", []):
            out = out + NCPoly.from_names(gens, t["word"], LaurentQ.from_json(t["coeff"]))
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            mono = "*".join(self.gens.names_of(w)) or "1"
            parts.append(f"({c})*{mono}")
        return " + ".join(parts)


def nc_mul(a: NCPoly, b: NCPoly) -> NCPoly:
    return a * b


class Tensor:
    """Element of the k-fold algebraic tensor power: ``{(w1, ..., wk): LaurentQ}``."""

    __slots__ = ("gens", "arity", "terms")

    def __init__(self, gens: GenSet, arity: int, terms=None):
        self.gens = gens
        self.arity = arity
        clean = {}
        if terms:
            for key, c in terms.items():
                key = tuple(tuple(w) for w in key)
                if len(key) != arity:
                    raise ValueError(f"expected {arity} tensor legs, got {len(key)}")
                c = _coeff(c)
                if c:
                    clean[key] = c
        self.terms = clean

    @classmethod
    def _raw(cls, gens, arity, terms):
        obj = cls.__new__(cls)
        obj.gens = gens
        obj.arity = arity
        obj.terms = terms
        return obj

    @classmethod
    def one(cls, gens, arity=2):
        return cls._raw(gens, arity, {((),) * arity: ONE})

    @classmethod
    def simple(cls, *polys):
        """Tensor product p1 (x) p2 (x) ... of NCPolys."""
        gens = polys[0].gens
        out = {(): ONE}
        for p in polys:
            if p.gens != gens:
                raise ValueError("tensor legs over different generator sets")
            nxt = {}
            for key, c in out.items():
                for w, d in p.terms.items():
                    nxt[key + (w,)] = c * d
            out = nxt
        return cls(gens, len(polys), out)

    def _check(self, other):
        if not isinstance(other, Tensor) or self.gens != other.gens or self.arity != other.arity:
            raise ValueError("incompatible tensors")

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.gens == other.gens and self.arity == other.arity and self.terms == other.terms

    __hash__ = None

    def __neg__(self):
        return Tensor._raw(self.gens, self.arity, {k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Tensor._raw(self.gens, self.arity, out)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = _coeff(c)
        return Tensor(self.gens, self.arity, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentQ)):
            return self.scale(other)
        self._check(other)
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                c = c1 * c2
                s = out.get(key)
                out[key] = c if s is None else s + c
        return Tensor._raw(self.gens, self.arity, {k: c for k, c in out.items() if c})

    __rmul__ = scale

    def map_legs(self, f) -> Tensor:
        """Apply ``f: word -> NCPoly`` on every leg and expand multilinearly."""
        out = Tensor._raw(self.gens, self.arity, {})
        cache = {}
        for key, c in self.terms.items():
            images = []
            for w in key:
                if w not in cache:
                    cache[w] = f(w)
                images.append(cache[w])
            out = out + Tensor.simple(*images).scale(c)
        return out

    def contract(self) -> NCPoly:
        """Multiplication map: w1 (x) ... (x) wk -> w1...wk."""
        out = {}
        for key, c in self.terms.items():
            w = tuple(x for leg in key for x in leg)
            s = out.get(w)
            out[w] = c if s is None else s + c
        return NCPoly(self.gens, out)

    def to_json(self) -> dict:
        return {
            "terms": [
                {"legs": [self.gens.names_of(w) for w in key], "coeff": c.to_json()}
                for key, c in sorted(self.terms.items(), key=lambda t: [word_key(w) for w in t[0]])
            ]
        }

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.terms.items():
            legs = " (x) ".join("*".join(self.gens.names_of(w)) or "1" for w in key)
            parts.append(f"({c})*[{legs}]")
        return " + ".join(parts)


def Tensor2(gens, terms=None) -> Tensor:
    return Tensor(gens, 2, terms)


def tensor2_mul(a: Tensor, b: Tensor) -> Tensor:
    if a.arity != 2 or b.arity != 2:
        raise ValueError("tensor2_mul expects elements of the tensor square")
    return a * b
