"""Presented algebras: rewrite rules, normal forms and confluence diagnostics.

Rules always rewrite a word into a combination of strictly smaller words in
the degree-lexicographic order, so every reduction terminates. ``reduce``
processes the pending words largest-first, which lets equal words produced by
different branches merge before they are rewritten again.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .freealg import GenSet, NCPoly, Tensor, word_key
from .scalar import Q

MAX_STEPS = 10**6


class ReductionLimitError(RuntimeError):
    """Raised when ``reduce`` exceeds its rule-application budget."""

    def __init__(self, word, steps):
        super().__init__(f"rewriting did not terminate after {steps} steps (last word {word})")
        self.word = word
        self.steps = steps


@dataclass(frozen=True)
class RewriteRule:
    lhs: tuple
    rhs: NCPoly

    def relation(self) -> NCPoly:
        return NCPoly.from_word(self.rhs.gens, self.lhs) - self.rhs


class Presentation:
    """Generators plus rewrite rules ``lhs -> rhs``; immutable once built."""

    def __init__(self, gens: GenSet, rules, name: str = "", check_order: bool = True):
        self.gens = gens
        self.name = name
        self.rules = tuple(rules)
        self._lhs = {}
        for r in self.rules:
            if r.rhs.gens != gens:
                raise ValueError("rule rhs over a different generator set")
            if not r.lhs:
                raise ValueError("empty left-hand side")
            gens.check_word(r.lhs)
            if r.lhs in self._lhs:
                raise ValueError(f"duplicate left-hand side {gens.names_of(r.lhs)}")
            if check_order:
                key = word_key(r.lhs)
                for w in r.rhs.terms:
                    if word_key(w) >= key:
                        raise ValueError(
                            f"rule {gens.names_of(r.lhs)} -> ... is not decreasing: "
                            f"{gens.names_of(w)} is not smaller"
                        )
            self._lhs[r.lhs] = r.rhs
        self._lengths = sorted({len(lhs) for lhs in self._lhs})

    def __repr__(self):
        return f"Presentation({self.name or '?'}, {len(self.gens)} gens, {len(self.rules)} rules)"

    def rule_for(self, lhs):
        return self._lhs.get(tuple(lhs))

    def relations(self):
        return [r.relation() for r in self.rules]

    def extend(self, rules, name=None) -> Presentation:
        return Presentation(self.gens, self.rules + tuple(rules), name or self.name)

    def find_redex(self, word, start: int = 0):
        """Leftmost position (and lhs) of a rule occurrence in ``word``."""
        n = len(word)
        for i in range(start, n):
            for length in self._lengths:
                if i + length > n:
                    break
                piece = word[i : i + length]
                if piece in self._lhs:
                    return i, piece
        return None

    def is_normal(self, word) -> bool:
        return self.find_redex(tuple(word)) is None

    def occurrences(self, word):
        out = []
        n = len(word)
        for i in range(n):
            for length in self._lengths:
                if i + length <= n and word[i : i + length] in self._lhs:
                    out.append((i, word[i : i + length]))
        return out

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "generators": list(self.gens.names),
            "rules": [
                {"lhs": self.gens.names_of(r.lhs), "rhs": r.rhs.to_json()} for r in self.rules
            ],
        }

    @classmethod
    def from_json(cls, obj) -> Presentation:
        gens = GenSet(obj["generators"])
        rules = [
            RewriteRule(gens.word(r["lhs"]), NCPoly.from_json(gens, r["rhs"])) for r in obj["rules"]
        ]
        return cls(gens, rules, obj.get("name", ""))


def _heap_key(word):
    return (-len(word), tuple(-x for x in word))


def reduce_terms(terms: dict, find_redex, rule_terms, max_steps: int = MAX_STEPS, names=None) -> dict:
    """Core rewriting loop on a raw ``{word: coeff}`` map.

    Coefficients only need ``+``, ``*`` and truthiness, so the same loop
    serves exact Laurent coefficients and complex numbers.
    """
    pending = dict(terms)
    heap = [_heap_key(w) for w in pending]
    heapq.heapify(heap)
    keys = {_heap_key(w): w for w in pending}
    result = {}
    steps = 0
    while heap:
        key = heapq.heappop(heap)
        w = keys.pop(key)
        c = pending.pop(w)
        if not c:
            continue
        hit = find_redex(w)
        if hit is None:
            result[w] = c
            continue
        steps += 1
        if steps > max_steps:
            raise ReductionLimitError(names(w) if names else w, steps)
        i, lhs = hit
        prefix, suffix = w[:i], w[i + len(lhs) :]
        for v, d in rule_terms(lhs).items():
            nw = prefix + v + suffix
            s = pending.get(nw)
            if s is None:
                pending[nw] = c * d
                k = _heap_key(nw)
                keys[k] = nw
                heapq.heappush(heap, k)
            else:
                pending[nw] = s + c * d
    return result


def reduce(p: NCPoly, pres: Presentation, max_steps: int = MAX_STEPS) -> NCPoly:
    """Normal form of ``p`` modulo the ideal generated by ``pres``."""
    if p.gens != pres.gens:
        raise ValueError("polynomial and presentation use different generators")
    result = reduce_terms(
        p.terms,
        pres.find_redex,
        lambda lhs: pres.rule_for(lhs).terms,
        max_steps,
        pres.gens.names_of,
    )
    return NCPoly(p.gens, result)


def reduce_numeric(terms: dict, pres: Presentation, z, max_steps: int = MAX_STEPS) -> dict:
    """Reduce a complex-coefficient polynomial with the rules evaluated at q = z."""
    rules = {r.lhs: r.rhs.eval_coeffs(z) for r in pres.rules}
    return reduce_terms(terms, pres.find_redex, rules.__getitem__, max_steps, pres.gens.names_of)


class Reducer:
    """Caches normal forms of single words for one presentation."""

    def __init__(self, pres: Presentation):
        self.pres = pres
        self._cache = {}

    def word(self, w) -> NCPoly:
        w = tuple(w)
        if w not in self._cache:
            self._cache[w] = reduce(NCPoly.from_word(self.pres.gens, w), self.pres)
        return self._cache[w]

    def __call__(self, p: NCPoly) -> NCPoly:
        return reduce(p, self.pres)

    def tensor(self, t: Tensor) -> Tensor:
        return t.map_legs(self.word)


def _apply_at(pres, word, pos, lhs) -> NCPoly:
    rhs = pres.rule_for(lhs)
    pre = NCPoly.from_word(pres.gens, word[:pos])
    post = NCPoly.from_word(pres.gens, word[pos + len(lhs) :])
    return pre * rhs * post


def ambiguities(pres: Presentation, max_deg: int):
    """Overlap and inclusion ambiguities of total degree <= max_deg.

    Yields ``(word, (pos_a, lhs_a), (pos_b, lhs_b))``.
    """
    rules = [r.lhs for r in pres.rules]
    for a in rules:
        for b in rules:
            la, lb = len(a), len(b)
            for k in range(1, min(la, lb)):
                if a[la - k :] == b[:k]:
                    word = a + b[k:]
                    if len(word) <= max_deg:
                        yield word, (0, a), (la - k, b)
            if a != b and lb < la and la <= max_deg:
                for p in range(la - lb + 1):
                    if a[p : p + lb] == b:
                        yield a, (0, a), (p, b)


def local_confluence(pres: Presentation, max_deg: int) -> list:
    """Ambiguities whose two one-step reductions have different normal forms."""
    if max_deg < 2:
        raise ValueError("max_deg must be at least 2")
    failures = []
    for word, (pa, la), (pb, lb) in ambiguities(pres, max_deg):
        ra = reduce(_apply_at(pres, word, pa, la), pres)
        rb = reduce(_apply_at(pres, word, pb, lb), pres)
        if ra != rb:
            failures.append(
                {
                    "word": pres.gens.names_of(word),
                    "first": (pa, pres.gens.names_of(la)),
                    "second": (pb, pres.gens.names_of(lb)),
                    "difference": ra - rb,
                }
            )
    return failures


def normal_words(pres: Presentation, d: int):
    """All words of length ``d`` containing no rule lhs, in deg-lex order."""
    n = len(pres.gens)
    lhs_set = set(pres._lhs)
    lengths = pres._lengths
    words = [()]
    for _ in range(d):
        nxt = []
        for w in words:
            for x in range(n):
                nw = w + (x,)
                if not any(len(nw) >= L and nw[-L:] in lhs_set for L in lengths):
                    nxt.append(nw)
        words = nxt
    return words


def graded_dimension(pres: Presentation, d: int) -> int:
    """Number of normal words of degree ``d``, counted by a suffix automaton DP."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    n = len(pres.gens)
    lhs_set = set(pres._lhs)
    lengths = pres._lengths
    keep = max(lengths, default=1) - 1
    states = {(): 1}
    for _ in range(d):
        nxt = {}
        for tail, count in states.items():
            for x in range(n):
                nw = tail + (x,)
                if any(len(nw) >= L and nw[-L:] in lhs_set for L in lengths):
                    continue
                key = nw[len(nw) - keep :] if keep else ()
                nxt[key] = nxt.get(key, 0) + count
        states = nxt
    return sum(states.values())


def quantum_plane(n: int) -> Presentation:
    """Polynomial functions on the quantum n-space: x_i x_k = q x_k x_i for i < k."""
    if n < 1:
        raise ValueError("n must be at least 1")
    gens = GenSet([f"x{i}" for i in range(1, n + 1)])
    qinv = Q**-1
    rules = [
        RewriteRule((k, i), NCPoly.from_word(gens, (i, k), qinv))
        for i in range(n)
        for k in range(i + 1, n)
    ]
    return Presentation(gens, rules, f"quantum_plane({n})")


def quantum_exterior(n: int) -> Presentation:
    """Quantum exterior algebra: xi_i^2 = 0, xi_i xi_k = -q^-1 xi_k xi_i for i < k."""
    if n < 1:
        raise ValueError("n must be at least 1")
    gens = GenSet([f"xi{i}" for i in range(1, n + 1)])
    rules = [RewriteRule((i, i), NCPoly.zero(gens)) for i in range(n)]
    rules += [
        RewriteRule((k, i), NCPoly.from_word(gens, (i, k), -Q))
        for i in range(n)
        for k in range(i + 1, n)
    ]
    return Presentation(gens, rules, f"quantum_exterior({n})")


def builtin_presentation(kind: str, n: int) -> Presentation:
    builders = {"quantum_plane": quantum_plane, "quantum_exterior": quantum_exterior}
    if kind not in builders:
        raise ValueError(f"unknown presentation {kind!r}; choose from {sorted(builders)}")
    return builders[kind](n)


def specialize(p: NCPoly, value=1) -> dict:
    """Coefficients at a rational point q = value (exact for value = 1)."""
    if value == 1:
        vals = {w: c.subs_one() for w, c in p.terms.items()}
    else:
        vals = {w: c.eval(value) for w, c in p.terms.items()}
    return {w: v for w, v in vals.items() if v}

