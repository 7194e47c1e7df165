"""FRT quantum matrix algebras, the quantum determinant and R(SL_q(N)).

Generators are ``t{i}{j}`` (1-based) in row-major order, which is also the
monomial order used for normal forms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import sympy
from sympy.polys.matrices import DomainMatrix

from .freealg import GenSet, NCPoly, Tensor
from .rewrite import Presentation, Reducer, RewriteRule, reduce, reduce_numeric
from .rmatrix import RMatrix, flat, standard_sln_rmatrix
from .scalar import LaurentQ, ONE, Q, qnum


def t_gens(N: int) -> GenSet:
    if N > 9:
        raise ValueError("generator naming supports N <= 9")
    return GenSet([f"t{i}{j}" for i in range(1, N + 1) for j in range(1, N + 1)])


def _t(N, i, j):
    """Letter index of t_i^j for 0-based i, j."""
    return i * N + j


def inversions(perm) -> int:
    return sum(1 for a, b in itertools.combinations(perm, 2) if a > b)


def frt_relations(R: RMatrix) -> list:
    """Entries of (T.1)(1.T)R - R(1.T)(T.1), zeros dropped."""
    N = R.n
    gens = t_gens(N)
    Re = R.entries()
    by_col, by_row = {}, {}
    for (r, c), v in Re.items():
        by_col.setdefault(c, []).append((r, v))
        by_row.setdefault(r, []).append((c, v))
    out = []
    for a, i, b, k in itertools.product(range(N), repeat=4):
        terms = {}
        # (T.1)(1.T) R: sum over (g,d) of t_a^g t_i^d R[(g,d),(b,k)]
        for r, v in by_col.get(flat(b, k, N), []):
            g, d = divmod(r, N)
            w = (_t(N, a, g), _t(N, i, d))
            terms[w] = terms.get(w, LaurentQ()) + v
        # R (1.T)(T.1): sum over (g,d) of R[(a,i),(g,d)] t_d^k t_g^b
        for c, v in by_row.get(flat(a, i, N), []):
            g, d = divmod(c, N)
            w = (_t(N, d, k), _t(N, g, b))
            terms[w] = terms.get(w, LaurentQ()) - v
        p = NCPoly(gens, terms)
        if p:
            out.append(p)
    return out


def table_relations(N: int) -> list:
    """All eight commutation families, written as degree-2 relations."""
    gens = t_gens(N)
    c = Q - Q**-1
    qi = Q**-1

    def m(i, j, k, l, coeff=ONE):
        return NCPoly.from_word(gens, (_t(N, i, j), _t(N, k, l)), coeff)

    rels = []
    for i, j, k, l in itertools.product(range(N), repeat=4):
        if i == k and j == l:
            continue
        lhs = m(i, j, k, l)
        if i == k and j < l:
            rels.append(lhs - m(i, l, i, j, Q))
        elif i == k and j > l:
            rels.append(lhs - m(i, l, i, j, qi))
        elif i < k and j == l:
            rels.append(lhs - m(k, j, i, j, Q))
        elif i > k and j == l:
            rels.append(lhs - m(k, j, i, j, qi))
        elif i < k and j > l:
            rels.append(lhs - m(k, l, i, j))
        elif i < k and j < l:
            rels.append(lhs - (m(k, l, i, j) + m(k, j, i, l, c)))
        elif i > k and j > l:
            rels.append(lhs - (m(k, l, i, j) - m(i, l, k, j, c)))
        else:  # i > k, j < l
            inner = m(k, j, i, l) - m(i, l, k, j) - m(i, j, k, l, c)
            rels.append(lhs - (m(k, l, i, j) + inner.scale(c)))
    return rels


def sl_relation_table(N: int) -> Presentation:
    """Quadratic rewrite rules of A(R) for the SL_N R-matrix.

    Every descending pair t_i^j t_k^l (i > k, or i == k and j > l) is
    rewritten into ascending words.
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    gens = t_gens(N)
    c = Q - Q**-1
    qi = Q**-1

    def m(i, j, k, l, coeff=ONE):
        return NCPoly.from_word(gens, (_t(N, i, j), _t(N, k, l)), coeff)

    rules = []
    for i, j, k, l in itertools.product(range(N), repeat=4):
        lhs = (_t(N, i, j), _t(N, k, l))
        if i == k and j > l:
            rhs = m(k, l, i, j, qi)
        elif i > k and j == l:
            rhs = m(k, l, i, j, qi)
        elif i > k and j < l:
            rhs = m(k, l, i, j)
        elif i > k and j > l:
            rhs = m(k, l, i, j) - m(k, j, i, l, c)
        else:
            continue
        rules.append(RewriteRule(lhs, rhs))
    return Presentation(gens, rules, f"A(R_{N})")


def quantum_minor(N: int, rows, cols) -> NCPoly:
    """Sum over bijections rows -> cols of (-q)^inv * t_{r1}^{c_p1} ... (rows ascending)."""
    gens = t_gens(N)
    rows, cols = sorted(rows), sorted(cols)
    terms = {}
    for perm in itertools.permutations(range(len(cols))):
        w = tuple(_t(N, r, cols[p]) for r, p in zip(rows, perm))
        terms[w] = qnum(inversions(perm))
    return NCPoly(gens, terms)


def quantum_determinant(N: int) -> NCPoly:
    if N < 2:
        raise ValueError("N must be at least 2")
    return quantum_minor(N, range(N), range(N))


def quantum_cofactor(N: int, i: int, j: int) -> NCPoly:
    """Minor with row j and column i removed (0-based i, j)."""
    return quantum_minor(N, [r for r in range(N) if r != j], [c for c in range(N) if c != i])


def centrality_check(N: int, detq: NCPoly | None = None, pres: Presentation | None = None) -> bool:
    pres = pres or sl_relation_table(N)
    detq = quantum_determinant(N) if detq is None else detq
    gens = pres.gens
    for x in range(len(gens)):
        t = NCPoly.from_word(gens, (x,))
        if reduce(detq * t - t * detq, pres):
            return False
    return True


def det_rule(detq: NCPoly) -> RewriteRule:
    """Orient det_q = 1 at the deg-lex leading word of det_q."""
    lead = detq.leading_word()
    lc = detq.terms[lead]
    rest = detq - NCPoly.from_word(detq.gens, lead, lc)
    return RewriteRule(lead, (NCPoly.one(detq.gens) - rest).scale(lc**-1))


@dataclass
class FRTAlgebra:
    N: int
    pres: Presentation
    detq: NCPoly
    coproduct_table: dict
    counit_table: dict
    antipode_table: dict | None = None
    _reducer: Reducer | None = field(default=None, repr=False)

    @property
    def gens(self) -> GenSet:
        return self.pres.gens

    @property
    def reducer(self) -> Reducer:
        if self._reducer is None:
            self._reducer = Reducer(self.pres)
        return self._reducer

    def reduce(self, p: NCPoly) -> NCPoly:
        return reduce(p, self.pres)

    def coproduct_word(self, word) -> Tensor:
        out = Tensor.one(self.gens, 2)
        for x in word:
            out = out * self.coproduct_table[x]
        return out

    def coproduct(self, p: NCPoly) -> Tensor:
        out = Tensor(self.gens, 2)
        for w, c in p.terms.items():
            out = out + self.coproduct_word(w).scale(c)
        return out

    def counit(self, p: NCPoly) -> LaurentQ:
        total = LaurentQ()
        for w, c in p.terms.items():
            v = c
            for x in w:
                v = v * self.counit_table[x]
                if not v:
                    break
            total = total + v
        return total

    def antipode(self, p: NCPoly) -> NCPoly:
        if self.antipode_table is None:
            raise ValueError("antipode only available on the SL quotient")
        out = NCPoly.zero(self.gens)
        for w, c in p.terms.items():
            img = NCPoly.one(self.gens)
            for x in reversed(w):
                img = img * self.antipode_table[x]
            out = out + img.scale(c)
        return out

    def generator(self, i: int, j: int) -> NCPoly:
        """t_i^j with 1-based indices."""
        return NCPoly.from_word(self.gens, (_t(self.N, i - 1, j - 1),))

    def to_json(self) -> dict:
        names = self.gens.names
        out = {
            "N": self.N,
            "presentation": self.pres.to_json(),
            "detq": self.detq.to_json(),
            "coproduct": {names[x]: t.to_json() for x, t in sorted(self.coproduct_table.items())},
            "counit": {names[x]: v.to_json() for x, v in sorted(self.counit_table.items())},
        }
        if self.antipode_table is not None:
            out["antipode"] = {names[x]: p.to_json() for x, p in sorted(self.antipode_table.items())}
        return out


def _matrix_coalgebra(N, gens):
    cop, eps = {}, {}
    for i in range(N):
        for j in range(N):
            x = _t(N, i, j)
            cop[x] = Tensor(
                gens, 2, {((_t(N, i, a),), (_t(N, a, j),)): ONE for a in range(N)}
            )
            eps[x] = ONE if i == j else LaurentQ()
    return cop, eps


def frt_algebra(N: int) -> FRTAlgebra:
    """The bialgebra A(R) for the SL_N R-matrix (no determinant relation)."""
    pres = sl_relation_table(N)
    cop, eps = _matrix_coalgebra(N, pres.gens)
    return FRTAlgebra(N, pres, quantum_determinant(N), cop, eps)


def sl_quotient(N: int) -> FRTAlgebra:
    """R(SL_q(N)) = A(R) / (det_q - 1) with the cofactor antipode."""
    base = sl_relation_table(N)
    detq = quantum_determinant(N)
    pres = base.extend([det_rule(detq)], f"R(SL_q({N}))")
    cop, eps = _matrix_coalgebra(N, pres.gens)
    S = {}
    for i in range(N):
        for j in range(N):
            S[_t(N, i, j)] = quantum_cofactor(N, i, j).scale(qnum(i - j))
    return FRTAlgebra(N, pres, detq, cop, eps, S)


# -- Hopf axioms ---------------------------------------------------------------


def _coassoc_sides(alg: FRTAlgebra, x: int):
    d = alg.coproduct_table[x]
    left = Tensor(alg.gens, 3)
    right = Tensor(alg.gens, 3)
    for (u, v), c in d.terms.items():
        du = alg.coproduct_word(u)
        for (u1, u2), c1 in du.terms.items():
            left = left + Tensor(alg.gens, 3, {(u1, u2, v): c * c1})
        dv = alg.coproduct_word(v)
        for (v1, v2), c2 in dv.terms.items():
            right = right + Tensor(alg.gens, 3, {(u, v1, v2): c * c2})
    return left, right


def hopf_axiom_check(alg: FRTAlgebra) -> dict:
    """Exact verification of the bialgebra/Hopf axioms on generators and relations.

    Returns a dict of booleans plus a list of failures for diagnostics.
    """
    gens = alg.gens
    red = alg.reducer
    failures = []
    report = {}

    ok = True
    for x in range(len(gens)):
        left, right = _coassoc_sides(alg, x)
        if left != right:
            ok = False
            failures.append(("coassociativity", gens.names[x]))
    report["coassociativity"] = ok

    ok = True
    for x in range(len(gens)):
        t = NCPoly.from_word(gens, (x,))
        d = alg.coproduct_table[x]
        left = NCPoly.zero(gens)
        right = NCPoly.zero(gens)
        for (u, v), c in d.terms.items():
            left = left + NCPoly.from_word(gens, v, c * alg.counit(NCPoly.from_word(gens, u)))
            right = right + NCPoly.from_word(gens, u, c * alg.counit(NCPoly.from_word(gens, v)))
        if left != t or right != t:
            ok = False
            failures.append(("counit", gens.names[x]))
    report["counit"] = ok

    ok_d, ok_e = True, True
    for rule in alg.pres.rules:
        r = rule.relation()
        if not red.tensor(alg.coproduct(r)).is_zero():
            ok_d = False
            failures.append(("coproduct_algebra_map", gens.names_of(rule.lhs)))
        if alg.counit(r):
            ok_e = False
            failures.append(("counit_algebra_map", gens.names_of(rule.lhs)))
    report["coproduct_algebra_map"] = ok_d
    report["counit_algebra_map"] = ok_e

    if alg.antipode_table is not None:
        ok_l, ok_r = True, True
        for x in range(len(gens)):
            left, right = antipode_sides(alg, x)
            eps = NCPoly(gens, {(): alg.counit_table[x]})
            if red(left) != eps:
                ok_l = False
                failures.append(("antipode_left", gens.names[x]))
            if red(right) != eps:
                ok_r = False
                failures.append(("antipode_right", gens.names[x]))
        report["antipode_left"] = ok_l
        report["antipode_right"] = ok_r

    report["all"] = all(v for k, v in report.items())
    report["failures"] = failures
    return report


def antipode_sides(alg: FRTAlgebra, x: int):
    """mu(S (x) id) Delta(t) and mu(id (x) S) Delta(t), unreduced."""
    gens = alg.gens
    left = NCPoly.zero(gens)
    right = NCPoly.zero(gens)
    for (u, v), c in alg.coproduct_table[x].terms.items():
        U, V = NCPoly.from_word(gens, u), NCPoly.from_word(gens, v)
        left = left + (alg.antipode(U) * V).scale(c)
        right = right + (U * alg.antipode(V)).scale(c)
    return left, right


def antipode_residual_numeric(alg: FRTAlgebra, z) -> float:
    """Antipode axioms reduced with complex arithmetic at q = z; max-abs residual."""
    gens = alg.gens
    worst = 0.0
    for x in range(len(gens)):
        eps = complex(alg.counit_table[x].subs_one())
        for side in antipode_sides(alg, x):
            nf = reduce_numeric(side.eval_coeffs(z), alg.pres, z)
            nf[()] = nf.get((), 0) - eps
            worst = max([worst] + [abs(v) for v in nf.values()])
    return worst


# -- span comparison over Q(q) -------------------------------------------------

_q = sympy.Symbol("q")
_K = sympy.QQ.frac_field(_q)


def _to_field(c: LaurentQ):
    expr = sum((sympy.Rational(v.numerator, v.denominator) * _q**k for k, v in c.items()), sympy.Integer(0))
    return _K.from_sympy(expr)


def span_rank(polys, words=None) -> int:
    """Rank of the coefficient vectors of ``polys`` over the field Q(q)."""
    if not polys:
        return 0
    if words is None:
        words = sorted({w for p in polys for w in p.terms})
    col = {w: i for i, w in enumerate(words)}
    rows = []
    for p in polys:
        row = [_K.zero] * len(words)
        for w, c in p.terms.items():
            row[col[w]] = _to_field(c)
        rows.append(row)
    return DomainMatrix(rows, (len(rows), len(words)), _K).rank()


def same_span(a, b) -> bool:
    words = sorted({w for p in list(a) + list(b) for w in p.terms})
    ra, rb = span_rank(a, words), span_rank(b, words)
    return ra == rb == span_rank(list(a) + list(b), words)


# -- braiding form ---------------------------------------------------------------

PLACEMENTS = [
    (rowside, lo, up)
    for rowside in ("lower", "upper")
    for lo in ("ik", "ki")
    for up in ("ji", "ij")
]

# placement of <t_iota^i | t_kappa^j> in R, order of the product in the
# intertwining axiom, and whether <a|bc> pairs a_(1) with b ("forward") or c.
BRAIDING_CONVENTIONS = {
    "literal": {"placement": ("lower", "ik", "ji"), "intertwine": "a1b1", "split": "forward"},
    "standard": {"placement": ("lower", "ki", "ji"), "intertwine": "b1a1", "split": "reverse"},
}


def braiding_on_generators(R: RMatrix, placement, iota, i, kappa, j) -> LaurentQ:
    """<t_iota^i | t_kappa^j> read from R (0-based indices) under a placement."""
    rowside, lo, up = placement
    n = R.n
    lower = flat(iota, kappa, n) if lo == "ik" else flat(kappa, iota, n)
    upper = flat(j, i, n) if up == "ji" else flat(i, j, n)
    return R[lower, upper] if rowside == "lower" else R[upper, lower]


def intertwining_residuals(N: int, placement, intertwine: str = "a1b1", R=None, pres=None) -> list:
    """Generator pairs (a, b) where the intertwining axiom fails modulo the relations.

    ``intertwine="a1b1"``: sum <a1|b1> a2 b2 = sum a1 b1 <a2|b2>;
    ``"b1a1"``: sum <a1|b1> a2 b2 = sum b1 a1 <a2|b2>.
    """
    R = R or standard_sln_rmatrix(N)
    pres = pres or sl_relation_table(N)
    gens = pres.gens
    bad = []
    for iota, i, kappa, j in itertools.product(range(N), repeat=4):
        terms = {}
        for al, be in itertools.product(range(N), repeat=2):
            c1 = braiding_on_generators(R, placement, iota, al, kappa, be)
            if c1:
                w = (_t(N, al, i), _t(N, be, j))
                terms[w] = terms.get(w, LaurentQ()) + c1
            c2 = braiding_on_generators(R, placement, al, i, be, j)
            if c2:
                a1, b1 = _t(N, iota, al), _t(N, kappa, be)
                w = (a1, b1) if intertwine == "a1b1" else (b1, a1)
                terms[w] = terms.get(w, LaurentQ()) - c2
        if reduce(NCPoly(gens, terms), pres):
            bad.append((iota, i, kappa, j))
    return bad


def calibrate_braiding(N: int = 2, intertwine: str = "a1b1") -> list:
    """Placements for which the intertwining axiom holds on all generator pairs."""
    return [p for p in PLACEMENTS if not intertwining_residuals(N, p, intertwine)]


def braiding_form(a, b, alg: FRTAlgebra, R: RMatrix | None = None, convention: str = "standard") -> LaurentQ:
    """<a|b> on words, extended multiplicatively from the generator values.

    ``<ab|c> = sum <a|c_(1)> <b|c_(2)>`` in both conventions; ``<a|bc>`` is
    ``sum <a_(1)|b> <a_(2)|c>`` ("literal") or ``sum <a_(1)|c> <a_(2)|b>``
    ("standard"). The empty word pairs through the counit.
    """
    conv = BRAIDING_CONVENTIONS[convention]
    R = R or standard_sln_rmatrix(alg.N)
    return _braid(tuple(a), tuple(b), alg, R, conv)


def _braid(a, b, alg, R, conv):
    N = alg.N
    gens = alg.gens
    if not a:
        return alg.counit(NCPoly.from_word(gens, b))
    if len(a) == 1:
        x = a[0]
        if not b:
            return alg.counit_table[x]
        word = b if conv["split"] == "forward" else b[::-1]
        iota, i = divmod(x, N)
        vec = {iota: ONE}
        for k, y in enumerate(word):
            kappa, jj = divmod(y, N)
            targets = [i] if k == len(word) - 1 else range(N)
            nxt = {}
            for left, acc in vec.items():
                for right in targets:
                    v = braiding_on_generators(R, conv["placement"], left, right, kappa, jj)
                    if v:
                        nxt[right] = nxt.get(right, LaurentQ()) + acc * v
            vec = nxt
        return vec.get(i, LaurentQ())
    total = LaurentQ()
    for (b1, b2), c in alg.coproduct_word(b).terms.items():
        v = _braid(a[:1], b1, alg, R, conv)
        if v:
            total = total + c * v * _braid(a[1:], b2, alg, R, conv)
    return total


def braiding_relation_defects(alg: FRTAlgebra, convention: str = "standard", max_len: int = 2) -> int:
    """Count (relation, word) pairs where the extended form fails to vanish."""
    R = standard_sln_rmatrix(alg.N)
    n = len(alg.gens)
    words = [w for d in range(1, max_len + 1) for w in itertools.product(range(n), repeat=d)]
    bad = 0
    for rule in alg.pres.rules:
        rel = rule.relation()
        for w in words:
            left = sum((c * braiding_form(u, w, alg, R, convention) for u, c in rel.terms.items()), LaurentQ())
            right = sum((c * braiding_form(w, u, alg, R, convention) for u, c in rel.terms.items()), LaurentQ())
            bad += bool(left) + bool(right)
    return bad
