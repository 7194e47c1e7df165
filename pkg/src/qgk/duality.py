"""Numerical pairing between R(SL_q(N)) and U_q(sl(N)) through matrix coefficients.

``<t_{i1}^{j1} ... t_{ik}^{jk}, u>`` is the entry of ``Delta^(k-1)(u)`` in the
k-fold tensor power of the fundamental representation, at multi-row
``(i1..ik)`` and multi-column ``(j1..jk)`` (or the transpose, depending on the
convention). Which power of ``e^z`` plays the role of ``q`` is measured by
``calibrate`` rather than assumed.
"""

from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass, field

import numpy as np

from .freealg import NCPoly
from .frt import FRTAlgebra, sl_quotient
from .uqnum import UqRealization, antipode_image, counit, fundamental_rep, word_coproduct

SCALES = {
    "e^z": 1.0,
    "e^(z/2)": 0.5,
    "e^(-z)": -1.0,
    "e^(-z/2)": -0.5,
}
CONVENTIONS = ("direct", "transpose")
MIN_ABS_Z = 0.1
ANNIHILATION_TOL = 1e-8


class CalibrationError(RuntimeError):
    pass


@dataclass
class PairingContext:
    N: int
    z: complex
    uq: UqRealization
    frt: FRTAlgebra
    scale: str
    convention: str
    _coeff_cache: dict = field(default_factory=dict, repr=False)

    @property
    def q(self) -> complex:
        return cmath.exp(SCALES[self.scale] * self.z)

    def uq_letters(self) -> list:
        return self.uq.generators()

    def monomials(self, max_len: int):
        """U_q words in the Chevalley generators of length <= max_len."""
        letters = self.uq_letters()
        for k in range(max_len + 1):
            yield from itertools.product(letters, repeat=k)

    def coefficients(self, p: NCPoly) -> dict:
        key = id(p)
        hit = self._coeff_cache.get(key)
        if hit is None or hit[0] is not p:
            hit = (p, p.eval_coeffs(self.q))
            self._coeff_cache[key] = hit
        return hit[1]


def make_context(N: int, z, scale: str, convention: str, frt: FRTAlgebra | None = None) -> PairingContext:
    if scale not in SCALES:
        raise ValueError(f"unknown scale {scale!r}")
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    z = complex(z)
    return PairingContext(N, z, fundamental_rep(N - 1, z), frt or sl_quotient(N), scale, convention)


def pair_word(word, u, ctx: PairingContext) -> complex:
    """Pairing of a t-word (tuple of letter indices) with a U_q word (tuple of names)."""
    k = len(word)
    if k == 0:
        return complex(np.prod([counit(g) for g in u])) if u else 1.0
    N = ctx.N
    rows, cols = 0, 0
    for x in word:
        i, j = divmod(x, N)
        rows = rows * N + i
        cols = cols * N + j
    M = word_coproduct(ctx.uq, u, k)
    if ctx.convention == "transpose":
        rows, cols = cols, rows
    return complex(M[rows, cols])


def pair(a: NCPoly, u, ctx: PairingContext) -> complex:
    """Bilinear extension of ``pair_word``; coefficients evaluated at the calibrated q."""
    u = tuple(u)
    return sum(
        (c * pair_word(w, u, ctx) for w, c in ctx.coefficients(a).items()), 0j
    )


def annihilation_residual(ctx: PairingContext, max_len: int, relations=None) -> float:
    rels = relations if relations is not None else ctx.frt.pres.relations()[:-1]
    worst = 0.0
    for u in ctx.monomials(max_len):
        for r in rels:
            worst = max(worst, abs(pair(r, u, ctx)))
    return worst


def coproduct_residual(ctx: PairingContext, max_len: int = 1) -> float:
    """``<t_i^j, uv> = sum_a <t_i^a, u><t_a^j, v>`` on U_q words."""
    N = ctx.N
    alg = ctx.frt
    worst = 0.0
    words = list(ctx.monomials(max_len))
    for u in words:
        for v in words:
            for i in range(N):
                for j in range(N):
                    lhs = pair(alg.generator(i + 1, j + 1), u + v, ctx)
                    rhs = sum(
                        pair(alg.generator(i + 1, a + 1), u, ctx) * pair(alg.generator(a + 1, j + 1), v, ctx)
                        for a in range(N)
                    )
                    worst = max(worst, abs(lhs - rhs))
    return worst


def calibrate(N: int, z, max_len: int = 3, tol: float = ANNIHILATION_TOL) -> PairingContext:
    """Select the unique (scale, convention) under which the pairing is a Hopf pairing.

    A candidate must annihilate every commutation relation against all U_q
    words of length <= max_len and be compatible with the matrix coproduct.
    """
    z = complex(z)
    if abs(z) < MIN_ABS_Z:
        raise CalibrationError(f"|z| = {abs(z):.3g} < {MIN_ABS_Z}: the undeformed limit cannot fix a convention")
    frt = sl_quotient(N)
    survivors = []
    for scale in SCALES:
        for conv in CONVENTIONS:
            ctx = make_context(N, z, scale, conv, frt)
            if annihilation_residual(ctx, max_len) > tol:
                continue
            if coproduct_residual(ctx) > tol:
                continue
            survivors.append(ctx)
    if not survivors:
        raise CalibrationError("no (scale, convention) candidate annihilates the relations")
    if len(survivors) > 1:
        names = [(c.scale, c.convention) for c in survivors]
        raise CalibrationError(f"calibration ambiguous at z = {z}: {names}")
    return survivors[0]


def candidate_table(N: int, z, max_len: int = 3) -> list:
    """Residuals of every candidate, for reports."""
    frt = sl_quotient(N)
    out = []
    for scale in SCALES:
        for conv in CONVENTIONS:
            ctx = make_context(N, z, scale, conv, frt)
            out.append(
                {
                    "scale": scale,
                    "convention": conv,
                    "annihilation": annihilation_residual(ctx, max_len),
                    "coproduct": coproduct_residual(ctx),
                }
            )
    return out


def pairing_axiom_check(ctx: PairingContext, max_len: int = 3) -> dict:
    """Residuals of the Hopf pairing identities on generators and short words."""
    alg = ctx.frt
    N = ctx.N
    gens = alg.gens
    words = list(ctx.monomials(max_len))
    short = list(ctx.monomials(1))

    # <ab, u> against the explicit split over Delta(u) in rho (x) rho
    mult = 0.0
    for x, y in itertools.product(range(len(gens)), repeat=2):
        a, b = NCPoly.from_word(gens, (x,)), NCPoly.from_word(gens, (y,))
        for u in short:
            lhs = pair(a * b, u, ctx)
            M = word_coproduct(ctx.uq, u, 2)
            i1, j1 = divmod(x, N)
            i2, j2 = divmod(y, N)
            r, c = (i1 * N + i2, j1 * N + j2)
            if ctx.convention == "transpose":
                r, c = c, r
            mult = max(mult, abs(lhs - M[r, c]))

    # <det_q, u> = eps(u)
    det = 0.0
    for u in words:
        eps = float(np.prod([counit(g) for g in u])) if u else 1.0
        det = max(det, abs(pair(alg.detq, u, ctx) - eps))

    # <S(t), g> = <t, S(g)> on generators, with S(g) read in the representation
    anti = 0.0
    for i in range(N):
        for j in range(N):
            t = alg.generator(i + 1, j + 1)
            St = alg.antipode(t)
            for g in ctx.uq_letters():
                S = antipode_image(ctx.uq, g)
                rhs = S[j, i] if ctx.convention == "transpose" else S[i, j]
                anti = max(anti, float(abs(pair(St, (g,), ctx) - rhs)))

    return {
        "multiplicativity": mult,
        "coproduct_compatibility": coproduct_residual(ctx),
        "detq_counit": det,
        "antipode": anti,
        "annihilation": annihilation_residual(ctx, max_len),
    }


def nondegeneracy_probe(ctx: PairingContext, t_degree: int = 2, u_len: int = 3, tol: float = 1e-8) -> dict:
    """Rank of the pairing matrix between normal t-words and U_q monomials."""
    from .rewrite import normal_words

    pres = ctx.frt.pres
    t_words = [w for d in range(t_degree + 1) for w in normal_words(pres, d)]
    us = list(ctx.monomials(u_len))
    M = np.array([[pair_word(w, u, ctx) for u in us] for w in t_words])
    s = np.linalg.svd(M, compute_uv=False)
    rank = int(np.sum(s > tol * max(1.0, s[0])))
    return {"normal_words": len(t_words), "monomials": len(us), "rank": rank, "full_rank": rank == len(t_words)}
