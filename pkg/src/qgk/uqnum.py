"""U_q(sl(N+1)) at a concrete parameter value, realised on the fundamental representation.

Elements are handled by name ("1", "H1", "X+1", "X-1", "K1", "Kinv1") so the
coproduct, counit and antipode can be applied before passing to matrices.
``K_i = exp(scale * z * H_i)``; ``scale = 1/2`` is the value for which the
coproduct respects the ``sinh(z H / 2) / sinh(z / 2)`` commutator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce as _fold

import numpy as np

COPRODUCT_SCALE = 0.5
POLE_TOL = 1e-9


def check_uq_point(z) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"z must be finite, got {z!r}")
    k = round(z.imag / math.pi)
    if k != 0 and abs(z - 1j * math.pi * k) < POLE_TOL:
        raise ValueError(f"z = {z} is a pole k*pi*i (k = {k}) of sinh(z/2)")
    return z


def cartan_matrix(N: int) -> np.ndarray:
    a = 2 * np.eye(N, dtype=int)
    for i in range(N - 1):
        a[i, i + 1] = a[i + 1, i] = -1
    return a


def _unit(d, i, j):
    m = np.zeros((d, d), dtype=complex)
    m[i, j] = 1.0
    return m


@dataclass
class UqRealization:
    N: int
    z: complex
    H: list
    Xp: list
    Xm: list
    cartan: np.ndarray
    scale: float = COPRODUCT_SCALE
    limit: bool = False
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return self.N + 1

    def serre_coefficient(self) -> complex:
        if self.limit:
            return 2.0
        return np.exp(self.z / 2) + np.exp(-self.z / 2)

    def k_exponent(self) -> complex:
        return 0.0 if self.limit else self.scale * self.z

    def element(self, name: str) -> np.ndarray:
        """Image of a named element in the fundamental representation."""
        if name == "1":
            return np.eye(self.dim, dtype=complex)
        kind, i = _split(name)
        if kind == "H":
            return self.H[i]
        if kind == "X+":
            return self.Xp[i]
        if kind == "X-":
            return self.Xm[i]
        if kind == "K":
            return diag_exp(self.H[i], self.k_exponent())
        if kind == "Kinv":
            return diag_exp(self.H[i], -self.k_exponent())
        raise KeyError(name)

    def generators(self):
        return [f"{k}{i}" for i in range(1, self.N + 1) for k in ("H", "X+", "X-")]


def _split(name):
    for kind in ("Kinv", "X+", "X-", "H", "K"):
        if name.startswith(kind) and name[len(kind) :].isdigit():
            return kind, int(name[len(kind) :]) - 1
    raise KeyError(f"unknown element {name!r}")


def diag_exp(D: np.ndarray, c) -> np.ndarray:
    """exp(c * D) for diagonal D."""
    return np.diag(np.exp(c * np.diag(D)))


def fundamental_rep(N: int, z=0.0, scale: float = COPRODUCT_SCALE) -> UqRealization:
    """H_i = E_ii - E_{i+1,i+1}, X+_i = E_{i,i+1}, X-_i = E_{i+1,i} on C^(N+1).

    ``z = 0`` selects the classical limit explicitly.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    z = check_uq_point(z)
    d = N + 1
    H = [_unit(d, i, i) - _unit(d, i + 1, i + 1) for i in range(N)]
    Xp = [_unit(d, i, i + 1) for i in range(N)]
    Xm = [_unit(d, i + 1, i) for i in range(N)]
    return UqRealization(N, z, H, Xp, Xm, cartan_matrix(N), scale, limit=(z == 0))


def sinh_ratio(H: np.ndarray, z, limit: bool | None = None) -> np.ndarray:
    """Diagonal functional calculus h -> sinh(z h / 2) / sinh(z / 2)."""
    z = check_uq_point(z)
    h = np.diag(H)
    if limit or (limit is None and z == 0):
        return np.diag(h.astype(complex))
    return np.diag(np.sinh(z * h / 2) / np.sinh(z / 2))


def _comm(a, b):
    return a @ b - b @ a


def _maxabs(m) -> float:
    return float(np.max(np.abs(m))) if np.size(m) else 0.0


def relation_residuals(H, Xp, Xm, r: UqRealization) -> dict:
    """Max-abs residual of each defining relation group for the given images.

    The images may live in any tensor power of the representation; the
    Cartan elements must be diagonal there.
    """
    N = r.N
    out = {"H_commute": 0.0, "H_X": 0.0, "X_plus_minus": 0.0, "X_far_commute": 0.0, "serre": 0.0}
    qq = r.serre_coefficient()
    for i in range(N):
        for k in range(N):
            a = r.cartan[i, k]
            out["H_commute"] = max(out["H_commute"], _maxabs(_comm(H[i], H[k])))
            out["H_X"] = max(
                out["H_X"],
                _maxabs(_comm(H[i], Xp[k]) - a * Xp[k]),
                _maxabs(_comm(H[i], Xm[k]) + a * Xm[k]),
            )
            target = sinh_ratio(H[i], r.z, r.limit) if i == k else 0
            out["X_plus_minus"] = max(out["X_plus_minus"], _maxabs(_comm(Xp[i], Xm[k]) - target))
            if abs(i - k) > 1:
                out["X_far_commute"] = max(
                    out["X_far_commute"], _maxabs(_comm(Xp[i], Xp[k])), _maxabs(_comm(Xm[i], Xm[k]))
                )
            if abs(i - k) == 1:
                for X in (Xp, Xm):
                    s = X[i] @ X[i] @ X[k] - qq * X[i] @ X[k] @ X[i] + X[k] @ X[i] @ X[i]
                    out["serre"] = max(out["serre"], _maxabs(s))
    return out


def check_uq_relations(r: UqRealization) -> dict:
    return relation_residuals(r.H, r.Xp, r.Xm, r)


# -- Hopf structure ----------------------------------------------------------------


def coproduct_terms(name: str) -> list:
    """Delta(name) as a list of (coefficient, left name, right name)."""
    if name == "1":
        return [(1, "1", "1")]
    kind, i = _split(name)
    s = str(i + 1)
    if kind == "H":
        return [(1, name, "1"), (1, "1", name)]
    if kind == "X+":
        return [(1, name, "K" + s), (1, "1", name)]
    if kind == "X-":
        return [(1, name, "1"), (1, "Kinv" + s, name)]
    if kind in ("K", "Kinv"):
        return [(1, name, name)]
    raise KeyError(name)


def counit(name: str) -> float:
    if name == "1":
        return 1.0
    kind, _ = _split(name)
    return 1.0 if kind in ("K", "Kinv") else 0.0


def antipode_image(r: UqRealization, name: str) -> np.ndarray:
    if name == "1":
        return r.element("1")
    kind, i = _split(name)
    s = str(i + 1)
    if kind == "H":
        return -r.element(name)
    if kind == "X+":
        return -r.element(name) @ r.element("Kinv" + s)
    if kind == "X-":
        return -r.element("K" + s) @ r.element(name)
    if kind == "K":
        return r.element("Kinv" + s)
    if kind == "Kinv":
        return r.element("K" + s)
    raise KeyError(name)


def iterated_coproduct(r: UqRealization, name: str, k: int) -> np.ndarray:
    """Image of Delta^(k-1)(name) in the k-fold tensor power of the representation.

    Group-like elements are recomputed as exponentials of the iterated Cartan
    coproduct rather than assumed to factor.
    """
    key = (name, k)
    if key in r._cache:
        return r._cache[key]
    if k == 1:
        out = r.element(name)
    elif name == "1":
        out = np.eye(r.dim**k, dtype=complex)
    else:
        kind, i = _split(name)
        if kind in ("K", "Kinv"):
            sign = 1 if kind == "K" else -1
            out = diag_exp(iterated_coproduct(r, f"H{i + 1}", k), sign * r.k_exponent())
        else:
            out = sum(
                c * np.kron(r.element(a), iterated_coproduct(r, b, k - 1))
                for c, a, b in coproduct_terms(name)
            )
    r._cache[key] = out
    return out


def word_coproduct(r: UqRealization, word, k: int) -> np.ndarray:
    """Delta^(k-1) of a product of named elements."""
    mats = [iterated_coproduct(r, g, k) for g in word]
    if not mats:
        return np.eye(r.dim**k, dtype=complex)
    return _fold(np.matmul, mats)


def coproduct_check(r: UqRealization) -> dict:
    """Residuals for the Hopf structure on generators in tensor powers of the representation."""
    N = r.N
    d = r.dim
    I = np.eye(d, dtype=complex)
    out = {}

    H2 = [iterated_coproduct(r, f"H{i}", 2) for i in range(1, N + 1)]
    Xp2 = [iterated_coproduct(r, f"X+{i}", 2) for i in range(1, N + 1)]
    Xm2 = [iterated_coproduct(r, f"X-{i}", 2) for i in range(1, N + 1)]
    rel = relation_residuals(H2, Xp2, Xm2, r)
    out["algebra_map"] = max(rel.values())
    out.update({f"algebra_map[{k}]": v for k, v in rel.items()})

    anti, coun, coas = 0.0, 0.0, 0.0
    for g in r.generators():
        terms = coproduct_terms(g)
        eps = counit(g)
        left = sum(c * antipode_image(r, a) @ r.element(b) for c, a, b in terms)
        right = sum(c * r.element(a) @ antipode_image(r, b) for c, a, b in terms)
        anti = max(anti, _maxabs(left - eps * I), _maxabs(right - eps * I))

        el = sum(c * counit(a) * r.element(b) for c, a, b in terms)
        er = sum(c * r.element(a) * counit(b) for c, a, b in terms)
        coun = max(coun, _maxabs(el - r.element(g)), _maxabs(er - r.element(g)))

        lhs = sum(c * np.kron(iterated_coproduct(r, a, 2), r.element(b)) for c, a, b in terms)
        rhs = sum(c * np.kron(r.element(a), iterated_coproduct(r, b, 2)) for c, a, b in terms)
        coas = max(coas, _maxabs(lhs - rhs), _maxabs(lhs - iterated_coproduct(r, g, 3)))
    out["antipode"] = anti
    out["counit"] = coun
    out["coassociativity"] = coas
    return out


def uq_report(r: UqRealization) -> dict:
    """All seven relation groups: algebra relations, coproduct, antipode, counit."""
    rel = check_uq_relations(r)
    hopf = coproduct_check(r)
    return {
        "cartan": max(rel["H_commute"], rel["H_X"]),
        "commutators": max(rel["X_plus_minus"], rel["X_far_commute"]),
        "serre": rel["serre"],
        "coproduct_cartan": max(hopf["algebra_map[H_commute]"], hopf["algebra_map[H_X]"], hopf["coassociativity"]),
        "coproduct_root_vectors": max(
            hopf["algebra_map[X_plus_minus]"], hopf["algebra_map[X_far_commute]"], hopf["algebra_map[serre]"]
        ),
        "antipode": hopf["antipode"],
        "counit": hopf["counit"],
    }


def random_points(rng, count: int, radius: float = 3.0, pole_dist: float = 0.1) -> list:
    """Seeded sample of z with |z| <= radius, at distance >= pole_dist from 0 and k*pi*i."""
    pts = []
    while len(pts) < count:
        z = complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))
        if abs(z) > radius:
            continue
        k = round(z.imag / math.pi)
        if abs(z) < pole_dist or abs(z - 1j * math.pi * k) < pole_dist:
            continue
        pts.append(z)
    return pts
