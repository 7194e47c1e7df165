"""Drinfeld twists of a Hopf algebra, checked in a finite-dimensional representation.

A twist is given by a recipe ``F = exp(lam * sum_k c_k a_k (x) b_k)`` with named
elements ``a_k, b_k``. Because Delta and epsilon are algebra maps, the legs of F
can be pushed through them by acting on the exponent, which is how the
cocycle and counit conditions become finite matrix identities.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm

COND_LIMIT = 1e12


def _kron(*ms):
    out = ms[0]
    for m in ms[1:]:
        out = np.kron(out, m)
    return out


def flip(d: int) -> np.ndarray:
    P = np.zeros((d * d, d * d))
    for a in range(d):
        for b in range(d):
            P[b * d + a, a * d + b] = 1.0
    return P


def _maxabs(m) -> float:
    return float(np.max(np.abs(m)))


@dataclass
class TwistData:
    d: int
    F: np.ndarray
    delta_images: dict
    rep_images: dict
    F_delta_left: np.ndarray = None
    F_delta_right: np.ndarray = None
    F_eps_left: np.ndarray = None
    F_eps_right: np.ndarray = None
    v: np.ndarray = None
    recipe: dict = field(default_factory=dict)

    def __post_init__(self):
        self.F = np.asarray(self.F, dtype=complex)
        if self.F.shape != (self.d**2, self.d**2):
            raise ValueError(f"F must be {self.d**2}x{self.d**2}")
        cond = np.linalg.cond(self.F)
        if not np.isfinite(cond) or cond > COND_LIMIT:
            raise ValueError(f"twist is numerically singular (condition number {cond:.3g})")
        self.condition_number = float(cond)
        self.F_inv = np.linalg.inv(self.F)

    @property
    def F21(self) -> np.ndarray:
        P = flip(self.d)
        return P @ self.F @ P


def primitive_delta(m: np.ndarray) -> np.ndarray:
    I = np.eye(len(m))
    return np.kron(m, I) + np.kron(I, m)


def build_twist(
    rep: dict,
    terms: list,
    lam: float,
    delta=None,
    counit=None,
    antipode=None,
) -> TwistData:
    """Assemble TwistData from a recipe.

    ``terms`` is a list of ``(coeff, left name, right name)``. ``delta(name)``
    returns the image of Delta(name) in rho (x) rho (default: primitive),
    ``counit(name)`` its counit (default 0) and ``antipode(name)`` the matrix
    of rho(S(name)) (default ``-rho(name)``).
    """
    d = len(next(iter(rep.values())))
    delta = delta or (lambda g: primitive_delta(rep[g]))
    counit = counit or (lambda g: 0.0)
    antipode = antipode or (lambda g: -rep[g])

    def ex(parts, dim):
        if not parts:
            return np.eye(dim, dtype=complex)
        return expm(lam * sum(parts))

    X = [c * np.kron(rep[a], rep[b]) for c, a, b in terms]
    F = ex(X, d * d)
    left = ex([c * np.kron(delta(a), rep[b]) for c, a, b in terms], d**3)
    right = ex([c * np.kron(rep[a], delta(b)) for c, a, b in terms], d**3)
    eps_l = ex([c * counit(a) * rep[b] for c, a, b in terms], d)
    eps_r = ex([c * counit(b) * rep[a] for c, a, b in terms], d)

    # mu (1 (x) S) F: with rho'(b) = rho(S b)^T a homomorphism, F read in
    # rho (x) rho' is sum X (x) Y^T, and the contraction v = sum X Y^T
    # is v[i, k] = sum_j G[(i, k), (j, j)].
    G = ex([c * np.kron(rep[a], antipode(b).T) for c, a, b in terms], d * d)
    v = np.einsum("ikjj->ik", G.reshape(d, d, d, d))

    gens = list(rep)
    return TwistData(
        d,
        F,
        {g: delta(g) for g in gens},
        dict(rep),
        left,
        right,
        eps_l,
        eps_r,
        v,
        {"lambda": lam, "terms": [list(x) for x in terms]},
    )


def cocycle_check(t: TwistData) -> dict:
    """Residuals of F12 (Delta (x) 1)F = F23 (1 (x) Delta)F and the two counit conditions."""
    d = t.d
    I = np.eye(d)
    F12 = np.kron(t.F, I)
    F23 = np.kron(I, t.F)
    cocycle = _maxabs(F12 @ t.F_delta_left - F23 @ t.F_delta_right)
    counit = max(_maxabs(t.F_eps_left - I), _maxabs(t.F_eps_right - I))
    return {"cocycle": cocycle, "counit": counit}


def twisted_coproduct(t: TwistData, g: str) -> np.ndarray:
    return t.F @ t.delta_images[g] @ t.F_inv


def twisted_coassociativity(t: TwistData) -> float:
    """(Delta^F (x) 1) Delta^F(g) vs (1 (x) Delta^F) Delta^F(g) on every generator.

    Uses (Delta^F (x) 1)(X) = F12 (Delta (x) 1)(X) F12^-1 at the level of the
    untwisted element, so only Delta of rep images is needed.
    """
    d = t.d
    I = np.eye(d)
    F12 = np.kron(t.F, I)
    F23 = np.kron(I, t.F)
    L = F12 @ t.F_delta_left
    Rr = F23 @ t.F_delta_right
    Linv, Rinv = np.linalg.inv(L), np.linalg.inv(Rr)
    worst = 0.0
    for g in t.rep_images:
        three = _three_fold(t, g)
        worst = max(worst, _maxabs(L @ three @ Linv - Rr @ three @ Rinv))
    return worst


def _three_fold(t: TwistData, g: str) -> np.ndarray:
    """Image of Delta^(2)(g), assuming the supplied coproduct is coassociative on g."""
    d = t.d
    I = np.eye(d)
    dg = t.delta_images[g]
    rho = t.rep_images[g]
    if np.allclose(dg, primitive_delta(rho)):
        return _kron(rho, I, I) + _kron(I, rho, I) + _kron(I, I, rho)
    raise NotImplementedError("three-fold coproduct only built for primitive generators")


def twisted_r_and_antipode(t: TwistData) -> dict:
    """R = F21 F^-1, its triangularity, the intertwining axiom and v = mu(1 (x) S)F."""
    P = flip(t.d)
    R = t.F21 @ t.F_inv
    Rinv = np.linalg.inv(R)
    R21 = P @ R @ P
    triangular = _maxabs(R21 @ R - np.eye(t.d**2))
    intertwining = {}
    for g in t.rep_images:
        dF = twisted_coproduct(t, g)
        intertwining[g] = _maxabs(P @ dF @ P - R @ dF @ Rinv)
    vcond = np.linalg.cond(t.v)
    if not np.isfinite(vcond) or vcond > COND_LIMIT:
        raise ValueError(f"v is numerically singular (condition number {vcond:.3g})")
    return {
        "R": R,
        "v": t.v,
        "report": {
            "triangularity": triangular,
            "intertwining": intertwining,
            "v_condition": float(vcond),
            "F_condition": t.condition_number,
        },
    }


def v_series(t: TwistData, terms: list, lam: float, order: int = 40) -> np.ndarray:
    """mu(1 (x) S)F by summing the exponential series term by term.

    Independent of the dual-representation trick; S is taken as
    ``S(b) = -b`` extended anti-multiplicatively.
    """
    d = t.d
    rep = t.rep_images
    # level n holds sum over sequences of (prod c) * (a_k1..a_kn, b_kn..b_k1) pairs,
    # accumulated as the matrix a-word @ S(b-word)
    states = [(1.0 + 0j, np.eye(d, dtype=complex), np.eye(d, dtype=complex))]
    v = np.eye(d, dtype=complex)
    fact = 1.0
    for n in range(1, order + 1):
        fact *= n
        nxt = []
        for c0, A, B in states:
            for c, a, b in terms:
                nxt.append((c0 * c, A @ rep[a], -rep[b] @ B))
        states = _merge(nxt)
        term = sum(c0 * A @ B for c0, A, B in states) * (lam**n / fact)
        v = v + term
        if _maxabs(term) < 1e-18:
            break
    return v


def _merge(states):
    # keep the list small when legs commute: group identical (A, B) pairs
    out = {}
    for c, A, B in states:
        key = (A.round(14).tobytes(), B.round(14).tobytes())
        if key in out:
            out[key][0] += c
        else:
            out[key] = [c, A, B]
    return [tuple(x) for x in out.values()]


def flip_involution(t: TwistData) -> float:
    P = flip(t.d)
    return _maxabs(P @ t.F21 @ P - t.F)


def quasitriangular_branch_check(t: TwistData, R_base: np.ndarray | None = None) -> dict:
    """Compare the two candidate twisted R-matrices against the intertwining axiom.

    Candidates are F21 R F^-1 and F^-1 R F^-1; also reports the extra
    conditions F21 = F^-1 and F12 F13 F23 = F23 F13 F12.
    """
    d = t.d
    P = flip(d)
    Rb = np.eye(d * d) if R_base is None else R_base
    cands = {"F21 R F^-1": t.F21 @ Rb @ t.F_inv, "F^-1 R F^-1": t.F_inv @ Rb @ t.F_inv}
    out = {}
    for name, R in cands.items():
        Ri = np.linalg.inv(R)
        out[name] = max(
            _maxabs(P @ twisted_coproduct(t, g) @ P - R @ twisted_coproduct(t, g) @ Ri) for g in t.rep_images
        )
    I = np.eye(d)
    F12 = np.kron(t.F, I)
    F23 = np.kron(I, t.F)
    P23 = np.kron(I, P)
    F13 = P23 @ F12 @ P23
    out["F21 = F^-1"] = _maxabs(t.F21 @ t.F - np.eye(d * d))
    out["QYBE(F)"] = _maxabs(F12 @ F13 @ F23 - F23 @ F13 @ F12)
    return out


# -- scenarios -----------------------------------------------------------------


def _unit(d, i, j):
    m = np.zeros((d, d), dtype=complex)
    m[i, j] = 1.0
    return m


def sl_rep(n: int) -> dict:
    """Chevalley generators of sl(n) in the defining representation."""
    rep = {}
    for i in range(n - 1):
        s = str(i + 1)
        rep["H" + s] = _unit(n, i, i) - _unit(n, i + 1, i + 1)
        rep["X+" + s] = _unit(n, i, i + 1)
        rep["X-" + s] = _unit(n, i + 1, i)
    return rep


BUILTIN_SCENARIOS = {
    "identity": {"n": 2, "lambda": 0.3, "terms": []},
    "sl2_abelian": {"n": 2, "lambda": 0.3, "terms": [[1, "H1", "H1"]]},
    "sl3_abelian": {"n": 3, "lambda": 0.3, "terms": [[1, "H1", "H2"], [-1, "H2", "H1"]]},
    "sl2_nilpotent": {"n": 2, "lambda": 0.3, "terms": [[1, "X+1", "X+1"]]},
    "sl2_noncommuting": {"n": 2, "lambda": 0.3, "terms": [[1, "X+1", "X-1"]]},
}


def _matrix(obj) -> np.ndarray:
    return np.array([[complex(x[0], x[1]) if isinstance(x, list) else complex(x) for x in row] for row in obj])


def load_scenario(obj) -> TwistData:
    """Scenario JSON: either ``{"n": k}`` for sl(k) or ``{"rep": {name: matrix}}``,
    plus ``"lambda"`` and ``"terms": [[coeff, left, right], ...]``.

    Matrix entries are numbers or ``[re, im]`` pairs.
    """
    if isinstance(obj, str):
        if obj in BUILTIN_SCENARIOS:
            obj = BUILTIN_SCENARIOS[obj]
        else:
            with open(obj) as fh:
                obj = json.load(fh)
    if "rep" in obj:
        rep = {k: _matrix(m) for k, m in obj["rep"].items()}
    else:
        rep = sl_rep(int(obj["n"]))
    lam = float(obj.get("lambda", 0.0))
    terms = []
    for c, a, b in obj.get("terms", []):
        if a not in rep or b not in rep:
            raise KeyError(f"twist recipe names unknown element {a!r} or {b!r}")
        terms.append((complex(c[0], c[1]) if isinstance(c, list) else c, a, b))
    return build_twist(rep, terms, lam)


def twist_report(t: TwistData) -> dict:
    coc = cocycle_check(t)
    rv = twisted_r_and_antipode(t)
    return {
        "cocycle": coc["cocycle"],
        "counit": coc["counit"],
        "triangularity": rv["report"]["triangularity"],
        "intertwining": max(rv["report"]["intertwining"].values()),
        "twisted_coassociativity": twisted_coassociativity(t),
        "flip_involution": flip_involution(t),
        "F_condition": t.condition_number,
        "v_condition": rv["report"]["v_condition"],
    }
