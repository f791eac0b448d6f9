"""Executable checks of the token-graph spectral identities and bounds.

Identity checks run in exact integer (or rational) arithmetic whenever the
inputs allow it. Inequality checks report a signed slack and pass when
``slack >= -tol``: the extremal families meet the bounds with equality.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any, Callable

import numpy as np

from .combinatorics import binomial, enumerate_subsets
from .errors import ValidationError
from .formats import emit_graph6
from .graphs import Graph, complement, complete, complete_multipartite, disjoint_cliques, laplacian
from .lifting import LiftOperator, commutation_residual, kernel_basis, restricted_kernel_residual
from .spectra import (
    Spectrum, cluster, default_tol, eigvals_sym, lambda_max, lambda_min_nontrivial,
    multiset_deviation, nontrivial_eigenvalues, spectrum_contains, token_eigenvalues,
)
from .tokens import _facet_ranks, internal_edge_counts, restrict_all, token_degrees, token_laplacian


@dataclass
class VerificationReport:
    check_name: str
    passed: bool
    residual: Any = None
    slack: float | None = None
    witness: Any = None
    parameters: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return _jsonable(asdict(self))


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return _jsonable(x.tolist())
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else float(x)
    if isinstance(x, (float, np.floating)):
        return float(x)
    return x


def _params(g: Graph | None = None, k: int | None = None, tol=None, **extra) -> dict:
    p = {}
    if g is not None:
        p["n"] = g.n
        p["graph"] = emit_graph6(g)
    if k is not None:
        p["k"] = k
    if tol is not None:
        p["tol"] = tol
    p.update({key: v for key, v in extra.items() if v is not None})
    return p


def _check_k_half(g: Graph, k: int, low: int) -> None:
    if not low <= k <= g.n // 2:
        raise ValidationError(f"need {low} <= k <= floor(n/2), got n={g.n}, k={k}")


def _is_integral(a: np.ndarray) -> bool:
    return np.issubdtype(a.dtype, np.integer)


def _exact(a: np.ndarray) -> np.ndarray:
    """Object array of Python ints or Fractions (floats are exact dyadic rationals)."""
    if _is_integral(a):
        return a.astype(object)
    return np.array([Fraction(float(x)) for x in a.ravel()], dtype=object).reshape(a.shape)


# --- identities ------------------------------------------------------------

def garland_identity(g: Graph, k: int, phi, tol: float = 1e-9) -> VerificationReport:
    """(k-1)<L_k phi, phi> = sum_u <L_{k-1} phi_u, phi_u> - 2 <D_k phi, phi>.

    Integer phi is checked exactly; otherwise the residual is relative to
    max(1, |LHS|). The identity holds for every 2 <= k <= n.
    """
    if not 2 <= k <= g.n:
        raise ValidationError(f"need 2 <= k <= n, got n={g.n}, k={k}")
    phi = np.asarray(phi)
    if phi.shape != (binomial(g.n, k),):
        raise ValidationError(f"phi must have length C({g.n},{k})")
    exact = _is_integral(phi)
    lk = token_laplacian(g, k)
    lk1 = token_laplacian(g, k - 1)
    dk = internal_edge_counts(g, k)
    if exact:
        phi_e = phi.astype(object)
        blocks = restrict_all(phi_e, g.n, k)
        lhs = (k - 1) * int(phi_e @ (lk.astype(object) @ phi_e))
        local = sum(int(b @ (lk1.astype(object) @ b)) for b in blocks)
        rhs = local - 2 * int((dk.astype(object) * phi_e) @ phi_e)
        residual = abs(lhs - rhs)
        passed = residual == 0
    else:
        phi = phi.astype(float)
        blocks = restrict_all(phi, g.n, k)
        lhs = (k - 1) * float(phi @ lk @ phi)
        local = float(np.einsum("ui,ij,uj->", blocks, lk1, blocks))
        rhs = local - 2 * float((dk * phi) @ phi)
        residual = abs(lhs - rhs) / max(1.0, abs(lhs))
        passed = residual <= tol
    return VerificationReport("garland", passed, residual=residual,
                              witness={"lhs": lhs, "rhs": rhs},
                              parameters=_params(g, k, tol, exact=exact))


def norm_identity(phi, n: int, k: int) -> VerificationReport:
    """sum_u ||phi_u||^2 = k ||phi||^2, evaluated in exact rational arithmetic."""
    phi = np.asarray(phi)
    if phi.shape != (binomial(n, k),):
        raise ValidationError(f"phi must have length C({n},{k})")
    phi_e = _exact(phi)
    blocks = restrict_all(phi_e, n, k)
    lhs = sum((b * b).sum() for b in blocks) if len(blocks) else 0
    rhs = k * (phi_e * phi_e).sum()
    residual = abs(Fraction(lhs) - Fraction(rhs))
    return VerificationReport("norm", residual == 0, residual=residual,
                              witness={"lhs": Fraction(lhs), "rhs": Fraction(rhs)},
                              parameters={"n": n, "k": k})


def degree_sum_identity(g: Graph, k: int) -> VerificationReport:
    """sum_{u in sigma} d_{k-1}(sigma - u) = (k-1) d_k(sigma) + 2 |E_sigma| for every sigma."""
    if not 2 <= k <= g.n:
        raise ValidationError(f"need 2 <= k <= n, got n={g.n}, k={k}")
    lower = token_degrees(g, k - 1)[_facet_ranks(g.n, k)].sum(axis=1)
    upper = (k - 1) * token_degrees(g, k) + 2 * internal_edge_counts(g, k)
    diff = np.abs(lower - upper)
    worst = int(diff.argmax())
    residual = int(diff[worst])
    witness = None
    if residual:
        witness = {"sigma": list(enumerate_subsets(g.n, k)[worst]),
                   "lhs": int(lower[worst]), "rhs": int(upper[worst])}
    return VerificationReport("degree_sum", residual == 0, residual=residual,
                              witness=witness, parameters=_params(g, k))


def commutation_check(g: Graph, k: int) -> VerificationReport:
    res = commutation_residual(g, k)
    return VerificationReport("commutation", res == 0, residual=res, parameters=_params(g, k))


# --- spectral structure ----------------------------------------------------

def containment_check(g: Graph, k: int, tol: float = 1e-6) -> VerificationReport:
    """spectrum(L_{k-1}) ⊆ spectrum(L_k) with multiplicities."""
    _check_k_half(g, k, 1)
    lk = token_laplacian(g, k)
    ctol = default_tol(lk)
    outer = cluster(eigvals_sym(lk), ctol)
    inner = cluster(token_eigenvalues(g, k - 1), ctol)
    ok, bad = spectrum_contains(outer, inner, tol)
    return VerificationReport("containment", ok, witness=None if ok else {"value": bad[0], "mult": bad[1]},
                              parameters=_params(g, k, tol))


def decomposition_check(g: Graph, k: int, tol: float = 1e-6) -> VerificationReport:
    """spectrum(L_k) = spectrum(L_{k-1}) ⊎ non-trivial spectrum."""
    _check_k_half(g, k, 1)
    full = token_eigenvalues(g, k)
    parts = np.concatenate([token_eigenvalues(g, k - 1), nontrivial_eigenvalues(g, k)])
    dev = multiset_deviation(full, parts)
    return VerificationReport("decomposition", dev <= tol, residual=dev, parameters=_params(g, k, tol))


def lifting_check(g: Graph, k: int, tol: float = 1e-8) -> VerificationReport:
    """Eigenvectors of L_{k-1} lift through B to eigenvectors of L_k."""
    if not 1 <= k <= g.n:
        raise ValidationError(f"need 1 <= k <= n, got n={g.n}, k={k}")
    lk1 = token_laplacian(g, k - 1).astype(float)
    lk = token_laplacian(g, k).astype(float)
    w, v = np.linalg.eigh(lk1)
    lifted = LiftOperator(g.n, k, k - 1).apply(v)
    resid = np.linalg.norm(lk @ lifted - lifted * w, axis=0)
    scale = max(1.0, float(np.abs(lk).sum(axis=1).max()))
    worst = float(resid.max() / scale) if resid.size else 0.0
    min_norm = float(np.linalg.norm(lifted, axis=0).min()) if resid.size else 1.0
    return VerificationReport("lifting", worst <= tol and min_norm > tol, residual=worst,
                              witness={"min_lifted_norm": min_norm}, parameters=_params(g, k, tol))


def kernel_check(n: int, k: int, tol: float = 1e-9) -> VerificationReport:
    """Dimension, orthonormality and B^T-annihilation of the kernel basis,
    plus kernel preservation under restriction for k >= 2."""
    p = kernel_basis(n, k)
    expected = binomial(n, k) - binomial(n, k - 1)
    bt = LiftOperator(n, k, k - 1).apply_t(p)
    col_res = float(np.linalg.norm(bt, axis=0).max()) if p.shape[1] else 0.0
    ortho = float(np.abs(p.T @ p - np.eye(p.shape[1])).max()) if p.shape[1] else 0.0
    restr = max((restricted_kernel_residual(p[:, j], n, k) for j in range(p.shape[1])),
                default=0.0) if k >= 2 else 0.0
    residual = max(col_res, ortho, restr)
    passed = p.shape[1] == expected and residual <= tol
    return VerificationReport("kernel", passed, residual=residual,
                              witness={"columns": p.shape[1], "expected": expected,
                                       "bt_residual": col_res, "orthonormality": ortho,
                                       "restriction_residual": restr},
                              parameters={"n": n, "k": k, "tol": tol})


# --- bounds ----------------------------------------------------------------

def _top_bottom(g: Graph, k: int) -> tuple[float, float]:
    """(lambda_max, minimal non-trivial eigenvalue) of L_k; k = 1 uses L(G) itself."""
    return lambda_max(g, k), lambda_min_nontrivial(g, k)


def step_bounds(g: Graph, k: int, tol: float = 1e-8) -> VerificationReport:
    """lambda_max(k) <= k/(k-1) lambda_max(k-1) and
    lambda_min^+(k) >= k/(k-1) lambda_min^+(k-1) - k."""
    _check_k_half(g, k, 2)
    top, bottom = _top_bottom(g, k)
    top1, bottom1 = _top_bottom(g, k - 1)
    r = k / (k - 1)
    upper_slack = r * top1 - top
    lower_slack = bottom - (r * bottom1 - k)
    slack = min(upper_slack, lower_slack)
    return VerificationReport("step", slack >= -tol, slack=slack,
                              witness={"lambda_max": top, "lambda_max_prev": top1,
                                       "lambda_min_nontrivial": bottom,
                                       "lambda_min_nontrivial_prev": bottom1,
                                       "upper_slack": upper_slack, "lower_slack": lower_slack},
                              parameters=_params(g, k, tol))


def chained_bounds(lam2: float, lamn: float, k: int) -> tuple[float, float]:
    """Apply the one-step bounds k-1 times starting from (lambda_2, lambda_n) at k = 1."""
    low, high = lam2, lamn
    for j in range(2, k + 1):
        low = j / (j - 1) * low - j
        high = j / (j - 1) * high
    return low, high


def global_bounds(g: Graph, k: int, tol: float = 1e-8) -> VerificationReport:
    """k(lambda_2 - k + 1) <= lambda <= k lambda_n for every non-trivial lambda of L_k."""
    _check_k_half(g, k, 1)
    base = eigvals_sym(laplacian(g))
    lam2, lamn = float(base[1]), float(base[-1])
    nt = nontrivial_eigenvalues(g, k)
    lower, upper = k * (lam2 - k + 1), k * lamn
    lower_slack = float(nt[0]) - lower
    upper_slack = upper - float(nt[-1])
    slack = min(lower_slack, upper_slack)
    return VerificationReport("global", slack >= -tol, slack=slack,
                              witness={"lambda_2": lam2, "lambda_n": lamn,
                                       "nontrivial_min": float(nt[0]), "nontrivial_max": float(nt[-1]),
                                       "lower_bound": lower, "upper_bound": upper,
                                       "lower_slack": lower_slack, "upper_slack": upper_slack},
                              parameters=_params(g, k, tol))


# --- closed forms ----------------------------------------------------------

def johnson_closed_form(n: int, k: int) -> Spectrum:
    """Spectrum of L_k(K_n): j(n-j+1) with multiplicity C(n,j) - C(n,j-1), 0 <= j <= k."""
    if not 0 <= k <= n // 2:
        raise ValidationError(f"need 0 <= k <= floor(n/2), got n={n}, k={k}")
    entries = sorted((j * (n - j + 1), binomial(n, j) - binomial(n, j - 1)) for j in range(k + 1))
    return Spectrum(tuple(entries), 0.0)


def johnson_check(n: int, k: int, tol: float = 1e-6, cluster_tol: float = 1e-8) -> VerificationReport:
    closed = johnson_closed_form(n, k)
    numeric = cluster(token_eigenvalues(complete(n), k), cluster_tol)
    same_shape = [m for _, m in numeric.entries] == [m for _, m in closed.entries]
    dev = (max(abs(a - b) for (a, _), (b, _) in zip(numeric.entries, closed.entries))
           if same_shape else float("inf"))
    return VerificationReport("johnson", same_shape and dev <= tol, residual=dev,
                              witness={"closed_form": closed.format(), "numeric": numeric.format()},
                              parameters={"n": n, "k": k, "tol": tol})


def cartesian_spectrum(spectra: list[Spectrum], tol: float | None = None) -> Spectrum:
    """All sums of one eigenvalue per factor, multiplicities multiplied."""
    sums: dict[float, int] = {}
    for combo in product(*(s.entries for s in spectra)):
        value = sum(v for v, _ in combo)
        mult = int(np.prod([m for _, m in combo]))
        sums[value] = sums.get(value, 0) + mult
    values = [v for v in sorted(sums) for _ in range(sums[v])]
    if tol is None:
        tol = max((s.tol for s in spectra), default=0.0)
    return cluster(values, tol)


def fiedler_check(g: Graph, h: Graph, tol: float = 1e-6) -> VerificationReport:
    from .graphs import cartesian_product

    lg, lh = laplacian(g), laplacian(h)
    predicted = cartesian_spectrum([cluster(eigvals_sym(lg), default_tol(lg)),
                                    cluster(eigvals_sym(lh), default_tol(lh))])
    actual = eigvals_sym(laplacian(cartesian_product(g, h)))
    dev = multiset_deviation(actual, predicted.values)
    return VerificationReport("fiedler", dev <= tol, residual=dev,
                              parameters={"graph": emit_graph6(g), "other": emit_graph6(h), "tol": tol})


def complement_pairing(g: Graph, k: int, tol: float = 1e-6) -> VerificationReport:
    """non-trivial(L_k(G)) = {k(n-k+1) - mu : mu non-trivial for L_k(complement G)}."""
    _check_k_half(g, k, 1)
    mine = nontrivial_eigenvalues(g, k)
    theirs = nontrivial_eigenvalues(complement(g), k)
    c = k * (g.n - k + 1)
    dev = multiset_deviation(mine, c - theirs)
    return VerificationReport("complement", dev <= tol, residual=dev,
                              witness={"shift": c}, parameters=_params(g, k, tol))


def extremal_check(m: int, s: int, k: int, tol: float = 1e-6) -> VerificationReport:
    """Tightness on m disjoint K_s (upper bound) and its complement (lower bound)."""
    if k < 1 or s < 1:
        raise ValidationError("extremal check needs k >= 1 and s >= 1")
    if m < k:
        raise ValidationError(f"extremal families need m >= k, got m={m}, k={k}")
    n = m * s
    g = disjoint_cliques(m, s)
    # lambda_n(L(G)) is s for cliques of size >= 2; K_1 components give the empty graph
    lam_n = s if s >= 2 else 0
    top = lambda_max(g, k)
    top_expected = k * lam_n
    residual = abs(top - top_expected)
    witness = {"lambda_max": top, "lambda_max_expected": top_expected}
    notes = []
    if k <= n // 2:
        bottom = lambda_min_nontrivial(complete_multipartite(m, s), k)
        bottom_expected = k * ((n - lam_n) - k + 1)
        witness.update(lambda_min_nontrivial=bottom, lambda_min_nontrivial_expected=bottom_expected)
        residual = max(residual, abs(bottom - bottom_expected))
    else:
        notes.append("k > floor(n/2): minimal non-trivial eigenvalue undefined, lower bound skipped")
    return VerificationReport("extremal", residual <= tol, residual=residual, witness=witness,
                              parameters={"m": m, "s": s, "n": n, "k": k, "tol": tol}, notes=notes)


def aldous_check(g: Graph, k: int, tol: float = 1e-6) -> VerificationReport:
    """lambda_2(L_k(G)) = lambda_2(L(G)); k > n/2 is reduced via F_k ≅ F_{n-k}."""
    if not 1 <= k <= g.n - 1:
        raise ValidationError(f"need 1 <= k <= n-1, got n={g.n}, k={k}")
    notes = []
    kk = k
    if k > g.n // 2:
        kk = g.n - k
        notes.append(f"reduced k={k} to n-k={kk} via F_k(G) ≅ F_(n-k)(G)")
    base = float(eigvals_sym(laplacian(g))[1])
    tok = float(token_eigenvalues(g, kk)[1])
    residual = abs(tok - base)
    return VerificationReport("aldous", residual <= tol, residual=residual,
                              witness={"lambda_2": base, "lambda_2_token": tok},
                              parameters=_params(g, k, tol), notes=notes)


# --- randomized drivers ----------------------------------------------------

def random_unit_vectors(dim: int, count: int, seed: int) -> np.ndarray:
    rng = np.random.Generator(np.random.PCG64(seed))
    x = rng.standard_normal((count, dim))
    return x / np.linalg.norm(x, axis=1, keepdims=True)


def random_integer_vectors(dim: int, count: int, seed: int, bound: int = 1000) -> np.ndarray:
    rng = np.random.Generator(np.random.PCG64(seed))
    return rng.integers(-bound, bound + 1, size=(count, dim))


def garland_random(g: Graph, k: int, seed: int = 0, count: int = 10, tol: float = 1e-9) -> VerificationReport:
    """Garland identity on ``count`` seeded unit vectors plus one integer vector (exact)."""
    dim = binomial(g.n, k)
    reports = [garland_identity(g, k, phi, tol) for phi in random_unit_vectors(dim, count, seed)]
    reports.append(garland_identity(g, k, random_integer_vectors(dim, 1, seed)[0], tol))
    worst = max(float(r.residual) for r in reports[:-1]) if count else 0.0
    passed = all(r.passed for r in reports)
    return VerificationReport("garland", passed, residual=worst,
                              witness={"vectors": count, "exact_residual": reports[-1].residual},
                              parameters=_params(g, k, tol, seed=seed))


def norm_random(g: Graph, k: int, seed: int = 0, count: int = 10) -> VerificationReport:
    dim = binomial(g.n, k)
    reports = [norm_identity(phi, g.n, k) for phi in random_unit_vectors(dim, count, seed)]
    reports.append(norm_identity(random_integer_vectors(dim, 1, seed)[0], g.n, k))
    residual = max((Fraction(r.residual) for r in reports), default=Fraction(0))
    return VerificationReport("norm", residual == 0, residual=residual,
                              witness={"vectors": count + 1},
                              parameters=_params(g, k, seed=seed))


# Checks taking (graph, k): name -> (function, smallest k, largest k as a function of n).
_HALF = lambda n: n // 2  # noqa: E731
GRAPH_CHECKS: dict[str, tuple[Callable, int, Callable[[int], int]]] = {
    "containment": (containment_check, 1, _HALF),
    "decomposition": (decomposition_check, 1, _HALF),
    "commutation": (commutation_check, 1, lambda n: n),
    "lifting": (lifting_check, 1, lambda n: n),
    "degree_sum": (degree_sum_identity, 2, lambda n: n),
    "garland": (garland_random, 2, lambda n: n),
    "norm": (norm_random, 1, lambda n: n),
    "step": (step_bounds, 2, _HALF),
    "global": (global_bounds, 1, _HALF),
    "complement": (complement_pairing, 1, _HALF),
    "aldous": (aldous_check, 1, lambda n: n - 1),
}

# Checks parameterized by integers only.
PARAM_CHECKS = ("johnson", "kernel", "extremal")
