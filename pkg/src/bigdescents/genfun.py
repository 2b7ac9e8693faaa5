"""Named generating functions and closed counting formulas.

Every generating function record below expands through a requested truncation
order with exact polynomial coefficients.  Ids with both a closed form and a
functional-equation system get two independent routes (``expand`` and
``expand_functional``) whose agreement is part of the verification suite.

Conventions: x marks permutation/word length, z marks path length, t marks
big descents (or the factor statistic standing in for them), s is the
secondary marker in the joint path statistics, and u, v, w mark high big
ascents, low big ascents, and an initial double rise of a Dyck path.

Fixed-point iterations start from 1 (or 0 for unknowns with zero constant
term) and run order+1 sweeps; each sweep pins down one more coefficient
because every unknown on a right-hand side is multiplied by the series
variable (directly or through a Gauss-Seidel update earlier in the sweep).
A final idempotence check certifies stabilization.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .algebra import MultiPoly, TruncatedSeries, series_compose
from .errors import BudgetError, DivergenceError

_T = MultiPoly.var("t")
_S = MultiPoly.var("s")
_U = MultiPoly.var("u")
_V = MultiPoly.var("v")
_W = MultiPoly.var("w")


def binom(a: int, b: int) -> int:
    """Binomial coefficient with out-of-range arguments evaluating to 0.

    The empty product C(a, 0) = 1 is kept for every a, including negatives.
    """
    if b == 0:
        return 1
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


# ---------------------------------------------------------------------------
# closed-form expansions
# ---------------------------------------------------------------------------

def _x(order: int) -> TruncatedSeries:
    return TruncatedSeries.gen(order, "x")


def _z(order: int) -> TruncatedSeries:
    return TruncatedSeries.gen(order, "z")


def _sqrt_321(order: int) -> TruncatedSeries:
    x = _x(order)
    return (1 - 4 * x + (4 * (1 - _T)) * x ** 2).sqrt()


def _closed_B132(N: int) -> TruncatedSeries:
    x = _x(N + 1)
    u = 1 - _T
    radicand = (1 - 4 * x + (6 * u) * x ** 2
                - (4 * u ** 2) * x ** 3 + (u ** 2) * x ** 4)
    numerator = 1 - (2 * u) * x + (u * (1 - 2 * _T)) * x ** 2 - radicand.sqrt()
    shifted = numerator.exact_div(1, 2 * _T)
    return shifted / (1 - u * _x(N))


def _closed_B321(N: int) -> TruncatedSeries:
    x = _x(N)
    return 2 / (1 - (2 * (1 - _T)) * x ** 2 + _sqrt_321(N))


def _sqrt_123(order: int) -> TruncatedSeries:
    x = _x(order)
    return (1 - (2 * (1 + _T)) * x + ((1 - _T) ** 2) * x ** 2).sqrt()


def _closed_B123(N: int) -> TruncatedSeries:
    x = _x(N + 1)
    u = 1 - _T
    numerator = (1 - (2 * (1 - _T ** 2)) * x + (u ** 2) * x ** 2
                 - (1 - u * x) * _sqrt_123(N + 1))
    return numerator.exact_div(1, 2 * _T ** 2)


def _closed_Bgrave123(N: int) -> TruncatedSeries:
    x = _x(N + 1)
    numerator = 1 - (1 - _T) * x - _sqrt_123(N + 1)
    return numerator.exact_div(1, 2 * _T)


def _closed_B123_132(N: int) -> TruncatedSeries:
    x = _x(N)
    u = 1 - _T
    numerator = 1 - x + u * x ** 2 - (u ** 2) * x ** 3
    denominator = 1 - 2 * x + u * x ** 2 + (_T * u) * x ** 3
    return numerator / denominator


def _closed_B231_321(N: int) -> TruncatedSeries:
    x = _x(N)
    return (1 - x) / (1 - 2 * x + (1 - _T) * x ** 3)


def _closed_B123_321(N: int) -> TruncatedSeries:
    fixed = [MultiPoly.one(), MultiPoly.one(), MultiPoly.const(2),
             2 + 2 * _T, 1 + 2 * _T + _T ** 2]
    coeffs = fixed[: N + 1] + [MultiPoly.zero()] * max(0, N + 1 - len(fixed))
    return TruncatedSeries(coeffs, "x")


def _closed_V(N: int) -> TruncatedSeries:
    numerator = 1 - _sqrt_321(N + 1)
    shifted = numerator.exact_div(1, 2)
    return shifted / (1 - (1 - _T) * _x(N))


def _closed_What(N: int) -> TruncatedSeries:
    x = _x(N)
    return (1 - _sqrt_321(N)) * Fraction(1, 2) + (_T * (_S - 1)) * x ** 2


def _closed_W(N: int) -> TruncatedSeries:
    x = _x(N)
    return 2 / (1 + (2 * (1 - _S) * _T) * x ** 2 + _sqrt_321(N))


def _sqrt_G(order: int) -> TruncatedSeries:
    z = _z(order)
    return (1 - (2 * (1 + _S)) * z + ((1 + _S) ** 2 - 4 * _S * _T) * z ** 2).sqrt()


def _closed_G(N: int) -> TruncatedSeries:
    z = _z(N + 1)
    numerator = 1 - (1 + _S - 2 * _T) * z - _sqrt_G(N + 1)
    return numerator.exact_div(1, 2 * _T)


def _closed_Gtilde(N: int) -> TruncatedSeries:
    z = _z(N + 2)
    numerator = 1 - (1 + _S) * z - _sqrt_G(N + 2)
    return numerator.exact_div(2, 2 * _T * _S)


def _closed_R_run(N: int, r: int) -> TruncatedSeries:
    if r < 2:
        raise ValueError("the run generating function requires r >= 2")
    x = _x(N)
    block = (1 - (1 - _T) * x ** r) / (1 - x)
    return block / (1 - x * block)


def _closed_W1_words(N: int) -> TruncatedSeries:
    x = _x(N)
    u = 1 - _T
    return (x * (1 - u * x ** 2)) / (1 - 2 * x + u * x ** 2 + (_T * u) * x ** 3)


def _closed_F(N: int) -> TruncatedSeries:
    """Peak-insertion decomposition: graft runs of peaks onto a blue core.

    The core path's joint peak/adjacency distribution (id G) is composed with
    the substitutions describing how many red peaks may be inserted at each
    vertex type, then the empty-core geometric series is added back.
    """
    x = _x(N)
    frac = x / (1 - x)            # x/(1-x)
    E = _U * frac                 # marks an inserted nonempty run of peaks
    a = 1 + E * (1 + _V + E)
    s_sub = (E * (1 + E)) / a
    t_sub = ((1 + E) * (_V + E)) / a
    z_sub = a * x
    G = _closed_G(N)
    composed = series_compose(G, {"s": s_sub, "t": t_sub, "z": z_sub})
    core = ((_W + E) * (composed - 1)).exact_div(0, _U)
    return core + 1 / (1 - x)


def expand_by_peak_insertion(which: str, N: int) -> TruncatedSeries:
    """B123 or Bgrave123 through the peak-insertion pipeline (id F)."""
    subs = {"B123": {"u": _T, "v": _T, "w": 1},
            "Bgrave123": {"u": _T, "v": _T, "w": _T}}
    if which not in subs:
        raise ValueError(f"no pipeline specialization for {which!r}")
    return _closed_F(N).map_coeffs(subs[which])


# ---------------------------------------------------------------------------
# functional-equation expansions
# ---------------------------------------------------------------------------

def _check_stable(old, new, name: str):
    if old != new:
        raise DivergenceError(f"fixed point for {name} did not stabilize")


def _functional_B132(N: int) -> TruncatedSeries:
    x = _x(N)
    B = TruncatedSeries.one(N, "x")
    Bbar = TruncatedSeries.zero(N, "x")

    def sweep(B, Bbar):
        Bbar = x * (1 + Bbar + _T * (B - Bbar - 1))
        B = 1 + Bbar + x * (B - 1) + _T * x * (B - 1) ** 2
        return B, Bbar

    for _ in range(N + 1):
        B, Bbar = sweep(B, Bbar)
    _check_stable(B, sweep(B, Bbar)[0], "B132")
    return B


def _functional_V(N: int) -> TruncatedSeries:
    x = _x(N)
    V = TruncatedSeries.one(N, "x")
    rhs = lambda V: 1 + x * ((_T - 1) * x + 1) * V ** 2
    for _ in range(N + 1):
        V = rhs(V)
    _check_stable(V, rhs(V), "V")
    return V


def _functional_What(N: int) -> TruncatedSeries:
    x = _x(N)
    V = _functional_V(N)
    return x + (_S * _T) * x ** 2 + _T * x ** 2 * (V - 1) + x * (V - 1 - x * V)


def _functional_W(N: int) -> TruncatedSeries:
    What = _functional_What(N)
    W = TruncatedSeries.one(N, "x")
    for _ in range(N + 1):
        W = 1 + What * W
    _check_stable(W, 1 + What * W, "W")
    return W


def _functional_Gtilde(N: int) -> TruncatedSeries:
    z = _z(N)
    G = TruncatedSeries.one(N, "z")
    rhs = lambda G: 1 + (1 + _S) * z * G + (_T * _S) * z ** 2 * G ** 2
    for _ in range(N + 1):
        G = rhs(G)
    _check_stable(G, rhs(G), "Gtilde")
    return G


def _functional_G(N: int) -> TruncatedSeries:
    return 1 + _S * _z(N) * _functional_Gtilde(N)


def _functional_W1_words(N: int) -> TruncatedSeries:
    x = _x(N)
    zero = TruncatedSeries.zero(N, "x")
    W1 = W0 = W01 = W11 = zero

    def sweep(W1, W0, W01, W11):
        W0 = (1 + W0 + _T * W1) * x
        W01 = W0 * x
        W11 = (x + _T * W01 + W11) * x
        W1 = x + W01 + W11
        return W1, W0, W01, W11

    state = (W1, W0, W01, W11)
    for _ in range(N + 1):
        state = sweep(*state)
    _check_stable(state[0], sweep(*state)[0], "W1_words")
    return state[0]


# ---------------------------------------------------------------------------
# the id registry
# ---------------------------------------------------------------------------

GF_IDS: dict[str, dict] = {
    "B132": {"closed": _closed_B132, "functional": _functional_B132, "var": "x"},
    "B321": {"closed": _closed_B321, "var": "x"},
    "B123": {"closed": _closed_B123, "var": "x"},
    "Bgrave123": {"closed": _closed_Bgrave123, "var": "x"},
    "B123_132": {"closed": _closed_B123_132, "var": "x"},
    "B132_213": {"closed": _closed_B123_132, "var": "x"},
    "B231_321": {"closed": _closed_B231_321, "var": "x"},
    "B123_321": {"closed": _closed_B123_321, "var": "x"},
    "V": {"closed": _closed_V, "functional": _functional_V, "var": "x"},
    "What": {"closed": _closed_What, "functional": _functional_What, "var": "x"},
    "W": {"closed": _closed_W, "functional": _functional_W, "var": "x"},
    "G": {"closed": _closed_G, "functional": _functional_G, "var": "z"},
    "Gtilde": {"closed": _closed_Gtilde, "functional": _functional_Gtilde, "var": "z"},
    "F": {"closed": _closed_F, "var": "x"},
    "R_run": {"closed": _closed_R_run, "var": "x", "needs_r": True},
    "W1_words": {"closed": _closed_W1_words, "functional": _functional_W1_words,
                 "var": "x"},
}


def expand(gf_id: str, N: int, r: int | None = None) -> TruncatedSeries:
    """Expand a named generating function through order N (closed route)."""
    info = _gf_info(gf_id)
    if N < 0:
        raise ValueError("order must be non-negative")
    if info.get("needs_r"):
        if r is None:
            raise ValueError(f"{gf_id} requires the run-length parameter r")
        return info["closed"](N, r)
    if r is not None:
        raise ValueError(f"{gf_id} takes no r parameter")
    return info["closed"](N)


def expand_functional(gf_id: str, N: int) -> TruncatedSeries:
    """Expand through order N by functional-equation fixed point."""
    info = _gf_info(gf_id)
    if "functional" not in info:
        raise ValueError(f"{gf_id} has no functional-equation route")
    if N < 0:
        raise ValueError("order must be non-negative")
    return info["functional"](N)


def _gf_info(gf_id: str) -> dict:
    try:
        return GF_IDS[gf_id]
    except KeyError:
        raise ValueError(f"unknown generating function id {gf_id!r}; "
                         f"have {sorted(GF_IDS)}") from None


def series_row(series: TruncatedSeries, n: int) -> list[int]:
    """Integer t-coefficients of the x^n (or z^n) coefficient."""
    poly = series.coefficient(n).to_univariate("t")
    out = []
    for q in poly:
        if q.denominator != 1:
            raise ValueError(f"non-integer coefficient {q} in row {n}")
        out.append(q.numerator)
    return out


# ---------------------------------------------------------------------------
# counting formulas
# ---------------------------------------------------------------------------

def _delta0(k: int) -> int:
    return 1 if k == 0 else 0


def b231(n: int, k: int) -> int:
    """Big-descent counts over 231-avoiders: 2^(n-2k-1)/(k+1) C(n-1,2k) C(2k,k)."""
    if n == 0:
        return _delta0(k)
    c = binom(n - 1, 2 * k)
    if c == 0:
        return 0
    return (2 ** (n - 2 * k - 1)) * c * catalan(k)


def b231_joint(n: int, j: int, k: int) -> int:
    """Avoiders of 231 with j descents and k big descents (= k peaks)."""
    if n == 0:
        return 1 if j == 0 and k == 0 else 0
    c = binom(n - 1, 2 * k)
    if c == 0:
        return 0
    return catalan(k) * c * binom(n - 2 * k - 1, j - k)


def b123(n: int, k: int) -> int:
    """Big-descent counts over 123-avoiders: 2/(n+1) C(n+1,k+2) C(n-2,k)."""
    if n == 0:
        return _delta0(k)
    value = Fraction(2, n + 1) * binom(n + 1, k + 2) * binom(n - 2, k)
    assert value.denominator == 1
    return value.numerator


def narayana(n: int, k: int) -> int:
    """N(n,k) = 1/(k+1) C(n-1,k) C(n,k); right big descents over 123-avoiders."""
    if n == 0:
        return _delta0(k)
    value = Fraction(1, k + 1) * binom(n - 1, k) * binom(n, k)
    assert value.denominator == 1
    return value.numerator


def b213_231(n: int, k: int) -> int:
    if n == 0:
        return _delta0(k)
    return binom(n, 2 * k + 1)


def b213_312(n: int, k: int) -> int:
    return b213_231(n, k)


def b123_231(n: int, k: int) -> int:
    if n == 0:
        return _delta0(k)
    if k == 0:
        return n
    if k == 1:
        return binom(n - 1, 2)
    return 0


def b132_321(n: int, k: int) -> int:
    if n <= 1:
        return _delta0(k)
    if k == 0:
        return 2
    if k == 1:
        return binom(n, 2) - 1
    return 0


def b231_312(n: int, k: int) -> int:
    if n == 0:
        return _delta0(k)
    return 2 ** (n - 1) if k == 0 else 0


# ---------------------------------------------------------------------------
# r-Eulerian polynomials and the generalized Carlitz identity
# ---------------------------------------------------------------------------

def _brute_eulerian_r(n: int, r: int) -> list[int]:
    if n > 9:
        raise BudgetError(f"brute-force base case over S_{n} refused (guard 9)")
    coeffs = [0] * (n + 1 if n else 1)
    for pi in itertools.permutations(range(1, n + 1)):
        coeffs[sum(1 for a, b in zip(pi, pi[1:]) if a > b + r)] += 1
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_derivative(p: list[int]) -> list[int]:
    return [i * c for i, c in enumerate(p)][1:] or [0]


def eulerian_r(n: int, r: int) -> list[int]:
    """Distribution of r-descents over the full symmetric group S_n.

    Base cases with n <= r are enumerated directly (the recurrence is only
    valid from n = r+1 on); above that, apply
    A_n = (r+1 + (n-r-1) t) A_{n-1} + t (1-t) A'_{n-1}.
    """
    if n < 0 or r < 0:
        raise ValueError("n and r must be non-negative")
    if n <= r:
        return _brute_eulerian_r(n, r)
    prev = eulerian_r(n - 1, r)
    deriv = _poly_derivative(prev)
    out = [0] * (len(prev) + 2)
    for i, c in enumerate(prev):           # (r+1) A + (n-r-1) t A
        out[i] += (r + 1) * c
        out[i + 1] += (n - r - 1) * c
    for i, c in enumerate(deriv):          # t A' - t^2 A'
        out[i + 1] += c
        out[i + 2] -= c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def carlitz_lhs_coeff(n: int, r: int, k: int) -> Fraction:
    """Coefficient of t^k in A_{n+r}(t) / ((r+1)! (1-t)^(n+1+r))."""
    if n < 1 or r < 0 or k < 0:
        raise ValueError("need n >= 1, r >= 0, k >= 0")
    poly = eulerian_r(n + r, r)
    total = sum(
        poly[i] * math.comb(k - i + n + r, n + r)
        for i in range(min(k, len(poly) - 1) + 1)
    )
    return Fraction(total, math.factorial(r + 1))


def carlitz_verify(n: int, r: int, K: int) -> bool:
    """First K coefficients against (k+1+r)^(n-1) C(k+1+r, r+1)."""
    if n < 1 or K < 1:
        raise ValueError("need n >= 1 and K >= 1")
    return all(
        carlitz_lhs_coeff(n, r, k)
        == (k + 1 + r) ** (n - 1) * math.comb(k + 1 + r, r + 1)
        for k in range(K)
    )


FORMULA_IDS = {
    "b231": b231, "b231_joint": b231_joint, "b123": b123,
    "narayana": narayana, "b213_231": b213_231, "b213_312": b213_312,
    "b123_231": b123_231, "b132_321": b132_321, "b231_312": b231_312,
    "eulerian_r": eulerian_r, "carlitz_lhs_coeff": carlitz_lhs_coeff,
}


def formula(name: str, **args):
    """Evaluate a named counting formula; see FORMULA_IDS for the catalogue."""
    try:
        fn = FORMULA_IDS[name]
    except KeyError:
        raise ValueError(f"unknown formula {name!r}; have {sorted(FORMULA_IDS)}"
                         ) from None
    return fn(**args)
