"""Quasisymmetric functions indexed by descent-type sets, and Schur expansion.

Quasisymmetric and symmetric functions are held abstractly as coefficient
maps on a declared basis (fundamental F, monomial quasisymmetric M, monomial
symmetric m, Schur s); no underlying variables are ever expanded.  The
fundamental basis element F_{n,S} for S inside [n-1] is the sum of M_beta
over all compositions beta of n refining the composition determined by S,
i.e. M_{alpha(T)} over supersets T of S.

Schur expansion of a symmetric input goes through the monomial symmetric
basis and back-substitution against the Kostka matrix (s_lam = sum over mu of
K_{lam,mu} m_mu), which is unitriangular with respect to dominance order;
processing partitions in reverse-lexicographic order (a linear extension of
dominance) makes the solve triangular, and integrality is automatic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .config import DEFAULT_LIMITS, Limits
from .errors import BudgetError
from .perms import check_permutation, enumerate_avoiders, statistic_set

Composition = tuple[int, ...]
Partition = tuple[int, ...]


# ---------------------------------------------------------------------------
# compositions and partitions
# ---------------------------------------------------------------------------

def composition_from_set(n: int, subset: Iterable[int]) -> Composition:
    """The composition of n with partial sums given by the subset of [n-1]."""
    s = sorted(set(subset))
    if s and (s[0] < 1 or s[-1] > n - 1):
        raise ValueError(f"{s} is not a subset of [{n - 1}]")
    bounds = [0] + s + [n]
    if n == 0:
        return ()
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def compositions_of(n: int) -> Iterator[Composition]:
    if n == 0:
        yield ()
        return
    for mask_bits in itertools.chain.from_iterable(
            itertools.combinations(range(1, n), k) for k in range(n)):
        yield composition_from_set(n, mask_bits)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, in reverse-lexicographic (dominance-compatible) order."""

    def gen(remaining: int, cap: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return sorted(gen(n, n), reverse=True)


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape lam and content mu.

    Peeling the largest entry removes a horizontal strip, so
    K(lam, mu) = sum over shapes lam' with lam/lam' a horizontal strip of
    size mu_last of K(lam', mu[:-1]).
    """
    if sum(lam) != sum(mu):
        return 0
    if not mu:
        return 1
    strip = mu[-1]
    rest = mu[:-1]
    total = 0
    for inner in _horizontal_strip_removals(lam, strip):
        total += kostka(inner, rest)
    return total


def _horizontal_strip_removals(lam: Partition, size: int) -> Iterator[Partition]:
    rows = len(lam)

    def walk(i: int, remaining: int, acc: list[int]) -> Iterator[Partition]:
        if i == rows:
            if remaining == 0:
                trimmed = tuple(v for v in acc if v)
                yield trimmed
            return
        lower = lam[i + 1] if i + 1 < rows else 0
        for keep in range(max(lower, lam[i] - remaining), lam[i] + 1):
            acc.append(keep)
            yield from walk(i + 1, remaining - (lam[i] - keep), acc)
            acc.pop()

    yield from walk(0, size, [])


# ---------------------------------------------------------------------------
# expansions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QsymExpansion:
    """Integer combination of quasisymmetric basis elements of one weight."""

    n: int
    basis: str  # "fundamental" or "monomial_qsym"
    coeffs: dict[Composition, int]

    def __post_init__(self):
        if self.basis not in ("fundamental", "monomial_qsym"):
            raise ValueError(f"unknown quasisymmetric basis {self.basis!r}")
        clean = {}
        for comp, value in self.coeffs.items():
            comp = tuple(comp)
            if sum(comp) != self.n or any(p < 1 for p in comp):
                raise ValueError(f"{comp} is not a composition of {self.n}")
            if value:
                clean[comp] = value
        object.__setattr__(self, "coeffs", clean)

    def coefficient(self, comp: Composition) -> int:
        return self.coeffs.get(tuple(comp), 0)

    def dimension(self) -> int:
        """Total fundamental multiplicity: for sums over permutations this is
        the number of permutations summed (each contributes one F term)."""
        return sum(self.coeffs.values())


@dataclass(frozen=True)
class SymExpansion:
    """Integer combination of symmetric basis elements of one weight."""

    n: int
    basis: str  # "schur" or "monomial_sym"
    coeffs: dict[Partition, int]

    def __post_init__(self):
        if self.basis not in ("schur", "monomial_sym"):
            raise ValueError(f"unknown symmetric basis {self.basis!r}")
        clean = {}
        for lam, value in self.coeffs.items():
            lam = tuple(lam)
            if sum(lam) != self.n or list(lam) != sorted(lam, reverse=True):
                raise ValueError(f"{lam} is not a partition of {self.n}")
            if value:
                clean[lam] = value
        object.__setattr__(self, "coeffs", clean)

    def coefficient(self, lam: Partition) -> int:
        return self.coeffs.get(tuple(lam), 0)


def fundamental_to_monomial(n: int, subset: Iterable[int]) -> QsymExpansion:
    """F_{n,S} in the monomial quasisymmetric basis (all coefficients 1)."""
    s = frozenset(subset)
    if any(not 1 <= v <= n - 1 for v in s):
        raise ValueError(f"{sorted(s)} is not a subset of [{n - 1}]")
    others = sorted(set(range(1, n)) - s)
    coeffs: dict[Composition, int] = {}
    for k in range(len(others) + 1):
        for extra in itertools.combinations(others, k):
            coeffs[composition_from_set(n, s | set(extra))] = 1
    return QsymExpansion(n=n, basis="monomial_qsym", coeffs=coeffs)


def _descent_set_counts(n: int, patterns, r: int, limits: Limits,
                        max_n: int | None) -> list[int]:
    """Count avoiders by their r-descent set, encoded as a bitmask of [n-1]."""
    if r < 0:
        raise ValueError("r must be non-negative")
    guard = max_n if max_n is not None else limits.qsym_guard
    if n > guard:
        raise BudgetError(f"n={n} exceeds qsym_guard={guard}")
    pats = tuple(check_permutation(p) for p in patterns)
    m = max(n - 1, 0)
    by_mask = [0] * (1 << m)
    for pi in enumerate_avoiders(n, pats, limits=limits, max_n=n):
        mask = 0
        for k in statistic_set(pi, f"Des_r({r})"):
            mask |= 1 << (k - 1)
        by_mask[mask] += 1
    return by_mask


def _mask_to_comp(n: int, mask: int) -> Composition:
    subset = {k + 1 for k in range(max(n - 1, 0)) if mask >> k & 1}
    return composition_from_set(n, subset)


def qsym_fundamental(n: int, patterns: Iterable[Sequence[int]], r: int = 1,
                     limits: Limits = DEFAULT_LIMITS,
                     max_n: int | None = None) -> QsymExpansion:
    """Sum of F_{n, Des_r(pi)} over the avoiders, in the fundamental basis
    (coefficients keyed by the composition determined by the descent set)."""
    by_mask = _descent_set_counts(n, patterns, r, limits, max_n)
    coeffs = {_mask_to_comp(n, mask): c for mask, c in enumerate(by_mask) if c}
    return QsymExpansion(n=n, basis="fundamental", coeffs=coeffs)


def qsym_sum(n: int, patterns: Iterable[Sequence[int]], r: int = 1,
             limits: Limits = DEFAULT_LIMITS,
             max_n: int | None = None) -> QsymExpansion:
    """Sum of F_{n, Des_r(pi)} over the avoiders of the patterns,
    returned in the monomial quasisymmetric basis."""
    by_mask = _descent_set_counts(n, patterns, r, limits, max_n)
    m = max(n - 1, 0)
    # subset-sum transform: M-coefficient of alpha(T) sums F-counts over S <= T
    sums = list(by_mask)
    for bit in range(m):
        step = 1 << bit
        for mask in range(1 << m):
            if mask & step:
                sums[mask] += sums[mask ^ step]
    coeffs: dict[Composition, int] = {}
    for mask in range(1 << m):
        if sums[mask]:
            coeffs[_mask_to_comp(n, mask)] = sums[mask]
    return QsymExpansion(n=n, basis="monomial_qsym", coeffs=coeffs)


def asymmetry_witness(q: QsymExpansion) -> tuple[Composition, Composition] | None:
    """A pair of compositions with the same parts but different coefficients,
    or None when the expansion is symmetric."""
    if q.basis != "monomial_qsym":
        raise ValueError("symmetry is checked in the monomial_qsym basis")
    seen: dict[Partition, Composition] = {}
    for comp in sorted(q.coeffs):
        lam = tuple(sorted(comp, reverse=True))
        if lam not in seen:
            seen[lam] = comp
    for lam, rep in seen.items():
        value = q.coefficient(rep)
        for comp in set(itertools.permutations(lam)):
            if q.coefficient(comp) != value:
                a, b = sorted((rep, comp))
                return (a, b)
    return None


def is_symmetric(q: QsymExpansion) -> bool:
    return asymmetry_witness(q) is None


def monomial_qsym_to_sym(q: QsymExpansion) -> SymExpansion:
    if not is_symmetric(q):
        raise ValueError(f"not symmetric; witness {asymmetry_witness(q)}")
    coeffs = {}
    for comp, value in q.coeffs.items():
        lam = tuple(sorted(comp, reverse=True))
        if lam == comp and value:
            coeffs[lam] = value
    return SymExpansion(n=q.n, basis="monomial_sym", coeffs=coeffs)


def schur_expand(q: QsymExpansion) -> SymExpansion:
    """Schur expansion of a symmetric quasisymmetric expansion.

    Raises ValueError (with a witness pair) on non-symmetric input, and an
    internal-consistency error if the triangular solve fails to reproduce
    the input exactly.
    """
    monomial = monomial_qsym_to_sym(q)
    out: dict[Partition, int] = {}
    for lam in partitions_of(q.n):  # reverse-lex: dominating shapes first
        value = monomial.coefficient(lam)
        for nu, coeff in out.items():
            value -= coeff * kostka(nu, lam)
        if value:
            out[lam] = value
    result = SymExpansion(n=q.n, basis="schur", coeffs=out)
    if schur_to_monomial_qsym(result).coeffs != q.coeffs:
        raise ArithmeticError("Schur expansion failed to reproduce its input")
    return result


def schur_to_monomial_qsym(e: SymExpansion) -> QsymExpansion:
    """Re-expand a Schur combination into monomial quasisymmetrics."""
    if e.basis != "schur":
        raise ValueError("expected a Schur-basis expansion")
    coeffs: dict[Composition, int] = {}
    for lam, a in e.coeffs.items():
        for mu in partitions_of(e.n):
            k = kostka(lam, mu)
            if not k:
                continue
            for comp in set(itertools.permutations(mu)):
                coeffs[comp] = coeffs.get(comp, 0) + a * k
    return QsymExpansion(n=e.n, basis="monomial_qsym",
                         coeffs={c: v for c, v in coeffs.items() if v})


def is_schur_positive(e: SymExpansion) -> bool:
    if e.basis != "schur":
        raise ValueError("expected a Schur-basis expansion")
    return all(v >= 0 for v in e.coeffs.values())


def format_schur(e: SymExpansion) -> str:
    """Render like s(2,2,1)+4s(3,2), partitions in lexicographic order."""
    if not e.coeffs:
        return "0"
    parts = []
    for lam in sorted(e.coeffs):
        value = e.coeffs[lam]
        body = "s(" + ",".join(map(str, lam)) + ")"
        if value == 1:
            parts.append(body)
        elif value == -1:
            parts.append(f"-{body}")
        else:
            parts.append(f"{value}{body}")
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else f"+{p}"
    return out
