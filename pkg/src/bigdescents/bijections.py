"""Constructive bijections between avoider classes, paths, and binary words.

Every bijection is registered with its domain (an avoidance class), codomain,
forward and inverse maps, and the statistic identities it transports.  Domain
checking is always on by default; pass ``check=False`` in bulk pipelines that
have already validated their inputs.

The nine bijections:

- omega_f, omega_l: 231-avoiders to Dyck paths, via the first/last return
  decompositions matched against the sigma-n-tau decomposition.
- chi: 321-avoiders to Dyck paths.  The path's k-th D step sits at height
  max(pi_1..pi_k) (north/east staircase tight against the diagonal, north
  playing U and east playing D); peaks correspond to weak excedances.
- psi: Dyck paths of semilength m to 2-Motzkin paths of length m-1, reading
  off the peak coloring: step i encodes the colors of the i-th U step and
  the (i+1)-th D step (blue,red)->u, (red,blue)->d, (blue,blue)->h0,
  (red,red)->h1.
- phi_213_231, phi_213_312: avoiders of the pair to binary words of length
  n-1 (suffix-min/max indicators, resp. before/after-the-maximum indicators).
- phi_123_132, phi_132_213, phi_231_321: avoiders of the pair to binary
  words of length n ending in 1 (indicator words of right-to-left maxima,
  resp. left-to-right maxima).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from . import perms
from .errors import DomainViolationError
from .paths import BinaryWord, DyckPath, TwoMotzkinPath, occ_factor, path_statistic
from .perms import Perm, check_permutation, enumerate_avoiders, standardize


def _require_avoider(pi: Perm, patterns: tuple[Perm, ...]) -> None:
    for sigma in patterns:
        if perms.contains(pi, sigma):
            raise DomainViolationError(
                f"{pi} contains the pattern {''.join(map(str, sigma))}"
            )


# ---------------------------------------------------------------------------
# omega_f and omega_l: 231-avoiders <-> Dyck paths
# ---------------------------------------------------------------------------

def _split_at_max(pi: Perm) -> tuple[Perm, Perm]:
    pos = pi.index(len(pi))
    return pi[:pos], pi[pos + 1:]


def omega_f(pi: Sequence[int], check: bool = True) -> DyckPath:
    """First-return encoding: sigma n tau maps to U w(sigma) D w(std(tau))."""
    pi = check_permutation(pi)
    if check:
        _require_avoider(pi, ((2, 3, 1),))

    def build(p: Perm) -> str:
        if not p:
            return ""
        sigma, tau = _split_at_max(p)
        return "U" + build(sigma) + "D" + build(standardize(tau))

    return DyckPath(build(pi))


def omega_f_inv(path: DyckPath) -> Perm:
    def build(steps: str) -> Perm:
        if not steps:
            return ()
        height = 0
        for i, ch in enumerate(steps):
            height += 1 if ch == "U" else -1
            if height == 0:
                break
        sigma = build(steps[1:i])
        tau = build(steps[i + 1:])
        shift = len(sigma)
        n = len(steps) // 2
        return sigma + (n,) + tuple(v + shift for v in tau)

    return build(path.steps)


def omega_l(pi: Sequence[int], check: bool = True) -> DyckPath:
    """Last-return encoding: sigma n tau maps to w(std(tau)) U w(sigma) D."""
    pi = check_permutation(pi)
    if check:
        _require_avoider(pi, ((2, 3, 1),))

    def build(p: Perm) -> str:
        if not p:
            return ""
        sigma, tau = _split_at_max(p)
        return build(standardize(tau)) + "U" + build(sigma) + "D"

    return DyckPath(build(pi))


def omega_l_inv(path: DyckPath) -> Perm:
    def build(steps: str) -> Perm:
        if not steps:
            return ()
        height = 0
        start = 0
        for i, ch in enumerate(steps[:-1]):
            height += 1 if ch == "U" else -1
            if height == 0:
                start = i + 1
        tau = build(steps[:start])
        sigma = build(steps[start + 1:-1])
        shift = len(sigma)
        n = len(steps) // 2
        return sigma + (n,) + tuple(v + shift for v in tau)

    return build(path.steps)


# ---------------------------------------------------------------------------
# chi: 321-avoiders <-> Dyck paths
# ---------------------------------------------------------------------------

def chi(pi: Sequence[int], check: bool = True) -> DyckPath:
    """Staircase profile of the permutation array, tight to the diagonal.

    >>> str(chi((2, 4, 1, 3, 7, 5, 6)))
    'UUDUUDDDUUUDDD'
    """
    pi = check_permutation(pi)
    if check:
        _require_avoider(pi, ((3, 2, 1),))
    word = []
    height = 0
    running = 0
    for v in pi:
        running = max(running, v)
        word.append("U" * (running - height))
        word.append("D")
        height = running
    return DyckPath("".join(word))


def chi_inv(path: DyckPath, check: bool = True) -> Perm:
    """Peaks become weak excedances; leftover rows and columns pair up
    in increasing order to fill the positions below the diagonal."""
    n = path.semilength
    values: dict[int, int] = {}
    height = 0
    column = 0
    steps = path.steps
    for i, ch in enumerate(steps):
        if ch == "U":
            height += 1
        else:
            column += 1
            if i > 0 and steps[i - 1] == "U":
                values[column] = height  # peak cell
    free_cols = [c for c in range(1, n + 1) if c not in values]
    used_rows = set(values.values())
    free_rows = [r for r in range(1, n + 1) if r not in used_rows]
    for c, r in zip(free_cols, free_rows):
        values[c] = r
    pi = tuple(values[c] for c in range(1, n + 1))
    if check:
        pi = check_permutation(pi)
    return pi


# ---------------------------------------------------------------------------
# psi: Dyck paths <-> 2-Motzkin paths
# ---------------------------------------------------------------------------

def psi(path: DyckPath) -> TwoMotzkinPath:
    """Read the peak coloring off into a 2-Motzkin word of length m-1.

    >>> str(psi(DyckPath("UDUUDUUUDUDDUDDD")))
    'h1 u h1 h0 u d d'
    """
    m = path.semilength
    if m == 0:
        raise ValueError("psi is defined for nonempty Dyck paths only")
    steps = path.steps
    red = [False] * len(steps)
    for i in range(len(steps) - 1):
        if steps[i] == "U" and steps[i + 1] == "D":
            red[i] = red[i + 1] = True
    u_color = [red[i] for i, s in enumerate(steps) if s == "U"]
    d_color = [red[i] for i, s in enumerate(steps) if s == "D"]
    out = []
    for i in range(m - 1):
        ured, dred = u_color[i], d_color[i + 1]
        if not ured and dred:
            out.append("u")
        elif ured and not dred:
            out.append("d")
        elif not ured and not dred:
            out.append("h0")
        else:
            out.append("h1")
    return TwoMotzkinPath(tuple(out))


def psi_inv(alpha: TwoMotzkinPath) -> DyckPath:
    """Rebuild the Dyck path from the color data.

    Reconstruction rule: the word's i-th step determines the colors of the
    i-th U step and the (i+1)-th D step, and the first D and last U are red.
    In any Dyck path written as ascent/descent runs U^{a_1} D^{b_1} ...
    U^{a_q} D^{b_q}, the red U steps are exactly the last of each ascent run
    and the red D steps the first of each descent run, so the run lengths are
    the gaps between consecutive red U indices (resp. red D indices).  The
    round-trip tests certify that this inverts psi.
    """
    m = len(alpha.steps) + 1
    red_u = [i + 1 for i, tok in enumerate(alpha.steps) if tok in ("d", "h1")] + [m]
    red_d = [1] + [i + 2 for i, tok in enumerate(alpha.steps) if tok in ("u", "h1")]
    ascents = [red_u[0]] + [red_u[j] - red_u[j - 1] for j in range(1, len(red_u))]
    descents = [red_d[j + 1] - red_d[j] for j in range(len(red_d) - 1)]
    descents.append(m - red_d[-1] + 1)
    word = "".join("U" * a + "D" * b for a, b in zip(ascents, descents))
    return DyckPath(word)  # validation rejects ill-formed inputs


# ---------------------------------------------------------------------------
# phi bijections: pair-avoiders <-> binary words
# ---------------------------------------------------------------------------

def phi_213_231(pi: Sequence[int], check: bool = True) -> BinaryWord:
    """w_k = 1 if pi_k is the minimum of the suffix from k, 0 if the maximum.

    >>> str(phi_213_231((9, 1, 2, 3, 8, 4, 7, 6, 5)))
    '01110100'
    """
    pi = check_permutation(pi)
    if check:
        _require_avoider(pi, ((2, 1, 3), (2, 3, 1)))
    n = len(pi)
    if n == 0:
        raise ValueError("defined for nonempty permutations")
    bits = []
    lo, hi = 1, n
    for k in range(n - 1):
        if pi[k] == lo:
            bits.append("1")
            lo += 1
        elif pi[k] == hi:
            bits.append("0")
            hi -= 1
        else:
            raise DomainViolationError(
                f"{pi} is not determined by suffix minima/maxima at position {k + 1}"
            )
    return BinaryWord("".join(bits))


def phi_213_231_inv(w: BinaryWord) -> Perm:
    lo, hi = 1, len(w.bits) + 1
    out = []
    for ch in w.bits:
        if ch == "1":
            out.append(lo)
            lo += 1
        else:
            out.append(hi)
            hi -= 1
    out.append(lo)
    return tuple(out)


def phi_213_312(pi: Sequence[int], check: bool = True) -> BinaryWord:
    """w_k = 1 if the letter k appears before n in pi, else 0."""
    pi = check_permutation(pi)
    if check:
        _require_avoider(pi, ((2, 1, 3), (3, 1, 2)))
    n = len(pi)
    if n == 0:
        raise ValueError("defined for nonempty permutations")
    cut = pi.index(n)
    before = set(pi[:cut])
    return BinaryWord("".join("1" if k in before else "0" for k in range(1, n)))


def phi_213_312_inv(w: BinaryWord) -> Perm:
    n = len(w.bits) + 1
    before = [k for k in range(1, n) if w.bits[k - 1] == "1"]
    after = [k for k in range(1, n) if w.bits[k - 1] == "0"]
    return tuple(before) + (n,) + tuple(reversed(after))


def _rlmax_word(pi: Perm) -> BinaryWord:
    rl = perms.statistic_set(pi, "RLmax")
    return BinaryWord("".join("1" if k in rl else "0" for k in range(1, len(pi) + 1)))


def _lrmax_word(pi: Perm) -> BinaryWord:
    lr = perms.statistic_set(pi, "LRmax")
    return BinaryWord("".join("1" if k in lr else "0" for k in range(1, len(pi) + 1)))


def phi_123_132(pi: Sequence[int], check: bool = True) -> BinaryWord:
    """Indicator word of the right-to-left maxima (always ends in 1)."""
    pi = check_permutation(pi)
    if check:
        _require_avoider(pi, ((1, 2, 3), (1, 3, 2)))
    if not pi:
        raise ValueError("defined for nonempty permutations")
    return _rlmax_word(pi)


def phi_132_213(pi: Sequence[int], check: bool = True) -> BinaryWord:
    """Indicator word of the right-to-left maxima (always ends in 1)."""
    pi = check_permutation(pi)
    if check:
        _require_avoider(pi, ((1, 3, 2), (2, 1, 3)))
    if not pi:
        raise ValueError("defined for nonempty permutations")
    return _rlmax_word(pi)


def phi_231_321(pi: Sequence[int], check: bool = True) -> BinaryWord:
    """Indicator word of the left-to-right maxima (always ends in 1)."""
    pi = check_permutation(pi)
    if check:
        _require_avoider(pi, ((2, 3, 1), (3, 2, 1)))
    if not pi:
        raise ValueError("defined for nonempty permutations")
    return _lrmax_word(pi)


def _maxima_set_from_word(w: BinaryWord) -> set[int]:
    if not w.bits or w.bits[-1] != "1":
        raise ValueError(f"word {w.bits!r} does not end in 1")
    return {k for k, ch in enumerate(w.bits, start=1) if ch == "1"}


def reconstruct_from_maxima(maxima: set[int], variant: str,
                            n: int | None = None) -> Perm:
    """The unique avoider of length n with the given maxima set.

    The length defaults to max(maxima); an explicit n must itself belong to
    the set (the last letter read in the relevant direction is always a
    maximum).

    variants: ``rlmax_decreasing`` fills the gaps between consecutive
    right-to-left maxima with decreasing runs (avoids 123 and 132),
    ``rlmax_increasing`` with increasing runs (avoids 132 and 213), and
    ``lrmax_increasing`` places each left-to-right maximum before an
    increasing run (avoids 231 and 321).

    >>> reconstruct_from_maxima({2, 5, 9}, "rlmax_decreasing")
    (8, 7, 6, 9, 4, 3, 5, 1, 2)
    """
    if not maxima:
        if n:
            raise ValueError(f"length {n} requires {n} in the maxima set")
        return ()
    s = sorted(maxima)
    if any(v < 1 for v in s):
        raise ValueError("maxima must be positive integers")
    if n is None:
        n = s[-1]
    if n not in maxima or s[-1] != n:
        raise ValueError(f"the length {n} must be the set's maximum element")

    def down(a: int, b: int) -> list[int]:
        return list(range(b - 1, a, -1))

    def up(a: int, b: int) -> list[int]:
        return list(range(a + 1, b))

    out: list[int] = []
    if variant in ("rlmax_decreasing", "rlmax_increasing"):
        run = down if variant == "rlmax_decreasing" else up
        bounds = [0] + s
        for i in range(len(s) - 1, -1, -1):
            out.extend(run(bounds[i], bounds[i + 1]))
            out.append(s[i])
        return tuple(out)
    if variant == "lrmax_increasing":
        bounds = [0] + s
        for i in range(len(s)):
            out.append(s[i])
            out.extend(up(bounds[i], bounds[i + 1]))
        return tuple(out)
    raise ValueError(f"unknown variant {variant!r}")


def phi_123_132_inv(w: BinaryWord) -> Perm:
    return reconstruct_from_maxima(_maxima_set_from_word(w), "rlmax_decreasing")


def phi_132_213_inv(w: BinaryWord) -> Perm:
    return reconstruct_from_maxima(_maxima_set_from_word(w), "rlmax_increasing")


def phi_231_321_inv(w: BinaryWord) -> Perm:
    return reconstruct_from_maxima(_maxima_set_from_word(w), "lrmax_increasing")


# ---------------------------------------------------------------------------
# registry, apply/invert, and the transfer verifier
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Bijection:
    name: str
    domain_patterns: tuple[Perm, ...] | None  # None: domain is Dyck paths
    min_length: int
    forward: Callable
    backward: Callable
    # identities: (label, statistic on the domain object, statistic on image)
    identities: tuple[tuple[str, Callable, Callable], ...]


def _occ(factor: str, level0: bool = False):
    return lambda p: occ_factor(p, factor, level0_only=level0)


def _word_occ(factor: str):
    return lambda w: occ_factor(w, factor)


BIJECTIONS: dict[str, Bijection] = {}


def _register(b: Bijection):
    BIJECTIONS[b.name] = b


_register(Bijection(
    name="omega_f", domain_patterns=((2, 3, 1),), min_length=0,
    forward=omega_f, backward=omega_f_inv,
    identities=(
        ("bdes <-> occ_DUU", perms.bdes, _occ("DUU")),
        ("des <-> occ_DU", perms.des, _occ("DU")),
    ),
))
_register(Bijection(
    name="omega_l", domain_patterns=((2, 3, 1),), min_length=0,
    forward=omega_l, backward=omega_l_inv,
    identities=(
        ("pk <-> occ_DUU", perms.pk, _occ("DUU")),
        ("des <-> occ_DU", perms.des, _occ("DU")),
    ),
))
_register(Bijection(
    name="chi", domain_patterns=((3, 2, 1),), min_length=0,
    forward=chi, backward=chi_inv,
    identities=(
        ("des <-> occ_UDD", perms.des, _occ("UDD")),
        ("sdes <-> occ_UUDD^0", perms.sdes, _occ("UUDD", level0=True)),
        ("hibasc <-> hibasc", perms.hibasc, lambda p: path_statistic(p, "hibasc")),
        ("lobasc <-> lobasc", perms.lobasc, lambda p: path_statistic(p, "lobasc")),
        ("first letter > 1 <-> ini_UU",
         lambda pi: 1 if pi and pi[0] > 1 else 0,
         lambda p: path_statistic(p, "ini_UU")),
    ),
))
_register(Bijection(
    name="psi", domain_patterns=None, min_length=1,
    forward=psi, backward=psi_inv,
    identities=(
        ("pk = d + h1 + 1", lambda p: path_statistic(p, "pk"),
         lambda a: a.step_counts()["d"] + a.step_counts()["h1"] + 1),
        ("con = d", lambda p: path_statistic(p, "con"),
         lambda a: a.step_counts()["d"]),
    ),
))
_register(Bijection(
    name="phi_213_231", domain_patterns=((2, 1, 3), (2, 3, 1)), min_length=1,
    forward=phi_213_231, backward=phi_213_231_inv,
    identities=(("bdes <-> occ_01", perms.bdes, _word_occ("01")),),
))
_register(Bijection(
    name="phi_213_312", domain_patterns=((2, 1, 3), (3, 1, 2)), min_length=1,
    forward=phi_213_312, backward=phi_213_312_inv,
    identities=(("bdes <-> occ_01", perms.bdes, _word_occ("01")),),
))
_register(Bijection(
    name="phi_123_132", domain_patterns=((1, 2, 3), (1, 3, 2)), min_length=1,
    forward=phi_123_132, backward=phi_123_132_inv,
    identities=(("bdes <-> occ_10 + occ_011", perms.bdes,
                 lambda w: occ_factor(w, "10") + occ_factor(w, "011")),),
))
_register(Bijection(
    name="phi_132_213", domain_patterns=((1, 3, 2), (2, 1, 3)), min_length=1,
    forward=phi_132_213, backward=phi_132_213_inv,
    identities=(("bdes <-> occ_10 + occ_011", perms.bdes,
                 lambda w: occ_factor(w, "10") + occ_factor(w, "011")),),
))
_register(Bijection(
    name="phi_231_321", domain_patterns=((2, 3, 1), (3, 2, 1)), min_length=1,
    forward=phi_231_321, backward=phi_231_321_inv,
    identities=(("bdes <-> occ_001", perms.bdes, _word_occ("001")),),
))

# Statistic identities that factor through the reverse map: big descents of
# 123-avoiders match high/low big-ascent counts of the reversed 321-avoider's
# staircase path.
REVERSED_CHI_IDENTITIES: tuple[tuple[str, Callable, Callable], ...] = (
    ("bdes <-> hibasc + lobasc of chi(reverse)",
     perms.bdes,
     lambda p: path_statistic(p, "hibasc") + path_statistic(p, "lobasc")),
    ("rbdes <-> hibasc + lobasc + ini_UU of chi(reverse)",
     perms.rbdes,
     lambda p: (path_statistic(p, "hibasc") + path_statistic(p, "lobasc")
                + path_statistic(p, "ini_UU"))),
)


def apply(name: str, x, check: bool = True):
    """Apply a bijection by name to a domain object."""
    b = _lookup(name)
    if b.domain_patterns is None:
        if not isinstance(x, DyckPath):
            raise TypeError(f"{name} expects a DyckPath")
        return b.forward(x)
    return b.forward(x, check=check)


def invert(name: str, y):
    """Apply the inverse of a bijection by name to a codomain object."""
    return _lookup(name).backward(y)


def _lookup(name: str) -> Bijection:
    try:
        return BIJECTIONS[name]
    except KeyError:
        raise ValueError(f"unknown bijection {name!r}; "
                         f"have {sorted(BIJECTIONS)}") from None


@dataclass(frozen=True)
class IdentityResult:
    label: str
    population: int
    failures: int


@dataclass(frozen=True)
class TransferReport:
    bijection: str
    n: int
    population: int
    round_trip_failures: int
    identities: tuple[IdentityResult, ...]

    def all_pass(self) -> bool:
        return self.round_trip_failures == 0 and all(
            r.failures == 0 for r in self.identities)

    def to_json(self) -> dict:
        return {
            "bijection": self.bijection,
            "n": self.n,
            "population": self.population,
            "round_trip_failures": self.round_trip_failures,
            "identities": [
                {"label": r.label, "population": r.population,
                 "failures": r.failures}
                for r in self.identities
            ],
        }


def _domain_objects(b: Bijection, n: int):
    if b.domain_patterns is None:
        from .paths import iter_dyck_paths
        yield from iter_dyck_paths(n)
    else:
        yield from enumerate_avoiders(n, b.domain_patterns)


def verify_transfer(name: str, n: int) -> TransferReport:
    """Exhaustively check round trips and statistic identities at size n."""
    b = _lookup(name)
    if n < b.min_length:
        raise ValueError(f"{name} is defined from length {b.min_length} on")
    population = 0
    bad_round_trip = 0
    failures = [0] * len(b.identities)
    extra = REVERSED_CHI_IDENTITIES if name == "chi" else ()
    extra_failures = [0] * len(extra)
    extra_population = 0
    for x in _domain_objects(b, n):
        population += 1
        y = apply(name, x, check=False)
        if invert(name, y) != x:
            bad_round_trip += 1
        for i, (_, dom_stat, img_stat) in enumerate(b.identities):
            if dom_stat(x) != img_stat(y):
                failures[i] += 1
    if extra:
        for pi in enumerate_avoiders(n, ((1, 2, 3),)):
            extra_population += 1
            image = chi(perms.reverse(pi), check=False)
            for i, (_, dom_stat, img_stat) in enumerate(extra):
                if dom_stat(pi) != img_stat(image):
                    extra_failures[i] += 1
    identities = tuple(
        IdentityResult(label=lab, population=population, failures=f)
        for (lab, _, _), f in zip(b.identities, failures)
    ) + tuple(
        IdentityResult(label=lab, population=extra_population, failures=f)
        for (lab, _, _), f in zip(extra, extra_failures)
    )
    return TransferReport(bijection=name, n=n, population=population,
                          round_trip_failures=bad_round_trip,
                          identities=identities)
