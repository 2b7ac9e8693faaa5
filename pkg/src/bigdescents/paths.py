"""Dyck paths, 2-Motzkin paths, and binary words, with factor statistics.

Height convention: U = +1, D = -1, starting at 0; "level 0" means an
occurrence whose first step starts at height 0.  Factor occurrences may
overlap (sliding-window counting).

Peak coloring: the U and D steps belonging to UD-factors (peaks) are red,
all other steps blue.  Within each maximal ascent run followed by a descent
run, exactly the last U and the first D are red.  The blue steps of a Dyck
path form a Dyck path again (its core); blue U and blue D steps are numbered
independently, each starting from 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union


@dataclass(frozen=True)
class DyckPath:
    """A balanced U/D word whose every prefix has at least as many U as D."""

    steps: str

    def __post_init__(self):
        if not DyckPath.is_valid(self.steps):
            raise ValueError(f"{self.steps!r} is not a Dyck word")

    @staticmethod
    def is_valid(steps: str) -> bool:
        height = 0
        for ch in steps:
            if ch == "U":
                height += 1
            elif ch == "D":
                height -= 1
            else:
                return False
            if height < 0:
                return False
        return height == 0

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def heights(self) -> list[int]:
        """Heights after each step (length = number of steps)."""
        out, h = [], 0
        for ch in self.steps:
            h += 1 if ch == "U" else -1
            out.append(h)
        return out

    def __str__(self):
        return self.steps

    def __len__(self):
        return len(self.steps)


@dataclass(frozen=True)
class TwoMotzkinPath:
    """A word over u, d, h0, h1 with balanced u/d and non-negative prefixes."""

    steps: tuple[str, ...]

    def __post_init__(self):
        if not TwoMotzkinPath.is_valid(self.steps):
            raise ValueError(f"{self.steps!r} is not a 2-Motzkin word")

    @staticmethod
    def is_valid(steps) -> bool:
        height = 0
        for tok in steps:
            if tok == "u":
                height += 1
            elif tok == "d":
                height -= 1
            elif tok not in ("h0", "h1"):
                return False
            if height < 0:
                return False
        return height == 0

    @classmethod
    def parse(cls, text: str) -> "TwoMotzkinPath":
        return cls(tuple(text.split()))

    def step_counts(self) -> dict[str, int]:
        counts = {"u": 0, "d": 0, "h0": 0, "h1": 0}
        for tok in self.steps:
            counts[tok] += 1
        return counts

    def __str__(self):
        return " ".join(self.steps)

    def __len__(self):
        return len(self.steps)


@dataclass(frozen=True)
class BinaryWord:
    """A word over {0,1}, stored most-significant-first as written."""

    bits: str

    def __post_init__(self):
        if not BinaryWord.is_valid(self.bits):
            raise ValueError(f"{self.bits!r} is not a binary word")

    @staticmethod
    def is_valid(bits: str) -> bool:
        return all(ch in "01" for ch in bits)

    def __str__(self):
        return self.bits

    def __len__(self):
        return len(self.bits)


Path = Union[DyckPath, BinaryWord]


def validate(kind: str, text: str) -> bool:
    """Check a serialized path against its type invariants without raising."""
    if kind == "dyck":
        return DyckPath.is_valid(text)
    if kind == "motzkin2":
        return TwoMotzkinPath.is_valid(tuple(text.split()))
    if kind == "binary":
        return BinaryWord.is_valid(text)
    raise ValueError(f"unknown path kind {kind!r}")


# ---------------------------------------------------------------------------
# factor statistics
# ---------------------------------------------------------------------------

def occ_factor(p: Path, factor: str, level0_only: bool = False) -> int:
    """Occurrences (possibly overlapping) of a factor; optionally only those
    starting at height 0 (Dyck paths only).

    >>> occ_factor(DyckPath("UUUDDUDDUDUUDD"), "UD")
    4
    >>> occ_factor(DyckPath("UUUDDUDDUDUUDD"), "UD", level0_only=True)
    1
    """
    if isinstance(p, BinaryWord):
        if level0_only:
            raise ValueError("level-0 restriction only applies to Dyck paths")
        word = p.bits
    elif isinstance(p, DyckPath):
        word = p.steps
    else:
        raise TypeError("occ_factor expects a DyckPath or BinaryWord")
    if not factor:
        raise ValueError("empty factor")
    count = 0
    height = 0
    for i in range(len(word) - len(factor) + 1):
        if word[i:i + len(factor)] == factor and (not level0_only or height == 0):
            count += 1
        if isinstance(p, DyckPath):
            height += 1 if word[i] == "U" else -1
    return count


def run_count(w: BinaryWord, r: int) -> int:
    """Maximal runs of 0's of length at least r.

    >>> run_count(BinaryWord("0000110111001"), 2)
    2
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    count = run = 0
    for ch in w.bits + "1":
        if ch == "0":
            run += 1
        else:
            if run >= r:
                count += 1
            run = 0
    return count


# ---------------------------------------------------------------------------
# decompositions and colored statistics
# ---------------------------------------------------------------------------

def return_decompose(p: DyckPath, which: str = "first") -> tuple[DyckPath, DyckPath]:
    """Split a nonempty path as U p1 D p2 (first return) or p1 U p2 D (last).

    >>> tuple(map(str, return_decompose(DyckPath("UUUDDUDDUDUUDD"), "first")))
    ('UUDDUD', 'UDUUDD')
    """
    if not p.steps:
        raise ValueError("cannot decompose the empty path")
    heights = p.heights()
    if which == "first":
        i = heights.index(0)  # end of the first return
        return DyckPath(p.steps[1:i]), DyckPath(p.steps[i + 1:])
    if which == "last":
        # last return: position after which the final excursion starts
        j = 0
        for idx in range(len(p.steps) - 1):
            if heights[idx] == 0:
                j = idx + 1
        return DyckPath(p.steps[:j]), DyckPath(p.steps[j + 1:-1])
    raise ValueError(f"unknown decomposition {which!r}")


@dataclass(frozen=True)
class PeakColoring:
    """Red/blue step coloring of a Dyck path ('r' = in a peak, 'b' = not)."""

    path: DyckPath
    colors: str

    def blue_core(self) -> DyckPath:
        return DyckPath("".join(s for s, c in zip(self.path.steps, self.colors)
                                if c == "b"))


def peak_coloring(p: DyckPath) -> PeakColoring:
    colors = ["b"] * len(p.steps)
    for i in range(len(p.steps) - 1):
        if p.steps[i] == "U" and p.steps[i + 1] == "D":
            colors[i] = colors[i + 1] = "r"
    return PeakColoring(path=p, colors="".join(colors))


def _peak_positions(p: DyckPath) -> list[int]:
    return [i for i in range(len(p.steps) - 1)
            if p.steps[i] == "U" and p.steps[i + 1] == "D"]


def path_statistic(p: DyckPath, name: str) -> int:
    """Path statistics: pk, con, hibasc, lobasc, ini_UU, returns.

    - pk: number of UD-factors.
    - con: indices i with the i-th and (i+1)-th D steps adjacent while the
      i-th and (i+1)-th U steps are not.
    - hibasc: peaks other than the first that are not immediately preceded
      by another peak.
    - lobasc: indices l with the l-th and (l+1)-th blue D steps adjacent
      while the l-th and (l+1)-th blue U steps are not.
    - ini_UU: 1 if the path starts with UU.
    - returns: visits to height 0 after the start.
    """
    steps = p.steps
    if name == "pk":
        return occ_factor(p, "UD")
    if name == "ini_UU":
        return 1 if steps.startswith("UU") else 0
    if name == "returns":
        return sum(1 for h in p.heights() if h == 0)
    if name == "con":
        ups = [i for i, s in enumerate(steps) if s == "U"]
        downs = [i for i, s in enumerate(steps) if s == "D"]
        return sum(1 for i in range(len(downs) - 1)
                   if downs[i + 1] == downs[i] + 1 and ups[i + 1] != ups[i] + 1)
    if name == "hibasc":
        peaks = _peak_positions(p)
        return sum(1 for j in range(1, len(peaks))
                   if peaks[j] != peaks[j - 1] + 2)
    if name == "lobasc":
        coloring = peak_coloring(p)
        blue_u = [i for i, (s, c) in enumerate(zip(steps, coloring.colors))
                  if s == "U" and c == "b"]
        blue_d = [i for i, (s, c) in enumerate(zip(steps, coloring.colors))
                  if s == "D" and c == "b"]
        return sum(1 for l in range(len(blue_d) - 1)
                   if blue_d[l + 1] == blue_d[l] + 1 and blue_u[l + 1] != blue_u[l] + 1)
    raise ValueError(f"unknown path statistic {name!r}")


# ---------------------------------------------------------------------------
# exhaustive generators (oracles for the verification suites)
# ---------------------------------------------------------------------------

def iter_dyck_paths(m: int) -> Iterator[DyckPath]:
    """All Dyck paths of semilength m, in lexicographic order (D < U)."""
    if m < 0:
        raise ValueError("semilength must be non-negative")

    def walk(prefix: list[str], ups: int, height: int):
        if len(prefix) == 2 * m:
            yield DyckPath("".join(prefix))
            return
        if height > 0:
            prefix.append("D")
            yield from walk(prefix, ups, height - 1)
            prefix.pop()
        if ups < m:
            prefix.append("U")
            yield from walk(prefix, ups + 1, height + 1)
            prefix.pop()

    yield from walk([], 0, 0)


def iter_two_motzkin(n: int) -> Iterator[TwoMotzkinPath]:
    """All 2-Motzkin paths of length n."""
    if n < 0:
        raise ValueError("length must be non-negative")

    def walk(prefix: list[str], height: int):
        if len(prefix) == n:
            if height == 0:
                yield TwoMotzkinPath(tuple(prefix))
            return
        for tok in ("d", "h0", "h1", "u"):
            if tok == "d" and height == 0:
                continue
            if tok == "u" and height + 1 > n - len(prefix) - 1:
                continue  # cannot come back down in time
            prefix.append(tok)
            yield from walk(prefix, height + (tok == "u") - (tok == "d"))
            prefix.pop()

    yield from walk([], 0)


def iter_binary_words(n: int) -> Iterator[BinaryWord]:
    if n < 0:
        raise ValueError("length must be non-negative")
    for bits in range(2 ** n):
        yield BinaryWord(format(bits, f"0{n}b") if n else "")
