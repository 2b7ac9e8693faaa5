"""Equivalence classes of the big-descent distribution over avoider classes.

Two pattern sets are bdes-Wilf equivalent when the distribution of big
descents over their avoider classes agrees for every length.  Replacing a set
by its reverse-complement image is always such an equivalence (the trivial
ones).  The partitions below are the complete classifications for all pattern
sets of size 1 and size 2 inside S_3; ``class_partition_report`` re-derives
them by exhaustive pairwise comparison, which is how the package certifies
the classification.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perms import DistributionTable, Perm, distribution_table

PatternTuple = tuple[Perm, ...]


def _ps(*patterns: str) -> PatternTuple:
    return tuple(sorted(tuple(int(c) for c in p) for p in patterns))


SINGLETON_CLASSES: tuple[tuple[PatternTuple, ...], ...] = (
    (_ps("231"), _ps("312")),
    (_ps("132"), _ps("213")),
    (_ps("123"),),
    (_ps("321"),),
)

PAIR_CLASSES: tuple[tuple[PatternTuple, ...], ...] = (
    (_ps("213", "231"), _ps("132", "312"), _ps("213", "312"), _ps("132", "231")),
    (_ps("231", "321"), _ps("312", "321")),
    (_ps("123", "231"), _ps("123", "312")),
    (_ps("132", "321"), _ps("213", "321")),
    (_ps("123", "132"), _ps("123", "213"), _ps("132", "213")),
    (_ps("123", "321"),),
    (_ps("231", "312"),),
)

ALL_SINGLETONS: tuple[PatternTuple, ...] = tuple(
    ps for cls in SINGLETON_CLASSES for ps in cls)
ALL_PAIRS: tuple[PatternTuple, ...] = tuple(
    ps for cls in PAIR_CLASSES for ps in cls)

# Representatives used when scanning by class rather than by pattern set.
CLASS_REPRESENTATIVES: dict[PatternTuple, tuple[PatternTuple, ...]] = {
    cls[0]: cls for cls in SINGLETON_CLASSES + PAIR_CLASSES
}

# The one class whose distribution polynomials are not always real-rooted.
NON_REAL_ROOTED_CLASS: tuple[PatternTuple, ...] = (
    _ps("123", "132"), _ps("123", "213"), _ps("132", "213"))


def class_of(patterns: PatternTuple) -> tuple[PatternTuple, ...] | None:
    for cls in SINGLETON_CLASSES + PAIR_CLASSES:
        if tuple(sorted(patterns)) in cls:
            return cls
    return None


def bdes_polys(patterns: PatternTuple, max_n: int) -> list[DistributionTable]:
    return [distribution_table(n, patterns, "bdes") for n in range(max_n + 1)]


@dataclass(frozen=True)
class ClassComparison:
    left: PatternTuple
    right: PatternTuple
    same_class: bool
    equal_through: int          # compared lengths 0..equal_through
    witness_n: int | None       # smallest n where the distributions differ

    def consistent(self) -> bool:
        """Equal iff predicted equal, with a witness when predicted unequal."""
        return (self.witness_n is None) == self.same_class


@dataclass(frozen=True)
class PartitionReport:
    max_n: int
    comparisons: tuple[ClassComparison, ...]

    def all_consistent(self) -> bool:
        return all(c.consistent() for c in self.comparisons)

    def failures(self) -> list[ClassComparison]:
        return [c for c in self.comparisons if not c.consistent()]

    def to_json(self) -> dict:
        return {
            "max_n": self.max_n,
            "consistent": self.all_consistent(),
            "comparisons": [
                {
                    "left": [''.join(map(str, p)) for p in c.left],
                    "right": [''.join(map(str, p)) for p in c.right],
                    "same_class": c.same_class,
                    "witness_n": c.witness_n,
                }
                for c in self.comparisons
            ],
        }


def class_partition_report(max_n: int) -> PartitionReport:
    """Compare bdes distributions pairwise within each size.

    Every pair inside a listed class must agree for all n <= max_n, and every
    cross-class pair must exhibit a witness length.
    """
    comparisons: list[ClassComparison] = []
    for family in (ALL_SINGLETONS, ALL_PAIRS):
        tables = {ps: [distribution_table(n, ps, "bdes").counts
                       for n in range(max_n + 1)] for ps in family}
        for i, left in enumerate(family):
            for right in family[i + 1:]:
                witness = None
                for n in range(max_n + 1):
                    if tables[left][n] != tables[right][n]:
                        witness = n
                        break
                comparisons.append(ClassComparison(
                    left=left, right=right,
                    same_class=class_of(left) is class_of(right),
                    equal_through=max_n, witness_n=witness,
                ))
    return PartitionReport(max_n=max_n, comparisons=tuple(comparisons))
