"""Catalogue of enumeration routes per avoidance class.

For each size-1 or size-2 pattern class with a known enumeration, the entry
names the route that produces its big-descent distribution: either a
generating function id (expanded through a requested order) or a closed
counting formula b(n, k).  The brute-force enumeration is the oracle all of
these are verified against.
"""

from __future__ import annotations

from functools import partial

from . import genfun


def _series(gf_id: str):
    return partial(genfun.expand, gf_id)


def _p(*patterns: str):
    return tuple(sorted(tuple(int(c) for c in p) for p in patterns))


# (label, pattern set, series route or None for a formula route)
TABLE_CLASS_ROUTES: tuple[tuple[str, tuple, object], ...] = (
    ("series:B132", _p("132"), _series("B132")),
    ("formula:b231", _p("231"), None),
    ("series:B321", _p("321"), _series("B321")),
    ("formula:b123", _p("123"), None),
    ("formula:b213_231", _p("213", "231"), None),
    ("formula:b213_312", _p("213", "312"), None),
    ("series:B123_132", _p("123", "132"), _series("B123_132")),
    ("series:B132_213", _p("132", "213"), _series("B132_213")),
    ("series:B231_321", _p("231", "321"), _series("B231_321")),
    ("formula:b123_231", _p("123", "231"), None),
    ("formula:b132_321", _p("132", "321"), None),
    ("formula:b231_312", _p("231", "312"), None),
    ("series:B123_321", _p("123", "321"), _series("B123_321")),
)
