"""Cross-verification suites driven by the CLI's verify subcommand.

Each suite runs a family of exhaustive checks and returns uniform records:
name, size parameter, population examined, pass flag, and a witness string on
failure.  The brute-force enumerations act as the trusted oracle against the
formulas, generating functions, and bijections.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import genfun, wilf
from .bijections import BIJECTIONS, verify_transfer
from .catalogue import TABLE_CLASS_ROUTES
from .perms import bdes, distribution_table, enumerate_avoiders


@dataclass(frozen=True)
class CheckResult:
    name: str
    n: int
    population: int
    ok: bool
    witness: str | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "n": self.n,
               "population": self.population, "pass": self.ok}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _result(name, n, population, ok, witness=None) -> CheckResult:
    return CheckResult(name=name, n=n, population=population, ok=ok,
                       witness=None if ok else witness)


def check_class_equalities(max_n: int) -> list[CheckResult]:
    report = wilf.class_partition_report(max_n)
    out = []
    for cmp in report.comparisons:
        label = ("equal" if cmp.same_class else "distinct")
        name = (f"class-{label}:"
                f"{'|'.join(''.join(map(str, p)) for p in cmp.left)}"
                f" vs {'|'.join(''.join(map(str, p)) for p in cmp.right)}")
        witness = (f"witness n={cmp.witness_n}" if cmp.witness_n is not None
                   else "no distinguishing length found")
        out.append(_result(name, max_n, max_n + 1, cmp.consistent(), witness))
    return out


def check_formulas(max_n: int) -> list[CheckResult]:
    """Every enumeration route against the brute-force distribution."""
    out = []
    for label, patterns, route in TABLE_CLASS_ROUTES:
        series = route(max_n) if callable(route) else None
        for n in range(max_n + 1):
            table = distribution_table(n, patterns, "bdes")
            expected = list(table.counts)
            if series is not None:
                got = genfun.series_row(series, n)
            else:
                got = [genfun.formula(label.split(":")[1], n=n, k=k)
                       for k in range(n + 1)]
            got = got + [0] * (n + 1 - len(got))
            out.append(_result(
                f"distribution:{label}", n, table.total(),
                got == expected,
                f"formula {got} vs brute force {expected}"))
    # r-Eulerian recurrence against brute force, and the Carlitz identity
    for r in range(3):
        for n in range(min(max_n, 7) + 1):
            rec = genfun.eulerian_r(n, r)
            brute = genfun._brute_eulerian_r(n, r)
            out.append(_result(f"eulerian-recurrence:r={r}", n,
                               sum(brute), rec == brute,
                               f"{rec} vs {brute}"))
        for n in range(1, min(max_n, 7) + 1):
            out.append(_result(f"carlitz:r={r}", n, 6,
                               genfun.carlitz_verify(n, r, 6)))
    # bdes over the unrestricted group matches the r=1 Eulerian polynomials
    for n in range(min(max_n, 8) + 1):
        table = distribution_table(n, (), "bdes")
        rec = genfun.eulerian_r(n, 1)
        rec = rec + [0] * (n + 1 - len(rec))
        out.append(_result("eulerian-r1-vs-bdes", n, table.total(),
                           tuple(rec) == table.counts,
                           f"{rec} vs {list(table.counts)}"))
    return out


def check_bijections(max_n: int) -> list[CheckResult]:
    out = []
    for name, b in sorted(BIJECTIONS.items()):
        for n in range(b.min_length, max_n + 1):
            report = verify_transfer(name, n)
            ok = report.all_pass()
            witness = (f"{report.round_trip_failures} round-trip failures; "
                       + "; ".join(f"{r.label}: {r.failures}"
                                   for r in report.identities))
            out.append(_result(f"bijection:{name}", n, report.population,
                               ok, witness))
    # omega maps are bijections onto the Dyck paths of the same semilength
    for name in ("omega_f", "omega_l"):
        b = BIJECTIONS[name]
        for n in range(max_n + 1):
            images = {str(b.forward(pi, check=False))
                      for pi in enumerate_avoiders(n, ((2, 3, 1),))}
            expected = genfun.catalan(n)
            out.append(_result(f"bijection:{name}:onto-dyck", n, expected,
                               len(images) == expected,
                               f"{len(images)} distinct images"))
    # composites that must preserve the big-descent count
    composites = (
        ("phi_213_312^-1 . phi_213_231", ((2, 1, 3), (2, 3, 1)),
         BIJECTIONS["phi_213_231"], BIJECTIONS["phi_213_312"]),
        ("phi_132_213^-1 . phi_123_132", ((1, 2, 3), (1, 3, 2)),
         BIJECTIONS["phi_123_132"], BIJECTIONS["phi_132_213"]),
    )
    for label, patterns, first, second in composites:
        for n in range(1, max_n + 1):
            population = failures = 0
            for pi in enumerate_avoiders(n, patterns):
                population += 1
                image = second.backward(first.forward(pi, check=False))
                if bdes(image) != bdes(pi):
                    failures += 1
            out.append(_result(f"composite:{label}", n, population,
                               failures == 0, f"{failures} failures"))
    return out


def check_genfun_crossroutes(order: int) -> list[CheckResult]:
    out = []
    for gf_id, info in sorted(genfun.GF_IDS.items()):
        if "functional" not in info:
            continue
        closed = genfun.expand(gf_id, order)
        functional = genfun.expand_functional(gf_id, order)
        ok = closed.coeffs == functional.coeffs
        witness = next((f"order {i}: {c} vs {f}" for i, (c, f) in
                        enumerate(zip(closed.coeffs, functional.coeffs))
                        if c != f), None)
        out.append(_result(f"dual-route:{gf_id}", order, order + 1, ok, witness))
    for which in ("B123", "Bgrave123"):
        closed = genfun.expand(which, order)
        pipeline = genfun.expand_by_peak_insertion(which, order)
        ok = closed.coeffs == pipeline.coeffs
        out.append(_result(f"pipeline-vs-closed:{which}", order, order + 1,
                           ok, "pipeline disagrees with closed form"))
    return out


SCOPES = {
    "class-equalities": check_class_equalities,
    "formulas": check_formulas,
    "bijections": check_bijections,
    "genfun-crossroutes": check_genfun_crossroutes,
}


def run_scope(scope: str, max_n: int) -> list[CheckResult]:
    if scope == "all":
        results = []
        for fn in SCOPES.values():
            results.extend(fn(max_n))
        return results
    try:
        return SCOPES[scope](max_n)
    except KeyError:
        raise ValueError(f"unknown scope {scope!r}; "
                         f"have {sorted(SCOPES) + ['all']}") from None
