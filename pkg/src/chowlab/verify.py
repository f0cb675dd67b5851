"""Verification suites shared by the CLI and the acceptance tests.

Each suite returns a :class:`RunReport` listing named checks with the expected
and the observed value. Suites are independent; ``all`` runs them in a fixed
order, in worker processes when ``CHOWLAB_THREADS`` is above 1.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from .bijections import check_bijection, check_equivariance, random_permutations
from .chow import (
    aug_chow_presentation,
    aug_fy_basis,
    chow_presentation,
    elem_to_flat,
    fy_basis_lattice,
    fy_basis_matroid,
    hilbert_series_fy,
    hilbert_series_quotient,
)
from .codes import enumerate_codes, enumerate_extended_codes, graded_counts
from .fans import aug_bergman_complex, certify_star_isomorphism, check_nested_pairs, h_vector
from .lattice import Elem, aug_building_set, augmented_lattice, lattice_of_flats, maximal_building_set
from .matroid import Matroid, make_boolean
from .symfunc import Q, Q_tilde, binomial_eulerian, eulerian, slice_dimensions, verify_gf_identity, verify_recurrence

SUITES = ("codes", "fy", "bijection", "oracle", "fans", "frobenius")

ORACLE_FLAT_LIMIT = 16


@dataclass
class Check:
    name: str
    expected: Any
    actual: Any

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    @property
    def status(self) -> str:
        return "pass" if self.ok else "FAIL"


@dataclass
class RunReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, expected, actual) -> Check:
        c = Check(name, expected, actual)
        self.checks.append(c)
        return c

    def extend(self, other: RunReport) -> None:
        self.checks.extend(other.checks)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def exit_status(self) -> int:
        return 0 if self.ok else 1

    def lines(self) -> list[str]:
        out = [f"{c.status}\t{c.name}\t{c.expected}\t{c.actual}" for c in self.checks]
        passed = sum(c.ok for c in self.checks)
        out.append(f"# suite={self.suite} checks={len(self.checks)} passed={passed} exit={self.exit_status}")
        return out

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [
                {"name": c.name, "status": c.status, "expected": repr(c.expected), "actual": repr(c.actual)}
                for c in self.checks
            ],
            "exit": self.exit_status,
        }


class SuiteError(ValueError):
    pass


def suite_codes(n: int) -> RunReport:
    r = RunReport("codes")
    r.add(f"codes n={n} graded counts = A_n", eulerian(n), graded_counts(enumerate_codes(n)))
    r.add(
        f"extended codes n={n} graded counts = binomial A_n",
        binomial_eulerian(n),
        graded_counts(enumerate_extended_codes(n)),
    )
    return r


def _as_sets(basis) -> dict[int, frozenset]:
    # lattice routes label by Elem, matroid routes by plain subsets
    def plain(u):
        return elem_to_flat(u) if u.chain and isinstance(u.chain[0], Elem) else u

    return {d: frozenset(plain(u) for u in us) for d, us in basis.by_degree.items() if us}


def suite_fy(n: int, m: Matroid | None = None) -> RunReport:
    r = RunReport("fy")
    if m is None:
        m = make_boolean(n)
        r.add(f"FY(B_{n}) Hilbert series = A_n", eulerian(n), hilbert_series_fy(fy_basis_matroid(m)))
        r.add(f"augmented FY(B_{n}) Hilbert series = binomial A_n", binomial_eulerian(n), hilbert_series_fy(aug_fy_basis(m)))
    lat = lattice_of_flats(m)
    _same_basis(r, f"{m}: lattice route = matroid route", fy_basis_matroid(m), fy_basis_lattice(lat, maximal_building_set(lat)))
    _same_basis(
        r,
        f"{m}: augmented lattice route = augmented matroid route",
        aug_fy_basis(m),
        fy_basis_lattice(augmented_lattice(m), aug_building_set(m)),
    )
    return r


def _same_basis(r: RunReport, name: str, expected, actual) -> None:
    """Elementwise comparison, reported as monomial counts."""
    a, b = _as_sets(expected), _as_sets(actual)
    size = sum(len(v) for v in a.values())
    r.add(name, f"{size} monomials", f"{size} monomials" if a == b else "mismatch")


def suite_bijection(n: int, sample_size: int = 100, seed: int = 0) -> RunReport:
    r = RunReport("bijection")
    r.add(f"phi n={n} round trips, degree = index", True, check_bijection(n))
    r.add(f"phi_tilde n={n} round trips, degree = index + 1", True, check_bijection(n, augmented=True))
    sample = None if n <= 5 else random_permutations(n, sample_size, seed)
    which = "all permutations" if sample is None else f"{sample_size} random permutations"
    rep = check_equivariance(n, sample)
    r.add(f"phi and phi_tilde n={n} equivariant ({which})", [], rep.failures)
    return r


def suite_oracle(m: Matroid, force: bool = False) -> RunReport:
    nflats = len(m.flat_masks)
    if nflats > ORACLE_FLAT_LIMIT and not force:
        raise SuiteError(f"{m} has {nflats} flats; the oracle is capped at {ORACLE_FLAT_LIMIT} (use --force)")
    r = RunReport("oracle")
    r.add(f"{m}: FY basis = quotient Hilbert function", hilbert_series_fy(fy_basis_matroid(m)), hilbert_series_quotient(chow_presentation(m)))
    r.add(
        f"{m}: augmented FY basis = quotient Hilbert function",
        hilbert_series_fy(aug_fy_basis(m)),
        hilbert_series_quotient(aug_chow_presentation(m)),
    )
    return r


def suite_fans(n: int, m: Matroid | None = None) -> RunReport:
    r = RunReport("fans")
    target = m if m is not None else make_boolean(n)
    r.add(f"{target}: nested sets <-> compatible pairs", True, check_nested_pairs(target))
    if m is None:
        f = aug_bergman_complex(target).f_vector()
        r.add(f"augmented Bergman complex of B_{n}: h-vector = binomial A_n", binomial_eulerian(n), h_vector(f))
        if n <= 5:
            r.add(f"star nested complex ~ augmented Bergman complex, n={n}", True, certify_star_isomorphism(n))
        r.add(f"star nested complex f-vector, n={n}", True, certify_star_isomorphism(n, exhaustive=False))
    return r


def suite_frobenius(n: int) -> RunReport:
    r = RunReport("frobenius")
    r.add(f"generating function identity through z^{n}", True, verify_gf_identity(n))
    for k in range(1, n + 1):
        r.add(f"Q_tilde recurrence n={k}", True, verify_recurrence(k))
    r.add(f"dim Q(n={n}) = A_n", eulerian(n), slice_dimensions(Q(n), n))
    r.add(f"dim Q_tilde(n={n}) = binomial A_n", binomial_eulerian(n), slice_dimensions(Q_tilde(n), n))
    return r


def _run_one(suite: str, n: int, m: Matroid | None, force: bool) -> RunReport:
    if suite == "codes":
        return suite_codes(n)
    if suite == "fy":
        return suite_fy(n, m)
    if suite == "bijection":
        return suite_bijection(n)
    if suite == "oracle":
        return suite_oracle(m if m is not None else make_boolean(n), force)
    if suite == "fans":
        return suite_fans(n, m)
    if suite == "frobenius":
        return suite_frobenius(n)
    raise SuiteError(f"unknown suite {suite!r}")


def threads() -> int:
    try:
        return max(1, int(os.environ.get("CHOWLAB_THREADS", "1")))
    except ValueError:
        return 1


def run_suite(suite: str, n: int = 4, m: Matroid | None = None, force: bool = False) -> RunReport:
    """Run one suite, or every suite for ``all``.

    With a matroid, the suites that only make sense for B_n (codes,
    bijection, frobenius) still use ``n``.
    """
    if suite != "all":
        return _run_one(suite, n, m, force)
    report = RunReport("all")
    workers = threads()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_run_one, s, n, m, force) for s in SUITES]
            parts = [f.result() for f in futures]
    else:
        parts = [_run_one(s, n, m, force) for s in SUITES]
    for part in parts:
        report.extend(part)
    return report
