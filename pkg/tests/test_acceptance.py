"""Acceptance criteria 1-8, each with its time budget.

Every test prints one ``PASS``/``FAIL`` line (with wall time) straight to the
terminal, then asserts correctness and the budget separately.
"""

import time

import pytest

from chowlab.bijections import check_bijection, check_equivariance, phi, phi_tilde, random_permutations
from chowlab.chow import (
    aug_chow_presentation,
    aug_fy_basis,
    chow_presentation,
    elem_to_flat,
    format_monomial,
    fy_basis_lattice,
    fy_basis_matroid,
    hilbert_series_quotient,
    parse_monomial,
)
from chowlab.codes import enumerate_codes, enumerate_extended_codes, format_code, graded_counts
from chowlab.fans import (
    CompatiblePair,
    Flag,
    aug_bergman_complex,
    aug_bergman_cones,
    certify_star_isomorphism,
    check_nested_pairs,
)
from chowlab.lattice import aug_building_set, augmented_lattice, lattice_of_flats, maximal_building_set
from chowlab.matroid import make_boolean, make_uniform
from chowlab.symfunc import (
    Q,
    Q_tilde,
    binomial_eulerian,
    eulerian,
    slice_dimensions,
    verify_gf_identity,
    verify_recurrence,
)


def run_criterion(capsys, number, title, budget, fn):
    start = time.perf_counter()
    failures = fn()
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < budget
    with capsys.disabled():
        status = "PASS" if ok else "FAIL"
        detail = "" if not failures else f" ; first failure: {failures[0]}"
        print(f"\n[criterion {number}] {status} {title} ({elapsed:.1f}s / budget {budget:.0f}s){detail}")
    assert not failures, failures
    assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget}s"


def expect(failures, label, expected, actual):
    if expected != actual:
        failures.append(f"{label}: expected {expected!r}, got {actual!r}")


C3_TABLE = ["000", r"01\hat{1}", r"10\hat{1}", r"1\hat{1}0", r"1\hat{1}1", r"11\hat{1}"]

EXT_C3 = {
    -1: {r"\infty\infty\infty"},
    0: {r"0\infty\infty", r"\infty0\infty", r"\infty\infty0", r"\infty00", r"0\infty0", r"00\infty", "000"},
    1: {r"1\hat{1}\infty", r"1\infty\hat{1}", r"\infty1\hat{1}", r"01\hat{1}", r"10\hat{1}", r"1\hat{1}0", r"1\hat{1}1"},
    2: {r"11\hat{1}"},
}

B4_TABLE = [
    ("x_{12}x_{1234}", r"1\hat{1}2\hat{2}"),
    ("x_{13}x_{1234}", r"12\hat{1}\hat{2}"),
    ("x_{14}x_{1234}", r"12\hat{2}\hat{1}"),
    ("x_{23}x_{1234}", r"21\hat{1}\hat{2}"),
    ("x_{24}x_{1234}", r"21\hat{2}\hat{1}"),
    ("x_{34}x_{1234}", r"2\hat{2}1\hat{1}"),
    ("x_{123}^2", r"11\hat{1}0"),
    ("x_{124}^2", r"110\hat{1}"),
    ("x_{134}^2", r"101\hat{1}"),
    ("x_{234}^2", r"011\hat{1}"),
    ("x_{1234}^2", r"11\hat{1}1"),
]


def test_criterion_1_code_counts(capsys):
    def body():
        f = []
        for n in range(1, 8):
            expect(f, f"|C_{n},j|", eulerian(n), graded_counts(enumerate_codes(n)))
        c3 = enumerate_codes(3)
        expect(f, "C_3 counts", [1, 4, 1], graded_counts(c3))
        expect(f, "C_3 table", C3_TABLE, [format_code(c, "latex") for cs in c3.values() for c in cs])
        return f

    run_criterion(capsys, 1, "code counts are Eulerian, C_3 table verbatim", 10, body)


def test_criterion_2_extended_code_counts(capsys):
    def body():
        f = []
        e3 = enumerate_extended_codes(3)
        expect(f, "extended C_3 counts", [1, 7, 7, 1], graded_counts(e3))
        expect(f, "extended C_3 listing", EXT_C3, {j: {format_code(c, "latex") for c in cs} for j, cs in e3.items()})
        for n in range(1, 8):
            expect(f, f"extended counts n={n}", binomial_eulerian(n), graded_counts(enumerate_extended_codes(n)))
        return f

    run_criterion(capsys, 2, "extended code counts are binomial Eulerian", 30, body)


def _bijection_body(augmented):
    f = []
    for n in range(1, 8):
        expect(f, f"round trip n={n}", True, check_bijection(n, augmented=augmented))
    for n in range(1, 8):
        sample = None if n <= 5 else random_permutations(n, 100, seed=n)
        report = check_equivariance(n, sample, augmented=augmented)
        expect(f, f"equivariance n={n}", [], report.failures[:1])
    return f


def test_criterion_3_phi(capsys):
    def body():
        f = _bijection_body(augmented=False)
        basis = fy_basis_matroid(make_boolean(4)).by_degree[2]
        table = [(format_monomial(u), format_code(phi(4, u), "latex")) for u in basis]
        expect(f, "A^2(B_4) table", B4_TABLE, table)
        return f

    run_criterion(capsys, 3, "phi is a graded equivariant bijection", 120, body)


def test_criterion_4_phi_tilde(capsys):
    def body():
        f = _bijection_body(augmented=True)
        u1 = parse_monomial("x_{14}x_{1247}x_{1245679}^2")
        u2 = parse_monomial("x_{14}^2x_{1247}x_{1245679}^2")
        expect(f, "u1", r"01\infty022\hat{1}\infty\hat{2}", format_code(phi_tilde(9, u1), "latex"))
        expect(f, "u2", r"12\infty\hat{1}33\hat{2}\infty\hat{3}", format_code(phi_tilde(9, u2), "latex"))
        return f

    run_criterion(capsys, 4, "phi_tilde is a graded equivariant bijection", 120, body)


ORACLE_MATROIDS = [make_boolean(n) for n in range(1, 5)] + [make_uniform(3, 2), make_uniform(4, 2), make_uniform(4, 3)]


def test_criterion_5_oracle(capsys):
    def body():
        f = []
        for m in ORACLE_MATROIDS:
            expect(f, f"{m} Chow", fy_basis_matroid(m).counts(), hilbert_series_quotient(chow_presentation(m)))
            expect(f, f"{m} augmented", aug_fy_basis(m).counts(), hilbert_series_quotient(aug_chow_presentation(m)))
        return f

    run_criterion(capsys, 5, "FY bases agree with the quotient Hilbert functions", 300, body)


def _flat_sets(basis):
    return {d: {elem_to_flat(u) for u in us} for d, us in basis.by_degree.items()}


def _plain_sets(basis):
    return {d: set(us) for d, us in basis.by_degree.items()}


def test_criterion_6_generic_route(capsys):
    def body():
        f = []
        for n in range(1, 6):
            m = make_boolean(n)
            lat = lattice_of_flats(m)
            expect(f, f"B_{n}", _plain_sets(fy_basis_matroid(m)), _flat_sets(fy_basis_lattice(lat, maximal_building_set(lat))))
        for m in [make_boolean(n) for n in range(1, 5)] + [make_uniform(3, 2)]:
            generic = fy_basis_lattice(augmented_lattice(m), aug_building_set(m))
            expect(f, f"{m} augmented", _plain_sets(aug_fy_basis(m)), _flat_sets(generic))
        return f

    run_criterion(capsys, 6, "generic nested-set basis equals the matroid bases", 60, body)


B2_FIGURE = {
    CompatiblePair(()),
    CompatiblePair((1,)), CompatiblePair((2,)),
    CompatiblePair((), Flag(((),))), CompatiblePair((), Flag(((1,),))), CompatiblePair((), Flag(((2,),))),
    CompatiblePair((1, 2)), CompatiblePair((1,), Flag(((1,),))), CompatiblePair((2,), Flag(((2,),))),
    CompatiblePair((), Flag(((), (1,)))), CompatiblePair((), Flag(((), (2,)))),
}


def test_criterion_7_fans(capsys):
    def body():
        f = []
        b2 = make_boolean(2)
        expect(f, "B_2 f-vector", (5, 5), aug_bergman_complex(b2).f_vector())
        expect(f, "B_2 cones", B2_FIGURE, {c.label for c in aug_bergman_cones(b2)})
        for m in [make_boolean(n) for n in range(1, 5)] + [make_uniform(3, 2)]:
            expect(f, f"{m} nested sets <-> pairs", True, check_nested_pairs(m))
        for n in range(1, 5):
            expect(f, f"star isomorphism n={n}", True, certify_star_isomorphism(n))
        expect(f, "star f-vector n=5", True, certify_star_isomorphism(5, exhaustive=False))
        return f

    run_criterion(capsys, 7, "fan face structures and nested-set models", 120, body)


def test_criterion_8_frobenius(capsys):
    def body():
        f = []
        expect(f, "generating function N=6", True, verify_gf_identity(6))
        for n in range(1, 7):
            expect(f, f"recurrence n={n}", True, verify_recurrence(n))
        for n in range(1, 8):
            expect(f, f"dim Q n={n}", eulerian(n), slice_dimensions(Q(n), n))
            expect(f, f"dim Q_tilde n={n}", binomial_eulerian(n), slice_dimensions(Q_tilde(n), n))
        return f

    run_criterion(capsys, 8, "Frobenius identities in the h-basis", 60, body)
