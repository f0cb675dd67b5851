import pytest

from chowlab.bijections import (
    BijectionError,
    check_bijection,
    check_equivariance,
    phi,
    phi_inv,
    phi_tilde,
    phi_tilde_inv,
    random_permutations,
)
from chowlab.chow import FYMonomial, fy_basis_matroid, parse_monomial
from chowlab.codes import INF, ExtendedCode, format_code, parse_code
from chowlab.matroid import make_boolean

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


def test_b4_degree_two_table():
    for mono, code in B4_TABLE:
        assert format_code(phi(4, parse_monomial(mono)), "latex") == code
    assert len(fy_basis_matroid(make_boolean(4)).by_degree[2]) == len(B4_TABLE)


def test_phi_examples():
    c = phi(4, parse_monomial("x_{12}x_{1234}"))
    assert c.alpha == (1, 1, 2, 2) and c.f == (1, 1)
    c = phi(4, parse_monomial("x_{123}^2"))
    assert c.alpha == (1, 1, 1, 0) and c.f == (2,)
    assert phi(3, FYMonomial()).alpha == (0, 0, 0)


def test_phi_tilde_worked_examples():
    u1 = parse_monomial("x_{14}x_{1247}x_{1245679}^2")
    u2 = parse_monomial("x_{14}^2x_{1247}x_{1245679}^2")
    c1, c2 = phi_tilde(9, u1), phi_tilde(9, u2)
    assert format_code(c1, "latex") == r"01\infty022\hat{1}\infty\hat{2}"
    assert format_code(c2, "latex") == r"12\infty\hat{1}33\hat{2}\infty\hat{3}"
    assert c1.alpha == (0, 1, INF, 0, 2, 2, 1, INF, 2) and c1.f == (1, 2)
    assert c2.f == (1, 1, 2)
    assert phi_tilde_inv(9, c1) == u1 and phi_tilde_inv(9, c2) == u2
    e = phi_tilde(3, FYMonomial())
    assert e == ExtendedCode((INF, INF, INF)) and e.index == -1


def test_rejects_outside_basis():
    with pytest.raises(BijectionError):
        phi(3, parse_monomial("x_{1}"))
    with pytest.raises(BijectionError):
        phi(3, parse_monomial("x_{123}^3"))
    with pytest.raises(BijectionError):
        phi_tilde(3, parse_monomial("x_{12}^3"))
    with pytest.raises(BijectionError):
        phi_inv(4, parse_code("011*"))
    with pytest.raises(BijectionError):
        phi_tilde_inv(3, parse_code("011*"))


@pytest.mark.parametrize("n", range(1, 7))
def test_bijections_round_trip(n):
    assert check_bijection(n)
    assert check_bijection(n, augmented=True)


def test_images_are_valid_codes():
    for u in fy_basis_matroid(make_boolean(5)).all():
        c = phi(5, u)
        assert c.m == len(u.chain)
        assert c.index == u.degree


@pytest.mark.parametrize("n", range(1, 6))
def test_equivariance_exhaustive(n):
    report = check_equivariance(n)
    assert report.ok, str(report)


def test_equivariance_identity_and_random():
    assert check_equivariance(6, [tuple(range(1, 7))]).ok
    assert check_equivariance(6, random_permutations(6, 20, seed=3)).ok
