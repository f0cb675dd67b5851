"""Equivariant bijections between FY bases of Boolean matroids and codes.

``phi`` sends ``x_{F_1}^{a_1} ... x_{F_k}^{a_k}`` in FY(B_n) to the code with
letter j on ``F_j - F_{j-1}``, 0 off ``F_k``, and ``f(j) = a_j``.

``phi_tilde`` handles the augmented basis. If ``a_1 = 1`` the letters are
shifted down by one (``F_1`` gets 0) and ``f(j) = a_{j+1}`` for
``j = 1..k-1``; if ``a_1 >= 2`` the letters are j on ``F_j - F_{j-1}`` with
``f(1) = a_1 - 1`` and ``f(j) = a_j`` otherwise. In both cases infinity sits
off ``F_k``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Sequence

from .chow import FYMonomial, act_fy, aug_fy_basis, fy_basis_matroid
from .codes import (
    INF,
    Code,
    CodeError,
    ExtendedCode,
    act_code,
    enumerate_codes,
    enumerate_extended_codes,
)
from .matroid import make_boolean


class BijectionError(ValueError):
    pass


def _in_boolean_basis(n: int, u: FYMonomial, augmented: bool) -> bool:
    """Bounds of FY(B_n) (or its augmented version) with rank = cardinality."""
    prev: frozenset[int] = frozenset()
    ground = frozenset(range(1, n + 1))
    for pos, (flat, a) in enumerate(zip(u.chain, u.exps)):
        cur = frozenset(flat)
        if not (prev < cur <= ground):
            return False
        bound = len(cur) if augmented and pos == 0 else len(cur) - len(prev) - 1
        if not 1 <= a <= bound:
            return False
        prev = cur
    return True


def _layers(n: int, u: FYMonomial) -> list[tuple[int, ...]]:
    prev: set[int] = set()
    out = []
    for flat in u.chain:
        if not set(flat) <= set(range(1, n + 1)):
            raise BijectionError(f"{u} is not a monomial over subsets of [{n}]")
        out.append(tuple(sorted(set(flat) - prev)))
        prev = set(flat)
    return out


def phi(n: int, u: FYMonomial) -> Code:
    if not _in_boolean_basis(n, u, augmented=False):
        raise BijectionError(f"{u} is not in FY(B_{n})")
    alpha = [0] * n
    for j, layer in enumerate(_layers(n, u), start=1):
        for i in layer:
            alpha[i - 1] = j
    return Code(tuple(alpha), u.exps)


def phi_inv(n: int, c: Code) -> FYMonomial:
    if not isinstance(c, Code) or isinstance(c, ExtendedCode) or c.n != n:
        raise BijectionError(f"expected a code of length {n}")
    chain = tuple(
        tuple(i + 1 for i, x in enumerate(c.alpha) if 1 <= x <= j) for j in range(1, c.m + 1)
    )
    return FYMonomial(chain, c.f)


def phi_tilde(n: int, u: FYMonomial) -> ExtendedCode:
    if not _in_boolean_basis(n, u, augmented=True):
        raise BijectionError(f"{u} is not in the augmented FY basis of B_{n}")
    alpha: list = [INF] * n
    if not u.chain:
        return ExtendedCode(tuple(alpha))
    shift = 1 if u.exps[0] == 1 else 0
    for j, layer in enumerate(_layers(n, u), start=1):
        for i in layer:
            alpha[i - 1] = j - shift
    if shift:
        f = u.exps[1:]
    else:
        f = (u.exps[0] - 1, *u.exps[1:])
    return ExtendedCode(tuple(alpha), tuple(f))


def phi_tilde_inv(n: int, c: ExtendedCode) -> FYMonomial:
    if not isinstance(c, ExtendedCode) or c.n != n:
        raise BijectionError(f"expected an extended code of length {n}")
    if c.index == -1:
        return FYMonomial()
    # the a_1 = 1 branch is exactly the one that writes 0s
    if 0 in c.alpha:
        chain = tuple(
            tuple(i + 1 for i, x in enumerate(c.alpha) if x != INF and x <= j - 1)
            for j in range(1, c.m + 2)
        )
        exps = (1, *c.f)
    else:
        chain = tuple(
            tuple(i + 1 for i, x in enumerate(c.alpha) if x != INF and x <= j)
            for j in range(1, c.m + 1)
        )
        exps = (c.f[0] + 1, *c.f[1:])
    return FYMonomial(chain, exps)


@dataclass
class EquivarianceReport:
    n: int
    checked: int = 0
    failures: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self) -> str:
        status = "pass" if self.ok else f"FAIL, first counterexample {self.failures[0]}"
        return f"n={self.n}: {self.checked} checks, {status}"


def random_permutations(n: int, count: int, seed: int = 0) -> list[tuple[int, ...]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        p = list(range(1, n + 1))
        rng.shuffle(p)
        out.append(tuple(p))
    return out


def check_equivariance(
    n: int, sample: Iterable[Sequence[int]] | None = None, augmented: bool | None = None
) -> EquivarianceReport:
    """Check ``phi(sigma.u) == sigma.phi(u)`` on the whole basis.

    ``sample`` defaults to all of S_n. ``augmented`` selects phi_tilde only
    (True), phi only (False) or both (None).
    """
    perms = list(permutations(range(1, n + 1))) if sample is None else [tuple(s) for s in sample]
    report = EquivarianceReport(n)
    jobs = []
    if augmented in (None, False):
        jobs.append((phi, fy_basis_matroid(make_boolean(n)).all()))
    if augmented in (None, True):
        jobs.append((phi_tilde, aug_fy_basis(make_boolean(n)).all()))
    for fn, basis in jobs:
        for u in basis:
            image = fn(n, u)
            for s in perms:
                report.checked += 1
                lhs = fn(n, act_fy(s, u))
                rhs = act_code(s, image)
                if lhs != rhs:
                    report.failures.append((fn.__name__, str(u), s, str(lhs), str(rhs)))
                    if len(report.failures) >= 10:
                        return report
    return report


def check_bijection(n: int, augmented: bool = False) -> bool:
    """Round trip both ways between the graded basis and the graded codes."""
    if augmented:
        basis, codes = aug_fy_basis(make_boolean(n)), enumerate_extended_codes(n)
        fwd, back, shift = phi_tilde, phi_tilde_inv, -1
    else:
        basis, codes = fy_basis_matroid(make_boolean(n)), enumerate_codes(n)
        fwd, back, shift = phi, phi_inv, 0
    for d, monos in basis.by_degree.items():
        images = []
        for u in monos:
            c = fwd(n, u)
            if c.index != d + shift or back(n, c) != u:
                return False
            images.append(c)
        if sorted(images) != sorted(codes.get(d + shift, [])):
            return False
    for j, cs in codes.items():
        for c in cs:
            try:
                if fwd(n, back(n, c)) != c:
                    return False
            except (BijectionError, CodeError):
                return False
    return True
