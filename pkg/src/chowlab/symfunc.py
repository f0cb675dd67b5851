"""Symmetric functions in the complete homogeneous basis.

Everything stays in the h-basis with integer coefficients: products of
h-monomials are again h-monomials (``h_lambda h_mu = h_{lambda + mu}``), which
is all the generating-function checks below need.
"""

from __future__ import annotations

import math
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .codes import code_orbits, enumerate_codes, enumerate_extended_codes

Partition = tuple[int, ...]


class SymError(ValueError):
    pass


def partition(parts: Iterable[int]) -> Partition:
    p = tuple(sorted(parts, reverse=True))
    if any(x <= 0 for x in p):
        raise SymError(f"partition parts must be positive: {p}")
    return p


class HPolynomial:
    """Integer combination of h_lambda; zero coefficients are dropped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[Partition, int] | None = None):
        self.coeffs: dict[Partition, int] = {}
        for lam, c in (coeffs or {}).items():
            if c:
                key = partition(lam)
                self.coeffs[key] = self.coeffs.get(key, 0) + c
        self.coeffs = {k: v for k, v in self.coeffs.items() if v}

    @classmethod
    def h(cls, *parts: int) -> HPolynomial:
        return cls({partition(parts): 1})

    def __add__(self, other: HPolynomial) -> HPolynomial:
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return HPolynomial(out)

    def __neg__(self) -> HPolynomial:
        return HPolynomial({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: HPolynomial) -> HPolynomial:
        return self + (-other)

    def __mul__(self, other) -> HPolynomial:
        if isinstance(other, int):
            return HPolynomial({k: v * other for k, v in self.coeffs.items()})
        return h_multiply(self, other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, HPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def weights(self) -> set[int]:
        return {sum(k) for k in self.coeffs}

    def is_h_positive(self) -> bool:
        return all(v > 0 for v in self.coeffs.values())

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for lam in sorted(self.coeffs, key=lambda p: (-sum(p), p), reverse=False):
            c = self.coeffs[lam]
            name = "h_" + ("∅" if not lam else "{" + ",".join(map(str, lam)) + "}")
            terms.append(name if c == 1 else f"{c}{name}")
        return " + ".join(terms)

    def to_json(self) -> list[dict]:
        return [
            {"lambda": list(lam), "coeff": c}
            for lam, c in sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        ]


def h_multiply(p: HPolynomial, q: HPolynomial) -> HPolynomial:
    out: dict[Partition, int] = {}
    for a, ca in p.coeffs.items():
        for b, cb in q.coeffs.items():
            key = partition(a + b)
            out[key] = out.get(key, 0) + ca * cb
    return HPolynomial(out)


ZERO = HPolynomial()
ONE = HPolynomial.h()


def h_n(n: int) -> HPolynomial:
    """h_n, with h_0 = 1."""
    return ONE if n == 0 else HPolynomial.h(n)


class TGradedSym:
    """Polynomial in t with HPolynomial coefficients."""

    def __init__(self, by_t: Mapping[int, HPolynomial] | None = None):
        self.by_t = {j: p for j, p in sorted((by_t or {}).items()) if p}

    def __add__(self, other: TGradedSym) -> TGradedSym:
        out = dict(self.by_t)
        for j, p in other.by_t.items():
            out[j] = out.get(j, ZERO) + p
        return TGradedSym(out)

    def __mul__(self, other) -> TGradedSym:
        if isinstance(other, HPolynomial):
            return TGradedSym({j: p * other for j, p in self.by_t.items()})
        if isinstance(other, int):
            return TGradedSym({j: p * other for j, p in self.by_t.items()})
        out: dict[int, HPolynomial] = {}
        for i, p in self.by_t.items():
            for j, q in other.by_t.items():
                out[i + j] = out.get(i + j, ZERO) + p * q
        return TGradedSym(out)

    def shift(self, k: int) -> TGradedSym:
        """Multiply by t^k."""
        return TGradedSym({j + k: p for j, p in self.by_t.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, TGradedSym) and self.by_t == other.by_t

    def __getitem__(self, j: int) -> HPolynomial:
        return self.by_t.get(j, ZERO)

    def degrees(self) -> range:
        return range(min(self.by_t, default=0), max(self.by_t, default=-1) + 1)

    def __repr__(self) -> str:
        if not self.by_t:
            return "0"
        return " + ".join(f"t^{j}({p!r})" for j, p in self.by_t.items())

    def to_json(self) -> list[list[dict]]:
        top = max(self.by_t, default=-1)
        return [self[j].to_json() for j in range(top + 1)]


def frobenius_of_orbits(contents: Iterable[Sequence[int]]) -> HPolynomial:
    """Frobenius characteristic of a permutation module, one h_lambda per orbit."""
    out: dict[Partition, int] = {}
    weights = set()
    for lam in contents:
        key = partition(lam)
        weights.add(sum(key))
        out[key] = out.get(key, 0) + 1
    if len(weights) > 1:
        raise SymError(f"orbit contents of mixed weights {sorted(weights)}")
    return HPolynomial(out)


def dimension(p: HPolynomial, n: int) -> int:
    """Specialise h_lambda to the multinomial n! / prod(lambda_i!)."""
    if p and p.weights() != {n}:
        raise SymError(f"not homogeneous of weight {n}: {p!r}")
    total = 0
    for lam, c in p.coeffs.items():
        m = math.factorial(n)
        for part in lam:
            m //= math.factorial(part)
        total += c * m
    return total


# --- polynomials in t --------------------------------------------------------


def _poly_trim(p: list[int]) -> list[int]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def eulerian(n: int) -> list[int]:
    """A_n(t) by counting descents over all permutations of [n]."""
    if n < 1:
        raise SymError("n must be positive")
    coeffs = [0] * n
    for perm in permutations(range(n)):
        coeffs[sum(perm[i] > perm[i + 1] for i in range(n - 1))] += 1
    return coeffs


def binomial_eulerian(n: int) -> list[int]:
    """1 + t * sum_{k=1..n} C(n, k) A_k(t)."""
    if n < 1:
        raise SymError("n must be positive")
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    for k in range(1, n + 1):
        for j, a in enumerate(eulerian(k)):
            coeffs[j + 1] += math.comb(n, k) * a
    return _poly_trim(coeffs)


# --- Frobenius series of code modules ----------------------------------------


def Q(n: int) -> TGradedSym:
    """Graded Frobenius characteristic of the code module V_n (t = index)."""
    if n < 0:
        raise SymError("n must be nonnegative")
    if n == 0:
        return TGradedSym({0: ONE})
    return TGradedSym(
        {j: frobenius_of_orbits(o.content for o in code_orbits(cs)) for j, cs in enumerate_codes(n).items()}
    )


def Q_tilde(n: int) -> TGradedSym:
    """Same for extended codes, with t-degree = index + 1."""
    if n < 1:
        raise SymError("n must be positive")
    return TGradedSym(
        {
            j + 1: frobenius_of_orbits(o.content for o in code_orbits(cs))
            for j, cs in enumerate_extended_codes(n).items()
        }
    )


def Q_tilde_from_recurrence(n: int) -> TGradedSym:
    """h_n + t * sum_{k=1..n} h_{n-k} Q_k."""
    rhs = TGradedSym({0: h_n(n)})
    for k in range(1, n + 1):
        rhs = rhs + (Q(k) * h_n(n - k)).shift(1)
    return rhs


def verify_recurrence(n: int) -> bool:
    return Q_tilde(n) == Q_tilde_from_recurrence(n)


def verify_gf_identity(N: int) -> bool:
    """Check sum_n Q_n z^n * (H(tz) - t H(z)) == (1 - t) H(z) through z^N.

    Both sides are compared coefficient by coefficient in z, each coefficient a
    polynomial in t over the h-basis; no series is inverted.
    """
    if N < 1:
        raise SymError("N must be positive")
    qs = [Q(n) for n in range(N + 1)]
    # coefficient of z^m in H(tz) - t H(z) is (t^m - t) h_m
    denom = [TGradedSym({m: h_n(m)}) + TGradedSym({1: -1 * h_n(m)}) for m in range(N + 1)]
    for deg in range(N + 1):
        lhs = TGradedSym()
        for n in range(deg + 1):
            lhs = lhs + qs[n] * denom[deg - n]
        rhs = TGradedSym({0: h_n(deg), 1: -1 * h_n(deg)})
        if lhs != rhs:
            return False
    return True


def slice_dimensions(q: TGradedSym, n: int) -> list[int]:
    return [dimension(q[j], n) for j in q.degrees()]
