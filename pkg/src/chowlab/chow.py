"""Chow rings of matroids and atomic lattices.

Two independent routes to the graded dimensions:

* monomial bases of Feichtner-Yuzvinsky type, enumerated either generically
  from a lattice and building set (:func:`fy_basis_lattice`) or directly from
  a matroid (:func:`fy_basis_matroid`, :func:`aug_fy_basis`);
* the Hilbert function of the presented quotient, computed by exact rational
  elimination inside each graded piece of the Stanley-Reisner ring
  (:func:`hilbert_quotient`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Hashable, Iterable, Sequence

from . import linalg
from .lattice import Elem, FiniteLattice, atom_distance, nested_sets
from .matroid import Matroid, Subset, from_mask

Var = tuple  # ("x", flat) or ("y", i)


@dataclass(frozen=True)
class FYMonomial:
    """``x_{G_1}^{a_1} ... x_{G_k}^{a_k}`` over an increasing chain of labels.

    Labels are flats (sorted tuples of ground elements) for matroid bases and
    :class:`Elem` for the generic lattice construction. The empty chain is 1.
    """

    chain: tuple[Hashable, ...] = ()
    exps: tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.chain) != len(self.exps):
            raise ValueError("chain and exponent lengths differ")
        if any(a < 1 for a in self.exps):
            raise ValueError("exponents must be positive")

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def __str__(self) -> str:
        return format_monomial(self)


def _label_text(label) -> str:
    if isinstance(label, Elem):
        return str(label)
    if not label:
        return "∅"
    sep = "" if max(label) < 10 else ","
    return sep.join(str(i) for i in label)


def format_monomial(u: FYMonomial) -> str:
    if not u.chain:
        return "1"
    out = []
    for g, a in zip(u.chain, u.exps):
        out.append(f"x_{{{_label_text(g)}}}" + (f"^{a}" if a > 1 else ""))
    return "".join(out)


_MONO_RE = re.compile(r"x_\{([^}]*)\}(?:\^(\d+))?")


def parse_monomial(text: str) -> FYMonomial:
    """Parse ``x_{14}x_{1247}x_{1245679}^2`` (or ``1``) over ground subsets.

    Flats with elements above 9 are written with commas: ``x_{1,10}``.
    """
    text = text.strip().replace(" ", "")
    if text == "1":
        return FYMonomial()
    pos = 0
    chain, exps = [], []
    for m in _MONO_RE.finditer(text):
        if m.start() != pos:
            break
        body = m.group(1)
        if body in ("", "∅"):
            flat: Subset = ()
        elif "," in body:
            flat = tuple(sorted(int(t) for t in body.split(",")))
        else:
            flat = tuple(sorted(int(ch) for ch in body))
        chain.append(flat)
        exps.append(int(m.group(2) or 1))
        pos = m.end()
    if pos != len(text) or not chain:
        raise ValueError(f"cannot parse monomial {text!r}")
    order = sorted(range(len(chain)), key=lambda i: (len(chain[i]), chain[i]))
    return FYMonomial(tuple(chain[i] for i in order), tuple(exps[i] for i in order))


@dataclass
class GradedBasis:
    by_degree: dict[int, list[FYMonomial]] = field(default_factory=dict)

    def counts(self) -> list[int]:
        top = max(self.by_degree, default=0)
        return [len(self.by_degree.get(d, [])) for d in range(top + 1)]

    def all(self) -> list[FYMonomial]:
        return [u for d in sorted(self.by_degree) for u in self.by_degree[d]]

    def __len__(self) -> int:
        return sum(len(v) for v in self.by_degree.values())

    def to_json(self) -> list[dict]:
        return [
            {
                "degree": d,
                "monomials": [
                    {"chain": [_label_json(g) for g in u.chain], "exps": list(u.exps)}
                    for u in self.by_degree[d]
                ],
            }
            for d in sorted(self.by_degree)
        ]


def _label_json(label):
    if isinstance(label, Elem):
        return {"kind": label.kind, "members": list(label.members)}
    return list(label)


def _graded(monos: Iterable[FYMonomial], key) -> GradedBasis:
    by_degree: dict[int, list[FYMonomial]] = {0: []}
    for u in monos:
        by_degree.setdefault(u.degree, []).append(u)
    for d in by_degree:
        by_degree[d].sort(key=lambda u: (tuple(key(g) for g in u.chain), u.exps))
    return GradedBasis(dict(sorted(by_degree.items())))


def hilbert_series_fy(basis: GradedBasis) -> list[int]:
    """Coefficients of the Hilbert series, lowest degree first."""
    return basis.counts()


# --- bases -------------------------------------------------------------------


def fy_basis_lattice(lat: FiniteLattice, g: Iterable[Elem]) -> GradedBasis:
    """Monomial basis of D(L, G) read off nested sets and atom distances.

    For a nested set N and a member G, let G' be the join of the members of N
    strictly below G (the bottom if there are none); the exponent of x_G runs
    over ``1 <= a < d(G', G)``.
    """
    dist: dict[tuple[int, int], int] = {}
    monos = []
    for nested in nested_sets(lat, g):
        members = sorted(lat.idx(e) for e in nested)
        ranges = []
        for h in members:
            below = lat.join_all(o for o in members if lat.lt(o, h))
            key = (below, h)
            if key not in dist:
                dist[key] = atom_distance(lat, below, h)
            ranges.append(range(1, dist[key]))
        chain = tuple(lat.elements[i] for i in members)
        for exps in product(*ranges):
            monos.append(FYMonomial(chain, exps))
    return _graded(monos, lat.idx)


def _flat_key(m: Matroid):
    def key(flat: Subset):
        return (m.rank_mask(_mask(flat)), len(flat), flat)

    return key


def _mask(s: Iterable[int]) -> int:
    out = 0
    for i in s:
        out |= 1 << (i - 1)
    return out


def _chains(m: Matroid, first_ok, gap_ok):
    """Yield chains of flats (as masks) with their ranks, depth first."""
    flats = m.flat_masks
    ranks = {f: m.rank_mask(f) for f in flats}

    def rec(prefix: list[int]):
        yield list(prefix)
        last = prefix[-1] if prefix else None
        for f in flats:
            if last is None:
                if not first_ok(ranks[f]):
                    continue
            elif not (f != last and f & last == last and gap_ok(ranks[f] - ranks[last])):
                continue
            prefix.append(f)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


def fy_basis_matroid(m: Matroid) -> GradedBasis:
    """FY basis of A(M): chains of nonempty flats with
    ``1 <= a_i <= rk(F_i) - rk(F_{i-1}) - 1`` (F_0 the empty flat)."""
    monos = []
    for chain in _chains(m, lambda r: r >= 2, lambda gap: gap >= 2):
        prev = 0
        ranges = []
        for f in chain:
            r = m.rank_mask(f)
            ranges.append(range(1, r - prev))
            prev = r
        flats = tuple(from_mask(f) for f in chain)
        for exps in product(*ranges):
            monos.append(FYMonomial(flats, exps))
    return _graded(monos, _flat_key(m))


def aug_fy_basis(m: Matroid) -> GradedBasis:
    """Basis of the augmented Chow ring: ``1 <= a_1 <= rk(F_1)`` and
    ``1 <= a_i <= rk(F_i) - rk(F_{i-1}) - 1`` for ``i >= 2``."""
    monos = []
    for chain in _chains(m, lambda r: r >= 1, lambda gap: gap >= 2):
        ranges = []
        prev = None
        for f in chain:
            r = m.rank_mask(f)
            ranges.append(range(1, r + 1) if prev is None else range(1, r - prev))
            prev = r
        flats = tuple(from_mask(f) for f in chain)
        for exps in product(*ranges):
            monos.append(FYMonomial(flats, exps))
    return _graded(monos, _flat_key(m))


def in_fy_basis(m: Matroid, u: FYMonomial) -> bool:
    """Membership test for fy_basis_matroid, written against the definition."""
    prev_mask, prev_rank = 0, 0
    for flat, a in zip(u.chain, u.exps):
        f = _mask(flat)
        if m.closure_mask(f) != f or f & prev_mask != prev_mask or f == prev_mask:
            return False
        r = m.rank_mask(f)
        if not 1 <= a <= r - prev_rank - 1:
            return False
        prev_mask, prev_rank = f, r
    return True


def in_aug_fy_basis(m: Matroid, u: FYMonomial) -> bool:
    prev_mask, prev_rank = 0, None
    for flat, a in zip(u.chain, u.exps):
        f = _mask(flat)
        if m.closure_mask(f) != f:
            return False
        if prev_rank is None:
            r = m.rank_mask(f)
            if not 1 <= a <= r:
                return False
        else:
            if f & prev_mask != prev_mask or f == prev_mask:
                return False
            r = m.rank_mask(f)
            if not 1 <= a <= r - prev_rank - 1:
                return False
        prev_mask, prev_rank = f, r
    return True


def star_to_flat(u: FYMonomial) -> FYMonomial:
    """Translate a monomial over starred flats F_* of the augmented lattice
    into one over plain flats F."""
    if any(not isinstance(g, Elem) or g.kind != "star" for g in u.chain):
        raise ValueError(f"{u} is not supported on starred flats")
    return FYMonomial(tuple(g.members for g in u.chain), u.exps)


def elem_to_flat(u: FYMonomial) -> FYMonomial:
    return FYMonomial(tuple(g.members for g in u.chain), u.exps)


def act_fy(sigma: Sequence[int], u: FYMonomial) -> FYMonomial:
    """Relabel the flats of ``u`` by a permutation of the ground set.

    ``sigma[i-1]`` is the image of ``i``. Each flat F is sent to
    ``{i : sigma(i) in F}``, the relabelling that matches the positional action
    ``alpha -> (alpha_{sigma(1)}, ..., alpha_{sigma(n)})`` on codes.
    """
    inv = {s: i + 1 for i, s in enumerate(sigma)}
    pairs = sorted(
        ((tuple(sorted(inv[x] for x in flat)), a) for flat, a in zip(u.chain, u.exps)),
        key=lambda p: len(p[0]),
    )
    return FYMonomial(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))


# --- presentations and the Hilbert-function oracle ---------------------------


@dataclass(frozen=True)
class Presentation:
    """Quotient of a Stanley-Reisner ring by linear forms.

    ``nonfaces`` are index pairs (i, j) with x_i x_j in the Stanley-Reisner
    ideal; ``linear_forms`` map variable indices to integer coefficients.
    """

    variables: tuple[Var, ...]
    nonfaces: frozenset[tuple[int, int]]
    linear_forms: tuple[dict[int, int], ...]

    def var_name(self, i: int) -> str:
        kind, label = self.variables[i]
        if kind == "y":
            return f"y_{label}"
        return f"x_{{{_label_text(label)}}}"

    def compatible(self, i: int, j: int) -> bool:
        return i == j or (min(i, j), max(i, j)) not in self.nonfaces


def _pair(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


def chow_presentation(m: Matroid) -> Presentation:
    flats = [f for f in m.flat_masks if f]
    variables = tuple(("x", from_mask(f)) for f in flats)
    nonfaces = frozenset(
        _pair(i, j)
        for i, j in combinations(range(len(flats)), 2)
        if flats[i] & flats[j] not in (flats[i], flats[j])
    )
    forms = tuple(
        {k: 1 for k, f in enumerate(flats) if f >> (e - 1) & 1} for e in range(1, m.n + 1)
    )
    return Presentation(variables, nonfaces, forms)


def aug_chow_presentation(m: Matroid) -> Presentation:
    flats = [f for f in m.flat_masks if f != m.full_mask]
    ys = [("y", i) for i in range(1, m.n + 1)]
    variables = tuple(ys + [("x", from_mask(f)) for f in flats])
    off = m.n
    nonfaces = set()
    for i, j in combinations(range(len(flats)), 2):
        if flats[i] & flats[j] not in (flats[i], flats[j]):
            nonfaces.add(_pair(off + i, off + j))
    for e in range(1, m.n + 1):
        for k, f in enumerate(flats):
            if not f >> (e - 1) & 1:
                nonfaces.add(_pair(e - 1, off + k))
    forms = []
    for e in range(1, m.n + 1):
        form = {e - 1: 1}
        for k, f in enumerate(flats):
            if not f >> (e - 1) & 1:
                form[off + k] = -1
        forms.append(form)
    return Presentation(variables, frozenset(nonfaces), tuple(forms))


Monomial = tuple[tuple[int, int], ...]  # sorted (variable index, exponent) pairs


def _faces(p: Presentation, max_size: int) -> list[tuple[int, ...]]:
    nv = len(p.variables)
    out: list[tuple[int, ...]] = [()]

    def rec(face: list[int], start: int):
        if len(face) == max_size:
            return
        for v in range(start, nv):
            if all(p.compatible(v, w) for w in face):
                face.append(v)
                out.append(tuple(face))
                rec(face, v + 1)
                face.pop()

    rec([], 0)
    return out


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cut in combinations(range(1, total), parts - 1):
        bounds = (0, *cut, total)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def sr_monomials(p: Presentation, d: int) -> list[Monomial]:
    """Degree-``d`` monomials whose support is a face."""
    if d < 0:
        return []
    out = []
    for face in _faces(p, d):
        for exps in _compositions(d, len(face)):
            out.append(tuple(zip(face, exps)))
    out.sort()
    return out


def format_sr_monomial(p: Presentation, mono: Monomial) -> str:
    if not mono:
        return "1"
    return "".join(p.var_name(v) + (f"^{a}" if a > 1 else "") for v, a in mono)


def _times_var(mono: Monomial, v: int) -> Monomial:
    d = dict(mono)
    d[v] = d.get(v, 0) + 1
    return tuple(sorted(d.items()))


def hilbert_quotient(p: Presentation, d: int) -> int:
    """dim_Q of the degree-``d`` piece of SR / (linear forms).

    The relations in degree ``d`` are spanned by ``m * l`` with ``m`` a
    Stanley-Reisner monomial of degree ``d - 1`` and ``l`` a linear form;
    products whose support is not a face vanish in the Stanley-Reisner ring.
    """
    cols = {mono: k for k, mono in enumerate(sr_monomials(p, d))}
    if d == 0:
        return len(cols)
    basis = linalg.EchelonBasis()
    for mono in sr_monomials(p, d - 1):
        support = [v for v, _ in mono]
        for form in p.linear_forms:
            row: dict[int, int] = {}
            for v, c in form.items():
                if all(p.compatible(v, w) for w in support):
                    col = cols[_times_var(mono, v)]
                    row[col] = row.get(col, 0) + c
            if any(row.values()):
                basis.add(row)
    return len(cols) - len(basis)


def hilbert_series_quotient(p: Presentation, max_degree: int | None = None) -> list[int]:
    """Hilbert function of the quotient up to its top nonzero degree."""
    if max_degree is None:
        max_degree = len(p.variables)
    out = []
    for d in range(max_degree + 1):
        h = hilbert_quotient(p, d)
        if h == 0 and d > 0:
            break
        out.append(h)
    return out

