"""Matroids presented by their bases.

Ground sets are ``{1..n}``. Subsets are exchanged as sorted tuples of element
ids (the canonical form); internally every subset is an ``int`` bitmask with
bit ``i-1`` standing for element ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable

Subset = tuple[int, ...]


class MatroidError(ValueError):
    """Raised for inputs that do not describe a loopless matroid."""


def to_mask(s: Iterable[int]) -> int:
    mask = 0
    for i in s:
        mask |= 1 << (i - 1)
    return mask


def from_mask(mask: int) -> Subset:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def canonical(s: Iterable[int], n: int | None = None) -> Subset:
    """Sorted, duplicate-free tuple; checks ids against ``{1..n}`` when given."""
    t = tuple(sorted(set(s)))
    if n is not None and t and (t[0] < 1 or t[-1] > n):
        raise MatroidError(f"subset {t} not contained in [1..{n}]")
    return t


def subset_key(s: Subset) -> tuple:
    """Lexicographic key used for all deterministic enumerations."""
    return (len(s), s)


@dataclass(frozen=True)
class Matroid:
    n: int
    bases: tuple[Subset, ...]
    _masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_masks", tuple(to_mask(b) for b in self.bases))

    @property
    def rank_of_matroid(self) -> int:
        return len(self.bases[0])

    @property
    def ground(self) -> Subset:
        return tuple(range(1, self.n + 1))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def rank_mask(self, mask: int) -> int:
        return max(popcount(mask & b) for b in self._masks)

    def closure_mask(self, mask: int) -> int:
        r = self.rank_mask(mask)
        out = mask
        for i in range(self.n):
            bit = 1 << i
            if not out & bit and self.rank_mask(mask | bit) == r:
                out |= bit
        return out

    @cached_property
    def flat_masks(self) -> tuple[int, ...]:
        # Every flat is the closure of some independent set, so closing all
        # subsets of all bases reaches every flat.
        seen = set()
        for b in self._masks:
            sub = b
            while True:
                seen.add(self.closure_mask(sub))
                if sub == 0:
                    break
                sub = (sub - 1) & b
        return tuple(sorted(seen, key=lambda m: subset_key(from_mask(m))))

    @cached_property
    def independent_masks(self) -> tuple[int, ...]:
        seen = set()
        for b in self._masks:
            sub = b
            while True:
                seen.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & b
        return tuple(sorted(seen, key=lambda m: subset_key(from_mask(m))))

    def __str__(self) -> str:
        return f"Matroid(n={self.n}, rank={self.rank_of_matroid}, {len(self.bases)} bases)"


def make_boolean(n: int) -> Matroid:
    """The Boolean matroid B_n: the whole ground set is the only basis."""
    if n < 1:
        raise MatroidError(f"ground set size must be positive, got {n}")
    return Matroid(n, (tuple(range(1, n + 1)),))


def make_uniform(n: int, r: int) -> Matroid:
    if n < 1:
        raise MatroidError(f"ground set size must be positive, got {n}")
    if not 1 <= r <= n:
        raise MatroidError(f"rank {r} out of range 1..{n}")
    return Matroid(n, tuple(combinations(range(1, n + 1), r)))


def from_bases(n: int, bases: Iterable[Iterable[int]]) -> Matroid:
    """Validate a bases list and build the matroid.

    Rejects unequal basis sizes, violations of the basis exchange axiom and
    loops (elements lying in no basis).
    """
    if n < 1:
        raise MatroidError(f"ground set size must be positive, got {n}")
    bs = sorted({canonical(b, n) for b in bases}, key=subset_key)
    if not bs:
        raise MatroidError("a matroid needs at least one basis")
    if len({len(b) for b in bs}) != 1:
        raise MatroidError("not a matroid: bases have unequal cardinality")
    masks = [to_mask(b) for b in bs]
    mask_set = set(masks)
    for b1 in masks:
        for b2 in masks:
            diff = b1 & ~b2
            for i in range(n):
                x = 1 << i
                if not diff & x:
                    continue
                if not any(
                    (b2 & ~b1) & (1 << j) and ((b1 & ~x) | (1 << j)) in mask_set
                    for j in range(n)
                ):
                    raise MatroidError(
                        f"not a matroid: exchange fails for {from_mask(b1)}, "
                        f"{from_mask(b2)} at element {i + 1}"
                    )
    covered = 0
    for m in masks:
        covered |= m
    if covered != (1 << n) - 1:
        raise MatroidError(
            f"loop detected: element(s) {from_mask(((1 << n) - 1) & ~covered)} lie in no basis"
        )
    return Matroid(n, tuple(bs))


def rank(m: Matroid, s: Iterable[int]) -> int:
    return m.rank_mask(to_mask(canonical(s, m.n)))


def closure(m: Matroid, s: Iterable[int]) -> Subset:
    return from_mask(m.closure_mask(to_mask(canonical(s, m.n))))


def is_flat(m: Matroid, s: Iterable[int]) -> bool:
    mask = to_mask(canonical(s, m.n))
    return m.closure_mask(mask) == mask


@dataclass(frozen=True)
class FlatLattice:
    """Flats ordered by inclusion, with their ranks and the cover relation.

    ``covers`` holds index pairs ``(i, j)`` with ``flats[i]`` covered by
    ``flats[j]``.
    """

    flats: tuple[Subset, ...]
    ranks: tuple[int, ...]
    covers: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.flats)

    def __iter__(self):
        return iter(self.flats)

    def __contains__(self, s) -> bool:
        return tuple(s) in self.flats


def flats(m: Matroid) -> FlatLattice:
    """All flats, ordered by (size, members)."""
    masks = m.flat_masks
    ranks = tuple(m.rank_mask(f) for f in masks)
    covers = tuple(
        (i, j)
        for i, a in enumerate(masks)
        for j, b in enumerate(masks)
        if a != b and a & b == a and ranks[j] == ranks[i] + 1
    )
    return FlatLattice(tuple(from_mask(f) for f in masks), ranks, covers)


def independent_sets(m: Matroid) -> list[Subset]:
    return [from_mask(i) for i in m.independent_masks]


def matroid_from_json(data: dict) -> Matroid:
    """Build a matroid from the CLI's JSON description.

    Accepted shapes: ``{"family": "boolean", "n": N}``,
    ``{"family": "uniform", "n": N, "r": R}`` and
    ``{"n": N, "bases": [[1, 2], ...]}``.
    """
    if not isinstance(data, dict) or "n" not in data:
        raise MatroidError("matroid JSON must be an object with key 'n'")
    fam = data.get("family")
    n = data["n"]
    if not isinstance(n, int):
        raise MatroidError("'n' must be an integer")
    if fam == "boolean":
        return make_boolean(n)
    if fam == "uniform":
        if "r" not in data:
            raise MatroidError("uniform family needs 'r'")
        return make_uniform(n, data["r"])
    if fam is not None:
        raise MatroidError(f"unknown matroid family {fam!r}")
    if "bases" not in data:
        raise MatroidError("matroid JSON needs 'family' or 'bases'")
    return from_bases(n, data["bases"])


def parse_matroid_spec(spec: str) -> Matroid:
    """Parse ``boolean:N`` or ``uniform:N,R``."""
    fam, _, params = spec.partition(":")
    try:
        args = [int(p) for p in params.split(",")] if params else []
    except ValueError:
        raise MatroidError(f"bad matroid parameters in {spec!r}") from None
    if fam == "boolean" and len(args) == 1:
        return make_boolean(args[0])
    if fam == "uniform" and len(args) == 2:
        return make_uniform(*args)
    raise MatroidError(f"cannot parse matroid spec {spec!r}")
