"""Finite atomic lattices, building sets and nested set complexes.

A :class:`FiniteLattice` is built from a generating relation, closed
transitively, and then checked: it must be a partial order with all binary
joins and meets, and every element must be a join of atoms. Elements carry a
provenance label (:class:`Elem`) so flats, starred flats, independent sets and
graph vertex sets never get confused.

Building sets and nested sets are plain ``frozenset``\\ s of :class:`Elem`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

from .matroid import Matroid, from_mask, to_mask

KIND_ORDER = {"flat": 0, "indep": 0, "vertex": 0, "star": 1, "opaque": 2}


class LatticeError(ValueError):
    pass


@dataclass(frozen=True)
class Elem:
    """A labelled lattice element.

    ``kind`` is one of ``flat``, ``star`` (a flat F_* inside the augmented
    lattice), ``indep`` (an independent set), ``vertex`` (a vertex subset of a
    graph) or ``opaque``.
    """

    kind: str
    members: tuple[int, ...]

    def sort_key(self) -> tuple:
        return (KIND_ORDER[self.kind], len(self.members), self.members)

    def __str__(self) -> str:
        return format_elem(self)


def format_elem(e: Elem, star_vertex: int | None = None) -> str:
    if not e.members:
        body = "∅"
    else:
        sep = "" if max(e.members) < 10 else ","
        body = sep.join(
            "*" if star_vertex is not None and i == star_vertex else str(i) for i in e.members
        )
    return body + "_*" if e.kind == "star" else body


class FiniteLattice:
    """Finite lattice with precomputed order, join and meet tables.

    Elements are stored sorted by ``(rank, label)``; ``rank`` is the length of
    the longest chain from the bottom. Internally everything is indexed by
    position; ``up[i]`` is the bitmask of all ``j`` with ``i <= j``.
    """

    def __init__(self, elements: Sequence[Elem], leq_pairs: Iterable[tuple[Elem, Elem]]):
        elems = list(dict.fromkeys(elements))
        if not elems:
            raise LatticeError("empty poset")
        pos = {e: i for i, e in enumerate(elems)}
        size = len(elems)
        up = [1 << i for i in range(size)]
        for a, b in leq_pairs:
            up[pos[a]] |= 1 << pos[b]
        # Warshall closure on bit rows
        for k in range(size):
            bk = 1 << k
            uk = up[k]
            for i in range(size):
                if up[i] & bk:
                    up[i] |= uk
        for i in range(size):
            for j in range(i + 1, size):
                if up[i] >> j & 1 and up[j] >> i & 1:
                    raise LatticeError(f"order is not antisymmetric: {elems[i]} and {elems[j]}")

        down = [0] * size
        for i in range(size):
            for j in _bits(up[i]):
                down[j] |= 1 << i
        height = [0] * size
        for i in sorted(range(size), key=lambda i: bin(down[i]).count("1")):
            below = [j for j in _bits(down[i]) if j != i]
            height[i] = 1 + max((height[j] for j in below), default=-1)

        order = sorted(range(size), key=lambda i: (height[i], elems[i].sort_key()))
        remap = {old: new for new, old in enumerate(order)}
        self.elements: tuple[Elem, ...] = tuple(elems[i] for i in order)
        self.index: dict[Elem, int] = {e: i for i, e in enumerate(self.elements)}
        self.rank: tuple[int, ...] = tuple(height[i] for i in order)
        self.up: list[int] = [_remap_mask(up[i], remap) for i in order]
        self.down: list[int] = [_remap_mask(down[i], remap) for i in order]
        self._build_tables()
        self._check_atomic()

    @classmethod
    def from_leq(cls, elements: Sequence[Elem], leq) -> FiniteLattice:
        """Build from a full order predicate ``leq(a, b)``."""
        return cls(elements, ((a, b) for a in elements for b in elements if leq(a, b)))

    def _build_tables(self) -> None:
        size = len(self.elements)
        bottoms = [i for i in range(size) if self.down[i] == 1 << i]
        tops = [i for i in range(size) if self.up[i] == 1 << i]
        if len(bottoms) != 1 or len(tops) != 1:
            raise LatticeError("poset needs a unique bottom and a unique top")
        self.bottom, self.top = bottoms[0], tops[0]
        self.join_table = [[0] * size for _ in range(size)]
        self.meet_table = [[0] * size for _ in range(size)]
        for i in range(size):
            for j in range(i, size):
                self.join_table[i][j] = self.join_table[j][i] = self._extremum(
                    self.up[i] & self.up[j], self.up, i, j, "join"
                )
                self.meet_table[i][j] = self.meet_table[j][i] = self._extremum(
                    self.down[i] & self.down[j], self.down, i, j, "meet"
                )

    def _extremum(self, common: int, rel: list[int], i: int, j: int, what: str) -> int:
        # the join is the member of ``common`` lying below all the others
        for c in _bits(common):
            if rel[c] & common == common:
                return c
        raise LatticeError(
            f"not a lattice: no {what} of {self.elements[i]} and {self.elements[j]}"
        )

    def _check_atomic(self) -> None:
        self.atoms = tuple(i for i in range(len(self.elements)) if self.rank[i] == 1)
        for i in range(len(self.elements)):
            j = self.join_all(a for a in self.atoms if self.leq(a, i))
            if j != i:
                raise LatticeError(f"not atomic: {self.elements[i]} is not a join of atoms")

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"FiniteLattice({len(self)} elements, {len(self.atoms)} atoms)"

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.leq(i, j)

    def comparable(self, i: int, j: int) -> bool:
        return self.leq(i, j) or self.leq(j, i)

    def join(self, i: int, j: int) -> int:
        return self.join_table[i][j]

    def meet(self, i: int, j: int) -> int:
        return self.meet_table[i][j]

    def join_all(self, items: Iterable[int]) -> int:
        acc = self.bottom
        for i in items:
            acc = self.join_table[acc][i]
        return acc

    def interval(self, lo: int, hi: int) -> list[int]:
        return list(_bits(self.up[lo] & self.down[hi]))

    def idx(self, e: Elem) -> int:
        return self.index[e]

    def covers(self) -> list[tuple[int, int]]:
        out = []
        for i in range(len(self.elements)):
            for j in _bits(self.up[i]):
                if j != i and not any(
                    k not in (i, j) and self.leq(k, j) for k in _bits(self.up[i])
                ):
                    out.append((i, j))
        return out

    def to_json(self) -> dict:
        return {
            "nodes": [
                {"id": i, "kind": e.kind, "members": list(e.members), "rank": self.rank[i]}
                for i, e in enumerate(self.elements)
            ],
            "covers": [list(c) for c in self.covers()],
        }


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _remap_mask(mask: int, remap: dict[int, int]) -> int:
    out = 0
    for i in _bits(mask):
        out |= 1 << remap[i]
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed family of faces; the empty face is always present."""

    vertices: tuple
    faces: frozenset[frozenset]

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable]) -> SimplicialComplex:
        fs = {frozenset(f) for f in faces}
        fs.add(frozenset())
        closed = set(fs)
        for f in fs:
            for k in range(len(f)):
                closed.update(frozenset(c) for c in combinations(f, k))
        verts = sorted({v for f in closed for v in f}, key=_vertex_key)
        return cls(tuple(verts), frozenset(closed))

    def f_vector(self) -> tuple[int, ...]:
        dim = max(len(f) for f in self.faces)
        counts = [0] * dim
        for f in self.faces:
            if f:
                counts[len(f) - 1] += 1
        return tuple(counts)

    def is_downward_closed(self) -> bool:
        return all(f - {v} in self.faces for f in self.faces for v in f)


def _vertex_key(v):
    return v.sort_key() if isinstance(v, Elem) else v


def boolean_lattice(n: int, kind: str = "flat") -> FiniteLattice:
    """Subsets of {1..n} ordered by inclusion."""
    elems = [Elem(kind, from_mask(m)) for m in range(1 << n)]
    return FiniteLattice.from_leq(elems, lambda a, b: set(a.members) <= set(b.members))


def lattice_of_flats(m: Matroid) -> FiniteLattice:
    elems = [Elem("flat", from_mask(f)) for f in m.flat_masks]
    return FiniteLattice.from_leq(
        elems, lambda a, b: to_mask(a.members) & ~to_mask(b.members) == 0
    )


def maximal_building_set(lat: FiniteLattice) -> frozenset[Elem]:
    return frozenset(e for i, e in enumerate(lat.elements) if i != lat.bottom)


def is_building_set(lat: FiniteLattice, g: Iterable[Elem]) -> bool:
    """Check the building-set condition directly from its definition.

    For every ``X`` above the bottom, the maximal members ``G_1..G_k`` of ``G``
    below ``X`` must make the join map from the product of intervals
    ``[0, G_i]`` onto ``[0, X]`` an order isomorphism.
    """
    gi = {lat.idx(e) for e in g}
    if lat.bottom in gi:
        return False
    for x in range(len(lat)):
        if x == lat.bottom:
            continue
        below = [h for h in gi if lat.leq(h, x)]
        maxes = [h for h in below if not any(lat.lt(h, o) for o in below)]
        target = lat.interval(lat.bottom, x)
        factors = [lat.interval(lat.bottom, h) for h in maxes]
        size = 1
        for f in factors:
            size *= len(f)
        if size != len(target):
            return False
        tuples = list(product(*factors))
        images = [lat.join_all(t) for t in tuples]
        if len(set(images)) != len(images):
            return False
        for t1, im1 in zip(tuples, images):
            for t2, im2 in zip(tuples, images):
                componentwise = all(lat.leq(a, b) for a, b in zip(t1, t2))
                if componentwise != lat.leq(im1, im2):
                    return False
    return True


def is_nested(lat: FiniteLattice, g: Iterable[Elem], n: Iterable[Elem]) -> bool:
    gset = frozenset(g)
    members = [lat.idx(e) for e in n]
    if any(lat.elements[i] not in gset for i in members):
        return False
    return all(_antichains_ok(lat, gset, members[:k], members[k]) for k in range(len(members)))


def _antichains_ok(lat: FiniteLattice, gset: frozenset, prior: list[int], new: int) -> bool:
    # every antichain of size >= 2 containing ``new`` must join outside G
    incomp = [h for h in prior if not lat.comparable(h, new)]
    for size in range(1, len(incomp) + 1):
        for combo in combinations(incomp, size):
            if any(lat.comparable(a, b) for a, b in combinations(combo, 2)):
                continue
            if lat.elements[lat.join_all((new, *combo))] in gset:
                return False
    return True


def nested_sets(lat: FiniteLattice, g: Iterable[Elem]) -> list[frozenset[Elem]]:
    """All G-nested sets, the empty set included.

    Nested sets form a simplicial complex, so a depth-first search that adds
    members in increasing lattice order and prunes at the first violation
    reaches all of them.
    """
    gset = frozenset(g)
    order = sorted(lat.idx(e) for e in gset)
    out: list[frozenset[Elem]] = []

    def extend(current: list[int], start: int) -> None:
        out.append(frozenset(lat.elements[i] for i in current))
        for pos in range(start, len(order)):
            cand = order[pos]
            if _antichains_ok(lat, gset, current, cand):
                current.append(cand)
                extend(current, pos + 1)
                current.pop()

    extend([], 0)
    out.sort(key=lambda s: (len(s), sorted(lat.idx(e) for e in s)))
    return out


def reduced_nested_complex(lat: FiniteLattice, g: Iterable[Elem]) -> SimplicialComplex:
    gset = frozenset(g)
    top = lat.elements[lat.top]
    if top not in gset:
        raise LatticeError("reduced nested set complex needs the top element in the building set")
    return SimplicialComplex.from_faces(n for n in nested_sets(lat, gset) if top not in n)


STAR = "*"


def star_building_set(n: int) -> tuple[FiniteLattice, frozenset[Elem]]:
    """Boolean lattice on the vertices of the star graph K_{1,n} and its
    graphical building set.

    The centre ``*`` is encoded as vertex ``n + 1``, so the lattice is the
    Boolean lattice on ``n + 1`` elements. Connected induced subgraphs of the
    star are the singletons and every vertex set containing the centre.
    """
    if n < 1:
        raise LatticeError("star graph needs n >= 1")
    lat = boolean_lattice(n + 1, kind="vertex")
    centre = n + 1
    g = frozenset(
        e
        for e in lat.elements
        if len(e.members) == 1 or centre in e.members
    )
    return lat, g


def augmented_lattice(m: Matroid) -> FiniteLattice:
    """Independent sets and starred flats, glued by ``I < cl(I)_*``."""
    indep = [Elem("indep", from_mask(i)) for i in m.independent_masks]
    starred = [Elem("star", from_mask(f)) for f in m.flat_masks]
    pairs = []
    for a in indep:
        for b in indep:
            if set(a.members) <= set(b.members):
                pairs.append((a, b))
        pairs.append((a, Elem("star", from_mask(m.closure_mask(to_mask(a.members))))))
    for a in starred:
        for b in starred:
            if set(a.members) <= set(b.members):
                pairs.append((a, b))
    return FiniteLattice(indep + starred, pairs)


def aug_building_set(m: Matroid) -> frozenset[Elem]:
    return frozenset(
        [Elem("indep", (i,)) for i in range(1, m.n + 1)]
        + [Elem("star", from_mask(f)) for f in m.flat_masks]
    )


def atom_distance(lat: FiniteLattice, gp: int, g: int) -> int:
    """Least number of atoms whose join with ``gp`` is ``g`` (breadth-first)."""
    if not lat.leq(gp, g):
        raise LatticeError(f"{lat.elements[gp]} is not below {lat.elements[g]}")
    atoms = [a for a in lat.atoms if lat.leq(a, g)]
    seen = {gp}
    frontier = deque([(gp, 0)])
    while frontier:
        x, d = frontier.popleft()
        if x == g:
            return d
        for a in atoms:
            y = lat.join(x, a)
            if y not in seen:
                seen.add(y)
                frontier.append((y, d + 1))
    raise LatticeError("atom closure never reached the target; lattice is not atomic")


