"""Bergman fans, augmented Bergman fans and their nested set models.

Bergman cones are indexed by flags of proper nonempty flats and generated by
``e_F``, stored modulo ``e_[n]`` with the last coordinate set to 0. Augmented
cones are indexed by compatible pairs ``I <= F`` (``I`` independent, ``F`` a
flag of flats other than the ground set, ``I`` inside its smallest member) and
generated by ``e_i`` for ``i`` in ``I`` and ``-e_{[n] - F}`` for ``F`` in the flag.

As simplicial complexes, augmented cones use the vertices of the augmented
lattice: ``Elem("indep", (i,))`` for ``e_i`` and ``Elem("star", F)`` for the
ray of ``F``. The zero cone appears in cone lists but not in face counts.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .lattice import (
    Elem,
    FiniteLattice,
    SimplicialComplex,
    augmented_lattice,
    aug_building_set,
    is_nested,
    nested_sets,
    star_building_set,
)
from .matroid import Matroid, Subset, from_mask, make_boolean, to_mask


class FanError(ValueError):
    pass


@dataclass(frozen=True)
class Flag:
    chain: tuple[Subset, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "chain", tuple(tuple(sorted(f)) for f in self.chain))
        for a, b in zip(self.chain, self.chain[1:]):
            if not set(a) < set(b):
                raise FanError(f"flag entries must increase strictly: {a} then {b}")

    def __len__(self) -> int:
        return len(self.chain)


@dataclass(frozen=True)
class CompatiblePair:
    I: Subset
    flag: Flag = Flag()

    def __post_init__(self):
        object.__setattr__(self, "I", tuple(sorted(self.I)))
        if not isinstance(self.flag, Flag):
            object.__setattr__(self, "flag", Flag(self.flag))
        if self.flag.chain and not set(self.I) <= set(self.flag.chain[0]):
            raise FanError(f"I={self.I} is not inside the first flag entry {self.flag.chain[0]}")

    @property
    def dim(self) -> int:
        return len(self.I) + len(self.flag)

    def __str__(self) -> str:
        return f"{_set_text(self.I)} <= [{','.join(_set_text(f) for f in self.flag.chain)}]"


@dataclass(frozen=True)
class Cone:
    label: Flag | CompatiblePair
    rays: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.rays)


def _set_text(s: Subset) -> str:
    return "{" + ",".join(map(str, s)) + "}"


# --- enumeration -------------------------------------------------------------


def _flag_masks(m: Matroid, allowed: Callable[[int], bool]) -> list[tuple[int, ...]]:
    flats = [f for f in m.flat_masks if allowed(f)]
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], start: int) -> None:
        out.append(tuple(prefix))
        for pos in range(start, len(flats)):
            f = flats[pos]
            if not prefix or (f != prefix[-1] and f & prefix[-1] == prefix[-1]):
                prefix.append(f)
                rec(prefix, pos + 1)
                prefix.pop()

    # flat_masks is sorted by size, so supersets always come later
    rec([], 0)
    return out


def bergman_ray(n: int, flat: Subset) -> tuple[int, ...]:
    shift = 1 if n in flat else 0
    return tuple((1 if i in flat else 0) - shift for i in range(1, n + 1))


def aug_ray_flat(n: int, flat: Subset) -> tuple[int, ...]:
    return tuple(0 if i in flat else -1 for i in range(1, n + 1))


def aug_ray_element(n: int, i: int) -> tuple[int, ...]:
    return tuple(1 if j == i else 0 for j in range(1, n + 1))


def _flag_key(chain: tuple[Subset, ...]):
    return tuple((len(f), f) for f in chain)


def bergman_cones(m: Matroid) -> list[Cone]:
    """All cones of the Bergman fan, the zero cone (empty flag) first."""
    full = m.full_mask
    masks = _flag_masks(m, lambda f: f != 0 and f != full)
    flags = sorted((Flag(tuple(from_mask(f) for f in ch)) for ch in masks), key=lambda fl: (len(fl), _flag_key(fl.chain)))
    return [Cone(fl, tuple(bergman_ray(m.n, f) for f in fl.chain)) for fl in flags]


def _pair_key(p: CompatiblePair):
    return (p.dim, len(p.I), p.I, _flag_key(p.flag.chain))


def aug_bergman_cones(m: Matroid) -> list[Cone]:
    """All cones of the augmented Bergman fan, indexed by compatible pairs."""
    full = m.full_mask
    pairs = []
    for ch in _flag_masks(m, lambda f: f != full):
        bound = ch[0] if ch else full
        for ind in m.independent_masks:
            if ind & ~bound == 0:
                pairs.append(CompatiblePair(from_mask(ind), Flag(tuple(from_mask(f) for f in ch))))
    pairs.sort(key=_pair_key)
    return [Cone(p, aug_rays(m.n, p)) for p in pairs]


def aug_rays(n: int, p: CompatiblePair) -> tuple[tuple[int, ...], ...]:
    return tuple(aug_ray_element(n, i) for i in p.I) + tuple(aug_ray_flat(n, f) for f in p.flag.chain)


def pair_vertices(p: CompatiblePair) -> frozenset[Elem]:
    return frozenset([Elem("indep", (i,)) for i in p.I] + [Elem("star", f) for f in p.flag.chain])


def bergman_complex(m: Matroid) -> SimplicialComplex:
    return SimplicialComplex.from_faces(
        [Elem("flat", f) for f in c.label.chain] for c in bergman_cones(m)
    )


def aug_bergman_complex(m: Matroid) -> SimplicialComplex:
    return SimplicialComplex.from_faces(pair_vertices(c.label) for c in aug_bergman_cones(m))


def f_vector(c: SimplicialComplex) -> tuple[int, ...]:
    return c.f_vector()


def h_vector(f: Iterable[int]) -> list[int]:
    """Standard transform: sum_k h_k t^k = sum_i f_{i-1} t^i (1-t)^(d-i), f_{-1} = 1."""
    fs = [1, *f]
    d = len(fs) - 1
    return [
        sum((-1) ** (k - i) * math.comb(d - i, k - i) * fs[i] for i in range(k + 1))
        for k in range(d + 1)
    ]


# --- nested sets and compatible pairs ----------------------------------------


@lru_cache(maxsize=16)
def _aug_context(m: Matroid) -> tuple[FiniteLattice, frozenset[Elem]]:
    return augmented_lattice(m), aug_building_set(m)


def nested_to_pair(m: Matroid, nested: Iterable[Elem]) -> CompatiblePair:
    lat, g = _aug_context(m)
    nested = frozenset(nested)
    top = Elem("star", m.ground)
    if top in nested:
        raise FanError("the top element does not belong to the reduced complex")
    if not nested <= g or not is_nested(lat, g, nested):
        raise FanError(f"not a nested set: {sorted(map(str, nested))}")
    I = tuple(sorted(e.members[0] for e in nested if e.kind == "indep"))
    flag = sorted((e.members for e in nested if e.kind == "star"), key=len)
    return CompatiblePair(I, Flag(tuple(flag)))


def _check_pair(m: Matroid, p: CompatiblePair) -> None:
    if to_mask(p.I) not in set(m.independent_masks):
        raise FanError(f"{p.I} is not independent")
    flats = set(m.flat_masks)
    for f in p.flag.chain:
        mask = to_mask(f)
        if mask not in flats or mask == m.full_mask:
            raise FanError(f"{f} is not a proper flat")


def pair_to_nested(m: Matroid, p: CompatiblePair) -> frozenset[Elem]:
    _check_pair(m, p)
    return pair_vertices(p)


def star_nested_to_pair(n: int, nested: Iterable[Elem]) -> CompatiblePair:
    """Singleton tubes {i} go to I, a tube S + {*} goes to the flat S.

    The centre ``*`` is vertex ``n + 1`` of the Boolean lattice.
    """
    lat, g = _star_context(n)
    nested = frozenset(nested)
    centre = n + 1
    if lat.elements[lat.top] in nested:
        raise FanError("the top element does not belong to the reduced complex")
    if not nested <= g or not is_nested(lat, g, nested):
        raise FanError(f"not a nested set: {sorted(map(str, nested))}")
    I = tuple(sorted(e.members[0] for e in nested if centre not in e.members))
    flag = sorted((tuple(i for i in e.members if i != centre) for e in nested if centre in e.members), key=len)
    return CompatiblePair(I, Flag(tuple(flag)))


@lru_cache(maxsize=8)
def _star_context(n: int) -> tuple[FiniteLattice, frozenset[Elem]]:
    return star_building_set(n)


def star_vertex_map(n: int) -> dict[Elem, Elem]:
    """Vertex-level version of :func:`star_nested_to_pair`."""
    _, g = _star_context(n)
    centre = n + 1
    out = {}
    for e in g:
        if centre in e.members:
            out[e] = Elem("star", tuple(i for i in e.members if i != centre))
        else:
            out[e] = Elem("indep", e.members)
    return out


def complexes_isomorphic(
    c1: SimplicialComplex, c2: SimplicialComplex, vmap: Mapping | Callable
) -> bool:
    """True iff ``vmap`` is a vertex bijection carrying faces onto faces."""
    f = vmap if callable(vmap) else vmap.__getitem__
    try:
        image = {v: f(v) for v in c1.vertices}
    except KeyError:
        return False
    if len(set(image.values())) != len(image) or set(image.values()) != set(c2.vertices):
        return False
    return {frozenset(image[v] for v in face) for face in c1.faces} == set(c2.faces)


# --- certificates ------------------------------------------------------------


def reduced_nested_sets(lat: FiniteLattice, g: frozenset[Elem]) -> list[frozenset[Elem]]:
    top = lat.elements[lat.top]
    return [s for s in nested_sets(lat, g) if top not in s]


def check_nested_pairs(m: Matroid) -> bool:
    """Round trips both ways, and the image of the reduced nested sets is
    exactly the set of compatible pairs."""
    lat, g = _aug_context(m)
    pairs = {c.label for c in aug_bergman_cones(m)}
    images = set()
    for s in reduced_nested_sets(lat, g):
        p = nested_to_pair(m, s)
        if pair_to_nested(m, p) != s:
            return False
        images.add(p)
    if images != pairs:
        return False
    return all(nested_to_pair(m, pair_to_nested(m, p)) == p for p in pairs)


def star_complex(n: int) -> SimplicialComplex:
    lat, g = _star_context(n)
    return SimplicialComplex.from_faces(reduced_nested_sets(lat, g))


def certify_star_isomorphism(n: int, exhaustive: bool = True) -> bool:
    """Reduced nested complex of the star graph vs the augmented Bergman
    complex of B_n: an explicit isomorphism, or only equal f-vectors."""

    star = star_complex(n)
    aug = aug_bergman_complex(make_boolean(n))
    if not exhaustive:
        return star.f_vector() == aug.f_vector()
    return complexes_isomorphic(star, aug, star_vertex_map(n))


# --- output ------------------------------------------------------------------


def _rays_text(rays) -> str:
    return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in rays) + "]"


def format_cone(c: Cone) -> str:
    lab = c.label
    flag = lab.flag if isinstance(lab, CompatiblePair) else lab
    parts = []
    if isinstance(lab, CompatiblePair):
        parts.append(f"I={_set_text(lab.I)}")
    parts.append("flag=[" + ",".join(_set_text(f) for f in flag.chain) + "]")
    parts.append(f"rays={_rays_text(c.rays)}")
    return " ; ".join(parts)


def cone_to_json(c: Cone) -> dict:
    lab = c.label
    out: dict = {}
    if isinstance(lab, CompatiblePair):
        out["I"] = list(lab.I)
        out["flag"] = [list(f) for f in lab.flag.chain]
    else:
        out["flag"] = [list(f) for f in lab.chain]
    out["rays"] = [list(r) for r in c.rays]
    return out


def cones_json(cones: Iterable[Cone]) -> str:
    return json.dumps([cone_to_json(c) for c in cones])
