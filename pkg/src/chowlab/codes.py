"""Stembridge codes and extended codes.

A code is a sequence ``alpha`` of length n over {0, 1, 2, ...} together with
marks: every positive letter k up to the maximum m occurs at least twice and
one occurrence other than the first carries a mark. ``f[k-1]`` is the number
of occurrences of k to the left of the marked one, and the index is the sum of
the ``f`` values. Extended codes additionally allow the letter infinity
(:data:`INF`), which behaves like 0; the all-infinity code has index -1.

The symmetric group acts positionally, ``alpha -> (alpha_{s(1)}, ...,
alpha_{s(n)})``, leaving ``f`` unchanged.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, replace
from itertools import combinations
from typing import Iterable, Sequence

INF = math.inf


class CodeError(ValueError):
    pass


def _letter_ok(x, extended: bool) -> bool:
    if x == INF:
        return extended
    return isinstance(x, int) and not isinstance(x, bool) and x >= 0


@dataclass(frozen=True, order=True)
class Code:
    alpha: tuple
    f: tuple[int, ...] = ()

    extended = False

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "f", tuple(self.f))
        _validate(self)

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def m(self) -> int:
        """Largest finite letter (0 if there is none)."""
        return max((x for x in self.alpha if x != INF), default=0)

    @property
    def index(self) -> int:
        return sum(self.f)

    def marked_positions(self) -> tuple[int, ...]:
        """0-based positions of the marked occurrences, by letter."""
        out = []
        for k in range(1, self.m + 1):
            occ = [i for i, x in enumerate(self.alpha) if x == k]
            out.append(occ[self.f[k - 1]])
        return tuple(out)

    def __str__(self) -> str:
        return format_code(self, "compact")


@dataclass(frozen=True, order=True)
class ExtendedCode(Code):
    extended = True

    @property
    def index(self) -> int:
        if self.alpha and all(x == INF for x in self.alpha):
            return -1
        return sum(self.f)


def _validate(c: Code) -> None:
    if not c.alpha:
        raise CodeError("codes have positive length")
    for x in c.alpha:
        if not _letter_ok(x, c.extended):
            raise CodeError(f"bad letter {x!r} in {'extended ' if c.extended else ''}code")
    m = c.m
    if len(c.f) != m:
        raise CodeError(f"need one mark per letter 1..{m}, got {len(c.f)}")
    counts = Counter(c.alpha)
    for k in range(1, m + 1):
        occ = counts.get(k, 0)
        if occ < 2:
            raise CodeError(f"letter {k} occurs {occ} time(s); needs at least 2")
        if not 1 <= c.f[k - 1] <= occ - 1:
            raise CodeError(f"mark for letter {k} must sit on occurrence 2..{occ}")


def code_index(c: Code) -> int:
    return c.index


def act_code(sigma: Sequence[int], c: Code) -> Code:
    """``sigma[i-1]`` is sigma(i); position i of the result holds alpha_{sigma(i)}."""
    if sorted(sigma) != list(range(1, c.n + 1)):
        raise CodeError(f"{tuple(sigma)} is not a permutation of 1..{c.n}")
    return replace(c, alpha=tuple(c.alpha[s - 1] for s in sigma))


# --- enumeration -------------------------------------------------------------


def _blocks(positions: tuple[int, ...], m: int):
    """Assign disjoint blocks of size >= 2 to letters 1..m from ``positions``.

    Yields ``(blocks, rest)``.
    """
    if m == 0:
        yield (), positions
        return
    for size in range(2, len(positions) - 2 * (m - 1) + 1):
        for block in combinations(positions, size):
            left = tuple(p for p in positions if p not in block)
            for more, rest in _blocks(left, m - 1):
                yield (block, *more), rest


def _with_marks(cls, alpha: list, blocks):
    def rec(k: int, f: list[int]):
        if k == len(blocks):
            yield cls(tuple(alpha), tuple(f))
            return
        for mark in range(1, len(blocks[k])):
            f.append(mark)
            yield from rec(k + 1, f)
            f.pop()

    yield from rec(0, [])


def _enumerate(n: int, extended: bool) -> dict[int, list[Code]]:
    if n < 1:
        raise CodeError("length must be positive")
    cls = ExtendedCode if extended else Code
    out: list[Code] = []
    for m in range(n // 2 + 1):
        for blocks, rest in _blocks(tuple(range(n)), m):
            fillers = [0, INF] if extended else [0]
            for choice in range(len(fillers) ** len(rest)):
                alpha: list = [None] * n
                for k, block in enumerate(blocks, start=1):
                    for p in block:
                        alpha[p] = k
                c = choice
                for p in rest:
                    alpha[p] = fillers[c % len(fillers)]
                    c //= len(fillers)
                out.extend(_with_marks(cls, alpha, blocks))
    by_index: dict[int, list[Code]] = {}
    for c in sorted(out, key=_sort_key):
        by_index.setdefault(c.index, []).append(c)
    return dict(sorted(by_index.items()))


def _sort_key(c: Code):
    return (c.index, c.alpha, c.f)


def enumerate_codes(n: int) -> dict[int, list[Code]]:
    """All Stembridge codes of length n, grouped by index."""
    return _enumerate(n, extended=False)


def enumerate_extended_codes(n: int) -> dict[int, list[ExtendedCode]]:
    """All extended codes of length n, grouped by index (-1 for all-infinity)."""
    return _enumerate(n, extended=True)


def graded_counts(by_index: dict[int, list]) -> list[int]:
    lo, hi = min(by_index), max(by_index)
    return [len(by_index.get(j, [])) for j in range(lo, hi + 1)]


# --- orbits ------------------------------------------------------------------


def content_partition(c: Code) -> tuple[int, ...]:
    """Multiplicities of the distinct letters (0 and infinity included)."""
    return tuple(sorted(Counter(c.alpha).values(), reverse=True))


def orbit_key(c: Code):
    # sigma keeps f and permutes letters freely, so (sorted alpha, f) is a
    # complete orbit invariant
    return (tuple(sorted(c.alpha)), c.f)


@dataclass(frozen=True)
class Orbit:
    representative: Code
    size: int
    content: tuple[int, ...]


def code_orbits(codes: Iterable[Code]) -> list[Orbit]:
    codes = list(codes)
    if len({c.n for c in codes}) > 1:
        raise CodeError("codes of mixed lengths")
    groups: dict = {}
    for c in codes:
        groups.setdefault(orbit_key(c), []).append(c)
    orbits = [Orbit(min(g, key=_sort_key), len(g), content_partition(g[0])) for g in groups.values()]
    orbits.sort(key=lambda o: _sort_key(o.representative))
    return orbits


def multinomial(parts: Sequence[int]) -> int:
    out = math.factorial(sum(parts))
    for p in parts:
        out //= math.factorial(p)
    return out


# --- text and JSON -----------------------------------------------------------


def _letter_text(x, style: str) -> str:
    if x == INF:
        return {"compact": "z", "text": "inf", "latex": r"\infty"}[style]
    if style == "compact" and x > 9:
        return f"({x})"
    if style == "latex" and x > 9:
        return f"{{{x}}}"
    return str(x)


def format_code(c: Code, style: str = "compact") -> str:
    """Render a code.

    ``compact``: ``11*22*``, ``z`` for infinity, ``(12)`` for letters above 9;
    ``text``: space separated tokens, ``inf`` for infinity, ``*`` after marks;
    ``latex``: hats on marked letters, e.g. ``01\\infty022\\hat{1}\\infty\\hat{2}``.
    """
    marked = set(c.marked_positions())
    toks = []
    for i, x in enumerate(c.alpha):
        t = _letter_text(x, style)
        if i in marked:
            t = rf"\hat{{{t}}}" if style == "latex" else t + "*"
        toks.append(t)
    return (" " if style == "text" else "").join(toks)


_COMPACT_TOKEN = re.compile(r"(\d|\(\d+\)|z|inf|∞)(\*?)")


def parse_code(text: str, extended: bool | None = None) -> Code:
    """Parse the compact or the space separated text form.

    ``extended`` defaults to whether an infinity letter appears.
    """
    text = text.strip()
    if " " in text:
        tokens = []
        for tok in text.split():
            star = tok.endswith("*")
            body = tok.rstrip("*")
            tokens.append((body, star))
    else:
        tokens = []
        pos = 0
        while pos < len(text):
            mt = _COMPACT_TOKEN.match(text, pos)
            if not mt:
                raise CodeError(f"cannot parse code {text!r} at {pos}")
            tokens.append((mt.group(1).strip("()"), bool(mt.group(2))))
            pos = mt.end()
    alpha = []
    for body, _ in tokens:
        if body in ("z", "inf", "∞"):
            alpha.append(INF)
        else:
            try:
                alpha.append(int(body))
            except ValueError:
                raise CodeError(f"bad letter {body!r}") from None
    m = max((x for x in alpha if x != INF), default=0)
    f = []
    for k in range(1, m + 1):
        occ = [i for i, x in enumerate(alpha) if x == k]
        stars = [j for j, i in enumerate(occ) if tokens[i][1]]
        if len(stars) != 1:
            raise CodeError(f"letter {k} needs exactly one mark, found {len(stars)}")
        f.append(stars[0])
    if extended is None:
        extended = INF in alpha
    return (ExtendedCode if extended else Code)(tuple(alpha), tuple(f))


def code_to_json(c: Code) -> dict:
    return {
        "alpha": ["inf" if x == INF else x for x in c.alpha],
        "f": {str(k): v for k, v in enumerate(c.f, start=1)},
    }


def code_from_json(data: dict, extended: bool | None = None) -> Code:
    alpha = tuple(INF if x == "inf" else x for x in data["alpha"])
    fmap = {int(k): v for k, v in data.get("f", {}).items()}
    f = tuple(fmap[k] for k in sorted(fmap))
    if sorted(fmap) != list(range(1, len(f) + 1)):
        raise CodeError("marks must be given for letters 1..m")
    if extended is None:
        extended = INF in alpha
    return (ExtendedCode if extended else Code)(alpha, f)
