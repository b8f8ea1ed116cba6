"""Backtracking search for perfect squared rectangles.

The search keeps a skyline (the upper profile of the squares placed so
far) and always fills the lowest, leftmost uncovered cell. That cell has
to be the lower-left corner of whichever square covers it, so trying every
unused side there makes the search complete.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .tiling import Placement, Rect, Tiling, _scaled, area_identity, odd_census, verify

DEFAULT_BUDGET = 10**8
MORON_SIDES = (1, 4, 7, 8, 9, 10, 14, 15, 18)


class BudgetExceeded(RuntimeError):
    """The node budget ran out before the search finished."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget of {nodes} nodes exhausted")
        self.nodes = nodes


class DuplicateSideError(ValueError):
    def __init__(self, side: int):
        super().__init__(f"side {side} is already used")
        self.side = side


@dataclass(frozen=True)
class SquareSet:
    sides: tuple[int, ...]

    def __post_init__(self):
        sides = tuple(self.sides)
        if not sides:
            raise ValueError("square set must be nonempty")
        if any(isinstance(s, bool) or not isinstance(s, int) or s < 1 for s in sides):
            raise ValueError("sides must be positive integers")
        if any(a >= b for a, b in zip(sides, sides[1:])):
            raise ValueError("sides must be strictly ascending (pairwise distinct)")
        object.__setattr__(self, "sides", sides)

    @classmethod
    def of(cls, sides: Iterable[int]) -> "SquareSet":
        sides = list(sides)
        if len(set(sides)) != len(sides):
            raise ValueError("sides must be pairwise distinct")
        return cls(tuple(sorted(sides)))

    @property
    def odd_count(self) -> int:
        return sum(s % 2 for s in self.sides)


class _Counter:
    def __init__(self, budget: int):
        self.budget = budget
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.budget)


def _subset_sums(sides: Iterable[int]) -> int:
    reach = 1
    for s in sides:
        reach |= reach << s
    return reach


def _tilings(sides, w: int, h: int, counter: _Counter, fewest_first: bool = False,
             corner_min: bool = False):
    """Yield every tiling of the w x h rectangle using each side exactly once.

    Placements come out as (x, y, side) tuples. With ``fewest_first`` the
    search branches on whichever well admits the fewest sides instead of
    the lowest one; both are complete because the lower-left cell of any
    well can only be the corner of a square. ``corner_min`` keeps only
    tilings whose lower-left corner square is the smallest corner square,
    which still leaves at least one image of every tiling under the
    rectangle's reflections.
    """
    desc = tuple(sorted(sides, reverse=True))
    # the smallest square of a perfect tiling never touches the boundary
    smallest = desc[-1] if len(desc) > 1 else None
    dead: set = set()
    placed: list[tuple[int, int, int]] = []

    # sky: tuple of (x, width, height) segments; adjacent heights differ
    def rec(sky, free):
        if not free:
            yield list(placed)
            return
        # the corner rule reads the origin square, so it joins the memo key
        key = (sky, free, placed[0][2] if corner_min and placed else 0)
        if key in dead:
            return
        # the column above any segment is a stack of free squares
        stack = 1
        for s in free:
            stack |= stack << s
        if any(not stack >> (h - kh) & 1 for _, _, kh in sky):
            dead.add(key)
            return
        # a well's floor is covered by squares that fit inside it
        last = len(sky) - 1
        choice = None
        for k, (kx, kw, kh) in enumerate(sky):
            if (k > 0 and sky[k - 1][2] < kh) or (k < last and sky[k + 1][2] < kh):
                continue
            lim = min(kw, h - kh)
            reach, fits = 1, 0
            for s in free:
                if s <= lim:
                    reach |= reach << s
                    fits += 1
            if not reach >> kw & 1:
                dead.add(key)
                return
            rank = (fits, kh, kx) if fewest_first else (kh, kx)
            if choice is None or rank < choice[0]:
                choice = (rank, k)
        i = choice[1]
        x, sw, sh = sky[i]
        found = False
        for j, s in enumerate(free):
            if s > sw or sh + s > h:
                continue
            if s == smallest and (x == 0 or sh == 0 or x + s == w or sh + s == h):
                continue
            if corner_min and placed and s < placed[0][2] and (x == 0 or x + s == w) and (
                sh == 0 or sh + s == h
            ):
                continue
            counter.tick()
            mid = ((x, sw, sh + s),) if s == sw else ((x, s, sh + s), (x + s, sw - s, sh))
            merged: list = []
            for seg in sky[:i] + mid + sky[i + 1:]:
                if merged and merged[-1][2] == seg[2]:
                    px, pw, ph = merged[-1]
                    merged[-1] = (px, pw + seg[1], ph)
                else:
                    merged.append(seg)
            placed.append((x, sh, s))
            for sol in rec(tuple(merged), free[:j] + free[j + 1:]):
                found = True
                yield sol
            placed.pop()
        if not found:
            dead.add(key)

    yield from rec(((0, w, 0),), desc)


@dataclass(frozen=True)
class SolveResult:
    status: str  # "tiled", "no-tiling" or "area-mismatch"
    tiling: Tiling | None
    nodes: int


def _as_sides(sides) -> tuple[int, ...]:
    if isinstance(sides, SquareSet):
        return sides.sides
    return SquareSet.of(sides).sides


def search(sides, w: int, h: int, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Decide whether ``sides`` tile the w x h rectangle, returning the first tiling found.

    Raises ``BudgetExceeded`` instead of answering when the node budget
    runs out, so a "no-tiling" status is always a completed search.
    """
    sides = _as_sides(sides)
    if w < 1 or h < 1:
        raise ValueError("rectangle dimensions must be positive")
    if not area_identity(sides, w, h):
        return SolveResult("area-mismatch", None, 0)
    counter = _Counter(budget)
    for placed in _tilings(sides, w, h, counter):
        t = Tiling(Rect(w, h), [Placement(x, y, s) for x, y, s in sorted(placed, key=_row_major)])
        return SolveResult("tiled", t, counter.nodes)
    return SolveResult("no-tiling", None, counter.nodes)


def _row_major(p):
    return p[1], p[0]


def solve(sides, w: int, h: int, budget: int = DEFAULT_BUDGET) -> Tiling | None:
    return search(sides, w, h, budget).tiling


# -- symmetry and enumeration ---------------------------------------------


def transpose(t: Tiling) -> Tiling:
    r = t.region
    return Tiling(Rect(r.height, r.width), [Placement(p.y, p.x, p.side) for p in t.squares])


def _images(w: int, h: int, squares) -> Iterator[tuple[int, int, list[tuple[int, int, int]]]]:
    """All eight dihedral images as (width, height, [(x, y, side)])."""
    for swap, fx, fy in itertools.product((False, True), repeat=3):
        W, H = (h, w) if swap else (w, h)
        out = []
        for p in squares:
            x, y = (p.y, p.x) if swap else (p.x, p.y)
            if fx:
                x = W - x - p.side
            if fy:
                y = H - y - p.side
            out.append((x, y, p.side))
        yield W, H, out


def canonical(t: Tiling) -> Tiling:
    """Lexicographically least dihedral image with width >= height."""
    r = t.region
    best = None
    for W, H, sq in _images(r.width, r.height, t.squares):
        if W < H:
            continue
        key = sorted((y, x, s) for x, y, s in sq)
        if best is None or key < best[2]:
            best = (W, H, key)
    W, H, key = best
    return Tiling(Rect(W, H), [Placement(x, y, s) for y, x, s in key])


def _two_disjoint_sums(sides, target: int) -> bool:
    """True if two disjoint subsets of ``sides`` both sum to ``target``."""
    # row[a] is a bitmask of the sums b reachable alongside sum a
    mask = (1 << (target + 1)) - 1
    row = [0] * (target + 1)
    row[0] = 1
    for s in sides:
        for a in range(target, -1, -1):
            v = row[a] | ((row[a] << s) & mask)
            if a >= s:
                v |= row[a - s]
            row[a] = v
    return bool(row[target] >> target & 1)


def _candidate_rectangles(combo):
    """(w, h) pairs, w >= h, passing cheap necessary conditions for ``combo``."""
    area = sum(s * s for s in combo)
    reach = _subset_sums(combo)
    # the smallest square never lies on the boundary, so the opposite edges
    # are two disjoint sums over the remaining sides unless one square
    # spans the full height
    rest = combo[1:] if len(combo) > 1 else combo
    h = combo[-1]
    while h * h <= area:
        w = area // h
        if area % h == 0 and reach >> h & 1 and reach >> w & 1:
            if len(combo) == 1 or (
                (h == combo[-1] or _two_disjoint_sums(rest, w))
                and (w == combo[-1] or _two_disjoint_sums(rest, h))
            ):
                yield w, h
        h += 1


def enumerate_squared_rectangles(order: int, max_side: int, budget: int = DEFAULT_BUDGET):
    """All perfect squared rectangles with ``order`` squares of side <= ``max_side``.

    Each is reported once up to symmetry as ``(SquareSet, w, h, Tiling)``
    with ``w >= h``. The node budget is shared by the whole enumeration.
    """
    if order < 1 or max_side < 1:
        raise ValueError("order and max_side must be positive")
    counter = _Counter(budget)
    found: dict[tuple, tuple] = {}
    for combo in itertools.combinations(range(1, max_side + 1), order):
        for w, h in _candidate_rectangles(combo):
            for placed in _tilings(combo, w, h, counter, fewest_first=True, corner_min=True):
                c = canonical(Tiling(Rect(w, h), [Placement(*p) for p in placed]))
                found.setdefault((w, h, combo, c.squares), (SquareSet(combo), w, h, c))
    return [found[k] for k in sorted(found)]


# -- odd-count witnesses ----------------------------------------------------


@lru_cache(maxsize=None)
def moron_tiling() -> Tiling:
    """The 33 x 32 rectangle tiled by nine distinct squares."""
    return solve(MORON_SIDES, 33, 32)


def fib_extend_rect(t: Tiling) -> Tiling:
    """Grow a verified w x h tiling to (w+h) x max(w, h) with one new square.

    The tiling is transposed if needed so its longer edge is vertical, then a
    square of that edge length is appended on the right; the square at the
    origin stays at the origin.
    """
    if not isinstance(t.region, Rect):
        raise ValueError("only rectangle tilings can be extended")
    report = verify(t)
    if not report.passed:
        raise ValueError(f"tiling does not verify: {report.violation}")
    w, h = t.region.width, t.region.height
    m = max(w, h)
    if m in set(t.sides):
        raise DuplicateSideError(m)
    if w > h:
        t = transpose(t)
    r = t.region
    return Tiling(Rect(r.width + m, m), [*t.squares, Placement(r.width, 0, m)])


def witness_for_odd_count(k: int) -> tuple[SquareSet, Tiling]:
    """A rectangle tiling whose side set has exactly ``k`` odd members (k >= 4)."""
    if k < 4:
        raise ValueError("witnesses exist only for k >= 4")
    t = moron_tiling()
    while odd_census(t)[0] < k:
        t = fib_extend_rect(t)
    return SquareSet.of(t.sides), t


@dataclass(frozen=True)
class Infeasible:
    odd_count: int
    lemma: int

    def to_json(self) -> dict:
        return {"verdict": "infeasible", "odd_count": self.odd_count, "lemma": self.lemma}


@dataclass(frozen=True)
class Witness:
    odd_count: int
    sides: SquareSet
    tiling: Tiling
    # set for constructions that go past the recorded odd-count results
    extrapolated: bool = False

    def to_json(self) -> dict:
        from .tiling import tiling_to_json

        return {
            "verdict": "witness",
            "odd_count": self.odd_count,
            "sides": list(self.sides.sides),
            "extrapolated": self.extrapolated,
            "tiling": tiling_to_json(self.tiling),
        }


@dataclass(frozen=True)
class Unknown:
    odd_count: int

    def to_json(self) -> dict:
        return {"verdict": "unknown", "odd_count": self.odd_count}


# exactly one, two or three odd sides can never tile a rectangle
_RECT_IMPOSSIBLE = {1: 4, 2: 5, 3: 6}


def rect_odd_count_verdict(k: int):
    """Can a set with exactly ``k`` odd sides tile a rectangle?

    The infeasible cases concern sets of two or more squares; a lone odd
    square trivially tiles itself.
    """
    if k < 0:
        raise ValueError("odd count must be non-negative")
    if k in _RECT_IMPOSSIBLE:
        return Infeasible(k, _RECT_IMPOSSIBLE[k])
    if k == 0:
        t = _scaled(moron_tiling(), 2)
        return Witness(0, SquareSet.of(t.sides), t, extrapolated=True)
    sides, t = witness_for_odd_count(k)
    return Witness(k, sides, t)
