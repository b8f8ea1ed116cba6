"""Finite windows onto two tilings of the whole plane by distinct squares.

Both constructions split the plane into four quarter-planes and fill each
one with a whirl: starting from a rectangle at the quarter-plane's corner,
squares are appended alternately along the two axes, always away from the
corner, so the appended sides follow the Fibonacci recurrence and the
growing rectangle eventually covers any bounded part of the quarter-plane.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .rectangles import solve
from .sequences import A, B, C, Counterexample, pairwise_disjoint, scale_seq
from .tiling import Placement, Rect, Tiling, Window, sorted_squares, verify

HORIZONTAL = "horizontal"
VERTICAL = "vertical"
PINWHEEL_SCALES = (23, 24, 25, 26)


@dataclass(frozen=True)
class Quadrant:
    """The quarter-plane of cells corner + (dir_x * u, dir_y * v), u, v >= 0."""

    corner: tuple[int, int]
    dir_x: int
    dir_y: int

    def __post_init__(self):
        if self.dir_x not in (1, -1) or self.dir_y not in (1, -1):
            raise ValueError("quadrant directions must be +1 or -1")

    def local_extent(self, window: Window) -> tuple[int, int]:
        """How far (u, v) must reach to cover window ∩ quadrant; <= 0 if disjoint."""
        cx, cy = self.corner
        u = window.x1 - cx if self.dir_x > 0 else cx - window.x0
        v = window.y1 - cy if self.dir_y > 0 else cy - window.y0
        return u, v

    def to_global(self, u: int, v: int, side: int) -> Placement:
        cx, cy = self.corner
        x = cx + u if self.dir_x > 0 else cx - u - side
        y = cy + v if self.dir_y > 0 else cy - v - side
        return Placement(x, y, side)


@dataclass(frozen=True)
class WhirlSpec:
    """A whirl grown from a ``width`` x ``height`` starting rectangle.

    ``base`` tiles the starting rectangle (before scaling). When it is None
    the starting rectangle is left empty for the caller to fill.
    """

    width: int
    height: int
    scale: int = 1
    first_growth_axis: str = HORIZONTAL
    base: Tiling | None = None

    def __post_init__(self):
        if self.first_growth_axis not in (HORIZONTAL, VERTICAL):
            raise ValueError("first_growth_axis must be 'horizontal' or 'vertical'")
        if min(self.width, self.height, self.scale) < 1:
            raise ValueError("whirl dimensions and scale must be positive")
        if self.base is not None:
            r = self.base.region
            if not isinstance(r, Rect) or (r.width, r.height) != (self.width, self.height):
                raise ValueError("base must tile the width x height rectangle")
            if not verify(self.base).passed:
                raise ValueError("base tiling does not verify")

    @classmethod
    def from_base(cls, base: Tiling, scale: int = 1, first_growth_axis: str = HORIZONTAL):
        return cls(base.region.width, base.region.height, scale, first_growth_axis, base)


def whirl_squares(spec: WhirlSpec) -> Iterator[tuple[int, int, int, int, int]]:
    """Endless (u, v, side, width, height) for each appended square.

    ``width`` and ``height`` are the size of the grown rectangle after the
    square is added; everything is already multiplied by the scale.
    """
    w, h = spec.width * spec.scale, spec.height * spec.scale
    horizontal = spec.first_growth_axis == HORIZONTAL
    while True:
        if horizontal:
            u, v, side = w, 0, h
            w += h
        else:
            u, v, side = 0, h, w
            h += w
        yield u, v, side, w, h
        horizontal = not horizontal


def quadrant_whirl_patch(spec: WhirlSpec, q: Quadrant, window: Window) -> list[Placement]:
    """Placements of one whirl that intersect ``window``, sorted by (y, x)."""
    need_u, need_v = q.local_extent(window)
    if need_u <= 0 or need_v <= 0:
        return []
    m = spec.scale
    local = []
    if spec.base is not None:
        local = [(p.x * m, p.y * m, p.side * m) for p in spec.base.squares]
    w, h = spec.width * m, spec.height * m
    extra = 1  # one more square past full coverage
    for u, v, side, w2, h2 in whirl_squares(spec):
        if w >= need_u and h >= need_v:
            if extra == 0:
                break
            extra -= 1
        local.append((u, v, side))
        w, h = w2, h2
    out = [q.to_global(u, v, s) for u, v, s in local]
    return list(sorted_squares(p for p in out if p.intersects(*window.bounds)))


@lru_cache(maxsize=None)
def base_66x64() -> Tiling:
    """The 66 x 64 rectangle tiled by {2, 8, 14, 16, 18, 20, 28, 30, 36}."""
    return solve(A.prefix, 66, 64)


@lru_cache(maxsize=None)
def _check_scales(scales: tuple[int, ...]) -> None:
    result = pairwise_disjoint([scale_seq(A, k) for k in scales])
    if isinstance(result, Counterexample) or not result.valid:
        raise ValueError(f"scaled base sequences for {scales} are not certified disjoint: {result}")


def _as_window(window) -> Window:
    if isinstance(window, Window):
        return window
    return Window(*window)


def pinwheel_patch(x: int, window, scales: tuple[int, int, int, int] = PINWHEEL_SCALES) -> Tiling:
    """Plane tiling with a single odd square of side ``x``, clipped to ``window``.

    The square sits at [0, x)^2 and its four extended edges cut the rest of
    the plane into quarter-planes turning counterclockwise, filled by whirls
    of the 66 x 64 base scaled by ``scales`` in that order.
    """
    if isinstance(x, bool) or not isinstance(x, int) or x < 1 or x % 2 == 0:
        raise ValueError("central side must be a positive odd integer")
    scales = tuple(scales)
    if len(scales) != 4:
        raise ValueError("need exactly four scales")
    _check_scales(scales)
    window = _as_window(window)
    quads = [
        Quadrant((x, 0), 1, 1),
        Quadrant((x, x), -1, 1),
        Quadrant((0, x), -1, -1),
        Quadrant((0, 0), 1, -1),
    ]
    squares = []
    centre = Placement(0, 0, x)
    if centre.intersects(*window.bounds):
        squares.append(centre)
    for q, k in zip(quads, scales):
        squares += quadrant_whirl_patch(WhirlSpec.from_base(base_66x64(), k), q, window)
    return Tiling(window, sorted_squares(squares))


# Odd cluster and whirl layout for the three-odd construction. The two
# seedless whirls start from empty 6 x 14 and 8 x 16 rectangles whose
# cells are covered by the cluster and by each other's first squares; the
# two quarter-planes of the B and C whirls overlap in [0, 3) x [0, 19).
THREE_ODDS_CLUSTER = (Placement(-5, 3, 11), Placement(-5, 14, 5), Placement(3, 0, 3))
_B_WHIRL = (WhirlSpec(6, 14), Quadrant((0, 0), 1, 1))
_C_WHIRL = (WhirlSpec(8, 16), Quadrant((3, 19), -1, -1))
_A_QUADRANTS = ((23, Quadrant((0, 19), -1, 1)), (24, Quadrant((3, 0), 1, -1)))


def three_odds_sequences():
    return [B, C, scale_seq(A, 23), scale_seq(A, 24)]


def three_odds_patch(window) -> Tiling:
    """Plane tiling whose only odd sides are 3, 5 and 11, clipped to ``window``."""
    window = _as_window(window)
    squares = [p for p in THREE_ODDS_CLUSTER if p.intersects(*window.bounds)]
    for spec, q in (_B_WHIRL, _C_WHIRL):
        squares += quadrant_whirl_patch(spec, q, window)
    for k, q in _A_QUADRANTS:
        squares += quadrant_whirl_patch(WhirlSpec.from_base(base_66x64(), k), q, window)
    return Tiling(window, sorted_squares(squares))


# -- verdicts -----------------------------------------------------------------


@dataclass(frozen=True)
class Possible:
    odd_count: int
    construction: str

    def to_json(self) -> dict:
        return {"verdict": "possible", "odd_count": self.odd_count, "construction": self.construction}


@dataclass(frozen=True)
class Impossible:
    odd_count: int
    lemma: int

    def to_json(self) -> dict:
        return {"verdict": "impossible", "odd_count": self.odd_count, "lemma": self.lemma}


@dataclass(frozen=True)
class PlaneUnknown:
    odd_count: int

    def to_json(self) -> dict:
        return {"verdict": "unknown", "odd_count": self.odd_count}


def plane_odd_count_verdict(k: int):
    if k < 0:
        raise ValueError("odd count must be non-negative")
    if k == 1:
        return Possible(1, "pinwheel")
    if k == 3:
        return Possible(3, "three-odds")
    if k == 2:
        # recorded result without a constructive counterpart
        return Impossible(2, 2)
    return PlaneUnknown(k)
