"""Domain types for square tilings plus the exact-cover verifier.

Occupancy is half-open: a placement at (x, y) with side s covers
[x, x+s) x [y, y+s), so shared edges never count as overlaps. All
arithmetic is on Python ints; nothing here ever rounds.
"""

from __future__ import annotations

import bisect
import re
from dataclasses import dataclass, field
from typing import Iterable, Union

import numpy as np

# integers above this are written as decimal strings in JSON
JSON_SAFE_INT = 2**53


def _check_int(name: str, value) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")


@dataclass(frozen=True, order=True)
class Placement:
    """One axis-aligned square with lower-left corner (x, y)."""

    x: int
    y: int
    side: int

    def __post_init__(self):
        for name in ("x", "y", "side"):
            _check_int(name, getattr(self, name))
        if self.side < 1:
            raise ValueError(f"side must be >= 1, got {self.side}")

    @property
    def x1(self) -> int:
        return self.x + self.side

    @property
    def y1(self) -> int:
        return self.y + self.side

    def intersects(self, x0: int, y0: int, x1: int, y1: int) -> bool:
        return self.x < x1 and x0 < self.x1 and self.y < y1 and y0 < self.y1


@dataclass(frozen=True)
class Rect:
    """A width x height rectangle anchored at the origin."""

    width: int
    height: int

    def __post_init__(self):
        _check_int("width", self.width)
        _check_int("height", self.height)
        if self.width < 1 or self.height < 1:
            raise ValueError("rectangle dimensions must be positive")

    @property
    def bounds(self) -> tuple[int, int, int, int]:
        return 0, 0, self.width, self.height

    @property
    def area(self) -> int:
        return self.width * self.height


@dataclass(frozen=True)
class Window:
    """A finite view [x0, x1) x [y0, y1) of an unbounded construction."""

    x0: int
    y0: int
    x1: int
    y1: int

    def __post_init__(self):
        for name in ("x0", "y0", "x1", "y1"):
            _check_int(name, getattr(self, name))
        if not (self.x0 < self.x1 and self.y0 < self.y1):
            raise ValueError("window needs x0 < x1 and y0 < y1")

    @property
    def bounds(self) -> tuple[int, int, int, int]:
        return self.x0, self.y0, self.x1, self.y1

    @property
    def area(self) -> int:
        return (self.x1 - self.x0) * (self.y1 - self.y0)


Region = Union[Rect, Window]


@dataclass(frozen=True)
class Tiling:
    region: Region
    squares: tuple[Placement, ...] = field(default_factory=tuple)

    def __post_init__(self):
        # accept any iterable but store a tuple so the value stays hashable
        object.__setattr__(self, "squares", tuple(self.squares))

    @property
    def sides(self) -> list[int]:
        return [p.side for p in self.squares]


# -- violations ------------------------------------------------------------


@dataclass(frozen=True)
class Overlap:
    first: int
    second: int
    kind = "overlap"


@dataclass(frozen=True)
class Gap:
    point: tuple[int, int]
    kind = "gap"


@dataclass(frozen=True)
class DuplicateSide:
    side: int
    kind = "duplicate_side"


@dataclass(frozen=True)
class OutOfRegion:
    index: int
    kind = "out_of_region"


Violation = Union[Overlap, Gap, DuplicateSide, OutOfRegion]


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    violation: Violation | None
    odd_sides: tuple[int, ...]


def _odd_sides(squares: Iterable[Placement]) -> tuple[int, ...]:
    return tuple(sorted({p.side for p in squares if p.side % 2}))


def _duplicate_side(squares) -> int | None:
    seen, dups = set(), set()
    for p in squares:
        (dups if p.side in seen else seen).add(p.side)
    return min(dups) if dups else None


def _first_overlap(squares) -> tuple[int, int] | None:
    order = sorted(range(len(squares)), key=lambda i: squares[i].x)
    best = None
    for a, i in enumerate(order):
        p = squares[i]
        for j in order[a + 1:]:
            q = squares[j]
            if q.x >= p.x1:
                break
            if q.y < p.y1 and p.y < q.y1:
                pair = (min(i, j), max(i, j))
                if best is None or pair < best:
                    best = pair
    return best


def _first_gap(squares, bounds) -> tuple[int, int] | None:
    """Smallest uncovered lattice point in (y, x) order, or None.

    Works on the grid induced by the square edges, so the cost depends on
    the number of squares and not on the coordinates.
    """
    x0, y0, x1, y1 = bounds
    clipped = [
        (max(p.x, x0), max(p.y, y0), min(p.x1, x1), min(p.y1, y1))
        for p in squares
        if p.intersects(x0, y0, x1, y1)
    ]
    xs = sorted({x0, x1, *(c[0] for c in clipped), *(c[2] for c in clipped)})
    ys = sorted({y0, y1, *(c[1] for c in clipped), *(c[3] for c in clipped)})
    covered = np.zeros((len(ys) - 1, len(xs) - 1), dtype=bool)
    for cx0, cy0, cx1, cy1 in clipped:
        i0, i1 = bisect.bisect_left(ys, cy0), bisect.bisect_left(ys, cy1)
        j0, j1 = bisect.bisect_left(xs, cx0), bisect.bisect_left(xs, cx1)
        covered[i0:i1, j0:j1] = True
    holes = np.argwhere(~covered)
    if len(holes) == 0:
        return None
    i, j = holes[0]  # argwhere is row-major, i.e. lowest y then lowest x
    return xs[j], ys[i]


def verify(t: Tiling) -> VerificationReport:
    """Check that ``t`` is a perfect tiling of its region.

    Violations are reported in a fixed priority: duplicate side, then a
    square leaving a rectangular region, then overlap, then gap.
    """
    squares = t.squares
    odd = _odd_sides(squares)

    def fail(v):
        return VerificationReport(False, v, odd)

    dup = _duplicate_side(squares)
    if dup is not None:
        return fail(DuplicateSide(dup))

    bounds = t.region.bounds
    if isinstance(t.region, Rect):
        for i, p in enumerate(squares):
            if p.x < 0 or p.y < 0 or p.x1 > t.region.width or p.y1 > t.region.height:
                return fail(OutOfRegion(i))

    pair = _first_overlap(squares)
    if pair is not None:
        return fail(Overlap(*pair))

    if isinstance(t.region, Rect) and sum(p.side**2 for p in squares) == t.region.area:
        return VerificationReport(True, None, odd)
    gap = _first_gap(squares, bounds)
    if gap is not None:
        return fail(Gap(gap))
    return VerificationReport(True, None, odd)


def area_identity(sides: Iterable[int], w: int, h: int) -> bool:
    return sum(s * s for s in sides) == w * h


def odd_census(t: Tiling) -> tuple[int, list[int]]:
    odd = list(_odd_sides(t.squares))
    return len(odd), odd


def scale_tiling(t: Tiling, m: int) -> Tiling:
    """Multiply every coordinate and side by the odd factor ``m``."""
    _check_int("m", m)
    if m < 1 or m % 2 == 0:
        raise ValueError(f"scale factor must be a positive odd integer, got {m}")
    return _scaled(t, m)


def _scaled(t: Tiling, m: int) -> Tiling:
    # no parity check; callers that need an even factor use this directly
    if isinstance(t.region, Rect):
        region = Rect(t.region.width * m, t.region.height * m)
    else:
        region = Window(*(c * m for c in t.region.bounds))
    return Tiling(region, [Placement(p.x * m, p.y * m, p.side * m) for p in t.squares])


def sorted_squares(squares: Iterable[Placement]) -> tuple[Placement, ...]:
    return tuple(sorted(squares, key=lambda p: (p.y, p.x, p.side)))


# -- JSON document ---------------------------------------------------------

_INT_STR = re.compile(r"-?\d+\Z")


def _enc(n: int):
    return str(n) if abs(n) > JSON_SAFE_INT else n


def _dec(value, where: str) -> int:
    if isinstance(value, bool):
        raise ValueError(f"{where}: expected integer, got boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and _INT_STR.match(value):
        return int(value)
    raise ValueError(f"{where}: expected integer, got {value!r}")


def _expect_keys(obj, keys: set[str], where: str) -> None:
    if not isinstance(obj, dict):
        raise ValueError(f"{where}: expected an object")
    extra = set(obj) - keys
    if extra:
        raise ValueError(f"{where}: unknown field(s) {sorted(extra)}")
    missing = keys - set(obj)
    if missing:
        raise ValueError(f"{where}: missing field(s) {sorted(missing)}")


def region_to_json(region: Region) -> dict:
    if isinstance(region, Rect):
        return {"type": "rect", "w": _enc(region.width), "h": _enc(region.height)}
    return {"type": "window", **{k: _enc(getattr(region, k)) for k in ("x0", "y0", "x1", "y1")}}


def tiling_to_json(t: Tiling) -> dict:
    return {
        "region": region_to_json(t.region),
        "squares": [{"x": _enc(p.x), "y": _enc(p.y), "s": _enc(p.side)} for p in t.squares],
    }


def region_from_json(obj) -> Region:
    if not isinstance(obj, dict) or obj.get("type") not in ("rect", "window"):
        raise ValueError('region: "type" must be "rect" or "window"')
    if obj["type"] == "rect":
        _expect_keys(obj, {"type", "w", "h"}, "region")
        return Rect(_dec(obj["w"], "region.w"), _dec(obj["h"], "region.h"))
    _expect_keys(obj, {"type", "x0", "y0", "x1", "y1"}, "region")
    return Window(*(_dec(obj[k], f"region.{k}") for k in ("x0", "y0", "x1", "y1")))


def tiling_from_json(obj) -> Tiling:
    _expect_keys(obj, {"region", "squares"}, "tiling")
    if not isinstance(obj["squares"], list):
        raise ValueError("squares: expected a list")
    squares = []
    for i, sq in enumerate(obj["squares"]):
        _expect_keys(sq, {"x", "y", "s"}, f"squares[{i}]")
        squares.append(
            Placement(_dec(sq["x"], f"squares[{i}].x"), _dec(sq["y"], f"squares[{i}].y"),
                      _dec(sq["s"], f"squares[{i}].s"))
        )
    return Tiling(region_from_json(obj["region"]), squares)


def violation_to_json(v: Violation | None):
    if v is None:
        return None
    if isinstance(v, Overlap):
        return {"kind": v.kind, "squares": [v.first, v.second]}
    if isinstance(v, Gap):
        return {"kind": v.kind, "point": [_enc(v.point[0]), _enc(v.point[1])]}
    if isinstance(v, DuplicateSide):
        return {"kind": v.kind, "side": _enc(v.side)}
    return {"kind": v.kind, "square": v.index}


def report_to_json(r: VerificationReport) -> dict:
    return {
        "passed": r.passed,
        "violation": violation_to_json(r.violation),
        "odd_sides": [_enc(s) for s in r.odd_sides],
    }
