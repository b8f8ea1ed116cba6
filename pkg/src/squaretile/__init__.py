"""Perfect tilings of rectangles and plane windows by pairwise-distinct squares."""

from .plane import (
    Impossible,
    PlaneUnknown,
    Possible,
    Quadrant,
    WhirlSpec,
    pinwheel_patch,
    plane_odd_count_verdict,
    quadrant_whirl_patch,
    three_odds_patch,
)
from .rectangles import (
    BudgetExceeded,
    DuplicateSideError,
    Infeasible,
    SquareSet,
    Unknown,
    Witness,
    enumerate_squared_rectangles,
    fib_extend_rect,
    rect_odd_count_verdict,
    search,
    solve,
    witness_for_odd_count,
)
from .render import bouwkamp, render_png, render_svg, svg_document
from .sequences import (
    A,
    B,
    C,
    Counterexample,
    DisjointnessCertificate,
    FibSeq,
    golden_ratio_filter,
    pairwise_disjoint,
    parse_seq,
    scale_seq,
)
from .tiling import (
    DuplicateSide,
    Gap,
    OutOfRegion,
    Overlap,
    Placement,
    Rect,
    Tiling,
    VerificationReport,
    Window,
    area_identity,
    odd_census,
    scale_tiling,
    verify,
)

__version__ = "0.1.0"
