"""Fibonacci-type integer sequences and disjointness certificates.

A ``FibSeq`` is an optional fixed prefix followed by two seeds and the
recurrence t(n+2) = t(n+1) + t(n), all multiplied by an integer scale.
Disjointness of several such sequences is certified by a finite collision
check plus an interleaving chain that holds at two consecutive base
indices; since every member of the chain obeys the same recurrence from
there on, the chain then holds for every later index by induction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from typing import Sequence


@dataclass(frozen=True)
class FibSeq:
    seed1: int
    seed2: int
    scale: int = 1
    prefix: tuple[int, ...] = ()
    name: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        vals = (self.seed1, self.seed2, self.scale, *self.prefix)
        if any(isinstance(v, bool) or not isinstance(v, int) or v < 1 for v in vals):
            raise ValueError("seeds, scale and prefix terms must be positive integers")

    @property
    def recurrence_start(self) -> int:
        """Smallest n with t(n+2) = t(n+1) + t(n) guaranteed for all later n."""
        return len(self.prefix)

    @property
    def label(self) -> str:
        base = self.name if self.name is not None else _spec_body(self)
        if self.scale == 1:
            return base
        return f"{self.scale}{base}" if self.name is not None else f"{self.scale}*{base}"

    def term(self, n: int) -> int:
        return self.terms(n + 1)[n]

    def terms(self, n: int) -> list[int]:
        if n < 0:
            raise ValueError("term count must be non-negative")
        out = list(self.prefix[:n])
        if n > len(out):
            a, b = self.seed1, self.seed2
            out.append(a)
            while len(out) < n:
                out.append(b)
                a, b = b, a + b
        return [self.scale * t for t in out]

    def __str__(self) -> str:
        body = _spec_body(self)
        return body if self.scale == 1 else f"{self.scale}*{body}"


def _spec_body(seq: FibSeq) -> str:
    if seq.prefix:
        return f"fib({seq.seed1},{seq.seed2};prefix={','.join(map(str, seq.prefix))})"
    return f"fib({seq.seed1},{seq.seed2})"


def scale_seq(seq: FibSeq, k: int) -> FibSeq:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError("scale factor must be a positive integer")
    return replace(seq, scale=seq.scale * k)


_SPEC = re.compile(
    r"\s*(?:(\d+)\s*\*\s*)?fib\(\s*(\d+)\s*,\s*(\d+)\s*(?:;\s*prefix\s*=\s*([\d,\s]+))?\)\s*\Z"
)


def parse_seq(text: str) -> FibSeq:
    """Parse ``fib(14,20)`` or ``23*fib(64,130;prefix=2,8,14)``."""
    m = _SPEC.match(text)
    if not m:
        raise ValueError(f"cannot parse sequence spec {text!r}")
    scale, s1, s2, prefix = m.groups()
    pre = tuple(int(p) for p in prefix.split(",") if p.strip()) if prefix else ()
    return FibSeq(int(s1), int(s2), int(scale) if scale else 1, pre)


# The 64 x 66 base rectangle's side set, the sequence it extends to, and the
# two pure recurrences used around the odd cluster {3, 5, 11}.
BASE_SIDES = (2, 8, 14, 16, 18, 20, 28, 30, 36)
A = FibSeq(64, 130, prefix=BASE_SIDES, name="a")
B = FibSeq(14, 20, name="b")
C = FibSeq(16, 24, name="c")


# -- disjointness ---------------------------------------------------------


@dataclass(frozen=True)
class Inequality:
    """``lhs_label[lhs_index] = lhs < rhs = rhs_label[rhs_index]``."""

    lhs_label: str
    lhs_index: int
    lhs: int
    rhs_label: str
    rhs_index: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs < self.rhs


@dataclass(frozen=True)
class DisjointnessCertificate:
    sequences: tuple[str, ...]
    prefix_horizon: int
    prefix_check: bool
    tail_base_checks: tuple[Inequality, ...]
    tail_rule: str
    tail_proven: bool = True
    # (label, index offset relative to the first sequence) in chain order
    chain: tuple[tuple[str, int], ...] = field(default=())

    @property
    def valid(self) -> bool:
        return (self.prefix_check and self.tail_proven and bool(self.tail_base_checks)
                and all(q.holds for q in self.tail_base_checks))

    def to_json(self) -> dict:
        return {
            "sequences": list(self.sequences),
            "onset": self.prefix_horizon,
            "prefix_check": self.prefix_check,
            "tail_proven": self.tail_proven,
            "valid": self.valid,
            "tail_rule": self.tail_rule,
            "chain": [[lab, off] for lab, off in self.chain],
            # each inequality as [base index of the first sequence, lhs, rhs]
            "inequalities": [
                [self.prefix_horizon + i // len(self.chain), q.lhs, q.rhs]
                for i, q in enumerate(self.tail_base_checks)
            ],
        }


@dataclass(frozen=True)
class Counterexample:
    value: int
    seq_i: str
    seq_j: str

    def to_json(self) -> dict:
        return {"counterexample": self.value, "sequences": [self.seq_i, self.seq_j]}


def _idx(offset: int) -> str:
    if offset == 0:
        return "n"
    return f"{{n+{offset}}}" if offset > 0 else f"{{n-{-offset}}}"


def _term_name(label: str, offset: int) -> str:
    return f"{label}_{_idx(offset)}"


def _find_chain(seqs: Sequence[FibSeq], n0: int):
    """Chain members as (seq position, index) at base ``n0``, or None.

    The first sequence is the reference: every other sequence contributes
    its first recurrence-region term above ref(n0), and all of those must
    fall strictly below ref(n0 + 1).
    """
    ref = seqs[0]
    lo, hi = ref.term(n0), ref.term(n0 + 1)
    members = [(lo, 0, n0)]
    for pos, s in enumerate(seqs[1:], start=1):
        k = s.recurrence_start
        while s.term(k) <= lo:
            k += 1
            if k > n0 + 200:  # sequence far slower than the reference
                return None
        if s.term(k) >= hi:
            return None
        members.append((s.term(k), pos, k))
    members.sort()
    if any(a[0] == b[0] for a, b in zip(members, members[1:])):
        return None
    return [(pos, k) for _, pos, k in members]


def _chain_checks(seqs, chain, shift: int) -> list[Inequality]:
    """Consecutive-member inequalities of the chain advanced by ``shift``."""
    pts = [(pos, k + shift) for pos, k in chain] + [(chain[0][0], chain[0][1] + shift + 1)]
    out = []
    for (p, i), (q, j) in zip(pts, pts[1:]):
        out.append(Inequality(seqs[p].label, i, seqs[p].term(i), seqs[q].label, j, seqs[q].term(j)))
    return out


def pairwise_disjoint(seqs: Sequence[FibSeq], horizon: int = 16):
    """Certify that no value occurs in two of ``seqs``, or return the smallest clash.

    The onset index is searched from the reference sequence's recurrence
    start up to ``horizon``. If no interleaving chain is found, the result is
    a certificate covering the first ``horizon`` terms only, with
    ``tail_proven`` false.
    """
    seqs = list(seqs)
    if len(seqs) < 2:
        raise ValueError("need at least two sequences")
    if horizon < 2:
        raise ValueError("horizon must be at least 2")

    onset, chain = None, None
    for n0 in range(seqs[0].recurrence_start, horizon + 1):
        chain = _find_chain(seqs, n0)
        if chain and all(q.holds for q in _chain_checks(seqs, chain, 1)):
            onset = n0
            break
    else:
        chain = None

    # materialize enough terms that every early value (index before the
    # chain entry point) is compared against everything it could equal
    if chain is not None:
        entry = {pos: k for pos, k in chain}
        bound = max((t for pos, s in enumerate(seqs) for t in s.terms(entry[pos])), default=0)
        counts = []
        for pos, s in enumerate(seqs):
            n = max(horizon, entry[pos] + 3)
            while s.term(n - 1) <= bound:
                n += 1
            counts.append(n)
    else:
        counts = [horizon] * len(seqs)

    owner: dict[int, int] = {}
    clash = None
    for pos, s in enumerate(seqs):
        for t in set(s.terms(counts[pos])):
            other = owner.get(t)
            if other is not None and other != pos:
                if clash is None or t < clash[0]:
                    clash = (t, other, pos)
            else:
                owner[t] = pos
    if clash is not None:
        t, i, j = clash
        return Counterexample(t, seqs[min(i, j)].label, seqs[max(i, j)].label)

    labels = tuple(s.label for s in seqs)
    if chain is None:
        return DisjointnessCertificate(labels, horizon, True, (), "", tail_proven=False)

    checks = _chain_checks(seqs, chain, 0) + _chain_checks(seqs, chain, 1)
    offsets = [(seqs[pos].label, k - onset) for pos, k in chain]
    two_periods = [_term_name(lab, off) for lab, off in offsets]
    two_periods += [_term_name(lab, off + 1) for lab, off in offsets]
    two_periods.append(_term_name(offsets[0][0], offsets[0][1] + 2))
    return DisjointnessCertificate(
        labels, onset, True, tuple(checks), " < ".join(two_periods), True, tuple(offsets)
    )


# -- growth filter --------------------------------------------------------


def exceeds_golden_ratio(a: int, b: int) -> bool:
    """Exactly decide b / a > (1 + sqrt 5) / 2 for positive ints."""
    d = 2 * b - a
    return d > 0 and d * d > 5 * a * a


def golden_ratio_filter(sides: Sequence[int]) -> int | None:
    """First index i with sides[i+1] / sides[i] above the golden ratio."""
    for a, b in zip(sides, sides[1:]):
        if b <= a:
            raise ValueError("sides must be strictly ascending")
    if any(s < 1 for s in sides):
        raise ValueError("sides must be positive")
    for i, (a, b) in enumerate(zip(sides, sides[1:])):
        if exceeds_golden_ratio(a, b):
            return i
    return None
