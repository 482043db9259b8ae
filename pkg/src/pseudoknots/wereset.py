"""Signed weighted resolution sets (were-sets) of pseudodiagrams.

The were-set of a pseudodiagram with k precrossings is computed by
exhaustive enumeration: all 2^k resolutions are classified by Jones
polynomial and aggregated with exact probabilities count / 2^k.

The bracket state sum is shared across resolutions: the loop count of a
smoothing depends only on which planar pairing is chosen at each vertex,
never on crossing signs, so the 2^n loop counts are computed once and each
resolution only permutes which pairing counts as the A-smoothing.  That
turns the inner loop into an XOR-indexed histogram, done with numpy.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .bracket import (
    KnotName,
    KnotTable,
    Unknown,
    bracket_to_jones,
    classify_jones,
    smoothing_loops,
)
from .diagram import PseudoPD, positive_over_is_strand_two
from .laurent import LOOP_FACTOR, LaurentPolynomial


@dataclass(frozen=True)
class WereSet:
    """Map from knot type to (count, exact probability with 2^k denominator)."""

    precrossings: int
    entries: dict[KnotName, int] = field(default_factory=dict)
    unknown: dict[LaurentPolynomial, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return 1 << self.precrossings

    def count_sum(self) -> int:
        return sum(self.entries.values()) + sum(self.unknown.values())

    def probability(self, name: KnotName) -> Fraction:
        return Fraction(self.entries.get(name, 0), self.total)

    def probability_map(self) -> dict:
        out: dict = {name: Fraction(c, self.total) for name, c in self.entries.items()}
        for poly, c in self.unknown.items():
            out[("unknown", poly)] = Fraction(c, self.total)
        return out

    def mirrored(self) -> "WereSet":
        flipped: dict[KnotName, int] = {}
        for name, c in self.entries.items():
            flipped[name.mirror()] = flipped.get(name.mirror(), 0) + c
        return WereSet(
            self.precrossings,
            flipped,
            {p.invert_variable(): c for p, c in self.unknown.items()},
        )

    def sorted_entries(self) -> list[tuple[KnotName, int]]:
        return sorted(
            self.entries.items(),
            key=lambda kv: (kv[0].crossing_number, kv[0].index, kv[0].sign),
        )

    def paper_style(self) -> str:
        """Brace rendering like `{{0_1,72},{-3_1,10},...}`."""
        parts = [f"{{{name},{count}}}" for name, count in self.sorted_entries()]
        parts.extend(
            f"{{unknown[{p.pretty()}],{c}}}"
            for p, c in sorted(self.unknown.items(), key=lambda kv: kv[0].items())
        )
        return "{" + ",".join(parts) + "}"

    def to_json_dict(self) -> dict:
        return {
            "precrossings": self.precrossings,
            "total": self.total,
            "entries": [
                {
                    "knot": str(name),
                    "count": count,
                    "probability": f"{Fraction(count, self.total)}",
                }
                for name, count in self.sorted_entries()
            ],
            "unknown": [
                {
                    "jones": p.to_pairs_string(),
                    "count": c,
                    "probability": f"{Fraction(c, self.total)}",
                }
                for p, c in sorted(self.unknown.items(), key=lambda kv: kv[0].items())
            ],
        }


def wereset_equal(a: WereSet, b: WereSet) -> bool:
    """True iff the name -> probability maps agree exactly."""
    return a.probability_map() == b.probability_map()


def _popcounts(n_bits: int) -> np.ndarray:
    size = 1 << n_bits
    v = np.arange(size, dtype=np.uint32)
    v = v - ((v >> 1) & 0x55555555)
    v = (v & 0x33333333) + ((v >> 2) & 0x33333333)
    v = (v + (v >> 4)) & 0x0F0F0F0F
    return ((v * 0x01010101) >> 24).astype(np.int64)


class _SharedStateSum:
    """Loop counts and popcounts shared by every resolution of one diagram."""

    def __init__(self, d: PseudoPD):
        self.d = d
        self.n = d.n
        size = 1 << self.n
        loops = np.empty(size, dtype=np.int64)
        for mask in range(size):
            loops[mask] = smoothing_loops(d, mask)
        self.loops = loops
        self.max_loops = int(loops.max()) if size else 1
        self.pop = _popcounts(self.n)
        self.indices = np.arange(size, dtype=np.int64)
        self.delta_powers = [LaurentPolynomial.one()]
        for _ in range(self.max_loops):
            self.delta_powers.append(self.delta_powers[-1] * LOOP_FACTOR)
        # vertices where the positive resolution leaves the A-smoothing at
        # the even pairing (see diagram.positive_over_is_strand_two)
        self.sign_at_even = {
            vi: (1 if positive_over_is_strand_two(d, vi) else -1)
            for vi, v in enumerate(d.vertices)
            if not v.is_classical()
        }
        self.pre_order = [vi for vi, v in enumerate(d.vertices) if not v.is_classical()]
        self.classical_writhe = sum(
            v.sign for v in d.vertices if v.is_classical()
        )

    def bracket_for(self, choice_bits: int) -> tuple[LaurentPolynomial, int]:
        """Bracket and writhe of the resolution given by choice bits.

        Bit j of `choice_bits` set means precrossing `pre_order[j]` resolves
        to -1, clear means +1.
        """
        m = 0
        w = self.classical_writhe
        for j, vi in enumerate(self.pre_order):
            c = -1 if (choice_bits >> j) & 1 else 1
            w += c
            if c != self.sign_at_even[vi]:
                m |= 1 << vi
        if self.n == 0:
            return LaurentPolynomial.one(), w
        lperm = self.loops[self.indices ^ m]
        width = self.max_loops + 1
        hist = np.bincount(
            self.pop * width + lperm, minlength=(self.n + 1) * width
        ).reshape(self.n + 1, width)
        acc = LaurentPolynomial.zero()
        for p, l in zip(*np.nonzero(hist)):
            count = int(hist[p, l])
            acc = acc + self.delta_powers[l - 1].scale(count, self.n - 2 * p)
        return acc, w


def wereset(
    d: PseudoPD,
    table: KnotTable,
    workers: int = 1,
    simplify: bool = False,
) -> WereSet:
    """Exhaustive were-set of `d`: classify all 2^k resolutions.

    `simplify` switches to the per-resolution path with Reidemeister
    reduction before the bracket; the default shares the smoothing loop
    table across resolutions, which is much faster and exactly equivalent.
    """
    k = len(d.precrossing_ids())
    if simplify:
        return _wereset_simplify(d, table)
    shared = _SharedStateSum(d)

    def run_chunk(lo: int, hi: int) -> tuple[dict, dict]:
        entries: dict[KnotName, int] = {}
        unknown: dict[LaurentPolynomial, int] = {}
        for bits in range(lo, hi):
            bracket, w = shared.bracket_for(bits)
            v = bracket_to_jones(bracket, w)
            named = classify_jones(v, table)
            if isinstance(named, Unknown):
                unknown[named.jones] = unknown.get(named.jones, 0) + 1
            else:
                entries[named] = entries.get(named, 0) + 1
        return entries, unknown

    total = 1 << k
    workers = max(1, workers)
    bounds = [
        (i * total // workers, (i + 1) * total // workers) for i in range(workers)
    ]
    if workers == 1:
        results = [run_chunk(*bounds[0])]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda b: run_chunk(*b), bounds))

    entries: dict[KnotName, int] = {}
    unknown: dict[LaurentPolynomial, int] = {}
    for part_entries, part_unknown in results:
        for name, c in part_entries.items():
            entries[name] = entries.get(name, 0) + c
        for poly, c in part_unknown.items():
            unknown[poly] = unknown.get(poly, 0) + c
    ws = WereSet(k, entries, unknown)
    if ws.count_sum() != ws.total:
        raise AssertionError("resolution counts do not sum to 2^k")
    return ws


def _wereset_simplify(d: PseudoPD, table: KnotTable) -> WereSet:
    from .diagram import resolve
    from .pdmoves import pd_reduce

    pre_ids = d.precrossing_ids()
    k = len(pre_ids)
    entries: dict[KnotName, int] = {}
    unknown: dict[LaurentPolynomial, int] = {}
    from .bracket import classify

    for bits in range(1 << k):
        choice = {
            pid: (-1 if (bits >> j) & 1 else 1) for j, pid in enumerate(pre_ids)
        }
        resolved = pd_reduce(resolve(d, choice))
        named = classify(resolved, table)
        if isinstance(named, Unknown):
            unknown[named.jones] = unknown.get(named.jones, 0) + 1
        else:
            entries[named] = entries.get(named, 0) + 1
    ws = WereSet(k, entries, unknown)
    if ws.count_sum() != ws.total:
        raise AssertionError("resolution counts do not sum to 2^k")
    return ws
