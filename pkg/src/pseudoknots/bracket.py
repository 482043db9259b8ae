"""Kauffman bracket, Jones polynomial, and knot classification.

The bracket is computed as the full 2^n state sum: each crossing is
smoothed two ways, loops of the resulting crossingless diagram are counted
with union-find over edge labels, and each state contributes
A^(#A - #B) * (-A^2 - A^-2)^(loops - 1).  The Jones polynomial is the
writhe-normalized bracket under A = t^(-1/4); for knots all t-exponents
are integers and we raise if not (that would indicate a bug upstream).

Classification is exact lookup of the Jones polynomial in a table covering
the prime knots through 7 crossings and their mirrors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import PseudoPD, ResolvedPD, writhe
from .laurent import LOOP_FACTOR, LaurentPolynomial

# Smoothings of a crossing stored with slot 0 = incoming under-strand:
# the A-smoothing pairs slots (0,1),(2,3); the B-smoothing (1,2),(3,0).
A_PAIRS = ((0, 1), (2, 3))
B_PAIRS = ((1, 2), (3, 0))


class _UnionFind:
    __slots__ = ("parent", "classes")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.classes = n

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra
            self.classes -= 1


def smoothing_loops(d: PseudoPD, mask: int) -> int:
    """Loop count of the smoothing given by `mask` (bit i set = B at vertex i).

    Works for precrossings too: the two smoothings of a 4-valent vertex do
    not depend on its crossing information.
    """
    uf = _UnionFind(2 * d.n + 1)
    for vi, v in enumerate(d.vertices):
        pairs = B_PAIRS if (mask >> vi) & 1 else A_PAIRS
        for s1, s2 in pairs:
            uf.union(v.edges[s1], v.edges[s2])
    # edge labels are 1..2n; slot 0 of the array is unused
    roots = {uf.find(e) for e in range(1, 2 * d.n + 1)}
    return len(roots)


def kauffman_bracket(d: ResolvedPD) -> LaurentPolynomial:
    """Bracket polynomial in A, with <unknot> = 1."""
    if not d.is_resolved():
        raise ValueError("kauffman_bracket needs a resolved diagram")
    n = d.n
    if n == 0:
        return LaurentPolynomial.one()
    delta_powers = _delta_powers(n + 1)
    acc = LaurentPolynomial.zero()
    for mask in range(1 << n):
        b = mask.bit_count()
        loops = smoothing_loops(d, mask)
        acc = acc + delta_powers[loops - 1].scale(1, n - 2 * b)
    return acc


def _delta_powers(k: int) -> list[LaurentPolynomial]:
    powers = [LaurentPolynomial.one()]
    for _ in range(k):
        powers.append(powers[-1] * LOOP_FACTOR)
    return powers


def bracket_to_jones(bracket: LaurentPolynomial, w: int) -> LaurentPolynomial:
    """Apply the writhe normalization (-A^3)^(-w) and substitute A = t^(-1/4)."""
    sign = -1 if w % 2 else 1
    normalized = bracket.scale(sign, -3 * w)
    for e, _ in normalized.items():
        if e % 4:
            raise ValueError(f"non-integer t-exponent (A-exponent {e}); knot input expected")
    return normalized.map_exponents(lambda e: -e // 4)


def jones(d: ResolvedPD) -> LaurentPolynomial:
    """Jones polynomial in t of a resolved (knot) diagram."""
    return bracket_to_jones(kauffman_bracket(d), writhe(d))


# ---------------------------------------------------------------------------
# Knot names and the lookup table
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class KnotName:
    """A Rolfsen-style name with chirality: sign is 0 for amphichiral/unknot."""

    crossing_number: int
    index: int
    sign: int  # +1, -1, or 0 when the name is unsigned

    def __str__(self) -> str:
        base = f"{self.crossing_number}_{self.index}"
        return f"-{base}" if self.sign < 0 else base

    @classmethod
    def parse(cls, text: str) -> "KnotName":
        t = text.strip()
        sign = 0
        if t.startswith("-"):
            sign = -1
            t = t[1:]
        elif t.startswith("+"):
            sign = 1
            t = t[1:]
        cn, _, idx = t.partition("_")
        if not _:
            raise ValueError(f"malformed knot name {text!r}")
        name = cls(int(cn), int(idx), sign)
        return name

    def mirror(self) -> "KnotName":
        return KnotName(self.crossing_number, self.index, -self.sign)


@dataclass(frozen=True)
class Unknown:
    """Classification miss: carries the computed Jones polynomial."""

    jones: LaurentPolynomial

    def __str__(self) -> str:
        return f"unknown[{self.jones.pretty()}]"


@dataclass(frozen=True)
class TableEntry:
    name: KnotName
    crossing_number: int
    amphichiral: bool
    jones: LaurentPolynomial


class KnotTableError(ValueError):
    pass


class KnotTable:
    """Jones-polynomial lookup table; mirrors are distinct entries."""

    def __init__(self, entries: list[TableEntry]):
        self.entries = list(entries)
        self._by_jones: dict[LaurentPolynomial, TableEntry] = {}
        for e in self.entries:
            if e.jones in self._by_jones:
                raise KnotTableError(f"duplicate Jones polynomial for {e.name}")
            self._by_jones[e.jones] = e
        self._validate()

    def _validate(self) -> None:
        by_name = {str(e.name): e for e in self.entries}
        for e in self.entries:
            if e.amphichiral or e.name.sign == 0:
                if not e.amphichiral and e.crossing_number != 0:
                    raise KnotTableError(f"{e.name}: unsigned chiral entry")
                if e.jones != e.jones.invert_variable():
                    raise KnotTableError(f"{e.name}: amphichiral entry with asymmetric Jones")
            else:
                partner = by_name.get(str(e.name.mirror()))
                if partner is None:
                    raise KnotTableError(f"{e.name}: mirror entry missing")
                if partner.jones != e.jones.invert_variable():
                    raise KnotTableError(f"{e.name}: mirror Jones mismatch")

    def lookup(self, poly: LaurentPolynomial) -> "KnotName | None":
        entry = self._by_jones.get(poly)
        return entry.name if entry else None

    # -- line-oriented file format ------------------------------------------
    # name crossing_number amphichiral exponent:coeff,exponent:coeff,...

    def to_text(self) -> str:
        lines = []
        for e in self.entries:
            lines.append(
                f"{e.name} {e.crossing_number} "
                f"{'1' if e.amphichiral else '0'} {e.jones.to_pairs_string()}"
            )
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "KnotTable":
        entries = []
        for ln, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                name_s, cn_s, amph_s, poly_s = line.split()
            except ValueError as exc:
                raise KnotTableError(f"line {ln}: expected 4 fields") from exc
            name = KnotName.parse(name_s)
            amph = amph_s == "1"
            if not amph and name.sign == 0:
                # chiral entries display the base chirality without a prefix
                name = KnotName(name.crossing_number, name.index, 1)
            entries.append(
                TableEntry(
                    name=name,
                    crossing_number=int(cn_s),
                    amphichiral=amph,
                    jones=LaurentPolynomial.from_pairs_string(poly_s),
                )
            )
        return cls(entries)


def classify(d: ResolvedPD, table: KnotTable) -> "KnotName | Unknown":
    """Name the knot type of `d` by exact Jones lookup; Unknown on a miss."""
    return classify_jones(jones(d), table)


def classify_jones(poly: LaurentPolynomial, table: KnotTable) -> "KnotName | Unknown":
    name = table.lookup(poly)
    return name if name is not None else Unknown(poly)


def build_table(source: list[tuple[str, ResolvedPD]]) -> KnotTable:
    """Build the lookup table from named reference diagrams.

    Chiral knots contribute two entries: the diagram's Jones under the base
    name and the inverted-variable Jones under the mirror name.  Entries
    whose Jones is symmetric under t -> 1/t are amphichiral and unsigned.
    """
    if not source:
        raise KnotTableError("empty source diagram list")
    entries: list[TableEntry] = []
    for name_s, diagram in source:
        name = KnotName.parse(name_s)
        v = jones(diagram)
        amph = v == v.invert_variable()
        if amph:
            entries.append(TableEntry(name, name.crossing_number, True, v))
        else:
            base = KnotName(name.crossing_number, name.index, 1)
            entries.append(TableEntry(base, name.crossing_number, False, v))
            entries.append(
                TableEntry(base.mirror(), name.crossing_number, False, v.invert_variable())
            )
    return KnotTable(entries)
