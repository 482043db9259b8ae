"""Reference diagrams and the bundled knot table.

Standard diagrams for the prime knots through 7 crossings are generated
from their rational (Conway) twist codes: all of these knots are 2-bridge,
so each is the numerator closure of an alternating twist tangle.  Names are
assigned by two classical integer invariants that identify every knot in
this range uniquely once the crossing number is fixed:

  * crossing number = Jones span (reduced alternating diagrams), and
  * determinant     = |V(-1)|.

Both are asserted at build time, so a wrong twist code cannot silently
mislabel an entry.  For chiral knots the base (unsigned) name is given to
the chirality whose Jones polynomial leans toward negative exponents
(min degree + max degree < 0); the mirror gets the `-` prefix.
"""

from __future__ import annotations

from importlib import resources

from .bracket import KnotTable, build_table, jones
from .diagram import PRECROSSING, PseudoPD, ResolvedPD, make_pd, mirror, traversal_darts

# name -> (twist code, determinant)
RATIONAL_KNOTS: dict[str, tuple[tuple[int, ...], int]] = {
    "3_1": ((3,), 3),
    "4_1": ((2, 2), 5),
    "5_1": ((5,), 5),
    "5_2": ((3, 2), 7),
    "6_1": ((4, 2), 9),
    "6_2": ((3, 1, 2), 11),
    "6_3": ((2, 1, 1, 2), 13),
    "7_1": ((7,), 7),
    "7_2": ((5, 2), 11),
    "7_3": ((4, 3), 13),
    "7_4": ((3, 1, 3), 15),
    "7_5": ((3, 2, 2), 17),
    "7_6": ((2, 2, 1, 2), 19),
    "7_7": ((2, 1, 1, 1, 2), 21),
}


class _TangleBuilder:
    """Open 4-ended tangle assembled from east/south twist operations.

    Ports are abstract node ids; crossings claim four ports in ccw order;
    joins chain ports into the arcs of the final diagram.
    """

    def __init__(self):
        self._next = 0
        self.joins: list[tuple[int, int]] = []
        self.crossings: list[tuple[int, int, int, int]] = []  # ccw port tuples
        nw, ne, sw, se = (self._port() for _ in range(4))
        self.joins.append((nw, ne))
        self.joins.append((sw, se))
        self.b = {"NW": nw, "NE": ne, "SW": sw, "SE": se}

    def _port(self) -> int:
        self._next += 1
        return self._next - 1

    def twist_east(self) -> None:
        """Twist the NE and SE ends around each other once."""
        c_ne, c_nw, c_sw, c_se = (self._port() for _ in range(4))
        self.crossings.append((c_ne, c_nw, c_sw, c_se))
        self.joins.append((self.b["NE"], c_nw))
        self.joins.append((self.b["SE"], c_sw))
        self.b["NE"] = c_ne
        self.b["SE"] = c_se

    def twist_south(self) -> None:
        """Twist the SW and SE ends around each other once."""
        c_ne, c_nw, c_sw, c_se = (self._port() for _ in range(4))
        self.crossings.append((c_ne, c_nw, c_sw, c_se))
        self.joins.append((self.b["SW"], c_nw))
        self.joins.append((self.b["SE"], c_ne))
        self.b["SW"] = c_sw
        self.b["SE"] = c_se

    def attach_east(self, other: "_TangleBuilder") -> None:
        """Graft another open tangle onto the east side of this one."""
        offset = self._next
        self._next += other._next
        self.joins.extend((a + offset, b + offset) for a, b in other.joins)
        self.crossings.extend(
            tuple(p + offset for p in ports) for ports in other.crossings
        )
        self.joins.append((self.b["NE"], other.b["NW"] + offset))
        self.joins.append((self.b["SE"], other.b["SW"] + offset))
        self.b["NE"] = other.b["NE"] + offset
        self.b["SE"] = other.b["SE"] + offset

    def close(self, kind: str) -> PseudoPD:
        """Close the tangle: `numerator` joins NW-NE and SW-SE, `denominator`
        joins NW-SW and NE-SE; returns the resulting precrossing shadow."""
        if kind == "numerator":
            self.joins.append((self.b["NW"], self.b["NE"]))
            self.joins.append((self.b["SW"], self.b["SE"]))
        elif kind == "denominator":
            self.joins.append((self.b["NW"], self.b["SW"]))
            self.joins.append((self.b["NE"], self.b["SE"]))
        else:
            raise ValueError(f"unknown closure {kind!r}")
        # Arcs are the connected components of the join graph; each must
        # contain exactly two crossing ports, which become one PD edge.
        parent = list(range(self._next))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.joins:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra
        crossing_ports = [p for c in self.crossings for p in c]
        label_of_root: dict[int, int] = {}
        counts: dict[int, int] = {}
        for p in crossing_ports:
            r = find(p)
            counts[r] = counts.get(r, 0) + 1
            label_of_root.setdefault(r, len(label_of_root) + 1)
        if any(v != 2 for v in counts.values()) or len(counts) != 2 * len(self.crossings):
            raise ValueError("closure produced a crossingless loop or a bad arc")
        terms = [
            (PRECROSSING, None, tuple(label_of_root[find(p)] for p in ports))
            for ports in self.crossings
        ]
        return make_pd(terms)


def twist_shadow(code: tuple[int, ...]) -> PseudoPD:
    """Closure of the alternating twist tangle for a rational code.

    Entries alternate between east twist regions (first entry) and south
    regions.  East twists act on the tangle fraction as F -> F + 1 and
    south twists as F -> 1/(1/F + 1), so an odd-length code needs the
    numerator closure and an even-length code the denominator closure to
    produce the knot with odd fraction numerator.
    """
    if not code or any(a < 1 for a in code):
        raise ValueError("twist code entries must be positive")
    t = _TangleBuilder()
    for i, a in enumerate(code):
        op = t.twist_east if i % 2 == 0 else t.twist_south
        for _ in range(a):
            op()
    return t.close("numerator" if len(code) % 2 else "denominator")


def alternating_resolution(shadow: PseudoPD) -> ResolvedPD:
    """One of the two alternating resolutions of a knot shadow.

    Along the traversal the strand alternates over, under, over, ...; the
    Gauss parity of planar shadows guarantees the two visits to a vertex
    land on opposite parities.
    """
    if not shadow.is_shadow():
        raise ValueError("alternating_resolution expects an all-precrossing shadow")
    darts = traversal_darts(shadow)
    over_slot: dict[int, int] = {}
    under_slot: dict[int, int] = {}
    for i, (vi, slot) in enumerate(darts):
        (over_slot if i % 2 == 0 else under_slot)[vi] = slot
    if set(over_slot) != set(under_slot) or len(over_slot) != shadow.n:
        raise ValueError("shadow violates Gauss parity (not planar?)")
    terms = []
    for vi, v in enumerate(shadow.vertices):
        u, o = under_slot[vi], over_slot[vi]
        rotated = tuple(v.edges[(j + u) % 4] for j in range(4))
        sign = 1 if (o - u) % 4 == 3 else -1
        terms.append(("X", sign, rotated))
    return make_pd(terms)


def standard_diagrams() -> list[tuple[str, ResolvedPD]]:
    """Named reference diagrams: the unknot plus the 14 knots through 7 crossings.

    Crossing number (Jones span) and determinant (|V(-1)|) are asserted per
    entry; the returned diagram carries the base chirality convention.
    """
    out: list[tuple[str, ResolvedPD]] = [("0_1", make_pd([]))]
    for name, (code, det) in RATIONAL_KNOTS.items():
        shadow = twist_shadow(code)
        d = alternating_resolution(shadow)
        v = jones(d)
        cn = int(name.split("_")[0])
        if v.span() != cn:
            raise ValueError(f"{name}: Jones span {v.span()} != crossing number {cn}")
        if abs(v.evaluate_at_unit(-1)) != det:
            raise ValueError(f"{name}: determinant {abs(v.evaluate_at_unit(-1))} != {det}")
        if v.min_degree + v.max_degree > 0:
            d = mirror(d)
        out.append((name, d))
    return out


def rebuild_table() -> KnotTable:
    """Recompute the full 27-entry table from the reference diagrams."""
    return build_table(standard_diagrams())


def load_table() -> KnotTable:
    """Load the bundled table shipped as a data file."""
    text = resources.files("pseudoknots.data").joinpath("knot_table.txt").read_text()
    return KnotTable.from_text(text)
