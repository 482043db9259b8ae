"""Planar-diagram (PD) codes for pseudodiagrams of knots.

A pseudodiagram is a 4-valent planar diagram whose vertices are either
classical crossings (with a sign) or precrossings (over/under undetermined).
The PD text grammar is whitespace-separated terms

    X+(a,b,c,d)   classical positive crossing
    X-(a,b,c,d)   classical negative crossing
    P(a,b,c,d)    precrossing

where a,b,c,d are edge labels in counterclockwise order around the vertex.
For a classical crossing, slot 0 (label `a`) is the incoming under-strand
edge.  For a precrossing, slot 0 is the incoming edge of one of the two
strands; the positive resolution of a precrossing is the over/under choice
whose resulting crossing has sign +1.

Parsing validates: every edge label appears exactly twice, the strand
traversal closes into a single component (knots only), and declared signs
agree with the orientation induced by the traversal.  Edge labels are
normalized to 1..2n in traversal order.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

CLASSICAL = "X"
PRECROSSING = "P"


class PDError(ValueError):
    """Invalid PD text or PD structure."""


@dataclass(frozen=True)
class Vertex:
    """One 4-valent vertex: kind is `X` (classical, signed) or `P`."""

    id: int
    kind: str
    sign: int | None
    edges: tuple[int, int, int, int]

    def is_classical(self) -> bool:
        return self.kind == CLASSICAL


@dataclass(frozen=True)
class PseudoPD:
    """Validated, oriented pseudodiagram.

    `vertices` are stored in input order.  Edge labels are 1..2n in the
    order the (single) strand traversal first uses each edge.  `in_slots`
    gives, per vertex, the pair of slots at which the traversal enters.
    """

    vertices: tuple[Vertex, ...]
    in_slots: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def precrossing_ids(self) -> tuple[int, ...]:
        return tuple(v.id for v in self.vertices if not v.is_classical())

    def classical_ids(self) -> tuple[int, ...]:
        return tuple(v.id for v in self.vertices if v.is_classical())

    def is_resolved(self) -> bool:
        return all(v.is_classical() for v in self.vertices)

    def is_shadow(self) -> bool:
        return all(not v.is_classical() for v in self.vertices)

    # -- text / JSON forms -------------------------------------------------

    def to_text(self) -> str:
        terms = []
        for v in self.vertices:
            args = ",".join(str(e) for e in v.edges)
            if v.is_classical():
                terms.append(f"X{'+' if v.sign > 0 else '-'}({args})")
            else:
                terms.append(f"P({args})")
        return " ".join(terms)

    def to_json_dict(self) -> dict:
        return {
            "vertices": [
                {
                    "id": v.id,
                    "kind": "classical" if v.is_classical() else "precrossing",
                    **({"sign": v.sign} if v.is_classical() else {}),
                    "edges": list(v.edges),
                }
                for v in self.vertices
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "PseudoPD":
        terms = []
        for v in data["vertices"]:
            args = ",".join(str(e) for e in v["edges"])
            if v["kind"] == "classical":
                terms.append(f"X{'+' if v['sign'] > 0 else '-'}({args})")
            elif v["kind"] == "precrossing":
                terms.append(f"P({args})")
            else:
                raise PDError(f"unknown vertex kind {v['kind']!r}")
        return parse_pd(" ".join(terms))


ResolvedPD = PseudoPD  # a PseudoPD whose vertices are all classical


_TERM_RE = re.compile(r"(X\+|X-|X−|P)\((\d+),(\d+),(\d+),(\d+)\)")


def parse_pd(text: str) -> PseudoPD:
    """Parse and validate PD text; see the module docstring for the grammar."""
    raw: list[tuple[str, int | None, tuple[int, int, int, int]]] = []
    pos = 0
    n_chars = len(text)
    while pos < n_chars:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TERM_RE.match(text, pos)
        if not m:
            raise PDError(f"syntax error at position {pos}: {text[pos:pos + 16]!r}")
        head = m.group(1)
        edges = tuple(int(m.group(i)) for i in range(2, 6))
        if head == "P":
            raw.append((PRECROSSING, None, edges))
        else:
            raw.append((CLASSICAL, 1 if head == "X+" else -1, edges))
        pos = m.end()
    if not raw:
        raise PDError("empty PD code")
    return _build(raw)


def unknot() -> ResolvedPD:
    """The 0-crossing unknot diagram."""
    return PseudoPD(vertices=(), in_slots=())


def make_pd(
    terms: list[tuple[str, int | None, tuple[int, int, int, int]]]
) -> PseudoPD:
    """Build a PseudoPD from (kind, sign, edges) triples, with full validation."""
    if not terms:
        return unknot()
    return _build(list(terms))


def _build(
    raw: list[tuple[str, int | None, tuple[int, int, int, int]]],
    allow_reverse: bool = True,
) -> PseudoPD:
    # edge label -> list of (vertex index, slot)
    occurrences: dict[int, list[tuple[int, int]]] = {}
    for vi, (_, _, edges) in enumerate(raw):
        for slot, e in enumerate(edges):
            occurrences.setdefault(e, []).append((vi, slot))
    for e, occ in occurrences.items():
        if len(occ) != 2:
            raise PDError(f"edge {e} appears {len(occ)} times (must be exactly 2)")

    # Traverse the strand: enter a vertex at slot k, leave at slot (k+2)%4.
    # Start on the smallest edge label, entering at its lexicographically
    # smaller occurrence; this makes the orientation deterministic.
    start_edge = min(occurrences)
    start_dart = min(occurrences[start_edge])
    order: list[tuple[int, int]] = []  # darts (vertex index, entry slot)
    edge_order: list[int] = []
    seen_edges: set[int] = set()
    edge, dart = start_edge, start_dart
    while True:
        if edge in seen_edges:
            raise PDError("strand traversal revisits an edge (inconsistent code)")
        seen_edges.add(edge)
        edge_order.append(edge)
        order.append(dart)
        vi, slot = dart
        out_slot = (slot + 2) % 4
        out_edge = raw[vi][2][out_slot]
        a, b = occurrences[out_edge]
        nxt = b if a == (vi, out_slot) else a
        if out_edge == start_edge and nxt == start_dart:
            break
        edge, dart = out_edge, nxt
    if len(seen_edges) != len(occurrences):
        raise PDError(
            f"diagram has more than one component "
            f"({len(seen_edges)} of {len(occurrences)} edges on the first strand)"
        )

    relabel = {e: i + 1 for i, e in enumerate(edge_order)}
    in_slots_map: dict[int, list[int]] = {vi: [] for vi in range(len(raw))}
    for vi, slot in order:
        in_slots_map[vi].append(slot)

    # The text fixes an orientation only up to reversal: slot 0 of a
    # classical term is the incoming under-edge for one of the two strand
    # directions.  If every classical vertex is consistent with the
    # reversed direction instead, rotate all tuples by two (the same
    # geometric diagram encoded for the reversed traversal) and rebuild.
    classical_idx = [vi for vi, (kind, _, _) in enumerate(raw) if kind == CLASSICAL]
    if classical_idx and allow_reverse:
        forward_ok = all(0 in in_slots_map[vi] for vi in classical_idx)
        backward_ok = all(2 in in_slots_map[vi] for vi in classical_idx)
        if not forward_ok and backward_ok:
            flipped = [
                (kind, sign, edges[2:] + edges[:2]) for kind, sign, edges in raw
            ]
            return _build(flipped, allow_reverse=False)

    vertices: list[Vertex] = []
    in_slots: list[tuple[int, int]] = []
    for vi, (kind, sign, edges) in enumerate(raw):
        entries = in_slots_map[vi]
        if len(entries) != 2:
            raise PDError(f"vertex {vi} is not visited exactly twice")
        new_edges = tuple(relabel[e] for e in edges)
        ins = set(entries)
        if kind == CLASSICAL:
            if 0 not in ins:
                raise PDError(
                    f"vertex {vi}: slot 0 is not the incoming under-strand "
                    f"(sign inconsistent with orientation)"
                )
            over_in = 3 if 3 in ins else 1
            derived = 1 if over_in == 3 else -1
            if derived != sign:
                raise PDError(
                    f"vertex {vi}: declared sign {sign:+d} inconsistent with "
                    f"orientation (derived {derived:+d})"
                )
            vertices.append(Vertex(vi, CLASSICAL, sign, new_edges))
            in_slots.append((0, over_in))
        else:
            # Normalize so slot 0 is an incoming slot (strand-one designation).
            if 0 not in ins:
                new_edges = new_edges[2:] + new_edges[:2]
                ins = {(s + 2) % 4 for s in ins}
            other_in = 3 if 3 in ins else 1
            vertices.append(Vertex(vi, PRECROSSING, None, new_edges))
            in_slots.append((0, other_in))
    out = PseudoPD(vertices=tuple(vertices), in_slots=tuple(in_slots))
    if out.n and len(faces(out)) != out.n + 2:
        raise PDError("diagram is not planar (Euler check failed)")
    return out


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def positive_over_is_strand_two(d: PseudoPD, vi: int) -> bool:
    """Whether the +1 resolution of precrossing `vi` puts strand two on top.

    Strand two is the one through slots 1 and 3.  The crossing sign is +1
    exactly when the over-strand comes in at the slot 90 degrees clockwise
    of the incoming under-strand, so the +1 choice is determined by where
    strand two enters.
    """
    _, s2_in = d.in_slots[vi]
    return s2_in == 3


def resolve(d: PseudoPD, choice: dict[int, int]) -> ResolvedPD:
    """Resolve every precrossing of `d` per `choice` (+1 or -1 by vertex id).

    A +1 entry picks the resolution whose classical crossing has sign +1.
    Classical crossings are unchanged.
    """
    pre_ids = set(d.precrossing_ids())
    if set(choice) != pre_ids:
        missing = pre_ids - set(choice)
        extra = set(choice) - pre_ids
        raise PDError(f"choice ids mismatch (missing {sorted(missing)}, extra {sorted(extra)})")
    terms = []
    for vi, v in enumerate(d.vertices):
        if v.is_classical():
            terms.append((CLASSICAL, v.sign, v.edges))
            continue
        c = choice[v.id]
        if c not in (1, -1):
            raise PDError(f"choice for precrossing {v.id} must be +1 or -1, got {c}")
        s1_in, s2_in = d.in_slots[vi]
        over_two = positive_over_is_strand_two(d, vi) == (c == 1)
        if over_two:
            under_in = s1_in  # strand one stays under; slot 0 already incoming
        else:
            under_in = s2_in
        e = v.edges
        rotated = tuple(e[(j + under_in) % 4] for j in range(4))
        terms.append((CLASSICAL, c, rotated))
    return make_pd(terms)


def writhe(d: ResolvedPD) -> int:
    """Sum of crossing signs of a resolved diagram."""
    if not d.is_resolved():
        raise PDError("writhe is defined for resolved diagrams only")
    return sum(v.sign for v in d.vertices)


def mirror(d: PseudoPD) -> PseudoPD:
    """Mirror image: every classical sign flips; precrossings are unchanged."""
    terms = []
    for vi, v in enumerate(d.vertices):
        if not v.is_classical():
            terms.append((PRECROSSING, None, v.edges))
            continue
        _, over_in = d.in_slots[vi]
        e = v.edges
        rotated = tuple(e[(j + over_in) % 4] for j in range(4))
        terms.append((CLASSICAL, -v.sign, rotated))
    return make_pd(terms)


def traversal_darts(d: PseudoPD) -> list[tuple[int, int]]:
    """The 2n (vertex index, entry slot) darts in traversal order from edge 1."""
    if d.n == 0:
        return []
    occurrences: dict[int, list[tuple[int, int]]] = {}
    for vi, v in enumerate(d.vertices):
        for slot, e in enumerate(v.edges):
            occurrences.setdefault(e, []).append((vi, slot))
    in_sets = [set(s) for s in d.in_slots]
    start_dart = next(
        dart for dart in occurrences[1] if dart[1] in in_sets[dart[0]]
    )
    darts = []
    dart = start_dart
    for _ in range(2 * d.n):
        darts.append(dart)
        vi, slot = dart
        out_slot = (slot + 2) % 4
        out_edge = d.vertices[vi].edges[out_slot]
        a, b = occurrences[out_edge]
        dart = b if a == (vi, out_slot) else a
    return darts


def canonical_pd_key(d: PseudoPD) -> tuple:
    """Equality key for diagrams up to relabeling of edges and vertices.

    The key is the lexicographically least oriented Gauss encoding over all
    2n choices of traversal base point.  Per vertex visit it records the
    crossing kind, the sign, and the passage role: over/under for classical
    crossings, and for precrossings whether this passage is the over-strand
    of the positive resolution.  Mirror images are NOT identified.
    """
    if d.n == 0:
        return ("unknot",)
    darts = traversal_darts(d)
    roles: dict[tuple[int, int], str] = {}
    for vi, v in enumerate(d.vertices):
        s1_in, s2_in = d.in_slots[vi]
        if v.is_classical():
            roles[(vi, s1_in)] = "U"
            roles[(vi, s2_in)] = "O"
        else:
            two_over = positive_over_is_strand_two(d, vi)
            roles[(vi, s1_in)] = "t" if two_over else "h"
            roles[(vi, s2_in)] = "h" if two_over else "t"
    best = None
    for shift in range(len(darts)):
        seq = darts[shift:] + darts[:shift]
        first_visit: dict[int, int] = {}
        code = []
        for i, (vi, slot) in enumerate(seq):
            v = d.vertices[vi]
            partner = first_visit.setdefault(vi, i)
            code.append((partner if partner != i else -1, v.kind, v.sign or 0, roles[(vi, slot)]))
        if best is None or code < best:
            best = code
    return tuple(best)


def pd_isomorphic(a: PseudoPD, b: PseudoPD) -> bool:
    """True iff `a` and `b` are the same diagram up to relabeling."""
    return canonical_pd_key(a) == canonical_pd_key(b)


# ---------------------------------------------------------------------------
# Darts and faces of the planar map
# ---------------------------------------------------------------------------

Dart = tuple[int, int]  # (vertex index, slot)


def edge_darts(d: PseudoPD) -> dict[int, list[Dart]]:
    """Edge label -> its two (vertex index, slot) ends."""
    out: dict[int, list[Dart]] = {}
    for vi, v in enumerate(d.vertices):
        for slot, e in enumerate(v.edges):
            out.setdefault(e, []).append((vi, slot))
    return out


def dart_partner(d: PseudoPD) -> dict[Dart, Dart]:
    """The edge involution: each dart to the other end of its edge."""
    out: dict[Dart, Dart] = {}
    for ends in edge_darts(d).values():
        a, b = ends
        out[a] = b
        out[b] = a
    return out


def faces(d: PseudoPD) -> list[list[Dart]]:
    """Faces of the planar map as dart cycles.

    A face is an orbit of dart -> rotate_ccw(cross_edge(dart)); the dart
    (v, k) stands for the corner of the face between slots k and k+1 at v.
    Euler's formula (faces = n + 2 for a connected 4-valent knot diagram)
    holds for every valid PseudoPD and is checked by the tests.
    """
    partner = dart_partner(d)
    remaining = set(partner)
    out = []
    while remaining:
        start = min(remaining)
        cycle = []
        dart = start
        while True:
            cycle.append(dart)
            remaining.discard(dart)
            vi, slot = partner[dart]
            dart = (vi, (slot + 1) % 4)
            if dart == start:
                break
        out.append(cycle)
    return out
