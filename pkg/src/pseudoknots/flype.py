"""Shadow flypes on PD codes.

A shadow flype takes a precrossing c adjacent to a tangle T of precrossings
(the tangle meets the rest of the diagram through 4 boundary edges, two of
which end at c on cyclically adjacent slots), deletes c, rotates T by 180
degrees, and reinserts a precrossing on the far side of T.  The rotation is
realized purely combinatorially: tangle vertices keep their cyclic edge
orders and only the boundary legs are rewired.

Compass layout used throughout (c west of T):

        o1 ---+          +--- f1
              c ==== T ====
        o2 ---+          +--- f2

t1/t2 are the two c-T edges (north/south), f1/f2 the far boundary edges.
After the flype o1 joins f2's tangle leg, o2 joins f1's, and the new
crossing sits between t1/t2's tangle legs and f1/f2's outer ends.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .diagram import (
    Dart,
    PDError,
    PRECROSSING,
    PseudoPD,
    dart_partner,
    make_pd,
)


class FlypeError(ValueError):
    """The site does not satisfy the shadow-flype preconditions."""


@dataclass(frozen=True)
class FlypeSite:
    """A flype crossing together with the tangle it moves past."""

    crossing: int
    tangle: frozenset[int]

    def __post_init__(self):
        if self.crossing in self.tangle:
            raise FlypeError("flype crossing cannot be part of the tangle")


@dataclass(frozen=True)
class _SiteGeometry:
    c_vi: int
    band_slot: int  # t2 sits at this slot of c, t1 at band_slot+1
    t_nw: Dart  # tangle leg of t1
    t_sw: Dart  # tangle leg of t2
    t_ne: Dart  # tangle leg of f1
    t_se: Dart  # tangle leg of f2
    r1: Dart  # far end of o1
    r2: Dart  # far end of o2
    r3: Dart  # far end of f1
    r4: Dart  # far end of f2


def tangle_leg_order(
    d: PseudoPD, tangle_vis: set[int], partner: dict[Dart, Dart]
) -> list[Dart]:
    """Dangling darts of the tangle sub-map in cyclic boundary order.

    Raises FlypeError if the tangle is not a connected disk-like sub-map
    (the boundary walk must visit every dangling leg exactly once).
    """
    dangling = [
        (vi, slot)
        for vi in sorted(tangle_vis)
        for slot in range(4)
        if partner[(vi, slot)][0] not in tangle_vis
    ]
    if not dangling:
        raise FlypeError("tangle has no boundary legs")
    order = []
    start = dangling[0]
    dart = start
    while True:
        order.append(dart)
        vi, slot = dart
        probe = (vi, (slot + 1) % 4)
        while partner[probe][0] in tangle_vis:
            probe = partner[probe]
            probe = (probe[0], (probe[1] + 1) % 4)
        dart = probe
        if dart == start:
            break
        if len(order) > len(dangling):
            raise FlypeError("tangle boundary walk does not close")
    if sorted(order) != sorted(dangling):
        raise FlypeError("tangle is not connected (boundary walk misses legs)")
    return order


def _site_geometry(d: PseudoPD, site: FlypeSite) -> _SiteGeometry:
    by_id = {v.id: vi for vi, v in enumerate(d.vertices)}
    if site.crossing not in by_id:
        raise FlypeError(f"no vertex with id {site.crossing}")
    c_vi = by_id[site.crossing]
    if d.vertices[c_vi].is_classical():
        raise FlypeError("flype crossing must be a precrossing")
    tangle_vis = set()
    for tid in site.tangle:
        if tid not in by_id:
            raise FlypeError(f"no vertex with id {tid}")
        vi = by_id[tid]
        if d.vertices[vi].is_classical():
            raise FlypeError("classical crossing inside the tangle")
        tangle_vis.add(vi)

    partner = dart_partner(d)
    c_t_slots = [
        slot for slot in range(4) if partner[(c_vi, slot)][0] in tangle_vis
    ]
    if len(c_t_slots) != 2:
        raise FlypeError(
            f"flype crossing touches the tangle through {len(c_t_slots)} edges (need 2)"
        )
    a, b = c_t_slots
    if (b - a) % 4 == 1:
        s = a
    elif (a - b) % 4 == 1:
        s = b
    else:
        raise FlypeError("the two tangle edges are opposite at the flype crossing")

    # outer boundary edge count: every tangle dart whose partner is outside
    boundary_darts = [
        (vi, slot)
        for vi in tangle_vis
        for slot in range(4)
        if partner[(vi, slot)][0] not in tangle_vis
    ]
    if len(boundary_darts) != 4:
        raise FlypeError(
            f"tangle has {len(boundary_darts)} boundary edges (need exactly 4)"
        )

    t_sw = partner[(c_vi, s)]
    t_nw = partner[(c_vi, (s + 1) % 4)]
    r1 = partner[(c_vi, (s + 2) % 4)]
    r2 = partner[(c_vi, (s + 3) % 4)]
    if r1 == (c_vi, (s + 3) % 4):
        raise FlypeError("flype crossing carries a kink loop on its outer side")
    if r1[0] in tangle_vis or r2[0] in tangle_vis:
        raise FlypeError("outer edges of the flype crossing run into the tangle")

    legs = tangle_leg_order(d, tangle_vis, partner)
    if len(legs) != 4:
        raise FlypeError(f"tangle boundary has {len(legs)} legs (need 4)")
    if t_nw not in legs or t_sw not in legs:
        raise FlypeError("tangle legs do not match the flype crossing edges")
    i_nw = legs.index(t_nw)
    i_sw = legs.index(t_sw)
    if (i_sw - i_nw) % 4 not in (1, 3):
        raise FlypeError("crossing legs are separated by the far legs (not a band)")
    # cyclic order is (t_nw, f1, f2, t_sw) up to direction: f1 neighbors t_nw
    f_legs = [leg for leg in legs if leg not in (t_nw, t_sw)]
    before, after = legs[(i_nw - 1) % 4], legs[(i_nw + 1) % 4]
    t_ne = before if before in f_legs else after
    t_se = f_legs[0] if f_legs[1] == t_ne else f_legs[1]
    r3 = partner[t_ne]
    r4 = partner[t_se]
    if r3[0] == c_vi or r4[0] == c_vi:
        raise FlypeError("far boundary edges may not end at the flype crossing")
    return _SiteGeometry(c_vi, s, t_nw, t_sw, t_ne, t_se, r1, r2, r3, r4)


def shadow_flype_pd(d: PseudoPD, site: FlypeSite) -> PseudoPD:
    """Apply the shadow flype; the flype crossing keeps its vertex id.

    Flyping past an empty tangle is a planar isotopy, so the diagram is
    returned unchanged (up to relabeling) in that case.
    """
    if not site.tangle:
        by_id = {v.id: vi for vi, v in enumerate(d.vertices)}
        if site.crossing not in by_id:
            raise FlypeError(f"no vertex with id {site.crossing}")
        if d.vertices[by_id[site.crossing]].is_classical():
            raise FlypeError("flype crossing must be a precrossing")
        return make_pd([
            (v.kind, v.sign, v.edges) for v in d.vertices
        ])
    g = _site_geometry(d, site)

    old_label = {}
    for vi, v in enumerate(d.vertices):
        for slot in range(4):
            old_label[(vi, slot)] = v.edges[slot]
    next_label = max(old_label.values()) + 1

    new_dart_label: dict[Dart, int] = {}

    def fresh(*darts: Dart) -> None:
        nonlocal next_label
        for dart in darts:
            new_dart_label[dart] = next_label
        next_label += 1

    c_prime = ("new", 0), ("new", 1), ("new", 2), ("new", 3)
    fresh(g.r1, g.t_se)        # A: o1 side joins f2's tangle leg
    fresh(g.r2, g.t_ne)        # B: o2 side joins f1's tangle leg
    fresh(c_prime[1], g.t_sw)  # C
    fresh(c_prime[2], g.t_nw)  # D
    fresh(c_prime[0], g.r3)    # E
    fresh(c_prime[3], g.r4)    # F

    terms = []
    order_ids = []
    for vi, v in enumerate(d.vertices):
        if vi == g.c_vi:
            continue
        edges = tuple(
            new_dart_label.get((vi, slot), old_label[(vi, slot)])
            for slot in range(4)
        )
        terms.append((v.kind, v.sign, edges))
        order_ids.append(v.id)
    terms.append(
        (PRECROSSING, None, tuple(new_dart_label[c_prime[i]] for i in range(4)))
    )
    order_ids.append(d.vertices[g.c_vi].id)
    out = make_pd(terms)
    # make_pd numbers vertices 0..n-1 in term order; restore original ids
    relabeled = tuple(
        type(v)(order_ids[vi], v.kind, v.sign, v.edges)
        for vi, v in enumerate(out.vertices)
    )
    return PseudoPD(vertices=relabeled, in_slots=out.in_slots)


TYPE_I = "I"
TYPE_II = "II"


@dataclass(frozen=True)
class ChordFlypeSite:
    """Flype data on a chord diagram: the flype chord's endpoint positions
    and the two band intervals (cyclically consecutive position tuples).

    Type I layout:  ... f1 [X ...] ... [... Y] f2 ...   (f1 just before X,
    f2 just after Y); the move reverses each band in place.

    Type II layout: ... [X] ... f1 [Y] f2 ...  (the flype chord caps Y);
    the move transplants the flype chord so it caps X instead, leaving the
    contents of both bands in their original order.
    """

    flype_chord: tuple[int, int]
    band_x: tuple[int, ...]
    band_y: tuple[int, ...]


def _check_consecutive(band: tuple[int, ...], size: int, name: str) -> None:
    for a, b in zip(band, band[1:]):
        if (b - a) % size != 1:
            raise FlypeError(f"band {name} positions are not cyclically consecutive")


def chord_flype(c, site: ChordFlypeSite, variant: str):
    """Flype a decorated chord diagram at the given site.

    The two variants realize the two ways a shadow flype can act on the
    underlying chord diagram; arrows play no role at this level.
    """
    from .chords import DecoratedChordDiagram

    if variant not in (TYPE_I, TYPE_II):
        raise FlypeError(f"unknown flype variant {variant!r}")
    size = c.size
    f_a, f_b = site.flype_chord
    f_pair = {f_a, f_b}
    if not any({a, b} == f_pair for a, b, _ in c.chords):
        raise FlypeError("site flype chord is not a chord of the diagram")
    band_x, band_y = tuple(site.band_x), tuple(site.band_y)
    _check_consecutive(band_x, size, "X")
    _check_consecutive(band_y, size, "Y")
    in_bands = set(band_x) | set(band_y)
    if f_pair & in_bands:
        raise FlypeError("flype chord endpoints may not lie inside the bands")
    for a, b, _ in c.chords:
        if {a, b} == f_pair:
            continue
        if ({a, b} & in_bands) and not ({a, b} <= in_bands):
            raise FlypeError(f"chord ({a},{b}) leaves the band region")

    index_of = {}
    for idx, (a, b, _) in enumerate(c.chords):
        index_of[a] = idx
        index_of[b] = idx
    decorations = {idx: dec for idx, (_, _, dec) in enumerate(c.chords)}
    word = [index_of[p] for p in range(size)]
    f_idx = index_of[f_a]

    if variant == TYPE_I:
        if band_x and (band_x[0] - f_a) % size != 1:
            raise FlypeError("Type I needs the first flype endpoint just before band X")
        if band_y and (f_b - band_y[-1]) % size != 1:
            raise FlypeError("Type I needs the second flype endpoint just after band Y")
        new_word = list(word)
        for band in (band_x, band_y):
            vals = [word[p] for p in band]
            for p, v in zip(band, reversed(vals)):
                new_word[p] = v
    else:
        if not band_x:
            raise FlypeError("Type II needs a nonempty band X")
        if (band_y and ((band_y[0] - f_a) % size != 1 or (f_b - band_y[-1]) % size != 1)) or (
            not band_y and (f_b - f_a) % size != 1
        ):
            raise FlypeError("Type II needs the flype chord to cap band Y")
        new_word = []
        p = (f_b + 1) % size
        while p != f_a:
            if band_x and p == band_x[0]:
                new_word.append(f_idx)
            new_word.append(word[p])
            if band_x and p == band_x[-1]:
                new_word.append(f_idx)
            p = (p + 1) % size
        new_word.extend(word[q] for q in band_y)

    placed: dict[int, list[int]] = {}
    for pos, idx in enumerate(new_word):
        placed.setdefault(idx, []).append(pos)
    pairs = []
    for idx, positions in placed.items():
        if len(positions) != 2:
            raise FlypeError("flype produced an inconsistent pairing")
        pairs.append((positions[0], positions[1], decorations[idx]))
    return DecoratedChordDiagram.from_pairs(pairs)


def _cyclic_intervals(positions: list[int], size: int) -> list[tuple[int, ...]]:
    ps = sorted(positions)
    if not ps:
        return []
    runs: list[list[int]] = [[ps[0]]]
    for p in ps[1:]:
        if p == runs[-1][-1] + 1:
            runs[-1].append(p)
        else:
            runs.append([p])
    if len(runs) > 1 and runs[0][0] == 0 and runs[-1][-1] == size - 1:
        runs[0] = runs[-1] + runs[0]
        runs.pop()
    return [tuple(r) for r in runs]


def chord_site_for(d: PseudoPD, site: FlypeSite) -> tuple[ChordFlypeSite, str]:
    """Chord-diagram site corresponding to a PD flype site, with its variant.

    Supports the two template layouts; other leg arrangements raise.
    """
    from .gauss import pd_to_gauss

    g = pd_to_gauss(d)
    size = g.size
    f_a, f_b = g.positions_of(site.crossing)
    tangle_pos = [
        i for i, t in enumerate(g.tokens) if t.id in site.tangle
    ]
    t_ivs = _cyclic_intervals(tangle_pos, size)
    if len(t_ivs) == 2:
        for y, x in (t_ivs, t_ivs[::-1]):
            for fa, fb in ((f_a, f_b), (f_b, f_a)):
                if (y[0] - fa) % size == 1 and (fb - y[-1]) % size == 1:
                    return ChordFlypeSite((fa, fb), x, y), TYPE_II
    other_pos = [
        i
        for i, t in enumerate(g.tokens)
        if t.id not in site.tangle and t.id != site.crossing
    ]
    o_ivs = _cyclic_intervals(other_pos, size)
    if len(o_ivs) == 2:
        for x, y in (o_ivs, o_ivs[::-1]):
            for fa, fb in ((f_a, f_b), (f_b, f_a)):
                if (x[0] - fa) % size == 1 and (fb - y[-1]) % size == 1:
                    return ChordFlypeSite((fa, fb), x, y), TYPE_I
    raise FlypeError("site does not match either chord-flype template")


def family(m: int, n: int) -> tuple[PseudoPD, PseudoPD]:
    """Counterexample pair: shadows with equal were-sets but distinct
    invariant values, generalizing the base 7-precrossing pair.

    The first shadow is the twist closure of code (m,1,1,1,n); the second
    is its shadow flype at the designated site (the second single crossing
    moved past the n-twist band).  Both m and n must be even (odd values
    correspond to non-realizable, virtual-only chord templates) and >= 2.
    """
    if m < 2 or n < 2:
        raise ValueError("family parameters must be at least 2")
    if m % 2 or n % 2:
        raise ValueError("family parameters must be even")
    from .tables import twist_shadow

    base = twist_shadow((m, 1, 1, 1, n))
    pair = shadow_flype_pd(base, family_site(m, n))
    return base, pair


def family_site(m: int, n: int) -> FlypeSite:
    """The designated flype site of the family base shadow."""
    return FlypeSite(m + 2, frozenset(range(m + 3, m + 3 + n)))


def counterexample_pair() -> tuple[PseudoPD, PseudoPD]:
    """The minimal pair: nonequivalent 7-precrossing pseudoknots with
    identical were-sets."""
    return family(2, 2)


def random_flype_configuration(
    seed: int, tangle_crossings: int = 4, extra_kinks: int = 1
) -> tuple[PseudoPD, FlypeSite]:
    """A random shadow with a valid flype site, built by construction.

    The flype crossing is attached west of a random twist tangle and the
    four ends are closed up; random precrossing kinks are added outside the
    tangle for variety.  Total precrossings: tangle_crossings + 1 + kinks.
    """
    import random as _random

    from .tables import _TangleBuilder

    rng = _random.Random(seed)
    for _ in range(400):
        rest = max(1, extra_kinks)
        main = _TangleBuilder()
        main.twist_east()  # the flype crossing (vertex 0)
        # the tangle is built separately so only its two west legs reach the
        # flype crossing, then grafted on
        sub = _TangleBuilder()
        sub.twist_east()
        ops = [sub.twist_east, sub.twist_south]
        for _ in range(tangle_crossings - 1):
            rng.choice(ops)()
        main.attach_east(sub)
        # more structure east of the tangle keeps its far boundary separate
        main.twist_east()
        main_ops = [main.twist_east, main.twist_south]
        for _ in range(rest - 1):
            rng.choice(main_ops)()
        try:
            d = main.close(rng.choice(("numerator", "denominator")))
        except PDError:
            continue
        site = FlypeSite(0, frozenset(range(1, tangle_crossings + 1)))
        try:
            _site_geometry(d, site)
        except FlypeError:
            continue
        return d, site
    raise RuntimeError(f"could not build a flype configuration for seed {seed}")


def enumerate_flype_sites(d: PseudoPD, max_tangle: int | None = None) -> list[FlypeSite]:
    """All valid nonempty-tangle flype sites of a shadow (small diagrams)."""
    pre_ids = [v.id for v in d.vertices if not v.is_classical()]
    sites = []
    for c in pre_ids:
        others = [p for p in pre_ids if p != c]
        limit = len(others) if max_tangle is None else min(max_tangle, len(others))
        for size in range(1, limit + 1):
            for combo in combinations(others, size):
                site = FlypeSite(c, frozenset(combo))
                try:
                    _site_geometry(d, site)
                except FlypeError:
                    continue
                sites.append(site)
    return sites
