"""Site-directed Reidemeister and pseudo-Reidemeister rewrites on Gauss
diagrams.

Move kinds and their site data:

    R1+  (gap, sign, over_first)      insert a classical kink
    R1-  (id,)                        remove a classical kink
    PR1+ (gap, head_first)            insert a precrossing kink
    PR1- (id,)                        remove a precrossing kink
    R2+  (gap1, gap2, crossed, sign, over_at_first)
                                      slide a strand over another
    R2-  (id, id)                     cancel a classical R2 pair
    R3   (id, id, id)                 slide a strand across a classical
                                      crossing (triangle flip)
    PR2+ / PR2- (classical_id, pre_id)
                                      slide a classical crossing past a
                                      precrossing along their twist band
    PR3  (id, id, id)                 triangle flip with a precrossing

Gaps index insertion points: gap i means before token i of the current
diagram (0 <= gap <= size, cyclic).  The triangle moves require the local
crossing data to admit consistent strand heights for every resolution;
the legal local patterns are pinned by the planar-diagram move engine and
checked against the table in _R3_TEMPLATES.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations

from .gauss import (
    GaussError,
    GaussToken,
    OVER,
    PRE_HEAD,
    PRE_TAIL,
    PseudoGaussDiagram,
    UNDER,
)


class MoveError(ValueError):
    """The move's local pattern is absent or the move is not legal there."""


def _generate_triangle_templates() -> tuple[frozenset, frozenset]:
    """Enumerate every planar-realizable triangle-move pattern.

    Three directed lines in the plane form the triangle; the pattern of the
    six Gauss tokens (pair orders, over/under roles, signs, precrossing
    arrow directions) is computed from the geometry: crossing order along a
    line follows its direction, a crossing's sign is the determinant of the
    over direction against the under direction, and the move is legal only
    when the over/under data admits a strand height order for every
    resolution.  Both mirror images and both traversal orders are included,
    so membership in the returned sets is exactly planar realizability of
    a legal slide.
    """
    lines = {
        "A": ((0.0, -0.15), (1.0, 0.0)),
        "B": ((0.5, -1.0), (-1.0, 2.0)),
        "C": ((0.5, 1.0), (-1.0, -2.0)),
    }

    def cross_params(p1, d1, p2, d2):
        det = d1[0] * d2[1] - d1[1] * d2[0]
        rx, ry = p2[0] - p1[0], p2[1] - p1[1]
        return (rx * d2[1] - ry * d2[0]) / det, (rx * d1[1] - ry * d1[0]) / det

    def canonical(pairs_desc):
        best = None
        for rot in range(3):
            ordered = pairs_desc[rot:] + pairs_desc[:rot]
            rename: dict[str, int] = {}
            desc = []
            for row in ordered:
                out_row = []
                for name, role, sign in row:
                    lid = rename.setdefault(name, len(rename))
                    out_row.append((lid, role, sign))
                desc.append(tuple(out_row))
            desc = tuple(desc)
            if best is None or desc < best:
                best = desc
        return best

    names = ("A", "B", "C")
    crossings = [frozenset(("A", "B")), frozenset(("A", "C")), frozenset(("B", "C"))]
    classical_out = set()
    pre_out = set()
    for mirror in (1, -1):
        geo = {
            n: ((p[0], p[1] * mirror), (d[0], d[1] * mirror))
            for n, (p, d) in lines.items()
        }
        for fa in (1, -1):
            for fb in (1, -1):
                for fc in (1, -1):
                    flip = {"A": fa, "B": fb, "C": fc}
                    dirs = {n: (geo[n][1][0] * flip[n], geo[n][1][1] * flip[n]) for n in names}
                    # parameter of each crossing along each line (direction-scaled)
                    t_of: dict[str, dict[frozenset, float]] = {n: {} for n in names}
                    for key in crossings:
                        x, y = sorted(key)
                        tx, ty = cross_params(geo[x][0], dirs[x], geo[y][0], dirs[y])
                        t_of[x][key] = tx
                        t_of[y][key] = ty
                    for arc_order in (("A", "B", "C"), ("A", "C", "B")):
                        base_rows = []
                        for n in arc_order:
                            ordered = sorted(t_of[n].items(), key=lambda kv: kv[1])
                            base_rows.append([(key, n) for key, _ in ordered])
                        for over_bits in range(8):
                            over = {}
                            for bi, key in enumerate(crossings):
                                pair = sorted(key)
                                over[key] = pair[(over_bits >> bi) & 1]
                            # height order must exist (acyclic data)
                            rels = [(over[k], next(iter(set(k) - {over[k]}))) for k in crossings]
                            if not any(
                                all(p.index(a) < p.index(b) for a, b in rels)
                                for p in permutations(names)
                            ):
                                continue

                            def sign_of(key):
                                o = over[key]
                                u = next(iter(set(key) - {o}))
                                do, du = dirs[o], dirs[u]
                                return 1 if do[0] * du[1] - do[1] * du[0] > 0 else -1

                            rows = []
                            for row in base_rows:
                                rows.append(
                                    tuple(
                                        (
                                            "".join(sorted(key)),
                                            OVER if over[key] == n else UNDER,
                                            sign_of(key),
                                        )
                                        for key, n in row
                                    )
                                )
                            classical_out.add(canonical(rows))
                            # one-precrossing variants: both resolutions must stay acyclic
                            for pk in crossings:
                                others = [
                                    (over[k], next(iter(set(k) - {over[k]})))
                                    for k in crossings
                                    if k != pk
                                ]
                                x, y = sorted(pk)
                                sound = True
                                for res in ((x, y), (y, x)):
                                    rels2 = others + [res]
                                    if not any(
                                        all(p.index(a) < p.index(b) for a, b in rels2)
                                        for p in permutations(names)
                                    ):
                                        sound = False
                                if not sound:
                                    continue
                                dx, dy = dirs[x], dirs[y]
                                plus_over = x if dx[0] * dy[1] - dx[1] * dy[0] > 0 else y
                                rows_p = []
                                for row in base_rows:
                                    out_row = []
                                    for key, n in row:
                                        if key == pk:
                                            role = PRE_HEAD if n == plus_over else PRE_TAIL
                                            out_row.append(("".join(sorted(key)), role, 0))
                                        else:
                                            out_row.append(
                                                (
                                                    "".join(sorted(key)),
                                                    OVER if over[key] == n else UNDER,
                                                    sign_of(key),
                                                )
                                            )
                                    rows_p.append(tuple(out_row))
                                pre_out.add(canonical(rows_p))
    return frozenset(classical_out), frozenset(pre_out)


_R3_TEMPLATES, _PR3_TEMPLATES = _generate_triangle_templates()


@dataclass(frozen=True)
class MoveSite:
    kind: str
    data: tuple

    def __post_init__(self):
        if self.kind not in (
            "R1+", "R1-", "R2+", "R2-", "R3", "PR1+", "PR1-", "PR2+", "PR2-", "PR3"
        ):
            raise MoveError(f"unknown move kind {self.kind!r}")


def _fresh_id(g: PseudoGaussDiagram) -> int:
    ids = g.ids()
    return (max(ids) + 1) if ids else 1


def apply_move(g: PseudoGaussDiagram, site: MoveSite) -> PseudoGaussDiagram:
    """Apply one rewrite; raises MoveError if the site's pattern is absent."""
    kind = site.kind
    tokens = list(g.tokens)
    size = len(tokens)

    if kind in ("R1+", "PR1+"):
        if kind == "R1+":
            gap, sign, over_first = site.data
            if sign not in (1, -1):
                raise MoveError("kink sign must be +1 or -1")
            cid = _fresh_id(g)
            pair = [GaussToken(cid, OVER, sign), GaussToken(cid, UNDER, sign)]
            if not over_first:
                pair.reverse()
        else:
            gap, head_first = site.data
            cid = _fresh_id(g)
            pair = [GaussToken(cid, PRE_HEAD, None), GaussToken(cid, PRE_TAIL, None)]
            if not head_first:
                pair.reverse()
        gap = gap % (size + 1)
        return PseudoGaussDiagram(tuple(tokens[:gap] + pair + tokens[gap:]))

    if kind in ("R1-", "PR1-"):
        (cid,) = site.data
        pos = [i for i, t in enumerate(tokens) if t.id == cid]
        if len(pos) != 2:
            raise MoveError(f"no crossing {cid}")
        i, j = pos
        t0 = tokens[i]
        if kind == "R1-" and not t0.is_classical():
            raise MoveError("R1- needs a classical kink")
        if kind == "PR1-" and t0.is_classical():
            raise MoveError("PR1- needs a precrossing kink")
        if (j - i) % size != 1 and (i - j) % size != 1:
            raise MoveError(f"crossing {cid} endpoints are not adjacent")
        return PseudoGaussDiagram(tuple(t for t in tokens if t.id != cid))

    if kind == "R2+":
        gap1, gap2, crossed, sign, over_at_first = site.data
        if sign not in (1, -1):
            raise MoveError("sign must be +1 or -1")
        a, b = _fresh_id(g), _fresh_id(g) + 1
        first_roles = (OVER, OVER) if over_at_first else (UNDER, UNDER)
        second_roles = (UNDER, UNDER) if over_at_first else (OVER, OVER)
        first = [GaussToken(a, first_roles[0], sign), GaussToken(b, first_roles[1], -sign)]
        if crossed:
            second = [GaussToken(a, second_roles[0], sign), GaussToken(b, second_roles[1], -sign)]
        else:
            second = [GaussToken(b, second_roles[0], -sign), GaussToken(a, second_roles[1], sign)]
        gap1 %= size + 1
        gap2 %= size + 1
        out = list(tokens)
        if gap1 <= gap2:
            out = out[:gap2] + second + out[gap2:]
            out = out[:gap1] + first + out[gap1:]
        else:
            out = out[:gap1] + first + out[gap1:]
            out = out[:gap2] + second + out[gap2:]
        return PseudoGaussDiagram(tuple(out))

    if kind == "R2-":
        ida, idb = site.data
        pa = [i for i, t in enumerate(tokens) if t.id == ida]
        pb = [i for i, t in enumerate(tokens) if t.id == idb]
        if len(pa) != 2 or len(pb) != 2:
            raise MoveError("missing crossings for R2-")
        ta, tb = tokens[pa[0]], tokens[pb[0]]
        if not (ta.is_classical() and tb.is_classical()):
            raise MoveError("R2- needs two classical crossings")
        if ta.sign != -tb.sign:
            raise MoveError("R2 pair must have opposite signs")
        # the four endpoints form two cyclically adjacent pairs, one pair of
        # over passages and one of under passages
        pairs = []
        for i in pa:
            for j in pb:
                if (j - i) % size == 1 or (i - j) % size == 1:
                    pairs.append((i, j))
        used = set()
        good = []
        for i, j in pairs:
            if i in used or j in used:
                continue
            if tokens[i].role == tokens[j].role:
                good.append((i, j))
                used.update((i, j))
        if len(good) != 2:
            raise MoveError("crossings do not form an R2 bigon")
        roles = {tokens[i].role for pair in good for i in pair}
        if roles != {OVER, UNDER}:
            raise MoveError("R2 pair must have one strand over at both crossings")
        return PseudoGaussDiagram(tuple(t for t in tokens if t.id not in (ida, idb)))

    if kind in ("PR2+", "PR2-"):
        cid, pid = site.data
        pc = [i for i, t in enumerate(tokens) if t.id == cid]
        pp = [i for i, t in enumerate(tokens) if t.id == pid]
        if len(pc) != 2 or len(pp) != 2:
            raise MoveError("missing crossings for PR2")
        if not tokens[pc[0]].is_classical() or tokens[pp[0]].is_classical():
            raise MoveError("PR2 slides a classical crossing past a precrossing")
        adj = []
        for i in pc:
            for j in pp:
                if (j - i) % size == 1 or (i - j) % size == 1:
                    adj.append((i, j))
        used: set[int] = set()
        swaps = []
        for i, j in adj:
            if i in used or j in used:
                continue
            swaps.append((i, j))
            used.update((i, j))
        if len(swaps) != 2:
            raise MoveError("crossings are not adjacent along both strands (no twist band)")
        out = list(tokens)
        for i, j in swaps:
            out[i], out[j] = out[j], out[i]
        return PseudoGaussDiagram(tuple(out))

    if kind in ("R3", "PR3"):
        ids = site.data
        if len(ids) != 3 or len(set(ids)) != 3:
            raise MoveError("triangle move needs three distinct crossing ids")
        info = _triangle_info(g, ids)
        n_pre = sum(1 for i in ids if not _token_of(g, i).is_classical())
        if kind == "R3" and n_pre:
            raise MoveError("R3 is the all-classical triangle move")
        if kind == "PR3" and n_pre != 1:
            raise MoveError("PR3 needs exactly one precrossing in the triangle")
        _check_triangle_legal(g, info)
        out = list(tokens)
        for i, j in info["pairs"]:
            out[i], out[j] = out[j], out[i]
        return PseudoGaussDiagram(tuple(out))

    raise MoveError(f"unhandled kind {kind}")


def _token_of(g: PseudoGaussDiagram, cid: int) -> GaussToken:
    for t in g.tokens:
        if t.id == cid:
            return t
    raise MoveError(f"no crossing {cid}")


def _triangle_info(g: PseudoGaussDiagram, ids) -> dict:
    """Locate the three adjacent token pairs of a triangle pattern."""
    tokens = g.tokens
    size = len(tokens)
    id_set = set(ids)
    pairs = []
    used = set()
    for i in range(size):
        j = (i + 1) % size
        if (
            tokens[i].id in id_set
            and tokens[j].id in id_set
            and tokens[i].id != tokens[j].id
            and i not in used
            and j not in used
        ):
            pairs.append((i, j))
            used.update((i, j))
    if len(pairs) != 3 or len(used) != 6:
        raise MoveError("ids do not form a triangle (three adjacent pairs)")
    seen_pairs = {frozenset((tokens[i].id, tokens[j].id)) for i, j in pairs}
    if len(seen_pairs) != 3:
        raise MoveError("triangle pairs must involve all three id pairs")
    return {"pairs": pairs}


def _pattern_at(g: PseudoGaussDiagram, pairs: list[tuple[int, int]]) -> tuple:
    """Canonical local descriptor of the triangle at the three token pairs."""
    tokens = g.tokens
    best = None
    for rot in range(3):
        ordered = pairs[rot:] + pairs[:rot]
        rename: dict[int, int] = {}
        desc = []
        for i, j in ordered:
            row = []
            for pos in (i, j):
                t = tokens[pos]
                lid = rename.setdefault(t.id, len(rename))
                row.append((lid, t.role, t.sign if t.sign is not None else 0))
            desc.append(tuple(row))
        desc = tuple(desc)
        if best is None or desc < best:
            best = desc
    return best


def _check_triangle_legal(g: PseudoGaussDiagram, info: dict) -> None:
    """The local pattern must be a planar-realizable legal slide.

    Membership in the analytically generated template sets checks strand
    height consistency and the sign/orientation coupling in one step.
    """
    pattern = _pattern_at(g, info["pairs"])
    if pattern in _R3_TEMPLATES or pattern in _PR3_TEMPLATES:
        return
    raise MoveError("triangle data does not match any planar-realizable slide")


# ---------------------------------------------------------------------------
# Site enumeration and scrambling
# ---------------------------------------------------------------------------


def removable_kinks(g: PseudoGaussDiagram, classical: bool) -> list[int]:
    out = []
    size = g.size
    for cid in g.ids():
        i, j = g.positions_of(cid)
        tok = _token_of(g, cid)
        if tok.is_classical() != classical:
            continue
        if (j - i) % size == 1 or (i - j) % size == 1:
            out.append(cid)
    return out


def _adjacent_id_pairs(g: PseudoGaussDiagram) -> set[tuple[int, int]]:
    tokens = g.tokens
    size = len(tokens)
    out = set()
    for i in range(size):
        a, b = tokens[i].id, tokens[(i + 1) % size].id
        if a != b:
            out.add((min(a, b), max(a, b)))
    return out


def removable_r2_pairs(g: PseudoGaussDiagram) -> list[tuple[int, int]]:
    out = []
    for ida, idb in sorted(_adjacent_id_pairs(g)):
        try:
            apply_move(g, MoveSite("R2-", (ida, idb)))
        except (MoveError, GaussError):
            continue
        out.append((ida, idb))
    return out


def pr2_sites(g: PseudoGaussDiagram) -> list[tuple[int, int]]:
    classical = set(g.classical_ids())
    pre = set(g.precrossing_ids())
    out = []
    for a, b in sorted(_adjacent_id_pairs(g)):
        if a in classical and b in pre:
            cid, pid = a, b
        elif b in classical and a in pre:
            cid, pid = b, a
        else:
            continue
        try:
            apply_move(g, MoveSite("PR2+", (cid, pid)))
        except (MoveError, GaussError):
            continue
        out.append((cid, pid))
    return out


def triangle_sites(g: PseudoGaussDiagram) -> list[tuple[str, tuple[int, int, int]]]:
    pairs = _adjacent_id_pairs(g)
    neighbors: dict[int, set[int]] = {}
    for a, b in pairs:
        neighbors.setdefault(a, set()).add(b)
        neighbors.setdefault(b, set()).add(a)
    out = []
    ids = sorted(neighbors)
    for i, a in enumerate(ids):
        for b in sorted(neighbors[a]):
            if b <= a:
                continue
            for c in sorted(neighbors[a] & neighbors.get(b, set())):
                if c <= b:
                    continue
                trio = (a, b, c)
                n_pre = sum(1 for cid in trio if not _token_of(g, cid).is_classical())
                if n_pre > 1:
                    continue
                kind = "R3" if n_pre == 0 else "PR3"
                try:
                    apply_move(g, MoveSite(kind, trio))
                except (MoveError, GaussError):
                    continue
                out.append((kind, trio))
    return out


def scramble(
    g: PseudoGaussDiagram,
    seed: int,
    steps: int,
    insert_bias: float = 0.7,
    max_crossings: int = 24,
) -> PseudoGaussDiagram:
    """Apply `steps` pseudorandom applicable moves, deterministically from
    `seed`.  Insertions are favored (by `insert_bias`) so diagrams grow
    rather than stall; the mix includes every implemented move kind as
    sites become available."""
    if steps < 0:
        raise ValueError("steps must be >= 0")
    rng = random.Random(seed)
    cur = g
    for _ in range(steps):
        size = cur.size
        inserts: list[MoveSite] = []
        if size // 2 < max_crossings:
            gap = rng.randrange(size + 1)
            inserts.append(MoveSite("R1+", (gap, rng.choice((1, -1)), rng.random() < 0.5)))
            inserts.append(MoveSite("PR1+", (rng.randrange(size + 1), rng.random() < 0.5)))
            inserts.append(
                MoveSite(
                    "R2+",
                    (
                        rng.randrange(size + 1),
                        rng.randrange(size + 1),
                        rng.random() < 0.5,
                        rng.choice((1, -1)),
                        rng.random() < 0.5,
                    ),
                )
            )
        others: list[MoveSite] = []
        others.extend(MoveSite("R1-", (cid,)) for cid in removable_kinks(cur, True))
        others.extend(MoveSite("PR1-", (cid,)) for cid in removable_kinks(cur, False))
        others.extend(MoveSite("R2-", pair) for pair in removable_r2_pairs(cur))
        others.extend(MoveSite("PR2+", pair) for pair in pr2_sites(cur))
        others.extend(MoveSite(kind, trio) for kind, trio in triangle_sites(cur))
        if inserts and (not others or rng.random() < insert_bias):
            pool = inserts
        elif others:
            pool = others
        else:
            pool = inserts
        if not pool:
            continue
        site = rng.choice(pool)
        try:
            cur = apply_move(cur, site)
        except (MoveError, GaussError):
            continue
    return cur
