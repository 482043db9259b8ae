import itertools
import random

import pytest

from pseudoknots.bracket import jones, kauffman_bracket
from pseudoknots.diagram import PDError, faces
from pseudoknots.gauss import GaussError, parse_gauss, pd_to_gauss
from pseudoknots.invariant import compute_i, i_equal
from pseudoknots.moves import (
    MoveError,
    MoveSite,
    _PR3_TEMPLATES,
    _R3_TEMPLATES,
    apply_move,
    pr2_sites,
    removable_kinks,
    removable_r2_pairs,
    scramble,
    triangle_sites,
)
from pseudoknots.pdmoves import (
    MoveError as PDMoveError,
    find_bigons,
    find_kinks,
    find_triangles,
    r1_insert,
    r1_remove,
    r2_insert,
    r2_remove,
    r3,
    triangle_soundness,
)
from pseudoknots.tables import alternating_resolution, twist_shadow

TREFOIL_G = "Ph1,Pt2,Ph3,Pt1,Ph2,Pt3"


# -- Gauss-level moves -------------------------------------------------------


def test_r1_insert_remove_inverse():
    g = parse_gauss(TREFOIL_G)
    for sign in (1, -1):
        for over_first in (True, False):
            bigger = apply_move(g, MoveSite("R1+", (2, sign, over_first)))
            new_id = (set(bigger.ids()) - set(g.ids())).pop()
            back = apply_move(bigger, MoveSite("R1-", (new_id,)))
            assert back.to_text() == g.to_text()


def test_pr1_insert_deletes_under_i():
    g = parse_gauss(TREFOIL_G)
    i0 = compute_i(g)
    bigger = apply_move(g, MoveSite("PR1+", (3, True)))
    assert i_equal(i0, compute_i(bigger))
    new_id = (set(bigger.ids()) - set(g.ids())).pop()
    assert apply_move(bigger, MoveSite("PR1-", (new_id,))).to_text() == g.to_text()


def test_r2_over_prechord_cancels():
    g = parse_gauss("Ph1,Pt1")
    # slide a classical pair over the prechord: decorations cancel (+1 -1)
    bigger = apply_move(g, MoveSite("R2+", (1, 2, False, 1, True)))
    assert compute_i(bigger).is_empty() == compute_i(g).is_empty()
    pair = tuple(sorted(set(bigger.ids()) - set(g.ids())))
    back = apply_move(bigger, MoveSite("R2-", pair))
    assert back.to_text() == g.to_text()


def test_r2_remove_rejects_clasp():
    clasp = parse_gauss("O1+,O2+,U1+,U2+")
    with pytest.raises((MoveError, GaussError)):
        apply_move(clasp, MoveSite("R2-", (1, 2)))


def test_r1_remove_requires_adjacency():
    g = parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+")
    with pytest.raises(MoveError, match="adjacent"):
        apply_move(g, MoveSite("R1-", (1,)))


def test_move_kind_validation():
    with pytest.raises(MoveError):
        MoveSite("R9", (0,))


def test_triangle_template_tables():
    assert len(_R3_TEMPLATES) == 32
    assert len(_PR3_TEMPLATES) == 32
    assert all(
        any(role in ("h", "t") for row in pat for (_, role, _) in row)
        for pat in _PR3_TEMPLATES
    )


def test_r3_rejects_unrealizable_signs():
    # adjacent triangle pattern with all-positive signs on these roles is the
    # cyclic/non-planar combination found during development
    g = parse_gauss("Pt5,Pt10,Ph10,U8+,U7-,Ph5,Ph1,O7-,O8+,O2-,Pt1,U2-,O4+,Ph11,Pt11,O6+,U6+,U4+")
    with pytest.raises(MoveError):
        apply_move(g, MoveSite("PR3", (4, 6, 11)))


def _gauss_corpus():
    bases = [
        parse_gauss("Ph1,Pt1"),
        parse_gauss(TREFOIL_G),
        parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+"),
        parse_gauss("Ph1,O2-,Pt1,U2-"),
        pd_to_gauss(twist_shadow((2, 1, 1, 1, 2))),
    ]
    corpus = list(bases)
    for i, b in enumerate(bases):
        corpus.append(scramble(b, seed=17 + i, steps=12, max_crossings=10))
    return corpus


def test_all_moves_preserve_i():
    applied = {}
    for g in _gauss_corpus():
        i0 = compute_i(g)
        size = g.size
        sites = [MoveSite("R1+", (0, 1, True)), MoveSite("PR1+", (size // 2, False))]
        sites += [MoveSite("R2+", (0, size // 2, cr, -1, ov)) for cr in (0, 1) for ov in (0, 1)]
        sites += [MoveSite("R1-", (c,)) for c in removable_kinks(g, True)]
        sites += [MoveSite("PR1-", (c,)) for c in removable_kinks(g, False)]
        sites += [MoveSite("R2-", p) for p in removable_r2_pairs(g)]
        sites += [MoveSite("PR2+", p) for p in pr2_sites(g)]
        sites += [MoveSite(k, t) for k, t in triangle_sites(g)]
        for site in sites:
            try:
                out = apply_move(g, site)
            except (MoveError, GaussError):
                continue
            applied[site.kind] = applied.get(site.kind, 0) + 1
            assert i_equal(i0, compute_i(out)), (site.kind, site.data, g.to_text())
    assert {"R1+", "R1-", "PR1+", "PR1-", "R2+", "R2-"} <= set(applied)


def test_scramble_deterministic_and_invariant():
    g = parse_gauss(TREFOIL_G)
    a = scramble(g, seed=5, steps=25)
    b = scramble(g, seed=5, steps=25)
    assert a.to_text() == b.to_text()
    assert scramble(g, seed=5, steps=0).to_text() == g.to_text()
    assert i_equal(compute_i(g), compute_i(a))


def test_pr2_slide_moves_crossing():
    g = parse_gauss("Ph1,O2-,Pt1,U2-")
    sites = pr2_sites(g)
    assert sites
    out = apply_move(g, MoveSite("PR2+", sites[0]))
    assert not out.to_text() == g.to_text()
    # involution: sliding back restores
    assert apply_move(out, MoveSite("PR2-", sites[0])).to_text() == g.to_text()


# -- PD-level moves (ground truth for bracket/jones invariance) --------------


def test_pd_r1_r2_bracket_invariance():
    base = alternating_resolution(twist_shadow((3, 2)))
    b0, j0 = kauffman_bracket(base), jones(base)
    for curl in (1, -1):
        for over_first in (True, False):
            d = r1_insert(base, 3, curl, over_first)
            assert jones(d) == j0
            d2 = r1_remove(d, find_kinks(d)[0])
            assert kauffman_bracket(d2) == b0
    count = 0
    for f in faces(base):
        for d1, d2 in itertools.permutations(f, 2):
            for over in (True, False):
                try:
                    big = r2_insert(base, d1, d2, over_first=over)
                except (PDMoveError, PDError):
                    continue
                count += 1
                assert kauffman_bracket(big) == b0
                pair = find_bigons(big)[0]
                assert kauffman_bracket(r2_remove(big, *pair)) == b0
    assert count >= 20


def test_pd_r3_soundness_and_invariance():
    base = alternating_resolution(twist_shadow((3, 1, 2)))
    # alternating-diagram triangles carry cyclic data: no slide exists
    for t in find_triangles(base):
        assert triangle_soundness(base, t) is not None
        with pytest.raises(PDMoveError):
            r3(base, t)
    # create sound triangles by sliding a strand over a crossing
    rng = random.Random(2)
    j0 = jones(base)
    slides = 0
    for f in faces(base):
        for d1, d2 in itertools.permutations(f, 2):
            try:
                big = r2_insert(base, d1, d2, over_first=True)
            except (PDMoveError, PDError):
                continue
            for t in find_triangles(big):
                if triangle_soundness(big, t) is None:
                    try:
                        out = r3(big, t)
                    except PDMoveError:
                        continue
                    slides += 1
                    assert jones(out) == j0
    assert slides >= 10


def test_pd_random_walk_preserves_jones():
    rng = random.Random(11)
    base = alternating_resolution(twist_shadow((2, 1, 1, 2)))
    jd = jones(base)
    cur = base
    for step in range(120):
        ops = [("r1-", k) for k in find_kinks(cur)[:1]]
        ops += [("r2-", p) for p in find_bigons(cur)[:1]]
        tris = [t for t in find_triangles(cur) if triangle_soundness(cur, t) is None]
        ops += [("r3", t) for t in tris[:1]]
        if cur.n < 10:
            ops += [("r1+",)] * 2 + [("r2+",)] * 3
        op = rng.choice(ops)
        try:
            if op[0] == "r1+":
                edges = sorted({e for v in cur.vertices for e in v.edges})
                cur = r1_insert(cur, rng.choice(edges), rng.choice((1, -1)), rng.choice((True, False)))
            elif op[0] == "r2+":
                f = rng.choice(faces(cur))
                if len(f) < 2:
                    continue
                a, b = rng.sample(f, 2)
                cur = r2_insert(cur, a, b, rng.choice((True, False)))
            elif op[0] == "r1-":
                cur = r1_remove(cur, op[1])
            elif op[0] == "r2-":
                cur = r2_remove(cur, *op[1])
            else:
                cur = r3(cur, op[1])
        except (PDMoveError, PDError):
            continue
        assert jones(cur) == jd
