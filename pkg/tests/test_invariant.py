import random

from pseudoknots.chords import DecoratedChordDiagram, evenness_check
from pseudoknots.gauss import GaussToken, PseudoGaussDiagram, parse_gauss, pd_to_gauss
from pseudoknots.invariant import SINGLE_PASS, compute_i, i_equal, prechord_diagram
from pseudoknots.tables import twist_shadow


def flip_arrow(g, cid):
    out = []
    for t in g.tokens:
        if t.id == cid and not t.is_classical():
            out.append(GaussToken(t.id, "t" if t.role == "h" else "h", None))
        else:
            out.append(t)
    return PseudoGaussDiagram(tuple(out))


def test_kink_deletes_to_empty():
    assert compute_i(parse_gauss("Ph1,Pt1")).is_empty()


def test_pseudo_trefoil_three_zero_chords():
    value = compute_i(parse_gauss("Ph1,Pt2,Ph3,Pt1,Ph2,Pt3"))
    assert value.chords == ((0, 3, 0), (1, 4, 0), (2, 5, 0))


def test_classical_arrows_vanish():
    assert compute_i(parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+")).is_empty()


def test_decorations_sum_signs():
    # opposite-sign arrows cancel: decoration 0, adjacent endpoints, deleted
    g = parse_gauss("Ph1,O2+,U3-,Pt1,U2+,O3-")
    assert compute_i(g).is_empty()
    # one positive arrow: decoration +1 keeps the prechord alive
    g2 = parse_gauss("Ph1,O2+,Pt1,U2+")
    assert compute_i(g2).chords == ((0, 1, 1),)
    # two positive arrows: decoration +2
    g3 = parse_gauss("Ph1,O2+,O3+,Pt1,U2+,U3+")
    assert compute_i(g3).chords == ((0, 1, 2),)


def test_virtual_input_accepted():
    # interleaved two-prechord diagram is virtual-only; I is still defined
    g = parse_gauss("Ph1,Ph2,Pt1,Pt2")
    value = compute_i(g)
    assert value.chords == ((0, 2, 0), (1, 3, 0))


def test_fixpoint_vs_single_pass():
    nested = parse_gauss("Ph1,Ph2,Pt2,Pt1,Ph3,Pt3")
    assert compute_i(nested).is_empty()
    once = compute_i(nested, deletion=SINGLE_PASS)
    assert once.chords == ((0, 1, 0),)


def test_arrow_direction_irrelevant():
    rng = random.Random(4)
    bases = [
        pd_to_gauss(twist_shadow((2, 1, 1, 1, 2))),
        parse_gauss("Ph1,O2-,Pt1,U2-"),
        parse_gauss("Ph1,Pt2,Ph3,Pt1,Ph2,Pt3"),
    ]
    for g in bases:
        i0 = compute_i(g)
        for cid in g.precrossing_ids():
            assert i_equal(i0, compute_i(flip_arrow(g, cid)))


def test_decoration_parity_and_count_bound():
    rng = random.Random(9)
    from pseudoknots.moves import scramble

    for seed in range(6):
        g = scramble(pd_to_gauss(twist_shadow((3, 1, 2))), seed=seed, steps=10)
        value = compute_i(g)
        assert len(value.chords) <= len(g.precrossing_ids())
        positions = {}
        for i, t in enumerate(g.tokens):
            positions.setdefault(t.id, []).append(i)
        # parity of each decoration equals parity of interleaving classical count
        from pseudoknots.chords import interleave

        for pid in g.precrossing_ids():
            span = tuple(positions[pid])
            inter = [
                cid
                for cid in g.classical_ids()
                if interleave(span, tuple(positions[cid]), g.size)
            ]
            dec = sum(
                next(t.sign for t in g.tokens if t.id == cid) for cid in inter
            )
            assert (dec - len(inter)) % 2 == 0


def test_shadow_decorations_all_zero():
    for code in [(3,), (2, 2), (2, 1, 1, 1, 2)]:
        value = compute_i(pd_to_gauss(twist_shadow(code)))
        assert all(dec == 0 for _, _, dec in value.chords)


def test_i_equal_on_rotations():
    value = compute_i(parse_gauss("Ph1,Pt2,Ph3,Pt1,Ph2,Pt3"))
    assert i_equal(value, value.rotated(2))
    assert i_equal(DecoratedChordDiagram.empty(), DecoratedChordDiagram.empty())


def test_counterexample_values_differ(p1_p2):
    p1, p2 = p1_p2
    assert not i_equal(compute_i(pd_to_gauss(p1)), compute_i(pd_to_gauss(p2)))


def test_evenness_of_planar_shadows():
    for code in [(3,), (2, 2), (3, 1, 2), (2, 1, 1, 1, 2)]:
        g = pd_to_gauss(twist_shadow(code))
        assert evenness_check(prechord_diagram(g))
