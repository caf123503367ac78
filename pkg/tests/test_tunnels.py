"""Eligible 3-arches, tunnels, tracks, on-track, transfer pairs."""

import pytest

import isocycle as ic


def get_tracks(analysis):
    t = ic.find_tunnels(analysis)[0]
    trks = ic.tracks(analysis, t)
    ccw = trks[0] if trks[0].direction == "ccw" else trks[1]
    cw = trks[1] if trks[0].direction == "ccw" else trks[0]
    return t, ccw, cw


# -- eligibility and the consecutive relation ---------------------------------


def test_ladder_eligible_three_arches(ladder_analysis):
    el = ic.eligible_three_arches(ladder_analysis)
    assert [(A.face, A.start) for A in el] == [
        (0, 0), (2, 2), (7, 4), (9, 6), (11, 8)
    ]
    # the arch through the merged face is a rehosted chord, not a boundary path
    kinds = [A.kind for A in el]
    assert kinds == ["proper", "proper", "proper", "chord", "proper"]


def test_no_three_arches_no_tunnels(hex_instance):
    g, cycle = hex_instance
    a = ic.analyze_cycle(g, cycle)
    assert ic.eligible_three_arches(a) == []
    assert ic.find_tunnels(a) == []


def test_consecutive_means_sharing_exactly_one_position(ladder_analysis):
    el = ic.eligible_three_arches(ladder_analysis)
    assert ic.consecutive(el[0], el[1])
    assert ic.consecutive(el[1], el[2])
    assert not ic.consecutive(el[0], el[2])
    assert not ic.consecutive(el[0], el[0])


# -- tunnels -------------------------------------------------------------------


def test_ladder_single_acyclic_tunnel(ladder_analysis):
    tunnels = ic.find_tunnels(ladder_analysis)
    assert len(tunnels) == 1
    t = tunnels[0]
    assert not t.cyclic and t.k == 5
    assert [A.start for A in t.arches] == [0, 2, 4, 6, 8]
    assert ic.check_tunnel_acyclic(t)


def test_tunnels_partition_eligible_arches(ladder_analysis, cyclic_instance):
    g, cycle = cyclic_instance
    for a in (ladder_analysis, ic.analyze_cycle(g, cycle)):
        el = ic.eligible_three_arches(a)
        seen = [A for t in ic.find_tunnels(a) for A in t.arches]
        assert sorted((A.face, A.start) for A in seen) == sorted(
            (A.face, A.start) for A in el
        )
        assert len(seen) == len(el)


def test_cyclic_tunnel_forces_even_cycle(cyclic_instance):
    g, cycle = cyclic_instance
    a = ic.analyze_cycle(g, cycle)
    tunnels = ic.find_tunnels(a)
    assert len(tunnels) == 1
    t = tunnels[0]
    assert t.cyclic and t.k == 4
    assert [A.start for A in t.arches] == [0, 2, 4, 6]
    assert a.c == 2 * t.k
    assert not ic.check_tunnel_acyclic(t)


def test_two_isolated_three_arches_stay_separate(arch_analysis):
    tunnels = ic.find_tunnels(arch_analysis)
    assert [(t.k, t.cyclic) for t in tunnels] == [(1, False), (1, False)]
    assert sorted(t.arches[0].start for t in tunnels) == [0, 5]


# -- tracks --------------------------------------------------------------------


def test_ladder_tracks_and_exits(ladder_analysis):
    t, ccw, cw = get_tracks(ladder_analysis)
    assert [A.start for A in ccw.arches] == [0, 2, 4, 6, 8]
    assert [A.start for A in cw.arches] == [8, 6, 4, 2, 0]
    # the exit pair sits just outside the first arch, across the cycle edge
    assert (ccw.exit_face, ccw.exit_position) == (1, 0)
    assert (cw.exit_face, cw.exit_position) == (9, 10)


def test_cyclic_tunnel_has_no_tracks(cyclic_instance):
    g, cycle = cyclic_instance
    a = ic.analyze_cycle(g, cycle)
    t = ic.find_tunnels(a)[0]
    with pytest.raises(ValueError):
        ic.tracks(a, t)
    (built, trks), = ic.build_tunnels(a)
    assert built.cyclic and trks == ()


def test_build_tunnels_wrapper(ladder_analysis):
    (t, trks), = ic.build_tunnels(ladder_analysis)
    assert t.k == 5
    assert tuple(tr.direction for tr in trks) == ("ccw", "cw")


# -- on-track ------------------------------------------------------------------


def test_on_track_truth_table(ladder_analysis):
    a = ladder_analysis
    t = ic.find_tunnels(a)[0]
    exit_pair = (1, 0)
    positives = [(1, 0), (0, 2), (2, 4), (7, 6), (9, 8), (11, 10)]
    for pair in positives:
        assert ic.on_track(a, t, exit_pair, pair), pair
    negatives = [(7, 4), (9, 6), (11, 8)]
    for pair in negatives:
        assert not ic.on_track(a, t, exit_pair, pair), pair
    # pairs on opposite sides four steps apart are on track with each other
    assert ic.on_track(a, t, (7, 4), (9, 10))


def test_on_track_is_symmetric(ladder_analysis):
    a = ladder_analysis
    t = ic.find_tunnels(a)[0]
    pairs = [(1, 0), (0, 2), (7, 4), (9, 8), (11, 10)]
    for p in pairs:
        for q in pairs:
            assert ic.on_track(a, t, p, q) == ic.on_track(a, t, q, p)


# -- transfer pairs ------------------------------------------------------------


def test_ladder_transfer_pairs(ladder_analysis):
    t, ccw, cw = get_tracks(ladder_analysis)
    assert [(p.face, p.position) for p in ic.transfer_pairs(ladder_analysis, ccw)] == [
        (0, 2), (2, 4), (7, 6)
    ]
    # the clockwise chain dies immediately: the face across its first
    # candidate edge is the preceding tunnel face itself
    assert ic.transfer_pairs(ladder_analysis, cw) == []


def test_ladder_transfer_negatives(ladder_analysis):
    t, ccw, cw = get_tracks(ladder_analysis)
    # (9, 8): across the merged face the edge is neither extremal nor next
    # to an extremal one, so the chain breaks there
    assert ic.is_transfer_pair(ladder_analysis, 9, 8, ccw) is None
    # (11, 10): past the break nothing further qualifies
    assert ic.is_transfer_pair(ladder_analysis, 11, 10, ccw) is None


def test_is_transfer_pair_positive_lookup(ladder_analysis):
    t, ccw, cw = get_tracks(ladder_analysis)
    for face, pos in [(0, 2), (2, 4), (7, 6)]:
        p = ic.is_transfer_pair(ladder_analysis, face, pos, ccw)
        assert (p.face, p.position) == (face, pos)


def test_lax_mode_matches_strict_on_ladder(ladder_analysis):
    t, ccw, cw = get_tracks(ladder_analysis)
    strict = [(p.face, p.position) for p in ic.transfer_pairs(ladder_analysis, ccw)]
    lax = [
        (p.face, p.position)
        for p in ic.transfer_pairs(ladder_analysis, ccw, strict=False)
    ]
    assert strict == lax


def test_transfer_registry_and_arches(ladder_analysis):
    reg = ic.transfer_registry(ladder_analysis)
    assert sorted(reg) == [(0, 2), (2, 4), (7, 6)]
    t = ic.find_tunnels(ladder_analysis)[0]
    assert [(A.face, A.start) for A in ic.transfer_arches(ladder_analysis, t)] == [
        (0, 0), (2, 2), (7, 4)
    ]
