"""Named graphs, vertex insertion, diagonal flips, random families."""

import pytest

import isocycle as ic
from isocycle.errors import BaseNotFourConnected, SizeTooSmall, UnknownName


def test_named_graph_lookup():
    for name in ("k4", "octahedron", "cube", "prism"):
        g = ic.named_graph(name)
        assert ic.is_three_connected(g)
    with pytest.raises(UnknownName):
        ic.named_graph("dodecahedron-but-misspelled")


def test_wheel_shape():
    g = ic.wheel(5)
    assert g.n == 6 and g.degree("h") == 5
    assert all(g.degree(f"r{i}") == 3 for i in range(5))


def test_double_wheel_is_four_connected_triangulation():
    g = ic.double_wheel(6)
    assert g.n == 8
    assert ic.is_maximal_planar(g)
    assert ic.is_four_connected(g)
    assert g.degree("a") == g.degree("b") == 6


def test_base_hamiltonian_cycle():
    for k in (5, 6, 9):
        g = ic.double_wheel(k)
        cycle = ic.base_hamiltonian_cycle(k)
        assert len(cycle) == g.n
        assert ic.check_cycle(g, cycle) == cycle


def test_insert_vertex_adds_degree_three_vertex():
    g = ic.octahedron()
    face = g.faces[0]
    h = ic.insert_vertex(g, face, "z")
    assert h.n == g.n + 1
    assert h.degree("z") == 3
    assert len(h.faces) == len(g.faces) + 2
    assert sorted(h.adj["z"]) == sorted(face)


def test_diagonal_flip_keeps_triangulation():
    g = ic.double_wheel(6)
    u, v = g.edges[0]
    h = ic.diagonal_flip(g, u, v)
    if h is None:
        pytest.skip("first edge not flippable in this labelling")
    assert ic.is_maximal_planar(h)
    assert h.n == g.n and h.m == g.m
    assert h.edge(u, v) not in set(h.edges)


def test_insertion_family_fills_every_face():
    base = ic.octahedron()
    g = ic.gen_insertion_family(base, fill_count=None)
    assert g.n == base.n + len(base.faces) == 14
    assert ic.is_essentially_four_connected(g)
    assert ic.is_maximal_planar(g)


def test_insertion_family_partial_fill_is_seeded():
    base = ic.double_wheel(6)
    g1 = ic.gen_insertion_family(base, seed=5, fill_count=4)
    g2 = ic.gen_insertion_family(base, seed=5, fill_count=4)
    g3 = ic.gen_insertion_family(base, seed=6, fill_count=4)
    assert [tuple(f) for f in g1.faces] == [tuple(f) for f in g2.faces]
    assert {frozenset(f) for f in g1.faces} != {frozenset(f) for f in g3.faces}
    assert g1.n == base.n + 4
    assert ic.is_essentially_four_connected(g1)


def test_insertion_family_rejects_weak_bases():
    with pytest.raises(BaseNotFourConnected):
        ic.gen_insertion_family(ic.cube())  # not even a triangulation
    with pytest.raises(BaseNotFourConnected):
        ic.gen_insertion_family(ic.k4())  # maximal planar but only 3-connected
    with pytest.raises(SizeTooSmall):
        ic.gen_insertion_family(ic.octahedron(), fill_count=99)


def test_random_triangulation_is_valid_and_seeded():
    g1 = ic.gen_random_triangulation(12, seed=2)
    g2 = ic.gen_random_triangulation(12, seed=2)
    g3 = ic.gen_random_triangulation(12, seed=3)
    assert g1.n == 12 and ic.is_maximal_planar(g1)
    assert [tuple(f) for f in g1.faces] == [tuple(f) for f in g2.faces]
    assert {frozenset(f) for f in g1.faces} != {frozenset(f) for f in g3.faces}
    # stacked insertions always leave a degree-3 vertex
    assert not ic.is_four_connected(g1)


def test_random_four_connected_triangulation():
    g = ic.gen_random_triangulation(10, seed=1, require_four_connected=True)
    assert g.n == 10
    assert ic.is_maximal_planar(g)
    assert ic.is_four_connected(g)


def test_random_triangulation_size_guards():
    with pytest.raises(SizeTooSmall):
        ic.gen_random_triangulation(3)
    with pytest.raises(SizeTooSmall):
        ic.gen_random_triangulation(5, require_four_connected=True)


def test_sweep_corpus_shape(sweep_corpus):
    assert len(sweep_corpus) >= 100
    assert all(14 <= g.n <= 24 for g in sweep_corpus)
    # the generator asserts essential 4-connectivity; spot-check anyway
    for g in sweep_corpus[::40]:
        assert ic.is_essentially_four_connected(g)
