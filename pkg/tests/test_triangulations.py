"""Radical complexes, exact triangulation checks, bistellar flips."""

import pytest

from agraded import (
    SAME_RADICAL,
    BISTELLAR,
    NotFlippableComplex,
    baues_image,
    bistellar_flip,
    brute_force_enumerate,
    circuit_flip_spec,
    complex_of_radical,
    edge_transition,
    explore,
    flip,
    is_circuit,
    is_triangulation,
    minimalize,
    validate_grading,
)
from agraded.triangulations import make_complex, reference_facets, slice_volume


def test_complex_of_radical_basics(ctx12):
    cplx = complex_of_radical(minimalize([(1, 1)]), 2)
    assert cplx.facets == ((0,), (1,))
    assert complex_of_radical(minimalize([(2, 0)]), 2).facets == ((1,),)
    assert complex_of_radical(minimalize([(0, 1)]), 2).facets == ((0,),)


def test_is_triangulation_12(ctx12):
    m = ctx12.A
    assert is_triangulation(make_complex(2, [(0,)]), m)
    assert is_triangulation(make_complex(2, [(1,)]), m)
    # both rays together double-cover the cone
    assert not is_triangulation(make_complex(2, [(0,), (1,)]), m)


def test_reference_volume_invariance(ctx_veronese):
    m = ctx_veronese.A
    ref = reference_facets(m)
    vol = slice_volume(m, ref)
    ideal = ctx_veronese.reference_ideal
    cplx = complex_of_radical(ideal, m.n)
    assert slice_volume(m, cplx.facets) == vol
    assert is_triangulation(cplx, m)


def test_missing_facet_fails(ctx_veronese):
    m = ctx_veronese.A
    cplx = complex_of_radical(ctx_veronese.reference_ideal, m.n)
    short = make_complex(m.n, cplx.facets[1:])
    assert not is_triangulation(short, m)


def test_all_enumerated_radicals_triangulate(ctx_veronese, ctx137, curve_ctx):
    for ctx in (ctx_veronese, ctx137, curve_ctx[1]):
        for ideal in brute_force_enumerate(ctx):
            assert is_triangulation(complex_of_radical(ideal, ctx.A.n), ctx.A)


def test_bistellar_flip_corank1(ctx12):
    circ = is_circuit(ctx12.A, ((2, 0), (0, 1)))
    spec = circuit_flip_spec(circ)
    start = make_complex(2, [(1,)])
    other = bistellar_flip(start, spec)
    assert other.facets == ((0,),)
    assert bistellar_flip(other, spec) == start  # involution


def test_bistellar_flip_rejects_absent_circuit(ctx_veronese):
    m = ctx_veronese.A
    circ = is_circuit(m, ((0, 2, 0, 0, 0, 0), (1, 0, 0, 1, 0, 0)))
    assert circ is not None
    spec = circuit_flip_spec(circ)
    cplx = make_complex(m.n, [(0, 2, 4)])
    with pytest.raises(NotFlippableComplex):
        bistellar_flip(cplx, spec)


def test_degenerate_flip_link_condition(ctx_veronese):
    """Lower-dimensional circuits flip through their common link."""
    m = ctx_veronese.A
    moved = 0
    ideals = brute_force_enumerate(ctx_veronese)
    graph = explore(ctx_veronese, start=ideals)
    for i, j, label in graph.edges:
        circ = is_circuit(m, label)
        if circ is None:
            continue
        if len(circ.t_plus) + len(circ.t_minus) <= m.d:
            move = flip(graph.vertices[i], label, ctx_veronese)
            if edge_transition(move, ctx_veronese) == BISTELLAR:
                moved += 1
    assert moved > 0  # the fixture really exercises the degenerate case


def test_transitions_exhaustive(ctx_veronese, ctx_corank4, curve_ctx):
    for ctx in (ctx_veronese, ctx_corank4, curve_ctx[1]):
        ideals = brute_force_enumerate(ctx)
        graph = explore(ctx, start=ideals)
        seen = set()
        for i, j, label in graph.edges:
            move = flip(graph.vertices[i], label, ctx)
            verdict = edge_transition(move, ctx)
            seen.add(verdict)
            assert verdict in (SAME_RADICAL, BISTELLAR)
        assert BISTELLAR in seen


def test_transition_same_radical_keeps_incoming_support(curve_ctx):
    ctx = curve_ctx[1]
    from agraded import curve_monomial_ideal, neighbors

    ideal = curve_monomial_ideal(1)
    for move in neighbors(ideal, ctx):
        verdict = edge_transition(move, ctx)
        if verdict == SAME_RADICAL:
            support = tuple(1 if x else 0 for x in move.b)
            assert move.source.radical().contains(support)


def test_baues_image_12(ctx12):
    graph = explore(ctx12)
    complexes, edges = baues_image(graph, ctx12)
    assert len(complexes) == 2 and edges == ((0, 1),)


def test_baues_image_veronese(ctx_veronese):
    graph = explore(ctx_veronese)
    complexes, edges = baues_image(graph, ctx_veronese)
    assert len(complexes) <= 29
    # quotient of a connected graph stays connected
    parent = list(range(len(complexes)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        parent[find(a)] = find(b)
    assert len({find(i) for i in range(len(complexes))}) == 1
    # frozen counts for this configuration
    assert (len(complexes), len(edges)) == (14, 21)


def test_homogenized_matrix_accepted():
    # appending a row of ones turns the two rays into a 2-dimensional cone
    m = validate_grading([[1, 1], [1, 2]])
    assert is_triangulation(make_complex(2, [(0, 1)]), m)
    assert not is_triangulation(make_complex(2, [(0,)]), m)
    assert slice_volume(m, reference_facets(m)) > 0
