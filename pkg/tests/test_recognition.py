from __future__ import annotations

import random
from itertools import combinations, product

import pytest

from conftest import random_graph
from oracles import (
    alternation_by_restriction,
    comparability_by_all_orientations,
    graph_by_restriction,
    semi_transitive_by_paths,
    wr_by_all_orientations,
)
from wordrep.certificates import (
    NON_COMPARABILITY,
    SEMI_TRANSITIVE,
    TRANSITIVE,
    WITNESS,
    Certificate,
    Part,
)
from wordrep.errors import InputError
from wordrep.graphs import (
    Graph,
    Orientation,
    complete_graph,
    cycle_graph,
    empty_graph,
    induced_subgraph,
    path_graph,
    wheel_graph,
)
from wordrep.recognition import (
    alternates,
    check_semi_transitive,
    check_transitive,
    comparability_decide,
    find_word,
    graph_of_word,
    is_minimal_non_wr,
    mu_exact,
    mu_verify,
    verify_certificate,
    verify_decomposition,
    word_represents,
    wr_decide,
    wr_with_dominating_vertex,
)

# ── words ────────────────────────────────────────────────────────────────


def test_alternates_basics():
    assert alternates([0, 1, 0, 1], 0, 1)
    assert not alternates([0, 0, 1], 0, 1)
    w = [1, 2, 1, 3, 2, 3]
    # restriction to {1,3} is 1 1 3 3, so no alternation
    assert alternates(w, 1, 2) is True
    assert alternates(w, 1, 3) is False
    assert alternates(w, 2, 3) is True
    with pytest.raises(InputError):
        alternates([0, 1], 0, 0)
    with pytest.raises(InputError):
        alternates([0, 0], 0, 1)


def test_alternates_matches_restriction_oracle():
    rng = random.Random(21)
    for _ in range(300):
        n = rng.randint(2, 6)
        w = [rng.randrange(n) for _ in range(rng.randint(2, 14))]
        x, y = rng.sample(range(n), 2)
        if not ({x, y} <= set(w)):
            continue
        assert alternates(w, x, y) == alternation_by_restriction(w, x, y)


def test_graph_of_word_examples():
    assert graph_of_word([2, 0, 1]) == complete_graph(3)
    assert graph_of_word([0, 0, 1, 1, 2, 2]) == empty_graph(3)
    assert graph_of_word([0, 1, 0, 2, 1, 2]).edges() == [(0, 1), (1, 2)]
    assert graph_of_word([0], 1) == empty_graph(1)
    assert graph_of_word([]) == empty_graph(0)
    with pytest.raises(InputError):
        graph_of_word([0, 2], 3)  # vertex 1 never occurs
    with pytest.raises(InputError):
        graph_of_word([0, 5], 2)  # letter out of range


def test_graph_of_word_matches_oracle():
    rng = random.Random(33)
    for _ in range(200):
        n = rng.randint(1, 6)
        w = list(range(n)) + [rng.randrange(n) for _ in range(rng.randint(0, 10))]
        rng.shuffle(w)
        assert graph_of_word(w, n) == graph_by_restriction(w, n)


def test_word_represents(c5):
    assert word_represents([0, 1, 4, 0, 3, 4, 2, 3, 1, 2], c5)
    assert not word_represents([0, 1, 2, 3, 4], c5)  # that is K5's word
    with pytest.raises(InputError):
        word_represents([0, 1, 2, 3], c5)  # vertex 4 missing


def test_find_word_small_cases(c5, w5):
    assert find_word(complete_graph(3), 1) == (0, 1, 2)
    w = find_word(empty_graph(2), 2)
    assert w is not None and sorted(w) == [0, 0, 1, 1]
    assert word_represents(w, empty_graph(2))
    # C5 has no 1-uniform word but does have a 2-uniform one
    assert find_word(c5, 1) is None
    w2 = find_word(c5, 2)
    assert w2 is not None and len(w2) == 10 and word_represents(w2, c5)
    assert find_word(c5, 3) == w2  # deepening stops at the first success
    assert find_word(w5, 3) is None  # not representable at all
    assert find_word(empty_graph(0)) == ()
    with pytest.raises(InputError):
        find_word(c5, 0)


def test_found_words_are_uniform():
    rng = random.Random(5)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 5))
        w = find_word(g, 2)
        if w is not None:
            assert word_represents(w, g)
            counts = {v: w.count(v) for v in range(g.n)}
            assert len(set(counts.values())) == 1


# ── orientation predicates ───────────────────────────────────────────────


def test_check_semi_transitive_handpicked():
    k3 = complete_graph(3)
    assert check_semi_transitive(Orientation.from_arcs(k3, [(0, 1), (1, 2), (0, 2)]))
    # directed triangle is cyclic
    assert not check_semi_transitive(Orientation.from_arcs(k3, [(0, 1), (1, 2), (2, 0)]))
    # path 0->1->2->3 with the closing arc 0->3 but chords missing
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    o = Orientation.from_arcs(g, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert not check_semi_transitive(o)
    # same digraph without the closing arc is fine
    g2 = path_graph(4)
    assert check_semi_transitive(Orientation.from_arcs(g2, [(0, 1), (1, 2), (2, 3)]))


def test_check_transitive_handpicked():
    k3 = complete_graph(3)
    assert check_transitive(Orientation.from_arcs(k3, [(0, 1), (1, 2), (0, 2)]))
    assert not check_transitive(Orientation.from_arcs(k3, [(0, 1), (1, 2), (2, 0)]))
    p3 = path_graph(3)
    assert check_transitive(Orientation.from_arcs(p3, [(0, 1), (2, 1)]))
    assert not check_transitive(Orientation.from_arcs(p3, [(0, 1), (1, 2)]))


def _enumerate_oriented_pairs(n):
    pairs = list(combinations(range(n), 2))
    for states in product((0, 1, 2), repeat=len(pairs)):
        edges = [p for p, s in zip(pairs, states) if s]
        arcs = [
            (u, v) if s == 1 else (v, u)
            for (u, v), s in zip(pairs, states)
            if s
        ]
        yield Graph.from_edges(n, edges), arcs


def test_semi_transitive_matches_path_oracle_exhaustively():
    for n in range(5):
        for g, arcs in _enumerate_oriented_pairs(n):
            o = Orientation.from_arcs(g, arcs)
            assert check_semi_transitive(o) == semi_transitive_by_paths(n, arcs)


def test_semi_transitive_matches_path_oracle_random():
    rng = random.Random(77)
    for _ in range(300):
        g = random_graph(rng, 6, 0.5)
        arcs = [(u, v) if rng.random() < 0.5 else (v, u) for u, v in g.edges()]
        o = Orientation.from_arcs(g, arcs)
        assert check_semi_transitive(o) == semi_transitive_by_paths(6, arcs)


def test_transitive_is_semi_transitive():
    rng = random.Random(13)
    found = 0
    for _ in range(400):
        g = random_graph(rng, rng.randint(2, 6))
        arcs = [(u, v) if rng.random() < 0.5 else (v, u) for u, v in g.edges()]
        o = Orientation.from_arcs(g, arcs)
        if check_transitive(o):
            found += 1
            assert check_semi_transitive(o)
    assert found > 20


def test_reversal_preserves_both():
    rng = random.Random(17)
    for _ in range(200):
        g = random_graph(rng, rng.randint(2, 6))
        arcs = [(u, v) if rng.random() < 0.5 else (v, u) for u, v in g.edges()]
        o = Orientation.from_arcs(g, arcs)
        assert check_semi_transitive(o) == check_semi_transitive(o.reversed())
        assert check_transitive(o) == check_transitive(o.reversed())


# ── deciders ─────────────────────────────────────────────────────────────


def test_wr_decide_known_graphs(c5, w5, h8):
    ok, cert = wr_decide(c5)
    assert ok and cert.kind == SEMI_TRANSITIVE
    assert cert.payload.host == c5
    assert check_semi_transitive(cert.payload)

    ok, cert = wr_decide(w5)
    assert not ok and cert.kind == WITNESS
    assert cert.payload == (0, 1, 2, 3, 4, 5)  # the wheel itself is minimal

    ok, cert = wr_decide(h8)
    assert not ok
    assert len(cert.payload) <= 7


def test_wr_witness_is_minimal(w5, h8):
    for g in (w5, h8):
        witness = wr_decide(g)[1].payload
        assert not wr_decide(induced_subgraph(g, witness))[0]
        for drop in range(len(witness)):
            rest = witness[:drop] + witness[drop + 1:]
            assert wr_decide(induced_subgraph(g, rest))[0]


def test_wr_decide_matches_brute_force():
    for n in range(5):
        for bitsn in range(1 << (n * (n - 1) // 2)):
            pairs = list(combinations(range(n), 2))
            edges = [p for i, p in enumerate(pairs) if bitsn >> i & 1]
            g = Graph.from_edges(n, edges)
            assert wr_decide(g)[0] == wr_by_all_orientations(g)


def test_comparability_decide_known_graphs(c5, p4):
    assert comparability_decide(p4)[0]
    assert comparability_decide(cycle_graph(4))[0]
    assert comparability_decide(cycle_graph(6))[0]
    ok, cert = comparability_decide(c5)
    assert not ok and cert.kind == NON_COMPARABILITY
    assert cert.payload == (0, 1, 2, 3, 4)
    ok, cert = comparability_decide(complete_graph(4))
    assert ok and cert.kind == TRANSITIVE and check_transitive(cert.payload)


def test_comparability_matches_brute_force():
    rng = random.Random(3)
    for n in range(4):
        for bitsn in range(1 << (n * (n - 1) // 2)):
            pairs = list(combinations(range(n), 2))
            edges = [p for i, p in enumerate(pairs) if bitsn >> i & 1]
            g = Graph.from_edges(n, edges)
            assert comparability_decide(g)[0] == comparability_by_all_orientations(g)
    for _ in range(60):
        g = random_graph(rng, 5)
        assert comparability_decide(g)[0] == comparability_by_all_orientations(g)


def test_comparability_implies_representable():
    rng = random.Random(41)
    hits = 0
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 6))
        if comparability_decide(g)[0]:
            hits += 1
            assert wr_decide(g)[0]
    assert hits > 50


def test_representable_is_hereditary():
    rng = random.Random(55)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 7))
        if wr_decide(g)[0]:
            s = [v for v in range(g.n) if rng.random() < 0.6]
            assert wr_decide(induced_subgraph(g, s))[0]


def test_dominating_vertex_reduction(w5, c5):
    ok, cert = wr_with_dominating_vertex(w5, 5)
    assert not ok and cert.kind == WITNESS
    assert not wr_decide(induced_subgraph(w5, cert.payload))[0]
    # even wheel: rim C6 is a comparability graph, so the wheel represents
    w6 = wheel_graph(6)
    ok, cert = wr_with_dominating_vertex(w6, 6)
    assert ok and cert.kind == SEMI_TRANSITIVE
    assert cert.payload.host == w6
    assert check_semi_transitive(cert.payload)
    assert wr_decide(w6)[0] is True
    with pytest.raises(InputError):
        wr_with_dominating_vertex(c5, 0)


def test_dominating_vertex_agrees_with_direct_decide():
    rng = random.Random(67)
    for _ in range(150):
        base = random_graph(rng, rng.randint(1, 5))
        apex = base.n
        edges = base.edges() + [(v, apex) for v in range(base.n)]
        g = Graph.from_edges(base.n + 1, edges)
        assert wr_with_dominating_vertex(g, apex)[0] == wr_decide(g)[0]
        assert wr_decide(g)[0] == comparability_decide(base)[0]


def test_is_minimal_non_wr(c5, w5, h8):
    assert is_minimal_non_wr(w5)
    assert not is_minimal_non_wr(c5)  # representable
    assert not is_minimal_non_wr(h8)  # contains a smaller wheel


# ── cover number ─────────────────────────────────────────────────────────


def test_mu_exact_representable(c5):
    r = mu_exact(c5)
    assert r.value == 1 and r.exact and r.status == "exact"
    assert len(r.parts) == 1
    assert r.parts[0].edges == frozenset(c5.edges())
    assert mu_verify(c5, r)


def test_mu_exact_wheel(w5):
    r = mu_exact(w5)
    assert r.value == 2 and r.exact
    assert mu_verify(w5, r)
    union = set().union(*(p.edges for p in r.parts))
    assert union == set(w5.edges())
    for p in r.parts:
        sub = Graph.from_edges(w5.n, list(p.edges))
        assert wr_decide(sub)[0]


def test_mu_exact_extremal8(h8):
    r = mu_exact(h8)
    assert r.value == 2 and r.exact
    assert mu_verify(h8, r)


def test_mu_budget_exhaustion(w5):
    r = mu_exact(w5, budget=3)
    assert r.status == "unknown" and r.value is None and not r.exact


def test_mu_verify_rejects_tampering(w5):
    r = mu_exact(w5)
    # drop an edge from every part: union no longer covers the wheel
    broken = [
        Part(frozenset(list(p.edges)[1:]), p.certificate) for p in r.parts
    ]

    class D:
        parts = tuple(broken)

    assert not mu_verify(w5, D)
    diags = verify_decomposition(w5, D)
    assert diags and any("covered by no part" in d or "not semi-transitive" in d
                         or "host differs" in d for d in diags)


def test_verify_certificate_kinds(c5, w5):
    ok, cert = wr_decide(c5)
    assert verify_certificate(c5, cert) == []
    # host mismatch caught
    assert verify_certificate(cycle_graph(6), cert)
    # word certificates
    word = Certificate("word", (0, 1, 4, 0, 3, 4, 2, 3, 1, 2))
    assert verify_certificate(c5, word) == []
    assert verify_certificate(path_graph(5), word)
    # witness certificates
    wit = Certificate("non-representable-witness", (0, 1, 2, 3, 4, 5))
    assert verify_certificate(w5, wit) == []
    assert verify_certificate(complete_graph(6), wit)
    bad = Certificate("non-representable-witness", (0, 0, 1))
    assert verify_certificate(w5, bad)
    # the two witness kinds are not interchangeable: a 5-cycle has no
    # transitive orientation yet is representable
    ncomp = Certificate("non-comparability-witness", (0, 1, 2, 3, 4))
    assert verify_certificate(c5, ncomp) == []
    assert verify_certificate(path_graph(5), ncomp)
    assert verify_certificate(c5, Certificate("non-representable-witness", (0, 1, 2, 3, 4)))
    with pytest.raises(InputError):
        Certificate("no-such-kind", (1, 2))
