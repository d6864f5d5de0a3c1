from collections import Counter

import pytest

from ocycles import (
    build_graph,
    check_balance,
    edge_for_word,
    enumerate_objects,
    out_degree,
    predecessors,
    successors,
    validate_params,
)
from conftest import guaranteed_instances


class TestOutDegree:
    @pytest.mark.parametrize(
        "kwargs, vertex, expected",
        [
            (dict(n=3, k=2, s=1), (1,), 2),
            (dict(n=5, k=5, s=3), (1, 2, 3), 2),
            (dict(n=6, k=4, s=2), (1, 2), 12),
            (dict(multiset=(1, 1, 2), s=1), (1,), 2),
            (dict(multiset=(1, 1, 2), s=1), (2,), 1),
        ],
    )
    def test_examples(self, kwargs, vertex, expected):
        g = build_graph(validate_params(**kwargs))
        assert out_degree(vertex, g) == expected

    def test_matches_brute_force_count(self):
        for kwargs in (dict(n=5, k=3, s=2), dict(multiset=(1, 1, 2, 2, 3), s=2)):
            p = validate_params(**kwargs)
            g = build_graph(p)
            by_prefix = Counter(w[: p.s] for w in enumerate_objects(p))
            for v, count in by_prefix.items():
                assert out_degree(v, g) == count

    def test_invalid_vertex(self):
        g = build_graph(validate_params(n=3, k=2, s=1))
        with pytest.raises(ValueError):
            out_degree((9,), g)


class TestSuccessors:
    def test_small_example(self):
        g = build_graph(validate_params(n=3, k=2, s=1))
        assert [e.word for e in successors((1,), g)] == [(1, 2), (1, 3)]

    def test_full_perm_example(self):
        g = build_graph(validate_params(n=5, k=5, s=3))
        assert [e.word for e in successors((1, 2, 3), g)] == [(1, 2, 3, 4, 5), (1, 2, 3, 5, 4)]

    def test_multiset_example(self):
        g = build_graph(validate_params(multiset=(1, 1, 2), s=1))
        assert [e.word for e in successors((1,), g)] == [(1, 1, 2), (1, 2, 1)]

    def test_against_enumeration_filter(self):
        # independent oracle: successors(v) must equal the lexicographic
        # sublist of all objects whose prefix is v
        for kwargs in (dict(n=5, k=3, s=1), dict(n=4, k=4, s=2), dict(multiset=(1, 1, 2, 2), s=1)):
            p = validate_params(**kwargs)
            g = build_graph(p)
            objects = list(enumerate_objects(p))
            seen_vertices = {w[: p.s] for w in objects}
            for v in seen_vertices:
                expected = [w for w in objects if w[: p.s] == v]
                got = list(successors(v, g))
                assert [e.word for e in got] == expected
                assert [e.ordinal for e in got] == list(range(len(got)))
                assert all(e.source == v and e.target == e.word[-p.s:] for e in got)

    def test_predecessors_mirror(self):
        p = validate_params(n=4, k=3, s=2)
        g = build_graph(p)
        objects = list(enumerate_objects(p))
        for v in {w[-p.s:] for w in objects}:
            expected = sorted(w for w in objects if w[-p.s:] == v)
            assert [e.word for e in predecessors(v, g)] == expected


class TestEdgeForWord:
    def test_round_trips_with_successors(self):
        for kwargs in (dict(n=5, k=4, s=2), dict(multiset=(1, 1, 2, 2, 3), s=2)):
            p = validate_params(**kwargs)
            g = build_graph(p)
            for w in enumerate_objects(p):
                e = edge_for_word(w, p)
                listed = list(successors(e.source, g))
                assert listed[e.ordinal] == e

    def test_rejects_non_object(self):
        p = validate_params(n=4, k=3, s=1)
        with pytest.raises(ValueError):
            edge_for_word((1, 1, 2), p)


class TestBalance:
    @pytest.mark.parametrize(
        "kwargs",
        [dict(n=3, k=2, s=1), dict(n=5, k=5, s=3), dict(n=6, k=4, s=3)],
    )
    def test_examples_balanced(self, kwargs):
        g = build_graph(validate_params(**kwargs))
        report = check_balance(g)
        assert report.balanced
        assert report.violations == []
        assert report.prefixes_match_suffixes
        assert report.edge_count == g.edge_count
        assert report.vertex_count == g.vertex_count

    def test_uniform_degrees_small(self):
        g = build_graph(validate_params(n=3, k=2, s=1))
        degrees = Counter()
        for w in enumerate_objects(g.params):
            degrees[w[:1]] += 1
        assert set(degrees.values()) == {2}

    def test_all_guaranteed_instances_balanced(self):
        for p in guaranteed_instances(max_n=6):
            report = check_balance(build_graph(p))
            assert report.balanced, p
