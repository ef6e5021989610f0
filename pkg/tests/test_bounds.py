import pytest

from dhcolor import (
    GoodColoring,
    RoleConflictError,
    DirectedHypergraph,
    edge,
    f_bound,
    gen_perm_tower,
    gen_random,
    contains_pattern,
    induce_good_coloring,
    parse,
    verify_good_coloring,
)
from oracles import f_recursive


class TestFBound:
    def test_small_values(self):
        assert f_bound(0) == 1
        assert f_bound(1) == 1
        assert f_bound(2) == 1
        assert f_bound(3) == 2  # best split: a pair against one vertex
        assert f_bound(4) == 4  # best split: a triple against one vertex

    def test_matches_plain_recursion(self):
        for n in range(17):
            assert f_bound(n) == f_recursive(n), n

    def test_nondecreasing(self):
        values = [f_bound(n) for n in range(1, 40)]
        assert all(a <= b for a, b in zip(values, values[1:]))

    def test_negative(self):
        with pytest.raises(ValueError):
            f_bound(-1)


class TestVerifyGoodColoring:
    def test_apex_shape_accepted(self):
        hg = parse("e a b > c")
        gc = GoodColoring(
            hg,
            {frozenset("ca"): "red", frozenset("cb"): "red", frozenset("ab"): "blue"},
            {frozenset("ca"): ("c", "a"), frozenset("cb"): ("c", "b")},
        )
        assert verify_good_coloring(gc)

    def test_red_base_rejected(self):
        hg = parse("e a b > c")
        gc = GoodColoring(
            hg,
            {frozenset("ca"): "red", frozenset("cb"): "red", frozenset("ab"): "red"},
            {
                frozenset("ca"): ("c", "a"),
                frozenset("cb"): ("c", "b"),
                frozenset("ab"): ("a", "b"),
            },
        )
        assert not verify_good_coloring(gc)

    def test_wrong_orientation_rejected(self):
        hg = parse("e a b > c")
        gc = GoodColoring(
            hg,
            {frozenset("ca"): "red", frozenset("cb"): "red", frozenset("ab"): "blue"},
            {frozenset("ca"): ("a", "c"), frozenset("cb"): ("c", "b")},
        )
        assert not verify_good_coloring(gc)

    def test_uncolored_shadow_edge(self):
        hg = parse("e a b > c")
        gc = GoodColoring(hg, {frozenset("ca"): "red"}, {frozenset("ca"): ("c", "a")})
        with pytest.raises(ValueError):
            verify_good_coloring(gc)

    def test_non_three_uniform(self):
        hg = DirectedHypergraph(("a", "b"), (edge(["a"], ["b"]),))
        with pytest.raises(ValueError):
            verify_good_coloring(GoodColoring(hg, {}, {}))


class TestInduceGoodColoring:
    def test_single_edge(self):
        gc = induce_good_coloring(parse("e a b > c"))
        assert gc.colors[frozenset("ab")] == "blue"
        assert gc.orientation[frozenset("ac")] == ("c", "a")
        assert gc.orientation[frozenset("bc")] == ("c", "b")
        assert verify_good_coloring(gc)

    def test_r3_rejected_up_front(self):
        with pytest.raises(ValueError):
            induce_good_coloring(parse("e a b > c\ne b c > d"))

    def test_e_rejected_up_front(self):
        with pytest.raises(ValueError):
            induce_good_coloring(parse("e a b > c\ne d c > b"))

    def test_shared_vertex_set_conflicts(self):
        # Same triple directed two ways dodges the pattern check (it is a
        # 3-intersection) but still clashes on the shadow edges.
        hg = parse("e a b > c\ne a c > b")
        assert contains_pattern(hg, "R3").avoided
        assert contains_pattern(hg, "E").avoided
        with pytest.raises(RoleConflictError):
            induce_good_coloring(hg)

    def test_perm_tower_within_bound(self):
        hg = gen_perm_tower(3)
        gc = induce_good_coloring(hg)
        assert verify_good_coloring(gc)
        assert len(hg.edges) <= f_bound(hg.n)

    def test_fuzzed_instances_within_bound(self):
        for seed in range(40):
            hg = gen_random(n=5 + seed % 5, m=12, cond="tails-only-2-intersect", seed=seed)
            if not (contains_pattern(hg, "R3").avoided and contains_pattern(hg, "E").avoided):
                continue
            gc = induce_good_coloring(hg)
            assert verify_good_coloring(gc)
            assert len(hg.edges) <= f_bound(hg.n)
