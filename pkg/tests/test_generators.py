import pytest

from dhcolor import (
    CONDITION_IDS,
    GenSpec,
    check_condition,
    contains_pattern,
    gen_h2_tower,
    gen_perm_tower,
    gen_random,
    is_two_to_one,
    paper_i,
    paper_r,
    parse,
    serialize,
)


class TestGenSpec:
    def test_dispatch(self):
        assert GenSpec("paper-i").build() == paper_i()
        assert GenSpec("h2-tower", k=3).build() == gen_h2_tower(3)
        assert GenSpec("random", n=6, m=4, cond="i0-free", seed=3).build() == gen_random(
            6, 4, cond="i0-free", seed=3
        )

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            GenSpec("mystery").build()

    def test_invariants_enforced_by_builders(self):
        with pytest.raises(ValueError):
            GenSpec("perm-tower", k=1).build()
        with pytest.raises(ValueError):
            GenSpec("random", n=2).build()


class TestPaperHypergraphs:
    def test_i_shape(self):
        hg = paper_i()
        assert hg.vertices == ("v1", "v2", "v3", "v4", "v5")
        assert len(hg.edges) == 10
        assert is_two_to_one(hg)
        # Every one of the C(5,3) triples appears exactly once as a vertex set.
        assert len({e.vertices for e in hg.edges}) == 10

    def test_i_conditions(self):
        assert check_condition(paper_i(), "i0-free").avoided
        assert contains_pattern(paper_i(), "I0").avoided

    def test_r_shape(self):
        hg = paper_r()
        assert len(hg.edges) == 10
        assert is_two_to_one(hg)
        assert len({e.vertices for e in hg.edges}) == 10

    def test_r_avoids_r4(self):
        assert contains_pattern(paper_r(), "R4").avoided
        assert check_condition(paper_r(), "r4-free").avoided


class TestH2Tower:
    def test_sizes_follow_recurrences(self):
        # n(k+1) = 2 n(k) + 1 and e(k+1) = 2 e(k) + n(k)^2 from one apex over
        # two disjoint copies.
        n, e = 3, 1
        for k in range(2, 6):
            hg = gen_h2_tower(k)
            assert (hg.n, len(hg.edges)) == (n, e), k
            n, e = 2 * n + 1, 2 * e + n * n

    def test_explicit_small_sizes(self):
        assert (gen_h2_tower(2).n, len(gen_h2_tower(2).edges)) == (3, 1)
        assert (gen_h2_tower(3).n, len(gen_h2_tower(3).edges)) == (7, 11)
        assert (gen_h2_tower(4).n, len(gen_h2_tower(4).edges)) == (15, 71)

    def test_avoids_h2(self):
        for k in (2, 3, 4):
            assert contains_pattern(gen_h2_tower(k), "H2").avoided

    def test_guard(self):
        with pytest.raises(ValueError):
            gen_h2_tower(7)
        with pytest.raises(ValueError):
            gen_h2_tower(1)
        assert gen_h2_tower(7, max_level=7).n == 127

    def test_chromatic_lower_bound_small_levels(self):
        from dhcolor import chromatic_number

        assert chromatic_number(gen_h2_tower(2)).chi == 2
        assert chromatic_number(gen_h2_tower(3)).chi == 3

    def test_roundtrip(self):
        hg = gen_h2_tower(4)
        assert parse(serialize(hg)) == hg


class TestPermTower:
    def test_base(self):
        assert (gen_perm_tower(2).n, len(gen_perm_tower(2).edges)) == (3, 1)

    def test_level_three_shape(self):
        hg = gen_perm_tower(3)
        assert (hg.n, len(hg.edges)) == (12, 20)
        assert is_two_to_one(hg)

    def test_tails_only_condition(self):
        assert check_condition(gen_perm_tower(3), "tails-only-2-intersect").avoided
        for p in ("I1", "R3", "E"):
            assert contains_pattern(gen_perm_tower(3), p).avoided

    def test_chromatic_lower_bound_small_levels(self):
        from dhcolor import chromatic_number

        assert chromatic_number(gen_perm_tower(2)).chi == 2
        assert chromatic_number(gen_perm_tower(3)).chi == 3

    def test_guard(self):
        with pytest.raises(ValueError):
            gen_perm_tower(4)


class TestGenRandom:
    def test_deterministic(self):
        a = gen_random(6, 8, cond="i0-free", seed=42)
        b = gen_random(6, 8, cond="i0-free", seed=42)
        assert a == b
        c = gen_random(6, 8, cond="i0-free", seed=43)
        assert a != c  # overwhelmingly likely for distinct seeds

    @pytest.mark.parametrize("cond", CONDITION_IDS)
    def test_output_satisfies_condition(self, cond):
        for seed in range(30):
            hg = gen_random(n=5 + seed % 4, m=10, cond=cond, seed=seed)
            assert check_condition(hg, cond).avoided, (cond, seed)

    def test_vertex_sets_distinct(self):
        hg = gen_random(5, 30, cond="none", seed=9)
        sets = [e.vertices for e in hg.edges]
        assert len(sets) == len(set(sets))

    def test_zero_edges(self):
        hg = gen_random(4, 0, cond="none", seed=0)
        assert hg.edges == () and hg.n == 4

    def test_two_one_by_default(self):
        assert is_two_to_one(gen_random(6, 10, cond="none", seed=1))

    def test_tail_range(self):
        hg = gen_random(8, 12, cond="onehead-h1", seed=3, tail_range=(2, 5))
        assert hg.edges
        for e in hg.edges:
            assert len(e.head) == 1 and 2 <= len(e.tail) <= 5
        assert check_condition(hg, "onehead-h1").avoided

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            gen_random(2, 3)
        with pytest.raises(ValueError):
            gen_random(5, -1)
        with pytest.raises(ValueError):
            gen_random(5, 3, cond="bogus")
        with pytest.raises(ValueError):
            gen_random(5, 3, tail_range=(0, 0))
