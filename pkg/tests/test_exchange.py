"""Color classes, the rank-sum diagnostic, and the cyclic exchange pipeline."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matrex import (
    ExchangeInstance,
    GraphicMatroid,
    InstanceGenSpec,
    UniformMatroid,
    ValidationError,
    brute_force_cyclic_exchange,
    build_color_classes,
    check_rank_inequality,
    cyclic_exchange,
    multiple_symmetric_exchange,
    random_instance,
    symmetric_exchange_single,
)

from helpers import K4_EDGES, is_forest, mask_to_set


def uniform_triple():
    m = UniformMatroid(6, 2)
    return ExchangeInstance(
        m, (frozenset({0, 1}), frozenset({2, 3}), frozenset({4, 5})), frozenset({0})
    )


def k4_pair(a1=frozenset({0})):
    k4 = GraphicMatroid(4, K4_EDGES)
    return ExchangeInstance(k4, (frozenset({0, 1, 2}), frozenset({3, 4, 5})), a1)


class TestColorClasses:
    def test_three_bases_with_singleton_seed(self):
        classes = build_color_classes(uniform_triple())
        lift = classes.lifted
        # slots: 0->(0,0) 1->(0,1) 2->(1,2) 3->(1,3) 4->(2,4) 5->(2,5)
        assert lift.slots == ((0, 0), (0, 1), (1, 2), (1, 3), (2, 4), (2, 5))
        assert classes.classes[0] == {1, 4, 5}       # B3 slots + (B1 minus seed)
        assert classes.classes[1] == {0, 2, 3}       # seed slots + B2 slots
        assert classes.classes[2] == {2, 3, 4, 5}    # B2 slots + B3 slots
        assert classes.lists == (
            frozenset({1}), frozenset({0}),
            frozenset({1, 2}), frozenset({1, 2}),
            frozenset({2, 0}), frozenset({2, 0}),
        )

    def test_two_bases(self):
        classes = build_color_classes(k4_pair())
        lift = classes.lifted
        b1_slots, b2_slots = lift.block(0), lift.block(1)
        seed_slot = lift.slot_of(0, 0)
        assert classes.classes[0] == (b1_slots - {seed_slot}) | b2_slots
        assert classes.classes[1] == {seed_slot} | b2_slots
        for s in sorted(b2_slots):
            assert classes.lists[s] == frozenset({0, 1})

    def test_empty_seed(self):
        classes = build_color_classes(k4_pair(frozenset()))
        lift = classes.lifted
        assert classes.classes[1] == lift.block(1)
        for s in sorted(lift.block(0)):
            assert classes.lists[s] == frozenset({0})

    def test_k1_rejected(self):
        m = UniformMatroid(2, 1)
        inst = ExchangeInstance(m, (frozenset({0}),), frozenset())
        with pytest.raises(ValidationError):
            build_color_classes(inst)

    def test_membership_matches_lists(self):
        classes = build_color_classes(uniform_triple())
        for s, allowed in enumerate(classes.lists):
            for j, cls in enumerate(classes.classes):
                assert (s in cls) == (j in allowed)


class TestRankInequality:
    def test_empty_set(self):
        classes = build_color_classes(uniform_triple())
        outcome = check_rank_inequality(classes, frozenset())
        assert outcome.holds and outcome.size == 0 and outcome.rank_sum == 0

    def test_full_universe_of_disjoint_bases_is_tight(self):
        inst = uniform_triple()  # bases are pairwise disjoint, rank 2, k=3
        classes = build_color_classes(inst)
        outcome = check_rank_inequality(classes, classes.lifted.ground_set())
        assert outcome.holds
        assert outcome.rank_sum == 3 * 2 == outcome.size

    @pytest.mark.parametrize("make", [uniform_triple, k4_pair])
    def test_exhaustive_over_all_slot_sets(self, make):
        classes = build_color_classes(make())
        n = classes.lifted.ground_size
        for mask in range(1 << n):
            outcome = check_rank_inequality(classes, mask_to_set(mask))
            assert outcome.holds
            assert len(outcome.terms) == len(classes.classes)

    def test_sampled_on_a_larger_lift(self):
        # 20 slots is beyond exhaustive range; sample 300 subsets instead
        spec = InstanceGenSpec("graphic", k=5, seed=11, vertices=5, n=9)
        inst = random_instance(spec)
        classes = build_color_classes(inst)
        slots = sorted(classes.lifted.ground_set())
        rng = random.Random(99)
        for _ in range(300):
            subset = frozenset(s for s in slots if rng.getrandbits(1))
            assert check_rank_inequality(classes, subset).holds


class TestCyclicExchange:
    def test_uniform_triple_all_postconditions(self):
        inst = uniform_triple()
        result = cyclic_exchange(inst)
        assert result.parts[0] == inst.seed
        for i in range(3):
            assert result.parts[i] <= inst.bases[i]
            assert len(result.parts[i]) == 1
            shifted = (inst.bases[i] - result.parts[i]) | result.parts[i - 1]
            assert shifted == result.shifted[i]
            assert inst.matroid.is_basis(shifted)

    def test_k4_unique_answer(self):
        result = cyclic_exchange(k4_pair())
        assert result.parts == (frozenset({0}), frozenset({5}))
        k4 = GraphicMatroid(4, K4_EDGES)
        for shifted in result.shifted:
            assert is_forest(sorted(shifted), k4.edges, 4)

    def test_empty_seed_fixes_everything(self):
        inst = k4_pair(frozenset())
        result = cyclic_exchange(inst)
        assert all(p == frozenset() for p in result.parts)
        assert result.shifted == inst.bases

    def test_k1_degenerate(self):
        m = GraphicMatroid(4, K4_EDGES)
        inst = ExchangeInstance(m, (frozenset({0, 1, 2}),), frozenset({1}))
        result = cyclic_exchange(inst)
        assert result.parts == (frozenset({1}),)
        assert result.shifted == (frozenset({0, 1, 2}),)

    def test_full_seed_forces_full_swap(self):
        inst = k4_pair(frozenset({0, 1, 2}))
        result = cyclic_exchange(inst)
        assert result.parts[1] == frozenset({3, 4, 5})
        assert result.shifted[0] == frozenset({3, 4, 5})
        assert result.shifted[1] == frozenset({0, 1, 2})

    def test_repeated_and_overlapping_bases(self):
        k4 = GraphicMatroid(4, K4_EDGES)
        tree = frozenset({0, 1, 2})
        other = frozenset({0, 2, 4})
        for bases in [(tree, tree, tree), (tree, other, tree), (other, tree, other)]:
            inst = ExchangeInstance(k4, bases, frozenset({0}))
            result = cyclic_exchange(inst)
            for i in range(3):
                assert len(result.parts[i]) == 1
                assert k4.is_basis(result.shifted[i])

    def test_partition_projects_onto_shifted_sets(self):
        inst = uniform_triple()
        result = cyclic_exchange(inst)
        lift = build_color_classes(inst).lifted
        for i, d in enumerate(result.partition):
            assert lift.project(d) == result.shifted[i]

    def test_non_basis_input_rejected(self):
        k4 = GraphicMatroid(4, K4_EDGES)
        with pytest.raises(ValidationError, match=r"bases\[1\]"):
            ExchangeInstance(k4, (frozenset({0, 1, 2}), frozenset({0, 1, 3})), frozenset())

    def test_seed_outside_first_basis_rejected(self):
        k4 = GraphicMatroid(4, K4_EDGES)
        with pytest.raises(ValidationError, match="seed"):
            ExchangeInstance(k4, (frozenset({0, 1, 2}), frozenset({3, 4, 5})), frozenset({3}))


class TestSymmetricExchange:
    def test_k4_multiple(self):
        k4 = GraphicMatroid(4, K4_EDGES)
        a2 = multiple_symmetric_exchange(k4, {0, 1, 2}, {3, 4, 5}, {0})
        assert a2 == frozenset({5})

    def test_full_subset_swap(self):
        k4 = GraphicMatroid(4, K4_EDGES)
        a2 = multiple_symmetric_exchange(k4, {0, 1, 2}, {3, 4, 5}, {0, 1, 2})
        assert a2 == frozenset({3, 4, 5})

    def test_uniform_either_choice_valid(self):
        m = UniformMatroid(4, 2)
        a2 = multiple_symmetric_exchange(m, {0, 1}, {2, 3}, {1})
        assert a2 in (frozenset({2}), frozenset({3}))
        assert m.is_basis(({0, 1} - {1}) | a2)
        assert m.is_basis((frozenset({2, 3}) - a2) | {1})

    def test_single_k4(self):
        k4 = GraphicMatroid(4, K4_EDGES)
        assert symmetric_exchange_single(k4, {0, 1, 2}, {3, 4, 5}, 0) == 5

    def test_single_shared_element(self):
        k4 = GraphicMatroid(4, K4_EDGES)
        assert symmetric_exchange_single(k4, {0, 1, 2}, {0, 2, 3}, 0) == 0

    def test_single_uniform(self):
        m = UniformMatroid(4, 2)
        e2 = symmetric_exchange_single(m, {0, 1}, {2, 3}, 0)
        assert e2 in (2, 3)

    def test_single_requires_membership(self):
        m = UniformMatroid(4, 2)
        with pytest.raises(ValidationError):
            symmetric_exchange_single(m, {0, 1}, {2, 3}, 3)

    def test_both_symmetric_sets_are_bases_on_corpus(self):
        # k=2 outputs must make both symmetric sets bases
        for seed in range(40):
            spec = InstanceGenSpec("graphic", k=2, seed=seed, vertices=5, n=7)
            inst = random_instance(spec)
            a2 = multiple_symmetric_exchange(inst.matroid, inst.bases[0], inst.bases[1], inst.seed)
            m = inst.matroid
            assert m.is_basis((inst.bases[0] - inst.seed) | a2)
            assert m.is_basis((inst.bases[1] - a2) | inst.seed)


class TestExchangePropertyAtScale:
    """Randomized small instances: the constructive output always satisfies
    the full invariant set, and agrees with the brute-force oracle."""

    @pytest.mark.parametrize("seed", range(60))
    def test_output_is_an_oracle_member(self, seed):
        classes = ["uniform", "graphic", "linear", "bases"]
        params = {
            "uniform": dict(n=6, rank=2),
            "graphic": dict(vertices=4, n=5),
            "linear": dict(prime=2, rows=3, n=6),
            "bases": dict(n=6, rank=3),
        }
        cls = classes[seed % 4]
        k = 2 + seed % 3
        spec = InstanceGenSpec(cls, k=k, seed=seed, **params[cls])
        inst = random_instance(spec)
        if sum(len(b) for b in inst.bases) > 12:
            pytest.skip("oracle gate")
        solutions = brute_force_cyclic_exchange(inst)
        assert solutions, "a valid instance always has at least one solution"
        result = cyclic_exchange(inst)
        assert result.parts[1:] in set(solutions)

    @settings(max_examples=80, deadline=None)
    @given(
        cls=st.sampled_from(("uniform", "graphic", "linear", "bases")),
        k=st.integers(2, 5),
        seed=st.integers(0, 2**32),
    )
    def test_result_invariants_hold_for_arbitrary_specs(self, cls, k, seed):
        params = {
            "uniform": dict(n=7, rank=3),
            "graphic": dict(vertices=5, n=8),
            "linear": dict(prime=3, rows=3, n=7),
            "bases": dict(n=7, rank=3),
        }[cls]
        inst = random_instance(InstanceGenSpec(cls, k=k, seed=seed, **params))
        result = cyclic_exchange(inst)
        assert result.parts[0] == inst.seed
        for i in range(k):
            assert result.parts[i] <= inst.bases[i]
            assert len(result.parts[i]) == len(inst.seed)
            expected = (inst.bases[i] - result.parts[i]) | result.parts[i - 1]
            assert result.shifted[i] == expected
            assert inst.matroid.is_basis(result.shifted[i])

    def test_single_element_cyclic_exchange_on_graphic(self):
        # |A_1| = 1 on graphic matroids: all shifted sets are spanning trees
        count = 0
        for seed in range(120):
            spec = InstanceGenSpec("graphic", k=3, seed=seed, vertices=5, n=8)
            inst = random_instance(spec)
            if not inst.seed:
                continue
            e1 = min(inst.seed)
            single = ExchangeInstance(inst.matroid, inst.bases, frozenset({e1}))
            result = cyclic_exchange(single)
            for i in range(3):
                assert len(result.parts[i]) == 1
                assert is_forest(sorted(result.shifted[i]), inst.matroid.edges, 5)
            count += 1
        assert count >= 40
