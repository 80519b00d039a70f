from __future__ import annotations

import random
from fractions import Fraction

import pytest

from cantorsim.checks import random_string_script
from cantorsim.classes import (
    Tree,
    dead_ends,
    diagonalize,
    graft_points,
    intersect_randomness,
    measure_capped_enumeration,
    paths_at_depth,
    tree_from_halting_oracle,
    tree_of_complement,
)
from cantorsim.complexity import PrefixMachine, Program
from cantorsim.dyadic import EMPTY, BitString, prefix_set_measure
from cantorsim.errors import (
    DomainError,
    InputError,
    ParseError,
    PreconditionError,
    RangeError,
)
from cantorsim.oracles import expansion_at_depth
from cantorsim.streams import EnumerationScript, stage_set


def bs(*words: str) -> list[BitString]:
    return [BitString.parse(w) for w in words]


class TestTree:
    def test_parse_inserts_root(self):
        tree = Tree.parse("0\n00\n")
        assert EMPTY in tree.nodes and tree.depth == 2

    def test_parse_accepts_epsilon_line(self):
        tree = Tree.parse("ε\n0\n")
        assert len(tree.nodes) == 2

    def test_parse_rejects_gaps_naming_the_node(self):
        with pytest.raises(ParseError) as info:
            Tree.parse("00\n")
        assert "00" in str(info.value)

    def test_constructor_rejects_over_depth(self):
        with pytest.raises(DomainError):
            Tree(frozenset(bs("", "0", "00")), 1)

    def test_full(self):
        assert len(Tree.full(3).nodes) == 15


class TestPathsAndDeadEnds:
    def test_paths_examples(self):
        full = Tree.full(2)
        assert [p.bits for p in paths_at_depth(full, 2)] == ["00", "01", "10", "11"]
        single = Tree.closure_of(bs("00"), 2)
        assert [p.bits for p in paths_at_depth(single, 2)] == ["00"]
        empty = Tree(frozenset(), 2)
        assert paths_at_depth(empty, 2) == ()

    def test_paths_range_error(self):
        with pytest.raises(RangeError):
            paths_at_depth(Tree.full(2), 3)

    def test_dead_ends_examples(self):
        assert dead_ends(Tree.full(2)) == ()
        t = Tree(frozenset(bs("", "0", "1", "00")), 2)
        assert [d.bits for d in dead_ends(t)] == ["1"]
        root_only = Tree(frozenset([EMPTY]), 1)
        assert dead_ends(root_only) == (EMPTY,)


class TestDiagonalize:
    def test_single_tree_graft(self):
        base = Tree.closure_of(bs("000", "1"), 3)
        taus = graft_points([base], 3)
        assert taus == (BitString("1"),)
        combined = diagonalize([base], 3)
        paths = paths_at_depth(combined, 3)
        assert any(t.bits.startswith("1") for t in paths)
        assert not any(t.bits.startswith("1") for t in paths_at_depth(base, 3))

    def test_identical_trees_graft_at_their_own_dead_ends(self):
        base = Tree.closure_of(bs("0000", "001", "01", "10"), 4)
        trees = [base, base, base]
        ends = dead_ends(base)
        assert len(ends) >= 3
        assert graft_points(trees, 4) == ends[:3]

    def test_no_dead_ends_is_a_precondition_error(self):
        with pytest.raises(PreconditionError):
            graft_points([Tree.full(3)], 3)

    def test_error_names_the_failing_tree(self):
        base = Tree.closure_of(bs("000", "1", "01"), 3)
        bad = Tree.full(3)  # no dead ends anywhere, so nothing reachable
        with pytest.raises(PreconditionError) as info:
            graft_points([base, bad], 3)
        assert "tree 1" in str(info.value)

    def test_mismatched_depth_rejected(self):
        with pytest.raises(InputError):
            graft_points([Tree.full(3), Tree.full(2)], 3)

    def test_guarantees_on_example(self):
        base = Tree.closure_of(bs("000", "1", "01"), 3)
        other = Tree.closure_of(bs("0", "10"), 3)
        trees = [base, other]
        taus = graft_points(trees, 3)
        combined = diagonalize(trees, 3)
        for n, tau in enumerate(taus):
            assert any(tau.is_prefix_of(p) for p in paths_at_depth(combined, 3))
            assert not any(tau.is_prefix_of(p) for p in paths_at_depth(trees[n], 3))


class TestMeasureCapped:
    def test_cap_one_refuses_everything(self):
        script = EnumerationScript.from_events([(0, 0, BitString("0"))], horizon=2)
        replays = measure_capped_enumeration(script, 1, 2)
        assert replays[0].final() == frozenset()
        assert replays[0].frozen_at == 0

    def test_freeze_example(self):
        script = EnumerationScript.from_events(
            [(1, 0, BitString("00")), (2, 0, BitString("01")), (3, 0, BitString("1"))],
            horizon=5,
        )
        replays = measure_capped_enumeration(script, 2, 5)
        assert replays[0].final() == frozenset(bs("00", "01"))
        assert replays[0].frozen_at == 3

    def test_respects_cap_at_every_stage(self):
        rng = random.Random(2)
        for _ in range(50):
            script = random_string_script(rng)
            for n in range(1, 9):
                for replay in measure_capped_enumeration(script, n, script.horizon).values():
                    cap = Fraction(n - 1, n)
                    assert all(
                        prefix_set_measure(s).as_fraction() <= cap for s in replay.stages
                    )

    def test_unbinding_cap_passes_everything_through(self):
        script = EnumerationScript.from_events(
            [(0, 0, BitString("000")), (1, 0, BitString("001"))], horizon=2
        )
        replays = measure_capped_enumeration(script, 2, 2)
        assert replays[0].final() == frozenset(bs("000", "001"))
        assert replays[0].frozen_at is None

    def test_zero_cap_parameter_rejected(self):
        script = EnumerationScript.from_events([], horizon=1)
        with pytest.raises(DomainError):
            measure_capped_enumeration(script, 0, 1)

    def test_complement_view(self):
        script = EnumerationScript.from_events(
            [(0, 0, BitString("00")), (1, 0, BitString("10"))], horizon=2
        )
        replay = measure_capped_enumeration(script, 2, 2)[0]
        final = replay.final()
        depth = 4
        open_leaves = expansion_at_depth(final, depth)
        closed = tree_of_complement(final, depth)
        leftover = {p.bits for p in paths_at_depth(Tree.full(depth), depth)} - set(open_leaves)
        assert leftover == {p.bits for p in paths_at_depth(closed, depth)}


class TestIntersectRandomness:
    def test_no_halts_keeps_the_class(self):
        tree = Tree.closure_of(bs("010", "11"), 3)
        machine = PrefixMachine(())
        assert intersect_randomness(tree, machine, 0, 5).nodes == tree.nodes

    def test_both_prunings_apply(self):
        tree = Tree.closure_of(bs("000", "010", "011"), 3)  # prunes cone [1]
        machine = PrefixMachine((Program(EMPTY, BitString("00"), 0),))  # prunes 00
        q = intersect_randomness(tree, machine, 1, 3)
        assert BitString("000") not in q.nodes
        assert BitString("010") in q.nodes
        assert not any(n.bits.startswith("1") for n in q.nodes)

    def test_subset_of_both(self):
        tree = Tree.closure_of(bs("00", "11"), 2)
        machine = PrefixMachine((Program(BitString("0"), BitString("11"), 0),))
        q = intersect_randomness(tree, machine, 0, 2)
        assert q.nodes <= tree.nodes


class TestHaltingOracle:
    def test_never_halts_gives_the_full_tree(self):
        tree = tree_from_halting_oracle(lambda s, e: False, 0, 3)
        assert len(tree.nodes) == 15

    def test_halting_on_a_cone_prunes_it(self):
        tree = tree_from_halting_oracle(lambda s, e: s.bits.startswith("0"), 0, 3)
        assert all(not n.bits.startswith("0") for n in tree.nodes)
        assert EMPTY in tree.nodes

    def test_non_monotone_oracle_rejected(self):
        def flaky(s: BitString, e: int) -> bool:
            return s.bits == "0"  # halts on 0 but not on its extensions

        with pytest.raises(InputError):
            tree_from_halting_oracle(flaky, 0, 3)

    def test_membership_round_trip(self):
        budgets = {"01": 3, "1": 2}

        def oracle(s: BitString, e: int) -> bool:
            return any(s.bits.startswith(b) and len(s) >= budgets[b] for b in budgets)

        tree = tree_from_halting_oracle(oracle, 0, 5)
        for s in paths_at_depth(Tree.full(5), 5):
            on_tree = all(BitString(s.bits[:i]) in tree.nodes for i in range(6))
            assert on_tree == (not oracle(s, 0))
