from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cantorsim.checks import (
    SCENARIOS,
    build_scenario,
    fixture_machine,
    fixture_script,
    make_merge_case,
    verify_hatm,
    verify_merge,
    verify_regret,
    verify_splice,
)
from cantorsim.complexity import PrefixMachine, Program
from cantorsim.constructions import (
    PlainValue,
    StageTrace,
    TraceRecord,
    beta_max,
    friedberg_merge,
    hat_m_construction,
    odd_ones_real_enumeration,
    regret_construction,
    splice_random,
)
from cantorsim.dyadic import ZERO, BitString, Dyadic
from cantorsim.errors import (
    CapacityError,
    ContractViolationError,
    InputError,
    PreconditionError,
)
from cantorsim.oracles import rightmost_path
from cantorsim.streams import EnumerationScript, LeftCEApprox, real_from_ce_set


def dy(text: str) -> Dyadic:
    return Dyadic.parse(text)


def scenario(name):
    return next(sc for sc in SCENARIOS if sc.name == name)


class TestScenarioLibrary:
    @pytest.mark.parametrize(
        "sc", [s for s in SCENARIOS if s.kind == "splice"], ids=lambda s: s.name
    )
    def test_splice_scenarios_are_safe(self, sc):
        horizon = int(sc.params["horizon"])
        trace = build_scenario(sc)
        r = fixture_script(str(sc.params["script"]), horizon)
        assert (
            verify_splice(
                trace,
                real_from_ce_set(r, 0),
                fixture_machine(str(sc.params["machine"])),
                int(sc.params["c"]),
            )
            == []
        )

    @pytest.mark.parametrize(
        "sc", [s for s in SCENARIOS if s.kind == "hatm"], ids=lambda s: s.name
    )
    def test_hatm_scenarios_are_safe(self, sc):
        horizon = int(sc.params["horizon"])
        trace = build_scenario(sc)
        m = real_from_ce_set(fixture_script(str(sc.params["script"]), horizon), 0)
        assert (
            verify_hatm(
                trace,
                m,
                fixture_machine(str(sc.params["machine"])),
                int(sc.params["k"]),
                bool(sc.params["mirror"]),
            )
            == []
        )

    @pytest.mark.parametrize(
        "sc", [s for s in SCENARIOS if s.kind == "regret"], ids=lambda s: s.name
    )
    def test_regret_scenarios_are_safe(self, sc):
        horizon = int(sc.params["horizon"])
        slots = build_scenario(sc)
        family = fixture_script(str(sc.params["script"]), horizon)
        machine = fixture_machine(str(sc.params["machine"]))
        assert verify_regret(slots, family, machine, int(sc.params["c"])) == []

    def test_permanent_splice_shape(self):
        trace = build_scenario(scenario("splice-permanent"))
        states = [r.state for r in trace.records]
        assert states[:2] == ["empty", "tracking"]
        assert states[5:] == ["spliced"] * 8
        assert trace.records[4].note == "trigger n=4"
        assert trace.records[5].value.prefix == BitString("0000")

    def test_recovering_splice_returns_to_the_input(self):
        trace = build_scenario(scenario("splice-recover"))
        assert trace.records[7].state == "tracking"
        assert trace.records[7].note == "recover"
        assert trace.records[7].value.real() == dy("1/2^3")

    def test_degenerate_boundary_parks_forever(self):
        trace = build_scenario(scenario("hatm-degenerate-boundary"))
        assert all(r.state == "parked" for r in trace.records)
        assert all(r.value.prefix == BitString("0") for r in trace.records)

    def test_regret_binds_duplicates_separately(self):
        slots = build_scenario(scenario("regret-permanent"))
        assert [s.source_index for s in slots] == [0, 1]
        assert all(s.witness_length == 4 and s.regret_stage is None for s in slots)

    def test_regret_padding_matches_the_footnote_bound(self):
        slots = build_scenario(scenario("regret-recover-padding"))
        (slot,) = slots
        assert slot.regret_stage == 6 and slot.padding == 11
        regretted = slot.trace.records[6].value
        assert regretted.prefix.bits == "0010" + "0" * 11

    def test_no_failures_no_slots(self):
        assert build_scenario(scenario("regret-quiet")) == []


class TestSpliceEdges:
    def test_requires_strict_mass(self):
        machine = PrefixMachine(
            (Program(BitString("0"), BitString("0"), 0), Program(BitString("1"), BitString("1"), 0))
        )
        r = LeftCEApprox.constant(ZERO, 5)
        with pytest.raises(PreconditionError):
            splice_random(r, machine, 0, 5)

    def test_requires_enough_stages(self):
        machine = PrefixMachine(())
        r = LeftCEApprox.constant(ZERO, 3)
        with pytest.raises(InputError):
            splice_random(r, machine, 0, 10)

    def test_trace_validates_stage_numbering(self):
        with pytest.raises(InputError):
            StageTrace((TraceRecord(1, "tracking", PlainValue(ZERO)),))


class TestHatmEdges:
    def test_boundary_length_zero_parks_forever(self):
        machine = PrefixMachine((Program(BitString("10"), BitString("1"), 1),))
        m = LeftCEApprox.constant(dy("1/2^1"), 4)
        trace = hat_m_construction(m, machine, 0, 4)
        assert all(r.state == "parked" for r in trace.records)


class TestRegretEdges:
    def test_capacity_error(self):
        sc = scenario("regret-permanent")
        family = fixture_script(str(sc.params["script"]), 12)
        machine = fixture_machine(str(sc.params["machine"]))
        with pytest.raises(CapacityError):
            regret_construction(family, machine, 1, 12, max_slots=1)

    def test_rebinding_uses_a_fresh_slot(self):
        # member fails at length 4, recovers, then fails again at length 5
        machine = PrefixMachine(
            (
                Program(BitString("0"), BitString("0000"), 3),
                Program(BitString("10"), BitString("00100"), 8),
            )
        )
        events = [(1, 0, dy("1/2^5")), (6, 0, dy("9/2^6"))]
        family = EnumerationScript.from_events(events, horizon=14)
        slots = regret_construction(family, machine, 1, 14)
        assert len(slots) == 2
        first, second = slots
        assert first.regret_stage is not None and first.witness_length == 4
        assert second.regret_stage is None and second.witness_length == 5
        assert second.bound_stage >= first.regret_stage


class TestBeta:
    def test_single_member_is_identity(self):
        member = LeftCEApprox.constant(dy("1/2^2"), 5)
        trace = beta_max([member], 5)
        assert [r.value.real() for r in trace.records] == [dy("1/2^2")] * 6

    def test_settles_on_the_maximum(self):
        script = fixture_script("s_beta2.tsv", 6)
        family = [real_from_ce_set(script, e) for e in script.indices()]
        trace = beta_max(family, 6)
        assert trace.value_at(6) == dy("1/2^1")
        assert trace.is_monotone()

    def test_index_window_grows_with_the_stage(self):
        early = LeftCEApprox.constant(dy("1/2^3"), 4)
        late = LeftCEApprox.constant(dy("1/2^1"), 4)
        trace = beta_max([early, late], 4)
        assert trace.value_at(0) == dy("1/2^3")  # index 1 not yet eligible
        assert trace.value_at(1) == dy("1/2^1")

    def test_tree_fixture_reaches_the_rightmost_path(self):
        from cantorsim.classes import Tree
        from cantorsim.dyadic import rational_of_string
        from cantorsim.scenarios import FIXTURE_FILES

        tree = Tree.parse(FIXTURE_FILES["t_beta.txt"], depth=3)
        trace = build_scenario(scenario("beta-tree"))
        path = rightmost_path(tree, 3)
        assert trace.value_at(8) == rational_of_string(path)

    def test_empty_family_rejected(self):
        with pytest.raises(InputError):
            beta_max([], 3)


class TestOddOnes:
    def test_examples(self):
        assert odd_ones_real_enumeration(0) == BitString("1")
        assert odd_ones_real_enumeration(1) == BitString("01")
        assert odd_ones_real_enumeration(2) == BitString("001")

    @given(st.integers(0, 300), st.integers(0, 300))
    def test_injective(self, i, j):
        if i != j:
            assert odd_ones_real_enumeration(i) != odd_ones_real_enumeration(j)

    def test_properties_over_a_window(self):
        prev = (-1, "")
        for i in range(1000):
            s = odd_ones_real_enumeration(i)
            assert s.bits.endswith("1")
            assert s.ones() % 2 == 1
            assert s.lenlex_key > prev
            prev = s.lenlex_key


def listed_l1(values):
    frozen = [frozenset(BitString.parse(w) for w in v) for v in values]

    def generator(i):
        if i >= len(frozen):
            raise IndexError(i)
        return frozen[i]

    def picker(content, attempt):
        extensions = [v for v in frozen if content <= v]
        if attempt >= len(extensions):
            raise ContractViolationError("listing exhausted")
        return extensions[attempt]

    return generator, picker


def settled(script: EnumerationScript):
    from cantorsim.streams import stage_set

    return [stage_set(script, i, script.horizon) for i in script.indices()]


class TestFriedbergMerge:
    def test_empty_family_reproduces_the_listing(self):
        gen, picker = listed_l1([["1"], ["11"], ["111"]])
        l2 = EnumerationScript.from_events([], horizon=2)
        out = friedberg_merge(gen, l2, picker, 2)
        assert settled(out) == [
            frozenset({BitString("1")}),
            frozenset({BitString("11")}),
            frozenset({BitString("111")}),
        ]

    def test_new_set_joins_the_listing(self):
        gen, picker = listed_l1([["1"], ["11"]])
        l2 = EnumerationScript.from_events(
            [(0, 0, BitString("00")), (1, 0, BitString("01"))], horizon=3
        )
        out = friedberg_merge(gen, l2, picker, 3)
        sets = settled(out)
        assert frozenset({BitString("00"), BitString("01")}) in sets
        assert len(set(sets)) == len(sets)

    def test_duplicate_indices_divert_one(self):
        gen, picker = listed_l1(
            [["1"], ["11"], ["00", "01", "1"], ["00", "01", "11"]]
        )
        l2 = EnumerationScript.from_events(
            [
                (0, 0, BitString("00")),
                (0, 1, BitString("01")),
                (1, 0, BitString("01")),
                (1, 1, BitString("00")),
            ],
            horizon=3,
        )
        out = friedberg_merge(gen, l2, picker, 3)
        sets = settled(out)
        assert len(set(sets)) == len(sets)
        assert sets.count(frozenset({BitString("00"), BitString("01")})) == 1
        # the diverted index ended on a proper listing extension of {00,01}
        assert any(
            frozenset({BitString("00"), BitString("01")}) < s for s in sets
        )

    def test_transient_duplicate_then_divergence_keeps_both(self):
        # both indices look like {00} for a while; the larger is diverted,
        # then its script moves on and the set must reappear
        gen, picker = listed_l1([["1"], ["11"], ["00", "1"], ["00", "11"]])
        l2 = EnumerationScript.from_events(
            [
                (0, 0, BitString("00")),
                (1, 1, BitString("00")),
                (4, 1, BitString("01")),
            ],
            horizon=8,
        )
        out = friedberg_merge(gen, l2, picker, 8)
        sets = settled(out)
        assert frozenset({BitString("00")}) in sets
        assert frozenset({BitString("00"), BitString("01")}) in sets
        assert len(set(sets)) == len(sets)

    def test_smaller_index_moving_away_respawns_the_cancelled_set(self):
        # index 0 grows past the shared content; index 1 is stuck on it
        gen, picker = listed_l1([["1"], ["11"], ["00", "1"], ["00", "11"]])
        l2 = EnumerationScript.from_events(
            [
                (0, 0, BitString("00")),
                (0, 1, BitString("00")),
                (5, 0, BitString("01")),
            ],
            horizon=9,
        )
        out = friedberg_merge(gen, l2, picker, 9)
        sets = settled(out)
        assert frozenset({BitString("00")}) in sets
        assert frozenset({BitString("00"), BitString("01")}) in sets
        assert len(set(sets)) == len(sets)

    def test_picker_must_extend(self):
        def bad_picker(content, attempt):
            return frozenset({BitString("1")})  # never extends nonempty content

        def gen(i):
            raise IndexError(i)

        l2 = EnumerationScript.from_events(
            [
                (0, 0, BitString("00")),
                (0, 1, BitString("01")),
                (2, 0, BitString("01")),
                (2, 1, BitString("00")),
            ],
            horizon=3,
        )
        with pytest.raises(ContractViolationError):
            friedberg_merge(gen, l2, bad_picker, 3)

    def test_repeating_generator_rejected(self):
        def gen(i):
            return frozenset({BitString("1")})

        def picker(content, attempt):
            raise ContractViolationError("unused")

        l2 = EnumerationScript.from_events([], horizon=3)
        with pytest.raises(ContractViolationError):
            friedberg_merge(gen, l2, picker, 3)

    def test_random_contract_cases(self):
        rng = random.Random(17)
        for _ in range(40):
            case = make_merge_case(rng, horizon=60)
            out = friedberg_merge(case.l1, case.script, case.picker, case.horizon)
            assert verify_merge(out, case) == []
