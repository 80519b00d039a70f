"""Brute-force check suites behind the CLI ``check`` subcommand.

Each suite compares the fast implementations against the independent
oracles at configurable desk-scale bounds and reports counterexamples
verbatim.  The test suite reuses the same generators and verifiers at the
acceptance bounds.  Reports carry no timing, so repeated runs print
byte-identical output.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .classes import (
    Tree,
    dead_ends,
    diagonalize,
    graft_points,
    measure_capped_enumeration,
    paths_at_depth,
    tree_from_halting_oracle,
    tree_of_complement,
)
from .complexity import (
    INFINITE,
    PrefixMachine,
    Program,
    compute_padding,
    k_approx,
    omega_approx,
    randomness_class_tree,
)
from .constructions import (
    RegretSlot,
    StageTrace,
    TailValue,
    beta_max,
    friedberg_merge,
    hat_m_construction,
    odd_ones_real_enumeration,
    regret_construction,
    splice_random,
)
from .coverings import (
    covering_antichains,
    good_stage,
    odd_covering_family,
    parse_listing,
    star_construction,
)
from .dyadic import (
    ONE,
    ZERO,
    Antichain,
    BitString,
    Dyadic,
    Order,
    is_acceptable,
    lex_compare_padded,
    optimal_covering,
    filter_closure,
    prefix_set_measure,
    rational_of_string,
    string_of_rational,
    strings_up_to,
)
from .errors import InputError
from .oracles import (
    brute_lower_cut,
    brute_optimal_covering,
    expansion_at_depth,
    greedy_expansion,
    longest_even_prefix,
    padding_holds,
    rightmost_path,
    sibling_merge_closure,
)
from .scenarios import FIXTURE_FILES, SCENARIOS, Scenario
from .streams import (
    EnumerationScript,
    LeftCEApprox,
    approx_string,
    lower_cut,
    parity_projection,
    real_from_ce_set,
    stage_set,
    truncate_pad,
)

__all__ = [
    "CheckReport",
    "SUITES",
    "build_scenario",
    "check_classes",
    "check_complexity",
    "check_constructions",
    "check_coverings",
    "check_dyadic",
    "diagonal_suite",
    "make_merge_case",
    "random_bitstring",
    "random_dyadic_script",
    "random_listing",
    "random_machine",
    "random_string_script",
    "random_string_set",
    "run_suite",
    "verify_hatm",
    "verify_merge",
    "verify_regret",
    "verify_splice",
]


@dataclass
class CheckReport:
    suite: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def lines(self) -> list[str]:
        status = "ok" if self.ok else "FAIL"
        out = [f"{status}\t{self.suite}\t{self.cases} cases"]
        out.extend(f"counterexample\t{m}" for m in self.failures[:20])
        if len(self.failures) > 20:
            out.append(f"... {len(self.failures) - 20} more failures")
        return out


# ---------------------------------------------------------------------------
# deterministic input generators


def random_bitstring(rng: random.Random, max_len: int, min_len: int = 0) -> BitString:
    n = rng.randint(min_len, max_len)
    return BitString("".join(rng.choice("01") for _ in range(n)))


def random_string_set(
    rng: random.Random, max_len: int, max_size: int, min_size: int = 0
) -> frozenset[BitString]:
    k = rng.randint(min_size, max_size)
    return frozenset(random_bitstring(rng, max_len) for _ in range(k))


def random_machine(
    rng: random.Random,
    max_programs: int = 20,
    max_code_len: int = 8,
    max_out_len: int = 12,
    max_halt: int = 12,
    strict: bool = True,
) -> PrefixMachine:
    programs: list[Program] = []
    codes: list[str] = []
    mass = Fraction(0)
    target = rng.randint(1, max_programs)
    tries = 0
    while len(programs) < target and tries < 300:
        tries += 1
        n = rng.randint(1, max_code_len)
        code = "".join(rng.choice("01") for _ in range(n))
        if any(code.startswith(c) or c.startswith(code) for c in codes):
            continue
        add = Fraction(1, 1 << n)
        if strict and mass + add >= 1:
            continue
        if not strict and mass + add > 1:
            continue
        codes.append(code)
        mass += add
        programs.append(
            Program(BitString(code), random_bitstring(rng, max_out_len), rng.randint(0, max_halt))
        )
    return PrefixMachine(tuple(programs))


def random_string_script(
    rng: random.Random,
    max_indices: int = 4,
    max_events: int = 20,
    max_len: int = 6,
    horizon: int = 20,
) -> EnumerationScript:
    count_indices = rng.randint(1, max_indices)
    events = []
    for _ in range(rng.randint(0, max_events)):
        events.append(
            (rng.randint(0, horizon), rng.randrange(count_indices), random_bitstring(rng, max_len, 1))
        )
    return EnumerationScript.from_events(events, horizon)


def random_dyadic_script(
    rng: random.Random,
    max_indices: int = 3,
    max_events: int = 12,
    max_exp: int = 8,
    horizon: int = 20,
) -> EnumerationScript:
    count_indices = rng.randint(1, max_indices)
    events = []
    for _ in range(rng.randint(0, max_events)):
        exp = rng.randint(0, max_exp)
        events.append(
            (
                rng.randint(0, horizon),
                rng.randrange(count_indices),
                Dyadic(rng.randint(0, 1 << exp), exp),
            )
        )
    return EnumerationScript.from_events(events, horizon)


def random_listing(rng: random.Random, kind: str | None = None) -> tuple[BitString, ...]:
    kind = kind or rng.choice(("path", "clopen", "loose"))
    if kind == "path":
        # members of a non-clopen filter-closed set: everything deviating
        # from a fixed path, in length-lexicographic order
        x = "".join(rng.choice("01") for _ in range(8))
        bound = rng.randint(4, 6)
        return tuple(t for t in strings_up_to(bound) if not x.startswith(t.bits))
    if kind == "clopen":
        base = optimal_covering(random_string_set(rng, 4, 4, 1))
        covered = sorted(
            (t for t in strings_up_to(5) if base.covers(t)), key=lambda s: s.lenlex_key
        )
        if rng.random() < 0.5:
            rng.shuffle(covered)
        return tuple(covered)
    return tuple(random_bitstring(rng, 6) for _ in range(rng.randint(0, 12)))


def diagonal_suite(rng: random.Random, n_trees: int, depth: int) -> list[Tree]:
    """A base tree with a full-depth spine and enough sibling dead ends,
    plus companion trees whose dead ends sit at, above, or below the
    corresponding base dead ends."""
    if depth < n_trees + 1:
        raise InputError("depth too small for the requested suite")
    spine = "".join(rng.choice("01") for _ in range(depth))
    nodes = {spine[:i] for i in range(depth + 1)}
    extra = rng.randint(0, min(2, depth - 1 - n_trees))
    for i in rng.sample(range(1, depth), n_trees + extra):
        sib = spine[: i - 1] + ("1" if spine[i - 1] == "0" else "0")
        nodes.add(sib)
    base = Tree(frozenset(BitString(b) for b in nodes), depth)
    ends = dead_ends(base)
    trees = [base]
    for n in range(1, n_trees):
        sigma = ends[n]
        style = rng.choice(("same", "at", "below"))
        if style == "same":
            trees.append(base)
        elif style == "at":
            trees.append(Tree.closure_of([sigma], depth))
        else:
            room = depth - len(sigma) - 1
            suffix = "".join(rng.choice("01") for _ in range(rng.randint(0, max(room, 0))))
            trees.append(Tree.closure_of([BitString(sigma.bits + suffix)], depth))
    return trees


# ---------------------------------------------------------------------------
# scenario building and safety verifiers


def fixture_machine(name: str) -> PrefixMachine:
    return PrefixMachine.parse(FIXTURE_FILES[name], source=name)


def fixture_script(name: str, horizon: int | None = None) -> EnumerationScript:
    return EnumerationScript.parse(FIXTURE_FILES[name], horizon=horizon, source=name)


def build_scenario(sc: Scenario):
    """Reconstruct a scenario's library-level result from the fixture texts."""
    p = sc.params
    horizon = int(p["horizon"])  # type: ignore[arg-type]
    if sc.kind == "splice":
        r = real_from_ce_set(fixture_script(str(p["script"]), horizon), 0)
        return splice_random(r, fixture_machine(str(p["machine"])), int(p["c"]), horizon)
    if sc.kind == "hatm":
        m = real_from_ce_set(fixture_script(str(p["script"]), horizon), 0)
        return hat_m_construction(
            m, fixture_machine(str(p["machine"])), int(p["k"]), horizon, mirror=bool(p["mirror"])
        )
    if sc.kind == "regret":
        family = fixture_script(str(p["script"]), horizon)
        return regret_construction(family, fixture_machine(str(p["machine"])), int(p["c"]), horizon)
    if sc.kind == "beta":
        script = fixture_script(str(p["script"]), horizon)
        family = [real_from_ce_set(script, e) for e in script.indices()]
        return beta_max(family, horizon)
    if sc.kind == "star":
        listing = parse_listing(FIXTURE_FILES[str(p["listing"])], source=str(p["listing"]))
        return star_construction(listing, horizon)
    if sc.kind == "capped":
        script = fixture_script(str(p["script"]), horizon)
        return measure_capped_enumeration(script, int(p["n"]), horizon)
    raise InputError(f"unknown scenario kind {sc.kind}")


def _spliced_runs(trace: StageTrace, state: str) -> list[tuple[int, int]]:
    runs = []
    start = None
    for rec in trace.records:
        if rec.state == state and start is None:
            start = rec.stage
        elif rec.state != state and start is not None:
            runs.append((start, rec.stage - 1))
            start = None
    if start is not None:
        runs.append((start, trace.horizon))
    return runs


def verify_splice(
    trace: StageTrace, r: LeftCEApprox, machine: PrefixMachine, c: int
) -> list[str]:
    errs = []
    if not trace.is_monotone():
        errs.append("trace not monotone")
    for rec in trace.records:
        t = rec.stage
        if rec.state == "empty":
            if not r.empty_at(t) or rec.value.real() != ZERO:
                errs.append(f"stage {t}: bad empty record")
        elif rec.state == "tracking":
            if rec.value.real() != r.value(t):
                errs.append(f"stage {t}: tracking value differs from the input")
        elif rec.state == "spliced":
            v = rec.value
            if not isinstance(v, TailValue) or v.omega != omega_approx(machine, t):
                errs.append(f"stage {t}: spliced tail is not the stage mass")
        else:
            errs.append(f"stage {t}: unknown state {rec.state}")
    for start, end in _spliced_runs(trace, "spliced"):
        if start == 0:
            errs.append("trace starts spliced with no switch stage")
            continue
        witness = trace.records[start].value.prefix  # type: ignore[union-attr]
        switch = start - 1
        if k_approx(machine, witness, switch) >= len(witness) - c:
            errs.append(f"witness {witness} did not fail the constant at stage {switch}")
        for s in range(start, end + 1):
            if trace.records[s].value.prefix != witness:  # type: ignore[union-attr]
                errs.append(f"stage {s}: witness changed mid-run")
    return errs


def verify_hatm(
    trace: StageTrace,
    m: LeftCEApprox,
    machine: PrefixMachine,
    k: int,
    mirror: bool,
) -> list[str]:
    errs = []
    if not trace.is_monotone():
        errs.append("trace not monotone")
    degenerate = ("1" if mirror else "0") * k
    want = Order.GT if mirror else Order.LT
    for rec in trace.records:
        t = rec.stage
        boundary = approx_string(omega_approx(machine, t), k)
        if rec.state == "parked":
            if boundary.bits != degenerate:
                errs.append(f"stage {t}: parked although the boundary prefix moved")
            v = rec.value
            if not isinstance(v, TailValue) or v.prefix.bits != ("1" if mirror else "0"):
                errs.append(f"stage {t}: parked value malformed")
        elif rec.state == "tracking":
            cur = approx_string(m.value(t), k)
            if lex_compare_padded(cur, boundary) is not want:
                errs.append(f"stage {t}: tracking on the wrong side of the boundary")
            if rec.value.real() != m.value(t):
                errs.append(f"stage {t}: tracking value differs from the input")
        elif rec.state == "undesirable":
            v = rec.value
            if not isinstance(v, TailValue) or len(v.prefix) != k:
                errs.append(f"stage {t}: fix prefix has wrong length")
            elif not mirror and lex_compare_padded(v.prefix, boundary) is not Order.LT:
                errs.append(f"stage {t}: fix prefix not strictly below the boundary")
        else:
            errs.append(f"stage {t}: unknown state {rec.state}")
    return errs


def verify_regret(
    slots: Sequence[RegretSlot],
    family: EnumerationScript,
    machine: PrefixMachine,
    c: int,
) -> list[str]:
    errs = []
    approxes = {e: real_from_ce_set(family, e) for e in family.indices()}
    for i, slot in enumerate(slots):
        m = approxes[slot.source_index]
        if not slot.trace.is_monotone():
            errs.append(f"slot {i}: trace not monotone")
        for rec in slot.trace.records:
            t = rec.stage
            if rec.state == "unbound":
                if rec.value.real() != ZERO:
                    errs.append(f"slot {i} stage {t}: unbound value not 0")
            elif rec.state == "tracking":
                if rec.value.real() != m.value(t):
                    errs.append(f"slot {i} stage {t}: tracking value differs from the member")
            elif rec.state == "regretted":
                assert slot.padding is not None
                v = rec.value
                expected = approx_string(m.value(t), slot.witness_length).bits + "0" * slot.padding
                if not isinstance(v, TailValue) or v.prefix.bits != expected:
                    errs.append(f"slot {i} stage {t}: regretted prefix malformed")
            else:
                errs.append(f"slot {i} stage {t}: unknown state {rec.state}")
        if slot.regret_stage is not None:
            p = slot.padding or 0
            target = slot.witness_length + c + machine.c_tilde
            if not padding_holds(p, target):
                errs.append(f"slot {i}: padding {p} misses the target {target}")
            if any(padding_holds(q, target) for q in range(1, p)):
                errs.append(f"slot {i}: padding {p} not minimal for target {target}")
            if p != compute_padding(slot.witness_length, c + machine.c_tilde):
                errs.append(f"slot {i}: padding differs from the computed value")
    return errs


@dataclass(frozen=True)
class MergeCase:
    script: EnumerationScript
    l1: Callable[[int], frozenset[BitString]]
    picker: Callable[[frozenset[BitString], int], frozenset[BitString]]
    tags: frozenset[BitString]
    horizon: int


def _merge_tag(i: int) -> BitString:
    return BitString("1" * 6 + format(i, "010b"))


def make_merge_case(
    rng: random.Random, max_indices: int = 16, horizon: int = 100
) -> MergeCase:
    """A scripted merge input: settled string sets over '0'-opening items,
    plus a tag-based injective side that trivially has extensions of every
    finite subset.  Half the cases force a converging duplicate pair."""
    count = rng.randint(2, max_indices)
    pool = [BitString("0" + format(v, "04b")) for v in range(16)]
    settled: list[list[BitString]] = []
    for _ in range(count):
        size = rng.randint(1, 5)
        settled.append(list(rng.sample(pool, size)))
    if rng.random() < 0.5 and count >= 2:
        a, b = rng.sample(range(count), 2)
        settled[b] = list(settled[a])
        if len(settled[a]) >= 2:
            settled[b].reverse()  # same set, different arrival order: converges
    events = []
    for j, items in enumerate(settled):
        stages = sorted(rng.randint(0, horizon) for _ in items)
        for stage, item in zip(stages, items):
            events.append((stage, j, item))
    script = EnumerationScript.from_events(events, horizon)
    tags = frozenset(_merge_tag(i) for i in range(1024))

    def l1(i: int) -> frozenset[BitString]:
        if i >= 400:
            raise IndexError(i)
        return frozenset((_merge_tag(i),))

    def picker(content: frozenset[BitString], attempt: int) -> frozenset[BitString]:
        return content | {_merge_tag(500 + attempt)}

    return MergeCase(script, l1, picker, tags, horizon)


def verify_merge(out: EnumerationScript, case: MergeCase) -> list[str]:
    errs = []
    outputs = [stage_set(out, i, case.horizon) for i in out.indices()]
    if len(set(outputs)) != len(outputs):
        errs.append("settled output sets repeat")
    l2_settled = {
        stage_set(case.script, j, case.horizon) for j in case.script.indices()
    }
    for value in l2_settled:
        if value not in outputs:
            errs.append(f"scripted set of size {len(value)} omitted")
    for value in outputs:
        tagged = any(item in case.tags for item in value)
        if not tagged and value not in l2_settled:
            errs.append("output set neither scripted nor from the injective side")
    return errs


# ---------------------------------------------------------------------------
# suites


def _group_classes(seq, key):
    out = []
    for item in seq:
        k = key(item)
        if out and out[-1][0] == k:
            out[-1][1].add(item)
        else:
            out.append((k, {item}))
    return [members for _, members in out]


def check_dyadic(
    max_len: int = 10,
    order_len: int = 9,
    sets: int = 200,
    max_set_len: int = 6,
    seed: int = 0,
) -> CheckReport:
    rep = CheckReport("dyadic")
    for s in strings_up_to(max_len):
        if len(s) and s.bits[-1] != "1":
            continue
        rep.cases += 1
        back = string_of_rational(rational_of_string(s))
        if back != s:
            rep.fail(f"round trip {s} -> {back}")
    for exp in range(9):
        for num in range(1 << exp):
            rep.cases += 1
            q = Dyadic(num, exp)
            if string_of_rational(q) != greedy_expansion(q):
                rep.fail(f"expansion of {q} disagrees with the greedy oracle")
    strs = list(strings_up_to(order_len))
    by_lex = _group_classes(
        sorted(strs, key=lambda s: s.padded(order_len)), key=lambda s: s.padded(order_len)
    )
    by_val = _group_classes(
        sorted(strs, key=lambda s: rational_of_string(s).as_fraction()),
        key=lambda s: rational_of_string(s).as_fraction(),
    )
    rep.cases += 1
    if by_lex != by_val:
        rep.fail(f"order transport broken at length {order_len}")
    for a in strings_up_to(5):
        for b in strings_up_to(5):
            rep.cases += 1
            va, vb = rational_of_string(a), rational_of_string(b)
            want = Order.LT if va < vb else Order.GT if va > vb else Order.EQ
            if lex_compare_padded(a, b) is not want:
                rep.fail(f"lex_compare_padded({a}, {b})")
    rng = random.Random(seed)
    for _ in range(sets):
        rep.cases += 1
        sset = random_string_set(rng, max_set_len, 8)
        mu = prefix_set_measure(sset)
        total = ZERO
        for member in optimal_covering(sset):
            total = total + Dyadic.pow2(len(member))
        if mu != total:
            rep.fail(f"measure additivity on {sorted(s.bits for s in sset)}")
        depth = max((len(s) for s in sset), default=0)
        leaves = expansion_at_depth(sset, depth)
        if mu != Dyadic(len(leaves), depth):
            rep.fail(f"measure vs expansion on {sorted(s.bits for s in sset)}")
    return rep


def check_coverings(
    depth: int = 3,
    max_size: int = 3,
    random_sets: int = 300,
    random_depth: int = 5,
    filter_sets: int = 100,
    filter_depth: int = 8,
    listings: int = 40,
    family_count: int = 100,
    family_bits: int = 10,
    seed: int = 0,
    covering_impl: Callable[[Iterable[BitString]], Antichain] | None = None,
) -> CheckReport:
    rep = CheckReport("coverings")
    impl = covering_impl or optimal_covering
    pool = list(strings_up_to(depth))
    for size in range(max_size + 1):
        for combo in itertools.combinations(pool, size):
            rep.cases += 1
            if impl(combo) != brute_optimal_covering(combo):
                rep.fail(f"covering of {{{','.join(str(s) for s in combo)}}}")
    rng = random.Random(seed)
    for _ in range(random_sets):
        rep.cases += 1
        sset = random_string_set(rng, random_depth, 6)
        if impl(sset) != brute_optimal_covering(sset):
            rep.fail(f"covering of {sorted(s.bits for s in sset)}")
    for _ in range(filter_sets):
        rep.cases += 1
        y = random_string_set(rng, 4, 6)
        closure = sibling_merge_closure(y, filter_depth)
        anti = filter_closure(y)
        for t in strings_up_to(filter_depth):
            if anti.covers(t) != (t in closure):
                rep.fail(f"filter closure of {sorted(s.bits for s in y)} differs at {t}")
                break
    rep.cases += 3
    if not is_acceptable(()):
        rep.fail("empty set should be acceptable")
    if is_acceptable((BitString("0"), BitString("1"))):
        rep.fail("{0,1} should not be acceptable")
    if not is_acceptable((BitString("00"), BitString("10"))):
        rep.fail("{00,10} should be acceptable")
    for _ in range(listings):
        listing = random_listing(rng)
        snaps = star_construction(listing, horizon=max(len(listing), 1))
        prev = Antichain(())
        for snap in snaps:
            rep.cases += 1
            if snap.good:
                generating = (
                    snap.covering.members
                    if snap.case == "a"
                    else snap.covering.members + (snap.sigma,)
                )
                if not is_acceptable(generating):
                    rep.fail(f"stage {snap.stage}: generating family not acceptable")
            for member in prev:
                if not snap.family.covers_cone(member):
                    rep.fail(f"stage {snap.stage}: covered set shrank at {member}")
            prev = snap.family
        if snaps and snaps[-1].good_stages:
            last_good = snaps[-1].good_stages[-1]
            final = snaps[-1].family
            for m_i in range(last_good):
                if not final.covers(listing[m_i]):
                    rep.fail(f"listing element {m_i} not covered by the final snapshot")
    count = 0
    seen: set[Antichain] = set()
    for a in covering_antichains(odd=True):
        if a.total_bits() > family_bits or count >= family_count:
            break
        count += 1
        rep.cases += 1
        if len(a) % 2 == 0:
            rep.fail(f"even antichain {a.render()} in the odd family")
        if brute_optimal_covering(a.members) != a:
            rep.fail(f"{a.render()} is not its own covering")
        if a in seen:
            rep.fail(f"family repeats {a.render()}")
        seen.add(a)
    return rep


def check_complexity(
    machines: int = 20,
    tree_checks: int = 3,
    depth: int = 12,
    tree_depth: int = 9,
    padding_targets: int = 30,
    seed: int = 0,
) -> CheckReport:
    rep = CheckReport("complexity")
    rng = random.Random(seed)
    for mi in range(machines):
        machine = random_machine(rng)
        stages = sorted({p.halt_stage for p in machine.programs} | {0})
        outputs = sorted({p.output for p in machine.programs}, key=lambda s: s.lenlex_key)
        prev_k = {o: INFINITE for o in outputs}
        prev_omega = ZERO
        for t in stages:
            rep.cases += 1
            for o in outputs:
                k = k_approx(machine, o, t)
                if k > prev_k[o]:
                    rep.fail(f"machine {mi}: K of {o} increased at stage {t}")
                prev_k[o] = k
            om = omega_approx(machine, t)
            if om < prev_omega:
                rep.fail(f"machine {mi}: mass decreased at stage {t}")
            if machine.strict_kraft and not om < ONE:
                rep.fail(f"machine {mi}: mass reached 1 under a strict budget")
            prev_omega = om
        for c in range(5):
            for t in stages:
                rep.cases += 1
                table = machine.halted_complexities(t)
                failing = [
                    BitString(b) for b, k in table.items() if k < len(b) - c and len(b) <= depth
                ]
                if not prefix_set_measure(failing) <= omega_approx(machine, t).scaled(c):
                    rep.fail(f"machine {mi}: measure bound broken at c={c}, t={t}")
        if mi < tree_checks:
            c = rng.randrange(3)
            t = stages[-1]
            tree = randomness_class_tree(machine, c, t, tree_depth)
            table = machine.halted_complexities(t)
            failing = [
                BitString(b) for b, k in table.items() if k < len(b) - c and len(b) <= tree_depth
            ]
            rep.cases += 1
            direct = ONE - prefix_set_measure(failing)
            via_paths = Dyadic(len(paths_at_depth(tree, tree_depth)), tree_depth)
            if direct != via_paths:
                rep.fail(f"machine {mi}: tree paths disagree with the complement measure")
    for target in range(padding_targets + 1):
        rep.cases += 1
        p = compute_padding(target, 0)
        if not padding_holds(p, target):
            rep.fail(f"padding for target {target} does not satisfy the inequality")
        if any(padding_holds(q, target) for q in range(1, p)):
            rep.fail(f"padding for target {target} is not minimal")
    return rep


def check_constructions(
    merge_cases: int = 25,
    merge_horizon: int = 100,
    odd_count: int = 300,
    beta_cases: int = 30,
    seed: int = 0,
) -> CheckReport:
    rep = CheckReport("constructions")
    for sc in SCENARIOS:
        rep.cases += 1
        result = build_scenario(sc)
        p = sc.params
        horizon = int(p["horizon"])  # type: ignore[arg-type]
        errs: list[str] = []
        if sc.kind == "splice":
            r = real_from_ce_set(fixture_script(str(p["script"]), horizon), 0)
            errs = verify_splice(result, r, fixture_machine(str(p["machine"])), int(p["c"]))
        elif sc.kind == "hatm":
            m = real_from_ce_set(fixture_script(str(p["script"]), horizon), 0)
            errs = verify_hatm(
                result, m, fixture_machine(str(p["machine"])), int(p["k"]), bool(p["mirror"])
            )
        elif sc.kind == "regret":
            family = fixture_script(str(p["script"]), horizon)
            errs = verify_regret(result, family, fixture_machine(str(p["machine"])), int(p["c"]))
        elif sc.kind == "beta":
            if not result.is_monotone():
                errs = ["beta trace not monotone"]
            if "tree" in p:
                tree = Tree.parse(FIXTURE_FILES[str(p["tree"])], depth=int(p["tree_depth"]))
                path = rightmost_path(tree, tree.depth)
                if path is None or result.value_at(horizon) != rational_of_string(path):
                    errs.append("beta horizon value differs from the rightmost path")
        for e in errs:
            rep.fail(f"{sc.name}: {e}")
    rng = random.Random(seed)
    for ci in range(merge_cases):
        rep.cases += 1
        case = make_merge_case(rng, horizon=merge_horizon)
        out = friedberg_merge(case.l1, case.script, case.picker, case.horizon)
        for e in verify_merge(out, case):
            rep.fail(f"merge case {ci}: {e}")
    seen_odd: set[BitString] = set()
    prev_key = (-1, "")
    for i in range(odd_count):
        rep.cases += 1
        s = odd_ones_real_enumeration(i)
        if s in seen_odd:
            rep.fail(f"odd-ones listing repeats {s}")
        seen_odd.add(s)
        if not s.bits.endswith("1") or s.ones() % 2 == 0:
            rep.fail(f"odd-ones listing emitted {s}")
        if s.lenlex_key <= prev_key:
            rep.fail(f"odd-ones listing out of order at {s}")
        prev_key = s.lenlex_key
    for _ in range(beta_cases):
        rep.cases += 1
        script = random_dyadic_script(rng)
        family = [real_from_ce_set(script, e) for e in script.indices()]
        if not family:
            continue
        trace = beta_max(family, script.horizon)
        if not trace.is_monotone():
            rep.fail("beta trace not monotone on a random family")
        best = ZERO
        for member in family:
            if member.value(script.horizon) > best:
                best = member.value(script.horizon)
        if trace.value_at(script.horizon) != best:
            rep.fail("beta horizon value is not the family maximum")
    return rep


def check_classes(
    diag_suites: int = 15,
    diag_depth: int = 10,
    capped_scripts: int = 50,
    cap_depth: int = 6,
    oracle_cases: int = 20,
    seed: int = 0,
) -> CheckReport:
    rep = CheckReport("classes")
    rng = random.Random(seed)
    for si in range(diag_suites):
        rep.cases += 1
        trees = diagonal_suite(rng, rng.randint(1, min(8, diag_depth - 1)), diag_depth)
        taus = graft_points(trees, diag_depth)
        combined = diagonalize(trees, diag_depth)
        paths = paths_at_depth(combined, diag_depth)
        for n, tau in enumerate(taus):
            if not any(tau.is_prefix_of(p) for p in paths):
                rep.fail(f"suite {si}: no combined path through graft {n}")
            if any(tau.is_prefix_of(p) for p in paths_at_depth(trees[n], diag_depth)):
                rep.fail(f"suite {si}: tree {n} still meets its graft cone")
    for ci in range(capped_scripts):
        script = random_string_script(rng, max_len=cap_depth)
        for n in range(1, 9):
            rep.cases += 1
            cap = Fraction(n - 1, n)
            replays = measure_capped_enumeration(script, n, script.horizon)
            for e, replay in replays.items():
                for snap in replay.stages:
                    if prefix_set_measure(snap).as_fraction() > cap:
                        rep.fail(f"script {ci}: cap {n} broken for index {e}")
                        break
                full = {
                    item
                    for item in stage_set(script, e, script.horizon)
                    if isinstance(item, BitString)
                }
                if prefix_set_measure(full).as_fraction() <= cap and replay.final() != full:
                    rep.fail(f"script {ci}: unconstrained index {e} was modified")
                if n == 1 and replay.final():
                    rep.fail(f"script {ci}: cap 1 admitted a string for index {e}")
                final = replay.final()
                complement = tree_of_complement(final, cap_depth)
                open_side = expansion_at_depth(final, cap_depth)
                leftover = {
                    p.bits for p in paths_at_depth(Tree.full(cap_depth), cap_depth)
                } - set(open_side)
                if leftover != {p.bits for p in paths_at_depth(complement, cap_depth)}:
                    rep.fail(f"script {ci}: complement view broken for index {e}")
    for oi in range(oracle_cases):
        rep.cases += 1
        halted = optimal_covering(random_string_set(rng, 5, 4, 1))
        budgets = {m.bits: len(m) + rng.randint(0, 2) for m in halted}

        def oracle(s: BitString, e: int) -> bool:
            return any(
                s.bits.startswith(b) and len(s) >= budgets[b] for b in budgets
            )

        tree = tree_from_halting_oracle(oracle, 0, 7)
        for s in strings_up_to(7):
            on_tree = all(
                BitString(s.bits[:i]) in tree.nodes for i in range(len(s.bits) + 1)
            )
            if on_tree != (not oracle(s, 0)):
                rep.fail(f"oracle case {oi}: membership mismatch at {s}")
                break
    return rep


SUITES: dict[str, Callable[..., CheckReport]] = {
    "dyadic": check_dyadic,
    "coverings": check_coverings,
    "complexity": check_complexity,
    "constructions": check_constructions,
    "classes": check_classes,
}


def run_suite(name: str, **kwargs) -> CheckReport:
    if name not in SUITES:
        raise InputError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](**kwargs)
