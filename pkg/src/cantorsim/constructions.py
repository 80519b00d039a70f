"""Stage-based constructions on left-c.e. approximations.

Each construction replays a deterministic state machine over scripted
inputs and emits one record per stage.  Trace values are either plain
dyadics or a bit-string prefix carrying the machine's halting-mass tail,
rendered as ``prefix*Ω@stage``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, Union

from .complexity import PrefixMachine, compute_padding, omega_approx, satisfies_constant
from .dyadic import ZERO, BitString, Dyadic, Order, lex_compare_padded
from .errors import (
    CapacityError,
    ContractViolationError,
    DomainError,
    InputError,
    PreconditionError,
)
from .streams import (
    EnumerationScript,
    LeftCEApprox,
    approx_string,
    real_from_ce_set,
)

__all__ = [
    "PlainValue",
    "RegretSlot",
    "StageTrace",
    "TailValue",
    "TraceRecord",
    "TraceValue",
    "beta_max",
    "friedberg_merge",
    "hat_m_construction",
    "odd_ones_real_enumeration",
    "regret_construction",
    "splice_random",
]


@dataclass(frozen=True)
class PlainValue:
    value: Dyadic

    def real(self) -> Dyadic:
        return self.value

    def render(self) -> str:
        return self.value.render()


@dataclass(frozen=True)
class TailValue:
    """prefix followed by the stage-s halting-mass tail."""

    prefix: BitString
    omega_stage: int
    omega: Dyadic

    def real(self) -> Dyadic:
        return self.omega.in_cone(self.prefix)

    def render(self) -> str:
        return f"{self.prefix.display()}*Ω@{self.omega_stage}"


TraceValue = Union[PlainValue, TailValue]


@dataclass(frozen=True)
class TraceRecord:
    stage: int
    state: str
    value: TraceValue
    note: str = ""


@dataclass(frozen=True)
class StageTrace:
    """One record per stage from 0 up to the horizon."""

    records: tuple[TraceRecord, ...]

    def __post_init__(self) -> None:
        for s, rec in enumerate(self.records):
            if rec.stage != s:
                raise InputError(f"record {s} carries stage {rec.stage}")

    @property
    def horizon(self) -> int:
        return len(self.records) - 1

    def value_at(self, stage: int) -> Dyadic:
        return self.records[stage].value.real()

    def is_monotone(self) -> bool:
        vals = [r.value.real() for r in self.records]
        return all(a <= b for a, b in zip(vals, vals[1:]))

    def render_lines(self) -> list[str]:
        return [f"{r.stage}\t{r.state}\t{r.value.render()}" for r in self.records]


def _require_strict_mass(machine: PrefixMachine) -> None:
    if not machine.strict_kraft:
        raise PreconditionError(
            "halting mass must stay below 1 to use its tail as a splice source"
        )


def splice_random(
    r: LeftCEApprox, machine: PrefixMachine, c: int, horizon: int
) -> StageTrace:
    """Track r, splicing the halting-mass tail onto a failing prefix.

    While tracking, every length n ≤ t of the current associated string is
    monitored; the least failing n wins.  From the next stage the value is
    that witness followed by the stage tail, until the current length-n
    string satisfies the constant again, at which point tracking resumes at
    the current stage.
    """
    if c < 0:
        raise DomainError("the constant must be ≥ 0")
    if r.horizon < horizon:
        raise InputError("approximation shorter than the requested horizon")
    _require_strict_mass(machine)

    records: list[TraceRecord] = []
    spliced: tuple[int, BitString] | None = None  # (witness length, witness string)
    for t in range(horizon + 1):
        note = ""
        if spliced is not None:
            n, _witness = spliced
            if satisfies_constant(machine, approx_string(r.value(t), n), c, t):
                spliced = None
                note = "recover"
        if spliced is None:
            if r.empty_at(t):
                records.append(TraceRecord(t, "empty", PlainValue(ZERO), note))
                continue
            trigger: tuple[int, BitString] | None = None
            for n in range(t + 1):
                w = approx_string(r.value(t), n)
                if not satisfies_constant(machine, w, c, t):
                    trigger = (n, w)
                    break
            if trigger is not None:
                note = f"{note} trigger n={trigger[0]}".strip()
            records.append(TraceRecord(t, "tracking", PlainValue(r.value(t)), note))
            spliced = trigger if trigger is not None else spliced
        else:
            n, witness = spliced
            records.append(
                TraceRecord(t, "spliced", TailValue(witness, t, omega_approx(machine, t)))
            )
    return StageTrace(tuple(records))


def hat_m_construction(
    m: LeftCEApprox,
    machine: PrefixMachine,
    k: int,
    horizon: int,
    mirror: bool = False,
) -> StageTrace:
    """Keep the trace on the desired side of the length-k mass boundary.

    While the boundary's k-prefix is degenerate (all zeroes; all ones in
    mirror mode) the value is parked at 0 (resp. 1) followed by the tail.
    Afterwards the input is tracked while its k-prefix stays strictly on
    the desired side; on a violation at stage s the value becomes the
    previous stage's k-prefix followed by the tail, until desirable again.
    """
    if k < 0:
        raise DomainError("the boundary length must be ≥ 0")
    if m.horizon < horizon:
        raise InputError("approximation shorter than the requested horizon")
    _require_strict_mass(machine)

    parked_bit = BitString("1" if mirror else "0")
    degenerate = ("1" if mirror else "0") * k
    want = Order.GT if mirror else Order.LT

    records: list[TraceRecord] = []
    parked = True
    fix: BitString | None = None
    prev_prefix: BitString | None = None
    for s in range(horizon + 1):
        omega_s = omega_approx(machine, s)
        boundary = approx_string(omega_s, k)
        if parked:
            if boundary.bits == degenerate:
                records.append(TraceRecord(s, "parked", TailValue(parked_bit, s, omega_s)))
                prev_prefix = approx_string(m.value(s), k)
                continue
            parked = False
        cur = approx_string(m.value(s), k)
        if lex_compare_padded(cur, boundary) is want:
            fix = None
            records.append(TraceRecord(s, "tracking", PlainValue(m.value(s))))
        else:
            note = ""
            if fix is None:
                fix = prev_prefix if prev_prefix is not None else approx_string(m.value(0), k)
                note = "violation"
            records.append(TraceRecord(s, "undesirable", TailValue(fix, s, omega_s), note))
        prev_prefix = cur
    return StageTrace(tuple(records))


@dataclass(frozen=True)
class RegretSlot:
    """One output slot of the regret construction, with its binding history."""

    trace: StageTrace
    source_index: int
    witness_length: int
    bound_stage: int
    regret_stage: int | None
    padding: int | None


def regret_construction(
    family: EnumerationScript,
    machine: PrefixMachine,
    c: int,
    horizon: int,
    max_slots: int | None = None,
) -> list[RegretSlot]:
    """Assign output slots to family members caught failing the constant.

    At stage t every unbound index e ≤ t is scanned over lengths n ≤ t;
    the least failing length binds the next slot, which then tracks the
    member.  If the witness length later satisfies the constant, the slot
    is regretted: from that stage on it carries the current length-n prefix
    extended by a padding block of zeroes and the halting-mass tail, and
    never rebinds.  The member itself becomes eligible for fresh slots.
    """
    if c < 0:
        raise DomainError("the constant must be ≥ 0")
    _require_strict_mass(machine)
    if family.horizon < horizon:
        raise InputError("family script shorter than the requested horizon")
    approxes = {e: real_from_ce_set(family, e) for e in family.indices()}

    class _Slot:
        __slots__ = ("e", "n", "bound_at", "regretted_at", "padding", "records")

        def __init__(self, e: int, n: int, bound_at: int) -> None:
            self.e = e
            self.n = n
            self.bound_at = bound_at
            self.regretted_at: int | None = None
            self.padding: int | None = None
            self.records: list[TraceRecord] = [
                TraceRecord(s, "unbound", PlainValue(ZERO)) for s in range(bound_at)
            ]

    slots: list[_Slot] = []
    bound: dict[int, int] = {}

    for t in range(horizon + 1):
        for sid in list(bound.values()):
            slot = slots[sid]
            cur = approx_string(approxes[slot.e].value(t), slot.n)
            if satisfies_constant(machine, cur, c, t):
                slot.regretted_at = t
                slot.padding = compute_padding(slot.n, c + machine.c_tilde)
                del bound[slot.e]
        for e in sorted(approxes):
            if e > t or e in bound:
                continue
            m = approxes[e]
            if m.empty_at(t):
                continue
            for n in range(t + 1):
                w = approx_string(m.value(t), n)
                if not satisfies_constant(machine, w, c, t):
                    if max_slots is not None and len(slots) >= max_slots:
                        raise CapacityError(
                            f"all {max_slots} slots in use at stage {t} (horizon too small)"
                        )
                    slots.append(_Slot(e, n, t))
                    bound[e] = len(slots) - 1
                    break
        for slot in slots:
            if t < slot.bound_at:
                continue
            m = approxes[slot.e]
            if slot.regretted_at is None or t < slot.regretted_at:
                note = "bound" if t == slot.bound_at else ""
                slot.records.append(TraceRecord(t, "tracking", PlainValue(m.value(t)), note))
            else:
                assert slot.padding is not None
                prefix = approx_string(m.value(t), slot.n).cat(BitString("0" * slot.padding))
                note = "regret" if t == slot.regretted_at else ""
                slot.records.append(
                    TraceRecord(t, "regretted", TailValue(prefix, t, omega_approx(machine, t)), note)
                )

    return [
        RegretSlot(
            trace=StageTrace(tuple(slot.records)),
            source_index=slot.e,
            witness_length=slot.n,
            bound_stage=slot.bound_at,
            regret_stage=slot.regretted_at,
            padding=slot.padding,
        )
        for slot in slots
    ]


def odd_ones_real_enumeration(i: int) -> BitString:
    """The i-th string, in length-lexicographic order, ending in 1 with an
    odd number of 1s; its zero-padded extension has odd finitely many 1s."""
    if i < 0:
        raise DomainError("index must be ≥ 0")
    seen = 0
    length = 1
    while True:
        for prefix in range(1 << (length - 1)):
            bits = format(prefix, "b").zfill(length - 1) + "1" if length > 1 else "1"
            if bits.count("1") % 2 == 1:
                if seen == i:
                    return BitString(bits)
                seen += 1
        length += 1


SetValue = frozenset[BitString]


def friedberg_merge(
    l1: Callable[[int], SetValue],
    l2: EnumerationScript,
    extension_picker: Callable[[SetValue, int], SetValue],
    horizon: int,
) -> EnumerationScript:
    """Merge an injective set listing with a scripted family, repeats removed.

    Each script index is followed by a slot.  A follower only exists while
    no other active follower shows the same content: converging followers
    lose the larger index, whose slot is permanently diverted to a fresh
    listing member extending its content (via the picker), and the index
    respawns on a new slot once its content again matches no active
    follower.  One listing member not yet consumed is emitted per stage.
    On inputs whose tracked sets settle by the horizon, the settled output
    sets are exactly the used listing members plus the scripted sets, with
    no repeats.
    """
    if horizon < 0:
        raise InputError("horizon must be ≥ 0")
    indices = l2.indices()
    current: dict[int, set[BitString]] = {j: set() for j in indices}
    active: dict[int, int] = {}  # index -> slot id
    slot_content: list[set[BitString]] = []
    out_events: list[tuple[int, int, BitString]] = []
    used: set[SetValue] = set()
    generator_seen: set[SetValue] = set()
    l1_next = 0
    l1_done = False

    def emit(slot: int, stage: int, items: Sequence[BitString]) -> None:
        for item in sorted(items, key=lambda b: b.lenlex_key):
            out_events.append((stage, slot, item))

    def new_slot(stage: int, content: set[BitString]) -> int:
        slot_content.append(set(content))
        emit(len(slot_content) - 1, stage, tuple(content))
        return len(slot_content) - 1

    def pick_fresh(content: SetValue, stage: int) -> SetValue:
        attempts = len(used) + horizon + 2
        for a in range(attempts):
            value = extension_picker(content, a)
            if not content <= value:
                raise ContractViolationError(
                    f"picker value at stage {stage} does not extend the slot content"
                )
            if value not in used:
                return value
        raise ContractViolationError(f"picker found no fresh extension at stage {stage}")

    pos = 0
    events = l2.events
    for s in range(horizon + 1):
        # 1. deliver this stage's items
        while pos < len(events) and events[pos].stage == s:
            ev = events[pos]
            pos += 1
            if not isinstance(ev.item, BitString):
                raise InputError(f"index {ev.index} carries a non-string item at stage {s}")
            if ev.item not in current[ev.index]:
                current[ev.index].add(ev.item)
                if ev.index in active:
                    sid = active[ev.index]
                    slot_content[sid].add(ev.item)
                    emit(sid, s, (ev.item,))
        # 2. spawn followers for indices whose content matches no active follower
        for j in indices:
            if j in active:
                continue
            if any(slot_content[sid] == current[j] for sid in active.values()):
                continue
            active[j] = new_slot(s, current[j])
        # 3. divert the larger index of any converging follower pair
        for j in indices:
            if j not in active:
                continue
            for j2 in indices:
                if j2 >= j or j2 not in active:
                    continue
                if slot_content[active[j]] == slot_content[active[j2]]:
                    sid = active.pop(j)
                    content = frozenset(slot_content[sid])
                    value = pick_fresh(content, s)
                    used.add(value)
                    slot_content[sid] = set(value)
                    emit(sid, s, tuple(value - content))
                    break
        # 4. emit the next unused listing member
        if not l1_done:
            while True:
                try:
                    value = l1(l1_next)
                except IndexError:
                    l1_done = True
                    break
                l1_next += 1
                if value in generator_seen:
                    raise ContractViolationError("listing generator repeated a member")
                generator_seen.add(value)
                if value in used:
                    continue
                used.add(value)
                new_slot(s, set(value))
                break
    return EnumerationScript.from_events(out_events, horizon)


def beta_max(family: Sequence[LeftCEApprox], horizon: int) -> StageTrace:
    """Stage-s maximum over the members with index ≤ s; monotone because the
    members are and the index window only grows."""
    if not family:
        raise InputError("the family must be nonempty")
    for a in family:
        if a.horizon < horizon:
            raise InputError("family member shorter than the requested horizon")
    records = []
    for s in range(horizon + 1):
        vals = [a.value(s) for e, a in enumerate(family) if e <= s]
        best = vals[0]
        for v in vals[1:]:
            if v > best:
                best = v
        records.append(TraceRecord(s, "max", PlainValue(best)))
    return StageTrace(tuple(records))
