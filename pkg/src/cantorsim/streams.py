"""Stage-replay models of uniformly presented families.

An enumeration script is a finite, replayable log of (stage, index, item)
events: the stage-s set of index e is exactly the items filed under e at
stages ≤ s.  Left-c.e. reals are modelled by monotone per-stage dyadic
values with an explicit "empty" flag before the first evidence arrives, so
downstream constructions can tell "no element yet" from the real 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .dyadic import (
    EMPTY,
    ONE,
    ZERO,
    BitString,
    Dyadic,
    Order,
    lex_compare_padded,
    string_of_rational,
    strings_up_to,
)
from .errors import InputError, ParseError, RangeError

Item = Union[BitString, Dyadic]

__all__ = [
    "EnumerationScript",
    "Item",
    "LeftCEApprox",
    "ScriptEvent",
    "approx_string",
    "lower_cut",
    "parity_projection",
    "real_from_ce_set",
    "stage_set",
    "truncate_pad",
]


@dataclass(frozen=True)
class ScriptEvent:
    stage: int
    index: int
    item: Item


@dataclass(frozen=True)
class EnumerationScript:
    """A finite log of enumeration events, sorted by stage (file order kept
    within a stage)."""

    events: tuple[ScriptEvent, ...] = ()
    horizon: int = 0

    def __post_init__(self) -> None:
        if self.horizon < 0:
            raise InputError("horizon must be ≥ 0")
        last = 0
        for ev in self.events:
            if ev.stage < 0 or ev.index < 0:
                raise InputError(f"negative stage or index in event {ev}")
            if ev.stage < last:
                raise InputError("events must be sorted by stage")
            if ev.stage > self.horizon:
                raise InputError(f"event at stage {ev.stage} beyond horizon {self.horizon}")
            last = ev.stage

    @classmethod
    def from_events(
        cls, events: Iterable[tuple[int, int, Item]], horizon: int | None = None
    ) -> "EnumerationScript":
        evs = [ScriptEvent(s, e, item) for (s, e, item) in events]
        evs.sort(key=lambda ev: ev.stage)  # stable: file order kept within a stage
        if horizon is None:
            horizon = max((ev.stage for ev in evs), default=0)
        return cls(tuple(evs), horizon)

    @classmethod
    def parse(
        cls, text: str, horizon: int | None = None, source: str = "<script>"
    ) -> "EnumerationScript":
        """One event per line: stage<TAB>index<TAB>kind<TAB>payload with kind
        in {str, dyadic}; '#' starts a comment line."""
        events: list[tuple[int, int, Item]] = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = raw.rstrip("\n").split("\t")
            if len(parts) != 4:
                raise ParseError(
                    f"expected 4 tab-separated fields, got {len(parts)}",
                    source=source,
                    line=lineno,
                )
            stage_s, index_s, kind, payload = (p.strip() for p in parts)
            try:
                stage, index = int(stage_s), int(index_s)
            except ValueError:
                raise ParseError("stage and index must be integers", source=source, line=lineno)
            try:
                if kind == "str":
                    item: Item = BitString.parse(payload)
                elif kind == "dyadic":
                    item = Dyadic.parse(payload)
                else:
                    raise ParseError(f"unknown item kind {kind!r}", source=source, line=lineno)
            except ParseError:
                raise
            except Exception as exc:
                raise ParseError(f"bad payload {payload!r}: {exc}", source=source, line=lineno)
            events.append((stage, index, item))
        script = cls.from_events(events, horizon)
        if horizon is not None and events:
            top = max(s for (s, _, _) in events)
            if top > horizon:
                raise ParseError(
                    f"event stage {top} beyond requested horizon {horizon}", source=source
                )
        return script

    @classmethod
    def load(cls, path: str, horizon: int | None = None) -> "EnumerationScript":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.parse(fh.read(), horizon=horizon, source=path)

    def indices(self) -> tuple[int, ...]:
        return tuple(sorted({ev.index for ev in self.events}))

    def events_for(self, index: int) -> tuple[ScriptEvent, ...]:
        return tuple(ev for ev in self.events if ev.index == index)

    def render(self) -> str:
        lines = []
        for ev in self.events:
            if isinstance(ev.item, BitString):
                kind, payload = "str", ev.item.display()
            else:
                kind, payload = "dyadic", ev.item.render()
            lines.append(f"{ev.stage}\t{ev.index}\t{kind}\t{payload}")
        return "\n".join(lines)


def stage_set(script: EnumerationScript, index: int, stage: int) -> frozenset[Item]:
    """The replayed stage-s set of the given index; monotone in the stage."""
    if stage < 0 or stage > script.horizon:
        raise RangeError(f"stage {stage} outside [0, {script.horizon}]")
    return frozenset(
        ev.item for ev in script.events if ev.index == index and ev.stage <= stage
    )


@dataclass(frozen=True)
class LeftCEApprox:
    """A monotone stage approximation of a left-c.e. real.

    values[s] is the stage-s value; stages before first_stage carry the
    placeholder 0 and are flagged empty.
    """

    values: tuple[Dyadic, ...]
    first_stage: int | None = None

    def __post_init__(self) -> None:
        if not self.values:
            raise InputError("approximation needs at least stage 0")
        for a, b in zip(self.values, self.values[1:]):
            if b < a:
                raise InputError(f"approximation not monotone: {a} then {b}")
        if self.first_stage is not None and not (0 <= self.first_stage < len(self.values)):
            raise InputError("first_stage outside the stage range")

    @property
    def horizon(self) -> int:
        return len(self.values) - 1

    def value(self, stage: int) -> Dyadic:
        if stage < 0 or stage > self.horizon:
            raise RangeError(f"stage {stage} outside [0, {self.horizon}]")
        return self.values[stage]

    def empty_at(self, stage: int) -> bool:
        return self.first_stage is None or stage < self.first_stage

    @classmethod
    def constant(cls, v: Dyadic, horizon: int, first_stage: int | None = 0) -> "LeftCEApprox":
        return cls(tuple([v] * (horizon + 1)), first_stage)

    @classmethod
    def from_pairs(
        cls, pairs: Iterable[tuple[int, Dyadic]], horizon: int
    ) -> "LeftCEApprox":
        """Running maximum of the values filed so far, stage by stage."""
        by_stage: dict[int, list[Dyadic]] = {}
        first: int | None = None
        for stage, v in pairs:
            if stage < 0 or stage > horizon:
                raise RangeError(f"stage {stage} outside [0, {horizon}]")
            by_stage.setdefault(stage, []).append(v)
            first = stage if first is None else min(first, stage)
        out: list[Dyadic] = []
        cur = ZERO
        for s in range(horizon + 1):
            for v in by_stage.get(s, ()):
                if v > cur:
                    cur = v
            out.append(cur)
        return cls(tuple(out), first)


def real_from_ce_set(script: EnumerationScript, index: int) -> LeftCEApprox:
    """Stage value = greatest element filed under the index so far; the
    placeholder 0 flagged empty before anything arrives."""
    pairs: list[tuple[int, Dyadic]] = []
    for ev in script.events_for(index):
        if not isinstance(ev.item, Dyadic):
            raise TypeError(f"index {index} carries a non-dyadic item at stage {ev.stage}")
        pairs.append((ev.stage, ev.item))
    return LeftCEApprox.from_pairs(pairs, script.horizon)


def lower_cut(x: Dyadic, max_len: int) -> frozenset[BitString]:
    """All τ with |τ| ≤ max_len whose zero-padded extension lies strictly
    below x; computed by padded string comparison against x's expansion."""
    if x == ONE:
        return frozenset(strings_up_to(max_len))
    sx = string_of_rational(x)
    return frozenset(
        t for t in strings_up_to(max_len) if lex_compare_padded(t, sx) is Order.LT
    )


def truncate_pad(s: BitString, n: int) -> BitString:
    """s cut to length n, or extended with zeroes up to length n."""
    if n < 0:
        raise InputError("target length must be ≥ 0")
    if len(s) >= n:
        return s.take(n)
    return BitString(s.padded(n))


def approx_string(x: Dyadic, n: int) -> BitString:
    """First n expansion bits of x (x = 1 expands as all-ones)."""
    if x == ONE:
        return BitString("1" * n)
    return truncate_pad(string_of_rational(x), n)


def parity_projection(s: BitString) -> BitString:
    """The longest prefix carrying an even number of 1s."""
    best = 0
    ones = 0
    for i, bit in enumerate(s.bits, 1):
        ones += bit == "1"
        if ones % 2 == 0:
            best = i
    return s.take(best)
