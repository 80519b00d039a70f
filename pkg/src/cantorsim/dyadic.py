"""Exact combinatorics on finite binary strings and dyadic rationals.

Everything downstream builds on three value types: bit strings carrying the
prefix partial order and the length-lexicographic total order, dyadic
rationals kept in lowest terms inside [0, 1], and reduced antichains that
canonically represent unions of cones.  All arithmetic is integer-exact;
there is no floating point anywhere because the constructions compare reals
for strict order, where rounding is fatal.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import DomainError

__all__ = [
    "Antichain",
    "BitString",
    "Dyadic",
    "EMPTY",
    "ONE",
    "Order",
    "ZERO",
    "all_strings",
    "filter_closure",
    "is_acceptable",
    "lex_compare_padded",
    "optimal_covering",
    "prefix_set_measure",
    "rational_of_string",
    "string_of_rational",
    "strings_up_to",
]


class Order(enum.IntEnum):
    """Three-way comparison outcome."""

    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class BitString:
    """A finite word over {0, 1}; the empty word is written ε."""

    bits: str = ""

    def __post_init__(self) -> None:
        if self.bits.strip("01"):
            raise DomainError(f"not a 0/1 word: {self.bits!r}")

    @classmethod
    def parse(cls, text: str) -> "BitString":
        """Accept a 0/1 word; '', 'ε' and '-' all denote the empty word."""
        text = text.strip()
        if text in ("", "ε", "-"):
            return cls("")
        return cls(text)

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return (int(b) for b in self.bits)

    def __getitem__(self, i: int) -> int:
        return int(self.bits[i])

    def __str__(self) -> str:
        return self.bits or "ε"

    def display(self) -> str:
        """Render for tab-separated CLI output; ε shows as '-'."""
        return self.bits or "-"

    @property
    def lenlex_key(self) -> tuple[int, str]:
        return (len(self.bits), self.bits)

    def cat(self, other: "BitString") -> "BitString":
        return BitString(self.bits + other.bits)

    def append(self, bit: int) -> "BitString":
        return BitString(self.bits + ("1" if bit else "0"))

    def take(self, n: int) -> "BitString":
        return BitString(self.bits[:n])

    def parent(self) -> "BitString":
        if not self.bits:
            raise DomainError("ε has no parent")
        return BitString(self.bits[:-1])

    def children(self) -> tuple["BitString", "BitString"]:
        return (BitString(self.bits + "0"), BitString(self.bits + "1"))

    def sibling(self) -> "BitString":
        if not self.bits:
            raise DomainError("ε has no sibling")
        flipped = "1" if self.bits[-1] == "0" else "0"
        return BitString(self.bits[:-1] + flipped)

    def is_prefix_of(self, other: "BitString") -> bool:
        return other.bits.startswith(self.bits)

    def is_proper_prefix_of(self, other: "BitString") -> bool:
        return len(self.bits) < len(other.bits) and other.bits.startswith(self.bits)

    def extends(self, other: "BitString") -> bool:
        return other.is_prefix_of(self)

    def comparable(self, other: "BitString") -> bool:
        return self.is_prefix_of(other) or other.is_prefix_of(self)

    def ones(self) -> int:
        return self.bits.count("1")

    def padded(self, n: int) -> str:
        """Raw bits extended with zeroes up to length n (never truncates)."""
        return self.bits + "0" * (n - len(self.bits))


EMPTY = BitString("")


def all_strings(length: int) -> Iterator[BitString]:
    """All words of exactly the given length, in lexicographic order."""
    for tup in itertools.product("01", repeat=length):
        yield BitString("".join(tup))


def strings_up_to(length: int) -> Iterator[BitString]:
    """All words of length ≤ the bound, in length-lexicographic order."""
    for n in range(length + 1):
        yield from all_strings(n)


def lex_compare_padded(a: BitString, b: BitString) -> Order:
    """Compare the zero-padded extensions a0^ω and b0^ω lexicographically."""
    n = max(len(a), len(b))
    x, y = a.padded(n), b.padded(n)
    if x == y:
        return Order.EQ
    return Order.LT if x < y else Order.GT


@dataclass(frozen=True)
class Dyadic:
    """num / 2**exp in lowest terms, always within [0, 1].

    Canonical form: num is odd or zero, and zero carries exponent zero, so
    structural equality coincides with numeric equality.
    """

    num: int = 0
    exp: int = 0

    def __post_init__(self) -> None:
        num, exp = self.num, self.exp
        if num < 0 or exp < 0:
            raise DomainError(f"negative dyadic parts: {num}/2^{exp}")
        while num > 0 and num % 2 == 0 and exp > 0:
            num //= 2
            exp -= 1
        if num == 0:
            exp = 0
        if num > (1 << exp):
            raise DomainError(f"dyadic exceeds 1: {self.num}/2^{self.exp}")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        text = text.strip()
        if "/" not in text:
            return cls(int(text), 0)
        left, right = text.split("/", 1)
        if not right.startswith("2^"):
            raise DomainError(f"expected a/2^b, got {text!r}")
        return cls(int(left), int(right[2:]))

    def render(self) -> str:
        return f"{self.num}/2^{self.exp}"

    def __str__(self) -> str:
        return self.render()

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    def compare(self, other: "Dyadic") -> Order:
        lhs = self.num << other.exp
        rhs = other.num << self.exp
        if lhs == rhs:
            return Order.EQ
        return Order.LT if lhs < rhs else Order.GT

    def __lt__(self, other: "Dyadic") -> bool:
        return self.compare(other) is Order.LT

    def __le__(self, other: "Dyadic") -> bool:
        return self.compare(other) is not Order.GT

    def __gt__(self, other: "Dyadic") -> bool:
        return self.compare(other) is Order.GT

    def __ge__(self, other: "Dyadic") -> bool:
        return self.compare(other) is not Order.LT

    def __add__(self, other: "Dyadic") -> "Dyadic":
        exp = max(self.exp, other.exp)
        num = (self.num << (exp - self.exp)) + (other.num << (exp - other.exp))
        return Dyadic(num, exp)

    def __sub__(self, other: "Dyadic") -> "Dyadic":
        exp = max(self.exp, other.exp)
        num = (self.num << (exp - self.exp)) - (other.num << (exp - other.exp))
        if num < 0:
            raise DomainError("dyadic subtraction went below 0")
        return Dyadic(num, exp)

    def scaled(self, k: int) -> "Dyadic":
        """The value divided by 2**k."""
        if k < 0:
            raise DomainError("scale exponent must be ≥ 0")
        return Dyadic(self.num, self.exp + k)

    def in_cone(self, prefix: BitString) -> "Dyadic":
        """The value of prefix followed by this real's expansion."""
        return rational_of_string(prefix) + self.scaled(len(prefix))

    @classmethod
    def pow2(cls, k: int) -> "Dyadic":
        return cls(1, k)


ZERO = Dyadic(0, 0)
ONE = Dyadic(1, 0)


def rational_of_string(s: BitString) -> Dyadic:
    """Σ s(i)·2^{-(i+1)}: the value of s followed by zeroes."""
    if not len(s):
        return ZERO
    return Dyadic(int(s.bits, 2), len(s))


def string_of_rational(q: Dyadic) -> BitString:
    """The finite expansion of q ending in 1 (ε for q = 0); requires q < 1."""
    if q == ONE:
        raise DomainError("q must lie in [0, 1)")
    if q.num == 0:
        return EMPTY
    return BitString(format(q.num, "b").zfill(q.exp))


@dataclass(frozen=True)
class Antichain:
    """A reduced antichain: the minimal representative of a filter-closed set.

    No member is a prefix of another, and no two members are siblings, so
    the represented set of covered strings determines the members and vice
    versa.  Members are kept in length-lexicographic order.
    """

    members: tuple[BitString, ...] = ()

    def __post_init__(self) -> None:
        members = tuple(sorted(set(self.members), key=lambda s: s.lenlex_key))
        object.__setattr__(self, "members", members)
        seen = frozenset(m.bits for m in members)
        for m in members:
            for i in range(len(m.bits)):
                if m.bits[:i] in seen:
                    raise DomainError(f"antichain violation: {m.bits[:i]} ⪯ {m}")
            if m.bits and m.bits[-1] == "1" and m.bits[:-1] + "0" in seen:
                raise DomainError(f"not reduced: both children of {m.bits[:-1] or 'ε'} present")
        object.__setattr__(self, "_member_bits", seen)

    def __iter__(self) -> Iterator[BitString]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __bool__(self) -> bool:
        return bool(self.members)

    def __contains__(self, s: BitString) -> bool:
        return s in self.members

    def covers(self, s: BitString) -> bool:
        """Membership in the represented filter-closed set: s extends a member."""
        bits = s.bits
        member_bits = self._member_bits  # type: ignore[attr-defined]
        return any(bits[:i] in member_bits for i in range(len(bits) + 1))

    def covers_cone(self, s: BitString) -> bool:
        """Whether the whole cone [s] lies under the member cones."""
        member_bits = self._member_bits  # type: ignore[attr-defined]
        if not member_bits:
            return False
        deepest = max(len(b) for b in member_bits)

        def rec(b: str) -> bool:
            if any(b[:i] in member_bits for i in range(len(b) + 1)):
                return True
            if len(b) >= deepest:
                return False
            return rec(b + "0") and rec(b + "1")

        return rec(s.bits)

    def total_bits(self) -> int:
        return sum(len(m) for m in self.members)

    def render(self) -> str:
        if not self.members:
            return "-"
        return ",".join(str(m) for m in self.members)


def prefix_set_measure(strings: Iterable[BitString]) -> Dyadic:
    """Exact fair-coin measure of the union of cones [σ], σ in the set.

    Strings extending another member are dropped first so the remaining
    cones are disjoint and the measures add.
    """
    bits = {s.bits for s in strings}
    minimal = [b for b in bits if not any(b[:i] in bits for i in range(len(b)))]
    if not minimal:
        return ZERO
    exp = max(len(b) for b in minimal)
    num = sum(1 << (exp - len(b)) for b in minimal)
    return Dyadic(num, exp)


def optimal_covering(strings: Iterable[BitString]) -> Antichain:
    """The minimal strings whose cones are contained in the union of cones.

    Computed bottom-up over the binary trie cut at the deepest member: a
    node is covered when it extends a member or both children are covered;
    the minimal covered nodes form a reduced antichain.
    """
    member_bits = {s.bits for s in strings}
    if not member_bits:
        return Antichain(())
    depth = max(len(b) for b in member_bits)

    levels: list[list[str]] = [[""]]
    for _ in range(depth):
        levels.append([b + c for b in levels[-1] for c in "01"])

    covered: dict[str, bool] = {}
    for d in range(depth, -1, -1):
        for b in levels[d]:
            hit = any(b[:i] in member_bits for i in range(len(b) + 1))
            if not hit and d < depth:
                hit = covered[b + "0"] and covered[b + "1"]
            covered[b] = hit

    out: list[BitString] = []
    stack = [""]
    while stack:
        b = stack.pop()
        if covered[b]:
            out.append(BitString(b))
        elif len(b) < depth:
            stack.append(b + "0")
            stack.append(b + "1")
    return Antichain(tuple(out))


def filter_closure(strings: Iterable[BitString]) -> Antichain:
    """Minimal antichain representing the closure of the set under
    extensions and sibling merges; a string belongs to the closure exactly
    when it extends a member of the result."""
    return optimal_covering(strings)


def is_acceptable(strings: Iterable[BitString]) -> bool:
    """Whether the optimal covering has even cardinality (the empty set
    counts: its covering is empty and 0 is even)."""
    return len(optimal_covering(strings)) % 2 == 0
