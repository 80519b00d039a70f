"""Independent brute-force oracles.

Everything here recomputes a result by exhaustive expansion or fixpoint
iteration, deliberately avoiding the code paths it is used to check.  The
check suites and the test suite compare the fast implementations against
these.
"""

from __future__ import annotations

from typing import Iterable

from .classes import Tree
from .dyadic import (
    ZERO,
    Antichain,
    BitString,
    Dyadic,
    rational_of_string,
    strings_up_to,
)
from .errors import DomainError

__all__ = [
    "brute_lower_cut",
    "brute_optimal_covering",
    "expansion_at_depth",
    "greedy_expansion",
    "longest_even_prefix",
    "padding_holds",
    "rightmost_path",
    "sibling_merge_closure",
]


def expansion_at_depth(strings: Iterable[BitString], depth: int) -> frozenset[str]:
    """All length-depth words extending some member; exact picture of the
    covered class once depth reaches every member length."""
    bits = {s.bits for s in strings}
    if any(len(b) > depth for b in bits):
        raise DomainError("expansion depth must reach every member")
    out = set()
    for t in strings_up_to(depth):
        if len(t.bits) == depth and any(t.bits[:i] in bits for i in range(depth + 1)):
            out.add(t.bits)
    return frozenset(out)


def brute_optimal_covering(strings: Iterable[BitString]) -> Antichain:
    """Minimal covered nodes found by counting depth-expansion leaves under
    each candidate."""
    bits = {s.bits for s in strings}
    if not bits:
        return Antichain(())
    depth = max(len(b) for b in bits)
    leaves = expansion_at_depth([BitString(b) for b in bits], depth)

    counts: dict[str, int] = {}
    for leaf in leaves:
        for i in range(depth + 1):
            counts[leaf[:i]] = counts.get(leaf[:i], 0) + 1

    def covered(b: str) -> bool:
        return counts.get(b, 0) == 1 << (depth - len(b))

    out = []
    for t in strings_up_to(depth):
        if covered(t.bits) and (not t.bits or not covered(t.bits[:-1])):
            out.append(t)
    return Antichain(tuple(out))


def sibling_merge_closure(strings: Iterable[BitString], depth: int) -> frozenset[BitString]:
    """Fixpoint of extension and sibling-merge rules inside words of length
    ≤ depth; exact membership picture when depth reaches every member."""
    bits = {s.bits for s in strings}
    if any(len(b) > depth for b in bits):
        raise DomainError("closure depth must reach every member")
    changed = True
    while changed:
        changed = False
        for b in list(bits):
            if len(b) < depth:
                for child in (b + "0", b + "1"):
                    if child not in bits:
                        bits.add(child)
                        changed = True
            if b and b[:-1] not in bits:
                sib = b[:-1] + ("1" if b[-1] == "0" else "0")
                if sib in bits:
                    bits.add(b[:-1])
                    changed = True
    return frozenset(BitString(b) for b in bits)


def brute_lower_cut(x: Dyadic, max_len: int) -> frozenset[BitString]:
    """The cut computed on the rational side: value comparison only."""
    return frozenset(t for t in strings_up_to(max_len) if rational_of_string(t) < x)


def greedy_expansion(q: Dyadic) -> BitString:
    """Digit-by-digit greedy binary expansion of q < 1."""
    if q >= Dyadic(1, 0):
        raise DomainError("q must lie in [0, 1)")
    bits = []
    rest = q
    i = 1
    while rest != ZERO:
        step = Dyadic.pow2(i)
        if step <= rest:
            bits.append("1")
            rest = rest - step
        else:
            bits.append("0")
        i += 1
    return BitString("".join(bits))


def longest_even_prefix(s: BitString) -> BitString:
    """Scan every prefix and keep the longest with an even number of 1s."""
    best = BitString("")
    for i in range(len(s.bits) + 1):
        p = BitString(s.bits[:i])
        if p.ones() % 2 == 0:
            best = p
    return best


def padding_holds(p: int, target: int) -> bool:
    """The padding inequality p − 2·⌊log₂ p⌋ ≥ target, checked directly."""
    if p < 1:
        return False
    return p - 2 * (p.bit_length() - 1) >= target


def rightmost_path(tree: Tree, depth: int) -> BitString | None:
    """Depth-first search preferring the 1-child: the lexicographically
    greatest length-depth node, or None when the tree dies out early."""
    reach: set[str] = {n.bits for n in tree.nodes if len(n.bits) == depth}
    for d in range(depth - 1, -1, -1):
        for n in tree.nodes:
            if len(n.bits) == d and (n.bits + "0" in reach or n.bits + "1" in reach):
                reach.add(n.bits)

    if "" not in reach:
        return None
    b = ""
    while len(b) < depth:
        if b + "1" in reach:
            b += "1"
        elif b + "0" in reach:
            b += "0"
        else:  # unreachable given the bookkeeping above
            return None
    return BitString(b)
