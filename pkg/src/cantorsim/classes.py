"""Depth-bounded prefix-closed trees and class-level operations on them.

A tree approximates a closed subset of Cantor space by its nodes up to a
uniform depth bound; its depth-D "paths" are the length-D nodes.  Dead ends
are judged strictly below the bound so truncation is never mistaken for a
genuine leaf.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .dyadic import BitString, prefix_set_measure, strings_up_to
from .errors import DomainError, InputError, ParseError, PreconditionError, RangeError
from .streams import EnumerationScript

__all__ = [
    "CappedReplay",
    "Tree",
    "dead_ends",
    "diagonalize",
    "graft_points",
    "intersect_randomness",
    "measure_capped_enumeration",
    "paths_at_depth",
    "tree_from_halting_oracle",
    "tree_of_complement",
]


@dataclass(frozen=True)
class Tree:
    """A finite prefix-closed set of nodes, all of length ≤ depth."""

    nodes: frozenset[BitString]
    depth: int

    def __post_init__(self) -> None:
        if self.depth < 0:
            raise DomainError("depth must be ≥ 0")
        bits = {n.bits for n in self.nodes}
        for b in bits:
            if len(b) > self.depth:
                raise DomainError(f"node {b} longer than depth bound {self.depth}")
            if b and b[:-1] not in bits:
                raise DomainError(f"not prefix-closed: {b} present without {b[:-1] or 'ε'}")

    @classmethod
    def full(cls, depth: int) -> "Tree":
        return cls(frozenset(strings_up_to(depth)), depth)

    @classmethod
    def closure_of(cls, strings: Iterable[BitString], depth: int) -> "Tree":
        """Prefix closure of the given strings, truncated at the depth bound."""
        bits: set[str] = set()
        for s in strings:
            b = s.bits[: depth + 0] if len(s.bits) <= depth else s.bits[:depth]
            for i in range(len(b) + 1):
                bits.add(b[:i])
        return cls(frozenset(BitString(b) for b in bits), depth)

    @classmethod
    def parse(cls, text: str, depth: int | None = None, source: str = "<tree>") -> "Tree":
        """One node per line (0/1 word); the ε line for the root is optional
        when any node is listed.  Rejects non-prefix-closed input naming the
        offending node."""
        bits: set[str] = set()
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                bits.add(BitString.parse(line).bits)
            except DomainError as exc:
                raise ParseError(str(exc), source=source, line=lineno)
        if bits:
            bits.add("")
        if depth is None:
            depth = max((len(b) for b in bits), default=0)
        for b in sorted(bits, key=len):
            if b and b[:-1] not in bits:
                raise ParseError(f"not prefix-closed: node {b} lacks {b[:-1] or 'ε'}", source=source)
            if len(b) > depth:
                raise ParseError(f"node {b} longer than depth bound {depth}", source=source)
        return cls(frozenset(BitString(b) for b in bits), depth)

    @classmethod
    def load(cls, path: str, depth: int | None = None) -> "Tree":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.parse(fh.read(), depth=depth, source=path)

    def has(self, s: BitString) -> bool:
        return s in self.nodes

    def render(self) -> str:
        ordered = sorted(self.nodes, key=lambda n: n.lenlex_key)
        return "\n".join(n.display() for n in ordered)


def paths_at_depth(tree: Tree, d: int) -> tuple[BitString, ...]:
    """All length-d nodes (prefix closure guarantees their ancestry)."""
    if d < 0 or d > tree.depth:
        raise RangeError(f"depth {d} outside [0, {tree.depth}]")
    return tuple(sorted((n for n in tree.nodes if len(n) == d), key=lambda n: n.lenlex_key))


def dead_ends(tree: Tree) -> tuple[BitString, ...]:
    """Nodes strictly below the depth bound with no child in the tree,
    listed length-lexicographically."""
    out = [
        n
        for n in tree.nodes
        if len(n) < tree.depth and not any(c in tree.nodes for c in n.children())
    ]
    return tuple(sorted(out, key=lambda n: n.lenlex_key))


def graft_points(trees: Sequence[Tree], depth: int) -> tuple[BitString, ...]:
    """The grafting targets of the diagonal construction.

    σ_n is the n-th dead end of the base tree; the target extending σ_n is
    the length-lexicographically least extension that also extends a dead
    end of the n-th tree.  Raises a precondition error naming the first n
    for which no target exists.
    """
    if not trees:
        raise InputError("need at least one tree")
    for i, t in enumerate(trees):
        if t.depth != depth:
            raise InputError(f"tree {i} has depth {t.depth}, expected {depth}")
    base = trees[0]
    ends0 = dead_ends(base)
    if len(ends0) < len(trees):
        raise PreconditionError(
            f"base tree offers {len(ends0)} dead ends; none left for n={len(ends0)}"
        )
    if not paths_at_depth(base, depth):
        raise PreconditionError("base tree reaches no depth-%d path (n=0)" % depth)
    taus: list[BitString] = []
    for n, t_n in enumerate(trees):
        sigma = ends0[n]
        ends_n = dead_ends(t_n)
        candidates = [d for d in ends_n if sigma.is_prefix_of(d)]
        if any(d.is_prefix_of(sigma) for d in ends_n):
            candidates.append(sigma)
        if not candidates:
            raise PreconditionError(f"no dead end of tree {n} reachable above {sigma}")
        taus.append(min(candidates, key=lambda s: s.lenlex_key))
    return tuple(taus)


def diagonalize(trees: Sequence[Tree], depth: int) -> Tree:
    """Copy the base tree above each graft target, truncated at the bound.

    The result meets every cone [τ_n] in a depth-D path while the n-th tree
    misses it (the target extends one of its dead ends).
    """
    taus = graft_points(trees, depth)
    base = trees[0]
    bits = {n.bits for n in base.nodes}
    for tau in taus:
        for i in range(len(tau) + 1):
            bits.add(tau.bits[:i])
        for node in base.nodes:
            if len(tau) + len(node) <= depth:
                bits.add(tau.bits + node.bits)
    return Tree(frozenset(BitString(b) for b in bits), depth)


@dataclass(frozen=True)
class CappedReplay:
    """Replay record of one index under the measure cap.

    stages[s] is the admitted set after stage s; log holds one
    (stage, item, admitted) entry per processed event.
    """

    stages: tuple[frozenset[BitString], ...]
    frozen_at: int | None
    log: tuple[tuple[int, BitString, bool], ...]

    def final(self) -> frozenset[BitString]:
        return self.stages[-1]


def measure_capped_enumeration(
    script: EnumerationScript, n: int, horizon: int
) -> dict[int, CappedReplay]:
    """Replay each index admitting a string only while the covered measure
    stays ≤ 1 − 1/n; the first refusal freezes the index for good."""
    if n < 1:
        raise DomainError("the cap parameter n must be ≥ 1")
    if horizon < 0:
        raise RangeError("horizon must be ≥ 0")
    cap = Fraction(n - 1, n)
    indices = script.indices()
    admitted: dict[int, set[BitString]] = {e: set() for e in indices}
    frozen_at: dict[int, int | None] = {e: None for e in indices}
    logs: dict[int, list[tuple[int, BitString, bool]]] = {e: [] for e in indices}
    snaps: dict[int, list[frozenset[BitString]]] = {e: [] for e in indices}

    pos = 0
    events = script.events
    for s in range(horizon + 1):
        while pos < len(events) and events[pos].stage == s:
            ev = events[pos]
            pos += 1
            if not isinstance(ev.item, BitString):
                raise InputError(f"index {ev.index} carries a non-string item at stage {s}")
            e = ev.index
            if frozen_at[e] is not None:
                logs[e].append((s, ev.item, False))
                continue
            trial = admitted[e] | {ev.item}
            if prefix_set_measure(trial).as_fraction() <= cap:
                admitted[e].add(ev.item)
                logs[e].append((s, ev.item, True))
            else:
                frozen_at[e] = s
                logs[e].append((s, ev.item, False))
        for e in indices:
            snaps[e].append(frozenset(admitted[e]))
    return {
        e: CappedReplay(tuple(snaps[e]), frozen_at[e], tuple(logs[e])) for e in indices
    }


def tree_of_complement(strings: Iterable[BitString], depth: int) -> Tree:
    """Nodes with no prefix among the given strings: the class left after
    removing the covered cones."""
    bits = {s.bits for s in strings}
    keep: set[BitString] = set()
    frontier = [""]
    while frontier:
        b = frontier.pop()
        if b in bits:
            continue
        keep.add(BitString(b))
        if len(b) < depth:
            frontier.append(b + "0")
            frontier.append(b + "1")
    return Tree(frozenset(keep), depth)


def intersect_randomness(tree: Tree, machine, c: int, t: int) -> Tree:
    """Node-wise intersection with the stage-t complexity-constrained tree
    at the same depth; prefix closure is preserved by intersection."""
    from .complexity import randomness_class_tree

    constrained = randomness_class_tree(machine, c, t, tree.depth)
    return Tree(tree.nodes & constrained.nodes, tree.depth)


def tree_from_halting_oracle(
    oracle: Callable[[BitString, int], bool], e: int, depth: int
) -> Tree:
    """Nodes on which the oracle has not yet halted within the length budget.

    Sweeps length-lexicographically; a node kept under a dropped parent
    witnesses a monotonicity violation and is reported as an input error.
    """
    kept: set[str] = set()
    for s in strings_up_to(depth):
        if not oracle(s, e):
            if s.bits and s.bits[:-1] not in kept:
                raise InputError(f"oracle not monotone at {s}")
            kept.add(s.bits)
    return Tree(frozenset(BitString(b) for b in kept), depth)
