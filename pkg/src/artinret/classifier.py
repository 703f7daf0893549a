"""Decision procedures for retract-compatible and parabolic-retract-compatible
Coxeter matrices, violation certificates, and seeded instance generators.

A matrix is retract-compatible when it is odd (all labels odd and finite)
and every triple of generators has, up to permutation, two equal labels with
the third dividing them.  It is parabolic-retract-compatible when the
generators split into blocks, each retract-compatible, with all labels
between any two blocks equal to one even-or-infinite constant.

The candidate partition is never searched: odd labels cannot cross blocks
and force co-membership along odd paths, so the connected components of the
odd-label graph are the unique possibility.  The triple test below decides
exactly whether a rank-3 matrix is parabolic-retract-compatible, which makes
"all triples pass" an independent code path for the same matrix property.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Mapping

from .coxeter import (
    INFINITY,
    CoxeterMatrix,
    Label,
    OddComponentPartition,
    is_even,
    is_finite,
    is_odd,
    matrix,
    odd_components,
    submatrix,
)


class TripleRule(Enum):
    ODD_ODD_REQUIRES_ODD = "OddOddRequiresOdd"
    ODD_EVEN_REQUIRES_EVEN = "OddEvenRequiresEven"
    DIVISIBILITY_AMONG_ODDS = "DivisibilityAmongOdds"
    EVEN_EVEN_ODD_REQUIRES_EQUAL = "EvenEvenOddRequiresEqual"


@dataclass(frozen=True)
class TripleVerdict:
    triple: tuple[str, str, str]
    labels: tuple[Label, Label, Label]  # (m_ab, m_ac, m_bc) for triple (a, b, c)
    rule: TripleRule | None  # None means the triple passes

    @property
    def passed(self) -> bool:
        return self.rule is None


def _check_labels(labels: tuple[Label, Label, Label]) -> None:
    for value in labels:
        if value != INFINITY and (not isinstance(value, int) or value < 2):
            raise ValueError(f"label must be an integer >= 2 or infinity, got {value!r}")


def check_triple(m1: Label, m2: Label, m3: Label) -> TripleRule | None:
    """Can a triple with these labels occur inside a compatible matrix?

    Returns None (pass) or the violated rule.  All-odd triples need two
    equal labels divisible by the third.  Two odd labels force the third
    odd.  With exactly one odd label the other two must both be infinite,
    or both even and equal (an even label next to an odd one forces the
    remaining label even, and two even labels across an odd edge must
    agree).  With no odd label the blocks are singletons and any mix of
    even and infinite labels is fine.
    """
    labels = (m1, m2, m3)
    _check_labels(labels)
    odd = sorted(v for v in labels if is_odd(v))
    rest = [v for v in labels if not is_odd(v)]
    if len(odd) == 3:
        x, y, z = odd
        if y == z and y % x == 0:
            return None
        return TripleRule.DIVISIBILITY_AMONG_ODDS
    if len(odd) == 2:
        return TripleRule.ODD_ODD_REQUIRES_ODD
    if len(odd) == 1:
        u, v = rest
        if u == INFINITY and v == INFINITY:
            return None
        if is_even(u) and is_even(v):
            return None if u == v else TripleRule.EVEN_EVEN_ODD_REQUIRES_EQUAL
        return TripleRule.ODD_EVEN_REQUIRES_EVEN
    return None


def _triple_verdict(m: CoxeterMatrix, a: str, b: str, c: str) -> TripleVerdict:
    labels = (m.label(a, b), m.label(a, c), m.label(b, c))
    return TripleVerdict((a, b, c), labels, check_triple(*labels))


def _first_failing_triple(m: CoxeterMatrix) -> TripleVerdict | None:
    for a, b, c in combinations(sorted(m.generators), 3):
        verdict = _triple_verdict(m, a, b, c)
        if not verdict.passed:
            return verdict
    return None


@dataclass(frozen=True)
class RetractCompatibility:
    compatible: bool
    # Exactly one of the two fields below is set on failure: the
    # lexicographically least non-odd pair, or the least failing triple.
    non_odd_pair: tuple[str, str] | None = None
    violation: TripleVerdict | None = None


def is_retract_compatible(m: CoxeterMatrix) -> RetractCompatibility:
    """Odd matrix whose every triple has two equal labels divided by the third.

    A matrix of rank <= 1 is always retract-compatible; a rank-2 matrix is
    retract-compatible iff its single label is odd.
    """
    if m.rank <= 1:
        return RetractCompatibility(True)
    for s, t, value in m.pairs():
        if not is_odd(value):
            return RetractCompatibility(False, non_odd_pair=(s, t))
    violation = _first_failing_triple(m)
    if violation is not None:
        return RetractCompatibility(False, violation=violation)
    return RetractCompatibility(True)


@dataclass(frozen=True)
class CompatibilityReport:
    compatible: bool
    partition: OddComponentPartition | None = None
    cross_labels: Mapping[tuple[int, int], Label] | None = None
    first_violation: TripleVerdict | None = None


def is_parabolic_retract_compatible(m: CoxeterMatrix) -> CompatibilityReport:
    """Decide parabolic-retract-compatibility via the odd-component partition.

    Compatible reports carry the partition and the constant label for each
    block pair; incompatible reports carry the lexicographically least
    failing triple (one always exists, by the equivalence with the triple
    criterion).
    """
    partition = odd_components(m)
    ok = all(is_retract_compatible(submatrix(m, block)).compatible for block in partition.blocks)
    cross: dict[tuple[int, int], Label] = {}
    if ok:
        for i, j in combinations(range(len(partition.blocks)), 2):
            values = {m.label(a, b) for a in partition.blocks[i] for b in partition.blocks[j]}
            if len(values) != 1:
                ok = False
                break
            cross[(i, j)] = values.pop()
    if ok:
        return CompatibilityReport(True, partition, cross)
    violation = _first_failing_triple(m)
    if violation is None:
        raise AssertionError("incompatible matrix with no failing triple; classifier bug")
    return CompatibilityReport(False, first_violation=violation)


def triples_criterion(m: CoxeterMatrix) -> bool:
    """All 3-generator submatrices are parabolic-retract-compatible.

    This is an independent code path from the partition-based decision;
    ranks <= 2 pass vacuously.
    """
    return _first_failing_triple(m) is None


def _generator_names(n: int, start: int = 0) -> list[str]:
    width = max(2, len(str(start + n)))
    return [f"g{i:0{width}d}" for i in range(start + 1, start + n + 1)]


_ODD_SEEDS = (3, 5, 7, 9, 15, 21, 27, 45, 63, 81, 105, 135)
_EVEN_CROSS = (2, 4, 6, 8, 10, 12, INFINITY)


def _odd_divisors(value: int) -> list[int]:
    return [d for d in range(3, value + 1) if value % d == 0]


def _retract_compatible_chain(n: int, rng: random.Random) -> list[int]:
    """Odd chain m_1, ..., m_{n-1} with each entry dividing the previous."""
    chain: list[int] = []
    current = rng.choice(_ODD_SEEDS)
    for _ in range(max(0, n - 1)):
        chain.append(current)
        current = rng.choice(_odd_divisors(current))
    return chain


def gen_retract_compatible(n: int, seed: int) -> CoxeterMatrix:
    """Recursive family: pick odd m_1, then divisors m_i | m_{i-1}, and set
    m_{i,j} = m_i for all j > i.  Deterministic per seed."""
    if n < 1:
        raise ValueError("need at least one generator")
    rng = random.Random(f"retract:{seed}:{n}")
    names = _generator_names(n)
    chain = _retract_compatible_chain(n, rng)
    labels = {
        (names[i], names[j]): chain[i]
        for i in range(n)
        for j in range(i + 1, n)
    }
    return matrix(names, labels)


def gen_parabolic_retractable(block_sizes: list[int], seed: int) -> CoxeterMatrix:
    """Blocks from the recursive family, joined by constant even-or-infinite
    cross labels (or no edge at all).  Deterministic per seed."""
    if not block_sizes or any(size < 1 for size in block_sizes):
        raise ValueError("block sizes must be positive")
    rng = random.Random(f"parabolic:{seed}:{','.join(map(str, block_sizes))}")
    blocks: list[list[str]] = []
    labels: dict[tuple[str, str], Label] = {}
    offset = 0
    total = sum(block_sizes)
    for size in block_sizes:
        names = [f"g{i:0{max(2, len(str(total)))}d}" for i in range(offset + 1, offset + size + 1)]
        chain = _retract_compatible_chain(size, rng)
        for i in range(size):
            for j in range(i + 1, size):
                labels[(names[i], names[j])] = chain[i]
        blocks.append(names)
        offset += size
    for bi, bj in combinations(range(len(blocks)), 2):
        cross = rng.choice(_EVEN_CROSS)
        for a in blocks[bi]:
            for b in blocks[bj]:
                labels[(a, b)] = cross
    return matrix([name for block in blocks for name in block], labels)
