"""Free products of two cyclic groups and their Bass-Serre tree.

Elements of C[n1] * C[n2] are stored in normal form: alternating syllables
(factor, exponent) with exponents nonzero, reduced into {1, ..., n-1} for a
finite factor of order n.  Two elements are equal iff their normal forms are
identical, which makes coset comparisons (and hence tree vertices) exact.

The Bass-Serre tree has one vertex per left coset g*F1 and g*F2 and one edge
per group element g joining v(g*F1) to v(g*F2); the group acts by left
translation.  Vertices are encoded by their unique shortest coset
representative (the normal form with any trailing syllable of the vertex's
own factor stripped).  Distances are computed exactly from normal forms, and
translation lengths are validated against a brute-force ball search that is
independent of the cyclic-reduction formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .coxeter import INFINITY, is_finite

Order = int | float  # int >= 2, or INFINITY
FactorIndex = int  # 1 or 2


@dataclass(frozen=True)
class FreeProductSignature:
    order1: Order
    order2: Order

    def __post_init__(self) -> None:
        for value in (self.order1, self.order2):
            if value != INFINITY and (not isinstance(value, int) or value < 2):
                raise ValueError(f"factor order must be an integer >= 2 or infinity, got {value!r}")

    def order(self, factor: FactorIndex) -> Order:
        return self.order1 if factor == 1 else self.order2


@dataclass(frozen=True)
class FreeProductWord:
    signature: FreeProductSignature
    syllables: tuple[tuple[FactorIndex, int], ...] = ()

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def syllable_length(self) -> int:
        return len(self.syllables)

    def __mul__(self, other: "FreeProductWord") -> "FreeProductWord":
        if other.signature != self.signature:
            raise ValueError("cannot multiply words over different signatures")
        return fp_normalize(self.syllables + other.syllables, self.signature)

    def inverse(self) -> "FreeProductWord":
        return fp_normalize(tuple((f, -e) for f, e in reversed(self.syllables)), self.signature)

    def __pow__(self, n: int) -> "FreeProductWord":
        if n < 0:
            return self.inverse() ** (-n)
        result = FreeProductWord(self.signature)
        for _ in range(n):
            result = result * self
        return result


def _reduce_exponent(exp: int, order: Order) -> int:
    if order == INFINITY:
        return exp
    return exp % order


def fp_normalize(syllables: Iterable[tuple[FactorIndex, int]], sig: FreeProductSignature) -> FreeProductWord:
    """Canonical alternating form; exponents reduced modulo finite orders."""
    stack: list[list[int]] = []
    for factor, exp in syllables:
        if factor not in (1, 2):
            raise ValueError(f"factor index must be 1 or 2, got {factor!r}")
        if stack and stack[-1][0] == factor:
            stack[-1][1] += exp
        else:
            stack.append([factor, exp])
        while stack and _reduce_exponent(stack[-1][1], sig.order(stack[-1][0])) == 0:
            stack.pop()
            if len(stack) >= 2 and stack[-1][0] == stack[-2][0]:
                merged = stack.pop()
                stack[-1][1] += merged[1]
    return FreeProductWord(sig, tuple((f, _reduce_exponent(e, sig.order(f))) for f, e in stack))


def fp_word(sig: FreeProductSignature, syllables: Iterable[tuple[FactorIndex, int]]) -> FreeProductWord:
    return fp_normalize(syllables, sig)


def cyclic_reduce(w: FreeProductWord) -> tuple[FreeProductWord, FreeProductWord]:
    """Split w = conjugator * core * conjugator^-1 with core cyclically reduced.

    The core either has syllable length <= 1 or starts and ends in different
    factors.
    """
    core = w
    conjugator = FreeProductWord(w.signature)
    while core.syllable_length() >= 2 and core.syllables[0][0] == core.syllables[-1][0]:
        head = FreeProductWord(w.signature, core.syllables[:1])
        core = head.inverse() * core * head
        conjugator = conjugator * head
    return core, conjugator


@dataclass(frozen=True)
class Vertex:
    """Coset vertex v(rep * F_factor), keyed by its shortest representative."""

    factor: FactorIndex
    rep: FreeProductWord

    @staticmethod
    def of_coset(factor: FactorIndex, g: FreeProductWord) -> "Vertex":
        syllables = g.syllables
        if syllables and syllables[-1][0] == factor:
            syllables = syllables[:-1]
        return Vertex(factor, FreeProductWord(g.signature, syllables))

    def translated_by(self, g: FreeProductWord) -> "Vertex":
        return Vertex.of_coset(self.factor, g * self.rep)


def base_vertex(sig: FreeProductSignature, factor: FactorIndex) -> Vertex:
    return Vertex(factor, FreeProductWord(sig))


def tree_distance(x: Vertex, y: Vertex) -> int:
    """Exact tree distance between two coset vertices."""
    z = x.rep.inverse() * y.rep
    syllables = z.syllables
    if syllables and syllables[-1][0] == y.factor:
        syllables = syllables[:-1]
    if not syllables:
        return 0 if x.factor == y.factor else 1
    hop = 0 if syllables[0][0] == x.factor else 1
    return len(syllables) + hop


@dataclass(frozen=True)
class Elliptic:
    fixed_vertex: Vertex

    @property
    def translation_length(self) -> int:
        return 0


@dataclass(frozen=True)
class Hyperbolic:
    translation_length: int
    axis_sample: tuple[Vertex, ...]


TreeActionResult = Elliptic | Hyperbolic


def classify_action(w: FreeProductWord) -> TreeActionResult:
    """Elliptic/hyperbolic classification with exact translation length.

    A cyclically reduced core of syllable length <= 1 lies in (a conjugate
    of) a single factor, hence fixes the conjugated factor vertex; a longer
    core translates along an axis through both conjugated base vertices by
    its syllable length, which is even for an alternating cyclic word.
    """
    core, conjugator = cyclic_reduce(w)
    n = core.syllable_length()
    if n <= 1:
        factor = core.syllables[0][0] if n == 1 else 1
        return Elliptic(base_vertex(w.signature, factor).translated_by(conjugator))
    sample = (
        base_vertex(w.signature, 1).translated_by(conjugator),
        base_vertex(w.signature, 2).translated_by(conjugator),
        base_vertex(w.signature, 1).translated_by(conjugator * core),
        base_vertex(w.signature, 2).translated_by(conjugator * core),
    )
    return Hyperbolic(n, sample)


def translation_length(w: FreeProductWord) -> int:
    result = classify_action(w)
    return 0 if isinstance(result, Elliptic) else result.translation_length


def _exponent_universe(w: FreeProductWord, factor: FactorIndex) -> list[int]:
    order = w.signature.order(factor)
    if order != INFINITY:
        return list(range(order))
    core, conjugator = cyclic_reduce(w)
    bound = max(
        [1]
        + [abs(e) for f, e in w.syllables if f == factor]
        + [abs(e) for f, e in core.syllables if f == factor]
        + [abs(e) for f, e in conjugator.syllables if f == factor]
    )
    return list(range(-bound, bound + 1))


def ball_vertices(w: FreeProductWord, radius: int) -> list[Vertex]:
    """All tree vertices within ``radius`` of v(F1), by breadth-first search.

    For an infinite cyclic factor the (infinitely many) neighbours are
    restricted to exponents up to the largest magnitude appearing in w or
    its cyclic core/conjugator; this keeps the ball finite while still
    containing the axis vertices the minimum is attained on.
    """
    sig = w.signature
    exponents = {1: _exponent_universe(w, 1), 2: _exponent_universe(w, 2)}
    root = base_vertex(sig, 1)
    seen: set[Vertex] = {root}
    frontier = [root]
    for _ in range(radius):
        next_frontier: list[Vertex] = []
        for v in frontier:
            other = 3 - v.factor
            for e in exponents[v.factor]:
                neighbour = Vertex.of_coset(other, v.rep * FreeProductWord(sig, ((v.factor, e),) if e else ()))
                if neighbour not in seen:
                    seen.add(neighbour)
                    next_frontier.append(neighbour)
        frontier = next_frontier
    return list(seen)


def tree_distance_oracle(w: FreeProductWord, radius: int) -> int:
    """min over the radius-ball around v(F1) of d(x, w.x), by brute force.

    Exact whenever radius >= syllable length of w + 2; independent of
    :func:`classify_action`.
    """
    best = None
    for x in ball_vertices(w, radius):
        d = tree_distance(x, x.translated_by(w))
        if best is None or d < best:
            best = d
            if best == 0:
                break
    assert best is not None
    return best
