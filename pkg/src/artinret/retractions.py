"""Synthesis and verification of ordinary retractions onto parabolic subgroups.

An ordinary retraction onto the parabolic generated by X fixes X pointwise
and sends every other generator to a generator in X or to the identity.  For
a retract-compatible matrix, removing x maps it to a neighbour y with
minimal label m_{x,y} (psi); for a parabolic-retract-compatible matrix,
removing x either kills it (singleton odd-component block) or applies psi
inside its block (phi).  Retractions onto an arbitrary X compose one-removal
steps in lexicographic order.

Every synthesized map is checked relation by relation: a pair (s, t) with
finite label m maps to images u, v, and the relation survives exactly when
u = v, or exactly one image is trivial and m is even (both sides collapse to
v^(m/2)), or u != v and Pi(u, v, m) = Pi(v, u, m) holds in the dihedral
parabolic on {u, v}, decided by the Garside engine.  The divisibility facts
behind the psi choice are asserted at synthesis time; their failure would
contradict retract-compatibility, so it is reported as an internal error
rather than an unverified map.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .classifier import is_parabolic_retract_compatible, is_retract_compatible
from .coxeter import CoxeterMatrix, is_even, is_finite, odd_components, submatrix
from .dihedral import DihedralPresentation, words_equal
from .words import Word, pi_word


class SynthesisInternalError(RuntimeError):
    """A divisibility claim guaranteed by compatibility failed; classifier bug."""


@dataclass(frozen=True)
class GeneratorMap:
    """Ordinary generator map onto a target subset; None images mean identity."""

    source: CoxeterMatrix
    target_set: frozenset[str]
    assignment: Mapping[str, str | None]

    def __post_init__(self) -> None:
        gens = set(self.source.generators)
        if not self.target_set <= gens:
            raise ValueError("target set must be a subset of the source generators")
        if set(self.assignment) != gens:
            raise ValueError("assignment must cover exactly the source generators")
        for g, image in self.assignment.items():
            if g in self.target_set and image != g:
                raise ValueError(f"retraction must fix target generator {g!r}")
            if image is not None and image not in self.target_set:
                raise ValueError(f"image of {g!r} must lie in the target set or be the identity")

    def apply(self, w: Word) -> Word:
        """Substitute generator images (identity deletes) and freely reduce."""
        foreign = w.generators() - set(self.source.generators)
        if foreign:
            raise ValueError(f"word uses foreign generator {sorted(foreign)[0]!r}")
        return Word.from_syllables(
            (image, exp)
            for name, exp in w.syllables
            if (image := self.assignment[name]) is not None
        )


class StepRule(Enum):
    PSI_MAP = "PsiMap"
    PHI_SINGLETON_TO_IDENTITY = "PhiSingletonToIdentity"
    PHI_VIA_PSI = "PhiViaPsi"


@dataclass(frozen=True)
class RetractionStep:
    removed: str
    rule: StepRule
    target: str | None  # the generator the removed one maps to, if any


@dataclass(frozen=True)
class RetractionTrace:
    steps: tuple[RetractionStep, ...] = ()


def synth_psi(m: CoxeterMatrix, x: str) -> GeneratorMap:
    """Retraction of a retract-compatible matrix killing no generator.

    Sends x to a neighbour y with minimal label (ties broken by name) and
    fixes everything else.  Minimality makes m_{x,y} divide every m_{x,y'},
    and then m_{y,z} divides m_{x,z} for all other z, so every relation
    through x survives by the Pi-divisibility identity.
    """
    if x not in m.generators:
        raise ValueError(f"unknown generator {x!r}")
    if m.rank < 2:
        raise ValueError("psi needs at least two generators")
    if not is_retract_compatible(m).compatible:
        raise ValueError("matrix is not retract-compatible")
    others = sorted(g for g in m.generators if g != x)
    y = min(others, key=lambda g: (m.label(x, g), g))
    for other in others:
        if m.label(x, other) % m.label(x, y) != 0:
            raise SynthesisInternalError(
                f"m_{{{x},{y}}} = {m.label(x, y)} does not divide m_{{{x},{other}}} = {m.label(x, other)}"
            )
        if other != y and m.label(x, other) % m.label(y, other) != 0:
            raise SynthesisInternalError(
                f"m_{{{y},{other}}} = {m.label(y, other)} does not divide m_{{{x},{other}}} = {m.label(x, other)}"
            )
    assignment = {g: (y if g == x else g) for g in m.generators}
    return GeneratorMap(m, frozenset(others), assignment)


def synth_phi(m: CoxeterMatrix, x: str) -> GeneratorMap:
    """One-generator removal for a parabolic-retract-compatible matrix."""
    if x not in m.generators:
        raise ValueError(f"unknown generator {x!r}")
    if not is_parabolic_retract_compatible(m).compatible:
        raise ValueError("matrix is not parabolic-retract-compatible")
    block = odd_components(m).block_of(x)
    others = frozenset(g for g in m.generators if g != x)
    if len(block) == 1:
        assignment: dict[str, str | None] = {g: (None if g == x else g) for g in m.generators}
        return GeneratorMap(m, others, assignment)
    psi = synth_psi(submatrix(m, block), x)
    assignment = {g: (psi.assignment[x] if g == x else g) for g in m.generators}
    return GeneratorMap(m, others, assignment)


def _phi_step(m: CoxeterMatrix, x: str, phi: GeneratorMap) -> RetractionStep:
    target = phi.assignment[x]
    if target is None:
        return RetractionStep(x, StepRule.PHI_SINGLETON_TO_IDENTITY, None)
    if len(odd_components(m).block_of(x)) == m.rank:
        return RetractionStep(x, StepRule.PSI_MAP, target)  # whole matrix is one odd block
    return RetractionStep(x, StepRule.PHI_VIA_PSI, target)


def synth_retraction(m: CoxeterMatrix, subset: frozenset[str] | set[str]) -> tuple[GeneratorMap, RetractionTrace]:
    """Ordinary retraction onto the parabolic generated by ``subset``.

    Removes the complement one generator at a time in lexicographic order,
    applying phi on successive submatrices, and composes the steps into one
    generator map.
    """
    target = frozenset(subset)
    unknown = target - set(m.generators)
    if unknown:
        raise ValueError(f"unknown generator {sorted(unknown)[0]!r}")
    if not is_parabolic_retract_compatible(m).compatible:
        raise ValueError("matrix is not parabolic-retract-compatible")
    composed: dict[str, str | None] = {g: g for g in m.generators}
    steps: list[RetractionStep] = []
    current = m
    for x in sorted(set(m.generators) - target):
        phi = synth_phi(current, x)
        steps.append(_phi_step(current, x, phi))
        composed = {
            g: (phi.assignment[image] if image is not None else None)
            for g, image in composed.items()
        }
        current = submatrix(current, [g for g in current.generators if g != x])
    return GeneratorMap(m, target, composed), RetractionTrace(tuple(steps))


@dataclass(frozen=True)
class ConjugatedRetraction:
    """g -> alpha * r(alpha^-1 g alpha) * alpha^-1, a retraction onto the
    conjugate parabolic alpha A_X alpha^-1."""

    base: GeneratorMap
    conjugator: Word

    def apply(self, w: Word) -> Word:
        inner = self.base.apply(w.conjugated_by(self.conjugator.inverse()))
        return inner.conjugated_by(self.conjugator)


def conjugate_retraction(r: GeneratorMap, alpha: Word) -> ConjugatedRetraction:
    return ConjugatedRetraction(r, alpha)


@dataclass(frozen=True)
class VerificationResult:
    verified: bool
    failed_pair: tuple[str, str] | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.verified


def verify_retraction(m: CoxeterMatrix, r: GeneratorMap) -> VerificationResult:
    """Check the homomorphism condition on every defining relation.

    Also re-asserts that r fixes its target set pointwise and is ordinary,
    even though construction enforces both.
    """
    for g in sorted(r.target_set):
        if r.assignment[g] != g:
            return VerificationResult(False, (g, g), "map moves a target generator")
    for g in sorted(m.generators):
        image = r.assignment[g]
        if image is not None and image not in r.target_set:
            return VerificationResult(False, (g, g), "map is not ordinary")
    for s, t, label in m.pairs():
        if not is_finite(label):
            continue
        u, v = r.assignment[s], r.assignment[t]
        if u == v:
            continue  # Pi(u, u, m) = u^m on both sides; both-trivial gives empty words
        if u is None or v is None:
            if is_even(label):
                continue  # Pi(1, v, m) = v^(m/2) = Pi(v, 1, m)
            return VerificationResult(
                False, (s, t), f"odd label {label} sent to a relation with one trivial image"
            )
        p = DihedralPresentation(m.label(u, v), min(u, v), max(u, v))
        if not words_equal(p, pi_word(u, v, label), pi_word(v, u, label)):
            return VerificationResult(
                False,
                (s, t),
                f"Pi({u},{v},{label}) != Pi({v},{u},{label}) in the dihedral parabolic with label {m.label(u, v)}",
            )
    return VerificationResult(True)
