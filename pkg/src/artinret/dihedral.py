"""Word-problem engine for dihedral Artin groups.

A(m) = < a1, a2 | Pi(a1,a2,m) = Pi(a2,a1,m) > for m in {2, 3, ...} or
infinity.  Three regimes:

* m = infinity: free group of rank 2, decided by free reduction.
* m = 2: Z x Z, decided by the pair of exponent sums.
* m >= 3 finite: Garside group.  The Garside element is Delta = Pi(a1,a2,m);
  the simple elements are 1, Delta, and the 2(m-1) proper alternating words
  of length 1..m-1.  Every element has a unique left-greedy normal form
  Delta^k * s1 ... sl where no factor is 1 or Delta and each consecutive
  pair is left-weighted.  For alternating simples, left-weightedness of
  (s, t) is exactly "last letter of s = first letter of t": with matching
  junction letters no relation can apply across the boundary, while with
  distinct letters the two factors merge into one longer alternating word
  (splitting off Delta when the merge reaches length m).

Normal forms are built by pushing one letter at a time onto the factor
chain.  A positive letter either starts a new factor, extends the last one,
or completes it to Delta (which moves to the front through the conjugation
automorphism tau: swap generators if m is odd, identity if m is even).  A
negative letter either cancels the last letter or borrows a Delta, leaving
the length-(m-1) complement as the new last factor; both cases keep the
chain left-weighted, so each push is O(1).  The pending tau twists are
tracked lazily as a parity and applied when the form is materialised.

The center is generated by delta = Delta^2 for odd m and delta = Delta for
even m, and u = a1 a2 satisfies u^m = delta (m odd), u^(m/2) = delta
(m even).  The quotient by the center is a free product of two cyclic
groups; :func:`to_center_quotient` computes images there in free-product
normal form.  A finite dihedral (Coxeter) quotient of order 2m serves as an
independent separation oracle: distinct images certify distinct elements.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import INFINITY, Label, is_finite
from .freeprod import FreeProductSignature, FreeProductWord, fp_normalize
from .words import Word, abelianize, free_reduce, gen, pi_word


@dataclass(frozen=True)
class DihedralPresentation:
    """Presentation data; gen1 < gen2 fixes the meaning of u = gen1*gen2."""

    m: Label
    gen1: str
    gen2: str

    def __post_init__(self) -> None:
        if self.m != INFINITY and (not isinstance(self.m, int) or self.m < 2):
            raise ValueError(f"label must be an integer >= 2 or infinity, got {self.m!r}")
        if not self.gen1 < self.gen2:
            raise ValueError(f"generators must satisfy gen1 < gen2, got {self.gen1!r}, {self.gen2!r}")

    @property
    def generator_pair(self) -> tuple[str, str]:
        return (self.gen1, self.gen2)


def presentation(m: Label, gen1: str = "a", gen2: str = "b") -> DihedralPresentation:
    return DihedralPresentation(m, gen1, gen2)


def delta(p: DihedralPresentation) -> Word:
    """Garside element Delta = Pi(gen1, gen2, m); finite m only."""
    _require_finite(p, "delta")
    return pi_word(p.gen1, p.gen2, p.m)


def center_gen(p: DihedralPresentation) -> Word:
    """Generator of the center: Delta^2 for odd m, Delta for even m."""
    _require_finite(p, "center_gen")
    d = delta(p)
    return d * d if p.m % 2 == 1 else d


def u_elem(p: DihedralPresentation) -> Word:
    return gen(p.gen1) * gen(p.gen2)


def _require_finite(p: DihedralPresentation, what: str) -> None:
    if not is_finite(p.m):
        raise ValueError(f"{what} requires a finite label, got infinity")


def _check_generators(p: DihedralPresentation, w: Word) -> None:
    foreign = w.generators() - {p.gen1, p.gen2}
    if foreign:
        raise ValueError(f"word uses foreign generator {sorted(foreign)[0]!r}")


# A simple element is a proper alternating prefix word, stored as
# (starting generator index, length) with index 0 = gen1 and 1 <= length <= m-1.
Simple = tuple[int, int]


@dataclass(frozen=True)
class GarsideNormalForm:
    presentation: DihedralPresentation
    delta_power: int
    factors: tuple[Simple, ...]

    def as_word(self) -> Word:
        """Re-expand the normal form into a word over the two generators."""
        p = self.presentation
        names = (p.gen1, p.gen2)
        out = delta(p) ** self.delta_power
        for start, length in self.factors:
            out = out * Word.from_syllables(
                [(names[(start + i) % 2], 1) for i in range(length)]
            )
        return out

    def canonical_length(self) -> int:
        return len(self.factors)


@dataclass(frozen=True)
class ExponentPair:
    """Image in Z x Z; complete invariant for m = 2."""

    gen1_sum: int
    gen2_sum: int


NormalForm = GarsideNormalForm | Word | ExponentPair


class _GarsideAccumulator:
    """Incremental right-multiplication by letters, for one finite m >= 3.

    Stored factors are interpreted through tau^twist, so pushing a Delta to
    the front only flips the parity instead of rewriting the whole chain.
    """

    __slots__ = ("m", "delta_power", "factors", "twist", "swaps")

    def __init__(self, m: int):
        self.m = m
        self.delta_power = 0
        self.factors: list[list[int]] = []  # [start, length]
        self.twist = 0
        self.swaps = m % 2  # tau swaps generators iff m is odd

    def _last_letter(self, start: int, length: int) -> int:
        return start if length % 2 == 1 else 1 - start

    def push(self, letter: int, sign: int) -> None:
        g = letter ^ (self.twist & self.swaps)  # letter in stored coordinates
        if sign > 0:
            self._push_positive(g)
        else:
            self._push_negative(g)

    def _push_positive(self, g: int) -> None:
        if self.factors:
            start, length = self.factors[-1]
            if self._last_letter(start, length) != g:
                if length + 1 == self.m:  # factor completes to Delta
                    self.factors.pop()
                    self.delta_power += 1
                    self.twist ^= 1
                else:
                    self.factors[-1][1] = length + 1
                return
        self.factors.append([g, 1])

    def _push_negative(self, g: int) -> None:
        if self.factors:
            start, length = self.factors[-1]
            if self._last_letter(start, length) == g:
                if length == 1:
                    self.factors.pop()
                else:
                    self.factors[-1][1] = length - 1
                return
        # Borrow a Delta: g^-1 = Delta^-1 * r with r the length-(m-1)
        # alternating complement ending in the other letter.  In stored
        # coordinates (after the twist flip) r starts with 1-g in both
        # parities, which also matches the junction letter of the previous
        # factor, so the chain stays left-weighted.
        self.delta_power -= 1
        self.twist ^= 1
        self.factors.append([1 - g, self.m - 1])

    def result(self, p: DihedralPresentation) -> GarsideNormalForm:
        flip = self.twist & self.swaps
        return GarsideNormalForm(
            p,
            self.delta_power,
            tuple((start ^ flip, length) for start, length in self.factors),
        )


def normal_form(p: DihedralPresentation, w: Word) -> NormalForm:
    """Canonical form deciding the word problem in A(m).

    m = infinity returns the freely reduced word, m = 2 the exponent pair,
    and finite m >= 3 the left-greedy Garside normal form.  Two words
    represent the same element iff their normal forms are identical.
    """
    _check_generators(p, w)
    if not is_finite(p.m):
        return free_reduce(w)
    if p.m == 2:
        sums = abelianize(w, "per-generator")
        assert isinstance(sums, dict)
        return ExponentPair(sums.get(p.gen1, 0), sums.get(p.gen2, 0))
    acc = _GarsideAccumulator(p.m)
    index = {p.gen1: 0, p.gen2: 1}
    for name, sign in w.letters():
        acc.push(index[name], sign)
    return acc.result(p)


def words_equal(p: DihedralPresentation, u: Word, v: Word) -> bool:
    return normal_form(p, u) == normal_form(p, v)


def is_central(p: DihedralPresentation, w: Word) -> bool:
    """True iff w commutes with both generators.

    For m = infinity the center is trivial, so only the empty reduced word
    passes.  For finite m >= 3 the engine cross-checks commutation against
    membership in <delta> read off the normal form; disagreement would be an
    engine bug.
    """
    _check_generators(p, w)
    if not is_finite(p.m):
        return free_reduce(w).is_identity
    g1, g2 = gen(p.gen1), gen(p.gen2)
    commutes = words_equal(p, w * g1, g1 * w) and words_equal(p, w * g2, g2 * w)
    if p.m >= 3:
        nf = normal_form(p, w)
        assert isinstance(nf, GarsideNormalForm)
        in_delta_span = not nf.factors and (p.m % 2 == 0 or nf.delta_power % 2 == 0)
        assert in_delta_span == commutes, "center membership disagrees with commutation"
    return commutes


@dataclass(frozen=True)
class Member:
    """w = delta^delta_exp * gen1^gen1_exp, confirmed by the engine."""

    delta_exp: int
    gen1_exp: int


@dataclass(frozen=True)
class NonMember:
    """Certified by a nontrivial commutator with gen1."""

    commutator: Word


def centralizer_membership(p: DihedralPresentation, w: Word, k1: int, k2: int) -> Member | NonMember:
    """Decide membership in the centralizer of delta^k1 * gen1^k2 (k2 != 0).

    That centralizer is the free abelian group generated by delta and gen1,
    so membership is equivalent to commuting with gen1.  On membership the
    exponents (s, t) with w = delta^s * gen1^t are recovered from the
    abelianization (even m) or the shape of the Garside normal form (odd m)
    and confirmed with words_equal.
    """
    _require_finite(p, "centralizer_membership")
    if k2 == 0:
        raise ValueError("k2 must be nonzero")
    _check_generators(p, w)
    g1 = gen(p.gen1)
    target = center_gen(p) ** k1 * g1 ** k2
    if not words_equal(p, w * target, target * w):
        commutator = w * g1 * w.inverse() * g1.inverse()
        assert not words_equal(p, commutator, Word())
        return NonMember(commutator)

    total = abelianize(w, "total")
    assert isinstance(total, int)
    candidates: list[tuple[int, int]] = []
    if p.m % 2 == 0:
        sums = abelianize(w, "per-generator")
        assert isinstance(sums, dict)
        x1, x2 = sums.get(p.gen1, 0), sums.get(p.gen2, 0)
        s, rem = divmod(x2, p.m // 2)
        if rem == 0:
            candidates.append((s, x1 - x2))
    else:
        nf = normal_form(p, w)
        assert isinstance(nf, GarsideNormalForm)
        lengths = {length for _, length in nf.factors}
        for t in {0} if not nf.factors else (
            {len(nf.factors)} if lengths == {1} else
            {-len(nf.factors)} if lengths == {p.m - 1} else set()
        ):
            s, rem = divmod(total - t, 2 * p.m)
            if rem == 0:
                candidates.append((s, t))
    for s, t in candidates:
        if words_equal(p, w, center_gen(p) ** s * g1 ** t):
            return Member(s, t)
    raise AssertionError("commutation test passed but no (s, t) decomposition confirmed")


@dataclass(frozen=True)
class CenterQuotientImage:
    target: FreeProductSignature
    word: FreeProductWord


def center_quotient_signature(m: int) -> FreeProductSignature:
    """Factor orders of A(m)/Z(A(m)): (2, m) for odd m, (inf, m/2) for even."""
    if m % 2 == 1:
        return FreeProductSignature(2, m)
    return FreeProductSignature(INFINITY, m // 2)


def to_center_quotient(p: DihedralPresentation, w: Word) -> CenterQuotientImage:
    """Image of w in the free-product presentation of A(m)/Z(A(m)).

    For m = 2n+1 the quotient is C[2] * C[m] with factor 1 generated by the
    class of Delta and factor 2 by the class of u; the generators rewrite as
    a1 = u^-n Delta and a2 = Delta^-1 u^(n+1) (exact identities in A(m)).
    For even m != 2 the quotient is C[inf] * C[m/2] with factor 1 the class
    of a1 and factor 2 the class of u; there a2 = a1^-1 u.
    """
    _require_finite(p, "to_center_quotient")
    if p.m == 2:
        raise ValueError("to_center_quotient requires m != 2 (the quotient of Z x Z is not a free product)")
    _check_generators(p, w)
    sig = center_quotient_signature(p.m)
    if p.m % 2 == 1:
        n = (p.m - 1) // 2
        images = {
            p.gen1: ((2, -n), (1, 1)),
            p.gen2: ((1, -1), (2, n + 1)),
        }
    else:
        images = {
            p.gen1: ((1, 1),),
            p.gen2: ((1, -1), (2, 1)),
        }
    syllables: list[tuple[int, int]] = []
    for name, sign in w.letters():
        chunk = images[name]
        if sign > 0:
            syllables.extend(chunk)
        else:
            syllables.extend((f, -e) for f, e in reversed(chunk))
    return CenterQuotientImage(sig, fp_normalize(syllables, sig))


def coxeter_quotient_eval(p: DihedralPresentation, w: Word) -> tuple[int, int]:
    """Image of w in the finite dihedral group of order 2m.

    Generators map to the two reflections (0, 1) and (1, 1) acting on Z/m by
    x -> -x and x -> 1-x, applied left to right; the result is (rotation
    index mod m, reflection flag), so gen1*gen2 is the rotation by 1.  Sound
    for inequality: distinct images certify distinct elements of A(m).
    """
    _require_finite(p, "coxeter_quotient_eval")
    _check_generators(p, w)
    refs = {p.gen1: 0, p.gen2: 1}
    rot, flip = 0, 0
    for name, exp in w.syllables:
        if exp % 2 == 0:  # reflections have order 2
            continue
        rot = (refs[name] - rot) % p.m
        flip ^= 1
    return rot, flip
