"""Catalogue of homomorphisms between dihedral Artin groups that send the
first standard generator to the first standard generator.

The possible images of the second generator fall into eleven parameterized
families, organised by the parity/infinity class of the two labels
(m_A, m_B); writing delta, Delta, u for the center generator, the Garside
element and b1*b2 in the target:

    1   m_A = inf                      a2 -> any word
    2   m_A odd, m_B even or inf       a2 -> b1
    3a  m_A, m_B odd                   a2 -> b1
    3b  m_A, m_B odd, m_B | m_A        a2 -> b1^t b2 b1^-t
    4   m_A even, m_B = inf            a2 -> b1^t
    5a  m_A even, m_B odd              a2 -> delta^t1 b1^t2
    5b  m_A even (4 | m_A), m_B odd    a2 -> b1^-1 beta Delta^t beta^-1
    5c  m_A even, m_B odd              a2 -> b1^-1 beta u^t beta^-1,
                                            m_B/gcd(t, m_B) | m_A/2
    6a  m_A, m_B even, m_B != 2        a2 -> delta^t1 b1^t2
    6b  m_A, m_B even, m_B != 2        a2 -> b1^-1 beta u^t beta^-1,
                                            m_B/(2 gcd(t, m_B/2)) | m_A/2
    7   m_A even, m_B = 2              a2 -> any word

Soundness of every family is checkable by machine: instantiate and test the
single defining relation in the target group.  The families may overlap, so
classification returns the first match in the order above; a miss within the
search bound means Unknown, never a claim of non-membership.  In family 5b
only odd t is instantiated (even t collapses into 5a through Delta^2 =
delta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Iterator

from .coxeter import INFINITY, Label, is_even, is_finite, is_odd
from .dihedral import (
    DihedralPresentation,
    ExponentPair,
    GarsideNormalForm,
    Member,
    center_gen,
    centralizer_membership,
    delta,
    normal_form,
    u_elem,
    words_equal,
)
from .words import Word, abelianize, free_reduce, gen

TARGET_GEN1 = "b1"
TARGET_GEN2 = "b2"

CASE_ORDER = ("1", "2", "3a", "3b", "4", "5a", "5b", "5c", "6a", "6b", "7")


def target_presentation(mb: Label) -> DihedralPresentation:
    return DihedralPresentation(mb, TARGET_GEN1, TARGET_GEN2)


@dataclass(frozen=True)
class HomFamily:
    case_id: str
    ma: Label
    mb: Label
    param_names: tuple[str, ...]
    constraints: tuple[str, ...]


@dataclass(frozen=True)
class HomCandidate:
    """Concrete candidate a1 -> b1, a2 -> image_a2 (a word over b1, b2)."""

    ma: Label
    mb: Label
    image_a2: Word

    def __post_init__(self) -> None:
        foreign = self.image_a2.generators() - {TARGET_GEN1, TARGET_GEN2}
        if foreign:
            raise ValueError(f"image uses foreign generator {sorted(foreign)[0]!r}")


def _family(case_id: str, ma: Label, mb: Label) -> HomFamily:
    params: tuple[str, ...]
    constraints: tuple[str, ...]
    if case_id in ("1", "7"):
        params, constraints = ("word",), ()
    elif case_id in ("2", "3a"):
        params, constraints = (), ()
    elif case_id == "3b":
        params, constraints = ("t",), ("m_B divides m_A",)
    elif case_id == "4":
        params, constraints = ("t",), ()
    elif case_id in ("5a", "6a"):
        params, constraints = ("t1", "t2"), ()
    elif case_id == "5b":
        params, constraints = ("beta", "t"), ("4 divides m_A", "t is odd")
    elif case_id == "5c":
        params, constraints = ("beta", "t"), ("m_B / gcd(t, m_B) divides m_A / 2",)
    elif case_id == "6b":
        params, constraints = ("beta", "t"), ("m_B / (2 gcd(t, m_B / 2)) divides m_A / 2",)
    else:
        raise ValueError(f"unknown case id {case_id!r}")
    return HomFamily(case_id, ma, mb, params, constraints)


def enumerate_cases(ma: Label, mb: Label) -> list[HomFamily]:
    """The families listed for the parity/infinity class of (m_A, m_B)."""
    for value in (ma, mb):
        if value != INFINITY and (not isinstance(value, int) or value < 2):
            raise ValueError(f"label must be an integer >= 2 or infinity, got {value!r}")
    if ma == INFINITY:
        ids = ["1"]
    elif ma % 2 == 1:
        ids = ["3a", "3b"] if is_odd(mb) else ["2"]
    elif mb == INFINITY:
        ids = ["4"]
    elif mb % 2 == 1:
        ids = ["5a", "5b", "5c"]
    elif mb == 2:
        ids = ["7"]
    else:
        ids = ["6a", "6b"]
    return [_family(case_id, ma, mb) for case_id in ids]


class ConstraintError(ValueError):
    """A parameter choice violates the family's arithmetic side conditions."""


def _canonical_word(p: DihedralPresentation, w: Word) -> Word:
    """Deterministic representative of the element of A(m_B) given by w."""
    nf = normal_form(p, w)
    if isinstance(nf, GarsideNormalForm):
        return nf.as_word()
    if isinstance(nf, ExponentPair):
        return gen(p.gen1, nf.gen1_sum) * gen(p.gen2, nf.gen2_sum) if nf.gen1_sum or nf.gen2_sum else Word()
    return nf


def instantiate(family: HomFamily, **params: Any) -> HomCandidate:
    """Build the concrete candidate for a parameter choice.

    Arithmetic side conditions are checked exactly and violations raise
    :class:`ConstraintError` naming the failing condition.  Conjugators are
    canonicalized to the word of their Garside normal form before use.
    """
    ma, mb = family.ma, family.mb
    b1 = gen(TARGET_GEN1)
    case = family.case_id

    def require(ok: bool, condition: str) -> None:
        if not ok:
            raise ConstraintError(f"family {case}: constraint failed: {condition}")

    if case in ("1", "7"):
        image = params["word"]
    elif case in ("2", "3a"):
        image = b1
    elif case == "3b":
        t = params["t"]
        require(is_finite(ma) and mb != INFINITY and ma % mb == 0, "m_B divides m_A")
        image = gen(TARGET_GEN1, t) * gen(TARGET_GEN2) * gen(TARGET_GEN1, -t) if t else gen(TARGET_GEN2)
    elif case == "4":
        image = gen(TARGET_GEN1, params["t"]) if params["t"] else Word()
    elif case in ("5a", "6a"):
        p = target_presentation(mb)
        image = center_gen(p) ** params["t1"] * gen(TARGET_GEN1, params["t2"])
    else:
        p = target_presentation(mb)
        t = params["t"]
        beta = _canonical_word(p, params["beta"])
        if case == "5b":
            require(ma % 4 == 0, "4 divides m_A")
            require(t % 2 == 1, "t is odd")
            core = delta(p) ** t
        elif case == "5c":
            q = mb // math.gcd(t, mb)
            require((ma // 2) % q == 0, "m_B / gcd(t, m_B) divides m_A / 2")
            core = u_elem(p) ** t
        else:  # 6b
            q = mb // (2 * math.gcd(t, mb // 2))
            require((ma // 2) % q == 0, "m_B / (2 gcd(t, m_B / 2)) divides m_A / 2")
            core = u_elem(p) ** t
        image = b1.inverse() * beta * core * beta.inverse()
    return HomCandidate(ma, mb, image)


def pi_of_words(u: Word, v: Word, m: int) -> Word:
    """Alternating product u v u ... of length m, for word-valued letters."""
    out = Word()
    for i in range(m):
        out = out * (u if i % 2 == 0 else v)
    return out


def verify_hom(c: HomCandidate) -> bool:
    """Does a1 -> b1, a2 -> image define a homomorphism A(m_A) -> A(m_B)?

    Amounts to checking the single defining relation of A(m_A) in the
    target; for m_A = infinity there is no relation and every image works.
    """
    if c.ma == INFINITY:
        return True
    p = target_presentation(c.mb)
    b1 = gen(TARGET_GEN1)
    return words_equal(p, pi_of_words(b1, c.image_a2, c.ma), pi_of_words(c.image_a2, b1, c.ma))


@dataclass(frozen=True)
class HomMatch:
    family: HomFamily
    params: dict[str, Any]


def _conjugator_candidates(bound: int) -> Iterator[Word]:
    """All alternating words over the target generators with at most
    ``bound`` syllables and exponent magnitudes at most ``bound``."""
    exponents = [e for e in range(-bound, bound + 1) if e != 0]
    stack: list[list[tuple[str, int]]] = [[]]
    yield Word()
    for _ in range(bound):
        longer: list[list[tuple[str, int]]] = []
        for prefix in stack:
            for name in (TARGET_GEN1, TARGET_GEN2):
                if prefix and prefix[-1][0] == name:
                    continue
                for e in exponents:
                    extended = prefix + [(name, e)]
                    longer.append(extended)
                    yield Word(tuple(extended))
        stack = longer


def classify_image(c: HomCandidate, bound: int = 4) -> HomMatch | None:
    """Best-effort match of a verified candidate against the families.

    Tries the families for (m_A, m_B) in case-id order and returns the first
    parameterization that reproduces the image; conjugators and exponent
    searches are capped by ``bound``, so None means "no bounded match found",
    never a proof of non-membership.
    """
    if not verify_hom(c):
        raise ValueError("classify_image requires a verified homomorphism candidate")
    p = target_presentation(c.mb)
    b1 = gen(TARGET_GEN1)
    for family in enumerate_cases(c.ma, c.mb):
        params = _match_family(family, c, p, b1, bound)
        if params is not None:
            return HomMatch(family, params)
    return None


def _match_family(
    family: HomFamily, c: HomCandidate, p: DihedralPresentation, b1: Word, bound: int
) -> dict[str, Any] | None:
    case = family.case_id
    image = c.image_a2
    if case in ("1", "7"):
        return {"word": image}
    if case in ("2", "3a"):
        return {} if words_equal(p, image, b1) else None
    if case == "3b":
        if c.ma % c.mb != 0:
            return None
        for t in range(-bound, bound + 1):
            if words_equal(p, image, gen(TARGET_GEN1, t) * gen(TARGET_GEN2) * gen(TARGET_GEN1, -t)):
                return {"t": t}
        return None
    if case == "4":
        reduced = free_reduce(image)
        if reduced.is_identity:
            return {"t": 0}
        if reduced.syllable_length() == 1 and reduced.syllables[0][0] == TARGET_GEN1:
            return {"t": reduced.syllables[0][1]}
        return None
    if case in ("5a", "6a"):
        verdict = centralizer_membership(p, image, 1, 1)
        if isinstance(verdict, Member):
            return {"t1": verdict.delta_exp, "t2": verdict.gen1_exp}
        return None
    # Conjugated families: b1 * image = beta * core^t * beta^-1.
    target = b1 * image
    total = abelianize(target, "total")
    assert isinstance(total, int)
    if case == "5b":
        if c.ma % 4 != 0 or total % c.mb != 0:
            return None
        t = total // c.mb
        if t % 2 != 1:
            return None
        core = delta(p) ** t
    elif case == "5c":
        if total % 2 != 0:
            return None
        t = total // 2
        if (c.ma // 2) % (c.mb // math.gcd(t, c.mb)) != 0:
            return None
        core = u_elem(p) ** t
    else:  # 6b
        sums = abelianize(target, "per-generator")
        assert isinstance(sums, dict)
        t = sums.get(TARGET_GEN1, 0)
        if t != sums.get(TARGET_GEN2, 0):
            return None
        if (c.ma // 2) % (c.mb // (2 * math.gcd(t, c.mb // 2))) != 0:
            return None
        core = u_elem(p) ** t
    for beta in _conjugator_candidates(bound):
        if words_equal(p, target, beta * core * beta.inverse()):
            return {"beta": _canonical_word(p, beta), "t": t}
    return None
