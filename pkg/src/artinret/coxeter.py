"""Coxeter matrices over a finite generating set.

A Coxeter matrix assigns to every unordered pair of distinct generators a
label in {2, 3, ...} or infinity; the diagonal is fixed to 1 and never
stored.  Labels are keyed on unordered pairs, so symmetry holds by
construction rather than by validation.  An absent pair means infinity,
matching the usual Coxeter-graph drawing convention (no edge = no relation).

The odd-label subgraph plays a special role everywhere in this package: its
connected components are the canonical candidate partition for the
parabolic-retraction classifier.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

INFINITY = math.inf

Label = int | float  # int >= 2, or INFINITY

_GENERATOR_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class CoxeterFormatError(ValueError):
    """Malformed Coxeter matrix document or invalid label data."""


def is_valid_generator_name(name: str) -> bool:
    return isinstance(name, str) and bool(_GENERATOR_RE.match(name))


def is_finite(label: Label) -> bool:
    return label != INFINITY


def is_odd(label: Label) -> bool:
    return is_finite(label) and label % 2 == 1


def is_even(label: Label) -> bool:
    return is_finite(label) and label % 2 == 0


def _check_label(value: Label, where: str) -> Label:
    if value == INFINITY:
        return INFINITY
    if not isinstance(value, int) or isinstance(value, bool) or value < 2:
        raise CoxeterFormatError(f"{where}: label must be an integer >= 2 or infinity, got {value!r}")
    return value


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric labelled matrix over an ordered list of generators.

    ``labels`` maps every unordered pair ``frozenset({s, t})`` of distinct
    generators to its label; construction fills absent pairs with INFINITY.
    Generator order is the input order; all tie-breaking elsewhere in the
    package uses lexicographic order on names.
    """

    generators: tuple[str, ...]
    labels: Mapping[frozenset[str], Label] = field(default_factory=dict)

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for name in self.generators:
            if not is_valid_generator_name(name):
                raise CoxeterFormatError(f"invalid generator name {name!r}")
            if name in seen:
                raise CoxeterFormatError(f"duplicate generator {name!r}")
            seen.add(name)
        full: dict[frozenset[str], Label] = {}
        for key, value in self.labels.items():
            pair = frozenset(key)
            if len(pair) != 2:
                raise CoxeterFormatError(f"self-pair or malformed pair {set(key)!r}")
            unknown = pair - seen
            if unknown:
                raise CoxeterFormatError(f"pair references unknown generator {sorted(unknown)[0]!r}")
            full[pair] = _check_label(value, f"pair {sorted(pair)}")
        for s, t in _unordered_pairs(self.generators):
            full.setdefault(frozenset((s, t)), INFINITY)
        object.__setattr__(self, "labels", full)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def label(self, s: str, t: str) -> Label:
        if s == t:
            raise CoxeterFormatError(f"diagonal label requested for {s!r}; the diagonal is fixed to 1")
        try:
            return self.labels[frozenset((s, t))]
        except KeyError:
            raise CoxeterFormatError(f"unknown generator pair ({s!r}, {t!r})") from None

    def pairs(self) -> Iterable[tuple[str, str, Label]]:
        """All pairs (s, t, label) with s < t lexicographically."""
        for s, t in _unordered_pairs(sorted(self.generators)):
            yield s, t, self.label(s, t)

    def __contains__(self, name: str) -> bool:
        return name in self.generators


def _unordered_pairs(items: Iterable[str]) -> Iterable[tuple[str, str]]:
    seq = list(items)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            yield seq[i], seq[j]


def matrix(generators: Iterable[str], labels: Mapping[tuple[str, str], Label] | None = None) -> CoxeterMatrix:
    """Convenience constructor taking labels keyed by (s, t) tuples."""
    keyed = {frozenset(pair): value for pair, value in (labels or {}).items()}
    if labels and len(keyed) != len(labels):
        raise CoxeterFormatError("duplicate pair entry (same pair given twice, possibly reversed)")
    return CoxeterMatrix(tuple(generators), keyed)


def submatrix(m: CoxeterMatrix, subset: Iterable[str]) -> CoxeterMatrix:
    """Restriction of the matrix to a generator subset, order inherited."""
    wanted = set(subset)
    unknown = wanted - set(m.generators)
    if unknown:
        raise CoxeterFormatError(f"submatrix references unknown generator {sorted(unknown)[0]!r}")
    gens = tuple(g for g in m.generators if g in wanted)
    labels = {frozenset((s, t)): m.label(s, t) for s, t in _unordered_pairs(gens)}
    return CoxeterMatrix(gens, labels)


@dataclass(frozen=True)
class OddComponentPartition:
    """Connected components of the graph whose edges carry odd finite labels.

    Blocks are listed in order of their lexicographically least member and
    each block is itself sorted.
    """

    blocks: tuple[tuple[str, ...], ...]
    block_index: Mapping[str, int]

    def block_of(self, name: str) -> tuple[str, ...]:
        return self.blocks[self.block_index[name]]


def odd_components(m: CoxeterMatrix) -> OddComponentPartition:
    parent: dict[str, str] = {g: g for g in m.generators}

    def find(g: str) -> str:
        root = g
        while parent[root] != root:
            root = parent[root]
        while parent[g] != root:  # path compression
            parent[g], g = root, parent[g]
        return root

    for s, t, value in m.pairs():
        if is_odd(value):
            rs, rt = find(s), find(t)
            if rs != rt:
                parent[max(rs, rt)] = min(rs, rt)

    grouped: dict[str, list[str]] = {}
    for g in m.generators:
        grouped.setdefault(find(g), []).append(g)
    blocks = tuple(tuple(sorted(members)) for _, members in sorted(grouped.items()))
    index = {g: i for i, block in enumerate(blocks) for g in block}
    return OddComponentPartition(blocks, index)


def parse_coxeter(text: str) -> CoxeterMatrix:
    """Parse the JSON graph format.

    ``{"generators": ["a", "b"], "labels": [{"pair": ["a", "b"], "m": 3}]}``
    where ``m`` is an integer >= 2 or the string ``"inf"``.  Absent pairs get
    label infinity.  Duplicate pairs (in either orientation) are an error.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CoxeterFormatError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise CoxeterFormatError("top-level value must be an object")
    gens = doc.get("generators")
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        raise CoxeterFormatError('"generators" must be a list of strings')
    entries = doc.get("labels", [])
    if not isinstance(entries, list):
        raise CoxeterFormatError('"labels" must be a list')
    labels: dict[frozenset[str], Label] = {}
    for i, entry in enumerate(entries):
        where = f"labels[{i}]"
        if not isinstance(entry, dict) or "pair" not in entry or "m" not in entry:
            raise CoxeterFormatError(f'{where}: expected an object with "pair" and "m"')
        pair = entry["pair"]
        if not isinstance(pair, list) or len(pair) != 2 or not all(isinstance(p, str) for p in pair):
            raise CoxeterFormatError(f"{where}: pair must be a list of two generator names")
        if pair[0] == pair[1]:
            raise CoxeterFormatError(f"{where}: self-pair [{pair[0]!r}, {pair[0]!r}] (diagonal is fixed to 1)")
        key = frozenset(pair)
        if key in labels:
            raise CoxeterFormatError(f"{where}: duplicate pair {sorted(key)}")
        raw = entry["m"]
        if raw == "inf":
            labels[key] = INFINITY
        elif isinstance(raw, int) and not isinstance(raw, bool):
            labels[key] = _check_label(raw, where)
        else:
            raise CoxeterFormatError(f'{where}: "m" must be an integer >= 2 or "inf", got {raw!r}')
    return CoxeterMatrix(tuple(gens), labels)


def serialize_coxeter(m: CoxeterMatrix, pretty: bool = False) -> str:
    """Emit the canonical JSON graph document.

    Only finite labels are written (absent means infinity); pairs appear in
    lexicographic order, so serialization is deterministic and round-trips
    through :func:`parse_coxeter`.
    """
    entries = [
        {"pair": [s, t], "m": value}
        for s, t, value in m.pairs()
        if is_finite(value)
    ]
    doc = {"generators": list(m.generators), "labels": entries}
    if pretty:
        return json.dumps(doc, indent=2, sort_keys=True)
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))
