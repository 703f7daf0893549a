"""Command-line front end.

All output is JSON on stdout (plain word text for ``apply``), deterministic
(sorted keys, fixed ordering); ``--pretty`` switches to indented JSON.  Exit
codes: 0 for success or a positive verdict, 1 for a negative mathematical
verdict (incompatible matrix, unequal words, not a homomorphism, no bounded
classification), 2 for usage or parse errors.

Subcommands::

    classify FILE                      partition or violation certificate
    synth FILE --keep a,b [--trace]    ordinary retraction onto A_{a,b}
    apply FILE --keep a,b WORD         image of WORD under that retraction
    word nf --m M|inf WORD             normal form in the dihedral group
    word eq --m M|inf W1 W2            word-problem equality
    tree classify --orders P,Q FPWORD  Bass-Serre action of an element of
                                       C[P] * C[Q] (generators x and y)
    hom list|verify|classify ...       dihedral homomorphism catalogue
    gen retract|parabolic ...          seeded example matrices

Words use the grammar ``g`` / ``g^k`` separated by spaces, with ``1`` for
the empty word; dihedral subcommands use generators ``a`` and ``b``,
free-product subcommands use ``x`` (first factor) and ``y`` (second).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .classifier import (
    CompatibilityReport,
    gen_parabolic_retractable,
    gen_retract_compatible,
    is_parabolic_retract_compatible,
)
from .coxeter import (
    INFINITY,
    CoxeterFormatError,
    CoxeterMatrix,
    Label,
    parse_coxeter,
    serialize_coxeter,
)
from .dihedral import (
    DihedralPresentation,
    ExponentPair,
    GarsideNormalForm,
    normal_form,
    words_equal,
)
from .freeprod import (
    Elliptic,
    FreeProductSignature,
    FreeProductWord,
    Vertex,
    classify_action,
    fp_normalize,
)
from .homs import HomCandidate, HomFamily, classify_image, enumerate_cases, verify_hom
from .retractions import synth_retraction
from .words import Word, WordFormatError, format_word, parse_word


class CliError(Exception):
    """Usage or parse failure; maps to exit code 2."""


def _label_to_json(value: Label) -> int | str:
    return "inf" if value == INFINITY else value


def _parse_label(text: str) -> Label:
    if text == "inf":
        return INFINITY
    try:
        value = int(text)
    except ValueError:
        raise CliError(f"label must be an integer >= 2 or 'inf', got {text!r}") from None
    if value < 2:
        raise CliError(f"label must be >= 2, got {value}")
    return value


def _emit(doc: Any, pretty: bool) -> None:
    if pretty:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(json.dumps(doc, sort_keys=True, separators=(",", ":")))


def _read_matrix(path: str) -> CoxeterMatrix:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_coxeter(text)
    except CoxeterFormatError as exc:
        raise CliError(f"{path}: {exc}") from None


def _read_word(text: str) -> Word:
    try:
        return parse_word(text)
    except WordFormatError as exc:
        raise CliError(str(exc)) from None


def _dihedral_word(text: str) -> Word:
    w = _read_word(text)
    foreign = w.generators() - {"a", "b"}
    if foreign:
        raise CliError(f"dihedral words use generators a and b, got {sorted(foreign)[0]!r}")
    return w


def _presentation(label: Label) -> DihedralPresentation:
    return DihedralPresentation(label, "a", "b")


def _keep_set(matrix: CoxeterMatrix, spec: str) -> frozenset[str]:
    names = frozenset(part for part in spec.split(",") if part)
    unknown = names - set(matrix.generators)
    if unknown:
        raise CliError(f"--keep references unknown generator {sorted(unknown)[0]!r}")
    return names


def _certificate_json(report: CompatibilityReport) -> dict[str, Any]:
    violation = report.first_violation
    assert violation is not None and violation.rule is not None
    return {
        "rule": violation.rule.value,
        "triple": list(violation.triple),
        "labels": [_label_to_json(v) for v in violation.labels],
    }


def _cmd_classify(args: argparse.Namespace) -> int:
    matrix = _read_matrix(args.file)
    report = is_parabolic_retract_compatible(matrix)
    if report.compatible:
        assert report.partition is not None and report.cross_labels is not None
        doc = {
            "compatible": True,
            "partition": [list(block) for block in report.partition.blocks],
            "cross_labels": [
                {"blocks": [i, j], "m": _label_to_json(value)}
                for (i, j), value in sorted(report.cross_labels.items())
            ],
        }
        _emit(doc, args.pretty)
        return 0
    _emit({"compatible": False, "certificate": _certificate_json(report)}, args.pretty)
    return 1


def _synth(matrix: CoxeterMatrix, keep: frozenset[str]):
    report = is_parabolic_retract_compatible(matrix)
    if not report.compatible:
        return None
    return synth_retraction(matrix, keep)


def _cmd_synth(args: argparse.Namespace) -> int:
    matrix = _read_matrix(args.file)
    keep = _keep_set(matrix, args.keep)
    result = _synth(matrix, keep)
    if result is None:
        report = is_parabolic_retract_compatible(matrix)
        _emit({"compatible": False, "certificate": _certificate_json(report)}, args.pretty)
        return 1
    retraction, trace = result
    doc: dict[str, Any] = {
        "map": {g: retraction.assignment[g] for g in matrix.generators},
    }
    if args.trace:
        doc["trace"] = [
            {"removed": step.removed, "rule": step.rule.value, "target": step.target}
            for step in trace.steps
        ]
    _emit(doc, args.pretty)
    return 0


def _cmd_apply(args: argparse.Namespace) -> int:
    matrix = _read_matrix(args.file)
    keep = _keep_set(matrix, args.keep)
    word = _read_word(args.word)
    foreign = word.generators() - set(matrix.generators)
    if foreign:
        raise CliError(f"word uses unknown generator {sorted(foreign)[0]!r}")
    result = _synth(matrix, keep)
    if result is None:
        report = is_parabolic_retract_compatible(matrix)
        _emit({"compatible": False, "certificate": _certificate_json(report)}, False)
        return 1
    retraction, _ = result
    print(format_word(retraction.apply(word)))
    return 0


def _normal_form_json(nf: GarsideNormalForm | Word | ExponentPair) -> dict[str, Any]:
    if isinstance(nf, GarsideNormalForm):
        names = nf.presentation.generator_pair
        return {
            "kind": "garside",
            "delta_power": nf.delta_power,
            "factors": [{"start": names[start], "length": length} for start, length in nf.factors],
        }
    if isinstance(nf, ExponentPair):
        return {"kind": "exponent-pair", "a": nf.gen1_sum, "b": nf.gen2_sum}
    return {"kind": "free", "word": format_word(nf)}


def _cmd_word_nf(args: argparse.Namespace) -> int:
    p = _presentation(_parse_label(args.m))
    _emit(_normal_form_json(normal_form(p, _dihedral_word(args.word))), args.pretty)
    return 0


def _cmd_word_eq(args: argparse.Namespace) -> int:
    p = _presentation(_parse_label(args.m))
    equal = words_equal(p, _dihedral_word(args.word1), _dihedral_word(args.word2))
    _emit({"equal": equal}, args.pretty)
    return 0 if equal else 1


def _parse_orders(text: str) -> FreeProductSignature:
    parts = text.split(",")
    if len(parts) != 2:
        raise CliError(f"--orders expects two comma-separated values, got {text!r}")
    return FreeProductSignature(_parse_label(parts[0]), _parse_label(parts[1]))


def _fp_word(sig: FreeProductSignature, text: str) -> FreeProductWord:
    w = _read_word(text)
    factor = {"x": 1, "y": 2}
    foreign = w.generators() - set(factor)
    if foreign:
        raise CliError(f"free-product words use generators x and y, got {sorted(foreign)[0]!r}")
    return fp_normalize([(factor[g], e) for g, e in w.syllables], sig)


def _fp_word_text(w: FreeProductWord) -> str:
    names = {1: "x", 2: "y"}
    return format_word(Word.from_syllables((names[f], e) for f, e in w.syllables))


def _vertex_json(v: Vertex) -> dict[str, Any]:
    return {"factor": v.factor, "rep": _fp_word_text(v.rep)}


def _cmd_tree_classify(args: argparse.Namespace) -> int:
    sig = _parse_orders(args.orders)
    w = _fp_word(sig, args.word)
    result = classify_action(w)
    if isinstance(result, Elliptic):
        doc: dict[str, Any] = {
            "kind": "elliptic",
            "translation_length": 0,
            "fixed_vertex": _vertex_json(result.fixed_vertex),
        }
    else:
        doc = {
            "kind": "hyperbolic",
            "translation_length": result.translation_length,
            "axis_sample": [_vertex_json(v) for v in result.axis_sample],
        }
    _emit(doc, args.pretty)
    return 0


def _family_json(family: HomFamily) -> dict[str, Any]:
    return {
        "case": family.case_id,
        "ma": _label_to_json(family.ma),
        "mb": _label_to_json(family.mb),
        "params": list(family.param_names),
        "constraints": list(family.constraints),
    }


def _hom_candidate(args: argparse.Namespace) -> HomCandidate:
    image = _read_word(args.image)
    foreign = image.generators() - {"b1", "b2"}
    if foreign:
        raise CliError(f"hom images use generators b1 and b2, got {sorted(foreign)[0]!r}")
    return HomCandidate(_parse_label(args.ma), _parse_label(args.mb), image)


def _cmd_hom_list(args: argparse.Namespace) -> int:
    families = enumerate_cases(_parse_label(args.ma), _parse_label(args.mb))
    _emit({"families": [_family_json(f) for f in families]}, args.pretty)
    return 0


def _cmd_hom_verify(args: argparse.Namespace) -> int:
    ok = verify_hom(_hom_candidate(args))
    _emit({"hom": ok}, args.pretty)
    return 0 if ok else 1


def _cmd_hom_classify(args: argparse.Namespace) -> int:
    candidate = _hom_candidate(args)
    if not verify_hom(candidate):
        raise CliError("image does not define a homomorphism; nothing to classify")
    match = classify_image(candidate, bound=args.bound)
    if match is None:
        _emit({"matched": None}, args.pretty)
        return 1
    params = {
        name: (format_word(value) if isinstance(value, Word) else value)
        for name, value in sorted(match.params.items())
    }
    _emit({"matched": {"case": match.family.case_id, "params": params}}, args.pretty)
    return 0


def _cmd_gen_retract(args: argparse.Namespace) -> int:
    matrix = gen_retract_compatible(args.n, args.seed)
    print(serialize_coxeter(matrix, pretty=args.pretty))
    return 0


def _cmd_gen_parabolic(args: argparse.Namespace) -> int:
    try:
        sizes = [int(part) for part in args.blocks.split(",") if part]
    except ValueError:
        raise CliError(f"--blocks expects comma-separated integers, got {args.blocks!r}") from None
    if not sizes:
        raise CliError("--blocks needs at least one block size")
    matrix = gen_parabolic_retractable(sizes, args.seed)
    print(serialize_coxeter(matrix, pretty=args.pretty))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="artinret",
        description="Retractions of Artin groups onto parabolic subgroups: "
        "classification, synthesis, and dihedral word-problem tools.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, **kwargs) -> argparse.ArgumentParser:
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(handler=handler)
        p.add_argument("--pretty", action="store_true", help="indent JSON output")
        return p

    p = add("classify", _cmd_classify, help="decide parabolic-retract-compatibility")
    p.add_argument("file", help="Coxeter matrix JSON file")

    p = add("synth", _cmd_synth, help="synthesize an ordinary retraction")
    p.add_argument("file")
    p.add_argument("--keep", required=True, help="comma-separated generators of the target parabolic")
    p.add_argument("--trace", action="store_true", help="include the removal steps")

    p = add("apply", _cmd_apply, help="apply a synthesized retraction to a word")
    p.add_argument("file")
    p.add_argument("--keep", required=True)
    p.add_argument("word")

    word = sub.add_parser("word", help="dihedral word problem")
    word_sub = word.add_subparsers(dest="word_command", required=True)
    p = word_sub.add_parser("nf", help="normal form")
    p.set_defaults(handler=_cmd_word_nf)
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--m", required=True, help="label: integer >= 2 or 'inf'")
    p.add_argument("word")
    p = word_sub.add_parser("eq", help="equality (exit 0 equal, 1 unequal)")
    p.set_defaults(handler=_cmd_word_eq)
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--m", required=True)
    p.add_argument("word1")
    p.add_argument("word2")

    tree = sub.add_parser("tree", help="Bass-Serre tree actions")
    tree_sub = tree.add_subparsers(dest="tree_command", required=True)
    p = tree_sub.add_parser("classify", help="elliptic/hyperbolic classification")
    p.set_defaults(handler=_cmd_tree_classify)
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--orders", required=True, help="factor orders, e.g. 2,3 or inf,4")
    p.add_argument("word", help="free-product word over x and y")

    hom = sub.add_parser("hom", help="dihedral homomorphism catalogue")
    hom_sub = hom.add_subparsers(dest="hom_command", required=True)
    p = hom_sub.add_parser("list", help="families for a parity class")
    p.set_defaults(handler=_cmd_hom_list)
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--ma", required=True)
    p.add_argument("--mb", required=True)
    p = hom_sub.add_parser("verify", help="check a candidate image (exit 0 yes, 1 no)")
    p.set_defaults(handler=_cmd_hom_verify)
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--ma", required=True)
    p.add_argument("--mb", required=True)
    p.add_argument("--image", required=True, help="word over b1 and b2")
    p = hom_sub.add_parser("classify", help="match a verified image to a family")
    p.set_defaults(handler=_cmd_hom_classify)
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--ma", required=True)
    p.add_argument("--mb", required=True)
    p.add_argument("--image", required=True)
    p.add_argument("--bound", type=int, default=4, help="conjugator search bound")

    generate = sub.add_parser("gen", help="seeded example matrices")
    gen_sub = generate.add_subparsers(dest="gen_command", required=True)
    p = gen_sub.add_parser("retract", help="retract-compatible matrix")
    p.set_defaults(handler=_cmd_gen_retract)
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p = gen_sub.add_parser("parabolic", help="parabolic-retract-compatible matrix")
    p.set_defaults(handler=_cmd_gen_parabolic)
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--blocks", required=True, help="comma-separated block sizes")
    p.add_argument("--seed", type=int, default=0)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CoxeterFormatError, WordFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
