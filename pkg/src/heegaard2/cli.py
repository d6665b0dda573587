"""Command-line front end.

Subcommands mirror the library: ``words`` (surgery word sequences),
``primitive`` (word classification), ``classify`` (surface counts),
``goeritz`` (presentations, normal forms, abelianizations), ``farey``
(mediant balls and the odd subtree) and ``sphere-complex`` (grafted tree
and cone models).

Exit codes: 0 success, 1 usage or validation error, 2 a verified
invariant was violated.
"""

import argparse
import json
import sys

from . import classify, complexes, farey, fgroup, goeritz, surgery


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; reserve 2 for
    # invariant violations and use 1 here instead
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(1)


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _print_complex(cpx, fmt: str) -> None:
    if fmt == "dot":
        print(complexes.to_dot(cpx))
    elif fmt == "json":
        print(json.dumps(complexes.to_json(cpx), sort_keys=True))
    else:
        print(f"vertices: {len(cpx.vertices)}")
        print(f"edges: {len(cpx.edges)}")
        print(f"triangles: {len(cpx.triangles)}")


def _cmd_words(args) -> int:
    params = surgery.SplittingParams(args.p1, args.q1, args.p2, args.q2)
    if args.index is not None:
        items = [(args.index, surgery.surgery_word(params, args.index))]
    else:
        items = list(enumerate(surgery.surgery_sequence(params), start=1))
    if args.format == "json":
        records = [{"i": i, "word": fgroup.format_word(w)} for i, w in items]
        payload = records[0] if args.index is not None else records
        print(json.dumps(payload, sort_keys=True))
    else:
        for _, w in items:
            print(fgroup.format_word(w))
    return 0


def _cmd_primitive(args) -> int:
    word = fgroup.parse_word(args.word)
    verdict = fgroup.primitive_power_root(word)
    if verdict.kind == "power-of-primitive":
        print(f"power-of-primitive({fgroup.format_word(verdict.root)}, {verdict.exponent})")
        print(f"criterion: primitive root {fgroup.format_word(verdict.root)} repeated {verdict.exponent} times")
    elif verdict.kind == "trivial":
        print("trivial")
        print("criterion: the word reduces to the empty word")
    elif verdict.kind == "primitive":
        print("primitive")
        print("criterion: whitehead reduction reaches length 1")
    else:
        print("neither")
        reason = fgroup.letter_obstruction_reason(word)
        if reason is not None:
            print(f"criterion: {reason}")
        elif fgroup.has_subword_obstruction(word):
            print("criterion: contains a flanked power x y^p X or a double square, up to symmetry")
        else:
            print("criterion: whitehead reduction stops above length 1")
    return 0


def _cmd_classify(args) -> int:
    m1 = classify.parse_summand(args.m1)
    m2 = classify.parse_summand(args.m2)
    descriptors = classify.splittings(m1, m2)
    if args.format == "json":
        payload = {
            "count": len(descriptors),
            "splittings": [
                {"case": d.case, "symmetric": d.symmetric} for d in descriptors
            ],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"count: {len(descriptors)}")
        for d in descriptors:
            print(f"splitting: case={d.case} symmetric={_bool(d.symmetric)}")
    return 0


def _format_abelian(inv: goeritz.AbelianInvariants) -> str:
    parts = []
    if inv.free_rank == 1:
        parts.append("Z")
    elif inv.free_rank > 1:
        parts.append(f"Z^{inv.free_rank}")
    i = 0
    torsion = inv.torsion
    while i < len(torsion):
        j = i
        while j < len(torsion) and torsion[j] == torsion[i]:
            j += 1
        parts.append(f"Z/{torsion[i]}" + (f"^{j - i}" if j - i > 1 else ""))
        i = j
    return " + ".join(parts) if parts else "0"


def _cmd_goeritz(args) -> int:
    presentation = goeritz.goeritz_presentation(args.case)
    if args.normal_form is not None:
        word = goeritz.parse_tokens(args.normal_form, args.case)
        nf = goeritz.normal_form(args.case, word)
        if args.format == "json":
            print(json.dumps(
                {"input": goeritz.format_tokens(word),
                 "normal_form": goeritz.format_tokens(nf)},
                sort_keys=True,
            ))
        else:
            print(goeritz.format_tokens(nf))
        return 0
    if args.abelianization:
        inv = goeritz.abelianization(presentation)
        if args.format == "json":
            print(json.dumps(
                {"free_rank": inv.free_rank, "torsion": list(inv.torsion)},
                sort_keys=True,
            ))
        else:
            print(_format_abelian(inv))
        return 0
    if args.format == "json":
        print(json.dumps(goeritz.presentation_json(presentation), sort_keys=True))
    else:
        print(goeritz.presentation_text(presentation))
    return 0


def _cmd_farey(args) -> int:
    if args.max_depth < 0:
        print("error: --max-depth must be non-negative", file=sys.stderr)
        return 1
    ball = farey.stern_brocot_ball(args.max_depth)
    cpx = farey.f_odd_subcomplex(ball) if args.odd else ball
    if args.check_tree:
        if not args.odd:
            print("error: --check-tree requires --odd", file=sys.stderr)
            return 1
        forest_ok = complexes.is_forest(cpx)
        reach_ok = farey.odd_vertices_reach_infinity(args.max_depth)
        print(f"forest: {_bool(forest_ok)}")
        print(f"connected to 1/0 within depth+2: {_bool(reach_ok)}")
        return 0 if forest_ok and reach_ok else 2
    _print_complex(cpx, args.format)
    return 0


def _cmd_sphere_complex(args) -> int:
    if args.cone is not None:
        cpx = complexes.sp_cone_model(args.cone)
        ok = complexes.cone_check(cpx)
        if args.format in ("dot", "json"):
            _print_complex(cpx, args.format)
        else:
            print(f"vertices: {len(cpx.vertices)}")
            print(f"edges: {len(cpx.edges)}")
            print(f"cone: {_bool(ok)}")
        return 0 if ok else 2
    missing = [
        name
        for name, value in (
            ("--blacks", args.blacks),
            ("--whites-per-black", args.whites_per_black),
            ("--farey-depth", args.farey_depth),
        )
        if value is None
    ]
    if missing:
        print(f"error: missing {', '.join(missing)} (or use --cone)", file=sys.stderr)
        return 1
    cpx = complexes.haken_complex_model(
        args.blacks, args.whites_per_black, args.farey_depth
    )
    ok = complexes.is_tree(cpx)
    if args.format in ("dot", "json"):
        _print_complex(cpx, args.format)
    else:
        print(f"vertices: {len(cpx.vertices)}")
        print(f"edges: {len(cpx.edges)}")
        print(f"tree: {_bool(ok)}")
    return 0 if ok else 2


def build_parser() -> _Parser:
    parser = _Parser(prog="heegaard2", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("words", help="surgery word sequence for summand parameters")
    p.add_argument("--p1", type=int, required=True)
    p.add_argument("--q1", type=int, required=True)
    p.add_argument("--p2", type=int, required=True)
    p.add_argument("--q2", type=int, default=1)
    p.add_argument("--index", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_words)

    p = sub.add_parser("primitive", help="classify a word over x, y, X, Y")
    p.add_argument("word")
    p.set_defaults(func=_cmd_primitive)

    p = sub.add_parser("classify", help="count genus-two surfaces of a connected sum")
    p.add_argument("--m1", required=True, help="lens:p,q or s2xs1")
    p.add_argument("--m2", required=True, help="lens:p,q or s2xs1")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("goeritz", help="Goeritz presentations and word problems")
    p.add_argument("--case", choices=goeritz.CASES, required=True)
    p.add_argument("--normal-form", dest="normal_form", default=None,
                   help='token word, e.g. "d b d"')
    p.add_argument("--abelianization", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_goeritz)

    p = sub.add_parser("farey", help="mediant balls and the odd subtree")
    p.add_argument("--max-depth", dest="max_depth", type=int, required=True)
    p.add_argument("--odd", action="store_true")
    p.add_argument("--check-tree", dest="check_tree", action="store_true")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.set_defaults(func=_cmd_farey)

    p = sub.add_parser("sphere-complex", help="grafted sphere-complex and cone models")
    p.add_argument("--blacks", type=int, default=None)
    p.add_argument("--whites-per-black", dest="whites_per_black", type=int, default=None)
    p.add_argument("--farey-depth", dest="farey_depth", type=int, default=None)
    p.add_argument("--cone", type=int, default=None)
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.set_defaults(func=_cmd_sphere_complex)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
