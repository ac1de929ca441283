"""Command line interface: ``finkan <command> ...``.

Documents are printed in canonical form on standard output.  Reports print
as plain text, or as canonical JSON with ``--json``.  Exit status is 0 on
success, 1 when validation or a law check fails, 2 on usage or parse errors.
"""
import argparse
import sys

from . import documents
from .category import opposite
from .checker import check_adjunction, lan_candidate, parse_probes, ran_candidate
from .errors import FinKanError, GenerationExhausted, ParseError, SemanticError
from .generators import GenBounds, gen_category, gen_functor, gen_presheaf
from .left_kan import lan, lan_counit, lan_unit, tensor
from .presheaf import FinFunctor, NatTrans, Presheaf, enumerate_nat
from .right_kan import ran, ran_counit, ran_unit
from .yoneda import yoneda_comparison, yoneda_obj


class UsageError(Exception):
    pass


def _load(path, kinds):
    doc = documents.load(path)
    if doc.kind not in kinds:
        raise UsageError(f"{path}: expected a {' or '.join(kinds)} document, got {doc.kind}")
    return doc


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"{args.command} needs --{name.replace('_', '-')}")


def _functor(args) -> FinFunctor:
    _need(args, "functor")
    return _load(args.functor, ("functor",)).value


def _presheaf(path) -> Presheaf:
    return _load(path, ("presheaf", "copresheaf")).value


def _emit_record(args, record, lines):
    if args.json:
        sys.stdout.write(documents.dumps(record))
    else:
        sys.stdout.write("".join(line + "\n" for line in lines))


def cmd_validate(args):
    for path in args.files:
        doc = documents.load(path)
        print(f"{path}: ok ({doc.kind})")
    return 0


def cmd_yoneda(args):
    _need(args, "object")
    if args.presheaf is not None:
        v = _presheaf(args.presheaf)
        comparison = yoneda_comparison(v, args.object)
        table = {p: documents.nattrans_record(xi)["components"] for p, xi in comparison.backward.items()}
        record = {"object": args.object, "size": str(len(table)), "elements": table}
        lines = [f"{len(table)} elements at {args.object} correspond to {len(comparison.backward)} transformations"]
        lines += [f"{p} <-> {documents.compact(c)}" for p, c in sorted(table.items())]
        _emit_record(args, record, lines)
        return 0
    if not args.files:
        raise UsageError("yoneda needs a category file or --presheaf")
    C = _load(args.files[0], ("category",)).value
    sys.stdout.write(documents.serialize(yoneda_obj(C, args.object)))
    return 0


def cmd_nat(args):
    _need(args, "left", "right")
    u, v = _presheaf(args.left), _presheaf(args.right)
    family = enumerate_nat(u, v)
    comps = [documents.nattrans_record(t)["components"] for t in family]
    record = {"size": str(len(family)), "transformations": comps}
    lines = [f"{len(family)} natural transformations"]
    lines += [documents.compact(c) for c in comps]
    _emit_record(args, record, lines)
    return 0


def cmd_ran(args):
    _need(args, "presheaf")
    out = ran(_functor(args), _presheaf(args.presheaf), checked=not args.unchecked)
    sys.stdout.write(documents.serialize(Presheaf(out.base, out.elements, out.action)))
    return 0


def cmd_lan(args):
    _need(args, "presheaf")
    out = lan(_functor(args), _presheaf(args.presheaf), checked=not args.unchecked)
    sys.stdout.write(documents.serialize(Presheaf(out.base, out.elements, out.action)))
    return 0


def cmd_tensor(args):
    _need(args, "left", "right")
    v = _presheaf(args.left)
    w = _presheaf(args.right)
    if w.base != opposite(v.base):
        raise SemanticError("--right must be a copresheaf on the base of --left")
    T = tensor(v, w)
    classes = [[list(pair) for pair in T.members[rep]] for rep in T.classes]
    noun = "class" if len(T) == 1 else "classes"
    lines = [f"{len(T)} {noun}"]
    lines += ["  " + " ~ ".join("(" + ", ".join(pair) + ")" for pair in T.members[rep]) for rep in T.classes]
    _emit_record(args, {"size": str(len(T)), "classes": classes}, lines)
    return 0


def cmd_unit(args):
    _need(args, "presheaf")
    f, checked = _functor(args), not args.unchecked
    v = _presheaf(args.presheaf)
    t = ran_unit(f, v, checked=checked) if args.mode == "ran" else lan_unit(f, v, checked=checked)
    sys.stdout.write(documents.serialize(_plain(t)))
    return 0


def cmd_counit(args):
    _need(args, "presheaf")
    f, checked = _functor(args), not args.unchecked
    v = _presheaf(args.presheaf)
    t = ran_counit(f, v, checked=checked) if args.mode == "ran" else lan_counit(f, v, checked=checked)
    sys.stdout.write(documents.serialize(_plain(t)))
    return 0


def _plain(t):
    """Forget the extra bookkeeping of extension presheaves before printing."""
    def strip(u):
        return Presheaf(u.base, u.elements, u.action)

    return NatTrans(strip(t.source), strip(t.target), {x: c.assignment for x, c in t.components.items()})


def cmd_check_adjunction(args):
    f = _functor(args)
    checked = not args.unchecked
    K = ran_candidate(f, checked) if args.mode == "ran" else lan_candidate(f, checked)
    report = check_adjunction(K, parse_probes(args.probes, K.left_base), parse_probes(args.probes, K.right_base))
    record = {
        "mode": args.mode,
        "ok": "true" if report.ok else "false",
        "checked": {k: str(v) for k, v in sorted(report.checked.items())},
        "failures": [{k: str(v) for k, v in w.items()} for w in report.all_failures()],
    }
    _emit_record(args, record, report.summary_lines())
    return 0 if report.ok else 1


def cmd_gen(args):
    bounds = GenBounds.parse(args.bounds, args.seed) if args.bounds else GenBounds(seed=args.seed)
    C = gen_category(bounds)
    if args.kind == "category":
        value = C
    elif args.kind == "presheaf":
        value = gen_presheaf(bounds, C)
    else:
        D = gen_category(bounds.with_seed(bounds.seed + 1))
        value = gen_functor(bounds, C, D)
    sys.stdout.write(documents.serialize(value))
    return 0


COMMANDS = {
    "validate": cmd_validate,
    "yoneda": cmd_yoneda,
    "nat": cmd_nat,
    "ran": cmd_ran,
    "lan": cmd_lan,
    "tensor": cmd_tensor,
    "unit": cmd_unit,
    "counit": cmd_counit,
    "check-adjunction": cmd_check_adjunction,
    "gen": cmd_gen,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="finkan", description="Kan extensions of finite presheaves.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, files=False):
        p = sub.add_parser(name, help=help_text)
        if files:
            p.add_argument("files", nargs="*", metavar="FILE")
        p.add_argument("--json", action="store_true", help="print reports as canonical JSON")
        p.add_argument("--unchecked", action="store_true", help="skip re-validation of computed results")
        return p

    add("validate", "parse and validate documents", files=True)
    p = add("yoneda", "representable presheaf, or the element/transformation correspondence", files=True)
    p.add_argument("--object")
    p.add_argument("--presheaf")
    p = add("nat", "enumerate natural transformations")
    p.add_argument("--left")
    p.add_argument("--right")
    for name in ("ran", "lan"):
        p = add(name, f"{'right' if name == 'ran' else 'left'} Kan extension along a functor")
        p.add_argument("--functor")
        p.add_argument("--presheaf")
    p = add("tensor", "tensor product of a presheaf with a copresheaf")
    p.add_argument("--left")
    p.add_argument("--right")
    for name in ("unit", "counit"):
        p = add(name, f"{name} of an extension adjunction")
        p.add_argument("--mode", choices=("ran", "lan"), required=True)
        p.add_argument("--functor")
        p.add_argument("--presheaf")
    p = add("check-adjunction", "check adjunction laws on probe presheaves")
    p.add_argument("--mode", choices=("ran", "lan"), required=True)
    p.add_argument("--functor")
    p.add_argument("--probes", default="std", help="std or seed:<n>")
    p = add("gen", "generate a random document")
    p.add_argument("kind", nargs="?", default="category", choices=("category", "functor", "presheaf"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bounds", help="max objects, morphisms, element set size as o,m,e")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ParseError, OSError, GenerationExhausted) as exc:
        print(f"finkan: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        # SemanticError is a ValueError; anything else here came from a malformed option
        if not isinstance(exc, SemanticError):
            print(f"finkan: error: {exc}", file=sys.stderr)
            return 2
        print(f"invalid: {type(exc).__name__}: {exc}")
        print(f"finkan: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except FinKanError as exc:
        print(f"failed: {type(exc).__name__}: {exc}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
