"""Command line front end.

    finegrad construct --desc "sl-outer:m=1,s=0,d=00;10" --n 4
    finegrad verify grading.json
    finegrad classify --algebra sp --n 8
    finegrad refines --a fine.json --b coarse.json
    finegrad profile --desc "sympl:m=1,s=1,d=11"
    finegrad export --desc pauli:n=3 --out pauli3.json

Exit codes: 0 ok, 1 verification failure (or a failed computation), 2 usage error.
Besides descriptors, --desc accepts ``pauli:n=N`` and ``cartan:n=N`` (on sl_N),
``octonions`` and ``g2`` (the induced grading on Der of the octonions).
"""

import argparse
import sys

from .classify import MODES, DEFAULT_MODE, classify, construct
from .constructions import cartan_matrix_grading, derivation_grading, octonions, pauli
from .cyclofield import make_field
from .constructions.descriptor import Descriptor, DescriptorError
from .grading import GradingError, component_profile, is_refinement, sl_algebra, universal_group, verify_grading
from .serialize import dumps, grading_to_json, load_grading


class UsageError(Exception):
    pass


def _named(text):
    head, _, rest = text.partition(":")
    if head in ("pauli", "cartan"):
        if not rest.startswith("n="):
            raise UsageError(f"expected {head}:n=N, got {text!r}")
        try:
            n = int(rest[2:])
        except ValueError:
            raise UsageError(f"bad size in {text!r}") from None
        if n < 2:
            raise UsageError("n must be at least 2")
        g = pauli(n) if head == "pauli" else cartan_matrix_grading(n)
        return universal_group(g.restrict(sl_algebra(g.algebra.field, n)))[1], n
    if text == "octonions":
        return octonions()[1], None
    if text == "g2":
        return derivation_grading(octonions()[1])[1], None
    return None


def build(text, n=None):
    """(grading, canonical text) for a --desc argument."""
    named = _named(text)
    if named is not None:
        g, size = named
        if n is not None and size != n:
            raise UsageError(f"{text} is on sl_{size}, not n = {n}")
        return g, text
    try:
        desc = Descriptor.parse(text)
        desc.validate()
    except DescriptorError as e:
        raise UsageError(str(e)) from None
    if n is not None and desc.n != n:
        raise UsageError(f"descriptor has n = {desc.n}, not {n}")
    try:
        return construct(desc), desc.to_text()
    except DescriptorError as e:
        raise UsageError(str(e)) from None


def _emit(args, obj):
    text = dumps(obj)
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _load(path, field=None):
    try:
        return load_grading(path, field)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    except ValueError as e:
        if isinstance(e, GradingError):
            raise
        raise UsageError(f"{path} is not valid JSON: {e}") from None


def cmd_construct(args):
    g, text = build(args.desc, args.n)
    _emit(args, grading_to_json(g, text))
    return 0


def cmd_export(args):
    if not args.out:
        raise UsageError("export needs --out")
    return cmd_construct(args)


def cmd_verify(args):
    try:
        g = _load(args.file)
    except GradingError as e:
        _emit(args, {"ok": False, "direct_sum": False, "violations": [], "message": str(e)})
        return 1
    rep = verify_grading(g)
    _emit(args, {
        "ok": rep.ok,
        "direct_sum": rep.direct_sum,
        "violations": [[list(a), list(b)] for a, b in rep.violations],
        "message": rep.message,
    })
    return 0 if rep.ok else 1


def cmd_refines(args):
    a, b = _load(args.a), _load(args.b)
    if a.algebra.field is not b.algebra.field:
        F = make_field([a.algebra.field.conductor, b.algebra.field.conductor])
        a, b = _load(args.a, F), _load(args.b, F)
    ab, ba = is_refinement(a, b), is_refinement(b, a)
    _emit(args, {"a_refines_b": ab, "b_refines_a": ba, "same_decomposition": ab and ba})
    return 0


def cmd_profile(args):
    if (args.desc is None) == (args.file is None):
        raise UsageError("profile needs exactly one of --desc or a grading file")
    if args.desc is not None:
        g, text = build(args.desc, args.n)
    else:
        g, text = _load(args.file), None
    _emit(args, {
        "descriptor": text,
        "group": g.group.to_json(),
        "dim": g.algebra.dim,
        "components": len(g.components),
        "profile": component_profile(g),
    })
    return 0


def cmd_classify(args):
    if args.n > args.max_n:
        raise UsageError(f"n = {args.n} exceeds --max-n {args.max_n}")
    try:
        recs = classify(args.algebra, args.n, args.mode, args.max_m, args.jobs)
    except ValueError as e:
        raise UsageError(str(e)) from None
    out = []
    for r in recs:
        j = r.to_json()
        if r.notes:
            j["notes"] = list(r.notes)
        out.append(j)
    _emit(args, out)
    return 0


def parser():
    p = argparse.ArgumentParser(prog="finegrad", description="Fine gradings on classical Lie algebras, in exact arithmetic.")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp):
        sp.add_argument("--out", help="write JSON here instead of stdout")
        sp.add_argument("--format", choices=["json"], default="json")

    for name, fn in (("construct", cmd_construct), ("export", cmd_export)):
        sp = sub.add_parser(name, help=f"{name} the grading of a descriptor")
        sp.add_argument("--desc", required=True)
        sp.add_argument("--n", type=int)
        common(sp)
        sp.set_defaults(fn=fn)

    sp = sub.add_parser("verify", help="re-check a grading JSON file")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("refines", help="refinement relation between two grading files")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    common(sp)
    sp.set_defaults(fn=cmd_refines)

    sp = sub.add_parser("profile", help="universal group and component dimensions")
    sp.add_argument("file", nargs="?")
    sp.add_argument("--desc")
    sp.add_argument("--n", type=int)
    common(sp)
    sp.set_defaults(fn=cmd_profile)

    sp = sub.add_parser("classify", help="fine gradings of sl_n, so_n or sp_n up to equivalence")
    sp.add_argument("--algebra", choices=["sl", "so", "sp"], required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--mode", choices=MODES, default=DEFAULT_MODE, help="label-action mode")
    sp.add_argument("--max-m", type=int, default=3)
    sp.add_argument("--max-n", type=int, default=16)
    sp.add_argument("--jobs", type=int, default=1)
    common(sp)
    sp.set_defaults(fn=cmd_classify)
    return p


def run(argv=None):
    args = parser().parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"finegrad: error: {e}", file=sys.stderr)
        return 2
    except GradingError as e:
        print(f"finegrad: {e}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
