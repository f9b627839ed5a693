"""Command-line interface.

Exit codes: 0 success, 1 property violated or not an isomorphism, 2 input
error, 3 enumeration cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .category import dual_morphism, dual_object, factor, is_epi, is_mono, separate, standardize, try_invert
from .core import LOWER, UPPER, Polarity, closed_sets, members
from .errors import CapExceeded, PolarityError
from .io import (
    context_to_obj,
    dumps,
    hasse_dot,
    is_morphism_text,
    morphism_to_obj,
    parse_lattice,
    read_context,
    read_morphism,
    serialize_burmeister,
    serialize_lattice,
)
from .lattice import FiniteLattice, c_object, g_minus_object
from .laws import verify
from .limits import equalizer, product
from .morphism import Morphism, compatibilize, compose, is_compatible_left, is_compatible_right
from .tensor import internal_hom, tensor_object

OK, VIOLATED, INPUT_ERROR, CAP_EXCEEDED = 0, 1, 2, 3


class _Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json

    def emit(self, text: str, obj) -> None:
        sys.stdout.write(dumps(obj) if self.as_json else text)


def _matrix_text(rel) -> str:
    return "".join("".join("X" if (row >> c) & 1 else "." for c in range(rel.n_cols)) + "\n" for row in rel.rows)


def _morphism_text(m: Morphism, title: str = "") -> str:
    head = f"{title}: " if title else ""
    return f"{head}{m.dom.lower_size}x{m.cod.upper_size} relation\n" + _matrix_text(m.rel)


def _context_out(out: _Out, P: Polarity, extra: dict | None = None) -> None:
    obj = context_to_obj(P)
    if extra:
        obj = {"context": obj, **extra}
    out.emit(serialize_burmeister(P), obj)


def _set_label(names, mask) -> str:
    return "{" + ",".join(names[i] for i in members(mask)) + "}"


# commands


def cmd_lattice(args, out):
    P = read_context(args.ctx)
    side = LOWER if args.side == "lower" else UPPER
    family = closed_sets(P, side).members
    names = P.lower_names if side == LOWER else P.upper_names
    labels = [_set_label(names, x) for x in family]
    if args.dot:
        ups = tuple(sum(1 << j for j, y in enumerate(family) if x & ~y == 0) for x in family)
        sys.stdout.write(hasse_dot(FiniteLattice(ups, tuple(labels))))
        return OK
    text = f"{len(family)} closed sets\n" + "".join(label + "\n" for label in labels)
    sets = [[names[i] for i in members(x)] for x in family]
    out.emit(text, {"side": args.side, "count": len(family), "closed_sets": sets})
    return OK


def cmd_check(args, out):
    mf = read_morphism(args.morphism, raw=True)
    left = is_compatible_left(mf.dom, mf.relation)
    right = is_compatible_right(mf.cod, mf.relation)
    ok = left and right
    verdict = "compatible" if ok else "incompatible"
    detail = "" if ok else f" (left: {'ok' if left else 'fails'}, right: {'ok' if right else 'fails'})"
    out.emit(verdict + detail + "\n", {"compatible": ok, "left": left, "right": right})
    return OK if ok else VIOLATED


def _emit_morphism(out, m: Morphism, title: str = "", extra: dict | None = None):
    obj = morphism_to_obj(m)
    if extra:
        obj = {**extra, "morphism": obj}
    out.emit(_morphism_text(m, title), obj)


def cmd_compose(args, out):
    R, S = read_morphism(args.m1).morphism(), read_morphism(args.m2).morphism()
    _emit_morphism(out, compose(R, S), "composite")
    return OK


def cmd_compatibilize(args, out):
    mf = read_morphism(args.morphism, raw=True)
    _emit_morphism(out, compatibilize(mf.dom, mf.cod, mf.relation), "compatibilized")
    return OK


def _predicate(name, test):
    def run(args, out):
        R = read_morphism(args.morphism).morphism()
        holds = test(R)
        out.emit(f"{'' if holds else 'not '}{name}\n", {name: holds})
        return OK if holds else VIOLATED

    return run


def cmd_iso(args, out):
    R = read_morphism(args.morphism).morphism()
    w = try_invert(R)
    if w is None:
        out.emit("not iso\n", {"iso": False, "mono": is_mono(R), "epi": is_epi(R)})
        return VIOLATED
    out.emit("iso\n" + _morphism_text(w.inverse, "inverse"), {"iso": True, "inverse": morphism_to_obj(w.inverse)})
    return OK


def cmd_factor(args, out):
    R = read_morphism(args.morphism).morphism()
    f = factor(R)
    text = _morphism_text(f.epi, "epi") + _morphism_text(f.mono, "mono")
    out.emit(text, {"epi": morphism_to_obj(f.epi), "mid": context_to_obj(f.mid), "mono": morphism_to_obj(f.mono)})
    return OK


def cmd_dual(args, out):
    text = Path(args.target).read_text(encoding="utf-8") if Path(args.target).is_file() else None
    if text is not None and is_morphism_text(text):
        R = read_morphism(args.target).morphism()
        _emit_morphism(out, dual_morphism(R), "dual")
    else:
        _context_out(out, dual_object(read_context(args.target)))
    return OK


def cmd_separate(args, out):
    S, w = separate(read_context(args.ctx))
    _context_out(out, S, {"to": morphism_to_obj(w.forward), "from": morphism_to_obj(w.inverse)} if out.as_json else None)
    return OK


def cmd_standardize(args, out):
    S, _ = standardize(read_context(args.ctx))
    _context_out(out, S)
    return OK


def cmd_product(args, out):
    P = product([read_context(p) for p in args.ctx])
    extra = {"projections": [morphism_to_obj(p) for p in P.projections]} if out.as_json else None
    _context_out(out, P.object, extra)
    return OK


def cmd_equalize(args, out):
    R, S = read_morphism(args.m1).morphism(), read_morphism(args.m2).morphism()
    E, incl = equalizer(R, S)
    _context_out(out, E, {"inclusion": morphism_to_obj(incl)} if out.as_json else None)
    return OK


def cmd_tensor(args, out):
    _context_out(out, tensor_object(read_context(args.a), read_context(args.b)))
    return OK


def cmd_hom(args, out):
    _context_out(out, internal_hom(read_context(args.a), read_context(args.b)))
    return OK


def cmd_to_lattice(args, out):
    L = g_minus_object(read_context(args.ctx))
    if args.dot:
        sys.stdout.write(hasse_dot(L))
        return OK
    sys.stdout.write(serialize_lattice(L))
    return OK


def cmd_from_lattice(args, out):
    L = parse_lattice(Path(args.lattice).read_text(encoding="utf-8"))
    _context_out(out, c_object(L))
    return OK


def cmd_verify(args, out):
    report = verify(args.seed, args.cases, args.max_size)
    if out.as_json:
        sys.stdout.write(json.dumps(report.to_obj()) + "\n")
    else:
        total = sum(report.checked.values())
        if report.ok:
            sys.stdout.write(f"ok: {total} checks over {len(report.checked)} laws, seed {args.seed}\n")
        else:
            f = report.failure
            sys.stdout.write(f"counterexample to {f.law}: {f.message}\n")
            sys.stdout.write("reproducer: " + f.reproducer() + "\n")
    return OK if report.ok else VIOLATED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polarity", description="Finite polarities and compatible relations.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, *positional, nargs=None):
        p = sub.add_parser(name, help=help_text)
        for arg in positional:
            p.add_argument(arg, nargs=nargs)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
        p.set_defaults(func=fn)
        return p

    p = add("lattice", cmd_lattice, "list closed sets", "ctx")
    p.add_argument("--side", choices=("lower", "upper"), default="lower")
    p.add_argument("--dot", action="store_true", help="print the Hasse diagram as DOT")
    add("check", cmd_check, "test a relation file for compatibility", "morphism")
    add("compose", cmd_compose, "compose two morphisms", "m1", "m2")
    add("compatibilize", cmd_compatibilize, "least compatible relation containing a raw one", "morphism")
    add("mono", _predicate("mono", is_mono), "test for a monomorphism", "morphism")
    add("epi", _predicate("epi", is_epi), "test for an epimorphism", "morphism")
    add("iso", cmd_iso, "test for an isomorphism and print the inverse", "morphism")
    add("factor", cmd_factor, "epi-mono factorization", "morphism")
    add("dual", cmd_dual, "dual of a context or morphism", "target")
    add("separate", cmd_separate, "merge equal rows and columns", "ctx")
    add("standardize", cmd_standardize, "standard polarity on the lower carrier", "ctx")
    add("product", cmd_product, "product of contexts", "ctx", nargs="*")
    add("equalize", cmd_equalize, "equalizer of two parallel morphisms", "m1", "m2")
    add("tensor", cmd_tensor, "tensor product", "a", "b")
    add("hom", cmd_hom, "internal hom", "a", "b")
    p = add("to-lattice", cmd_to_lattice, "lattice of lower closed sets as JSON", "ctx")
    p.add_argument("--dot", action="store_true", help="print the Hasse diagram as DOT")
    add("from-lattice", cmd_from_lattice, "the polarity (L, L, <=) of a lattice file", "lattice")
    p = add("verify", cmd_verify, "check the law registry on random instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--max-size", type=int, default=4)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = _Out(args.json)
    try:
        return args.func(args, out)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CAP_EXCEEDED
    except (PolarityError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
