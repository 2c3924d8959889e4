"""Command-line interface.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 solver
timeout.
"""

import argparse
import sys

from . import families
from .blocks import block_decomposition
from .errors import PosetError, SolverTimeout
from .io import (
    blocks_to_dot,
    document_to_poset,
    document_to_realizer,
    dumps,
    loads,
    poset_to_document,
    realizer_to_document,
)
from .merge import dimension_upper_bound
from .solver import exact_dimension


def _read_doc(path):
    if path == "-":
        return loads(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def _cmd_gen(args):
    fam = args.family
    if fam == "chain":
        _need(args, 1)
        p = families.gen_chain(int(args.params[0]))
        name = f"chain-{args.params[0]}"
    elif fam == "standard-example":
        _need(args, 1)
        p = families.gen_standard_example(int(args.params[0]))
        name = f"standard-example-{args.params[0]}"
    elif fam == "grid":
        _need(args, 2)
        p = families.gen_grid(int(args.params[0]), int(args.params[1]))
        name = f"grid-{args.params[0]}-{args.params[1]}"
    elif fam == "block-grid":
        _need(args, 2)
        p = families.gen_block_grid(int(args.params[0]), int(args.params[1]))
        name = f"block-grid-{args.params[0]}-{args.params[1]}"
    elif fam == "fig1-left":
        _need(args, 1)
        p = families.gen_fig1_left(int(args.params[0]))
        name = f"fig1-left-{args.params[0]}"
    elif fam == "fig1-right":
        _need(args, 1)
        p = families.gen_fig1_right(int(args.params[0]))
        name = f"fig1-right-{args.params[0]}"
    elif fam == "fig3-trees":
        _need(args, 0)
        left, right = families.gen_fig3_trees()
        p = left if args.which == "left" else right
        name = f"fig3-tree-{args.which}"
    elif fam == "fig4-diamonds":
        _need(args, 1)
        p = families.gen_fig4_diamonds(int(args.params[0]))
        name = f"fig4-diamonds-{args.params[0]}"
    else:
        raise _usage(f"unknown family {fam!r}")
    sys.stdout.write(dumps(poset_to_document(p, name)))
    return 0


def _need(args, k):
    if len(args.params) != k:
        raise _usage(f"family {args.family!r} takes {k} parameter(s)")


class _Usage(Exception):
    pass


def _usage(msg):
    return _Usage(msg)


def _cmd_blocks(args):
    doc = _read_doc(args.input)
    p = document_to_poset(doc)
    dec = block_decomposition(p)
    if args.dot:
        sys.stdout.write(blocks_to_dot(p, dec))
        return 0
    print(f"blocks: {dec.t}")
    for i, b in enumerate(dec.blocks):
        names = sorted(p.elements[v] for v in b)
        root = f" root={p.elements[dec.roots[i]]}" if i in dec.roots else ""
        print(f"  B{i+1}: {{{', '.join(names)}}}{root}")
    cuts = sorted(p.elements[v] for v in dec.cut_vertices)
    print(f"cut vertices: {{{', '.join(cuts)}}}")
    return 0


def _cmd_dim(args):
    doc = _read_doc(args.input)
    p = document_to_poset(doc)
    try:
        res = exact_dimension(p, max_d=args.max, timeout=args.timeout)
    except SolverTimeout as exc:
        print(f"timeout: {exc}", file=sys.stderr)
        try:
            size, _ = dimension_upper_bound(p, timeout=args.timeout)
            print(f"best known upper bound: {size}", file=sys.stderr)
        except PosetError:
            pass
        return 3
    print(f"dimension: {res.dim}")
    sys.stdout.write(dumps(realizer_to_document(p, res.witness, doc.get("name", ""))))
    return 0


def _cmd_realizer(args):
    doc = _read_doc(args.input)
    p = document_to_poset(doc)
    try:
        size, realizer = dimension_upper_bound(p, timeout=args.timeout)
    except SolverTimeout as exc:
        print(f"timeout: {exc}", file=sys.stderr)
        return 3
    if args.block_dim_override is not None:
        d = args.block_dim_override
        if d + 2 < size:
            raise _usage("--block-dim-override below the actual block dimension")
    print(f"realizer size: {size}")
    sys.stdout.write(dumps(realizer_to_document(p, realizer, doc.get("name", ""))))
    return 0


def _cmd_verify(args):
    from .core import verify_realizer

    pdoc = _read_doc(args.poset)
    rdoc = _read_doc(args.realizer)
    p = document_to_poset(pdoc)
    realizer = document_to_realizer(p, rdoc)
    check = verify_realizer(p, realizer)
    if check.valid:
        print("valid")
        return 0
    a, b = check.pair
    print(f"invalid: ({p.elements[a]}, {p.elements[b]}) -- {check.reason}")
    return 1


def build_parser():
    ap = argparse.ArgumentParser(prog="posetdim", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit a poset family as a JSON document")
    g.add_argument("family", choices=[
        "chain", "standard-example", "grid", "block-grid",
        "fig1-left", "fig1-right", "fig3-trees", "fig4-diamonds",
    ])
    g.add_argument("params", nargs="*")
    g.add_argument("--which", choices=["left", "right"], default="left",
                   help="which of the two tree posets (fig3-trees only)")
    g.set_defaults(func=_cmd_gen)

    b = sub.add_parser("blocks", help="block decomposition report")
    b.add_argument("input")
    b.add_argument("--dot", action="store_true", help="emit annotated DOT instead")
    b.set_defaults(func=_cmd_blocks)

    d = sub.add_parser("dim", help="exact dimension with witness realizer")
    d.add_argument("input")
    d.add_argument("--max", type=int, default=None)
    d.add_argument("--timeout", type=float, default=300.0)
    d.add_argument("--jobs", type=int, default=1, help="parallelism budget hint")
    d.set_defaults(func=_cmd_dim)

    r = sub.add_parser("realizer", help="block-merged realizer of size <= d+2")
    r.add_argument("input")
    r.add_argument("--timeout", type=float, default=300.0)
    r.add_argument("--block-dim-override", type=int, default=None)
    r.set_defaults(func=_cmd_realizer)

    v = sub.add_parser("verify", help="check a realizer document against a poset")
    v.add_argument("poset")
    v.add_argument("realizer")
    v.set_defaults(func=_cmd_verify)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (PosetError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
