"""Command-line front end.

Exit status: 0 success, 1 invalid input, 2 a verification that ran and failed.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from . import polynomial as poly
from .bookfile import book_homology, book_monodromy, book_seifert, parse_book
from .braid import (
    closure_components,
    is_homogeneous,
    missing_generators,
    parse_braid,
    stallings_open_book,
)
from .cobordism import CylindricalCobordism, stiffen, verify_samedef
from .embedded import Order, alexander, embedded_sum, fiberedness_necessary, order_invariant, seifert_matrix_bennequin
from .errors import InvariantMismatch, NoCoreCycle, ObkError
from .mapclass import char_poly
from .openbook import AbstractOpenBook, open_book_sum
from .patching import SumSpec, abstract_sum, parse_patch, parse_sumspec
from .plumbgraph import BUILTINS, intersection_matrix, lattice_report, parse_graph
from .surface import (
    boundary_walk,
    components,
    euler_characteristic,
    first_betti,
    genus_and_boundary,
    is_connected,
    orientability,
)

VALIDATION, VERIFICATION = 1, 2


class VerificationFailed(Exception):
    pass


class Report:
    """Ordered key/value pairs plus the inputs they were computed from."""

    def __init__(self, command: str):
        self.command = command
        self.items: list[tuple[str, object]] = []
        self.inputs: list[tuple[str, str]] = []
        self.provenance: list[str] = []

    def add(self, key: str, value) -> None:
        self.items.append((key, value))

    def read(self, path: Path) -> str:
        data = path.read_bytes()
        self.inputs.append((str(path), hashlib.sha256(data).hexdigest()))
        return data.decode("utf-8")

    def did(self, *ops: str) -> None:
        for op in ops:
            if op not in self.provenance:
                self.provenance.append(op)

    def text(self) -> str:
        lines = [f"{k} {_render(v)}" for k, v in self.items]
        lines.append(f"version {__version__}")
        lines += [f"input {p} sha256:{h}" for p, h in self.inputs]
        lines.append("provenance " + (", ".join(self.provenance) or "-"))
        return "\n".join(lines) + "\n"

    def json(self) -> str:
        doc = {
            "command": self.command,
            "report": {k: _jsonable(v) for k, v in self.items},
            "version": __version__,
            "inputs": [{"path": p, "sha256": h} for p, h in self.inputs],
            "provenance": self.provenance,
        }
        return json.dumps(doc, indent=2) + "\n"


def _render(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (tuple, list)):
        if v and all(isinstance(r, (tuple, list)) for r in v):
            return "; ".join(_render(r) for r in v)
        return " ".join(_render(x) for x in v) if v else "-"
    if v is None:
        return "n/a"
    return str(v)


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (tuple, list)):
        return [_jsonable(x) for x in v]
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(VALIDATION, f"{self.prog}: error: {message}\n")


# --- commands --------------------------------------------------------------------


def cmd_surface(args, rep: Report) -> None:
    text = rep.read(Path(args.file))
    book = parse_book(text)
    s = book.surface
    ok, _ = orientability(s)
    rep.add("disks", len(s.disks))
    rep.add("bands", len(s.bands))
    rep.add("euler", euler_characteristic(s))
    rep.add("components", len(components(s)))
    rep.add("boundary", len(boundary_walk(s)))
    rep.add("orientable", ok)
    rep.add("betti", first_betti(s))
    rep.add("genus", genus_and_boundary(s)[0] if ok and is_connected(s) else None)
    rep.did("surface.parse_surface", "surface.boundary_walk", "surface.orientability")
    if ok and book.word is not None:
        phi = book_monodromy(book)
        rep.add("charpoly", poly.normalize(char_poly(phi)))
        rep.did("mapclass.from_word")


def cmd_braid(args, rep: Report) -> None:
    beta = parse_braid(args.word, args.strands)
    rep.add("strands", beta.strands)
    rep.add("word", beta.letters)
    rep.add("crossings", len(beta))
    rep.add("components", closure_components(beta))
    homogeneous = is_homogeneous(beta)
    rep.add("homogeneous", homogeneous)
    rep.did("braid.parse_braid")
    if missing_generators(beta):
        rep.add("missing_generators", tuple(missing_generators(beta)))
        raise ObkError(f"generators {missing_generators(beta)} never occur; the closure is split")
    d = seifert_matrix_bennequin(beta)
    rep.add("euler", euler_characteristic(d.surface))
    rep.add("boundary", len(boundary_walk(d.surface)))
    rep.add("genus", genus_and_boundary(d.surface)[0])
    rep.add("seifert", d.seifert_matrix)
    alex = alexander(d)
    rep.add("alexander", alex)
    rep.add("fibered_necessary", fiberedness_necessary(d))
    rep.did("braid.bennequin_surface", "embedded.seifert_matrix_bennequin", "embedded.alexander")
    if args.certify:
        if not homogeneous:
            rep.add("certificate", "not homogeneous")
            return
        book = stallings_open_book(beta)
        cp = poly.normalize(book.char_poly())
        rep.add("charpoly", cp)
        agree = cp == alex and euler_characteristic(book.page) == beta.strands - len(beta)
        rep.add("agree", agree)
        rep.did("braid.stallings_open_book", "openbook.open_book_sum")
        if not agree:
            raise VerificationFailed("Stallings book and Bennequin Seifert matrix disagree")


def _load_sum(args, rep: Report):
    spec_path = Path(args.spec)
    left_path, right_path, word = parse_sumspec(rep.read(spec_path))
    books = []

    def load_surface(path: Path):
        book = parse_book(rep.read(path))
        books.append(book)
        return book.surface

    patches = []
    for p in (left_path, right_path):
        path = Path(p) if Path(p).is_absolute() else spec_path.parent / p
        patches.append(parse_patch(rep.read(path), load_surface, path.parent))
    return SumSpec(patches[0], patches[1], word), books[0], books[1]


def cmd_sum(args, rep: Report) -> None:
    spec, b1, b2 = _load_sum(args, rep)
    order = Order(args.order)
    h1, h2 = book_homology(b1), book_homology(b2)
    ob1 = AbstractOpenBook(b1.surface, book_monodromy(b1, h1))
    ob2 = AbstractOpenBook(b2.surface, book_monodromy(b2, h2))
    res = abstract_sum(spec)
    s = res.surface
    rep.add("interleaving", spec.interleaving)
    rep.add("order", order.value)
    rep.add("euler", euler_characteristic(s))
    rep.add("euler_additive", euler_characteristic(s) == euler_characteristic(b1.surface) + euler_characteristic(b2.surface) - 1)
    rep.add("boundary", len(boundary_walk(s)))
    ok, _ = orientability(s)
    rep.add("genus", genus_and_boundary(s)[0] if ok and is_connected(s) else None)
    rep.add("rank", first_betti(s))
    rep.did("patching.abstract_sum")
    book = open_book_sum(ob1, ob2, spec)
    cp = poly.normalize(book.char_poly())
    rep.did("openbook.open_book_sum")
    d1, d2 = book_seifert(b1, h1), book_seifert(b2, h2)
    if d1 is not None and d2 is not None:
        d = embedded_sum(d1, d2, spec, order=order)
        rep.add("seifert", d.seifert_matrix)
        rep.add("alexander", alexander(d))
        rep.did("embedded.embedded_sum", "embedded.alexander")
        try:
            inv = order_invariant(d1, d2, spec, order=order, left_core=args.left_core, right_core=args.right_core)
        except NoCoreCycle:
            inv = None
        rep.add("order_invariant", inv)
        rep.did("embedded.order_invariant")
    else:
        d = None
        rep.add("alexander", None)
    rep.add("charpoly", cp)
    if args.verify_samedef:
        if d is None:
            raise ObkError("samedef verification needs Seifert data for both summands")
        c1, c2 = b1.core, b2.core
        if c1 is None or c2 is None or not c2[1] < c1[0]:
            # the sum does not depend on the cores, only on their order
            c1, c2 = (Fraction(1, 2), Fraction(3, 4)), (Fraction(1, 8), Fraction(1, 4))
        s1 = stiffen(CylindricalCobordism(ob1.page, ob1.monodromy), c1)
        s2 = stiffen(CylindricalCobordism(ob2.page, ob2.monodromy), c2)
        rep.add("cores", (c1, c2))
        rep.did("cobordism.sum_stiffened", "cobordism.verify_samedef")
        try:
            verify_samedef(s1, s2, spec, d)
        except InvariantMismatch:
            rep.add("samedef", "fail")
            raise VerificationFailed("embedded and open-book sums disagree")
        rep.add("samedef", "pass")


def cmd_plumb(args, rep: Report) -> None:
    if args.builtin and args.graph:
        raise ObkError("give either a graph file or --builtin, not both")
    if args.builtin:
        if args.builtin not in BUILTINS:
            raise ObkError(f"unknown builtin {args.builtin!r}; choose from {', '.join(BUILTINS)}")
        g = BUILTINS[args.builtin]()
        rep.add("graph", args.builtin)
    elif args.graph:
        g = parse_graph(rep.read(Path(args.graph)))
        rep.add("graph", args.graph)
    else:
        raise ObkError("need a graph file or --builtin")
    lr = lattice_report(g)
    rep.add("vertices", len(g.vertices))
    rep.add("edges", len(g.edges))
    rep.add("connected", g.is_connected())
    rep.add("dimension", tuple(sorted({4 * v.dim for v in g.vertices})))
    rep.add("matrix", intersection_matrix(g))
    rep.add("det", lr.determinant)
    rep.add("torsion", lr.torsion)
    rep.add("unimodular", abs(lr.determinant) == 1)
    rep.did("plumbgraph.intersection_matrix", "plumbgraph.lattice_report")


def cmd_verify(args, rep: Report) -> None:
    from .suites import SUITES, default_seed, run_suite

    seed = args.seed if args.seed is not None else default_seed()
    names = list(SUITES) if args.suite == "all" else [args.suite]
    rep.add("seed", seed)
    failed = 0
    for name in names:
        results = run_suite(name, args.count, seed, args.jobs)
        bad = [(i, detail) for i, ok, detail in results if not ok]
        rep.add(f"{name}.instances", len(results))
        rep.add(f"{name}.passed", len(results) - len(bad))
        for i, detail in bad[:5]:
            rep.add(f"{name}.failure.{i}", detail)
        failed += len(bad)
        rep.did(f"suites.{name}")
    rep.add("result", "pass" if not failed else "fail")
    if failed:
        raise VerificationFailed(f"{failed} instances failed")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="obk", description="Ribbon surfaces, sums, open books and Seifert data.")
    p.add_argument("--version", action="version", version=f"obk {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="emit a JSON document instead of text")

    sp = sub.add_parser("surface", help="invariants of a surface (or book) file")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_surface)

    sp = sub.add_parser("braid", help="Bennequin data and Stallings certificate of a braid closure")
    sp.add_argument("--strands", type=int)
    sp.add_argument("--word", required=True, help='letters such as "-1 2 -1 2"')
    sp.add_argument("--certify", action="store_true", help="build the Stallings book and compare")
    common(sp)
    sp.set_defaults(func=cmd_braid)

    sp = sub.add_parser("sum", help="abstract, embedded and open-book sum described by a sumspec file")
    sp.add_argument("spec")
    sp.add_argument("--order", choices=[o.value for o in Order], default=Order.LEFT_FIRST.value)
    sp.add_argument("--verify-samedef", action="store_true")
    sp.add_argument("--left-core", type=int, default=0, help="left basis cycle used by order_invariant")
    sp.add_argument("--right-core", type=int, default=0, help="right basis cycle used by order_invariant")
    common(sp)
    sp.set_defaults(func=cmd_sum)

    sp = sub.add_parser("plumb", help="intersection lattice of a plumbing graph")
    sp.add_argument("graph", nargs="?")
    sp.add_argument("--builtin")
    common(sp)
    sp.set_defaults(func=cmd_plumb)

    sp = sub.add_parser("verify", help="randomized verification suites")
    sp.add_argument("--suite", choices=["all", "roundtrip", "samedef", "stallings", "morse"], default="all")
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--seed", type=int, help="defaults to $OBK_SEED or a fixed value")
    sp.add_argument("--jobs", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    rep = Report(args.command)
    status = 0
    try:
        args.func(args, rep)
    except VerificationFailed as exc:
        print(f"obk: verification failed: {exc}", file=sys.stderr)
        status = VERIFICATION
    except (ValueError, OSError) as exc:  # ObkError is a ValueError
        print(f"obk: {exc}", file=sys.stderr)
        return VALIDATION
    sys.stdout.write(rep.json() if args.json else rep.text())
    return status


if __name__ == "__main__":
    sys.exit(main())
