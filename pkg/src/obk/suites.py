"""Randomized verification suites, one instance per (seed, index).

Each check takes a ``random.Random`` and returns ``(ok, detail)``; instance ``i`` of
a suite is seeded from ``f"{seed}:{suite}:{i}"`` so runs are reproducible and can be
spread over processes in any order.
"""
from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import polynomial as poly
from .braid import BraidWord, bennequin_surface, closure_components, stallings_open_book
from .cobordism import (
    CylindricalCobordism,
    circle_collapsed_mapping_torus,
    split_seifert,
    stiffen,
    verify_samedef,
)
from .embedded import (
    LeftFirst,
    RightFirst,
    alexander,
    embedded_sum,
    fiberedness_necessary,
    homological_monodromy,
    seifert_matrix_bennequin,
    seifert_matrix_primitive,
)
from . import _linalg as la
from .mapclass import from_word, homology_basis
from .openbook import morse_numbers, morse_open_book, morse_sum, primitive_open_book
from .patching import SumSpec, abstract_sum, make_patch
from .surface import boundary_walk, euler_characteristic

DEFAULT_SEED = 20240501


def default_seed() -> int:
    return int(os.environ.get("OBK_SEED", DEFAULT_SEED))


def random_homogeneous_braid(rng: random.Random, max_strands: int = 5, max_letters: int = 10) -> BraidWord:
    n = rng.randint(2, max_strands)
    signs = {g: rng.choice((1, -1)) for g in range(1, n)}
    c = rng.randint(n - 1, max_letters)
    # every generator at least once, the rest at random
    gens = list(range(1, n)) + [rng.randint(1, n - 1) for _ in range(c - (n - 1))]
    rng.shuffle(gens)
    return BraidWord(n, tuple(signs[g] * g for g in gens))


def random_primitive_pair(rng: random.Random, max_bands: int = 6):
    """Two primitive books, their Seifert data and a random summing spec."""
    n1, n2 = rng.randint(2, max_bands), rng.randint(2, max_bands)
    e1, e2 = rng.choice((1, -1)), rng.choice((1, -1))
    right = dict(disk_ids=("E1", "E2"), band_ids=[f"C{i + 1}" for i in range(n2)])
    ob1, ob2 = primitive_open_book(n1, e1), primitive_open_book(n2, e2, **right)
    sd1, sd2 = seifert_matrix_primitive(n1, e1), seifert_matrix_primitive(n2, e2, **right)
    word = ["L"] * n1 + ["R"] * n2
    rng.shuffle(word)
    spec = SumSpec(
        make_patch(ob1.page, rng.choice(("D1", "D2"))),
        make_patch(ob2.page, rng.choice(("E1", "E2"))),
        "".join(word),
    )
    return ob1, ob2, sd1, sd2, spec


def check_roundtrip(rng: random.Random):
    if rng.random() < 0.5:
        page = primitive_open_book(rng.randint(2, 6), rng.choice((1, -1))).page
    else:
        page = bennequin_surface(random_homogeneous_braid(rng, 4, 8))
    h = homology_basis(page)
    word = [(rng.randrange(h.rank), rng.choice((1, -1))) for _ in range(rng.randint(0, 6))] if h.rank else []
    w = CylindricalCobordism(page, from_word(h, word))
    pair = circle_collapsed_mapping_torus(w)
    ok = split_seifert(pair) == w and circle_collapsed_mapping_torus(split_seifert(pair)) == pair
    return ok, f"rank {h.rank}, word length {len(word)}"


def check_samedef(rng: random.Random):
    ob1, ob2, sd1, sd2, spec = random_primitive_pair(rng)
    order = rng.choice((LeftFirst, RightFirst))
    d = embedded_sum(sd1, sd2, spec, order=order)
    s1 = stiffen(CylindricalCobordism(ob1.page, ob1.monodromy), (Fraction(1, 2), Fraction(3, 4)))
    s2 = stiffen(CylindricalCobordism(ob2.page, ob2.monodromy), (Fraction(1, 8), Fraction(1, 4)))
    report = verify_samedef(s1, s2, spec, d)
    chi = euler_characteristic(d.surface) == euler_characteristic(ob1.page) + euler_characteristic(ob2.page) - 1
    return chi, f"{spec.interleaving} {order.value} {poly.to_str(report['polynomial'][0])}"


def check_stallings(rng: random.Random):
    b = random_homogeneous_braid(rng)
    book = stallings_open_book(b)
    d = seifert_matrix_bennequin(b)
    checks = {
        "euler": euler_characteristic(book.page) == b.strands - len(b),
        "boundary": len(boundary_walk(book.page)) == closure_components(b),
        "fibered": fiberedness_necessary(d),
        "charpoly": poly.normalize(book.char_poly()) == alexander(d),
        "monodromy": poly.normalize(la.charpoly(homological_monodromy(d))) == alexander(d),
    }
    bad = [k for k, v in checks.items() if not v]
    return not bad, f"{b}" + (f" failed {bad}" if bad else "")


def check_morse(rng: random.Random):
    dim = rng.randint(3, 6)

    def points():
        return [(rng.randint(1, dim - 1), Fraction(rng.randint(1, 998), 999)) for _ in range(rng.randint(0, 4))]

    # distinct angles inside each summand
    p1 = list({a: (k, a) for k, a in points()}.values())
    p2 = list({a: (k, a) for k, a in points()}.values())
    if dim == 3 and rng.random() < 0.5:
        ob1, ob2, _, _, spec = random_primitive_pair(rng, 4)
        m1, m2 = morse_open_book(ob1, p1), morse_open_book(ob2, p2)
    else:
        m1, m2, spec = morse_open_book(None, p1, dim), morse_open_book(None, p2, dim), None
    total = morse_sum(m1, m2, spec)
    n1, n2, n = morse_numbers(m1), morse_numbers(m2), morse_numbers(total)
    ok = n == n1 + n2 and n <= n1 + n2
    if total.page is not None:
        ok = ok and euler_characteristic(total.page) == (
            euler_characteristic(m1.page) + euler_characteristic(m2.page) - 1
        )
        ok = ok and total.page == abstract_sum(spec).surface
    return ok, f"dim {dim}, counts {n.counts}"


SUITES = {
    "roundtrip": check_roundtrip,
    "samedef": check_samedef,
    "stallings": check_stallings,
    "morse": check_morse,
}


def _run_one(args):
    name, seed, i = args
    rng = random.Random(f"{seed}:{name}:{i}")
    try:
        ok, detail = SUITES[name](rng)
    except Exception as exc:  # a crash is a failed instance, reported with its cause
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return i, ok, detail


def run_suite(name: str, count: int, seed: int | None = None, jobs: int = 1) -> list:
    """[(index, ok, detail)] in index order."""
    seed = default_seed() if seed is None else seed
    tasks = [(name, seed, i) for i in range(count)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, tasks, chunksize=max(1, count // (4 * jobs))))
    else:
        results = [_run_one(t) for t in tasks]
    return sorted(results)
