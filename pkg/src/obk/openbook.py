"""Abstract open books, their sums, and Morse open books with critical-point bookkeeping."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import AngleCollision, ClosedComponent, NotSummable, SurfaceMismatch
from .mapclass import (
    HomologyData,
    MappingClass,
    char_poly,
    compose,
    extend_by_identity,
    from_word,
    homology_basis,
    summed_homology,
)
from .patching import SumSpec, abstract_sum, check_summable
from .surface import RibbonSurface, boundary_walk, components, primitive_s_surface


def _check_boundary(page: RibbonSurface) -> None:
    touched = set()
    for circuit in boundary_walk(page):
        for arc in circuit.arcs:
            touched.add(arc.owner if arc.kind != "side" else page.end(arc.owner, 0).disk)
    for comp in components(page):
        if not touched.intersection(comp):
            raise ClosedComponent(f"component {comp} has empty boundary")


@dataclass(frozen=True)
class AbstractOpenBook:
    page: RibbonSurface
    monodromy: MappingClass

    def __post_init__(self):
        if self.monodromy.surface != self.page:
            raise SurfaceMismatch("monodromy does not act on this page")
        _check_boundary(self.page)

    @property
    def homology(self) -> HomologyData:
        return self.monodromy.homology

    def char_poly(self) -> tuple:
        return char_poly(self.monodromy)


def open_book(page: RibbonSurface, word=(), homology: HomologyData | None = None) -> AbstractOpenBook:
    _check_boundary(page)
    h = homology if homology is not None else homology_basis(page)
    return AbstractOpenBook(page, from_word(h, word))


def consecutive_cycles(band_ids) -> list:
    """Walks ``b_i`` forward, ``b_{i+1}`` back: the standard basis of a two-disk surface."""
    return [((a, 1), (b, -1)) for a, b in zip(band_ids, band_ids[1:])]


def primitive_open_book(n: int, sign: int, disk_ids=("D1", "D2"), band_ids=None) -> AbstractOpenBook:
    """Page (n, sign) primitive s-surface with monodromy a product of sign-twists.

    The twists run along the consecutive-band cycles c_1 .. c_{n-1}.  For sign +1 the
    word is τ_{n-1} ∘ ... ∘ τ_1 (c_1 twisted first), for sign -1 it is
    τ_1⁻¹ ∘ ... ∘ τ_{n-1}⁻¹.  Within one page the two orders are conjugate, but only
    this one stays correct once the page is summed with others.
    """
    if n < 2:
        raise ValueError("a primitive open book needs n >= 2")
    return _primitive_book(n, sign, disk_ids, band_ids)


def _primitive_book(n, sign, disk_ids=("D1", "D2"), band_ids=None) -> AbstractOpenBook:
    # n == 1 is allowed here: a single band, contractible page, trivial monodromy
    if band_ids is None:
        band_ids = [f"B{i + 1}" for i in range(n)]
    page = primitive_s_surface(n, sign, disk_ids, band_ids)
    h = homology_basis(page, consecutive_cycles(list(band_ids)))
    order = range(n - 2, -1, -1) if sign > 0 else range(n - 1)
    return AbstractOpenBook(page, from_word(h, [(i, sign) for i in order]))


def trivial_open_book(disk_id: str = "D") -> AbstractOpenBook:
    from .surface import disk_surface

    return open_book(disk_surface(disk_id))


def summed_monodromy(phi1: MappingClass, phi2: MappingClass, result) -> MappingClass:
    """ext(phi1) ∘ ext(phi2) (phi2 first) in the basis (page 1 cycles, page 2 cycles).

    Its matrix is the inverse of V⁻¹Vᵀ for the right-first embedded sum of the
    matching Seifert matrices.
    """
    h = summed_homology(phi1.homology, phi2.homology, result)
    r1, r2 = phi1.homology.rank, phi2.homology.rank
    e1 = extend_by_identity(phi1, h, range(r1), result.left_bands)
    e2 = extend_by_identity(phi2, h, range(r1, r1 + r2), result.right_bands)
    return compose(e1, e2)


def open_book_sum(ob1: AbstractOpenBook, ob2: AbstractOpenBook, spec: SumSpec) -> AbstractOpenBook:
    if spec.left.host != ob1.page or spec.right.host != ob2.page:
        raise NotSummable("spec patches do not live on the two pages")
    if not check_summable(spec):
        raise NotSummable(f"pages are not summable along {spec.interleaving!r}")
    res = abstract_sum(spec)
    return AbstractOpenBook(res.surface, summed_monodromy(ob1.monodromy, ob2.monodromy, res))


# --- Morse open books -------------------------------------------------------------


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class MorseOpenBook:
    """Critical points are (index, angle) with the angle a fraction of a turn in (0, 1).

    ``page`` and ``monodromy`` may both be None for pure bookkeeping in any dimension.
    """

    page: RibbonSurface | None
    monodromy: MappingClass | None
    critical_points: tuple = ()
    ambient_dim: int = 3

    def __post_init__(self):
        pts = tuple(sorted((int(k), _frac(a)) for k, a in self.critical_points))
        object.__setattr__(self, "critical_points", pts)
        if self.ambient_dim < 1:
            raise ValueError("ambient dimension must be positive")
        for k, a in pts:
            if not 1 <= k <= self.ambient_dim - 1:
                raise ValueError(f"index {k} outside 1..{self.ambient_dim - 1}")
            if not 0 < a < 1:
                raise ValueError(f"critical angle {a} must lie strictly between 0 and 1")
        if (self.page is None) != (self.monodromy is None):
            raise ValueError("page and monodromy go together")
        if self.page is not None:
            AbstractOpenBook(self.page, self.monodromy)

    @property
    def book(self) -> AbstractOpenBook | None:
        return None if self.page is None else AbstractOpenBook(self.page, self.monodromy)


def morse_open_book(book: AbstractOpenBook | None, critical_points=(), ambient_dim: int = 3) -> MorseOpenBook:
    if book is None:
        return MorseOpenBook(None, None, tuple(critical_points), ambient_dim)
    return MorseOpenBook(book.page, book.monodromy, tuple(critical_points), ambient_dim)


LEFT_CORE = (Fraction(1, 2), Fraction(1))
RIGHT_CORE = (Fraction(0), Fraction(1, 2))


def morse_sum(mob1: MorseOpenBook, mob2: MorseOpenBook, spec: SumSpec | None = None,
              left_core=LEFT_CORE, right_core=RIGHT_CORE) -> MorseOpenBook:
    """Sum two Morse open books.

    Critical angles of mob1 are squeezed affinely into ``left_core`` and those of mob2
    into ``right_core``; the right core must come strictly first on the circle.
    """
    if mob1.ambient_dim != mob2.ambient_dim:
        raise ValueError("ambient dimensions differ")
    lo1, hi1 = map(_frac, left_core)
    lo2, hi2 = map(_frac, right_core)
    if not (0 <= lo2 < hi2 <= lo1 < hi1 <= 1):
        raise AngleCollision("core arcs must be disjoint with the right core before the left core")
    pts = [(k, lo1 + a * (hi1 - lo1)) for k, a in mob1.critical_points]
    pts += [(k, lo2 + a * (hi2 - lo2)) for k, a in mob2.critical_points]
    if len({a for _, a in pts}) != len(pts):
        raise AngleCollision("two critical values landed on the same angle")
    page = mono = None
    if mob1.page is not None or mob2.page is not None:
        if mob1.page is None or mob2.page is None or spec is None:
            raise NotSummable("summing pages needs both pages and a sum spec")
        book = open_book_sum(mob1.book, mob2.book, spec)
        page, mono = book.page, book.monodromy
    return MorseOpenBook(page, mono, tuple(pts), mob1.ambient_dim)


@dataclass(frozen=True)
class MorseNumbers:
    """Upper bounds m_1 .. m_{w-1}, witnessed by the critical points actually held."""

    counts: tuple

    def __getitem__(self, k: int) -> int:
        return self.counts[k - 1]

    def is_honest(self) -> bool:
        return not any(self.counts)

    def __le__(self, other: "MorseNumbers") -> bool:
        return all(a <= b for a, b in zip(self.counts, other.counts))

    def __add__(self, other: "MorseNumbers") -> "MorseNumbers":
        return MorseNumbers(tuple(a + b for a, b in zip(self.counts, other.counts)))


def morse_numbers(mob: MorseOpenBook) -> MorseNumbers:
    c = Counter(k for k, _ in mob.critical_points)
    return MorseNumbers(tuple(c[k] for k in range(1, mob.ambient_dim)))
