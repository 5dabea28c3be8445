"""Seifert matrices of surfaces in the 3-sphere and of their embedded sums.

``V[i][j]`` is the linking number of basis cycle i with the positive push-off of
cycle j, normalised so that ``V - Vᵀ`` is the intersection matrix of the basis.

Conventions, all pinned by two anchors (two positive Hopf bands give the trefoil,
a positive and a negative one give the figure-eight knot):

* a cycle through two bands of signs a, b has self-linking ``-(a + b) / 2``;
* two consecutive cycles on the same pair of disks link only in the order fixed by
  the sign of their shared band;
* in an embedded sum the summand placed first keeps the coupling block above the
  diagonal, the other order puts ``-Cᵀ`` below it.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import _linalg as la
from . import polynomial as poly
from .braid import BraidWord, bennequin_cycles, bennequin_surface, missing_generators
from .errors import DisconnectedSurface, InvalidChord, NoCoreCycle, NotSummable, NotUnimodular, SkewMismatch
from .mapclass import HomologyData, _chords, homology_basis, summed_homology
from .patching import SumSpec, abstract_sum, check_summable
from .surface import Slot, is_connected, orientability


class Order(Enum):
    LEFT_FIRST = "left-first"
    RIGHT_FIRST = "right-first"


LeftFirst, RightFirst = Order.LEFT_FIRST, Order.RIGHT_FIRST


@dataclass(frozen=True)
class SeifertData:
    surface: object
    basis: HomologyData
    seifert_matrix: tuple

    def __post_init__(self):
        v = la.as_matrix(self.seifert_matrix)
        object.__setattr__(self, "seifert_matrix", v)
        r = self.basis.rank
        if len(v) != r or any(len(row) != r for row in v):
            raise SkewMismatch(f"Seifert matrix must be {r}x{r}")
        if la.matsub(v, la.transpose(v)) != self.basis.intersection:
            raise SkewMismatch("V - Vᵀ differs from the intersection matrix of the basis")

    @property
    def rank(self) -> int:
        return self.basis.rank


def seifert_data(surface, cycles, matrix) -> SeifertData:
    """SeifertData from explicit cycles and matrix (checked against the surface)."""
    if not is_connected(surface):
        raise DisconnectedSurface("Seifert data needs a connected surface")
    return SeifertData(surface, homology_basis(surface, cycles), matrix)


def _adjacent_level_link(p, q, pp, qq) -> int:
    # cycle on bands at word positions p<q meets the next level's cycle at pp<qq
    if pp < p < qq < q:
        return 1
    if p < pp < q < qq:
        return -1
    return 0


def seifert_matrix_bennequin(beta: BraidWord) -> SeifertData:
    missing = missing_generators(beta)
    if missing:
        raise DisconnectedSurface(f"generators {missing} never occur")
    surface = bennequin_surface(beta)
    cyc = bennequin_cycles(beta)
    r = len(cyc)
    v = [[0] * r for _ in range(r)]
    for i, (lev, p, q, _) in enumerate(cyc):
        v[i][i] = -(beta.sign(p) + beta.sign(q)) // 2
        for k, (lev2, p2, q2, _) in enumerate(cyc):
            if lev2 == lev and p2 == q:
                if beta.sign(q) > 0:
                    v[i][k] = 1
                else:
                    v[k][i] = -1
            elif lev2 == lev + 1:
                v[i][k] = _adjacent_level_link(p, q, p2, q2)
    return SeifertData(surface, homology_basis(surface, [c[3] for c in cyc]), v)


def seifert_matrix_primitive(n: int, sign: int, disk_ids=("D1", "D2"), band_ids=None) -> SeifertData:
    """Bidiagonal Seifert matrix of the (n, sign) primitive s-surface, consecutive-band basis."""
    if n < 2:
        raise ValueError("need n >= 2 for a nonzero first homology")
    data = seifert_matrix_bennequin(BraidWord(2, (sign,) * n))
    from .surface import primitive_s_surface, relabel

    if band_ids is None:
        band_ids = [f"B{i + 1}" for i in range(n)]
    bmap = {f"X{i + 1}": b for i, b in enumerate(band_ids)}
    surface = relabel(data.surface, dict(zip(("D1", "D2"), disk_ids)), bmap)
    assert surface == primitive_s_surface(n, sign, disk_ids, band_ids)
    cycles = [tuple((bmap[b], d) for b, d in c) for c in data.basis.basis]
    return SeifertData(surface, homology_basis(surface, cycles), data.seifert_matrix)


# --- embedded sum ----------------------------------------------------------------


@dataclass(frozen=True)
class ChordDiagram:
    """Chords traced across the merged patch disk.

    ``letters[p]`` says which summand owns merged slot p; ``left[i]`` / ``right[j]``
    list the (entry, exit) slot positions of every pass of a basis cycle.
    """

    letters: str
    left: tuple
    right: tuple


def chord_diagram(spec: SumSpec, h1: HomologyData, h2: HomologyData) -> ChordDiagram:
    res = abstract_sum(spec)
    merged = res.surface.disk(spec.left.patch_disk)
    where = {sl: p for p, sl in enumerate(merged.slots)}
    letters = []
    right_bands = set(res.right_bands.values())
    for sl in merged.slots:
        letters.append("R" if sl.band in right_bands else "L")

    def passes(h, patch, bmap):
        ok, signs = orientability(h.surface)
        if signs[patch.patch_disk] != 1:
            raise NotSummable("patch disk must carry the surface orientation")
        disk = h.surface.disk(patch.patch_disk)
        out = []
        for cyc in h.basis:
            chords = []
            for d, a, _, b, _, _ in _chords(h.surface, cyc, signs):
                if d != patch.patch_disk:
                    continue
                sa, sb = disk.slots[a], disk.slots[b]
                chords.append((where[Slot(bmap[sa.band], sa.end)], where[Slot(bmap[sb.band], sb.end)]))
            out.append(tuple(chords))
        return tuple(out)

    return ChordDiagram(
        "".join(letters),
        passes(h1, spec.left, res.left_bands),
        passes(h2, spec.right, res.right_bands),
    )


def _crossing(a, b, c, d, n) -> int:
    span = (b - a) % n
    ic, id_ = 0 < (c - a) % n < span, 0 < (d - a) % n < span
    return (ic and not id_) - (id_ and not ic)


def coupling_block(spec: SumSpec, chords: ChordDiagram) -> tuple:
    """C[i][j]: signed crossings of left cycle i's chords with right cycle j's chords."""
    n = len(chords.letters)
    for side, letter in ((chords.left, "L"), (chords.right, "R")):
        for passes in side:
            for a, b in passes:
                if not (0 <= a < n and 0 <= b < n) or a == b:
                    raise InvalidChord(f"chord {(a, b)} is not a pair of distinct slots")
                if chords.letters[a] != letter or chords.letters[b] != letter:
                    raise InvalidChord(f"chord {(a, b)} leaves the {letter} attaching region")
    return tuple(
        tuple(
            sum(_crossing(a, b, c, d, n) for a, b in left for c, d in right)
            for right in chords.right
        )
        for left in chords.left
    )


def embedded_sum(d1: SeifertData, d2: SeifertData, spec: SumSpec, chords=None, order=LeftFirst) -> SeifertData:
    order = Order(order)
    if spec.left.host != d1.surface or spec.right.host != d2.surface:
        raise NotSummable("spec patches do not live on the given surfaces")
    if not check_summable(spec):
        raise NotSummable(f"not summable along {spec.interleaving!r}")
    res = abstract_sum(spec)
    h = summed_homology(d1.basis, d2.basis, res)
    if chords is None:
        chords = chord_diagram(spec, d1.basis, d2.basis)
    c = coupling_block(spec, chords)
    r1, r2 = d1.rank, d2.rank
    if order is LeftFirst:
        v = la.block(d1.seifert_matrix, c, la.zeros(r2, r1), d2.seifert_matrix)
    else:
        low = tuple(tuple(-x for x in row) for row in la.transpose(c)) if r1 else tuple(() for _ in range(r2))
        v = la.block(d1.seifert_matrix, la.zeros(r1, r2), low, d2.seifert_matrix)
    return SeifertData(res.surface, h, v)


# --- invariants -------------------------------------------------------------------


def alexander_raw(d: SeifertData) -> tuple:
    """det(Vᵀ - tV) by exact interpolation at t = 0..r."""
    v = d.seifert_matrix
    vt = la.transpose(v) if v else ()
    r = d.rank
    vals = [la.det(tuple(tuple(a - k * b for a, b in zip(ra, rb)) for ra, rb in zip(vt, v))) for k in range(r + 1)]
    return poly.interpolate(vals)


def alexander(d: SeifertData) -> tuple:
    return poly.normalize(alexander_raw(d))


def homological_monodromy(d: SeifertData) -> tuple:
    """V⁻¹·Vᵀ over the integers."""
    inv = la.integer_inverse(d.seifert_matrix)
    if inv is None:
        raise NotUnimodular(f"det V = {la.det(d.seifert_matrix)}")
    return la.matmul(inv, la.transpose(d.seifert_matrix))


def order_invariant(d1: SeifertData, d2: SeifertData, spec: SumSpec, chords=None, order=LeftFirst,
                    left_core: int = 0, right_core: int = 0) -> int:
    """Mod-2 linking of the two band cores in the summed embedding.

    Each core must cross the patch exactly once.  The value is read from the coupling
    position (left core row, right core column) of the summed Seifert matrix: 1 when
    the left summand is placed first, 0 in the other order.
    """
    if chords is None:
        chords = chord_diagram(spec, d1.basis, d2.basis)
    for side, core, name in ((chords.left, left_core, "left"), (chords.right, right_core, "right")):
        if not 0 <= core < len(side) or len(side[core]) != 1:
            raise NoCoreCycle(f"{name} core cycle must cross the patch exactly once")
    total = embedded_sum(d1, d2, spec, chords, order)
    return total.seifert_matrix[left_core][d1.rank + right_core] % 2


def fiberedness_necessary(d: SeifertData) -> bool:
    """det V = ±1 and deg Δ = rank: the monic Alexander condition."""
    return abs(la.det(d.seifert_matrix)) == 1 and poly.degree(alexander_raw(d)) == d.rank
