"""Mapping classes seen through their action on first homology.

A cycle is a closed walk in the disk-band graph, written as a tuple of
``(band_id, direction)`` steps; direction +1 runs the band from end 0 to end 1.
Consecutive steps must meet at a common disk and a walk may not immediately
retrace the band it arrived on.

Intersection numbers are counted on a concrete drawing: each walk runs along band
cores and crosses every disk it visits in a straight chord between the two slots.
The second curve is pushed to the right of the band cores (before the slot on the
end-0 disk, after it on the end-1 disk), so all crossings sit in the disks where they
are counted by chord interleaving.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import _linalg as la
from . import polynomial as poly
from .errors import (
    BasisEmbeddingMissing,
    CycleNotInSpan,
    NotOrientable,
    ParseError,
    SurfaceMismatch,
)
from .surface import RibbonSurface, first_betti, orientability


def _norm_cycle(cycle) -> tuple:
    return tuple((str(b), int(d)) for b, d in cycle)


def _chords(s: RibbonSurface, cycle, signs) -> list:
    """(disk, pos_in, end_in, pos_out, end_out) for every disk visit of the walk."""
    out = []
    n = len(cycle)
    if n == 0:
        raise ValueError("empty cycle")
    for i, (band, d) in enumerate(cycle):
        nb, nd = cycle[(i + 1) % n]
        end_in = 1 if d == 1 else 0
        end_out = 0 if nd == 1 else 1
        arrive, leave = s.end(band, end_in), s.end(nb, end_out)
        if arrive.disk != leave.disk:
            raise ValueError(f"walk is not closed: step {i} ends on {arrive.disk}, next starts on {leave.disk}")
        if arrive.pos == leave.pos:
            raise ValueError(f"walk retraces band {band!r}")
        k = len(s.disk(arrive.disk).slots)
        sign = signs[arrive.disk]
        out.append((arrive.disk, (sign * arrive.pos) % k, end_in, (sign * leave.pos) % k, end_out, k))
    return out


def _crossing(a, b, c, d, n) -> int:
    """Sign of the crossing of chord a->b with chord c->d on a circle of n positions."""
    span = (b - a) % n
    inside_c = 0 < (c - a) % n < span
    inside_d = 0 < (d - a) % n < span
    if inside_c and not inside_d:
        return 1
    if inside_d and not inside_c:
        return -1
    return 0


def intersection_number(s: RibbonSurface, x, y, signs=None) -> int:
    """Algebraic intersection ⟨x, y⟩ of two cycles on an orientable surface."""
    if signs is None:
        ok, signs = orientability(s)
        if not ok:
            raise NotOrientable("intersection numbers need an orientation")
    cx, cy = _chords(s, _norm_cycle(x), signs), _chords(s, _norm_cycle(y), signs)
    total = 0
    for disk, a, _, b, _, k in cx:
        n = 3 * k
        a, b = 3 * a + 1, 3 * b + 1
        for disk2, c, ec, d, ed, _ in cy:
            if disk2 != disk:
                continue
            # pushed copy: end-0 slots shift back, end-1 slots shift forward
            c = 3 * c + 1 + (1 if ec else -1)
            d = 3 * d + 1 + (1 if ed else -1)
            total += _crossing(a, b, c, d, n)
    return total


def band_vector(s: RibbonSurface, cycle) -> tuple:
    idx = {b: i for i, b in enumerate(s.band_ids)}
    v = [0] * len(idx)
    for b, d in _norm_cycle(cycle):
        v[idx[b]] += d
    return tuple(v)


def spanning_forest_cycles(s: RibbonSurface) -> list:
    """Fundamental cycles of a BFS spanning forest, one per non-tree band in band order."""
    parent = {}  # disk -> (parent disk, band, direction from parent)
    tree = set()
    incident = {d: [] for d in s.disk_ids}
    for b in s.band_ids:
        u, v = s.end(b, 0).disk, s.end(b, 1).disk
        incident[u].append((b, v, 1))
        incident[v].append((b, u, -1))
    for root in s.disk_ids:
        if root in parent:
            continue
        parent[root] = None
        queue = [root]
        while queue:
            u = queue.pop(0)
            for b, v, d in incident[u]:
                if v not in parent:
                    parent[v] = (u, b, d)
                    tree.add(b)
                    queue.append(v)

    def path_to_root(v):
        steps = []
        while parent[v] is not None:
            u, b, d = parent[v]
            steps.append((b, -d))  # walk from v up to u
            v = u
        return steps

    cycles = []
    for b in s.band_ids:
        if b in tree:
            continue
        u, v = s.end(b, 0).disk, s.end(b, 1).disk
        up_v, up_u = path_to_root(v), path_to_root(u)
        # drop the common tail so the walk does not backtrack
        while up_v and up_u and up_v[-1] == up_u[-1]:
            up_v.pop()
            up_u.pop()
        down_u = [(bb, -dd) for bb, dd in reversed(up_u)]
        cycles.append(((b, 1),) + tuple(up_v) + tuple(down_u))
    return cycles


@dataclass(frozen=True)
class HomologyData:
    surface: RibbonSurface
    basis: tuple
    intersection: tuple

    @property
    def rank(self) -> int:
        return len(self.basis)

    def pairing(self, x, y) -> int:
        """⟨x, y⟩ for coefficient vectors in this basis."""
        j = self.intersection
        return sum(x[i] * j[i][k] * y[k] for i in range(len(x)) for k in range(len(y)) if x[i] and y[k])

    def coordinates(self, cycle) -> tuple:
        """Express a walk in the basis; CycleNotInSpan when impossible over Z."""
        s = self.surface
        target = band_vector(s, cycle)
        cols = la.transpose(tuple(band_vector(s, c) for c in self.basis)) if self.basis else tuple(
            () for _ in target
        )
        if not self.basis:
            if any(target):
                raise CycleNotInSpan("basis is empty")
            return ()
        sol = la.solve(cols, target)
        if sol is None or any(Fraction(x).denominator != 1 for x in sol):
            raise CycleNotInSpan(f"cycle {cycle!r} is not an integer combination of the basis")
        return tuple(int(x) for x in sol)


def homology_basis(s: RibbonSurface, cycles=None) -> HomologyData:
    """Homology with its intersection matrix.

    Uses the spanning-forest basis unless ``cycles`` is given, in which case those walks
    must be independent and as many as the first Betti number.
    """
    ok, signs = orientability(s)
    if not ok:
        raise NotOrientable("homology with intersection form needs an orientable surface")
    basis = tuple(_norm_cycle(c) for c in (spanning_forest_cycles(s) if cycles is None else cycles))
    r = first_betti(s)
    if len(basis) != r:
        raise ValueError(f"basis has {len(basis)} cycles, first Betti number is {r}")
    for c in basis:
        _chords(s, c, signs)
    if r and la.rank([band_vector(s, c) for c in basis]) != r:
        raise ValueError("basis cycles are linearly dependent")
    j = tuple(tuple(intersection_number(s, x, y, signs) for y in basis) for x in basis)
    return HomologyData(s, basis, j)


@dataclass(frozen=True)
class MappingClass:
    """Twist word (leftmost letter applied last) and its matrix on homology.

    Matrix columns are the images of the basis cycles.
    """

    homology: HomologyData
    word: tuple
    matrix: tuple

    @property
    def surface(self) -> RibbonSurface:
        return self.homology.surface


def _transvection(h: HomologyData, c, sign: int) -> tuple:
    r = h.rank
    jc = [sum(h.intersection[k][j] * c[j] for j in range(r)) for k in range(r)]
    return tuple(tuple(int(i == k) + sign * c[i] * jc[k] for k in range(r)) for i in range(r))


def _as_vector(h: HomologyData, cycle) -> tuple:
    if isinstance(cycle, int):
        if not 0 <= cycle < h.rank:
            raise CycleNotInSpan(f"no basis cycle {cycle}")
        return tuple(int(i == cycle) for i in range(h.rank))
    cycle = tuple(cycle)
    if cycle and isinstance(cycle[0], int):
        if len(cycle) != h.rank:
            raise CycleNotInSpan("coefficient vector has the wrong length")
        return cycle
    return h.coordinates(cycle)


def identity_class(h: HomologyData) -> MappingClass:
    return MappingClass(h, (), la.identity(h.rank))


def dehn_twist(h: HomologyData, cycle, sign: int = 1) -> MappingClass:
    """x ↦ x + sign·⟨x, c⟩·c.  ``cycle`` is a basis index, coefficient vector or walk."""
    if sign not in (1, -1):
        raise ValueError("twist sign must be ±1")
    c = _as_vector(h, cycle)
    letter = (cycle if isinstance(cycle, int) else c, sign)
    return MappingClass(h, (letter,), _transvection(h, c, sign))


def compose(phi1: MappingClass, phi2: MappingClass) -> MappingClass:
    """phi1 ∘ phi2: phi2 acts first."""
    if phi1.homology != phi2.homology:
        raise SurfaceMismatch("mapping classes live on different surfaces or bases")
    return MappingClass(phi1.homology, phi1.word + phi2.word, la.matmul(phi1.matrix, phi2.matrix))


def compose_all(h: HomologyData, classes) -> MappingClass:
    out = identity_class(h)
    for phi in classes:
        out = compose(out, phi)
    return out


def from_word(h: HomologyData, word) -> MappingClass:
    """Product of twists; ``word[0]`` is applied last."""
    return compose_all(h, [dehn_twist(h, c, e) for c, e in word])


def inverse(phi: MappingClass) -> MappingClass:
    word = tuple((c, -e) for c, e in reversed(phi.word))
    inv = la.integer_inverse(phi.matrix)
    assert inv is not None
    return MappingClass(phi.homology, word, inv)


def char_poly(phi: MappingClass) -> tuple:
    """det(tI - Φ), constant term first."""
    return la.charpoly(phi.matrix)


def extend_by_identity(phi: MappingClass, target: HomologyData, index_map, band_map=None) -> MappingClass:
    """Carry phi onto a bigger surface that contains its page.

    ``index_map[i]`` is the position in ``target.basis`` of phi's i-th basis cycle;
    ``band_map`` renames phi's bands into the target.  The twist word is replayed with
    the target's intersection form, so cycles of the other summand that cross a twist
    curve inside the patch pick up the transvection as they must.
    """
    index_map = list(index_map)
    band_map = band_map or {}
    src = phi.homology
    if len(index_map) != src.rank:
        raise BasisEmbeddingMissing("index map does not cover the source basis")
    for i, cyc in enumerate(src.basis):
        j = index_map[i]
        if not 0 <= j < target.rank:
            raise BasisEmbeddingMissing(f"index {j} outside the target basis")
        moved = tuple((band_map.get(b, b), d) for b, d in cyc)
        if target.basis[j] != moved:
            raise BasisEmbeddingMissing(f"source cycle {i} is not target cycle {j}")

    def lift(c):
        if isinstance(c, int):
            return index_map[c]
        v = [0] * target.rank
        for i, x in enumerate(c):
            v[index_map[i]] += x
        return tuple(v)

    return from_word(target, [(lift(c), e) for c, e in phi.word])


def preserves_form(phi: MappingClass) -> bool:
    m, j = phi.matrix, phi.homology.intersection
    return la.matmul(la.matmul(la.transpose(m), j), m) == j


# --- text format -----------------------------------------------------------------

_TWIST_RE = re.compile(r"^twist\s+(\d+)\s+([+-])\s*$")


def parse_twist_word(text: str) -> tuple:
    """``twist <cycle-index> <+|->`` lines; the last line is applied first."""
    word = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line or not line.startswith("twist"):
            continue
        m = _TWIST_RE.match(line)
        if not m:
            raise ParseError(f"malformed twist line {raw!r}")
        word.append((int(m.group(1)), 1 if m.group(2) == "+" else -1))
    return tuple(word)


def format_twist_word(word) -> str:
    return "".join(f"twist {c} {'+' if e > 0 else '-'}\n" for c, e in word)


def normalized_char_poly(phi: MappingClass) -> tuple:
    return poly.normalize(char_poly(phi))


def summed_homology(h1: HomologyData, h2: HomologyData, result) -> HomologyData:
    """Homology of an abstract sum in the basis (h1 cycles, then h2 cycles)."""
    cycles = [tuple((result.left_bands[b], d) for b, d in c) for c in h1.basis]
    cycles += [tuple((result.right_bands[b], d) for b, d in c) for c in h2.basis]
    return homology_basis(result.surface, cycles)
