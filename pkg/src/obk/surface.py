"""Compact surfaces with boundary as disk-band presentations.

A surface is a collection of disks, each carrying a cyclic sequence of *slots*
(counterclockwise as seen from the front of the disk), and bands whose two ends
occupy slots.  A band carries a number of half-twists; only the parity matters for
the abstract surface, the signed value is kept for embedding data (Seifert forms).

Boundary arcs come in three kinds:

* ``gap``  -- the rim segment of a disk from slot ``i`` to slot ``i + 1`` (ccw);
* ``side`` -- one of the two long sides of a band, labelled by the corner it meets at
  end 0 (``0`` = the corner just before the slot, ``1`` = just after);
* ``rim``  -- the whole boundary of a disk without slots.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, NamedTuple

from .errors import (
    DanglingSlot,
    DuplicateId,
    EmptyPresentation,
    NotConnected,
    NotOrientable,
    ParseError,
)

BEFORE, AFTER = 0, 1


class Slot(NamedTuple):
    band: str
    end: int  # 0 or 1

    def __str__(self) -> str:
        return f"{self.band}.{self.end}"


class Disk(NamedTuple):
    id: str
    slots: tuple


class Band(NamedTuple):
    id: str
    half_twists: int = 0


class End(NamedTuple):
    disk: str
    pos: int


class Arc(NamedTuple):
    kind: str  # "gap" | "side" | "rim"
    owner: str
    index: int


@dataclass(frozen=True)
class BoundaryCircuit:
    arcs: tuple

    def __len__(self) -> int:
        return len(self.arcs)


@dataclass(frozen=True)
class RibbonSurface:
    disks: tuple
    bands: tuple
    _ends: dict = field(init=False, repr=False, compare=False, hash=False)
    _disk_index: dict = field(init=False, repr=False, compare=False, hash=False)
    _band_index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not self.disks:
            raise EmptyPresentation("a surface needs at least one disk")
        disk_ids = [d.id for d in self.disks]
        band_ids = [b.id for b in self.bands]
        for kind, ids in (("disk", disk_ids), ("band", band_ids)):
            seen = set()
            for i in ids:
                if i in seen:
                    raise DuplicateId(f"{kind} id {i!r} used twice")
                seen.add(i)
        known = set(band_ids)
        ends: dict = {}
        for d in self.disks:
            for pos, s in enumerate(d.slots):
                if s.band not in known:
                    raise DanglingSlot(f"disk {d.id!r} references unknown band {s.band!r}")
                if s.end not in (0, 1):
                    raise DanglingSlot(f"bad band end {s.end!r} on disk {d.id!r}")
                if (s.band, s.end) in ends:
                    raise DanglingSlot(f"band end {s} referenced twice")
                ends[(s.band, s.end)] = End(d.id, pos)
        for b in band_ids:
            for e in (0, 1):
                if (b, e) not in ends:
                    raise DanglingSlot(f"band end {b}.{e} is not attached to any disk")
        object.__setattr__(self, "_ends", ends)
        object.__setattr__(self, "_disk_index", {d.id: d for d in self.disks})
        object.__setattr__(self, "_band_index", {b.id: b for b in self.bands})

    def disk(self, disk_id) -> Disk:
        return self._disk_index[disk_id]

    def band(self, band_id) -> Band:
        return self._band_index[band_id]

    def end(self, band_id, e: int) -> End:
        return self._ends[(band_id, e)]

    def twist(self, band_id) -> int:
        return self.band(band_id).half_twists

    @property
    def disk_ids(self) -> tuple:
        return tuple(d.id for d in self.disks)

    @property
    def band_ids(self) -> tuple:
        return tuple(b.id for b in self.bands)


def _slot(ref) -> Slot:
    if isinstance(ref, Slot):
        return ref
    if isinstance(ref, str):
        band, _, end = ref.rpartition(".")
        if not band or end not in ("0", "1"):
            raise DanglingSlot(f"malformed slot reference {ref!r}")
        return Slot(band, int(end))
    band, end = ref
    return Slot(str(band), int(end))


def build_surface(disks: Iterable, bands: Iterable) -> RibbonSurface:
    """Validated surface from loose records.

    ``disks``: pairs ``(id, slots)`` (or Disk), slots given as ``"b.0"`` strings or
    ``(band, end)`` pairs.  ``bands``: pairs ``(id, half_twists)`` (or Band).
    """
    ds = tuple(Disk(str(i), tuple(_slot(s) for s in slots)) for i, slots in disks)
    bs = tuple(Band(str(i), int(t)) for i, t in bands)
    return RibbonSurface(ds, bs)


def euler_characteristic(s: RibbonSurface) -> int:
    return len(s.disks) - len(s.bands)


def components(s: RibbonSurface) -> list[list[str]]:
    """Disk ids grouped by connected component, in order of first disk."""
    parent = {d: d for d in s.disk_ids}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for b in s.band_ids:
        a, c = find(s.end(b, 0).disk), find(s.end(b, 1).disk)
        if a != c:
            parent[c] = a
    groups: dict = {}
    for d in s.disk_ids:
        groups.setdefault(find(d), []).append(d)
    return list(groups.values())


def is_connected(s: RibbonSurface) -> bool:
    return len(components(s)) == 1


def all_arcs(s: RibbonSurface) -> list[Arc]:
    arcs = []
    for d in s.disks:
        if d.slots:
            arcs.extend(Arc("gap", d.id, i) for i in range(len(d.slots)))
        else:
            arcs.append(Arc("rim", d.id, 0))
    for b in s.bands:
        arcs.extend((Arc("side", b.id, BEFORE), Arc("side", b.id, AFTER)))
    return arcs


def boundary_walk(s: RibbonSurface) -> list[BoundaryCircuit]:
    """Boundary circuits, deterministic.

    Rim segments are walked counterclockwise; at a slot the walk turns onto the band
    side at the current corner.  An even band joins the before-corner at one end to the
    after-corner at the other; an odd band joins like corners and so reverses the walk.
    """
    circuits = []
    seen: set = set()
    for d in s.disks:
        if not d.slots:
            arc = Arc("rim", d.id, 0)
            seen.add(arc)
            circuits.append(BoundaryCircuit((arc,)))
            continue
        n = len(d.slots)
        for g in range(n):
            start = Arc("gap", d.id, g)
            if start in seen:
                continue
            arcs = [start]
            seen.add(start)
            disk, k, direction = d, (g + 1) % n, 1
            while True:
                corner_in = BEFORE if direction == 1 else AFTER
                slot = disk.slots[k]
                other = s.end(slot.band, 1 - slot.end)
                odd = s.twist(slot.band) % 2
                corner_out = corner_in if odd else 1 - corner_in
                side = corner_in if slot.end == 0 else corner_out
                arcs.append(Arc("side", slot.band, side))
                disk = s.disk(other.disk)
                m = len(disk.slots)
                if corner_out == AFTER:
                    gap, k, direction = other.pos, (other.pos + 1) % m, 1
                else:
                    gap, k, direction = (other.pos - 1) % m, (other.pos - 1) % m, -1
                arc = Arc("gap", disk.id, gap)
                if arc == start:
                    break
                arcs.append(arc)
            seen.update(arcs)
            circuits.append(BoundaryCircuit(tuple(arcs)))
    return circuits


def orientability(s: RibbonSurface) -> tuple[bool, dict | None]:
    """Solve the sign system s(u)·s(v) = (-1)^half_twists over every band.

    Returns ``(True, signs)`` with the first disk of each component at +1, or
    ``(False, None)``.
    """
    signs: dict = {}
    incident: dict = {d: [] for d in s.disk_ids}
    for b in s.bands:
        u, v = s.end(b.id, 0).disk, s.end(b.id, 1).disk
        flip = -1 if b.half_twists % 2 else 1
        incident[u].append((v, flip))
        incident[v].append((u, flip))
    for root in s.disk_ids:
        if root in signs:
            continue
        signs[root] = 1
        stack = [root]
        while stack:
            u = stack.pop()
            for v, flip in incident[u]:
                want = signs[u] * flip
                if v not in signs:
                    signs[v] = want
                    stack.append(v)
                elif signs[v] != want:
                    return False, None
    return True, signs


def genus_and_boundary(s: RibbonSurface) -> tuple[int, int]:
    if not is_connected(s):
        raise NotConnected("genus needs a connected surface")
    if not orientability(s)[0]:
        raise NotOrientable("genus here is the orientable genus")
    b = len(boundary_walk(s))
    g2 = 2 - euler_characteristic(s) - b
    assert g2 >= 0 and g2 % 2 == 0
    return g2 // 2, b


def first_betti(s: RibbonSurface) -> int:
    return len(s.bands) - len(s.disks) + len(components(s))


def invariant_vector(s: RibbonSurface) -> tuple:
    """(χ, boundary count, orientable, genus or None) -- isomorphism invariants."""
    orientable = orientability(s)[0]
    genus = None
    if orientable and is_connected(s):
        genus = genus_and_boundary(s)[0]
    return (euler_characteristic(s), len(boundary_walk(s)), orientable, genus)


def primitive_s_surface(n: int, sign: int, disk_ids=("D1", "D2"), band_ids=None) -> RibbonSurface:
    """Two disks joined by n parallel bands, each with one full twist of the given sign.

    Both disks list the bands in the same cyclic order; band ``i`` has end 0 on the
    first disk and end 1 on the second.
    """
    if n < 1:
        raise ValueError("need at least one band")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if band_ids is None:
        band_ids = [f"B{i + 1}" for i in range(n)]
    if len(band_ids) != n:
        raise ValueError("wrong number of band ids")
    d1, d2 = disk_ids
    return RibbonSurface(
        (Disk(d1, tuple(Slot(b, 0) for b in band_ids)), Disk(d2, tuple(Slot(b, 1) for b in band_ids))),
        tuple(Band(b, 2 * sign) for b in band_ids),
    )


def disk_surface(disk_id: str = "D") -> RibbonSurface:
    return RibbonSurface((Disk(disk_id, ()),), ())


def relabel(s: RibbonSurface, disk_map: dict, band_map: dict) -> RibbonSurface:
    """Rename disks and bands (maps may be partial)."""
    dm = lambda x: disk_map.get(x, x)  # noqa: E731
    bm = lambda x: band_map.get(x, x)  # noqa: E731
    return RibbonSurface(
        tuple(Disk(dm(d.id), tuple(Slot(bm(sl.band), sl.end) for sl in d.slots)) for d in s.disks),
        tuple(Band(bm(b.id), b.half_twists) for b in s.bands),
    )


def torus_link_boundary_count(n: int) -> int:
    return gcd(2, n)


# --- text format -----------------------------------------------------------------

_DISK_RE = re.compile(r"^disk\s+(\S+?)\s*:\s*(.*)$")
_BAND_RE = re.compile(r"^band\s+(\S+?)\s*:\s*twist\s+(-?\d+)\s*$")


def parse_surface(text: str) -> RibbonSurface:
    """Read ``disk <id>: <slot> ...`` and ``band <id>: twist <k>`` lines.

    Lines starting with any other keyword are left for other readers (book files share
    this syntax), so only unknown *surface-looking* lines are rejected.
    """
    disks, bands = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head = line.split(None, 1)[0]
        if head == "disk":
            m = _DISK_RE.match(line)
            if not m:
                raise ParseError(f"line {lineno}: malformed disk line {raw!r}")
            disks.append((m.group(1), m.group(2).split()))
        elif head == "band":
            m = _BAND_RE.match(line)
            if not m:
                raise ParseError(f"line {lineno}: malformed band line {raw!r}")
            bands.append((m.group(1), int(m.group(2))))
    return build_surface(disks, bands)


def format_surface(s: RibbonSurface) -> str:
    lines = [f"disk {d.id}: " + " ".join(str(x) for x in d.slots) for d in s.disks]
    lines += [f"band {b.id}: twist {b.half_twists}" for b in s.bands]
    return "\n".join(line.rstrip() for line in lines) + "\n"
