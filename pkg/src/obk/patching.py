"""Disk patches and the abstract sum of two patched surfaces.

Boundary arcs of a disk with k slots are numbered 0..2k-1: arc ``2i`` is where the
band in slot i attaches, arc ``2i + 1`` is the rim gap after slot i.  A disk with no
slots has a single arc 0.  A patch marks a set of these arcs as the attaching region;
it must contain every band arc.  The connected runs of marked arcs are the
*attaching arcs*, listed by smallest arc index.

Two patches are summed along an interleaving word over {L, R}: reading the word,
the i-th ``L`` places the i-th attaching arc of the left patch on the merged disk,
the i-th ``R`` the i-th attaching arc of the right patch.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    BandOutsideAttachingRegion,
    NotSummable,
    ParseError,
    SameHost,
    UnknownDisk,
)
from .surface import Band, Disk, RibbonSurface, Slot, euler_characteristic


def _arc_count(disk: Disk) -> int:
    return max(1, 2 * len(disk.slots))


@dataclass(frozen=True)
class Patch:
    host: RibbonSurface
    patch_disk: str
    attaching_arcs: tuple  # tuple of runs, each a tuple of arc indices in ccw order
    free_arcs: tuple

    @property
    def marked(self) -> frozenset:
        return frozenset(i for run in self.attaching_arcs for i in run)

    def covers_whole_rim(self) -> bool:
        return len(self.marked) == _arc_count(self.host.disk(self.patch_disk))

    def run_slots(self, run) -> tuple:
        disk = self.host.disk(self.patch_disk)
        return tuple(disk.slots[i // 2] for i in run if i % 2 == 0)


def _runs(marked: set, n: int) -> tuple:
    if not marked:
        return ()
    if len(marked) == n:
        return (tuple(range(n)),)
    runs = []
    for start in range(n):
        if start in marked and (start - 1) % n not in marked:
            run, i = [], start
            while i in marked:
                run.append(i)
                i = (i + 1) % n
            runs.append(tuple(run))
    runs.sort(key=min)
    return tuple(runs)


def make_patch(s: RibbonSurface, disk_id, marking=None) -> Patch:
    """Designate a disk of ``s`` as a patch.  ``marking`` defaults to the band arcs."""
    disk_id = str(disk_id)
    try:
        disk = s.disk(disk_id)
    except KeyError:
        raise UnknownDisk(f"no disk {disk_id!r}") from None
    n = _arc_count(disk)
    band_arcs = {2 * i for i in range(len(disk.slots))}
    marked = set(band_arcs if marking is None else (int(i) for i in marking))
    bad = [i for i in marked if not 0 <= i < n]
    if bad:
        raise UnknownDisk(f"arc indices {sorted(bad)} out of range for disk {disk_id!r}")
    missing = band_arcs - marked
    if missing:
        raise BandOutsideAttachingRegion(
            f"band arcs {sorted(missing)} of disk {disk_id!r} are not in the attaching region"
        )
    runs = _runs(marked, n)
    free = tuple(i for i in range(n) if i not in marked)
    return Patch(s, disk_id, runs, free)


@dataclass(frozen=True)
class SumSpec:
    left: Patch
    right: Patch
    interleaving: str

    def swapped(self) -> "SumSpec":
        return SumSpec(self.right, self.left, self.interleaving.translate(str.maketrans("LR", "RL")))


def check_summable(spec: SumSpec) -> bool:
    if spec.left.host is spec.right.host:
        raise SameHost("both patches live on the same surface object")
    word = spec.interleaving
    if set(word) - {"L", "R"}:
        return False
    if word.count("L") != len(spec.left.attaching_arcs):
        return False
    if word.count("R") != len(spec.right.attaching_arcs):
        return False
    # an attaching region filling the whole rim leaves no room for the other side
    if spec.left.covers_whole_rim() and spec.right.attaching_arcs:
        return False
    if spec.right.covers_whole_rim() and spec.left.attaching_arcs:
        return False
    return True


@dataclass(frozen=True)
class SumResult:
    """The summed surface, its induced patch, and where each summand's ids went."""

    surface: RibbonSurface
    patch: Patch
    left_bands: dict
    right_bands: dict
    left_disks: dict
    right_disks: dict

    def __iter__(self):
        return iter((self.surface, self.patch))


def _fresh(name: str, taken: set) -> str:
    while name in taken:
        name += "'"
    return name


def abstract_sum(spec: SumSpec) -> SumResult:
    if not check_summable(spec):
        raise NotSummable(f"patches are not summable along {spec.interleaving!r}")
    m1, m2 = spec.left.host, spec.right.host
    p1, p2 = spec.left.patch_disk, spec.right.patch_disk

    left_disks = {d: d for d in m1.disk_ids}
    left_bands = {b: b for b in m1.band_ids}
    taken_d = set(m1.disk_ids) | (set(m2.disk_ids) - {p2})
    taken_b = set(m1.band_ids) | set(m2.band_ids)
    right_disks, right_bands = {p2: p1}, {}
    for d in m2.disk_ids:
        if d == p2:
            continue
        right_disks[d] = _fresh(d, taken_d) if d in m1.disk_ids else d
        taken_d.add(right_disks[d])
    for b in m2.band_ids:
        right_bands[b] = _fresh(b, taken_b) if b in m1.band_ids else b
        taken_b.add(right_bands[b])

    runs = {"L": list(spec.left.attaching_arcs), "R": list(spec.right.attaching_arcs)}
    patches = {"L": spec.left, "R": spec.right}
    bmaps = {"L": left_bands, "R": right_bands}
    merged_slots, marked = [], []
    for letter in spec.interleaving:
        run = runs[letter].pop(0)
        slots = patches[letter].run_slots(run)
        if not slots:
            continue
        first = len(merged_slots)
        merged_slots.extend(Slot(bmaps[letter][sl.band], sl.end) for sl in slots)
        # band arcs plus the gaps inside the run
        marked.extend(range(2 * first, 2 * len(merged_slots) - 1))
    merged = Disk(p1, tuple(merged_slots))

    disks = [merged if d.id == p1 else d for d in m1.disks]
    disks += [
        Disk(right_disks[d.id], tuple(Slot(right_bands[sl.band], sl.end) for sl in d.slots))
        for d in m2.disks
        if d.id != p2
    ]
    bands = list(m1.bands) + [Band(right_bands[b.id], b.half_twists) for b in m2.bands]
    out = RibbonSurface(tuple(disks), tuple(bands))
    assert euler_characteristic(out) == euler_characteristic(m1) + euler_characteristic(m2) - 1
    if not merged_slots and (spec.left.covers_whole_rim() or spec.right.covers_whole_rim()):
        marked = [0]
    patch = make_patch(out, p1, marked)
    return SumResult(out, patch, left_bands, right_bands, left_disks, right_disks)


# --- text format -----------------------------------------------------------------

_PATCH_RE = re.compile(r"^patch\s+(\S+)\s+disk\s+(\S+)(?:\s+attach\s*(.*))?$")
_SPEC_RE = re.compile(r"^sumspec\s+left\s+(\S+)\s+right\s+(\S+)\s+interleave\s+([LR]*)\s*$")


def _content_lines(text: str):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_patch(text: str, load_surface, base: Path | None = None) -> Patch:
    """``patch <surface-file> disk <id> [attach <arc indices>]``.

    ``load_surface(path)`` resolves the surface file; relative paths are taken from
    ``base``.  Without ``attach`` the band arcs are used.
    """
    for line in _content_lines(text):
        m = _PATCH_RE.match(line)
        if not m:
            raise ParseError(f"malformed patch line {line!r}")
        path = Path(m.group(1))
        if base is not None and not path.is_absolute():
            path = base / path
        surface = load_surface(path)
        marking = None
        if m.group(3) is not None and m.group(3).strip():
            try:
                marking = [int(x) for x in m.group(3).replace(",", " ").split()]
            except ValueError:
                raise ParseError(f"bad arc indices in {line!r}") from None
        return make_patch(surface, m.group(2), marking)
    raise ParseError("no patch line found")


def parse_sumspec(text: str) -> tuple[str, str, str]:
    """``sumspec left <patchfile> right <patchfile> interleave <word>`` -> paths and word."""
    for line in _content_lines(text):
        m = _SPEC_RE.match(line)
        if not m:
            raise ParseError(f"malformed sumspec line {line!r}")
        return m.group(1), m.group(2), m.group(3)
    raise ParseError("no sumspec line found")
