"""Book files: a surface plus the data that turns it into a book, a cobordism or a Seifert pair.

::

    disk D1: B1.0 B2.0          # surface lines, as in surface files
    band B1: twist 2
    cycle +B1 -B2               # optional homology basis, one walk per line
    twist 0 +                   # monodromy word, last line applied first
    critical 1 1/3              # Morse critical point: index, angle
    seifert -1                  # optional Seifert matrix rows
    core 1/3 2/3                # optional stiffening core

Without cycle lines a primitive s-surface gets its consecutive-band basis and any
other surface the spanning-forest basis.  Without twist lines a primitive
s-surface gets its fibred monodromy and any other surface the identity.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .mapclass import HomologyData, MappingClass, format_twist_word, from_word, homology_basis, parse_twist_word
from .surface import RibbonSurface, first_betti, format_surface, parse_surface, primitive_s_surface

_CYCLE_TOKEN = re.compile(r"^([+-])(\S+)$")
_KNOWN = {"disk", "band", "cycle", "twist", "critical", "seifert", "core"}


@dataclass(frozen=True)
class BookFile:
    surface: RibbonSurface
    cycles: tuple | None = None
    word: tuple | None = None
    critical: tuple = ()
    seifert: tuple | None = None
    core: tuple | None = None


def _fraction(tok: str, raw: str) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {tok!r} in {raw!r}") from None


def parse_book(text: str) -> BookFile:
    surface = parse_surface(text)
    cycles, critical, seifert, core, twists = [], [], [], None, False
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head not in _KNOWN:
            raise ParseError(f"unknown keyword {head!r} in {raw!r}")
        if head == "cycle":
            walk = []
            for tok in rest:
                m = _CYCLE_TOKEN.match(tok)
                if not m:
                    raise ParseError(f"cycle steps look like +B1 or -B2, got {tok!r}")
                walk.append((m.group(2), 1 if m.group(1) == "+" else -1))
            if not walk:
                raise ParseError("empty cycle line")
            cycles.append(tuple(walk))
        elif head == "twist":
            twists = True
        elif head == "critical":
            if len(rest) != 2:
                raise ParseError(f"critical lines are 'critical <index> <p>/<q>', got {raw!r}")
            try:
                k = int(rest[0])
            except ValueError:
                raise ParseError(f"bad index in {raw!r}") from None
            critical.append((k, _fraction(rest[1], raw)))
        elif head == "seifert":
            try:
                seifert.append(tuple(int(x) for x in rest))
            except ValueError:
                raise ParseError(f"Seifert rows are integers, got {raw!r}") from None
        elif head == "core":
            if len(rest) != 2:
                raise ParseError(f"core lines are 'core <lo> <hi>', got {raw!r}")
            core = (_fraction(rest[0], raw), _fraction(rest[1], raw))
    return BookFile(
        surface,
        tuple(cycles) or None,
        parse_twist_word(text) if twists else None,
        tuple(critical),
        tuple(seifert) if seifert else None,
        core,
    )


def format_book(b: BookFile) -> str:
    out = [format_surface(b.surface)]
    for walk in b.cycles or ():
        out.append("cycle " + " ".join(f"{'+' if d > 0 else '-'}{band}" for band, d in walk) + "\n")
    if b.word:
        out.append(format_twist_word(b.word))
    for k, a in b.critical:
        out.append(f"critical {k} {a.numerator}/{a.denominator}\n")
    for row in b.seifert or ():
        out.append("seifert " + " ".join(str(x) for x in row) + "\n")
    if b.core is not None:
        out.append(f"core {b.core[0]} {b.core[1]}\n")
    return "".join(out)


def recognize_primitive(s: RibbonSurface):
    """(n, sign, disk_ids, band_ids) when ``s`` is a primitive s-surface, else None."""
    if len(s.disks) != 2 or not s.bands:
        return None
    twists = {b.half_twists for b in s.bands}
    if len(twists) != 1 or abs(next(iter(twists))) != 2:
        return None
    sign = next(iter(twists)) // 2
    d1 = s.disks[0]
    band_ids = [sl.band for sl in d1.slots]
    if len(band_ids) != len(s.bands):
        return None
    try:
        candidate = primitive_s_surface(len(band_ids), sign, (d1.id, s.disks[1].id), band_ids)
    except ValueError:
        return None
    if candidate.disks != s.disks or set(candidate.bands) != set(s.bands):
        return None
    return len(band_ids), sign, (d1.id, s.disks[1].id), band_ids


def book_homology(b: BookFile) -> HomologyData:
    if b.cycles is not None:
        return homology_basis(b.surface, b.cycles)
    prim = recognize_primitive(b.surface)
    if prim is not None and prim[0] >= 2 and first_betti(b.surface) == prim[0] - 1:
        from .openbook import consecutive_cycles

        return homology_basis(b.surface, consecutive_cycles(prim[3]))
    return homology_basis(b.surface)


def book_monodromy(b: BookFile, h: HomologyData | None = None) -> MappingClass:
    h = h if h is not None else book_homology(b)
    if b.word is not None:
        return from_word(h, b.word)
    prim = recognize_primitive(b.surface)
    if prim is not None and prim[0] >= 2 and b.cycles is None:
        from .openbook import primitive_open_book

        # same consecutive-band basis, so the word carries over index for index
        return from_word(h, primitive_open_book(*prim).monodromy.word)
    return from_word(h, ())


def book_seifert(b: BookFile, h: HomologyData | None = None):
    """SeifertData from explicit rows, or the standard matrix of a primitive page; else None."""
    from .embedded import SeifertData, seifert_matrix_primitive

    h = h if h is not None else book_homology(b)
    if b.seifert is not None:
        return SeifertData(b.surface, h, b.seifert)
    if h.rank == 0:
        return SeifertData(b.surface, h, ())
    prim = recognize_primitive(b.surface)
    if prim is not None and prim[0] >= 2 and b.cycles is None:
        return SeifertData(b.surface, h, seifert_matrix_primitive(*prim).seifert_matrix)
    return None
