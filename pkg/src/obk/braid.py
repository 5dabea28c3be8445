"""Braid words, Bennequin surfaces and the Stallings fibration of homogeneous closures.

Letters are nonzero integers: ``i`` stands for σ_i, ``-i`` for its inverse.  Strands
are numbered top-down and the closure is read left to right, so the Bennequin
surface has one disk per strand (``D1`` .. ``Dn``) and one band per letter; the band
of the k-th letter is ``X{k}`` and joins disk ``D|i|`` (end 0) to ``D|i|+1`` (end 1)
with one full twist of the letter's sign.  Slots on each disk follow word order.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRange, MissingGenerator, NotHomogeneous, ParseError
from .patching import SumSpec, abstract_sum, make_patch
from .surface import Band, Disk, RibbonSurface, Slot, primitive_s_surface


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple

    def __post_init__(self):
        if self.strands < 2:
            raise IndexOutOfRange("a braid needs at least two strands")
        if not self.letters:
            raise ParseError("empty braid word")
        for x in self.letters:
            if x == 0:
                raise ParseError("0 is not a braid generator")
            if abs(x) > self.strands - 1:
                raise IndexOutOfRange(f"σ_{abs(x)} does not exist on {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def band_name(self, k: int) -> str:
        return f"X{k + 1}"

    def positions(self, level: int) -> list[int]:
        return [k for k, x in enumerate(self.letters) if abs(x) == level]

    def sign(self, k: int) -> int:
        return 1 if self.letters[k] > 0 else -1

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    tokens = text.replace(",", " ").split()
    try:
        letters = tuple(int(t) for t in tokens)
    except ValueError:
        raise ParseError(f"braid words are whitespace-separated integers, got {text!r}") from None
    if not letters:
        raise ParseError("empty braid word")
    if 0 in letters:
        raise ParseError("0 is not a braid generator")
    if strands is None:
        strands = max(abs(x) for x in letters) + 1
    return BraidWord(int(strands), letters)


def is_homogeneous(beta: BraidWord) -> bool:
    signs: dict = {}
    for x in beta.letters:
        if signs.setdefault(abs(x), x > 0) != (x > 0):
            return False
    return True


def missing_generators(beta: BraidWord) -> list[int]:
    present = {abs(x) for x in beta.letters}
    return [i for i in range(1, beta.strands) if i not in present]


def closure_components(beta: BraidWord) -> int:
    """Number of cycles of the permutation underlying the braid."""
    perm = list(range(beta.strands))
    for x in beta.letters:
        i = abs(x) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    seen, count = set(), 0
    for start in range(beta.strands):
        if start in seen:
            continue
        count += 1
        i = start
        while i not in seen:
            seen.add(i)
            i = perm[i]
    return count


def bennequin_surface(beta: BraidWord) -> RibbonSurface:
    disks = []
    for j in range(1, beta.strands + 1):
        slots = []
        for k, x in enumerate(beta.letters):
            if abs(x) == j:
                slots.append(Slot(beta.band_name(k), 0))
            elif abs(x) == j - 1:
                slots.append(Slot(beta.band_name(k), 1))
        disks.append(Disk(f"D{j}", tuple(slots)))
    bands = tuple(Band(beta.band_name(k), 2 * beta.sign(k)) for k in range(len(beta)))
    return RibbonSurface(tuple(disks), bands)


def bennequin_cycles(beta: BraidWord) -> list[tuple]:
    """Consecutive same-generator band pairs, level by level.

    Returns ``(level, first position, second position, walk)`` records.
    """
    out = []
    for level in range(1, beta.strands):
        pos = beta.positions(level)
        for p, q in zip(pos, pos[1:]):
            walk = ((beta.band_name(p), 1), (beta.band_name(q), -1))
            out.append((level, p, q, walk))
    return out


@dataclass(frozen=True)
class SPiece:
    level: int
    count: int
    sign: int
    surface: RibbonSurface


def s_decomposition(beta: BraidWord) -> tuple[list[SPiece], list[SumSpec]]:
    """Primitive s-surfaces, one per generator, and the specs gluing them in order.

    ``specs[k]`` sums the surface built from the first k+1 pieces (left) with piece
    k+1 (right) along the disk of strand k+2; the interleaving lists, in word order,
    which side each band on that disk comes from.
    """
    if not is_homogeneous(beta):
        raise NotHomogeneous(f"braid {beta} uses some generator with both signs")
    missing = missing_generators(beta)
    if missing:
        raise MissingGenerator(f"generators {missing} never occur; the closure splits")
    pieces = []
    for level in range(1, beta.strands):
        pos = beta.positions(level)
        sign = beta.sign(pos[0])
        surf = primitive_s_surface(
            len(pos), sign, disk_ids=(f"D{level}", f"D{level + 1}"), band_ids=[beta.band_name(k) for k in pos]
        )
        pieces.append(SPiece(level, len(pos), sign, surf))
    specs = []
    acc = pieces[0].surface
    for piece in pieces[1:]:
        j = piece.level
        word = "".join("L" if abs(x) == j - 1 else "R" for x in beta.letters if abs(x) in (j - 1, j))
        spec = SumSpec(make_patch(acc, f"D{j}"), make_patch(piece.surface, f"D{j}"), word)
        specs.append(spec)
        acc = abstract_sum(spec).surface
    return pieces, specs


def stallings_open_book(beta: BraidWord):
    """Open book of a homogeneous closure, built as an iterated sum of primitive books."""
    from .openbook import _primitive_book, open_book_sum

    pieces, specs = s_decomposition(beta)
    books = [
        _primitive_book(
            p.count,
            p.sign,
            disk_ids=(f"D{p.level}", f"D{p.level + 1}"),
            band_ids=[beta.band_name(k) for k in beta.positions(p.level)],
        )
        for p in pieces
    ]
    book = books[0]
    for nxt, spec in zip(books[1:], specs):
        j = nxt.page.disk_ids[0]
        spec = SumSpec(make_patch(book.page, j), make_patch(nxt.page, j), spec.interleaving)
        book = open_book_sum(book, nxt, spec)
    return book
