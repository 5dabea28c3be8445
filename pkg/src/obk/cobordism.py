"""Cylindrical cobordisms, kept intensionally as (base, monodromy).

A cylindrical cobordism over a page M is the product I × M with its outgoing end
glued back through the monodromy; every in-scope cobordism is the splitting of a
Seifert pair, so nothing is lost by storing only the base and the gluing map.
Directing segments are the unit interval; stiffening cores are closed rational
subintervals of its interior.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import polynomial as poly
from .embedded import SeifertData, alexander
from .errors import BaseMismatch, DegenerateCore, CoreOrderViolation, InvariantMismatch, NotSummable
from .mapclass import MappingClass, char_poly, compose, identity_class, homology_basis
from .openbook import _check_boundary, summed_monodromy
from .patching import SumSpec, abstract_sum, check_summable
from .surface import RibbonSurface, boundary_walk, euler_characteristic, genus_and_boundary

UNIT = (Fraction(0), Fraction(1))
COLLAPSED = "circle-collapsed mapping torus"


@dataclass(frozen=True)
class CylindricalCobordism:
    base: RibbonSurface
    monodromy: MappingClass
    directing_segment: tuple = UNIT
    # the free boundary of a general cobordism; for cylindrical ones it is the
    # complement of the cylindrical boundary and is carried only as a note
    annotation: str = ""

    def __post_init__(self):
        if self.monodromy.surface != self.base:
            raise BaseMismatch("monodromy acts on a different surface than the base")

    @property
    def euler_volume(self) -> int:
        # χ(I × M) = χ(I)·χ(M) = χ(M)
        return euler_characteristic(self.base)


def cylinder(base: RibbonSurface, homology=None) -> CylindricalCobordism:
    h = homology if homology is not None else homology_basis(base)
    return CylindricalCobordism(base, identity_class(h))


def twist_cobordism(phi: MappingClass) -> CylindricalCobordism:
    return CylindricalCobordism(phi.surface, phi)


def compose_cobordisms(w1: CylindricalCobordism, w2: CylindricalCobordism) -> CylindricalCobordism:
    """W2 ∘ W1: run through W1, then W2.  Monodromy φ2 ∘ φ1.

    The two directing segments are stacked and rescaled back to [0, 1].
    """
    if w1.base != w2.base or w1.monodromy.homology != w2.monodromy.homology:
        raise BaseMismatch("cobordisms over different bases (or bases of homology) cannot be stacked")
    return CylindricalCobordism(w1.base, compose(w2.monodromy, w1.monodromy), UNIT, w1.annotation or w2.annotation)


@dataclass(frozen=True)
class SeifertPair:
    hypersurface: RibbonSurface
    monodromy: MappingClass
    tag: str = COLLAPSED

    def __post_init__(self):
        _check_boundary(self.hypersurface)
        if self.monodromy.surface != self.hypersurface:
            raise BaseMismatch("monodromy acts on a different surface")

    def char_poly(self) -> tuple:
        return char_poly(self.monodromy)


def circle_collapsed_mapping_torus(w: CylindricalCobordism) -> SeifertPair:
    """Glue the ends through the monodromy and collapse the boundary circles."""
    return SeifertPair(w.base, w.monodromy, COLLAPSED)


def split_seifert(pair: SeifertPair) -> CylindricalCobordism:
    # cutting along M (after the radial blow-up of the binding) leaves I × M back
    return CylindricalCobordism(pair.hypersurface, pair.monodromy)


@dataclass(frozen=True)
class Stiffening:
    host: CylindricalCobordism
    core: tuple

    def __post_init__(self):
        lo, hi = (Fraction(x) for x in self.core)
        if not 0 < lo < hi < 1:
            raise DegenerateCore(f"core [{lo}, {hi}] must satisfy 0 < lo < hi < 1")
        object.__setattr__(self, "core", (lo, hi))


def stiffen(w: CylindricalCobordism, core=(Fraction(1, 3), Fraction(2, 3))) -> Stiffening:
    return Stiffening(w, tuple(core))


def sum_stiffened(s1: Stiffening, s2: Stiffening, spec: SumSpec) -> Stiffening:
    """Fiberwise sum; the core of s1 must lie strictly after the core of s2.

    For the other placement call ``sum_stiffened(s2, s1, spec.swapped())``.
    """
    if s2.core[1] >= s1.core[0]:
        raise CoreOrderViolation(
            f"core [{s1.core[0]}, {s1.core[1]}] of the first summand must come after "
            f"core [{s2.core[0]}, {s2.core[1]}] of the second"
        )
    if spec.left.host != s1.host.base or spec.right.host != s2.host.base:
        raise NotSummable("spec patches do not live on the two bases")
    if not check_summable(spec):
        raise NotSummable(f"bases are not summable along {spec.interleaving!r}")
    res = abstract_sum(spec)
    mono = summed_monodromy(s1.host.monodromy, s2.host.monodromy, res)
    return Stiffening(CylindricalCobordism(res.surface, mono), (s2.core[0], s1.core[1]))


def _shape(s: RibbonSurface) -> dict:
    genus, _ = genus_and_boundary(s)
    return {"euler": euler_characteristic(s), "boundary": len(boundary_walk(s)), "genus": genus}


def verify_samedef(s1: Stiffening, s2: Stiffening, spec: SumSpec, embedded_result: SeifertData) -> dict:
    """Compare the stiffened-cobordism sum with an embedded sum of the same pieces.

    Returns the report of compared invariants; any disagreement is a bug and raises.
    """
    total = sum_stiffened(s1, s2, spec)
    abstract_side = _shape(total.host.base)
    embedded_side = _shape(embedded_result.surface)
    alex = alexander(embedded_result)
    cp = poly.normalize(char_poly(total.host.monodromy))
    report = {
        "euler": (embedded_side["euler"], abstract_side["euler"]),
        "boundary": (embedded_side["boundary"], abstract_side["boundary"]),
        "genus": (embedded_side["genus"], abstract_side["genus"]),
        "polynomial": (alex, cp),
    }
    bad = [k for k, (a, b) in report.items() if a != b]
    if bad:
        raise InvariantMismatch(f"embedded and cobordism sums disagree on {', '.join(bad)}: {report}")
    report["core"] = total.core
    return report
