import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from obk import polynomial as poly
from obk import _linalg as la
from obk.errors import AngleCollision, NotSummable, SurfaceMismatch
from obk.mapclass import preserves_form
from obk.openbook import (
    AbstractOpenBook,
    MorseNumbers,
    morse_numbers,
    morse_open_book,
    morse_sum,
    open_book,
    open_book_sum,
    primitive_open_book,
    trivial_open_book,
)
from obk.patching import SumSpec, make_patch
from obk.suites import random_primitive_pair
from obk.surface import euler_characteristic, primitive_s_surface


def hopf(sign, tag="D", band="B"):
    return primitive_open_book(2, sign, (f"{tag}1", f"{tag}2"), [f"{band}1", f"{band}2"])


def summed(a, b, word="LRLR"):
    return open_book_sum(a, b, SumSpec(make_patch(a.page, a.page.disk_ids[0]), make_patch(b.page, b.page.disk_ids[0]), word))


def test_trivial_book():
    ob = trivial_open_book()
    assert ob.char_poly() == (1,)
    assert euler_characteristic(ob.page) == 1


def test_hopf_book():
    ob = hopf(1)
    assert ob.homology.rank == 1
    assert ob.char_poly() == (-1, 1)


def test_primitive_needs_two_bands():
    with pytest.raises(ValueError):
        primitive_open_book(1, 1)


@pytest.mark.parametrize("n", range(2, 8))
def test_primitive_torus_link_polynomials(n):
    # (t^n - (-1)^n) / (t + 1) for the (2, n) torus link, same for both signs
    expected = poly.normalize([(-1) ** (n - 1 - k) for k in range(n)])
    for sign in (1, -1):
        ob = primitive_open_book(n, sign)
        assert euler_characteristic(ob.page) == 2 - n
        assert poly.normalize(ob.char_poly()) == expected
        assert preserves_form(ob.monodromy)


def test_trefoil_and_figure_eight():
    assert poly.normalize(summed(hopf(1), hopf(1, "E", "C")).char_poly()) == (1, -1, 1)
    assert poly.normalize(summed(hopf(1), hopf(-1, "E", "C")).char_poly()) == (1, -3, 1)


def test_sum_with_trivial_book_changes_nothing():
    ob = primitive_open_book(4, -1)
    tot = open_book_sum(ob, trivial_open_book("P"), SumSpec(make_patch(ob.page, "D1"), make_patch(trivial_open_book("P").page, "P"), "LLLL"))
    assert poly.normalize(tot.char_poly()) == poly.normalize(ob.char_poly())


def test_open_book_checks_pages():
    with pytest.raises(SurfaceMismatch):
        AbstractOpenBook(primitive_s_surface(3, 1), hopf(1).monodromy)
    with pytest.raises(NotSummable):
        a, b = hopf(1), hopf(-1, "E", "C")
        open_book_sum(a, b, SumSpec(make_patch(b.page, "E1"), make_patch(a.page, "D1"), "LRLR"))


def test_open_book_from_word():
    ob = open_book(primitive_s_surface(3, 1), [(0, 1), (1, 1)])
    assert poly.normalize(ob.char_poly()) == (1, -1, 1)


@given(st.integers(0, 10**9))
def test_sum_is_monic_of_full_degree(seed):
    ob1, ob2, _, _, spec = random_primitive_pair(random.Random(seed))
    tot = open_book_sum(ob1, ob2, spec)
    p = tot.char_poly()
    assert poly.degree(p) == ob1.homology.rank + ob2.homology.rank
    assert abs(p[-1]) == 1 and abs(p[0]) == 1
    assert preserves_form(tot.monodromy)
    assert la.det(tot.monodromy.matrix) == 1


@given(st.integers(0, 10**9))
def test_block_triangular_when_chords_do_not_cross(seed):
    rng = random.Random(seed)
    n1, n2 = rng.randint(2, 5), rng.randint(2, 5)
    ob1 = primitive_open_book(n1, rng.choice((1, -1)))
    ob2 = primitive_open_book(n2, rng.choice((1, -1)), ("E1", "E2"), [f"C{i}" for i in range(n2)])
    spec = SumSpec(make_patch(ob1.page, "D1"), make_patch(ob2.page, "E1"), "L" * n1 + "R" * n2)
    tot = open_book_sum(ob1, ob2, spec)
    assert tot.char_poly() == poly.mul(ob1.char_poly(), ob2.char_poly())


def test_morse_numbers_and_sum():
    a = morse_open_book(hopf(1), [(1, Fraction(1, 2))])
    b = morse_open_book(hopf(1, "E", "C"), [(1, Fraction(1, 3)), (1, Fraction(2, 3))])
    assert morse_numbers(a).counts == (1, 0)
    spec = SumSpec(make_patch(a.page, "D1"), make_patch(b.page, "E1"), "LRLR")
    tot = morse_sum(a, b, spec)
    assert morse_numbers(tot)[1] == 3
    assert morse_numbers(tot) <= morse_numbers(a) + morse_numbers(b)
    # mob1's points sit in the left core, mob2's in the right core
    assert sorted(x for _, x in tot.critical_points) == [Fraction(1, 6), Fraction(1, 3), Fraction(3, 4)]


def test_honest_books_stay_honest():
    a, b = morse_open_book(hopf(1)), morse_open_book(hopf(-1, "E", "C"))
    tot = morse_sum(a, b, SumSpec(make_patch(a.page, "D1"), make_patch(b.page, "E1"), "LRLR"))
    assert morse_numbers(tot).is_honest()


def test_symbolic_morse_books():
    a = morse_open_book(None, [(2, Fraction(1, 5)), (3, Fraction(1, 2))], ambient_dim=5)
    b = morse_open_book(None, [(2, Fraction(1, 2))], ambient_dim=5)
    assert morse_numbers(morse_sum(a, b)).counts == (0, 2, 1, 0)
    with pytest.raises(ValueError):
        morse_open_book(None, [(4, Fraction(1, 2))], ambient_dim=4)
    with pytest.raises(ValueError):
        morse_open_book(None, [(1, Fraction(1))], ambient_dim=3)
    with pytest.raises(ValueError):
        morse_sum(a, morse_open_book(None, [], ambient_dim=3))


def test_core_placement_errors():
    a = morse_open_book(None, [(1, Fraction(1, 2))])
    with pytest.raises(AngleCollision):
        morse_sum(a, a, left_core=(0, Fraction(1, 2)), right_core=(Fraction(1, 2), 1))
    with pytest.raises(NotSummable):
        morse_sum(morse_open_book(hopf(1)), a)


def test_index_multiset_survives_order_swap():
    a = morse_open_book(None, [(1, Fraction(1, 3)), (2, Fraction(1, 2))])
    b = morse_open_book(None, [(2, Fraction(1, 4))])
    assert morse_numbers(morse_sum(a, b)) == morse_numbers(morse_sum(b, a))


def test_morse_number_arithmetic():
    m = MorseNumbers((1, 0, 2))
    assert m[1] == 1 and m[3] == 2
    assert (m + MorseNumbers((0, 1, 0))).counts == (1, 1, 2)
    assert MorseNumbers((0, 0)).is_honest()
