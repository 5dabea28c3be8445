import random

import pytest
from hypothesis import given, settings, strategies as st

from obk import polynomial as poly
from obk.braid import (
    BraidWord,
    bennequin_cycles,
    bennequin_surface,
    closure_components,
    is_homogeneous,
    missing_generators,
    parse_braid,
    s_decomposition,
    stallings_open_book,
)
from obk.embedded import alexander, fiberedness_necessary, seifert_matrix_bennequin
from obk.errors import DisconnectedSurface, IndexOutOfRange, MissingGenerator, NotHomogeneous, ParseError
from obk.suites import random_homogeneous_braid
from obk.surface import boundary_walk, euler_characteristic, genus_and_boundary, invariant_vector

from conftest import burau_alexander


def test_parse():
    b = parse_braid("-1 2 -1 2")
    assert b.strands == 3 and b.letters == (-1, 2, -1, 2)
    assert parse_braid("1,1,1", strands=4).strands == 4
    for bad in ("", "1 0", "a b"):
        with pytest.raises(ParseError):
            parse_braid(bad)
    with pytest.raises(IndexOutOfRange):
        parse_braid("3", strands=3)
    with pytest.raises(IndexOutOfRange):
        BraidWord(1, (1,))


def test_homogeneity_and_components():
    assert is_homogeneous(parse_braid("1 -2 1 -2"))
    assert not is_homogeneous(parse_braid("1 -1 2"))
    assert closure_components(parse_braid("1 1 1")) == 1
    assert closure_components(parse_braid("1 1")) == 2
    assert closure_components(parse_braid("1 2 1 2 1")) == 2
    assert missing_generators(parse_braid("1 1", strands=4)) == [2, 3]


def test_figure_eight_bennequin_surface():
    b = parse_braid("-1 2 -1 2")
    s = bennequin_surface(b)
    assert invariant_vector(s) == (-1, 1, True, 1)
    assert alexander(seifert_matrix_bennequin(b)) == (1, -3, 1)


def test_trefoil():
    d = seifert_matrix_bennequin(parse_braid("1 1 1"))
    assert alexander(d) == (1, -1, 1)
    assert fiberedness_necessary(d)
    assert poly.normalize(stallings_open_book(parse_braid("1 1 1")).char_poly()) == (1, -1, 1)


def test_cycles_pair_consecutive_letters():
    cyc = bennequin_cycles(parse_braid("1 2 1 2 1"))
    assert [c[:3] for c in cyc] == [(1, 0, 2), (1, 2, 4), (2, 1, 3)]


def test_split_closures_are_rejected():
    b = parse_braid("1 1", strands=3)
    with pytest.raises(DisconnectedSurface):
        seifert_matrix_bennequin(b)
    with pytest.raises(MissingGenerator):
        s_decomposition(b)
    with pytest.raises(NotHomogeneous):
        s_decomposition(parse_braid("1 -1 2"))


def test_decomposition_of_the_figure_eight():
    pieces, specs = s_decomposition(parse_braid("-1 2 -1 2"))
    assert [(p.level, p.count, p.sign) for p in pieces] == [(1, 2, -1), (2, 2, 1)]
    assert [s.interleaving for s in specs] == ["LRLR"]


def test_single_letter_generators():
    b = parse_braid("1 2 2 2 3")
    book = stallings_open_book(b)
    assert euler_characteristic(book.page) == 4 - 5
    assert poly.normalize(book.char_poly()) == alexander(seifert_matrix_bennequin(b))


def random_braid(rng, homogeneous):
    if homogeneous:
        return random_homogeneous_braid(rng, 4, 8)
    n = rng.randint(2, 4)
    gens = list(range(1, n)) + [rng.randint(1, n - 1) for _ in range(rng.randint(0, 6))]
    rng.shuffle(gens)
    return BraidWord(n, tuple(rng.choice((1, -1)) * g for g in gens))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**9), st.booleans())
def test_bennequin_matches_burau(seed, homogeneous):
    b = random_braid(random.Random(seed), homogeneous)
    assert alexander(seifert_matrix_bennequin(b)) == burau_alexander(b.strands, b.letters)


@given(st.integers(0, 10**9))
def test_stallings_certificate(seed):
    b = random_homogeneous_braid(random.Random(seed))
    book = stallings_open_book(b)
    d = seifert_matrix_bennequin(b)
    assert euler_characteristic(book.page) == b.strands - len(b)
    assert len(boundary_walk(book.page)) == closure_components(b)
    assert invariant_vector(book.page) == invariant_vector(bennequin_surface(b))
    assert fiberedness_necessary(d)
    assert poly.normalize(book.char_poly()) == alexander(d)


@given(st.integers(0, 10**9))
def test_bennequin_genus(seed):
    b = random_braid(random.Random(seed), False)
    s = bennequin_surface(b)
    g, comps = genus_and_boundary(s)
    assert comps == closure_components(b)
    assert 2 - 2 * g - comps == b.strands - len(b)
