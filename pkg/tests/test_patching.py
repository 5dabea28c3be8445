import random
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from obk.errors import BandOutsideAttachingRegion, NotSummable, ParseError, SameHost, UnknownDisk
from obk.patching import SumSpec, abstract_sum, check_summable, make_patch, parse_patch, parse_sumspec
from obk.surface import (
    boundary_walk,
    disk_surface,
    euler_characteristic,
    invariant_vector,
    parse_surface,
    primitive_s_surface,
)


def hopf(sign=1, tag="D", band="B"):
    return primitive_s_surface(2, sign, (f"{tag}1", f"{tag}2"), [f"{band}1", f"{band}2"])


def test_default_patch_marks_band_arcs():
    p = make_patch(hopf(), "D1")
    assert p.attaching_arcs == ((0,), (2,))
    assert p.free_arcs == (1, 3)
    assert not p.covers_whole_rim()


def test_custom_marking_merges_runs():
    p = make_patch(hopf(), "D1", [0, 1, 2])
    assert p.attaching_arcs == ((0, 1, 2),)
    assert p.run_slots(p.attaching_arcs[0]) == hopf().disk("D1").slots


def test_patch_errors():
    with pytest.raises(UnknownDisk):
        make_patch(hopf(), "nope")
    with pytest.raises(BandOutsideAttachingRegion):
        make_patch(hopf(), "D1", [0])
    with pytest.raises(UnknownDisk):
        make_patch(hopf(), "D1", [0, 2, 9])


def test_same_host_is_rejected():
    s = hopf()
    with pytest.raises(SameHost):
        check_summable(SumSpec(make_patch(s, "D1"), make_patch(s, "D2"), "LRLR"))


def test_word_must_match_run_counts():
    a, b = hopf(), hopf(-1, "E", "C")
    assert check_summable(SumSpec(make_patch(a, "D1"), make_patch(b, "E1"), "LRLR"))
    assert not check_summable(SumSpec(make_patch(a, "D1"), make_patch(b, "E1"), "LRL"))
    assert not check_summable(SumSpec(make_patch(a, "D1"), make_patch(b, "E1"), "LRLX"))
    with pytest.raises(NotSummable):
        abstract_sum(SumSpec(make_patch(a, "D1"), make_patch(b, "E1"), "LLR"))


def test_whole_rim_leaves_no_room():
    a, b = hopf(), hopf(-1, "E", "C")
    full = make_patch(a, "D1", range(4))
    assert full.covers_whole_rim()
    assert not check_summable(SumSpec(full, make_patch(b, "E1"), "LR"))
    # a disk with nothing attached can be summed onto a whole-rim patch
    assert check_summable(SumSpec(full, make_patch(disk_surface("P"), "P"), "L"))


def test_hopf_plus_hopf_minus():
    a, b = hopf(), hopf(-1, "E", "C")
    res = abstract_sum(SumSpec(make_patch(a, "D1"), make_patch(b, "E1"), "LRLR"))
    assert invariant_vector(res.surface) == (-1, 1, True, 1)
    assert [sl.band for sl in res.surface.disk("D1").slots] == ["B1", "C1", "B2", "C2"]
    assert res.right_disks == {"E1": "D1", "E2": "E2"}


def test_sum_with_a_disk_is_neutral():
    a = primitive_s_surface(4, 1)
    res = abstract_sum(SumSpec(make_patch(a, "D2"), make_patch(disk_surface("P"), "P"), "LLLL"))
    assert invariant_vector(res.surface) == invariant_vector(a)


def test_colliding_ids_are_primed():
    res = abstract_sum(SumSpec(make_patch(hopf(), "D1"), make_patch(hopf(), "D1"), "LRLR"))
    assert res.right_bands == {"B1": "B1'", "B2": "B2'"}
    assert res.right_disks["D2"] == "D2'"
    assert euler_characteristic(res.surface) == -1


def random_pair(rng):
    n1, n2 = rng.randint(1, 6), rng.randint(1, 6)
    a = primitive_s_surface(n1, rng.choice((1, -1)))
    b = primitive_s_surface(n2, rng.choice((1, -1)), ("E1", "E2"), [f"C{i}" for i in range(n2)])
    word = ["L"] * n1 + ["R"] * n2
    rng.shuffle(word)
    return SumSpec(make_patch(a, rng.choice(("D1", "D2"))), make_patch(b, rng.choice(("E1", "E2"))), "".join(word))


@given(st.integers(0, 10**9))
def test_euler_additivity(seed):
    spec = random_pair(random.Random(seed))
    res = abstract_sum(spec)
    assert euler_characteristic(res.surface) == (
        euler_characteristic(spec.left.host) + euler_characteristic(spec.right.host) - 1
    )


@given(st.integers(0, 10**9))
def test_commutative_up_to_invariants(seed):
    spec = random_pair(random.Random(seed))
    assert invariant_vector(abstract_sum(spec).surface) == invariant_vector(abstract_sum(spec.swapped()).surface)


@given(st.integers(0, 10**9))
def test_associative_up_to_invariants(seed):
    rng = random.Random(seed)
    na, nb, nc = (rng.randint(1, 4) for _ in range(3))
    a = primitive_s_surface(na, rng.choice((1, -1)), ("A1", "A2"), [f"a{i}" for i in range(na)])
    b = primitive_s_surface(nb, rng.choice((1, -1)), ("B1", "B2"), [f"b{i}" for i in range(nb)])
    c = primitive_s_surface(nc, rng.choice((1, -1)), ("C1", "C2"), [f"c{i}" for i in range(nc)])

    def shuffle(p, q):
        w = ["L"] * p + ["R"] * q
        rng.shuffle(w)
        return "".join(w)

    w1, w2 = shuffle(na, nb), shuffle(nb, nc)
    ab = abstract_sum(SumSpec(make_patch(a, "A1"), make_patch(b, "B1"), w1)).surface
    left = abstract_sum(SumSpec(make_patch(ab, "B2"), make_patch(c, "C1"), w2)).surface
    bc = abstract_sum(SumSpec(make_patch(b, "B2"), make_patch(c, "C1"), w2)).surface
    right = abstract_sum(SumSpec(make_patch(a, "A1"), make_patch(bc, "B1"), w1)).surface
    assert invariant_vector(left) == invariant_vector(right)
    assert left.disk("B2") == right.disk("B2") and left.disk("A1") == right.disk("A1")


@given(st.integers(0, 10**9))
def test_result_patch_is_summable_again(seed):
    rng = random.Random(seed)
    res = abstract_sum(random_pair(rng))
    assert res.patch.host is res.surface
    assert len(res.patch.attaching_arcs) >= 1
    assert boundary_walk(res.surface)


def test_patch_and_spec_files(tmp_path: Path):
    (tmp_path / "h.book").write_text("disk D1: B1.0 B2.0\ndisk D2: B1.1 B2.1\nband B1: twist 2\nband B2: twist 2\n")
    loaded = []

    def load(path):
        loaded.append(path)
        return parse_surface(path.read_text())

    p = parse_patch("patch h.book disk D1 attach 0 1 2", load, tmp_path)
    assert loaded == [tmp_path / "h.book"]
    assert p.attaching_arcs == ((0, 1, 2),)
    assert parse_sumspec("# c\nsumspec left a.patch right b.patch interleave LRLR\n") == ("a.patch", "b.patch", "LRLR")
    with pytest.raises(ParseError):
        parse_sumspec("sumspec left a right b interleave LXR")
    with pytest.raises(ParseError):
        parse_patch("patch h.book disk", load, tmp_path)
