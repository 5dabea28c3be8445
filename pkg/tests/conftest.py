import os
from pathlib import Path

import pytest
import sympy as sp
from hypothesis import settings

settings.register_profile("default", max_examples=40, deadline=None)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = Path(__file__).resolve().parent.parent / "data"

_t = sp.symbols("t")


def burau_alexander(strands, letters):
    """Alexander polynomial of a braid closure from the reduced Burau matrix.

    Independent of any Seifert surface: det(I - B(β)) · (1 - t) / (1 - t^n), then
    normalised like the package does (nonzero constant term, positive lowest term).
    """
    m = strands - 1
    mat = sp.eye(m)
    for x in letters:
        k = abs(x) - 1
        g = sp.eye(m)
        g[k, k] = -_t
        if k > 0:
            g[k, k - 1] = _t
        if k + 1 < m:
            g[k, k + 1] = 1
        mat = mat * (g if x > 0 else g.inv())
    d = sp.cancel((sp.eye(m) - mat).det() * (1 - _t) / (1 - _t**strands))
    num, _ = sp.fraction(sp.together(d))
    coeffs = [int(c) for c in reversed(sp.Poly(sp.expand(num), _t).all_coeffs())]
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if coeffs and coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    return tuple(coeffs) or (0,)


@pytest.fixture
def data_dir():
    return DATA


def random_surface(rng, max_disks=4, max_bands=6, orientable=None, connected=True):
    """A random disk-band surface; connected via a spanning tree when asked."""
    from obk.surface import build_surface

    k = rng.randint(1, max_disks)
    disks = [f"D{i}" for i in range(k)]
    ends = []
    if connected:
        for i in range(1, k):
            ends.append((disks[rng.randrange(i)], disks[i]))
    while len(ends) < rng.randint(len(ends), max(len(ends), max_bands)):
        ends.append((rng.choice(disks), rng.choice(disks)))
    slots = {d: [] for d in disks}
    bands = []
    for j, (a, b) in enumerate(ends):
        name = f"b{j}"
        slots[a].append(f"{name}.0")
        slots[b].append(f"{name}.1")
        if orientable is None:
            twist = rng.randint(-3, 3)
        else:
            twist = 2 * rng.randint(-1, 1)
        bands.append((name, twist))
    for d in disks:
        rng.shuffle(slots[d])
    return build_surface([(d, slots[d]) for d in disks], bands)
