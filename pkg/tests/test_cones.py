import random

import pytest

from clusterframe import linalg as la
from clusterframe.cones import (DimensionUnsupported, SimplicialCone, SingularLabels,
                                double_description, extreme_rays_bruteforce, meet, meet_nicely)


def cone_from_rays(rays):
    return SimplicialCone.from_normals(la.inverse(la.transpose(rays)))


def test_from_normals_duality():
    c = cone_from_rays([(1, 0, 0), (1, 1, 0), (0, 1, 1)])
    for k, r in enumerate(c.rays):
        for j, a in enumerate(c.normals):
            assert la.dot(a, r) == (1 if j == k else 0)
    assert c.contains((2, 1, 0))
    assert not c.contains((0, 0, -1))
    with pytest.raises(SingularLabels):
        SimplicialCone.from_normals([(1, 0), (2, 0)])


@pytest.mark.parametrize("seed", range(25))
def test_double_description_matches_bruteforce(seed):
    rng = random.Random(seed)
    n = rng.choice([2, 3])
    while True:
        rays = [tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(n)]
        if la.rank(rays) == n:
            break
    c = cone_from_rays(rays)
    cuts = [tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(rng.randint(1, 3))]
    cuts = [a for a in cuts if any(a)]
    got = set(double_description(c.rays, cuts))
    assert got == extreme_rays_bruteforce(list(c.normals) + cuts, n)


def test_meet_self_and_neighbours():
    c = cone_from_rays([(1, 0), (0, 1)])
    assert meet_nicely(c, c)
    d = cone_from_rays([(0, 1), (-1, 0)])
    rep = meet(c, d)
    assert rep.nice and rep.rays == [(0, 1)]
    e = cone_from_rays([(-1, 0), (0, -1)])
    assert meet(c, e).rays == []
    assert meet_nicely(c, e)


def test_meet_not_nice():
    c = cone_from_rays([(1, 0), (0, 1)])
    d = cone_from_rays([(1, 1), (-1, 2)])
    rep = meet(c, d)
    assert not rep.nice
    assert set(rep.rays) == {(1, 1), (0, 1)}
    assert not rep.face_of_first and not rep.face_of_second
    # a strictly smaller cone is a face of itself but not of the quadrant
    inner = cone_from_rays([(1, 1), (0, 1)])
    rep = meet(c, inner)
    assert not rep.face_of_first and rep.face_of_second


def test_dimension_bound():
    c = cone_from_rays([tuple(int(i == j) for j in range(6)) for i in range(6)])
    with pytest.raises(DimensionUnsupported):
        meet(c, c)
    assert meet(c, c, bound=6).nice
