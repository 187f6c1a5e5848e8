"""Exact rational polyhedral cones in V*.

Cones live in the dual space with fundamental-weight coordinates.  An
inequality is a normal vector ``a`` read as ``sum(a[i] * g[i]) >= 0``.
Intersections are computed by double description; a brute-force
extreme-ray enumeration is kept for cross-checking.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg as la

MAX_DIMENSION = 5


class DimensionUnsupported(ValueError):
    pass


class SingularLabels(ValueError):
    pass


def _dot(a, x):
    return sum(Fraction(p) * q for p, q in zip(a, x))


@dataclass(frozen=True)
class SimplicialCone:
    """A full-dimensional simplicial cone with matching rays and facet normals.

    ``rays[k]`` is the ray opposite ``normals[k]``:
    ``<rays[k], normals[j]> = 1`` if ``j == k`` and 0 otherwise.
    """
    normals: tuple
    rays: tuple

    @property
    def dim(self):
        return len(self.rays)

    @classmethod
    def from_normals(cls, normals):
        try:
            inv = la.inverse(normals)
        except la.SingularMatrix as exc:
            raise SingularLabels("facet normals do not form a basis") from exc
        return cls(tuple(tuple(r) for r in normals), la.transpose(inv))

    def contains(self, x):
        return all(_dot(a, x) >= 0 for a in self.normals)

    def coefficients(self, x):
        """Coordinates of ``x`` in the ray basis."""
        return tuple(la.normalize(_dot(a, x)) for a in self.normals)


def _normalize_ray(x):
    return la.primitive(x)


def _check_dim(n, bound):
    if n > bound:
        raise DimensionUnsupported(f"dimension {n} exceeds the supported bound {bound}")


def double_description(rays, inequalities):
    """Extreme rays of ``cone(rays)`` cut by ``inequalities``.

    ``rays`` must be linearly independent, so they span a simplicial cone.
    """
    rays = [_normalize_ray(r) for r in rays]
    if la.rank(rays) != len(rays):
        raise ValueError("initial rays must be linearly independent")
    # zero sets: facets of the starting cone (negative ids) and processed inequalities
    tight = [frozenset(-1 - j for j in range(len(rays)) if j != k) for k in range(len(rays))]
    processed = []
    for a in inequalities:
        idx = len(processed)
        processed.append(a)
        vals = [_dot(a, r) for r in rays]
        plus = [k for k, v in enumerate(vals) if v > 0]
        zero = [k for k, v in enumerate(vals) if v == 0]
        minus = [k for k, v in enumerate(vals) if v < 0]
        new_rays, new_tight = [], []
        for k in plus:
            new_rays.append(rays[k])
            new_tight.append(tight[k])
        for k in zero:
            new_rays.append(rays[k])
            new_tight.append(tight[k] | {idx})
        for p in plus:
            for m in minus:
                common = tight[p] & tight[m]
                if any(k not in (p, m) and common <= tight[k] for k in range(len(rays))):
                    continue
                r = tuple(vals[p] * y - vals[m] * x for x, y in zip(rays[p], rays[m]))
                new_rays.append(_normalize_ray(r))
                new_tight.append(common | {idx})
        rays, tight = new_rays, new_tight
    out = []
    for r in rays:
        if any(r) and r not in out:
            out.append(r)
    return out


def extreme_rays_bruteforce(inequalities, n):
    """Extreme rays of a pointed cone given only by inequalities."""
    out = set()
    for subset in combinations(range(len(inequalities)), n - 1):
        rows = [inequalities[k] for k in subset]
        if la.rank(rows) != n - 1:
            continue
        (v,) = la.nullspace(rows, n)
        for cand in (v, la.neg(v)):
            if all(_dot(a, cand) >= 0 for a in inequalities):
                out.add(_normalize_ray(cand))
    return out


def intersection_rays(c1, c2):
    return double_description(c1.rays, c2.normals)


def _is_face_of(cone, generators, other):
    """Is ``cone(generators)`` (a subset of ``cone``) a face of ``cone``?"""
    support = set()
    for g in generators:
        coeffs = cone.coefficients(g)
        support |= {k for k, x in enumerate(coeffs) if x != 0}
    return all(other.contains(cone.rays[k]) for k in support)


@dataclass
class MeetReport:
    nice: bool
    rays: list
    face_of_first: bool
    face_of_second: bool


def meet(c1, c2, bound=MAX_DIMENSION):
    _check_dim(c1.dim, bound)
    rays = intersection_rays(c1, c2)
    f1 = _is_face_of(c1, rays, c2)
    f2 = _is_face_of(c2, rays, c1)
    return MeetReport(f1 and f2, rays, f1, f2)


def meet_nicely(c1, c2, bound=MAX_DIMENSION):
    """True when the intersection is a face of both cones."""
    return meet(c1, c2, bound).nice
