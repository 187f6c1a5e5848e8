"""Seeds with principal coefficients, mutation and the exchange graph.

A seed stores the exchange matrix ``B``, the coefficient rows ``H`` (the
bottom half of the extended matrix), the cluster as Laurent polynomials in
the initial variables and coefficients, and the g-vector of each variable
in fundamental-weight coordinates.
"""
from collections import deque
from dataclasses import dataclass

from .laurent import LaurentPoly, LaurentViolation
from .rootspace import as_matrix, find_symmetrizer


class DepthExceeded(RuntimeError):
    pass


def pos(x):
    return x if x > 0 else 0


def matrix_mutate(Bt, e):
    """Mutate an extended (rectangular) exchange matrix at column ``e``."""
    rows = len(Bt)
    cols = len(Bt[0])
    out = []
    for p in range(rows):
        row = []
        for q in range(cols):
            if p == e or q == e:
                row.append(-Bt[p][q])
            else:
                bpe, beq = Bt[p][e], Bt[e][q]
                sgn = (bpe > 0) - (bpe < 0)
                row.append(Bt[p][q] + sgn * pos(bpe * beq))
        out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True)
class Seed:
    B: tuple
    H: tuple
    cluster: tuple
    gvecs: tuple

    @property
    def n(self):
        return len(self.B)

    @property
    def extended(self):
        return self.B + self.H

    def key(self):
        """Canonical form under relabelling of the cluster indices."""
        n = self.n
        perm = sorted(range(n), key=lambda i: self.cluster[i].key())
        B = tuple(tuple(self.B[perm[i]][perm[j]] for j in range(n)) for i in range(n))
        H = tuple(tuple(row[perm[j]] for j in range(n)) for row in self.H)
        return (tuple(self.cluster[i].key() for i in perm), B, H)

    def coefficients(self):
        """Tropical coefficients ``y_j^v`` as exponent vectors in the initial ``y``."""
        n = self.n
        return tuple(tuple(self.H[i][j] for i in range(n)) for j in range(n))


def initial_seed(B):
    B = as_matrix(B)
    find_symmetrizer(B)
    n = len(B)
    H = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    cluster = tuple(LaurentPoly.var(2 * n, i) for i in range(n))
    gvecs = tuple(tuple(1 if k == i else 0 for k in range(n)) for i in range(n))
    return Seed(B, H, cluster, gvecs)


def exchange_binomial(seed, e):
    n = seed.n
    ext = seed.extended
    plus = LaurentPoly.const(2 * n, 1)
    minus = LaurentPoly.const(2 * n, 1)
    for p in range(n):
        b = ext[p][e]
        if b > 0:
            plus = plus * seed.cluster[p] ** b
        elif b < 0:
            minus = minus * seed.cluster[p] ** (-b)
    ycoef_plus = [0] * (2 * n)
    ycoef_minus = [0] * (2 * n)
    for i in range(n):
        h = ext[n + i][e]
        if h > 0:
            ycoef_plus[n + i] = h
        elif h < 0:
            ycoef_minus[n + i] = -h
    plus = plus.shift(ycoef_plus)
    minus = minus.shift(ycoef_minus)
    return plus + minus


def g_mutate(seed, e, B0):
    """g-vectors after mutating at ``e``; ``B0`` is the initial exchange matrix."""
    n = seed.n
    g = [0] * n
    for k in range(n):
        g[k] -= seed.gvecs[e][k]
    for p in range(n):
        w = pos(-seed.B[p][e])
        if w:
            for k in range(n):
                g[k] += w * seed.gvecs[p][k]
    for i in range(n):
        w = pos(-seed.H[i][e])
        if w:
            for k in range(n):
                g[k] -= w * B0[k][i]
    return tuple(seed.gvecs[:e]) + (tuple(g),) + tuple(seed.gvecs[e + 1:])


def cluster_mutate(seed, e, B0=None):
    """Mutate a principal-coefficient seed at index ``e``."""
    if B0 is None:
        B0 = seed.B
    new_var = exchange_binomial(seed, e).exact_div(seed.cluster[e])
    ext = matrix_mutate(seed.extended, e)
    n = seed.n
    cluster = seed.cluster[:e] + (new_var,) + seed.cluster[e + 1:]
    return Seed(ext[:n], ext[n:], cluster, g_mutate(seed, e, B0))


def mutate_path(B, path):
    seed = initial_seed(B)
    B0 = seed.B
    for e in path:
        seed = cluster_mutate(seed, e, B0)
    return seed


def denominator_vector(x, n):
    """Negated minimal exponents of ``x_0..x_{n-1}``."""
    mins = x.min_exponents()
    return tuple(-mins[i] for i in range(n))


def f_polynomial(x, n):
    return x.substitute_ones(range(n))


def principal_degree(x, B0):
    """Common degree of all terms under deg x_i = rho_i, deg y_j = -(column j of B0)."""
    n = len(B0)
    degs = set()
    for exp in x.terms:
        d = tuple(exp[i] - sum(exp[n + j] * B0[i][j] for j in range(n)) for i in range(n))
        degs.add(d)
    if len(degs) != 1:
        raise ValueError("polynomial is not homogeneous in the principal grading")
    return degs.pop()


def seed_equivalent(s1, s2):
    """Bijection ``lam`` with ``s2`` index ``lam[i]`` matching ``s1`` index ``i``, or None."""
    n = s1.n
    if s2.n != n:
        return None
    where = {x: k for k, x in enumerate(s2.cluster)}
    lam = []
    for x in s1.cluster:
        if x not in where:
            return None
        lam.append(where[x])
    for i in range(n):
        for j in range(n):
            if s1.B[i][j] != s2.B[lam[i]][lam[j]]:
                return None
        for r in range(n):
            if s1.H[r][i] != s2.H[r][lam[i]]:
                return None
    return tuple(lam)


@dataclass
class ExchangeGraph:
    seeds: list
    adjacency: list
    depth: list
    closed: bool
    B0: tuple

    def __len__(self):
        return len(self.seeds)

    def edges(self):
        out = set()
        for a, nbrs in enumerate(self.adjacency):
            for b in nbrs:
                if b is not None:
                    out.add((min(a, b), max(a, b)))
        return sorted(out)

    def cluster_variables(self):
        out = {}
        for s in self.seeds:
            for x in s.cluster:
                out.setdefault(x.key(), x)
        return list(out.values())


def build_exchange_graph(B, max_depth=50, strict=False):
    """Breadth-first closure of mutations with seeds identified up to relabelling.

    ``adjacency[k][e]`` is the index of the seed reached from seed ``k`` by
    mutating at ``e``, or None when that neighbour lies beyond ``max_depth``.
    """
    seed = initial_seed(B)
    B0 = seed.B
    index = {seed.key(): 0}
    seeds, depth = [seed], [0]
    adjacency = [[None] * seed.n]
    queue = deque([0])
    closed = True
    while queue:
        k = queue.popleft()
        if depth[k] == max_depth:
            closed = False
            continue
        for e in range(seed.n):
            nxt = cluster_mutate(seeds[k], e, B0)
            key = nxt.key()
            if key not in index:
                index[key] = len(seeds)
                seeds.append(nxt)
                depth.append(depth[k] + 1)
                adjacency.append([None] * seed.n)
                queue.append(index[key])
            adjacency[k][e] = index[key]
    if not closed and strict:
        raise DepthExceeded(f"exchange graph did not close within depth {max_depth}")
    return ExchangeGraph(seeds, adjacency, depth, closed, B0)


__all__ = ["Seed", "LaurentPoly", "LaurentViolation", "DepthExceeded", "matrix_mutate",
           "initial_seed", "cluster_mutate", "g_mutate", "mutate_path", "denominator_vector",
           "f_polynomial", "principal_degree", "seed_equivalent", "build_exchange_graph",
           "ExchangeGraph"]
