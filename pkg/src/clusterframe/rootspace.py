"""Root space data attached to a skew-symmetrizable exchange matrix.

Every vector of the root space V is written in the simple-root basis
``alpha_0 .. alpha_{n-1}``; every vector of the dual space V* is written in
the fundamental-weight basis ``rho_0 .. rho_{n-1}`` (dual to the simple
co-roots).  The bilinear forms are stored as Gram matrices on the simple
roots, so ``form(x, y) = x^T G y`` for any two vectors of V.
"""
from collections import deque
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm

from . import linalg as la


class NotSkewSymmetrizable(ValueError):
    pass


class NotRealRoot(ValueError):
    pass


class CyclicB(ValueError):
    pass


class MixedSign(ValueError):
    pass


class ZeroVector(ValueError):
    pass


def as_matrix(B):
    rows = tuple(tuple(int(x) for x in row) for row in B)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("exchange matrix must be square")
    return rows


def cartan_companion(B):
    """Cartan companion: 2 on the diagonal, ``-|b_ij|`` off it."""
    B = as_matrix(B)
    n = len(B)
    return tuple(tuple(2 if i == j else -abs(B[i][j]) for j in range(n))
                 for i in range(n))


def find_symmetrizer(B):
    """Minimal positive integer ``d`` with ``d[i]*b[i][j] == -d[j]*b[j][i]``.

    Each connected component of the nonzero pattern is normalized
    separately to have gcd 1; isolated indices get 1.
    """
    B = as_matrix(B)
    n = len(B)
    for i in range(n):
        if B[i][i] != 0:
            raise NotSkewSymmetrizable(f"diagonal entry b[{i}][{i}] is nonzero")
        for j in range(n):
            if (B[i][j] == 0) != (B[j][i] == 0) or B[i][j] * B[j][i] > 0:
                raise NotSkewSymmetrizable(f"entries b[{i}][{j}], b[{j}][{i}] "
                                           "violate the sign pattern")
    d = [None] * n
    for root in range(n):
        if d[root] is not None:
            continue
        d[root] = Fraction(1)
        component = [root]
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if B[i][j] == 0:
                    continue
                want = d[i] * B[i][j] / -B[j][i]
                if d[j] is None:
                    d[j] = want
                    component.append(j)
                    queue.append(j)
                elif d[j] != want:
                    raise NotSkewSymmetrizable(f"inconsistent cycle through {i}, {j}")
        den = 1
        for i in component:
            den = lcm(den, d[i].denominator)
        g = 0
        for i in component:
            g = gcd(g, int(d[i] * den))
        for i in component:
            d[i] = Fraction(int(d[i] * den) // g)
    return tuple(int(x) for x in d)


def check_symmetrizer(B, delta):
    n = len(B)
    if any(Fraction(x) <= 0 for x in delta):
        return False
    return all(Fraction(delta[i]) * B[i][j] == -Fraction(delta[j]) * B[j][i]
               for i in range(n) for j in range(n))


def sign_of(x):
    """+1 for a nonzero vector in the nonnegative span of simple roots, -1 for the negative span."""
    if all(c == 0 for c in x):
        raise ZeroVector("zero vector has no sign")
    if all(c >= 0 for c in x):
        return 1
    if all(c <= 0 for c in x):
        return -1
    raise MixedSign(f"vector {x} has coordinates of both signs")


def is_acyclic(B):
    try:
        topological_order(B)
    except CyclicB:
        return False
    return True


def topological_order(B):
    """Order of indices with ``b[i][j] > 0`` forcing ``i`` before ``j``.

    Ties are broken by smallest index, so the result is deterministic.
    """
    B = as_matrix(B)
    n = len(B)
    indeg = [sum(1 for i in range(n) if B[i][j] > 0) for j in range(n)]
    order = []
    ready = sorted(j for j in range(n) if indeg[j] == 0)
    while ready:
        i = ready.pop(0)
        order.append(i)
        for j in range(n):
            if B[i][j] > 0:
                indeg[j] -= 1
                if indeg[j] == 0:
                    ready.append(j)
                    ready.sort()
    if len(order) != n:
        raise CyclicB("exchange matrix is not acyclic")
    return tuple(order)


class RootSystem:
    """Forms, reflections and the nu/eta maps determined by ``B``.

    Parameters
    ----------
    B : sequence of sequences of int
        Skew-symmetrizable exchange matrix.
    delta : sequence of positive rationals, optional
        Symmetrizer to use.  Defaults to :func:`find_symmetrizer`.  The
        scaling of ``delta`` fixes the scaling of the simple co-roots.
    """

    def __init__(self, B, delta=None):
        self.B = as_matrix(B)
        self.n = len(self.B)
        self.A = cartan_companion(self.B)
        if delta is None:
            delta = find_symmetrizer(self.B)
        else:
            delta = la.vec(delta)
            if not check_symmetrizer(self.B, delta):
                raise NotSkewSymmetrizable(f"{delta} does not symmetrize B")
        self.delta = tuple(delta)
        n = self.n
        d = self.delta
        # Gram matrices on (alpha_i, alpha_j); coroot-side tables divide row i by d[i].
        self.omega_gram = la.mat([[d[i] * self.B[i][j] for j in range(n)] for i in range(n)])
        self.kappa_gram = la.mat([[d[i] * self.A[i][j] for j in range(n)] for i in range(n)])
        self.euler_gram = la.mat([[d[i] * self._euler_entry(i, j) for j in range(n)]
                                  for i in range(n)])

    def __repr__(self):
        return f"RootSystem(B={self.B}, delta={self.delta})"

    def _euler_entry(self, i, j):
        return 1 if i == j else min(self.B[i][j], 0)

    # tables on (coroot_i, root_j) as in the defining formulas
    @cached_property
    def omega_table(self):
        return self.B

    @cached_property
    def kappa_table(self):
        return self.A

    @cached_property
    def euler_table(self):
        return tuple(tuple(self._euler_entry(i, j) for j in range(self.n))
                     for i in range(self.n))

    @cached_property
    def sym_table(self):
        return self.kappa_gram

    def simple_root(self, i):
        return tuple(1 if k == i else 0 for k in range(self.n))

    def simple_coroot(self, i):
        return la.vec(Fraction(1, 1) / Fraction(self.delta[i]) if k == i else 0
                      for k in range(self.n))

    def _bilinear(self, gram, x, y):
        return la.dot(x, la.matvec(gram, y))

    def omega(self, x, y):
        return self._bilinear(self.omega_gram, x, y)

    def kappa(self, x, y):
        return self._bilinear(self.kappa_gram, x, y)

    def euler(self, x, y):
        return self._bilinear(self.euler_gram, x, y)

    def form_value(self, which, x, y):
        """Evaluate ``omega``, ``kappa``, ``euler`` or ``sym`` on two vectors of V."""
        gram = {"omega": self.omega_gram, "kappa": self.kappa_gram,
                "euler": self.euler_gram, "sym": self.kappa_gram}[which]
        return self._bilinear(gram, x, y)

    def coroot(self, beta):
        norm = self.kappa(beta, beta)
        if norm <= 0:
            raise NotRealRoot(f"{beta} has nonpositive norm {norm}")
        return la.scale(Fraction(2) / Fraction(norm), beta)

    def reflect(self, beta, x):
        """Apply the reflection in the real root ``beta`` to ``x``."""
        bv = self.coroot(beta)
        return la.sub(x, la.scale(self.kappa(bv, x), beta))

    def simple_reflect(self, i, x):
        x = list(x)
        x[i] = la.normalize(Fraction(x[i]) - sum(Fraction(self.A[i][j]) * x[j]
                                                 for j in range(self.n)))
        return tuple(x)

    def is_real_root(self, x):
        """Decide whether ``x`` lies in the W-orbit of a simple root."""
        if any(Fraction(c).denominator != 1 for c in x):
            return False
        try:
            s = sign_of(x)
        except ValueError:
            return False
        y = tuple(int(c) * s for c in x)
        while True:
            if sum(y) == 1:
                return True
            step = None
            for i in range(self.n):
                p = sum(self.A[i][j] * y[j] for j in range(self.n))
                if p > 0:
                    step = (i, p)
                    break
            if step is None:
                return False
            i, p = step
            y = y[:i] + (y[i] - p,) + y[i + 1:]
            if any(c < 0 for c in y):
                return False

    def pairing(self, weight, x):
        """``<weight, x>`` for a weight in fundamental-weight coordinates and x in V."""
        return la.normalize(sum(Fraction(w) * self.delta[i] * x[i]
                                for i, w in enumerate(weight)))

    def coroot_coords(self, x):
        """Coordinates of ``x`` in the simple co-root basis."""
        return tuple(la.normalize(Fraction(c) * self.delta[i]) for i, c in enumerate(x))

    @cached_property
    def nu_matrix(self):
        n = self.n
        return tuple(tuple(-self._euler_entry(i, j) for j in range(n)) for i in range(n))

    @cached_property
    def eta_matrix(self):
        if not is_acyclic(self.B):
            raise CyclicB("eta requires an acyclic exchange matrix")
        return la.inverse(self.nu_matrix)

    def nu(self, d):
        return la.matvec(self.nu_matrix, d)

    def eta(self, g):
        return la.matvec(self.eta_matrix, g)

    @cached_property
    def path_form(self):
        """Path-sum form ``F(coroot_i, root_j)`` over paths in the acyclic digraph."""
        order = topological_order(self.B)
        n = self.n
        # -E(coroot_a, root_b) = [-b_ab]_+ is nonzero only for b_ab < 0
        weight = [[max(-self.B[a][b], 0) if a != b else 0 for b in range(n)]
                  for a in range(n)]
        F = [[0] * n for _ in range(n)]
        # b_ab < 0 means b comes before a in the topological order
        for j in range(n):
            F[j][j] = 1
            for a in order:
                if a == j:
                    continue
                F[a][j] = sum(weight[a][b] * F[b][j] for b in range(n) if weight[a][b])
        return tuple(tuple(row) for row in F)

    def eta_by_paths(self, g):
        F = self.path_form
        return tuple(-sum(F[i][j] * g[j] for j in range(self.n)) for i in range(self.n))

    def dual(self):
        """Root system of ``-B^T`` whose simple roots are the co-roots of this one."""
        n = self.n
        Bt = tuple(tuple(-self.B[j][i] for j in range(n)) for i in range(n))
        return RootSystem(Bt, delta=[Fraction(1) / Fraction(x) for x in self.delta])


def is_finite_type(B):
    """Finite Cartan type: the symmetrized Cartan companion is positive definite."""
    rs = B if isinstance(B, RootSystem) else RootSystem(B)
    G = rs.kappa_gram
    return all(la.det([row[:k] for row in G[:k]]) > 0 for k in range(1, rs.n + 1))
