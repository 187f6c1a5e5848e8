"""Coxeter groups acting on the root space through the Cartan companion.

Elements are stored as integer matrices acting on simple-root coordinates
together with a reduced word.  Two elements are equal exactly when their
matrices agree, since the geometric representation is faithful.
"""

from . import linalg as la
from .rootspace import CyclicB, RootSystem, as_matrix, sign_of, topological_order


class NotInitial(ValueError):
    pass


def _simple_matrix(A, i):
    n = len(A)
    rows = []
    for r in range(n):
        if r == i:
            rows.append(tuple((1 if j == i else 0) - A[i][j] for j in range(n)))
        else:
            rows.append(tuple(1 if j == r else 0 for j in range(n)))
    return tuple(rows)


def _is_negative(x):
    return all(c <= 0 for c in x) and any(c < 0 for c in x)


class CoxeterGroup:
    """The Coxeter group of a root system, given by its simple reflections."""

    def __init__(self, roots):
        if not isinstance(roots, RootSystem):
            roots = RootSystem(roots)
        self.roots = roots
        self.n = roots.n
        self.gens = tuple(_simple_matrix(roots.A, i) for i in range(self.n))
        self._identity = GroupElement(self, la.identity(self.n), ())

    def identity(self):
        return self._identity

    def gen(self, i):
        return GroupElement(self, self.gens[i], (i,))

    def from_word(self, word):
        m = la.identity(self.n)
        for i in word:
            m = la.matmul(m, self.gens[i])
        return self.from_matrix(m)

    def from_matrix(self, m):
        return GroupElement(self, m, reduced_word(self, m))

    def elements(self, max_length):
        """All elements of length at most ``max_length``, grouped by length, BFS order."""
        seen = {self._identity.action: self._identity}
        layer = [self._identity]
        out = [self._identity]
        for _ in range(max_length):
            nxt = []
            for w in layer:
                for i in range(self.n):
                    if w.has_right_ascent(i):
                        u = w.times_gen(i)
                        if u.action not in seen:
                            seen[u.action] = u
                            nxt.append(u)
            if not nxt:
                break
            out.extend(nxt)
            layer = nxt
        return out


def reduced_word(group, m):
    """Recover a reduced word from a matrix by peeling right descents."""
    word = []
    n = group.n
    m = tuple(tuple(r) for r in m)
    while True:
        for i in range(n):
            col = tuple(m[r][i] for r in range(n))
            if _is_negative(col):
                word.append(i)
                m = la.matmul(m, group.gens[i])
                break
        else:
            break
    if m != la.identity(n):
        raise ValueError("matrix is not in the group")
    return tuple(reversed(word))


class GroupElement:
    """An element of ``W`` with its action matrix and one reduced word."""

    __slots__ = ("group", "action", "word", "_inv")

    def __init__(self, group, action, word):
        self.group = group
        self.action = action
        self.word = tuple(word)
        self._inv = None

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.action == other.action

    def __hash__(self):
        return hash(self.action)

    def __len__(self):
        return len(self.word)

    def __repr__(self):
        return "GroupElement(" + ("".join(f"s{i}" for i in self.word) or "e") + ")"

    @property
    def length(self):
        return len(self.word)

    def __mul__(self, other):
        return GroupElement(self.group, la.matmul(self.action, other.action),
                            reduced_word(self.group, la.matmul(self.action, other.action)))

    def times_gen(self, i):
        m = la.matmul(self.action, self.group.gens[i])
        if self.has_right_ascent(i):
            return GroupElement(self.group, m, self.word + (i,))
        return GroupElement(self.group, m, reduced_word(self.group, m))

    def gen_times(self, i):
        m = la.matmul(self.group.gens[i], self.action)
        return GroupElement(self.group, m, reduced_word(self.group, m))

    def inverse(self):
        m = la.identity(self.group.n)
        for i in reversed(self.word):
            m = la.matmul(m, self.group.gens[i])
        return GroupElement(self.group, m, tuple(reversed(self.word)))

    def apply(self, x):
        return la.matvec(self.action, x)

    def apply_inverse(self, x):
        for i in self.word:
            x = la.matvec(self.group.gens[i], x)
        return x

    def apply_dual(self, weight):
        """Contragredient action on V* in fundamental-weight coordinates."""
        # <w.g, x> = <g, w^{-1} x>; pairing is sum g_i d_i x_i
        d = self.group.roots.delta
        n = self.group.n
        inv = self.inverse().action
        return la.vec(sum(weight[i] * d[i] * inv[i][j] for i in range(n)) / d[j]
                      for j in range(n))

    def has_right_ascent(self, i):
        return not _is_negative(tuple(row[i] for row in self.action))

    def right_descents(self):
        return tuple(i for i in range(self.group.n) if not self.has_right_ascent(i))

    def has_left_descent(self, i):
        return _is_negative(self.apply_inverse(self.group.roots.simple_root(i)))

    def inversion_set(self):
        if self._inv is None:
            roots = []
            m = la.identity(self.group.n)
            for a in self.word:
                roots.append(tuple(row[a] for row in m))
                m = la.matmul(m, self.group.gens[a])
            self._inv = frozenset(roots)
        return self._inv

    def inversions_in_order(self):
        roots = []
        m = la.identity(self.group.n)
        for a in self.word:
            roots.append(tuple(row[a] for row in m))
            m = la.matmul(m, self.group.gens[a])
        return roots

    def le(self, other):
        """Right weak order: inversion-set containment."""
        if len(self) > len(other):
            return False
        return self.inversion_set() <= other.inversion_set()

    def in_parabolic(self, J):
        return set(self.word) <= set(J)

    def parabolic_component(self, J):
        """The element ``w_J`` of ``W_J`` whose inversions are ``inv(w)`` within ``W_J``."""
        J = sorted(set(J))
        inv = self.inversion_set()
        u = self.group.identity()
        grown = True
        while grown:
            grown = False
            for j in J:
                if u.has_right_ascent(j):
                    beta = u.apply(self.group.roots.simple_root(j))
                    if beta in inv:
                        u = u.times_gen(j)
                        grown = True
                        break
        return u

    def cover_reflection_roots(self):
        """Positive roots ``-w(alpha_s)`` for the right descents ``s``, keyed by ``s``."""
        out = {}
        for s in self.right_descents():
            out[s] = la.neg(self.apply(self.group.roots.simple_root(s)))
        return out


def commutes(B, i, j):
    return B[i][j] == 0


class CoxeterElement:
    """A Coxeter element ``c`` as a linear order of the generators.

    The exchange matrix is kept alongside so that initial letters and the
    matrix of ``scs`` are available.
    """

    def __init__(self, B, order=None):
        self.B = as_matrix(B)
        if order is None:
            order = topological_order(self.B)
        order = tuple(order)
        for a in range(len(order)):
            for b in range(a + 1, len(order)):
                if self.B[order[b]][order[a]] > 0:
                    raise CyclicB(f"order {order} is incompatible with B")
        self.order = order

    def __repr__(self):
        return f"CoxeterElement({self.order})"

    def __eq__(self, other):
        return isinstance(other, CoxeterElement) and (self.B, self.order) == (other.B, other.order)

    def __hash__(self):
        return hash((self.B, self.order))

    @property
    def support(self):
        return frozenset(self.order)

    def is_initial(self, s):
        k = self.order.index(s)
        return all(commutes(self.B, r, s) for r in self.order[:k])

    def is_final(self, s):
        k = self.order.index(s)
        return all(commutes(self.B, r, s) for r in self.order[k + 1:])

    def initial_letter(self):
        return self.order[0]

    def rotate(self, s):
        """``scs``: move an initial letter to the end."""
        if s not in self.order or not self.is_initial(s):
            raise NotInitial(f"{s} is not initial in {self.order}")
        n = len(self.B)
        B = [list(r) for r in self.B]
        for j in range(n):
            B[s][j] = -B[s][j]
            B[j][s] = -B[j][s]
        order = tuple(r for r in self.order if r != s) + (s,)
        return CoxeterElement(B, order)

    def restrict(self, J):
        J = set(J)
        return CoxeterElement(self.B, tuple(r for r in self.order if r in J))


def coxeter_element(B):
    return CoxeterElement(B)


def all_coxeter_elements(B):
    """Every acyclic orientation of the edges of ``B``, as (matrix, Coxeter element).

    Each orientation flips the signs of selected pairs ``b_ij, b_ji``; only
    acyclic results are kept.
    """
    from itertools import product
    B = as_matrix(B)
    n = len(B)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if B[i][j] != 0]
    out = []
    seen = set()
    for flips in product((1, -1), repeat=len(edges)):
        M = [list(r) for r in B]
        for (i, j), f in zip(edges, flips):
            M[i][j] *= f
            M[j][i] *= f
        M = tuple(tuple(r) for r in M)
        if M in seen:
            continue
        seen.add(M)
        try:
            out.append((M, CoxeterElement(M)))
        except CyclicB:
            continue
    return out


__all__ = ["CoxeterGroup", "GroupElement", "CoxeterElement", "NotInitial",
           "coxeter_element", "all_coxeter_elements", "reduced_word", "sign_of"]
