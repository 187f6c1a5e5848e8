"""Sorting words, c-sortable elements, their labels and the Cambrian graph."""
from dataclasses import dataclass, field

from . import linalg as la
from .coxeter import CoxeterElement, CoxeterGroup, GroupElement


class NotCovered(LookupError):
    pass


class NotAlmostPositive(ValueError):
    pass


@dataclass(frozen=True)
class SortingWord:
    """A c-sorting word; ``positions`` index each letter inside ``c^infinity``."""
    blocks: tuple
    flat: tuple
    positions: tuple

    def is_decreasing(self):
        return all(set(a) >= set(b) for a, b in zip(self.blocks, self.blocks[1:]))


def c_sorting_word(w, c):
    """Leftmost subword of ``c^infinity`` that is a reduced word for ``w``."""
    order = c.order
    m = len(order)
    rest = w
    flat, positions, blocks = [], [], []
    p = 0
    while len(rest):
        block = []
        for k, s in enumerate(order):
            if rest.has_left_descent(s):
                rest = rest.gen_times(s)
                flat.append(s)
                positions.append(p * m + k)
                block.append(s)
        if not block:
            raise ValueError(f"{w} is not in the parabolic subgroup of {c}")
        blocks.append(tuple(block))
        p += 1
    return SortingWord(tuple(blocks), tuple(flat), tuple(positions))


def is_c_sortable(w, c):
    try:
        return c_sorting_word(w, c).is_decreasing()
    except ValueError:
        return False


def is_c_sortable_recursive(w, c):
    """Sortability by induction on length and rank."""
    if len(w) == 0:
        return True
    if not c.order:
        return False
    s = c.order[0]
    if w.has_left_descent(s):
        return is_c_sortable_recursive(w.gen_times(s), c.rotate(s))
    if not w.in_parabolic(set(c.order) - {s}):
        return False
    return is_c_sortable_recursive(w, c.restrict(set(c.order) - {s}))


def _skip_labels(group, sw, order):
    """Labels ``C_c^r`` and forced flags from the first skip of each letter."""
    m = len(order)
    taken = set(sw.positions)
    prefix = la.identity(group.n)
    labels, forced = {}, {}
    idx = 0
    pos = 0
    while len(labels) < m:
        s = order[pos % m]
        if pos in taken:
            prefix = la.matmul(prefix, group.gens[s])
            idx += 1
        elif s not in labels:
            root = la.matvec(prefix, group.roots.simple_root(s))
            labels[s] = root
            forced[s] = all(x <= 0 for x in root)
        pos += 1
    return labels, forced


def labels_recursive(v, c):
    """``C_c(v)`` by the recursion on an initial letter, keyed by generator."""
    if not c.order:
        return {}
    group = v.group
    s = c.order[0]
    if not v.has_left_descent(s):
        out = labels_recursive(v, c.restrict(set(c.order) - {s}))
        out[s] = group.roots.simple_root(s)
        return out
    inner = labels_recursive(v.gen_times(s), c.rotate(s))
    return {r: group.roots.simple_reflect(s, x) for r, x in inner.items()}


@dataclass
class SortableVertex:
    element: GroupElement
    sorting_word: SortingWord
    labels: dict
    colabels: dict
    forced: dict
    cl: dict = field(default_factory=dict)

    @property
    def word(self):
        return self.element.word

    @property
    def length(self):
        return len(self.element)

    def name(self):
        return "".join(f"s{i + 1}" for i in self.sorting_word.flat) or "e"


def cl_roots(group, sw, order):
    """``cl_c^r``: last reflection root for each letter, or the negative simple root."""
    out = {r: la.neg(group.roots.simple_root(r)) for r in order}
    prefix = la.identity(group.n)
    for a in sw.flat:
        out[a] = la.matvec(prefix, group.roots.simple_root(a))
        prefix = la.matmul(prefix, group.gens[a])
    return out


def make_vertex(w, c):
    sw = c_sorting_word(w, c)
    labels, forced = _skip_labels(w.group, sw, c.order)
    roots = w.group.roots
    colabels = {r: roots.coroot(x) for r, x in labels.items()}
    return SortableVertex(w, sw, labels, colabels, forced, cl_roots(w.group, sw, c.order))


def labels_C(v, c):
    """Return ``(labels, colabels)`` for a sortable element or vertex."""
    if isinstance(v, GroupElement):
        v = make_vertex(v, c)
    return v.labels, v.colabels


def cover_reflections(v):
    """Map right descent ``s`` to the positive root ``beta_t`` of ``t = v s v^-1``."""
    if isinstance(v, SortableVertex):
        v = v.element
    return v.cover_reflection_roots()


def sigma(roots, s, beta):
    """The involution ``sigma_s`` on almost positive roots."""
    n = roots.n
    neg_simple = [la.neg(roots.simple_root(i)) for i in range(n)]
    beta = tuple(beta)
    if beta in neg_simple:
        if beta != neg_simple[s]:
            return beta
        return roots.simple_reflect(s, beta)
    if not (all(x >= 0 for x in beta) and any(beta)) or not roots.is_real_root(beta):
        raise NotAlmostPositive(f"{beta} is not an almost positive root")
    return roots.simple_reflect(s, beta)


def cl_recursive(v, c):
    """``cl_c(v)`` by the recursion on an initial letter."""
    if not c.order:
        return {}
    group = v.group
    roots = group.roots
    s = c.order[0]
    if not v.has_left_descent(s):
        out = cl_recursive(v, c.restrict(set(c.order) - {s}))
        out[s] = la.neg(roots.simple_root(s))
        return out
    inner = cl_recursive(v.gen_times(s), c.rotate(s))
    return {r: sigma(roots, s, x) for r, x in inner.items()}


def enumerate_sortables(c, L, group=None):
    """All c-sortable elements of length at most ``L``, in BFS (length) order."""
    if group is None:
        group = CoxeterGroup(c.B)
    e = group.identity()
    found = {e.action: e}
    layer = [e]
    out = [make_vertex(e, c)]
    for _ in range(L):
        nxt = []
        for v in layer:
            for s in range(group.n):
                if not v.has_right_ascent(s):
                    continue
                u = v.times_gen(s)
                if u.action in found:
                    continue
                if is_c_sortable(u, c):
                    found[u.action] = u
                    nxt.append(u)
        if not nxt:
            break
        nxt.sort(key=lambda u: u.word)
        out.extend(make_vertex(u, c) for u in nxt)
        layer = nxt
    return out


def in_cone(v, w):
    """True when ``w D`` lies in ``Cone_c(v)``: each label is sent positive by ``w^-1``."""
    for beta in v.labels.values():
        y = w.apply_inverse(beta)
        if not all(x >= 0 for x in y):
            return False
    return True


def pi_down(w, c, sortables):
    """Sortable element whose cone contains ``w D``."""
    for v in sortables:
        if v.length <= len(w) and in_cone(v, w):
            return v
    raise NotCovered(f"no enumerated sortable cone contains {w}")


def pi_down_bruteforce(w, sortables):
    """Largest enumerated sortable below ``w`` in the weak order."""
    best = None
    for v in sortables:
        if v.element.le(w) and (best is None or v.length > best.length):
            best = v
    if best is None:
        raise NotCovered(f"no sortable below {w}")
    for v in sortables:
        if v.element.le(w) and not v.element.le(best.element):
            raise ValueError("sortables below w have no maximum")
    return best


@dataclass
class CambrianGraph:
    """Sortable elements with full edges, half-edges and unresolved ports.

    A port is a pair ``(vertex index, r)``; port ``r`` carries the label
    ``C_c^r``.  ``edges`` pairs the upper port with the lower port.
    """
    c: CoxeterElement
    L: int
    group: CoxeterGroup
    vertices: list
    edges: list
    half_edges: list
    unresolved: list
    boundary: set
    pi: dict

    def index_of(self, element):
        for k, v in enumerate(self.vertices):
            if v.element == element:
                return k
        raise KeyError(element)


def build_cambrian_framework(c, L, group=None):
    """Cambrian graph on the c-sortable elements of length at most ``L``."""
    if group is None:
        group = CoxeterGroup(c.B)
    sortables = enumerate_sortables(c, L, group)
    index = {v.element.action: k for k, v in enumerate(sortables)}
    elements = group.elements(L)
    pi = {}
    for w in elements:
        pi[w.action] = index[pi_down(w, c, sortables).element.action]

    def port_of(k, root):
        for r, x in sortables[k].labels.items():
            if x == root:
                return r
        raise ValueError(f"root {root} is not a label of vertex {k}")

    edges = []
    matched = set()
    for k, v in enumerate(sortables):
        for s, beta in sorted(v.element.cover_reflection_roots().items()):
            lower = pi[v.element.times_gen(s).action]
            top = (k, port_of(k, la.neg(beta)))
            bottom = (lower, port_of(lower, beta))
            edges.append((top, bottom))
            matched.add(top)
            matched.add(bottom)

    # wall crossings inside the window must be exactly the edges above
    crossing = set()
    open_fiber = set()
    for w in elements:
        k = pi[w.action]
        for s in range(group.n):
            if not w.has_right_ascent(s):
                continue
            if len(w) == L:
                open_fiber.add(k)
                continue
            k2 = pi[w.times_gen(s).action]
            if k2 != k:
                beta = w.apply(group.roots.simple_root(s))
                crossing.add(((k2, port_of(k2, la.neg(beta))), (k, port_of(k, beta))))
    if crossing != set(edges):
        raise AssertionError("wall crossings disagree with Cambrian covers")

    half_edges, unresolved, boundary = [], [], set()
    for k, v in enumerate(sortables):
        for r in sorted(v.labels):
            if (k, r) in matched:
                continue
            if k in open_fiber:
                unresolved.append((k, r))
                boundary.add(k)
            else:
                half_edges.append((k, r))
    return CambrianGraph(c, L, group, sortables, edges, half_edges, unresolved, boundary, pi)
