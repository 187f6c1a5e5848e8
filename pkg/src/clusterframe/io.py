"""JSON and DOT serialization."""
import json
from fractions import Fraction

from .rootspace import NotSkewSymmetrizable, find_symmetrizer


class InputError(ValueError):
    pass


def rational(x):
    return str(Fraction(x))


def vector(xs):
    return [rational(x) for x in xs]


def parse_rational(s):
    try:
        return Fraction(s)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not an exact rational: {s!r}") from exc


def parse_matrix(text, source="<input>"):
    """Read ``{"n": int, "b": [[int]]}`` and validate it."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        line = text.splitlines()[exc.lineno - 1] if text.splitlines() else ""
        raise InputError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}\n    {line}") from exc
    if not isinstance(data, dict) or "b" not in data:
        raise InputError(f"{source}: expected an object with keys 'n' and 'b'")
    b = data["b"]
    n = data.get("n", len(b) if isinstance(b, list) else None)
    if not isinstance(b, list) or not isinstance(n, int) or len(b) != n:
        raise InputError(f"{source}: 'b' must be a list of {n} rows")
    for i, row in enumerate(b):
        if not isinstance(row, list) or len(row) != n:
            raise InputError(f"{source}: row {i} of 'b' must have {n} entries")
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
            raise InputError(f"{source}: row {i} of 'b' must contain integers")
    B = tuple(tuple(row) for row in b)
    try:
        find_symmetrizer(B)
    except NotSkewSymmetrizable as exc:
        raise InputError(f"{source}: {exc}") from exc
    return B


def load_matrix(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_matrix(text, str(path))


def matrix_json(B):
    return {"n": len(B), "b": [list(r) for r in B]}


def root_string(x, symbol="a", suffix=""):
    """Human-readable vector such as ``2a1+a2`` (1-based indices)."""
    parts = []
    for i, c in enumerate(x):
        c = Fraction(c)
        if c == 0:
            continue
        mag = abs(c)
        coeff = "" if mag == 1 else str(mag)
        parts.append(("-" if c < 0 else "+") + coeff + f"{symbol}{i + 1}{suffix}")
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


def coroot_string(x, delta):
    """Co-root in simple co-root coordinates, e.g. ``a1v+a2v``."""
    return root_string([Fraction(c) * d for c, d in zip(x, delta)], suffix="v")


def laurent_json(p):
    return [[list(e), c] for e, c in p.sorted_terms()]


def seed_json(seed):
    return {
        "B": [list(r) for r in seed.B],
        "H": [list(r) for r in seed.H],
        "cluster": [laurent_json(x) for x in seed.cluster],
        "cluster_text": [x.to_string() for x in seed.cluster],
        "g_vectors": [vector(g) for g in seed.gvecs],
    }


def cambrian_json(fw):
    """Vertices with sorting words, per-endpoint labels and co-labels, and edges."""
    rs = fw.roots
    verts = []
    for v in range(fw.nvertices):
        verts.append({
            "id": v,
            "word": fw.names[v],
            "labels": [vector(x) for x in fw.labels(v)],
            "colabels": [vector(x) for x in fw.colabels(v)],
            "boundary": v in fw.boundary,
        })
    edges = []
    for p, q in fw.full_edges():
        edges.append({"ends": [[p[0], p[1]], [q[0], q[1]]],
                      "labels": [vector(fw.C[p]), vector(fw.C[q])],
                      "colabels": [vector(fw.Cv[p]), vector(fw.Cv[q])]})
    return {
        "matrix": matrix_json(rs.B),
        "delta": vector(rs.delta),
        "base": fw.base,
        "vertices": verts,
        "edges": edges,
        "half_edges": [list(p) for p in sorted(fw.half)],
        "unresolved": [list(p) for p in sorted(fw.unresolved)],
    }


def _dot_escape(s):
    return s.replace("\\", "\\\\").replace('"', '\\"')


def cambrian_dot(fw, name="framework"):
    """DOT graph; each edge end carries the label of its vertex as tail/head label."""
    lines = [f"graph {name} {{", "  node [shape=box];"]
    for v in range(fw.nvertices):
        extra = ", style=dashed" if v in fw.boundary else ""
        lines.append(f'  v{v} [label="{_dot_escape(fw.names[v])}"{extra}];')
    for p, q in fw.full_edges():
        lines.append(f'  v{p[0]} -- v{q[0]} [taillabel="{root_string(fw.C[p])}", '
                     f'headlabel="{root_string(fw.C[q])}"];')
    for k, p in enumerate(sorted(fw.half)):
        lines.append(f'  h{k} [shape=point];')
        lines.append(f'  v{p[0]} -- h{k} [taillabel="{root_string(fw.C[p])}", style=dotted];')
    for k, p in enumerate(sorted(fw.unresolved)):
        lines.append(f'  u{k} [shape=none, label="?"];')
        lines.append(f'  v{p[0]} -- u{k} [taillabel="{root_string(fw.C[p])}", style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def exchange_graph_json(g):
    return {
        "closed": g.closed,
        "seeds": [seed_json(s) for s in g.seeds],
        "depth": list(g.depth),
        "adjacency": [list(a) for a in g.adjacency],
    }


def exchange_graph_dot(g, name="exchange"):
    lines = [f"graph {name} {{", "  node [shape=ellipse];"]
    for k, s in enumerate(g.seeds):
        text = "\\n".join(_dot_escape(x.to_string()) for x in s.cluster)
        lines.append(f'  s{k} [label="{text}"];')
    for a, b in g.edges():
        lines.append(f"  s{a} -- s{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
