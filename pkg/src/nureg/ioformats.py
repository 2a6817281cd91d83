"""Text formats: edge lists, graph6, path families, monomials, ideals.

Edge list files: first meaningful line "n m", then m lines "u v" (1-based).
Family files: one line per path, "v1 v2 ... vk | start end" (the "| start end"
part optional, defaulting to first/last vertex), plus an optional trailing
"sigma: r1 r2 ... rl" line giving each path's rank. Lines starting with '#'
are comments throughout.
"""

from __future__ import annotations

import networkx as nx

from .errors import ConfigError, VertexOutOfRange
from .graphs import Graph


def _meaningful_lines(text):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_edge_list(text):
    lines = list(_meaningful_lines(text))
    if not lines:
        raise ConfigError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise ConfigError(f"expected 'n m' header, got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ConfigError(f"header promises {m} edges, file has {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ConfigError(f"bad edge line {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph.from_edge_list(n, edges)


def format_edge_list(G):
    H = G.compacted()
    out = [f"{H.n} {H.num_edges}"]
    out.extend(f"{u} {v}" for u, v in H.edges())
    return "\n".join(out) + "\n"


def parse_graph6(line):
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    try:
        g = nx.from_graph6_bytes(s.encode())
    except Exception as exc:
        raise ConfigError(f"bad graph6 line: {exc}") from exc
    n = g.number_of_nodes()
    return Graph.from_edge_list(n, [(u + 1, v + 1) for u, v in g.edges()])


def parse_graph_text(text):
    """Sniff edge-list vs graph6: an 'n m' integer header means edge list."""
    lines = list(_meaningful_lines(text))
    if lines:
        head = lines[0].split()
        if len(head) == 2 and all(p.isdigit() for p in head):
            return parse_edge_list(text)
    if len(lines) == 1:
        return parse_graph6(lines[0])
    raise ConfigError("unrecognized graph file format")


def parse_family_text(text):
    """Return (list of (seq, start, end), sigma or None); validation is the
    family constructor's job."""
    paths = []
    sigma = None
    for line in _meaningful_lines(text):
        if line.lower().startswith("sigma:"):
            sigma = tuple(int(t) for t in line.split(":", 1)[1].split())
            continue
        if "|" in line:
            vpart, opart = line.split("|", 1)
            ends = opart.split()
            if len(ends) != 2:
                raise ConfigError(f"bad orientation in line {line!r}")
            start, end = int(ends[0]), int(ends[1])
        else:
            vpart, start, end = line, None, None
        seq = tuple(int(t) for t in vpart.split())
        if not seq:
            raise ConfigError(f"empty path line {line!r}")
        if start is None:
            start, end = seq[0], seq[-1]
        paths.append((seq, start, end))
    if not paths:
        raise ConfigError("family file lists no paths")
    return paths, sigma


def format_family(fam):
    lines = [
        " ".join(map(str, p.seq)) + f" | {p.start} {p.end}" for p in fam.paths
    ]
    if fam.sigma is not None:
        lines.append("sigma: " + " ".join(map(str, fam.sigma)))
    return "\n".join(lines) + "\n"


def parse_variable(token):
    """'x3' -> ('x', 3); 'y12' -> ('y', 12)."""
    t = token.strip()
    if len(t) >= 2 and t[0] in "xy":
        try:
            return (t[0], int(t[1:]))
        except ValueError:
            pass
    raise ConfigError(f"bad variable token {token!r}")


def parse_variable_set(text):
    toks = text.replace(",", " ").split()
    if not toks:
        raise ConfigError("empty variable set")
    return frozenset(parse_variable(t) for t in toks)


def parse_monomial(token):
    """'x1*x3*y2' -> (frozenset x-indices, frozenset y-indices)."""
    xs, ys = set(), set()
    for part in token.strip().split("*"):
        kind, i = parse_variable(part)
        (xs if kind == "x" else ys).add(i)
    return frozenset(xs), frozenset(ys)


def parse_ideal_text(text):
    """First meaningful line: n (variables are x1..xn, y1..yn); then one
    monomial per line. Returns (n, [(xs, ys), ...])."""
    lines = list(_meaningful_lines(text))
    if not lines:
        raise ConfigError("empty ideal file")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise ConfigError(f"expected vertex count, got {lines[0]!r}") from exc
    gens = [parse_monomial(line) for line in lines[1:]]
    for xs, ys in gens:
        for i in xs | ys:
            if not 1 <= i <= n:
                raise VertexOutOfRange(f"variable index {i} outside 1..{n}")
    return n, gens
