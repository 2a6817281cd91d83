"""Finite simple graphs with bitmask adjacency, induced paths, and block structure.

Vertices carry external integer labels (usually 1..n). Internally each vertex is
an index 0..n-1 and neighborhoods are Python-int bitmasks, which keeps the
induced-path DFS and subset manipulations cheap at desk scale (n <= 64).
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .errors import LoopEdge, NoCutVertex, NotBlockGraph, VertexOutOfRange

MAX_VERTICES = 64


class Graph:
    """Immutable simple graph with labeled vertices.

    ``labels`` is a strictly increasing tuple of positive ints; ``adj[i]`` is the
    neighbor bitmask of the i-th vertex in index space. Induced subgraphs keep
    their parents' labels, so restriction is transitive on the nose.
    """

    __slots__ = ("labels", "adj", "_index")

    def __init__(self, labels, adj):
        labels = tuple(labels)
        if any(labels[i] >= labels[i + 1] for i in range(len(labels) - 1)):
            raise ValueError("labels must be strictly increasing")
        if any(l < 1 for l in labels):
            raise ValueError("labels must be positive")
        self.labels = labels
        self.adj = tuple(adj)
        self._index = {v: i for i, v in enumerate(labels)}

    # -- construction -------------------------------------------------------

    @classmethod
    def from_edge_list(cls, n, edges):
        """Build a graph on labels 1..n from an iterable of (u, v) pairs.

        Duplicate edges collapse; loops and out-of-range endpoints raise.
        """
        if n < 0 or n > MAX_VERTICES:
            raise VertexOutOfRange(f"vertex count {n} outside 0..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            for w in (u, v):
                if not (1 <= w <= n):
                    raise VertexOutOfRange(f"vertex {w} outside 1..{n}")
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return cls(range(1, n + 1), adj)

    @classmethod
    def from_label_edges(cls, labels, edges):
        """Build a graph on an explicit label set (strictly increasing order)."""
        labels = tuple(sorted(labels))
        index = {v: i for i, v in enumerate(labels)}
        adj = [0] * len(labels)
        for u, v in edges:
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            for w in (u, v):
                if w not in index:
                    raise VertexOutOfRange(f"vertex {w} not among labels")
            adj[index[u]] |= 1 << index[v]
            adj[index[v]] |= 1 << index[u]
        return cls(labels, adj)

    # -- basics --------------------------------------------------------------

    @property
    def n(self):
        return len(self.labels)

    def index(self, v):
        try:
            return self._index[v]
        except KeyError:
            raise VertexOutOfRange(f"vertex {v} not in graph") from None

    def has_vertex(self, v):
        return v in self._index

    def has_edge(self, u, v):
        return bool(self.adj[self.index(u)] >> self.index(v) & 1)

    def degree(self, v):
        return self.adj[self.index(v)].bit_count()

    def neighbors(self, v):
        m = self.adj[self.index(v)]
        return tuple(self.labels[i] for i in _bits(m))

    def edges(self):
        out = []
        for i, m in enumerate(self.adj):
            for j in _bits(m):
                if j > i:
                    out.append((self.labels[i], self.labels[j]))
        return out

    @property
    def num_edges(self):
        return sum(m.bit_count() for m in self.adj) // 2

    def full_mask(self):
        return (1 << self.n) - 1

    def mask_of(self, vertices):
        m = 0
        for v in vertices:
            m |= 1 << self.index(v)
        return m

    def labels_of_mask(self, mask):
        return tuple(self.labels[i] for i in _bits(mask))

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.labels == other.labels
            and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.labels, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()!r})"

    # -- derived graphs ------------------------------------------------------

    def induced_subgraph(self, vertices):
        vs = sorted(set(vertices))
        idxs = [self.index(v) for v in vs]
        keep = 0
        for i in idxs:
            keep |= 1 << i
        adj = []
        for i in idxs:
            m = self.adj[i] & keep
            packed = 0
            for pos, j in enumerate(idxs):
                if m >> j & 1:
                    packed |= 1 << pos
            adj.append(packed)
        return Graph(vs, adj)

    def compacted(self):
        """Same graph with labels renumbered 1..n preserving order."""
        if self.labels == tuple(range(1, self.n + 1)):
            return self
        return Graph(range(1, self.n + 1), self.adj)

    def relabeled(self, labeling):
        """Apply a bijection old-label -> new-label 1..n; returns a 1..n graph."""
        new = {v: labeling[v] for v in self.labels}
        if sorted(new.values()) != list(range(1, self.n + 1)):
            raise ValueError("labeling must be a bijection onto 1..n")
        edges = [(new[u], new[v]) for u, v in self.edges()]
        return Graph.from_edge_list(self.n, edges)

    def components(self):
        """Connected components as sorted label tuples, in sorted order."""
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for i in _bits(frontier):
                    nxt |= self.adj[i]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            out.append(self.labels_of_mask(comp))
        return out

    def is_connected(self):
        return self.n <= 1 or len(self.components()) == 1

    def connected_within(self, mask, a_idx, b_idx):
        """Are indices a,b joined by a walk inside the index mask?"""
        if not (mask >> a_idx & 1 and mask >> b_idx & 1):
            return False
        comp = 1 << a_idx
        frontier = comp
        while frontier:
            nxt = 0
            for i in _bits(frontier):
                nxt |= self.adj[i]
            nxt &= mask
            frontier = nxt & ~comp
            comp |= nxt
        return bool(comp >> b_idx & 1)


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _iter_index_paths(adj, within, start=None, end=None):
    """Yield induced paths as index tuples inside the ``within`` mask.

    With ``start``/``end`` fixed, paths run start..end (singleton iff equal);
    otherwise every induced path is produced once per direction, singletons
    included. ``blocked`` accumulates vertices adjacent to the path interior,
    which is exactly the chordality condition.
    """
    starts = [start] if start is not None else [i for i in _bits(within)]
    for s in starts:
        if not within >> s & 1:
            continue
        if end is None or end == s:
            yield (s,)
            if end is not None:
                continue
        path = [s]
        stack = [(s, adj[s] & within & ~(1 << s), 1 << s)]
        while stack:
            last, cand, blocked = stack[-1]
            if not cand:
                stack.pop()
                path.pop()
                continue
            low = cand & -cand
            stack[-1] = (last, cand ^ low, blocked)
            u = low.bit_length() - 1
            path.append(u)
            if end is None or u == end:
                yield tuple(path)
            if end is not None and u == end:
                path.pop()
                continue
            nb = blocked | adj[last] | low
            stack.append((u, adj[u] & within & ~nb, nb))
            # path is popped when this frame is exhausted


def is_induced_path(G, seq):
    """Is ``seq`` (labels) an induced path of G? Singletons count, () does not."""
    idxs = [G.index(v) for v in seq]
    if not idxs or len(set(idxs)) != len(idxs):
        return False
    for a, b in zip(idxs, idxs[1:]):
        if not G.adj[a] >> b & 1:
            return False
    for k, a in enumerate(idxs):
        for b in idxs[k + 2 :]:
            if G.adj[a] >> b & 1:
                return False
    # a 2-vertex "path" with its only pair adjacent is fine; longer chords caught
    return True


def enumerate_induced_paths(G, endpoints=None):
    """All induced paths of G as label tuples, sorted by (length, sequence).

    Without ``endpoints``: singletons plus one canonical direction per path
    (smaller endpoint first). With ``endpoints=(a, b)``: all induced paths from
    a to b in that direction; ``a == b`` gives the singleton.
    """
    within = G.full_mask()
    if endpoints is None:
        out = [
            tuple(G.labels[i] for i in p)
            for p in _iter_index_paths(G.adj, within)
            if len(p) == 1 or p[0] < p[-1]
        ]
    else:
        a, b = endpoints
        out = [
            tuple(G.labels[i] for i in p)
            for p in _iter_index_paths(G.adj, within, start=G.index(a), end=G.index(b))
        ]
    out.sort(key=lambda p: (len(p), p))
    return out


def longest_induced_path_length(G):
    """Edge count of a longest induced path (0 for edgeless graphs)."""
    best = 0
    for p in _iter_index_paths(G.adj, G.full_mask()):
        if len(p) - 1 > best and p[0] < p[-1]:
            best = len(p) - 1
    return best


def to_networkx(G):
    g = nx.Graph()
    g.add_nodes_from(G.labels)
    g.add_edges_from(G.edges())
    return g


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected subgraphs and bridges), cut vertices, and
    the bipartite block-cut tree as (block index, cut vertex label) pairs.

    Isolated vertices belong to no block. Blocks are sorted vertex tuples in
    sorted order.
    """

    blocks: tuple
    cut_vertices: tuple
    block_cut_tree: tuple


def block_decomposition(G):
    g = to_networkx(G)
    blocks = sorted(tuple(sorted(b)) for b in nx.biconnected_components(g))
    cuts = tuple(sorted(nx.articulation_points(g)))
    cutset = set(cuts)
    tree = tuple(
        (bi, v) for bi, b in enumerate(blocks) for v in b if v in cutset
    )
    return BlockDecomposition(tuple(blocks), cuts, tree)


def is_block_graph(G):
    """Every block is a clique (equivalently: no induced C4 and no diamond)."""
    for b in block_decomposition(G).blocks:
        k = len(b)
        mask = G.mask_of(b)
        e = sum((G.adj[G.index(v)] & mask).bit_count() for v in b) // 2
        if e != k * (k - 1) // 2:
            return False
    return True


def maximal_cliques(G):
    """Maximal cliques of a block graph: its blocks plus isolated vertices."""
    dec = block_decomposition(G)
    covered = set()
    for b in dec.blocks:
        covered.update(b)
    iso = [(v,) for v in G.labels if v not in covered]
    return sorted(list(dec.blocks) + iso)


@dataclass(frozen=True)
class StructurePredicates:
    c: int
    cdeg: dict
    two_block: bool
    path_of_cliques: bool


def structure_predicates(G):
    """Clique count c(G), per-vertex clique degree, and the two shape flags.

    Only defined for block graphs (maximal cliques = blocks there).
    """
    if not is_block_graph(G):
        raise NotBlockGraph("structure predicates need a block graph")
    cliques = maximal_cliques(G)
    cdeg = {v: 0 for v in G.labels}
    for cl in cliques:
        for v in cl:
            cdeg[v] += 1
    two_block = all(d <= 2 for d in cdeg.values())
    # path of cliques: the clique-intersection structure is a disjoint union of
    # paths: every vertex in <= 2 cliques and every clique meets <= 2 cut vertices
    path_of_cliques = two_block and all(
        sum(1 for v in cl if cdeg[v] >= 2) <= 2 for cl in cliques
    )
    return StructurePredicates(len(cliques), cdeg, two_block, path_of_cliques)


def vertex_completion(G, v):
    """Add all edges among the neighbors of v (the local clique completion)."""
    i = G.index(v)
    nbrs = G.labels_of_mask(G.adj[i])
    extra = [
        (a, b)
        for k, a in enumerate(nbrs)
        for b in nbrs[k + 1 :]
        if not G.has_edge(a, b)
    ]
    return Graph.from_label_edges(G.labels, G.edges() + extra)


def cut_vertices(G):
    cuts = block_decomposition(G).cut_vertices
    if not cuts:
        raise NoCutVertex("graph has no cut vertex")
    return cuts
