"""Labeled graph families and line graphs.

Families built here:

  path    Pa_n, vertices v1..vn in a line.
  cycle   C_n.
  grid2   the 2 x N grid.
  star    extended star: a hub `a` with m tendrils of n edges each.
  theta   two hubs `a`, `b` joined by m disjoint paths of n+1 edges.
  delta   comb graph: the theta graph on paths of n+2 edges, plus n spine
          vertices s1..sn, where sk is adjacent to the k-th and (k+1)-st
          interior vertex of every path.

Vertices carry structured labels so that downstream algorithms can make
role-based decisions (hub vs spine vs tendril position).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class VertexLabel:
    """Structured vertex label.

    kind is one of:
      "a"   left hub            -> "a"
      "b"   right hub           -> "b"
      "s"   spine, args=(k,)    -> "s<k>"
      "t"   tendril, args=(j,k) -> "t<j>.<k>"
      "v"   plain, args=(i,)    -> "v<i>"
      "ge"  grid edge, args=(kind, col) -> "ge<kind>.<col>"
      "e"   generic line-graph vertex, args=(i, j) -> "e<i>.<j>"
    """

    kind: str
    args: tuple = ()

    def __str__(self):
        if self.kind in ("a", "b"):
            return self.kind
        if self.kind == "s":
            return "s%d" % self.args
        if self.kind == "t":
            return "t%d.%d" % self.args
        if self.kind == "v":
            return "v%d" % self.args
        if self.kind == "ge":
            return "ge%s.%d" % self.args
        if self.kind == "e":
            return "e%d.%d" % self.args
        raise ValueError("unknown label kind %r" % self.kind)


END_A = VertexLabel("a")
END_B = VertexLabel("b")


def spine(k: int) -> VertexLabel:
    return VertexLabel("s", (k,))


def tendril(j: int, k: int) -> VertexLabel:
    return VertexLabel("t", (j, k))


def plain(i: int) -> VertexLabel:
    return VertexLabel("v", (i,))


def grid_edge(kind: str, col: int) -> VertexLabel:
    return VertexLabel("ge", (kind, col))


def parse_label(text: str) -> VertexLabel:
    """Inverse of str(label)."""
    if text == "a":
        return END_A
    if text == "b":
        return END_B
    if text.startswith("ge"):
        kind, col = text[2:].split(".")
        return grid_edge(kind, int(col))
    head, rest = text[0], text[1:]
    if head == "s":
        return spine(int(rest))
    if head == "v":
        return plain(int(rest))
    if head in ("t", "e"):
        i, j = rest.split(".")
        return VertexLabel(head, (int(i), int(j)))
    raise ValueError("cannot parse vertex label %r" % text)


class Graph:
    """Immutable simple graph with a fixed vertex order.

    The vertex order is the construction order; it is used downstream for
    face sorting and boundary-matrix orientation, so builders must be
    deterministic.
    """

    __slots__ = ("vertices", "index", "adj", "adjsets", "family", "params")

    def __init__(self, vertices: Iterable[VertexLabel], edges, family=None, params=None):
        vertices = tuple(vertices)
        index = {}
        for i, v in enumerate(vertices):
            if v in index:
                raise ValueError("duplicate vertex label %s" % v)
            index[v] = i
        nbrs = [set() for _ in vertices]
        for u, v in edges:
            iu, iv = index[u], index[v]
            if iu == iv:
                raise ValueError("loop at vertex %s" % u)
            nbrs[iu].add(iv)
            nbrs[iv].add(iu)
        self.vertices = vertices
        self.index = index
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)
        self.adjsets = tuple(frozenset(s) for s in nbrs)
        self.family = family
        self.params = dict(params) if params else {}

    def __len__(self):
        return len(self.vertices)

    @property
    def n(self):
        return len(self.vertices)

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self):
        """Edges as index pairs (i, j) with i < j, in lexicographic order."""
        for i in range(len(self.vertices)):
            for j in self.adj[i]:
                if i < j:
                    yield (i, j)

    def degree(self, i: int) -> int:
        return len(self.adj[i])

    def label(self, i: int) -> VertexLabel:
        return self.vertices[i]

    def idx(self, v: VertexLabel) -> int:
        try:
            return self.index[v]
        except KeyError:
            raise KeyError("vertex %s not in graph" % v) from None

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "vertices": [str(v) for v in self.vertices],
            "edges": [[str(self.vertices[i]), str(self.vertices[j])]
                      for i, j in self.edges()],
        }


def neighbors(g: Graph, v: VertexLabel) -> set:
    """Open neighborhood of v, as a set of labels."""
    return {g.vertices[u] for u in g.adj[g.idx(v)]}


def build_graph(family: str, *, n: int, m: int | None = None) -> Graph:
    """Construct one of the supported graph families.

    path: n >= 1.  cycle: n >= 3.  grid2: n >= 1 columns.
    star: m >= 1, n >= 1.  theta: m >= 2, n >= 1.  delta: m >= 2, n >= -1,
    where delta with n = 0 is the theta graph on paths of 2 edges and
    delta with n = -1 is a single isolated vertex.
    """
    if family == "path":
        if n < 1:
            raise ValueError("path requires n >= 1")
        verts = [plain(i) for i in range(1, n + 1)]
        edges = [(plain(i), plain(i + 1)) for i in range(1, n)]
        return Graph(verts, edges, "path", {"n": n})

    if family == "cycle":
        if n < 3:
            raise ValueError("cycle requires n >= 3")
        verts = [plain(i) for i in range(1, n + 1)]
        edges = [(plain(i), plain(i + 1)) for i in range(1, n)]
        edges.append((plain(n), plain(1)))
        return Graph(verts, edges, "cycle", {"n": n})

    if family == "grid2":
        if n < 1:
            raise ValueError("grid2 requires n >= 1 columns")
        # column-major: column c holds v(2c-1) (row 1) and v(2c) (row 2)
        verts = [plain(i) for i in range(1, 2 * n + 1)]
        edges = []
        for c in range(1, n + 1):
            edges.append((plain(2 * c - 1), plain(2 * c)))
        for c in range(1, n):
            edges.append((plain(2 * c - 1), plain(2 * c + 1)))
            edges.append((plain(2 * c), plain(2 * c + 2)))
        return Graph(verts, edges, "grid2", {"n": n})

    if family == "star":
        if m is None or m < 1 or n < 1:
            raise ValueError("star requires m >= 1 and n >= 1")
        verts = [END_A]
        verts += [tendril(j, k) for j in range(1, m + 1) for k in range(1, n + 1)]
        edges = []
        for j in range(1, m + 1):
            edges.append((END_A, tendril(j, 1)))
            for k in range(1, n):
                edges.append((tendril(j, k), tendril(j, k + 1)))
        return Graph(verts, edges, "star", {"m": m, "n": n})

    if family == "theta":
        if m is None or m < 2 or n < 1:
            raise ValueError("theta requires m >= 2 and n >= 1")
        verts = [END_A, END_B]
        verts += [tendril(j, k) for j in range(1, m + 1) for k in range(1, n + 1)]
        edges = []
        for j in range(1, m + 1):
            edges.append((END_A, tendril(j, 1)))
            for k in range(1, n):
                edges.append((tendril(j, k), tendril(j, k + 1)))
            edges.append((tendril(j, n), END_B))
        return Graph(verts, edges, "theta", {"m": m, "n": n})

    if family == "delta":
        if m is None or m < 2 or n < -1:
            raise ValueError("delta requires m >= 2 and n >= -1")
        if n == -1:
            return Graph([plain(1)], [], "delta", {"m": m, "n": n})
        verts = [END_A]
        verts += [spine(k) for k in range(1, n + 1)]
        verts.append(END_B)
        verts += [tendril(j, k) for j in range(1, m + 1) for k in range(1, n + 2)]
        edges = []
        for j in range(1, m + 1):
            edges.append((END_A, tendril(j, 1)))
            for k in range(1, n + 1):
                edges.append((tendril(j, k), tendril(j, k + 1)))
            edges.append((tendril(j, n + 1), END_B))
        for k in range(1, n + 1):
            for j in range(1, m + 1):
                edges.append((spine(k), tendril(j, k)))
                edges.append((spine(k), tendril(j, k + 1)))
        return Graph(verts, edges, "delta", {"m": m, "n": n})

    raise ValueError("unknown family %r" % family)


def _line_vertex_label(g: Graph, i: int, j: int) -> VertexLabel:
    """Label for the line-graph vertex corresponding to edge (i, j) of g."""
    if g.family == "grid2":
        # column-major plain indices; see build_graph
        ci, ri = divmod(i, 2)  # 0-based: vertex i is column ci+1, row ri+1
        cj, rj = divmod(j, 2)
        if ci == cj:
            return grid_edge("v", ci + 1)
        return grid_edge("h%d" % (ri + 1), ci + 1)
    if g.family in ("path", "cycle"):
        # edge {v_i, v_{i+1}} -> v_i; the wrap edge of a cycle -> v_n
        if g.family == "cycle" and i == 0 and j == len(g) - 1:
            return plain(len(g))
        return plain(i + 1)
    return VertexLabel("e", (i, j))


def line_graph(g: Graph) -> Graph:
    """Line graph: one vertex per edge, adjacent iff the edges share an endpoint."""
    edge_list = list(g.edges())
    labels = [_line_vertex_label(g, i, j) for i, j in edge_list]
    lg_edges = []
    for x in range(len(edge_list)):
        ix, jx = edge_list[x]
        for y in range(x + 1, len(edge_list)):
            iy, jy = edge_list[y]
            if ix in (iy, jy) or jx in (iy, jy):
                lg_edges.append((labels[x], labels[y]))
    family = "line_graph_of_%s" % g.family if g.family else None
    return Graph(labels, lg_edges, family, g.params)


def delta2_isomorphism(n: int) -> dict:
    """Explicit isomorphism from the m=2 comb graph onto the line graph of
    the 2 x (n+2) grid, returned as a label -> label mapping.

    The mapping is verified to preserve adjacency and non-adjacency before
    it is returned.
    """
    if n < 1:
        raise ValueError("requires n >= 1")
    comb = build_graph("delta", m=2, n=n)
    grid_line = line_graph(build_graph("grid2", n=n + 2))

    mapping = {END_A: grid_edge("v", 1), END_B: grid_edge("v", n + 2)}
    for k in range(1, n + 1):
        mapping[spine(k)] = grid_edge("v", k + 1)
    for j in (1, 2):
        for k in range(1, n + 2):
            mapping[tendril(j, k)] = grid_edge("h%d" % j, k)

    if set(mapping) != set(comb.vertices) or set(mapping.values()) != set(grid_line.vertices):
        raise RuntimeError("vertex sets do not correspond")
    verts = comb.vertices
    for x in range(len(verts)):
        for y in range(x + 1, len(verts)):
            lhs = comb.index[verts[y]] in comb.adjsets[comb.index[verts[x]]]
            ix = grid_line.idx(mapping[verts[x]])
            iy = grid_line.idx(mapping[verts[y]])
            rhs = iy in grid_line.adjsets[ix]
            if lhs != rhs:
                raise RuntimeError(
                    "adjacency not preserved on pair (%s, %s)" % (verts[x], verts[y]))
    return mapping
