"""Independence and matching complexes, enumerated explicitly.

Faces are stored as sorted tuples of vertex indices into the ground vertex
order, graded by size (graded[s] holds the faces with s vertices, so the
empty face sits at graded[0]).  Enumeration is a lexicographic DFS over the
vertex order, which makes face indices reproducible run to run.
"""

from __future__ import annotations

from .graphs import Graph, line_graph

DEFAULT_FACE_CAP = 5_000_000


class CapacityError(RuntimeError):
    """Raised when an enumeration or matrix would exceed a desk-scale cap."""


class SimplicialComplex:
    __slots__ = ("labels", "graded", "graph")

    def __init__(self, labels, graded, graph=None):
        self.labels = tuple(labels)
        self.graded = graded  # graded[s]: list of index tuples of length s
        self.graph = graph

    @classmethod
    def from_facets(cls, labels, facets) -> "SimplicialComplex":
        """Downward closure of a facet list; facets are index tuples."""
        from itertools import combinations
        faces = set()
        for f in facets:
            f = tuple(sorted(f))
            for s in range(len(f) + 1):
                faces.update(combinations(f, s))
        top = max((len(f) for f in faces), default=0)
        graded = [[] for _ in range(top + 1)]
        for f in sorted(faces, key=lambda t: (len(t), t)):
            graded[len(f)].append(f)
        return cls(labels, graded, None)

    @property
    def dim(self) -> int:
        return len(self.graded) - 2

    def num_faces(self) -> int:
        return sum(len(fs) for fs in self.graded)

    def f_vector(self):
        """Face counts per dimension, starting at dimension -1."""
        return tuple(len(fs) for fs in self.graded)

    def reduced_euler(self) -> int:
        return sum(len(fs) if s % 2 == 1 else -len(fs)
                   for s, fs in enumerate(self.graded))

    def face_labels(self, face):
        return tuple(self.labels[i] for i in face)

    def all_faces(self):
        for fs in self.graded:
            yield from fs

    def face_label_sets(self):
        """All faces as frozensets of labels (order-free comparison form)."""
        return {frozenset(self.face_labels(f)) for f in self.all_faces()}

    def to_json(self, include_faces=False) -> dict:
        out = {
            "graph": self.graph.to_json() if self.graph is not None else None,
            "f_vector": list(self.f_vector()),
            "reduced_euler": self.reduced_euler(),
        }
        if include_faces:
            out["faces"] = [[str(l) for l in self.face_labels(f)]
                            for f in self.all_faces()]
        return out


def independence_complex(g: Graph, face_cap: int = DEFAULT_FACE_CAP) -> SimplicialComplex:
    """All independent sets of g, graded by size."""
    n = len(g)
    adj = g.adj
    graded = [[()]]
    total = 1
    blocked = [0] * n
    face = []

    def grow(start):
        nonlocal total
        for v in range(start, n):
            if blocked[v]:
                continue
            face.append(v)
            total += 1
            if total > face_cap:
                raise CapacityError(
                    "independence complex exceeds face cap %d" % face_cap)
            t = tuple(face)
            if len(graded) <= len(t):
                graded.append([])
            graded[len(t)].append(t)
            for u in adj[v]:
                blocked[u] += 1
            grow(v + 1)
            for u in adj[v]:
                blocked[u] -= 1
            face.pop()

    grow(0)
    return SimplicialComplex(g.vertices, graded, g)


def count_independent_sets(g: Graph, cap: int | None = None) -> int:
    """Number of independent sets of g (including the empty set), without
    materializing them.  If cap is given, stop and return cap + 1 as soon
    as the count would exceed it."""
    n = len(g)
    adj = g.adj
    blocked = [0] * n
    total = 1

    def grow(start):
        nonlocal total
        for v in range(start, n):
            if blocked[v]:
                continue
            total += 1
            if cap is not None and total > cap:
                return False
            for u in adj[v]:
                blocked[u] += 1
            ok = grow(v + 1)
            for u in adj[v]:
                blocked[u] -= 1
            if not ok:
                return False
        return True

    grow(0)
    return total


def matching_complex(g: Graph, face_cap: int = DEFAULT_FACE_CAP) -> SimplicialComplex:
    """Matchings of g, realized as the independence complex of the line graph."""
    return independence_complex(line_graph(g), face_cap)


def join(c1: SimplicialComplex, c2: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join: faces are all unions of a face of c1 and a face of c2.

    The two complexes must have disjoint vertex label sets.
    """
    overlap = set(c1.labels) & set(c2.labels)
    if overlap:
        raise ValueError("overlapping vertex labels: %s"
                         % ", ".join(sorted(str(v) for v in overlap)))
    labels = c1.labels + c2.labels
    shift = len(c1.labels)
    top = (len(c1.graded) - 1) + (len(c2.graded) - 1)
    graded = [[] for _ in range(top + 1)]
    for s1, faces1 in enumerate(c1.graded):
        for s2, faces2 in enumerate(c2.graded):
            bucket = graded[s1 + s2]
            for f1 in faces1:
                for f2 in faces2:
                    bucket.append(f1 + tuple(i + shift for i in f2))
    for bucket in graded:
        bucket.sort()
    return SimplicialComplex(labels, graded, None)


def f_vector(c: SimplicialComplex):
    return c.f_vector()


def reduced_euler(c: SimplicialComplex) -> int:
    return c.reduced_euler()
