"""Shared brute-force oracles for the test suite.

These deliberately avoid the library's enumeration and census code paths:
faces come from scanning all vertex subsets, and the expected sphere
profiles are written straight from the closed-form case splits.
"""

from itertools import combinations

from gridmorse import build_graph, independence_complex


def brute_faces(g):
    """All independent sets of g via the 2^n subset scan, as frozensets of
    vertex indices.  Only usable for small graphs."""
    n = len(g)
    assert n <= 20, "brute oracle limited to 20 vertices"
    faces = set()
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            if all(v not in g.adjsets[u] for u, v in combinations(combo, 2)):
                faces.add(frozenset(combo))
    return faces


def brute_f_vector(g):
    counts = {}
    for f in brute_faces(g):
        counts[len(f)] = counts.get(len(f), 0) + 1
    return tuple(counts.get(s, 0) for s in range(max(counts) + 1))


def star_profile(m, n):
    """Critical cells of the extended star: none when n = 3k, a single cell
    of dimension mk when n = 3k+1, of dimension m(k+1)-1 when n = 3k+2."""
    k, r = divmod(n, 3)
    if r == 0:
        return {}
    if r == 1:
        return {m * k: 1}
    return {m * (k + 1) - 1: 1}


def theta_profile(m, n):
    """Critical cells of the theta graph: one cell of dimension mk when
    n = 3k or 3k+1, cells in dimensions mk+1 and m(k+1)-1 when n = 3k+2
    (a single dimension counted twice when those coincide)."""
    k, r = divmod(n, 3)
    if r in (0, 1):
        return {m * k: 1}
    out = {}
    for d in (m * k + 1, m * (k + 1) - 1):
        out[d] = out.get(d, 0) + 1
    return out


def ind_complex(family, **kw):
    return independence_complex(build_graph(family, **kw))
