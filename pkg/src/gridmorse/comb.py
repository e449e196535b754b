"""Deterministic pivot scripts for paths, extended stars, theta graphs and
comb graphs, plus the critical-cell census read off a completed tree.

Every script is a pure function of a node's (A, B) sets.  For the star,
theta and comb families one shared decision procedure covers all phases; it
classifies the connected components of the residual graph and acts on the
first applicable rule:

  1. a residual vertex with no residual neighbors exists -> Free it.  This
     kills contractible branches (path remnants of length one, the hub left
     over after its tendrils are consumed, the far hub at the last tooth,
     and the isolated-vertex comb base).
  2. a component made of tendril vertices only is a detached path; consume
     it from its far end with Match steps, lowest path index first.
  3. a component with exactly one non-tendril vertex is a star in progress:
     when its tendril intervals are equal with length not divisible by 3,
     split at the hub; otherwise keep consuming the lowest path.
  4. a component with two non-tendril vertices is a theta; split at its
     right hub.
  5. otherwise the component is a comb awaiting its backbone; split the
     smallest spine vertex other than the component's acting left hub.

Rule order matters: teeth are resolved (rules 2 and 3) before the nested
comb continues (rule 5), so the script stays a function of (A, B) alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph, build_graph
from .morse import Free, Match, MatchingTree, Split, run_strategy


@dataclass(frozen=True)
class StrategyScript:
    """A named deterministic pivot rule: (graph, node) -> step."""

    name: str
    decide: object

    def __call__(self, g, node):
        return self.decide(g, node)


@dataclass
class CriticalCensus:
    """Critical cells per dimension.  Dimension-0 entries follow the reduced
    convention: the base cell paired against the empty face is not counted,
    which the tree gives for free since only critical leaves are tallied."""

    m: int | None
    n: int | None
    counts: dict = field(default_factory=dict)
    reduced_zero: bool = True

    def total(self) -> int:
        return sum(self.counts.values())

    def euler(self) -> int:
        return sum(c if d % 2 == 0 else -c for d, c in self.counts.items())

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n,
                "census": {str(d): c for d, c in sorted(self.counts.items())}}


def _free_vertex(g: Graph, res, rset):
    for v in res:
        if all(u not in rset for u in g.adj[v]):
            return v
    return None


def _components(g: Graph, res, rset):
    seen = set()
    comps = []
    for v in res:
        if v in seen:
            continue
        comp = []
        todo = [v]
        seen.add(v)
        while todo:
            x = todo.pop()
            comp.append(x)
            for u in g.adj[x]:
                if u in rset and u not in seen:
                    seen.add(u)
                    todo.append(u)
        comps.append(sorted(comp))
    return comps


def _consume_path(g: Graph, comp, rset):
    """Match step eating a detached tendril interval from its far end."""
    p = max(comp)
    nbr = [u for u in g.adj[p] if u in rset]
    if len(nbr) != 1:
        raise RuntimeError("path end %s is not degree one" % g.vertices[p])
    return Match(p, nbr[0])


def _family_step(g: Graph, node):
    """Shared decision procedure for star, theta and comb graphs."""
    res = node.residual
    rset = set(res)

    v = _free_vertex(g, res, rset)
    if v is not None:
        return Free(v)

    comps = _components(g, res, rset)

    # rule 2: detached tendril paths
    for comp in comps:
        if all(g.vertices[x].kind == "t" for x in comp):
            return _consume_path(g, comp, rset)

    # rule 3: a star in progress
    for comp in comps:
        hubs = [x for x in comp if g.vertices[x].kind != "t"]
        if len(hubs) != 1:
            continue
        center = hubs[0]
        intervals = {}
        for x in comp:
            lab = g.vertices[x]
            if lab.kind == "t":
                intervals.setdefault(lab.args[0], []).append(x)
        lengths = {len(ks) for ks in intervals.values()}
        if len(lengths) == 1 and lengths.pop() % 3 != 0:
            return Split(center)
        j = min(intervals)
        return _consume_path(g, intervals[j], rset)

    # rule 4: a theta joining the acting left hub to b
    for comp in comps:
        hubs = [x for x in comp if g.vertices[x].kind != "t"]
        if len(hubs) != 2:
            continue
        right = [x for x in hubs if g.vertices[x].kind == "b"]
        if not right:
            raise RuntimeError("two-hub component without a right hub")
        return Split(right[0])

    # rule 5: comb backbone
    for comp in comps:
        hubs = sorted(x for x in comp if g.vertices[x].kind != "t")
        if len(hubs) < 3:
            continue
        acting_a = hubs[0]
        spines = [x for x in hubs[1:] if g.vertices[x].kind == "s"]
        if not spines:
            raise RuntimeError("comb component without backbone spines")
        return Split(min(spines))

    raise RuntimeError("no rule applies at node %d" % node.id)


def _path_step(g: Graph, node):
    res = node.residual
    rset = set(res)
    v = _free_vertex(g, res, rset)
    if v is not None:
        return Free(v)
    p = min(res)
    nbr = [u for u in g.adj[p] if u in rset]
    if len(nbr) != 1:
        raise RuntimeError("path start %s is not degree one" % g.vertices[p])
    return Match(p, nbr[0])


def path_strategy(n: int) -> StrategyScript:
    """Consume a path from its low end: Match(1, 2), then Match(4, 5), ..."""
    if n < 1:
        raise ValueError("requires n >= 1")
    return StrategyScript("path(n=%d)" % n, _path_step)


def star_strategy(m: int, n: int) -> StrategyScript:
    """Tendril lengths divisible by 3 are consumed leaf-in; otherwise split
    at the hub and consume the resulting detached paths."""
    if m < 1 or n < 1:
        raise ValueError("requires m >= 1 and n >= 1")
    return StrategyScript("star(m=%d,n=%d)" % (m, n), _family_step)


def theta_strategy(m: int, n: int) -> StrategyScript:
    """Split at the right hub, then run the star script on both branches."""
    if m < 2 or n < 1:
        raise ValueError("requires m >= 2 and n >= 1")
    return StrategyScript("theta(m=%d,n=%d)" % (m, n), _family_step)


def comb_strategy(m: int, n: int) -> StrategyScript:
    """Backbone splits along the spine; each tooth consumes its star factor
    and recurses on the remaining smaller comb; the all-excluded leaf runs
    the theta script.  Degenerate comb sizes n = 0 and n = -1 are legal and
    resolve through the theta and free-vertex rules."""
    if m < 2 or n < -1:
        raise ValueError("requires m >= 2 and n >= -1")
    return StrategyScript("comb(m=%d,n=%d)" % (m, n), _family_step)


def census_from_tree(tree: MatchingTree) -> CriticalCensus:
    """Histogram of critical-cell dimensions from a completed tree."""
    counts = {}
    for nd in tree.critical_leaves():
        d = len(nd.A) - 1
        counts[d] = counts.get(d, 0) + 1
    params = tree.graph.params
    return CriticalCensus(params.get("m"), params.get("n"), counts)


def census_split(tree: MatchingTree) -> dict:
    """Per-tooth breakdown: critical-cell counts keyed by the smallest spine
    index in the cell (None for cells from the all-excluded theta branch)."""
    g = tree.graph
    out = {}
    for nd in tree.critical_leaves():
        spines = [g.vertices[i].args[0] for i in nd.A if g.vertices[i].kind == "s"]
        key = min(spines) if spines else None
        counts = out.setdefault(key, {})
        d = len(nd.A) - 1
        counts[d] = counts.get(d, 0) + 1
    return out


def path_tree(n: int) -> MatchingTree:
    return run_strategy(build_graph("path", n=n), path_strategy(n))


def star_tree(m: int, n: int) -> MatchingTree:
    return run_strategy(build_graph("star", m=m, n=n), star_strategy(m, n))


def theta_tree(m: int, n: int) -> MatchingTree:
    return run_strategy(build_graph("theta", m=m, n=n), theta_strategy(m, n))


def comb_tree(m: int, n: int) -> MatchingTree:
    return run_strategy(build_graph("delta", m=m, n=n), comb_strategy(m, n))


def comb_census(m: int, n: int) -> CriticalCensus:
    census = census_from_tree(comb_tree(m, n))
    census.m, census.n = m, n
    return census
