"""Finite graphs: path metrics, homogeneity, and twisted metrics.

Everything here works on concrete vertex sets, complementing the
catalog modules that work on distance alphabets alone.  A graph is
held with its full all-pairs path metric; twists act on that metric
pointwise and the reports say whether the image is again a graph-like
metric.  The homogeneity check runs the backend one-point extension
search over partial isometries.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

import numpy as np

from ._backend import DEFAULT_STATE_BUDGET, homogeneity_search
from .errors import (
    BudgetError,
    DimensionMismatchError,
    DisconnectedGraphError,
    InvalidInputError,
)
from .permutations import Twist
from .triangle_catalog import TriangleSet


def _bfs_all_pairs(adj: np.ndarray) -> np.ndarray:
    n = adj.shape[0]
    dist = np.full((n, n), -1, dtype=np.int64)
    for s in range(n):
        d = dist[s]
        d[s] = 0
        frontier = np.zeros(n, dtype=bool)
        frontier[s] = True
        level = 0
        while frontier.any():
            level += 1
            nxt = adj[frontier].any(axis=0) & (d < 0)
            d[nxt] = level
            frontier = nxt
    if (dist < 0).any():
        u = int(np.argwhere(dist < 0)[0][1])
        raise DisconnectedGraphError(f"vertex {u} is unreachable from vertex 0")
    return dist


class FiniteMetricGraph:
    """Connected undirected graph with its all-pairs path metric.

    Built from a square boolean adjacency matrix: symmetric, zero
    diagonal.  Exposes n, adjacency, dist, diameter; the arrays are
    frozen after construction.
    """

    __slots__ = ("n", "adjacency", "dist", "diameter")

    def __init__(self, adjacency):
        adj = np.array(adjacency, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise InvalidInputError(f"adjacency must be square, got shape {adj.shape}")
        n = adj.shape[0]
        if n < 1:
            raise InvalidInputError("graph needs at least one vertex")
        if adj.diagonal().any():
            raise InvalidInputError("self loops are not allowed")
        if not (adj == adj.T).all():
            raise InvalidInputError("adjacency must be symmetric")
        dist = _bfs_all_pairs(adj)
        adj.setflags(write=False)
        dist.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "dist", dist)
        object.__setattr__(self, "diameter", int(dist.max()))

    def __setattr__(self, name, value):
        raise AttributeError("FiniteMetricGraph is immutable")

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(int(x) for x in self.adjacency.sum(axis=1))

    def edges(self) -> list[tuple[int, int]]:
        return [(int(u), int(v)) for u, v in np.argwhere(np.triu(self.adjacency))]

    def __repr__(self):
        return (
            f"FiniteMetricGraph(n={self.n}, edges={int(self.adjacency.sum()) // 2}, "
            f"diameter={self.diameter})"
        )


def cycle_graph(n: int) -> FiniteMetricGraph:
    """The n-cycle, n >= 3."""
    if not isinstance(n, int) or n < 3:
        raise InvalidInputError(f"cycle needs an integer n >= 3, got {n!r}")
    adj = np.zeros((n, n), dtype=bool)
    idx = np.arange(n)
    adj[idx, (idx + 1) % n] = True
    adj[(idx + 1) % n, idx] = True
    return FiniteMetricGraph(adj)


def crown_graph(m: int) -> FiniteMetricGraph:
    """Two sides of m vertices, i on one side joined to all j != i on the other."""
    if not isinstance(m, int) or m < 3:
        raise InvalidInputError(f"crown needs an integer m >= 3, got {m!r}")
    adj = np.zeros((2 * m, 2 * m), dtype=bool)
    for i in range(m):
        for j in range(m):
            if i != j:
                adj[i, m + j] = True
                adj[m + j, i] = True
    return FiniteMetricGraph(adj)


def complete_multipartite(sizes) -> FiniteMetricGraph:
    """Complete multipartite graph; edge exactly between different parts."""
    parts = list(sizes)
    if not parts or any(not isinstance(s, int) or s < 1 for s in parts):
        raise InvalidInputError(f"part sizes must be positive integers: {sizes!r}")
    n = sum(parts)
    label = np.repeat(np.arange(len(parts)), parts)
    adj = label[:, None] != label[None, :]
    return FiniteMetricGraph(adj)


def rook_graph(m: int) -> FiniteMetricGraph:
    """m x m grid, two cells adjacent when they share a row or column."""
    if not isinstance(m, int) or m < 2:
        raise InvalidInputError(f"rook grid needs an integer m >= 2, got {m!r}")
    cells = [(r, c) for r in range(m) for c in range(m)]
    adj = np.zeros((m * m, m * m), dtype=bool)
    for i, (r1, c1) in enumerate(cells):
        for j, (r2, c2) in enumerate(cells):
            if i != j and (r1 == r2 or c1 == c2):
                adj[i, j] = True
    return FiniteMetricGraph(adj)


# North pole 0, upper pentagon 1..5, lower pentagon 6..10, south pole 11.
# Upper vertex i sits over the lower edge {6+(i-1)%5, 6+i%5}.
_ICOSAHEDRON_EDGES = (
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
    (1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
    (11, 6), (11, 7), (11, 8), (11, 9), (11, 10),
    (6, 7), (7, 8), (8, 9), (9, 10), (10, 6),
    (1, 6), (1, 7), (2, 7), (2, 8), (3, 8),
    (3, 9), (4, 9), (4, 10), (5, 10), (5, 6),
)


def icosahedron() -> FiniteMetricGraph:
    """The icosahedron: 12 vertices, 30 edges, diameter 3."""
    adj = np.zeros((12, 12), dtype=bool)
    for u, v in _ICOSAHEDRON_EDGES:
        adj[u, v] = True
        adj[v, u] = True
    return FiniteMetricGraph(adj)


def johnson_graph(m: int, t: int) -> FiniteMetricGraph:
    """t-subsets of an m-set, adjacent when they share t-1 elements."""
    if not isinstance(m, int) or not isinstance(t, int) or not 1 <= t < m:
        raise InvalidInputError(f"need integers 1 <= t < m, got t={t!r}, m={m!r}")
    subsets = list(itertools.combinations(range(m), t))
    n = len(subsets)
    if n > 512:
        raise BudgetError(f"{n} subsets is over the 512-vertex budget")
    adj = np.zeros((n, n), dtype=bool)
    for i, a in enumerate(subsets):
        sa = set(a)
        for j in range(i + 1, n):
            if len(sa.intersection(subsets[j])) == t - 1:
                adj[i, j] = True
                adj[j, i] = True
    return FiniteMetricGraph(adj)


def is_isomorphic(a, b) -> bool:
    """Graph isomorphism by backtracking; takes graphs or adjacency arrays."""
    adj_a = a.adjacency if isinstance(a, FiniteMetricGraph) else np.asarray(a, dtype=bool)
    adj_b = b.adjacency if isinstance(b, FiniteMetricGraph) else np.asarray(b, dtype=bool)
    n = adj_a.shape[0]
    if adj_b.shape[0] != n:
        return False
    deg_a = adj_a.sum(axis=1)
    deg_b = adj_b.sum(axis=1)
    if sorted(deg_a) != sorted(deg_b):
        return False
    # most-constrained-first: map high-degree vertices early
    order = sorted(range(n), key=lambda v: -deg_a[v])
    mapping = np.full(n, -1, dtype=np.int64)
    used = np.zeros(n, dtype=bool)

    def place(pos: int) -> bool:
        if pos == n:
            return True
        u = order[pos]
        for v in range(n):
            if used[v] or deg_a[u] != deg_b[v]:
                continue
            ok = True
            for w in order[:pos]:
                if adj_a[u, w] != adj_b[v, mapping[w]]:
                    ok = False
                    break
            if ok:
                mapping[u] = v
                used[v] = True
                if place(pos + 1):
                    return True
                used[v] = False
                mapping[u] = -1
        return False

    return place(0)


def path_metric(g: FiniteMetricGraph) -> np.ndarray:
    """Copy of the graph's all-pairs shortest path matrix."""
    return g.dist.copy()


def graph_triangle_set(g: FiniteMetricGraph) -> TriangleSet:
    """Sorted distance triples realized by vertex triples of the graph."""
    if g.diameter < 1:
        raise InvalidInputError("triple set needs a graph with at least one edge")
    return _triples_of_matrix(g.dist, g.diameter)


def _triples_of_matrix(m: np.ndarray, delta: int) -> TriangleSet:
    n = m.shape[0]
    base = delta + 1
    vv, ww = np.triu_indices(n, 1)
    pair = m[vv, ww]
    codes: set[int] = set()
    for u in range(n - 2):
        keep = vv > u
        tr = np.stack([m[u, vv[keep]], m[u, ww[keep]], pair[keep]], axis=0)
        tr.sort(axis=0)
        codes.update(np.unique((tr[0] * base + tr[1]) * base + tr[2]).tolist())
    triples = sorted(
        (code // (base * base), code // base % base, code % base)
        for code in codes
    )
    return TriangleSet.from_triples(delta, triples)


@dataclass(frozen=True)
class HomogeneityResult:
    """Outcome of the one-point extension search on one graph.

    complete is False when the search was depth-bounded, in which case
    homogeneous=True only certifies extension up to that many points.
    witness on failure is (domain vertices, image vertices, vertex with
    no valid image).
    """

    homogeneous: bool
    states: int
    depth: int
    complete: bool
    witness: tuple[tuple[int, ...], tuple[int, ...], int] | None

    def __bool__(self) -> bool:
        return self.homogeneous

    def to_json(self) -> str:
        witness = None
        if self.witness is not None:
            witness = {
                "domain": list(self.witness[0]),
                "image": list(self.witness[1]),
                "stuck": self.witness[2],
            }
        return json.dumps(
            {
                "homogeneous": self.homogeneous,
                "states": self.states,
                "depth": self.depth,
                "complete": self.complete,
                "witness": witness,
            },
            sort_keys=True,
        )


def is_metrically_homogeneous(
    g: FiniteMetricGraph,
    cap: int = 24,
    max_depth: int | None = None,
    max_states: int = DEFAULT_STATE_BUDGET,
    backend: str | None = None,
) -> HomogeneityResult:
    """Decide whether every partial isometry extends to a total one.

    The search is exponential in the worst case, so graphs above the
    vertex cap are refused and a state budget bounds the walk; both
    raise BudgetError.  max_depth bounds the partial isometry size
    instead of proving full homogeneity (the result then says
    complete=False).
    """
    if not isinstance(g, FiniteMetricGraph):
        raise InvalidInputError(f"expected a FiniteMetricGraph, got {type(g).__name__}")
    if not isinstance(cap, int) or cap < 1:
        raise InvalidInputError(f"cap must be a positive integer, got {cap!r}")
    if g.n > cap:
        raise BudgetError(f"graph has {g.n} vertices, over the cap of {cap}")
    depth = g.n - 1 if max_depth is None else max(0, min(max_depth, g.n - 1))
    ok, states, witness = homogeneity_search(
        g.dist, max_depth=depth, max_states=max_states, backend=backend
    )
    return HomogeneityResult(
        homogeneous=ok,
        states=states,
        depth=depth,
        complete=depth >= g.n - 1,
        witness=witness,
    )


@dataclass(frozen=True)
class TwistedMetricReport:
    """A twisted distance matrix and whether it is graph-like again.

    valid means: still a metric, the distance-1 graph is connected,
    and every geodesic triple (1, k, k+1) below the diameter is
    realized.  matrix is always populated.
    """

    matrix: np.ndarray
    valid: bool
    metric_ok: bool
    triangle_witness: tuple[int, int, int] | None
    unit_connected: bool
    geodesics_ok: bool
    missing_geodesic: int | None
    realized: TriangleSet

    def to_json(self) -> str:
        return json.dumps(
            {
                "matrix": self.matrix.tolist(),
                "valid": self.valid,
                "metric_ok": self.metric_ok,
                "triangle_witness": list(self.triangle_witness)
                if self.triangle_witness
                else None,
                "unit_connected": self.unit_connected,
                "geodesics_ok": self.geodesics_ok,
                "missing_geodesic": self.missing_geodesic,
            },
            sort_keys=True,
        )


def apply_twist_metric(g: FiniteMetricGraph, twist: Twist) -> TwistedMetricReport:
    """Relabel the path metric through a twist and grade the result."""
    if not isinstance(g, FiniteMetricGraph):
        raise InvalidInputError(f"expected a FiniteMetricGraph, got {type(g).__name__}")
    if not isinstance(twist, Twist):
        raise InvalidInputError(f"expected a Twist, got {type(twist).__name__}")
    if twist.delta != g.diameter:
        raise DimensionMismatchError(
            f"twist alphabet 1..{twist.delta} does not match graph diameter {g.diameter}"
        )
    lookup = np.array((0,) + twist.images, dtype=np.int64)
    m = lookup[g.dist]
    m.setflags(write=False)

    sums = m[:, :, None] + m[None, :, :]
    slack = sums.min(axis=1) - m
    metric_ok = bool((slack >= 0).all())
    triangle_witness = None
    if not metric_ok:
        i, j = map(int, np.argwhere(slack < 0)[0])
        k = int(np.argmin(sums[i, :, j]))
        triangle_witness = (i, k, j)

    unit = m == 1
    reach = np.zeros(g.n, dtype=bool)
    reach[0] = True
    frontier = reach.copy()
    while frontier.any():
        frontier = unit[frontier].any(axis=0) & ~reach
        reach |= frontier
    unit_connected = bool(reach.all())

    realized = _triples_of_matrix(m, twist.delta)
    geodesics_ok = True
    missing = None
    for k in range(1, twist.delta):
        if (1, k, k + 1) not in realized:
            geodesics_ok = False
            missing = k
            break

    return TwistedMetricReport(
        matrix=m,
        valid=metric_ok and unit_connected and geodesics_ok,
        metric_ok=metric_ok,
        triangle_witness=triangle_witness,
        unit_connected=unit_connected,
        geodesics_ok=geodesics_ok,
        missing_geodesic=missing,
        realized=realized,
    )


@dataclass(frozen=True)
class AntipodalReport:
    """Whether a graph pairs off antipodally and obeys the distance law.

    verdict is one of "holds", "fails", "not-antipodal".  The law says
    the antipode map reflects every distance: d(u', v) = diam - d(u, v).
    witness on "fails" is (u, v, got, want).
    """

    antipodal: bool
    law_holds: bool | None
    verdict: str
    pairing: tuple[int, ...] | None
    witness: tuple[int, int, int, int] | None

    def to_json(self) -> str:
        return json.dumps(
            {
                "antipodal": self.antipodal,
                "law_holds": self.law_holds,
                "verdict": self.verdict,
                "pairing": list(self.pairing) if self.pairing else None,
                "witness": list(self.witness) if self.witness else None,
            },
            sort_keys=True,
        )


def check_antipodal_law(g: FiniteMetricGraph) -> AntipodalReport:
    """Check unique antipodes and the reflected-distance law; never raises."""
    if not isinstance(g, FiniteMetricGraph):
        raise InvalidInputError(f"expected a FiniteMetricGraph, got {type(g).__name__}")
    d = g.diameter
    far = g.dist == d
    if d < 1 or not (far.sum(axis=1) == 1).all():
        return AntipodalReport(
            antipodal=False, law_holds=None, verdict="not-antipodal",
            pairing=None, witness=None,
        )
    partner = far.argmax(axis=1)
    reflected = g.dist[partner]
    expected = d - g.dist
    if (reflected == expected).all():
        return AntipodalReport(
            antipodal=True, law_holds=True, verdict="holds",
            pairing=tuple(int(x) for x in partner), witness=None,
        )
    u, v = map(int, np.argwhere(reflected != expected)[0])
    return AntipodalReport(
        antipodal=True,
        law_holds=False,
        verdict="fails",
        pairing=tuple(int(x) for x in partner),
        witness=(u, v, int(reflected[u, v]), int(expected[u, v])),
    )


@dataclass(frozen=True)
class ComplementReport:
    """Swapping distances 1 and 2 on a diameter-2 graph, graded.

    The swapped metric's unit graph is the complement.  twistable means
    the swap yields the path metric of a connected complement that is
    itself homogeneous.
    """

    connected: bool
    valid_metric: bool
    metric_matches: bool | None
    graph: FiniteMetricGraph | None
    homogeneity: HomogeneityResult | None
    twistable: bool

    def to_json(self) -> str:
        return json.dumps(
            {
                "connected": self.connected,
                "valid_metric": self.valid_metric,
                "metric_matches": self.metric_matches,
                "homogeneous": None
                if self.homogeneity is None
                else self.homogeneity.homogeneous,
                "twistable": self.twistable,
            },
            sort_keys=True,
        )


def complement_twist(
    g: FiniteMetricGraph,
    cap: int = 24,
    max_states: int = DEFAULT_STATE_BUDGET,
    backend: str | None = None,
) -> ComplementReport:
    """Grade the 1<->2 distance swap on a diameter-2 graph."""
    if not isinstance(g, FiniteMetricGraph):
        raise InvalidInputError(f"expected a FiniteMetricGraph, got {type(g).__name__}")
    if g.diameter != 2:
        raise InvalidInputError(
            f"the 1<->2 swap needs a diameter-2 graph, got diameter {g.diameter}"
        )
    report = apply_twist_metric(g, Twist((2, 1)))
    comp = ~g.adjacency & ~np.eye(g.n, dtype=bool)
    if not report.unit_connected:
        return ComplementReport(
            connected=False, valid_metric=report.valid, metric_matches=None,
            graph=None, homogeneity=None, twistable=False,
        )
    h = FiniteMetricGraph(comp)
    matches = bool((h.dist == report.matrix).all())
    hom = is_metrically_homogeneous(h, cap=cap, max_states=max_states, backend=backend)
    return ComplementReport(
        connected=True,
        valid_metric=report.valid,
        metric_matches=matches,
        graph=h,
        homogeneity=hom,
        twistable=report.valid and matches and hom.homogeneous,
    )


def antipodal_double_cover(g: FiniteMetricGraph) -> FiniteMetricGraph:
    """Two copies of the graph, cross edges between distinct non-neighbors.

    Vertex (u, layer) is u + layer * n.  Within a layer the base
    adjacency is kept; (u, 0) joins (v, 1) exactly when u != v and u is
    not adjacent to v.
    """
    if not isinstance(g, FiniteMetricGraph):
        raise InvalidInputError(f"expected a FiniteMetricGraph, got {type(g).__name__}")
    n = g.n
    cross = ~g.adjacency & ~np.eye(n, dtype=bool)
    adj = np.zeros((2 * n, 2 * n), dtype=bool)
    adj[:n, :n] = g.adjacency
    adj[n:, n:] = g.adjacency
    adj[:n, n:] = cross
    adj[n:, :n] = cross.T
    return FiniteMetricGraph(adj)


@dataclass(frozen=True)
class CoverCandidate:
    """One candidate construction graded by the cover search."""

    rule: str
    connected: bool
    n: int
    diameter: int | None
    antipodal: bool
    law_verdict: str | None
    locally_base: bool | None
    homogeneous: bool | None
    homogeneity_complete: bool | None

    def accepted(self) -> bool:
        return (
            self.connected
            and self.diameter == 3
            and self.antipodal
            and self.law_verdict == "holds"
            and bool(self.locally_base)
            and bool(self.homogeneous)
        )


@dataclass(frozen=True)
class CoverSearchReport:
    """Outcome of searching cover constructions over one base graph."""

    base_n: int
    candidates: tuple[CoverCandidate, ...]
    winners: tuple[str, ...]

    def graph_for(self, base: FiniteMetricGraph, rule: str) -> FiniteMetricGraph:
        return _cover_candidate(base, rule)

    def to_json(self) -> str:
        return json.dumps(
            {
                "base_n": self.base_n,
                "winners": list(self.winners),
                "candidates": [
                    {
                        "rule": c.rule,
                        "connected": c.connected,
                        "n": c.n,
                        "diameter": c.diameter,
                        "antipodal": c.antipodal,
                        "law_verdict": c.law_verdict,
                        "locally_base": c.locally_base,
                        "homogeneous": c.homogeneous,
                        "homogeneity_complete": c.homogeneity_complete,
                    }
                    for c in self.candidates
                ],
            },
            sort_keys=True,
        )


# Candidate constructions.  The layered rules stack two copies of the
# base and wire the layers by the matching, the adjacency, or its
# complement.  The named graphs cover the cases where the true cover
# is no layered assembly at all.
_COVER_RULES = (
    "layered-matching",
    "layered-adjacency",
    "layered-complement",
    "icosahedron",
    "johnson-6-3",
)


def _cover_candidate(g: FiniteMetricGraph, rule: str) -> FiniteMetricGraph:
    n = g.n
    if rule == "icosahedron":
        return icosahedron()
    if rule == "johnson-6-3":
        return johnson_graph(6, 3)
    if rule == "layered-matching":
        cross = np.eye(n, dtype=bool)
    elif rule == "layered-adjacency":
        cross = g.adjacency.copy()
    elif rule == "layered-complement":
        cross = ~g.adjacency & ~np.eye(n, dtype=bool)
    else:
        raise InvalidInputError(f"unknown cover rule {rule!r}")
    adj = np.zeros((2 * n, 2 * n), dtype=bool)
    adj[:n, :n] = g.adjacency
    adj[n:, n:] = g.adjacency
    adj[:n, n:] = cross
    adj[n:, :n] = cross.T
    return FiniteMetricGraph(adj)


def _locally_base(cover: FiniteMetricGraph, base: FiniteMetricGraph) -> bool:
    """Every vertex neighborhood induces a copy of the base graph."""
    for v in range(cover.n):
        neigh = np.flatnonzero(cover.adjacency[v])
        if neigh.size != base.n:
            return False
        induced = cover.adjacency[np.ix_(neigh, neigh)]
        if not is_isomorphic(induced, base):
            return False
    return True


def find_antipodal_cover(
    g: FiniteMetricGraph,
    homogeneity_depth: int | None = 3,
    max_states: int = DEFAULT_STATE_BUDGET,
    backend: str | None = None,
) -> CoverSearchReport:
    """Search known constructions for an antipodal diameter-3 cover of g.

    A candidate wins when it is connected of diameter 3, pairs off
    antipodally with the reflected-distance law, induces a copy of the
    base graph on every vertex neighborhood, and passes the
    homogeneity search.  The default homogeneity depth bounds that
    search to 3-point partial maps, a certificate rather than a proof;
    pass None to demand the complete search.
    """
    if not isinstance(g, FiniteMetricGraph):
        raise InvalidInputError(f"expected a FiniteMetricGraph, got {type(g).__name__}")
    results = []
    for rule in _COVER_RULES:
        try:
            cover = _cover_candidate(g, rule)
        except DisconnectedGraphError:
            results.append(
                CoverCandidate(
                    rule=rule, connected=False, n=2 * g.n, diameter=None,
                    antipodal=False, law_verdict=None, locally_base=None,
                    homogeneous=None, homogeneity_complete=None,
                )
            )
            continue
        anti = check_antipodal_law(cover)
        local = None
        homogeneous = None
        complete = None
        if cover.diameter == 3 and anti.verdict == "holds":
            local = _locally_base(cover, g)
            if local:
                hom = is_metrically_homogeneous(
                    cover,
                    cap=cover.n,
                    max_depth=homogeneity_depth,
                    max_states=max_states,
                    backend=backend,
                )
                homogeneous = hom.homogeneous
                complete = hom.complete
        results.append(
            CoverCandidate(
                rule=rule,
                connected=True,
                n=cover.n,
                diameter=cover.diameter,
                antipodal=anti.antipodal,
                law_verdict=anti.verdict,
                locally_base=local,
                homogeneous=homogeneous,
                homogeneity_complete=complete,
            )
        )
    winners = tuple(c.rule for c in results if c.accepted())
    return CoverSearchReport(base_n=g.n, candidates=tuple(results), winners=winners)


def to_edge_list(g: FiniteMetricGraph) -> str:
    """One "u v" pair per line, 0-indexed, u < v, sorted."""
    return "\n".join(f"{u} {v}" for u, v in g.edges()) + "\n"


def from_edge_list(text: str) -> FiniteMetricGraph:
    """Parse "u v" lines; vertex count is one past the largest label."""
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InvalidInputError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise InvalidInputError(f"line {lineno}: bad vertex in {line!r}") from exc
        if u < 0 or v < 0:
            raise InvalidInputError(f"line {lineno}: vertices must be >= 0")
        edges.append((u, v))
    if not edges:
        raise InvalidInputError("edge list is empty")
    n = max(max(u, v) for u, v in edges) + 1
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        if u == v:
            raise InvalidInputError(f"self loop at vertex {u}")
        adj[u, v] = True
        adj[v, u] = True
    return FiniteMetricGraph(adj)


def to_adjacency_json(g: FiniteMetricGraph) -> str:
    """JSON object with the vertex count and sorted edge pairs."""
    return json.dumps({"n": g.n, "edges": [[u, v] for u, v in g.edges()]})


def from_adjacency_json(text: str) -> FiniteMetricGraph:
    try:
        data = json.loads(text)
        n = data["n"]
        edges = data["edges"]
    except (json.JSONDecodeError, TypeError, KeyError) as exc:
        raise InvalidInputError(f"bad graph JSON: {text[:80]!r}") from exc
    if not isinstance(n, int) or n < 1:
        raise InvalidInputError(f"bad vertex count {n!r}")
    adj = np.zeros((n, n), dtype=bool)
    for e in edges:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and 0 <= x < n for x in e)
            or e[0] == e[1]
        ):
            raise InvalidInputError(f"bad edge {e!r}")
        adj[e[0], e[1]] = True
        adj[e[1], e[0]] = True
    return FiniteMetricGraph(adj)


def load_graph_file(path: str) -> FiniteMetricGraph:
    """Read a graph file: .json as adjacency JSON, anything else as edges."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json"):
        return from_adjacency_json(text)
    return from_edge_list(text)
