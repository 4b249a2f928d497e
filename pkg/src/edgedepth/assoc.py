"""Associated primes of powers of edge ideals of unicyclic nonbipartite
graphs, via a walk that grows a closed odd cover.

Start from the odd cycle C of length 2k-1: R_k = V(C), B_k = N(R_k) - R_k,
d_k = product of the cycle variables.  A step picks an edge {i, j} with
i in R and j in R or B; it multiplies d by x_i x_j, and when j was in B it
moves j into R and pulls N(j) into B.  Ass(R/I^n) is the set of minimal
covers together with the primes on R_n + B_n + V for each reachable level-n
state and each minimal completion V to a vertex cover.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import (
    LevelBelowStartError,
    NoFullStateError,
    NotNonbipartiteError,
    NotUnicyclicNonbipartiteError,
    TooLargeError,
    WitnessCheckFailedError,
)
from .graphs import (
    Graph,
    cycle_profile,
    decompose,
    is_unicyclic,
    leaf_edges,
    minimal_vertex_covers,
    simple_cycles,
)
from .monomials import (
    Monomial,
    colon,
    contains,
    edge_ideal,
    maximal_ideal,
    monomial_mul,
    power,
)

MAX_LEVEL_MARGIN = 4


@dataclass(frozen=True)
class CoverState:
    level: int
    r_set: tuple[int, ...]
    b_set: tuple[int, ...]
    d: Monomial


def _validate_unicyclic_nonbipartite(g: Graph) -> tuple[tuple[int, ...], int]:
    """Returns (odd cycle, k) with cycle length 2k - 1."""
    if not is_unicyclic(g) or decompose(g).t != 1:
        raise NotUnicyclicNonbipartiteError(
            "operation needs a connected unicyclic graph with an odd cycle"
        )
    cycle = cycle_profile(g).unique_cycle
    return cycle, (len(cycle) + 1) // 2


def cover_states(g: Graph, n: int, trace: bool = False) -> tuple[CoverState, ...]:
    """All distinct states (R_n, B_n, d_n) reachable at level n."""
    cycle, k = _validate_unicyclic_nonbipartite(g)
    if n < k:
        raise LevelBelowStartError(f"level {n} is below the start level k={k}")
    if n > g.r + MAX_LEVEL_MARGIN:
        raise TooLargeError(f"cover walk capped at level r + {MAX_LEVEL_MARGIN}")
    r_init = frozenset(cycle)
    b_init = frozenset(w for v in r_init for w in g.neighbors(v)) - r_init
    d_init = [0] * g.r
    for v in cycle:
        d_init[v - 1] = 1
    states: set[tuple[frozenset, frozenset, Monomial]] = {
        (r_init, b_init, tuple(d_init))
    }
    for level in range(k, n):
        nxt: set[tuple[frozenset, frozenset, Monomial]] = set()
        for r_set, b_set, d in states:
            for i in r_set:
                for j in g.neighbors(i):
                    step = [0] * g.r
                    step[i - 1] += 1
                    step[j - 1] += 1
                    d2 = monomial_mul(d, tuple(step))
                    if j in r_set:
                        nxt.add((r_set, b_set, d2))
                    elif j in b_set:
                        r2 = r_set | {j}
                        b2 = (b_set | set(g.neighbors(j))) - r2
                        nxt.add((r2, frozenset(b2), d2))
        states = nxt
        if trace:
            import sys

            print(f"level {level + 1}: {len(states)} states", file=sys.stderr)
    out = [
        CoverState(n, tuple(sorted(r_set)), tuple(sorted(b_set)), d)
        for r_set, b_set, d in states
    ]
    out.sort(key=lambda s: (s.r_set, s.b_set, s.d))
    return tuple(out)


def _minimal_cover_completions(
    g: Graph, covered: Iterable[int]
) -> list[tuple[int, ...]]:
    """Minimal V with covered + V a vertex cover of g."""
    cov = set(covered)
    uncovered = [(u, v) for u, v in g.edges if u not in cov and v not in cov]
    if not uncovered:
        return [()]
    support = sorted({v for e in uncovered for v in e})
    sets = []
    nsup = len(support)
    for mask in range(1 << nsup):
        cand = {support[i] for i in range(nsup) if mask >> i & 1}
        if all(u in cand or v in cand for u, v in uncovered):
            sets.append(frozenset(cand))
    minimal = [s for s in sets if not any(t < s for t in sets)]
    return sorted(tuple(sorted(s)) for s in minimal)


def ass_formula(g: Graph, n: int) -> tuple[tuple[int, ...], ...]:
    """Ass(R/I(g)^n) for connected unicyclic nonbipartite g."""
    _, k = _validate_unicyclic_nonbipartite(g)
    primes = {tuple(c) for c in minimal_vertex_covers(g)}
    if n >= k:
        for state in cover_states(g, n):
            covered = set(state.r_set) | set(state.b_set)
            for completion in _minimal_cover_completions(g, covered):
                primes.add(tuple(sorted(covered | set(completion))))
    return tuple(sorted(primes))


def witness_monomial(g: Graph) -> tuple[int, Monomial]:
    """A monomial f of degree 2n - 1 with (I(g)^n : f) the maximal ideal,
    at n = v - e0 - k + 1; certifies depth R/I(g)^n = 0."""
    cycle, k = _validate_unicyclic_nonbipartite(g)
    n = g.r - leaf_edges(g) - k + 1
    full = set(g.vertices)
    candidates = [
        s.d
        for s in cover_states(g, n)
        if set(s.r_set) | set(s.b_set) == full
    ]
    if not candidates:
        raise NoFullStateError(
            f"no level-{n} state covers every vertex; the walk should reach one"
        )
    f = min(candidates)
    ideal_n = power(edge_ideal(g), n)
    if contains(ideal_n, f):
        raise WitnessCheckFailedError(f"witness lies in the power: {f}")
    for i in range(g.r):
        bumped = list(f)
        bumped[i] += 1
        if not contains(ideal_n, tuple(bumped)):
            raise WitnessCheckFailedError(
                f"witness times x{i + 1} escapes the power: {f}"
            )
    return n, f


def _spanning_unicyclic_keeping(g: Graph, cycle: tuple[int, ...]) -> Graph:
    """Delete edges off the given cycle until the graph is unicyclic,
    preferring deletions whose endpoints both keep degree >= 3."""
    from .graphs import build_graph

    edges = set(g.edges)
    cyc_edges = set()
    m = len(cycle)
    for i in range(m):
        a, b = cycle[i], cycle[(i + 1) % m]
        cyc_edges.add((min(a, b), max(a, b)))
    while len(edges) > g.r:
        h = build_graph(sorted(edges), r=g.r)
        extra = None
        for cyc in simple_cycles(h):
            ce = {
                (min(cyc[i], cyc[(i + 1) % len(cyc)]), max(cyc[i], cyc[(i + 1) % len(cyc)]))
                for i in range(len(cyc))
            }
            if ce != cyc_edges:
                off = sorted(ce - cyc_edges)
                if off:
                    extra = off
                    break
        if extra is None:
            break
        deg = {v: h.degree(v) for v in h.vertices}
        extra.sort(key=lambda e: (-(min(deg[e[0]], deg[e[1]])), e))
        edges.discard(extra[0])
    return build_graph(sorted(edges), r=g.r)


def nonbipartite_depth_zero_bound(g: Graph) -> tuple[int, Monomial]:
    """For connected nonbipartite g: an n with depth R/I(g)^n = 0,
    certified by (I(g)^n : f) = m for an explicit monomial f.

    Built on a spanning unicyclic subgraph H that keeps a maximum odd
    cycle; the witness for H works in g because I(H) is inside I(g).
    """
    dec = decompose(g)
    if dec.p != 1 or dec.t != 1:
        raise NotNonbipartiteError(
            "operation needs a connected nonbipartite graph"
        )
    cycles = simple_cycles(g)
    odd = [c for c in cycles if len(c) % 2 == 1]
    best_len = max(len(c) for c in odd)
    cycle = min(c for c in odd if len(c) == best_len)
    h = _spanning_unicyclic_keeping(g, cycle)
    n, f = witness_monomial(h)
    quotient = colon(power(edge_ideal(g), n), f)
    if quotient != maximal_ideal(g.r):
        raise WitnessCheckFailedError(
            f"colon by {f} at n={n} is {quotient}, not the maximal ideal"
        )
    return n, f
