"""Index of depth stability of powers of edge ideals.

dstab(I(G)) is the least n0 with depth R/I(G)^n constant for n >= n0; the
limit depth is the number of bipartite connected components.  Closed forms:

  * tree on v vertices with e0 leaf edges: v - e0;
  * unicyclic, cycle length 2k-1 or 2k with k >= 3: v - e0 - k + 1;
  * unicyclic with a 4-cycle: 1 for the 4-cycle itself, v - e0 - 2 when
    the cycle has two adjacent vertices of degree 2, else v - e0 - 1;
  * disjoint unions: sum of the component values minus (number of
    components) plus 1.

Every graph obeys the bound dstab <= v - e0 - sum(k_i) + 1 where 2k_i is
the largest even cycle length of a bipartite component (k_i = 1 for trees)
and 2k_i - 1 the largest odd cycle length of a nonbipartite one.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .depth import depth_power, takayama_complex
from .errors import (
    InternalError,
    NotConnectedBipartiteError,
    NotTreeError,
    NotUnicyclicError,
    TooLargeError,
    WitnessCheckFailedError,
)
from .graphs import (
    Graph,
    bipartition,
    cycle_profile,
    decompose,
    induced_subgraph,
    is_tree,
    is_unicyclic,
    leaf_edges,
    mu_vector,
)
from .monomials import edge_ideal, power
from .simplicial import QQ, from_facets


def depth_limit(g: Graph) -> int:
    """The eventual constant depth: the number of bipartite components."""
    return decompose(g).s


def _component_k(comp_graph: Graph, bipartite: bool) -> int:
    prof = cycle_profile(comp_graph)
    if bipartite:
        if prof.max_even_len is None:
            return 1  # tree
        return prof.max_even_len // 2
    return (prof.max_odd_len + 1) // 2


def mt_bound(g: Graph) -> int:
    """Global upper bound v - e0 - sum(k_i) + 1 for dstab."""
    dec = decompose(g)
    k_sum = 0
    for comp, bipart in zip(dec.components, dec.bipartitions):
        sub, _ = induced_subgraph(g, comp)
        k_sum += _component_k(sub, bipart is not None)
    return g.r - leaf_edges(g) - k_sum + 1


def dstab_tree(g: Graph) -> int:
    if not is_tree(g):
        raise NotTreeError("graph is not a connected acyclic graph")
    return g.r - leaf_edges(g)


def _four_cycle_adjacent_deg2(g: Graph, cycle: tuple[int, ...]) -> bool:
    cyc = list(cycle)
    m = len(cyc)
    for i in range(m):
        u, v = cyc[i], cyc[(i + 1) % m]
        if g.degree(u) == 2 and g.degree(v) == 2:
            return True
    return False


@dataclass(frozen=True)
class UnicyclicDstab:
    value: int
    exact: bool
    note: str


def dstab_unicyclic(g: Graph) -> UnicyclicDstab:
    """dstab for a connected unicyclic graph.

    The 4-cycle branches rest on a case analysis rather than a closed
    formula with a standalone proof, so they are flagged for
    cross-validation against the oracle.
    """
    if not is_unicyclic(g):
        raise NotUnicyclicError("graph is not connected with exactly one cycle")
    prof = cycle_profile(g)
    cycle = prof.unique_cycle
    length = len(cycle)
    v, e0 = g.r, leaf_edges(g)
    if length % 2 == 1:
        k = (length + 1) // 2
        return UnicyclicDstab(v - e0 - k + 1, True, "odd-cycle")
    k = length // 2
    if k >= 3:
        return UnicyclicDstab(v - e0 - k + 1, True, "even-cycle")
    # 4-cycle cases
    if g.r == 4:
        return UnicyclicDstab(1, True, "four-cycle-pure")
    if _four_cycle_adjacent_deg2(g, cycle):
        return UnicyclicDstab(v - e0 - 2, True, "four-cycle-adjacent-deg2")
    return UnicyclicDstab(v - e0 - 1, True, "four-cycle-remark")


@dataclass(frozen=True)
class ComponentReport:
    vertices: tuple[int, ...]
    kind: str  # tree | unicyclic | general
    bipartite: bool
    k: int
    value: int
    exact: bool
    note: str

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "kind": self.kind,
            "bipartite": self.bipartite,
            "k": self.k,
            "value": self.value,
            "exact": self.exact,
            "note": self.note,
        }


@dataclass(frozen=True)
class DstabReport:
    value: int
    exact: bool
    mt_bound: int
    limit_depth: int
    components: tuple[ComponentReport, ...]
    warnings: tuple[str, ...] = dc_field(default=())

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "exact": self.exact,
            "mt_bound": self.mt_bound,
            "limit_depth": self.limit_depth,
            "components": [c.to_json() for c in self.components],
            "warnings": list(self.warnings),
        }


def dstab_formula(
    g: Graph,
    verify_remark_cases: bool = True,
    max_box: int = 5_000_000,
) -> DstabReport:
    """Closed-form dstab; exact for graphs whose components are all trees
    or unicyclic, otherwise an upper bound (exact=False).

    The 4-cycle remark branches are cross-validated against the depth
    oracle when the component is small enough; a mismatch downgrades the
    report to exact=False instead of failing.
    """
    dec = decompose(g)
    reports = []
    warnings: list[str] = []
    for comp, bipart in zip(dec.components, dec.bipartitions):
        sub, labels = induced_subgraph(g, comp)
        prof = cycle_profile(sub)
        k = _component_k(sub, bipart is not None)
        if prof.kind == "tree":
            reports.append(
                ComponentReport(comp, "tree", True, 1, dstab_tree(sub), True, "tree")
            )
        elif prof.kind == "unicyclic":
            res = dstab_unicyclic(sub)
            exact = res.exact
            if (
                verify_remark_cases
                and res.note.startswith("four-cycle")
                and res.note != "four-cycle-pure"
            ):
                try:
                    oracle = dstab_oracle(sub, max_box=max_box)
                    if oracle != res.value:
                        exact = False
                        warnings.append(
                            f"component {comp}: four-cycle case value "
                            f"{res.value} disagrees with oracle {oracle}"
                        )
                except TooLargeError:
                    pass
            reports.append(
                ComponentReport(
                    comp, "unicyclic", bipart is not None, k, res.value, exact, res.note
                )
            )
        else:
            v, e0 = sub.r, leaf_edges(sub)
            reports.append(
                ComponentReport(
                    comp,
                    "general",
                    bipart is not None,
                    k,
                    v - e0 - k + 1,
                    False,
                    "component-bound",
                )
            )
    value = sum(rep.value for rep in reports) - len(reports) + 1
    exact = all(rep.exact for rep in reports)
    return DstabReport(
        value=value,
        exact=exact,
        mt_bound=mt_bound(g),
        limit_depth=dec.s,
        components=tuple(reports),
        warnings=tuple(warnings),
    )


def dstab_oracle(
    g: Graph,
    field=QQ,
    use_fast_path: bool = True,
    max_box: int = 5_000_000,
) -> int:
    """First n with depth R/I(g)^n equal to the limit depth, by direct
    computation.  Raises InternalError past the global bound."""
    s = depth_limit(g)
    bound = mt_bound(g)
    for n in range(1, bound + 1):
        cert = depth_power(g, n, field=field, use_fast_path=use_fast_path, max_box=max_box)
        if cert.depth == s:
            return n
    raise InternalError(
        f"depth did not reach the limit {s} within the bound {bound}"
    )


@dataclass(frozen=True)
class WitnessAlpha:
    """A multidegree alpha and power n with D_alpha(I^n) = <X, Y>."""

    alpha: tuple[int, ...]
    n: int
    x_side: tuple[int, ...]
    y_side: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "n": self.n,
            "X": list(self.x_side),
            "Y": list(self.y_side),
        }


def _check_two_facet_complex(g: Graph, alpha: tuple[int, ...], n: int) -> WitnessAlpha:
    x_side, y_side = bipartition(g)
    got = takayama_complex(power(edge_ideal(g), n), alpha)
    want = from_facets(range(1, g.r + 1), [x_side, y_side])
    if got.facets != want.facets:
        raise WitnessCheckFailedError(
            f"expected facets {want.facets}, got {got.facets} (alpha={alpha}, n={n})"
        )
    wx = sum(alpha[v - 1] for v in range(1, g.r + 1) if v not in set(x_side))
    wy = sum(alpha[v - 1] for v in range(1, g.r + 1) if v not in set(y_side))
    if wx != n - 1 or wy != n - 1:
        raise WitnessCheckFailedError(
            f"complement weights ({wx}, {wy}) differ from n-1={n - 1}"
        )
    return WitnessAlpha(alpha=alpha, n=n, x_side=x_side, y_side=y_side)


def mu_witness(g: Graph) -> WitnessAlpha:
    """For connected bipartite g: alpha = mu(g) (non-leaf edge counts) and
    n = e - e0 + 1 disconnect the degree-alpha complex into <X, Y>."""
    dec = decompose(g)
    if dec.p != 1 or dec.t != 0:
        raise NotConnectedBipartiteError("mu witness needs a connected bipartite graph")
    alpha = mu_vector(g)
    n = g.num_edges - leaf_edges(g) + 1
    return _check_two_facet_complex(g, alpha, n)


def _prop_alpha_unicyclic(g: Graph, cycle: tuple[int, ...]) -> tuple[int, ...]:
    """Witness multidegree for a connected bipartite unicyclic graph, built
    by peeling maximum-distance leaves down to the cycle.

    Removing a leaf keeps the witness when its support vertex keeps other
    leaves or sits on the cycle; when the support vertex itself turns into
    a leaf, its weight and its remaining neighbor's weight go up by one.
    """
    adj: dict[int, set[int]] = {v: set(g.neighbors(v)) for v in g.vertices}
    cyc = set(cycle)

    def dist_to_cycle(v: int) -> int:
        if v in cyc:
            return 0
        seen = {v: 0}
        queue = [v]
        while queue:
            a = queue.pop(0)
            for b in adj[a]:
                if b not in seen:
                    seen[b] = seen[a] + 1
                    if b in cyc:
                        return seen[b]
                    queue.append(b)
        raise InternalError("unicyclic graph must reach its cycle")

    def rec() -> dict[int, int]:
        if len(adj) == len(cyc):
            return {v: 1 for v in adj}
        leaves = [v for v, nb in adj.items() if len(nb) == 1]
        dist = {v: dist_to_cycle(v) for v in leaves}
        dmax = max(dist.values())
        v = min(w for w in leaves if dist[w] == dmax)
        t = next(iter(adj[v]))
        t_leaves = {w for w in adj[t] if len(adj[w]) == 1}
        promote = dmax >= 2 and t_leaves == {v}
        adj[t].discard(v)
        del adj[v]
        if promote:
            w = next(iter(adj[t]))
            a = rec()
            a[t] += 1
            a[w] += 1
        else:
            a = rec()
        a[v] = 0
        return a

    weights = rec()
    return tuple(weights[v] for v in g.vertices)


def unicyclic_bipartite_witness(g: Graph) -> WitnessAlpha:
    """Witness alpha and n = v - e0 - k + 1 for a connected bipartite
    unicyclic graph with cycle length 2k; verified against the definition
    of the degree-alpha complex."""
    if not is_unicyclic(g):
        raise NotUnicyclicError("graph is not connected with exactly one cycle")
    dec = decompose(g)
    if dec.t:
        raise NotConnectedBipartiteError("witness needs a bipartite graph")
    prof = cycle_profile(g)
    cycle = prof.unique_cycle
    k = len(cycle) // 2
    alpha = _prop_alpha_unicyclic(g, cycle)
    n = g.r - leaf_edges(g) - k + 1
    return _check_two_facet_complex(g, alpha, n)
