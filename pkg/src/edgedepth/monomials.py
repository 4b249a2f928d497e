"""Monomial ideals in K[x_1..x_r] represented by minimal generator sets.

Monomials are exponent tuples of length r.  An ideal is canonical: its
generators are deduplicated, pairwise incomparable under divisibility, and
sorted.  The zero ideal has no generators; the unit ideal is generated by
the exponent vector of all zeros.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import TooLargeError
from .graphs import Graph, minimal_vertex_covers

Monomial = tuple[int, ...]


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_str(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class MonomialIdeal:
    r: int
    gens: tuple[Monomial, ...]

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return bool(self.gens) and all(e == 0 for e in self.gens[0])

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(monomial_str(m) for m in self.gens) + ")"


def minimalize(r: int, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Canonical ideal from an arbitrary generating set."""
    uniq = sorted({tuple(int(e) for e in m) for m in gens})
    for m in uniq:
        if len(m) != r:
            raise ValueError(f"monomial {m} has length {len(m)}, expected {r}")
        if any(e < 0 for e in m):
            raise ValueError(f"negative exponent in {m}")
    if not uniq:
        return MonomialIdeal(r=r, gens=())
    degrees = {monomial_degree(m) for m in uniq}
    if len(degrees) == 1:
        # distinct monomials of equal degree never divide each other
        return MonomialIdeal(r=r, gens=tuple(uniq))
    if len(uniq) > 64:
        arr = np.array(uniq, dtype=np.int64)
        le = (arr[:, None, :] <= arr[None, :, :]).all(axis=2)
        np.fill_diagonal(le, False)
        keep = ~le.any(axis=0)
        minimal = [uniq[i] for i in range(len(uniq)) if keep[i]]
    else:
        minimal = [
            m
            for m in uniq
            if not any(g != m and monomial_divides(g, m) for g in uniq)
        ]
    return MonomialIdeal(r=r, gens=tuple(minimal))


@lru_cache(maxsize=None)
def gens_array(ideal: MonomialIdeal) -> np.ndarray:
    arr = np.array(ideal.gens, dtype=np.int16) if ideal.gens else np.zeros((0, ideal.r), dtype=np.int16)
    arr.setflags(write=False)
    return arr


def edge_ideal(g: Graph) -> MonomialIdeal:
    gens = []
    for u, v in g.edges:
        m = [0] * g.r
        m[u - 1] = 1
        m[v - 1] = 1
        gens.append(tuple(m))
    return minimalize(g.r, gens)


def contains(ideal: MonomialIdeal, m: Sequence[int]) -> bool:
    mt = tuple(m)
    return any(monomial_divides(g, mt) for g in ideal.gens)


def add(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.r != b.r:
        raise ValueError("ambient ring mismatch")
    return minimalize(a.r, a.gens + b.gens)


def multiply(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.r != b.r:
        raise ValueError("ambient ring mismatch")
    if a.is_zero or b.is_zero:
        return MonomialIdeal(r=a.r, gens=())
    if len(a.gens) * len(b.gens) > 4096:
        arr = (gens_array(a).astype(np.int64)[:, None, :] + gens_array(b).astype(np.int64)[None, :, :]).reshape(
            -1, a.r
        )
        arr = np.unique(arr, axis=0)
        return minimalize(a.r, [tuple(row) for row in arr.tolist()])
    prods = {monomial_mul(x, y) for x in a.gens for y in b.gens}
    return minimalize(a.r, prods)


@lru_cache(maxsize=None)
def power(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise ValueError("power must be nonnegative")
    if n == 0:
        return MonomialIdeal(r=ideal.r, gens=(tuple([0] * ideal.r),))
    if n == 1:
        return ideal
    return multiply(power(ideal, n - 1), ideal)


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    if a.r != b.r:
        raise ValueError("ambient ring mismatch")
    if a.is_zero or b.is_zero:
        return MonomialIdeal(r=a.r, gens=())
    lcms = {monomial_lcm(x, y) for x in a.gens for y in b.gens}
    return minimalize(a.r, lcms)


def colon(ideal: MonomialIdeal, m: Sequence[int]) -> MonomialIdeal:
    """(I : x^m)."""
    mt = tuple(int(e) for e in m)
    if ideal.is_zero:
        return ideal
    quotients = {tuple(max(g_i - m_i, 0) for g_i, m_i in zip(g, mt)) for g in ideal.gens}
    return minimalize(ideal.r, quotients)


def localize(ideal: MonomialIdeal, ones: Iterable[int]) -> MonomialIdeal:
    """Set x_i = 1 for the 1-based indices in `ones` and re-minimalize."""
    drop = set(int(i) for i in ones)
    for i in drop:
        if not 1 <= i <= ideal.r:
            raise ValueError(f"index {i} out of range 1..{ideal.r}")
    if ideal.is_zero:
        return ideal
    gens = {
        tuple(0 if (i + 1) in drop else e for i, e in enumerate(g))
        for g in ideal.gens
    }
    return minimalize(ideal.r, gens)


def variable_ideal(r: int, support: Iterable[int]) -> MonomialIdeal:
    """The prime ideal (x_i : i in support)."""
    gens = []
    for i in support:
        m = [0] * r
        m[i - 1] = 1
        gens.append(tuple(m))
    return minimalize(r, gens)


def maximal_ideal(r: int) -> MonomialIdeal:
    return variable_ideal(r, range(1, r + 1))


def symbolic_member(g: Graph, n: int, m: Sequence[int]) -> bool:
    """Membership of x^m in the n-th symbolic power of the edge ideal of g:
    the degree of m on every minimal vertex cover must be at least n."""
    mt = tuple(m)
    if len(mt) != g.r:
        raise ValueError("monomial length must equal the vertex count")
    for cover in minimal_vertex_covers(g):
        if sum(mt[v - 1] for v in cover) < n:
            return False
    return True


def associated_primes_bruteforce(
    ideal: MonomialIdeal, max_cells: int = 2_000_000
) -> tuple[tuple[int, ...], ...]:
    """Associated primes of R/I by exhaustive colon scan.

    P is associated iff P = (I : m) for a monomial m; it suffices to scan m
    below the componentwise lcm of the generators, and (I : m) is such a
    prime iff m is not in I and every generator has an exponent above m in
    S = {i : m*x_i in I}.
    """
    if ideal.is_zero:
        return ()
    if ideal.is_unit:
        raise ValueError("unit ideal has no associated primes")
    r = ideal.r
    arr = gens_array(ideal).astype(np.int64)
    lcm = arr.max(axis=0)
    cells = 1
    for e in lcm:
        cells *= int(e) + 1
    if cells > max_cells:
        raise TooLargeError(f"scan box has {cells} cells, cap is {max_cells}")
    grids = np.meshgrid(*[np.arange(int(e) + 1) for e in lcm], indexing="ij")
    box = np.stack([gr.ravel() for gr in grids], axis=1)  # (N, r)
    primes: set[tuple[int, ...]] = set()
    chunk = max(1, 4_000_000 // max(1, len(arr) * r))
    for off in range(0, len(box), chunk):
        m_chunk = box[off : off + chunk]
        ge = m_chunk[:, None, :] >= arr[None, :, :]  # (c, g, r)
        member = ge.all(axis=2).any(axis=1)
        cand = ~member
        if not cand.any():
            continue
        mc = m_chunk[cand]
        gt = arr[None, :, :] > mc[:, None, :]  # (c', g, r)
        # S[i] = 1 iff m * x_i in I: bumping coordinate i rescues exactly the
        # generators that fail only at i by one.
        s_mask = np.zeros((len(mc), r), dtype=bool)
        for i in range(r):
            bumped = mc.copy()
            bumped[:, i] += 1
            s_mask[:, i] = (bumped[:, None, :] >= arr[None, :, :]).all(axis=2).any(axis=1)
        ok = (gt & s_mask[:, None, :]).any(axis=2).all(axis=1)
        for row in s_mask[ok]:
            primes.add(tuple(int(i + 1) for i in range(r) if row[i]))
    return tuple(sorted(primes))
