"""Exact depth of R/I for monomial ideals via degree-wise local cohomology.

For a multidegree a in Z^r let G_a = {i : a_i < 0}.  The degree-a piece of
the i-th local cohomology of R/I is the reduced homology, in degree
i - |G_a| - 1, of the complex

    D_a(I) = { F subset of [r] \\ G_a : x^a not in the localization of I
               at {x_j = 1 : j in F union G_a} },

so depth R/I is the least i for which some a contributes.  Two facts bound
the scan box: D_a depends on a negative coordinate only through its sign,
so every negative entry can be collapsed to -1; and when a_j is at least
the largest j-exponent rho_j over the generators, every face can absorb j,
making D_a a cone (hence acyclic).  The scan therefore ranges over
a_j in {-1, 0, ..., rho_j - 1}.

For a bipartite graph g the ordinary and symbolic powers of the edge ideal
agree, and membership in a localized symbolic power only involves the
minimal vertex covers.  That yields the facet description

    D_a(I(g)^n) = < F \\ G_a : F a facet of the independence complex,
                    F contains G_a, sum of a_i over i not in F <= n-1 >,

which the engine uses as a fast path (it is property-tested against the
definition above).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import InternalError, NotBipartiteError, TooLargeError
from .graphs import Graph, decompose, maximal_independent_sets
from .monomials import (
    MonomialIdeal,
    contains,
    edge_ideal,
    gens_array,
    power,
)
from .simplicial import (
    QQ,
    FieldChoice,
    SimplicialComplex,
    from_facets,
    min_nonvanishing_reduced_homology,
    void_complex,
)

MAX_R_DEFAULT = 10
MAX_BOX_DEFAULT = 5_000_000


@dataclass(frozen=True)
class DegreeVector:
    entries: tuple[int, ...]

    @property
    def negative_support(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, e in enumerate(self.entries) if e < 0)


@dataclass(frozen=True)
class DepthCertificate:
    """Result of a depth scan with its witnessing multidegree."""

    depth: int
    witness_alpha: tuple[int, ...]
    homology_dim: int
    scan_box: tuple[int, ...]  # per-coordinate box sizes

    @property
    def witness_i(self) -> int:
        return self.depth

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "witness_alpha": list(self.witness_alpha),
            "homology_dim": self.homology_dim,
            "scan_box": list(self.scan_box),
        }


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int) -> list[int]:
    out = []
    while x:
        b = x & -x
        out.append(b.bit_length() - 1)
        x &= x - 1
    return out


def _submasks(mask: int) -> list[int]:
    out = []
    s = mask
    while True:
        out.append(s)
        if s == 0:
            return out
        s = (s - 1) & mask


def takayama_complex(ideal: MonomialIdeal, alpha: Sequence[int], max_r: int = MAX_R_DEFAULT) -> SimplicialComplex:
    """The complex D_a(I) by direct enumeration of the face candidates."""
    a = tuple(int(e) for e in alpha)
    if len(a) != ideal.r:
        raise ValueError("alpha length must equal the ambient variable count")
    if ideal.r > max_r:
        raise TooLargeError(f"takayama_complex capped at r={max_r}")
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("ideal must be proper and nonzero")
    r = ideal.r
    neg = [i for i in range(r) if a[i] < 0]
    universe0 = [i for i in range(r) if a[i] >= 0]
    # F is a face iff no generator g satisfies g_i <= a_i for all i outside
    # F union G_a; encode each generator by its violation set.
    bad_masks = set()
    for g in ideal.gens:
        mask = 0
        for i in universe0:
            if g[i] > a[i]:
                mask |= 1 << i
        bad_masks.add(mask)
    uni_labels = [i + 1 for i in universe0]
    if 0 in bad_masks:
        return void_complex(uni_labels)
    umask = 0
    for i in universe0:
        umask |= 1 << i
    ok = set()
    for s in _submasks(umask):
        if not any((b & ~s) == 0 for b in bad_masks):
            ok.add(s)
    facets = []
    for s in ok:
        if all((s | (1 << v)) not in ok for v in universe0 if not s >> v & 1):
            facets.append(tuple(i + 1 for i in _bits(s)))
    return from_facets(uni_labels, facets)


def bipartite_power_complex(g: Graph, alpha: Sequence[int], n: int) -> SimplicialComplex:
    """D_a(I(g)^n) for bipartite g and nonnegative a: the facets are the
    facets F of the independence complex with sum of a over the complement
    of F at most n - 1."""
    a = tuple(int(e) for e in alpha)
    if len(a) != g.r:
        raise ValueError("alpha length must equal the vertex count")
    if any(e < 0 for e in a):
        raise ValueError("alpha must be componentwise nonnegative here")
    if n < 1:
        raise ValueError("power must be >= 1")
    dec = decompose(g)
    if dec.t:
        raise NotBipartiteError("graph has an odd cycle")
    total = sum(a)
    facets = [
        f
        for f in maximal_independent_sets(g)
        if total - sum(a[v - 1] for v in f) <= n - 1
    ]
    if not facets:
        return void_complex(range(1, g.r + 1))
    return from_facets(range(1, g.r + 1), facets)


# Cache from a canonicalized facet-mask tuple to (min homology index, dim).
_HOMOLOGY_CACHE: dict[tuple, tuple[Optional[int], int]] = {}


def _min_homology_of_masks(facet_masks: tuple[int, ...], field: FieldChoice) -> tuple[Optional[int], int]:
    used = 0
    for m in facet_masks:
        used |= m
    positions = _bits(used)
    remap = {b: i for i, b in enumerate(positions)}
    canon = tuple(
        sorted(sum(1 << remap[b] for b in _bits(m)) for m in facet_masks)
    )
    key = (canon, field.p)
    hit = _HOMOLOGY_CACHE.get(key)
    if hit is not None:
        return hit
    facets = [tuple(i + 1 for i in _bits(m)) for m in canon]
    cx = from_facets(range(1, len(positions) + 1), facets) if facets else void_complex(())
    result = min_nonvanishing_reduced_homology(cx, field=field)
    _HOMOLOGY_CACHE[key] = result
    return result


def _antichain_min(masks: list[int]) -> list[int]:
    uniq = sorted(set(masks), key=_popcount)
    out: list[int] = []
    for m in uniq:
        if not any((b & ~m) == 0 for b in out):
            out.append(m)
    return out


def _facets_avoiding(umask: int, bad: list[int]) -> tuple[int, ...]:
    """Maximal submasks of umask containing no member of bad."""
    ok = set()
    for s in _submasks(umask):
        if not any((b & ~s) == 0 for b in bad):
            ok.add(s)
    facets = []
    for s in ok:
        if all((s | bit) not in ok for bit in (1 << v for v in _bits(umask & ~s))):
            facets.append(s)
    return tuple(sorted(facets))


def _alpha_chunks(sizes: Sequence[int], chunk: int):
    """Yield (offset, array) chunks of the alpha box in lexicographic order;
    coordinate j takes values -1 .. sizes[j] - 2."""
    sizes = list(sizes)
    n_total = 1
    for s in sizes:
        n_total *= s
    weights = []
    w = 1
    for s in reversed(sizes):
        weights.append(w)
        w *= s
    weights.reverse()
    weights_arr = np.array(weights, dtype=np.int64)
    radix = np.array(sizes, dtype=np.int64)
    for off in range(0, n_total, chunk):
        idx = np.arange(off, min(off + chunk, n_total), dtype=np.int64)
        digits = (idx[:, None] // weights_arr[None, :]) % radix[None, :]
        yield off, (digits - 1).astype(np.int16)


def _alpha_at(sizes: Sequence[int], index: int) -> tuple[int, ...]:
    out = []
    for s in reversed(list(sizes)):
        out.append(index % s - 1)
        index //= s
    return tuple(reversed(out))


def _pack_words(masks: np.ndarray, nbits: int) -> np.ndarray:
    """OR together, per row, the bits 1 << masks[row, j] of an (c, m) int
    array into ceil(nbits/64) uint64 words."""
    nwords = (nbits + 63) // 64
    c = masks.shape[0]
    sig = np.zeros((c, nwords), dtype=np.uint64)
    word = masks >> 6
    shift = (masks & 63).astype(np.uint64)
    one = np.uint64(1)
    for k in range(nwords):
        vals = np.where(word == k, one << shift, np.uint64(0))
        sig[:, k] = np.bitwise_or.reduce(vals, axis=1)
    return sig


class _BestTracker:
    def __init__(self) -> None:
        self.value: Optional[int] = None
        self.index: Optional[int] = None
        self.hdim = 0

    def offer(self, value: int, index: int, hdim: int) -> None:
        if (
            self.value is None
            or value < self.value
            or (value == self.value and index < self.index)
        ):
            self.value = value
            self.index = index
            self.hdim = hdim


def _scan_generators(
    gens: np.ndarray, r: int, field: FieldChoice, max_box: int
) -> tuple[int, int, int, tuple[int, ...]]:
    """Depth scan over the alpha box using the generator matrix.  Returns
    (depth, witness index, homology dim, box sizes)."""
    rhos = gens.max(axis=0).astype(np.int64)
    sizes = [int(e) + 1 for e in rhos]
    n_cells = 1
    for s in sizes:
        n_cells *= s
    if n_cells > max_box:
        raise TooLargeError(f"scan box has {n_cells} cells, cap is {max_box}")
    m = gens.shape[0]
    pow2 = (1 << np.arange(r, dtype=np.int64)).astype(np.int64)
    chunk = max(1024, 30_000_000 // max(1, m * r))
    best = _BestTracker()
    class_cache: dict[bytes, tuple[Optional[int], int, int]] = {}
    gens16 = gens.astype(np.int16)
    for off, a_chunk in _alpha_chunks(sizes, chunk):
        neg = a_chunk < 0
        exceed = gens16[None, :, :] > a_chunk[:, None, :]
        exceed &= ~neg[:, None, :]
        masks = exceed.astype(np.int64) @ pow2  # (c, m)
        negpack = neg.astype(np.int64) @ pow2
        sig = _pack_words(masks, 1 << r)
        keys = np.column_stack([negpack.astype(np.uint64), sig])
        uniq, first = np.unique(keys, axis=0, return_index=True)
        for row, idx in zip(uniq, first):
            kb = row.tobytes()
            entry = class_cache.get(kb)
            if entry is None:
                negmask = int(row[0])
                mask_set = []
                for k in range(1, len(row)):
                    word = int(row[k])
                    base = (k - 1) << 6
                    for b in _bits(word):
                        mask_set.append(base + b)
                if 0 in mask_set:
                    entry = (None, 0, 0)  # void complex: no contribution
                else:
                    umask = ((1 << r) - 1) & ~negmask
                    bad = _antichain_min(mask_set)
                    facets = _facets_avoiding(umask, bad)
                    mind, hdim = _min_homology_of_masks(facets, field)
                    if mind is None:
                        entry = (None, 0, 0)
                    else:
                        entry = (_popcount(negmask) + 1 + mind, hdim, 0)
                class_cache[kb] = entry
            value, hdim, _ = entry
            if value is not None:
                best.offer(value, off + int(idx), hdim)
    if best.value is None:
        raise InternalError("depth scan found no nonvanishing local cohomology")
    return best.value, best.index, best.hdim, tuple(sizes)


def _scan_bipartite_facets(
    facet_masks: list[int], r: int, n: int, field: FieldChoice, max_box: int
) -> tuple[int, int, int, tuple[int, ...]]:
    """Depth scan for I(g)^n, g bipartite, driven by the facets of the
    independence complex instead of the generators of the power."""
    sizes = [n + 1] * r
    n_cells = (n + 1) ** r
    if n_cells > max_box:
        raise TooLargeError(f"scan box has {n_cells} cells, cap is {max_box}")
    nf = len(facet_masks)
    comp = np.zeros((nf, r), dtype=np.int64)  # complement indicators
    for j, fm in enumerate(facet_masks):
        for i in range(r):
            if not fm >> i & 1:
                comp[j, i] = 1
    pow2 = (1 << np.arange(r, dtype=np.int64)).astype(np.int64)
    chunk = max(4096, 8_000_000 // max(1, nf))
    best = _BestTracker()
    class_cache: dict[bytes, tuple[Optional[int], int]] = {}
    fmask_arr = facet_masks
    for off, a_chunk in _alpha_chunks(sizes, chunk):
        apos = np.maximum(a_chunk, 0).astype(np.int64)
        neg = (a_chunk < 0).astype(np.int64)
        weights = apos @ comp.T  # (c, nf): alpha-weight outside each facet
        outside = neg @ comp.T  # negative coordinates outside each facet
        sel = (weights <= n - 1) & (outside == 0)
        negpack = neg @ pow2
        nwords = (nf + 63) // 64
        selwords = np.zeros((sel.shape[0], nwords), dtype=np.uint64)
        for k in range(nwords):
            hi = min(64, nf - 64 * k)
            w = (1 << np.arange(hi, dtype=np.int64)).astype(np.uint64)
            selwords[:, k] = (sel[:, 64 * k : 64 * k + hi].astype(np.uint64) * w).sum(axis=1)
        keys = np.column_stack([negpack.astype(np.uint64), selwords])
        uniq, first = np.unique(keys, axis=0, return_index=True)
        for row, idx in zip(uniq, first):
            kb = row.tobytes()
            entry = class_cache.get(kb)
            if entry is None:
                negmask = int(row[0])
                chosen = []
                for k in range(1, len(row)):
                    word = int(row[k])
                    base = (k - 1) << 6
                    for b in _bits(word):
                        chosen.append(fmask_arr[base + b] & ~negmask)
                if not chosen:
                    entry = (None, 0)
                else:
                    mind, hdim = _min_homology_of_masks(tuple(sorted(set(chosen))), field)
                    if mind is None:
                        entry = (None, 0)
                    else:
                        entry = (_popcount(negmask) + 1 + mind, hdim)
                class_cache[kb] = entry
            value, hdim = entry
            if value is not None:
                best.offer(value, off + int(idx), hdim)
    if best.value is None:
        raise InternalError("depth scan found no nonvanishing local cohomology")
    return best.value, best.index, best.hdim, tuple(sizes)


def depth_bruteforce(
    ideal: MonomialIdeal,
    field: FieldChoice = QQ,
    max_r: int = MAX_R_DEFAULT,
    max_box: int = MAX_BOX_DEFAULT,
) -> DepthCertificate:
    """Exact depth of R/I by scanning the full multidegree box."""
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("ideal must be proper and nonzero")
    if ideal.r > max_r:
        raise TooLargeError(f"depth scan capped at r={max_r}, got {ideal.r}")
    gens = gens_array(ideal)
    depth, index, hdim, sizes = _scan_generators(np.asarray(gens), ideal.r, field, max_box)
    return DepthCertificate(
        depth=depth,
        witness_alpha=_alpha_at(sizes, index),
        homology_dim=hdim,
        scan_box=sizes,
    )


def depth_power(
    g: Graph,
    n: int,
    field: FieldChoice = QQ,
    use_fast_path: bool = True,
    max_r: int = MAX_R_DEFAULT,
    max_box: int = MAX_BOX_DEFAULT,
) -> DepthCertificate:
    """depth R/I(g)^n; routes bipartite graphs through the facet fast path."""
    if n < 1:
        raise ValueError("power must be >= 1")
    if g.r > max_r:
        raise TooLargeError(f"depth scan capped at r={max_r}, got r={g.r}")
    if use_fast_path and decompose(g).t == 0:
        facet_masks = [
            sum(1 << (v - 1) for v in f) for f in maximal_independent_sets(g)
        ]
        depth, index, hdim, sizes = _scan_bipartite_facets(
            facet_masks, g.r, n, field, max_box
        )
        return DepthCertificate(
            depth=depth,
            witness_alpha=_alpha_at(sizes, index),
            homology_dim=hdim,
            scan_box=sizes,
        )
    return depth_bruteforce(power(edge_ideal(g), n), field=field, max_r=max_r, max_box=max_box)


def depth_sequence(
    g: Graph,
    n_max: int,
    field: FieldChoice = QQ,
    use_fast_path: bool = True,
    max_box: int = MAX_BOX_DEFAULT,
) -> list[int]:
    return [
        depth_power(g, n, field=field, use_fast_path=use_fast_path, max_box=max_box).depth
        for n in range(1, n_max + 1)
    ]


def betti_depth_crosscheck(
    ideal: MonomialIdeal,
    field: FieldChoice = QQ,
    max_r: int = MAX_R_DEFAULT,
    max_box: int = MAX_BOX_DEFAULT,
) -> int:
    """depth R/I via graded Betti numbers of I.

    beta_{i,b}(I) is the reduced homology in degree i-1 of the squarefree
    complex K^b = {S : x^(b - 1_S) in I}; the projective dimension of R/I
    is 1 + max{i : beta_i(I) != 0} and depth follows by the
    Auslander-Buchsbaum formula.  Independent of the local cohomology scan.
    """
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("ideal must be proper and nonzero")
    r = ideal.r
    if r > max_r:
        raise TooLargeError(f"betti crosscheck capped at r={max_r}")
    lcm = [max(g[i] for g in ideal.gens) for i in range(r)]
    cells = 1
    for e in lcm:
        cells *= e + 1
    if cells > max_box:
        raise TooLargeError(f"degree box has {cells} cells, cap is {max_box}")
    max_i = -1
    ranges = [range(e + 1) for e in lcm]
    import itertools

    from .simplicial import reduced_homology_dims

    memo: dict[tuple, int] = {}
    for b in itertools.product(*ranges):
        support = [i for i in range(r) if b[i] >= 1]
        face_masks = []
        for smask in _submasks(sum(1 << i for i in support)):
            shifted = tuple(b[i] - (1 if smask >> i & 1 else 0) for i in range(r))
            if contains(ideal, shifted):
                face_masks.append(smask)
        if not face_masks:
            continue
        maximal = [
            s
            for s in face_masks
            if not any(t != s and (s & ~t) == 0 for t in face_masks)
        ]
        key = tuple(sorted(maximal))
        top = memo.get(key)
        if top is None:
            common = key[0]
            for s in key[1:]:
                common &= s
            if common:
                top = -2  # cone: acyclic, contributes nothing
            else:
                cx = from_facets(
                    range(1, r + 1), [tuple(i + 1 for i in _bits(s)) for s in key]
                )
                dims = reduced_homology_dims(cx, field=field)
                top = max((d for d, dim in dims.items() if dim), default=-2)
            memo[key] = top
        if top > -2:
            max_i = max(max_i, top + 1)
    if max_i < 0:
        raise InternalError("nonzero ideal must have a nonzero Betti number")
    return r - 1 - max_i
