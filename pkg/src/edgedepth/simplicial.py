"""Abstract simplicial complexes and exact reduced simplicial homology.

The void complex (no faces at all) and the irrelevant complex {emptyset}
are distinct: the former has all reduced homology zero, the latter has
one-dimensional homology in degree -1.  Ranks are computed exactly, over
the rationals (fraction-free integer elimination) or over a prime field.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import TooLargeError

MAX_FACES_DEFAULT = 1 << 20


@dataclass(frozen=True)
class FieldChoice:
    """The coefficient field: rationals when p is None, else GF(p)."""

    p: Optional[int] = None

    @staticmethod
    def rationals() -> "FieldChoice":
        return FieldChoice(None)

    @staticmethod
    def gf(p: int) -> "FieldChoice":
        if p < 2:
            raise ValueError("prime must be >= 2")
        for d in range(2, int(p**0.5) + 1):
            if p % d == 0:
                raise ValueError(f"{p} is not prime")
        return FieldChoice(p)

    def __str__(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"


QQ = FieldChoice.rationals()


@dataclass(frozen=True)
class SimplicialComplex:
    universe: tuple[int, ...]
    facets: tuple[tuple[int, ...], ...]

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == ((),)

    @property
    def dim(self) -> int:
        """Dimension; -1 for the irrelevant complex.  Undefined (raises) for
        the void complex."""
        if self.is_void:
            raise ValueError("void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    def __contains__(self, face: Iterable[int]) -> bool:
        fs = frozenset(face)
        return any(fs <= set(f) for f in self.facets)


def from_facets(universe: Iterable[int], facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    uni = tuple(sorted(set(int(v) for v in universe)))
    uset = set(uni)
    cand = {tuple(sorted(set(int(v) for v in f))) for f in facets}
    for f in cand:
        if not set(f) <= uset:
            raise ValueError(f"facet {f} not contained in the universe")
    maximal = [
        f for f in cand if not any(g != f and set(f) <= set(g) for g in cand)
    ]
    maximal.sort()
    return SimplicialComplex(universe=uni, facets=tuple(maximal))


def void_complex(universe: Iterable[int] = ()) -> SimplicialComplex:
    return SimplicialComplex(universe=tuple(sorted(set(universe))), facets=())


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join; the universes must be disjoint.  Joining with the
    void complex gives the void complex; {emptyset} is the identity."""
    if set(a.universe) & set(b.universe):
        raise ValueError("join requires disjoint universes")
    uni = a.universe + b.universe
    if a.is_void or b.is_void:
        return void_complex(uni)
    facets = [tuple(sorted(fa + fb)) for fa in a.facets for fb in b.facets]
    return from_facets(uni, facets)


def is_cone(cx: SimplicialComplex) -> Optional[int]:
    """A vertex contained in every facet, or None."""
    if cx.is_void or cx.is_irrelevant:
        return None
    common = set(cx.facets[0])
    for f in cx.facets[1:]:
        common &= set(f)
        if not common:
            return None
    return min(common)


def faces_by_dim(cx: SimplicialComplex, max_faces: int = MAX_FACES_DEFAULT) -> dict[int, list[tuple[int, ...]]]:
    """All faces grouped by dimension, each list sorted.  Includes the empty
    face at dimension -1 for any nonvoid complex."""
    if cx.is_void:
        return {}
    faces: set[tuple[int, ...]] = set()
    for f in cx.facets:
        for k in range(len(f) + 1):
            for sub in combinations(f, k):
                faces.add(sub)
                if len(faces) > max_faces:
                    raise TooLargeError(f"complex has more than {max_faces} faces")
    out: dict[int, list[tuple[int, ...]]] = {}
    for f in faces:
        out.setdefault(len(f) - 1, []).append(f)
    for lst in out.values():
        lst.sort()
    return out


def _rank_rationals(rows: list[list[int]]) -> int:
    """Rank of an integer matrix over Q by fraction-free (Bareiss-style)
    elimination."""
    mat = [row[:] for row in rows if any(row)]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for i in range(rank, len(mat)):
            if mat[i][col]:
                piv = i
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pivot = mat[rank][col]
        for i in range(rank + 1, len(mat)):
            fi = mat[i][col]
            row_i = mat[i]
            row_p = mat[rank]
            for j in range(col, ncols):
                row_i[j] = (pivot * row_i[j] - fi * row_p[j]) // prev
        prev = pivot
        rank += 1
        if rank == len(mat):
            break
    return rank


def _rank_gf(rows: list[list[int]], p: int) -> int:
    mat = [[e % p for e in row] for row in rows]
    mat = [row for row in mat if any(row)]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(mat)):
            if mat[i][col]:
                piv = i
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        mat[rank] = [(e * inv) % p for e in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                fi = mat[i][col]
                mat[i] = [(a - fi * b) % p for a, b in zip(mat[i], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def _matrix_rank(rows: list[list[int]], field: FieldChoice) -> int:
    if not rows or not rows[0]:
        return 0
    if field.p is None:
        return _rank_rationals(rows)
    return _rank_gf(rows, field.p)


def _boundary_matrix(
    lower: list[tuple[int, ...]], upper: list[tuple[int, ...]]
) -> list[list[int]]:
    """Matrix of the boundary map C_d -> C_{d-1}; rows indexed by lower
    faces, columns by upper faces, entries the alternating signs."""
    index = {f: i for i, f in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for j, f in enumerate(upper):
        for k in range(len(f)):
            sub = f[:k] + f[k + 1 :]
            rows[index[sub]][j] = (-1) ** k
    return rows


def reduced_homology_dims(
    cx: SimplicialComplex,
    field: FieldChoice = QQ,
    max_faces: int = MAX_FACES_DEFAULT,
) -> dict[int, int]:
    """Dimensions of the reduced homology groups, indexed -1..dim.

    The void complex yields an empty dict (all groups zero).  The empty
    face is a genuine chain group generator, so {emptyset} reports
    {-1: 1}.
    """
    if cx.is_void:
        return {}
    faces = faces_by_dim(cx, max_faces=max_faces)
    top = max(faces)
    ranks: dict[int, int] = {}
    for d in range(0, top + 1):
        ranks[d] = _matrix_rank(_boundary_matrix(faces[d - 1], faces[d]), field)
    dims: dict[int, int] = {}
    for d in range(-1, top + 1):
        dims[d] = len(faces[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
    return dims


def min_nonvanishing_reduced_homology(
    cx: SimplicialComplex, field: FieldChoice = QQ
) -> tuple[Optional[int], int]:
    """(least d with nonzero reduced homology, its dimension); (None, 0)
    when the complex is void or acyclic."""
    dims = reduced_homology_dims(cx, field=field)
    for d in sorted(dims):
        if dims[d]:
            return d, dims[d]
    return None, 0


def euler_characteristic_reduced(cx: SimplicialComplex) -> int:
    """Alternating sum over all faces including the empty one; 0 for void."""
    if cx.is_void:
        return 0
    faces = faces_by_dim(cx)
    return sum((-1) ** d * len(fs) for d, fs in faces.items())
