"""Finite simplicial complexes, chains, and boundary matrices.

Conventions that keep everything reproducible:
  * the canonical orientation of a simplex is the ascending vertex order;
    any other input ordering only contributes the sign of the permutation;
  * for each dimension q, the elementary chain basis is the list of
    canonical q-simplices sorted lexicographically on their vertex tuple.
"""
from __future__ import annotations

from dataclasses import dataclass, field


class InputError(ValueError):
    """Invalid user-supplied data (bad simplex, bad file, bad chain)."""


class NotPseudomanifold(ValueError):
    """Some (q-1)-simplex is a face of three or more q-simplices."""


def permutation_sign(vertices) -> int:
    """Sign of the permutation taking `vertices` to ascending order."""
    v = list(vertices)
    n = len(v)
    inversions = 0
    for i in range(n):
        for j in range(i + 1, n):
            if v[i] > v[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class Simplex:
    """An oriented simplex; stored canonically with the orientation sign."""

    vertices: tuple  # ascending
    sign: int = 1    # orientation relative to the canonical (ascending) order

    @classmethod
    def from_vertices(cls, vertices) -> "Simplex":
        verts = tuple(int(v) for v in vertices)
        if any(v < 0 for v in verts):
            raise InputError(f"negative vertex id in {verts}")
        if len(set(verts)) != len(verts):
            raise InputError(f"duplicate vertices in simplex {verts}")
        return cls(tuple(sorted(verts)), permutation_sign(verts))

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def faces(self):
        """The (dim-1)-faces with the signs from the boundary formula."""
        out = []
        for i in range(len(self.vertices)):
            face = self.vertices[:i] + self.vertices[i + 1:]
            out.append((face, (-1) ** i))
        return out


class SimplicialComplex:
    """Face-closed complex with deterministic per-dimension bases."""

    def __init__(self, simplices_by_dim):
        # simplices_by_dim: list over q of sorted lists of vertex tuples
        self.simplices_by_dim = [list(level) for level in simplices_by_dim]
        self.index = [
            {s: i for i, s in enumerate(level)} for level in self.simplices_by_dim
        ]

    @property
    def dim(self) -> int:
        return len(self.simplices_by_dim) - 1

    def simplices(self, q):
        if q < 0 or q > self.dim:
            return []
        return self.simplices_by_dim[q]

    def count(self, q) -> int:
        return len(self.simplices(q))

    def index_of(self, q, vertices) -> int:
        try:
            return self.index[q][tuple(vertices)]
        except (KeyError, IndexError):
            raise InputError(f"simplex {tuple(vertices)} not in complex") from None

    def __contains__(self, vertices):
        verts = tuple(sorted(vertices))
        q = len(verts) - 1
        return 0 <= q <= self.dim and verts in self.index[q]

    def __repr__(self):
        counts = ", ".join(str(len(s)) for s in self.simplices_by_dim)
        return f"SimplicialComplex(dim={self.dim}, counts=[{counts}])"


def build_closure(maximal) -> SimplicialComplex:
    """Close a set of simplices under taking faces.

    `maximal` is an iterable of vertex sequences. The empty input yields
    the empty complex of dimension -1.
    """
    levels: dict[int, set] = {}
    stack = []
    for verts in maximal:
        s = Simplex.from_vertices(verts)
        stack.append(s.vertices)
    seen = set()
    while stack:
        verts = stack.pop()
        if verts in seen:
            continue
        seen.add(verts)
        q = len(verts) - 1
        levels.setdefault(q, set()).add(verts)
        if q > 0:
            for i in range(len(verts)):
                stack.append(verts[:i] + verts[i + 1:])
    if not levels:
        return SimplicialComplex([])
    top = max(levels)
    return SimplicialComplex([sorted(levels.get(q, set())) for q in range(top + 1)])


@dataclass
class Chain:
    """Sparse integer p-chain over the elementary chain basis."""

    dim: int
    coeffs: dict = field(default_factory=dict)  # basis index -> nonzero int

    def __post_init__(self):
        self.coeffs = {i: int(c) for i, c in self.coeffs.items() if c != 0}

    @classmethod
    def from_vector(cls, dim, vec) -> "Chain":
        return cls(dim, {i: c for i, c in enumerate(vec) if c != 0})

    def to_vector(self, length):
        v = [0] * length
        for i, c in self.coeffs.items():
            if not 0 <= i < length:
                raise InputError(f"chain index {i} out of range 0..{length - 1}")
            v[i] = c
        return v

    def __eq__(self, other):
        return (isinstance(other, Chain) and self.dim == other.dim
                and self.coeffs == other.coeffs)

    def is_zero(self):
        return not self.coeffs


from .matrices import IntMatrix  # noqa: E402  (avoid cycle at import time)


def boundary_matrix(K: SimplicialComplex, q: int) -> IntMatrix:
    """Matrix of the boundary operator from q-chains to (q-1)-chains.

    Column j holds the coefficients of the boundary of the j-th canonical
    q-simplex in the (q-1) basis.
    """
    if not 1 <= q <= K.dim:
        raise InputError(f"dimension {q} out of range 1..{K.dim}")
    m = K.count(q - 1)
    n = K.count(q)
    data = [[0] * n for _ in range(m)]
    for j, verts in enumerate(K.simplices(q)):
        for face, sign in Simplex(verts).faces():
            data[K.index_of(q - 1, face)][j] = sign
    return IntMatrix(data)


def boundary_of_chain(K: SimplicialComplex, c: Chain) -> Chain:
    if c.dim < 1:
        raise InputError("boundary of a chain of dimension < 1")
    if c.dim > K.dim:
        raise InputError(f"chain dimension {c.dim} exceeds complex dimension {K.dim}")
    B = boundary_matrix(K, c.dim)
    vec = B.matvec(c.to_vector(K.count(c.dim)))
    return Chain.from_vector(c.dim - 1, vec)


def relative_boundary_matrix(K: SimplicialComplex, p: int, L_cols, L0_rows):
    """Relative boundary matrix of the pair (L, L0) inside K.

    L is given by (p+1)-simplex column indices, L0 by p-simplex row indices.
    Rows in L0 and rows that are zero on the chosen columns are dropped.
    Returns (matrix, kept_row_indices, col_indices).
    """
    B = boundary_matrix(K, p + 1)
    cols = sorted(set(L_cols))
    rows0 = set(L0_rows)
    for j in cols:
        if not 0 <= j < B.n:
            raise InputError(f"column index {j} out of range")
    for i in rows0:
        if not 0 <= i < B.m:
            raise InputError(f"row index {i} out of range")
    kept = []
    for i in range(B.m):
        if i in rows0:
            continue
        if all(B[i, j] == 0 for j in cols):
            continue
        kept.append(i)
    return B.submatrix(kept, cols), kept, cols


def coface_map(K: SimplicialComplex, q: int):
    """For each (q-1)-simplex index, the list of q-simplex indices having it as a face."""
    cof = [[] for _ in range(K.count(q - 1))]
    for j, verts in enumerate(K.simplices(q)):
        for face, _ in Simplex(verts).faces():
            cof[K.index_of(q - 1, face)].append(j)
    return cof


def orient_consistently(K: SimplicialComplex, q: int):
    """Signs making every interior (q-1)-face cancel, or None if non-orientable.

    Requires every (q-1)-simplex to be a face of at most two q-simplices;
    otherwise NotPseudomanifold is raised.
    """
    if not 1 <= q <= K.dim:
        raise InputError(f"dimension {q} out of range 1..{K.dim}")
    B = boundary_matrix(K, q)
    cof = coface_map(K, q)
    for i, js in enumerate(cof):
        if len(js) > 2:
            raise NotPseudomanifold(
                f"{q - 1}-simplex {K.simplices(q - 1)[i]} has {len(js)} cofaces")
    n = K.count(q)
    signs = [0] * n
    for start in range(n):
        if signs[start]:
            continue
        signs[start] = 1
        queue = [start]
        while queue:
            j = queue.pop()
            for i in range(B.m):
                if B[i, j] == 0 or len(cof[i]) != 2:
                    continue
                other = cof[i][0] if cof[i][1] == j else cof[i][1]
                want = -signs[j] * B[i, j] * B[i, other]
                if signs[other] == 0:
                    signs[other] = want
                    queue.append(other)
                elif signs[other] != want:
                    return None
    return signs
