"""Matrices and subspaces over F_q: canonical RREF forms, the subspace
lattice (sum, intersection), the Grassmann metric, coordinate projections
and puncturings, and guarded exhaustive enumeration.

Subspaces are normalized to reduced row echelon form at construction, so
equality, hashing and deduplication are structural.  Erased coordinates are
carried as explicit index sets (never an in-band sentinel): a MaskedSubspace
is the compacted projection plus the sorted set of erased coordinates.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from . import kernels
from .errors import ScaleLimitError
from .gf import FieldElement, _FieldOps

SUBSPACE_ENUM_GUARD = 10 ** 7


def _validate_row(field: _FieldOps, row: Sequence) -> tuple[int, ...]:
    return tuple(field.validate(x) for x in row)


class MatFq:
    """Immutable dense matrix over one field; entries are element indices."""

    __slots__ = ("field", "rows")

    def __init__(self, field: _FieldOps, rows: Iterable[Sequence]):
        self.field = field
        rows = tuple(_validate_row(field, r) for r in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
        self.rows = rows

    @classmethod
    def identity(cls, field: _FieldOps, n: int) -> "MatFq":
        return cls(field, [[1 if i == j else 0 for j in range(n)]
                           for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def mul(self, other: "MatFq") -> "MatFq":
        if other.field != self.field:
            raise ValueError("matrices over different contexts")
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        out = kernels.matmul(self.rows, other.rows, self.field)
        return MatFq(self.field, out)

    __matmul__ = mul

    def mul_vector(self, vec: Sequence) -> tuple[int, ...]:
        """Row vector times this matrix."""
        v = _validate_row(self.field, vec)
        if len(v) != self.nrows:
            raise ValueError("dimension mismatch")
        out = kernels.matmul([v], self.rows, self.field)
        return tuple(out[0])

    def rref(self) -> tuple["MatFq", int]:
        rows, rank, _ = kernels.rref(self.rows, self.ncols, self.field)
        return MatFq(self.field, rows), rank

    def rank(self) -> int:
        return kernels.rank(self.rows, self.ncols, self.field)

    def transpose(self) -> "MatFq":
        return MatFq(self.field, list(zip(*self.rows)) if self.rows else [])

    def cols(self, indices: Sequence[int]) -> "MatFq":
        return MatFq(self.field, [[r[j] for j in indices] for r in self.rows])

    def inverse(self) -> "MatFq":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        aug = [list(r) + [1 if i == j else 0 for j in range(n)]
               for i, r in enumerate(self.rows)]
        red, rank, _ = kernels.rref(aug, 2 * n, self.field)
        if rank != n:
            raise ValueError("matrix is singular")
        return MatFq(self.field, [r[n:] for r in red])

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.field, self.rows[i][j])

    def __eq__(self, other):
        return (isinstance(other, MatFq) and self.field == other.field
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.rows, self.field.order))

    def __repr__(self):
        return f"MatFq(GF({self.field.order}), {self.nrows}x{self.ncols})"


def rref(matrix: MatFq) -> tuple[MatFq, int]:
    """Reduced row echelon form of a matrix and its rank."""
    return matrix.rref()


def _pivots_of_canonical(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    piv = []
    for r in rows:
        for j, v in enumerate(r):
            if v:
                piv.append(j)
                break
    return tuple(piv)


class Subspace:
    """A subspace of F_q^n held as its unique RREF basis (no zero rows)."""

    __slots__ = ("field", "n", "rows", "pivots")

    def __init__(self, field: _FieldOps, n: int, rows: Iterable[Sequence] = (),
                 *, _canonical: bool = False):
        self.field = field
        self.n = n
        rows = [_validate_row(field, r) for r in rows]
        if any(len(r) != n for r in rows):
            raise ValueError("row length differs from ambient dimension")
        if _canonical:
            self.rows = tuple(tuple(r) for r in rows)
            self.pivots = _pivots_of_canonical(rows)
        else:
            red, rank, pivots = kernels.rref(rows, n, field)
            self.rows = tuple(tuple(r) for r in red[:rank])
            self.pivots = tuple(pivots)

    @classmethod
    def zero(cls, field: _FieldOps, n: int) -> "Subspace":
        return cls(field, n, (), _canonical=True)

    @classmethod
    def full(cls, field: _FieldOps, n: int) -> "Subspace":
        return cls(field, n, MatFq.identity(field, n).rows, _canonical=True)

    @classmethod
    def spanned_by(cls, field: _FieldOps, n: int, vectors: Iterable[Sequence]) -> "Subspace":
        return cls(field, n, vectors)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> MatFq:
        return MatFq(self.field, self.rows)

    def contains_vector(self, vec: Sequence) -> bool:
        v = _validate_row(self.field, vec)
        if len(v) != self.n:
            raise ValueError("vector length differs from ambient dimension")
        res = kernels.reduce_vector(v, self.rows, self.pivots, self.field)
        return not any(res)

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.contains_vector(r) for r in other.rows)

    def vectors(self) -> Iterator[tuple[int, ...]]:
        """Every vector of the space; exhaustive-test helper, O(q^dim)."""
        q = self.field.order
        if q ** self.dim > 10 ** 6:
            raise ScaleLimitError("span too large to enumerate")
        for coeffs in product(range(q), repeat=self.dim):
            vec = [0] * self.n
            for c, row in zip(coeffs, self.rows):
                if c:
                    for j, x in enumerate(row):
                        if x:
                            vec[j] = self.field.add(vec[j], self.field.mul(c, x))
            yield tuple(vec)

    def _check(self, other: "Subspace"):
        if other.field != self.field:
            raise ValueError("subspaces over different contexts")
        if other.n != self.n:
            raise ValueError("ambient dimension mismatch")

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.field, self.n, self.rows + other.rows)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: row-reduce [U|U; V|0]; rows with zero left half carry
        an intersection basis on the right."""
        self._check(other)
        n = self.n
        stacked = [list(r) + list(r) for r in self.rows]
        stacked += [list(r) + [0] * n for r in other.rows]
        red, rank, _ = kernels.rref(stacked, 2 * n, self.field)
        inter = [r[n:] for r in red[:rank] if not any(r[:n])]
        result = Subspace(self.field, n, inter)
        # modular identity is structural in Zassenhaus; keep it checked
        assert result.dim == self.dim + other.dim - self.sum(other).dim
        return result

    def distance(self, other: "Subspace") -> int:
        self._check(other)
        joint = kernels.rank(self.rows + other.rows, self.n, self.field)
        return 2 * joint - self.dim - other.dim

    def erase(self, coords: Iterable[int]) -> "MaskedSubspace":
        return MaskedSubspace.of(self).erase_all(coords)

    def punctured(self, j: int) -> "Subspace":
        """Delete coordinate j; ambient shrinks by one."""
        if not 0 <= j < self.n:
            raise ValueError("coordinate out of range")
        rows = [r[:j] + r[j + 1:] for r in self.rows]
        return Subspace(self.field, self.n - 1, rows)

    def to_json(self) -> dict:
        return {"n": self.n, "q": self.field.order,
                "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, field: _FieldOps, obj: dict) -> "Subspace":
        if obj.get("q") != field.order:
            raise ValueError("field order mismatch in serialized subspace")
        return cls(field, obj["n"], obj["rows"])

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.n == other.n and self.rows == other.rows)

    def __hash__(self):
        return hash((self.n, self.rows, self.field.order))

    def __repr__(self):
        return f"Subspace(GF({self.field.order})^{self.n}, dim={self.dim})"


class MaskedVector:
    """A length-n vector with erased coordinates; erased entries carry no
    value and are normalized to 0 internally."""

    __slots__ = ("field", "entries", "mask")

    def __init__(self, field: _FieldOps, entries: Sequence,
                 mask: Sequence[bool] | Iterable[int] = ()):
        self.field = field
        values = list(_validate_row(field, entries))
        n = len(values)
        flags = [False] * n
        mask = list(mask)
        if mask and isinstance(mask[0], bool):
            if len(mask) != n:
                raise ValueError("mask length differs from vector length")
            flags = list(mask)
        else:
            for j in mask:
                if not 0 <= j < n:
                    raise ValueError("masked coordinate out of range")
                flags[j] = True
        for j, m in enumerate(flags):
            if m:
                values[j] = 0
        self.entries = tuple(values)
        self.mask = tuple(flags)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def masked_coords(self) -> tuple[int, ...]:
        return tuple(j for j, m in enumerate(self.mask) if m)

    @property
    def unmasked_coords(self) -> tuple[int, ...]:
        return tuple(j for j, m in enumerate(self.mask) if not m)

    def compact(self) -> tuple[int, ...]:
        """Entries with the erased coordinates deleted."""
        return tuple(v for v, m in zip(self.entries, self.mask) if not m)

    def to_json(self) -> dict:
        return {"n": self.n, "q": self.field.order,
                "entries": list(self.entries),
                "mask": list(self.masked_coords)}

    @classmethod
    def from_json(cls, field: _FieldOps, obj: dict) -> "MaskedVector":
        if obj.get("q") != field.order:
            raise ValueError("field order mismatch in serialized vector")
        return cls(field, obj["entries"], obj["mask"])

    def __eq__(self, other):
        return (isinstance(other, MaskedVector) and self.field == other.field
                and self.entries == other.entries and self.mask == other.mask)

    def __hash__(self):
        return hash((self.entries, self.mask, self.field.order))

    def __repr__(self):
        body = ",".join("?" if m else str(v)
                        for v, m in zip(self.entries, self.mask))
        return f"MaskedVector({body})"


def hamming_distance(u: MaskedVector, v: MaskedVector) -> int:
    """Differing unmasked coordinates; masks must match exactly."""
    if u.n != v.n or u.mask != v.mask:
        raise ValueError("mask mismatch")
    return sum(1 for a, b, m in zip(u.entries, v.entries, u.mask)
               if not m and a != b)


class MaskedSubspace:
    """A subspace observed through erased coordinates: the compacted
    projection (ambient n - mu) plus the sorted erased set."""

    __slots__ = ("n", "mask", "space")

    def __init__(self, n: int, mask: Iterable[int], space: Subspace):
        mask = tuple(sorted(set(mask)))
        if any(not 0 <= j < n for j in mask):
            raise ValueError("masked coordinate out of range")
        if space.n != n - len(mask):
            raise ValueError("compacted ambient dimension mismatch")
        self.n = n
        self.mask = mask
        self.space = space

    @classmethod
    def of(cls, space: Subspace) -> "MaskedSubspace":
        return cls(space.n, (), space)

    @property
    def field(self) -> _FieldOps:
        return self.space.field

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def mu(self) -> int:
        return len(self.mask)

    def erase(self, j: int) -> "MaskedSubspace":
        """Erase original coordinate j (must not be masked already)."""
        if j in self.mask:
            raise ValueError(f"coordinate {j} is already erased")
        if not 0 <= j < self.n:
            raise ValueError("coordinate out of range")
        compact_pos = j - sum(1 for t in self.mask if t < j)
        return MaskedSubspace(self.n, self.mask + (j,),
                              self.space.punctured(compact_pos))

    def erase_all(self, coords: Iterable[int]) -> "MaskedSubspace":
        out = self
        for j in sorted(set(coords)):
            out = out.erase(j)
        return out

    def masked_basis(self) -> list[MaskedVector]:
        """RREF basis re-expanded to length n with the erased set masked."""
        unmasked = [j for j in range(self.n) if j not in self.mask]
        out = []
        for row in self.space.rows:
            entries = [0] * self.n
            for pos, j in enumerate(unmasked):
                entries[j] = row[pos]
            out.append(MaskedVector(self.field, entries, self.mask))
        return out

    def to_json(self) -> dict:
        obj = self.space.to_json()
        return {"n": self.n, "q": obj["q"], "rows": obj["rows"],
                "mask": list(self.mask)}

    @classmethod
    def from_json(cls, field: _FieldOps, obj: dict) -> "MaskedSubspace":
        mask = obj.get("mask", [])
        inner = Subspace.from_json(
            field, {"n": obj["n"] - len(mask), "q": obj["q"], "rows": obj["rows"]})
        return cls(obj["n"], mask, inner)

    def __eq__(self, other):
        return (isinstance(other, MaskedSubspace) and self.n == other.n
                and self.mask == other.mask and self.space == other.space)

    def __hash__(self):
        return hash((self.n, self.mask, self.space))

    def __repr__(self):
        return (f"MaskedSubspace(n={self.n}, erased={list(self.mask)}, "
                f"dim={self.dim})")


# ---------------------------------------------------------------------------
# module-level operations


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    return u.sum(v)


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    return u.intersect(v)


def grassmann_distance(u: Subspace, v: Subspace) -> int:
    """dim U + dim V - 2 dim(U n V), computed from the rank of the stack."""
    return u.distance(v)


def project(space: Subspace, erase_coords: Iterable[int]) -> MaskedSubspace:
    """Project away the given coordinates; the mask records them.  The
    result is independent of the order the coordinates are applied in."""
    return space.erase(erase_coords)


def puncture_codebook(codebook: Iterable[Subspace], j: int) -> set[Subspace]:
    """Coordinate-j puncturing of every member; ambient shrinks by one."""
    return {v.punctured(j) for v in codebook}


def enumerate_subspaces(n: int, ell: int, field: _FieldOps) -> Iterator[Subspace]:
    """All ell-dimensional subspaces of F_q^n, one RREF basis each.

    Generates RREF matrices directly: choose pivot columns, then fill the
    free entries.  Counted by the q-ary Gaussian coefficient.
    """
    if not 0 <= ell <= n:
        raise ValueError("need 0 <= ell <= n")
    q = field.order
    if q ** (ell * (n - ell)) > SUBSPACE_ENUM_GUARD:
        raise ScaleLimitError(
            f"subspace enumeration of ~q^{ell * (n - ell)} exceeds guard")
    if ell == 0:
        yield Subspace.zero(field, n)
        return
    for pivots in combinations(range(n), ell):
        pivot_set = set(pivots)
        free_cells = [(i, j) for i, p in enumerate(pivots)
                      for j in range(p + 1, n) if j not in pivot_set]
        for fill in product(range(q), repeat=len(free_cells)):
            rows = [[0] * n for _ in range(ell)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), v in zip(free_cells, fill):
                rows[i][j] = v
            yield Subspace(field, n, rows, _canonical=True)


def enumerate_superspaces(space: Subspace) -> Iterator[Subspace]:
    """All (dim+1)-dimensional subspaces containing the given one.

    Cosets of the quotient are enumerated over the complement coordinates
    (the non-pivot columns), normalized so the first nonzero coefficient
    is 1; each yields a distinct superspace.
    """
    n = space.n
    if space.dim == n:
        return
    field = space.field
    q = field.order
    non_pivots = [j for j in range(n) if j not in space.pivots]
    width = len(non_pivots)
    for first in range(width):
        for tail in product(range(q), repeat=width - first - 1):
            vec = [0] * n
            vec[non_pivots[first]] = 1
            for offset, c in enumerate(tail):
                vec[non_pivots[first + 1 + offset]] = c
            yield Subspace(field, n, space.rows + (tuple(vec),))


def subspaces_of(space: Subspace, k: int) -> Iterator[Subspace]:
    """All k-dimensional subspaces of the given space."""
    if not 0 <= k <= space.dim:
        raise ValueError("need 0 <= k <= dim")
    field = space.field
    for inner in enumerate_subspaces(space.dim, k, field):
        rows = kernels.matmul(inner.rows, space.rows, field)
        yield Subspace(field, space.n, rows)
