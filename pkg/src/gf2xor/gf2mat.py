"""Bit-packed square matrices over GF(2) with exact polynomial invariants.

Rows are stored as integers: bit j of ``rows[i]`` is the entry in row i+1,
column j+1. All public row/column indices are 1-based; storage is 0-based.
Values are immutable, so sharing across workers needs no coordination.

:class:`PolyMat` holds matrices over GF(2)[lambda] (entries are
:class:`~gf2xor.gf2poly.Gf2Poly`), enough to take minors of A + lambda*I
and exact symbolic determinants.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .gf2poly import Gf2Poly, _divmod_bits, _lcm_bits, _mul_bits

# One machine word per row; the search scope is n <= 8 and identity checks
# stop at 12, so 24 leaves generous headroom.
DIM_CAP = 24


class Gf2Mat:
    """Immutable n-by-n bit matrix over GF(2)."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]):
        if not 1 <= n <= DIM_CAP:
            raise ValueError(f"dimension must be in 1..{DIM_CAP}, got {n}")
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} rows, got {len(rows)}")
        full = (1 << n) - 1
        for r in rows:
            if r < 0 or r & ~full:
                raise ValueError("row bits extend beyond the matrix dimension")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Gf2Mat is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "Gf2Mat":
        return cls(n, [1 << i for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "Gf2Mat":
        return cls(n, [0] * n)

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "Gf2Mat":
        """E_{i,j}: single 1 in row i, column j (1-based)."""
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"unit index ({i},{j}) out of range for n={n}")
        rows = [0] * n
        rows[i - 1] = 1 << (j - 1)
        return cls(n, rows)

    @classmethod
    def companion(cls, q: Gf2Poly) -> "Gf2Mat":
        """Companion matrix of q: subdiagonal ones, last column = coefficients."""
        n = q.degree
        if n < 1:
            raise ValueError("companion matrix needs degree >= 1")
        rows = [0] * n
        for i in range(n):
            if q.bits >> i & 1:
                rows[i] |= 1 << (n - 1)
            if i >= 1:
                rows[i] |= 1 << (i - 1)
        return cls(n, rows)

    @classmethod
    def block_diag(cls, blocks: Sequence["Gf2Mat"]) -> "Gf2Mat":
        if not blocks:
            raise ValueError("block_diag needs at least one block")
        n = sum(b.n for b in blocks)
        rows = []
        offset = 0
        for b in blocks:
            rows.extend(r << offset for r in b.rows)
            offset += b.n
        return cls(n, rows)

    @classmethod
    def from_text(cls, text: str) -> "Gf2Mat":
        """Parse n lines of n characters from {0,1} (row-major)."""
        lines = [ln for ln in text.splitlines() if ln.strip()]
        n = len(lines)
        rows = []
        for ln in lines:
            ln = ln.strip()
            if len(ln) != n or set(ln) - {"0", "1"}:
                raise ValueError(f"bad matrix row {ln!r}")
            rows.append(int(ln[::-1], 2))
        return cls(n, rows)

    @classmethod
    def from_json_dict(cls, obj: dict) -> "Gf2Mat":
        return cls.from_text("\n".join(obj["rows"]))

    # -- accessors and formats ------------------------------------------

    def entry(self, i: int, j: int) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"entry ({i},{j}) out of range for n={self.n}")
        return self.rows[i - 1] >> (j - 1) & 1

    def row_text(self, i: int) -> str:
        return "".join(str(self.rows[i - 1] >> j & 1) for j in range(self.n))

    def to_text(self) -> str:
        return "\n".join(self.row_text(i) for i in range(1, self.n + 1))

    def to_json_dict(self) -> dict:
        return {"n": self.n, "rows": [self.row_text(i) for i in range(1, self.n + 1)]}

    def weight(self) -> int:
        """Number of nonzero entries."""
        return sum(r.bit_count() for r in self.rows)

    def is_permutation(self) -> bool:
        cover = 0
        for r in self.rows:
            if r.bit_count() != 1:
                return False
            cover |= r
        return cover == (1 << self.n) - 1

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "Gf2Mat") -> "Gf2Mat":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return Gf2Mat(self.n, [a ^ b for a, b in zip(self.rows, other.rows)])

    __sub__ = __add__

    def __matmul__(self, other: "Gf2Mat") -> "Gf2Mat":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        out = []
        for a in self.rows:
            acc = 0
            k = 0
            while a:
                if a & 1:
                    acc ^= other.rows[k]
                a >>= 1
                k += 1
            out.append(acc)
        return Gf2Mat(self.n, out)

    def transpose(self) -> "Gf2Mat":
        n = self.n
        out = [0] * n
        for i, r in enumerate(self.rows):
            for j in range(n):
                if r >> j & 1:
                    out[j] |= 1 << i
        return Gf2Mat(n, out)

    def det(self) -> int:
        """Determinant in {0, 1} by Gaussian elimination."""
        n = self.n
        rows = list(self.rows)
        for c in range(n):
            piv = next((r for r in range(c, n) if rows[r] >> c & 1), None)
            if piv is None:
                return 0
            rows[c], rows[piv] = rows[piv], rows[c]
            for r in range(c + 1, n):
                if rows[r] >> c & 1:
                    rows[r] ^= rows[c]
        return 1

    def inverse(self) -> Optional["Gf2Mat"]:
        """Exact inverse, or None when singular."""
        n = self.n
        aug = [self.rows[i] | (1 << (n + i)) for i in range(n)]
        for c in range(n):
            piv = next((r for r in range(c, n) if aug[r] >> c & 1), None)
            if piv is None:
                return None
            aug[c], aug[piv] = aug[piv], aug[c]
            for r in range(n):
                if r != c and aug[r] >> c & 1:
                    aug[r] ^= aug[c]
        return Gf2Mat(n, [a >> n for a in aug])

    def with_col_added(self, src: int, dst: int) -> "Gf2Mat":
        """Right-multiply by I + E_{src,dst}: add column src into column dst."""
        if src == dst:
            raise ValueError("transvection needs src != dst")
        if not (1 <= src <= self.n and 1 <= dst <= self.n):
            raise IndexError(f"column index out of range for n={self.n}")
        return Gf2Mat(self.n, _col_add(self.rows, src - 1, dst - 1))

    # -- minors -----------------------------------------------------------

    def minor_delete(self, i: int, j: int) -> "Gf2Mat":
        """Delete row i and column j (1-based)."""
        n = self.n
        if n < 2:
            raise ValueError("minor of a 1x1 matrix is empty")
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"minor index ({i},{j}) out of range for n={n}")
        jm = j - 1
        low = (1 << jm) - 1
        rows = [
            (r & low) | ((r >> (jm + 1)) << jm)
            for k, r in enumerate(self.rows)
            if k != i - 1
        ]
        return Gf2Mat(n - 1, rows)

    def minor_delete_original(
        self, first: tuple[int, int], second: tuple[int, int]
    ) -> "Gf2Mat":
        """Delete two rows/columns given by their indices in the original matrix."""
        i1, j1 = first
        i2, j2 = second
        if i1 == i2 or j1 == j2:
            raise ValueError("original-index double deletion needs distinct rows and columns")
        a = self.minor_delete(i1, j1)
        return a.minor_delete(i2 - (i2 > i1), j2 - (j2 > j1))

    # -- protocol ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Gf2Mat):
            return self.n == other.n and self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash((Gf2Mat, self.n, self.rows))

    def __repr__(self) -> str:
        return f"Gf2Mat({self.n}, {'/'.join(self.row_text(i) for i in range(1, self.n + 1))!r})"


def _col_add(rows: Sequence[int], src: int, dst: int) -> tuple[int, ...]:
    """Raw column operation on 0-based bit positions."""
    return tuple(r ^ ((r >> src & 1) << dst) for r in rows)


class PolyMat:
    """Immutable square matrix over GF(2)[lambda]."""

    __slots__ = ("n", "entries")

    def __init__(self, entries: Sequence[Sequence[Gf2Poly]]):
        entries = tuple(tuple(row) for row in entries)
        n = len(entries)
        if n < 1 or any(len(row) != n for row in entries):
            raise ValueError("entries must form a nonempty square grid")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMat is immutable")

    @classmethod
    def from_matrix(cls, a: Gf2Mat) -> "PolyMat":
        return cls(
            [[Gf2Poly(a.rows[i] >> j & 1) for j in range(a.n)] for i in range(a.n)]
        )

    @classmethod
    def char_matrix(cls, a: Gf2Mat) -> "PolyMat":
        """A + lambda*I over GF(2)[lambda]."""
        return cls(
            [
                [
                    Gf2Poly((a.rows[i] >> j & 1) | (2 if i == j else 0))
                    for j in range(a.n)
                ]
                for i in range(a.n)
            ]
        )

    def entry(self, i: int, j: int) -> Gf2Poly:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"entry ({i},{j}) out of range for n={self.n}")
        return self.entries[i - 1][j - 1]

    def minor_delete(self, i: int, j: int) -> "PolyMat":
        n = self.n
        if n < 2:
            raise ValueError("minor of a 1x1 matrix is empty")
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"minor index ({i},{j}) out of range for n={n}")
        return PolyMat(
            [
                [e for c, e in enumerate(row) if c != j - 1]
                for r, row in enumerate(self.entries)
                if r != i - 1
            ]
        )

    def minor_delete_original(
        self, first: tuple[int, int], second: tuple[int, int]
    ) -> "PolyMat":
        i1, j1 = first
        i2, j2 = second
        if i1 == i2 or j1 == j2:
            raise ValueError("original-index double deletion needs distinct rows and columns")
        a = self.minor_delete(i1, j1)
        return a.minor_delete(i2 - (i2 > i1), j2 - (j2 > j1))

    def __eq__(self, other) -> bool:
        if isinstance(other, PolyMat):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self) -> int:
        return hash((PolyMat, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(
            ", ".join(str(e) for e in row) for row in self.entries
        )
        return f"PolyMat[{body}]"


def sym_det(m: PolyMat) -> Gf2Poly:
    """Exact determinant in GF(2)[lambda], fraction-free Bareiss elimination.

    Division-free trace methods fail in characteristic 2; Bareiss keeps
    every intermediate an exact minor, so each division is exact. Row
    swaps carry no sign in characteristic 2.
    """
    n = m.n
    a = [[e.bits for e in row] for row in m.entries]
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if a[r][k]), None)
            if piv is None:
                return Gf2Poly(0)
            a[k], a[piv] = a[piv], a[k]
        pk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                num = _mul_bits(row_i[j], pk) ^ _mul_bits(aik, row_k[j])
                q, r = _divmod_bits(num, prev)
                if r:
                    raise ArithmeticError("Bareiss division was not exact")
                row_i[j] = q
            row_i[k] = 0
        prev = pk
    return Gf2Poly(a[n - 1][n - 1])


def char_poly(a: Gf2Mat) -> Gf2Poly:
    """Characteristic polynomial det(A + lambda*I); monic of degree n."""
    return sym_det(PolyMat.char_matrix(a))


def _matvec(rows: Sequence[int], v: int) -> int:
    w = 0
    for i, r in enumerate(rows):
        if (r & v).bit_count() & 1:
            w |= 1 << i
    return w


def _min_poly_bits(rows: Sequence[int], n: int) -> int:
    """Minimal polynomial of a bit matrix, as packed coefficient bits.

    Krylov chains from each standard basis vector: the first linear
    dependence among v, Av, A^2 v, ... gives the local annihilator, and
    the minimal polynomial is the lcm. Stops once degree n is reached.
    """
    result = 1
    rdeg = 0
    for s in range(n):
        if rdeg == n:
            break
        piv_vec = [0] * n
        piv_combo = [0] * n
        v = 1 << s
        j = 0
        while True:
            vec = v
            combo = 1 << j
            p = -1
            while vec:
                p = vec.bit_length() - 1
                pv = piv_vec[p]
                if not pv:
                    break
                vec ^= pv
                combo ^= piv_combo[p]
            if not vec:
                local = combo
                break
            piv_vec[p] = vec
            piv_combo[p] = combo
            j += 1
            w = 0
            for i, r in enumerate(rows):
                if (r & v).bit_count() & 1:
                    w |= 1 << i
            v = w
        if local != 1:
            result = _lcm_bits(result, local)
            rdeg = result.bit_length() - 1
    return result


def min_poly(a: Gf2Mat) -> Gf2Poly:
    """Least-degree monic polynomial annihilating A; divides char_poly(A)."""
    return Gf2Poly(_min_poly_bits(a.rows, a.n))


def poly_eval_matrix(p: Gf2Poly, a: Gf2Mat) -> Gf2Mat:
    """Horner evaluation of p at A."""
    n = a.n
    res = Gf2Mat.zero(n)
    ident = Gf2Mat.identity(n)
    for k in range(p.degree, -1, -1):
        res = res @ a
        if p.bits >> k & 1:
            res = res + ident
    return res
