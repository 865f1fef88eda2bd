"""Cycle normal forms, product enumeration, and exact XOR-counts.

An invertible matrix has XOR-count t when it factors as a permutation
matrix times t transvections I + E_{i,j} (i != j) and no shorter such
product exists. Up to permutation-similarity the permutation part can be
taken in cycle normal form, a block-diagonal of companion matrices of
x^m + 1, so the enumeration runs over (integer partition of n, ordered
list of t index pairs).

Matrices that represent multiplication by a field element are recognized
through their minimal polynomial: the classification (f irreducible,
m = deg f, d = n/m) holds exactly when the minimal polynomial f is
irreducible, since the characteristic polynomial then has to be f^d
(characteristic and minimal polynomials share their irreducible factors).
"""

from __future__ import annotations

import functools
import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

from .gf2mat import Gf2Mat, _col_add, _min_poly_bits
from .gf2poly import Gf2Poly, _irreducible_set, smallest_factor

ENUM_N_CAP = 12
SEARCH_N_CAP = 8
T_CAP = 3

_CLASSIFY_SET_DEGREE = 12


@functools.lru_cache(maxsize=None)
def partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n as descending tuples, ascending lexicographic."""
    if n < 1:
        raise ValueError("partitions are defined for n >= 1")

    def gen(total, max_part):
        if total == 0:
            yield ()
            return
        for first in range(min(total, max_part), 0, -1):
            for rest in gen(total - first, first):
                yield (first,) + rest

    return tuple(sorted(gen(n, n)))


@dataclass(frozen=True)
class CycleType:
    """Descending cycle lengths m_1 >= ... >= m_s >= 1 summing to n."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("cycle type needs at least one part")
        if any(p < 1 for p in self.parts):
            raise ValueError("cycle lengths must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("cycle lengths must be sorted descending")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def block_count(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class XorProduct:
    """Symbolic product C(P) * prod_k (I + E_{i_k, j_k}), 1-based indices."""

    cycle_type: CycleType
    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "factors", tuple((int(i), int(j)) for i, j in self.factors)
        )
        n = self.cycle_type.n
        for i, j in self.factors:
            if i == j:
                raise ValueError(f"factor ({i},{j}) needs i != j")
            if not (1 <= i <= n and 1 <= j <= n):
                raise IndexError(f"factor ({i},{j}) out of range for n={n}")

    @property
    def t(self) -> int:
        return len(self.factors)

    def realize(self) -> Gf2Mat:
        """The matrix this product denotes; always invertible."""
        rows = _block_rows(self.cycle_type.parts)
        for i, j in self.factors:
            rows = _col_add(rows, i - 1, j - 1)
        return Gf2Mat(self.cycle_type.n, rows)

    def to_dict(self) -> dict:
        return {
            "cycle_type": list(self.cycle_type.parts),
            "factors": [list(f) for f in self.factors],
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "XorProduct":
        return cls(
            CycleType(tuple(obj["cycle_type"])),
            tuple((i, j) for i, j in obj["factors"]),
        )


@dataclass(frozen=True)
class ElementClass:
    """Verdict that a matrix multiplies by a field element of degree m.

    The classified matrix is similar to d copies of the companion block of
    f, so its characteristic polynomial is f^d and its minimal polynomial
    is f, with d = n/m.
    """

    f: Gf2Poly
    m: int
    d: int
    n: int

    @property
    def trivial(self) -> bool:
        """True for f = x + 1, multiplication by 1 (the identity matrix)."""
        return self.f.bits == 3


def _block_rows(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Rows of the block-diagonal of companion matrices of x^m + 1."""
    rows = []
    offset = 0
    for m in parts:
        rows.append(1 << (offset + m - 1))
        for k in range(1, m):
            rows.append(1 << (offset + k - 1))
        offset += m
    return tuple(rows)


def _is_perm_rows(rows: tuple[int, ...], n: int) -> bool:
    cover = 0
    for r in rows:
        if r.bit_count() != 1:
            return False
        cover |= r
    return cover == (1 << n) - 1


def _pairs0(n: int) -> tuple[tuple[int, int], ...]:
    """All ordered index pairs (i, j), i != j, 0-based, lexicographic."""
    return tuple((i, j) for i in range(n) for j in range(n) if i != j)


def cycle_normal_form(p: Gf2Mat) -> tuple[CycleType, Gf2Mat]:
    """Cycle type of a permutation matrix and a conjugator Q.

    Q @ P @ Q.inverse() equals the block-diagonal of companion matrices of
    x^{m_k} + 1, parts descending. Cycles of equal length are ordered by
    their smallest moved point, which makes Q deterministic.
    """
    n = p.n
    if not p.is_permutation():
        raise ValueError("cycle normal form needs a permutation matrix")
    # entry (i, j) = 1 means sigma(j) = i
    sigma = [0] * n
    for i, r in enumerate(p.rows):
        sigma[r.bit_length() - 1] = i
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        nxt = sigma[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = sigma[nxt]
        cycles.append(cyc)
    cycles.sort(key=lambda c: (-len(c), c[0]))
    pi = [0] * n
    pos = 0
    for cyc in cycles:
        for k, elem in enumerate(cyc):
            pi[elem] = pos + k
        pos += len(cyc)
    q_rows = [0] * n
    for j in range(n):
        q_rows[pi[j]] = 1 << j
    return CycleType(tuple(len(c) for c in cycles)), Gf2Mat(n, q_rows)


def enumerate_products(n: int, t: int) -> Iterator[XorProduct]:
    """Every product with |factors| = t, partition-then-factors lexicographic.

    The stream has exactly p(n) * (n*(n-1))**t members; the permutation
    part is never restricted, so block-count claims can be falsified
    downstream rather than assumed here.
    """
    if not 1 <= n <= ENUM_N_CAP:
        raise ValueError(f"enumeration dimension capped at {ENUM_N_CAP}, got {n}")
    if not 0 <= t <= T_CAP:
        raise ValueError(f"factor count capped at {T_CAP}, got {t}")
    pairs = tuple((i + 1, j + 1) for i, j in _pairs0(n))
    for parts in partitions(n):
        ct = CycleType(parts)
        for combo in itertools.product(pairs, repeat=t):
            yield XorProduct(ct, combo)


def element_check(a: Gf2Mat) -> Optional[ElementClass]:
    """Classify a as multiplication by a field element, or None.

    Requires invertibility (x divides the minimal polynomial exactly when
    the matrix is singular, so no separate elimination is needed). The
    trivial class f = x + 1 is reported with its flag set rather than
    suppressed.
    """
    mp = _min_poly_bits(a.rows, a.n)
    if not mp & 1:
        raise ValueError("element_check needs an invertible matrix")
    f = Gf2Poly(mp)
    if not f.is_irreducible():
        return None
    m = f.degree
    return ElementClass(f, m, a.n // m, a.n)


def _classify_bits(rows: tuple[int, ...], n: int, irred: frozenset[int]) -> int:
    """Min-poly bits when irreducible (a field-element witness), else 0."""
    mp = _min_poly_bits(rows, n)
    return mp if mp in irred else 0


# Classified-product scans are cached per (n, t): every consumer -- the
# claim verifiers, polynomial searches, and table builder -- derives its
# answer from the same enumeration, in enumeration order.
_SCAN_CACHE: dict[tuple[int, int], tuple[int, tuple]] = {}


def _scan_task(args: tuple[int, tuple[int, ...], int]) -> tuple[int, list]:
    """Scan one cycle type: (cases, [(factors, min_poly_bits), ...])."""
    n, parts, t = args
    irred = _irreducible_set(_CLASSIFY_SET_DEGREE)
    base = _block_rows(parts)
    pairs = _pairs0(n)
    hits: list[tuple[tuple[tuple[int, int], ...], int]] = []
    count = 0
    if t == 0:
        count = 1
        mp = _classify_bits(base, n, irred)
        if mp:
            hits.append(((), mp))
    elif t == 1:
        for i1, j1 in pairs:
            count += 1
            mp = _classify_bits(_col_add(base, i1, j1), n, irred)
            if mp:
                hits.append((((i1 + 1, j1 + 1),), mp))
    elif t == 2:
        for i1, j1 in pairs:
            r1 = _col_add(base, i1, j1)
            f1 = (i1 + 1, j1 + 1)
            for i2, j2 in pairs:
                count += 1
                mp = _classify_bits(_col_add(r1, i2, j2), n, irred)
                if mp:
                    hits.append(((f1, (i2 + 1, j2 + 1)), mp))
    else:
        for i1, j1 in pairs:
            r1 = _col_add(base, i1, j1)
            f1 = (i1 + 1, j1 + 1)
            for i2, j2 in pairs:
                r2 = _col_add(r1, i2, j2)
                f2 = (i2 + 1, j2 + 1)
                for i3, j3 in pairs:
                    count += 1
                    mp = _classify_bits(_col_add(r2, i3, j3), n, irred)
                    if mp:
                        hits.append(((f1, f2, (i3 + 1, j3 + 1)), mp))
    return count, hits


def classified_products(
    n: int, t: int, threads: int = 1
) -> tuple[int, tuple[tuple[tuple[int, ...], tuple[tuple[int, int], ...], int], ...]]:
    """(cases_scanned, ((parts, factors, min_poly_bits), ...)) for one (n, t).

    Entries appear in enumeration order, so the first match for a given
    polynomial is the lexicographically smallest witness. Results are
    cached; the merge is by task order, so worker count never changes the
    output.
    """
    if not 1 <= n <= SEARCH_N_CAP:
        raise ValueError(f"classified scans capped at n <= {SEARCH_N_CAP}, got {n}")
    if not 0 <= t <= T_CAP:
        raise ValueError(f"factor count capped at {T_CAP}, got {t}")
    key = (n, t)
    cached = _SCAN_CACHE.get(key)
    if cached is not None:
        return cached
    tasks = [(n, parts, t) for parts in partitions(n)]
    if threads > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_scan_task, tasks))
    else:
        results = [_scan_task(task) for task in tasks]
    total = 0
    entries = []
    for task, (count, hits) in zip(tasks, results):
        total += count
        entries.extend((task[1], factors, mp) for factors, mp in hits)
    value = (total, tuple(entries))
    _SCAN_CACHE[key] = value
    return value


def clear_scan_cache() -> None:
    _SCAN_CACHE.clear()


def xor_count_exact(
    a: Gf2Mat, t_max: int = 2
) -> tuple[Optional[int], Optional[XorProduct]]:
    """Smallest t <= t_max realizing a, with a witness; (None, None) beyond.

    Transvections are involutions, so membership at depth t reduces to a
    bounded DFS that strips candidate last factors until a permutation
    matrix remains. The witness is reported with its permutation part in
    cycle normal form; it realizes Q @ a @ Q^-1 for the conjugator Q of
    the stripped permutation, which equals a when that permutation is
    already block-diagonal.
    """
    if a.n > SEARCH_N_CAP:
        raise ValueError(f"xor_count_exact capped at n <= {SEARCH_N_CAP}, got {a.n}")
    if t_max > T_CAP:
        raise ValueError(f"t_max capped at {T_CAP}, got {t_max}")
    if a.det() == 0:
        raise ValueError("xor_count_exact needs an invertible matrix")
    pairs = _pairs0(a.n)
    for t in range(t_max + 1):
        factors = _strip(a.rows, a.n, t, pairs)
        if factors is not None:
            return len(factors), _conjugated_witness(a, factors)
    return None, None


def _strip(rows, n, depth, pairs):
    if _is_perm_rows(rows, n):
        return ()
    if depth == 0:
        return None
    for i, j in pairs:
        sub = _strip(_col_add(rows, i, j), n, depth - 1, pairs)
        if sub is not None:
            return sub + ((i + 1, j + 1),)
    return None


def _conjugated_witness(
    a: Gf2Mat, factors: tuple[tuple[int, int], ...]
) -> XorProduct:
    """Witness with the permutation part rewritten in cycle normal form."""
    p = a
    for i, j in reversed(factors):
        p = p.with_col_added(i, j)
    ct, q = cycle_normal_form(p)
    q_inv = q.inverse()
    ident = Gf2Mat.identity(a.n)
    conj = []
    for i, j in factors:
        m = q @ (ident + Gf2Mat.unit(a.n, i, j)) @ q_inv + ident
        r = next(k for k in range(a.n) if m.rows[k])
        conj.append((r + 1, m.rows[r].bit_length()))
    return XorProduct(ct, tuple(conj))


@dataclass
class SearchReport:
    """Result of a minimal-XOR-count search keyed on a minimal polynomial."""

    poly: Gf2Poly
    n: int
    t: Optional[int]
    t_max: int
    witness: Optional[XorProduct]
    elapsed_ms: int
    cases_checked: int = 0

    def to_dict(self) -> dict:
        return {
            "poly": str(self.poly),
            "n": self.n,
            "t": self.t,
            "t_max": self.t_max,
            "witness": self.witness.to_dict() if self.witness else None,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def min_xor_count_for_poly(
    f: Gf2Poly, n: int, t_max: int = 2, threads: int = 1
) -> SearchReport:
    """Minimal t <= t_max over all bases for multiplication by a root of f.

    Elements sharing a minimal polynomial share their XOR-count, so the
    search is keyed on f alone: it scans products by increasing t for one
    whose classification is exactly (f, deg f, n / deg f) and reports the
    lexicographically smallest witness, or t = None when t_max is
    exhausted.
    """
    if f.degree < 1 or not f.is_irreducible():
        factor = smallest_factor(f) if f.degree >= 1 else None
        detail = f" (nontrivial factor {factor})" if factor and factor != f else ""
        raise ValueError(f"{f} is not irreducible{detail}")
    if n % f.degree != 0:
        raise ValueError(f"deg {f} = {f.degree} does not divide n = {n}")
    if not 1 <= n <= SEARCH_N_CAP:
        raise ValueError(f"search capped at n <= {SEARCH_N_CAP}, got {n}")
    if not 0 <= t_max <= T_CAP:
        raise ValueError(f"t_max capped at {T_CAP}, got {t_max}")
    start = time.perf_counter()
    target = f.bits
    cases = 0
    result_t = None
    witness = None
    for t in range(t_max + 1):
        count, entries = classified_products(n, t, threads=threads)
        cases += count
        for parts, factors, mp in entries:
            if mp == target:
                result_t = t
                witness = XorProduct(CycleType(parts), factors)
                break
        if witness is not None:
            break
    elapsed = int((time.perf_counter() - start) * 1000)
    return SearchReport(f, n, result_t, t_max, witness, elapsed, cases)
