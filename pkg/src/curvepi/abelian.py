"""Abelianization via integer Smith normal form.

All arithmetic is exact over Python ints; entry growth during SNF makes
fixed-width arithmetic unusable even on small inputs.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence, Tuple

from .presentations import Presentation


class IntMatrix:
    """Dense rectangular integer matrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[int]], cols: int | None = None):
        ent = [list(map(int, row)) for row in entries]
        if ent:
            width = len(ent[0])
            if any(len(row) != width for row in ent):
                raise ValueError("ragged matrix")
        else:
            width = 0 if cols is None else cols
        self.rows = len(ent)
        self.cols = width if ent else (cols or 0)
        self.entries = ent

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        m = cls.zero(n, n)
        for i in range(n):
            m.entries[i][i] = 1
        return m

    def copy(self) -> "IntMatrix":
        return IntMatrix([row[:] for row in self.entries], cols=self.cols)

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = IntMatrix.zero(self.rows, other.cols)
        for i in range(self.rows):
            ri = self.entries[i]
            oi = out.entries[i]
            for k, a in enumerate(ri):
                if a:
                    rk = other.entries[k]
                    for j in range(other.cols):
                        oi[j] += a * rk[j]
        return out

    def determinant(self) -> int:
        """Exact determinant by fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = [row[:] for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k]:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def minors_gcd(self, k: int) -> int:
        """gcd of all k x k minors (0 if none are nonzero); brute force."""
        from itertools import combinations

        if k == 0:
            return 1
        g = 0
        for rows in combinations(range(self.rows), k):
            for cols in combinations(range(self.cols), k):
                sub = IntMatrix([[self.entries[i][j] for j in cols] for i in rows])
                g = gcd(g, sub.determinant())
        return g

    def __repr__(self) -> str:
        return f"IntMatrix({self.entries!r})"


def smith_normal_form(M: IntMatrix) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (D, U, V) with U @ M @ V == D, U and V unimodular, and D
    diagonal with d1 | d2 | ... and all di >= 0.

    Pivoting: smallest nonzero absolute value, deterministic tie-break by
    position; followed by a divisibility repair pass.
    """
    D = M.copy()
    U = IntMatrix.identity(M.rows)
    V = IntMatrix.identity(M.cols)
    a, u, v = D.entries, U.entries, V.entries
    rows, cols = M.rows, M.cols

    def swap_rows(i, j):
        if i != j:
            a[i], a[j] = a[j], a[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for row in a:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        # row[dst] += c * row[src]
        asrc, adst = a[src], a[dst]
        for j in range(cols):
            adst[j] += c * asrc[j]
        usrc, udst = u[src], u[dst]
        for j in range(rows):
            udst[j] += c * usrc[j]

    def add_col(src, dst, c):
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    k = 0
    n = min(rows, cols)
    while k < n:
        # locate the smallest nonzero |entry| in the trailing block
        pivot = None
        for i in range(k, rows):
            ai = a[i]
            for j in range(k, cols):
                x = ai[j]
                if x and (pivot is None or abs(x) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(k, pivot[0])
        swap_cols(k, pivot[1])
        if a[k][k] < 0:
            negate_row(k)
        # clear row and column k, restarting when remainders appear
        while True:
            p = a[k][k]
            dirty = False
            for i in range(k + 1, rows):
                x = a[i][k]
                if x:
                    q = x // p
                    add_row(k, i, -q)
                    if a[i][k]:
                        swap_rows(k, i)
                        if a[k][k] < 0:
                            negate_row(k)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(k + 1, cols):
                x = a[k][j]
                if x:
                    q = x // p
                    add_col(k, j, -q)
                    if a[k][j]:
                        swap_cols(k, j)
                        dirty = True
                        break
            if not dirty:
                break
        k += 1

    # divisibility repair: if d_i does not divide d_j (i < j), fold column j
    # into column i and re-diagonalize the 2x2 block
    changed = True
    while changed:
        changed = False
        for i in range(n):
            if a[i][i] == 0:
                continue
            for j in range(i + 1, n):
                if a[j][j] % a[i][i]:
                    add_col(j, i, 1)
                    _rediagonalize_pair(a, u, v, i, j, rows, cols)
                    changed = True
    # push zero diagonal entries to the end
    diag = [a[i][i] for i in range(n)]
    for i in range(n):
        if diag[i] == 0:
            for j in range(i + 1, n):
                if diag[j]:
                    swap_rows(i, j)
                    swap_cols(i, j)
                    diag[i], diag[j] = diag[j], diag[i]
                    break
    return D, U, V


def _rediagonalize_pair(a, u, v, i, j, rows, cols):
    """Gcd-fix the 2x2 submatrix at (i,i),(j,j) after a column fold."""
    # the fold leaves entries only at (i,i), (j,i), (j,j)
    while a[j][i]:
        p = a[i][i]
        q = a[j][i] // p if p else 0
        if p:
            aj, ai = a[j], a[i]
            for c in range(cols):
                aj[c] -= q * ai[c]
            uj, ui = u[j], u[i]
            for c in range(rows):
                uj[c] -= q * ui[c]
        if a[j][i]:
            a[i], a[j] = a[j], a[i]
            u[i], u[j] = u[j], u[i]
    # clear the (i,j) entry that row operations may have produced
    while a[i][j]:
        p = a[i][i]
        q = a[i][j] // p if p else 0
        if p:
            for row in a:
                row[j] -= q * row[i]
            for row in v:
                row[j] -= q * row[i]
        if a[i][j]:
            for row in a:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]
    if a[i][i] < 0:
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]
    if a[j][j] < 0:
        a[j] = [-x for x in a[j]]
        u[j] = [-x for x in u[j]]


class InvariantFactors:
    """Abelianization data: free rank plus torsion divisor chain d1 | d2 | ..."""

    __slots__ = ("free_rank", "torsion")

    def __init__(self, free_rank: int, torsion: Iterable[int] = ()):
        tor = tuple(int(d) for d in torsion)
        if any(d < 2 for d in tor):
            raise ValueError("torsion entries must be >= 2")
        for x, y in zip(tor, tor[1:]):
            if y % x:
                raise ValueError("torsion chain must satisfy d1 | d2 | ...")
        object.__setattr__(self, "free_rank", int(free_rank))
        object.__setattr__(self, "torsion", tor)

    def __setattr__(self, name, value):
        raise AttributeError("InvariantFactors is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, InvariantFactors)
            and self.free_rank == other.free_rank
            and self.torsion == other.torsion
        )

    def __hash__(self) -> int:
        return hash((self.free_rank, self.torsion))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def display(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __repr__(self) -> str:
        return f"InvariantFactors({self.display()!r})"


def relator_matrix(p: Presentation) -> IntMatrix:
    """Exponent-sum matrix: entry (i, j) = exponent sum of generator j in
    relator i.  A free group yields a 0 x n matrix."""
    return IntMatrix(
        [w.exponent_sums(p.n_gens) for w in p.relators], cols=p.n_gens
    )


def invariants_of_matrix(M: IntMatrix) -> InvariantFactors:
    D, _, _ = smith_normal_form(M)
    diag = [D[i, i] for i in range(min(D.rows, D.cols))]
    rank = sum(1 for d in diag if d)
    torsion = [d for d in diag if d > 1]
    return InvariantFactors(M.cols - rank, torsion)


def abelian_invariants(p: Presentation) -> InvariantFactors:
    """Invariant factors of the abelianization of a presented group."""
    return invariants_of_matrix(relator_matrix(p))


def curve_abelianization(degrees: Sequence[int]) -> InvariantFactors:
    """Abelianized fundamental group of a plane-curve complement from its
    component degrees: free rank r-1 plus one torsion factor gcd(degrees)
    when that gcd exceeds 1."""
    degs = list(degrees)
    if not degs:
        raise ValueError("need at least one component degree")
    if any(d < 1 for d in degs):
        raise ValueError("degrees must be positive")
    tau = 0
    for d in degs:
        tau = gcd(tau, d)
    return InvariantFactors(len(degs) - 1, [tau] if tau > 1 else [])


def abelian_presentation(inv: InvariantFactors, torsion_first: bool = False) -> Presentation:
    """A standard presentation of Z^r (+) Z/d1 (+) ... : one generator per
    factor, all commutators, and one power relator per torsion factor."""
    from .words import Word

    names = [f"t{i+1}" for i in range(len(inv.torsion))] + [
        f"x{i+1}" for i in range(inv.free_rank)
    ]
    p = Presentation(names)
    rels = []
    for i, d in enumerate(inv.torsion):
        rels.append(Word.gen(i) ** d)
    n = len(names)
    for i in range(n):
        for j in range(i + 1, n):
            gi, gj = Word.gen(i), Word.gen(j)
            rels.append(gi * gj * ~gi * ~gj)
    return Presentation(names, rels)
