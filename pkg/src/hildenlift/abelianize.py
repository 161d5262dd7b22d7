"""Smith normal form over the integers and abelian invariants of presentations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

IntMatrix = list[list[int]]


def identity_matrix(k: int) -> IntMatrix:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(row[t] * b[t][j] for t in range(inner)) for j in range(cols)] for row in a]


def determinant(a: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    k = len(a)
    if k == 0:
        return 1
    m = [row[:] for row in a]
    sign, prev = 1, 1
    for i in range(k - 1):
        if m[i][i] == 0:
            for r in range(i + 1, k):
                if m[r][i] != 0:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
        prev = m[i][i]
    return sign * m[k - 1][k - 1]


def smith_normal_form(M: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(S, U, V)`` with ``S = U M V``, ``U``, ``V`` unimodular.

    ``S`` is diagonal with nonnegative entries ``d_1 | d_2 | ...``.  The pivot
    at each stage is the entry of smallest nonzero absolute value (first in
    row-major order on ties).
    """
    S = [list(map(int, row)) for row in M]
    rows = len(S)
    cols = len(S[0]) if rows else 0
    if any(len(r) != cols for r in S):
        raise ValueError("ragged matrix")
    U = identity_matrix(rows)
    V = identity_matrix(cols)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for mat in (S, V):
            for row in mat:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        for mat in (S, U):
            rd, rs = mat[dst], mat[src]
            for c in range(len(rd)):
                rd[c] += q * rs[c]

    def add_col(dst, src, q):
        for mat in (S, V):
            for row in mat:
                row[dst] += q * row[src]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    v = S[i][j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
            if best is None:
                return S, U, V
            _, pi, pj = best
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = S[t][t]
            clean = True
            for i in range(t + 1, rows):
                if S[i][t]:
                    add_row(i, t, -(S[i][t] // p))
                    clean = clean and S[i][t] == 0
            for j in range(t + 1, cols):
                if S[t][j]:
                    add_col(j, t, -(S[t][j] // p))
                    clean = clean and S[t][j] == 0
            if not clean:
                continue
            bad = next((i for i in range(t + 1, rows)
                        if any(S[i][j] % p for j in range(t + 1, cols))), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if S[t][t] < 0:
            add_row(t, t, -2)
    return S, U, V


def invariant_factors(M: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal entries of the Smith form."""
    S, _, _ = smith_normal_form(M)
    return [S[i][i] for i in range(min(len(S), len(S[0]) if S else 0)) if S[i][i]]


# -- presentations --------------------------------------------------------------

@dataclass(frozen=True)
class Presentation:
    """Generators by name; relators as Tietze words (``+g`` / ``-g``, 1-based)."""

    generators: tuple[str, ...]
    relators: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        k = len(self.generators)
        for rel in self.relators:
            for a in rel:
                if a == 0 or abs(a) > k:
                    raise ValueError(f"relator letter {a} outside the {k} generators")

    def relation_matrix(self) -> IntMatrix:
        k = len(self.generators)
        out = []
        for rel in self.relators:
            row = [0] * k
            for a in rel:
                row[abs(a) - 1] += 1 if a > 0 else -1
            out.append(row)
        return out


@dataclass(frozen=True)
class AbelianInvariants:
    betti: int
    torsion: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.betti < 0:
            raise ValueError("negative betti number")
        for d in self.torsion:
            if d < 2:
                raise ValueError("torsion coefficients must be >= 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion coefficients must form a divisibility chain")

    def __str__(self):
        parts = ["Z"] * self.betti + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def abelian_invariants(p: Presentation) -> AbelianInvariants:
    k = len(p.generators)
    mat = p.relation_matrix()
    if not mat:
        return AbelianInvariants(k)
    diag = invariant_factors(mat)
    return AbelianInvariants(k - len(diag), tuple(d for d in diag if d > 1))


def min_generators_lower_bound(inv: AbelianInvariants) -> int:
    """Minimal number of generators of the abelian group."""
    return inv.betti + len(inv.torsion)


def rs_cycle_presentation(n: int) -> Presentation:
    """Generators s_i, r_i, t1 with the single relator r1..rn sn..s1 t1."""
    gens = tuple(f"s{i}" for i in range(1, n + 1)) + tuple(f"r{i}" for i in range(1, n + 1)) + ("t1",)
    idx = {g: i for i, g in enumerate(gens, 1)}
    rel = [idx[f"r{i}"] for i in range(1, n + 1)]
    rel += [idx[f"s{i}"] for i in range(n, 0, -1)]
    rel.append(idx["t1"])
    return Presentation(gens, (tuple(rel),))
