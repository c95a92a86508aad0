"""Incidence-algebra computations over a fixed vertex ordering.

Matrices are dense arrays of arbitrary-precision integers, indexed by the
contract ordering (level-major, j ascending within a level) so that exports
are reproducible byte for byte.  Inversion is back-substitution on an upper
unitriangular matrix; there is no general inversion and no floating point.

Everything is about the induced sub-poset on the built levels: an interval
[x, y] is fully contained once level(y) is built, so the inverse of the
truncation agrees with the untruncated values entry by entry.
"""

from __future__ import annotations

import json

from .poset import CobwebPoset, Vertex


class IncidenceMatrix:
    """Square exact-integer matrix over the contract vertex ordering.

    Treated as immutable after construction; operations return new matrices,
    so instances are safe to share for concurrent reads.
    """

    def __init__(self, labels: tuple[Vertex, ...], rows: list[list[int]]):
        if len(rows) != len(labels) or any(len(r) != len(labels) for r in rows):
            raise ValueError("matrix shape must match the vertex ordering")
        self.labels = labels
        self.rows = [list(r) for r in rows]
        self._index = {v: i for i, v in enumerate(labels)}

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, v: Vertex) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise ValueError(f"vertex {v} is not in the matrix ordering") from None

    def entry(self, x: Vertex, y: Vertex) -> int:
        return self.rows[self.index(x)][self.index(y)]

    def multiply(self, other: "IncidenceMatrix") -> "IncidenceMatrix":
        if self.labels != other.labels:
            raise ValueError("matrix orderings disagree")
        return IncidenceMatrix(self.labels, mat_mul(self.rows, other.rows))

    def is_identity(self) -> bool:
        return all(
            value == (1 if i == j else 0)
            for i, row in enumerate(self.rows)
            for j, value in enumerate(row)
        )

    def is_zero(self) -> bool:
        return all(not value for row in self.rows for value in row)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IncidenceMatrix):
            return NotImplemented
        return self.labels == other.labels and self.rows == other.rows

    def to_csv(self) -> str:
        return "\n".join(",".join(str(v) for v in row) for row in self.rows) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "labels": [str(v) for v in self.labels],
            "rows": [[str(v) for v in row] for row in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def mat_mul(A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    """Exact dense product; skips zero coefficients and leading zeros of rows."""
    width = len(B[0]) if B else 0
    lead = [next((j for j, b in enumerate(row) if b), width) for row in B]
    out = []
    for row_a in A:
        acc = [0] * width
        for k, a in enumerate(row_a):
            if not a:
                continue
            start = lead[k]
            if start >= width:
                continue
            row_b = B[k]
            acc[start:] = [r + a * b for r, b in zip(acc[start:], row_b[start:])]
        out.append(acc)
    return out


def mat_identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_power(A: list[list[int]], d: int) -> list[list[int]]:
    if d < 0:
        raise ValueError("matrix power must be nonnegative")
    out = mat_identity(len(A))
    for _ in range(d):
        out = mat_mul(out, A)
    return out


def zeta_matrix(P: CobwebPoset) -> IncidenceMatrix:
    """Entry (x, y) = 1 iff x <= y, i.e. x = y or level(x) < level(y).

    Under the contract ordering this is upper unitriangular with the staircase
    block pattern: identity blocks on each level, all-ones blocks above.
    """
    vertices = tuple(P.vertices())
    rows = []
    for x in vertices:
        rows.append([1 if (x == y or x.s < y.s) else 0 for y in vertices])
    return IncidenceMatrix(vertices, rows)


def covering_matrix(P: CobwebPoset) -> IncidenceMatrix:
    """Entry (x, y) = 1 iff y covers x (one level up)."""
    vertices = tuple(P.vertices())
    rows = []
    for x in vertices:
        rows.append([1 if y.s == x.s + 1 else 0 for y in vertices])
    return IncidenceMatrix(vertices, rows)


def mobius_matrix(Z: IncidenceMatrix) -> IncidenceMatrix:
    """Exact integer inverse of an upper unitriangular matrix.

    Back-substitution from the bottom row up: row i of the inverse is
    e_i minus the Z[i][k]-weighted rows below it.  The product with Z is the
    identity on both sides, exactly.
    """
    n = Z.dim
    for i, row in enumerate(Z.rows):
        if row[i] != 1 or any(row[j] for j in range(i)):
            raise ValueError("matrix is not upper unitriangular")
    inverse = [[0] * n for _ in range(n)]
    for i in reversed(range(n)):
        row = inverse[i]
        row[i] = 1
        zi = Z.rows[i]
        for k in range(i + 1, n):
            z = zi[k]
            if not z:
                continue
            below = inverse[k]
            row[k:] = [r - z * b for r, b in zip(row[k:], below[k:])]
    return IncidenceMatrix(Z.labels, inverse)


def chain_count_matrix(P: CobwebPoset) -> IncidenceMatrix:
    """Counts of all chains x = z_0 < ... < z_t = y, any length t >= 0.

    Computed as the geometric sum of the strict incidence matrix, which is
    nilpotent, so the sum terminates on its own.
    """
    Z = zeta_matrix(P)
    n = Z.dim
    eta = [
        [value if i != j else 0 for j, value in enumerate(row)]
        for i, row in enumerate(Z.rows)
    ]
    total = mat_identity(n)
    power = mat_identity(n)
    while True:
        power = mat_mul(power, eta)
        if all(not v for row in power for v in row):
            break
        total = [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(total, power)]
    return IncidenceMatrix(Z.labels, total)


def count_chains(P: CobwebPoset, x: Vertex, y: Vertex) -> int:
    """Number of chains from x to y inclusive, of any length."""
    if not P.leq(x, y):
        raise ValueError(f"{x} and {y} are incomparable")
    return chain_count_matrix(P).entry(x, y)


def maximal_chain_matrix(P: CobwebPoset, distance: int) -> IncidenceMatrix:
    """Power of the covering matrix: saturated-chain counts over that distance."""
    C = covering_matrix(P)
    return IncidenceMatrix(C.labels, mat_power(C.rows, distance))


def count_maximal_chains_matrix(P: CobwebPoset, x: Vertex, y: Vertex) -> int:
    """Saturated chains from x to y, read off a covering-matrix power."""
    if not P.leq(x, y):
        raise ValueError(f"{x} and {y} are incomparable")
    return maximal_chain_matrix(P, y.s - x.s).entry(x, y)
