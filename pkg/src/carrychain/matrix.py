"""The carries / riffle-shuffle transition matrix and its exact verification.

The unnormalized transition matrix for deck size n and shuffle parameter b
has entries

    P[i][j] = sum_{r=0..j} (-1)^r C(n+1, r) C(n + b(j-r) - i, n),

indexed by i, j in 1..n, where state i means i-1 descents (equivalently,
carry value i-1 in the base-b addition chain).  Every row sums to b^n, so
dividing by b^n gives an exact stochastic matrix.

Everything claimed about this matrix is an exact identity and is verified
here by exact arithmetic: its right eigenvectors are the columns of the
Worpitzky matrix and its left eigenvectors the rows of the Foulkes matrix
(eigenvalue b^k for the k-th), matrices for different b multiply as
P(b1) P(b2) = P(b1 b2), the stationary distribution is the Eulerian
distribution, and row 1 for parameter b^r is the descent generating
polynomial of b^r-shuffles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .combinat import binomial, eulerian_numbers
from .eulerian import foulkes_matrix, worpitzky_matrix


def amazing_entry(n: int, b: int, i: int, j: int) -> int:
    """One unnormalized transition count: exact alternating sum, always >= 0."""
    if n < 1 or b < 1:
        raise ValueError(f"need n >= 1 and b >= 1, got n={n}, b={b}")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"indices must lie in 1..{n}, got i={i}, j={j}")
    return sum((-1) ** r * binomial(n + 1, r) * binomial(n + b * (j - r) - i, n) for r in range(j + 1))


@dataclass(frozen=True)
class AmazingMatrix:
    """The n x n unnormalized transition matrix for parameter b.

    Entries are nonnegative integers; every row sums to the normalizer b^n.
    """

    n: int
    b: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        bn = self.b**self.n
        for i, row in enumerate(self.entries, start=1):
            if any(e < 0 for e in row):
                raise ValueError(f"negative entry in row {i} of the ({self.n}, {self.b}) matrix")
            if sum(row) != bn:
                raise ValueError(f"row {i} of the ({self.n}, {self.b}) matrix sums to {sum(row)}, expected {bn}")

    @property
    def normalizer(self) -> int:
        return self.b**self.n

    def entry(self, i: int, j: int) -> int:
        return self.entries[i - 1][j - 1]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i - 1]

    def normalized_row(self, i: int) -> tuple[Fraction, ...]:
        bn = self.normalizer
        return tuple(Fraction(e, bn) for e in self.entries[i - 1])

    def normalized(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(self.normalized_row(i) for i in range(1, self.n + 1))


def amazing_matrix(n: int, b: int) -> AmazingMatrix:
    """Build the full matrix (the constructor checks the row-sum and
    nonnegativity invariants)."""
    entries = tuple(tuple(amazing_entry(n, b, i, j) for j in range(1, n + 1)) for i in range(1, n + 1))
    return AmazingMatrix(n, b, entries)


def normalized_row(m: AmazingMatrix, i: int) -> tuple[Fraction, ...]:
    """Row i of the exact stochastic matrix (entries sum to 1)."""
    return m.normalized_row(i)


@dataclass(frozen=True)
class Report:
    """Outcome of one verification suite: which identities were checked and
    which failed.  ``failures`` holds one message per failed identity."""

    name: str
    params: dict
    checked: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        detail = "" if self.ok else " | " + "; ".join(self.failures[:3])
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{status} {self.name} ({params}) [{self.checked} identities]{detail}"


def verify_spectrum(n: int, b: int) -> Report:
    """Check, exactly, that the Worpitzky columns are right eigenvectors and
    the Foulkes rows left eigenvectors of P(n, b), with eigenvalues b^k."""
    P = amazing_matrix(n, b)
    W = worpitzky_matrix(n)
    F = foulkes_matrix(n)
    failures = []
    checked = 0
    for j in range(1, n + 1):
        col = W.column(j)
        lhs = tuple(sum(P.entry(i, t) * col[t - 1] for t in range(1, n + 1)) for i in range(1, n + 1))
        rhs = tuple(b**j * c for c in col)
        checked += 1
        if lhs != rhs:
            failures.append(f"right eigenpair failed: n={n}, b={b}, j={j}")
    for i in range(1, n + 1):
        row = F.row(i)
        lhs = tuple(sum(row[t - 1] * P.entry(t, j) for t in range(1, n + 1)) for j in range(1, n + 1))
        rhs = tuple(b**i * c for c in row)
        checked += 1
        if lhs != rhs:
            failures.append(f"left eigenpair failed: n={n}, b={b}, i={i}")
    return Report("spectrum", {"n": n, "b": b}, checked, tuple(failures))


def stationary_distribution(n: int) -> tuple[Fraction, ...]:
    """The Eulerian distribution (E(n,1), ..., E(n,n)) / n!."""
    nfact = math.factorial(n)
    return tuple(Fraction(e, nfact) for e in eulerian_numbers(n))


def verify_stationary(n: int, b: int) -> Report:
    """Check pi P = b^n pi exactly for the Eulerian distribution pi."""
    P = amazing_matrix(n, b)
    pi = stationary_distribution(n)
    failures = []
    lhs = tuple(sum(pi[t - 1] * P.entry(t, j) for t in range(1, n + 1)) for j in range(1, n + 1))
    rhs = tuple(b**n * p for p in pi)
    if lhs != rhs:
        failures.append(f"stationary identity failed: n={n}, b={b}")
    return Report("stationary", {"n": n, "b": b}, 1, tuple(failures))


def verify_multiplicativity(n: int, b1: int, b2: int) -> Report:
    """Check P(b1) P(b2) = P(b1 b2) on unnormalized entries."""
    A = amazing_matrix(n, b1)
    B = amazing_matrix(n, b2)
    C = amazing_matrix(n, b1 * b2)
    product = tuple(
        tuple(sum(A.entry(i, t) * B.entry(t, j) for t in range(1, n + 1)) for j in range(1, n + 1))
        for i in range(1, n + 1)
    )
    failures = []
    if product != C.entries:
        failures.append(f"multiplicativity failed: n={n}, b1={b1}, b2={b2}")
    return Report("multiplicativity", {"n": n, "b1": b1, "b2": b2}, 1, tuple(failures))


def _determinant(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant by rational Gaussian elimination with pivoting."""
    m = [row[:] for row in rows]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, size):
            factor = m[r][col] * inv
            if factor:
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


def foulkes_determinant(n: int) -> int:
    """Exact determinant of the Foulkes matrix (equals the superfactorial)."""
    F = foulkes_matrix(n)
    det = _determinant([list(row) for row in F.entries])
    if det.denominator != 1:
        raise AssertionError(f"Foulkes determinant came out non-integral: {det}")
    return det.numerator


@dataclass(frozen=True)
class DescentPolynomial:
    """Descent generating vector of m-shuffles: ``coeffs[k-1]`` counts the
    shuffle outcomes (with multiplicity, out of m^n words) having k-1
    descents."""

    n: int
    base: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.n or any(c < 0 for c in self.coeffs):
            raise ValueError(f"expected {self.n} nonnegative coefficients, got {self.coeffs}")

    @property
    def mass(self) -> int:
        return sum(self.coeffs)


def descent_polynomial(n: int, b: int, r: int) -> DescentPolynomial:
    """Descent generating vector of b^r-shuffles, by the closed formula

        c_k = sum_{i=0..k} (-1)^i C(n+1, i) C(m(k-i) + n - 1, n),  m = b^r.

    Only degrees 0..n are computed; c_0 is checked to vanish.
    """
    if n < 1 or b < 1 or r < 1:
        raise ValueError(f"need n, b, r >= 1, got n={n}, b={b}, r={r}")
    m = b**r
    coeffs = []
    for k in range(n + 1):
        c = sum((-1) ** i * binomial(n + 1, i) * binomial(m * (k - i) + n - 1, n) for i in range(k + 1))
        coeffs.append(c)
    if coeffs[0] != 0:
        raise AssertionError(f"degree-0 coefficient must vanish, got {coeffs[0]}")
    return DescentPolynomial(n, m, tuple(coeffs[1:]))
