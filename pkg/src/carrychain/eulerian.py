"""The n-dimensional commutative Eulerian subalgebra.

The subalgebra of degree n has three distinguished bases, all indexed by
k = 1..n:

- ``E[k]``: the orthogonal idempotents.  The internal product is
  coordinatewise in this basis, which is why elements are stored by their
  exact E-coordinates.
- ``S[k]``: the k-shuffle elements, with E-coordinates (k, k^2, ..., k^n).
  ``S[1]`` is the identity of the internal product and
  ``S[p] * S[q] = S[pq]``.
- ``A[k]``: the descent-class sums (all permutations with k-1 descents),
  obtained from the shuffle elements by an alternating binomial sum.

Two basis-change matrices tie everything together and double as the left
and right eigenvector tables of the shuffle/carries transition matrix:

- the Worpitzky matrix ``W``, whose (i, j) entry is the coefficient of x^j
  in the polynomial C(x + n - i, n), expresses E[j] over the A-basis;
- the Foulkes matrix ``F``, whose (i, j) entry is
  sum_r (-1)^r C(n+1, r) (j-r)^i, expresses A[j] over the E-basis.

``F W = I`` exactly, and det F is the superfactorial.

The idempotents also expand over words in the complete-function basis
(products S^I indexed by compositions I); that expansion is what the
brute-force group-algebra oracle consumes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .combinat import Composition, binomial, compositions


def _as_fractions(values) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class EulerianElement:
    """An element of the degree-n Eulerian subalgebra, in E-coordinates.

    ``coords[k-1]`` is the exact coefficient of the k-th idempotent.
    """

    n: int
    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"degree must be positive, got {self.n}")
        if len(self.coords) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(self.coords)}")
        object.__setattr__(self, "coords", _as_fractions(self.coords))

    def _check_degree(self, other: "EulerianElement") -> None:
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} != {other.n}")

    def __add__(self, other: "EulerianElement") -> "EulerianElement":
        self._check_degree(other)
        return EulerianElement(self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "EulerianElement") -> "EulerianElement":
        self._check_degree(other)
        return EulerianElement(self.n, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, c) -> "EulerianElement":
        c = Fraction(c)
        return EulerianElement(self.n, tuple(c * a for a in self.coords))

    def __mul__(self, other: "EulerianElement") -> "EulerianElement":
        return internal_product(self, other)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)


def zero_element(n: int) -> EulerianElement:
    return EulerianElement(n, (Fraction(0),) * n)


def identity_element(n: int) -> EulerianElement:
    """S[1], the identity of the internal product (all E-coordinates 1)."""
    return EulerianElement(n, (Fraction(1),) * n)


def idempotent_element(n: int, k: int) -> EulerianElement:
    """E[k] itself: the k-th coordinate vector."""
    if not 1 <= k <= n:
        raise ValueError(f"idempotent index must lie in 1..{n}, got {k}")
    return EulerianElement(n, tuple(Fraction(1 if i == k else 0) for i in range(1, n + 1)))


def spow_element(n: int, k: int) -> EulerianElement:
    """The k-shuffle element S[k], with E-coordinates (k, k^2, ..., k^n).

    ``k = 0`` gives the zero element: the degree-n component of the empty
    shuffle vanishes for n >= 1.
    """
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    if k < 0:
        raise ValueError(f"shuffle parameter must be nonnegative, got {k}")
    return EulerianElement(n, tuple(Fraction(k**i) for i in range(1, n + 1)))


def class_element(n: int, p: int) -> EulerianElement:
    """The descent-class sum A[p] (permutations with p-1 descents), in
    E-coordinates.

    Expanding A[p] = sum_{r=0..p} (-1)^r C(n+1, r) S[p-r] coordinatewise
    gives coordinate i = sum_r (-1)^r C(n+1, r) (p-r)^i, with 0^i = 0 since
    S[0] is the zero element.
    """
    if not 1 <= p <= n:
        raise ValueError(f"class index must lie in 1..{n}, got {p}")
    coords = []
    for i in range(1, n + 1):
        coords.append(Fraction(sum((-1) ** r * binomial(n + 1, r) * (p - r) ** i for r in range(p + 1))))
    return EulerianElement(n, tuple(coords))


def internal_product(u: EulerianElement, v: EulerianElement) -> EulerianElement:
    """Coordinatewise product: the internal product is diagonal on the
    idempotent basis (E[k] * E[l] = delta_kl E[k])."""
    u._check_degree(v)
    return EulerianElement(u.n, tuple(a * b for a, b in zip(u.coords, v.coords)))


def pairing(u: EulerianElement, v: EulerianElement) -> Fraction:
    """The symmetric bilinear form making the idempotents orthonormal."""
    u._check_degree(v)
    return sum((a * b for a, b in zip(u.coords, v.coords)), Fraction(0))


@dataclass(frozen=True)
class BasisMatrix:
    """An exact n x n change-of-basis matrix with 1-based index helpers."""

    n: int
    entries: tuple[tuple[Fraction, ...], ...]
    from_basis: str
    to_basis: str

    def __post_init__(self) -> None:
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise ValueError(f"expected a {self.n}x{self.n} matrix")
        object.__setattr__(self, "entries", tuple(_as_fractions(row) for row in self.entries))

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i - 1][j - 1]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i - 1]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j - 1] for row in self.entries)


def worpitzky_matrix(n: int) -> BasisMatrix:
    """W(i, j) = coefficient of x^j in C(x + n - i, n), for i, j in 1..n.

    Column j holds the A-basis coordinates of the idempotent E[j]; the
    columns are the right eigenvectors of every shuffle transition matrix.
    The polynomial is expanded by exact multiplication of its n linear
    factors followed by division by n!.
    """
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    nfact = math.factorial(n)
    rows = []
    for i in range(1, n + 1):
        # prod_{s=0..n-1} (x + n - i - s), integer coefficients, degree n
        coeffs = [1]
        for s in range(n):
            const = n - i - s
            nxt = [0] * (len(coeffs) + 1)
            for t, c in enumerate(coeffs):
                nxt[t + 1] += c
                nxt[t] += const * c
            coeffs = nxt
        # constant term vanishes because the factor with s = n - i is x
        rows.append(tuple(Fraction(coeffs[j], nfact) for j in range(1, n + 1)))
    return BasisMatrix(n, tuple(rows), from_basis="E", to_basis="A")


def foulkes_matrix(n: int) -> BasisMatrix:
    """F(i, j) = sum_{r=0..j} (-1)^r C(n+1, r) (j-r)^i, with 0^i = 0.

    Column j holds the E-coordinates of the class sum A[j]; the rows are
    the left eigenvectors of every shuffle transition matrix, and the matrix
    is the inverse of the Worpitzky matrix.  Its last row is the row of
    Eulerian numbers.
    """
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    columns = [class_element(n, j).coords for j in range(1, n + 1)]
    rows = tuple(tuple(columns[j][i] for j in range(n)) for i in range(n))
    return BasisMatrix(n, rows, from_basis="A", to_basis="E")


@dataclass
class SWordExpansion:
    """An exact linear combination of complete-basis words S^I, all of one
    weight n.  Keys are compositions of n; zero coefficients are dropped."""

    n: int
    terms: dict[Composition, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {}
        for comp, coeff in self.terms.items():
            if comp.weight != self.n:
                raise ValueError(f"term {comp} has weight {comp.weight}, expected {self.n}")
            coeff = Fraction(coeff)
            if coeff != 0:
                cleaned[comp] = coeff
        self.terms = cleaned

    def coefficient(self, comp: Composition) -> Fraction:
        return self.terms.get(comp, Fraction(0))

    def __add__(self, other: "SWordExpansion") -> "SWordExpansion":
        if self.n != other.n:
            raise ValueError(f"weight mismatch: {self.n} != {other.n}")
        merged = dict(self.terms)
        for comp, coeff in other.terms.items():
            merged[comp] = merged.get(comp, Fraction(0)) + coeff
        return SWordExpansion(self.n, merged)

    def sorted_terms(self) -> list[tuple[Composition, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: item[0].parts)


def _log_coefficient(length: int) -> Fraction:
    # coefficient of any word of that length in log of the complete series
    return Fraction((-1) ** (length - 1), length)


def idempotent_s_expansion(n: int, k: int) -> SWordExpansion:
    """Expansion of the idempotent E[k] over S-words.

    Realized as the degree-n part of L^k / k!, where
    L = sum_I (-1)^(len(I)-1)/len(I) S^I is the logarithm of the complete
    series and words multiply by concatenation.  The coefficient of S^I is
    therefore a sum over the ways to split I into k consecutive blocks.
    """
    if not 1 <= k <= n:
        raise ValueError(f"idempotent index must lie in 1..{n}, got {k}")
    kfact = math.factorial(k)
    terms: dict[Composition, Fraction] = {}
    for comp in compositions(n):
        m = comp.length
        if m < k:
            continue
        total = Fraction(0)
        for cuts in itertools.combinations(range(1, m), k - 1):
            bounds = (0, *cuts, m)
            prod = Fraction(1)
            for a, b in zip(bounds, bounds[1:]):
                prod *= _log_coefficient(b - a)
            total += prod
        if total:
            terms[comp] = total / kfact
    return SWordExpansion(n, terms)


def fundamental_evaluation(comp: Composition, N: int) -> int:
    """Number of ways to realize the descent class of ``comp`` with letters
    from an N-letter alphabet: C(N + n - len(comp), n) where n is the
    weight.  This is the multiplicity with which the class appears in an
    N-shuffle."""
    if N < 0:
        raise ValueError(f"alphabet size must be nonnegative, got {N}")
    return binomial(N + comp.weight - comp.length, comp.weight)
