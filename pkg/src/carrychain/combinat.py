"""Basic combinatorial objects: binomials, compositions, permutations,
descent statistics, Eulerian numbers.

Conventions used throughout the package:

- Permutations are written in one-line notation with 1-based values, so
  ``Permutation((3, 1, 2))`` maps 1 -> 3, 2 -> 1, 3 -> 2.
- Positions are 1-based as well: position ``i`` of a permutation ``p`` is a
  descent when ``p(i) > p(i+1)``, for ``i`` in ``1..n-1``.
- A composition of ``n`` is an ordered tuple of positive parts summing to
  ``n``; its partial sums (all but the last) encode a descent set.
- Arithmetic is exact everywhere: Python integers and ``fractions.Fraction``.
  No floating point is used in this module or any module built on it.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


def binomial(a: int, k: int) -> int:
    """Binomial coefficient C(a, k) with the lattice-point convention.

    Returns 0 when ``0 <= a < k`` and also when ``a < 0``.  Negative upper
    arguments never carry weight in any formula of this package; returning 0
    (rather than the polynomial extension) keeps every alternating sum a
    plain count.

    >>> binomial(5, 2)
    10
    >>> binomial(1, 2)
    0
    >>> binomial(-3, 2)
    0
    """
    if k < 0:
        raise ValueError(f"binomial: lower argument must be nonnegative, got {k}")
    if a < 0:
        return 0
    return math.comb(a, k)


def superfactorial(n: int) -> int:
    """Product n! (n-1)! ... 2! 1!.

    >>> superfactorial(4)
    288
    """
    if n < 1:
        raise ValueError(f"superfactorial: n must be positive, got {n}")
    return math.prod(math.factorial(m) for m in range(1, n + 1))


@dataclass(frozen=True)
class Composition:
    """An ordered tuple of positive integer parts.

    ``weight`` is the sum of the parts, ``length`` the number of parts.  The
    empty composition (weight 0) is legal.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(not isinstance(p, int) or p < 1 for p in self.parts):
            raise ValueError(f"composition parts must be positive integers: {self.parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def descent_set(self) -> frozenset[int]:
        """Partial sums of all but the last part (a subset of 1..weight-1)."""
        sums = []
        acc = 0
        for p in self.parts[:-1]:
            acc += p
            sums.append(acc)
        return frozenset(sums)

    @classmethod
    def from_descent_set(cls, n: int, positions: Iterable[int]) -> "Composition":
        """The composition of ``n`` whose partial sums are ``positions``."""
        if n < 0:
            raise ValueError(f"weight must be nonnegative, got {n}")
        cuts = sorted(positions)
        if cuts and not (1 <= cuts[0] and cuts[-1] <= n - 1 and len(set(cuts)) == len(cuts)):
            raise ValueError(f"descent positions must be distinct and within 1..{n - 1}: {cuts}")
        if n == 0:
            return cls(())
        bounds = [0, *cuts, n]
        return cls(tuple(b - a for a, b in zip(bounds, bounds[1:])))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


def compositions(n: int) -> list[Composition]:
    """All compositions of ``n``, in lexicographic order on the parts.

    There are 2^(n-1) of them for n >= 1, and exactly the empty composition
    for n = 0.  The order is the canonical one used for serialization.

    >>> [c.parts for c in compositions(3)]
    [(1, 1, 1), (1, 2), (2, 1), (3,)]
    """
    if n < 0:
        raise ValueError(f"compositions: n must be nonnegative, got {n}")
    out: list[Composition] = []

    def extend(prefix: list[int], remaining: int) -> None:
        if remaining == 0:
            out.append(Composition(tuple(prefix)))
            return
        for part in range(1, remaining + 1):
            prefix.append(part)
            extend(prefix, remaining - part)
            prefix.pop()

    extend([], n)
    return out


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation (1-based values)."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def __call__(self, i: int) -> int:
        """Image of the 1-based point ``i``."""
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Function composition: (p * q)(i) = p(q(i))."""
        if self.n != other.n:
            raise ValueError(f"cannot compose permutations of sizes {self.n} and {other.n}")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for pos, img in enumerate(self.images):
            inv[img - 1] = pos + 1
        return Permutation(tuple(inv))

    def descent_set(self) -> frozenset[int]:
        """Positions i with p(i) > p(i+1), 1-based."""
        return frozenset(i + 1 for i in range(self.n - 1) if self.images[i] > self.images[i + 1])

    def descent_count(self) -> int:
        return sum(1 for i in range(self.n - 1) if self.images[i] > self.images[i + 1])

    def descent_composition(self) -> Composition:
        return Composition.from_descent_set(self.n, self.descent_set())

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.images)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of one-line notation."""
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


def descent_statistics(p: Permutation) -> tuple[frozenset[int], int, Composition]:
    """(descent set, descent count, descent composition) of ``p``.

    >>> descent_statistics(Permutation((1, 3, 2)))
    (frozenset({2}), 1, Composition(parts=(2, 1)))
    """
    return p.descent_set(), p.descent_count(), p.descent_composition()


@lru_cache(maxsize=None)
def _eulerian(n: int, k: int) -> int:
    if k < 1 or k > n:
        return 0
    if n == 1:
        return 1
    return k * _eulerian(n - 1, k) + (n - k + 1) * _eulerian(n - 1, k - 1)


def eulerian_number(n: int, k: int) -> int:
    """Number of permutations of S_n with exactly k-1 descents (1 <= k <= n).

    Computed by the two-term recurrence
    E(n, k) = k E(n-1, k) + (n-k+1) E(n-1, k-1).

    >>> eulerian_number(3, 2)
    4
    """
    if n < 1:
        raise ValueError(f"eulerian_number: n must be positive, got {n}")
    if not 1 <= k <= n:
        raise ValueError(f"eulerian_number: k must lie in 1..{n}, got {k}")
    return _eulerian(n, k)


def eulerian_numbers(n: int) -> tuple[int, ...]:
    """The full row (E(n,1), ..., E(n,n))."""
    return tuple(eulerian_number(n, k) for k in range(1, n + 1))
