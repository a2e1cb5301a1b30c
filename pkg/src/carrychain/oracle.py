"""Brute-force ground truth in the group algebra of small symmetric groups.

This module deliberately avoids the closed formulas it is used to check:
shuffles are enumerated digit word by digit word, products are computed by
composing permutations, and the descent transition matrix is tallied class
by class.  Bounds keep everything at desk scale (group-algebra work at
n <= 8, exhaustive shuffle enumeration within a 10^7-word budget).

Orientation conventions, pinned by executable checks:

- A digit word w in {0..b-1}^n sorts deck positions stably by digit; the
  resulting sort permutation tau_w has at most b-1 descents, and the shuffle
  outcome is its inverse sigma_w = tau_w^{-1} (so outcomes are exactly the
  inverses of permutations with at most b-1 descents, and the multiplicity
  of an outcome depends on the descent class of its inverse).
- A chain step sends the deck sigma to sigma_w * sigma (composition of
  functions, outcome applied last).  Tracking descent counts of the deck
  under this step reproduces the transition matrix exactly; the lumping and
  matrix comparisons in ``oracle_transition_matrix`` enforce this.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .combinat import Composition, Permutation, binomial, compositions
from .eulerian import SWordExpansion, idempotent_s_expansion
from .matrix import DescentPolynomial, amazing_matrix

GROUP_ALGEBRA_MAX_N = 8
IDEMPOTENT_MAX_N = 6
TRANSITION_MAX_N = 6
ENUMERATION_BUDGET = 10**7

_TABLE_MAX_N = 6


class OracleBoundError(ValueError):
    """Requested size exceeds the brute-force budget."""


class LumpingViolation(RuntimeError):
    """Two permutations in the same descent class produced different
    transition rows."""

    def __init__(self, n: int, b: int, state: int, perm: Permutation):
        self.n, self.b, self.state = n, b, state
        super().__init__(
            f"lumping violated at n={n}, b={b}: representative {perm} of state {state} "
            f"disagrees with its class row"
        )


class TransitionMismatch(RuntimeError):
    """The enumerated transition matrix disagrees with the closed formula."""

    def __init__(self, n: int, b: int, state: int):
        self.n, self.b, self.state = n, b, state
        super().__init__(f"transition row mismatch at n={n}, b={b}, state {state}")


def _descents(images: tuple[int, ...]) -> int:
    return sum(1 for a, b in zip(images, images[1:]) if a > b)


def _descent_set(images: tuple[int, ...]) -> frozenset[int]:
    return frozenset(i + 1 for i, (a, b) in enumerate(zip(images, images[1:])) if a > b)


def _inverse(images: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(images)
    for pos, img in enumerate(images):
        inv[img - 1] = pos + 1
    return tuple(inv)


@lru_cache(maxsize=None)
def _perm_list(n: int) -> tuple[tuple[tuple[int, ...], ...], dict]:
    perms = tuple(itertools.permutations(range(1, n + 1)))
    return perms, {p: i for i, p in enumerate(perms)}


@lru_cache(maxsize=None)
def _compose_table(n: int) -> list[list[int]]:
    # compose[i][j] = index of perms[i] after perms[j]; only built for n <= 6
    perms, index = _perm_list(n)
    return [[index[tuple(p[q[s] - 1] for s in range(n))] for q in perms] for p in perms]


@dataclass(frozen=True)
class GroupAlgebraElement:
    """An exact rational linear combination of permutations of one S_n."""

    n: int
    terms: dict[Permutation, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {}
        for perm, coeff in self.terms.items():
            if perm.n != self.n:
                raise ValueError(f"term {perm} lives in S_{perm.n}, expected S_{self.n}")
            coeff = Fraction(coeff)
            if coeff != 0:
                cleaned[perm] = coeff
        object.__setattr__(self, "terms", cleaned)

    def coefficient(self, perm: Permutation) -> Fraction:
        return self.terms.get(perm, Fraction(0))

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} != {other.n}")
        merged = dict(self.terms)
        for perm, coeff in other.terms.items():
            merged[perm] = merged.get(perm, Fraction(0)) + coeff
        return GroupAlgebraElement(self.n, merged)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + other.scale(-1)

    def scale(self, c) -> "GroupAlgebraElement":
        c = Fraction(c)
        return GroupAlgebraElement(self.n, {perm: c * coeff for perm, coeff in self.terms.items()})

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return group_product(self, other)

    def invert_support(self) -> "GroupAlgebraElement":
        """Apply the inversion anti-automorphism sigma -> sigma^{-1}."""
        return GroupAlgebraElement(self.n, {perm.inverse(): coeff for perm, coeff in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms


def group_identity(n: int) -> GroupAlgebraElement:
    return GroupAlgebraElement(n, {Permutation.identity(n): Fraction(1)})


def _scaled_integers(element: GroupAlgebraElement) -> tuple[int, list[tuple[tuple[int, ...], int]]]:
    denom = lcm(*(c.denominator for c in element.terms.values())) if element.terms else 1
    items = [
        (perm.images, coeff.numerator * (denom // coeff.denominator))
        for perm, coeff in element.terms.items()
    ]
    return denom, items


def group_product(u: GroupAlgebraElement, v: GroupAlgebraElement) -> GroupAlgebraElement:
    """Bilinear extension of permutation composition (u's permutations are
    applied last).  Coefficients are cleared to a common denominator so the
    convolution runs on integers."""
    if u.n != v.n:
        raise ValueError(f"degree mismatch: {u.n} != {v.n}")
    n = u.n
    if n > GROUP_ALGEBRA_MAX_N:
        raise OracleBoundError(f"group products are limited to n <= {GROUP_ALGEBRA_MAX_N}, got {n}")
    du, u_items = _scaled_integers(u)
    dv, v_items = _scaled_integers(v)
    denom = du * dv
    if n <= _TABLE_MAX_N:
        perms, index = _perm_list(n)
        table = _compose_table(n)
        u_idx = [(index[images], c) for images, c in u_items]
        v_idx = [(index[images], c) for images, c in v_items]
        acc = [0] * len(perms)
        for i, a in u_idx:
            row = table[i]
            for j, b in v_idx:
                acc[row[j]] += a * b
        terms = {Permutation(perms[t]): Fraction(c, denom) for t, c in enumerate(acc) if c}
    else:
        raw: dict[tuple[int, ...], int] = {}
        for p, a in u_items:
            for q, b in v_items:
                key = tuple(p[s - 1] for s in q)
                raw[key] = raw.get(key, 0) + a * b
        terms = {Permutation(images): Fraction(c, denom) for images, c in raw.items() if c}
    return GroupAlgebraElement(n, terms)


def ribbon_sum(comp: Composition) -> GroupAlgebraElement:
    """Sum (coefficient 1) of all permutations with descent composition
    ``comp``."""
    n = comp.weight
    if n > GROUP_ALGEBRA_MAX_N:
        raise OracleBoundError(f"ribbon sums are limited to weight <= {GROUP_ALGEBRA_MAX_N}, got {n}")
    target = comp.descent_set()
    terms = {
        Permutation(images): Fraction(1)
        for images in itertools.permutations(range(1, n + 1))
        if _descent_set(images) == target
    }
    return GroupAlgebraElement(n, terms)


def s_word_to_group(comp: Composition) -> GroupAlgebraElement:
    """The complete word S^I as a sum of permutations: the ribbon sums over
    all compositions whose descent set is contained in that of ``comp``,
    i.e. every permutation whose descent set refines the cut points of I."""
    n = comp.weight
    if n > GROUP_ALGEBRA_MAX_N:
        raise OracleBoundError(f"S-words are limited to weight <= {GROUP_ALGEBRA_MAX_N}, got {n}")
    cuts = comp.descent_set()
    terms = {
        Permutation(images): Fraction(1)
        for images in itertools.permutations(range(1, n + 1))
        if _descent_set(images) <= cuts
    }
    return GroupAlgebraElement(n, terms)


def expansion_to_group(expansion: SWordExpansion) -> GroupAlgebraElement:
    """Push an S-word expansion through ``s_word_to_group`` linearly."""
    n = expansion.n
    acc: dict[tuple[int, ...], Fraction] = {}
    for comp, coeff in expansion.terms.items():
        cuts = comp.descent_set()
        for images in itertools.permutations(range(1, n + 1)):
            if _descent_set(images) <= cuts:
                acc[images] = acc.get(images, Fraction(0)) + coeff
    return GroupAlgebraElement(n, {Permutation(im): c for im, c in acc.items() if c})


def idempotent_group(n: int, k: int) -> GroupAlgebraElement:
    """The k-th Eulerian idempotent realized inside the group algebra."""
    if n > IDEMPOTENT_MAX_N:
        raise OracleBoundError(f"group-algebra idempotents are limited to n <= {IDEMPOTENT_MAX_N}, got {n}")
    return expansion_to_group(idempotent_s_expansion(n, k))


@dataclass(frozen=True)
class ShuffleMultiset:
    """All b^n digit words of a b-shuffle, collected by outcome permutation."""

    n: int
    b: int
    multiplicity: dict[Permutation, int]

    def __post_init__(self) -> None:
        if sum(self.multiplicity.values()) != self.b**self.n:
            raise ValueError(f"multiplicities must account for all {self.b}^{self.n} words")
        if any(p.inverse().descent_count() > self.b - 1 for p in self.multiplicity):
            raise ValueError("support must lie in the inverses of low-descent permutations")

    def total(self) -> int:
        return sum(self.multiplicity.values())

    def to_group_algebra(self) -> GroupAlgebraElement:
        return GroupAlgebraElement(self.n, {p: Fraction(m) for p, m in self.multiplicity.items()})


def enumerate_b_shuffles(n: int, b: int) -> ShuffleMultiset:
    """Exhaust all b^n digit words.  Each word w stably sorts the positions
    1..n by digit, giving the sort permutation tau_w; the recorded outcome is
    sigma_w = tau_w^{-1}.  The support is exactly the set of permutations
    whose inverse has at most b-1 descents."""
    if n < 1 or b < 1:
        raise ValueError(f"need n >= 1 and b >= 1, got n={n}, b={b}")
    if b**n > ENUMERATION_BUDGET:
        raise OracleBoundError(f"enumeration budget exceeded: {b}^{n} > {ENUMERATION_BUDGET}")
    counts: dict[tuple[int, ...], int] = {}
    for word in itertools.product(range(b), repeat=n):
        tau = tuple(pos + 1 for pos in sorted(range(n), key=word.__getitem__))
        outcome = _inverse(tau)
        counts[outcome] = counts.get(outcome, 0) + 1
    return ShuffleMultiset(n, b, {Permutation(images): m for images, m in counts.items()})


def oracle_transition_matrix(n: int, b: int) -> tuple[tuple[Fraction, ...], ...]:
    """The descent-count transition matrix by exhaustive enumeration.

    For every permutation sigma (not just one class representative) the full
    outcome distribution of d(sigma_w * sigma) is tallied; all members of a
    descent class must produce the identical row (lumping), and the result
    must equal the normalized closed-formula matrix.  Violations raise."""
    if n > TRANSITION_MAX_N:
        raise OracleBoundError(f"transition oracle is limited to n <= {TRANSITION_MAX_N}, got {n}")
    shuffles = enumerate_b_shuffles(n, b)
    outcomes = [(p.images, mult) for p, mult in shuffles.multiplicity.items()]
    bn = b**n
    rows: list[tuple[Fraction, ...] | None] = [None] * n
    for sigma in itertools.permutations(range(1, n + 1)):
        state = _descents(sigma) + 1
        tally = [0] * n
        for outcome, mult in outcomes:
            step = tuple(outcome[s - 1] for s in sigma)
            tally[_descents(step)] += mult
        row = tuple(Fraction(c, bn) for c in tally)
        if rows[state - 1] is None:
            rows[state - 1] = row
        elif rows[state - 1] != row:
            raise LumpingViolation(n, b, state, Permutation(sigma))
    result = tuple(row for row in rows if row is not None)
    expected = amazing_matrix(n, b).normalized()
    for state in range(1, n + 1):
        if result[state - 1] != expected[state - 1]:
            raise TransitionMismatch(n, b, state)
    return result


def oracle_descent_polynomial(n: int, m: int) -> DescentPolynomial:
    """Histogram of descent counts (shifted by one) over all m^n shuffle
    words; the enumeration-side twin of the closed-formula polynomial."""
    shuffles = enumerate_b_shuffles(n, m)
    coeffs = [0] * n
    for perm, mult in shuffles.multiplicity.items():
        coeffs[perm.descent_count()] += mult
    return DescentPolynomial(n, m, tuple(coeffs))


def shuffle_element_from_basis(n: int, b: int) -> GroupAlgebraElement:
    """The b-shuffle element assembled from the commutative-basis identity
    S[b] = sum over compositions I with at most b parts of C(b, len(I)) S^I,
    pushed through the S-word realization.  Used to cross-check the
    enumerated multiset (which carries the same coefficients on inverse
    supports)."""
    if n > GROUP_ALGEBRA_MAX_N:
        raise OracleBoundError(f"S-word realization limited to n <= {GROUP_ALGEBRA_MAX_N}, got {n}")
    terms: dict[Composition, Fraction] = {}
    for comp in compositions(n):
        if comp.length <= b:
            terms[comp] = Fraction(binomial(b, comp.length))
    return expansion_to_group(SWordExpansion(n, terms))
