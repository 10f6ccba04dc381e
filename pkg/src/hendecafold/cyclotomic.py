"""Vertex-cosine polynomials of regular n-gons and fold constructibility.

For odd n, summing the symmetric power terms z**k + z**(-k) over the vertex
equation of the regular n-gon collapses it to a degree-(n-1)/2 polynomial in
t = z + 1/z = 2*cos(angle).  For n = 11 that polynomial is the quintic
t^5 + t^4 - 4t^3 - 3t^2 + 3t + 1, which is what the two-fold solver solves.

Constructibility by a sequence of single folds is governed by the prime
shape n = 2^r * 3^s * p1 * ... * pk with distinct primes pi = 2^m * 3^n + 1
greater than 3; `classify_constructible` produces the full witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .polynomials import RatPoly


class InvalidN(ValueError):
    """Polygon side count outside the supported domain."""


@dataclass(frozen=True)
class NgonPolynomial:
    n: int
    poly: RatPoly


@dataclass(frozen=True)
class PierpontWitness:
    """A prime factor p together with exponents showing p = 2^m * 3^k + 1."""

    prime: int
    two_exp: int
    three_exp: int


@dataclass(frozen=True)
class ConstructibilityReport:
    n: int
    r: int
    s: int
    pierpont_primes: tuple
    single_fold_constructible: bool
    obstructions: tuple


def chebyshev_term(k: int) -> RatPoly:
    """Polynomial expressing z**k + z**(-k) in t = z + 1/z.

    Runs the recurrence p0 = 2, p1 = t, p_{k+1} = t*p_k - p_{k-1}.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    prev, cur = RatPoly.of(2), RatPoly.of(0, 1)
    if k == 0:
        return prev
    t = cur
    for _ in range(k - 1):
        prev, cur = cur, t * cur - prev
    return cur


def halved_cyclotomic(n: int) -> NgonPolynomial:
    """Degree-(n-1)/2 polynomial in t = 2*cos satisfied by the n-gon vertices.

    Sums 1 + sum_{k=1}^{(n-1)/2} (z^k + z^-k) expressed in t, i.e. the
    symmetrized (z^n - 1)/(z - 1); monic.  Only odd n >= 3 is supported.
    """
    if n < 3 or n % 2 == 0:
        raise InvalidN(f"need odd n >= 3, got {n}")
    acc = RatPoly.of(1)
    for k in range(1, (n - 1) // 2 + 1):
        acc = acc + chebyshev_term(k)
    return NgonPolynomial(n, acc.monic())


def vertex_cosines(n: int) -> list:
    """[2*cos(2*pi*k/n) for k = 1..n//2], descending."""
    if n < 3:
        raise InvalidN(f"need n >= 3, got {n}")
    return [2.0 * math.cos(2.0 * math.pi * k / n) for k in range(1, n // 2 + 1)]


def _factorize(n: int) -> dict:
    factors = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def _pierpont_split(p: int):
    """Exponents (m, k) with p - 1 = 2^m * 3^k, or None if p is not Pierpont."""
    rest, m, k = p - 1, 0, 0
    while rest % 2 == 0:
        rest //= 2
        m += 1
    while rest % 3 == 0:
        rest //= 3
        k += 1
    return (m, k) if rest == 1 else None


def classify_constructible(n: int) -> ConstructibilityReport:
    """Decide single-fold constructibility of the regular n-gon, with witness.

    Constructible iff n = 2^r * 3^s * p1...pk for distinct Pierpont primes
    pi > 3 (powers of 2 and 3 are absorbed into r and s; a repeated Pierpont
    prime is an obstruction, as is any prime factor q with q - 1 not of the
    form 2^m * 3^k).
    """
    if n < 3:
        raise InvalidN(f"need n >= 3, got {n}")
    factors = _factorize(n)
    r = factors.pop(2, 0)
    s = factors.pop(3, 0)
    witnesses = []
    obstructions = []
    for p in sorted(factors):
        exp = factors[p]
        split = _pierpont_split(p)
        if split is None:
            obstructions.append(f"prime factor {p} is not a Pierpont prime")
            continue
        if exp > 1:
            obstructions.append(f"Pierpont prime {p} appears with exponent {exp}")
            continue
        witnesses.append(PierpontWitness(p, split[0], split[1]))
    return ConstructibilityReport(
        n=n,
        r=r,
        s=s,
        pierpont_primes=tuple(witnesses),
        single_fold_constructible=not obstructions,
        obstructions=tuple(obstructions),
    )
