"""Univariate polynomials and rational functions over exact rationals.

Coefficients are `fractions.Fraction`, stored in ascending degree order, so
every ring operation and the whole Sturm machinery is exact.  Real roots are
isolated into rational intervals certified by Sturm sign-variation counts,
then refined by exact bisection with a short float Newton tail.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Coeff = Union[int, Fraction]


class IdenticallyZeroDenominator(ZeroDivisionError):
    """A substitution produced a rational function with zero denominator."""


@dataclass(frozen=True)
class RatPoly:
    """Polynomial over Q; coeffs[k] multiplies x**k, trailing zeros stripped."""

    coeffs: tuple

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def of(cls, *coeffs: Coeff) -> "RatPoly":
        return cls(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x):
        """Horner evaluation; float input switches to float arithmetic."""
        if isinstance(x, float):
            acc = 0.0
            for c in reversed(self.coeffs):
                acc = acc * x + float(c)
            return acc
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return RatPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPoly(c * other for c in self.coeffs)
        if not isinstance(other, RatPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            for j, cj in enumerate(other.coeffs):
                out[i + j] += ci * cj
        return RatPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "RatPoly"):
        other = _as_poly(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        d, lc = other.degree, other.lc
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            q = rem[-1] / lc
            quot[k] = q
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= q * c
        return RatPoly(quot), RatPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self) -> "RatPoly":
        return RatPoly(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def compose(self, inner: "RatPoly") -> "RatPoly":
        """self(inner(x)), by Horner over the polynomial ring."""
        acc = RatPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + RatPoly.of(c)
        return acc

    def monic(self) -> "RatPoly":
        if self.is_zero:
            return self
        return self * (1 / self.lc)

    def square_free_part(self) -> "RatPoly":
        if self.degree <= 0:
            return self
        g = poly_gcd(self, self.derivative())
        if g.degree <= 0:
            return self
        return self // g

    def __repr__(self) -> str:
        if self.is_zero:
            return "RatPoly(0)"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            terms.append(f"{c}*x^{k}" if k else f"{c}")
        return "RatPoly(" + " + ".join(terms) + ")"


def _as_poly(v) -> RatPoly:
    if isinstance(v, RatPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return RatPoly.of(v)
    raise TypeError(f"cannot treat {v!r} as a polynomial")


X = RatPoly.of(0, 1)


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic gcd by the Euclidean algorithm over Q[x]."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic() if not a.is_zero else a


@dataclass(frozen=True)
class RatFunc:
    """Reduced rational function num/den: den monic, gcd(num, den) = 1."""

    num: RatPoly
    den: RatPoly

    def __init__(self, num, den=RatPoly.of(1)):
        num, den = _as_poly(num), _as_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lc = den.lc
        object.__setattr__(self, "num", num * (1 / lc))
        object.__setattr__(self, "den", den * (1 / lc))

    @classmethod
    def constant(cls, c: Coeff) -> "RatFunc":
        return cls(RatPoly.of(c))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other):
        other = _as_func(other)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_as_func(other))

    def __rsub__(self, other):
        return _as_func(other) + (-self)

    def __mul__(self, other):
        other = _as_func(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_func(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r} / {self.den!r})"


def _as_func(v) -> RatFunc:
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, RatPoly):
        return RatFunc(v)
    if isinstance(v, (int, Fraction)):
        return RatFunc.constant(v)
    raise TypeError(f"cannot treat {v!r} as a rational function")


def poly_on_ratfunc(p: RatPoly, value: RatFunc) -> RatFunc:
    """p(value) for a polynomial p and rational-function argument."""
    acc = RatFunc.constant(0)
    for c in reversed(p.coeffs):
        acc = acc * value + c
    return acc


def ratfunc_substitute(target: RatFunc, var_value: RatFunc) -> RatFunc:
    """Substitute the variable of `target` by `var_value` and reduce."""
    den = poly_on_ratfunc(target.den, var_value)
    if den.is_zero:
        raise IdenticallyZeroDenominator(
            "denominator vanishes identically after substitution")
    return poly_on_ratfunc(target.num, var_value) / den


# ----------------------------------------------------------------------
# Real-root isolation (Sturm) and refinement
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class RootInterval:
    """Open interval (lo, hi) certified to contain exactly one real root.

    Endpoints are never roots of the square-free part.  `multiplicity_free`
    records whether the input polynomial itself was already square-free.
    """

    lo: Fraction
    hi: Fraction
    multiplicity_free: bool


def sturm_chain(p: RatPoly) -> list:
    """Sturm sequence p, p', -rem(...), ... for a square-free polynomial.

    Each element is rescaled by the positive constant 1/|lc|, which leaves
    all sign variations unchanged while keeping coefficients small.
    """
    chain = [p.monic(), p.derivative().monic()]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        rem = -(chain[-2] % chain[-1])
        if rem.is_zero:
            break
        chain.append(rem * (1 / abs(rem.lc)))
    return [q for q in chain if not q.is_zero]


def _variations(values: Sequence[Fraction]) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for s1, s2 in zip(signs, signs[1:]) if s1 != s2)


def _variations_at(chain, x: Fraction) -> int:
    return _variations([q(x) for q in chain])


def _variations_at_inf(chain, sign: int) -> int:
    return _variations([q.lc * (sign ** q.degree) for q in chain])


def count_real_roots(p: RatPoly, lo=None, hi=None) -> int:
    """Number of distinct real roots in (lo, hi]; None means +-infinity."""
    g = p.square_free_part()
    if g.degree <= 0:
        return 0
    chain = sturm_chain(g)
    va = _variations_at_inf(chain, -1) if lo is None else _variations_at(chain, Fraction(lo))
    vb = _variations_at_inf(chain, 1) if hi is None else _variations_at(chain, Fraction(hi))
    return va - vb


def root_bound(p: RatPoly) -> Fraction:
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    if p.degree < 1:
        raise ValueError("constant polynomial has no root bound")
    return 1 + max(abs(c / p.lc) for c in p.coeffs[:-1]) + 1


def _nonroot_between(g: RatPoly, lo: Fraction, hi: Fraction) -> Fraction:
    mid = (lo + hi) / 2
    if g(mid) != 0:
        return mid
    width, k = hi - lo, 4
    while True:
        for cand in (mid + width / k, mid - width / k):
            if lo < cand < hi and g(cand) != 0:
                return cand
        k *= 2


def isolate_real_roots(p: RatPoly) -> list:
    """Disjoint isolating intervals, one per distinct real root, ascending.

    The polynomial is reduced to its square-free part first, so multiple
    roots are reported once.  Interval endpoints are never roots.
    """
    if p.is_zero:
        raise ValueError("cannot isolate roots of the zero polynomial")
    g = p.square_free_part().monic()
    multiplicity_free = g.degree == p.degree
    if g.degree <= 0:
        return []
    chain = sturm_chain(g)
    bound = root_bound(g)
    out = []
    stack = [(-bound, bound,
              _variations_at(chain, -bound), _variations_at(chain, bound))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        k = vlo - vhi
        if k == 0:
            continue
        if k == 1:
            out.append(RootInterval(lo, hi, multiplicity_free))
            continue
        mid = _nonroot_between(g, lo, hi)
        vmid = _variations_at(chain, mid)
        stack.append((lo, mid, vlo, vmid))
        stack.append((mid, hi, vmid, vhi))
    out.sort(key=lambda iv: iv.lo)
    return out


def refine_root(p: RatPoly, interval: RootInterval, tol: float = 1e-12) -> float:
    """Refine an isolated root to a float within tol of the true root.

    Exact bisection narrows the certified bracket below tol (guaranteed),
    then at most three float Newton steps polish the midpoint; any Newton
    step that leaves the bracket or fails to shrink |p| is rejected.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    g = p.square_free_part().monic()
    lo, hi = interval.lo, interval.hi
    flo, fhi = g(lo), g(hi)
    if flo == 0 or fhi == 0 or (flo > 0) == (fhi > 0):
        raise ValueError(f"{interval} does not bracket a simple root of {p!r}")
    width_goal = Fraction(tol)
    while hi - lo > width_goal:
        mid = (lo + hi) / 2
        fmid = g(mid)
        if fmid == 0:
            return float(mid)
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    x = float((lo + hi) / 2)
    lo_f, hi_f = float(lo), float(hi)
    dg = g.derivative()
    for _ in range(3):
        fx, dfx = g(x), dg(x)
        if dfx == 0.0:
            break
        nx = x - fx / dfx
        if not (lo_f <= nx <= hi_f) or abs(g(nx)) >= abs(fx):
            break
        x = nx
    return min(max(x, lo_f), hi_f)
