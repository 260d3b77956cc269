"""Irreducible factors of cycle independence polynomials.

For odd n, I(C_n, x) factors over the integers as the product of the
polynomials f_m over the divisors m of n, where f_m is the minimal
polynomial of the roots

    c_i = -1 / (2 + 2 cos((2i - 1) pi / n))        gcd(2i - 1, n) = 1.

Two independent routes construct f_n:

* the transform route builds the minimal polynomial of 2 cos(pi k / n)
  from a cyclotomic polynomial by a palindromic fold, translates it by -2
  and reverses it with alternating signs;
* the division route divides I(C_n, x) (from the closed-form coefficients)
  by the f_m of the proper divisors, exactly.

They share no code beyond integer polynomial arithmetic, so their
agreement is a meaningful cross-check, enforced by the test suite.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .intpoly import (
    ExactDivisionError,
    IntPoly,
    ONE,
    cycle_poly,
    eval_float,
    poly_exact_div,
    primitive_part,
)


class InternalConsistencyError(AssertionError):
    """An internally-derived exact construction failed; not a user error."""


def euler_phi(m: int) -> int:
    """Euler's totient by trial-division factorization."""
    if m < 1:
        raise ValueError(f"totient requires m >= 1, got {m}")
    out = m
    rest = m
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            out -= out // p
            while rest % p == 0:
                rest //= p
        p += 1
    if rest > 1:
        out -= out // rest
    return out


def divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


_cyclotomic_memo: dict[int, IntPoly] = {}


def cyclotomic_poly(m: int) -> IntPoly:
    """The m-th cyclotomic polynomial, by exact division of x^m - 1."""
    if m < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {m}")
    hit = _cyclotomic_memo.get(m)
    if hit is not None:
        return hit
    poly = IntPoly([-1] + [0] * (m - 1) + [1])
    for d in range(1, m):
        if m % d == 0:
            poly = poly_exact_div(poly, cyclotomic_poly(d))
    _cyclotomic_memo[m] = poly
    return poly


def min_poly_2cos(m: int) -> IntPoly:
    """Monic minimal polynomial of 2 cos(2 pi k / m) over the integers
    (k coprime to m), of degree phi(m)/2, for m >= 3.

    Obtained by the palindromic fold: writing Phi_m(y) = y^d * psi(y + 1/y)
    with d = phi(m)/2 and solving for psi's coefficients from the top degree
    down by exact integer elimination.  Any inexact step is an internal
    invariant violation, never rounded.
    """
    if m < 3:
        raise ValueError(f"min_poly_2cos requires m >= 3, got {m}")
    phi = cyclotomic_poly(m)
    d = euler_phi(m) // 2
    if phi.degree != 2 * d:
        raise InternalConsistencyError(
            f"cyclotomic degree {phi.degree} is not 2*{d} at m={m}"
        )
    rem = list(phi.coeffs)
    out = [0] * (d + 1)
    for j in range(d, -1, -1):
        c = rem[d + j]
        out[j] = c
        if c:
            # subtract c * y^(d-j) * (y^2 + 1)^j  ==  c * y^d * (y + 1/y)^j
            for i in range(j + 1):
                rem[d + j - 2 * i] -= c * math.comb(j, i)
    if any(rem):
        raise InternalConsistencyError(
            f"palindromic fold of cyclotomic polynomial {m} left a remainder"
        )
    psi = IntPoly(out)
    if psi.coeffs[-1] != 1:
        raise InternalConsistencyError(f"fold of Phi_{m} is not monic")
    return psi


def f_poly_by_transform(n: int) -> IntPoly:
    """f_n via the minimal polynomial of 2 cos(pi k / n), translated by -2
    and reversed with alternating signs."""
    _require_odd(n)
    if n == 1:
        return ONE
    g = min_poly_2cos(2 * n)
    d = g.degree
    h = _compose_x_minus_2(g)
    f = IntPoly((-1) ** k * h[d - k] for k in range(d + 1))
    content, prim = primitive_part(f)
    if content != 1 or prim[0] != 1:
        raise InternalConsistencyError(
            f"transform-route f_{n} is not primitive with constant term 1"
        )
    return prim


def _compose_x_minus_2(g: IntPoly) -> IntPoly:
    """g(x - 2), by Horner over the coefficient sequence."""
    shift = IntPoly([-2, 1])
    acc = IntPoly()
    for c in reversed(g.coeffs):
        acc = acc * shift + IntPoly([c])
    return acc


_f_division_memo: dict[int, IntPoly] = {}


def f_poly_by_division(n: int) -> IntPoly:
    """f_n by exact division of I(C_n, x) by the f_m of proper divisors.

    An inexact division would falsify the factorization of I(C_n, x) and is
    raised as ExactDivisionError rather than patched over.
    """
    _require_odd(n)
    if n == 1:
        return ONE
    hit = _f_division_memo.get(n)
    if hit is not None:
        return hit
    poly = cycle_poly(n)
    for m in divisors(n):
        if 3 <= m < n:
            poly = poly_exact_div(poly, f_poly_by_division(m))
    _f_division_memo[n] = poly
    return poly


@dataclass(frozen=True)
class FactorSet:
    """The factorization I(C_n, x) = prod over divisors m >= 3 of f_m."""

    n: int
    factors: dict[int, IntPoly]
    route: str

    def product(self) -> IntPoly:
        out = ONE
        for m in sorted(self.factors):
            out = out * self.factors[m]
        return out


def factorize_cycle_poly(n: int, route: str = "division") -> FactorSet:
    """Factor I(C_n, x) into {m: f_m for m | n, m >= 3}, verifying the
    product reassembles I(C_n, x) exactly."""
    _require_odd(n)
    if n < 3:
        raise ValueError(f"factorization is defined for odd n >= 3, got {n}")
    if route == "division":
        make = f_poly_by_division
    elif route == "transform":
        make = f_poly_by_transform
    else:
        raise ValueError(f"unknown route {route!r}")
    factors = {m: make(m) for m in divisors(n) if m >= 3}
    fs = FactorSet(n=n, factors=factors, route=route)
    expected = cycle_poly(n)
    if fs.product() != expected:
        raise ExactDivisionError(
            f"factor product does not reassemble the cycle polynomial at n={n}"
        )
    for m, f in factors.items():
        if f[0] != 1 or f.coeffs[-1] <= 0:
            raise InternalConsistencyError(f"f_{m} is not normalized")
        if f.degree != euler_phi(m) // 2:
            raise InternalConsistencyError(
                f"deg f_{m} = {f.degree} != phi({m})/2 = {euler_phi(m) // 2}"
            )
    return fs


@dataclass(frozen=True)
class RootSpec:
    """Closed-form roots of I(C_n, x), tagged with gcd(2i - 1, n)."""

    n: int
    roots: tuple[tuple[int, float, int], ...]  # (i, c_i, gcd(2i-1, n))


def root_values(n: int) -> RootSpec:
    _require_odd(n)
    roots = []
    for i in range(1, n // 2 + 1):
        c = -1.0 / (2.0 + 2.0 * math.cos((2 * i - 1) * math.pi / n))
        roots.append((i, c, math.gcd(2 * i - 1, n)))
    return RootSpec(n=n, roots=tuple(roots))


@dataclass(frozen=True)
class RootCheckReport:
    tolerance: float
    max_residual: float
    residuals: tuple[tuple[int, float], ...] = field(repr=False)

    @property
    def ok(self) -> bool:
        return self.max_residual < self.tolerance


DEFAULT_ROOT_TOLERANCE = 1e-9


def check_roots(f: IntPoly, spec: RootSpec, which="all",
                tolerance: float = DEFAULT_ROOT_TOLERANCE) -> RootCheckReport:
    """Evaluate f at the closed-form roots and report relative residuals.

    which selects the divisor class: "coprime" keeps roots with
    gcd(2i - 1, n) = 1 (the roots belonging to the top factor), an integer
    divisor m keeps the roots belonging to that factor, and "all" keeps
    every root (for the full cycle polynomial).  The residual scale is
    max|coeff| * max(1, |c_i|)^deg, so the large-magnitude root near the
    cos = -1 end does not drown the check.
    """
    if which == "coprime":
        which = spec.n
    if which != "all":
        if spec.n % which != 0:
            raise ValueError(f"{which} does not divide {spec.n}")
        wanted_tag = spec.n // which
    coeff_scale = max(abs(c) for c in f.coeffs)
    residuals = []
    worst = 0.0
    for i, c, tag in spec.roots:
        if which != "all" and tag != wanted_tag:
            continue
        scale = coeff_scale * max(1.0, abs(c)) ** max(f.degree, 0)
        r = abs(eval_float(f, c)) / scale
        residuals.append((i, r))
        worst = max(worst, r)
    return RootCheckReport(
        tolerance=tolerance, max_residual=worst, residuals=tuple(residuals)
    )


def _require_odd(n: int):
    if n < 1 or n % 2 == 0:
        raise ValueError(f"defined for odd n >= 1, got {n}")
