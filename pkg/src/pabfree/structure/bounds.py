"""Exact big-integer evaluation of the chromatic-bound formulas.

The Ramsey-type function is R(p, q) = ceil((p + q) ** (1 / c)) for a
configurable constant c (a positive rational, default 1). The default
degree function is d(H, s) = s ** (500 |V(H)|^2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

DFunction = Callable[[int, int], int]


class BoundsError(ValueError):
    pass


def iroot_ceil(x: int, k: int) -> int:
    """Smallest integer y >= 0 with y**k >= x."""
    if x < 0 or k < 1:
        raise BoundsError("iroot_ceil needs x >= 0 and k >= 1")
    if x < 2:
        return x
    y = 1 << -(-x.bit_length() // k)  # y**k >= x
    while True:
        # Newton step towards floor root
        z = ((k - 1) * y + x // y ** (k - 1)) // k
        if z >= y:
            break
        y = z
    while y ** k < x:
        y += 1
    while y > 0 and (y - 1) ** k >= x:
        y -= 1
    return y


def ceil_power(base: int, exponent: Fraction) -> int:
    """ceil(base ** exponent) for integer base >= 0 and rational exponent >= 0."""
    exponent = Fraction(exponent)
    if exponent < 0:
        raise BoundsError("negative exponent")
    if exponent.denominator == 1:
        return base ** exponent.numerator
    return iroot_ceil(base ** exponent.numerator, exponent.denominator)


def ramsey_formula(p: int, q: int, c: Fraction) -> int:
    return ceil_power(p + q, 1 / Fraction(c))


def poly_degree_function(h_vertices: int, s: int) -> int:
    return s ** (500 * h_vertices ** 2)


D_FUNCTIONS: dict[str, DFunction] = {"poly": poly_degree_function}


@dataclass(frozen=True)
class BoundSheet:
    a: int
    omega: int
    tau: int
    c_const: Fraction
    d_function: str
    f: int
    s: int
    d_value: int
    term_degenerate: int
    term_dominating: int
    term_cutset: int
    b: int
    z_bound: int
    claim3_bound: int
    claim5_bound: int
    claim6_bound: int
    chi_threshold: Fraction
    chi_bound_given_tau: int
    final_bound: int


def compute_bounds(a: int, omega: int, tau: int, *, c_const: Fraction | int | str = 1,
                   d_function: str | DFunction = "poly") -> BoundSheet:
    if a < 2:
        raise BoundsError(f"a must be at least 2, got {a}")
    if omega < 1:
        raise BoundsError(f"omega must be at least 1, got {omega}")
    if tau < 0:
        raise BoundsError(f"tau must be non-negative, got {tau}")
    c = Fraction(c_const)
    if c <= 0:
        raise BoundsError(f"c_const must be positive, got {c}")
    if callable(d_function):
        d_name, d_fn = getattr(d_function, "__name__", "custom"), d_function
    else:
        if d_function not in D_FUNCTIONS:
            raise BoundsError(f"unknown d_function {d_function!r}")
        d_name, d_fn = d_function, D_FUNCTIONS[d_function]

    f = a * (omega + 1) + 2
    s = ramsey_formula(omega, f, c)
    h_vertices = 2 * a + 3
    d_value = d_fn(h_vertices, s)
    z_bound = s * (f + 1) ** (a * omega)
    term_cut = z_bound + omega ** 2 * (f ** (a + 1) + 2)
    term_dom = (1 + tau) * (a + 1) * omega
    b = 1 + max(d_value, term_dom, term_cut)

    base = (a + 1) * (omega + 1)
    poly_part = ceil_power(base, Fraction(500 * h_vertices ** 2) / c)
    omega_part = ceil_power(base, Fraction(a * omega) / c)
    chi_given_tau = 4 * (poly_part + term_dom + omega_part)
    final = (poly_part + omega_part) * (8 * (a + 1) * omega) ** omega

    return BoundSheet(
        a=a, omega=omega, tau=tau, c_const=c, d_function=d_name,
        f=f, s=s, d_value=d_value,
        term_degenerate=d_value, term_dominating=term_dom, term_cutset=term_cut,
        b=b, z_bound=z_bound,
        claim3_bound=z_bound - 1, claim5_bound=omega, claim6_bound=omega * f ** (a + 1),
        chi_threshold=Fraction(49, 16) * b,
        chi_bound_given_tau=chi_given_tau, final_bound=final,
    )


def z_threshold(omega: int, f: int, a: int, r: int, c_const: Fraction | int = 1) -> int:
    """|Z| level at which the r-part template could be grown:
    R(omega, f - a(r-1)) * (f - a(r-2) + 1) ** (r a)."""
    return ramsey_formula(omega, f - a * (r - 1), Fraction(c_const)) * (f - a * (r - 2) + 1) ** (r * a)
