"""Complete pieces h_n, odd pieces q_n, S- and Q-polynomials, rectangles.

h_n is the coefficient of z^n in exp(sum_k t_k z^k) and q_n the coefficient of
z^n in exp(sum_k odd t_k z^k).  S-polynomials come from the h determinant,
Q-polynomials from the Pfaffian of the two-row building blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .partitions import Partition
from .polyring import Polynomial, determinant, pfaffian

_h_list = [Polynomial.one()]
_q_list = [Polynomial.one()]
_q_pair_cache = {}
_schur_s_cache = {}
_schur_q_cache = {}


def complete_h(n):
    """h_n via the Newton style recurrence n*h_n = sum_k k*t_k*h_(n-k)."""
    if n < 0:
        return Polynomial.zero()
    while len(_h_list) <= n:
        m = len(_h_list)
        acc = Polynomial.zero()
        for k in range(1, m + 1):
            acc = acc + Polynomial.variable(k) * _h_list[m - k] * k
        _h_list.append(acc * Fraction(1, m))
    return _h_list[n]


def q_fun(n):
    """q_n via n*q_n = sum over odd k of k*t_k*q_(n-k)."""
    if n < 0:
        return Polynomial.zero()
    while len(_q_list) <= n:
        m = len(_q_list)
        acc = Polynomial.zero()
        for k in range(1, m + 1, 2):
            acc = acc + Polynomial.variable(k) * _q_list[m - k] * k
        _q_list.append(acc * Fraction(1, m))
    return _q_list[n]


def q_pair(m, n):
    """Two-row building block q_(m,n), antisymmetric in its arguments."""
    if m < 0 or n < 0:
        raise ValueError(f"indices must be >= 0, got ({m}, {n})")
    if m == n:
        return Polynomial.zero()
    if m < n:
        return -q_pair(n, m)
    cached = _q_pair_cache.get((m, n))
    if cached is None:
        cached = q_fun(m) * q_fun(n)
        for i in range(1, n + 1):
            cached = cached + q_fun(m + i) * q_fun(n - i) * (2 if i % 2 == 0 else -2)
        _q_pair_cache[(m, n)] = cached
    return cached


def schur_s(lam):
    """S-polynomial of a partition: det of the h matrix h_(lam_i + j - i)."""
    parts = lam.parts
    cached = _schur_s_cache.get(parts)
    if cached is None:
        n = len(parts)
        cached = determinant(
            [[complete_h(parts[i] + j - i) for j in range(n)] for i in range(n)]
        )
        _schur_s_cache[parts] = cached
    return cached


def schur_q(lam):
    """Q-polynomial of a strict partition: Pfaffian of the q_pair matrix.

    Odd length partitions get a single trailing 0 before building the matrix.
    """
    parts = lam.parts
    cached = _schur_q_cache.get(parts)
    if cached is None:
        seq = parts if len(parts) % 2 == 0 else parts + (0,)
        cached = pfaffian([[q_pair(a, b) for b in seq] for a in seq])
        _schur_q_cache[parts] = cached
    return cached


def rect_schur(a, b):
    """S-polynomial of the a x b rectangle; 1 on an empty edge, 0 on a negative one."""
    if a < 0 or b < 0:
        return Polynomial.zero()
    if a == 0 or b == 0:
        return Polynomial.one()
    return schur_s(Partition((b,) * a))


@dataclass(frozen=True)
class RectShape:
    """Rectangle with a rows of length b; degenerate values are meaningful."""

    rows: int
    cols: int

    def schur(self):
        return rect_schur(self.rows, self.cols)

    def __str__(self):
        return f"{self.rows}x{self.cols}"
