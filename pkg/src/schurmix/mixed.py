"""Mixed Q*S expansions of rectangular S-polynomials, and their verification.

Case "one" expands the rectangle with 2m-n rows of length n over the node
addition set of color 1 on the core with index m.  Case "zero" expands the
rectangle with n rows of length 2m+1-n over the additions of color 0 on the
core with index -m.  Each summand is the sign of the partition times the
Q-polynomial of its even half times the S-polynomial of its Maya half in the
doubled variables.  Both sides vanish when the addition set is empty.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .barquot import delta_sign, quotient
from .partitions import Partition, StrictPartition, add_set, bar_core
from .polyring import Polynomial, shift2
from .schur import RectShape, rect_schur, schur_q, schur_s

CASES = ("one", "zero")


def _check_case(case, m, n):
    if case not in CASES:
        raise ValueError(f"case must be one of {CASES}, got {case!r}")
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")


def core_index_for(case, m):
    return m if case == "one" else -m


def rect_shape(case, m, n):
    """Rectangle on the right hand side of the identity."""
    if case == "one":
        return RectShape(2 * m - n, n)
    return RectShape(n, 2 * m + 1 - n)


@dataclass(frozen=True)
class ExpansionTerm:
    mu: StrictPartition
    sign: int
    q_index: StrictPartition
    s_index: Partition
    value: Polynomial


@dataclass
class VerificationReport:
    case: str
    core_index: int
    n: int
    lhs: Polynomial
    rhs: Polynomial
    equal: bool
    difference: Polynomial
    terms: list = field(default_factory=list)


def lhs(case, m, n):
    """Expansion side: signed Q*S(t2) products over the addition set.

    Returns the total polynomial together with the term records, ordered like
    the addition set itself (decreasing lexicographic in mu).
    """
    _check_case(case, m, n)
    color = 1 if case == "one" else 0
    core_index = core_index_for(case, m)
    core = bar_core(core_index)
    total = Polynomial.zero()
    terms = []
    for mu in add_set(core, color, n):
        tri = quotient(mu)
        sign = delta_sign(mu, core_index)
        value = schur_q(tri.q0) * shift2(schur_s(tri.q1)) * sign
        terms.append(ExpansionTerm(mu, sign, tri.q0, tri.q1, value))
        total = total + value
    return total, terms


def rhs(case, m, n):
    """Rectangle side of the identity."""
    _check_case(case, m, n)
    shape = rect_shape(case, m, n)
    return rect_schur(shape.rows, shape.cols)


def verify(case, m, n):
    """Compare both sides exactly and return the full report."""
    left, terms = lhs(case, m, n)
    right = rhs(case, m, n)
    difference = left - right
    return VerificationReport(
        case=case,
        core_index=core_index_for(case, m),
        n=n,
        lhs=left,
        rhs=right,
        equal=difference.is_zero,
        difference=difference,
        terms=terms,
    )
