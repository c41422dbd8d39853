"""States indexed by strict partitions over Q(sqrt 2), with the raising action.

The elementary operator with index i > 0 turns a part i into i+1 when i is
present and i+1 is not.  The index 0 operator adds a new part 1, with
coefficient 1/2 when the partition has an odd number of parts (the state then
carries an implicit zero pad) and 1 otherwise.  The two coarse operators
bundle the elementary ones by column color and carry a factor sqrt 2:

    color 0 uses indices 0, 3, 4, 7, 8, 11, ...
    color 1 uses indices 1, 2, 5, 6, 9, 10, ...

Applying the color i operator ell times to a core state and dividing by ell!
spreads the state over the color i addition set with sqrt 2 powers as
coefficients; :func:`lemma_co_check` verifies that expansion exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .partitions import StrictPartition, add_set, bar_core


class Sqrt2Scalar:
    """Number a + b*sqrt(2) with rational a and b.  Exact field arithmetic."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @classmethod
    def sqrt2_pow(cls, k):
        """sqrt(2)^k for any integer k, negative powers included."""
        half, odd = divmod(k, 2)
        base = Fraction(2) ** half
        return cls(0, base) if odd else cls(base, 0)

    @property
    def is_zero(self):
        return not self.a and not self.b

    @staticmethod
    def _coerce(value):
        if isinstance(value, Sqrt2Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return Sqrt2Scalar(value)
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Sqrt2Scalar(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return Sqrt2Scalar(-self.a, -self.b)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Sqrt2Scalar(self.a - other.a, self.b - other.b)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Sqrt2Scalar(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        norm = other.a * other.a - 2 * other.b * other.b
        if not norm:
            raise ZeroDivisionError("division by zero in Q(sqrt 2)")
        return self * Sqrt2Scalar(other.a / norm, -other.b / norm)

    def __repr__(self):
        return f"Sqrt2Scalar({self.a}, {self.b})"

    def __str__(self):
        if self.is_zero:
            return "0"
        if not self.b:
            return str(self.a)
        if self.b == 1:
            root = "sqrt2"
        elif self.b == -1:
            root = "-sqrt2"
        else:
            root = f"{self.b}*sqrt2"
        if not self.a:
            return root
        joiner = "+" if self.b > 0 else ""
        return f"{self.a}{joiner}{root}"


class FockVector:
    """Finite combination of strict partition states with Sqrt2Scalar weights."""

    __slots__ = ("entries",)

    def __init__(self, entries=None):
        d = {}
        if entries:
            items = entries.items() if isinstance(entries, dict) else entries
            for lam, coeff in items:
                coeff = Sqrt2Scalar._coerce(coeff)
                new = d.get(lam, Sqrt2Scalar()) + coeff
                if new.is_zero:
                    d.pop(lam, None)
                else:
                    d[lam] = new
        self.entries = d

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def basis(cls, lam):
        return cls({lam: Sqrt2Scalar(1)})

    @property
    def is_zero(self):
        return not self.entries

    def support(self):
        """States with nonzero weight, decreasing lexicographic."""
        return sorted(self.entries, key=lambda lam: lam.parts, reverse=True)

    def items(self):
        return [(lam, self.entries[lam]) for lam in self.support()]

    def __eq__(self, other):
        if isinstance(other, FockVector):
            return self.entries == other.entries
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        d = dict(self.entries)
        for lam, coeff in other.entries.items():
            new = d.get(lam, Sqrt2Scalar()) + coeff
            if new.is_zero:
                d.pop(lam, None)
            else:
                d[lam] = new
        out = FockVector()
        out.entries = d
        return out

    def scale(self, factor):
        factor = Sqrt2Scalar._coerce(factor)
        if factor is None or factor.is_zero:
            return FockVector.zero()
        out = FockVector()
        out.entries = {lam: coeff * factor for lam, coeff in self.entries.items()}
        return out

    def __repr__(self):
        body = " + ".join(f"({c})|{lam}>" for lam, c in self.items()) or "0"
        return f"<FockVector {body}>"


def f_inf(i, lam):
    """Elementary raising operator with index i >= 0 on a basis state."""
    if i < 0:
        raise ValueError(f"operator index must be >= 0, got {i}")
    parts = lam.parts
    if i == 0:
        if 1 in parts:
            return FockVector.zero()
        weight = Fraction(1, 2) if len(parts) % 2 else Fraction(1)
        return FockVector({StrictPartition(parts + (1,)): weight})
    if i not in parts or (i + 1) in parts:
        return FockVector.zero()
    raised = tuple(sorted((set(parts) - {i}) | {i + 1}, reverse=True))
    return FockVector.basis(StrictPartition(raised))


_SQRT2 = Sqrt2Scalar(0, 1)


def f_chev(i, v):
    """Color i raising operator on a vector: sqrt 2 times the sum of the
    elementary operators whose index lies in color class i."""
    if i not in (0, 1):
        raise ValueError(f"color must be 0 or 1, got {i}")
    residues = (0, 3) if i == 0 else (1, 2)
    out = FockVector.zero()
    for lam, coeff in v.entries.items():
        indices = [p for p in lam.parts if p % 4 in residues]
        if i == 0:
            indices.append(0)
        for k in indices:
            out = out + f_inf(k, lam).scale(coeff * _SQRT2)
    return out


def a_count(lam):
    """Even entries of the state, counting the zero pad of odd length states."""
    return sum(1 for p in lam.parts if p % 2 == 0) + (len(lam.parts) % 2)


def lemma_co_sides(i, core_index, ell):
    """Divided power side and weighted sum side of the core expansion."""
    if i not in (0, 1):
        raise ValueError(f"color must be 0 or 1, got {i}")
    if ell < 0:
        raise ValueError(f"power must be >= 0, got {ell}")
    if i == 1 and core_index < 0:
        raise ValueError("color 1 requires a core index >= 0")
    if i == 0 and core_index > 0:
        raise ValueError("color 0 requires a core index <= 0")
    core = bar_core(core_index)
    left = FockVector.basis(core)
    for _ in range(ell):
        left = f_chev(i, left)
    left = left.scale(Fraction(1, factorial(ell)))
    eps = core_index % 2
    right = FockVector.zero()
    for lam in add_set(core, i, ell):
        right = right + FockVector({lam: Sqrt2Scalar.sqrt2_pow(a_count(lam) - eps)})
    return left, right


def lemma_co_check(i, core_index, ell):
    """True when the divided power expansion matches the weighted sum."""
    left, right = lemma_co_sides(i, core_index, ell)
    return left == right
