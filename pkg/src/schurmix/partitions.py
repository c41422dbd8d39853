"""Partitions, strict partitions, diagram coloring, bar cores, and node addition sets.

Columns of a Young diagram are colored with two colors repeating with period
four: columns 1, 4, 5, 8, 9, ... carry color 0 and columns 2, 3, 6, 7, ...
carry color 1.  Adding nodes of a single color to a strict partition produces
the sets enumerated by :func:`add_set`.
"""

from __future__ import annotations


class Partition:
    """Weakly decreasing tuple of positive integers; () is the empty partition."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for k, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive, got {p}")
            if k and parts[k - 1] < p:
                raise ValueError(f"parts must be decreasing, got {parts}")
        self.parts = parts

    @property
    def weight(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"{type(self).__name__}({list(self.parts)})"

    def __str__(self):
        return self.to_text()

    def to_text(self):
        """Render as comma separated parts; the empty partition renders as ''."""
        return ",".join(str(p) for p in self.parts)

    @classmethod
    def from_text(cls, text):
        """Parse the comma separated format; '' denotes the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        return cls(tuple(int(tok.strip()) for tok in text.split(",")))


class StrictPartition(Partition):
    """Partition with pairwise distinct parts."""

    __slots__ = ()

    def __init__(self, parts=()):
        super().__init__(parts)
        for k in range(1, len(self.parts)):
            if self.parts[k - 1] == self.parts[k]:
                raise ValueError(f"parts must be strictly decreasing, got {self.parts}")

    def to_partition(self):
        return Partition(self.parts)


def color(j):
    """Color of diagram column j: 0 when j = 0, 1 (mod 4), else 1."""
    if j < 1:
        raise ValueError(f"column index must be positive, got {j}")
    return 0 if j % 4 in (0, 1) else 1


def bar_core(m):
    """Core with index m: (4m-3, ..., 5, 1) for m > 0, (-4m-1, ..., 7, 3) for m < 0."""
    if m > 0:
        return StrictPartition(range(4 * m - 3, 0, -4))
    if m < 0:
        return StrictPartition(range(-4 * m - 1, 0, -4))
    return StrictPartition()


def add_set(lam, i, ell):
    """All strict partitions obtained from lam by adding ell nodes of color i.

    A result mu contains lam row by row, has weight |lam| + ell, and every node
    of mu outside lam sits in a column of color i.  New rows below lam are
    allowed.  Results come in decreasing lexicographic order of parts.
    """
    if i not in (0, 1):
        raise ValueError(f"color must be 0 or 1, got {i}")
    if ell < 0:
        raise ValueError(f"node count must be non-negative, got {ell}")
    # Fresh rows are interchangeable, so ell extra zero rows always suffice.
    bases = lam.parts + (0,) * ell
    found = set()

    def grow(row, prev, budget, acc):
        if budget == 0:
            found.add(acc + tuple(b for b in bases[row:] if b))
            return
        if row == len(bases):
            return
        base = bases[row]
        for r in range(budget + 1):
            value = base + r
            if r and color(value) != i:
                break
            if prev is not None and value >= prev:
                break
            if value:
                grow(row + 1, value, budget - r, acc + (value,))
            # value 0 is an unfilled fresh row; filling a later fresh row
            # instead would repeat the same partition, so do not recurse.

    grow(0, None, ell, ())
    return [StrictPartition(parts) for parts in sorted(found, reverse=True)]
