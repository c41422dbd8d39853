"""Four-runner bar abacus, the quotient bijection, and the bead pair sign.

A strict partition decomposes into an integer charge, a strict partition read
off the even parts, and an ordinary partition read off a Maya diagram built
from the parts congruent to 1 and 3 mod 4.  The map is a bijection; see
:func:`quotient` and :func:`inverse_quotient`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition, StrictPartition


@dataclass(frozen=True)
class MayaDiagram:
    """Strictly decreasing integer sequence with eventual entry charge - k.

    Only the finite prefix that deviates from the tail rule is stored; the
    prefix is minimal, so its last entry never equals charge - k.
    """

    prefix: tuple
    charge: int

    def entry(self, k):
        """The k-th entry, 1-indexed."""
        if k < 1:
            raise ValueError(f"index must be positive, got {k}")
        if k <= len(self.prefix):
            return self.prefix[k - 1]
        return self.charge - k


@dataclass(frozen=True)
class QuotientTriple:
    charge: int
    q0: StrictPartition
    q1: Partition


@dataclass(frozen=True)
class BarAbacus:
    """Bead positions split over the three runners.

    The left runner holds even positions, the central runner positions
    congruent to 1 mod 4, the right runner positions congruent to 3 mod 4.
    """

    left: frozenset
    central: frozenset
    right: frozenset

    def beads(self):
        return self.left | self.central | self.right

    def render(self):
        """Plain text picture, beads bracketed, one runner per column."""
        top = max(self.beads(), default=0)
        periods = top // 4 + 2
        width = len(str(4 * periods - 1)) + 2

        def cell(pos, runner):
            s = f"[{pos}]" if pos in runner else str(pos)
            return s.rjust(width)

        lines = []
        for r in range(periods):
            lines.append(
                cell(4 * r, self.left)
                + cell(4 * r + 1, self.central)
                + cell(4 * r + 3, self.right)
            )
            lines.append(cell(4 * r + 2, self.left))
        return "\n".join(lines)


def maya(lam):
    """Maya diagram of a strict partition.

    Parts 4k+1 contribute the entry k, and the negative entries are all j < 0
    except those of the form -k-1 for a part 4k+3.  The charge is the count of
    parts 1 mod 4 minus the count of parts 3 mod 4.
    """
    ones = [p for p in lam.parts if p % 4 == 1]
    threes = [p for p in lam.parts if p % 4 == 3]
    top = {(p - 1) // 4 for p in ones}
    excluded = {-(p - 3) // 4 - 1 for p in threes}
    charge = len(ones) - len(threes)
    bound = min(excluded, default=0) - len(top) - 2
    entries = sorted(top, reverse=True) + [
        j for j in range(-1, bound - 1, -1) if j not in excluded
    ]
    k = len(entries)
    while k > 0 and entries[k - 1] == charge - k:
        k -= 1
    return MayaDiagram(tuple(entries[:k]), charge)


def quotient(lam):
    """Split a strict partition into (charge, even part halves, Maya partition)."""
    evens = StrictPartition(tuple(p // 2 for p in lam.parts if p % 2 == 0))
    md = maya(lam)
    parts = tuple(md.entry(k) + k - md.charge for k in range(1, len(md.prefix) + 1))
    return QuotientTriple(md.charge, evens, Partition(parts))


def inverse_quotient(charge, q0, q1):
    """Rebuild the strict partition with the given quotient data.

    Inverse of :func:`quotient`: the k-th Maya entry is q1_k + charge - k,
    non-negative entries e give parts 4e+1, missing negative entries j give
    parts -4j-1, and q0 doubles back into the even parts.
    """
    evens = [2 * s for s in q0.parts]
    pi = q1.parts
    count = max(len(pi), charge, 0)
    prefix = [
        (pi[k - 1] if k <= len(pi) else 0) + charge - k for k in range(1, count + 1)
    ]
    ones = [4 * e + 1 for e in prefix if e >= 0]
    present = set(prefix)
    # Entries below charge - count are all present, so only a finite window
    # of negatives can be missing.
    tail_top = charge - count - 1
    threes = [-4 * j - 1 for j in range(-1, tail_top, -1) if j not in present]
    return StrictPartition(tuple(sorted(evens + ones + threes, reverse=True)))


def abacus(lam, core_index):
    """Bead positions of lam on the three runners.

    A bead sits on every part; position 0 also carries a bead exactly when
    core_index < 0 and lam has -core_index parts.
    """
    beads = set(lam.parts)
    if core_index < 0 and len(lam.parts) == -core_index:
        beads.add(0)
    return BarAbacus(
        left=frozenset(b for b in beads if b % 2 == 0),
        central=frozenset(b for b in beads if b % 4 == 1),
        right=frozenset(b for b in beads if b % 4 == 3),
    )


def delta_sign(lam, core_index):
    """Parity sign of lam: -1 to the number of bead pairs (central, left)
    with the central bead strictly above the left one."""
    ab = abacus(lam, core_index)
    g = sum(1 for c in ab.central for left in ab.left if c > left)
    return -1 if g % 2 else 1
