"""Shared test utilities: enumeration, random generators, independent oracles."""

from fractions import Fraction

from schurmix.partitions import color
from schurmix.polyring import Monomial, Polynomial


def partitions_of(n, max_part=None):
    """All partitions of n as decreasing tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def strict_partitions_of(n, max_part=None):
    """All strict partitions of n as decreasing tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in strict_partitions_of(n - first, first - 1):
            yield (first,) + rest


def random_strict_parts(rng, max_weight=60, max_part=16, max_len=7):
    while True:
        k = rng.randint(0, max_len)
        parts = rng.sample(range(1, max_part + 1), k)
        if sum(parts) <= max_weight:
            return tuple(sorted(parts, reverse=True))


def random_weak_parts(rng, max_weight=20, max_part=8):
    parts = []
    total = 0
    prev = max_part
    while prev >= 1 and rng.random() < 0.8:
        p = rng.randint(1, prev)
        if total + p > max_weight:
            break
        parts.append(p)
        total += p
        prev = p
    return tuple(parts)


def random_poly(rng, max_terms=3, max_var=3, max_exp=2):
    terms = []
    for _ in range(rng.randint(0, max_terms)):
        mono = Monomial({v: rng.randint(0, max_exp) for v in range(1, max_var + 1)})
        coeff = Fraction(rng.randint(-4, 4), rng.randint(1, 2))
        terms.append((mono, coeff))
    return Polynomial(terms)


def random_skew_matrix(rng, size):
    mat = [[Polynomial.zero() for _ in range(size)] for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            p = random_poly(rng)
            mat[i][j] = p
            mat[j][i] = -p
    return mat


def single_additions(parts, i):
    """One node of color i added to a strict partition, all ways.

    Independent single step oracle: extend one row by one box, or open a new
    row of length one, keeping the parts strictly decreasing.
    """
    out = set()
    values = list(parts)
    for row in range(len(values)):
        v = values[row] + 1
        if color(v) == i and (row == 0 or values[row - 1] > v):
            out.add(tuple(values[:row] + [v] + values[row + 1 :]))
    if 1 not in values and color(1) == i:
        out.add(tuple(values) + (1,))
    return out


def closure_oracle(parts, i, ell):
    """States reachable by ell successive single color i node additions."""
    states = {tuple(parts)}
    for _ in range(ell):
        states = {nxt for s in states for nxt in single_additions(s, i)}
    return states


def ssyt_contents(shape, nvars):
    """Content vectors, with multiplicity, of semistandard tableaux of shape.

    Rows weakly increase, columns strictly increase, entries run 1..nvars.
    """
    shape = list(shape)
    cells = [(r, c) for r in range(len(shape)) for c in range(shape[r])]
    grid = [[0] * w for w in shape]
    out = []

    def fill(k):
        if k == len(cells):
            content = [0] * nvars
            for row in grid:
                for v in row:
                    content[v - 1] += 1
            out.append(tuple(content))
            return
        r, c = cells[k]
        lo = 1
        if c:
            lo = max(lo, grid[r][c - 1])
        if r:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, nvars + 1):
            grid[r][c] = v
            fill(k + 1)
        grid[r][c] = 0

    fill(0)
    return out


def classical_schur_value(shape, xs):
    """Tableau sum value of the classical Schur polynomial at the points xs."""
    total = Fraction(0)
    for content in ssyt_contents(shape, len(xs)):
        term = Fraction(1)
        for x, e in zip(xs, content):
            term *= Fraction(x) ** e
        total += term
    return total


def power_sum_assignment(xs, top):
    """tj values p_j(xs)/j for j = 1..top."""
    return {j: Fraction(sum(Fraction(x) ** j for x in xs), j) for j in range(1, top + 1)}
