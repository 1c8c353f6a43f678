# webs_app/combin.py
"""
Combinatorics of the N x m box and of the three weight encodings.

Conventions:
- cells are (row, col) with 1 <= row <= N, 1 <= col <= m; rows index V, columns index F^m
- a Composition K = (K_1..K_m) counts dots per column
- an SOWeight stores doubled coordinates A_i = 2 K_i - N so half-integers stay integral
- an OWeight stores a Young diagram with at most n = N // 2 rows plus a sign epsilon
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from sympy.ntheory import digits as sympy_digits
from sympy.utilities.iterables import partitions as sympy_partitions

from .exceptions import CombinatoricsError, WeightError

Cell = Tuple[int, int]
Partition = Tuple[int, ...]


def interleave_length(T: Iterable[int], U: Iterable[int]) -> int:
    """Inversions of the shuffle sorting the concatenation T.U, i.e. #{(t, u): t > u}."""
    T, U = sorted(T), sorted(U)
    if set(T) & set(U):
        raise CombinatoricsError(f'interleave_length needs disjoint sets, got {T} and {U}')
    count = 0
    j = 0
    for t in T:
        while j < len(U) and U[j] < t:
            j += 1
        count += j
    return count


# ---------------------------------------------------------------------------
# Box subsets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoxSubset:
    N: int
    m: int
    cells: Tuple[Cell, ...]

    def __post_init__(self):
        seen = set()
        for r, c in self.cells:
            if not (1 <= r <= self.N and 1 <= c <= self.m):
                raise CombinatoricsError(f'cell {(r, c)} outside the {self.N}x{self.m} box')
            if (r, c) in seen:
                raise CombinatoricsError(f'duplicate cell {(r, c)}')
            seen.add((r, c))
        # column-reading order is the stored order
        object.__setattr__(self, 'cells', tuple(sorted(self.cells, key=lambda rc: (rc[1], rc[0]))))

    @classmethod
    def of(cls, N: int, m: int, cells: Iterable[Sequence[int]]) -> 'BoxSubset':
        return cls(N, m, tuple((int(r), int(c)) for r, c in cells))

    @classmethod
    def from_columns(cls, N: int, columns: Sequence[Iterable[int]]) -> 'BoxSubset':
        return cls.of(N, len(columns), [(r, j) for j, col in enumerate(columns, start=1) for r in col])

    @classmethod
    def from_rows(cls, m: int, rows: Sequence[Iterable[int]]) -> 'BoxSubset':
        return cls.of(len(rows), m, [(i, c) for i, row in enumerate(rows, start=1) for c in row])

    def __len__(self):
        return len(self.cells)

    def __contains__(self, cell):
        return tuple(cell) in set(self.cells)

    def column(self, j: int) -> Tuple[int, ...]:
        """S_j: the rows occupied in column j."""
        return tuple(r for r, c in self.cells if c == j)

    def row(self, i: int) -> Tuple[int, ...]:
        """_iS: the columns occupied in row i."""
        return tuple(sorted(c for r, c in self.cells if r == i))

    def columns(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(self.column(j) for j in range(1, self.m + 1))

    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(self.row(i) for i in range(1, self.N + 1))

    def column_reading(self) -> Tuple[Cell, ...]:
        return self.cells

    def row_reading(self) -> Tuple[Cell, ...]:
        return tuple(sorted(self.cells))

    def to_json(self) -> Dict:
        return {'N': self.N, 'm': self.m, 'cells': [list(c) for c in self.cells]}

    @classmethod
    def from_json(cls, data: Dict) -> 'BoxSubset':
        try:
            return cls.of(int(data['N']), int(data['m']), data['cells'])
        except (KeyError, TypeError, ValueError) as exc:
            raise CombinatoricsError(f'bad box subset json: {data!r}') from exc


def box_subsets(N: int, m: int) -> Iterator[BoxSubset]:
    """Every subset of the N x m box, by size then colex order of the column-reading word."""
    grid = [(r, c) for c in range(1, m + 1) for r in range(1, N + 1)]
    for size in range(len(grid) + 1):
        for chosen in sorted(itertools.combinations(range(len(grid)), size), key=lambda t: t[::-1]):
            yield BoxSubset(N, m, tuple(grid[i] for i in chosen))


def reading_sign(S: BoxSubset) -> int:
    """(-1)^{#pairs (i,j),(i',j') in S with i < i', j > j'}: row reading vs column reading."""
    inversions = 0
    cells = S.cells
    for a in range(len(cells)):
        i, j = cells[a]
        for b in range(len(cells)):
            i2, j2 = cells[b]
            if i < i2 and j > j2:
                inversions += 1
    return -1 if inversions % 2 else 1


# ---------------------------------------------------------------------------
# Compositions and so_{2m} weights
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Composition:
    entries: Tuple[int, ...]
    N: int

    def __post_init__(self):
        object.__setattr__(self, 'entries', tuple(int(k) for k in self.entries))
        if any(k < 0 for k in self.entries):
            raise CombinatoricsError(f'negative entry in composition {self.entries}')

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, idx):
        return self.entries[idx]

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def in_box(self) -> bool:
        """Membership in Pi_m^{<=N}."""
        return all(k <= self.N for k in self.entries)

    def to_json(self) -> Dict:
        return {'type': 'composition', 'entries': list(self.entries), 'N': self.N}


def column_weight(S: BoxSubset) -> Composition:
    return Composition(tuple(len(S.column(j)) for j in range(1, S.m + 1)), S.N)


def enumerate_compositions(m: int, N: int) -> List[Composition]:
    """Pi_m^{<=N} in lexicographic order."""
    return [Composition(k, N) for k in itertools.product(range(N + 1), repeat=m)]


@dataclass(frozen=True)
class SOWeight:
    """sum_i (A_i / 2) eps_i, stored by the doubled coordinates A_i."""
    halves: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'halves', tuple(int(a) for a in self.halves))
        if len({a % 2 for a in self.halves}) > 1:
            raise WeightError(f'mixed parity in so weight {self.halves}')

    @property
    def coordinates(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(a, 2) for a in self.halves)

    @property
    def is_dominant(self) -> bool:
        A = self.halves
        if len(A) <= 1:
            return True
        return all(A[i] >= A[i + 1] for i in range(len(A) - 2)) and A[-2] >= abs(A[-1])

    @property
    def is_antidominant(self) -> bool:
        A = self.halves
        if len(A) <= 1:
            return True
        return all(A[i] <= A[i + 1] for i in range(len(A) - 2)) and A[-2] <= -abs(A[-1])

    def young(self) -> Partition:
        """Y_i = floor(|A_i| / 2), a partition when the weight is dominant."""
        return strip(tuple(abs(a) // 2 for a in self.halves))

    def to_json(self) -> Dict:
        return {'type': 'so', 'halves': list(self.halves)}


def composition_to_so_weight(K: Composition) -> SOWeight:
    return SOWeight(tuple(2 * k - K.N for k in K))


def is_dominant(K: Composition) -> bool:
    return composition_to_so_weight(K).is_dominant


def is_antidominant(K: Composition) -> bool:
    return composition_to_so_weight(K).is_antidominant


def dominant_compositions(m: int, N: int) -> List[Composition]:
    """Pi_{m,+}^{<=N}, filtered out of Pi_m^{<=N}."""
    return [K for K in enumerate_compositions(m, N) if is_dominant(K)]


# ---------------------------------------------------------------------------
# Partitions and their orders
# ---------------------------------------------------------------------------

def strip(Y: Iterable[int]) -> Partition:
    return tuple(y for y in Y if y > 0)


def transpose(Y: Partition) -> Partition:
    Y = strip(Y)
    if not Y:
        return ()
    return tuple(sum(1 for y in Y if y > j) for j in range(Y[0]))


def column_length(Y: Partition, j: int) -> int:
    """(Y^T)_j, 1-indexed, zero past the last column."""
    return sum(1 for y in Y if y >= j)


def partitions_in_box(rows: int, cols: int) -> List[Partition]:
    """All partitions with at most `rows` parts, each at most `cols`, smallest size first."""
    found = []
    for size in range(rows * cols + 1):
        for p in sympy_partitions(size, m=rows, k=cols):
            parts = tuple(sorted((part for part, mult in p.items() for _ in range(mult)), reverse=True))
            parts = strip(parts)
            if sum(parts) == size:
                found.append(parts)
    return sorted(set(found), key=lambda Y: (sum(Y), tuple(-y for y in Y)))


def dominance_leq(Y: Partition, Y2: Partition) -> bool:
    """Y <= Y2 iff every partial sum of Y is at most the matching partial sum of Y2."""
    width = max(len(Y), len(Y2))
    a = list(Y) + [0] * (width - len(Y))
    b = list(Y2) + [0] * (width - len(Y2))
    return all(x <= y for x, y in zip(itertools.accumulate(a), itertools.accumulate(b)))


def dominance_less(Y: Partition, Y2: Partition) -> bool:
    return strip(Y) != strip(Y2) and dominance_leq(Y, Y2)


def dominance_covers(family: Sequence[Partition]) -> List[Tuple[Partition, Partition]]:
    """Hasse diagram edges (Y, Y2) with Y < Y2 and nothing strictly between."""
    edges = []
    for Y in family:
        for Y2 in family:
            if not dominance_less(Y, Y2):
                continue
            if any(dominance_less(Y, Z) and dominance_less(Z, Y2) for Z in family):
                continue
            edges.append((Y, Y2))
    return sorted(edges)


def complement_transpose(Y: Partition, n: int, m: int) -> Partition:
    """Y^ct inside the n x m box: (Y^ct)_j = n - (Y^T)_{m-j+1}."""
    Y = strip(Y)
    if len(Y) > n or (Y and Y[0] > m):
        raise WeightError(f'{Y} does not fit in the {n}x{m} box')
    return strip(n - column_length(Y, m - j + 1) for j in range(1, m + 1))


# ---------------------------------------------------------------------------
# O(N) weights
# ---------------------------------------------------------------------------

def twist(lam: Partition, N: int) -> Partition:
    """Replace the first column of lam by one of length N - (lam^T)_1."""
    lam = strip(lam)
    c1, c2 = column_length(lam, 1), column_length(lam, 2)
    if c1 + c2 > N:
        raise WeightError(f'{lam} is not a dominant O({N}) weight')
    new_c1 = N - c1
    # rows beyond the second column keep their lengths; the first column now has new_c1 boxes
    rows = [y for y in lam if y >= 2]
    rows += [1] * (new_c1 - len(rows))
    return strip(rows)


@dataclass(frozen=True)
class OWeight:
    """A dominant O(N) weight as (Y, epsilon) with Y at most N // 2 rows."""
    young: Partition
    epsilon: int
    N: int

    def __post_init__(self):
        object.__setattr__(self, 'young', strip(self.young))
        n = self.N // 2
        Y = self.young
        if list(Y) != sorted(Y, reverse=True):
            raise WeightError(f'{Y} is not a partition')
        if len(Y) > n:
            raise WeightError(f'{Y} has more than {n} rows')
        if self.epsilon not in (-1, 0, 1):
            raise WeightError(f'epsilon must be -1, 0 or 1, got {self.epsilon}')
        not_sigma_fixed = self.N % 2 == 0 and n > 0 and len(Y) == n
        if (self.epsilon == 0) != not_sigma_fixed:
            raise WeightError(f'epsilon {self.epsilon} is inconsistent with {Y} for O({self.N})')

    @classmethod
    def from_partition(cls, lam: Partition, N: int) -> 'OWeight':
        """Read a partition with (lam^T)_1 + (lam^T)_2 <= N."""
        lam = strip(lam)
        c1, c2 = column_length(lam, 1), column_length(lam, 2)
        if c1 + c2 > N:
            raise WeightError(f'{lam} is not a dominant O({N}) weight')
        if 2 * c1 > N:
            return cls(twist(lam, N), -1, N)
        if 2 * c1 == N:
            return cls(lam, 0, N)
        return cls(lam, 1, N)

    def partition_form(self) -> Partition:
        if self.epsilon == -1:
            return twist(self.young, self.N)
        return self.young

    def so_coordinates(self) -> Tuple[int, ...]:
        n = self.N // 2
        return tuple(self.young) + (0,) * (n - len(self.young))

    def to_json(self) -> Dict:
        return {'type': 'o', 'partition': list(self.partition_form()), 'epsilon': self.epsilon, 'N': self.N}


def o_weights(N: int, m: int) -> List[OWeight]:
    """Lambda_{+,<=m}^{O(N)}: Y with at most N // 2 rows and at most m columns."""
    n = N // 2
    found = []
    for Y in partitions_in_box(n, m):
        if N % 2 == 0 and n > 0 and len(Y) == n:
            found.append(OWeight(Y, 0, N))
        else:
            found.extend([OWeight(Y, 1, N), OWeight(Y, -1, N)])
    return found


def _root_leq(b: Sequence[int], a: Sequence[int], N: int) -> bool:
    """b <= a in the root order of so_N on integral weights."""
    d = [x - y for x, y in zip(a, b)]
    n = len(d)
    if n == 0 or not any(d):
        return not any(d)
    sums = list(itertools.accumulate(d))
    if N % 2:
        return all(s >= 0 for s in sums)
    if n == 1:
        return False
    if any(s < 0 for s in sums[:n - 2]):
        return False
    low, high = sums[n - 2] - d[n - 1], sums[n - 1]
    return low >= 0 and high >= 0 and low % 2 == 0 and high % 2 == 0


def sigma_of(a: Sequence[int], N: int) -> Tuple[int, ...]:
    if N % 2 or not a:
        return tuple(a)
    return tuple(a[:-1]) + (-a[-1],)


def so_weight_of(lam: OWeight) -> SOWeight:
    """The so_N weight of lam as doubled coordinates."""
    return SOWeight(tuple(2 * a for a in lam.so_coordinates()))


def o_order_less(lam: OWeight, mu: OWeight) -> bool:
    """lam <_O mu: b < a or sigma(b) < a for the so_N weights b of lam and a of mu."""
    if lam.N != mu.N:
        raise WeightError('weights for different N')
    b, a = lam.so_coordinates(), mu.so_coordinates()
    N = lam.N
    strict_b = tuple(b) != tuple(a) and _root_leq(b, a, N)
    sb = sigma_of(b, N)
    strict_sb = tuple(sb) != tuple(a) and _root_leq(sb, a, N)
    return strict_b or strict_sb


def o_order_leq(lam: OWeight, mu: OWeight) -> bool:
    return lam == mu or o_order_less(lam, mu)


def dagger(lam: OWeight, m: int) -> Composition:
    """The order reversing bijection Lambda_{+,<=m}^{O(N)} -> Pi_{m,+}^{<=N}."""
    N = lam.N
    n = N // 2
    Y = lam.young
    if Y and Y[0] > m:
        raise WeightError(f'{lam} does not fit {m} columns')
    ct = complement_transpose(Y, n, m)
    ct = tuple(ct) + (0,) * (m - len(ct))
    eps = lam.epsilon if m % 2 == 0 else -lam.epsilon
    odd = N % 2
    A = [2 * y + odd for y in ct]
    if eps == -1:
        A[-1] = -A[-1]
    K = tuple((a + N) // 2 for a in A)
    return Composition(K, N)


def y_order(K: Composition, L: Composition) -> bool:
    """K < L on Pi_{m,+}^{<=N} via strict dominance of the associated Young diagrams."""
    return dominance_less(composition_to_so_weight(K).young(), composition_to_so_weight(L).young())


# ---------------------------------------------------------------------------
# p-adic digits
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PAdicDigits:
    p: int
    digits: Tuple[int, ...]

    def __post_init__(self):
        if any(not 0 <= d < self.p for d in self.digits):
            raise CombinatoricsError(f'digits {self.digits} out of range for base {self.p}')

    @property
    def value(self) -> int:
        return sum(d * self.p ** i for i, d in enumerate(self.digits))

    def digit(self, i: int) -> int:
        return self.digits[i] if i < len(self.digits) else 0


def p_adic_digits(N: int, p: int) -> PAdicDigits:
    """Base-p expansion, least significant digit first."""
    if N < 0:
        raise CombinatoricsError('p-adic digits of a negative number')
    return PAdicDigits(p, tuple(reversed(sympy_digits(N, p)[1:])))


def leq_p(x: int, y: int, p: int) -> bool:
    dx, dy = p_adic_digits(x, p), p_adic_digits(y, p)
    width = max(len(dx.digits), len(dy.digits))
    return all(dx.digit(i) <= dy.digit(i) for i in range(width))


def dagger_table(N: int, m: int) -> List[Tuple[OWeight, Composition]]:
    return [(lam, dagger(lam, m)) for lam in o_weights(N, m)]


def dagger_reverses_order(N: int, m: int) -> bool:
    """dagger is a bijection onto the dominant compositions and lam < mu implies mu^dagger < lam^dagger."""
    table = dagger_table(N, m)
    images = [K.entries for _, K in table]
    if sorted(images) != sorted(K.entries for K in dominant_compositions(m, N)):
        return False
    for lam, K in table:
        for mu, L in table:
            if o_order_less(lam, mu) and not y_order(L, K):
                return False
    return True
