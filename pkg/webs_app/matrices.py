# webs_app/matrices.py
"""
Sparse exact matrices over a scalars field and the elimination routines built on them.

Storage is column-major: cols[c][r] = value, zero entries never stored. Row and
column spaces are plain ranges; the meaning of each index is owned by the basis
that produced the matrix (see exterior.label_basis and howe.BlockSpace).

Rank, null spaces and independent subsets run on sympy DomainMatrix over Q,
Q(i) and F_p. F_p(i) has no sympy domain and uses the Echelon below.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from sympy import I, Rational
from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix

from .scalars import PrimeField, QuadraticField, RationalField, Scalar

Vector = Dict[int, Scalar]


class SparseMatrix:
    __slots__ = ('field', 'nrows', 'ncols', 'cols')

    def __init__(self, field, nrows: int, ncols: int, cols: Optional[Dict[int, Vector]] = None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.cols: Dict[int, Vector] = {}
        for c, col in (cols or {}).items():
            kept = {r: v for r, v in col.items() if not field.is_zero(v)}
            if kept:
                self.cols[c] = kept

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, field, nrows: int, ncols: int) -> 'SparseMatrix':
        return cls(field, nrows, ncols)

    @classmethod
    def identity(cls, field, n: int) -> 'SparseMatrix':
        return cls(field, n, n, {i: {i: field.one} for i in range(n)})

    @classmethod
    def from_entries(cls, field, nrows: int, ncols: int,
                     entries: Iterable[Tuple[int, int, Scalar]]) -> 'SparseMatrix':
        cols: Dict[int, Vector] = {}
        for r, c, v in entries:
            col = cols.setdefault(c, {})
            col[r] = field.add(col[r], field.coerce(v)) if r in col else field.coerce(v)
        return cls(field, nrows, ncols, cols)

    @classmethod
    def from_columns(cls, field, nrows: int, columns: Sequence[Vector]) -> 'SparseMatrix':
        return cls(field, nrows, len(columns), {c: dict(col) for c, col in enumerate(columns)})

    # -- inspection --------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    def entry(self, r: int, c: int) -> Scalar:
        return self.cols.get(c, {}).get(r, self.field.zero)

    def column(self, c: int) -> Vector:
        return dict(self.cols.get(c, {}))

    def rows(self) -> Dict[int, Vector]:
        out: Dict[int, Vector] = {}
        for c, col in self.cols.items():
            for r, v in col.items():
                out.setdefault(r, {})[c] = v
        return out

    def entries(self) -> Iterator[Tuple[int, int, Scalar]]:
        for c in sorted(self.cols):
            col = self.cols[c]
            for r in sorted(col):
                yield r, c, col[r]

    @property
    def nnz(self) -> int:
        return sum(len(col) for col in self.cols.values())

    def is_zero(self) -> bool:
        return not self.cols

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.cols == other.cols

    __hash__ = None

    def __repr__(self):
        return f'SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz}, field={self.field!r})'

    # -- algebra -----------------------------------------------------------

    def _check_same_shape(self, other: 'SparseMatrix'):
        if self.shape != other.shape:
            raise ValueError(f'shape mismatch {self.shape} vs {other.shape}')

    def __add__(self, other: 'SparseMatrix') -> 'SparseMatrix':
        self._check_same_shape(other)
        f = self.field
        cols = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            target = cols.setdefault(c, {})
            for r, v in col.items():
                target[r] = f.add(target[r], v) if r in target else v
        return SparseMatrix(f, self.nrows, self.ncols, cols)

    def __neg__(self) -> 'SparseMatrix':
        f = self.field
        return SparseMatrix(f, self.nrows, self.ncols,
                            {c: {r: f.neg(v) for r, v in col.items()} for c, col in self.cols.items()})

    def __sub__(self, other: 'SparseMatrix') -> 'SparseMatrix':
        return self + (-other)

    def scale(self, s: Scalar) -> 'SparseMatrix':
        f = self.field
        s = f.coerce(s)
        if f.is_zero(s):
            return SparseMatrix.zeros(f, self.nrows, self.ncols)
        return SparseMatrix(f, self.nrows, self.ncols,
                            {c: {r: f.mul(s, v) for r, v in col.items()} for c, col in self.cols.items()})

    def apply(self, vector: Vector) -> Vector:
        """Matrix times a sparse column vector."""
        f = self.field
        out: Vector = {}
        for c, x in vector.items():
            col = self.cols.get(c)
            if not col:
                continue
            for r, v in col.items():
                term = f.mul(v, x)
                out[r] = f.add(out[r], term) if r in out else term
        return {r: v for r, v in out.items() if not f.is_zero(v)}

    def __matmul__(self, other: 'SparseMatrix') -> 'SparseMatrix':
        if self.ncols != other.nrows:
            raise ValueError(f'cannot multiply {self.shape} by {other.shape}')
        cols = {c: self.apply(col) for c, col in other.cols.items()}
        return SparseMatrix(self.field, self.nrows, other.ncols, cols)

    def kron(self, other: 'SparseMatrix') -> 'SparseMatrix':
        """Kronecker product; the left factor indexes slowest."""
        f = self.field
        cols: Dict[int, Vector] = {}
        for c1, col1 in self.cols.items():
            for c2, col2 in other.cols.items():
                target = cols.setdefault(c1 * other.ncols + c2, {})
                for r1, v1 in col1.items():
                    for r2, v2 in col2.items():
                        target[r1 * other.nrows + r2] = f.mul(v1, v2)
        return SparseMatrix(f, self.nrows * other.nrows, self.ncols * other.ncols, cols)

    def embed(self, left: int, right: int) -> 'SparseMatrix':
        """id_left (x) self (x) id_right for identity factors of the given dimensions."""
        out = self
        if left != 1:
            out = SparseMatrix.identity(self.field, left).kron(out)
        if right != 1:
            out = out.kron(SparseMatrix.identity(self.field, right))
        return out

    def transpose(self) -> 'SparseMatrix':
        return SparseMatrix(self.field, self.ncols, self.nrows, self.rows())

    def trace(self) -> Scalar:
        f = self.field
        total = f.zero
        for c, col in self.cols.items():
            if c in col:
                total = f.add(total, col[c])
        return total

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> 'SparseMatrix':
        row_pos = {r: i for i, r in enumerate(row_idx)}
        cols = {}
        for j, c in enumerate(col_idx):
            col = self.cols.get(c, {})
            cols[j] = {row_pos[r]: v for r, v in col.items() if r in row_pos}
        return SparseMatrix(self.field, len(row_idx), len(col_idx), cols)

    def flatten(self) -> Vector:
        """The matrix as one sparse vector, column-major."""
        return {c * self.nrows + r: v for c, col in self.cols.items() for r, v in col.items()}

    def to_triplets(self) -> List[List]:
        return [[r, c, self.field.format(v)] for r, c, v in self.entries()]

    def to_json(self) -> Dict:
        return {'rows': self.nrows, 'cols': self.ncols, 'entries': self.to_triplets()}

    def inverse(self) -> 'SparseMatrix':
        """Gauss-Jordan inverse; raises ZeroDivisionError for singular input."""
        if self.nrows != self.ncols:
            raise ValueError('inverse of a non-square matrix')
        f = self.field
        n = self.nrows
        rows = self.rows()
        work = [dict(rows.get(i, {})) for i in range(n)]
        inv = [{i: f.one} for i in range(n)]
        for col in range(n):
            pivot = next((i for i in range(col, n) if col in work[i]), None)
            if pivot is None:
                raise ZeroDivisionError('matrix is singular')
            work[col], work[pivot] = work[pivot], work[col]
            inv[col], inv[pivot] = inv[pivot], inv[col]
            scale = f.inv(work[col][col])
            work[col] = {c: f.mul(scale, v) for c, v in work[col].items()}
            inv[col] = {c: f.mul(scale, v) for c, v in inv[col].items()}
            for i in range(n):
                if i == col or col not in work[i]:
                    continue
                factor = work[i][col]
                _axpy(f, work[i], factor, work[col])
                _axpy(f, inv[i], factor, inv[col])
        cols: Dict[int, Vector] = {}
        for r, row in enumerate(inv):
            for c, v in row.items():
                cols.setdefault(c, {})[r] = v
        return SparseMatrix(f, n, n, cols)


def _axpy(field, target: Vector, factor: Scalar, source: Vector):
    """target -= factor * source, in place."""
    for c, v in source.items():
        new = field.sub(target.get(c, field.zero), field.mul(factor, v))
        if field.is_zero(new):
            target.pop(c, None)
        else:
            target[c] = new


def direct_sum(field, blocks: Sequence[SparseMatrix]) -> SparseMatrix:
    cols: Dict[int, Vector] = {}
    r0 = c0 = 0
    for b in blocks:
        for c, col in b.cols.items():
            cols[c0 + c] = {r0 + r: v for r, v in col.items()}
        r0 += b.nrows
        c0 += b.ncols
    return SparseMatrix(field, r0, c0, cols)


# ---------------------------------------------------------------------------
# Elimination
# ---------------------------------------------------------------------------

class Echelon:
    """
    Incremental row echelon form. Rows are added one at a time and reduced
    against the stored pivots; add() reports whether the row was independent.

    Over Q rows are kept as primitive integer vectors and reduced by
    cross-multiplication, so no fractions appear during elimination. Every
    other field normalizes pivots to one.
    """

    def __init__(self, field):
        self.field = field
        self.integral = field.characteristic == 0 and not isinstance(field.zero, tuple)
        self.pivots: Dict[int, Vector] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Vector) -> Vector:
        if self.integral:
            return self._reduce_integral(_primitive(row))
        f = self.field
        r = {c: v for c, v in row.items() if not f.is_zero(v)}
        for pc in sorted(self.pivots):
            if pc not in r:
                continue
            _axpy(f, r, r[pc], self.pivots[pc])
        return r

    def _reduce_integral(self, r: Dict[int, int]) -> Dict[int, int]:
        for pc in sorted(self.pivots):
            if pc not in r:
                continue
            piv = self.pivots[pc]
            a, b = piv[pc], r[pc]
            g = math.gcd(a, b)
            ma, mb = a // g, b // g
            merged = {}
            for c in set(r) | set(piv):
                v = ma * r.get(c, 0) - mb * piv.get(c, 0)
                if v:
                    merged[c] = v
            r = _primitive(merged)
        return r

    def add(self, row: Vector) -> bool:
        r = self.reduce(row)
        if not r:
            return False
        pc = min(r)
        if not self.integral:
            f = self.field
            scale = f.inv(r[pc])
            r = {c: f.mul(scale, v) for c, v in r.items()}
        elif r[pc] < 0:
            r = {c: -v for c, v in r.items()}
        self.pivots[pc] = r
        return True

    def contains(self, row: Vector) -> bool:
        return not self.reduce(row)


def _primitive(row: Dict[int, Scalar]) -> Dict[int, int]:
    """Scale a rational vector to a primitive integer vector."""
    row = {c: Fraction(v) for c, v in row.items() if v != 0}
    if not row:
        return {}
    den = math.lcm(*(v.denominator for v in row.values()))
    ints = {c: int(v * den) for c, v in row.items()}
    g = math.gcd(*ints.values())
    return {c: v // g for c, v in ints.items()}


# ---------------------------------------------------------------------------
# sympy-backed elimination
# ---------------------------------------------------------------------------

class _DomainBridge:
    """Moves field elements in and out of a sympy domain."""

    def __init__(self, domain, to_domain, from_domain):
        self.domain = domain
        self.to_domain = to_domain
        self.from_domain = from_domain

    def matrix(self, rows: Dict[int, Vector], shape: Tuple[int, int]) -> DomainMatrix:
        sdm = {r: {c: self.to_domain(v) for c, v in row.items()} for r, row in rows.items() if row}
        return DomainMatrix(sdm, shape, self.domain)


def _rational_to_qq(v) -> Any:
    v = Fraction(v)
    return QQ(v.numerator, v.denominator)


def _qq_to_rational(x) -> Fraction:
    return Fraction(int(QQ.numer(x)), int(QQ.denom(x)))


@lru_cache(maxsize=None)
def domain_bridge(field) -> Optional[_DomainBridge]:
    """QQ, GF(p) or QQ<I> for the field; None for F_p(i), which keeps the Echelon path."""
    if isinstance(field, RationalField):
        return _DomainBridge(QQ, _rational_to_qq, _qq_to_rational)
    if isinstance(field, PrimeField):
        p = field.p
        K = GF(p)
        return _DomainBridge(K, lambda v: K(int(v)), lambda x: int(K.to_int(x)) % p)
    if isinstance(field, QuadraticField) and field.characteristic == 0:
        K = QQ.algebraic_field(I)

        def to_domain(v):
            re_, im_ = Fraction(v[0]), Fraction(v[1])
            return K.from_sympy(Rational(re_.numerator, re_.denominator)
                                + Rational(im_.numerator, im_.denominator) * I)

        def from_domain(x):
            re_, im_ = K.to_sympy(x).as_real_imag()
            return (Fraction(int(re_.p), int(re_.q)), Fraction(int(im_.p), int(im_.q)))

        return _DomainBridge(K, to_domain, from_domain)
    return None


def _column_matrix(bridge: _DomainBridge, vectors: Sequence[Vector]) -> DomainMatrix:
    """The vectors as the columns of a sparse domain matrix."""
    height = 1 + max((max(v) for v in vectors if v), default=-1)
    rows: Dict[int, Vector] = {}
    for c, v in enumerate(vectors):
        for r, x in v.items():
            rows.setdefault(r, {})[c] = x
    return bridge.matrix(rows, (height, len(vectors)))


def rank_of_vectors(vectors: Iterable[Vector], field) -> int:
    vectors = [{c: x for c, x in v.items() if not field.is_zero(x)} for v in vectors]
    bridge = domain_bridge(field)
    if bridge is None:
        ech = Echelon(field)
        for v in vectors:
            ech.add(v)
        return ech.rank
    if not any(vectors):
        return 0
    return _column_matrix(bridge, vectors).rank()


def matrix_rank(matrix: SparseMatrix) -> int:
    return rank_of_vectors(matrix.cols.values(), matrix.field)


def independent_subset(vectors: Sequence[Vector], field) -> List[int]:
    """Indices of a maximal independent subfamily, chosen greedily in order."""
    vectors = [{c: x for c, x in v.items() if not field.is_zero(x)} for v in vectors]
    bridge = domain_bridge(field)
    if bridge is None:
        ech = Echelon(field)
        return [i for i, v in enumerate(vectors) if ech.add(v)]
    if not any(vectors):
        return []
    # pivot columns of the reduced form are the greedy choice
    _, pivots = _column_matrix(bridge, vectors).rref()
    return list(pivots)


def in_span(vector: Vector, spanning: Iterable[Vector], field) -> bool:
    spanning = list(spanning)
    return rank_of_vectors(spanning + [vector], field) == rank_of_vectors(spanning, field)


def nullity(matrix: SparseMatrix) -> int:
    return matrix.ncols - matrix_rank(matrix)


def null_space(matrix: SparseMatrix) -> List[Vector]:
    """A basis of {x : matrix x = 0}, one vector per free column of the reduced echelon form."""
    f = matrix.field
    bridge = domain_bridge(f)
    if bridge is None:
        return _echelon_null_space(matrix)
    if not matrix.cols:
        return [{c: f.one} for c in range(matrix.ncols)]
    kernel = bridge.matrix(matrix.rows(), matrix.shape).nullspace()
    basis = []
    for row in kernel.to_list():
        vec = {c: bridge.from_domain(x) for c, x in enumerate(row)}
        basis.append({c: x for c, x in vec.items() if not f.is_zero(x)})
    return basis


def _echelon_null_space(matrix: SparseMatrix) -> List[Vector]:
    f = matrix.field
    pivots: Dict[int, Vector] = {}
    for _, raw in sorted(matrix.rows().items()):
        row = dict(raw)
        for pc, prow in pivots.items():
            if pc in row:
                _axpy(f, row, row[pc], prow)
        if not row:
            continue
        pc = min(row)
        scale = f.inv(row[pc])
        row = {c: f.mul(scale, v) for c, v in row.items()}
        for qrow in pivots.values():
            if pc in qrow:
                _axpy(f, qrow, qrow[pc], row)
        pivots[pc] = row
    basis = []
    for fc in range(matrix.ncols):
        if fc in pivots:
            continue
        vec = {fc: f.one}
        for pc, prow in pivots.items():
            if fc in prow:
                vec[pc] = f.neg(prow[fc])
        basis.append(vec)
    return basis
