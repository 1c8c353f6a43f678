# webs_app/exterior.py
"""
Exterior algebras Lambda(F^m), Lambda(V) and Lambda(V (x) F^m).

Lambda^k V has the basis v_S, S a k-subset of [1, N], listed in colex order.
A label tuple K = (k_1..k_r) names Lambda^{k_1} V (x) ... (x) Lambda^{k_r} V whose
basis is the product basis with the first factor varying slowest. Labels
above N give the zero space, label 0 the one-dimensional unit.
"""
from __future__ import annotations

import itertools
import logging
from functools import lru_cache
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation

from .combin import BoxSubset, Composition, enumerate_compositions, interleave_length
from .exceptions import CombinatoricsError, FieldError
from .matrices import SparseMatrix, Vector, direct_sum
from .scalars import FieldSpec, make_field

logger = logging.getLogger(__name__)

Subset = Tuple[int, ...]


class LinearCombo:
    """A finitely supported combination of hashable basis keys."""

    __slots__ = ('field', 'terms')

    def __init__(self, field, terms: Optional[Dict[Hashable, object]] = None):
        self.field = field
        self.terms = {k: v for k, v in (terms or {}).items() if not field.is_zero(v)}

    @classmethod
    def basis(cls, field, key: Hashable) -> 'LinearCombo':
        return cls(field, {key: field.one})

    def __add__(self, other: 'LinearCombo') -> 'LinearCombo':
        f = self.field
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = f.add(out[k], v) if k in out else v
        return LinearCombo(f, out)

    def __sub__(self, other: 'LinearCombo') -> 'LinearCombo':
        return self + other.scale(-1)

    def scale(self, s) -> 'LinearCombo':
        f = self.field
        s = f.coerce(s)
        return LinearCombo(f, {k: f.mul(s, v) for k, v in self.terms.items()})

    def __getitem__(self, key):
        return self.terms.get(key, self.field.zero)

    def __iter__(self):
        return iter(self.terms)

    def items(self):
        return self.terms.items()

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LinearCombo):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        body = ' + '.join(f'{self.field.format(v)}*{k}' for k, v in sorted(self.terms.items(), key=lambda kv: str(kv[0])))
        return f'LinearCombo({body or "0"})'


# ---------------------------------------------------------------------------
# Lambda(F^m): Clifford operators
# ---------------------------------------------------------------------------

def _clifford_sign(S: Iterable[int], i: int) -> int:
    return -1 if sum(1 for s in S if s < i) % 2 else 1


def apply_x(i: int, v: LinearCombo) -> LinearCombo:
    """x_i x_S = (-1)^{|S cap [1, i-1]|} x_{S u i}, zero when i is in S."""
    f = v.field
    out = LinearCombo(f)
    for S, c in v.items():
        if i in S:
            continue
        out = out + LinearCombo(f, {tuple(sorted(S + (i,))): f.mul(c, f.coerce(_clifford_sign(S, i)))})
    return out


def apply_del(i: int, v: LinearCombo) -> LinearCombo:
    """d_i x_S = (-1)^{|S cap [1, i-1]|} x_{S - i}, zero when i is not in S."""
    f = v.field
    out = LinearCombo(f)
    for S, c in v.items():
        if i not in S:
            continue
        out = out + LinearCombo(f, {tuple(s for s in S if s != i): f.mul(c, f.coerce(_clifford_sign(S, i)))})
    return out


def all_subsets(m: int) -> List[Subset]:
    return [c for k in range(m + 1) for c in itertools.combinations(range(1, m + 1), k)]


def leibniz_check(i: int, j: int, m: int, spec: FieldSpec = FieldSpec()) -> bool:
    """x_i d_j + d_j x_i = delta_ij on every basis vector of Lambda(F^m)."""
    f = make_field(spec)
    for S in all_subsets(m):
        x_S = LinearCombo.basis(f, S)
        lhs = apply_x(i, apply_del(j, x_S)) + apply_del(j, apply_x(i, x_S))
        rhs = x_S if i == j else LinearCombo(f)
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# Lambda^k V and label tuples
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def exterior_basis(N: int, k: int) -> Tuple[Subset, ...]:
    """k-subsets of [1, N] in colex order; empty for k > N or k < 0."""
    if k < 0 or k > N:
        return ()
    return tuple(sorted(itertools.combinations(range(1, N + 1), k), key=lambda s: s[::-1]))


@lru_cache(maxsize=None)
def subset_index(N: int, k: int) -> Dict[Subset, int]:
    return {S: i for i, S in enumerate(exterior_basis(N, k))}


def exterior_dim(N: int, k: int) -> int:
    return len(exterior_basis(N, k))


def label_dim(labels: Sequence[int], N: int) -> int:
    d = 1
    for k in labels:
        d *= exterior_dim(N, k)
    return d


def label_basis(labels: Sequence[int], N: int) -> List[Tuple[Subset, ...]]:
    """Product basis of Lambda^{k_1} V (x) ... with the first factor slowest."""
    return list(itertools.product(*(exterior_basis(N, k) for k in labels)))


def tensor_index(subsets: Sequence[Subset], labels: Sequence[int], N: int) -> int:
    idx = 0
    for S, k in zip(subsets, labels):
        idx = idx * exterior_dim(N, k) + subset_index(N, k)[tuple(S)]
    return idx


def wedge_vectors(field, vectors: Sequence[Vector]) -> Dict[Subset, object]:
    """u_1 ^ ... ^ u_k for vectors given as {row (1-based): coefficient}."""
    terms: Dict[Subset, object] = {(): field.one}
    for u in vectors:
        nxt: Dict[Subset, object] = {}
        for T, c in terms.items():
            for t, x in u.items():
                if t in T:
                    continue
                # move t from the end into sorted position
                sign = -1 if sum(1 for s in T if s > t) % 2 else 1
                key = tuple(sorted(T + (t,)))
                val = field.mul(field.mul(c, x), field.coerce(sign))
                nxt[key] = field.add(nxt[key], val) if key in nxt else val
        terms = {k: v for k, v in nxt.items() if not field.is_zero(v)}
    return terms


def exterior_power(g: SparseMatrix, k: int) -> SparseMatrix:
    """Lambda^k g: the matrix of k x k minors in the colex basis."""
    N = g.nrows
    f = g.field
    index = subset_index(N, k)
    images = {s: {r + 1: v for r, v in g.column(s - 1).items()} for s in range(1, N + 1)}
    cols = {}
    for c, S in enumerate(exterior_basis(N, k)):
        cols[c] = {index[T]: v for T, v in wedge_vectors(f, [images[s] for s in S]).items()}
    return SparseMatrix(f, len(index), len(index), cols)


def derivation_power(g: SparseMatrix, k: int) -> SparseMatrix:
    """The derivation extension of g to Lambda^k V."""
    N = g.nrows
    f = g.field
    index = subset_index(N, k)
    cols: Dict[int, Vector] = {}
    for c, S in enumerate(exterior_basis(N, k)):
        out: Vector = {}
        for p, s in enumerate(S):
            for r, x in g.column(s - 1).items():
                t = r + 1
                rest = S[:p] + S[p + 1:]
                if t in rest:
                    continue
                # v_{S[:p]} ^ v_t ^ v_{S[p+1:]}
                sign = -1 if interleave_length(S[:p], (t,)) % 2 else 1
                sign *= -1 if interleave_length((t,), S[p + 1:]) % 2 else 1
                key = index[tuple(sorted(rest + (t,)))]
                val = f.mul(x, f.coerce(sign))
                out[key] = f.add(out[key], val) if key in out else val
        cols[c] = out
    return SparseMatrix(f, len(index), len(index), cols)


def group_on_block(g: SparseMatrix, labels: Sequence[int]) -> SparseMatrix:
    """g acting diagonally on Lambda^{k_1} V (x) ... (x) Lambda^{k_r} V."""
    out = SparseMatrix.identity(g.field, 1)
    for k in labels:
        out = out.kron(exterior_power(g, k))
    return out


def derivation_on_block(g: SparseMatrix, labels: Sequence[int]) -> SparseMatrix:
    """sum_j id (x) ... (x) d(g)_{k_j} (x) ... (x) id."""
    N = g.nrows
    f = g.field
    dims = [exterior_dim(N, k) for k in labels]
    total = SparseMatrix.zeros(f, label_dim(labels, N), label_dim(labels, N))
    for j, k in enumerate(labels):
        left = 1
        for d in dims[:j]:
            left *= d
        right = 1
        for d in dims[j + 1:]:
            right *= d
        total = total + derivation_power(g, k).embed(left, right)
    return total


# ---------------------------------------------------------------------------
# so_N generators, sigma and the a/b/u basis
# ---------------------------------------------------------------------------

def so_generator(i: int, j: int, N: int, spec: FieldSpec = FieldSpec()) -> SparseMatrix:
    """E_ij - E_ji on V; skew for the form with identity Gram matrix in the v-basis."""
    f = make_field(spec)
    return SparseMatrix.from_entries(f, N, N, [(i - 1, j - 1, 1), (j - 1, i - 1, -1)])


def so_generators(N: int, spec: FieldSpec = FieldSpec()) -> List[SparseMatrix]:
    return [so_generator(i, j, N, spec) for i in range(1, N + 1) for j in range(i + 1, N + 1)]


def sigma_matrix(N: int, spec: FieldSpec = FieldSpec()) -> SparseMatrix:
    """A determinant -1 orthogonal involution: negate v_{n+1} for odd N, v_N for even N."""
    f = make_field(spec)
    flipped = N // 2 if N % 2 else N - 1
    return SparseMatrix.from_entries(f, N, N, [(r, r, -1 if r == flipped else 1) for r in range(N)])


def block_compositions(N: int, m: int) -> List[Composition]:
    """Weight blocks of Lambda(V (x) F^m) in their fixed order."""
    return enumerate_compositions(m, N)


def on_full_space(per_block, N: int, m: int) -> SparseMatrix:
    """Assemble a block-diagonal operator on Lambda(V (x) F^m) from a per-block builder."""
    blocks = [per_block(tuple(K)) for K in block_compositions(N, m)]
    return direct_sum(blocks[0].field, blocks)


def so_N_generator(i: int, j: int, N: int, m: int, spec: FieldSpec = FieldSpec()) -> SparseMatrix:
    g = so_generator(i, j, N, spec)
    return on_full_space(lambda K: derivation_on_block(g, K), N, m)


def sigma_on_space(N: int, m: int, spec: FieldSpec = FieldSpec()) -> SparseMatrix:
    s = sigma_matrix(N, spec)
    return on_full_space(lambda K: group_on_block(s, K), N, m)


def abu_change_of_basis(N: int, spec: FieldSpec) -> SparseMatrix:
    """
    Columns are e_1..e_N in v-coordinates: a_r for r <= n, u = v_{n+1} for odd N,
    and b_i in position N + 1 - i, where
        a_i = v_i - sqrt(-1) v_{N+1-i},  b_i = (v_i + sqrt(-1) v_{N+1-i}) / 2.
    """
    if not spec.has_i:
        raise FieldError(f'the a/b/u basis needs sqrt(-1); {spec} does not have one')
    f = make_field(spec)
    i_ = f.sqrt_minus_one()
    half = f.inv(f.coerce(2))
    n = N // 2
    entries = []
    for c in range(1, N + 1):
        if c <= n:
            entries += [(c - 1, c - 1, f.one), (N - c, c - 1, f.neg(i_))]
        elif N % 2 and c == n + 1:
            entries.append((n, c - 1, f.one))
        else:
            b = N + 1 - c
            entries += [(b - 1, c - 1, half), (N - b, c - 1, f.mul(i_, half))]
    C = SparseMatrix.from_entries(f, N, N, entries)
    check_pairing(C)
    return C


def pairing_matrix(C: SparseMatrix) -> SparseMatrix:
    """Gram matrix of the symmetric form in the basis given by the columns of C."""
    return C.transpose() @ C


def check_pairing(C: SparseMatrix):
    """Raise FieldError unless the columns of C pair as e_r with e_{N+1-r} and nothing else."""
    f = C.field
    N = C.ncols
    G = pairing_matrix(C)
    flip = SparseMatrix.from_entries(f, N, N, [(r, N - 1 - r, 1) for r in range(N)])
    if G != flip:
        raise FieldError(f'columns do not pair antidiagonally over {f!r}: {G.to_triplets()}')


def raising_operators(N: int, spec: FieldSpec) -> List[SparseMatrix]:
    """E_rs - E_{N+1-s, N+1-r} for r < s, r + s < N + 1 in the e-basis, moved to v-coordinates."""
    C = abu_change_of_basis(N, spec)
    C_inv = C.inverse()
    f = C.field
    ops = []
    for r in range(1, N + 1):
        for s in range(r + 1, N + 1):
            if r + s >= N + 1:
                continue
            M = SparseMatrix.from_entries(f, N, N, [(r - 1, s - 1, 1), (N - s, N - r, -1)])
            ops.append(C @ M @ C_inv)
    return ops


# ---------------------------------------------------------------------------
# Lambda(V (x) F^m): readings
# ---------------------------------------------------------------------------

def sort_sign(word: Sequence[Hashable], key=None) -> Tuple[int, Tuple]:
    """Sign of the permutation sorting a word of distinct letters; (0, ()) on repeats."""
    if len(set(word)) != len(word):
        return 0, ()
    order = sorted(range(len(word)), key=lambda i: key(word[i]) if key else word[i])
    if len(order) < 2:
        return 1, tuple(word[i] for i in order)
    return Permutation(order).signature(), tuple(word[i] for i in order)


def _column_key(cell):
    return (cell[1], cell[0])


def wedge(a: LinearCombo, b: LinearCombo) -> LinearCombo:
    """Exterior product in Lambda(V (x) F^m); keys are cell tuples in column-reading order."""
    f = a.field
    out: Dict[Tuple, object] = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            sign, key = sort_sign(tuple(ka) + tuple(kb), key=_column_key)
            if not sign:
                continue
            val = f.mul(f.mul(va, vb), f.coerce(sign))
            out[key] = f.add(out[key], val) if key in out else val
    return LinearCombo(f, out)


def word_product(field, cells: Sequence[Tuple[int, int]]) -> LinearCombo:
    out = LinearCombo.basis(field, ())
    for cell in cells:
        out = wedge(out, LinearCombo.basis(field, (tuple(cell),)))
    return out


def row_reading_product(S: BoxSubset, spec: FieldSpec = FieldSpec()) -> LinearCombo:
    """w^h_S expanded in the column-reading basis."""
    return word_product(make_field(spec), S.row_reading())


def column_reading_product(S: BoxSubset, spec: FieldSpec = FieldSpec()) -> LinearCombo:
    """w^v_S, the basis vector itself."""
    return word_product(make_field(spec), S.column_reading())


def phi_h(S: BoxSubset) -> Tuple[Subset, ...]:
    """Row reading: x_{_1S} (x) ... (x) x_{_NS} in Lambda(F^m)^{(x)N}."""
    return S.rows()


def phi_v(S: BoxSubset) -> Tuple[Subset, ...]:
    """Column reading: v_{S_1} (x) ... (x) v_{S_m} in Lambda(V)^{(x)m}."""
    return S.columns()


def from_phi_h(rows: Sequence[Iterable[int]], m: int) -> BoxSubset:
    return BoxSubset.from_rows(m, rows)


def from_phi_v(columns: Sequence[Iterable[int]], N: int) -> BoxSubset:
    return BoxSubset.from_columns(N, columns)


# ---------------------------------------------------------------------------
# Far right configurations and their vectors
# ---------------------------------------------------------------------------

def far_right_subset(lam: Sequence[int], N: int, m: int) -> BoxSubset:
    """Row r carries lam_r dots pushed against the right edge; rows index the e-basis."""
    lam = tuple(x for x in lam if x > 0)
    if len(lam) > N or (lam and lam[0] > m):
        raise CombinatoricsError(f'{lam} does not fit the {N}x{m} box')
    cells = [(r, c) for r, length in enumerate(lam, start=1) for c in range(m - length + 1, m + 1)]
    return BoxSubset.of(N, m, cells)


def z_vector(lam: Sequence[int], N: int, m: int, spec: FieldSpec) -> Tuple[Tuple[int, ...], Vector]:
    """
    z_{S_lam} in v-coordinates: the block K it lives in and its coordinates there.

    Column c contributes the wedge of the e_r with r in that column, which expands
    as sum_T det(C[T, R]) v_T for the change of basis C.
    """
    S = far_right_subset(lam, N, m)
    C = abu_change_of_basis(N, spec)
    f = C.field
    columns = S.columns()
    K = tuple(len(R) for R in columns)
    factors = []
    for R in columns:
        images = [{r + 1: v for r, v in C.column(e - 1).items()} for e in R]
        factors.append(wedge_vectors(f, images))
    vec: Vector = {}
    for combo in itertools.product(*(sorted(fac.items()) for fac in factors)):
        subsets = [T for T, _ in combo]
        coeff = f.one
        for _, c in combo:
            coeff = f.mul(coeff, c)
        idx = tensor_index(subsets, K, N)
        vec[idx] = f.add(vec[idx], coeff) if idx in vec else coeff
    return K, {i: v for i, v in vec.items() if not f.is_zero(v)}
