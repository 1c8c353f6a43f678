# webs_app/howe.py
"""
The two descriptions of the so_2m action on Lambda(V (x) F^m).

Row side: Lambda(V (x) F^m) read row by row is Lambda(F^m)^(x)N and the
Chevalley generators act on every row through Clifford operators,

    e_j = x_j d_{j+1},  f_j = x_{j+1} d_j          (j < m)
    e_m = x_{m-1} x_m,  f_m = d_m d_{m-1}

all of which are even, so they act on the tensor product without Koszul signs.

Column side: read column by column the same space is the sum of the blocks
Lambda^K = Lambda^{K_1} V (x) ... (x) Lambda^{K_m} V and the generators are
evaluated ladder webs. The two readings of a box subset S differ by
reading_sign(S), which is exactly what intertwines the two actions.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, Iterator, List, Sequence, Tuple

from .combin import (BoxSubset, Composition, box_subsets, composition_to_so_weight, dominant_compositions,
                     enumerate_compositions, o_weights, reading_sign)
from .evalfun import evaluate_diagram
from .exceptions import LabelError, WebsError, WeightError
from .exterior import (LinearCombo, derivation_on_block, group_on_block, label_dim, raising_operators,
                       sigma_matrix, sigma_on_space, so_generators, so_N_generator, tensor_index, z_vector)
from .matrices import Echelon, SparseMatrix
from .relations import coroot, node_ladder
from .scalars import FieldSpec, QQ, QQ_I, make_field
from .webcat import (enumerate_fmf, enumerate_shapes, ladder, ladder_target, random_composite,
                     wrap_zero_strands)

logger = logging.getLogger(__name__)

MAX_BOX = 12


@dataclass(frozen=True)
class HoweOp:
    """e_j, f_j or h_j; node m is the fishtail node acting on strands m-1, m."""
    kind: str
    node: int
    a: int = 1

    def __post_init__(self):
        if self.kind not in ('e', 'f', 'h'):
            raise WebsError(f'unknown Howe operator kind {self.kind!r}')
        if self.node < 1:
            raise WebsError(f'node {self.node} out of range')
        if self.a < 1:
            raise LabelError(f'divided power {self.a} must be positive')

    def ladder_kind(self, m: int) -> Tuple[str, int, int]:
        if not 1 <= self.node <= m:
            raise WebsError(f'node {self.node} out of range for m={m}')
        return node_ladder('E' if self.kind == 'e' else 'F', self.node, self.a, m)

    def target(self, K: Sequence[int]) -> Tuple[int, ...]:
        if self.kind == 'h':
            return tuple(K)
        kind, a, i = self.ladder_kind(len(K))
        return ladder_target(kind, a, i, K)

    def __str__(self):
        power = f'^({self.a})' if self.a > 1 else ''
        return f'{self.kind}_{self.node}{power}'


def chevalley_ops(m: int, with_h: bool = True) -> List[HoweOp]:
    kinds = ('e', 'f', 'h') if with_h else ('e', 'f')
    return [HoweOp(kind, j) for j in range(1, m + 1) for kind in kinds]


def _check_m(m: int):
    if m < 2:
        raise WebsError('the so_2m action needs m >= 2')


# ---------------------------------------------------------------------------
# Row side
# ---------------------------------------------------------------------------

def _row_h(node: int, row: set, m: int) -> int:
    if node < m:
        return (node in row) - (node + 1 in row)
    both, neither = {m - 1, m} <= row, not ({m - 1, m} & row)
    return both - neither


def dot_action(op: HoweOp, S: BoxSubset, spec: FieldSpec = QQ) -> LinearCombo:
    """The row-wise action of a Chevalley generator on the dot diagram S."""
    m = S.m
    _check_m(m)
    if op.a != 1:
        raise WebsError('dot_action takes Chevalley generators only')
    if op.node > m:
        raise WebsError(f'node {op.node} out of range for m={m}')
    f = make_field(spec)
    j = op.node
    if op.kind == 'h':
        weight = sum(_row_h(j, set(S.row(t)), m) for t in range(1, S.N + 1))
        return LinearCombo.basis(f, S).scale(weight)
    out = LinearCombo(f)
    cells = set(S.cells)
    for t in range(1, S.N + 1):
        row = set(S.row(t))
        if j < m:
            src, dst = (j + 1, j) if op.kind == 'e' else (j, j + 1)
            if src in row and dst not in row:
                moved = (cells - {(t, src)}) | {(t, dst)}
                out = out + LinearCombo.basis(f, BoxSubset(S.N, m, tuple(moved)))
        else:
            pair = {(t, m - 1), (t, m)}
            if op.kind == 'e' and not ({m - 1, m} & row):
                out = out + LinearCombo.basis(f, BoxSubset(S.N, m, tuple(cells | pair)))
            elif op.kind == 'f' and {m - 1, m} <= row:
                out = out + LinearCombo.basis(f, BoxSubset(S.N, m, tuple(cells - pair)))
    return out


# ---------------------------------------------------------------------------
# Column side
# ---------------------------------------------------------------------------

class BlockSpace:
    """Lambda(V (x) F^m) as the direct sum of the blocks Lambda^K with global indices."""

    def __init__(self, N: int, m: int):
        self.N = N
        self.m = m
        self.blocks: List[Tuple[int, ...]] = [tuple(K) for K in enumerate_compositions(m, N)]
        self.offsets: Dict[Tuple[int, ...], int] = {}
        total = 0
        for K in self.blocks:
            self.offsets[K] = total
            total += label_dim(K, N)
        self.dim = total

    def __contains__(self, K) -> bool:
        return tuple(K) in self.offsets

    def block_dim(self, K: Sequence[int]) -> int:
        return label_dim(K, self.N)

    def index_of(self, S: BoxSubset) -> int:
        K = tuple(len(col) for col in S.columns())
        return self.offsets[K] + tensor_index(S.columns(), K, self.N)

    def assemble(self, field, pieces: Iterator[Tuple[Sequence[int], Sequence[int], SparseMatrix]]) -> SparseMatrix:
        """A full-space operator from blocks K -> L."""
        entries = []
        for K, L, M in pieces:
            r0, c0 = self.offsets[tuple(L)], self.offsets[tuple(K)]
            entries.extend((r0 + r, c0 + c, v) for r, c, v in M.entries())
        return SparseMatrix.from_entries(field, self.dim, self.dim, entries)


def ladder_matrix(op: HoweOp, K: Sequence[int], N: int, spec: FieldSpec = QQ) -> SparseMatrix:
    """The evaluated ladder web on the block Lambda^K; h acts by its coroot value."""
    K = tuple(K)
    m = len(K)
    _check_m(m)
    f = make_field(spec)
    if op.kind == 'h':
        return SparseMatrix.identity(f, label_dim(K, N)).scale(f.coerce(coroot(op.node, K, N, m)))
    kind, a, i = op.ladder_kind(m)
    target = ladder_target(kind, a, i, K)
    try:
        return evaluate_diagram(ladder(kind, a, i, K), N, spec)
    except LabelError:
        return SparseMatrix.zeros(f, label_dim(target, N), label_dim(K, N))


def global_ladder(op: HoweOp, N: int, m: int, spec: FieldSpec = QQ, space: BlockSpace = None) -> SparseMatrix:
    space = space or BlockSpace(N, m)

    def pieces():
        for K in space.blocks:
            L = op.target(K)
            if L in space:
                yield K, L, ladder_matrix(op, K, N, spec)

    return space.assemble(make_field(spec), pieces())


def dot_matrix(op: HoweOp, N: int, m: int, spec: FieldSpec = QQ, space: BlockSpace = None) -> SparseMatrix:
    """The row action moved to the column basis: x_S -> reading_sign(S) v_S."""
    space = space or BlockSpace(N, m)
    f = make_field(spec)
    entries = []
    for S in box_subsets(N, m):
        col, rho = space.index_of(S), reading_sign(S)
        for T, c in dot_action(op, S, spec).items():
            entries.append((space.index_of(T), col, f.mul(c, f.coerce(rho * reading_sign(T)))))
    return SparseMatrix.from_entries(f, space.dim, space.dim, entries)


def _guard(N: int, m: int):
    _check_m(m)
    if N * m > MAX_BOX:
        raise WebsError(f'N*m = {N * m} is too large to enumerate (limit {MAX_BOX})')


def actions_agree(N: int, m: int, spec: FieldSpec = QQ) -> bool:
    """Every Chevalley generator acts the same way on both readings."""
    _guard(N, m)
    space = BlockSpace(N, m)
    for op in chevalley_ops(m):
        if dot_matrix(op, N, m, spec, space) != global_ladder(op, N, m, spec, space):
            logger.info('actions disagree on %s for N=%s m=%s', op, N, m)
            return False
    return True


def commutant_check(N: int, m: int, spec: FieldSpec = QQ) -> bool:
    """Every ladder operator commutes with so_N and with sigma on the whole space."""
    _guard(N, m)
    space = BlockSpace(N, m)
    ladders = [global_ladder(op, N, m, spec, space) for op in chevalley_ops(m, with_h=False)]
    group = [so_N_generator(i, j, N, m, spec) for i in range(1, N + 1) for j in range(i + 1, N + 1)]
    group.append(sigma_on_space(N, m, spec))
    for A in ladders:
        for G in group:
            if A @ G != G @ A:
                return False
    return True


def divided_power_check(N: int, m: int, a: int, spec: FieldSpec = QQ) -> bool:
    """a! X^(a) = X^a for every node, as full-space operators."""
    _guard(N, m)
    space = BlockSpace(N, m)
    f = make_field(spec)
    for kind in ('e', 'f'):
        for j in range(1, m + 1):
            single = global_ladder(HoweOp(kind, j), N, m, spec, space)
            power = SparseMatrix.identity(f, space.dim)
            for _ in range(a):
                power = single @ power
            divided = global_ladder(HoweOp(kind, j, a), N, m, spec, space).scale(f.coerce(factorial(a)))
            if power != divided:
                return False
    return True


def hw_vector_check(N: int, m: int, spec: FieldSpec = QQ_I) -> bool:
    """
    z_{S_lam} is a joint highest weight vector for so_N and lowest weight vector
    for so_2m: killed by every so_N raising operator, by F_j and by f_m.
    """
    _check_m(m)
    raising = raising_operators(N, spec)
    for lam in o_weights(N, m):
        shape = lam.partition_form()
        K, z = z_vector(shape, N, m, spec)
        for g in raising:
            if derivation_on_block(g, K).apply(z):
                logger.info('z for %s not killed by a raising operator', shape)
                return False
        for j in range(1, m + 1):
            if ladder_matrix(HoweOp('f', j), K, N, spec).apply(z):
                logger.info('z for %s not killed by f_%s', shape, j)
                return False
    return True


def weight_space_check(N: int, m: int, spec: FieldSpec = QQ) -> bool:
    """h_j acts on Lambda^K by the coroot value and [e_j, f_j] = h_j on every block."""
    _check_m(m)
    f = make_field(spec)
    if N * m <= MAX_BOX:
        for S in box_subsets(N, m):
            K = tuple(len(c) for c in S.columns())
            for j in range(1, m + 1):
                got = dot_action(HoweOp('h', j), S, spec)[S]
                if got != f.coerce(coroot(j, K, N, m)):
                    return False
    for K in enumerate_compositions(m, N):
        K = tuple(K)
        for j in range(1, m + 1):
            e, fo = HoweOp('e', j), HoweOp('f', j)
            ef = ladder_matrix(e, fo.target(K), N, spec) @ ladder_matrix(fo, K, N, spec)
            fe = ladder_matrix(fo, e.target(K), N, spec) @ ladder_matrix(e, K, N, spec)
            if ef - fe != ladder_matrix(HoweOp('h', j), K, N, spec):
                logger.info('[e_%s, f_%s] != h_%s on %s', j, j, j, K)
                return False
    return True


# ---------------------------------------------------------------------------
# Dimensions
# ---------------------------------------------------------------------------

def weyl_dim_D(K: Composition, m: int = None) -> int:
    """Weyl's dimension formula for type D_m at the so weight of K."""
    A = composition_to_so_weight(K).halves
    m = m or len(A)
    if len(A) != m:
        raise WeightError(f'{K} has {len(A)} entries, expected {m}')
    if not composition_to_so_weight(K).is_dominant:
        raise WeightError(f'{tuple(K)} is not dominant')
    rho2 = [2 * (m - 1 - i) for i in range(m)]
    shifted = [a + r for a, r in zip(A, rho2)]
    dim = Fraction(1)
    for i in range(m):
        for j in range(i + 1, m):
            num = (shifted[i] - shifted[j]) * (shifted[i] + shifted[j])
            den = (rho2[i] - rho2[j]) * (rho2[i] + rho2[j])
            dim *= Fraction(num, den)
    if dim.denominator != 1:
        raise WeightError(f'non-integral Weyl dimension {dim} for {tuple(K)}')
    return int(dim)


def end_dim_prediction(N: int, m: int) -> int:
    """sum of dim L(K)^2 over the dominant K in the N x m box."""
    return sum(weyl_dim_D(K, m) ** 2 for K in dominant_compositions(m, N))


def _commutant(pairs: Sequence[Tuple[SparseMatrix, SparseMatrix]], dk: int, dl: int, field) -> int:
    """dim {X : B X = X A for every (A, B)} with X of shape dl x dk."""
    ech = Echelon(field)
    for A, B in pairs:
        b_rows = B.rows()
        a_cols = {c: A.column(c) for c in range(dk)}
        for r in range(dl):
            for c in range(dk):
                eq: Dict[int, object] = {}
                for s, v in b_rows.get(r, {}).items():
                    key = s * dk + c
                    eq[key] = field.add(eq[key], v) if key in eq else v
                for s, v in a_cols[c].items():
                    key = r * dk + s
                    eq[key] = field.sub(eq[key], v) if key in eq else field.neg(v)
                ech.add(eq)
    return dk * dl - ech.rank


def commutant_dimension(K: Sequence[int], L: Sequence[int], N: int, spec: FieldSpec = QQ) -> int:
    """dim Hom(Lambda^K, Lambda^L) commuting with so_N and sigma, by brute force."""
    f = make_field(spec)
    pairs = [(derivation_on_block(g, K), derivation_on_block(g, L)) for g in so_generators(N, spec)]
    s = sigma_matrix(N, spec)
    pairs.append((group_on_block(s, K), group_on_block(s, L)))
    return _commutant(pairs, label_dim(K, N), label_dim(L, N), f)


def gl_commutant_dimension(K: Sequence[int], L: Sequence[int], N: int, spec: FieldSpec = QQ) -> int:
    """The type A analogue: maps commuting with every E_ij."""
    f = make_field(spec)
    pairs = []
    for i in range(N):
        for j in range(N):
            g = SparseMatrix.from_entries(f, N, N, [(i, j, 1)])
            pairs.append((derivation_on_block(g, K), derivation_on_block(g, L)))
    return _commutant(pairs, label_dim(K, N), label_dim(L, N), f)


def fmf_rank(K: Sequence[int], L: Sequence[int], N: int, spec: FieldSpec = QQ) -> int:
    """Rank of the span of evaluated fmf diagrams K -> L."""
    f = make_field(spec)
    ech = Echelon(f)
    for d in enumerate_fmf(K, L):
        ech.add(evaluate_diagram(d, N, spec).flatten())
    return ech.rank


def end_dim_by_webs(N: int, m: int, spec: FieldSpec = QQ) -> int:
    """dim of the web endomorphism algebra of the sum of all Lambda^K, block by block."""
    blocks = [tuple(K) for K in enumerate_compositions(m, N)]
    total = 0
    for K in blocks:
        for L in blocks:
            total += fmf_rank(K, L, N, spec)
    logger.info('web endomorphism dimension N=%s m=%s over %s: %s', N, m, spec, total)
    return total


def faithfulness_check(K: Sequence[int], L: Sequence[int], N: int) -> bool:
    """Over Q the webs fill the whole equivariant Hom space."""
    return fmf_rank(K, L, N, QQ) == commutant_dimension(K, L, N, QQ)


def spanning_check(K: Sequence[int], L: Sequence[int], N: int, samples: int = 200, seed: int = 0,
                   spec: FieldSpec = QQ, max_label: int = 4) -> bool:
    """Random generator composites K -> L evaluate into the span of the fmf family."""
    f = make_field(spec)
    ech = Echelon(f)
    for d in enumerate_fmf(K, L):
        ech.add(evaluate_diagram(d, N, spec).flatten())
    rng = random.Random(seed)
    tried = 0
    for _ in range(samples):
        d = random_composite(K, L, rng, steps=rng.randint(1, 4), max_label=max_label)
        if d is None:
            continue
        tried += 1
        if not ech.contains(evaluate_diagram(d, N, spec).flatten()):
            logger.warning('composite outside the fmf span: %s', d.to_json())
            return False
    logger.debug('spanning %s -> %s at N=%s: %s composites', tuple(K), tuple(L), N, tried)
    return True


def type_a_faithfulness_check(K: Sequence[int], L: Sequence[int], N: int) -> bool:
    """Cap and cup free sandwiches span exactly the gl_N commutant."""
    f = make_field(QQ)
    ech = Echelon(f)
    for shape in enumerate_shapes(K, L):
        if shape.caps or shape.cups:
            continue
        d = wrap_zero_strands(shape.diagram(), tuple(K), tuple(L))
        ech.add(evaluate_diagram(d, N, QQ).flatten())
    return ech.rank == gl_commutant_dimension(K, L, N, QQ)
