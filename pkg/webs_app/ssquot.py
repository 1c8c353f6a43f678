# webs_app/ssquot.py
"""
Semisimplification: traces, trace pairings on web Hom spaces, negligible
morphisms and the comparison with the colored Brauer category.

Hom spaces are realized by evaluated fmf families reduced to a basis. Cup and
cap carry the same sign, so the closure of an endomorphism evaluates to the
ordinary matrix trace; the Gram assembly uses that shortcut.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from typing import List, Sequence, Tuple

from .brauer import LoopParams, brauer_gram
from .combin import p_adic_digits
from .evalfun import evaluate, evaluate_closed, evaluate_diagram
from .exceptions import BoundaryMismatch, WebsError
from .matrices import SparseMatrix, Vector, independent_subset, matrix_rank, null_space
from .scalars import FieldSpec, QQ, make_field
from .webcat import WebDiagram, WebMorphism, circle, closure, enumerate_fmf, merge, split

logger = logging.getLogger(__name__)


def categorical_trace(f: WebMorphism, N: int, spec: FieldSpec = QQ):
    """Evaluate the closure of an endomorphism."""
    if f.source != f.target:
        raise BoundaryMismatch(f'trace needs an endomorphism, got {f.source} -> {f.target}')
    return evaluate_closed(closure(f), N, spec)


@dataclass
class HomSpace:
    source: Tuple[int, ...]
    target: Tuple[int, ...]
    N: int
    spec: FieldSpec
    family: List[WebDiagram]
    matrices: List[SparseMatrix]
    basis: List[int] = dc_field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def basis_diagrams(self) -> List[WebDiagram]:
        return [self.family[i] for i in self.basis]

    def basis_matrices(self) -> List[SparseMatrix]:
        return [self.matrices[i] for i in self.basis]


def hom_basis(K: Sequence[int], L: Sequence[int], N: int, spec: FieldSpec = QQ) -> HomSpace:
    """The fmf family K -> L with a greedily chosen basis of its evaluated span."""
    K, L = tuple(K), tuple(L)
    family = enumerate_fmf(K, L)
    matrices = [evaluate_diagram(d, N, spec) for d in family]
    basis = independent_subset([M.flatten() for M in matrices], make_field(spec))
    logger.debug('Hom(%s, %s) at N=%s over %s: %s diagrams, rank %s', K, L, N, spec, len(family), len(basis))
    return HomSpace(K, L, N, spec, family, matrices, basis)


def _pair_trace(A: SparseMatrix, B: SparseMatrix, field):
    """tr(B A) without forming the product."""
    total = field.zero
    for r, c, v in A.entries():
        w = B.entry(c, r)
        if not field.is_zero(w):
            total = field.add(total, field.mul(v, w))
    return total


def gram_matrix(K: Sequence[int], L: Sequence[int], N: int, spec: FieldSpec = QQ) -> SparseMatrix:
    """tr(g o f) for f over a basis of Hom(K, L) (rows) and g over a basis of Hom(L, K) (columns)."""
    f = make_field(spec)
    forward = hom_basis(K, L, N, spec).basis_matrices()
    backward = hom_basis(L, K, N, spec).basis_matrices()
    entries = [(r, c, _pair_trace(A, B, f)) for r, A in enumerate(forward) for c, B in enumerate(backward)]
    return SparseMatrix.from_entries(f, len(forward), len(backward), entries)


def ss_hom_dim(K: Sequence[int], L: Sequence[int], N: int, p: int = 0) -> int:
    """Dimension of Hom(K, L) in the semisimplification over F_p (p = 0 for Q)."""
    return matrix_rank(gram_matrix(K, L, N, FieldSpec(p)))


def negligible_radical(K: Sequence[int], L: Sequence[int], N: int,
                       spec: FieldSpec = QQ) -> Tuple[List[WebDiagram], List[Vector]]:
    """
    A basis of the negligible morphisms K -> L, as coefficient vectors over the
    returned basis diagrams.
    """
    space = hom_basis(K, L, N, spec)
    G = gram_matrix(K, L, N, spec)
    return space.basis_diagrams(), null_space(G.transpose())


def negligible_morphisms(K: Sequence[int], L: Sequence[int], N: int, p: int) -> List[WebMorphism]:
    """The radical basis as formal web combinations; coefficients are residues mod p."""
    diagrams, vectors = negligible_radical(K, L, N, FieldSpec(p))
    out = []
    for vec in vectors:
        total = WebMorphism.zero(K, L)
        for idx, c in vec.items():
            total = total + WebMorphism.of(diagrams[idx], c)
        out.append(total)
    return out


def _traces_vanish(Y: SparseMatrix, family: Sequence[WebDiagram], N: int, spec: FieldSpec) -> bool:
    f = make_field(spec)
    return all(f.is_zero(_pair_trace(evaluate_diagram(g, N, spec), Y, f)) for g in family)


def merge_split_negligibility(a: int, b: int, i: int, p: int, N: int) -> bool:
    """merge(a, b) and split(a, b) into Lambda^{p^i} are negligible over F_p."""
    if a <= 0 or b <= 0 or a + b != p ** i:
        raise WebsError(f'need a, b > 0 with a + b = {p}^{i}')
    spec = FieldSpec(p)
    top = p ** i
    Y = evaluate(merge(a, b), N, spec)
    S = evaluate(split(a, b), N, spec)
    merge_ok = _traces_vanish(Y, enumerate_fmf((top,), (a, b)), N, spec)
    split_ok = _traces_vanish(S, enumerate_fmf((a, b), (top,)), N, spec)
    return merge_ok and split_ok


def circle_digit_check(i: int, p: int, N: int) -> bool:
    """The Lambda^{p^i} circle evaluates to the i-th base-p digit of N."""
    spec = FieldSpec(p)
    f = make_field(spec)
    value = evaluate_closed(circle(p ** i), N, spec)
    return value == f.coerce(p_adic_digits(N, p).digit(i))


def ss_brauer_dim(K: Sequence[int], L: Sequence[int], params: LoopParams) -> int:
    return matrix_rank(brauer_gram(K, L, params))


def verlinde_crosscheck(word: Sequence[int], p: int, N: int, target_word: Sequence[int] = None) -> bool:
    """
    The web side over F_p with strands labelled p^i agrees with the colored
    Brauer side at d_i = N_i.
    """
    word = tuple(word)
    target_word = tuple(word if target_word is None else target_word)
    K = tuple(p ** i for i in word)
    L = tuple(p ** i for i in target_word)
    colors = max(word + target_word, default=0) + 1
    params = LoopParams.digits(p, N, colors)
    web_side = ss_hom_dim(K, L, N, p)
    brauer_side = ss_brauer_dim(word, target_word, params)
    logger.info('word %s -> %s, p=%s N=%s: webs %s, Brauer %s', word, target_word, p, N, web_side, brauer_side)
    return web_side == brauer_side
