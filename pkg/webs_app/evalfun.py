# webs_app/evalfun.py
"""
The presentation functor: web diagrams to matrices on exterior powers.

Generator conventions, with l(T, U) = #{(t, u) in T x U : t > u}:

    merge  v_T (x) v_U  ->  (-1)^l(T,U) v_{T u U}      (zero if T and U meet)
    split  v_S          ->  sum_{T u U = S} (-1)^l(T,U) v_T (x) v_U
    cross  v_T (x) v_U  ->  v_U (x) v_T
    cup    1            ->  (-1)^C(k,2) sum_S v_S (x) v_S
    cap    v_T (x) v_U  ->  delta_TU (-1)^C(k,2)

The cap sign is the one that makes both zig-zags the identity.
"""
from __future__ import annotations

import itertools
import logging
from functools import lru_cache
from math import comb
from typing import Sequence, Union

from .combin import interleave_length
from .exceptions import BoundaryMismatch
from .exterior import (derivation_on_block, exterior_basis, group_on_block, label_dim, sigma_matrix,
                       so_generators, subset_index, tensor_index)
from .matrices import SparseMatrix
from .scalars import FieldSpec, QQ, make_field
from .webcat import Slice, WebDiagram, WebMorphism

logger = logging.getLogger(__name__)


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


@lru_cache(maxsize=None)
def generator_matrix(kind: str, k: int, l: int, N: int, spec: FieldSpec = QQ) -> SparseMatrix:
    """The matrix of one generator from its input labels to its output labels."""
    f = make_field(spec)
    s = Slice(kind, k, l, 0)
    rows, cols = label_dim(s.out_labels, N), label_dim(s.in_labels, N)
    entries = []
    if kind == 'merge':
        target = subset_index(N, k + l)
        for T, U in itertools.product(exterior_basis(N, k), exterior_basis(N, l)):
            if set(T) & set(U):
                continue
            col = tensor_index((T, U), (k, l), N)
            entries.append((target[tuple(sorted(T + U))], col, _sign(interleave_length(T, U))))
    elif kind == 'split':
        for S in exterior_basis(N, k + l):
            col = subset_index(N, k + l)[S]
            for T in itertools.combinations(S, k):
                U = tuple(x for x in S if x not in T)
                entries.append((tensor_index((T, U), (k, l), N), col, _sign(interleave_length(T, U))))
    elif kind == 'cross':
        for T, U in itertools.product(exterior_basis(N, k), exterior_basis(N, l)):
            entries.append((tensor_index((U, T), (l, k), N), tensor_index((T, U), (k, l), N), 1))
    elif kind == 'cup':
        sgn = _sign(comb(k, 2))
        for S in exterior_basis(N, k):
            entries.append((tensor_index((S, S), (k, k), N), 0, sgn))
    else:
        sgn = _sign(comb(k, 2))
        for S in exterior_basis(N, k):
            entries.append((0, tensor_index((S, S), (k, k), N), sgn))
    logger.debug('generator matrix %s(%s,%s) N=%s over %s: %sx%s', kind, k, l, N, spec, rows, cols)
    return SparseMatrix.from_entries(f, rows, cols, entries)


def slice_matrix(s: Slice, labels: Sequence[int], N: int, spec: FieldSpec = QQ) -> SparseMatrix:
    """The generator padded with identities on the untouched strands of labels."""
    labels = tuple(labels)
    s.apply(labels)
    width = len(s.in_labels)
    left = label_dim(labels[:s.pos], N)
    right = label_dim(labels[s.pos + width:], N)
    return generator_matrix(s.kind, s.k, s.l, N, spec).embed(left, right)


@lru_cache(maxsize=8192)
def evaluate_diagram(d: WebDiagram, N: int, spec: FieldSpec = QQ) -> SparseMatrix:
    f = make_field(spec)
    result = SparseMatrix.identity(f, label_dim(d.source, N))
    labels = d.source
    for s in d.slices:
        result = slice_matrix(s, labels, N, spec) @ result
        labels = s.apply(labels)
    return result


def evaluate(morphism: Union[WebMorphism, WebDiagram], N: int, spec: FieldSpec = QQ) -> SparseMatrix:
    """Evaluate a diagram or a formal combination; linear in the coefficients."""
    if isinstance(morphism, WebDiagram):
        return evaluate_diagram(morphism, N, spec)
    f = make_field(spec)
    total = SparseMatrix.zeros(f, label_dim(morphism.target, N), label_dim(morphism.source, N))
    for d, c in morphism:
        total = total + evaluate_diagram(d, N, spec).scale(c)
    return total


def evaluate_closed(morphism: Union[WebMorphism, WebDiagram], N: int, spec: FieldSpec = QQ):
    """The scalar of a diagram with empty source and target."""
    if morphism.source or morphism.target:
        raise BoundaryMismatch(f'{morphism.source} -> {morphism.target} is not closed')
    return evaluate(morphism, N, spec).entry(0, 0)


def generator_equivariant(s: Slice, N: int, spec: FieldSpec = QQ) -> bool:
    """The generator commutes with every so_N derivation and with sigma."""
    G = generator_matrix(s.kind, s.k, s.l, N, spec)
    for g in so_generators(N, spec):
        if derivation_on_block(g, s.out_labels) @ G != G @ derivation_on_block(g, s.in_labels):
            return False
    sigma = sigma_matrix(N, spec)
    return group_on_block(sigma, s.out_labels) @ G == G @ group_on_block(sigma, s.in_labels)


def equivariance_check(s: Slice, N: int) -> bool:
    return generator_equivariant(s, N, QQ)
