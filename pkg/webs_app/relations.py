# webs_app/relations.py
"""
The relation battery: every defining and derived web relation as a pair of
morphisms (lhs, rhs) together with an enumerator of label instances.

A relation instance passes when both sides evaluate to the same matrix. An
instance whose label arithmetic cannot be satisfied is vacuous: it is logged
and counted as passing.
"""
from __future__ import annotations

import itertools
import logging
import time
from dataclasses import dataclass
from math import comb, factorial
from typing import Callable, Dict, Iterable, Iterator, List, Sequence, Tuple

from .combin import enumerate_compositions
from .evalfun import evaluate
from .exceptions import BoundaryMismatch, LabelError, WebsError
from .scalars import FieldSpec, QQ, gen_binom
from .webcat import (WebMorphism, cap, circle, compose, compose_all, cross, cup, ident,
                     ladder_target, ladder_word, merge, split, tensor, tensor_all)

logger = logging.getLogger(__name__)

Params = Dict[str, object]
Sides = Tuple[WebMorphism, WebMorphism]


@dataclass(frozen=True)
class Relation:
    id: str
    family: str
    params: Tuple[str, ...]
    build: Callable[[Params, int], Sides]
    instances: Callable[..., Iterator[Params]]


RELATIONS: Dict[str, Relation] = {}


def relation(rel_id: str, family: str, params: Sequence[str], instances: Callable[..., Iterator[Params]]):
    def register(build):
        RELATIONS[rel_id] = Relation(rel_id, family, tuple(params), build, instances)
        return build
    return register


# ---------------------------------------------------------------------------
# Ladder sums
# ---------------------------------------------------------------------------

def ladders(word: Sequence[Tuple[str, int, int]], K: Sequence[int]) -> WebMorphism:
    """
    The ladder composite X_1 X_2 ... 1_K (rightmost applied first), or the zero
    morphism into the formal target when some label would go negative.
    """
    K = tuple(K)
    target = K
    for kind, a, i in reversed(list(word)):
        target = ladder_target(kind, a, i, target)
    try:
        return WebMorphism.of(ladder_word(word, K))
    except LabelError:
        return WebMorphism.zero(K, target)


def weighted_sum(source: Sequence[int], target: Sequence[int],
                 terms: Iterable[Tuple[int, WebMorphism]]) -> WebMorphism:
    total = WebMorphism.zero(source, target)
    for c, m in terms:
        if c:
            total = total + m * c
    return total


# ---------------------------------------------------------------------------
# Instance enumerators
# ---------------------------------------------------------------------------

def _labels(N: int, all_labels: bool) -> range:
    return range(0 if all_labels else 1, N + 1)


def _pairs(N, all_labels=False, **_):
    for k in _labels(N, all_labels):
        for l in _labels(N, all_labels):
            yield {'k': k, 'l': l}


def _pairs_fitting(N, all_labels=False, **_):
    for p in _pairs(N, all_labels):
        if p['k'] + p['l'] <= N:
            yield p


def _singles(N, all_labels=False, **_):
    for k in _labels(N, all_labels):
        yield {'k': k}


def _triples_fitting(N, all_labels=False, **_):
    for k, l, m in itertools.product(_labels(N, all_labels), repeat=3):
        if k + l + m <= N:
            yield {'k': k, 'l': l, 'm': m}


def _triples(N, all_labels=False, **_):
    for a, b, c in itertools.product(_labels(N, all_labels), repeat=3):
        yield {'a': a, 'b': b, 'c': c}


def _above_N(N, **_):
    yield {'k': N + 1}
    yield {'k': N + 2}


def _schur(N, all_labels=False, **_):
    for p in _pairs_fitting(N, all_labels):
        for r in range(p['k'] + p['l'] + 1):
            yield {**p, 'r': r}


def _naturality(N, all_labels=False, **_):
    for j, k, l in itertools.product(_labels(N, all_labels), repeat=3):
        if k + l <= N:
            yield {'j': j, 'k': k, 'l': l}


def _ladder_pairs(N, all_labels=False, a_max=2, **_):
    for k, l in itertools.product(range(N + 1), repeat=2):
        for a, b in itertools.product(range(a_max + 1), repeat=2):
            if a or b:
                yield {'k': k, 'l': l, 'a': a, 'b': b}


def _lollipops(N, all_labels=False, **_):
    for k in range(1, N + 1):
        for a in range(1, k // 2 + 1):
            yield {'l': k - 2 * a, 'a': a}


def _reidemeister_one(N, all_labels=False, **_):
    for k in _labels(N, all_labels):
        for side in ('left', 'right'):
            yield {'k': k, 'side': side}


def _all_pairs(N, **_):
    for k, l in itertools.product(range(N + 1), repeat=2):
        yield {'k': k, 'l': l}


def _redundancy(N, a_max=2, **_):
    for k, l in itertools.product(range(N + 1), repeat=2):
        for a, b in itertools.product(range(a_max + 1), repeat=2):
            if b <= min(k, l) and (a or b):
                yield {'k': k, 'l': l, 'a': a, 'b': b}


# ---------------------------------------------------------------------------
# Type A relations
# ---------------------------------------------------------------------------

@relation('Exterior', 'type_a', ('k',), _above_N)
def _exterior(p, N):
    k = p['k']
    return ident(k), WebMorphism.zero((k,), (k,))


@relation('Assoc', 'type_a', ('k', 'l', 'm'), _triples_fitting)
def _assoc(p, N):
    k, l, m = p['k'], p['l'], p['m']
    lhs = compose(merge(k + l, m), tensor(merge(k, l), ident(m)))
    rhs = compose(merge(k, l + m), tensor(ident(k), merge(l, m)))
    return lhs, rhs


@relation('Coassoc', 'type_a', ('k', 'l', 'm'), _triples_fitting)
def _coassoc(p, N):
    k, l, m = p['k'], p['l'], p['m']
    lhs = compose(tensor(split(k, l), ident(m)), split(k + l, m))
    rhs = compose(tensor(ident(k), split(l, m)), split(k, l + m))
    return lhs, rhs


@relation('Digon', 'type_a', ('k', 'l'), _pairs_fitting)
def _digon(p, N):
    k, l = p['k'], p['l']
    return compose(merge(k, l), split(k, l)), ident(k + l) * comb(k + l, k)


@relation('SchurSigned', 'type_a', ('k', 'l', 'r'), _schur)
def _schur_signed(p, N):
    k, l, r = p['k'], p['l'], p['r']
    s = k + l - r
    lhs = compose(split(r, s), merge(k, l))
    terms = []
    for a in range(k + 1):
        b = r - k + a
        if not 0 <= b <= l:
            continue
        body = compose_all(
            tensor(merge(k - a, b), merge(a, l - b)),
            tensor_all(ident(k - a), cross(a, b), ident(l - b)),
            tensor(split(k - a, a), split(b, l - b)),
        )
        terms.append(((-1) ** (a * b), body))
    return lhs, weighted_sum((k, l), (r, s), terms)


@relation('InvSchur', 'type_a', ('k', 'l'), _pairs)
def _inv_schur(p, N):
    k, l = p['k'], p['l']
    terms = []
    for b in range(max(0, k - l), k + 1):
        sign = (-1) ** (k * l + k - b)
        terms.append((sign, ladders([('E', b - k + l, 1), ('F', b, 1)], (k, l))))
    return cross(k, l), weighted_sum((k, l), (l, k), terms)


@relation('SquareSwitch', 'type_a', ('k', 'l', 'a', 'b'), _ladder_pairs)
def _square_switch(p, N):
    k, l, a, b = p['k'], p['l'], p['a'], p['b']
    K = (k, l)
    lhs = ladders([('E', a, 1), ('F', b, 1)], K)
    terms = [(gen_binom(k - l + a - b, x), ladders([('F', b - x, 1), ('E', a - x, 1)], K))
             for x in range(min(a, b) + 1)]
    return lhs, weighted_sum(K, lhs.target, terms)


@relation('MergeCrossCompat', 'type_a', ('k', 'l'), _pairs_fitting)
def _merge_cross(p, N):
    k, l = p['k'], p['l']
    return compose(merge(l, k), cross(k, l)), merge(k, l) * (-1) ** (k * l)


@relation('SplitCrossCompat', 'type_a', ('k', 'l'), _pairs_fitting)
def _split_cross(p, N):
    k, l = p['k'], p['l']
    return compose(cross(k, l), split(k, l)), split(l, k) * (-1) ** (k * l)


@relation('Naturality', 'type_a', ('j', 'k', 'l'), _naturality)
def _naturality_rel(p, N):
    j, k, l = p['j'], p['k'], p['l']
    lhs = compose(cross(j, k + l), tensor(ident(j), merge(k, l)))
    rhs = compose_all(
        tensor(merge(k, l), ident(j)),
        tensor(ident(k), cross(j, l)),
        tensor(cross(j, k), ident(l)),
    )
    return lhs, rhs


@relation('ReidemeisterII', 'type_a', ('k', 'l'), _pairs)
def _r2(p, N):
    k, l = p['k'], p['l']
    return compose(cross(l, k), cross(k, l)), ident(k, l)


@relation('ReidemeisterIII', 'type_a', ('a', 'b', 'c'), _triples)
def _r3(p, N):
    a, b, c = p['a'], p['b'], p['c']
    lhs = compose_all(
        tensor(cross(b, c), ident(a)),
        tensor(ident(b), cross(a, c)),
        tensor(cross(a, b), ident(c)),
    )
    rhs = compose_all(
        tensor(ident(c), cross(a, b)),
        tensor(cross(a, c), ident(b)),
        tensor(ident(a), cross(b, c)),
    )
    return lhs, rhs


# ---------------------------------------------------------------------------
# Orthogonal relations
# ---------------------------------------------------------------------------

@relation('CircleRemoval', 'orthogonal', ('k',), _singles)
def _circle_removal(p, N):
    k = p['k']
    return circle(k), ident() * comb(N, k)


@relation('Lollipop', 'orthogonal', ('l', 'a'), _lollipops)
def _lollipop(p, N):
    l, a = p['l'], p['a']
    k = l + 2 * a
    lhs = compose_all(
        tensor(ident(l), cap(a)),
        tensor(split(l, a), ident(a)),
        split(k - a, a),
    )
    return lhs, WebMorphism.zero((k,), (l,))


@relation('HigherEF', 'orthogonal', ('k', 'l', 'a', 'b'), _ladder_pairs)
def _higher_ef(p, N):
    k, l, a, b = p['k'], p['l'], p['a'], p['b']
    K = (k, l)
    lhs = ladders([('e', a, 1), ('f', b, 1)], K)
    terms = [(gen_binom(k + l - N + a - b, x), ladders([('f', b - x, 1), ('e', a - x, 1)], K))
             for x in range(min(a, b) + 1)]
    return lhs, weighted_sum(K, lhs.target, terms)


@relation('ReidemeisterI', 'orthogonal', ('k', 'side'), _reidemeister_one)
def _r1(p, N):
    k = p['k']
    if p['side'] == 'right':
        lhs = compose_all(tensor(ident(k), cap(k)), tensor(cross(k, k), ident(k)), tensor(ident(k), cup(k)))
    else:
        lhs = compose_all(tensor(cap(k), ident(k)), tensor(ident(k), cross(k, k)), tensor(cup(k), ident(k)))
    return lhs, ident(k)


@relation('SidewaysDigon', 'orthogonal', ('k', 'l'), _pairs_fitting)
def _sideways_digon(p, N):
    k, l = p['k'], p['l']
    lhs = compose_all(
        tensor(ident(k), cap(l)),
        tensor(split(k, l), ident(l)),
        tensor(merge(k, l), ident(l)),
        tensor(ident(k), cup(l)),
    )
    return lhs, ident(k) * comb(N - k, l)


@relation('EF1', 'orthogonal', ('k', 'l'), _all_pairs)
def _ef1(p, N):
    k, l = p['k'], p['l']
    K = (k, l)
    ef = ladders([('e', 1, 1), ('f', 1, 1)], K)
    fe = ladders([('f', 1, 1), ('e', 1, 1)], K)
    rhs = fe + ident(k, l) * (k + l) - tensor(circle(1), ident(k, l))
    return ef, rhs


@relation('Redundancy', 'orthogonal', ('k', 'l', 'a', 'b'), _redundancy)
def _redundancy_rel(p, N):
    k, l, a, b = p['k'], p['l'], p['a'], p['b']
    inner = ladders([('e', a, 1), ('f', b, 1)], (b, b))
    lhs = compose_all(
        tensor(merge(k - b, a), merge(a, l - b)),
        tensor_all(ident(k - b), inner, ident(l - b)),
        tensor(split(k - b, b), split(b, l - b)),
    )
    rhs = ladders([('e', a, 1), ('f', b, 1)], (k, l))
    return lhs, rhs


# ---------------------------------------------------------------------------
# Idempotented divided power relations on ladder images
# ---------------------------------------------------------------------------

def node_ladder(X: str, node: int, a: int, m: int) -> Tuple[str, int, int]:
    """E/F at node j < m acts on strands (j, j+1); node m uses e/f on strands (m-1, m)."""
    if node < m:
        return (X, a, node)
    return (X.lower(), a, m - 1)


def coroot(node: int, K: Sequence[int], N: int, m: int) -> int:
    if node < m:
        return K[node - 1] - K[node]
    return K[m - 2] + K[m - 1] - N


def root_vector(node: int, m: int) -> Tuple[int, ...]:
    v = [0] * m
    if node < m:
        v[node - 1], v[node] = 1, -1
    else:
        v[m - 2], v[m - 1] = 1, 1
    return tuple(v)


def adjacent(i: int, j: int, m: int) -> bool:
    if i == j:
        return False
    if i < m and j < m:
        return abs(i - j) == 1
    other = i if j == m else j
    return m >= 3 and other == m - 2


def _udot_blocks(N, m_values=(2, 3), **_):
    for m in m_values:
        for K in enumerate_compositions(m, N):
            yield m, tuple(K)


def _h_instances(N, m_values=(2, 3), a_max=2, **_):
    for m, K in _udot_blocks(N, m_values):
        for node in range(1, m + 1):
            for X in ('E', 'F'):
                for a in range(1, a_max + 1):
                    yield {'m': m, 'K': list(K), 'node': node, 'X': X, 'a': a}


def _ee_instances(N, m_values=(2, 3), a_max=2, **_):
    for m, K in _udot_blocks(N, m_values):
        for node in range(1, m + 1):
            for X in ('E', 'F'):
                for a, b in itertools.product(range(1, a_max + 1), repeat=2):
                    yield {'m': m, 'K': list(K), 'node': node, 'X': X, 'a': a, 'b': b}


def _ef_instances(which: str):
    def gen(N, m_values=(2, 3), a_max=2, **_):
        for m, K in _udot_blocks(N, m_values):
            nodes = range(1, m) if which == 'A' else [m]
            top = 1 if which == 'orth1' else a_max
            for node in nodes:
                for a, b in itertools.product(range(1, top + 1), repeat=2):
                    yield {'m': m, 'K': list(K), 'node': node, 'a': a, 'b': b}
    return gen


def _far_instances(N, m_values=(2, 3), a_max=2, **_):
    for m, K in _udot_blocks(N, m_values):
        for i, j in itertools.permutations(range(1, m + 1), 2):
            for a, b in itertools.product(range(1, a_max + 1), repeat=2):
                yield {'m': m, 'K': list(K), 'i': i, 'j': j, 'a': a, 'b': b}


def serre_degrees(i: int, j: int, m: int, c: int, higher: bool) -> range:
    """Degrees n > c * (-a_ij) of the Serre sums; the higher families add one more."""
    least = c * (1 if adjacent(i, j, m) else 0) + 1
    return range(least, least + (2 if higher else 1))


def _serre_instances(which: str, higher: bool):
    def gen(N, m_values=(2, 3), a_max=2, **_):
        for m, K in _udot_blocks(N, m_values):
            for i, j in itertools.permutations(range(1, m + 1), 2):
                involves_m = m in (i, j)
                if (which == 'A') == involves_m:
                    continue
                for X in ('E', 'F'):
                    for c in (range(1, a_max + 1) if higher else (1,)):
                        for n in serre_degrees(i, j, m, c, higher):
                            yield {'m': m, 'K': list(K), 'i': i, 'j': j, 'X': X, 'c': c, 'n': n}
    return gen


def _divided_instances(N, m_values=(2, 3), a_max=2, **_):
    for m, K in _udot_blocks(N, m_values):
        for node in range(1, m + 1):
            for X in ('E', 'F'):
                for a in range(2, a_max + 1):
                    yield {'m': m, 'K': list(K), 'node': node, 'X': X, 'a': a}


@relation('IdempotentH', 'udot', ('m', 'K', 'node', 'X', 'a'), _h_instances)
def _idempotent_h(p, N):
    """H_i X^(a) 1_K = <alpha_i, K +- a alpha_i> X^(a) 1_K, with H_i = E_i F_i - F_i E_i."""
    m, K, node, X, a = p['m'], tuple(p['K']), p['node'], p['X'], p['a']
    sign = 1 if X == 'E' else -1
    shifted = tuple(k + sign * a * r for k, r in zip(K, root_vector(node, m)))
    if coroot(node, shifted, N, m) - coroot(node, K, N, m) != 2 * sign * a:
        raise BoundaryMismatch(f'coroot of node {node} does not pair to 2 with its root')
    if min(shifted) < 0:
        raise LabelError(f'X^({a}) at node {node} makes a label of {K} negative')
    x = ladders([node_ladder(X, node, a, m)], K)
    ef = ladders([node_ladder('E', node, 1, m), node_ladder('F', node, 1, m)], shifted)
    fe = ladders([node_ladder('F', node, 1, m), node_ladder('E', node, 1, m)], shifted)
    return compose(ef - fe, x), x * coroot(node, shifted, N, m)


@relation('DividedEE', 'udot', ('m', 'K', 'node', 'X', 'a', 'b'), _ee_instances)
def _divided_ee(p, N):
    m, K, node, X, a, b = p['m'], tuple(p['K']), p['node'], p['X'], p['a'], p['b']
    lhs = ladders([node_ladder(X, node, a, m), node_ladder(X, node, b, m)], K)
    rhs = ladders([node_ladder(X, node, a + b, m)], K) * comb(a + b, a)
    return lhs, rhs


def _ef_same_node(p, N):
    m, K, node, a, b = p['m'], tuple(p['K']), p['node'], p['a'], p['b']
    lam = coroot(node, K, N, m)
    lhs = ladders([node_ladder('E', node, a, m), node_ladder('F', node, b, m)], K)
    terms = [(gen_binom(lam + a - b, x),
              ladders([node_ladder('F', node, b - x, m), node_ladder('E', node, a - x, m)], K))
             for x in range(min(a, b) + 1)]
    return lhs, weighted_sum(K, lhs.target, terms)


relation('HigherEFA', 'udot', ('m', 'K', 'node', 'a', 'b'), _ef_instances('A'))(_ef_same_node)
relation('EvenOrthEF', 'udot', ('m', 'K', 'node', 'a', 'b'), _ef_instances('orth1'))(_ef_same_node)
relation('HigherEvenOrthEF', 'udot', ('m', 'K', 'node', 'a', 'b'), _ef_instances('orth'))(_ef_same_node)


@relation('FarCommute', 'udot', ('m', 'K', 'i', 'j', 'a', 'b'), _far_instances)
def _far_commute(p, N):
    m, K, i, j, a, b = p['m'], tuple(p['K']), p['i'], p['j'], p['a'], p['b']
    lhs = ladders([node_ladder('E', i, a, m), node_ladder('F', j, b, m)], K)
    rhs = ladders([node_ladder('F', j, b, m), node_ladder('E', i, a, m)], K)
    return lhs, rhs


def _serre(p, N):
    """sum_{s+r=n} (-1)^r X_i^(s) X_j^(c) X_i^(r) 1_K = 0; n = 1 is X_i X_j^(c) = X_j^(c) X_i."""
    m, K, i, j, X, c, n = p['m'], tuple(p['K']), p['i'], p['j'], p['X'], p['c'], p['n']
    if n < serre_degrees(i, j, m, c, False).start:
        raise WebsError(f'Serre degree {n} out of range for nodes {i}, {j} and c={c}')
    terms = []
    for r in range(n + 1):
        s = n - r
        terms.append(((-1) ** r, ladders([node_ladder(X, i, s, m), node_ladder(X, j, c, m),
                                          node_ladder(X, i, r, m)], K)))
    target = terms[0][1].target
    return weighted_sum(K, target, terms), WebMorphism.zero(K, target)


relation('SerreA', 'udot', ('m', 'K', 'i', 'j', 'X', 'c', 'n'), _serre_instances('A', False))(_serre)
relation('HigherSerreA', 'udot', ('m', 'K', 'i', 'j', 'X', 'c', 'n'), _serre_instances('A', True))(_serre)
relation('EvenOrthSerre', 'udot', ('m', 'K', 'i', 'j', 'X', 'c', 'n'), _serre_instances('orth', False))(_serre)
relation('HigherEvenOrthSerre', 'udot', ('m', 'K', 'i', 'j', 'X', 'c', 'n'),
         _serre_instances('orth', True))(_serre)


@relation('DividedPowers', 'udot', ('m', 'K', 'node', 'X', 'a'), _divided_instances)
def _divided_powers(p, N):
    m, K, node, X, a = p['m'], tuple(p['K']), p['node'], p['X'], p['a']
    lhs = ladders([node_ladder(X, node, a, m)], K) * factorial(a)
    rhs = ladders([node_ladder(X, node, 1, m)] * a, K)
    return lhs, rhs


# ---------------------------------------------------------------------------
# Checking
# ---------------------------------------------------------------------------

def get_relation(rel_id: str) -> Relation:
    try:
        return RELATIONS[rel_id]
    except KeyError:
        raise WebsError(f'unknown relation {rel_id!r}; known: {", ".join(sorted(RELATIONS))}') from None


def check_relation(rel_id: str, params: Params, N: int, spec: FieldSpec = QQ) -> bool:
    rel = get_relation(rel_id)
    try:
        lhs, rhs = rel.build(params, N)
    except LabelError as exc:
        logger.warning('vacuous instance %s %s at N=%s: %s', rel_id, params, N, exc)
        return True
    ok = evaluate(lhs, N, spec) == evaluate(rhs, N, spec)
    logger.debug('%s %s N=%s over %s: %s', rel_id, params, N, spec, 'pass' if ok else 'FAIL')
    return ok


def run_instance(rel_id: str, params: Params, N: int, spec: FieldSpec = QQ) -> Dict:
    """One JSON-ready report record."""
    start = time.perf_counter()
    try:
        ok = check_relation(rel_id, params, N, spec)
        error = None
    except BoundaryMismatch as exc:
        ok, error = False, str(exc)
    record = {
        'id': rel_id,
        'params': params,
        'N': N,
        'field': spec.label,
        'pass': ok,
        'elapsed': round(time.perf_counter() - start, 6),
    }
    if error:
        record['error'] = error
    return record


def relation_instances(rel_id: str, N: int, all_labels: bool = False, a_max: int = 2,
                       m_values: Sequence[int] = (2, 3)) -> List[Params]:
    rel = get_relation(rel_id)
    return list(rel.instances(N, all_labels=all_labels, a_max=a_max, m_values=tuple(m_values)))


def check_udot_relations(m: int, N: int, a_max: int = 2, spec: FieldSpec = QQ) -> Dict:
    """Every idempotented divided power family on the ladder images for one m."""
    if m < 2:
        raise WebsError('the idempotented relations need m >= 2')
    families: Dict[str, Dict[str, int]] = {}
    failures = []
    for rel_id in sorted(r.id for r in RELATIONS.values() if r.family == 'udot'):
        counts = {'checked': 0, 'failed': 0}
        for params in relation_instances(rel_id, N, a_max=a_max, m_values=(m,)):
            record = run_instance(rel_id, params, N, spec)
            counts['checked'] += 1
            if not record['pass']:
                counts['failed'] += 1
                failures.append(record)
        families[rel_id] = counts
    return {
        'm': m,
        'N': N,
        'a_max': a_max,
        'field': spec.label,
        'families': families,
        'failures': failures,
        'pass': not failures,
    }
