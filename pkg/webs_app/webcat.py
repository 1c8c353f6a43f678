# webs_app/webcat.py
"""
The syntactic web category.

A WebDiagram is a source label tuple plus a list of generator slices read
bottom to top. A WebMorphism is a finite formal combination of diagrams with
a shared boundary. Nothing here evaluates; equality of morphisms is decided
by evalfun.
"""
from __future__ import annotations

import itertools
import json
import logging
import random
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .exceptions import BoundaryMismatch, DiagramFormatError, LabelError

logger = logging.getLogger(__name__)

Labels = Tuple[int, ...]
Coeff = Union[int, Fraction]

SLICE_KINDS = ('merge', 'split', 'cross', 'cap', 'cup')


@dataclass(frozen=True)
class Slice:
    """One generator placed with its leftmost strand at position pos (0-indexed)."""
    kind: str
    k: int
    l: int = 0
    pos: int = 0

    def __post_init__(self):
        if self.kind not in SLICE_KINDS:
            raise DiagramFormatError(f'unknown slice kind {self.kind!r}')
        if self.kind in ('cap', 'cup'):
            object.__setattr__(self, 'l', self.k)
        if self.k < 0 or self.l < 0:
            raise LabelError(f'negative label in {self.kind}({self.k}, {self.l})')
        if self.pos < 0:
            raise DiagramFormatError(f'negative position {self.pos}')

    @property
    def in_labels(self) -> Labels:
        return {
            'merge': (self.k, self.l),
            'split': (self.k + self.l,),
            'cross': (self.k, self.l),
            'cap': (self.k, self.k),
            'cup': (),
        }[self.kind]

    @property
    def out_labels(self) -> Labels:
        return {
            'merge': (self.k + self.l,),
            'split': (self.k, self.l),
            'cross': (self.l, self.k),
            'cap': (),
            'cup': (self.k, self.k),
        }[self.kind]

    def apply(self, labels: Sequence[int]) -> Labels:
        labels = tuple(labels)
        width = len(self.in_labels)
        if self.pos + width > len(labels) or (width == 0 and self.pos > len(labels)):
            raise BoundaryMismatch(f'{self} does not fit on {labels}')
        if labels[self.pos:self.pos + width] != self.in_labels:
            raise BoundaryMismatch(f'{self} expects {self.in_labels} at {self.pos}, found {labels}')
        return labels[:self.pos] + self.out_labels + labels[self.pos + width:]

    def shifted(self, offset: int) -> 'Slice':
        return Slice(self.kind, self.k, self.l, self.pos + offset)

    def flipped(self) -> 'Slice':
        """The upside-down slice."""
        kind = {'merge': 'split', 'split': 'merge', 'cap': 'cup', 'cup': 'cap', 'cross': 'cross'}[self.kind]
        if self.kind == 'cross':
            return Slice('cross', self.l, self.k, self.pos)
        return Slice(kind, self.k, self.l, self.pos)

    def to_json(self) -> Dict:
        data = {'kind': self.kind, 'k': self.k, 'pos': self.pos}
        if self.kind not in ('cap', 'cup'):
            data['l'] = self.l
        return data

    def __str__(self):
        args = f'{self.k}' if self.kind in ('cap', 'cup') else f'{self.k},{self.l}'
        return f'{self.kind}({args})@{self.pos}'


@dataclass(frozen=True)
class WebDiagram:
    source: Labels
    slices: Tuple[Slice, ...] = ()
    target: Labels = dc_field(default=None, compare=False)

    def __post_init__(self):
        src = tuple(int(k) for k in self.source)
        if any(k < 0 for k in src):
            raise LabelError(f'negative label in source {src}')
        object.__setattr__(self, 'source', src)
        object.__setattr__(self, 'slices', tuple(self.slices))
        labels = src
        for s in self.slices:
            labels = s.apply(labels)
        if self.target is not None and tuple(self.target) != labels:
            raise BoundaryMismatch(f'declared target {tuple(self.target)} but slices end at {labels}')
        object.__setattr__(self, 'target', labels)

    def levels(self) -> List[Labels]:
        """Label tuples between slices, bottom to top."""
        out = [self.source]
        for s in self.slices:
            out.append(s.apply(out[-1]))
        return out

    def then(self, other: 'WebDiagram') -> 'WebDiagram':
        """other composed on top of self."""
        if other.source != self.target:
            raise BoundaryMismatch(f'cannot stack {other.source} on {self.target}')
        return WebDiagram(self.source, self.slices + other.slices)

    def __len__(self):
        return len(self.slices)

    def flipped(self) -> 'WebDiagram':
        return WebDiagram(self.target, tuple(s.flipped() for s in reversed(self.slices)))

    def normal_form(self) -> 'WebDiagram':
        """Drop zero-labelled strands together with every slice that only touches them."""
        labels = list(self.source)
        slices = []
        for s in self.slices:
            new_pos = sum(1 for k in labels[:s.pos] if k != 0)
            touched = s.in_labels + s.out_labels
            if 0 not in touched:
                slices.append(s.shifted(new_pos - s.pos))
            labels = list(s.apply(labels))
        return WebDiagram(tuple(k for k in self.source if k != 0), tuple(slices))

    def to_json(self) -> Dict:
        return {'source': list(self.source), 'target': list(self.target),
                'slices': [s.to_json() for s in self.slices]}

    def __str__(self):
        body = ' ; '.join(str(s) for s in self.slices) or 'id'
        return f'{self.source} -> {self.target}: {body}'


def identity_diagram(labels: Sequence[int]) -> WebDiagram:
    return WebDiagram(tuple(labels))


def stack(*diagrams: WebDiagram) -> WebDiagram:
    """Stack diagrams bottom to top."""
    out = diagrams[0]
    for d in diagrams[1:]:
        out = out.then(d)
    return out


def tensor_diagrams(f: WebDiagram, g: WebDiagram) -> WebDiagram:
    """f to the left of g: f runs first, then g shifted past f's target."""
    first = tuple(f.slices)
    second = tuple(s.shifted(len(f.target)) for s in g.slices)
    return WebDiagram(f.source + g.source, first + second)


def diagram_from_slices(source: Sequence[int], specs: Iterable[Tuple]) -> WebDiagram:
    """Build from (kind, k, l, pos) or (kind, k, pos) tuples."""
    slices = []
    for spec in specs:
        if spec[0] in ('cap', 'cup'):
            kind, k, pos = spec
            slices.append(Slice(kind, k, k, pos))
        else:
            kind, k, l, pos = spec
            slices.append(Slice(kind, k, l, pos))
    return WebDiagram(tuple(source), tuple(slices))


# ---------------------------------------------------------------------------
# Formal combinations
# ---------------------------------------------------------------------------

class WebMorphism:
    """A finite formal combination of diagrams K -> L with rational coefficients."""

    __slots__ = ('source', 'target', 'terms')

    def __init__(self, source: Sequence[int], target: Sequence[int],
                 terms: Optional[Dict[WebDiagram, Coeff]] = None):
        self.source = tuple(source)
        self.target = tuple(target)
        self.terms: Dict[WebDiagram, Coeff] = {}
        for d, c in (terms or {}).items():
            if d.source != self.source or d.target != self.target:
                raise BoundaryMismatch(f'diagram {d} is not a morphism {self.source} -> {self.target}')
            if c:
                self.terms[d] = self.terms.get(d, 0) + c
        self.terms = {d: c for d, c in self.terms.items() if c}

    @classmethod
    def of(cls, diagram: WebDiagram, coeff: Coeff = 1) -> 'WebMorphism':
        return cls(diagram.source, diagram.target, {diagram: coeff})

    @classmethod
    def zero(cls, source: Sequence[int], target: Sequence[int]) -> 'WebMorphism':
        return cls(source, target)

    @classmethod
    def identity(cls, labels: Sequence[int]) -> 'WebMorphism':
        return cls.of(identity_diagram(labels))

    def _check_parallel(self, other: 'WebMorphism'):
        if (self.source, self.target) != (other.source, other.target):
            raise BoundaryMismatch(f'{self.source}->{self.target} vs {other.source}->{other.target}')

    def __add__(self, other: 'WebMorphism') -> 'WebMorphism':
        self._check_parallel(other)
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms.get(d, 0) + c
        return WebMorphism(self.source, self.target, terms)

    def __neg__(self) -> 'WebMorphism':
        return self * -1

    def __sub__(self, other: 'WebMorphism') -> 'WebMorphism':
        return self + (-other)

    def __mul__(self, scalar: Coeff) -> 'WebMorphism':
        return WebMorphism(self.source, self.target, {d: c * scalar for d, c in self.terms.items()})

    __rmul__ = __mul__

    def __iter__(self) -> Iterator[Tuple[WebDiagram, Coeff]]:
        return iter(sorted(self.terms.items(), key=lambda dc: str(dc[0])))

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, WebMorphism):
            return NotImplemented
        return (self.source, self.target, self.terms) == (other.source, other.target, other.terms)

    __hash__ = None

    def __repr__(self):
        return f'WebMorphism({self.source} -> {self.target}, {len(self.terms)} terms)'


def compose(g: WebMorphism, f: WebMorphism) -> WebMorphism:
    """g after f."""
    if f.target != g.source:
        raise BoundaryMismatch(f'cannot compose {g.source}->{g.target} after {f.source}->{f.target}')
    terms: Dict[WebDiagram, Coeff] = {}
    for df, cf in f.terms.items():
        for dg, cg in g.terms.items():
            d = df.then(dg)
            terms[d] = terms.get(d, 0) + cf * cg
    return WebMorphism(f.source, g.target, terms)


def tensor(f: WebMorphism, g: WebMorphism) -> WebMorphism:
    terms: Dict[WebDiagram, Coeff] = {}
    for df, cf in f.terms.items():
        for dg, cg in g.terms.items():
            d = tensor_diagrams(df, dg)
            terms[d] = terms.get(d, 0) + cf * cg
    return WebMorphism(f.source + g.source, f.target + g.target, terms)


def compose_all(*morphisms: WebMorphism) -> WebMorphism:
    """Compose right to left, as written: compose_all(h, g, f) = h o g o f."""
    out = morphisms[-1]
    for m in reversed(morphisms[:-1]):
        out = compose(m, out)
    return out


def tensor_all(*morphisms: WebMorphism) -> WebMorphism:
    out = morphisms[0]
    for m in morphisms[1:]:
        out = tensor(out, m)
    return out


# ---------------------------------------------------------------------------
# Named generators
# ---------------------------------------------------------------------------

def _gen(kind: str, k: int, l: int = 0) -> WebMorphism:
    s = Slice(kind, k, l, 0)
    return WebMorphism.of(WebDiagram(s.in_labels, (s,)))


def merge(k: int, l: int) -> WebMorphism:
    return _gen('merge', k, l)


def split(k: int, l: int) -> WebMorphism:
    return _gen('split', k, l)


def cross(k: int, l: int) -> WebMorphism:
    return _gen('cross', k, l)


def cap(k: int) -> WebMorphism:
    return _gen('cap', k)


def cup(k: int) -> WebMorphism:
    return _gen('cup', k)


def ident(*labels: int) -> WebMorphism:
    return WebMorphism.identity(labels)


def circle(k: int) -> WebMorphism:
    return compose(cap(k), cup(k))


def digon(k: int, l: int) -> WebMorphism:
    return compose(merge(k, l), split(k, l))


def closure_diagram(d: WebDiagram) -> WebDiagram:
    """Close an endomorphism of K with nested cups and caps on its right."""
    if d.source != d.target:
        raise BoundaryMismatch(f'closure needs an endomorphism, got {d.source} -> {d.target}')
    K = d.source
    r = len(K)
    slices = [Slice('cup', k, k, i) for i, k in enumerate(K)]
    slices += list(d.slices)
    slices += [Slice('cap', K[i], K[i], i) for i in reversed(range(r))]
    return WebDiagram((), tuple(slices))


def closure(f: WebMorphism) -> WebMorphism:
    if f.source != f.target:
        raise BoundaryMismatch(f'closure needs an endomorphism, got {f.source} -> {f.target}')
    return WebMorphism((), (), {closure_diagram(d): c for d, c in f.terms.items()})


def rotate(d: WebDiagram, direction: str = 'right') -> WebDiagram:
    """
    Pivotal rotation. 'right' bends the rightmost source strand up to the right
    end of the target; 'left' bends the rightmost target strand down.
    """
    if direction == 'right':
        if not d.source:
            raise BoundaryMismatch('nothing to rotate on an empty source')
        a = d.source[-1]
        rest = len(d.source) - 1
        bend = WebDiagram(d.source[:-1], (Slice('cup', a, a, rest),))
        return bend.then(tensor_diagrams(d, identity_diagram((a,))))
    if direction == 'left':
        if not d.target:
            raise BoundaryMismatch('nothing to rotate on an empty target')
        b = d.target[-1]
        rest = len(d.target) - 1
        body = tensor_diagrams(d, identity_diagram((b,)))
        return body.then(WebDiagram(body.target, (Slice('cap', b, b, rest),)))
    raise DiagramFormatError(f'rotation direction must be left or right, got {direction!r}')


# ---------------------------------------------------------------------------
# Ladders
# ---------------------------------------------------------------------------

LADDER_KINDS = ('E', 'F', 'e', 'f')


def ladder(kind: str, a: int, i: int, K: Sequence[int]) -> WebDiagram:
    """
    The divided power ladder on strands i, i+1 (1-indexed) of K.

    E^(a) moves a from strand i+1 to strand i, F^(a) the other way,
    e^(a) adds a to both strands through a cup, f^(a) removes a from both
    through a cap.
    """
    K = tuple(K)
    if kind not in LADDER_KINDS:
        raise DiagramFormatError(f'unknown ladder kind {kind!r}')
    if not 1 <= i < len(K):
        raise DiagramFormatError(f'strand {i} has no right neighbour in {K}')
    if a < 0:
        raise LabelError(f'negative divided power {a}')
    if a == 0:
        return identity_diagram(K)
    p0 = i - 1
    ki, kj = K[p0], K[p0 + 1]
    if kind == 'E':
        if kj < a:
            raise LabelError(f'E^({a}) needs {a} <= {kj}')
        slices = [Slice('split', a, kj - a, p0 + 1), Slice('merge', ki, a, p0)]
    elif kind == 'F':
        if ki < a:
            raise LabelError(f'F^({a}) needs {a} <= {ki}')
        slices = [Slice('split', ki - a, a, p0), Slice('merge', a, kj, p0 + 1)]
    elif kind == 'e':
        slices = [Slice('cup', a, a, p0 + 1), Slice('merge', a, kj, p0 + 2), Slice('merge', ki, a, p0)]
    else:
        if ki < a or kj < a:
            raise LabelError(f'f^({a}) needs {a} <= {ki} and {a} <= {kj}')
        slices = [Slice('split', a, kj - a, p0 + 1), Slice('split', ki - a, a, p0),
                  Slice('cap', a, a, p0 + 1)]
    return WebDiagram(K, tuple(slices))


def ladder_target(kind: str, a: int, i: int, K: Sequence[int]) -> Labels:
    K = list(K)
    p0 = i - 1
    delta = {'E': (a, -a), 'F': (-a, a), 'e': (a, a), 'f': (-a, -a)}[kind]
    K[p0] += delta[0]
    K[p0 + 1] += delta[1]
    return tuple(K)


def ladder_word(word: Sequence[Tuple[str, int, int]], K: Sequence[int]) -> WebDiagram:
    """Apply ladders right to left: word [(X, a, i), ...] means X_1 X_2 ... 1_K."""
    d = identity_diagram(K)
    for kind, a, i in reversed(list(word)):
        d = d.then(ladder(kind, a, i, d.target))
    return d


# ---------------------------------------------------------------------------
# Zero strands
# ---------------------------------------------------------------------------

def drop_zero_strands(labels: Sequence[int]) -> WebDiagram:
    """A diagram from labels to labels-without-zeros evaluating to the identity."""
    d = identity_diagram(labels)
    while 0 in d.target:
        cur = d.target
        p = cur.index(0)
        if p + 1 < len(cur) and cur[p + 1] != 0:
            s = [Slice('merge', 0, cur[p + 1], p)]
        elif p > 0 and cur[p - 1] != 0:
            s = [Slice('merge', cur[p - 1], 0, p - 1)]
        elif p + 1 < len(cur):
            s = [Slice('cap', 0, 0, p)]
        elif p > 0:
            s = [Slice('cap', 0, 0, p - 1)]
        else:
            s = [Slice('cup', 0, 0, 1), Slice('merge', 0, 0, 0), Slice('cap', 0, 0, 0)]
        d = d.then(WebDiagram(cur, tuple(s)))
    return d


def wrap_zero_strands(core: WebDiagram, source: Sequence[int], target: Sequence[int]) -> WebDiagram:
    """Extend a diagram between zero-free labels to the given labels with zeros."""
    bottom = drop_zero_strands(source)
    top = drop_zero_strands(target).flipped()
    return stack(bottom, core, top)


# ---------------------------------------------------------------------------
# Sandwich diagrams
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SandwichShape:
    """
    The combinatorial datum of an fmf diagram between zero-free K and L.

    through[i][j]: thickness running from source block i to target block j
    caps: ((i, i2), c) with i < i2, a cap of thickness c between source blocks
    cups: ((j, j2), d) with j < j2, a cup of thickness d between target blocks
    """
    source: Labels
    target: Labels
    through: Tuple[Tuple[int, ...], ...]
    caps: Tuple[Tuple[Tuple[int, int], int], ...] = ()
    cups: Tuple[Tuple[Tuple[int, int], int], ...] = ()

    def diagram(self) -> WebDiagram:
        return build_sandwich(self.source, self.target, self.through, dict(self.caps), dict(self.cups))


class _Strands:
    """Mutable piece list used while wiring a sandwich."""

    def __init__(self, labels: Sequence[int], tags: Sequence):
        self.labels = list(labels)
        self.tags = list(tags)
        self.slices: List[Slice] = []

    def split_block(self, pos: int, pieces: Sequence[Tuple[object, int]]):
        """Left comb split of the strand at pos into the given (tag, thickness) pieces."""
        rest = self.labels[pos]
        p = pos
        for n, (tag, size) in enumerate(pieces):
            if n == len(pieces) - 1:
                self.tags[p] = tag
                break
            rest -= size
            self.slices.append(Slice('split', size, rest, p))
            self.labels[p:p + 1] = [size, rest]
            self.tags[p:p + 1] = [tag, None]
            p += 1

    def merge_block(self, pos: int, count: int, tag):
        """Right comb merge of count strands starting at pos into one strand."""
        for p in reversed(range(pos, pos + count - 1)):
            k, l = self.labels[p], self.labels[p + 1]
            self.slices.append(Slice('merge', k, l, p))
            self.labels[p:p + 2] = [k + l]
            self.tags[p:p + 2] = [tag]

    def sort_by(self, key):
        """Bubble sort with thick crossings; uses the minimal number of swaps."""
        changed = True
        while changed:
            changed = False
            for p in range(len(self.labels) - 1):
                if key(self.tags[p]) > key(self.tags[p + 1]):
                    k, l = self.labels[p], self.labels[p + 1]
                    self.slices.append(Slice('cross', k, l, p))
                    self.labels[p], self.labels[p + 1] = l, k
                    self.tags[p], self.tags[p + 1] = self.tags[p + 1], self.tags[p]
                    changed = True

    def cap_right_end(self):
        k = self.labels[-1]
        self.slices.append(Slice('cap', k, k, len(self.labels) - 2))
        del self.labels[-2:]
        del self.tags[-2:]

    def cup_right_end(self, d: int, left_tag, right_tag):
        self.slices.append(Slice('cup', d, d, len(self.labels)))
        self.labels += [d, d]
        self.tags += [left_tag, right_tag]


def build_sandwich(source: Sequence[int], target: Sequence[int], through: Sequence[Sequence[int]],
                   caps: Optional[Dict[Tuple[int, int], int]] = None,
                   cups: Optional[Dict[Tuple[int, int], int]] = None) -> WebDiagram:
    """
    Wire source blocks to target blocks (both zero-free, blocks 0-indexed):
    split every source block into through and cap pieces, sort the pieces with
    crossings so that cap partners sit adjacent at the right end, cap them, cup
    new pairs at the right end, sort into target order and merge each block.
    """
    source, target = tuple(source), tuple(target)
    caps = {tuple(sorted(k)): v for k, v in (caps or {}).items() if v}
    cups = {tuple(sorted(k)): v for k, v in (cups or {}).items() if v}
    r, s = len(source), len(target)
    for i in range(r):
        used = sum(through[i][j] for j in range(s)) + sum(c for (a, b), c in caps.items() if i in (a, b))
        if used != source[i]:
            raise BoundaryMismatch(f'source block {i} has label {source[i]} but the datum uses {used}')
    for j in range(s):
        used = sum(through[i][j] for i in range(r)) + sum(d for (a, b), d in cups.items() if j in (a, b))
        if used != target[j]:
            raise BoundaryMismatch(f'target block {j} has label {target[j]} but the datum uses {used}')
    if any(a == b for a, b in caps) or any(a == b for a, b in cups):
        raise BoundaryMismatch('caps and cups must join distinct blocks')

    strands = _Strands(source, [('src', i) for i in range(r)])
    # 1. split source blocks, right to left so earlier positions stay put
    for i in reversed(range(r)):
        pieces = [(('t', i, j), through[i][j]) for j in range(s) if through[i][j]]
        for (a, b), c in sorted(caps.items()):
            if i == a:
                pieces.append((('c', a, b, 0), c))
            elif i == b:
                pieces.append((('c', a, b, 1), c))
        if pieces:
            strands.split_block(i, pieces)

    def bottom_key(tag):
        if tag[0] == 't':
            return (0, tag[2], tag[1])
        return (1, tag[1], tag[2], tag[3])

    # 2. crossings, 3. caps
    strands.sort_by(bottom_key)
    for _ in range(len(caps)):
        strands.cap_right_end()
    # 4. cups
    for (a, b), d in sorted(cups.items()):
        strands.cup_right_end(d, ('d', a, b), ('d', b, a))

    def top_key(tag):
        if tag[0] == 't':
            return (tag[2], 0, tag[1])
        if tag[0] == 'tgt':
            return (tag[1], 2, 0)
        return (tag[1], 1, tag[2])

    # 5. crossings into target order, 6. merges, right to left
    strands.sort_by(top_key)
    for j in reversed(range(s)):
        start = next(p for p, tag in enumerate(strands.tags) if top_key(tag)[0] == j)
        count = sum(1 for tag in strands.tags if top_key(tag)[0] == j)
        strands.merge_block(start, count, ('tgt', j))
    return WebDiagram(source, tuple(strands.slices), target=target)


def _symmetric_matchings(labels: Labels) -> Iterator[Dict[Tuple[int, int], int]]:
    """All assignments of thicknesses to pairs of distinct blocks within the label budgets."""
    pairs = [(a, b) for a in range(len(labels)) for b in range(a + 1, len(labels))]

    def rec(idx: int, budget: List[int], chosen: Dict):
        if idx == len(pairs):
            yield dict(chosen)
            return
        a, b = pairs[idx]
        for c in range(min(budget[a], budget[b]) + 1):
            budget[a] -= c
            budget[b] -= c
            if c:
                chosen[(a, b)] = c
            yield from rec(idx + 1, budget, chosen)
            chosen.pop((a, b), None)
            budget[a] += c
            budget[b] += c

    yield from rec(0, list(labels), {})


def _contingency_tables(rows: Sequence[int], cols: Sequence[int]) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    r, s = len(rows), len(cols)
    if sum(rows) != sum(cols):
        return
    if r == 0:
        yield ()
        return
    first, rest = rows[0], rows[1:]

    def first_rows(j: int, remaining: int, prefix: Tuple[int, ...]):
        if j == s - 1:
            if remaining <= cols[j]:
                yield prefix + (remaining,)
            return
        for x in range(min(remaining, cols[j]) + 1):
            yield from first_rows(j + 1, remaining - x, prefix + (x,))

    if s == 0:
        if first == 0 and all(x == 0 for x in rest):
            yield tuple(() for _ in rows)
        return
    for row in first_rows(0, first, ()):
        left = [c - x for c, x in zip(cols, row)]
        for tail in _contingency_tables(rest, left):
            yield (row,) + tail


def enumerate_shapes(K: Sequence[int], L: Sequence[int]) -> List[SandwichShape]:
    """Every fmf datum between the zero-free parts of K and L, in a fixed order."""
    K0 = tuple(k for k in K if k)
    L0 = tuple(l for l in L if l)
    shapes = []
    for caps in _symmetric_matchings(K0):
        row_left = [k - sum(c for (a, b), c in caps.items() if i in (a, b)) for i, k in enumerate(K0)]
        for cups in _symmetric_matchings(L0):
            col_left = [l - sum(d for (a, b), d in cups.items() if j in (a, b)) for j, l in enumerate(L0)]
            for table in _contingency_tables(row_left, col_left):
                shapes.append(SandwichShape(K0, L0, table, tuple(sorted(caps.items())),
                                            tuple(sorted(cups.items()))))
    return shapes


def enumerate_fmf(K: Sequence[int], L: Sequence[int]) -> List[WebDiagram]:
    """fmf sandwich diagrams K -> L; zero strands are absorbed at both ends."""
    K, L = tuple(K), tuple(L)
    return [wrap_zero_strands(shape.diagram(), K, L) for shape in enumerate_shapes(K, L)]


def _perfect_matchings(items: Sequence[int]) -> Iterator[List[Tuple[int, int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for n, partner in enumerate(rest):
        for tail in _perfect_matchings(rest[:n] + rest[n + 1:]):
            yield [(first, partner)] + tail


def _partial_matchings(labels: Labels) -> Iterator[List[Tuple[int, int]]]:
    """Matchings of blocks with equal labels; unmatched blocks stay free."""
    idx = list(range(len(labels)))
    for size in range(len(idx) // 2 + 1):
        for chosen in itertools.combinations(idx, 2 * size):
            for matching in _perfect_matchings(list(chosen)):
                if all(labels[a] == labels[b] for a, b in matching):
                    yield matching


def _mfm_half(labels: Labels, matching: List[Tuple[int, int]]) -> WebDiagram:
    """Cap the matched whole blocks, merge the free ones into a single strand."""
    strands = _Strands(labels, [('b', i) for i in range(len(labels))])
    rank = {}
    for n, (a, b) in enumerate(sorted(matching)):
        rank[a], rank[b] = (1, n, 0), (1, n, 1)

    strands.sort_by(lambda tag: rank.get(tag[1], (0, tag[1], 0)))
    for _ in matching:
        strands.cap_right_end()
    if len(strands.labels) > 1:
        strands.merge_block(0, len(strands.labels), ('mid',))
    return WebDiagram(labels, tuple(strands.slices))


def enumerate_mfm(K: Sequence[int], L: Sequence[int]) -> List[WebDiagram]:
    """
    mfm sandwich diagrams: whole blocks are capped in equal-label pairs or merged
    into one middle strand, and the mirror image builds L. Smaller than fmf and
    not spanning in general.
    """
    K, L = tuple(K), tuple(L)
    K0 = tuple(k for k in K if k)
    L0 = tuple(l for l in L if l)
    out = []
    for bottom_match in _partial_matchings(K0):
        bottom = _mfm_half(K0, bottom_match)
        for top_match in _partial_matchings(L0):
            top = _mfm_half(L0, top_match).flipped()
            if bottom.target != top.source:
                continue
            out.append(wrap_zero_strands(bottom.then(top), K, L))
    return out


_ZONE_LETTERS = {'split': 's', 'cross': 'x', 'cap': 'a', 'cup': 'u', 'merge': 'm'}
_ZONE_RE = re.compile(r'^s*x*a*u*x*m*$')


def respects_zones(d: WebDiagram) -> bool:
    """
    Slice kinds read split* cross* cap* cup* cross* merge*, ignoring the
    zero-strand bookkeeping at both ends.
    """
    word = ''.join(_ZONE_LETTERS[s.kind] for s in d.normal_form().slices)
    return bool(_ZONE_RE.match(word))


# ---------------------------------------------------------------------------
# Random composites
# ---------------------------------------------------------------------------

def random_walk(K: Sequence[int], rng: random.Random, steps: int, max_label: int) -> WebDiagram:
    """A random generator composite starting at K with every label at most max_label."""
    d = identity_diagram(K)
    for _ in range(steps):
        cur = d.target
        options: List[Slice] = []
        for p in range(len(cur) - 1):
            a, b = cur[p], cur[p + 1]
            if a and b and a + b <= max_label:
                options.append(Slice('merge', a, b, p))
            if a and b:
                options.append(Slice('cross', a, b, p))
            if a and a == b:
                options.append(Slice('cap', a, a, p))
        for p, a in enumerate(cur):
            options += [Slice('split', x, a - x, p) for x in range(1, a)]
        for p in range(len(cur) + 1):
            options += [Slice('cup', x, x, p) for x in range(1, max_label + 1)]
        s = rng.choice(options)
        d = d.then(WebDiagram(cur, (s,)))
    return d


def random_composite(K: Sequence[int], L: Sequence[int], rng: random.Random,
                     steps: int = 4, max_label: int = 3) -> Optional[WebDiagram]:
    """A random walk from K closed off by a random fmf diagram into L; None if the walk strands."""
    walk = random_walk(K, rng, steps, max_label)
    closers = enumerate_fmf(walk.target, L)
    if not closers:
        return None
    return walk.then(rng.choice(closers))


# ---------------------------------------------------------------------------
# JSON codec
# ---------------------------------------------------------------------------

def slice_from_json(data: Dict) -> Slice:
    try:
        kind = data['kind']
        k = int(data['k'])
        l = int(data.get('l', k if kind in ('cap', 'cup') else 0))
        return Slice(kind, k, l, int(data.get('pos', 0)))
    except (KeyError, TypeError, ValueError) as exc:
        raise DiagramFormatError(f'bad slice {data!r}') from exc


def diagram_from_json(data: Union[str, Dict]) -> WebDiagram:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise DiagramFormatError(f'diagram is not valid JSON: {exc}') from exc
    if not isinstance(data, dict) or 'source' not in data:
        raise DiagramFormatError('diagram JSON needs a "source" list')
    try:
        source = tuple(int(k) for k in data['source'])
        slices = tuple(slice_from_json(s) for s in data.get('slices', []))
        target = tuple(int(k) for k in data['target']) if 'target' in data else None
    except (TypeError, ValueError) as exc:
        raise DiagramFormatError(f'bad diagram {data!r}') from exc
    return WebDiagram(source, slices, target)


def diagram_to_json(d: WebDiagram) -> Dict:
    return d.to_json()


def morphism_to_json(f: WebMorphism) -> Dict:
    return {
        'source': list(f.source),
        'target': list(f.target),
        'terms': [{'coeff': str(c), 'diagram': d.to_json()} for d, c in f],
    }


def morphism_from_json(data: Union[str, Dict]) -> WebMorphism:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise DiagramFormatError(f'morphism is not valid JSON: {exc}') from exc
    if 'terms' not in data:
        return WebMorphism.of(diagram_from_json(data))
    try:
        source = tuple(int(k) for k in data['source'])
        target = tuple(int(k) for k in data['target'])
        terms: Dict[WebDiagram, Coeff] = {}
        for term in data['terms']:
            d = diagram_from_json(term['diagram'])
            c = Fraction(str(term.get('coeff', 1)))
            c = int(c) if c.denominator == 1 else c
            terms[d] = terms.get(d, 0) + c
    except (KeyError, TypeError, ValueError) as exc:
        raise DiagramFormatError(f'bad morphism {data!r}') from exc
    return WebMorphism(source, target, terms)
