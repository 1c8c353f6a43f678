# webs_app/brauer.py
"""
The colored Brauer category: perfect matchings of colored boundary points,
stacking with loop parameters, traces by closure and the functor into webs.

Points of a diagram with b bottom and t top points are numbered 0..b-1 along
the bottom and b..b+t-1 along the top, both left to right.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple

from .combin import p_adic_digits
from .exceptions import BoundaryMismatch, LabelError, WebsError
from .matrices import SparseMatrix
from .scalars import FieldSpec, QQ, make_field
from .webcat import WebMorphism, build_sandwich

logger = logging.getLogger(__name__)

Colors = Tuple[int, ...]


@dataclass(frozen=True)
class ColoredBrauerDiagram:
    bottom: Colors
    top: Colors
    partner: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'bottom', tuple(self.bottom))
        object.__setattr__(self, 'top', tuple(self.top))
        object.__setattr__(self, 'partner', tuple(self.partner))
        n = len(self.bottom) + len(self.top)
        if len(self.partner) != n:
            raise BoundaryMismatch(f'{len(self.partner)} partners for {n} points')
        for p, q in enumerate(self.partner):
            if not 0 <= q < n or q == p or self.partner[q] != p:
                raise BoundaryMismatch(f'partner list {self.partner} is not a fixed point free involution')
            if self.color(p) != self.color(q):
                raise BoundaryMismatch(f'points {p} and {q} have different colors')

    def color(self, p: int) -> int:
        b = len(self.bottom)
        return self.bottom[p] if p < b else self.top[p - b]

    @classmethod
    def from_pairs(cls, bottom: Sequence[int], top: Sequence[int],
                   pairs: Sequence[Tuple[int, int]]) -> 'ColoredBrauerDiagram':
        partner = [None] * (len(bottom) + len(top))
        for p, q in pairs:
            partner[p], partner[q] = q, p
        if None in partner:
            raise BoundaryMismatch(f'pairs {pairs} leave points unmatched')
        return cls(tuple(bottom), tuple(top), tuple(partner))

    @classmethod
    def identity(cls, colors: Sequence[int]) -> 'ColoredBrauerDiagram':
        n = len(colors)
        return cls.from_pairs(colors, colors, [(i, n + i) for i in range(n)])

    def pairs(self) -> List[Tuple[int, int]]:
        return [(p, q) for p, q in enumerate(self.partner) if p < q]

    def to_json(self) -> Dict:
        return {'bottom': list(self.bottom), 'top': list(self.top), 'pairs': [list(pq) for pq in self.pairs()]}


def cup_diagram(color: int) -> ColoredBrauerDiagram:
    return ColoredBrauerDiagram.from_pairs((), (color, color), [(0, 1)])


def cap_diagram(color: int) -> ColoredBrauerDiagram:
    return ColoredBrauerDiagram.from_pairs((color, color), (), [(0, 1)])


def crossing_diagram(left: int, right: int) -> ColoredBrauerDiagram:
    return ColoredBrauerDiagram.from_pairs((left, right), (right, left), [(0, 3), (1, 2)])


@dataclass(frozen=True)
class LoopParams:
    """The value d_i of a closed loop of color i."""
    values: Tuple[object, ...]
    spec: FieldSpec = QQ

    @classmethod
    def digits(cls, p: int, N: int, colors: int = 0) -> 'LoopParams':
        """d_i = N_i, the base-p digits of N, over F_p."""
        digits = p_adic_digits(N, p)
        width = max(colors, len(digits.digits), 1)
        return cls(tuple(digits.digit(i) for i in range(width)), FieldSpec(p))

    @classmethod
    def parse(cls, text: str, spec: FieldSpec = QQ) -> 'LoopParams':
        f = make_field(spec)
        try:
            return cls(tuple(f.parse(x.strip()) for x in text.split(',') if x.strip()), spec)
        except (TypeError, ValueError) as exc:
            raise WebsError(f'bad loop parameters {text!r}') from exc

    def d(self, color: int):
        if not 0 <= color < len(self.values):
            raise WebsError(f'no loop parameter for color {color}')
        return make_field(self.spec).coerce(self.values[color])

    def loop_value(self, loops: Mapping[int, int]):
        f = make_field(self.spec)
        out = f.one
        for color, count in sorted(loops.items()):
            for _ in range(count):
                out = f.mul(out, self.d(color))
        return out


def _perfect_colored_matchings(points: List[int], color) -> Iterator[List[Tuple[int, int]]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for n, q in enumerate(rest):
        if color(q) != color(first):
            continue
        for tail in _perfect_colored_matchings(rest[:n] + rest[n + 1:], color):
            yield [(first, q)] + tail


def enumerate_brauer(bottom: Sequence[int], top: Sequence[int]) -> List[ColoredBrauerDiagram]:
    """The diagram basis of Hom(bottom, top)."""
    bottom, top = tuple(bottom), tuple(top)
    b = len(bottom)

    def color(p):
        return bottom[p] if p < b else top[p - b]

    points = list(range(b + len(top)))
    return [ColoredBrauerDiagram.from_pairs(bottom, top, pairs)
            for pairs in _perfect_colored_matchings(points, color)]


def compose_brauer(g: ColoredBrauerDiagram, f: ColoredBrauerDiagram,
                   params: LoopParams) -> Tuple[object, ColoredBrauerDiagram]:
    """g after f: stack, trace out the middle points, one factor d_i per closed loop."""
    if f.top != g.bottom:
        raise BoundaryMismatch(f'cannot stack {g.bottom} on {f.top}')
    a, mid, c = len(f.bottom), len(f.top), len(g.top)
    seen_mid = set()

    def walk(side: str, p: int) -> int:
        while True:
            if side == 'f':
                q = f.partner[p]
                if q < a:
                    return q
                seen_mid.add(q - a)
                side, p = 'g', q - a
            else:
                q = g.partner[p]
                if q >= mid:
                    return a + q - mid
                seen_mid.add(q)
                side, p = 'f', a + q

    partner = [None] * (a + c)
    for i in range(a):
        if partner[i] is None:
            end = walk('f', i)
            partner[i], partner[end] = end, i
    for j in range(c):
        if partner[a + j] is None:
            end = walk('g', mid + j)
            partner[a + j], partner[end] = end, a + j

    loops: Counter = Counter()
    for k in range(mid):
        if k in seen_mid:
            continue
        loops[f.top[k]] += 1
        cur = k
        while cur not in seen_mid:
            seen_mid.add(cur)
            nxt = f.partner[a + cur] - a
            seen_mid.add(nxt)
            cur = g.partner[nxt]
    composite = ColoredBrauerDiagram(f.bottom, g.top, tuple(partner))
    return params.loop_value(loops), composite


def brauer_trace(d: ColoredBrauerDiagram, params: LoopParams):
    """The categorical trace: close every strand on the right."""
    return params.loop_value(_closure_loops(d))


def _closure_loops(d: ColoredBrauerDiagram) -> Counter:
    if d.bottom != d.top:
        raise BoundaryMismatch(f'{d.bottom} -> {d.top} is not an endomorphism')
    n = len(d.bottom)
    # the closure joins bottom point i with top point n + i
    closure = {i: n + i for i in range(n)}
    closure.update({n + i: i for i in range(n)})
    seen = set()
    loops: Counter = Counter()
    for start in range(2 * n):
        if start in seen:
            continue
        loops[d.color(start)] += 1
        p = start
        while p not in seen:
            seen.add(p)
            q = d.partner[p]
            seen.add(q)
            p = closure[q]
    return loops


def evaluate_closed_brauer(diagrams: Sequence[ColoredBrauerDiagram], params: LoopParams):
    """Stack the diagrams bottom to top; the result must have no boundary."""
    f = make_field(params.spec)
    scalar = f.one
    current = diagrams[0]
    for nxt in diagrams[1:]:
        s, current = compose_brauer(nxt, current, params)
        scalar = f.mul(scalar, s)
    if current.bottom or current.top:
        raise BoundaryMismatch(f'{current.bottom} -> {current.top} is not closed')
    return scalar


def brauer_to_web(d: ColoredBrauerDiagram, color_labels: Mapping[int, int]) -> WebMorphism:
    """Strands of color i become web strands labelled color_labels[i]."""
    try:
        source = tuple(color_labels[c] for c in d.bottom)
        target = tuple(color_labels[c] for c in d.top)
    except KeyError as exc:
        raise WebsError(f'no label for color {exc.args[0]}') from None
    if any(k < 1 for k in source + target):
        raise LabelError('Brauer strands need positive labels')
    b = len(source)
    through = [[0] * len(target) for _ in source]
    caps: Dict[Tuple[int, int], int] = {}
    cups: Dict[Tuple[int, int], int] = {}
    for p, q in d.pairs():
        if q < b:
            caps[(p, q)] = source[p]
        elif p < b:
            through[p][q - b] = source[p]
        else:
            cups[(p - b, q - b)] = target[p - b]
    return WebMorphism.of(build_sandwich(source, target, through, caps, cups))


def brauer_gram(K: Sequence[int], L: Sequence[int], params: LoopParams) -> SparseMatrix:
    """tr(g o f) for f in the basis of Hom(K, L) (rows) and g in Hom(L, K) (columns)."""
    f = make_field(params.spec)
    forward = enumerate_brauer(K, L)
    backward = enumerate_brauer(L, K)
    entries = []
    for r, fd in enumerate(forward):
        for c, gd in enumerate(backward):
            s, endo = compose_brauer(gd, fd, params)
            entries.append((r, c, f.mul(s, brauer_trace(endo, params))))
    return SparseMatrix.from_entries(f, len(forward), len(backward), entries)
