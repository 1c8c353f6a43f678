# webs_app/render.py
"""SVG drawings of web diagrams through the webs_app/diagram.svg template."""
from __future__ import annotations

from typing import Dict, List

from django.template.loader import render_to_string

from .webcat import WebDiagram

DX = 40
DY = 60
MARGIN = 30


def _x(i: float) -> float:
    return MARGIN + i * DX


def _stroke(label: int) -> float:
    return 1 + 0.75 * label


def diagram_layout(d: WebDiagram) -> Dict:
    """
    Pure layout: strands are columns spaced DX apart, each slice takes three
    sub-rows (widen, generator, narrow) so moving strands never cross a
    generator. Level 0 is drawn at the bottom.
    """
    levels = d.levels()
    widest = max([len(lv) for lv in levels] + [1])
    rows = 3 * len(d.slices) + 1
    height = 2 * MARGIN + rows * DY / 3
    width = 2 * MARGIN + (widest - 1) * DX if widest > 1 else 2 * MARGIN + DX

    def y(sub: int) -> float:
        return height - MARGIN - sub * DY / 3

    segments: List[Dict] = []
    paths: List[Dict] = []
    vertices: List[Dict] = []
    labels: List[Dict] = []

    def line(x1, y1, x2, y2, label):
        segments.append({'x1': x1, 'y1': y1, 'x2': x2, 'y2': y2, 'width': _stroke(label)})

    def text(xp, yp, label):
        labels.append({'x': xp + 4, 'y': yp - 6, 'text': str(label)})

    for i, k in enumerate(d.source):
        line(_x(i), y(0), _x(i), y(1), k)
        text(_x(i), y(0), k)

    for n, s in enumerate(d.slices):
        cur = levels[n]
        win, wout = len(s.in_labels), len(s.out_labels)
        grow = max(0, wout - win)
        base = 3 * n + 1
        y_a, y_b, y_c, y_d = y(base), y(base + 1), y(base + 2), y(base + 3)
        right = list(enumerate(cur))[s.pos + win:]
        left = list(enumerate(cur))[:s.pos]
        # sub-row 1: widen
        for j, k in left:
            line(_x(j), y_a, _x(j), y_b, k)
        for j, k in right:
            line(_x(j), y_a, _x(j + grow), y_b, k)
        if win:
            for t in range(win):
                line(_x(s.pos + t), y_a, _x(s.pos + t), y_b, s.in_labels[t])
        # sub-row 2: the generator
        for j, k in left:
            line(_x(j), y_b, _x(j), y_c, k)
        for j, k in right:
            line(_x(j + grow), y_b, _x(j + grow), y_c, k)
        xa, xb = _x(s.pos), _x(s.pos + 1)
        y_mid = (y_b + y_c) / 2
        if s.kind == 'merge':
            line(xa, y_b, xa, y_mid, s.k)
            line(xb, y_b, xa, y_mid, s.l)
            line(xa, y_mid, xa, y_c, s.k + s.l)
            vertices.append({'x': xa, 'y': y_mid})
            text(xa, y_c, s.k + s.l)
        elif s.kind == 'split':
            line(xa, y_b, xa, y_mid, s.k + s.l)
            line(xa, y_mid, xa, y_c, s.k)
            line(xa, y_mid, xb, y_c, s.l)
            vertices.append({'x': xa, 'y': y_mid})
            text(xa, y_c, s.k)
            text(xb, y_c, s.l)
        elif s.kind == 'cross':
            line(xa, y_b, xb, y_c, s.k)
            line(xb, y_b, xa, y_c, s.l)
            text(xa, y_c, s.l)
            text(xb, y_c, s.k)
        elif s.kind == 'cap':
            paths.append({'d': f'M {xa} {y_b} C {xa} {y_c} {xb} {y_c} {xb} {y_b}', 'width': _stroke(s.k)})
        else:
            paths.append({'d': f'M {xa} {y_c} C {xa} {y_b} {xb} {y_b} {xb} {y_c}', 'width': _stroke(s.k)})
            text(xa, y_c, s.k)
        # sub-row 3: narrow
        shrink = wout - win
        out_level = levels[n + 1]
        for j, k in left:
            line(_x(j), y_c, _x(j), y_d, k)
        for t in range(wout):
            line(_x(s.pos + t), y_c, _x(s.pos + t), y_d, out_level[s.pos + t])
        for j, k in right:
            line(_x(j + grow), y_c, _x(j + shrink), y_d, k)

    return {'width': width, 'height': height, 'segments': segments, 'paths': paths,
            'vertices': vertices, 'labels': labels}


def render_svg(d: WebDiagram) -> str:
    return render_to_string('webs_app/diagram.svg', diagram_layout(d))
