#!/usr/bin/env python3
"""Run the desk-scale checks against the engine and print one line per check.

This is a lightweight runner for development; not a replacement for unit tests
or for `manage.py relcheck --suite full`.
"""
from pathlib import Path
import sys

# ensure package path
ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from webs_app import howe, ssquot
from webs_app.combin import dagger_reverses_order
from webs_app.evalfun import evaluate_closed
from webs_app.scalars import FieldSpec, binom
from webs_app.webcat import circle

CHECKS = [
    ('circle N=3 k=1 is 3', lambda: evaluate_closed(circle(1), 3) == 3),
    ('circle values are binomials, N <= 5',
     lambda: all(evaluate_closed(circle(k), N) == binom(N, k, FieldSpec()) for N in range(1, 6) for k in range(1, N + 1))),
    ('actions agree N=2 m=2', lambda: howe.actions_agree(2, 2)),
    ('actions commute N=2 m=2', lambda: howe.commutant_check(2, 2)),
    ('End dimension N=1 m=2 is 8', lambda: howe.end_dim_by_webs(1, 2, FieldSpec(3)) == howe.end_dim_prediction(1, 2) == 8),
    ('dagger reverses order N=3 m=3', lambda: dagger_reverses_order(3, 3)),
    ('circle of Lambda^3 over F_3 at N=4 is the digit 1', lambda: ssquot.circle_digit_check(1, 3, 4)),
    ('merge(1,2) negligible over F_3 at N=4', lambda: ssquot.merge_split_negligibility(1, 2, 1, 3, 4)),
    ('ss End(Lambda^2) over F_3 at N=4 vanishes', lambda: ssquot.ss_hom_dim((2,), (2,), 4, 3) == 0),
    ('webs and Brauer agree on (1,1), p=3 N=4', lambda: ssquot.verlinde_crosscheck((1, 1), 3, 4)),
]


def run():
    failed = 0
    for i, (name, check) in enumerate(CHECKS, start=1):
        ok = check()
        failed += not ok
        print(f"Check {i}: {name}: {'ok' if ok else 'FAIL'}")
    return 1 if failed else 0


if __name__ == '__main__':
    sys.exit(run())
