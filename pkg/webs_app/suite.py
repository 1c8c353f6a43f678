# webs_app/suite.py
"""
Check batteries as lists of independent jobs, run inline or on a process pool,
and assembled into deterministic JSON-lines reports.

A job is a plain tuple (kind, id, params, N, field) so it pickles cheaply.
Records carry their elapsed time; report lines leave it out unless asked so
that reports are byte-identical across runs and worker counts.
"""
from __future__ import annotations

import itertools
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .catalog import enabled_ids
from .combin import p_adic_digits
from .exceptions import WebsError
from .relations import RELATIONS, relation_instances, run_instance
from .scalars import FieldSpec

logger = logging.getLogger(__name__)

Job = Tuple[str, str, Dict, int, str]


def relation_jobs(ids: Iterable[str], Ns: Sequence[int], fields: Sequence[str], all_labels: bool = False,
                  a_max: int = 2, m_values: Sequence[int] = (2, 3)) -> List[Job]:
    jobs = []
    for rel_id in ids:
        for N in Ns:
            for params in relation_instances(rel_id, N, all_labels=all_labels, a_max=a_max, m_values=m_values):
                for label in fields:
                    jobs.append(('relation', rel_id, params, N, label))
    return jobs


HOWE_CASES = [(N, m) for N in (1, 2, 3) for m in (2, 3)]
END_DIM_CASES = [(1, 2), (2, 2), (1, 3)]
SS_CIRCLE_PRIMES = (3, 5)
SS_CIRCLE_MAX_N = 8
SS_MERGE_CASES = [(3, 4), (3, 5)]
SS_VERLINDE_CASES = [(3, 4)]
SS_MAX_STRANDS = 4


def small_words(N: int, max_total: int = 4, max_len: int = 3) -> List[Tuple[int, ...]]:
    """Label sequences with entries in 1..N, at most max_len strands and total thickness max_total."""
    words = [()]
    frontier = [()]
    for _ in range(max_len):
        frontier = [w + (k,) for w in frontier for k in range(1, N + 1) if sum(w) + k <= max_total]
        words += frontier
    return words


def howe_jobs(cases: Sequence[Tuple[int, int]], end_dim_cases: Sequence[Tuple[int, int]],
              fields: Sequence[str]) -> List[Job]:
    jobs = []
    for N, m in cases:
        jobs.append(('howe', 'actions_agree', {'m': m}, N, 'q'))
        jobs.append(('howe', 'commutant', {'m': m}, N, 'q'))
        jobs.append(('howe', 'weight_space', {'m': m}, N, 'q'))
        jobs.append(('howe', 'hw_vector', {'m': m}, N, 'q(i)'))
    for N, m in end_dim_cases:
        for label in fields:
            jobs.append(('howe', 'end_dim', {'m': m}, N, label))
    return jobs


def web_hom_jobs(Ns: Sequence[int]) -> List[Job]:
    """Spanning and faithfulness on every pair of small words with equal parity of thickness."""
    jobs = []
    for N in Ns:
        words = small_words(N)
        for K in words:
            for L in words:
                if (sum(K) + sum(L)) % 2 or not K + L:
                    continue
                params = {'K': list(K), 'L': list(L)}
                jobs.append(('howe', 'spanning', params, N, 'q'))
                jobs.append(('howe', 'faithful', params, N, 'q'))
    return jobs


def color_words(colors: int, max_len: int) -> List[Tuple[int, ...]]:
    """Every word over colors 0..colors-1 of length at most max_len, shortest first."""
    words: List[Tuple[int, ...]] = [()]
    for n in range(1, max_len + 1):
        words += list(itertools.product(range(colors), repeat=n))
    return words


def word_pairs(colors: int, max_strands: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Source and target words with at most max_strands points in total, the empty pair left out."""
    words = color_words(colors, max_strands)
    return [(K, L) for K in words for L in words if 0 < len(K) + len(L) <= max_strands]


def ss_jobs(circle_primes: Sequence[int] = SS_CIRCLE_PRIMES, circle_max_N: int = SS_CIRCLE_MAX_N,
            merge_cases: Sequence[Tuple[int, int]] = SS_MERGE_CASES,
            verlinde_cases: Sequence[Tuple[int, int]] = SS_VERLINDE_CASES,
            max_strands: int = SS_MAX_STRANDS) -> List[Job]:
    """Circle digits, merge/split negligibility and the Brauer comparison."""
    jobs = []
    for p in circle_primes:
        for N in range(1, circle_max_N + 1):
            # one digit position past the last nonzero one, where the circle must vanish
            for i in range(len(p_adic_digits(N, p).digits) + 1):
                jobs.append(('ss', 'circle_digit', {'i': i, 'p': p}, N, str(p)))
    for p, N in merge_cases:
        for a in range(1, p):
            jobs.append(('ss', 'merge_split', {'a': a, 'b': p - a, 'i': 1, 'p': p}, N, str(p)))
    for p, N in verlinde_cases:
        colors = len(p_adic_digits(N, p).digits)
        for K, L in word_pairs(colors, max_strands):
            jobs.append(('ss', 'verlinde', {'word': list(K), 'target': list(L), 'p': p}, N, str(p)))
    return jobs


def full_suite(Ns: Sequence[int], fields: Sequence[str], a_max: int = 2,
               m_values: Sequence[int] = (2, 3), catalog: Optional[List[Dict]] = None) -> List[Job]:
    """
    Every relation for every N and field, plus the Howe and semisimplification
    checks. With a catalog only its enabled relations run.
    """
    enabled = set(enabled_ids(catalog)) if catalog is not None else set(RELATIONS)
    plain = sorted(r.id for r in RELATIONS.values() if r.family != 'udot' and r.id in enabled)
    udot = sorted(r.id for r in RELATIONS.values() if r.family == 'udot' and r.id in enabled)
    jobs = relation_jobs(plain, Ns, fields, all_labels=True, a_max=a_max)
    jobs += relation_jobs(udot, [N for N in Ns if N <= 3], fields, a_max=a_max, m_values=m_values)
    jobs += howe_jobs(HOWE_CASES, END_DIM_CASES, [f for f in fields if f != 'q'])
    jobs += web_hom_jobs([N for N in Ns if N <= 3])
    jobs += ss_jobs()
    return jobs


def _howe(check: str, params: Dict, N: int, spec: FieldSpec) -> Tuple[bool, Dict]:
    from . import howe

    if check == 'spanning':
        return howe.spanning_check(params['K'], params['L'], N, spec=spec), {}
    if check == 'faithful':
        ok = howe.faithfulness_check(params['K'], params['L'], N)
        if sum(params['K']) == sum(params['L']):
            ok = ok and howe.type_a_faithfulness_check(params['K'], params['L'], N)
        return ok, {}
    m = params['m']
    if check == 'actions_agree':
        return howe.actions_agree(N, m, spec), {}
    if check == 'commutant':
        return howe.commutant_check(N, m, spec), {}
    if check == 'weight_space':
        return howe.weight_space_check(N, m, spec), {}
    if check == 'hw_vector':
        return howe.hw_vector_check(N, m, spec), {}
    if check == 'end_dim':
        webs, predicted = howe.end_dim_by_webs(N, m, spec), howe.end_dim_prediction(N, m)
        return webs == predicted, {'webs': webs, 'predicted': predicted}
    raise WebsError(f'unknown howe check {check!r}')


def _ss(check: str, params: Dict, N: int) -> Tuple[bool, Dict]:
    from . import ssquot

    p = params['p']
    if check == 'circle_digit':
        return ssquot.circle_digit_check(params['i'], p, N), {}
    if check == 'merge_split':
        return ssquot.merge_split_negligibility(params['a'], params['b'], params['i'], p, N), {}
    if check == 'verlinde':
        return ssquot.verlinde_crosscheck(params['word'], p, N, params.get('target')), {}
    raise WebsError(f'unknown ss check {check!r}')


def run_job(job: Job) -> Dict:
    kind, ident, params, N, label = job
    spec = FieldSpec.parse(label)
    if kind == 'relation':
        record = run_instance(ident, params, N, spec)
        record['kind'] = kind
        return record
    start = time.perf_counter()
    try:
        if kind == 'howe':
            ok, extra = _howe(ident, params, N, spec)
        elif kind == 'ss':
            ok, extra = _ss(ident, params, N)
        else:
            raise WebsError(f'unknown job kind {kind!r}')
    except WebsError as exc:
        ok, extra = False, {'error': str(exc)}
    record = {'kind': kind, 'id': ident, 'params': params, 'N': N, 'field': spec.label, 'pass': ok,
              'elapsed': round(time.perf_counter() - start, 6)}
    record.update(extra)
    return record


def sort_key(record: Dict) -> Tuple:
    return (record.get('kind', ''), record['id'], record['N'], record['field'],
            json.dumps(record['params'], sort_keys=True))


def run_jobs(jobs: Sequence[Job], workers: int = 1, batch: int = 200) -> List[Dict]:
    """Run every job and return the records in a fixed order."""
    records: List[Dict] = []
    for start in range(0, len(jobs), batch):
        chunk = jobs[start:start + batch]
        t0 = time.perf_counter()
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                done = list(pool.map(run_job, chunk, chunksize=8))
        else:
            done = [run_job(job) for job in chunk]
        failed = sum(1 for r in done if not r['pass'])
        logger.info('batch %s-%s: %s checks, %s failed, %.2fs',
                    start, start + len(chunk), len(chunk), failed, time.perf_counter() - t0)
        records.extend(done)
    return sorted(records, key=sort_key)


def report_line(record: Dict, timings: bool = False) -> str:
    body = dict(record)
    if not timings:
        body.pop('elapsed', None)
    return json.dumps(body, sort_keys=True, default=str)


def summarize(records: Sequence[Dict]) -> List[Dict]:
    """One row per (kind, id): checked and failed counts."""
    table: Dict[Tuple[str, str], Dict] = {}
    for r in records:
        row = table.setdefault((r.get('kind', ''), r['id']),
                               {'kind': r.get('kind', ''), 'id': r['id'], 'checked': 0, 'failed': 0})
        row['checked'] += 1
        row['failed'] += 0 if r['pass'] else 1
    return [table[k] for k in sorted(table)]
