"""Relation catalog loading and validation for webs_app.

Provides:
- load_catalog(path): loads the YAML (or JSON) relation catalog
- validate_catalog(entries): returns (normalized_entries, issues)
- merge_catalogs(existing, new): merge by id (new overrides existing)
- enabled_ids(entries): ids the relcheck battery should run

CLI usage:
  python -m webs_app.catalog validate webs_app/relations.yaml
  python -m webs_app.catalog merge extra_relations.yaml
"""
import json
import logging
import os
import sys
from typing import Dict, List, Tuple

import yaml

from .exceptions import CatalogError
from .relations import RELATIONS

logger = logging.getLogger(__name__)

FAMILIES = ('type_a', 'orthogonal', 'udot')
DEFAULT_PATH = os.path.join(os.path.dirname(__file__), 'relations.yaml')


def load_catalog(path: str = DEFAULT_PATH) -> List[Dict]:
    path = os.path.abspath(path)
    if not os.path.exists(path):
        raise CatalogError(f'catalog not found: {path}')
    with open(path, 'r', encoding='utf-8') as fh:
        txt = fh.read()
    try:
        loaded = yaml.safe_load(txt)
    except yaml.YAMLError:
        try:
            loaded = json.loads(txt)
        except ValueError as e:
            raise CatalogError(f'could not parse catalog file: {e}') from e
    if isinstance(loaded, dict) and 'relations' in loaded:
        loaded = loaded['relations']
    if not isinstance(loaded, list):
        raise CatalogError(f'{path}: expected a list of relations')
    return loaded


def validate_catalog(entries: List[Dict]) -> Tuple[List[Dict], List[str]]:
    """Validate entries against the relation registry.
    Returns (normalized_entries, list_of_issues)
    """
    issues: List[str] = []
    seen_ids = set()
    normalized: List[Dict] = []
    for i, e in enumerate(entries):
        if not isinstance(e, dict):
            issues.append(f'relation[{i}] not a dict')
            continue
        rid = e.get('id')
        if rid is None:
            issues.append(f'relation[{i}] missing id')
            continue
        if rid in seen_ids:
            issues.append(f'duplicate id {rid}')
        seen_ids.add(rid)
        registered = RELATIONS.get(rid)
        if registered is None:
            issues.append(f'relation id={rid} has no builder')
        if not e.get('name'):
            issues.append(f'relation id={rid} missing name')
        family = e.get('family')
        if family not in FAMILIES:
            issues.append(f'relation id={rid} has unknown family {family!r}')
        elif registered is not None and registered.family != family:
            issues.append(f'relation id={rid} family {family} but builder says {registered.family}')
        params = e.get('params', [])
        if params is None:
            params = []
        if not isinstance(params, list):
            issues.append(f'relation id={rid} params not a list')
            params = []
        if registered is not None and tuple(params) != registered.params:
            issues.append(f'relation id={rid} params {params} but builder takes {list(registered.params)}')
        enabled = e.get('enabled', True)
        if not isinstance(enabled, bool):
            issues.append(f'relation id={rid} enabled must be true or false, defaulting to true')
            enabled = True
        ne = dict(e)
        ne['params'] = params
        ne['enabled'] = enabled
        normalized.append(ne)
    for rid in sorted(set(RELATIONS) - seen_ids):
        issues.append(f'builder {rid} has no catalog entry')
    for issue in issues:
        logger.warning('catalog: %s', issue)
    return normalized, issues


def merge_catalogs(existing: List[Dict], new: List[Dict]) -> List[Dict]:
    by_id = {e['id']: e for e in existing}
    for e in new:
        if not isinstance(e, dict) or 'id' not in e:
            continue
        by_id[e['id']] = e
    return [by_id[k] for k in sorted(by_id)]


def enabled_ids(entries: List[Dict], family: str = None) -> List[str]:
    return [e['id'] for e in entries
            if e.get('enabled', True) and e['id'] in RELATIONS
            and (family is None or e.get('family') == family)]


def main(argv: List[str]) -> int:
    if len(argv) < 2:
        print('Usage: python -m webs_app.catalog validate|merge <path_to_catalog>')
        return 2
    cmd, path = argv[0], argv[1]
    try:
        entries = load_catalog(path)
    except CatalogError as e:
        print('Error loading catalog:', e)
        return 1
    normalized, issues = validate_catalog(entries)
    if cmd == 'validate':
        print(f'Loaded {len(entries)} relations from {path}')
        if issues:
            print('Issues found:')
            for it in issues:
                print(' -', it)
            return 1
        print('No issues found.')
        return 0
    if cmd == 'merge':
        try:
            existing = load_catalog(DEFAULT_PATH)
        except CatalogError:
            existing = []
        merged = merge_catalogs(existing, normalized)
        with open(DEFAULT_PATH, 'w', encoding='utf-8') as fh:
            yaml.safe_dump(merged, fh, sort_keys=False)
        print('Wrote merged catalog to', DEFAULT_PATH)
        return 0
    print('Unknown command', cmd)
    return 2


if __name__ == '__main__':
    sys.exit(main(sys.argv[1:]))
