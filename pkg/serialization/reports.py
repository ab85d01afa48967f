"""
Report files: frontier CSV tables and JSON reports.
"""

import json
from pathlib import Path

import pandas as pd

from utils.robust_utils import logger, to_builtin

FRONTIER_COLUMNS = ['parts', 'n', 'target', 'colorings', 'failures', 'witness-file']


def write_frontier_csv(rows, path, append=True):
    """Write (or append) frontier rows; the header is written only for a new file"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame = pd.DataFrame(list(rows), columns=FRONTIER_COLUMNS)
    exists = path.exists() and path.stat().st_size > 0
    if append and exists:
        frame.to_csv(path, mode='a', header=False, index=False)
    else:
        frame.to_csv(path, index=False)
    logger.info(f"Wrote {len(frame)} frontier rows to {path}")
    return path


def read_frontier_csv(path):
    return pd.read_csv(path, keep_default_na=False)


def json_report(data):
    """Deterministic JSON text (sorted keys) of a report dict"""
    return json.dumps(to_builtin(data), indent=2, sort_keys=True)
