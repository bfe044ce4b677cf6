"""Graphs of linear rankwidth at most one."""

import json

from ._lrw1 import *  # noqa: F401,F403
from ._lrw1 import verify_report_json


def verify(n_max, jobs=1):
    """Exhaustive check over all graphs with at most n_max vertices, as a dict."""
    return json.loads(verify_report_json(n_max, jobs))
