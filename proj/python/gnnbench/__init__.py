"""Python bindings for the gnnbench C++ core."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import distinguish as _distinguish

__all__ = [name for name in dir() if not name.startswith("_")] + ["distinguish_report"]


def distinguish_report(graphs, config="", threads=1, dataset="dataset"):
    """Distinguishability report as a dict (see the CLI JSON schema)."""
    return _json.loads(_distinguish(graphs, config, threads, dataset))
