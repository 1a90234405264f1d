"""Exact invariants of orbifold Riemann surfaces and rank-2 Higgs V-bundle moduli."""

import json

from ._core import *  # noqa: F401,F403
from ._core import run as _run

__version__ = "0.1.0"


def report(command, document, format="json"):
    """Run a command and return the parsed report, raising ValueError on failure."""
    text = document if isinstance(document, str) else json.dumps(document)
    code, out, err = _run(command, text, format)
    if code != 0 and command != "check":
        raise ValueError(json.loads(err)["error"]["message"])
    return json.loads(out) if format == "json" else out
