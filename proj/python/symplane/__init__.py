"""Planar symplectic algebra, closed-form constructions, inverted slider
crank kinematics and oscillator integrators.

The run_* functions return the same report the command line prints with
--json, as a dict.
"""

import json as _json

from . import _core
from ._core import *  # noqa: F401,F403
from ._core import Error

__all__ = [name for name in dir(_core) if not name.startswith("_")] + ["Error"]


def _text(report):
    return report if isinstance(report, str) else _json.dumps(report)


def _wrap(name):
    raw = getattr(_core, name)

    def run(*args, **kwargs):
        return _json.loads(raw(*args, **kwargs))

    run.__name__ = name
    run.__doc__ = raw.__doc__
    return run


run_identities = _wrap("run_identities")
run_intersect = _wrap("run_intersect")
run_tangents = _wrap("run_tangents")
run_crank = _wrap("run_crank")
run_oscillator = _wrap("run_oscillator")


def rerun(report):
    """Replays a report (dict or JSON text) from its input echo."""
    return _json.loads(_core.rerun(_text(report)))


def report_csv(report):
    return _core.report_csv(_text(report))


def report_svg(report):
    return _core.report_svg(_text(report))
