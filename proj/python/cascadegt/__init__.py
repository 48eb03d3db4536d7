"""Cascaded group testing: designs, feasibility checks, bounds, solvers."""

from ._cascadegt import *  # noqa: F401,F403
from ._cascadegt import __doc__  # noqa: F401
