"""Cluster-state stabilizer groups, GHZ paradoxes and Bell bounds."""

try:
    from clusternl._clusternl import *  # noqa: F401,F403
    from clusternl._clusternl import __version__  # noqa: F401
except ImportError:  # in-tree builds put the extension on PYTHONPATH directly
    from _clusternl import *  # noqa: F401,F403
    from _clusternl import __version__  # noqa: F401
