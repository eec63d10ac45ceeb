"""Lower-tail triangle count construction toolkit."""

try:
    from ._trilow import *  # noqa: F401,F403  (installed layout)
except ImportError:  # build-tree layout: the extension sits on sys.path
    from _trilow import *  # noqa: F401,F403

__all__ = [name for name in dir() if not name.startswith("_")]
