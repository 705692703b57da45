"""Exact symbolic toolkit for super Howe duality.

Thin wrapper over the compiled module: highest weight vector construction
in the tensor and symmetric-square models, character-level verification of
the multiplicity-free decompositions, and the hook Schur identity corpus.
"""

try:
    from ._superhowe import *  # noqa: F401,F403  (installed wheel layout)
    from ._superhowe import __version__  # noqa: F401
except ImportError:  # in-tree build: module sits next to the package on sys.path
    from _superhowe import *  # noqa: F401,F403
    from _superhowe import __version__  # noqa: F401
