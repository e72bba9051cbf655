"""Network coherence of noisy consensus dynamics on undirected graphs.

Thin Python surface over the C++ core: graph construction and ingestion,
Laplacian spectra and effective resistances, Kirchhoff indices, coherence
and its bounds, scale-free generators, exact closed-form evaluators, and
the Monte-Carlo simulator.
"""

try:
    from ._netcoh import *  # noqa: F401,F403  (installed package layout)
    from ._netcoh import __version__  # noqa: F401
except ImportError:  # in-tree builds put the extension directly on sys.path
    from _netcoh import *  # noqa: F401,F403
    from _netcoh import __version__  # noqa: F401
