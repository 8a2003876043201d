"""Finite-geometry workbench: GF(q), PG(3,q), designs, generalized
quadrangles, inversive planes and the reconstruction pipeline between
them."""

try:
    from ._fingeo import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # build-tree layout: extension next to the package
    from _fingeo import *  # noqa: F401,F403

__version__ = "0.1.0"
