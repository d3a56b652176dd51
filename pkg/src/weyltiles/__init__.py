"""Exact tilings of a Euclidean space by affine Weyl group elements.

Points are rational vectors in simple-root coordinates.  The tile of ``w``
is ``(id - w)(A)`` for the fundamental alcove ``A``; see ``locate`` for point
location and ``verify`` for the invariant suites.
"""

from .deformed import Deformation, abs_det_identity, deformed_locate, deformed_tile, make_deformation
from .estimator import TilingLocator
from .locate import locate, locate_details, tiles_containing, waldspurger_q
from .rootsys import RootSystem, build_root_system
from .tiles import Tile, contains, fundamental_region, normals, tile_of, waldspurger_cone
from .weyl import (AffineWeylElement, WeylElement, compose, diagram_automorphisms,
                   enumerate_weyl, identity_element, inverse, simple_reflection, translation)

__version__ = "0.1.0"

__all__ = [
    "AffineWeylElement", "Deformation", "RootSystem", "Tile", "TilingLocator", "WeylElement",
    "abs_det_identity", "build_root_system", "compose", "contains", "deformed_locate",
    "deformed_tile", "diagram_automorphisms", "enumerate_weyl", "fundamental_region",
    "identity_element", "inverse", "locate", "locate_details", "make_deformation", "normals",
    "simple_reflection", "tile_of", "tiles_containing", "translation", "waldspurger_cone",
    "waldspurger_q",
]
