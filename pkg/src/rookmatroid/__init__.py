"""Rook matroids on skew shapes.

Non-nesting rook placements, the rook matroid and its Grassmann necklace,
sort-closure via uncrossing, ranked essential sets, base polytopes, and a
test for whether a Grassmann necklace comes from a rook matroid.
"""

from .errors import RookMatroidError
from .essential import CyclicInterval, Full, corner_essential_sets, essential_family, polytope_hrep
from .matroid import Matroid, verify_basis_exchange
from .necklace import GrassmannNecklace, classify, parse_necklace
from .placements import RookPlacement, decode, encode, enumerate_non_nesting
from .rook import build, extremal_placement, grassmann_necklace, is_matroid_board, necklace_from_bases
from .shapes import Board, SkewShape, parse_board, parse_shape
from .sorting import sort_pair, uncross, verify_sort_closed

__version__ = "0.1.0"
