"""Exact computations in the partition algebra, the affine partition
algebra and the Heisenberg category."""
from . import affine, hecke, heis, palgebra, partition_core, poly, relations, schur_weyl, words

__version__ = "0.1.0"

__all__ = ["affine", "hecke", "heis", "palgebra", "partition_core", "poly", "relations",
           "schur_weyl", "words"]
