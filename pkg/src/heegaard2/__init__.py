"""Combinatorial machinery for genus-two Heegaard splittings of
connected sums of lens spaces and S^2 x S^1: curve words in the rank-2
free group and primitivity criteria, disk-surgery word sequences, Farey
balls and their odd subtrees, sphere-complex tree and cone models, the
surface-count classification, and Goeritz group presentations with
solvable word problems.
"""

from . import classify, complexes, farey, fgroup, goeritz, surgery  # noqa: F401

__version__ = "0.1.0"
