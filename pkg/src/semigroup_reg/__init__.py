"""Regularity of homogeneous simplicial affine semigroup rings.

The ring K[B] splits into shifted monomial ideals indexed by the residue
classes of the Apery set; its regularity is the largest ideal regularity
plus shift. The package also implements the *-sequence combinatorics used
to bound that regularity by degree minus codimension.
"""
from .apery import AperyClass, ConsistencyError, apery_classes, apery_set, partition_classes, shift_and_exponents
from .ideals import (
    BettiTable,
    MonomialIdeal,
    TooLargeError,
    betti_numbers,
    lcm_lattice,
    minimalize,
    regularity_bivariate,
    regularity_general,
)
from .lattice import SemigroupPresentation, ValidationReport, class_count, degree, is_member, residue, validate
from .regularity import (
    DecompositionReport,
    GapReport,
    check_eisenbud_goto,
    decompose,
    degree_bound_check,
    gap_report,
)
from .sequences import (
    CapExceeded,
    CrossCertificate,
    StarSequence,
    are_crossless,
    check_conjecture,
    delta,
    delta_min,
    delta_set,
    enumerate_full,
    find_crosses,
    glue_crosses,
    h_min,
    is_adjacent,
    is_crossless,
    partial_point,
    reverse,
    third_element,
)

__version__ = "0.1.0"
