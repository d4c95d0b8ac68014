"""Flat-foldability toolkit for orthogonal crease patterns under simple folds.

Polynomial deciders (assigned and mixed 1D patterns in the one-layer,
some-layers, and all-layers models; one-layer rectangles), exhaustive
fold-search oracles that certify them on small instances, and generators
for hardness-reduction crease patterns.
"""

from .all_layers import (
    AllLayersVerdict,
    decide_all_layers_mixed,
    is_valid_all_layers_fold,
    plausible_creases,
    reduce_at,
)
from .characterize import (
    Crimp,
    EndFold,
    FoldVerdict,
    NotFoldableError,
    apply_reduction,
    decide_assigned,
    find_reducible_segment,
    synthesize_sequence,
)
from .gadgets import (
    PolyPattern,
    ThreePartitionInstance,
    ThreeSatFormula,
    gen_3partition_assigned,
    gen_3partition_unassigned,
    gen_3sat_rect,
    poly_to_fold,
    rect_to_fold,
    validate_polypattern,
)
from .mixed import decide_mixed, find_valid_assignment, process_interval
from .oracle1d import FoldedState1D, FoldMove, enumerate_successors_1d, search_1d
from .oracle2d import RectFoldedState, RectMove, enumerate_successors_rect, search_rect
from .pattern import (
    Assignment,
    Crease,
    CreasePattern1D,
    Interval,
    crease_counts,
    folded_image,
    is_innocent,
    make_pattern,
    pattern_from_dict,
    pattern_to_dict,
    suspicious_intervals,
)
from .rect import RectCrease, RectPattern, decide_rect_one_layer, make_rect, rect_from_dict, rect_to_dict

__version__ = "0.1.0"
