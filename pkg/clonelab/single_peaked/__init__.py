from .axis import (
    Axis, brute_force_axis, extreme_peaks, is_compatible, is_single_peaked, is_single_peaked_wrt, single_peaked_axes,
)
from .decloning import (
    Color, TreeColoring, basic_declone_sp, brute_force_optimal_sp_declone, clone_tree, coloring_profile, declone_sp,
)
from .partition import ClonePartition, CloneType, classify_clone_type, clone_partition
