from .decloning import (
    brute_force_sc_declone_fixed, crossing_closure, crossing_closures, crossing_pairs, is_laminar, laminar_closures,
    sc_declone_exact, sc_declone_fixed,
)
from .recognition import (
    brute_force_sc, check_voter_order, is_single_crossing, is_single_crossing_wrt, pair_signs, single_crossing_orders,
)
from .reduction import Reduction, X3CInstance, has_exact_cover, parse_x3c, validate_instance, x3c_reduction
