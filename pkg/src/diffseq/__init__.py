"""Exact Ramsey-type computations over gap sets of positive integers:
certified fractional-part colorings from a nested-interval construction,
exhaustive avoidance scans, least-forcing-length search with witnesses, and
distance-graph chromatic bounds.
"""

from .certs import Certificate
from .colorings import (
    Coloring,
    block_coloring,
    complexity,
    frac_coloring,
    preset_coloring,
    product_coloring,
    residue_coloring,
    rotation_word,
)
from .construct import (
    AlphaCertificate,
    GrowthConditionError,
    NestedState,
    build_alpha,
    certify_fracs,
    diffseq_bound_from_eps,
    epsilon_of,
    growth_factor,
)
from .exactnum import (
    PHI,
    PHI_CONJ,
    SQRT5,
    Q5,
    RatInterval,
    dist_nearest_int,
    floor_int,
    frac,
    rational_str,
    sign,
    to_rational,
)
from .gapsets import GapSetSpec, GapSetView, difference_set, fib_values, growth_certificate
from .search import (
    ChromaticResult,
    DeltaResult,
    chromatic_number_prefix,
    delta,
    doa_evidence,
    max_avoidable,
)
from .verify import (
    ScanResult,
    check_fib_fact,
    chromatically_intersective_check,
    frac_bound_scan,
    longest_mono_ap,
    longest_mono_diffseq,
    pisano_period,
)

__version__ = "0.1.0"
