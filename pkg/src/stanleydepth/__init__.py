"""Exact Stanley depth of monomial ideals via interval partitions."""

from .core import (IdealError, MonomialIdeal, ParseError, is_complete_intersection,
                   lcm_exponent, minimalize, parse_ideal, radical, render)
from .decomp import (StanleyDecomposition, StanleySpace, canonical_squarefree,
                     intersect_space_with_ideal, partition_to_decomposition,
                     squarefree_refine, verify_decomposition)
from .poset import (CharacteristicPoset, Interval, IntervalPartition, build_poset, rho,
                    validate_partition)
from .solver import (SdepthResult, ci_bounds, depth_ci, exists_partition_at,
                     irreducible_sdepth_formula, sdepth_exact)
from .transforms import (extend_decomposition, lift_partition, lower_partition,
                         project_decomposition, radical_reduction_chain)

__version__ = "0.1.0"
