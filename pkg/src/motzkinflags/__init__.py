"""Distance vectors of full flag codes and their Motzkin paths."""

from .bijection import (
    elevated_factorization,
    level_decomposition,
    phi,
    psi,
    strip_decomposition,
    validate_distance_vector,
)
from .code import (
    FlagCode,
    disjoint_vector_count,
    distance_vector_set,
    min_distance,
    potential_vector_count,
    projected_sizes,
)
from .construct import FlagPair, realize, verify_pair
from .flag import (
    DistanceVector,
    Flag,
    TypeVector,
    collapse_points,
    distance_vector,
    flag_distance,
    max_flag_distance,
)
from .gf import FieldElement, Matrix, rref, stack_rank
from .motzkin import (
    MotzkinWord,
    PathClass,
    area,
    area_count,
    catalan_number,
    classify,
    elevated_number,
    enumerate_paths,
    heights,
    motzkin_number,
    returns,
    riordan_number,
    validate_word,
)
from .subspace import (
    Subspace,
    dim_intersection,
    dim_sum,
    injection_distance,
    subspace_distance,
)

__version__ = "0.1.0"
