"""Near-central enumeration in the symmetric group.

Generalized characters, the centralizer algebra Z_1(n), dipole genus
series and factorizations of a full cycle, each with a brute-force
counterpart for small n.
"""

from .characters import (
    closed_form_values,
    genchar,
    genchar_at_K_n11,
    genchar_at_full_cycle,
    genchar_hook_series,
    genchar_oracle,
    genchar_strahov,
    genchar_two_part,
    hook_character,
    mn_character,
)
from .combinatorics import (
    Partition,
    Permutation,
    StandardYoungTableau,
    TaggedClass,
    class_size,
    dimension,
    partitions_of,
    syt_enumerate,
    tagged,
    tagged_class_size,
    tagged_classes,
)
from .decompositions import FactorizationQuery, brute_decompositions, decomposition_count
from .dipoles import (
    DipoleCounts,
    brute_force_p_q_dipoles,
    dipole_count_formula,
    genus_counts,
    genus_series,
    symmetry_check,
)
from .poly import Poly
from .z1 import (
    GroupAlgebraElement,
    NotCentralizerElement,
    ResourceGuardError,
    StructureConstantCache,
    Z1Element,
    connection_coefficient,
    gamma_element,
    jm_element,
    jm_product,
    structure_constants,
    z1_multiply,
    z1_project,
)

__version__ = "0.1.0"
