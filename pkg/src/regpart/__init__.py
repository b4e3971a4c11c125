"""Exact combinatorics of regular and class-regular integer partitions.

The package enumerates the two partition families attached to a tuple of
pairwise coprime moduli, computes their statistics and generating functions,
realizes the Glaisher bijection between them, and carries the analysis into
symmetric functions: Hall-Littlewood bases at roots of unity, Kostka-Foulkes
polynomials, and the determinant identities of restricted character tables of
the symmetric groups.  Everything is exact; no floating point anywhere.
"""

from .chartable import (
    CharacterTable,
    DetChainReport,
    OlssonReport,
    character_table,
    det_chain_check,
    olsson_check,
    regular_character_table,
)
from .cyclotomic import CyclotomicNumber, cyclotomic_polynomial, t_shifted_factorial
from .glaisher import (
    GlaisherTrace,
    glaisher_forward,
    glaisher_forward_stepwise,
    glaisher_inverse,
    step_counts_by_class,
    total_steps,
)
from .partitions import (
    ModulusTuple,
    Partition,
    StatisticTable,
    canonical_key,
    class_regular_partitions,
    dominates,
    glaisher_exponent,
    is_class_regular,
    is_regular,
    multiplicity_factorial_product,
    multiplicity_total,
    part_product,
    partitions,
    regular_partitions,
    regular_threshold_count,
    residue_count,
    statistic_table,
    threshold_count,
)
from .polynomials import PolyFraction, PolyT, pochhammer_t
from .qseries import (
    TruncatedSeries,
    class_regular_gf,
    class_regular_gf_by_sieve,
    glaisher_exponent_gf,
    multiplicity_total_gf,
    regular_gf,
    threshold_count_gf,
)
from .symfunc import (
    GENERIC_T,
    SymFunc,
    TransitionMatrix,
    b_poly,
    bareiss_determinant,
    character,
    complete_homogeneous_in_p,
    hall_inner,
    hl_p,
    hl_q,
    hl_qprime,
    power_substitution,
    r_reduce,
    schur_in_p,
    specialize,
    transition_matrix,
    z_factor,
    z_factor_at_root,
    z_factor_generic,
)
from .tableaux import (
    charge,
    inverse_kostka_matrix,
    kostka_foulkes,
    kostka_matrix,
    kostka_number,
    reading_word,
    semistandard_tableaux,
)

__version__ = "0.1.0"
