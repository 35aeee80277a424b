"""Perfect powers in nondegenerate Lucas sequences: exact scanning, Frey
case data, conditional exponent bounds, and an elementary congruence sieve.
"""

from .bounds import (
    BoundReport,
    ThueForm,
    av_bound,
    combined_bound,
    dim_s2_new,
    ell_bound,
    genus_x0,
    irrational_coeff_prime_bound,
    lemma46_gcd,
    p_from_n_bound,
    smooth_index_bound,
    sturm_bound,
    thue_form,
    thue_index_bound,
)
from .frey import (
    ConductorFormula,
    FreyCase,
    FreyModel,
    NoApplicableCase,
    NonIntegralCoefficient,
    SolutionHypothesis,
    build_model,
    check_delta_identity,
    conductor_bound,
    conductor_bound_noncoprime,
    hypothesis,
    model_discriminant,
    search_unit_discriminant_sequences,
    select_case,
)
from .intarith import (
    Factorization,
    ZeroArgument,
    crt_combine,
    dedekind_psi,
    factorize,
    integer_root,
    is_prime,
    odd_radical,
    ord2,
    perfect_power_split,
    radical,
    squarefree_part,
)
from .lucas import (
    DegenerateSequence,
    SequenceParams,
    TermPair,
    new_params,
    term_pair,
    term_pair_mod,
    verify_identities,
)
from .sieve import (
    IrregularPrime,
    ResidueExplosion,
    SieveConfig,
    SievePrime,
    SieveReport,
    SieveState,
    UselessPrime,
    find_sieve_primes,
    initial_state,
    period_mod,
    residue_classes,
    scan_powers,
    sieve_run,
    sieve_step,
)

__version__ = "0.1.0"
