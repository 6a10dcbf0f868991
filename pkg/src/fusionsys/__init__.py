"""fusionsys: fusion systems of finite groups, with brute-force verification
of nilpotency criteria, ZJ-style normality results and the replacement
theorem over a corpus of small permutation groups."""

__version__ = "0.1.0"

from .errors import (
    AmbientMismatch,
    BatchInputError,
    DegreeMismatch,
    DoesNotNormalize,
    FusionToolError,
    InvalidCycle,
    LatticeTooLarge,
    MethodDisagreement,
    NotAPGroup,
    NotInAmbient,
    NotInP,
    NotNormalInP,
    ParseError,
    PreconditionViolated,
    PropertyFailure,
    SizeLimitExceeded,
)
from .perm import Permutation, commutator
from .groups import (
    ActionImage,
    DEFAULT_ELEMENT_LIMIT,
    Group,
    Subgroup,
    build_group,
    center,
    centralizer,
    commutator_subgroup,
    commutator_with_element,
    conjugate_subgroup,
    derived_subgroup,
    induced_action,
    is_characteristic,
    is_normal,
    join,
    meet,
    normalizer,
    odd_prime_divisors,
    p_core,
    p_part,
    p_prime_generated,
    rebase,
    subgroup_generated,
    sylow_subgroup,
    trivial_subgroup,
    whole_subgroup,
)
from .lattice import (
    AbelianFamily,
    KIND_ALL_ABELIAN,
    KIND_CUSTOM,
    KIND_MAX_ABELIAN,
    KIND_MAX_ELEMENTARY,
    SubgroupLattice,
    build_family,
    enumerate_subgroups,
    family_join,
    family_meet,
    family_restrict,
    nilpotency_class,
    normal_class_le2_subgroups,
    thompson_J,
    thompson_ZJ,
)
from .fusion import (
    FusionContext,
    FusionMorphism,
    aut_F,
    f_conjugates,
    hom_F,
    is_constrained,
    is_f_centric,
    is_nilpotent_fusion,
    is_normal_in_F,
    is_strongly_closed,
    model_condition,
    normalizer_system,
    strongly_closed_subgroups,
)
from .criteria import (
    QUANTIFIER_EXISTENTIAL,
    QUANTIFIER_UNIVERSAL,
    check_condition_i,
    check_condition_ii_A,
    check_condition_ii_B,
    is_p_nilpotent,
    is_p_stable,
    replacement,
    replacement_exhaustive_scan,
    replacement_maximal,
    verify_glauberman_thompson,
    verify_np_lemma,
    verify_theorem_A,
    verify_theorem_B,
    verify_zj_normality,
)
from .reports import (
    HypothesisReport,
    VERDICT_CONFIRMED,
    VERDICT_FALSIFIED,
    VERDICT_UNMET,
    VerificationReport,
)
from .groupfile import GroupFile, parse_cycles, parse_group_file, serialize_group_file
from .catalog import builtin_catalog, builtin_names, get_builtin
from .batch import BatchResult, BatchSpec, resolve_group, run_batch
