"""Finite permutation groups, powerfully embedded subgroups, and the
verification harness for the transfer/fusion and p-length theorems built
on the powerful-class invariant."""

from .errors import (
    AmbientMismatch,
    BadParameter,
    CapExceeded,
    ConsistencyError,
    DegreeMismatch,
    GreedyStalled,
    GroupError,
    HypothesisViolated,
    NotNormal,
    NotPGroup,
    NotPowerfullyEmbedded,
    NotSylow,
    ParseError,
    SylowNotInside,
    UnknownGroup,
    UnsupportedPrime,
)
from .perm import Permutation
from .groups import (
    Group,
    Homomorphism,
    SeriesChain,
    SeriesKind,
    Subgroup,
    center,
    centralizer,
    commutator_subgroup,
    conjugacy_classes,
    derived_subgroup,
    generate,
    intersect,
    iterated_commutator,
    join,
    lower_central_series,
    nilpotency_class,
    normal_closure,
    normal_subgroups,
    normalizer,
    power_subgroup,
    quotient,
    span,
    subgroup_from_members,
    upper_central_series,
)
from .isomorphism import is_isomorphic, isomorphism
from .psylow import (
    PSeriesResult,
    is_p_nilpotent,
    is_p_power,
    is_p_solvable,
    is_prime,
    p_core,
    p_length,
    p_part,
    pprime_core,
    sylow_p,
    upper_p_series,
)
from .powerful import (
    CheckResult,
    EtaProfile,
    brute_force_pwh,
    eta,
    eta_profile,
    eta_relative,
    greedy_eta_chain,
    has_small_powerful_class,
    is_powerful,
    is_powerfully_embedded,
    potent_filtration_odd,
    potent_filtration_p2,
    powerful_class,
    powerful_height,
    upper_eta_series,
    verify_eta_series,
    verify_potent_filtration,
)
from .fusion import (
    ClosureReport,
    TheoremOutcome,
    TransferData,
    controls_transfer,
    focal_subgroup,
    has_cpwrcp_quotient,
    is_strongly_closed,
    is_weakly_closed,
    strongly_controls_fusion,
    transfer,
    transfer_data,
    verify_eta_controls_transfer,
    verify_first_gruen_identity,
    verify_second_gruen_for_eta,
    verify_small_pwc_p_nilpotence,
    verify_small_pwc_transfer_control,
    verify_strong_fusion_control,
)
from .constructions import (
    affine_frobenius,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    extraspecial_p3,
    gl23,
    quaternion,
    regular_embedding,
    semidihedral,
    sl23,
    symmetric,
    wreath_cpcp,
)
from .corpus import (
    CorpusEntry,
    SHIPPED_CORPUS_PATH,
    build_shipped_corpus,
    compute_tags,
    find_entry,
    load,
    load_shipped,
    save,
)
from .harness import THEOREM_IDS, opp_core, rows_for_entry, run_suite, run_suite_parallel
from .reports import ReportRow, VerificationReport, make_row, report_from, strip_footer

__all__ = [name for name in dir() if not name.startswith("_")]
