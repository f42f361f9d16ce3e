"""Error-correcting codes in the symmetric group under the Kendall-tau metric."""

from .analysis import (
    BalanceVerdict,
    check_balanced,
    check_fiber_balance,
    check_unique_codeword_structure,
    is_coset_of_alternating,
)
from .bounds import (
    BoundReport,
    averaging_bound,
    ball_size,
    bound_report,
    cube_vs_ball,
    gv_guarantee,
    mahonian,
    singleton_bounds,
    sphere_packing_bound,
)
from .code import Code, min_distance, parse_code, read_code, write_code
from .perm import (
    InversionSet,
    Permutation,
    alternating_group,
    compose,
    distance,
    enumerate_sn,
    identity,
    inverse,
    inversion_set,
    parity,
    weight,
)
from .puncture import PunctureSet, fiber, filtered_inversions, psi, puncture, puncture_code
from .search import (
    SearchBudget,
    SearchOutcome,
    classify_2_balanced,
    greedy_gv,
    max_code,
    refute_t_balanced,
    verify_claim2,
    verify_lemma_emo,
)

__version__ = "0.1.0"
