"""Exact uncertainty-inequality toolkit for finite abelian groups.

Computes the divisor-interpolation bound u(n,k) on spectral support sizes,
verifies it against a brute-force minimal-support oracle on small groups,
constructs extremal functions attaining the classical equality cases, and
checks the coset decomposition of the discrete Fourier transform — all in
exact cyclotomic arithmetic.
"""

from .bounds import (
    BoundValue,
    DivisorPair,
    HullDiagram,
    SubmultTrace,
    hull_points,
    nearest_divisors,
    submult_check,
    submult_traces,
    theta_lower,
    u_bound,
)
from .cyclo import Cyc, ExactMatrix, cyclotomic_polynomial, exact_kernel, zeta_pow
from .fourier import (
    SectionMap,
    Signal,
    Spectrum,
    build_section,
    coset_dft,
    delta_signal,
    descend,
    dft,
    idft,
    indicator_signal,
    modulate,
    random_rational_signal,
    signal_from_json,
    signal_from_rationals,
    support,
    translate,
)
from .groups import (
    GroupSpec,
    QuotientDescriptor,
    Subgroup,
    abelian_groups_of_order,
    annihilator,
    char_pairing,
    make_group,
    parse_group_spec,
    quotient,
    subgroup_as_group,
    subgroup_from_elements,
    subgroup_generated,
    subgroup_of_order,
)
from .search import (
    BudgetExceeded,
    MinorCertificate,
    SearchBudget,
    ThetaWitness,
    chebotarev_check,
    extremal_subgroup_function,
    min_cosupport,
    tao_tight_construct,
    theta_oracle,
    witness_json_dict,
)

__version__ = "0.1.0"
