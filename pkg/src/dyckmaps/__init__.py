"""dyckmaps: bijections and exact statistics on Dyck and bilateral Dyck paths.

The package provides validated step words, their classical statistics
(peaks, valleys, contacts, crossings, step-height parities, Narayana
numbers), the unique factorizations of Dyck and balanced words, six
length-preserving bijections built on those factorizations, exhaustive
enumeration with exact distribution tables, uniform random sampling, and a
brute-force verification engine for the equidistribution claims the maps
realize.
"""

from .decompose import (
    CrossingFactorization,
    PhiDecomposition,
    PsiDecomposition,
    crossing_factorize,
    first_return_split,
    phi_bracketing,
    phi_parse,
    psi_bracketing,
    psi_parse,
)
from .errors import (
    DyckError,
    EmptyWordError,
    InvalidCharacterError,
    NotADyckWordError,
    NotBilateralError,
    UnknownStatisticError,
)
from .generate import (
    CATALAN_NUMBERS,
    CENTRAL_BINOMIALS,
    DistributionTable,
    catalan,
    central_binomial,
    distribution,
    generate_bilateral,
    generate_dyck,
    sample_bilateral,
    sample_dyck,
)
from .maps import (
    alpha,
    beta,
    phi,
    phi_ext,
    phi_stages,
    psi,
    psi_ext,
    psi_stages,
)
from .render import render_ascii
from .stats import (
    StatRecord,
    contacts,
    crossings,
    downs_at_even_height,
    downs_at_odd_height,
    narayana,
    peaks,
    semilength,
    stat_record,
    ups_at_even_height,
    ups_at_odd_height,
    valleys,
)
from .verify import (
    CheckResult,
    VerificationReport,
    verify_involutions_and_transport,
    verify_randomized,
    verify_theorem1,
    verify_theorem2,
)
from .words import (
    HeightProfile,
    PathClass,
    PathWord,
    Step,
    classify,
    height_profile,
    parse_word,
    reflect,
    step_height,
)

__version__ = "0.1.0"

__all__ = [
    "CATALAN_NUMBERS",
    "CENTRAL_BINOMIALS",
    "CheckResult",
    "CrossingFactorization",
    "DistributionTable",
    "DyckError",
    "EmptyWordError",
    "HeightProfile",
    "InvalidCharacterError",
    "NotADyckWordError",
    "NotBilateralError",
    "PathClass",
    "PathWord",
    "PhiDecomposition",
    "PsiDecomposition",
    "StatRecord",
    "Step",
    "UnknownStatisticError",
    "VerificationReport",
    "alpha",
    "beta",
    "catalan",
    "central_binomial",
    "classify",
    "contacts",
    "crossing_factorize",
    "crossings",
    "distribution",
    "downs_at_even_height",
    "downs_at_odd_height",
    "first_return_split",
    "generate_bilateral",
    "generate_dyck",
    "height_profile",
    "narayana",
    "parse_word",
    "peaks",
    "phi",
    "phi_bracketing",
    "phi_ext",
    "phi_parse",
    "phi_stages",
    "psi",
    "psi_bracketing",
    "psi_ext",
    "psi_parse",
    "psi_stages",
    "reflect",
    "render_ascii",
    "sample_bilateral",
    "sample_dyck",
    "semilength",
    "stat_record",
    "step_height",
    "ups_at_even_height",
    "ups_at_odd_height",
    "valleys",
    "verify_involutions_and_transport",
    "verify_randomized",
    "verify_theorem1",
    "verify_theorem2",
]
