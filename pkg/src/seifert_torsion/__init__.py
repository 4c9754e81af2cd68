"""Invariants, analytic torsion, and abelian Chern-Simons partition
magnitudes of circle-fibered three-manifolds described by Seifert data.

The public surface is re-exported here; see the CLI (`seifert-torsion`) for
the command line front end.
"""

from .dedekind import (
    adiabatic_eta,
    dedekind_sum_exact,
    dedekind_sum_float,
    dedekind_sum_recursive,
    validate_dedekind_args,
)
from .errors import (
    AngleOutOfRange,
    CapExceeded,
    ChernNumberZero,
    ChernZeroWarning,
    CoprimalityViolation,
    CsLengthMismatch,
    DomainError,
    NegativeChernWarning,
    NegativeGenus,
    NonPositiveAlpha,
    NonPositiveChern,
    NumericWindowError,
    ParseError,
    PoleAtOne,
    SeifertError,
    SeifertWarning,
    SingularPoint,
    UnsupportedWindow,
    ValidationError,
)
from .homology import (
    AbelianGroupDecomposition,
    ModuliDescription,
    SmithDecomposition,
    enumerate_torsion_characters,
    first_homology,
    moduli_description,
    smith_normal_form,
    torsion_h2_order,
)
from .parsing import format_seifert, parse_seifert
from .partition import (
    PartitionInputs,
    m_exponent,
    partition_magnitude,
    phase_factor,
    z_partition_value,
    zbar_component_magnitude,
    zbar_partition_value,
)
from .seifert import (
    IntegerMatrix,
    SeifertData,
    chern_number,
    relation_matrix,
    torsion_order_integer,
    validate_seifert,
)
from .torsion import (
    DerivativeAtZero,
    IsotropyVolume,
    K0Params,
    KThetaParams,
    TorsionReport,
    isotropy_volume,
    k0_deriv0,
    k0_function,
    k_theta_function,
    scalar_torsion_trivial,
    torsion_prefactor,
    trivial_rep_k0_params,
    volume_coefficient,
)
from .zetafunc import hurwitz_zeta, hurwitz_zeta_deriv0, riemann_zeta

__version__ = "0.1.0"

__all__ = [
    "AbelianGroupDecomposition",
    "AngleOutOfRange",
    "CapExceeded",
    "ChernNumberZero",
    "ChernZeroWarning",
    "CoprimalityViolation",
    "CsLengthMismatch",
    "DerivativeAtZero",
    "DomainError",
    "IntegerMatrix",
    "IsotropyVolume",
    "K0Params",
    "KThetaParams",
    "ModuliDescription",
    "NegativeChernWarning",
    "NegativeGenus",
    "NonPositiveAlpha",
    "NonPositiveChern",
    "NumericWindowError",
    "ParseError",
    "PartitionInputs",
    "PoleAtOne",
    "SeifertData",
    "SeifertError",
    "SeifertWarning",
    "SingularPoint",
    "SmithDecomposition",
    "TorsionReport",
    "UnsupportedWindow",
    "ValidationError",
    "adiabatic_eta",
    "chern_number",
    "dedekind_sum_exact",
    "dedekind_sum_float",
    "dedekind_sum_recursive",
    "enumerate_torsion_characters",
    "first_homology",
    "format_seifert",
    "hurwitz_zeta",
    "hurwitz_zeta_deriv0",
    "isotropy_volume",
    "k0_deriv0",
    "k0_function",
    "k_theta_function",
    "m_exponent",
    "moduli_description",
    "parse_seifert",
    "partition_magnitude",
    "phase_factor",
    "relation_matrix",
    "riemann_zeta",
    "scalar_torsion_trivial",
    "smith_normal_form",
    "torsion_h2_order",
    "torsion_order_integer",
    "torsion_prefactor",
    "trivial_rep_k0_params",
    "validate_dedekind_args",
    "validate_seifert",
    "volume_coefficient",
    "z_partition_value",
    "zbar_component_magnitude",
    "zbar_partition_value",
]
