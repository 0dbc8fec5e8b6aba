"""ncfkit: nested canalyzing Boolean functions, measured exactly.

Truth-table engine, brute-force sensitivity and block-sensitivity oracles
with witnesses, canonical layered-form construction and recognition, the
closed-form sensitivity of layered functions, and exact enumeration and
counting of monotone nested canalyzing functions.  Hot loops run in a
compiled kernel when available (see ncfkit._kernels).
"""

__version__ = "0.1.0"

from ._kernels import backend_name
from .anf import AnfPolynomial, parse_anf, table_to_anf
from .enumeration import (
    CountTable,
    MncfSpec,
    count_mncf,
    count_ncf,
    enumerate_mncf,
    enumerate_ncf,
    is_mncf,
    layer_compositions,
    mncf_direction,
    multinomial,
    ordered_partitions,
    random_ncf_spec,
)
from .errors import CapExceededError, NcfkitError, ParseError
from .ncf import (
    NcfFailure,
    NcfLayerSpec,
    NotNcf,
    Profile,
    StandardForm,
    construct,
    layer_number,
    parse_layer_spec,
    profile_of,
    recognize,
    sensitivity_bounds,
    sensitivity_formula,
    standardize,
)
from .sensitivity import (
    SensitivityReport,
    average_sensitivity,
    block_sensitivity,
    block_sensitivity_at,
    block_sensitivity_direct,
    block_sensitivity_with_witness,
    full_report,
    l_block_sensitivity,
    minimal_sensitive_blocks,
    sensitivity,
    sensitivity_at,
    sensitivity_with_witness,
)
from .truthtable import (
    Monotonicity,
    TruthTable,
    decode_word,
    encode_word,
    flip,
)

__all__ = [
    "AnfPolynomial",
    "CapExceededError",
    "CountTable",
    "MncfSpec",
    "Monotonicity",
    "NcfFailure",
    "NcfLayerSpec",
    "NcfkitError",
    "NotNcf",
    "ParseError",
    "Profile",
    "SensitivityReport",
    "StandardForm",
    "TruthTable",
    "average_sensitivity",
    "backend_name",
    "block_sensitivity",
    "block_sensitivity_at",
    "block_sensitivity_direct",
    "block_sensitivity_with_witness",
    "construct",
    "count_mncf",
    "count_ncf",
    "decode_word",
    "encode_word",
    "enumerate_mncf",
    "enumerate_ncf",
    "flip",
    "full_report",
    "is_mncf",
    "l_block_sensitivity",
    "layer_compositions",
    "layer_number",
    "minimal_sensitive_blocks",
    "mncf_direction",
    "multinomial",
    "ordered_partitions",
    "parse_anf",
    "parse_layer_spec",
    "profile_of",
    "random_ncf_spec",
    "recognize",
    "sensitivity",
    "sensitivity_at",
    "sensitivity_bounds",
    "sensitivity_formula",
    "sensitivity_with_witness",
    "standardize",
    "table_to_anf",
]
