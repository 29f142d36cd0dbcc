"""Lee-metric CSS code toolkit.

Core modules:

* fields      - exact F_p / F_{p^m} / polynomial arithmetic
* lee         - Lee weights, sphere counts, entropy
* linear      - linear codes, duals, CSS pairs, weight enumeration
* gv          - existence bounds, rate curves, random witness search
* negacyclic  - designed-distance constructions and the syndrome decoder
* channel     - weight-damped error channel and Monte Carlo harness

The service subpackage wraps all of it behind a FastAPI app; the leeqec CLI
is a thin client of the same request/response layer.
"""

from .channel import (
    ChannelParams,
    ErrorSample,
    SimulationReport,
    run_monte_carlo,
    sample_error,
    symbol_distribution,
    tail_weight_probability,
)
from .fields import (
    CyclotomicCoset,
    ExtensionField,
    FieldElement,
    Polynomial,
    build_extension,
    find_primitive_2n_root,
    minimal_polynomial,
    odd_cyclotomic_cosets,
    reciprocal_polynomial,
)
from .gv import (
    GvQuery,
    GvVerdict,
    RatePoint,
    WitnessResult,
    gv_exists,
    gv_lhs,
    gv_scan,
    random_css_witness_search,
    rate_curve,
    rate_curve_csv,
    rate_hamming,
    rate_lee_asymptotic,
)
from .lee import (
    LeeSphereCount,
    lee_weight,
    lee_weight_vector,
    p_ary_entropy,
    sphere_size_dp,
    sphere_size_exact,
    sphere_size_upper,
)
from .linear import (
    CssCode,
    EnumerationGuardError,
    LinearCode,
    QuantumLeeWeights,
    contains,
    dual_code,
    min_lee_weight,
    quantum_lee_weights,
    syndrome,
)
from .negacyclic import (
    ContainmentError,
    DecodingRadiusError,
    DegenerateCodeError,
    LeeDecoder,
    NegacyclicCode,
    build_decoder,
    construct_css_negacyclic,
    design_generator,
    derive_h,
    iter_lee_ball,
)

__version__ = "0.1.0"
