"""Evaluation codes over small finite fields.

Constructs affine-variety codes, their extensions to closed points of
arbitrary degree through inner-code concatenation, and the
weight-threshold / improved order-domain codes, together with every
applicable lower bound on the minimum distance and a brute-force
oracle to verify them.
"""

from .codes import (
    CodeInstance,
    FunctionSpace,
    InnerCode,
    build_E_improved,
    build_E_lambda,
    build_affine_variety_code,
    build_extended_code,
    delta_sequence,
    gag_designed_distance,
    matrix_file_text,
    well_behaving_basis,
    xnl_parameters,
)
from .config import (
    ConstructionConfig,
    load_config,
    parse_config,
    serialize_config,
)
from .distoracle import (
    DistanceReport,
    exact_min_distance,
    min_distance,
    verify_bounds,
)
from .errors import ConfigError, ResourceCapError
from .gf import (
    Field,
    FieldElement,
    FieldEmbedding,
    FieldError,
    build_embedding,
    frobenius,
    make_field,
)
from .groebner import (
    Footprint,
    GroebnerBasis,
    buchberger,
    buchberger_moller,
    footprint,
    normal_form,
)
from .pipeline import OrderDomainFailure, analyze, build, report_text, verify
from .points import (
    EvaluationPoint,
    PointSelection,
    points_of_degree,
    rational_points,
    select_points,
)
from .polyring import Poly, WeightedOrder, evaluate, format_poly, parse_poly
from .semigroup import (
    OrderDomainDiagnosis,
    Semigroup,
    check_order_domain,
    gamma_from_footprint,
    gap_count_shift,
    sigma,
)

__version__ = "0.1.0"
