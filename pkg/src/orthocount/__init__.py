"""Exact-arithmetic orthogonality graphs over finite fields.

Construction of the projective and all-vectors orthogonality graphs,
exact verification of their square-of-adjacency identities, bit-parallel
counting of mutually orthogonal k-tuples and small-pattern copies, and a
seeded experiment harness comparing observed counts against closed-form
predictions.
"""

from .asymptotics import (
    CountReport,
    ExperimentConfig,
    compare_thresholds,
    mix_seed,
    predict_copy_count,
    predict_tuple_count,
    run_experiment,
    sample_subset,
    splitmix64,
    threshold_new,
    threshold_old,
    validity_margin,
)
from .counting import (
    PatternGraph,
    VertexSubset,
    automorphism_count,
    count_copies,
    count_ordered_tuples,
    count_ordered_tuples_oracle,
)
from .errors import BoundExceededError, OrthocountError
from .fields import Field, field_from_order, make_field
from .graphs import (
    OrthoGraph,
    build_affine_graph,
    build_projective_graph,
    export_graph,
    parse_graph_export,
)
from .spectral import (
    IdentityReport,
    SpectralProfile,
    predicted_spectrum,
    verify_affine_square_identity,
    verify_projective_square_identity,
    verify_square_identity,
)
from .vectors import (
    dot,
    enumerate_nonzero_vectors,
    format_vector,
    is_orthogonal,
    parse_vector,
    projective_representatives,
)

__version__ = "0.1.0"
