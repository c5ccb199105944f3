"""Dominance order, Littlewood-Richardson products and checkable tensor-power certificates for GL(d)."""

__version__ = "0.1.0"

from .partition import (  # noqa: E402
    Composition,
    Partition,
    PartitionError,
    compositions,
    dominance_leq,
    equivalent,
    join,
    mu,
    scaled_dominance_leq,
    transpose,
)
from .lr import (  # noqa: E402
    SupportCapExceeded,
    TensorSupport,
    contains_in_power,
    lr_coefficient,
    tensor_power_support,
    tensor_product,
)
from .cone import (  # noqa: E402
    ConeError,
    Decomposition,
    DominanceCone,
    cone_member,
    decompose,
    dominance_cone,
    polytope_vertices,
    sigma,
    triangulate,
)
from .certificates import (  # noqa: E402
    Certificate,
    CertificateError,
    DominanceCertificate,
    Verdict,
    build_det_certificate,
    build_dominance_certificate,
    build_vertex_certificate,
    build_wedge_certificate,
    verify_certificate,
    verify_dominance_certificate,
)
from ._kernels import BACKEND  # noqa: E402

__all__ = [n for n in dir() if not n.startswith("_")]
