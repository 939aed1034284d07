"""Exact computations in symmetric cellular algebras.

Build an algebra from structure constants or one of the bundled families,
attach a cell datum and a symmetrizing trace, then compute dual bases, the
center, the Higman ideal, the ideals spanned by the cell central elements,
Schur elements and primitive central idempotents.
"""

from .algebra import Algebra, Element, check_anti_automorphism, check_associativity, find_identity
from .builders import (
    BuilderParams,
    build,
    build_matrix_blocks,
    build_quiver_zigzag,
    build_temperley_lieb,
    build_truncated_poly,
    quiver_vertex_trace,
)
from .cellular import CellDatum, CellModule, Poset, cell_module, cell_modules, lambda0, verify_cell_datum
from .center import (
    central_structure,
    check_semisimple,
    compute_cell_ideal,
    compute_cell_ideal_prime,
    compute_center,
    compute_higman,
    integrality_check,
    primitive_idempotents,
    schur_elements,
    verify_cell_ideal,
    verify_cell_ideal_prime,
    verify_orthogonality,
)
from .errors import *  # noqa: F401,F403
from .field import GF, QQ, Fp, field_from_tag
from .fileformat import parse_algebra_file, serialize_algebra
from .linalg import Matrix, Subspace, kernel, rank, rref, solve, span
from .report import Report
from .suites import full_report, structural_report, verification_report
from .trace import (
    TraceForm,
    compute_dual_basis,
    perturbed_trace,
    verify_cellular_duals,
    verify_dual_basis_change,
    verify_dual_multiplication,
)

__version__ = "0.1.0"
