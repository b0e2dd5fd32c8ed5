"""Exact classification of cubic Calabi-Yau algebras on two generators.

The main entry points are :func:`classify` for a degree-4 potential and
:func:`parse_potential` for reading one from text.
"""

from .classify import ClassificationReport, classify, match_exceptional, potentials_equivalent
from .comm import BinForm, bar, classify_quartic, equivalent_glambda, normalize_quartic, tilde
from .curves import classify_curve, factor_22
from .cy import cy_check, hessian, point_scheme, relations, tau_of_point
from .errors import CubicyError, NonHomogeneous, ParseError, PreconditionViolated
from .hdet import check_automorphism, is_hdet_exceptional
from .ncpoly import GL2, NcPoly, W0, W1, W2, W3, W4, W5, W6, apply_gl2, project_c
from .oracle import graded_dims, ideal_member, nilpotent_linear_form
from .parse import parse_expression, parse_matrix, parse_potential
from .present import to_clifford, to_dq, verify_centrality, verify_dq
from .scalars import QQ, FieldTower, adjoin_sqrt, format_scalar

__version__ = "0.1.0"

__all__ = [
    "ClassificationReport", "classify", "match_exceptional", "potentials_equivalent",
    "BinForm", "bar", "tilde", "classify_quartic", "normalize_quartic", "equivalent_glambda",
    "classify_curve", "factor_22",
    "cy_check", "hessian", "point_scheme", "relations", "tau_of_point",
    "CubicyError", "NonHomogeneous", "ParseError", "PreconditionViolated",
    "check_automorphism", "is_hdet_exceptional",
    "GL2", "NcPoly", "W0", "W1", "W2", "W3", "W4", "W5", "W6", "apply_gl2", "project_c",
    "graded_dims", "ideal_member", "nilpotent_linear_form",
    "parse_expression", "parse_matrix", "parse_potential",
    "to_clifford", "to_dq", "verify_centrality", "verify_dq",
    "QQ", "FieldTower", "adjoin_sqrt", "format_scalar",
]
