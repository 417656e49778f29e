"""Exact rational polytopes: Minkowski sums, polar duals, face lattices and rounding."""

from .core_math import Q, DimensionMismatch, DomainError, EmptyInput
from .face_lattice import FaceLattice, build_face_lattice, euler_residual, normal_cone
from .minkowski import SumContext, decompose_face, minkowski_sum, trivial_kface_bound, trivial_vertex_bound
from .nesterov import (closed_form_fvector, is_perfectly_centered, nesterov_round, perfectly_centered_witnesses,
                       predicted_rounding_lattice, verify_rounding)
from .polytope import (Face, InvalidConstruction, NotCentered, Polytope, construct, convex_hull, cross_polytope,
                       cube, cyclic, polar_dual, simplex, support_set, tetrahedron_pc)

__version__ = "0.1.0"
