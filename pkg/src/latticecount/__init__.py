"""Exact lattice-point counting through rational generating functions of cones."""
from .barvinok import certificate_check, cone_genfun_barvinok, unimodular_decompose
from .brion import Direction, brion, lawrence_varchenko, lv_rotation_check
from .cones import (SimplicialCone, cone_term, dual_cone, irrational_shift,
                    parallelepiped_points, shift_is_valid, triangulate)
from .ehrhart import QuasiPolynomial, count, ehrhart_quasipolynomial, ehrhart_values
from .genfun import GenFun, GenFunTerm, add, signed_points_in_box, specialize_count
from .kernels import BACKEND
from .polytope import Polytope, dilate, from_hrep, from_vrep, is_simple, vertex_cone

__version__ = "0.1.0"
