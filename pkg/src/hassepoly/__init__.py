"""Exact checks of Hasse, lattice and face-nonrevisiting properties on
oriented polytope graphs."""
from .generators import (default_cost, gen_associahedron, gen_cube, gen_klee_minty,
                         gen_permutahedron, gen_simplex, gen_zonotope)
from .kernels import BACKEND
from .lattice_laws import (pseudo_join, pseudo_meet, verify_boolean_sublattice,
                           verify_distinct_pseudo_joins, verify_pseudo_join_theorem)
from .orientation import (CyclicOrientationError, NonGenericCostError, Poset, billera_trace,
                          build_poset, from_arcs, is_facial, is_hasse, is_lattice, join, meet,
                          orient)
from .paths import (check_nonrevisiting, conjecture_check, hirsch_check, is_spindle,
                    longest_directed_path, pivot_walk, spindle_theorem_check)
from .pipeline import analyze
from .polytope import NotSimpleError, Polytope, all_faces, smallest_face
from .topology import (ball_or_sphere_profile, betti_numbers, interval_sweep, mobius,
                       order_complex, reduced_euler)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CyclicOrientationError", "NonGenericCostError", "NotSimpleError", "Polytope",
    "Poset", "all_faces", "analyze", "ball_or_sphere_profile", "betti_numbers",
    "billera_trace", "build_poset", "check_nonrevisiting", "conjecture_check", "default_cost",
    "from_arcs", "gen_associahedron", "gen_cube", "gen_klee_minty", "gen_permutahedron",
    "gen_simplex", "gen_zonotope", "hirsch_check", "interval_sweep", "is_facial", "is_hasse",
    "is_lattice", "is_spindle", "join", "longest_directed_path", "meet", "mobius",
    "order_complex", "orient", "pivot_walk", "pseudo_join", "pseudo_meet", "reduced_euler",
    "smallest_face", "spindle_theorem_check", "verify_boolean_sublattice",
    "verify_distinct_pseudo_joins", "verify_pseudo_join_theorem",
]
