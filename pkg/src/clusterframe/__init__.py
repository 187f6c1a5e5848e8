"""Exact cluster algebras with principal coefficients and Cambrian frameworks."""
from .cluster import (Seed, build_exchange_graph, cluster_mutate, denominator_vector,
                      f_polynomial, initial_seed, matrix_mutate, mutate_path, seed_equivalent)
from .coxeter import CoxeterElement, CoxeterGroup, GroupElement, coxeter_element
from .framework import (Framework, cambrian_framework, cone_of, cross_checks, mu_edge,
                        rank_two_trace, seed_map, verify_all, verify_condition, verify_fan)
from .laurent import LaurentPoly
from .rootspace import RootSystem, cartan_companion, find_symmetrizer, sign_of
from .sortable import (build_cambrian_framework, c_sorting_word, enumerate_sortables,
                       is_c_sortable, pi_down)

__version__ = "0.1.0"

__all__ = [
    "Seed", "build_exchange_graph", "cluster_mutate", "denominator_vector", "f_polynomial",
    "initial_seed", "matrix_mutate", "mutate_path", "seed_equivalent",
    "CoxeterElement", "CoxeterGroup", "GroupElement", "coxeter_element",
    "Framework", "cambrian_framework", "cone_of", "cross_checks", "mu_edge", "rank_two_trace",
    "seed_map", "verify_all", "verify_condition", "verify_fan",
    "LaurentPoly", "RootSystem", "cartan_companion", "find_symmetrizer", "sign_of",
    "build_cambrian_framework", "c_sorting_word", "enumerate_sortables", "is_c_sortable",
    "pi_down",
]
