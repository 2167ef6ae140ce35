"""Exact invariants of Hessenberg varieties: ideals, gradings, the modular law,
Weyl group representations and chromatic/LLT symmetric functions."""

from .qlaurent import QPoly, parse_qpoly, format_qnumber, q, qint
from .rootcore import build_root_system, chevalley_basis, weyl_enumerate
from .idealkit import enumerate_ideals, hessenberg_functions, hessfn_to_ideal, w_catalan
from .nilgrade import Decomposition, dclp_poincare, grading_for_partition
from .modlaw import enumerate_triples, combinatorial_triples, check_modular, solve_modular
from .wrepkit import char_table, parabolic_f, kostka_matrix, llt_rep
from .symkit import SymFunc, csf_bruteforce, llt_bruteforce, abreu_nigro_csf, schur_f_extract

__version__ = "0.1.0"

__all__ = [
    "QPoly", "parse_qpoly", "format_qnumber", "q", "qint",
    "build_root_system", "chevalley_basis", "weyl_enumerate",
    "enumerate_ideals", "hessenberg_functions", "hessfn_to_ideal", "w_catalan",
    "Decomposition", "dclp_poincare", "grading_for_partition",
    "enumerate_triples", "combinatorial_triples", "check_modular", "solve_modular",
    "char_table", "parabolic_f", "kostka_matrix", "llt_rep",
    "SymFunc", "csf_bruteforce", "llt_bruteforce", "abreu_nigro_csf", "schur_f_extract",
]
