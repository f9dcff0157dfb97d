from .table import GroupTable
from .generation import generates, prob_gen2, prob_gen2_bruteforce
from .graph import (GeneratingGraph, build_graph, graph_stats, posa_check, max_clique,
                    chromatic_number)
from .spread import SpreadCert, spread_exact, uspread_certify, UspreadCertificate

__all__ = ["GroupTable", "generates", "prob_gen2", "prob_gen2_bruteforce", "GeneratingGraph",
           "build_graph", "graph_stats", "posa_check", "max_clique", "chromatic_number",
           "SpreadCert", "spread_exact", "uspread_certify", "UspreadCertificate"]
