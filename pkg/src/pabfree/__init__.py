"""Tools for graphs with no induced subdivision of P(a, b)."""

from .graph import (Graph, GraphError, PatternPab, build_graph, gen_complete_multipartite,
                    gen_pattern, gen_random, gen_subdivision, trace)
from .guards import DEFAULT_GUARDS, GuardError, Guards
from .oracles import (ColouringCertificate, chromatic_number, clique_number,
                      find_k_connected_chromatic, induced_embedding, is_k_connected,
                      max_independent_set, ramsey_extract)
from .subdivision import (SubdivisionWitness, detect_induced_subdivision, is_member,
                          validate_witness)

__version__ = "0.1.0"
