from .bipartite import (
    Certification, BalancedBipartite,
    chvatal_certifier, berge_certifier, las_vergnas_certifier,
    hamiltonian_cycle_through, hamiltonian_cycle, hamiltonian_path_between,
    is_hamiltonian_biconnected, linear_forests, has_q_edge_extension,
)
