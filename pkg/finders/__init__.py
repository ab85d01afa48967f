from .bitgraph import BitGraph, as_bitgraph, iter_bits
from .witness import StructureKind, StructureWitness, validate_witness
from .paths import (
    find_path_exact, find_cycle_exact, find_cycle_at_least, iter_cycles, iter_paths,
    longest_path_order, longest_cycle_order, hamiltonian_cycle_indices,
)
from .matching import max_matching, connected_matching_number
from .mono import mono_search, search_structure, mono_search_bitgraphs
