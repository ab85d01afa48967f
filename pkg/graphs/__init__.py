from .multipartite import (
    RED, BLUE, COLORS, COLOR_NAMES, other_color,
    MultipartiteHost, TwoColoring, ColorSubgraph,
    build_host, color_of, components, blocks, largest_block_order,
    degree_in_color, relabeled, as_networkx,
)
