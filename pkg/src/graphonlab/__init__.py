"""graphonlab: step graphons, homomorphism densities, cut distance, and
random graph processes, with a reproducibility-first CLI."""

from .cutmetric import (
    CutResult,
    cut_distance,
    cut_norm_exact,
    cut_norm_heuristic,
    distance_to_constant,
)
from .density import (
    DensityEstimate,
    WorkLimitExceeded,
    density_graph,
    density_mc,
    density_step,
)
from .graphs import (
    Graph,
    ParseError,
    complete,
    complete_bipartite,
    cycle,
    hom_count,
    parse_edge_list,
    relabel,
    serialize_edge_list,
    single_edge,
    single_vertex,
)
from .graphons import (
    Kernel,
    StepGraphon,
    bipartite_limit,
    common_refinement,
    constant_graphon,
    equalize,
    evaluate,
    parse_graphon,
    permute_blocks,
    pixel_graphon,
    render_pgm,
    serialize_graphon,
    subtract,
    uniform_attachment_limit,
)
from .sampling import (
    SampleConfig,
    erdos_renyi,
    sample_graph,
    uniform_attachment,
    w_random_graph,
)

__version__ = "0.1.0"

__all__ = [
    "CutResult",
    "DensityEstimate",
    "Graph",
    "Kernel",
    "ParseError",
    "SampleConfig",
    "StepGraphon",
    "WorkLimitExceeded",
    "bipartite_limit",
    "common_refinement",
    "complete",
    "complete_bipartite",
    "constant_graphon",
    "cut_distance",
    "cut_norm_exact",
    "cut_norm_heuristic",
    "cycle",
    "density_graph",
    "density_mc",
    "density_step",
    "distance_to_constant",
    "equalize",
    "erdos_renyi",
    "evaluate",
    "hom_count",
    "parse_edge_list",
    "parse_graphon",
    "permute_blocks",
    "pixel_graphon",
    "relabel",
    "render_pgm",
    "sample_graph",
    "serialize_edge_list",
    "serialize_graphon",
    "single_edge",
    "single_vertex",
    "subtract",
    "uniform_attachment",
    "uniform_attachment_limit",
    "w_random_graph",
]
