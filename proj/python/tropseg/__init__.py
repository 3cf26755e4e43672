"""Tropical line segments between equidistant phylogenetic trees."""

from ._core import (
    DEFAULT_TOL,
    Error,
    LeafSetMismatchError,
    NotEquidistantError,
    NotUltrametricError,
    ParseError,
    PreconditionError,
    Topology,
    Tree,
    TreeSegment,
    TropicalSegment,
    Ultrametric,
    check_clade_preservation,
    check_nni_conjecture,
    check_nni_theorem,
    estimate_star_probability,
    in_tropical_hull,
    is_clade,
    is_equidistant,
    is_ultrametric,
    nni_neighbors,
    one_nni_apart,
    parse_newick,
    point_type,
    random_equidistant_tree,
    restrict_to_clade,
    segment_to_star,
    speciation_times,
    star_on_segment,
    topology_of,
    topology_sequence,
    tree_of,
    tree_segment,
    trop_combine,
    trop_dist,
    tropical_segment,
    ultrametric_of,
    write_newick,
)

__version__ = "0.1.0"
