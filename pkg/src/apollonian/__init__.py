"""Exact spanning-tree enumeration for Apollonian networks."""

from .counting import (
    ClassCensus,
    EntropyRow,
    FactoredCount,
    census,
    census_chain,
    census_seed,
    census_step,
    closed_a,
    closed_b,
    closed_c,
    closed_s,
    entropy_comparison,
    entropy_table,
    spanning_tree_count,
)
from .errors import ApollonianError, ConsistencyError, DisconnectedGraphError, SizeGuardError
from .graph import ApollonianGraph, Graph, build_iterative, build_merged, export, order_size
from .oracle import (
    ClassifiedCensus,
    SubgraphClass,
    bareiss_determinant,
    c_count_oracle,
    classify_exhaustive,
    rooted_forest_count,
    tree_count_kirchhoff,
)

__version__ = "0.1.0"
