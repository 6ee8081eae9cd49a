"""Minimum cycle bases and minimum homology bases of graphs embedded on surfaces."""

from .mcb import NonOrientableError, minimum_cycle_basis
from .mhb import minimum_homology_basis
from .surface import (
    EmbeddedGraph,
    EmbeddingError,
    ParseError,
    TopoStats,
    build_embedding,
    format_instance,
    parse_instance,
    topo_stats,
)

__all__ = [
    "EmbeddedGraph",
    "EmbeddingError",
    "NonOrientableError",
    "ParseError",
    "TopoStats",
    "build_embedding",
    "format_instance",
    "minimum_cycle_basis",
    "minimum_homology_basis",
    "parse_instance",
    "topo_stats",
]
