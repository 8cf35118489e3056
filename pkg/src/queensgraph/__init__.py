"""Exact and numerical tools for the n-Queens graph."""

from queensgraph.board import BoardCoord, QueensGraph, build_graph

__all__ = ["BoardCoord", "QueensGraph", "build_graph"]
__version__ = "0.1.0"
