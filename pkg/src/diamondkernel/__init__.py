"""Polynomial kernels and exact solvers for diamond-free edge editing and deletion."""

from .deletion import kernelize_deletion
from .editing import kernelize_editing
from .graph import EditSet, Graph, GraphError, Instance, Mode
from .oracle import solve

__all__ = ["EditSet", "Graph", "GraphError", "Instance", "Mode",
           "kernelize_deletion", "kernelize_editing", "solve"]
