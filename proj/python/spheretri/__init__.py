"""Sphere triangulations up to 11 vertices and their rainbow edge colourings."""

from ._core import (
    Error,
    Triangulation,
    colorings,
    count_coloring_orbits,
    count_colorings,
    enumerate,
    insert_in_face,
    insert_on_edge,
    is_isomorphic,
    is_rainbow,
    octahedron,
    summary,
    tetrahedron,
)

__all__ = [
    "Error",
    "Triangulation",
    "colorings",
    "count_coloring_orbits",
    "count_colorings",
    "enumerate",
    "insert_in_face",
    "insert_on_edge",
    "is_isomorphic",
    "is_rainbow",
    "octahedron",
    "summary",
    "tetrahedron",
]
