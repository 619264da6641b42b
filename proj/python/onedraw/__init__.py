"""Orthogonal and smooth orthogonal layouts of 1-plane graphs."""

from fractions import Fraction

from ._onedraw import (
    BudgetExceeded,
    Graph,
    Layout,
    ParseError,
    SemanticError,
    draw,
    gen_named,
    is_biconnected,
    is_outer_one_plane,
    named_families,
    oracle,
    parse_graph,
    random_one_plane,
    random_outer_one_plane,
    violations,
)


def size(layout: Layout) -> tuple[Fraction, Fraction]:
    """Exact width and height of a layout's bounding box."""
    return Fraction(layout.width), Fraction(layout.height)


__all__ = [
    "BudgetExceeded",
    "Graph",
    "Layout",
    "ParseError",
    "SemanticError",
    "draw",
    "gen_named",
    "is_biconnected",
    "is_outer_one_plane",
    "named_families",
    "oracle",
    "parse_graph",
    "random_one_plane",
    "random_outer_one_plane",
    "size",
    "violations",
]
