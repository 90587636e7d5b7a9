"""Total colourings: one colour per vertex and per edge."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import edge_key


@dataclass
class TotalColouring:
    """Colours for every vertex and every edge of a graph.

    ``edge_colours`` is keyed by canonical (min, max) endpoint pairs.
    ``params`` is the PaletteParams the colouring was built against, or None
    for colourings from external sources.
    """

    vertex_colours: dict
    edge_colours: dict
    params: object = None

    def edge(self, u, v):
        return self.edge_colours[edge_key(u, v)]

    def weighted_degree(self, g, v):
        """Vertex colour plus the sum of its incident edge colours."""
        return self.vertex_colours[v] + sum(
            self.edge_colours[edge_key(v, u)] for u in g.adjacency[v])

    def max_colour(self):
        vals = list(self.vertex_colours.values()) + list(self.edge_colours.values())
        return max(vals) if vals else 0

    def copy(self):
        return TotalColouring(dict(self.vertex_colours), dict(self.edge_colours),
                              self.params)
