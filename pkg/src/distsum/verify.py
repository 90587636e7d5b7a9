"""Algorithm-agnostic validation of total colourings.

Checks raw-colour properness (not the modular variant), weighted-degree
distinctness for every vertex pair within the radius, and an optional palette
bound.  Distances come from per-vertex BFS truncated at the radius; nothing
here depends on how the colouring was produced.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import edge_key


class IncompleteColouringError(ValueError):
    """A vertex or edge is missing a colour assignment."""


@dataclass
class VerificationReport:
    proper_vertices: bool = True
    proper_edges: bool = True
    proper_incidence: bool = True
    r_distant_ok: bool = True
    max_colour: int = 0
    bound_ok: bool = True
    violations: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.violations


def _truncated_bfs(adjacency, v, radius):
    seen = {v}
    frontier = [v]
    out = []
    for _ in range(radius):
        nxt = []
        for w in frontier:
            for u in adjacency[w]:
                if u not in seen:
                    seen.add(u)
                    out.append(u)
                    nxt.append(u)
        frontier = nxt
    return out


def verify(g, colouring, radius, bound=None):
    """Check a total colouring of g; returns a VerificationReport.

    Violations are (kind, witness) pairs; the report passes iff none were
    collected.  Raises IncompleteColouringError when an element has no colour.
    """
    if radius < 1:
        raise ValueError("radius must be >= 1")
    vcol = colouring.vertex_colours
    ecol = colouring.edge_colours
    for v in g.vertices():
        if v not in vcol:
            raise IncompleteColouringError(f"vertex {v} has no colour")
    for key in g.edges:
        if key not in ecol:
            raise IncompleteColouringError(f"edge {key} has no colour")

    report = VerificationReport()
    note = report.violations.append

    for (u, v) in g.edges:
        if vcol[u] == vcol[v]:
            report.proper_vertices = False
            note(("adjacent-vertices", (u, v)))
        ce = ecol[edge_key(u, v)]
        if ce == vcol[u] or ce == vcol[v]:
            report.proper_incidence = False
            note(("edge-endpoint", (u, v)))
    for v in g.vertices():
        incident = sorted(g.adjacency[v])
        for i, a in enumerate(incident):
            for b in incident[i + 1:]:
                if ecol[edge_key(v, a)] == ecol[edge_key(v, b)]:
                    report.proper_edges = False
                    note(("adjacent-edges", (edge_key(v, a), edge_key(v, b))))

    sums = {v: vcol[v] + sum(ecol[edge_key(v, u)] for u in g.adjacency[v])
            for v in g.vertices()}
    for v in g.vertices():
        for u in _truncated_bfs(g.adjacency, v, radius):
            if u > v and sums[u] == sums[v]:
                report.r_distant_ok = False
                note(("equal-sums", (v, u)))

    report.max_colour = colouring.max_colour()
    if bound is not None and report.max_colour > bound:
        report.bound_ok = False
        note(("bound-exceeded", (report.max_colour, bound)))
    return report
