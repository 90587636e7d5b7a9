"""Sequential recolouring that makes weighted degrees distinct on every pair
of vertices within the requested radius.

Vertices are processed in the certified ordering.  Each step picks a fresh
base colour for the vertex whose residues avoid its processed neighbours and
everything its incident edges can still become, then reaches a target weighted
degree by shifting incident edges on a two-unit lattice: the modulus for
edges touching big-class vertices, the step for the rest.  Shifting a
backward edge is paid for by the opposite shift on its already-processed
endpoint, which keeps that endpoint's fixed sum and stays inside its
four-colour envelope, so nothing settled is ever disturbed.

Below the asymptotic regime the option count can fall short; the step then
retries with the vertex base colour lifted by whole multiples of the modulus
(a "fallback"), which preserves correctness but may exceed the nominal
palette bound.  Fallbacks are counted and reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .base_colouring import base_total_colouring
from .colouring import TotalColouring
from .graphs import all_r_neighbourhoods, degree_stats, edge_key
from .ordering import resample_until_valid
from .palette import compute_params, shifted_set


@dataclass
class StepRecord:
    vertex: int
    base_colour: int                # vertex colour set at this step
    target_sum: int
    edge_deltas: list               # [((u, v), delta), ...], nonzero only
    compensations: list             # [(vertex, delta), ...]
    admissible_count: int
    lattice_size: int
    backward_r_count: int
    fallback: bool = False


@dataclass
class RunTrace:
    steps: list = field(default_factory=list)
    fallback_count: int = 0
    invariant_violations: list = field(default_factory=list)
    base_vertex_colours: dict = field(default_factory=dict)
    base_edge_colours: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)


class RunError(RuntimeError):
    """Internal invariant breach during a recolouring run."""


def _envelope(anchor, step, modulus):
    """The four admitted colours for a processed vertex."""
    return (anchor, anchor + step, anchor + modulus, anchor + modulus + step)


class _Run:
    def __init__(self, g, radius, params, cert, check_invariants=False,
                 strict_distance_exclusion=False):
        self.g = g
        self.radius = radius
        self.params = params
        self.cert = cert
        self.check_invariants = check_invariants
        self.strict = strict_distance_exclusion
        self.stats = degree_stats(g) if g.max_degree >= 1 else None
        self.nbrs_r = all_r_neighbourhoods(g, radius)
        self.pos = {v: i for i, v in enumerate(cert.ordering)}

        self.colouring = (base_total_colouring(g, params) if g.m
                          else TotalColouring({v: 1 for v in g.vertices()}, {}, params))
        self.base_edge = dict(self.colouring.edge_colours)  # palette anchor per edge
        self.alterations = {key: 0 for key in self.base_edge}
        self.anchor = {}
        self.target = {}
        self.processed = set()
        self.trace = RunTrace(
            base_vertex_colours=dict(self.colouring.vertex_colours),
            base_edge_colours=dict(self.colouring.edge_colours))

    # -- admissibility -------------------------------------------------

    def _edge_reachable_residues(self, v, u):
        """Residues the edge (v, u) can still take, seen while processing v."""
        step, modulus = self.params.step, self.params.modulus
        rho = self.colouring.edge(v, u) % modulus
        if not self.stats.is_big(v):
            # conservative: the whole four-shift class of the current colour
            return {(rho - step) % modulus, rho, (rho + step) % modulus,
                    (rho + 2 * step) % modulus}
        if u not in self.processed:
            return {rho, (rho + step) % modulus}
        if self.stats.is_big(u):
            return {rho}
        delta = self._backward_edge_delta(u)
        return {rho, (rho + delta) % modulus}

    def _backward_edge_delta(self, u):
        """The unique nonzero shift allowed on a backward edge to u.

        Determined by where u's current colour sits in its envelope: the
        edge shift is compensated by the opposite shift on u's colour, which
        must stay inside the envelope.
        """
        step, modulus = self.params.step, self.params.modulus
        a = self.anchor[u]
        cu = self.colouring.vertex_colours[u]
        unit = modulus if self.stats.is_big(u) else step
        if unit == modulus:
            return -modulus if cu in (a, a + step) else modulus
        return -step if cu in (a, a + modulus) else step

    def _forbidden_residues(self, v, relax=False):
        step, modulus = self.params.step, self.params.modulus
        forbidden = set()
        if self.strict and not relax:
            opponents = [u for u in self.nbrs_r[v] if u in self.processed]
        else:
            opponents = [u for u in self.g.adjacency[v] if u in self.processed]
        for u in opponents:
            ru = self.anchor[u] % modulus
            forbidden.update(((ru - step) % modulus, ru, (ru + step) % modulus))
        for u in self.g.adjacency[v]:
            for rho in self._edge_reachable_residues(v, u):
                forbidden.add(rho)
                forbidden.add((rho - step) % modulus)
        return forbidden

    # -- lattice -------------------------------------------------------

    def _lattice_groups(self, v):
        """Incident edges grouped by (unit, sign) of their admitted shift."""
        step, modulus = self.params.step, self.params.modulus
        groups = {(modulus, 1): [], (modulus, -1): [], (step, 1): [], (step, -1): []}
        for u in sorted(self.g.adjacency[v]):
            key = edge_key(v, u)
            if u not in self.processed:
                if not self.stats.is_big(v) and self.stats.is_big(u):
                    groups[(modulus, 1)].append((key, u, modulus))
                else:
                    groups[(step, 1)].append((key, u, step))
            else:
                delta = self._backward_edge_delta(u)
                unit = abs(delta)
                sign = 1 if delta > 0 else -1
                groups[(unit, sign)].append((key, u, delta))
        return groups

    # -- one step ------------------------------------------------------

    def process_vertex(self, v):
        g, params = self.g, self.params
        step, modulus = params.step, params.modulus

        if g.degree(v) == 0:
            self.colouring.vertex_colours[v] = 1
            self.anchor[v] = 1
            self.target[v] = 1
            self.processed.add(v)
            rec = StepRecord(v, 1, 1, [], [], 0, 0, 0)
            self.trace.steps.append(rec)
            return rec

        forbidden = self._forbidden_residues(v)
        fallback = False
        if len(forbidden) >= modulus:
            # Only reachable with the strict distance-exclusion flag; relax
            # to adjacent-only exclusions, which properness requires.
            forbidden = self._forbidden_residues(v, relax=True)
            fallback = True
            self.trace.notes.append(f"vertex {v}: strict exclusion relaxed")

        groups = self._lattice_groups(v)
        big_pos = len(groups[(modulus, 1)])
        big_neg = len(groups[(modulus, -1)])
        small_pos = len(groups[(step, 1)])
        small_neg = len(groups[(step, -1)])
        offsets = sorted(
            ((abs(i) + abs(j), i * modulus + j * step, i, j)
             for i in range(-big_neg, big_pos + 1)
             for j in range(-small_neg, small_pos + 1)))
        edge_sum = sum(self.colouring.edge(v, u) for u in g.adjacency[v])
        taken = {self.target[u] for u in self.nbrs_r[v] if u in self.processed}
        admissible_count = modulus - len(forbidden)

        choice = None
        lift = 0
        while choice is None:
            for base in range(1, modulus + 1):
                if base % modulus in forbidden:
                    continue
                w0 = base + lift + edge_sum
                for _, _, i, j in offsets:
                    cand = w0 + i * modulus + j * step
                    if cand not in taken:
                        choice = (base + lift, cand, i, j)
                        break
                if choice is not None:
                    break
            if choice is None:
                lift += modulus
                fallback = True
        if lift:
            fallback = True

        base_colour, target, need_big, need_small = choice
        edge_deltas = []
        compensations = []
        for count, pos_key, neg_key in (
                (need_big, (modulus, 1), (modulus, -1)),
                (need_small, (step, 1), (step, -1))):
            chosen = (groups[pos_key][:count] if count >= 0
                      else groups[neg_key][:-count])
            for key, u, delta in chosen:
                self.colouring.edge_colours[key] += delta
                self.alterations[key] += 1
                edge_deltas.append((key, delta))
                if u in self.processed:
                    self.colouring.vertex_colours[u] -= delta
                    compensations.append((u, -delta))

        self.colouring.vertex_colours[v] = base_colour
        self.anchor[v] = base_colour
        self.target[v] = target
        self.processed.add(v)

        rec = StepRecord(v, base_colour, target, edge_deltas, compensations,
                         admissible_count, len(offsets), len(taken), fallback)
        self.trace.steps.append(rec)
        if fallback:
            self.trace.fallback_count += 1
        if self.check_invariants:
            self._check_state(v)
        return rec

    # -- invariants ----------------------------------------------------

    def _check_state(self, just_processed):
        bad = self.trace.invariant_violations.append
        step, modulus = self.params.step, self.params.modulus
        col = self.colouring
        for u in self.processed:
            if col.weighted_degree(self.g, u) != self.target[u]:
                bad(f"after {just_processed}: sum of {u} drifted from its target")
            cu = col.vertex_colours[u]
            if cu not in _envelope(self.anchor[u], step, modulus):
                bad(f"after {just_processed}: colour of {u} left its envelope")
            if self.anchor[u] > modulus and not any(
                    s.vertex == u and s.fallback for s in self.trace.steps):
                bad(f"after {just_processed}: lifted anchor at {u} without fallback")
        for key, base in self.base_edge.items():
            ce = col.edge_colours[key]
            if ce % modulus not in {x % modulus for x in shifted_set(base, step)}:
                bad(f"after {just_processed}: edge {key} left its residue class")
            if not (1 <= ce <= self.params.palette_max):
                bad(f"after {just_processed}: edge {key} colour {ce} out of range")
            if self.alterations[key] > 2:
                bad(f"after {just_processed}: edge {key} altered more than twice")
        # properness modulo the modulus, ignoring unprocessed vertices
        for (a, b) in self.g.edges:
            ce = col.edge_colours[edge_key(a, b)] % modulus
            for end in (a, b):
                if end in self.processed and col.vertex_colours[end] % modulus == ce:
                    bad(f"after {just_processed}: edge {(a, b)} matches vertex {end}")
            if (a in self.processed and b in self.processed
                    and col.vertex_colours[a] % modulus == col.vertex_colours[b] % modulus):
                bad(f"after {just_processed}: adjacent vertices {a},{b} share a residue")
        for v in self.g.vertices():
            incident = [col.edge_colours[edge_key(v, u)] % modulus
                        for u in sorted(self.g.adjacency[v])]
            if len(set(incident)) != len(incident):
                bad(f"after {just_processed}: adjacent edges at {v} share a residue")


def run(g, radius, seed, max_rounds=None, check_invariants=False,
        strict_distance_exclusion=False):
    """Full pipeline: parameters, base colouring, ordering, recolouring.

    Returns (TotalColouring, RunTrace, OrderingCertificate).  Radius 1 is
    accepted; the palette arithmetic then uses radius 2 (noted in the trace).
    Identical (graph, radius, seed) inputs give identical outputs.
    """
    if radius < 1:
        raise ValueError("radius must be >= 1")
    from .ordering import DEFAULT_MAX_ROUNDS
    if max_rounds is None:
        max_rounds = DEFAULT_MAX_ROUNDS

    eff_degree = max(g.max_degree, 2)
    eff_radius = max(radius, 2)
    params = compute_params(eff_degree, eff_radius)
    cert = resample_until_valid(g, eff_radius, seed, max_rounds)

    runner = _Run(g, radius, params, cert, check_invariants,
                  strict_distance_exclusion)
    if radius != eff_radius:
        runner.trace.notes.append(
            f"radius {radius} run with radius-{eff_radius} palette arithmetic")
    if g.max_degree != eff_degree:
        runner.trace.notes.append(
            f"max degree {g.max_degree} run with degree-{eff_degree} palette arithmetic")
    if not cert.valid:
        runner.trace.notes.append("ordering certificate not fully valid")

    for v in cert.ordering:
        runner.process_vertex(v)
    return runner.colouring, runner.trace, cert


def replay(g, trace):
    """Rebuild the final colouring from the base colouring and step deltas."""
    vcol = dict(trace.base_vertex_colours)
    ecol = dict(trace.base_edge_colours)
    for rec in trace.steps:
        for key, delta in rec.edge_deltas:
            ecol[key] += delta
        for u, delta in rec.compensations:
            vcol[u] += delta
        vcol[rec.vertex] = rec.base_colour
    return TotalColouring(vcol, ecol)
