"""Euler tours over the transition graph and their compressed cycle strings.

A closed tour that uses every edge exactly once is exactly an overlap cycle:
writing, for each word on the tour, only the k-s symbols that extend past the
shared overlap produces the cyclic string form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import InstanceParams, Vertex, Word, is_valid_vertex, min_vertex
from .graph import Edge, TransitionGraph, successors


@dataclass(frozen=True)
class EulerTour:
    params: InstanceParams
    edges: tuple[Edge, ...]
    start: Vertex


@dataclass(frozen=True)
class OverlapCycle:
    symbols: tuple[int, ...]
    params: InstanceParams
    object_count: int


class TourIncomplete(RuntimeError):
    """The traversal ran out of edges before covering the whole graph.

    This means the graph is disconnected.  The closed partial tour over the
    start vertex's component is attached for inspection.
    """

    def __init__(self, used: int, total: int, partial: EulerTour):
        super().__init__(f"tour covered {used} of {total} edges; graph is disconnected")
        self.used = used
        self.total = total
        self.partial = partial


def euler_tour(g: TransitionGraph, start: Sequence[int] | None = None) -> EulerTour:
    """Closed tour using every edge exactly once, found by iterative traversal.

    Successors are consumed in lexicographic order through per-vertex cursors,
    so the result is deterministic for a fixed start vertex.  An explicit
    stack replaces recursion; memory is O(vertices) plus the tour itself.
    """
    params = g.params
    if start is None:
        start = min_vertex(params)
    start = tuple(start)
    if not is_valid_vertex(start, params):
        raise ValueError(f"{start} is not a vertex of instance ({params.describe()})")

    cursors: dict[Vertex, Iterator[Edge]] = {}
    vertex_stack: list[Vertex] = [start]
    edge_stack: list[Edge] = []
    tour: list[Edge] = []
    while vertex_stack:
        v = vertex_stack[-1]
        cursor = cursors.get(v)
        if cursor is None:
            cursor = successors(v, g)
            cursors[v] = cursor
        edge = next(cursor, None)
        if edge is None:
            vertex_stack.pop()
            if edge_stack:
                tour.append(edge_stack.pop())
        else:
            vertex_stack.append(edge.target)
            edge_stack.append(edge)
    tour.reverse()
    if len(tour) != g.edge_count:
        raise TourIncomplete(len(tour), g.edge_count, EulerTour(params, tuple(tour), start))
    return EulerTour(params, tuple(tour), start)


def tour_to_cycle(tour: EulerTour) -> OverlapCycle:
    """Compress a closed tour into its cyclic symbol string.

    Each edge contributes the trailing k-s symbols of its word; cyclically the
    start vertex's symbols (the trailing s symbols of the final edge) precede
    the first contributed block.  The linear form is aligned so that decoding
    length-k windows at offsets 0, k-s, 2(k-s), ... returns the tour's words
    in order.
    """
    params = tour.params
    s = params.s
    tail: list[int] = []
    for edge in tour.edges:
        tail.extend(edge.word[s:])
    if not tail:
        return OverlapCycle((), params, 0)
    # rotate right by s to align window offset 0 with the first word
    symbols = tuple(tail[-s:] + tail[:-s])
    return OverlapCycle(symbols, params, len(tour.edges))


def decode_symbols(symbols: Sequence[int], k: int, s: int) -> Iterator[Word]:
    """Read length-k windows at stride k-s from a cyclic symbol string."""
    stride = k - s
    length = len(symbols)
    if length % stride != 0:
        raise ValueError(f"cycle length {length} is not divisible by k-s = {stride}")
    for i in range(length // stride):
        base = i * stride
        yield tuple(symbols[(base + j) % length] for j in range(k))


def decode_cycle(cycle: OverlapCycle) -> Iterator[Word]:
    """Yield the cycle's objects in order; inverse of :func:`tour_to_cycle`."""
    yield from decode_symbols(cycle.symbols, cycle.params.k, cycle.params.s)
