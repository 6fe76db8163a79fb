"""Distances between simplices under the local metric.

Vertex-to-vertex distances come from shortest edge paths (Dijkstra from
each source); a plain Floyd-Warshall implementation is kept as an
independent cross-check.  Simplex-to-simplex distances extend the
vertex distances by the barycenter-to-boundary offsets l(sigma), or use
Euclidean barycenter distances when an embedding is available.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import dijkstra

from .errors import ConfigError, ConnectivityError, GeometryError, MeshError

DISTANCE_MODES = ("geodesic", "euclidean")


@dataclass(frozen=True)
class DistanceTable:
    """Dense symmetric inter-simplex distances for one degree."""

    p: int
    mode: str
    entries: np.ndarray


def _edge_graph(complex_):
    edges = complex_.simplices[1]
    n = complex_.n_simplices(0)
    w = complex_.edge_lengths
    return sp.csr_matrix((w, (edges[:, 0], edges[:, 1])), shape=(n, n))


def all_pairs_vertex_distance(complex_):
    """Shortest-path distance d_m between every pair of vertices."""
    graph = _edge_graph(complex_)
    dist = dijkstra(graph, directed=False)
    if np.any(np.isinf(dist)):
        i, j = np.argwhere(np.isinf(dist))[0]
        raise ConnectivityError(f"vertex {j} is unreachable from vertex {i}")
    # Dijkstra per source is symmetric up to roundoff; assemble exactly.
    dist = np.minimum(dist, dist.T)
    return DistanceTable(p=0, mode="geodesic", entries=dist)


def floyd_warshall_vertex_distance(complex_):
    """Independent O(V^3) all-pairs shortest path, for cross-checking."""
    graph = _edge_graph(complex_)
    n = graph.shape[0]
    dist = np.full((n, n), np.inf)
    np.fill_diagonal(dist, 0.0)
    coo = graph.tocoo()
    for i, j, w in zip(coo.row, coo.col, coo.data):
        dist[i, j] = min(dist[i, j], w)
        dist[j, i] = min(dist[j, i], w)
    for k in range(n):
        np.minimum(dist, dist[:, k, None] + dist[None, k, :], out=dist)
    if np.any(np.isinf(dist)):
        i, j = np.argwhere(np.isinf(dist))[0]
        raise ConnectivityError(f"vertex {j} is unreachable from vertex {i}")
    return DistanceTable(p=0, mode="geodesic", entries=np.minimum(dist, dist.T))


def barycenters(complex_, p):
    """Vertex-coordinate average of every p-simplex."""
    if complex_.vertex_coords is None:
        raise MeshError("barycenters require an embedded complex")
    return complex_.vertex_coords[complex_.simplices[p]].mean(axis=1)


def boundary_offsets(complex_, p):
    """Barycenter-to-boundary length l(sigma) for every p-simplex.

    l is 0 for vertices and half the edge length for edges.  For a
    triangle the boundary distance depends on direction, so we use the
    average of the three barycenter-to-edge-midpoint distances.
    """
    if p == 0:
        return np.zeros(complex_.n_simplices(0))
    if p == 1:
        return complex_.edge_lengths / 2.0
    if p == 2:
        if complex_.vertex_coords is None:
            raise MeshError("triangle boundary offsets require an embedding")
        tris = complex_.vertex_coords[complex_.simplices[2]]
        bary = tris.mean(axis=1)
        mids = np.stack([
            (tris[:, 0] + tris[:, 1]) / 2,
            (tris[:, 0] + tris[:, 2]) / 2,
            (tris[:, 1] + tris[:, 2]) / 2,
        ], axis=1)
        return np.linalg.norm(mids - bary[:, None, :], axis=2).mean(axis=1)
    raise ConfigError(f"boundary offsets not defined for degree {p}")


def simplex_distance(complex_, p, mode="geodesic", vertex_table=None):
    """Dense symmetric distance table between the p-simplices.

    geodesic: min over vertex pairs of d_m(u, v) + l(sigma) + l(eta),
    zero on the diagonal.  euclidean: distance between barycenters.
    """
    if mode not in DISTANCE_MODES:
        raise ConfigError(f"unknown distance mode {mode!r}")
    if mode == "euclidean":
        b = barycenters(complex_, p)
        diff = b[:, None, :] - b[None, :, :]
        entries = np.sqrt((diff ** 2).sum(axis=-1))
        entries = np.maximum(entries, entries.T)
        return DistanceTable(p=p, mode=mode, entries=entries)

    if vertex_table is None:
        vertex_table = all_pairs_vertex_distance(complex_)
    dm = vertex_table.entries
    simp = complex_.simplices[p]
    offs = boundary_offsets(complex_, p)
    n = len(simp)
    min_pair = np.full((n, n), np.inf)
    for i in range(p + 1):
        for j in range(p + 1):
            np.minimum(min_pair, dm[np.ix_(simp[:, i], simp[:, j])], out=min_pair)
    entries = min_pair + offs[:, None] + offs[None, :]
    entries = np.minimum(entries, entries.T)
    np.fill_diagonal(entries, 0.0)
    if np.any(~np.isfinite(entries)):
        raise ConnectivityError("disconnected complex: infinite simplex distance")
    if np.any(entries < 0):
        raise GeometryError("negative simplex distance")
    return DistanceTable(p=p, mode=mode, entries=entries)


def distance_table_to_csv(table, path):
    """Debug dump of a distance table (row/col = simplex indices)."""
    np.savetxt(path, table.entries, delimiter=",")
