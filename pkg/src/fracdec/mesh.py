"""Simplicial complexes, cochains, and the signed coboundary operator.

Simplices are stored with strictly increasing vertex indices; the
orientation of every simplex is the one implied by the global vertex
ordering.  Simplex tables are sorted lexicographically so that row and
column indices of the operators are reproducible across runs and file
round-trips.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from .errors import ConfigError, FormatError, GeometryError, MeshError

_EDGE_LENGTH_RTOL = 1e-12


def _faces(simplex):
    """All proper faces of a vertex tuple, as sorted tuples."""
    out = []
    for k in range(1, len(simplex)):
        out.extend(itertools.combinations(simplex, k))
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    """An oriented simplicial complex with a local metric on its edges.

    Attributes:
        dimension: top dimension N of the complex.
        simplices: map p -> (n_p, p+1) integer array of p-simplices,
            each row strictly increasing, rows sorted lexicographically.
        vertex_coords: optional (n_0, d) embedding of the vertices.
        edge_lengths: positive edge lengths aligned with simplices[1].
        lengths_overridden: True when edge_lengths were supplied
            explicitly instead of being derived from the embedding.
    """

    dimension: int
    simplices: dict[int, np.ndarray]
    vertex_coords: np.ndarray | None = None
    edge_lengths: np.ndarray = field(default=None)  # type: ignore[assignment]
    lengths_overridden: bool = False

    def __post_init__(self):
        if self.dimension < 1:
            raise MeshError("complex must contain at least edges (dimension >= 1)")
        for p in range(self.dimension + 1):
            if p not in self.simplices:
                raise MeshError(f"missing simplex table for degree {p}")
        if self.edge_lengths is None:
            if self.vertex_coords is None:
                raise MeshError("edge lengths required when there is no embedding")
            lengths = self._euclidean_edge_lengths()
            object.__setattr__(self, "edge_lengths", lengths)
        else:
            object.__setattr__(
                self, "edge_lengths", np.asarray(self.edge_lengths, dtype=float)
            )
        self._validate()

    def _euclidean_edge_lengths(self):
        edges = self.simplices[1]
        diff = self.vertex_coords[edges[:, 1]] - self.vertex_coords[edges[:, 0]]
        return np.linalg.norm(diff, axis=1)

    def _validate(self):
        known = {tuple(row) for p in self.simplices.values() for row in p}
        for p, table in self.simplices.items():
            if table.ndim != 2 or table.shape[1] != p + 1:
                raise MeshError(f"degree-{p} table must have {p + 1} columns")
            if p > 0 and not np.all(table[:, :-1] < table[:, 1:]):
                raise MeshError("simplex vertex indices must be strictly increasing")
            for row in table:
                for face in _faces(tuple(row)):
                    if face not in known:
                        raise MeshError(f"face {face} of {tuple(row)} is missing")
        if len(self.edge_lengths) != len(self.simplices[1]):
            raise MeshError("edge_lengths must align with the edge table")
        if not np.all(np.isfinite(self.edge_lengths)) or np.any(self.edge_lengths <= 0):
            raise GeometryError("edge lengths must be strictly positive and finite")
        if self.vertex_coords is not None and not self.lengths_overridden:
            euclid = self._euclidean_edge_lengths()
            if np.any(np.abs(self.edge_lengths - euclid) > _EDGE_LENGTH_RTOL * np.maximum(euclid, 1.0)):
                raise MeshError("edge lengths disagree with the embedding")

    def n_simplices(self, p):
        return len(self.simplices[p])

    def simplex_index(self, p):
        """Map from vertex tuple to row index in the degree-p table."""
        return {tuple(row): i for i, row in enumerate(self.simplices[p])}

    @classmethod
    def from_simplices(cls, dimension, top_simplices, vertex_coords=None,
                       edge_lengths=None, n_vertices=None):
        """Build a complex from its top-dimensional simplices.

        Lower-degree faces are induced automatically so the closure
        property holds by construction.  ``edge_lengths``, if given, is a
        map from increasing vertex pairs to lengths (overriding any
        embedding).
        """
        tops = [tuple(sorted(s)) for s in top_simplices]
        if any(len(set(t)) != dimension + 1 for t in tops):
            raise MeshError("top simplex with repeated vertices")
        tables = {dimension: sorted(set(tops))}
        for p in range(dimension - 1, 0, -1):
            faces = {f for s in tables[p + 1] for f in itertools.combinations(s, p + 1)}
            tables[p] = sorted(faces)
        verts = {v for s in tops for v in s}
        if vertex_coords is not None:
            vertex_coords = np.asarray(vertex_coords, dtype=float)
            n_vertices = len(vertex_coords)
        if n_vertices is None:
            n_vertices = max(verts) + 1
        tables[0] = [(v,) for v in range(n_vertices)]
        simplices = {p: np.asarray(t, dtype=int).reshape(len(t), p + 1)
                     for p, t in tables.items()}
        lengths = None
        overridden = False
        if edge_lengths is not None:
            lengths = np.array([edge_lengths[tuple(e)] for e in simplices[1]], dtype=float)
            overridden = vertex_coords is not None
        return cls(dimension, simplices, vertex_coords, lengths, overridden)


@dataclass(frozen=True)
class Cochain:
    """A discrete p-form: one real value per p-simplex."""

    degree: int
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float))
        if self.values.ndim != 1:
            raise ConfigError("cochain values must be a flat vector")
        if not np.all(np.isfinite(self.values)):
            raise ConfigError("cochain values must be finite")


def build_coboundary(complex_, p):
    """Signed incidence matrix D_p sending p-cochains to (p+1)-cochains.

    Row r, for the (p+1)-simplex [v_0..v_{p+1}], carries (-1)^k on the
    face omitting v_k; every entry is 0 or +-1 and each row has exactly
    p+2 nonzeros.
    """
    if not 0 <= p < complex_.dimension:
        raise ConfigError(f"degree {p} out of range for dimension {complex_.dimension}")
    face_index = complex_.simplex_index(p)
    rows, cols, vals = [], [], []
    for r, simplex in enumerate(complex_.simplices[p + 1]):
        s = tuple(simplex)
        for k in range(p + 2):
            face = s[:k] + s[k + 1:]
            rows.append(r)
            cols.append(face_index[face])
            vals.append((-1) ** k)
    shape = (complex_.n_simplices(p + 1), complex_.n_simplices(p))
    return sp.csr_matrix((vals, (rows, cols)), shape=shape, dtype=np.int64)


def apply_coboundary(matrix, cochain):
    """Matrix-vector product lifting a cochain one degree."""
    if matrix.shape[1] != len(cochain.values):
        raise ConfigError(
            f"cochain length {len(cochain.values)} does not match {matrix.shape[1]} columns"
        )
    return Cochain(cochain.degree + 1, matrix @ cochain.values)


def generate_interval_mesh(a, b, n_edges):
    """Uniform 1D mesh: n_edges+1 equally spaced vertices on [a, b]."""
    if not a < b:
        raise ConfigError(f"need a < b, got [{a}, {b}]")
    if n_edges < 1:
        raise ConfigError("n_edges must be >= 1")
    coords = np.linspace(a, b, n_edges + 1).reshape(-1, 1)
    edges = [(i, i + 1) for i in range(n_edges)]
    return SimplicialComplex.from_simplices(1, edges, vertex_coords=coords)


def generate_unit_square_mesh(n):
    """Triangulated [0,1]^2 with an n-by-n grid of cells.

    Every cell is split along its lower-left-to-upper-right diagonal,
    giving (n+1)^2 vertices and 2 n^2 triangles.
    """
    if n < 1:
        raise ConfigError("n must be >= 1")
    coords = np.array([[i / n, j / n] for j in range(n + 1) for i in range(n + 1)])
    vid = lambda i, j: j * (n + 1) + i
    tris = []
    for j in range(n):
        for i in range(n):
            ll, lr, ul, ur = vid(i, j), vid(i + 1, j), vid(i, j + 1), vid(i + 1, j + 1)
            tris.append((ll, lr, ur))
            tris.append((ll, ur, ul))
    return SimplicialComplex.from_simplices(2, tris, vertex_coords=coords)


def load_off(path):
    """Read an ASCII OFF triangle mesh into a complex.

    Faces must be triangles; lower-degree simplices are induced.
    """
    with open(path) as fh:
        lines = [(i + 1, ln.strip()) for i, ln in enumerate(fh)]
    content = [(no, ln) for no, ln in lines if ln and not ln.startswith("#")]
    if not content or content[0][1] != "OFF":
        raise FormatError("expected 'OFF' header", line=content[0][0] if content else 1)
    try:
        nv, _, nf = (int(tok) for tok in content[1][1].split()[:3])
    except (ValueError, IndexError):
        raise FormatError("expected 'V E F' counts", line=content[1][0]) from None
    body = content[2:]
    if len(body) < nv + nf:
        raise FormatError(f"expected {nv} vertex and {nf} face lines", line=content[1][0])
    coords = []
    for no, ln in body[:nv]:
        try:
            coords.append([float(tok) for tok in ln.split()[:3]])
        except ValueError:
            raise FormatError("bad vertex coordinates", line=no) from None
    faces = []
    for no, ln in body[nv:nv + nf]:
        toks = ln.split()
        try:
            cnt = int(toks[0])
            idx = [int(t) for t in toks[1:1 + cnt]]
        except (ValueError, IndexError):
            raise FormatError("bad face line", line=no) from None
        if cnt != 3:
            raise MeshError(f"unsupported {cnt}-gon face at line {no}: only triangles")
        faces.append(idx)
    coords = np.asarray(coords, dtype=float)
    if coords.shape[1] == 3 and np.all(coords[:, 2] == 0.0):
        coords = coords[:, :2]
    return SimplicialComplex.from_simplices(2, faces, vertex_coords=coords)


def save_off(complex_, path):
    """Write a 2D embedded complex as ASCII OFF (z padded with 0)."""
    if complex_.dimension != 2 or complex_.vertex_coords is None:
        raise MeshError("OFF output requires an embedded triangle mesh")
    coords = complex_.vertex_coords
    if coords.shape[1] == 2:
        coords = np.hstack([coords, np.zeros((len(coords), 1))])
    tris = complex_.simplices[2]
    with open(path, "w") as fh:
        fh.write("OFF\n")
        fh.write(f"{len(coords)} {complex_.n_simplices(1)} {len(tris)}\n")
        for xyz in coords:
            fh.write(" ".join(repr(float(c)) for c in xyz) + "\n")
        for t in tris:
            fh.write("3 " + " ".join(str(int(v)) for v in t) + "\n")


def save_json(complex_, path):
    """Write a complex in the JSON mesh format."""
    doc = {
        "dimension": complex_.dimension,
        "vertices": None if complex_.vertex_coords is None
        else complex_.vertex_coords.tolist(),
        "simplices": {
            str(p): complex_.simplices[p].tolist()
            for p in range(1, complex_.dimension + 1)
        },
    }
    if complex_.lengths_overridden or complex_.vertex_coords is None:
        doc["edge_lengths"] = {
            ",".join(map(str, e)): float(l)
            for e, l in zip(complex_.simplices[1].tolist(), complex_.edge_lengths)
        }
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_json(path):
    """Read a complex from the JSON mesh format."""
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(str(exc), line=exc.lineno) from None
    try:
        dim = int(doc["dimension"])
        tops = doc["simplices"][str(dim)]
    except (KeyError, TypeError, ValueError):
        raise FormatError("missing 'dimension' or top-simplex table") from None
    coords = doc.get("vertices")
    lengths = None
    if doc.get("edge_lengths"):
        lengths = {tuple(int(t) for t in k.split(",")): float(v)
                   for k, v in doc["edge_lengths"].items()}
    n_vertices = len(coords) if coords is not None else None
    return SimplicialComplex.from_simplices(
        dim, tops, vertex_coords=coords, edge_lengths=lengths, n_vertices=n_vertices
    )
