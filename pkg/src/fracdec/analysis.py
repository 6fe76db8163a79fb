"""Reconstruction of 1-cochains and the error/convergence harness.

1D cochains are compared to reference functions as piecewise-constant
functions.  Two step conventions are supported: "barycenter" steps run
from one edge barycenter to the next (the plotting convention, the last
step extended to the right endpoint of the domain), while "edge" steps
cover each edge exactly.  The edge convention is what reproduces the
reference L2 error table; see the convergence study.

2D cochains are lifted to piecewise-affine vector fields through the
Whitney map and evaluated at triangle barycenters.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np
from scipy.integrate import quad

from . import mesh, metric, operator
from .errors import AccuracyError, ConfigError, GeometryError, MeshError

_L2_QUAD_TOL = 1e-10


@dataclass(frozen=True)
class StairsFunction:
    """Piecewise-constant function on consecutive intervals."""

    breakpoints: np.ndarray   # length n+1, strictly increasing
    values: np.ndarray        # length n

    def __post_init__(self):
        object.__setattr__(self, "breakpoints", np.asarray(self.breakpoints, dtype=float))
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float))
        if len(self.breakpoints) != len(self.values) + 1:
            raise ConfigError("need one more breakpoint than step values")
        if not np.all(np.diff(self.breakpoints) > 0):
            raise MeshError("breakpoints must be strictly increasing")

    def __call__(self, x):
        idx = np.clip(np.searchsorted(self.breakpoints, x, side="right") - 1,
                      0, len(self.values) - 1)
        return self.values[idx]


def _sorted_edge_geometry(complex_):
    if complex_.dimension != 1 or complex_.vertex_coords is None:
        raise MeshError("stairs need an embedded 1D complex")
    x = complex_.vertex_coords[:, 0]
    edges = complex_.simplices[1]
    bary = x[edges].mean(axis=1)
    order = np.argsort(bary)
    lo = np.minimum(x[edges[:, 0]], x[edges[:, 1]])[order]
    hi = np.maximum(x[edges[:, 0]], x[edges[:, 1]])[order]
    if np.any(lo[1:] < hi[:-1] - 1e-12):
        raise MeshError("edges overlap; cannot form a stairs function")
    return order, bary[order], lo, hi


def to_stairs(complex_, cochain, support="barycenter"):
    """1-cochain as a stairs function over a 1D embedded complex.

    support="barycenter": step i runs from barycenter i to barycenter
    i+1, with the final step extended to the right end of the domain.
    support="edge": step i covers edge i exactly.
    """
    if cochain.degree != 1:
        raise ConfigError("stairs are defined for 1-cochains")
    order, bary, lo, hi = _sorted_edge_geometry(complex_)
    vals = cochain.values[order]
    if support == "barycenter":
        bps = np.append(bary, hi[-1])
    elif support == "edge":
        bps = np.append(lo, hi[-1])
    else:
        raise ConfigError(f"unknown stairs support {support!r}")
    return StairsFunction(bps, vals)


def l2_error_stairs(stairs, reference):
    """sqrt of the integral of (stairs - reference)^2 over the support.

    Each step is integrated by adaptive quadrature at absolute
    tolerance 1e-10.
    """
    total = 0.0
    for i, v in enumerate(stairs.values):
        lo, hi = stairs.breakpoints[i], stairs.breakpoints[i + 1]
        val, err = quad(lambda t: (v - reference(t)) ** 2, lo, hi,
                        epsabs=_L2_QUAD_TOL, limit=200)
        # quad's error estimate is conservative near sqrt-type endpoints;
        # anything below 1e-7 per step is far inside the comparison needs.
        if err > 1e-7 + 1e-12 * abs(val):
            raise AccuracyError(f"step quadrature error {err:.2e} too large")
        total += val
    return float(np.sqrt(total))


def linf_error(predicted, reference=None):
    """Maximum absolute deviation, over pairs or two aligned vectors."""
    if reference is None:
        pairs = list(predicted)
        if not pairs:
            raise ConfigError("need at least one sample pair")
        predicted = np.array([p for p, _ in pairs], dtype=float)
        reference = np.array([r for _, r in pairs], dtype=float)
    predicted = np.asarray(predicted, dtype=float)
    reference = np.asarray(reference, dtype=float)
    if predicted.shape != reference.shape or predicted.size == 0:
        raise ConfigError("predicted/reference samples must align and be nonempty")
    return float(np.max(np.abs(predicted - reference)))


@dataclass(frozen=True)
class WhitneyField:
    """Piecewise-affine vector field from a 1-cochain on a triangle mesh.

    Per triangle the field is sum_e c_e (lambda_i grad lambda_j -
    lambda_j grad lambda_i) over its three edges (i < j in global
    vertex order); its tangential integral along any edge recovers the
    cochain value on that edge.
    """

    triangles: np.ndarray      # (T, 3) vertex indices
    corners: np.ndarray        # (T, 3, 2) vertex coordinates
    gradients: np.ndarray      # (T, 3, 2) barycentric gradients
    edge_values: np.ndarray    # (T, 3) cochain values on edges (01, 02, 12)

    def evaluate(self, tri_index, point):
        """Field value at a point inside triangle tri_index."""
        corners = self.corners[tri_index]
        grads = self.gradients[tri_index]
        # Barycentric coordinates of the point.
        mat = np.column_stack([corners[1] - corners[0], corners[2] - corners[0]])
        ab = np.linalg.solve(mat, np.asarray(point, dtype=float) - corners[0])
        lam = np.array([1.0 - ab.sum(), ab[0], ab[1]])
        vec = np.zeros(2)
        for k, (i, j) in enumerate(((0, 1), (0, 2), (1, 2))):
            vec += self.edge_values[tri_index, k] * (lam[i] * grads[j] - lam[j] * grads[i])
        return vec


def whitney_reconstruct(complex_, cochain):
    """Build the Whitney interpolant of a 1-cochain on a triangle mesh."""
    if complex_.dimension != 2 or complex_.vertex_coords is None:
        raise MeshError("Whitney reconstruction needs an embedded triangle mesh")
    if cochain.degree != 1:
        raise ConfigError("Whitney reconstruction acts on 1-cochains")
    coords = complex_.vertex_coords
    tris = complex_.simplices[2]
    eidx = complex_.simplex_index(1)
    corners = coords[tris]
    t_mat = np.stack([corners[:, 1] - corners[:, 0],
                      corners[:, 2] - corners[:, 0]], axis=2)
    det = t_mat[:, 0, 0] * t_mat[:, 1, 1] - t_mat[:, 0, 1] * t_mat[:, 1, 0]
    if np.any(np.abs(det) < 1e-14):
        raise GeometryError("degenerate (zero-area) triangle")
    grads = np.empty((len(tris), 3, 2))
    edge_values = np.empty((len(tris), 3))
    for t, tri in enumerate(tris):
        inv = np.linalg.inv(t_mat[t])
        g1, g2 = inv[0], inv[1]          # rows of T^{-1} are grad lambda_1,2
        grads[t] = np.array([-g1 - g2, g1, g2])
        for k, (i, j) in enumerate(((0, 1), (0, 2), (1, 2))):
            edge_values[t, k] = cochain.values[eidx[(tri[i], tri[j])]]
    return WhitneyField(tris.copy(), corners, grads, edge_values)


def eval_at_barycenters(field, complex_):
    """One field vector per triangle, evaluated at the barycenter.

    At the barycenter every barycentric coordinate is 1/3, so the
    evaluation reduces to (1/3) sum_e c_e (grad lambda_j - grad
    lambda_i).
    """
    diff = np.stack([field.gradients[:, 1] - field.gradients[:, 0],
                     field.gradients[:, 2] - field.gradients[:, 0],
                     field.gradients[:, 2] - field.gradients[:, 1]], axis=1)
    return (field.edge_values[:, :, None] * diff).sum(axis=1) / 3.0


def edge_integrals(field, complex_):
    """Tangential line integral of the field along every edge.

    The field is affine on each edge, so the midpoint value times the
    edge vector is exact.  Used to verify the Whitney duality property.
    """
    eidx = complex_.simplex_index(1)
    coords = complex_.vertex_coords
    out = np.zeros(complex_.n_simplices(1))
    seen = np.zeros(complex_.n_simplices(1), dtype=bool)
    for t, tri in enumerate(field.triangles):
        for (i, j) in ((0, 1), (0, 2), (1, 2)):
            e = eidx[(tri[i], tri[j])]
            if seen[e]:
                continue
            a, b = coords[tri[i]], coords[tri[j]]
            mid = (a + b) / 2.0
            out[e] = field.evaluate(t, mid) @ (b - a)
            seen[e] = True
    return out


def relative_l2_per_triangle(predicted, reference, zero_tol=1e-12,
                             normalize="reference"):
    """Per-triangle relative vector error with summary statistics.

    normalize="reference" divides ||pred - ref|| by ||ref||;
    "predicted" divides by ||pred|| instead, which keeps the statistic
    meaningful when the discrete field dominates the analytic one.
    Triangles whose normalizer is (near-)zero are flagged, reported
    separately, and excluded from the summary.
    """
    predicted = np.asarray(predicted, dtype=float)
    reference = np.asarray(reference, dtype=float)
    if predicted.shape != reference.shape:
        raise ConfigError("predicted/reference shapes differ")
    if normalize not in ("reference", "predicted"):
        raise ConfigError(f"unknown normalization {normalize!r}")
    denom = np.linalg.norm(reference if normalize == "reference" else predicted,
                           axis=1)
    err = np.linalg.norm(predicted - reference, axis=1)
    flagged = denom <= zero_tol
    rel = np.where(flagged, np.nan, err / np.where(flagged, 1.0, denom))
    ok = rel[~flagged]
    summary = {
        "min": float(ok.min()) if ok.size else float("nan"),
        "max": float(ok.max()) if ok.size else float("nan"),
        "mean": float(ok.mean()) if ok.size else float("nan"),
        "flagged": int(flagged.sum()),
    }
    return rel, summary


def frac_derivative_1d(n_edges, family, config, domain=(0.0, 1.0)):
    """Fractional 1-cochain of a family's vertex samples on [a, b]."""
    complex_ = mesh.generate_interval_mesh(domain[0], domain[1], n_edges)
    alpha = mesh.Cochain(0, family.sample(complex_.vertex_coords[:, 0]))
    op = operator.build_frac_derivative(complex_, 0, config)
    return complex_, op.apply(alpha)


def convergence_study(family, s, edge_counts, config=None, support="edge",
                      domain=(0.0, 1.0)):
    """Error table (n, error, ratio) for a 1D family.

    Two-sided families use the L2 norm of the piecewise-constant
    comparison; left-sided families use the Linf norm at edge
    barycenters against the left-sided closed form.
    """
    if not edge_counts:
        raise ConfigError("edge_counts must be nonempty")
    if family.dim != 1:
        raise ConfigError("convergence studies are 1D only")
    if family.fixed_s is not None and s != family.fixed_s:
        raise ConfigError(f"family {family.name} has a closed form only at "
                          f"s = {family.fixed_s}")
    if config is None:
        config = operator.FracConfig(s=s)
    elif config.s != s:
        config = replace(config, s=s)
    rows = []
    prev = None
    for n in edge_counts:
        complex_, deriv = frac_derivative_1d(n, family, config, domain)
        if family.side == "left" or config.sidedness == "left_sided":
            bary = metric.barycenters(complex_, 1)[:, 0]
            err = linf_error(deriv.values, family.reference(bary, s))
        else:
            stairs = to_stairs(complex_, deriv, support=support)
            ref = lambda t: float(family.reference(t, s, config.right_sign))
            err = l2_error_stairs(stairs, ref)
        rows.append({"n": int(n), "error": err,
                     "ratio": err / prev if prev is not None else float("nan")})
        prev = err
    return rows


def s_sweep(family, s_values, edge_counts, config=None, domain=(0.0, 1.0)):
    """Linf error against the fractional order, at fixed mesh sizes."""
    if family.dim != 1:
        raise ConfigError("s sweeps are 1D only")
    rows = []
    for n in edge_counts:
        for s in s_values:
            cfg = operator.FracConfig(s=s) if config is None else replace(config, s=s)
            complex_, deriv = frac_derivative_1d(n, family, cfg, domain)
            bary = metric.barycenters(complex_, 1)[:, 0]
            if family.side == "left" or cfg.sidedness == "left_sided":
                ref = family.reference(bary, s)
            else:
                ref = family.reference(bary, s, cfg.right_sign)
            rows.append({"n": int(n), "s": float(s),
                         "linf_error": linf_error(deriv.values, ref)})
    return rows


def field_experiment_2d(n, family, config, normalize="reference"):
    """End-to-end 2D gradient-field experiment on the unit square.

    Samples the family at the vertices, applies the fractional
    derivative, reconstructs through the Whitney map, evaluates at
    triangle barycenters, and compares to the analytic fractional
    gradient.  Returns centers, predicted/reference vectors, the
    per-triangle relative errors and their summary.
    """
    if family.dim != 2:
        raise ConfigError("2D field experiments need a 2D family")
    if family.fixed_s is not None and config.s != family.fixed_s:
        raise ConfigError(f"family {family.name} has a closed form only at "
                          f"s = {family.fixed_s}")
    complex_ = mesh.generate_unit_square_mesh(n)
    coords = complex_.vertex_coords
    alpha = mesh.Cochain(0, family.sample(coords[:, 0], coords[:, 1]))
    op = operator.build_frac_derivative(complex_, 0, config)
    deriv = op.apply(alpha)
    field = whitney_reconstruct(complex_, deriv)
    centers = metric.barycenters(complex_, 2)
    predicted = eval_at_barycenters(field, complex_)
    reference = family.reference(centers[:, 0], centers[:, 1], config.s,
                                 config.right_sign)
    rel, summary = relative_l2_per_triangle(predicted, reference,
                                            normalize=normalize)
    return {"complex": complex_, "centers": centers, "predicted": predicted,
            "reference": reference, "relative_errors": rel, "summary": summary}
