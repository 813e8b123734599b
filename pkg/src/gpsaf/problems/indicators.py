"""Performance indicators for objective-vector sets."""

import numpy as np
from scipy.spatial.distance import cdist

from ..exceptions import ContractViolation, EmptyInputError, UnsupportedDimensionError


def non_dominated(F):
    """Boolean mask of rows not Pareto-dominated by any other row.

    Duplicated rows are all kept.
    """
    F = np.asarray(F, dtype=float)
    n = len(F)
    mask = np.ones(n, dtype=bool)
    for start in range(0, n, 512):
        block = F[start:start + 512]
        le = np.all(F[None, :, :] <= block[:, None, :], axis=2)
        lt = np.any(F[None, :, :] < block[:, None, :], axis=2)
        mask[start:start + 512] = ~np.any(le & lt, axis=1)
    return mask


def igd(obtained, reference):
    """Mean distance from each reference point to its nearest obtained point."""
    A = np.atleast_2d(np.asarray(obtained, dtype=float))
    R = np.atleast_2d(np.asarray(reference, dtype=float))
    if A.size == 0 or R.size == 0:
        raise EmptyInputError("igd needs non-empty obtained and reference sets")
    if A.shape[1] != R.shape[1]:
        raise ContractViolation("obtained and reference sets differ in dimension")
    return float(cdist(R, A).min(axis=1).mean())


def _hv2d(P, ref):
    """Sweep over points sorted by the first objective."""
    order = np.lexsort((P[:, 1], P[:, 0]))
    vol, best_y = 0.0, ref[1]
    for x, y in P[order]:
        if y < best_y:
            vol += (ref[0] - x) * (best_y - y)
            best_y = y
    return vol


def hypervolume(points, ref_point):
    """Exact dominated hypervolume for two or three objectives.

    Points not strictly better than ``ref_point`` in every objective are
    discarded first.
    """
    ref = np.asarray(ref_point, dtype=float)
    P = np.asarray(points, dtype=float)
    m = ref.shape[0]
    if m not in (2, 3):
        raise UnsupportedDimensionError(f"hypervolume supports 2 or 3 objectives, got {m}")
    if P.size == 0:
        return 0.0
    P = np.atleast_2d(P)
    if P.shape[1] != m:
        raise ContractViolation("points and reference point differ in dimension")
    P = P[np.all(P < ref, axis=1)]
    if len(P) == 0:
        return 0.0
    if m == 2:
        return _hv2d(P, ref)
    P = P[np.argsort(P[:, 2], kind="stable")]
    vol = 0.0
    for i in range(len(P)):
        z_next = P[i + 1, 2] if i + 1 < len(P) else ref[2]
        depth = z_next - P[i, 2]
        if depth > 0:
            vol += depth * _hv2d(P[: i + 1, :2], ref[:2])
    return vol
