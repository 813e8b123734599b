"""Signed logarithmic squashing of function values."""

import numpy as np

from ..exceptions import NumericInputError


def plog(y):
    """``ln(1 + y)`` for ``y >= 0`` and ``-ln(1 - y)`` below zero."""
    y = np.asarray(y, dtype=float)
    if not np.all(np.isfinite(y)):
        raise NumericInputError("plog requires finite input")
    out = np.sign(y) * np.log1p(np.abs(y))
    return out if out.ndim else float(out)


def plog_inv(z):
    z = np.asarray(z, dtype=float)
    out = np.sign(z) * np.expm1(np.abs(z))
    return out if out.ndim else float(out)
