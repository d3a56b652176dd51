"""Input checks for the estimator layer.  Everything must stay exact."""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral, Rational

import numpy as np

from .rootsys import InvalidRootSystemError, build_root_system


def to_rational(value) -> Fraction:
    """Exact conversion.  Strings like ``"3/7"`` are parsed; floats only if integral."""
    if isinstance(value, (bool, np.bool_)):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, (Integral, np.integer)):
        return Fraction(int(value))
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, (float, np.floating)):
        f = float(value)
        if f.is_integer():
            return Fraction(int(f))
        raise TypeError(f"float {value!r} is not exact; pass a Fraction or a 'p/q' string")
    raise TypeError(f"cannot read {value!r} as a rational number")


def check_rational_array(X, n_features: int | None = None) -> list[tuple[Fraction, ...]]:
    """2-d input -> list of Fraction rows of equal width ``n_features``."""
    if isinstance(X, np.ndarray):
        if X.ndim != 2:
            raise ValueError(f"expected a 2-d array, got shape {X.shape}")
        rows = X.tolist()
    else:
        rows = [list(r) if not isinstance(r, str) else [r] for r in X]
    if not rows:
        raise ValueError("no samples given")
    width = {len(r) for r in rows}
    if len(width) != 1:
        raise ValueError(f"rows have different lengths {sorted(width)}")
    w = width.pop()
    if n_features is not None and w != n_features:
        raise ValueError(f"X has {w} features, expected {n_features}")
    return [tuple(to_rational(a) for a in r) for r in rows]


def check_root_type(label):
    try:
        return build_root_system(label)
    except InvalidRootSystemError:
        raise
    except (TypeError, AttributeError):
        raise InvalidRootSystemError(label, "label must be a string such as 'G2'") from None
