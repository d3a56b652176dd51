"""scikit-learn style wrapper around point location."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .deformed import deformed_locate, make_deformation
from .locate import locate_details
from .validation import check_rational_array, check_root_type, to_rational
from .weyl import enumerate_weyl


class TilingLocator(TransformerMixin, BaseEstimator):
    """Assign each point to its tile.

    Parameters
    ----------
    root_type : str
        Irreducible type such as ``"G2"``.
    S : matrix or None
        Deformation; None means the undeformed tiling ``V_w``.
    assert_path : bool
        Accept ``S`` without a norm certificate.

    ``fit`` ignores ``X`` apart from checking its width; the tiling is fixed
    by ``root_type`` and ``S``.  ``predict`` returns an object array of affine
    Weyl group elements (None where a deformed point sits on a tile boundary).
    ``transform`` returns integer rows ``[coroot coords of lambda..., index of w, tile dim]``,
    with ``-1`` entries for boundary points of a deformed tiling.
    """

    def __init__(self, root_type="A2", S=None, assert_path=False):
        self.root_type = root_type
        self.S = S
        self.assert_path = assert_path

    def fit(self, X=None, y=None):
        rs = check_root_type(self.root_type)
        if X is not None:
            check_rational_array(X, rs.rank)
        self.system_ = rs
        self.n_features_in_ = rs.rank
        self.weyl_index_ = {w.matrix: k for k, w in enumerate(enumerate_weyl(rs))}
        self.deformation_ = None if self.S is None else make_deformation(
            rs, [[to_rational(a) for a in row] for row in self.S], assert_path=self.assert_path)
        return self

    def _locate(self, xi):
        if self.deformation_ is None:
            loc = locate_details(self.system_, xi)
            return loc.element, loc.tile_dim
        hit = deformed_locate(self.deformation_, xi).open
        return hit, (self.system_.rank if hit is not None else -1)

    def predict(self, X):
        check_is_fitted(self, "system_")
        rows = check_rational_array(X, self.n_features_in_)
        out = np.empty(len(rows), dtype=object)
        for k, xi in enumerate(rows):
            out[k] = self._locate(xi)[0]
        return out

    def transform(self, X):
        check_is_fitted(self, "system_")
        rows = check_rational_array(X, self.n_features_in_)
        rs = self.system_
        out = np.full((len(rows), rs.rank + 2), -1, dtype=np.int64)
        for k, xi in enumerate(rows):
            w, dim = self._locate(xi)
            if w is None:
                continue
            out[k, :rs.rank] = [int(a) for a in rs.to_coroot_coords(w.translation)]
            out[k, rs.rank] = self.weyl_index_[w.matrix]
            out[k, rs.rank + 1] = dim
        return out

