"""scikit-learn style wrappers.

Rows of ``X`` are intervals ``[start, end]`` (or ``[s1, e1, s2, e2]`` for
2-union instances) and ``y`` holds the color (job) label of each row.
"""
import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import _check_sample_weight, check_array, check_is_fitted, check_X_y

from .branching import solve_branch
from .color_coding import CcConfig, solve_cc
from .dp import solve_dp_q
from .graph import ColoredIntervalGraph, TwoUnionInstance, build_live_index
from .reductions import KernelVariant, kernelize_proper, signature_bound, signature_reduce


def _check_intervals(X, width):
    X = check_array(X, dtype=np.int64, ensure_min_samples=0)
    if X.shape[1] != width:
        raise ValueError(f"X must have {width} columns, got {X.shape[1]}")
    for j in range(0, width, 2):
        if np.any(X[:, j] > X[:, j + 1]):
            raise ValueError("every interval needs start <= end")
    return X


def _graph(X, y, sample_weight=None, color_lists=None):
    X = _check_intervals(X, 2)
    if color_lists is not None:
        if len(color_lists) != len(X):
            raise ValueError("one color list per row required")
        lists = [list(cs) for cs in color_lists]
    else:
        X, y = check_X_y(X, y, dtype=np.int64, ensure_min_samples=0, y_numeric=True)
        lists = [[int(c)] for c in y]
    w = None
    if sample_weight is not None:
        w = _check_sample_weight(sample_weight, X, dtype=np.float64)
        if np.any(w != np.round(w)):
            raise ValueError("sample_weight must be integral")
        w = w.astype(np.int64)
    return X, ColoredIntervalGraph.from_lists([tuple(r) for r in X], lists, w)


class IntervalSelector(BaseEstimator):
    """Pick a maximum-weight colorful independent set of intervals.

    Parameters
    ----------
    algo : {"dpq", "branch", "cc"}
        ``"dpq"`` optimizes total weight; ``"branch"`` and ``"cc"`` look for
        ``k`` intervals and ignore weights.
    k : int, optional
        Target size for ``"branch"`` and ``"cc"``.
    epsilon : float
        Failure probability for ``"cc"``.
    random_state : int
        Seed for ``"cc"``.
    max_q : int
        Upper limit on simultaneously live colors for ``"dpq"``.

    Attributes
    ----------
    support_ : ndarray of int
        Selected row indices.
    value_ : int
        Total weight of the selection (or its size for decision modes).
    found_ : bool
        False when a decision mode found no set of size ``k``.
    Q_ : int
        Maximum number of simultaneously live colors.
    """

    def __init__(self, algo="dpq", k=None, epsilon=0.1, random_state=0, max_q=30):
        self.algo = algo
        self.k = k
        self.epsilon = epsilon
        self.random_state = random_state
        self.max_q = max_q

    def fit(self, X, y=None, sample_weight=None, color_lists=None):
        X, g = _graph(X, y, sample_weight, color_lists)
        self.n_rows_ = len(X)
        self.Q_ = build_live_index(g).Q if g.n else 0
        if self.algo == "dpq":
            sol = solve_dp_q(g, mode="witness", max_q=self.max_q)
        elif self.algo in ("branch", "cc"):
            if self.k is None:
                raise ValueError(f"algo={self.algo!r} needs k")
            g = g.with_unit_weights()
            if self.algo == "branch":
                sol = solve_branch(g, self.k, allow_lists=color_lists is not None)
            else:
                sol = solve_cc(g, CcConfig(self.k, self.epsilon, self.random_state)) if self.k else None
        else:
            raise ValueError(f"unknown algo {self.algo!r}")
        self.found_ = sol is not None or (self.algo != "dpq" and self.k == 0)
        self.support_ = np.array(sol.vertices if sol is not None else (), dtype=np.int64)
        self.value_ = sol.value if sol is not None else 0
        return self

    def predict(self, X):
        """Boolean membership mask for the fitted rows."""
        check_is_fitted(self, "support_")
        X = check_array(X, ensure_min_samples=0)
        if len(X) != self.n_rows_:
            raise ValueError("predict expects the rows the selector was fitted on")
        mask = np.zeros(self.n_rows_, dtype=bool)
        mask[self.support_] = True
        return mask

    def fit_predict(self, X, y=None, **fit_params):
        return self.fit(X, y, **fit_params).predict(X)


class SignatureReducer(TransformerMixin, BaseEstimator):
    """Drop rows whose two intervals both contain those of another row.

    ``X`` has columns ``[s1, e1, s2, e2]``. With non-unit ``sample_weight``
    only exact duplicates are merged.

    Attributes
    ----------
    kept_ : ndarray of int
        Surviving row indices.
    bound_ : int
        Guaranteed upper bound on ``len(kept_)``.
    """

    def fit(self, X, y=None, sample_weight=None):
        X = _check_intervals(X, 4)
        w = None if sample_weight is None else _check_sample_weight(sample_weight, X).astype(np.int64)
        t = TwoUnionInstance.from_pairs([tuple(r) for r in X[:, :2]], [tuple(r) for r in X[:, 2:]], 0, w)
        _, log = signature_reduce(t)
        self.n_rows_ = len(X)
        self.kept_ = log.kept
        self.bound_ = signature_bound(t, weighted=not t.has_unit_weights()) if len(X) else 0
        return self

    def transform(self, X):
        check_is_fitted(self, "kept_")
        X = check_array(X, ensure_min_samples=0)
        if len(X) != self.n_rows_:
            raise ValueError("transform expects the rows the reducer was fitted on")
        return X[self.kept_]


class ProperKernel(TransformerMixin, BaseEstimator):
    """Kernel for proper interval JISP with target ``k``.

    Attributes
    ----------
    solved_ : bool
        The greedy rule already found ``k`` intervals; see ``certificate_``.
    kept_ : ndarray of int
        Rows of the reduced instance (empty when solved).
    k_reduced_ : int
        Target of the reduced instance.
    """

    def __init__(self, k=1):
        self.k = k

    def fit(self, X, y=None):
        X, g = _graph(X, y)
        out = kernelize_proper(g, self.k)
        self.n_rows_ = len(X)
        self.solved_ = out.variant is KernelVariant.SOLVED_YES
        self.certificate_ = np.array(out.certificate or (), dtype=np.int64)
        self.kept_ = np.zeros(0, dtype=np.int64) if self.solved_ else np.asarray(out.kept)
        self.k_reduced_ = 0 if self.solved_ else out.k
        return self

    def transform(self, X):
        check_is_fitted(self, "kept_")
        X = check_array(X, ensure_min_samples=0)
        if len(X) != self.n_rows_:
            raise ValueError("transform expects the rows the kernel was fitted on")
        return X[self.kept_]
