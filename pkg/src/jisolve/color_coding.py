"""Randomized color coding for JISP parameterized by the solution size.

Each trial maps the ``gamma`` job colors onto ``k`` colors at random and
solves the recolored instance exactly. A colorful set under the new
coloring is colorful under the old one, so positive answers are always
correct; a fixed size-``k`` solution survives a trial with probability
``k!/k**k``.
"""
import itertools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .dp import Solution, solve_dp_q
from .exceptions import LimitExceededError, PreconditionError
from .graph import ColoredIntervalGraph, first_violation

MAX_EXHAUSTIVE_GAMMA = 12


@dataclass(frozen=True)
class CcConfig:
    """Color-coding parameters.

    Attributes
    ----------
    k : int
        Target solution size, at least 1.
    epsilon : float
        Allowed failure probability on YES-instances, in (0, 1).
    seed : int
        Nonnegative seed; trial ``i`` draws from a stream keyed by ``(seed, i)``.
    max_trials_override : int, optional
        Replaces the number of trials derived from ``k`` and ``epsilon``.
    """

    k: int
    epsilon: float = 0.1
    seed: int = 0
    max_trials_override: Optional[int] = None

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if not 0 < self.epsilon < 1:
            raise ValueError("epsilon must lie in (0, 1)")
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")
        if self.max_trials_override is not None and self.max_trials_override < 1:
            raise ValueError("max_trials_override must be positive")

    @property
    def trials(self):
        if self.max_trials_override is not None:
            return self.max_trials_override
        return trials_needed(self.k, self.epsilon)


def trials_needed(k, epsilon):
    """Number of recolorings ``ceil(|ln eps| * k**k / k!)``, via log-gamma."""
    if k < 1 or not 0 < epsilon < 1:
        raise ValueError("need k >= 1 and 0 < epsilon < 1")
    ratio = math.exp(k * math.log(k) - math.lgamma(k + 1))
    return max(1, math.ceil(abs(math.log(epsilon)) * ratio))


def recolor(g, delta):
    """Replace every color ``x`` by ``delta[x]``.

    ``delta`` is a mapping or a sequence indexed by ``x - 1``. Colors are
    renumbered afterwards, so the result has at most ``len(set(delta))``
    colors.
    """
    if not g.is_jisp():
        raise PreconditionError("recoloring needs singleton color lists")
    if isinstance(delta, dict):
        table = np.array([delta[x] for x in range(1, g.gamma + 1)], dtype=np.int64)
    else:
        table = np.asarray(delta, dtype=np.int64)
        if table.shape != (g.gamma,):
            raise ValueError(f"delta needs one entry per color ({g.gamma})")
    return ColoredIntervalGraph.from_rep(g.rep, g.color_ptr, table[g.color_ids - 1], g.weights)


def trial_delta(gamma, k, seed, trial):
    """The random map ``[gamma] -> [k]`` used in trial ``trial``."""
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, trial])))
    return rng.integers(1, k + 1, size=gamma)


def _attempt(g, delta, k):
    sol = solve_dp_q(recolor(g, delta), mode="witness")
    if sol.value < k:
        return None
    picked = sol.vertices[:k]
    # soundness: colorful under the coarser coloring implies colorful here
    assert first_violation(g, picked) is None
    return Solution(picked, len(picked))


def solve_cc(g, cfg, exhaustive=False):
    """Look for a colorful independent set of size ``cfg.k``.

    Parameters
    ----------
    g : ColoredIntervalGraph
        JISP instance with unit weights.
    cfg : CcConfig
    exhaustive : bool
        Try every map ``[gamma] -> [k]`` in lexicographic order instead of
        random ones. Deterministic and exact, only for ``gamma <= 12``.

    Returns
    -------
    Solution or None
        ``None`` when no trial succeeded. With random trials this can be a
        false negative with probability at most ``cfg.epsilon``.
    """
    if not g.is_jisp():
        raise PreconditionError("color coding needs singleton color lists")
    if not g.has_unit_weights():
        raise PreconditionError("color coding is unweighted")
    k = cfg.k
    if g.n < k:
        return None
    if exhaustive:
        if g.gamma > MAX_EXHAUSTIVE_GAMMA:
            raise LimitExceededError(f"exhaustive recoloring limited to gamma <= {MAX_EXHAUSTIVE_GAMMA}")
        deltas = (np.array(d) for d in itertools.product(range(1, k + 1), repeat=g.gamma))
    else:
        deltas = (trial_delta(g.gamma, k, cfg.seed, t) for t in range(cfg.trials))
    for delta in deltas:
        sol = _attempt(g, delta, k)
        if sol is not None:
            return sol
    return None
