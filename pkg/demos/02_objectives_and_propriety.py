"""The four objectives as functions of the dependence parameter.

Simulates one dataset per model and traces each estimator's objective over a
parameter grid: every curve should dip near the true value (propriety of the
underlying scoring rules).  Also shows how the Hyvarinen score never needs
the density's normalizing constant.
"""

import numpy as np

from minscore import (
    EstimatorKind,
    gaussian_hyvarinen,
    params_for,
    sample_series,
    total_score,
)

TRUTH = 0.5
GRID = np.linspace(-0.9, 0.9, 19)

for model in ("ar1", "ma1"):
    y = sample_series(model, TRUTH, nu=500, t_len=40, seed=7)
    print(f"\n{model} data generated at {TRUTH}; argmin of each objective over the grid:")
    for kind in (EstimatorKind.FULL_ML, EstimatorKind.PAIRWISE_ML,
                 EstimatorKind.HYV_UNIVARIATE):
        values = [total_score(y, kind, model, float(t)) for t in GRID]
        best = GRID[int(np.argmin(values))]
        print(f"  {kind.value:10s} -> {best:+.2f}")

print("\nScale invariance: the Hyvarinen score ignores the normalizer.")
rng = np.random.default_rng(0)
prec = np.diag([2.0, 1.5, 1.0])
y = rng.standard_normal(3)
print(f"  score from the precision matrix alone: {gaussian_hyvarinen(y, prec):+.4f}")
print("  (no determinant or 2*pi constant ever enters the computation)")
