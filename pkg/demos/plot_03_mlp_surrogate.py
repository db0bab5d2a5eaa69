"""
Neural-network surrogate
========================

Train the default 1-8-1 tanh network on the dense impedance and frequency
sweeps and score it on the coarse table grids. Also checks backprop against
finite differences on a small problem.
"""

import time
from dataclasses import replace

import numpy as np

from txml import MlpLayout, TrainConfig, evaluate, fit_mlp, generate_sweep, gradient_of_loss
from txml.mlp import flat_params, init_mlp, loss_and_gradient, with_flat_params
from txml.sweep import fit_scaler

cases = {
    "impedance": ("microstrip_impedance", 2.0, {}, 8.5),
    "frequency": ("patch_frequency", 6.0, {"effective_length_m": 9.5e-3}, 9.5),
}

for name, (kind, eps_r, params, x_last) in cases.items():
    train = generate_sweep(kind, eps_r, params, 1.0, 9.5, 0.05)
    grid = generate_sweep(kind, eps_r, params, 1.0, x_last, 0.5)
    start = time.perf_counter()
    model = fit_mlp(train, MlpLayout((8,)), TrainConfig(seed=42))
    elapsed = time.perf_counter() - start
    report = evaluate(model, grid, "mlp")
    print(f"{name}: {len(model.training_log)} epochs in {elapsed:.2f} s, final MSE {model.training_log[-1]:.2e}")
    print("   ", report.summary())

###############################################################################
# Gradient check on five points.
data = generate_sweep("microstrip_impedance", 2.0, {}, 1.0, 9.0, 2.0)
model = replace(init_mlp(MlpLayout((8,)), 0), scaler=fit_scaler(data))
analytic = gradient_of_loss(model, data).flat()
base, h = flat_params(model), 1e-6
numeric = np.array([
    (loss_and_gradient(with_flat_params(model, base + h * e), data)[0]
     - loss_and_gradient(with_flat_params(model, base - h * e), data)[0]) / (2 * h)
    for e in np.eye(base.size)
])
print("max |backprop - central difference|:", np.abs(analytic - numeric).max())
