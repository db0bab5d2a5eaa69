"""One-input, one-output feed-forward network trained by backpropagation.

Inputs and targets are min-max scaled to ``[0, 1]`` with a
:class:`~txml.sweep.Scaler`; the network works entirely in that space and
:func:`forward` converts back to raw units.

Example::

    >>> from txml.sweep import generate_sweep
    >>> from txml.mlp import MlpLayout, TrainConfig, fit_mlp, forward
    >>> data = generate_sweep("microstrip_impedance", 2.0, {}, 1.0, 9.5, 0.05)
    >>> model = fit_mlp(data, MlpLayout((8,)), TrainConfig(seed=42))
    >>> abs(forward(model, 3.0) - 53.30) < 1.0
    True
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import DivergenceError, InvalidLayoutError, UnfittedScalerError
from .sweep import Dataset, Scaler, fit_scaler

ACTIVATIONS = ("tanh", "sigmoid")


@dataclass(frozen=True)
class MlpLayout:
    hidden_sizes: tuple = (8,)
    activation: str = "tanh"

    def __post_init__(self):
        object.__setattr__(self, "hidden_sizes", tuple(self.hidden_sizes))
        if not self.hidden_sizes:
            raise InvalidLayoutError("need at least one hidden layer")
        for size in self.hidden_sizes:
            if isinstance(size, bool) or int(size) != size or size < 1:
                raise InvalidLayoutError(f"hidden layer sizes must be positive integers, got {self.hidden_sizes}")
        object.__setattr__(self, "hidden_sizes", tuple(int(s) for s in self.hidden_sizes))
        if self.activation not in ACTIVATIONS:
            raise InvalidLayoutError(f"activation must be one of {ACTIVATIONS}, got {self.activation!r}")

    @property
    def sizes(self) -> tuple:
        return (1, *self.hidden_sizes, 1)

    def shapes(self):
        """(rows, cols) of each weight matrix, output-by-input."""
        s = self.sizes
        return [(s[i + 1], s[i]) for i in range(len(s) - 1)]


@dataclass(frozen=True)
class TrainConfig:
    """Full-batch gradient descent with heavy-ball momentum.

    ``momentum=0`` is plain gradient descent. ``seed`` is only used by
    :func:`fit_mlp` to initialize a fresh network.
    """

    epochs: int = 20_000
    learning_rate: float = 0.05
    momentum: float = 0.98
    seed: int = 42
    target_mse: float | None = 1e-8

    def __post_init__(self):
        if int(self.epochs) != self.epochs or self.epochs < 1:
            raise ValueError(f"epochs must be a positive integer, got {self.epochs!r}")
        if not self.learning_rate > 0:
            raise ValueError(f"learning_rate must be positive, got {self.learning_rate!r}")
        if not 0 <= self.momentum < 1:
            raise ValueError(f"momentum must be in [0, 1), got {self.momentum!r}")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")


@dataclass(frozen=True, eq=False)
class MlpModel:
    layout: MlpLayout
    weights: tuple
    biases: tuple
    scaler: Scaler | None = None
    seed: int = 0
    training_log: tuple = field(default=(), repr=False)

    def __post_init__(self):
        shapes = self.layout.shapes()
        if len(self.weights) != len(shapes) or len(self.biases) != len(shapes):
            raise InvalidLayoutError("parameter count does not match layout")
        weights, biases = [], []
        for (rows, cols), w, b in zip(shapes, self.weights, self.biases):
            w = np.array(w, dtype=float)
            b = np.array(b, dtype=float)
            if w.shape != (rows, cols) or b.shape != (rows,):
                raise InvalidLayoutError(
                    f"expected weight {(rows, cols)} and bias {(rows,)}, got {w.shape} and {b.shape}"
                )
            if not (np.all(np.isfinite(w)) and np.all(np.isfinite(b))):
                raise InvalidLayoutError("non-finite parameter")
            w.flags.writeable = False
            b.flags.writeable = False
            weights.append(w)
            biases.append(b)
        object.__setattr__(self, "weights", tuple(weights))
        object.__setattr__(self, "biases", tuple(biases))
        object.__setattr__(self, "training_log", tuple(self.training_log))

    def __call__(self, x):
        return forward(self, x)


@dataclass(frozen=True)
class Gradients:
    weights: tuple
    biases: tuple

    def flat(self) -> np.ndarray:
        return np.concatenate([a.ravel() for pair in zip(self.weights, self.biases) for a in pair])


def init_mlp(layout: MlpLayout, seed: int) -> MlpModel:
    """Fresh network with uniform fan-in/fan-out weights and zero biases."""
    rng = np.random.default_rng(seed)
    weights, biases = [], []
    for rows, cols in layout.shapes():
        limit = math.sqrt(6.0 / (cols + rows))
        weights.append(rng.uniform(-limit, limit, size=(rows, cols)))
        biases.append(np.zeros(rows))
    return MlpModel(layout, tuple(weights), tuple(biases), None, int(seed))


def _act(kind: str, z):
    if kind == "tanh":
        return np.tanh(z)
    return 1.0 / (1.0 + np.exp(-z))


def _act_grad(kind: str, a):
    # derivative expressed through the activation output
    if kind == "tanh":
        return 1.0 - a * a
    return a * (1.0 - a)


def _forward_scaled(weights, biases, activation, xs):
    """Propagate a row vector of scaled inputs; returns all layer outputs."""
    outs = [xs.reshape(1, -1)]
    last = len(weights) - 1
    for i, (w, b) in enumerate(zip(weights, biases)):
        z = w @ outs[-1] + b[:, None]
        outs.append(z if i == last else _act(activation, z))
    return outs


def _loss_and_grads(weights, biases, activation, xs, ys):
    outs = _forward_scaled(weights, biases, activation, xs)
    resid = outs[-1][0] - ys
    n = resid.size
    loss = float(resid @ resid) / n
    delta = (2.0 / n) * resid.reshape(1, -1)
    gw = [None] * len(weights)
    gb = [None] * len(weights)
    for i in range(len(weights) - 1, -1, -1):
        gw[i] = delta @ outs[i].T
        gb[i] = delta.sum(axis=1)
        if i:
            delta = (weights[i].T @ delta) * _act_grad(activation, outs[i])
    return loss, gw, gb


def _require_scaler(model: MlpModel) -> Scaler:
    if model.scaler is None:
        raise UnfittedScalerError("model has no fitted scaler; train it or attach one")
    return model.scaler


def forward(model: MlpModel, x_raw):
    """Predict raw-unit targets for raw w/h input(s)."""
    scaler = _require_scaler(model)
    x = np.asarray(x_raw, dtype=float)
    outs = _forward_scaled(model.weights, model.biases, model.layout.activation, scaler.apply_x(x.ravel()))
    y = scaler.invert_y(outs[-1][0]).reshape(x.shape)
    return float(y) if y.ndim == 0 else y


def loss_and_gradient(model: MlpModel, dataset: Dataset) -> tuple[float, Gradients]:
    """Mean-squared error in scaled units and its gradient."""
    scaler = _require_scaler(model)
    loss, gw, gb = _loss_and_grads(
        model.weights, model.biases, model.layout.activation, scaler.apply_x(dataset.x), scaler.apply_y(dataset.y)
    )
    return loss, Gradients(tuple(gw), tuple(gb))


def gradient_of_loss(model: MlpModel, dataset: Dataset) -> Gradients:
    return loss_and_gradient(model, dataset)[1]


def train(model: MlpModel, dataset: Dataset, config: TrainConfig = TrainConfig()) -> MlpModel:
    """Fit ``model`` to ``dataset`` by full-batch gradient descent on scaled MSE.

    If ``model`` has no scaler, one is fitted to ``dataset``. Returns a new
    model; the input is left untouched. ``training_log`` holds the loss
    before each update.

    Raises:
        DivergenceError: the loss became NaN or infinite.
    """
    scaler = model.scaler if model.scaler is not None else fit_scaler(dataset)
    xs = scaler.apply_x(dataset.x)
    ys = scaler.apply_y(dataset.y)
    weights = [w.copy() for w in model.weights]
    biases = [b.copy() for b in model.biases]
    vel_w = [np.zeros_like(w) for w in weights]
    vel_b = [np.zeros_like(b) for b in biases]
    lr, mu = config.learning_rate, config.momentum
    log = []
    with np.errstate(over="ignore", invalid="ignore"):
        for epoch in range(config.epochs):
            loss, gw, gb = _loss_and_grads(weights, biases, model.layout.activation, xs, ys)
            if not math.isfinite(loss):
                raise DivergenceError(epoch, loss)
            log.append(loss)
            if config.target_mse is not None and loss <= config.target_mse:
                break
            for i in range(len(weights)):
                vel_w[i] *= mu
                vel_w[i] -= lr * gw[i]
                weights[i] += vel_w[i]
                vel_b[i] *= mu
                vel_b[i] -= lr * gb[i]
                biases[i] += vel_b[i]
    if not all(np.all(np.isfinite(p)) for p in (*weights, *biases)):
        raise DivergenceError(len(log), float("nan"))
    return replace(
        model,
        weights=tuple(weights),
        biases=tuple(biases),
        scaler=scaler,
        training_log=tuple(model.training_log) + tuple(log),
    )


def fit_mlp(dataset: Dataset, layout: MlpLayout = MlpLayout(), config: TrainConfig = TrainConfig()) -> MlpModel:
    """Initialize with ``config.seed`` and train on ``dataset``."""
    return train(init_mlp(layout, config.seed), dataset, config)


def flat_params(model: MlpModel) -> np.ndarray:
    return np.concatenate([a.ravel() for pair in zip(model.weights, model.biases) for a in pair])


def with_flat_params(model: MlpModel, flat) -> MlpModel:
    """Copy of ``model`` with parameters taken from a flat vector (same order as :func:`flat_params`)."""
    flat = np.asarray(flat, dtype=float)
    weights, biases, pos = [], [], 0
    for rows, cols in model.layout.shapes():
        weights.append(flat[pos : pos + rows * cols].reshape(rows, cols))
        pos += rows * cols
        biases.append(flat[pos : pos + rows].copy())
        pos += rows
    if pos != flat.size:
        raise InvalidLayoutError(f"expected {pos} parameters, got {flat.size}")
    return replace(model, weights=tuple(weights), biases=tuple(biases))
