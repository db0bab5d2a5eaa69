"""Line-oriented text format shared by the OLS and MLP surrogates.

::

    txml-model v1
    kind mlp
    scaler <x_min> <x_max> <y_min> <y_max>
    layout 1 8 1 tanh
    seed 42
    w 0 0 <values...>        one line per weight-matrix row
    b 0 <values...>          one line per bias vector

An OLS file carries ``coef <slope> <intercept>`` after the scaler line.
Numbers use the shortest decimal text that round-trips.
"""

from __future__ import annotations

from pathlib import Path

from ._io import atomic_write_text, fmt
from .errors import DimensionError, SchemaError, TruncatedFileError, UnknownKindError, VersionMismatchError
from .linreg import LinearModel
from .mlp import MlpLayout, MlpModel
from .sweep import Scaler

MAGIC = "txml-model"
VERSION = "v1"


def _scaler_line(scaler: Scaler | None) -> str:
    if scaler is None:
        return "scaler none"
    return "scaler " + " ".join(fmt(v) for v in (scaler.x_min, scaler.x_max, scaler.y_min, scaler.y_max))


def model_to_text(model) -> str:
    lines = [f"{MAGIC} {VERSION}"]
    if isinstance(model, LinearModel):
        lines += ["kind ols", _scaler_line(model.scaler), f"coef {fmt(model.slope)} {fmt(model.intercept)}"]
    elif isinstance(model, MlpModel):
        sizes = " ".join(str(s) for s in model.layout.sizes)
        lines += [
            "kind mlp",
            _scaler_line(model.scaler),
            f"layout {sizes} {model.layout.activation}",
            f"seed {model.seed}",
        ]
        for layer, (w, b) in enumerate(zip(model.weights, model.biases)):
            for row, values in enumerate(w):
                lines.append(f"w {layer} {row} " + " ".join(fmt(v) for v in values))
            lines.append(f"b {layer} " + " ".join(fmt(v) for v in b))
    else:
        raise UnknownKindError(f"cannot save model of type {type(model).__name__}")
    return "\n".join(lines) + "\n"


def save_model(model, path) -> Path:
    return atomic_write_text(path, model_to_text(model))


def load_model(path):
    """Read a model file written by :func:`save_model`.

    Raises:
        VersionMismatchError: header names another format version.
        TruncatedFileError: the file ends before all expected lines.
        DimensionError: parameter lines disagree with the declared layout.
        SchemaError: anything else malformed.
    """
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return model_from_text(text, path)


class _Lines:
    def __init__(self, text: str, path):
        self.lines = text.split("\n")
        if self.lines and self.lines[-1] == "":
            self.lines.pop()
        self.pos = 0
        self.path = path

    def next(self, what: str) -> tuple[int, list[str]]:
        if self.pos >= len(self.lines):
            raise TruncatedFileError(f"file ends before {what}", self.pos + 1, self.path)
        self.pos += 1
        return self.pos, self.lines[self.pos - 1].split()

    def expect(self, keyword: str) -> tuple[int, list[str]]:
        line, tokens = self.next(f"'{keyword}' line")
        if not tokens or tokens[0] != keyword:
            raise SchemaError(f"expected '{keyword}' line, got {' '.join(tokens)!r}", line, self.path)
        return line, tokens[1:]


def _floats(tokens, line, path):
    try:
        return [float(t) for t in tokens]
    except ValueError:
        raise SchemaError(f"non-numeric value in {' '.join(tokens)!r}", line, path) from None


def _read_scaler(lines: _Lines):
    line, tokens = lines.expect("scaler")
    if tokens == ["none"]:
        return None
    if len(tokens) != 4:
        raise SchemaError("scaler needs 4 values", line, lines.path)
    return Scaler(*_floats(tokens, line, lines.path))


def model_from_text(text: str, path=None):
    lines = _Lines(text, path)
    line, tokens = lines.next("header")
    if len(tokens) != 2 or tokens[0] != MAGIC:
        raise SchemaError(f"not a model file (header {' '.join(tokens)!r})", line, path)
    if tokens[1] != VERSION:
        raise VersionMismatchError(VERSION, tokens[1], path)
    line, tokens = lines.expect("kind")
    if tokens == ["ols"]:
        model = _read_ols(lines)
    elif tokens == ["mlp"]:
        model = _read_mlp(lines)
    else:
        raise SchemaError(f"unknown model kind {' '.join(tokens)!r}", line, path)
    if lines.pos < len(lines.lines):
        raise DimensionError("unexpected lines after the last parameter", lines.pos + 1, path)
    return model


def _read_ols(lines: _Lines) -> LinearModel:
    scaler = _read_scaler(lines)
    line, tokens = lines.expect("coef")
    if len(tokens) != 2:
        raise SchemaError("coef needs slope and intercept", line, lines.path)
    slope, intercept = _floats(tokens, line, lines.path)
    return LinearModel(slope, intercept, None, scaler)


def _read_mlp(lines: _Lines) -> MlpModel:
    path = lines.path
    scaler = _read_scaler(lines)
    line, tokens = lines.expect("layout")
    try:
        sizes = [int(t) for t in tokens[:-1]]
        layout = MlpLayout(tuple(sizes[1:-1]), tokens[-1])
    except (ValueError, IndexError) as exc:
        raise SchemaError(f"bad layout: {exc}", line, path) from None
    if len(sizes) < 3 or sizes[0] != 1 or sizes[-1] != 1:
        raise SchemaError(f"layout must be 1 <hidden...> 1, got {sizes}", line, path)
    line, tokens = lines.expect("seed")
    if len(tokens) != 1 or not tokens[0].isdigit():
        raise SchemaError("seed must be a non-negative integer", line, path)
    seed = int(tokens[0])

    weights, biases = [], []
    for layer, (rows, cols) in enumerate(layout.shapes()):
        matrix = []
        for row in range(rows):
            line, tokens = lines.next(f"weight row {row} of layer {layer}")
            if tokens[:1] != ["w"] or tokens[1:3] != [str(layer), str(row)]:
                raise DimensionError(
                    f"expected 'w {layer} {row}', got {' '.join(tokens[:3])!r}", line, path
                )
            values = _floats(tokens[3:], line, path)
            if len(values) != cols:
                raise DimensionError(f"layer {layer} row {row}: expected {cols} weights, got {len(values)}", line, path)
            matrix.append(values)
        line, tokens = lines.next(f"bias of layer {layer}")
        if tokens[:1] != ["b"] or tokens[1:2] != [str(layer)]:
            raise DimensionError(f"expected 'b {layer}', got {' '.join(tokens[:2])!r}", line, path)
        values = _floats(tokens[2:], line, path)
        if len(values) != rows:
            raise DimensionError(f"layer {layer}: expected {rows} biases, got {len(values)}", line, path)
        weights.append(matrix)
        biases.append(values)
    return MlpModel(layout, tuple(weights), tuple(biases), scaler, seed)
