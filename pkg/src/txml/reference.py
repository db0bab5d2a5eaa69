"""Reference impedance and resonant-frequency tables.

Each table holds the closed-form "actual" column and the predictions of
two previously published surrogates (a neural network and a straight-line
fit), printed to three decimals. The reproduction pipeline regenerates the
actual column and rescores the printed predictions.

Calibration constants recovered from the tables themselves:

* impedance table: substrate eps_r = 2. The printed w/h column reads
  ``..., 6.0, 7.0, 7.5, ...``; the values step by 0.5, so rows printed
  7.0 through 9.0 belong to w/h 6.5 through 8.5.
* frequency table: eps_r = 6 with a constant effective length
  ``L + 2*dL`` of 9.5 mm and c = 3e8 m/s. Values are in MHz.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ReferenceTable:
    number: int
    kind: str
    eps_r: float
    fixed_params: dict
    printed_x: tuple
    x: tuple  # corrected abscissa
    actual: tuple
    nn: tuple
    lr: tuple
    pct_nn: tuple
    pct_lr: tuple
    display_scale: float  # multiply table values by this to get SI units
    tolerance: float  # allowed |analytic - actual|, in table units

    @property
    def x_array(self) -> np.ndarray:
        return np.asarray(self.x, dtype=float)

    def si(self, column: str) -> np.ndarray:
        return np.asarray(getattr(self, column), dtype=float) * self.display_scale


_T1 = [
    # printed w/h, actual, nn, lr, %nn, %lr
    (1.000, 98.525, 97.323, 71.658, 1.220, 27.269),
    (1.500, 80.819, 81.450, 68.265, 0.781, 15.533),
    (2.000, 68.774, 68.488, 64.871, 0.416, 5.675),
    (2.500, 59.999, 60.280, 61.477, 0.468, 2.463),
    (3.000, 53.296, 53.129, 58.084, 0.313, 8.984),
    (3.500, 47.993, 48.268, 54.690, 0.573, 13.954),
    (4.000, 43.686, 43.408, 51.297, 0.636, 17.422),
    (4.500, 40.113, 39.950, 47.903, 0.406, 19.420),
    (5.000, 37.098, 37.376, 44.509, 0.749, 19.977),
    (5.500, 34.517, 34.802, 41.116, 0.826, 19.118),
    (6.000, 32.281, 32.228, 37.722, 0.164, 16.855),
    (7.000, 30.325, 29.801, 34.329, 1.728, 13.204),
    (7.500, 28.598, 28.517, 30.935, 0.283, 8.172),
    (8.000, 27.061, 27.233, 27.541, 0.636, 1.774),
    (8.500, 25.685, 25.949, 24.148, 1.028, 5.984),
    (9.000, 24.445, 24.665, 20.754, 0.900, 15.099),
]

_T2 = [
    (1.0, 7710.557, 7692.914, 7529.473, 0.229, 2.349),
    (1.5, 7585.017, 7593.029, 7491.309, 0.106, 1.235),
    (2.0, 7489.211, 7493.143, 7453.145, 0.053, 0.482),
    (2.5, 7411.944, 7397.386, 7414.982, 0.196, 0.041),
    (3.0, 7347.491, 7348.007, 7376.818, 0.007, 0.399),
    (3.5, 7292.474, 7298.629, 7338.654, 0.084, 0.633),
    (4.0, 7244.707, 7251.310, 7300.490, 0.091, 0.770),
    (4.5, 7202.688, 7204.505, 7262.326, 0.025, 0.828),
    (5.0, 7165.336, 7157.707, 7224.162, 0.106, 0.821),
    (5.5, 7131.843, 7123.447, 7185.999, 0.118, 0.759),
    (6.0, 7101.594, 7100.492, 7147.835, 0.016, 0.651),
    (6.5, 7074.102, 7077.537, 7109.671, 0.049, 0.503),
    (7.0, 7048.982, 7054.582, 7071.507, 0.079, 0.320),
    (7.5, 7025.921, 7031.627, 7033.343, 0.081, 0.106),
    (8.0, 7004.661, 7008.672, 6995.180, 0.057, 0.135),
    (8.5, 6984.987, 6985.717, 6957.016, 0.010, 0.400),
    (9.0, 6966.719, 6962.762, 6918.852, 0.057, 0.687),
    (9.5, 6949.706, 6939.807, 6880.688, 0.142, 0.993),
]


def _build(number, rows, kind, eps_r, fixed_params, scale, tolerance):
    cols = list(zip(*rows))
    return ReferenceTable(
        number=number,
        kind=kind,
        eps_r=eps_r,
        fixed_params=fixed_params,
        printed_x=cols[0],
        x=tuple(1.0 + 0.5 * i for i in range(len(rows))),
        actual=cols[1],
        nn=cols[2],
        lr=cols[3],
        pct_nn=cols[4],
        pct_lr=cols[5],
        display_scale=scale,
        tolerance=tolerance,
    )


IMPEDANCE_TABLE = _build(1, _T1, "microstrip_impedance", 2.0, {}, 1.0, 0.02)
FREQUENCY_TABLE = _build(
    2, _T2, "patch_frequency", 6.0, {"effective_length_m": 0.0095}, 1e6, 0.1
)

TABLES = {1: IMPEDANCE_TABLE, 2: FREQUENCY_TABLE}

# Straight line implied by the printed LR impedance column: constant
# -3.3937 ohm step per 0.5 of w/h.
IMPLIED_LR_IMPEDANCE = (-6.7874, 78.4454)
