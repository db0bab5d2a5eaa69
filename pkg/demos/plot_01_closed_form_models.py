"""
Closed-form line models
=======================

Evaluate microstrip impedance and patch resonant frequency over w/h and
compare them with the reference tables bundled in :mod:`txml.reference`.
"""

import numpy as np

from txml import MicrostripGeometry, PatchGeometry, effective_permittivity
from txml import microstrip_impedance, patch_length_extension, patch_resonant_frequency
from txml.reference import FREQUENCY_TABLE, IMPEDANCE_TABLE

###############################################################################
# Effective permittivity sits between 1 (air) and eps_r, creeping toward
# eps_r as the strip widens.
for u in (1.0, 2.0, 5.0, 20.0, 1000.0):
    print(f"w/h={u:7.1f}  eps_eff={effective_permittivity(6.0, u):.4f}")

###############################################################################
# Impedance on the reference grid, eps_r = 2.
print("\n  w/h   Z0 (model)   Z0 (table)")
for x, actual in zip(IMPEDANCE_TABLE.x, IMPEDANCE_TABLE.actual):
    z = microstrip_impedance(MicrostripGeometry(2.0, x))
    print(f"{x:5.1f}   {z:9.3f}   {actual:9.3f}")

###############################################################################
# The frequency table is consistent with a constant effective length
# L + 2*dL of 9.5 mm at eps_r = 6.
errs = [
    patch_resonant_frequency(PatchGeometry(6.0, x, effective_length_m=9.5e-3)) / 1e6 - mhz
    for x, mhz in zip(FREQUENCY_TABLE.x, FREQUENCY_TABLE.actual)
]
print(f"\nfrequency table: max |model - table| = {np.max(np.abs(errs)):.4f} MHz")

###############################################################################
# With a physical patch, dL comes from the fringing formula. The two
# variants differ by exactly the factor (w/h + 0.8).
geom = PatchGeometry(4.4, 2.0, substrate_height_m=1.6e-3, patch_length_m=29e-3)
eps_eff = effective_permittivity(4.4, 2.0)
for variant in ("standard", "printed"):
    dl = patch_length_extension(eps_eff, 2.0, 1.6e-3, variant)
    f = patch_resonant_frequency(geom, variant)
    print(f"{variant:8s}  dL={dl * 1e3:.3f} mm  f_r={f / 1e9:.3f} GHz")
