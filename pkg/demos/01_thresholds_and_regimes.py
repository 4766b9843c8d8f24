#!/usr/bin/env python3
"""Walk through the parameter plane: thresholds and regime classification.

For fixed (R, eta) the steady-state structure is decided entirely by where
R_mu falls relative to five critical values.  This script prints the
thresholds for a few (R, eta) pairs and then sweeps R_mu at R = eta = 1,
tagging each value with its even-profile case and its continuum class.
"""

import numpy as np

from muskat.params import FluidParams, classify_regime, dual_params, thresholds

print("=== thresholds for a few parameter pairs ===")
for R, eta in [(1.0, 1.0), (1.0, 0.5), (4.0, 1.0), (0.5, 2.0)]:
    th = thresholds(FluidParams(R, 1.0, eta))
    print(f"R={R:4g} eta={eta:4g}:  r_m={th.r_m:.5f}  r_minus={th.r_minus:.5f}  "
          f"r0={th.r0:.5f}  r_plus={th.r_plus:.5f}  r_M={th.r_M:.5f}")

print("\n=== regime sweep at R = eta = 1 ===")
th = thresholds(FluidParams(1.0, 1.0, 1.0))
sweep = [0.01, th.r_m, 0.1, th.r_minus, 1.0, th.r0, 2.0, th.r_plus, 8.0, th.r_M, 21.0]
for rmu in sweep:
    reg = classify_regime(FluidParams(1.0, rmu, 1.0))
    print(f"R_mu = {rmu:10.6f}:  {reg.even_case.name:6s}  {reg.continuum.value}")

print("\n=== duality pairs the two extreme regimes ===")
p = FluidParams(1.0, 21.0, 1.0)
pd, lam = dual_params(p)
print(f"(R, R_mu, eta) = (1, 21, 1)  <-->  dual (1, {pd.R_mu:.5f}, {pd.eta:.5f}), "
      f"scale lambda = {lam:.5f}")
print(f"dual regime: {classify_regime(pd).continuum.value}")
