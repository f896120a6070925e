# -*- coding=utf-8 -*-
# Library: decosim
# Author: decosim contributors
# License: MIT
# Description: Decoherence of a qubit coupled to an environment crossing a
#              quantum phase transition.

# Survival amplitude of a qubit coupled to the transverse-field Ising chain,
# for a weak and several strong quenches from lambda0 = 0.

# Note:
#   - the fitted Gaussian width should land near s~^2 for every strong quench

import sys
import numpy as np
import decosim

if len(sys.argv) > 2:
  print("Usage: ")
  print("  python3 example/ising_decoherence.py [n_spins]")
  sys.exit(1)
n_spins = int(sys.argv[1]) if len(sys.argv) == 2 else 50


def main():
  grid = decosim.TimeGrid(0.0, 1.5, 6001)
  for lambda1 in (0.1, 0.5, 5.0, 10.0, 40.0):
    params   = decosim.IsingParams(n_spins=n_spins, lambda0=0.0, lambda1=lambda1)
    spectrum = decosim.build_spectrum(params)
    envelope = decosim.cumulative_variance(spectrum)
    series   = decosim.decoherence_series(spectrum, grid, with_envelope=True)

    try:
      fit   = decosim.fit_series_width(series)
      width = f"{fit.width2:.3f} ({fit.n_peaks_used} peaks)"
    except decosim.NumericalFailure as err:
      width = f"no fit: {err}"

    report = decosim.lindenberg_check(spectrum)
    print(f"lambda1={lambda1:5.1f}: s~^2={envelope.variance:8.3f}, fitted={width}, "
          f"min|r|^2={np.min(series.abs2):.3e}, mean cos^2={report.mean_cos2:.3f}")


main()
