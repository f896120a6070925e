# -*- coding=utf-8 -*-
# Library: decosim
# Author: decosim contributors
# License: MIT
# Description: Decoherence of a qubit coupled to an environment crossing a
#              quantum phase transition.

# Survival amplitude of the Mott state of a 6-site Bose-Hubbard ring after
# switching on the hopping. The envelope width stays near 2 u^2 once the
# hopping dominates, while the LDOS variance keeps growing as 24 g^2.

import sys
import decosim

if len(sys.argv) > 2:
  print("Usage: ")
  print("  python3 example/bose_hubbard_decoherence.py [n_sites]")
  sys.exit(1)
n_sites = int(sys.argv[1]) if len(sys.argv) == 2 else 6


def main():
  params0 = decosim.BoseHubbardParams(n_sites, n_sites, 0.0)
  model   = decosim.BoseHubbardModel(params0)
  ground0 = decosim.ground_state(params0, model.basis)
  print(model)

  for hopping, t_max in ((10.0, 2.0), (20.0, 2.0), (50.0, 1.5)):
    with decosim.TimeIt(f"g={hopping}", verbose=False) as ti:
      energies, vectors = decosim.eigendecompose(model.hamiltonian(hopping))
      decomp = decosim.spectral_weights(ground0, energies, vectors)
      series = decosim.survival_from_spectrum(decomp, decosim.TimeGrid(0.0, t_max, 3001))
      cost   = ti.break_point()

    mean, variance = decosim.ldos_moments(decomp)
    try:
      width = f"{decosim.fit_series_width(series).width2:.3f}"
    except decosim.NumericalFailure as err:
      width = f"no fit: {err}"
    print(f"g={hopping:5.1f}: ldos variance={variance:9.1f} (24 g^2={24 * hopping ** 2:9.1f}), "
          f"width={width}, {cost:.2f}s")


main()
