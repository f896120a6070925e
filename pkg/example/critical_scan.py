# -*- coding=utf-8 -*-
# Library: decosim
# Author: decosim contributors
# License: MIT
# Description: Decoherence of a qubit coupled to an environment crossing a
#              quantum phase transition.

# Locate the Ising critical point from the rise of the envelope width.
# Each coupling is an independent task, so a process pool helps on long chains.

import sys
import numpy as np
import decosim

if len(sys.argv) > 2:
  print("Usage: ")
  print("  python3 example/critical_scan.py [workers]")
  sys.exit(1)
workers = int(sys.argv[1]) if len(sys.argv) == 2 else 1


def main():
  lambdas = np.linspace(0.2, 3.0, 29)
  builder = decosim.IsingScanBuilder(n_spins=200)
  result  = decosim.critical_scan(builder, lambdas, decosim.TimeGrid(0.0, 2.0, 2001),
                                  probe_time=1.0, workers=workers)

  for lam, width, probe in zip(result.lambdas, result.widths, result.probe_decay):
    print(f"lambda={lam:4.2f}  width2={width:8.3f}  |r(1)|^2={probe:.3e}")
  print(f"lambda_c ~ {result.lambda_c_estimate:.3f} from {result.width_source} widths, "
        f"confident={result.confident}")


if __name__ == '__main__':
  main()
