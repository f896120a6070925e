# -*- coding=utf-8 -*-
# Library: decosim
# Author: decosim contributors
# License: MIT
# Description: Decoherence of a qubit coupled to an environment crossing a
#              quantum phase transition.

import sys

from decosim.cli import main


sys.exit(main())
