"""jetbound computes intersection numbers on jet towers over projective
hypersurfaces and logarithmic pairs, the Morse polynomial P(d) of a weight
vector, and the effective degree threshold beyond which P is positive.

    jetbound <bound|table|poly|sweep|verify> --dim N --order K
             --geometry <log|compact> [--weights a1,..,ak]
             [--format text|json|csv] [--threads T]

Exit statuses: 0 success, 2 invalid input, 3 no threshold, 4 internal
invariant violation.

For testing:
    export PYTHONPATH="$(pwd)"
    coverage run unittests/main.py
    coverage xml -i

For execution:
    python main.py bound --dim 3 --order 3 --geometry log

"""
import sys

# Import the application
# ----------------------
# Importing it loads the jetbound package, which runs the Configurator and
# sets up logging, settings and the persistence engine before any command
# is registered.
from Commands.Application import main

if __name__ == "__main__":
    sys.exit(main())
