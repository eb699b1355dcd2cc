import os
import sys

# the brute-force oracles live next to the tests and are imported as a plain module
sys.path.insert(0, os.path.dirname(__file__))
