#!/usr/bin/env python3

# This file makes sextremal runnable without installing the package

import sys
from os.path import dirname, join

# Append the module path for sextremal
sys.path.append(join(dirname(__file__), "src"))

from sextremal.entry_point import entry_point


# Main method
if __name__ == "__main__":
    entry_point()
