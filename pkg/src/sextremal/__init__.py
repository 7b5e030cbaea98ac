#!/usr/bin/env python3

# Open the entry point when program is executed using 'sextremal [...]' (check setup.py for more information)

# Local modules
from sextremal.entry_point import entry_point


def _main():
    entry_point()
