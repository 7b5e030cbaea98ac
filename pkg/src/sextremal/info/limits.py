#!/usr/bin/env python3

# Internal packages
from typing import Final

# Ground set and enumeration caps
MAX_GROUND_SET_SIZE: Final = 24
"""Largest supported ground set [n] (every family is stored as n-bit masks)."""
MAX_ENUMERATION_N: Final = 6
"""Largest n for the enumeration of VC-dimension 1 extremal families."""
MAX_EXACT_SM_N: Final = 7
"""Largest n for computations over all n! lex term orders."""
MAX_ANALYSIS_EXACT_SM_N: Final = 5
"""Largest n for which the analysis report compares all lex orders (sampled above)."""
MAX_EXHAUSTIVE_SCAN_N: Final = 4
"""Largest n for scans over all 2^(2^n) families."""
MAX_LIFT_N: Final = 16
"""Largest n for the full cube scan of the projection lift."""
MAX_RANDOM_SCAN_N: Final = 8
"""Largest n for random conjecture scans."""

# Polynomial layer
MAX_EXPONENT: Final = 2
"""Largest per-variable exponent a stored polynomial may carry."""

# Randomised modes
DEFAULT_SAMPLED_ORDERS: Final = 20
DEFAULT_SEED: Final = 0
DEFAULT_RANDOM_FAMILY_DENSITY: Final = 0.5
