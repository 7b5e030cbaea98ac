#!/usr/bin/env python3

# Internal packages
from dataclasses import dataclass
from typing import Final


@dataclass
class ProgramVersion:
    """
    Contains the program version information.
    """

    major: Final[int] = 1
    minor: Final[int] = 0
    patch: Final[int] = 0
    beta: Final[bool] = False

    def __repr__(self):
        return f"{self.major}.{self.minor}.{self.patch}{'b' if self.beta else ''}"


# sextremal general information
SEXTREMAL_NAME: Final = "sextremal"
SEXTREMAL_NAME_GIT: Final = "SExtremal"
SEXTREMAL_AUTHOR: Final = "AnonymerNiklasistanonym"
SEXTREMAL_DESCRIPTION: Final = (
    "Compute and cross-check shattering-extremal set systems "
    "(shattered sets, VC-dimension, inclusion graphs, vanishing ideals)"
)
SEXTREMAL_URL: Final = f"https://github.com/AnonymerNiklasistanonym/{SEXTREMAL_NAME_GIT}"
SEXTREMAL_URL_SOURCE_CODE: Final = SEXTREMAL_URL
SEXTREMAL_URL_GIT: Final = f"{SEXTREMAL_URL}.git"
SEXTREMAL_URL_BUG_TRACKER: Final = f"{SEXTREMAL_URL}/issues"
SEXTREMAL_VERSION: Final = ProgramVersion(major=0, minor=4, patch=0, beta=True)

# sextremal file format information
SEXTREMAL_SS_HEADER_PREFIX: Final = "n="
SEXTREMAL_SS_EMPTY_SET: Final = "-"
SEXTREMAL_SS_COMMENT_PREFIX: Final = "#"
SEXTREMAL_SS_FILE_EXTENSION: Final = ".ss"
SEXTREMAL_JSON_FILE_EXTENSION: Final = ".json"
SEXTREMAL_TREE_FILE_EXTENSION: Final = ".tree"
