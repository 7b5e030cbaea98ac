#!/usr/bin/env python3

# Internal packages
import random

# Local modules
from sextremal.info.limits import DEFAULT_RANDOM_FAMILY_DENSITY
from sextremal.set_system import SetSystem


def random_subset(n: int, rng: random.Random) -> int:
    return rng.getrandbits(n) if n > 0 else 0


def create_rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_family(
    n: int, rng: random.Random, density: float = DEFAULT_RANDOM_FAMILY_DENSITY
) -> SetSystem:
    """Every subset of [n] is a member with the given probability"""
    return SetSystem(n, tuple(mask for mask in range(1 << n) if rng.random() < density))


def random_nonempty_family(n: int, rng: random.Random) -> SetSystem:
    """A uniformly random nonempty family (its membership bitmap is random)"""
    bitmap = 0
    while bitmap == 0:
        bitmap = rng.getrandbits(1 << n)
    return family_from_bitmap(n, bitmap)


def family_from_bitmap(n: int, bitmap: int) -> SetSystem:
    """The family whose member masks are the set bits of a 2^n bit membership bitmap"""
    return SetSystem(n, tuple(mask for mask in range(1 << n) if bitmap >> mask & 1))


def random_down_set(n: int, rng: random.Random, generators: int) -> SetSystem:
    """Down-closure of random generator sets"""
    members = {0}
    for _ in range(generators):
        top = random_subset(n, rng)
        submask = top
        while True:
            members.add(submask)
            if submask == 0:
                break
            submask = (submask - 1) & top
    return SetSystem.from_masks(n, members)


def random_extremal_family(n: int, rng: random.Random, generators: int = 3) -> SetSystem:
    """
    A random down-set moved by random bit flips (bit flips keep the shattered sets, so
    the result is extremal).
    """
    family = random_down_set(n, rng, generators)
    flips = random_subset(n, rng)
    return SetSystem.from_masks(n, (mask ^ flips for mask in family.members))
