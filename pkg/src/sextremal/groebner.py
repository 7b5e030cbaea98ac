#!/usr/bin/env python3

# Future import to support Python 3.9
from __future__ import annotations

# Internal packages
import json
import logging
import random
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Set, Tuple

# Installed packages
import networkx as nx
import sympy as sp

# Local modules
from sextremal.bitset import bit, elements_from_mask, format_mask, iter_submasks
from sextremal.errors import ConsistencyException, GroundSetTooLargeException, InputException
from sextremal.inclusion_graph import build_inclusion_graph
from sextremal.info.limits import MAX_EXACT_SM_N
from sextremal.labeled_tree import encode_family
from sextremal.polynomial import (
    Exponents,
    LexOrder,
    MultilinearPolynomial,
    ZeroPolynomialException,
    format_polynomial,
    multiply,
    unit_exponents,
)
from sextremal.set_system import (
    NotExtremalException,
    SetFamily,
    SetSystem,
    check_nonempty,
    is_extremal,
    shattered_family,
)

log = logging.getLogger(__name__)


class NotASubsetException(InputException):
    """Raised when H is not a subset of S or S is not a subset of [n]"""

    pass


class NonUniqueHException(ConsistencyException):
    """Raised when a minimal non-shattered set misses more than one trace"""

    pass


def build_f_sh(s: int, h: int, n: int) -> MultilinearPolynomial:
    """
    Build f_{S,H} = (prod_{j in H} x_j)(prod_{i in S \\ H} (x_i - 1)), which is nonzero
    at a point v exactly when v ∩ S = H.
    """
    if h & ~s or s >> n:
        raise NotASubsetException(
            f"Expected H ⊆ S ⊆ [n] ({format_mask(h)}, {format_mask(s)}, {n=})"
        )
    one = MultilinearPolynomial.constant(n, 1)
    result = one
    for j in elements_from_mask(h):
        result = result * MultilinearPolynomial.variable(j, n)
    for i in elements_from_mask(s & ~h):
        result = result * (MultilinearPolynomial.variable(i, n) - one)
    return result


def field_polynomial(i: int, n: int) -> MultilinearPolynomial:
    """x_i^2 - x_i"""
    return MultilinearPolynomial.monomial(unit_exponents(i, n, 2)) - MultilinearPolynomial.variable(i, n)


def evaluate(p: MultilinearPolynomial, point: int) -> Fraction:
    return p.evaluate(point)


def minimal_nonshattered_pairs(family: SetSystem) -> List[Tuple[int, int]]:
    """
    For every inclusion minimal S that is not shattered find the unique H ⊆ S with H not
    a trace of F on S.

    @return: Pairs (S, H) sorted by S.
    """
    check_nonempty(family)
    if not is_extremal(family):
        raise NotExtremalException(f"Family is not shattering-extremal ({family})")
    shattered = shattered_family(family).member_set
    candidates = {
        s | bit(e)
        for s in shattered
        for e in range(1, family.n + 1)
        if not s & bit(e) and s | bit(e) not in shattered
    }
    pairs: List[Tuple[int, int]] = []
    for s in sorted(candidates):
        if any(s ^ bit(e) not in shattered for e in elements_from_mask(s)):
            continue
        present = {mask & s for mask in family.members}
        missing = sorted(h for h in iter_submasks(s) if h not in present)
        if len(missing) != 1:
            raise NonUniqueHException(
                f"Minimal non-shattered set misses {len(missing)} traces ({format_mask(s)})"
            )
        pairs.append((s, missing[0]))
    log.debug(f"{len(pairs)=}")
    return pairs


def assemble_groebner_basis(family: SetSystem) -> List[MultilinearPolynomial]:
    """
    The polynomials f_{S,H} of all minimal non-shattered sets together with all
    x_i^2 - x_i: a Gröbner basis of the vanishing ideal for every term order.
    """
    return [
        build_f_sh(s, h, family.n) for s, h in minimal_nonshattered_pairs(family)
    ] + [field_polynomial(i, family.n) for i in range(1, family.n + 1)]


def lex_leading_term(
    p: MultilinearPolynomial, order: LexOrder
) -> Tuple[Exponents, Fraction]:
    if p.is_zero():
        raise ZeroPolynomialException("The zero polynomial has no leading term")
    return max(p.terms.items(), key=lambda term: order.key(term[0]))


def lex_leading_monomial(p: MultilinearPolynomial, order: LexOrder) -> Exponents:
    return lex_leading_term(p, order)[0]


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _quotient(b: Exponents, a: Exponents) -> Exponents:
    return tuple(y - x for x, y in zip(a, b))


def s_polynomial(
    f: MultilinearPolynomial,
    g: MultilinearPolynomial,
    order: LexOrder,
    field_reduce: bool = False,
) -> MultilinearPolynomial:
    """
    S(f, g) = L/lt(f) f - L/lt(g) g with L the least common multiple of the leading
    monomials.
    """
    lm_f, lc_f = lex_leading_term(f, order)
    lm_g, lc_g = lex_leading_term(g, order)
    lcm = tuple(max(x, y) for x, y in zip(lm_f, lm_g))
    left = MultilinearPolynomial.monomial(_quotient(lcm, lm_f), 1 / lc_f)
    right = MultilinearPolynomial.monomial(_quotient(lcm, lm_g), 1 / lc_g)
    return multiply(left, f, field_reduce) - multiply(right, g, field_reduce)


def reduce(
    f: MultilinearPolynomial,
    basis: Sequence[MultilinearPolynomial],
    order: LexOrder,
) -> MultilinearPolynomial:
    """
    Multivariate division remainder. The largest remaining term is eliminated first by
    the first basis element (in list order) whose leading monomial divides it; terms
    that no leading monomial divides move to the remainder.
    """
    if len(basis) == 0:
        raise InputException("Division needs a nonempty basis")
    leading = [lex_leading_term(b, order) for b in basis]
    p = f
    remainder = MultilinearPolynomial.zero(f.n)
    while not p.is_zero():
        lm_p, lc_p = lex_leading_term(p, order)
        for b, (lm_b, lc_b) in zip(basis, leading):
            if _divides(lm_b, lm_p):
                factor = MultilinearPolynomial.monomial(_quotient(lm_p, lm_b), lc_p / lc_b)
                p = p - multiply(factor, b)
                break
        else:
            term = MultilinearPolynomial.monomial(lm_p, lc_p)
            remainder = remainder + term
            p = p - term
    return remainder


def buchberger_check(
    basis: Sequence[MultilinearPolynomial], order: LexOrder
) -> bool:
    """
    Buchberger's criterion: every pairwise S-polynomial reduces to 0.
    """
    if len(basis) == 0:
        raise InputException("Buchberger's criterion needs a nonempty basis")
    for index, f in enumerate(basis):
        for g in basis[index + 1 :]:
            remainder = reduce(s_polynomial(f, g, order), basis, order)
            if not remainder.is_zero():
                log.debug(
                    f"S-polynomial of {format_polynomial(f)} and {format_polynomial(g)} "
                    f"reduces to {format_polynomial(remainder)} ({order=})"
                )
                return False
    return True


def zero_set(basis: Iterable[MultilinearPolynomial], n: int) -> SetSystem:
    """Common zeros of the basis on {0,1}^n"""
    polynomials = list(basis)
    return SetSystem(
        n,
        tuple(
            point
            for point in range(1 << n)
            if all(p.evaluate(point) == 0 for p in polynomials)
        ),
    )


def standard_monomials(family: SetSystem, order: LexOrder) -> SetFamily:
    """
    Compute the standard monomials of the vanishing ideal of F: square-free monomials
    are visited in increasing order and kept when their evaluation vector on the
    points of F is linearly independent of the kept ones, until |F| are kept.
    Monomials with a divisor that was not kept are skipped.

    @return: The monomials as masks (x_M <=> M).
    """
    check_nonempty(family)
    if order.n != family.n:
        raise InputException(f"Lex order does not match the ground set ({order=}, {family.n=})")
    points = family.members
    evaluations = sp.zeros(0, len(points))
    kept: Set[int] = set()
    for monomial in sorted(range(1 << family.n), key=order.mask_key):
        if any(monomial ^ bit(e) not in kept for e in elements_from_mask(monomial)):
            continue
        vector = sp.Matrix([[1 if monomial & point == monomial else 0 for point in points]])
        candidate = evaluations.col_join(vector)
        if candidate.rank() == evaluations.rows:
            continue
        evaluations = candidate
        kept.add(monomial)
        if len(kept) == len(points):
            break
    return SetSystem.from_masks(family.n, kept)


def _check_exact_sm(n: int):
    if n > MAX_EXACT_SM_N:
        raise GroundSetTooLargeException(
            f"Exact computations over all lex orders are limited to {MAX_EXACT_SM_N=} ({n=})"
        )


def extremality_via_sm(
    family: SetSystem, orders: Optional[Sequence[LexOrder]] = None
) -> bool:
    """
    Check that the standard monomials agree for all given lex orders (all n! orders when
    none are given). A sampled set of orders can only refute extremality.
    """
    check_nonempty(family)
    if orders is None:
        _check_exact_sm(family.n)
        orders = list(LexOrder.all(family.n))
    first: Optional[SetFamily] = None
    for order in orders:
        current = standard_monomials(family, order)
        if first is None:
            first = current
        elif current != first:
            log.debug(f"Standard monomials differ for {order=}")
            return False
    return True


def sh_via_sm_union(family: SetSystem) -> SetFamily:
    """Union of the standard monomials over all n! lex orders (equals Sh(F))"""
    check_nonempty(family)
    _check_exact_sm(family.n)
    union: Set[int] = set()
    for order in LexOrder.all(family.n):
        union.update(standard_monomials(family, order).members)
    return SetSystem.from_masks(family.n, union)


def random_orders(n: int, count: int, rng: random.Random) -> List[LexOrder]:
    return [LexOrder.random(n, rng) for _ in range(count)]


def adjacent_pair_identity_check(
    epsilon_alpha: int, epsilon_beta: int, epsilon_gamma: int
) -> bool:
    """
    Check (x_γ - ε_γ) f_{α,β} - (x_α - ε_α) f_{β,γ} = (1 - 2ε_β) f_{α,γ} as an exact
    polynomial identity (α, β, γ are the variables 1, 2, 3).
    """
    n = 3
    one = MultilinearPolynomial.constant(n, 1)
    x_alpha, x_beta, x_gamma = (MultilinearPolynomial.variable(i, n) for i in (1, 2, 3))
    a = x_alpha - one * epsilon_alpha
    b = x_beta - one * epsilon_beta
    b_opposite = x_beta - one + one * epsilon_beta
    c = x_gamma - one * epsilon_gamma
    f_alpha_beta = a * b
    f_beta_gamma = b_opposite * c
    f_alpha_gamma = a * c
    left = c * f_alpha_beta - a * f_beta_gamma
    right = f_alpha_gamma * (1 - 2 * epsilon_beta)
    return left == right


def _edge_far_end(
    path: Sequence[int], edge: Tuple[int, int, int]
) -> int:
    tail, head, _ = edge
    return tail if head in path else head


def vc1_basis_from_tree(family: SetSystem, mode: str = "full") -> List[MultilinearPolynomial]:
    """
    Build the basis of a VC-dimension 1 extremal family from its tree: for two labels α
    and β the missing trace H consists of the labels whose far end (away from the other
    edge on the connecting path) is the head of the edge.

    @param family: VC-dimension 1 extremal family with full support and empty common
                   intersection.
    @param mode: 'full' for every pair of labels, 'adjacent' for pairs of edges sharing
                 a vertex only.
    """
    if mode not in ("full", "adjacent"):
        raise InputException(f"Unknown basis mode ({mode=})")
    encode_family(family)
    graph = build_inclusion_graph(family)
    tree = graph.to_undirected()
    edge_by_label = {label: (g, f, label) for g, f, label in graph.edges}
    labels = sorted(edge_by_label)
    basis: List[MultilinearPolynomial] = []
    for index, alpha in enumerate(labels):
        for beta in labels[index + 1 :]:
            edge_alpha, edge_beta = edge_by_label[alpha], edge_by_label[beta]
            if mode == "adjacent" and not set(edge_alpha[:2]) & set(edge_beta[:2]):
                continue
            path = nx.shortest_path(tree, edge_alpha[0], edge_beta[0])
            far_alpha = _edge_far_end(path, edge_alpha)
            far_beta = _edge_far_end(path, edge_beta)
            h = (far_alpha & bit(alpha)) | (far_beta & bit(beta))
            basis.append(build_f_sh(bit(alpha) | bit(beta), h, family.n))
    return basis + [field_polynomial(i, family.n) for i in range(1, family.n + 1)]


def basis_to_json(basis: Iterable[MultilinearPolynomial], order: Optional[LexOrder] = None) -> str:
    """Stable JSON export: the text form of every polynomial, sorted"""
    return json.dumps(sorted(format_polynomial(p, order) for p in basis))
