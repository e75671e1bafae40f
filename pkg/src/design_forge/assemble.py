"""Top-level construction of designs for every admissible order.

A design of order n exists exactly for n = 1 and n = 96t + 1.  Orders 97,
193 and 289 come straight from developed base blocks.  Every larger
admissible order is assembled recursively: take a 4-GDD of type 24^t,
inflate its points by a factor of 4, replace each block by the two-block
decomposition of K_{4,4,4,4}, then adjoin one new point and overlay every
group plus that point with a design of order 97.

Point naming is fixed so outputs are reproducible: GDD point p becomes
the four points 4p..4p+3, the new point is 96t, and each group overlay
uses the sorted-order bijection onto 0..96.
"""

from __future__ import annotations

from typing import Sequence

from . import certify as certify_mod
from .blocks import Design, develop, k4444_decomposition, paper_base_blocks
from .gdd import Gdd, IngredientStore, gdd_24_t
from .targets import TargetId


class ConstructionError(RuntimeError):
    """An assembled design failed its own certification (a defect, not input)."""


def _necessary_conditions(n: int) -> bool:
    # the divisibility conditions for decomposing K_n into a 6-regular
    # graph with 16 vertices and 48 edges
    return (n >= 16 or n == 1) and n * (n - 1) % 96 == 0 and (n - 1) % 6 == 0


def admissible(n: int) -> bool:
    """True iff a design of order n exists: n = 1 or n = 96t + 1.

    The closed form is re-derived from the divisibility conditions on
    every call and the two must agree; a mismatch would be a logic error,
    not bad input.
    """
    if n < 1:
        raise ValueError("order must be positive")
    closed_form = n == 1 or n % 96 == 1
    assert closed_form == _necessary_conditions(n), f"admissibility clauses split at {n}"
    return closed_form


def inflate_block_to_k4444(
    block: Sequence[int], decomposition: Sequence[tuple[int, ...]]
) -> list[tuple[int, ...]]:
    """Map the K_{4,4,4,4} decomposition onto one inflated GDD block.

    The block's four points p_0 < p_1 < p_2 < p_3 each own the four
    inflated points 4p_i..4p_i+3; decomposition label l (in Z_16, residue
    class i mod 4) goes to inflated point 4*p_i + l div 4.  The two
    returned tuples cover exactly the 96 pairs of inflated points over
    distinct p_i.
    """
    p = sorted(block)
    if len(p) != 4:
        raise ValueError("a GDD block has exactly 4 points")
    return [tuple(4 * p[l % 4] + l // 4 for l in tup) for tup in decomposition]


def overlay_group(
    group: Sequence[int], d97: Design, infinity: int
) -> list[tuple[int, ...]]:
    """Push an order-97 design onto a group's inflated points plus infinity.

    The k-th smallest inflated point of the group (k = 0..95) plays design
    point k and the new point plays 96, so the 97 returned blocks cover
    each pair inside (group's inflated points plus infinity) exactly once.
    """
    if d97.order != 97:
        raise ValueError("overlay needs a design of order 97")
    inflated = sorted(4 * p + j for p in group for j in range(4))
    if len(inflated) != 96:
        raise ValueError("a group must inflate to 96 points")
    point = inflated + [infinity]
    return [tuple(point[x] for x in block) for block in d97.blocks]


def construct_design(
    target: TargetId, n: int, store: IngredientStore | None = None
) -> Design:
    """Build and certify a design of any admissible order.

    Orders 1, 97, 193 and 289 are direct; n = 96t + 1 with t >= 4 runs the
    inflation pipeline on a 4-GDD of type 24^t.  Output block order is
    canonical (K_{4,4,4,4} pieces by GDD block index, then overlays by
    group index) and the result is certified before it is returned.
    """
    target = TargetId(target)
    if not admissible(n):
        raise ValueError(f"no design of order {n}: orders must satisfy n ≡ 1 (mod 96)")
    if n == 1:
        return Design(order=1, target=target, blocks=())
    if n in (97, 193, 289):
        design = develop(paper_base_blocks(target, n))
        return _certified(design)
    t = (n - 1) // 96
    base = gdd_24_t(t, store)
    design = Design(order=n, target=target, blocks=tuple(_assembled_blocks(target, base, t)))
    return _certified(design)


def _assembled_blocks(target: TargetId, base: Gdd, t: int):
    decomposition = k4444_decomposition(target)
    for block in base.blocks:
        yield from inflate_block_to_k4444(block, decomposition)
    d97 = develop(paper_base_blocks(target, 97))
    infinity = 96 * t
    for group in base.groups:
        yield from overlay_group(group, d97, infinity)


def _certified(design: Design) -> Design:
    report = certify_mod.certify(certify_mod.Certificate.from_design(design))
    if not report.passed:
        raise ConstructionError(f"constructed design failed certification: {report.summary()}")
    return design
