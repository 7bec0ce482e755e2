"""Decomposition-length bounds for plane birational maps.

The number of pencil-preserving factors needed to write a map is bounded
below by two proven quantities (one from the count of distinct base
multiplicities, one from the degree when there are at most nine base
points) and above by running a greedy predecessor search.  The greedy
model assumes generic positions: any center plus small-point choice is
deemed feasible.  Its step count is a true upper bound in that model and
a heuristic otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .cremona import (
    Characteristic,
    is_jonquieres,
    jonquieres_characteristic,
    md,
    require_valid,
)
from .errors import NoDecrease, TooManyBasePoints


@dataclass(frozen=True)
class LengthBounds:
    lower_md: int
    lower_deg: Optional[int]
    upper_greedy: int
    decomposition: Tuple[Tuple[Characteristic, int], ...]

    @property
    def lower(self) -> int:
        return max(self.lower_md, self.lower_deg or 0)


def length_lower_md(char: Characteristic) -> int:
    """Least L >= 0 with md <= 2^(L+1) - 2.

    A product of L pencil-preserving maps carries at most 2^(L+1) - 2
    distinct base multiplicities, so L factors are forced.
    """
    require_valid(char)
    count = md(char)
    return (count + 1).bit_length() - 1


def length_lower_deg(char: Characteristic) -> int:
    """ceil(sqrt(d / 5)), valid only with at most nine base points.

    A length-L word of such maps has degree at most 5 L^2.  Degree 1 is
    the empty word, bound 0.
    """
    require_valid(char)
    if len(char.base) > 9:
        raise TooManyBasePoints(
            f"degree bound needs <= 9 base points, got {len(char.base)}"
        )
    d = char.degree
    if d == 1:
        return 0
    target = -(-d // 5)  # ceil(d / 5)
    root = math.isqrt(target - 1) + 1  # ceil of the square root
    return root


@dataclass(frozen=True)
class GreedyStep:
    """One greedy factor and the characteristic left after dividing it out.

    The leftover's base side is exact; its inverse side is a synthesized
    mirror multiset (see greedy_predecessor) used only for validation.
    """

    jonquieres: Characteristic
    result: Characteristic

    @property
    def degree(self) -> int:
        return self.result.degree


def greedy_predecessor(char: Characteristic) -> GreedyStep:
    """Best single pencil-preserving factor under the generic-position model.

    The center sits at a base point of maximal multiplicity (smallest id on
    ties).  For each degree k from 2 to 1 + floor((#base - 1) / 2) the
    2k - 2 small points take the largest remaining multiplicities, and the
    composed degree d*k - (k-1)*m0 - sum(smalls) is minimized; ties prefer
    smaller k.  The leftover characteristic is recomputed from the lattice
    action and revalidated.
    """
    require_valid(char)
    d = char.degree
    if d < 2:
        raise NoDecrease("degree 1 has no predecessor")
    entries = sorted(char.base, key=lambda pm: (-pm[1], pm[0]))
    center_id, center_mult = entries[0]
    rest = entries[1:]
    k_max = 1 + (len(entries) - 1) // 2

    best = None
    for k in range(2, k_max + 1):
        smalls = rest[: 2 * k - 2]
        new_degree = d * k - (k - 1) * center_mult - sum(m for _, m in smalls)
        if best is None or new_degree < best[0]:
            best = (new_degree, k, smalls)
    if best is None or best[0] >= d:
        raise NoDecrease(f"no factor drops the degree below {d}")
    new_degree, k, smalls = best

    # fresh ids for the inverse side of the factor
    used = {p for p, _ in char.base} | {q for q, _ in char.inverse_base}
    fresh = max(used, default=-1) + 1
    inverse_ids = tuple(range(fresh, fresh + 2 * k - 1))
    factor = jonquieres_characteristic(
        k,
        base_ids=(center_id,) + tuple(p for p, _ in smalls),
        inverse_ids=inverse_ids,
    )

    # leftover multiplicities from the lattice action of the factor
    new_mults: List[Tuple[int, int]] = []
    center_image = d * (k - 1) - (k - 2) * center_mult - sum(m for _, m in smalls)
    if center_image != 0:
        new_mults.append((inverse_ids[0], center_image))
    for slot, (_, m) in enumerate(smalls, start=1):
        image = d - center_mult - m
        if image != 0:
            new_mults.append((inverse_ids[slot], image))
    for p, m in rest[2 * k - 2 :]:
        new_mults.append((p, m))

    # The record alone does not determine the leftover's inverse side (that
    # would need the full resolution data), and no consumer reads it: later
    # greedy steps and the bounds use the base side only.  Synthesize an
    # inverse side with the same multiset at fresh ids; the base multiset
    # already satisfies both identities (the step is an isometry image), so
    # the mirrored side does too and revalidation stays meaningful.
    result = Characteristic(
        new_degree,
        base=new_mults,
        inverse_base=_mirror_side(new_degree, new_mults),
    )
    require_valid(result)
    return GreedyStep(jonquieres=factor, result=result)


def _mirror_side(degree: int, side: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
    """Inverse-side placeholder with the same multiset at fresh ids."""
    fresh = max((p for p, _ in side), default=-1) + 1
    return [(fresh + i, m) for i, (_, m) in enumerate(side)]


def greedy_length(char: Characteristic) -> LengthBounds:
    """Iterate greedy_predecessor to degree 1 and package all three bounds."""
    require_valid(char)
    lower_md = length_lower_md(char)
    lower_deg = length_lower_deg(char) if len(char.base) <= 9 else None
    steps: List[Tuple[Characteristic, int]] = []
    current = char
    while current.degree > 1:
        step = greedy_predecessor(current)
        if step.degree >= current.degree:
            raise NoDecrease(
                f"greedy step failed to decrease degree {current.degree}"
            )
        steps.append((step.jonquieres, step.degree))
        current = step.result
    return LengthBounds(
        lower_md=lower_md,
        lower_deg=lower_deg,
        upper_greedy=len(steps),
        decomposition=tuple(steps),
    )
