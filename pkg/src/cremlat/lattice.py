"""Finitely supported classes n*l - sum(lambda_p * e_p) and their geometry.

The pairing is n*n' - sum(lambda_p * lambda'_p): the line class l has
self-intersection 1, each exceptional class e_p has -1, and the basis is
orthogonal, so the form has signature (1, k) on any finite support.
Classes of self-intersection 1 with n > 0 form the hyperboloid model, with
distance argcosh of the pairing.

All arithmetic is exact over Fraction; only distance and geodesic
evaluation produce floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from .bubble import Configuration, PointId
from .errors import (
    DegenerateSegment,
    InvalidPair,
    NotOnHyperboloid,
    UnknownPoint,
)

Q = Fraction
Scalar = Union[int, Fraction, float]


def _coerce(value: Scalar) -> Scalar:
    if isinstance(value, float):
        return value
    return Q(value)


class PicardManinClass:
    """Immutable class with degree coefficient and multiplicity map.

    ``mults[p]`` is the multiplicity lambda_p, so the class equals
    degree * l - sum(mults[p] * e_p).  Zero multiplicities are dropped.
    Coefficients are Fractions unless the class was produced by a float
    construction such as geodesic_point.
    """

    __slots__ = ("_degree", "_mults")

    def __init__(self, degree: Scalar, mults: Optional[Mapping[PointId, Scalar]] = None) -> None:
        self._degree = _coerce(degree)
        items: Dict[PointId, Scalar] = {}
        if mults:
            for p, v in mults.items():
                v = _coerce(v)
                if v != 0:
                    items[int(p)] = v
        self._mults = dict(sorted(items.items()))

    @property
    def degree(self) -> Scalar:
        return self._degree

    @property
    def mults(self) -> Dict[PointId, Scalar]:
        return dict(self._mults)

    @property
    def support(self) -> Tuple[PointId, ...]:
        return tuple(self._mults)

    def mult(self, p: PointId) -> Scalar:
        return self._mults.get(int(p), Q(0))

    @property
    def is_exact(self) -> bool:
        return isinstance(self._degree, Fraction) and all(
            isinstance(v, Fraction) for v in self._mults.values()
        )

    def __add__(self, other: "PicardManinClass") -> "PicardManinClass":
        if not isinstance(other, PicardManinClass):
            return NotImplemented
        mults = dict(self._mults)
        for p, v in other._mults.items():
            mults[p] = mults.get(p, 0) + v
        return PicardManinClass(self._degree + other._degree, mults)

    def __sub__(self, other: "PicardManinClass") -> "PicardManinClass":
        if not isinstance(other, PicardManinClass):
            return NotImplemented
        mults = dict(self._mults)
        for p, v in other._mults.items():
            mults[p] = mults.get(p, 0) - v
        return PicardManinClass(self._degree - other._degree, mults)

    def __rmul__(self, scalar: Scalar) -> "PicardManinClass":
        if not isinstance(scalar, (int, Fraction, float)):
            return NotImplemented
        return PicardManinClass(
            scalar * self._degree, {p: scalar * v for p, v in self._mults.items()}
        )

    def __neg__(self) -> "PicardManinClass":
        return -1 * self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PicardManinClass):
            return NotImplemented
        return self._degree == other._degree and self._mults == other._mults

    def __hash__(self) -> int:
        return hash((self._degree, tuple(self._mults.items())))

    def __repr__(self) -> str:
        if not self._mults:
            return f"PicardManinClass({self._degree!r})"
        body = ", ".join(f"{p}: {v!r}" for p, v in self._mults.items())
        return f"PicardManinClass({self._degree!r}, {{{body}}})"


def line() -> PicardManinClass:
    """The class of a general line."""
    return PicardManinClass(1)


def exceptional(p: PointId) -> PicardManinClass:
    """The class e_p of the exceptional divisor above p."""
    return PicardManinClass(0, {p: -1})


def intersect(c: PicardManinClass, d: PicardManinClass) -> Scalar:
    """Exact pairing n*n' - sum over common support of lambda*lambda'."""
    total = c.degree * d.degree
    small, large = (c, d) if len(c.support) <= len(d.support) else (d, c)
    for p, v in small._mults.items():
        w = large._mults.get(p)
        if w is not None:
            total -= v * w
    return total


def self_intersection(c: PicardManinClass) -> Scalar:
    return intersect(c, c)


def distance(c: PicardManinClass, d: PicardManinClass) -> float:
    """Hyperbolic distance argcosh(c . d) between hyperboloid classes."""
    for label, cls in (("first", c), ("second", d)):
        if self_intersection(cls) != 1:
            raise NotOnHyperboloid(f"{label} class has self-intersection {self_intersection(cls)}")
    product = intersect(c, d)
    if product < 1:
        raise InvalidPair(f"pairing {product} < 1")
    return math.acosh(float(product))


def geodesic_point(c: PicardManinClass, d: PicardManinClass, t: float) -> PicardManinClass:
    """Point at parameter t in [0,1] on the hyperboloid geodesic from c to d.

    Returns a float-coefficient class; its self-intersection is 1 up to
    roundoff (about 1e-9 at desk scale).
    """
    if c == d:
        raise DegenerateSegment("geodesic endpoints coincide")
    big_d = distance(c, d)
    t = float(t)
    if t == 0.0:
        return PicardManinClass(float(c.degree), {p: float(v) for p, v in c._mults.items()})
    if t == 1.0:
        return PicardManinClass(float(d.degree), {p: float(v) for p, v in d._mults.items()})
    wc = math.sinh((1.0 - t) * big_d) / math.sinh(big_d)
    wd = math.sinh(t * big_d) / math.sinh(big_d)
    mults = {p: wc * float(v) for p, v in c._mults.items()}
    for p, v in d._mults.items():
        mults[p] = mults.get(p, 0.0) + wd * float(v)
    return PicardManinClass(wc * float(c.degree) + wd * float(d.degree), mults)


@dataclass(frozen=True)
class CurveWitness:
    """A curve of the checked family on which the product count went negative."""

    kind: str  # pair_line | declared_line | five_conic | declared_conic
    points: Tuple[PointId, ...]
    residual: Fraction


@dataclass(frozen=True)
class ECheckReport:
    """Outcome of the four membership conditions, with witnesses."""

    nonneg_mults: bool
    negative_point: Optional[PointId]
    anticanonical: bool
    anticanonical_margin: Fraction
    excesses: bool
    excess_point: Optional[PointId]
    bezout: bool
    bezout_witness: Optional[CurveWitness]

    @property
    def in_E(self) -> bool:
        return self.nonneg_mults and self.anticanonical and self.excesses and self.bezout


def _bezout_witness(c: PicardManinClass, config: Configuration) -> Optional[CurveWitness]:
    """First failing curve among the implemented family, or None.

    The family: lines through two distinct proper points, declared
    collinear sets, conics through five proper points, declared conic
    sets.  Higher-degree curves are not enumerated; this makes the check
    an under-approximation for adversarial inputs.

    For the pair and five-point families the minimum residual is attained
    at the proper support points of largest multiplicity, so only that
    extremal curve is tested; when the support holds fewer points than the
    curve needs, the remaining slots are filled by the smallest-id generic
    proper points of the configuration (their multiplicity is zero), and a
    configuration short on points just checks the curve through the points
    that exist (such a curve always does).
    """
    n = c.degree
    proper_support = sorted(
        (p for p in c.support if config.is_proper(p)),
        key=lambda p: (-c.mult(p), p),
    )
    spare = [p for p in config.proper_points() if p not in c._mults]

    def extremal(count: int, curve_degree: int, kind: str) -> Optional[CurveWitness]:
        chosen = list(proper_support[:count])
        chosen += spare[: count - len(chosen)]
        if not chosen:
            return None
        residual = curve_degree * n - sum(c.mult(p) for p in chosen)
        if residual < 0:
            return CurveWitness(kind, tuple(sorted(chosen)), Q(residual))
        return None

    witness = extremal(2, 1, "pair_line")
    if witness:
        return witness
    for line_set in sorted(config.collinear_sets, key=sorted):
        residual = n - sum(c.mult(p) for p in line_set)
        if residual < 0:
            return CurveWitness("declared_line", tuple(sorted(line_set)), Q(residual))
    witness = extremal(5, 2, "five_conic")
    if witness:
        return witness
    for conic_set in sorted(config.conic_sets, key=sorted):
        residual = 2 * n - sum(c.mult(p) for p in conic_set)
        if residual < 0:
            return CurveWitness("declared_conic", tuple(sorted(conic_set)), Q(residual))
    return None


def in_E(c: PicardManinClass, config: Configuration) -> ECheckReport:
    """Membership report for the convex set of effective-side classes.

    Conditions: (1) every multiplicity nonnegative; (2) pairing against the
    anti-canonical class nonnegative, i.e. 3n - sum(lambda) >= 0; (3) at
    every point with children, the excess lambda_p - sum of the children's
    lambda is nonnegative (at childless points the excess equals condition
    (1), so it is not re-checked); (4) the product count against the
    implemented curve family is nonnegative.
    """
    for p in c.support:
        if p not in config:
            raise UnknownPoint(f"class supported at {p}, absent from configuration")

    negative = [p for p in c.support if c.mult(p) < 0]
    nonneg = not negative
    neg_witness = min(negative) if negative else None

    margin = 3 * c.degree - sum(c._mults.values())
    anticanonical = margin >= 0

    excess_witness = None
    for p in sorted(c.support):
        kids = config.children(p)
        if not kids:
            continue
        excess = c.mult(p) - sum(c.mult(q) for q in kids)
        if excess < 0:
            excess_witness = p
            break
    excesses = excess_witness is None

    bezout_witness = _bezout_witness(c, config)

    return ECheckReport(
        nonneg_mults=nonneg,
        negative_point=neg_witness,
        anticanonical=anticanonical,
        anticanonical_margin=Q(margin),
        excesses=excesses,
        excess_point=excess_witness,
        bezout=bezout_witness is None,
        bezout_witness=bezout_witness,
    )


def is_special(c: PicardManinClass, config: Configuration) -> bool:
    """Whether the three heaviest points form the off-balance pattern.

    Ranks the support by multiplicity (ties by ascending id), takes the top
    three points p0, p1, p2, and requires p1 and p2 to be adherent to p0
    with n - lambda_0 - lambda_1 - lambda_2 < 0.
    """
    for p in c.support:
        if p not in config:
            raise UnknownPoint(f"class supported at {p}, absent from configuration")
    if len(c.support) < 3:
        return False
    ranked = sorted(c.support, key=lambda p: (-c.mult(p), p))
    p0, p1, p2 = ranked[:3]
    if config.parent(p1) != p0 or config.parent(p2) != p0:
        return False
    return c.degree - c.mult(p0) - c.mult(p1) - c.mult(p2) < 0
