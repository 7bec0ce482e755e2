"""The rank-10 lattice Z*l + Z*e_0 + ... + Z*e_8 and its twist translations.

Vectors are stored as basis coefficients (n, c_0, ..., c_8), meaning
n*l + sum(c_i * e_i); the pairing is n*n' - sum(c_i * c'_i).  The canonical
vector K = -3l + e_0 + ... + e_8 has K.K = 0, and every a with a.K = 0 and
a.a even defines the lattice translation

    t_a(d) = d - (K.d) a + (a.d - (K.d)(a.a)/2) K,

an isometry fixing K, with t_a o t_b = t_{a+b}.  Iterating on the line
class produces the degree-growth quadratic form 9(n^2 + m^2 + nm) + 1.

When a vector is read as a map characteristic the multiplicities are the
negated e-coefficients; multiplicities() exposes that reading.
"""

from __future__ import annotations

from typing import Sequence, Tuple, Union

from .cremona import Characteristic
from .errors import IdentityTwist, NotInKPerp, UnevenSelfPairing

RANK = 10


class HalphenVector:
    """Immutable integer vector in the rank-10 lattice."""

    __slots__ = ("_coords",)

    def __init__(self, coords: Sequence[int]) -> None:
        coords = tuple(int(x) for x in coords)
        if len(coords) != RANK:
            raise ValueError(f"need {RANK} coordinates, got {len(coords)}")
        self._coords = coords

    @property
    def coords(self) -> Tuple[int, ...]:
        return self._coords

    @property
    def degree(self) -> int:
        return self._coords[0]

    def multiplicities(self) -> Tuple[int, ...]:
        """The nine e-coefficients negated (the characteristic reading)."""
        return tuple(-c for c in self._coords[1:])

    def pair(self, other: "HalphenVector") -> int:
        a, b = self._coords, other._coords
        return a[0] * b[0] - sum(a[i] * b[i] for i in range(1, RANK))

    def __add__(self, other: "HalphenVector") -> "HalphenVector":
        if not isinstance(other, HalphenVector):
            return NotImplemented
        return HalphenVector(tuple(x + y for x, y in zip(self._coords, other._coords)))

    def __sub__(self, other: "HalphenVector") -> "HalphenVector":
        if not isinstance(other, HalphenVector):
            return NotImplemented
        return HalphenVector(tuple(x - y for x, y in zip(self._coords, other._coords)))

    def __rmul__(self, scalar: int) -> "HalphenVector":
        if not isinstance(scalar, int):
            return NotImplemented
        return HalphenVector(tuple(scalar * x for x in self._coords))

    def __neg__(self) -> "HalphenVector":
        return -1 * self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HalphenVector):
            return NotImplemented
        return self._coords == other._coords

    def __hash__(self) -> int:
        return hash(self._coords)

    def __repr__(self) -> str:
        return f"HalphenVector{self._coords}"


def line_vector() -> HalphenVector:
    return HalphenVector((1,) + (0,) * 9)


def point_vector(i: int) -> HalphenVector:
    """The exceptional basis vector e_i, 0 <= i <= 8."""
    if not 0 <= i <= 8:
        raise ValueError("point index must be in 0..8")
    coords = [0] * RANK
    coords[1 + i] = 1
    return HalphenVector(coords)


def canonical() -> HalphenVector:
    """K = -3l + e_0 + ... + e_8; self-pairing 0."""
    return HalphenVector((-3,) + (1,) * 9)


class TwistParam:
    """A translation parameter: pairs to zero with K and has even self-pairing."""

    __slots__ = ("_vector",)

    def __init__(self, vector: HalphenVector) -> None:
        k = canonical()
        if vector.pair(k) != 0:
            raise NotInKPerp(f"{vector} pairs to {vector.pair(k)} with the canonical vector")
        if vector.pair(vector) % 2 != 0:
            raise UnevenSelfPairing(f"{vector} has odd self-pairing {vector.pair(vector)}")
        self._vector = vector

    @property
    def vector(self) -> HalphenVector:
        return self._vector

    def __repr__(self) -> str:
        return f"TwistParam{self._vector.coords}"


def generator_a1() -> TwistParam:
    """e_1 - e_0, the first of the two commuting twist directions."""
    return TwistParam(point_vector(1) - point_vector(0))


def generator_a2() -> TwistParam:
    """e_2 - e_0, the second twist direction."""
    return TwistParam(point_vector(2) - point_vector(0))


def translate(a: Union[TwistParam, HalphenVector], d: HalphenVector) -> HalphenVector:
    """Apply the translation isometry t_a to d.

    The (K.d)(a.a)/2 term is integral because a.a is even, so the output
    stays in the integer lattice.
    """
    if not isinstance(a, TwistParam):
        a = TwistParam(a)
    vec = a.vector
    k = canonical()
    kd = k.pair(d)
    coefficient = vec.pair(d) - (kd * vec.pair(vec)) // 2
    return d - kd * vec + coefficient * k


def twist_degree(n: int, m: int) -> int:
    """Degree of the (n, m) twist, computed in the lattice.

    Equals 9(n^2 + m^2 + nm) + 1; tests compare against that closed form.
    """
    a = n * generator_a1().vector + m * generator_a2().vector
    return translate(TwistParam(a), line_vector()).pair(line_vector())


def twist_characteristic(n: int, m: int) -> Characteristic:
    """Characteristic of the (n, m) twist, read off the lattice action.

    Inverse-base multiplicities come from the forward translate of the line
    class, base multiplicities from the backward translate; both sides use
    the marked point ids 0..8, dropping zero entries.
    """
    n, m = int(n), int(m)
    if n == 0 and m == 0:
        raise IdentityTwist("the (0, 0) twist is the identity")
    a = n * generator_a1().vector + m * generator_a2().vector
    forward = translate(TwistParam(a), line_vector())
    backward = translate(TwistParam(-a), line_vector())
    base = [(i, mult) for i, mult in enumerate(backward.multiplicities()) if mult != 0]
    inverse = [(i, mult) for i, mult in enumerate(forward.multiplicities()) if mult != 0]
    return Characteristic(forward.degree, base=base, inverse_base=inverse)
