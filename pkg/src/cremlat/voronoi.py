"""Cell membership against finite germ sets, and germ classification.

A germ set lists finitely many hyperboloid classes (orbit points of the
line class).  Because argcosh is monotone, "closest germ" reduces to the
smallest exact pairing, so membership decisions never touch floating
point.  Cells here are relative to the explicit competitors supplied:
membership against a finite germ set is a necessary condition for
membership against the full orbit, and exact whenever the set contains
every relevant competitor.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

from .bubble import Configuration, PointId, almost_general_position
from .cremona import Characteristic, is_jonquieres, require_valid
from .errors import IndexOutOfRange, NotOnHyperboloid, UnknownPoint, WrongArity
from .lattice import PicardManinClass, exceptional, intersect, line, self_intersection

JONQUIERES_ADJACENT = "jonquieres_adjacent"
GENERAL_ADJACENT = "general_adjacent"
QUASI_ADJACENT_ONLY = "quasi_adjacent_only"
UNCLASSIFIED = "unclassified"


class GermSet:
    """Labeled hyperboloid classes serving as cell centers."""

    __slots__ = ("_labels", "_classes")

    def __init__(self, entries: Iterable[Tuple[str, PicardManinClass]]) -> None:
        labels = []
        classes = []
        for label, cls in entries:
            if self_intersection(cls) != 1:
                raise NotOnHyperboloid(
                    f"germ {label!r} has self-intersection {self_intersection(cls)}"
                )
            labels.append(str(label))
            classes.append(cls)
        if len(set(labels)) != len(labels):
            raise ValueError("germ labels must be distinct")
        self._labels = tuple(labels)
        self._classes = tuple(classes)

    def __len__(self) -> int:
        return len(self._classes)

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def classes(self) -> Tuple[PicardManinClass, ...]:
        return self._classes

    def __getitem__(self, idx: int) -> PicardManinClass:
        return self._classes[idx]


def cell_member(c: PicardManinClass, idx: int, germs: GermSet) -> bool:
    """Whether no germ is strictly closer to c than germs[idx].

    Compares pairings exactly.  The comparison is invariant under positive
    scaling of c, so any class with positive self-intersection is accepted;
    hyperboloid normalization is not required (rational representatives of
    irrational-norm midpoints stay usable).
    """
    if not 0 <= idx < len(germs):
        raise IndexOutOfRange(f"germ index {idx} out of range 0..{len(germs) - 1}")
    if self_intersection(c) <= 0:
        raise NotOnHyperboloid(
            f"membership needs a class of positive self-intersection, got {self_intersection(c)}"
        )
    own = intersect(c, germs[idx])
    return all(own <= intersect(c, other) for other in germs.classes)


def classify_germ(char: Characteristic, config: Configuration) -> str:
    """Adjacency class of the map's cell relative to the identity cell.

    Pencil-preserving characteristics are adjacent outright.  Otherwise at
    most 8 base points in almost general position give adjacency, exactly
    9 give quasi-adjacency (shared boundary class only), and anything else
    is reported unclassified.
    """
    require_valid(char)
    base_ids = char.base_ids()
    for p in base_ids:
        config.require(p)
    if is_jonquieres(char):
        return JONQUIERES_ADJACENT
    if len(base_ids) <= 8 and almost_general_position(base_ids, config):
        return GENERAL_ADJACENT
    if len(base_ids) == 9 and almost_general_position(base_ids, config):
        return QUASI_ADJACENT_ONLY
    return UNCLASSIFIED


def boundary_class(points: Sequence[PointId]) -> PicardManinClass:
    """The degenerate class 3*l - sum of the nine exceptional classes.

    Self-intersection 0, pairing 3 with the line class; it is the class a
    nine-point cell shares with its quasi-adjacent neighbors, and the
    twist translations fix it.
    """
    ids = tuple(int(p) for p in points)
    if len(ids) != 9 or len(set(ids)) != 9:
        raise WrongArity(f"need exactly 9 distinct points, got {points!r}")
    result = 3 * line()
    for p in ids:
        result = result - exceptional(p)
    return result
