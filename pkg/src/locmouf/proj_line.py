"""The projective line over a finite local ring.

Every unimodular pair (a, b) -- one coordinate a unit -- reduces to exactly
one canonical form: ``[1, r]`` with r in R (affine branch) or ``[m, 1]`` with
m in the maximal ideal (infinite branch).  Two affine points are congruent
when their parameters differ by an element of the maximal ideal; all points
of the infinite branch are congruent to each other.  The congruence classes
are in bijection with the projective line over the residue field, so there
are p + 1 of them, each of size |m|.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .local_ring import RingElem, RingSpec, enumerate_elements, enumerate_maximal_ideal


class NotUnimodular(Exception):
    """Neither coordinate of the pair is a unit."""


@dataclass(frozen=True)
class ProjPoint:
    """Canonical point: Affine(r) = [1, r], or Infinite(m) = [m, 1] with m non-unit."""

    at_infinity: bool
    value: RingElem

    def __post_init__(self):
        if self.at_infinity and self.value.is_unit():
            raise ValueError("infinite-branch parameter must lie in the maximal ideal")

    def __str__(self) -> str:
        if self.at_infinity:
            return f"[{self.value},1]"
        return f"[1,{self.value}]"


def affine(r: RingElem) -> ProjPoint:
    return ProjPoint(False, r)


def infinite(m: RingElem) -> ProjPoint:
    return ProjPoint(True, m)


def canonicalize(a: RingElem, b: RingElem) -> ProjPoint:
    """Reduce the unimodular pair (a, b) to its canonical form.

    The orbit of (a, b) under unit scaling contains (1, a^-1 b) when a is a
    unit, and (a b^-1, 1) otherwise.
    """
    if a.spec != b.spec:
        raise NotUnimodular("coordinates from different rings")
    if a.is_unit():
        return affine(a.inverse() * b)
    if b.is_unit():
        return infinite(a * b.inverse())
    raise NotUnimodular(f"({a}, {b}) has no unit coordinate")


def equivalent(x: ProjPoint, y: ProjPoint) -> bool:
    if x.at_infinity != y.at_infinity:
        return False
    if x.at_infinity:
        return True
    return not (x.value - y.value).is_unit()


class PointSpace:
    """Indexed point set of the projective line with its congruence partition.

    Points are indexed deterministically: affine points in ring enumeration
    order, then infinite-branch points in maximal-ideal enumeration order.
    ``class_of[i]`` is the congruence class id of point i; affine classes are
    numbered by residue (0..p-1) and the infinite class is p.
    """

    def __init__(self, spec: RingSpec):
        self.spec = spec
        pts = [affine(r) for r in enumerate_elements(spec)]
        pts += [infinite(m) for m in enumerate_maximal_ideal(spec)]
        self.points: tuple[ProjPoint, ...] = tuple(pts)
        self.index: dict[ProjPoint, int] = {pt: i for i, pt in enumerate(pts)}
        self.n = len(pts)
        p = spec.p
        self.class_of: tuple[int, ...] = tuple(
            p if pt.at_infinity else pt.value.residue() for pt in pts
        )
        self.num_classes = p + 1
        members: list[list[int]] = [[] for _ in range(self.num_classes)]
        for i, c in enumerate(self.class_of):
            members[c].append(i)
        self.classes: tuple[tuple[int, ...], ...] = tuple(tuple(m) for m in members)
        self.zero = self.index[affine(spec.zero())]
        self.infinity = self.index[infinite(spec.zero())]

    def canonical_index(self, a: RingElem, b: RingElem) -> int:
        return self.index[canonicalize(a, b)]

    def same_class(self, i: int, j: int) -> bool:
        return self.class_of[i] == self.class_of[j]

    def render(self, i: int) -> str:
        return str(self.points[i])

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"PointSpace({self.spec}, {self.n} points, {self.num_classes} classes)"


@lru_cache(maxsize=None)
def build_point_space(spec: RingSpec) -> PointSpace:
    return PointSpace(spec)
