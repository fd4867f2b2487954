"""The matrix model: PSL2 over a finite local ring acting on its projective line.

Matrices act on row vectors from the right, [x, y] . M = [xa + yc, xb + yd],
so products of matrices match composition of the induced permutations.  The
projective quotient identifies M with cM for every scalar c with c^2 = 1;
the canonical coset representative is the lexicographically smallest entry
vector.  Group logic lives in the permutations; projective matrices serve as
display values and independent oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .local_ring import (
    NonUnit,
    RingElem,
    RingSpec,
    additive_generators,
    enumerate_elements,
)
from .perm_group import PermGroup, Permutation
from .proj_line import PointSpace, build_point_space, canonicalize


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix over a ring, row-major."""

    a: RingElem
    b: RingElem
    c: RingElem
    d: RingElem

    def det(self) -> RingElem:
        return self.a * self.d - self.b * self.c

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def scale(self, c: RingElem) -> "Mat2":
        return Mat2(c * self.a, c * self.b, c * self.c, c * self.d)

    def entry_key(self):
        return (_rep_key(self.a), _rep_key(self.b), _rep_key(self.c), _rep_key(self.d))

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


def _rep_key(x: RingElem):
    return x.rep if isinstance(x.rep, tuple) else (x.rep,)


def mat(spec: RingSpec, rows) -> Mat2:
    """Build a matrix from integer (or element) entries."""
    vals = []
    for row in rows:
        for v in row:
            vals.append(v if isinstance(v, RingElem) else spec.from_int(v))
    return Mat2(*vals)


@lru_cache(maxsize=None)
def square_roots_of_one(spec: RingSpec) -> "tuple[RingElem, ...]":
    one = spec.one()
    return tuple(c for c in enumerate_elements(spec) if c * c == one)


@dataclass(frozen=True)
class ProjMat:
    """Canonical representative of a determinant-1 matrix modulo unit scalars
    squaring to 1; equality and hashing go through the representative."""

    rep: Mat2

    @classmethod
    def of(cls, m: Mat2) -> "ProjMat":
        spec = m.a.spec
        if m.det() != spec.one():
            raise ValueError(f"matrix {m} has determinant {m.det()}, expected 1")
        best = min((m.scale(c) for c in square_roots_of_one(spec)), key=Mat2.entry_key)
        return cls(best)

    def __mul__(self, other: "ProjMat") -> "ProjMat":
        return ProjMat.of(self.rep * other.rep)

    def __str__(self) -> str:
        return str(self.rep)


def apply_mat(point_vec, m: Mat2):
    x, y = point_vec
    return (x * m.a + y * m.c, x * m.b + y * m.d)


def mat_to_permutation(m, space: PointSpace) -> Permutation:
    """The permutation of the point space induced by a determinant-1 matrix.

    Scalar-equivalent matrices induce the same permutation, and the result
    preserves the congruence (invertible matrices keep pairs unimodular).
    """
    if isinstance(m, ProjMat):
        m = m.rep
    spec = space.spec
    one = spec.one()
    if m.det() != one:
        raise ValueError(f"matrix {m} has determinant {m.det()}, expected 1")
    image = []
    for pt in space.points:
        vec = (pt.value, one) if pt.at_infinity else (one, pt.value)
        image.append(space.index[canonicalize(*apply_mat(vec, m))])
    return Permutation.from_image(image, space)


def unitriangular(spec: RingSpec, r: RingElem) -> Mat2:
    """The translation matrix [[1, r], [0, 1]]."""
    return Mat2(spec.one(), r, spec.zero(), spec.one())


def tau_matrix(spec: RingSpec) -> Mat2:
    """The standard point-swapping matrix [[0, 1], [-1, 0]]."""
    one = spec.one()
    return Mat2(spec.zero(), one, -one, spec.zero())


def mu_matrix(r: RingElem) -> ProjMat:
    """Oracle for the swap map at the affine unit point [1, r]: [[0, r], [-r^-1, 0]]."""
    if not r.is_unit():
        raise NonUnit(f"{r} is not a unit")
    spec = r.spec
    return ProjMat.of(Mat2(spec.zero(), r, -r.inverse(), spec.zero()))


def hua_matrix(r: RingElem) -> ProjMat:
    """Oracle for the two-point-fixing map at [1, r]: [[r^-1, 0], [0, r]]."""
    if not r.is_unit():
        raise NonUnit(f"{r} is not a unit")
    spec = r.spec
    return ProjMat.of(Mat2(r.inverse(), spec.zero(), spec.zero(), r))


class Psl2Model(NamedTuple):
    space: PointSpace
    U: PermGroup
    tau: Permutation


def build_model(spec: RingSpec) -> Psl2Model:
    """The root-group datum of the matrix model: the translation group and
    the standard swap, acting on the projective line.

    The group U consists of the permutations of all upper unitriangular
    matrices (|U| = |R|, one per ring element, fixing [0,1]); its stored
    generators correspond to an additive generating set of the ring.
    """
    space = build_point_space(spec)
    elements = [
        mat_to_permutation(unitriangular(spec, r), space)
        for r in enumerate_elements(spec)
    ]
    generators = [
        mat_to_permutation(unitriangular(spec, r), space)
        for r in additive_generators(spec)
    ]
    U = PermGroup(space, elements, generators)
    tau = mat_to_permutation(tau_matrix(spec), space)
    return Psl2Model(space, U, tau)


def hua_matrix_permutations(spec: RingSpec) -> "list[Permutation]":
    """Deduplicated permutations of all diagonal oracle matrices [[r^-1,0],[0,r]]."""
    space = build_point_space(spec)
    seen = set()
    out = []
    for r in enumerate_elements(spec):
        if not r.is_unit():
            continue
        g = mat_to_permutation(hua_matrix(r), space)
        if g.image not in seen:
            seen.add(g.image)
            out.append(g)
    return out
