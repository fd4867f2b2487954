"""Exact arithmetic for finite local rings.

Two families are supported, both with maximal ideal of index p:

* ``zmod:p^k``      -- the integers modulo a prime power, Z/p^k
* ``polyquot:p:k``  -- truncated polynomials F_p[t]/(t^k)

Elements carry a canonical representation (a single residue for zmod, a
coefficient vector for polyquot), so equality and hashing are structural.
The non-units are exactly the elements of the maximal ideal: multiples of p
for zmod, polynomials with zero constant term for polyquot.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

ZMOD = "zmod"
POLYQUOT = "polyquot"


class MixedRings(Exception):
    """Operands belong to different ring specs."""


class NonUnit(Exception):
    """Inversion was requested for an element of the maximal ideal."""


class SpecParseError(Exception):
    """A ring spec string does not match the accepted grammar."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class RingSpec:
    """Descriptor of a finite local ring: family plus prime p and exponent k."""

    family: str
    p: int
    k: int

    def __post_init__(self):
        if self.family not in (ZMOD, POLYQUOT):
            raise ValueError(f"unknown ring family {self.family!r}")
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.k < 1:
            raise ValueError(f"exponent k = {self.k} must be >= 1")

    @property
    def size(self) -> int:
        return self.p**self.k

    @property
    def maximal_ideal_size(self) -> int:
        return self.p ** (self.k - 1)

    @property
    def unit_count(self) -> int:
        return self.size - self.maximal_ideal_size

    def zero(self) -> "RingElem":
        return RingElem(self, 0 if self.family == ZMOD else (0,) * self.k)

    def one(self) -> "RingElem":
        if self.family == ZMOD:
            return RingElem(self, 1 % self.size)
        return RingElem(self, (1 % self.p,) + (0,) * (self.k - 1))

    def from_int(self, n: int) -> "RingElem":
        """The image of the integer n, i.e. n times the ring unit."""
        if self.family == ZMOD:
            return RingElem(self, n % self.size)
        return RingElem(self, (n % self.p,) + (0,) * (self.k - 1))

    def element(self, coeffs) -> "RingElem":
        """Build an element from a residue (zmod) or coefficient sequence."""
        if self.family == ZMOD:
            if isinstance(coeffs, (tuple, list)):
                if len(coeffs) != 1:
                    raise ValueError("zmod elements take a single residue")
                coeffs = coeffs[0]
            return RingElem(self, coeffs % self.size)
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        vec = tuple(c % self.p for c in coeffs)
        if len(vec) > self.k:
            raise ValueError(f"too many coefficients for k = {self.k}")
        return RingElem(self, vec + (0,) * (self.k - len(vec)))

    def __str__(self) -> str:
        if self.family == ZMOD:
            return f"zmod:{self.p}" if self.k == 1 else f"zmod:{self.p}^{self.k}"
        return f"polyquot:{self.p}:{self.k}"


@dataclass(frozen=True)
class RingElem:
    """Canonical element of a finite local ring.

    ``rep`` is a residue in [0, p^k) for zmod, or a k-tuple of coefficients
    each in [0, p) for polyquot (constant term first).  Two elements are
    equal iff their reps are equal.
    """

    spec: RingSpec
    rep: "int | tuple[int, ...]"

    def _require_same(self, other: "RingElem"):
        if self.spec != other.spec:
            raise MixedRings(f"{self.spec} vs {other.spec}")

    def is_zero(self) -> bool:
        return self == self.spec.zero()

    def is_unit(self) -> bool:
        if self.spec.family == ZMOD:
            return self.rep % self.spec.p != 0
        return self.rep[0] != 0

    def residue(self) -> int:
        """Image in the residue field R/m, as an integer in [0, p)."""
        if self.spec.family == ZMOD:
            return self.rep % self.spec.p
        return self.rep[0]

    def __add__(self, other: "RingElem") -> "RingElem":
        self._require_same(other)
        if self.spec.family == ZMOD:
            return RingElem(self.spec, (self.rep + other.rep) % self.spec.size)
        p = self.spec.p
        return RingElem(self.spec, tuple((a + b) % p for a, b in zip(self.rep, other.rep)))

    def __neg__(self) -> "RingElem":
        if self.spec.family == ZMOD:
            return RingElem(self.spec, (-self.rep) % self.spec.size)
        p = self.spec.p
        return RingElem(self.spec, tuple((-a) % p for a in self.rep))

    def __sub__(self, other: "RingElem") -> "RingElem":
        return self + (-other)

    def __mul__(self, other: "RingElem") -> "RingElem":
        self._require_same(other)
        if self.spec.family == ZMOD:
            return RingElem(self.spec, (self.rep * other.rep) % self.spec.size)
        p, k = self.spec.p, self.spec.k
        out = [0] * k
        for i, a in enumerate(self.rep):
            if a == 0:
                continue
            for j, b in enumerate(other.rep):
                if i + j < k:
                    out[i + j] = (out[i + j] + a * b) % p
        return RingElem(self.spec, tuple(out))

    def inverse(self) -> "RingElem":
        """Multiplicative inverse; raises NonUnit on the maximal ideal."""
        if not self.is_unit():
            raise NonUnit(f"{self} is not a unit in {self.spec}")
        if self.spec.family == ZMOD:
            return RingElem(self.spec, pow(self.rep, -1, self.spec.size))
        # Write x = c0(1 + n) with n nilpotent; invert by the geometric series,
        # which terminates because n^k = 0.
        spec = self.spec
        c0_inv = spec.element(pow(self.rep[0], -1, spec.p))
        n = (c0_inv * self) - spec.one()
        acc = spec.one()
        term = spec.one()
        for _ in range(1, spec.k):
            term = -(term * n)
            acc = acc + term
        return c0_inv * acc

    def __str__(self) -> str:
        if self.spec.family == ZMOD:
            return str(self.rep)
        terms = []
        for i, c in enumerate(self.rep):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                coeff = "" if c == 1 else str(c)
                power = "t" if i == 1 else f"t^{i}"
                terms.append(coeff + power)
        return "+".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"RingElem({self.spec}, {self.rep!r})"


@lru_cache(maxsize=None)
def enumerate_elements(spec: RingSpec) -> "tuple[RingElem, ...]":
    """All ring elements in lexicographic order of their representations."""
    if spec.family == ZMOD:
        return tuple(RingElem(spec, r) for r in range(spec.size))
    return tuple(
        RingElem(spec, vec) for vec in itertools.product(range(spec.p), repeat=spec.k)
    )


def enumerate_units(spec: RingSpec) -> "tuple[RingElem, ...]":
    return tuple(x for x in enumerate_elements(spec) if x.is_unit())


def enumerate_maximal_ideal(spec: RingSpec) -> "tuple[RingElem, ...]":
    return tuple(x for x in enumerate_elements(spec) if not x.is_unit())


_ZMOD_RE = re.compile(r"^zmod:(\d+)(?:\^(\d+))?$")
_POLYQUOT_RE = re.compile(r"^polyquot:(\d+):(\d+)$")


def parse_ring_spec(text: str) -> RingSpec:
    """Parse ``zmod:<p>^<k>`` (or ``zmod:<p>``) and ``polyquot:<p>:<k>``."""
    m = _ZMOD_RE.match(text)
    if m:
        p = int(m.group(1))
        k = int(m.group(2)) if m.group(2) else 1
        try:
            return RingSpec(ZMOD, p, k)
        except ValueError as exc:
            raise SpecParseError(f"bad ring spec {text!r}: {exc}") from None
    m = _POLYQUOT_RE.match(text)
    if m:
        try:
            return RingSpec(POLYQUOT, int(m.group(1)), int(m.group(2)))
        except ValueError as exc:
            raise SpecParseError(f"bad ring spec {text!r}: {exc}") from None
    raise SpecParseError(
        f"bad ring spec {text!r}: expected zmod:<p>^<k> or polyquot:<p>:<k>"
    )


def parse_elem(spec: RingSpec, text: str) -> RingElem:
    """Parse an element literal: a residue for zmod, comma coefficients for polyquot."""
    try:
        parts = [int(s.strip()) for s in text.split(",")]
    except ValueError:
        raise SpecParseError(f"bad element literal {text!r} for {spec}") from None
    if spec.family == ZMOD:
        if len(parts) != 1:
            raise SpecParseError(f"zmod element takes one residue, got {text!r}")
        return spec.element(parts[0])
    if len(parts) > spec.k:
        raise SpecParseError(f"too many coefficients in {text!r} for {spec}")
    return spec.element(parts)


def additive_generators(spec: RingSpec) -> "tuple[RingElem, ...]":
    """A small generating set of (R, +): {1} for zmod, {1, t, ..., t^(k-1)} for polyquot."""
    if spec.family == ZMOD:
        return (spec.one(),)
    gens = []
    for i in range(spec.k):
        vec = [0] * spec.k
        vec[i] = 1
        gens.append(RingElem(spec, tuple(vec)))
    return tuple(gens)
