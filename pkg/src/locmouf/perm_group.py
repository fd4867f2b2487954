"""Congruence-preserving permutations of a point space and finite group machinery.

Permutations are dense index arrays; actions are on the right throughout:
``act(x, g*h) == act(act(x, g), h)`` and ``g^h = h^-1 g h``.  Groups are
stored as explicit element lists produced by breadth-first closure, which is
deterministic given the generator order.  Element sets are deduplicated by
hashing image tuples, so equality tests between subgroups are set
comparisons, not generator comparisons.
"""

from __future__ import annotations

from .proj_line import PointSpace

DEFAULT_CAP = 1_000_000


class NotEquivalencePreserving(Exception):
    """The image array does not induce a well-defined map on congruence classes."""


class CapExceeded(Exception):
    """Breadth-first closure grew past the configured cap."""


class Permutation:
    """Bijection of the point set that maps congruence classes to classes."""

    __slots__ = ("image", "space")

    def __init__(self, image: tuple[int, ...], space: PointSpace):
        # Trusted constructor: composition and inversion preserve validity.
        self.image = image
        self.space = space

    @classmethod
    def from_image(cls, image, space: PointSpace) -> "Permutation":
        """Validated constructor: checks bijectivity and class compatibility."""
        image = tuple(image)
        if sorted(image) != list(range(space.n)):
            raise ValueError("image array is not a bijection of the point set")
        cls_of = space.class_of
        seen: dict[int, int] = {}
        for i, j in enumerate(image):
            c = cls_of[i]
            if c in seen:
                if seen[c] != cls_of[j]:
                    raise NotEquivalencePreserving(
                        f"class {c} maps to both {seen[c]} and {cls_of[j]}"
                    )
            else:
                seen[c] = cls_of[j]
        return cls(image, space)

    def __mul__(self, other: "Permutation") -> "Permutation":
        # self then other, matching the right-action convention.
        return Permutation(tuple(map(other.image.__getitem__, self.image)), self.space)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(tuple(inv), self.space)

    def conjugate_by(self, h: "Permutation") -> "Permutation":
        return h.inverse() * self * h

    def __getitem__(self, x: int) -> int:
        return self.image[x]

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.image))

    def on_classes(self) -> tuple[int, ...]:
        """The induced permutation of class ids."""
        cls_of = self.space.class_of
        out = [-1] * self.space.num_classes
        for i, j in enumerate(self.image):
            out[cls_of[i]] = cls_of[j]
        return tuple(out)

    def is_class_trivial(self) -> bool:
        return all(i == j for i, j in enumerate(self.on_classes()))

    def cycle_string(self) -> str:
        seen = [False] * len(self.image)
        parts = []
        for i in range(len(self.image)):
            if seen[i] or self.image[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            seen[i] = True
            j = self.image[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = self.image[j]
            parts.append("(" + " ".join(self.space.render(k) for k in cyc) + ")")
        return "".join(parts) if parts else "()"

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        return f"Permutation{self.image}"


def identity_perm(space: PointSpace) -> Permutation:
    return Permutation(tuple(range(space.n)), space)


def act(x: int, g: Permutation) -> int:
    return g.image[x]


def compose(g: Permutation, h: Permutation) -> Permutation:
    return g * h


def invert(g: Permutation) -> Permutation:
    return g.inverse()


def conjugate(g: Permutation, h: Permutation) -> Permutation:
    return g.conjugate_by(h)


def induced_on_classes(g: Permutation) -> tuple[int, ...]:
    return g.on_classes()


class PermGroup:
    """Finite permutation group stored as an explicit, ordered element list."""

    def __init__(self, space: PointSpace, elements, generators=()):
        self.space = space
        self.elements: tuple[Permutation, ...] = tuple(elements)
        self.generators: tuple[Permutation, ...] = tuple(generators)
        self._images = frozenset(g.image for g in self.elements)
        if len(self._images) != len(self.elements):
            raise ValueError("duplicate elements in group")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: Permutation) -> bool:
        return g.image in self._images

    def image_set(self) -> frozenset:
        return self._images

    def same_elements(self, other: "PermGroup") -> bool:
        return self._images == other._images

    def conjugate(self, h: Permutation) -> "PermGroup":
        hinv = h.inverse()
        elems = [hinv * g * h for g in self.elements]
        gens = [hinv * g * h for g in self.generators]
        return PermGroup(self.space, elems, gens)

    def is_abelian(self) -> bool:
        for i, g in enumerate(self.elements):
            for h in self.elements[i + 1 :]:
                if (g * h).image != (h * g).image:
                    return False
        return True

    def kernel_on_classes(self) -> "PermGroup":
        """The subgroup acting trivially on congruence classes."""
        return PermGroup(
            self.space, [g for g in self.elements if g.is_class_trivial()]
        )

    def class_action(self) -> list[tuple[int, ...]]:
        """Deduplicated induced maps on classes, in first-seen order."""
        seen = set()
        out = []
        for g in self.elements:
            c = g.on_classes()
            if c not in seen:
                seen.add(c)
                out.append(c)
        return out

    def __repr__(self) -> str:
        return f"PermGroup(order={self.order})"


def closure(generators, cap: int = DEFAULT_CAP) -> PermGroup:
    """Breadth-first closure of the generators, identity first.

    Insertion order is deterministic given the generator order; the produced
    element set is independent of it.  Raises CapExceeded when the closure
    grows past ``cap``.
    """
    generators = list(generators)
    if not generators:
        raise ValueError("closure needs at least one generator")
    space = generators[0].space
    gens = []
    seen_g = set()
    for g in generators:
        if g.space is not space:
            raise ValueError("generators act on different point spaces")
        if g.image not in seen_g and not g.is_identity():
            seen_g.add(g.image)
            gens.append(g)
    e = identity_perm(space)
    elements = [e]
    seen = {e.image}
    frontier = [e]
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                c = a * g
                if c.image not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(f"group closure exceeded cap {cap}")
                    seen.add(c.image)
                    elements.append(c)
                    new.append(c)
        frontier = new
    return PermGroup(space, elements, generators)


def generates_whole_group(generators, group: PermGroup) -> bool:
    """Whether the generators (elements of ``group``) generate all of it.

    Uses Lagrange: a subgroup whose order exceeds |group|/2 is the whole
    group, so the breadth-first closure can stop early.
    """
    threshold = group.order // 2
    space = group.space
    gens = []
    seen_g = set()
    for g in generators:
        if g not in group:
            return False
        if g.image not in seen_g and not g.is_identity():
            seen_g.add(g.image)
            gens.append(g)
    e = identity_perm(space)
    seen = {e.image}
    frontier = [e.image]
    images = [g.image for g in gens]
    while frontier:
        new = []
        for a in frontier:
            for img in images:
                c = tuple(map(img.__getitem__, a))
                if c not in seen:
                    seen.add(c)
                    new.append(c)
                    if len(seen) > threshold:
                        return True
        frontier = new
    return len(seen) == group.order


def point_stabilizer(group: PermGroup, x: int) -> PermGroup:
    return PermGroup(group.space, [g for g in group.elements if g.image[x] == x])


def two_point_stabilizer(group: PermGroup, x: int, y: int) -> PermGroup:
    return PermGroup(
        group.space,
        [g for g in group.elements if g.image[x] == x and g.image[y] == y],
    )


def set_product(*groups) -> frozenset:
    """Image set of all products g1*g2*...*gn with gi drawn from each factor."""
    space = groups[0].space
    acc = [identity_perm(space).image]
    for grp in groups:
        elems = grp.elements if isinstance(grp, PermGroup) else list(grp)
        nxt = set()
        for a in acc:
            for g in elems:
                nxt.add(tuple(map(g.image.__getitem__, a)))
        acc = list(nxt)
    return frozenset(acc)


def is_sharply_transitive(perms, points) -> bool:
    """Exactly one of ``perms`` maps s to t, for every ordered pair in points^2."""
    points = list(points)
    pset = set(points)
    counts: dict[tuple[int, int], int] = {}
    for g in perms:
        img = g.image
        for s in points:
            t = img[s]
            if t not in pset:
                return False
            key = (s, t)
            counts[key] = counts.get(key, 0) + 1
            if counts[key] > 1:
                return False
    return len(counts) == len(points) ** 2


def is_sharply_transitive_on_classes(class_maps, class_ids) -> bool:
    """Sharp transitivity of deduplicated induced class maps on a class subset."""
    ids = list(class_ids)
    idset = set(ids)
    counts: dict[tuple[int, int], int] = {}
    for cm in class_maps:
        for s in ids:
            t = cm[s]
            if t not in idset:
                return False
            key = (s, t)
            counts[key] = counts.get(key, 0) + 1
            if counts[key] > 1:
                return False
    return len(counts) == len(ids) ** 2
