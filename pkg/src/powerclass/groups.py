"""Finite permutation groups with eager element enumeration.

Everything here works with explicit element sets: groups are enumerated
breadth-first from their generators at construction time, and the expensive
operations (normal-subgroup lattice, quotients) are memoized per group
instance.  All scans iterate elements in sorted order so results, including
first-witness choices, are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence, Union

from .errors import (
    AmbientMismatch,
    BadParameter,
    CapExceeded,
    ConsistencyError,
    DegreeMismatch,
    NotNormal,
)
from .perm import Permutation, _conj, _mul

DEFAULT_ENUMERATION_CAP = 200_000
NORMAL_LATTICE_JOIN_CAP = 100_000


class _Closure:
    """Incremental closure under right multiplication by accepted generators.

    Tracks a BFS parent pointer (parent element, generator index) for every
    discovered element, which later lets homomorphisms evaluate any element
    from generator images alone.
    """

    __slots__ = ("cap", "elements", "order_list", "parents", "generators")

    def __init__(self, identity: Permutation, cap: int):
        self.cap = cap
        self.elements = {identity}
        self.order_list = [identity]
        self.parents: dict = {identity: None}
        self.generators: list = []

    def add_generator(self, g: Permutation) -> bool:
        """Extend the span by g; no-op (returns False) if g already inside."""
        if g in self.elements:
            return False
        self.generators.append(g)
        ngens = len(self.generators)
        gens = self.generators
        elements = self.elements
        # existing elements only need the new generator; new discoveries
        # need every generator
        work = deque((x, ngens - 1) for x in self.order_list)
        while work:
            x, start = work.popleft()
            for gi in range(start, ngens):
                y = _mul(x, gens[gi])
                if y not in elements:
                    if len(elements) >= self.cap:
                        raise CapExceeded(
                            f"closure exceeded cap of {self.cap} elements"
                        )
                    elements.add(y)
                    self.order_list.append(y)
                    self.parents[y] = (x, gi)
                    work.append((y, 0))
        return True


class Group:
    """A finite permutation group with a fully enumerated element set."""

    __slots__ = (
        "degree",
        "generators",
        "elements",
        "label",
        "_bfs_generators",
        "_order_list",
        "_parents",
        "_cache",
    )

    def __init__(self, *args, **kwargs):
        raise BadParameter("construct groups with generate()")

    @classmethod
    def _build(cls, degree, generators, closure, label) -> "Group":
        g = object.__new__(cls)
        g.degree = degree
        g.generators = tuple(generators)
        g.elements = frozenset(closure.elements)
        g.label = label
        g._bfs_generators = tuple(closure.generators)
        g._order_list = closure.order_list
        g._parents = closure.parents
        g._cache = {}
        return g

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return self._order_list[0]

    def __contains__(self, x: Permutation) -> bool:
        return x in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        name = self.label or "Group"
        return f"<{name}: order {self.order}, degree {self.degree}>"

    def sorted_elements(self) -> list:
        got = self._cache.get("sorted")
        if got is None:
            got = sorted(self.elements)
            self._cache["sorted"] = got
        return got

    def full_subgroup(self) -> "Subgroup":
        got = self._cache.get("full")
        if got is None:
            got = Subgroup(self, self.elements, self._bfs_generators)
            self._cache["full"] = got
        return got

    def trivial_subgroup(self) -> "Subgroup":
        got = self._cache.get("trivial")
        if got is None:
            got = Subgroup(self, frozenset((self.identity,)), ())
            self._cache["trivial"] = got
        return got


class Subgroup:
    """A subgroup of an ambient Group, stored as an explicit member set."""

    __slots__ = ("ambient", "members", "generators", "_cache")

    def __init__(self, ambient: Group, members: frozenset, generators: tuple):
        self.ambient = ambient
        self.members = members
        self.generators = generators
        self._cache = {}

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def is_trivial(self) -> bool:
        return len(self.members) == 1

    def __contains__(self, x: Permutation) -> bool:
        return x in self.members

    def __le__(self, other: "Subgroup") -> bool:
        return self.members <= other.members

    def __lt__(self, other: "Subgroup") -> bool:
        return self.members < other.members

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.ambient is other.ambient
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash(self.members)

    def __repr__(self) -> str:
        return f"<Subgroup of {self.ambient.label or 'G'}: order {self.order}>"

    def as_group(self, label: str = "") -> Group:
        """This subgroup as a standalone Group (same degree)."""
        if len(self.members) == len(self.ambient.elements):
            return self.ambient
        got = self._cache.get("group")
        if got is None:
            got = generate(
                self.ambient.degree,
                self.generators,
                cap=len(self.members),
                label=label or f"{self.ambient.label}-sub{self.order}",
            )
            if got.elements != self.members:
                raise ConsistencyError("subgroup members not closed")
            self._cache["group"] = got
        return got

    def sorted_members(self) -> list:
        got = self._cache.get("sorted")
        if got is None:
            got = sorted(self.members)
            self._cache["sorted"] = got
        return got


class SeriesKind(Enum):
    ETA = "eta"
    POTENT = "potent"
    UPPER_CENTRAL = "upper-central"
    LOWER_CENTRAL = "lower-central"
    P_SERIES = "p-series"


@dataclass(frozen=True)
class SeriesChain:
    """A chain of subgroups of one ambient group, with a direction tag."""

    kind: SeriesKind
    terms: tuple
    type_t: Optional[int] = None

    def orders(self) -> tuple:
        return tuple(t.order for t in self.terms)

    @property
    def steps(self) -> int:
        """Number of links in the chain (one less than the term count)."""
        return len(self.terms) - 1

    def __len__(self) -> int:
        return len(self.terms)


PermSet = Union[Subgroup, Iterable[Permutation]]


def _perms_of(seed: PermSet) -> list:
    if isinstance(seed, Subgroup):
        return list(seed.generators)
    return list(seed)


def _check_ambient(a: Subgroup, b: Subgroup) -> Group:
    if a.ambient is not b.ambient:
        raise AmbientMismatch("subgroups live in different ambient groups")
    return a.ambient


def generate(
    degree: int,
    generators: Sequence[Permutation],
    *,
    cap: int = DEFAULT_ENUMERATION_CAP,
    label: str = "",
) -> Group:
    """Enumerate the group generated by the given permutations.

    The generator tuple is preserved verbatim (construction order, duplicates
    included) for serialization; the BFS keeps only a spanning subset.
    """
    if degree < 1:
        raise BadParameter("degree must be >= 1")
    for g in generators:
        if g.degree != degree:
            raise DegreeMismatch(
                f"generator of degree {g.degree} in group of degree {degree}"
            )
    cl = _Closure(Permutation.identity(degree), cap)
    for g in generators:
        cl.add_generator(g)
    return Group._build(degree, generators, cl, label)


def span(ambient: Group, gens: Sequence[Permutation]) -> Subgroup:
    """Subgroup of `ambient` generated by `gens`."""
    for g in gens:
        if g not in ambient.elements:
            raise AmbientMismatch("generator is not an element of the ambient group")
    cl = _Closure(ambient.identity, len(ambient.elements))
    for g in gens:
        cl.add_generator(g)
    return Subgroup(ambient, frozenset(cl.elements), tuple(cl.generators))


def subgroup_from_members(ambient: Group, members: Iterable[Permutation]) -> Subgroup:
    """Wrap a closed member set as a Subgroup with a small generating set."""
    mset = frozenset(members)
    if not mset <= ambient.elements:
        raise AmbientMismatch("member outside the ambient group")
    cl = _Closure(ambient.identity, len(ambient.elements))
    for x in sorted(mset):
        if x not in cl.elements:
            cl.add_generator(x)
    if len(cl.elements) != len(mset):
        raise BadParameter("member set is not closed under multiplication")
    return Subgroup(ambient, mset, tuple(cl.generators))


def is_normal(G: Group, H: Subgroup) -> bool:
    if H.ambient is not G:
        raise AmbientMismatch("subgroup of a different group")
    for g in G._bfs_generators:
        gi = g.inverse()
        for h in H.generators:
            if _conj(h, g, gi) not in H.members:
                return False
    return True


def _require_normal(G: Group, H: Subgroup) -> None:
    if not is_normal(G, H):
        raise NotNormal(f"subgroup of order {H.order} is not normal in {G.label}")


def normal_closure(G: Group, seed: PermSet) -> Subgroup:
    """Smallest normal subgroup of G containing the seed.

    Alternates generation with conjugation of the accepted generators by the
    group's generators until stable.
    """
    cl = _Closure(G.identity, len(G.elements))
    queue = []
    for s in sorted(set(_perms_of(seed))):
        if s not in G.elements:
            raise AmbientMismatch("seed element outside the group")
        if cl.add_generator(s):
            queue.append(s)
    conj_pairs = [(g, g.inverse()) for g in G._bfs_generators]
    while queue:
        s = queue.pop()
        for g, gi in conj_pairs:
            t = _conj(s, g, gi)
            if t not in cl.elements:
                cl.add_generator(t)
                queue.append(t)
    return Subgroup(G, frozenset(cl.elements), tuple(cl.generators))


def join(a: Subgroup, b: Subgroup) -> Subgroup:
    """Subgroup generated by two subgroups of the same ambient group."""
    G = _check_ambient(a, b)
    if a.members <= b.members:
        return b
    if b.members <= a.members:
        return a
    cl = _Closure(G.identity, len(G.elements))
    for g in a.generators + b.generators:
        cl.add_generator(g)
    return Subgroup(G, frozenset(cl.elements), tuple(cl.generators))


def intersect(a: Subgroup, b: Subgroup) -> Subgroup:
    G = _check_ambient(a, b)
    return subgroup_from_members(G, a.members & b.members)


def commutator_subgroup(a: Subgroup, b: Subgroup) -> Subgroup:
    """[A, B]: normal closure, inside <A u B>, of generator-pair commutators.

    Generator pairs alone need not suffice in nonabelian groups, hence the
    normal closure; the exhaustive all-pairs computation is kept as a test
    oracle.
    """
    G = _check_ambient(a, b)
    if a.members <= b.members:
        inner = b.as_group()
    elif b.members <= a.members:
        inner = a.as_group()
    else:
        inner = join(a, b).as_group()
    comms = {x.commutator(y) for x in a.generators for y in b.generators}
    comms.discard(G.identity)
    closed = normal_closure(inner, comms)
    return Subgroup(G, closed.members, closed.generators)


def iterated_commutator(n: Subgroup, p: Subgroup, t: int) -> Subgroup:
    """[N, P, ..., P] with t >= 1 copies of P."""
    if t < 1:
        raise BadParameter("iterated commutator needs t >= 1")
    out = n
    for _ in range(t):
        out = commutator_subgroup(out, p)
    return out


def power_subgroup(n: Subgroup, k: int) -> Subgroup:
    """Subgroup generated by the k-th powers of all members of N.

    Powers of generators are not enough: in a nonabelian group (xy)^k is not
    x^k y^k, so every member is raised.
    """
    if k < 1:
        raise BadParameter("power subgroup needs k >= 1")
    G = n.ambient
    cl = _Closure(G.identity, len(G.elements))
    for y in sorted({x**k for x in n.members}):
        cl.add_generator(y)
    return Subgroup(G, frozenset(cl.elements), tuple(cl.generators))


def centralizer(G: Group, seed: PermSet) -> Subgroup:
    targets = _perms_of(seed)
    members = [
        x
        for x in G.sorted_elements()
        if all(_mul(x, s) == _mul(s, x) for s in targets)
    ]
    return subgroup_from_members(G, members)


def center(G: Group) -> Subgroup:
    got = G._cache.get("center")
    if got is None:
        got = centralizer(G, G._bfs_generators)
        G._cache["center"] = got
    return got


def normalizer(G: Group, H: Subgroup) -> Subgroup:
    if H.ambient is not G:
        raise AmbientMismatch("subgroup of a different group")
    members = []
    for g in G.sorted_elements():
        gi = g.inverse()
        if all(_conj(h, g, gi) in H.members for h in H.generators):
            members.append(g)
    return subgroup_from_members(G, members)


def upper_central_series(G: Group) -> SeriesChain:
    """1 <= Z_1 <= Z_2 <= ... reported up to its stable point.

    Each level is {x : [x, g] in Z_i for all generators g}; generator
    commutators suffice because Z_i is normal.
    """
    got = G._cache.get("ucs")
    if got is not None:
        return got
    terms = [G.trivial_subgroup()]
    gens = G._bfs_generators
    while True:
        prev = terms[-1].members
        members = []
        for x in G.sorted_elements():
            xi = x.inverse()
            if all(_mul(_mul(xi, g.inverse()), _mul(x, g)) in prev for g in gens):
                members.append(x)
        if len(members) == len(prev):
            break
        terms.append(subgroup_from_members(G, members))
        if len(members) == len(G.elements):
            break
    got = SeriesChain(SeriesKind.UPPER_CENTRAL, tuple(terms))
    G._cache["ucs"] = got
    return got


def lower_central_series(G: Group) -> SeriesChain:
    got = G._cache.get("lcs")
    if got is not None:
        return got
    full = G.full_subgroup()
    terms = [full]
    while True:
        nxt = commutator_subgroup(terms[-1], full)
        if nxt.members == terms[-1].members:
            break
        terms.append(nxt)
        if nxt.is_trivial:
            break
    got = SeriesChain(SeriesKind.LOWER_CENTRAL, tuple(terms))
    G._cache["lcs"] = got
    return got


def nilpotency_class(G: Group) -> Optional[int]:
    """Nilpotency class, or None when the lower central series stalls above 1."""
    chain = lower_central_series(G)
    if chain.terms[-1].is_trivial:
        return len(chain.terms) - 1
    return None


def derived_subgroup(G: Group) -> Subgroup:
    got = G._cache.get("derived")
    if got is None:
        full = G.full_subgroup()
        got = commutator_subgroup(full, full)
        G._cache["derived"] = got
    return got


def conjugacy_classes(G: Group) -> list:
    """List of (representative, class frozenset), reps sorted."""
    got = G._cache.get("classes")
    if got is not None:
        return got
    conj_pairs = [(g, g.inverse()) for g in G._bfs_generators]
    seen = set()
    classes = []
    for x in G.sorted_elements():
        if x in seen:
            continue
        orbit = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for g, gi in conj_pairs:
                z = _conj(y, g, gi)
                if z not in orbit:
                    orbit.add(z)
                    stack.append(z)
        classes.append((x, frozenset(orbit)))
        seen |= orbit
    G._cache["classes"] = classes
    return classes


def class_of_map(G: Group) -> dict:
    """element -> class representative, for the whole group."""
    got = G._cache.get("class_of")
    if got is None:
        got = {}
        for rep, cls in conjugacy_classes(G):
            for x in cls:
                got[x] = rep
        G._cache["class_of"] = got
    return got


class Homomorphism:
    """A homomorphism determined by images of the source's BFS generators.

    Values are computed lazily by walking the source group's BFS parent
    pointers, so a full element table is only materialized when a preimage
    or kernel is requested.
    """

    __slots__ = ("source", "target", "gen_images", "_table")

    def __init__(self, source: Group, target: Group, gen_images: Sequence[Permutation]):
        if len(gen_images) != len(source._bfs_generators):
            raise BadParameter("need one image per spanning generator")
        self.source = source
        self.target = target
        self.gen_images = tuple(gen_images)
        self._table = {source.identity: target.identity}

    def __call__(self, x: Permutation) -> Permutation:
        tab = self._table
        got = tab.get(x)
        if got is not None:
            return got
        if x not in self.source.elements:
            raise AmbientMismatch("element outside the homomorphism's source")
        stack = []
        y = x
        while y not in tab:
            stack.append(y)
            y = self.source._parents[y][0]
        for y in reversed(stack):
            parent, gi = self.source._parents[y]
            tab[y] = _mul(tab[parent], self.gen_images[gi])
        return tab[x]

    def _fill_table(self) -> dict:
        tab = self._table
        if len(tab) != len(self.source.elements):
            for x in self.source._order_list[1:]:
                if x not in tab:
                    parent, gi = self.source._parents[x]
                    tab[x] = _mul(tab[parent], self.gen_images[gi])
        return tab

    def image_of(self, sub: Subgroup) -> Subgroup:
        if sub.ambient is not self.source:
            raise AmbientMismatch("subgroup of a different source group")
        members = frozenset(self(x) for x in sub.members)
        gens = tuple(g for g in (self(x) for x in sub.generators) if not g.is_identity())
        return Subgroup(self.target, members, gens)

    def preimage_of(self, sub: Subgroup) -> Subgroup:
        if sub.ambient is not self.target:
            raise AmbientMismatch("subgroup of a different target group")
        tab = self._fill_table()
        members = [x for x in self.source.elements if tab[x] in sub.members]
        return subgroup_from_members(self.source, members)

    def kernel(self) -> Subgroup:
        return self.preimage_of(self.target.trivial_subgroup())


def quotient(G: Group, N: Subgroup) -> tuple:
    """(Q, pi) where Q is the image of the right-coset action of G on N\\G.

    Q has degree [G:N]; the action is the regular action of G/N, so pi's
    kernel is exactly N.
    """
    key = ("quotient", N.members)
    got = G._cache.get(key)
    if got is not None:
        return got
    _require_normal(G, N)
    rep_index: dict = {}
    reps: list = []
    nmembers = N.sorted_members()
    for x in G.sorted_elements():
        if x in rep_index:
            continue
        idx = len(reps)
        reps.append(x)
        for n in nmembers:
            rep_index[_mul(n, x)] = idx
    index = len(reps)
    gen_images = []
    for g in G._bfs_generators:
        images = tuple(rep_index[_mul(reps[i], g)] for i in range(index))
        gen_images.append(Permutation._raw(images))
    Q = generate(
        index,
        gen_images,
        cap=index,
        label=f"{G.label}/N{N.order}" if G.label else f"Q{index}",
    )
    if Q.order != index:
        raise ConsistencyError("coset action image has wrong order")
    pi = Homomorphism(G, Q, gen_images)
    got = (Q, pi)
    G._cache[key] = got
    return got


def normal_subgroups_within(G: Group, bound: Subgroup) -> list:
    """All subgroups normal in G and contained in `bound` (itself normal).

    Computed as the join-closure of the normal closures of single elements
    of `bound` (one per conjugacy class; the closure is class-invariant).
    """
    key = ("normal_within", bound.members)
    got = G._cache.get(key)
    if got is not None:
        return got
    _require_normal(G, bound)
    atoms: dict = {}
    for rep, _cls in conjugacy_classes(G):
        if rep not in bound.members:
            continue
        K = normal_closure(G, (rep,))
        if not K.members <= bound.members:
            raise ConsistencyError("closure escaped a normal bound")
        atoms.setdefault(K.members, K)
    atom_list = sorted(atoms.values(), key=lambda s: (s.order, s.sorted_members()))
    found = {a.members: a for a in atom_list}
    queue = deque(atom_list)
    while queue:
        A = queue.popleft()
        for B in atom_list:
            if B.members <= A.members:
                continue
            J = join(A, B)
            if J.members not in found:
                if len(found) >= NORMAL_LATTICE_JOIN_CAP:
                    raise CapExceeded(
                        f"normal lattice exceeded {NORMAL_LATTICE_JOIN_CAP} joins"
                    )
                found[J.members] = J
                queue.append(J)
    out = sorted(found.values(), key=lambda s: (s.order, s.sorted_members()))
    G._cache[key] = out
    return out


def normal_subgroups(G: Group) -> list:
    """Every normal subgroup of G, sorted by order (then member list)."""
    return normal_subgroups_within(G, G.full_subgroup())


def all_subgroups(G: Group, cap: int = 10_000) -> list:
    """Every subgroup of G, by closing cyclic subgroups under joins.

    Bounded utility (used by the fusion scan and by test oracles); not meant
    for large groups.
    """
    cyclics: dict = {}
    for x in G.sorted_elements():
        C = span(G, (x,))
        cyclics.setdefault(C.members, C)
    atom_list = sorted(cyclics.values(), key=lambda s: (s.order, s.sorted_members()))
    trivial = G.trivial_subgroup()
    found = {trivial.members: trivial}
    for a in atom_list:
        found.setdefault(a.members, a)
    queue = deque(sorted(found.values(), key=lambda s: (s.order, s.sorted_members())))
    while queue:
        A = queue.popleft()
        for B in atom_list:
            if B.members <= A.members:
                continue
            J = join(A, B)
            if J.members not in found:
                if len(found) >= cap:
                    raise CapExceeded(f"subgroup enumeration exceeded cap {cap}")
                found[J.members] = J
                queue.append(J)
    return sorted(found.values(), key=lambda s: (s.order, s.sorted_members()))
