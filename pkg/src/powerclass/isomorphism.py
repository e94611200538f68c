"""Isomorphism testing for small groups by generator-image backtracking.

The search assigns an image to one spanning generator at a time and grows a
partial multiplication table (pairs a -> b) closed under the generators
assigned so far; any relation mismatch or injectivity failure prunes the
branch immediately.  Intended for groups up to a few hundred elements.
"""

from __future__ import annotations

from typing import Optional

from .errors import CapExceeded
from .groups import Group, Homomorphism, center, conjugacy_classes, derived_subgroup
from .perm import _mul

ISO_ORDER_CAP = 512


def _element_profile(G: Group) -> dict:
    """(element order, conjugacy class size) -> count, an iso invariant."""
    got = G._cache.get("iso_profile")
    if got is None:
        got = {}
        for rep, cls in conjugacy_classes(G):
            key = (rep.order(), len(cls))
            got[key] = got.get(key, 0) + len(cls)
        G._cache["iso_profile"] = got
    return got


def _quick_invariants(G: Group) -> tuple:
    return (
        G.order,
        len(center(G).members),
        len(derived_subgroup(G).members),
        tuple(sorted(_element_profile(G).items())),
    )


def _extend_table(table, used, pairs, new_pair):
    """Close the partial map under the assigned generator pairs.

    Returns the extended (table, used) or None on any relation or
    injectivity conflict.
    """
    table = dict(table)
    used = set(used)
    queue = list(table.items())
    gens = pairs + [new_pair]
    a0, b0 = new_pair
    if a0 in table:
        return None if table[a0] != b0 else (table, used)
    if b0 in used:
        return None
    table[a0] = b0
    used.add(b0)
    queue.append((a0, b0))
    while queue:
        a, b = queue.pop()
        for ga, gb in gens:
            a2 = _mul(a, ga)
            b2 = _mul(b, gb)
            known = table.get(a2)
            if known is not None:
                if known != b2:
                    return None
            else:
                if b2 in used:
                    return None
                table[a2] = b2
                used.add(b2)
                queue.append((a2, b2))
    return (table, used)


def isomorphism(A: Group, B: Group) -> Optional[Homomorphism]:
    """An isomorphism A -> B as a Homomorphism, or None."""
    if A.order > ISO_ORDER_CAP or B.order > ISO_ORDER_CAP:
        raise CapExceeded(f"isomorphism test capped at order {ISO_ORDER_CAP}")
    if A.order != B.order:
        return None
    if _quick_invariants(A) != _quick_invariants(B):
        return None

    a_class_size = {x: len(cls) for _, cls in conjugacy_classes(A) for x in cls}
    bucket: dict = {}
    for rep, cls in conjugacy_classes(B):
        key = (rep.order(), len(cls))
        bucket.setdefault(key, []).extend(cls)
    for key in bucket:
        bucket[key].sort()

    gens = A._bfs_generators
    base_table = {A.identity: B.identity}
    base_used = {B.identity}

    def search(i, table, used, pairs, images):
        if i == len(gens):
            if len(table) == A.order:
                return Homomorphism(A, B, images)
            return None
        g = gens[i]
        for h in bucket.get((g.order(), a_class_size[g]), ()):
            got = _extend_table(table, used, pairs, (g, h))
            if got is None:
                continue
            found = search(i + 1, got[0], got[1], pairs + [(g, h)], images + [h])
            if found is not None:
                return found
        return None

    return search(0, base_table, base_used, [], [])


def is_isomorphic(A: Group, B: Group) -> bool:
    return isomorphism(A, B) is not None
