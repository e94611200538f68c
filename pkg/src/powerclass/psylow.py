"""Sylow subgroups, p-cores, and the upper p-series."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import BadParameter, ConsistencyError
from .groups import (
    Group,
    SeriesChain,
    SeriesKind,
    Subgroup,
    _Closure,
    conjugacy_classes,
    normal_closure,
    normalizer,
    quotient,
    span,
)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise BadParameter(f"{p} is not prime")


def p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def sylow_p(G: Group, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown by normalizer climbing.

    Starts from a cyclic subgroup of order p and repeatedly adjoins a
    p-element of the normalizer; the extension stays a p-group because the
    quotient by the (normalized) current subgroup is cyclic of p-power order.
    Deterministic: all scans run in sorted element order.
    """
    _require_prime(p)
    key = ("sylow", p)
    got = G._cache.get(key)
    if got is not None:
        return got
    target = p_part(G.order, p)
    if target == 1:
        out = G.trivial_subgroup()
        G._cache[key] = out
        return out
    starter = None
    for x in G.sorted_elements():
        k = x.order()
        if k % p == 0:
            starter = x ** (k // p)
            break
    if starter is None:
        raise ConsistencyError("no element of order p despite p | |G|")
    H = span(G, [starter])
    while H.order < target:
        N = normalizer(G, H)
        grown = None
        for y in N.sorted_members():
            if y in H.members:
                continue
            if is_p_power(y.order(), p):
                grown = span(G, H.generators + (y,))
                break
        if grown is None or grown.order <= H.order:
            raise ConsistencyError("normalizer climb stalled below Sylow order")
        H = grown
    if H.order != target:
        raise ConsistencyError("Sylow climb overshot the p-part")
    G._cache[key] = H
    return H


def p_core(G: Group, p: int) -> Subgroup:
    """O_p(G): the largest normal p-subgroup.

    Generated by every element whose normal closure is a p-group; one
    closure per conjugacy class suffices.
    """
    _require_prime(p)
    key = ("p_core", p)
    got = G._cache.get(key)
    if got is not None:
        return got
    if is_p_power(G.order, p):
        out = G.full_subgroup()
    elif G.order % p != 0:
        out = G.trivial_subgroup()
    else:
        cl = _Closure(G.identity, len(G.elements))
        for rep, _cls in conjugacy_classes(G):
            K = normal_closure(G, (rep,))
            if is_p_power(K.order, p):
                for g in K.generators:
                    cl.add_generator(g)
        out = Subgroup(G, frozenset(cl.elements), tuple(cl.generators))
        if not is_p_power(out.order, p):
            raise ConsistencyError("product of normal p-subgroups is not a p-group")
    G._cache[key] = out
    return out


def pprime_core(G: Group, p: int) -> Subgroup:
    """O_{p'}(G): the largest normal subgroup of order coprime to p."""
    _require_prime(p)
    key = ("pprime_core", p)
    got = G._cache.get(key)
    if got is not None:
        return got
    if G.order % p != 0:
        out = G.full_subgroup()
    elif is_p_power(G.order, p):
        out = G.trivial_subgroup()
    else:
        cl = _Closure(G.identity, len(G.elements))
        for rep, _cls in conjugacy_classes(G):
            K = normal_closure(G, (rep,))
            if K.order % p != 0:
                for g in K.generators:
                    cl.add_generator(g)
        out = Subgroup(G, frozenset(cl.elements), tuple(cl.generators))
        if out.order % p == 0:
            raise ConsistencyError("product of normal p'-subgroups has order divisible by p")
    G._cache[key] = out
    return out


@dataclass(frozen=True)
class PSeriesResult:
    """Upper p-series of a group: strictly increasing terms plus factor kinds.

    `factor_kinds[i]` says whether terms[i+1]/terms[i] is a p-group ("p") or
    a p'-group ("p'"); non-growing steps of the alternation are omitted.
    """

    prime: int
    chain: SeriesChain
    factor_kinds: tuple
    p_solvable: bool
    p_length: Optional[int]


def upper_p_series(G: Group, p: int) -> PSeriesResult:
    """1 <= O_{p'} <= O_{p'p} <= ... computed by alternating core pullbacks."""
    _require_prime(p)
    key = ("upper_p_series", p)
    got = G._cache.get(key)
    if got is not None:
        return got
    terms = [G.trivial_subgroup()]
    kinds = []
    while terms[-1].order < G.order:
        grew = False
        for kind in ("p'", "p"):
            if terms[-1].is_trivial:
                core = pprime_core(G, p) if kind == "p'" else p_core(G, p)
                lifted = core
            else:
                Q, pi = quotient(G, terms[-1])
                core = pprime_core(Q, p) if kind == "p'" else p_core(Q, p)
                lifted = pi.preimage_of(core)
            if core.order > 1:
                terms.append(lifted)
                kinds.append(kind)
                grew = True
        if not grew:
            break
    solvable = terms[-1].order == G.order
    plen = sum(1 for k in kinds if k == "p") if solvable else None
    out = PSeriesResult(
        prime=p,
        chain=SeriesChain(SeriesKind.P_SERIES, tuple(terms)),
        factor_kinds=tuple(kinds),
        p_solvable=solvable,
        p_length=plen,
    )
    G._cache[key] = out
    return out


def is_p_solvable(G: Group, p: int) -> bool:
    return upper_p_series(G, p).p_solvable


def p_length(G: Group, p: int) -> Optional[int]:
    """Number of p-factors in the upper p-series, or None if not p-solvable."""
    return upper_p_series(G, p).p_length


def is_p_nilpotent(G: Group, p: int) -> bool:
    """True iff G has a normal p-complement."""
    _require_prime(p)
    return pprime_core(G, p).order * p_part(G.order, p) == G.order
