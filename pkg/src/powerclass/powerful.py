"""Powerfully embedded subgroups, the eta functor, and potent filtrations.

A normal subgroup N of a finite p-group P is *powerfully embedded* when
[N, P] <= N^{2p} (the subgroup generated by 2p-th powers; for odd p this
coincides with N^p, and for p = 2 it is N^4).  The largest such subgroup
eta(P) always exists because a product of powerfully embedded subgroups is
again powerfully embedded; it contains the center.

An *eta-series* is an ascending chain of normal subgroups whose successive
quotients are powerfully embedded in the corresponding quotient of P.  The
shortest length of such a chain reaching N is the powerful height of N; the
powerful height of P itself is its powerful class.  The greedy chain that
always takes the largest admissible next term is provably fastest, which is
what makes these invariants computable; a brute-force lattice search is kept
alongside as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    BadParameter,
    ConsistencyError,
    GreedyStalled,
    HypothesisViolated,
    NotPGroup,
    NotPowerfullyEmbedded,
)
from .groups import (
    AmbientMismatch,
    Group,
    SeriesChain,
    SeriesKind,
    Subgroup,
    _require_normal,
    center,
    commutator_subgroup,
    is_normal,
    iterated_commutator,
    join,
    normal_subgroups,
    normal_subgroups_within,
    power_subgroup,
    quotient,
)
from .psylow import _require_prime, is_p_power


def _require_p_group(P: Group, p: int) -> None:
    _require_prime(p)
    if not is_p_power(P.order, p):
        raise NotPGroup(f"|{P!r}| = {P.order} is not a power of {p}")


def is_powerfully_embedded(P: Group, N: Subgroup, p: int) -> bool:
    """[N, P] <= N^{2p}, with N normal in P.

    Non-normal N simply fails the definition, so this returns False rather
    than raising.
    """
    _require_p_group(P, p)
    if N.ambient is not P:
        raise AmbientMismatch("subgroup of a different group")
    key = ("pe", p, N.members)
    got = P._cache.get(key)
    if got is None:
        if not is_normal(P, N):
            got = False
        else:
            com = commutator_subgroup(N, P.full_subgroup())
            if com.is_trivial:
                got = True
            else:
                got = com.members <= power_subgroup(N, 2 * p).members
        P._cache[key] = got
    return got


def is_powerful(P: Group, p: int) -> bool:
    """P is powerful iff it is powerfully embedded in itself."""
    return is_powerfully_embedded(P, P.full_subgroup(), p)


def eta_relative(P: Group, bound: Subgroup, p: int) -> Subgroup:
    """Largest powerfully embedded subgroup of P contained in `bound`.

    `bound` must be normal.  Every powerfully embedded subgroup inside the
    bound is normal, so scanning the normal lattice below the bound and
    joining the hits is exhaustive; the join itself stays powerfully
    embedded, which the postcondition re-checks.
    """
    _require_p_group(P, p)
    _require_normal(P, bound)
    key = ("eta_rel", p, bound.members)
    got = P._cache.get(key)
    if got is not None:
        return got
    if is_powerfully_embedded(P, bound, p):
        out = bound
    else:
        out = P.trivial_subgroup()
        for N in normal_subgroups_within(P, bound):
            if N.members <= out.members:
                continue
            if is_powerfully_embedded(P, N, p):
                out = join(out, N)
        if not is_powerfully_embedded(P, out, p):
            raise ConsistencyError("join of powerfully embedded subgroups lost the property")
    P._cache[key] = out
    return out


def eta(P: Group, p: int) -> Subgroup:
    """The largest powerfully embedded subgroup of P."""
    out = eta_relative(P, P.full_subgroup(), p)
    if not center(P).members <= out.members:
        raise ConsistencyError("eta does not contain the center")
    return out


def upper_eta_series(P: Group, p: int) -> SeriesChain:
    """1 = E_0 <= E_1 <= ... <= E_m = P with E_{i+1}/E_i = eta(P/E_i)."""
    _require_p_group(P, p)
    key = ("upper_eta", p)
    got = P._cache.get(key)
    if got is not None:
        return got
    terms = [P.trivial_subgroup()]
    while terms[-1].order < P.order:
        if terms[-1].is_trivial:
            nxt = eta(P, p)
        else:
            Q, pi = quotient(P, terms[-1])
            nxt = pi.preimage_of(eta(Q, p))
        if nxt.order <= terms[-1].order:
            raise ConsistencyError("eta of a nontrivial p-group must be nontrivial")
        terms.append(nxt)
    out = SeriesChain(SeriesKind.ETA, tuple(terms))
    P._cache[key] = out
    return out


def powerful_class(P: Group, p: int) -> int:
    """Length of the upper eta-series; 0 only for the trivial group."""
    return upper_eta_series(P, p).steps


def has_small_powerful_class(P: Group, p: int) -> bool:
    return powerful_class(P, p) < p


def greedy_eta_chain(P: Group, N: Subgroup, p: int) -> SeriesChain:
    """Fastest-growing eta-series from 1 to N (N normal in P).

    Each step adjoins the largest subgroup of the remaining quotient of N
    that is powerfully embedded in the corresponding quotient of P.  Steps
    are always nontrivial because a nontrivial normal subgroup meets the
    center, and central subgroups are powerfully embedded.
    """
    _require_p_group(P, p)
    _require_normal(P, N)
    terms = [P.trivial_subgroup()]
    while terms[-1].members != N.members:
        if terms[-1].is_trivial:
            nxt = eta_relative(P, N, p)
        else:
            Q, pi = quotient(P, terms[-1])
            nxt = pi.preimage_of(eta_relative(Q, pi.image_of(N), p))
        if nxt.order <= terms[-1].order:
            raise GreedyStalled(f"no powerfully embedded subgroup left below {N!r}")
        terms.append(nxt)
    return SeriesChain(SeriesKind.ETA, tuple(terms))


def powerful_height(P: Group, N: Subgroup, p: int) -> int:
    """Shortest eta-series length reaching N; greedy chains realize it."""
    return greedy_eta_chain(P, N, p).steps


def brute_force_pwh(P: Group, N: Subgroup, p: int) -> int:
    """Shortest-path search over the whole normal lattice.

    Deliberately independent of the greedy computation: breadth-first over
    normal subgroups, stepping from A to B whenever B/A is powerfully
    embedded in P/A.  Exponential in lattice size; test-scale groups only.
    """
    _require_p_group(P, p)
    _require_normal(P, N)
    key = ("pwh_map", p)
    dist = P._cache.get(key)
    if dist is None:
        lattice = normal_subgroups(P)
        dist = {P.trivial_subgroup().members: 0}
        frontier = [P.trivial_subgroup()]
        while frontier:
            nxt = []
            for A in frontier:
                if A.is_trivial:
                    Q, pi = P, None
                else:
                    Q, pi = quotient(P, A)
                for B in lattice:
                    if B.members in dist or not A.members < B.members:
                        continue
                    img = B if pi is None else pi.image_of(B)
                    if is_powerfully_embedded(Q, img, p):
                        dist[B.members] = dist[A.members] + 1
                        nxt.append(B)
            frontier = nxt
        P._cache[key] = dist
    if N.members not in dist:
        raise ConsistencyError("normal subgroup unreachable by eta-series")
    return dist[N.members]


@dataclass(frozen=True)
class EtaProfile:
    """Everything the eta functor says about one p-group."""

    prime: int
    series: SeriesChain
    powerful_class: int
    small_powerful_class: bool
    is_powerful: bool


def eta_profile(P: Group, p: int) -> EtaProfile:
    series = upper_eta_series(P, p)
    pwc = series.steps
    powerful = is_powerful(P, p)
    if powerful != (pwc <= 1):
        raise ConsistencyError("powerful iff eta-series has at most one step")
    return EtaProfile(
        prime=p,
        series=series,
        powerful_class=pwc,
        small_powerful_class=pwc < p,
        is_powerful=powerful,
    )


@dataclass(frozen=True)
class CheckResult:
    """Verdict of a series verification; falsy when some condition failed."""

    ok: bool
    first_bad_index: Optional[int] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _terms_of(chain) -> tuple:
    return chain.terms if isinstance(chain, SeriesChain) else tuple(chain)


def verify_eta_series(P: Group, chain, p: int) -> CheckResult:
    """Check an ascending chain is an eta-series: starts at 1, all terms
    normal, each factor powerfully embedded in the matching quotient."""
    _require_p_group(P, p)
    terms = _terms_of(chain)
    if not terms or not terms[0].is_trivial:
        return CheckResult(False, 0, "series must start at the trivial subgroup")
    for i, term in enumerate(terms):
        if not is_normal(P, term):
            return CheckResult(False, i, "term is not normal")
    for i in range(len(terms) - 1):
        lo, hi = terms[i], terms[i + 1]
        if not lo.members <= hi.members:
            return CheckResult(False, i + 1, "series is not ascending")
        if lo.is_trivial:
            ok = is_powerfully_embedded(P, hi, p)
        else:
            Q, pi = quotient(P, lo)
            ok = is_powerfully_embedded(Q, pi.image_of(hi), p)
        if not ok:
            return CheckResult(False, i + 1, "factor is not powerfully embedded")
    return CheckResult(True)


def verify_potent_filtration(P: Group, chain, p: int, t: Optional[int] = None) -> CheckResult:
    """Check a descending chain N = M_1 >= ... >= M_k = 1 is a potent
    filtration of type t: [M_i, P] <= M_{i+1} and [M_i, P, ..., P] (t times)
    <= M_{i+1}^p for every step."""
    _require_p_group(P, p)
    terms = _terms_of(chain)
    if t is None:
        if not isinstance(chain, SeriesChain) or chain.type_t is None:
            raise BadParameter("filtration type t is required")
        t = chain.type_t
    if t < 1:
        raise BadParameter("filtration type must be >= 1")
    if not terms or not terms[-1].is_trivial:
        return CheckResult(False, len(terms) - 1 if terms else 0, "filtration must end at the trivial subgroup")
    for i, term in enumerate(terms):
        if not is_normal(P, term):
            return CheckResult(False, i, "term is not normal")
    full = P.full_subgroup()
    for i in range(len(terms) - 1):
        hi, lo = terms[i], terms[i + 1]
        if not lo.members <= hi.members:
            return CheckResult(False, i + 1, "filtration is not descending")
        step = commutator_subgroup(hi, full)
        if not step.members <= lo.members:
            return CheckResult(False, i, "commutator step leaves the next term")
        deep = iterated_commutator(hi, full, t)
        if not deep.members <= power_subgroup(lo, p).members:
            return CheckResult(False, i, "iterated commutator exceeds p-th powers of the next term")
    return CheckResult(True)


def _collapse_runs(terms: Sequence[Subgroup]) -> tuple:
    # Dropping a term equal to its predecessor keeps every filtration
    # condition: the survivor inherits the dropped term's constraints verbatim.
    out = []
    for term in terms:
        if not out or out[-1].members != term.members:
            out.append(term)
    return tuple(out)


def potent_filtration_p2(P: Group, N: Subgroup) -> SeriesChain:
    """For powerfully embedded N at p = 2: N >= N^2 >= N^4 >= ... is a
    potent filtration of type 1."""
    if not is_powerfully_embedded(P, N, 2):
        raise NotPowerfullyEmbedded("the doubling filtration needs a powerfully embedded start")
    terms = [N]
    k = 2
    while not terms[-1].is_trivial:
        terms.append(power_subgroup(N, k))
        k *= 2
    out = SeriesChain(SeriesKind.POTENT, _collapse_runs(terms), type_t=1)
    verdict = verify_potent_filtration(P, out, 2)
    if not verdict:
        raise ConsistencyError(f"doubling filtration failed verification: {verdict.reason}")
    return out


def potent_filtration_odd(P: Group, N: Subgroup, p: int) -> SeriesChain:
    """For p > 3 and N of powerful height below p-1, build a potent
    filtration of type p-2.

    With 1 = N_0 <= ... <= N_k = N a shortest eta-series (k < p-1), the
    recurrence M_1 = N, M_{i+1} = M_i^p N_{p-i-2} descends to 1, reading
    N_j as 1 for j <= 0 and as N for j >= k.  Runs of equal terms are
    collapsed before verification.
    """
    _require_p_group(P, p)
    if p <= 3:
        raise BadParameter("this construction needs p > 3")
    _require_normal(P, N)
    chain = greedy_eta_chain(P, N, p)
    k = chain.steps
    if k >= p - 1:
        raise HypothesisViolated(f"powerful height {k} is not below {p - 1}")

    def padded(j: int) -> Subgroup:
        if j <= 0:
            return P.trivial_subgroup()
        if j >= k:
            return N
        return chain.terms[j]

    terms = [N]
    i = 1
    while not terms[-1].is_trivial:
        terms.append(join(power_subgroup(terms[-1], p), padded(p - i - 2)))
        i += 1
    out = SeriesChain(SeriesKind.POTENT, _collapse_runs(terms), type_t=p - 2)
    verdict = verify_potent_filtration(P, out, p)
    if not verdict:
        raise ConsistencyError(f"odd-p filtration failed verification: {verdict.reason}")
    return out
