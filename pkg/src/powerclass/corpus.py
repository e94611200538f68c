"""The shipped group corpus and its JSON serialization.

Corpus files carry only what is needed to rebuild each group exactly: a
label, the permutation degree, the generator image arrays in construction
order, and a small string-valued metadata map (primes of interest and the
constructor call that produced the group).  Everything else — tags such as
``2-nilpotent`` or ``powerful-3`` — is recomputed from the group itself and
never trusted from the file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from .constructions import (
    affine_frobenius,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    extraspecial_p3,
    gl23,
    quaternion,
    semidihedral,
    sl23,
    symmetric,
    wreath_cpcp,
)
from .errors import BadParameter, ParseError, UnknownGroup
from .groups import Group, Permutation, derived_subgroup, generate, nilpotency_class
from .powerful import is_powerful
from .psylow import is_p_nilpotent, is_p_power, is_p_solvable, is_prime

SHIPPED_CORPUS_PATH = Path(__file__).parent / "data" / "corpus.json"

SCHEMA_VERSION = 1


# --- tags ---------------------------------------------------------------------


def _is_maximal_class(G: Group, p: int) -> bool:
    n = 0
    order = G.order
    while order % p == 0:
        order //= p
        n += 1
    if order != 1 or n < 2:
        return False
    return nilpotency_class(G) == n - 1


def tag_checkers(p: int) -> Dict[str, Callable[[Group], bool]]:
    """Predicates backing each prime-qualified tag."""
    return {
        f"{p}-group": lambda G: is_p_power(G.order, p),
        f"{p}-solvable": lambda G: is_p_solvable(G, p),
        f"{p}-nilpotent": lambda G: is_p_nilpotent(G, p),
        f"powerful-{p}": lambda G: is_p_power(G.order, p) and is_powerful(G, p),
        f"maximal-class-{p}": lambda G: _is_maximal_class(G, p),
    }


def compute_tags(G: Group, primes: Sequence[int]) -> frozenset:
    key = ("tags", tuple(primes))
    cached = G._cache.get(key)
    if cached is not None:
        return cached
    tags = set()
    if derived_subgroup(G).is_trivial:
        tags.add("abelian")
    for p in primes:
        for tag, check in tag_checkers(p).items():
            if check(G):
                tags.add(tag)
    out = frozenset(tags)
    G._cache[key] = out
    return out


@dataclass(frozen=True)
class CorpusEntry:
    group: Group
    primes_of_interest: Tuple[int, ...]
    provenance: str

    @property
    def label(self) -> str:
        return self.group.label

    @property
    def tags(self) -> frozenset:
        """Recomputed from the group on first access; never read from disk."""
        return compute_tags(self.group, self.primes_of_interest)


def entry(group: Group, primes: Sequence[int], provenance: str) -> CorpusEntry:
    for p in primes:
        if not is_prime(p):
            raise BadParameter(f"prime of interest {p} is not prime")
        if group.order % p != 0:
            raise BadParameter(f"{p} does not divide |{group.label or 'G'}| = {group.order}")
    return CorpusEntry(group=group, primes_of_interest=tuple(primes), provenance=provenance)


# --- serialization ------------------------------------------------------------


def _entry_payload(e: CorpusEntry) -> dict:
    return {
        "label": e.group.label,
        "degree": e.group.degree,
        "generators": [list(g.images) for g in e.group.generators],
        "metadata": {
            "primes": ",".join(str(p) for p in e.primes_of_interest),
            "provenance": e.provenance,
        },
    }


def save(entries: Iterable[CorpusEntry], path) -> None:
    payload = {"schema": SCHEMA_VERSION, "groups": [_entry_payload(e) for e in entries]}
    Path(path).write_text(json.dumps(payload, indent=2) + "\n")


def _parse_group(raw: object, where: str) -> Tuple[Group, dict]:
    if not isinstance(raw, dict):
        raise ParseError(f"{where}: expected an object, got {type(raw).__name__}")
    label = raw.get("label")
    if not isinstance(label, str) or not label:
        raise ParseError(f"{where}.label: expected a nonempty string")
    degree = raw.get("degree")
    if not isinstance(degree, int) or degree < 1:
        raise ParseError(f"{where}.degree: expected a positive integer")
    gens_raw = raw.get("generators")
    if not isinstance(gens_raw, list):
        raise ParseError(f"{where}.generators: expected a list")
    gens: List[Permutation] = []
    for i, images in enumerate(gens_raw):
        field = f"{where}.generators[{i}]"
        if not isinstance(images, list) or not all(isinstance(x, int) for x in images):
            raise ParseError(f"{field}: expected a list of integers")
        if len(images) != degree:
            raise ParseError(f"{field}: length {len(images)} does not match degree {degree}")
        if sorted(images) != list(range(degree)):
            raise ParseError(f"{field}: image array is not a bijection on 0..{degree - 1}")
        gens.append(Permutation(tuple(images)))
    metadata = raw.get("metadata", {})
    if not isinstance(metadata, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in metadata.items()
    ):
        raise ParseError(f"{where}.metadata: expected a string-to-string map")
    return generate(degree, gens, label=label), metadata


def _parse_primes(text: str, where: str) -> Tuple[int, ...]:
    if not text:
        return ()
    primes = []
    for piece in text.split(","):
        try:
            p = int(piece)
        except ValueError:
            raise ParseError(f"{where}.metadata.primes: bad integer {piece!r}") from None
        if not is_prime(p):
            raise ParseError(f"{where}.metadata.primes: {p} is not prime")
        primes.append(p)
    return tuple(primes)


def load(path) -> List[CorpusEntry]:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from None
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(payload, dict):
        raise ParseError(f"{path}: top level must be an object")
    if payload.get("schema") != SCHEMA_VERSION:
        raise ParseError(f"{path}: unsupported schema {payload.get('schema')!r}")
    raw_groups = payload.get("groups")
    if not isinstance(raw_groups, list):
        raise ParseError(f"{path}: groups: expected a list")
    entries = []
    for i, raw in enumerate(raw_groups):
        where = f"groups[{i}]"
        group, metadata = _parse_group(raw, where)
        primes = _parse_primes(metadata.get("primes", ""), where)
        provenance = metadata.get("provenance", "")
        entries.append(CorpusEntry(group=group, primes_of_interest=primes, provenance=provenance))
    return entries


def load_shipped() -> List[CorpusEntry]:
    return load(SHIPPED_CORPUS_PATH)


def find_entry(entries: Iterable[CorpusEntry], label: str) -> CorpusEntry:
    for e in entries:
        if e.group.label == label:
            return e
    raise UnknownGroup(f"no corpus entry labeled {label!r}")


# --- the shipped corpus --------------------------------------------------------


def build_shipped_corpus() -> List[CorpusEntry]:
    """Construct the default corpus in its canonical order.

    Coverage notes: C_p wr C_p for p in {2, 3} feed the center-series
    comparison; powerful-Sylow solvable examples exist for each of p = 2
    (AGL(1,8)), p = 3 (AGL(1,9), M27 x C2), and p = 5 (D10, C5 x S3); S4 and
    SL(2,3) give the sharp p-length and Q8-Sylow cases; the p-nilpotent
    direct products keep the strong-fusion rows nonvacuous; C5 wr C5 is the
    large stress entry and deliberately carries no ambient-group rows.
    """
    rows = [
        # 2-groups
        (cyclic(4), (2,), "cyclic(4)"),
        (cyclic(8), (2,), "cyclic(8)"),
        (elementary_abelian(2, 2), (2,), "elementary_abelian(2, 2)"),
        (elementary_abelian(2, 3), (2,), "elementary_abelian(2, 3)"),
        (direct_product(cyclic(4), cyclic(2)), (2,), "direct_product(cyclic(4), cyclic(2))"),
        (direct_product(cyclic(4), cyclic(4)), (2,), "direct_product(cyclic(4), cyclic(4))"),
        (dihedral(8), (2,), "dihedral(8)"),
        (quaternion(8), (2,), "quaternion(8)"),
        (dihedral(16), (2,), "dihedral(16)"),
        (quaternion(16), (2,), "quaternion(16)"),
        (semidihedral(16), (2,), "semidihedral(16)"),
        (wreath_cpcp(2), (2,), "wreath_cpcp(2)"),
        (direct_product(dihedral(8), cyclic(2)), (2,), "direct_product(dihedral(8), cyclic(2))"),
        # 3-groups
        (cyclic(9), (3,), "cyclic(9)"),
        (cyclic(27), (3,), "cyclic(27)"),
        (elementary_abelian(3, 2), (3,), "elementary_abelian(3, 2)"),
        (extraspecial_p3(3, "p"), (3,), "extraspecial_p3(3, 'p')"),
        (extraspecial_p3(3, "p2"), (3,), "extraspecial_p3(3, 'p2')"),
        (wreath_cpcp(3), (3,), "wreath_cpcp(3)"),
        # 5-groups (the wreath product is the stress entry)
        (cyclic(25), (5,), "cyclic(25)"),
        (elementary_abelian(5, 2), (5,), "elementary_abelian(5, 2)"),
        (extraspecial_p3(5, "p"), (5,), "extraspecial_p3(5, 'p')"),
        (wreath_cpcp(5), (5,), "wreath_cpcp(5)"),
        # solvable and almost-simple ambient groups
        (symmetric(3), (2, 3), "symmetric(3)"),
        (symmetric(4), (2, 3), "symmetric(4)"),
        (symmetric(5), (2, 3, 5), "symmetric(5)"),
        (symmetric(6), (2, 3, 5), "symmetric(6)"),
        (alternating(4), (2, 3), "alternating(4)"),
        (alternating(5), (2, 3, 5), "alternating(5)"),
        (sl23(), (2, 3), "sl23()"),
        (gl23(), (2, 3), "gl23()"),
        (affine_frobenius(5), (2, 5), "affine_frobenius(5)"),
        (affine_frobenius(7), (2, 3, 7), "affine_frobenius(7)"),
        (affine_frobenius(8), (2, 7), "affine_frobenius(8)"),
        (affine_frobenius(9), (2, 3), "affine_frobenius(9)"),
        (dihedral(10), (2, 5), "dihedral(10)"),
        (dihedral(12), (2, 3), "dihedral(12)"),
        (cyclic(12), (2, 3), "cyclic(12)"),
        (cyclic(30), (2, 3, 5), "cyclic(30)"),
        # p-nilpotent examples for the fusion rows
        (direct_product(dihedral(8), cyclic(3)), (2, 3), "direct_product(dihedral(8), cyclic(3))"),
        (direct_product(quaternion(8), cyclic(3)), (2, 3), "direct_product(quaternion(8), cyclic(3))"),
        (direct_product(cyclic(5), symmetric(3)), (2, 3, 5), "direct_product(cyclic(5), symmetric(3))"),
        (
            direct_product(extraspecial_p3(3, "p2"), cyclic(2)),
            (2, 3),
            "direct_product(extraspecial_p3(3, 'p2'), cyclic(2))",
        ),
    ]
    entries = [entry(group, primes, provenance) for group, primes, provenance in rows]
    labels = [e.group.label for e in entries]
    if len(set(labels)) != len(labels):
        dupes = sorted({x for x in labels if labels.count(x) > 1})
        raise BadParameter(f"duplicate corpus labels: {dupes}")
    return entries
