"""Constructors for the standard test-bench groups.

Each builder returns a `Group` on a small, explicitly chosen point set and
asserts the expected order, since the generator formulas are easy to get
subtly wrong.  Labels follow the order-based naming convention (D8 is the
dihedral group of order 8).
"""

from __future__ import annotations

from itertools import product
from typing import Optional, Sequence

from .errors import BadParameter, ConsistencyError
from .groups import Group, generate
from .perm import Permutation


def _check_order(G: Group, expected: int) -> Group:
    if G.order != expected:
        raise ConsistencyError(f"{G.label or 'group'}: got order {G.order}, expected {expected}")
    return G


def cyclic(n: int) -> Group:
    if n < 1:
        raise BadParameter("cyclic group needs n >= 1")
    if n == 1:
        return generate(1, [], label="C1")
    images = tuple(range(1, n)) + (0,)
    return _check_order(generate(n, [Permutation(images)], label=f"C{n}"), n)


def elementary_abelian(p: int, k: int) -> Group:
    if k < 1:
        raise BadParameter("elementary abelian group needs k >= 1")
    gens = []
    for i in range(k):
        images = list(range(p * k))
        for j in range(p):
            images[i * p + j] = i * p + (j + 1) % p
        gens.append(Permutation(tuple(images)))
    return _check_order(generate(p * k, gens, label=f"E{p ** k}"), p**k)


def dihedral(order: int) -> Group:
    """Dihedral group named by order: dihedral(8) acts on the square."""
    if order % 2 != 0 or order < 6:
        raise BadParameter("dihedral group needs an even order >= 6")
    n = order // 2
    rot = Permutation(tuple(range(1, n)) + (0,))
    flip = Permutation(tuple((-i) % n for i in range(n)))
    return _check_order(generate(n, [rot, flip], label=f"D{order}"), order)


def quaternion(order: int) -> Group:
    """Generalized quaternion group of order 8 or 16.

    Points are the elements a^i b^j (i mod n, j mod 2) indexed i + n*j,
    permuted by right multiplication, using b^2 = a^{n/2} and a^b = a^{-1}.
    """
    if order not in (8, 16):
        raise BadParameter("quaternion group is supported for orders 8 and 16")
    n = order // 2
    a_images = []
    b_images = []
    for j in range(2):
        for i in range(n):
            shift = 1 if j == 0 else -1
            a_images.append((i + shift) % n + n * j)
            if j == 0:
                b_images.append(i + n)
            else:
                b_images.append((i + n // 2) % n)
    a = Permutation(tuple(a_images[i + n * j] for j in range(2) for i in range(n)))
    b = Permutation(tuple(b_images[i + n * j] for j in range(2) for i in range(n)))
    return _check_order(generate(order, [a, b], label=f"Q{order}"), order)


def semidihedral(order: int) -> Group:
    if order != 16:
        raise BadParameter("semidihedral group is supported for order 16")
    a = Permutation(tuple(range(1, 8)) + (0,))
    b = Permutation(tuple((3 * i) % 8 for i in range(8)))
    return _check_order(generate(8, [a, b], label="SD16"), 16)


def extraspecial_p3(p: int, exponent: str = "p") -> Group:
    """The two extraspecial groups of order p^3 for odd p.

    exponent "p": Heisenberg group acting on pairs (u, v) indexed p*u + v.
    exponent "p2": the modular group <x -> x+1, x -> (1+p)x> on p^2 points.
    """
    if p < 3 or p % 2 == 0:
        raise BadParameter("extraspecial p^3 constructions need an odd prime")
    if exponent == "p":
        deg = p * p
        a = Permutation(tuple((((u + 1) % p) * p + v) for u in range(p) for v in range(p)))
        b = Permutation(tuple((u * p + (v + u) % p) for u in range(p) for v in range(p)))
        return _check_order(generate(deg, [a, b], label=f"H{p ** 3}"), p**3)
    if exponent == "p2":
        deg = p * p
        a = Permutation(tuple((x + 1) % deg for x in range(deg)))
        b = Permutation(tuple(((1 + p) * x) % deg for x in range(deg)))
        return _check_order(generate(deg, [a, b], label=f"M{p ** 3}"), p**3)
    raise BadParameter('exponent must be "p" or "p2"')


def wreath_cpcp(p: int) -> Group:
    """C_p wr C_p in its natural action on p^2 points (p blocks of size p)."""
    if p < 2:
        raise BadParameter("wreath construction needs a prime p >= 2")
    base = Permutation(tuple(list(range(1, p)) + [0] + list(range(p, p * p))))
    top = Permutation(tuple((x + p) % (p * p) for x in range(p * p)))
    return _check_order(generate(p * p, [base, top], label=f"C{p}wrC{p}"), p ** (p + 1))


def symmetric(n: int) -> Group:
    if not 1 <= n <= 7:
        raise BadParameter("symmetric group supported for 1 <= n <= 7")
    if n == 1:
        return generate(1, [], label="S1")
    gens = [Permutation((1, 0) + tuple(range(2, n)))]
    if n > 2:
        gens.append(Permutation(tuple(range(1, n)) + (0,)))
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    return _check_order(generate(n, gens, label=f"S{n}"), fact)


def alternating(n: int) -> Group:
    if not 3 <= n <= 7:
        raise BadParameter("alternating group supported for 3 <= n <= 7")
    three = Permutation((1, 2, 0) + tuple(range(3, n)))
    if n == 3:
        gens = [three]
    elif n % 2 == 1:
        gens = [three, Permutation(tuple(range(1, n)) + (0,))]
    else:
        gens = [three, Permutation((0,) + tuple(range(2, n)) + (1,))]
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    return _check_order(generate(n, gens, label=f"A{n}"), fact // 2)


def direct_product(*factors: Group, label: Optional[str] = None) -> Group:
    """External direct product acting on the disjoint union of point sets."""
    if not factors:
        raise BadParameter("direct product needs at least one factor")
    degree = sum(G.degree for G in factors)
    gens = []
    offset = 0
    for G in factors:
        for g in G.generators:
            images = list(range(degree))
            for x, y in enumerate(g.images):
                images[offset + x] = offset + y
            gens.append(Permutation(tuple(images)))
        offset += G.degree
    if label is None:
        label = "x".join(G.label or "?" for G in factors)
    expected = 1
    for G in factors:
        expected *= G.order
    return _check_order(generate(degree, gens, label=label), expected)


# --- matrix groups over F_3 -------------------------------------------------


def _f3_vector_points() -> list:
    return [v for v in product(range(3), repeat=2) if v != (0, 0)]


def _matrix_perm(m: Sequence[Sequence[int]]) -> Permutation:
    pts = _f3_vector_points()
    index = {v: i for i, v in enumerate(pts)}
    images = []
    for x, y in pts:
        images.append(index[((m[0][0] * x + m[0][1] * y) % 3, (m[1][0] * x + m[1][1] * y) % 3)])
    return Permutation(tuple(images))


def sl23() -> Group:
    gens = [_matrix_perm([[0, 2], [1, 0]]), _matrix_perm([[1, 1], [0, 1]])]
    return _check_order(generate(8, gens, label="SL(2,3)"), 24)


def gl23() -> Group:
    gens = [_matrix_perm([[0, 2], [1, 0]]), _matrix_perm([[1, 1], [0, 1]]), _matrix_perm([[1, 0], [0, 2]])]
    return _check_order(generate(8, gens, label="GL(2,3)"), 48)


# --- one-dimensional affine groups ------------------------------------------


def _poly_divmod(num: tuple, den: tuple, p: int) -> tuple:
    num = list(num)
    deg_d = len(den) - 1
    lead_inv = pow(den[-1], -1, p)
    quo = [0] * max(0, len(num) - deg_d)
    while len(num) - 1 >= deg_d and any(num):
        shift = len(num) - 1 - deg_d
        coef = (num[-1] * lead_inv) % p
        quo[shift] = coef
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - coef * c) % p
        while len(num) > 1 and num[-1] == 0:
            num.pop()
    return tuple(quo), tuple(num)


def _poly_mulmod(a: tuple, b: tuple, mod: tuple, p: int) -> tuple:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    _, rem = _poly_divmod(tuple(out), mod, p)
    rem = list(rem) + [0] * (len(mod) - 1 - len(rem))
    return tuple(rem[: len(mod) - 1])


def _first_irreducible(p: int, k: int) -> tuple:
    # Lex-first monic irreducible of degree k, by trial division against all
    # lower-degree monic polynomials.
    for tail in product(range(p), repeat=k):
        cand = tuple(tail) + (1,)
        if cand[0] == 0:
            continue
        reducible = False
        for d in range(1, k // 2 + 1):
            for dtail in product(range(p), repeat=d):
                den = tuple(dtail) + (1,)
                _, rem = _poly_divmod(cand, den, p)
                if not any(rem):
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            return cand
    raise ConsistencyError(f"no irreducible of degree {k} over F_{p}")


def _prime_power(q: int) -> tuple:
    if q < 2:
        raise BadParameter("field size must be a prime power >= 2")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q, 1
    k = 0
    n = q
    while n % p == 0:
        n //= p
        k += 1
    if n != 1:
        raise BadParameter(f"{q} is not a prime power")
    return p, k


def affine_frobenius(q: int) -> Group:
    """AGL(1, q): all maps x -> ax + b over the field with q elements.

    Field elements are encoded as integers via little-endian base-p digits;
    for k > 1 arithmetic runs modulo the lex-first monic irreducible of
    degree k.  Generators: a translation by 1 and multiplication by a
    primitive element (the first one in numeric order).
    """
    p, k = _prime_power(q)
    if k == 1:
        add_one = Permutation(tuple((x + 1) % p for x in range(p)))
        g = None
        for cand in range(2, p):
            e, n = cand, 1
            while e != 1:
                e = (e * cand) % p
                n += 1
            if n == p - 1:
                g = cand
                break
        if g is None:  # p == 2 or 3: every nonidentity unit is primitive
            g = p - 1
        mul_g = Permutation(tuple((g * x) % p for x in range(p)))
        gens = [add_one] if p == 2 else [add_one, mul_g]
        return _check_order(generate(p, gens, label=f"AGL(1,{p})"), p * (p - 1))

    mod = _first_irreducible(p, k)

    def encode(vec: tuple) -> int:
        out = 0
        for i, d in enumerate(vec):
            out += d * p**i
        return out

    def decode(x: int) -> tuple:
        out = []
        for _ in range(k):
            out.append(x % p)
            x //= p
        return tuple(out)

    one = decode(1)
    add_one = Permutation(
        tuple(encode(tuple((d + o) % p for d, o in zip(decode(x), one))) for x in range(q))
    )
    prim = None
    for cand in range(2, q):
        vec = decode(cand)
        e, n = vec, 1
        while e != one:
            e = _poly_mulmod(e, vec, mod, p)
            n += 1
            if n > q:
                raise ConsistencyError("multiplicative order overflow")
        if n == q - 1:
            prim = vec
            break
    if prim is None:
        raise ConsistencyError(f"no primitive element found in GF({q})")
    mul_g = Permutation(tuple(encode(_poly_mulmod(decode(x), prim, mod, p)) for x in range(q)))
    return _check_order(generate(q, [add_one, mul_g], label=f"AGL(1,{q})"), q * (q - 1))


def regular_embedding(G: Group, label: Optional[str] = None) -> Group:
    """The right regular permutation representation of G on its own elements."""
    elems = G.sorted_elements()
    index = {e: i for i, e in enumerate(elems)}
    gens = [Permutation(tuple(index[e * g] for e in elems)) for g in G.generators]
    out = generate(G.order, gens, label=label or (G.label and f"{G.label}-regular") or "")
    return _check_order(out, G.order)
