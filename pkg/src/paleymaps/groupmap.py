"""Orientably regular maps from finite groups with standard generators.

A group G with generators x (order n) and y (an involution) gives the map
whose darts are the elements of G, with ``sigma(g) = g*x`` and
``alpha(g) = g*y``.  Products ``g*h`` follow function composition: apply
``h`` first, then ``g``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable, Sequence

import numpy as np

from .cmap import MapInvariants, OrientedMap, is_isomorphic, quotient_by_vertex_power
from .ffield import FiniteField, euler_phi, prime_factors, subgroup_of_order
from .paley import AdmissiblePair, PaleyMapSpec, _pair, closed_form_invariants

MAX_GROUP_ORDER = 200_000


class FiniteGroup:
    """A finite group on an explicit element list with a multiplication rule."""

    def __init__(self, elements: Sequence[Hashable], mul: Callable, identity: Hashable):
        self.elements = list(elements)
        if len(self.elements) > MAX_GROUP_ORDER:
            raise ValueError(f"group order {len(self.elements)} exceeds {MAX_GROUP_ORDER}")
        self.index = {g: i for i, g in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("repeated group elements")
        self._mul = mul
        self.identity = identity

    def __len__(self):
        return len(self.elements)

    def mul(self, g, h):
        return self._mul(g, h)

    def power(self, g, k: int):
        if k < 0:
            g, k = self.inverse(g), -k
        result, base = self.identity, g
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def order(self, g) -> int:
        k, h = 1, g
        while h != self.identity:
            h = self.mul(h, g)
            k += 1
        return k

    def inverse(self, g):
        return self.power(g, self.order(g) - 1)

    def right_multiplication(self, x) -> np.ndarray:
        """Permutation g -> g*x on element indices."""
        return np.array([self.index[self.mul(g, x)] for g in self.elements], dtype=np.int64)

    def generated_order(self, gens) -> int:
        """Size of the subgroup generated by ``gens`` (closure under right multiplication)."""
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            g = queue.popleft()
            for x in gens:
                h = self.mul(g, x)
                if h not in seen:
                    seen.add(h)
                    queue.append(h)
        return len(seen)

    def is_central(self, g) -> bool:
        return all(self.mul(g, h) == self.mul(h, g) for h in self.elements)

    def check_axioms(self) -> None:
        """Exhaustive closure/identity/associativity/inverse check; cubic cost."""
        els = self.elements
        for g in els:
            if self.mul(g, self.identity) != g or self.mul(self.identity, g) != g:
                raise ValueError(f"identity fails on {g!r}")
            if not any(self.mul(g, h) == self.identity for h in els):
                raise ValueError(f"{g!r} has no inverse")
            for h in els:
                gh = self.mul(g, h)
                if gh not in self.index:
                    raise ValueError("not closed")
                for k in els:
                    if self.mul(gh, k) != self.mul(g, self.mul(h, k)):
                        raise ValueError("not associative")


@dataclass(frozen=True)
class StandardGenerators:
    x: Hashable
    y: Hashable

    def z(self, G: FiniteGroup):
        return G.inverse(G.mul(self.x, self.y))


def map_from_group(G: FiniteGroup, gens: StandardGenerators) -> OrientedMap:
    y = gens.y
    if y == G.identity or G.mul(y, y) != G.identity:
        raise ValueError("y is not an involution")
    if G.generated_order([gens.x, y]) != len(G):
        raise ValueError("x and y do not generate the group")
    return OrientedMap(G.right_multiplication(gens.x), G.right_multiplication(y))


# ---------------------------------------------------------------------------
# affine groups over a field
# ---------------------------------------------------------------------------

def affine_group(F: FiniteField, n: int) -> FiniteGroup:
    """AGL_1^(n)(q): maps v -> a*v + b with a in the order-n subgroup, stored as (a, b)."""
    S = subgroup_of_order(F, n)
    elements = [(a, b) for b in F.elements() for a in sorted(S.elements)]

    def mul(g, h):
        a, b = g
        c, d = h
        return (F.mul(a, c), F.add(F.mul(a, d), b))

    return FiniteGroup(elements, mul, (1, 0))


def paley_group_generators(spec: PaleyMapSpec) -> tuple[FiniteGroup, StandardGenerators]:
    """A = AGL_1^(n)(q) with x: v -> s*v and y: v -> 1 - v (or v + 1 when p = 2)."""
    F = spec.pair.field
    G = affine_group(F, spec.pair.n)
    y = (1, 1) if F.p == 2 else (F.neg(1), 1)
    return G, StandardGenerators((spec.s, 0), y)


# ---------------------------------------------------------------------------
# dipoles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DipoleSpec:
    k: int
    u: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        if (self.u * self.u - 1) % self.k:
            raise ValueError(f"u = {self.u} does not satisfy u^2 = 1 mod {self.k}")


def dipole_group(spec: DipoleSpec) -> tuple[FiniteGroup, StandardGenerators]:
    k, u = spec.k, spec.u % spec.k
    elements = [(i, eps) for eps in range(2) for i in range(k)]

    def mul(g, h):
        i, eps = g
        j, eta = h
        return ((i + (u if eps else 1) * j) % k, (eps + eta) % 2)

    return FiniteGroup(elements, mul, (0, 0)), StandardGenerators((1 % k, 0), (0, 1))


def dipole_map(spec_or_k, u=None) -> OrientedMap:
    spec = spec_or_k if isinstance(spec_or_k, DipoleSpec) else DipoleSpec(spec_or_k, u)
    return map_from_group(*dipole_group(spec))


def dipole_params(k: int, u: int) -> MapInvariants:
    DipoleSpec(k, u)
    g = math.gcd(u + 1, k)
    return MapInvariants(2, k, g, 2 * k // g, k, (k - g) // 2)


def dipole_solutions(k: int) -> list[int]:
    return [u for u in range(k) if (u * u - 1) % k == 0]


def dipole_count_formula(k: int) -> int:
    nu = len([r for r in prime_factors(k) if r % 2])
    mu = 2 if k % 8 == 0 else 1 if k % 8 == 4 else 0
    return 2 ** (mu + nu)


def dipole_count(k: int) -> int:
    count = len(dipole_solutions(k))
    if count != dipole_count_formula(k):
        raise AssertionError(f"brute-force count {count} disagrees with 2^(mu+nu) for k={k}")
    return count


# ---------------------------------------------------------------------------
# central cyclic coverings of Paley maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoverSpec:
    base: PaleyMapSpec
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        if self.base.pair.p > 2 and self.k % 2 == 0:
            raise ValueError("the split construction needs k odd when p > 2")

    @property
    def face_count(self) -> int:
        """f = nq/m, the number of faces of the base map."""
        return closed_form_invariants(self.base.pair).faces


def central_cover_solutions(q: int, n: int, m: int, k: int) -> list[int]:
    """Residues i mod k with q + f*i = 0 mod k, where f = nq/m."""
    if (n * q) % m:
        raise ValueError(f"m = {m} does not divide nq = {n * q}")
    f = n * q // m
    sols = [i for i in range(k) if (q + f * i) % k == 0]
    expected = math.gcd(f, k) if q % math.gcd(f, k) == 0 else 0
    if len(sols) != expected:
        raise AssertionError(f"{len(sols)} solutions where {expected} were expected")
    return sols


def central_cover_group(spec: CoverSpec) -> tuple[FiniteGroup, StandardGenerators]:
    """Semidirect product F_q x| C_nk with (b,j)(b',j') = (b + s^j b', j + j')."""
    F = spec.base.pair.field
    n, k, s = spec.base.pair.n, spec.k, spec.base.s
    nk = n * k
    spow = [F.pow(s, j) for j in range(nk)]
    elements = [(b, j) for b in F.elements() for j in range(nk)]

    def mul(g, h):
        b, j = g
        c, i = h
        return (F.add(b, F.mul(spow[j], c)), (j + i) % nk)

    G = FiniteGroup(elements, mul, (0, 0))
    x, t = (0, 1 % nk), (1, 0)
    y = t if F.p == 2 else G.mul(G.power(x, nk // 2), t)
    return G, StandardGenerators(x, y)


def build_central_cover(base: PaleyMapSpec, k: int) -> OrientedMap:
    return map_from_group(*central_cover_group(CoverSpec(base, k)))


def cover_face_exponent(spec: CoverSpec) -> int:
    """The i mod k with z^m = x^(i n), m the face valency of the base map."""
    G, gens = central_cover_group(spec)
    n, k = spec.base.pair.n, spec.k
    m = closed_form_invariants(spec.base.pair).type_m
    zm = G.power(gens.z(G), m)
    for i in range(k):
        if G.power(gens.x, i * n) == zm:
            return i
    raise AssertionError("z^m is not in the central subgroup <x^n>")


def cover_invariants_closed_form(q: int, m: int, n: int, k: int, i: int) -> MapInvariants:
    d = math.gcd(i % k, k)
    genus = 1 + Fraction(q, 4 * m) * (k * m * n - 2 * m - 2 * d * n)
    if genus.denominator != 1:
        raise ValueError(f"non-integral genus {genus}: inconsistent parameters")
    faces = Fraction(d * n * q, m)
    return MapInvariants(q, k * n * q // 2, int(faces), k * m // d, k * n, int(genus))


def quotient_check(cover: OrientedMap, base: OrientedMap, k: int) -> bool:
    """Does identifying the fibres of the central subgroup of order k give ``base``?"""
    return is_isomorphic(quotient_by_vertex_power(cover, k), base)


# ---------------------------------------------------------------------------
# generating pairs of AGL_1^(n)(q) up to AGammaL_1(q)
# ---------------------------------------------------------------------------

BRUTE_FORCE_BOUND = 5000


def _conjugator(F: FiniteField, c: int, d: int, gamma: int):
    """Conjugation g -> h g h^-1 by h: v -> c v^(p^gamma) + d, on pairs (a, b)."""

    def act(g):
        a, b = g
        ag = F.frobenius(a, gamma) if gamma else a
        bg = F.frobenius(b, gamma) if gamma else b
        return (ag, F.add(F.mul(c, bg), F.mul(d, F.sub(1, ag))))

    return act


def generating_pairs(q: int, n: int) -> tuple[FiniteGroup, list[tuple]]:
    """All (x, y) in A = AGL_1^(n)(q) with |x| = n, |y| = 2 and <x, y> = A."""
    pair = _pair(q, n)
    if pair.n == 1:
        raise ValueError("n = 1 is excluded")
    if pair.n * pair.q > BRUTE_FORCE_BOUND:
        raise ValueError(f"nq = {pair.n * pair.q} exceeds {BRUTE_FORCE_BOUND}")
    F = pair.field
    A = affine_group(F, pair.n)
    orders = {g: A.order(g) for g in A.elements}
    xs = [g for g in A.elements if orders[g] == pair.n]
    ys = [g for g in A.elements if orders[g] == 2]
    ok = affine_generation_mask(F, xs, ys)
    pairs = [(x, y) for i, x in enumerate(xs) for j, y in enumerate(ys) if ok[i, j]]
    return A, pairs


def _affine_action(F: FiniteField, elements) -> np.ndarray:
    """Row g is the permutation v -> a v + b of GF(q) for g = (a, b)."""
    v = np.arange(F.q)
    return np.stack([F.add_vec(F.mul_vec(np.full(F.q, a), v), np.full(F.q, b))
                     for a, b in elements])


def affine_generation_mask(F: FiniteField, xs, ys) -> np.ndarray:
    """ok[i, j] iff <xs[i], ys[j]> is all of AGL_1^(n)(q), n the order of xs[i].

    The linear part of x already generates the order-n multiplier group, and
    p does not divide n, so <x, y> is everything iff it is transitive on
    GF(q). Transitivity is a reachability sweep from 0, done for all pairs
    at once.
    """
    q = F.q
    px = _affine_action(F, xs)
    py = _affine_action(F, ys)
    # gather through inverses: v is reached if x^-1(v) or y^-1(v) was
    inv_x = np.argsort(px, axis=1)
    inv_y = np.argsort(py, axis=1)
    out = np.zeros((len(xs), len(ys)), dtype=bool)
    rows = 256
    for lo in range(0, len(xs), rows):
        ix = inv_x[lo:lo + rows]
        reach = np.zeros((len(ix), len(ys), q), dtype=bool)
        reach[:, :, 0] = True
        gx = np.broadcast_to(ix[:, None, :], reach.shape)
        gy = np.broadcast_to(inv_y[None, :, :], reach.shape)
        while True:
            nxt = reach | np.take_along_axis(reach, gx, 2) | np.take_along_axis(reach, gy, 2)
            if np.array_equal(nxt, reach):
                break
            reach = nxt
        out[lo:lo + rows] = reach.all(axis=2)
    return out


def enumerate_regular_maps_with_group(q: int, n: int) -> int:
    """Number of AGammaL_1(q)-orbits on generating pairs of AGL_1^(n)(q)."""
    pair = _pair(q, n)
    F = pair.field
    _, pairs = generating_pairs(pair.q, pair.n)
    expected_pairs = euler_phi(pair.n) * pair.q * (pair.q - 1)
    if len(pairs) != expected_pairs:
        raise AssertionError(f"{len(pairs)} generating pairs, expected {expected_pairs}")
    conj = [_conjugator(F, c, d, gamma)
            for gamma in range(F.e) for c in range(1, F.q) for d in F.elements()]
    pair_set = set(pairs)
    remaining = set(pairs)
    orbits = 0
    for xy in pairs:
        if xy not in remaining:
            continue
        orbits += 1
        for act in conj:
            image = (act(xy[0]), act(xy[1]))
            if image not in pair_set:
                raise AssertionError("conjugation left the set of generating pairs")
            remaining.discard(image)
    return orbits
