"""Generalised Paley graphs and maps M_q(s).

For an admissible pair (q, n) the map M_q(s) has darts (v, a), v in F_q and
a in the order-n subgroup S, encoded as ``v * n + j`` where a = s^j.  The
rotation sends (v, s^j) to (v, s^(j+1)) and the reversal sends (v, a) to
(v + a, -a).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cmap import MapInvariants, OrientedMap
from .ffield import (
    FiniteField,
    PrimePower,
    build_field,
    euler_phi,
    frobenius_orbit,
    generator_orbits,
    is_prime_power,
    minimal_polynomial,
    multiplicative_order,
    poly_index,
    subgroup_of_order,
)


def is_admissible(q, n: int) -> bool:
    if isinstance(q, PrimePower):
        q = q.q
    if n < 1 or not is_prime_power(q):
        return False
    pp = PrimePower.from_order(q)
    if (q - 1) % n:
        return False
    if n % 2 and pp.p != 2:
        return False
    return multiplicative_order(pp.p, n) == pp.e


@dataclass(frozen=True, order=True)
class AdmissiblePair:
    q: int
    n: int

    def __post_init__(self):
        if not is_admissible(self.q, self.n):
            raise ValueError(f"(q={self.q}, n={self.n}) is not an admissible pair")

    @property
    def order(self) -> PrimePower:
        return PrimePower.from_order(self.q)

    @property
    def p(self) -> int:
        return self.order.p

    @property
    def e(self) -> int:
        return self.order.e

    @property
    def field(self) -> FiniteField:
        pp = self.order
        return build_field(pp.p, pp.e)


def _pair(pair, n=None) -> AdmissiblePair:
    if isinstance(pair, AdmissiblePair):
        return pair
    if n is None:
        pair, n = pair
    return AdmissiblePair(int(pair), int(n))


@dataclass(frozen=True)
class PaleyMapSpec:
    """A generalised Paley map: the pair plus a generator ``s`` (canonical index) of S."""

    pair: AdmissiblePair
    s: int

    def __post_init__(self):
        F = self.pair.field
        if not 0 < self.s < F.q or F.element_order(self.s) != self.pair.n:
            raise ValueError(f"{self.s} does not generate the subgroup of order {self.pair.n}")

    @property
    def s_minpoly(self) -> tuple[int, ...]:
        return minimal_polynomial(self.pair.field, self.s)


def paley_spec(q: int, n: int, s=None) -> PaleyMapSpec:
    """Spec for M_q(s); ``s`` defaults to the distinguished generator of S.

    ``s`` may be a canonical index or a coefficient sequence.
    """
    pair = _pair(q, n)
    F = pair.field
    if s is None:
        s = subgroup_of_order(F, n).generator
    elif isinstance(s, (tuple, list, str)):
        s = F(s).value
    return PaleyMapSpec(pair, int(s))


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def closed_form_invariants(pair, n=None) -> MapInvariants:
    """Type, genus and Petrie length of every M_q(s) for the pair, without building it."""
    pair = _pair(pair, n)
    q, n, p = pair.q, pair.n, pair.p
    if n == 1:
        # the single edge {2,1}; its one Petrie polygon runs along the edge and back
        return MapInvariants(2, 1, 1, 2, 1, 0, 2)
    if n == 2:
        # the p-cycle {p,2} on the sphere
        return MapInvariants(p, p, 2, p, 2, 0, 2 * p)
    if n % 4 == 2:
        m, genus = n // 2, 1 + Fraction(q * (n - 6), 4)
    else:
        m, genus = n, 1 + Fraction(q * (n - 4), 4)
    if genus.denominator != 1:
        raise AssertionError(f"non-integral genus {genus} for {pair}")
    return MapInvariants(q, n * q // 2, n * q // m, m, n, int(genus), 2 * p)


def enumerate_admissible(max_q: int, max_genus: int) -> list[AdmissiblePair]:
    """All admissible pairs with q <= max_q and genus <= max_genus, ordered by (q, n)."""
    out = []
    for q in range(2, max_q + 1):
        if not is_prime_power(q):
            continue
        for n in range(1, q):
            if is_admissible(q, n) and closed_form_invariants(q, n).genus <= max_genus:
                out.append(AdmissiblePair(q, n))
    return out


def iso_classes(pair, n=None) -> list[PaleyMapSpec]:
    """One spec per isomorphism class, represented by the least generator in its Frobenius orbit."""
    pair = _pair(pair, n)
    F = pair.field
    reps = [min(orbit) for orbit in generator_orbits(F, pair.n)]
    return [PaleyMapSpec(pair, s) for s in sorted(reps)]


def minpoly_key(coeffs, p: int) -> int:
    """Sort key for polynomials: canonical base-p index."""
    return poly_index(coeffs, p)


def is_reflexible_closed_form(pair, n=None) -> bool:
    pair = _pair(pair, n)
    n, p, e = pair.n, pair.p, pair.e
    if n <= 2:
        return True
    return any(pow(p, i, n) == n - 1 for i in range(e))


@dataclass(frozen=True)
class GaloisOrbitInfo:
    """Orbit of the absolute Galois group on the maps of one admissible pair.

    The maps are defined over the fixed field of the subgroup ``<p mod n>``
    of (Z/n)*, acting on Q(zeta_n); ``residues`` lists that subgroup.
    """

    n: int
    p: int
    orbit_size: int
    field_degree: int
    residues: tuple[int, ...]

    @property
    def field_description(self) -> str:
        if self.field_degree == 1:
            return "Q"
        res = ",".join(map(str, self.residues))
        return (f"fixed field of <{self.p} mod {self.n}> = {{{res}}} in Q(zeta_{self.n}), "
                f"degree {self.field_degree}")


def galois_orbit_info(pair, n=None) -> GaloisOrbitInfo:
    pair = _pair(pair, n)
    n, p = pair.n, pair.p
    residues = {pow(p, i, n) for i in range(max(1, multiplicative_order(p, n)))}
    degree = euler_phi(n) // len(residues)
    size = len(iso_classes(pair))
    if size != degree or size * pair.e != euler_phi(n):
        raise AssertionError(f"orbit size {size} and field degree {degree} disagree")
    return GaloisOrbitInfo(n, p, size, degree, tuple(sorted(residues)))


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def build_paley_graph(pair, n=None) -> list[tuple[int, ...]]:
    """Adjacency lists of P_q^(n): ``adj[v]`` are the neighbours v + a, a in S, sorted."""
    pair = _pair(pair, n)
    F = pair.field
    S = subgroup_of_order(F, pair.n)
    return [tuple(sorted({F.add(v, a) for a in S.elements})) for v in F.elements()]


def build_paley_map(spec: PaleyMapSpec) -> OrientedMap:
    F = spec.pair.field
    n, q = spec.pair.n, F.q
    powers = np.array([F.pow(spec.s, j) for j in range(n)], dtype=np.int64)
    index_of = {int(a): j for j, a in enumerate(powers)}
    neg_index = np.array([index_of[F.neg(int(a))] for a in powers], dtype=np.int64)

    v = np.repeat(np.arange(q), n)
    j = np.tile(np.arange(n), q)
    sigma = v * n + (j + 1) % n
    alpha = F.add_vec(v, powers[j]) * n + neg_index[j]
    return OrientedMap(sigma, alpha, v)


def paley_map(q: int, n: int, s=None) -> OrientedMap:
    return build_paley_map(paley_spec(q, n, s))


def generator_power(spec: PaleyMapSpec, j: int) -> PaleyMapSpec:
    """Spec of M_q(s^j)."""
    if math.gcd(j, spec.pair.n) != 1:
        raise ValueError(f"{j} is not a unit mod {spec.pair.n}")
    return PaleyMapSpec(spec.pair, spec.pair.field.pow(spec.s, j))


def same_class(spec1: PaleyMapSpec, spec2: PaleyMapSpec) -> bool:
    """Whether the generators are Frobenius-conjugate."""
    return spec1.pair == spec2.pair and spec2.s in frobenius_orbit(spec1.pair.field, spec1.s)
