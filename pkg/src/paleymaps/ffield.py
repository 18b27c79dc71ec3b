"""Exact arithmetic in GF(p^e).

Field elements are encoded by their *canonical index*: the coefficient
sequence (constant term first) in the power basis of the modulus, read as a
base-p integer with the constant term as the least significant digit.  So in
GF(9) = Z_3[t]/(t^2 + 1) the element a + b*t has index a + 3*b, and ``t`` is
the element with index 3.

Polynomials over Z_p are plain tuples of residues, constant term first.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

MAX_ORDER = 1 << 20


# ---------------------------------------------------------------------------
# integer helpers
# ---------------------------------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    r = 3
    while r * r <= n:
        if n % r == 0:
            return False
        r += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    r = 2
    while r * r <= n:
        if n % r == 0:
            out.append(r)
            while n % r == 0:
                n //= r
        r += 1
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def euler_phi(n: int) -> int:
    result = n
    for r in prime_factors(n):
        result -= result // r
    return result


def multiplicative_order(a: int, n: int) -> int:
    """Least i >= 1 with a^i = 1 mod n (``n`` = 1 gives 1)."""
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    x, i = a % n, 1
    while x != 1:
        x = x * a % n
        i += 1
    return i


@dataclass(frozen=True)
class PrimePower:
    p: int
    e: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.e < 1:
            raise ValueError(f"exponent must be positive, got {self.e}")

    @property
    def q(self) -> int:
        return self.p ** self.e

    @classmethod
    def from_order(cls, q: int) -> PrimePower:
        """Split ``q`` as p^e; raises ValueError if ``q`` is not a prime power."""
        if q < 2:
            raise ValueError(f"{q} is not a prime power")
        fs = prime_factors(q)
        if len(fs) != 1:
            raise ValueError(f"{q} is not a prime power")
        p, e = fs[0], 0
        while q > 1:
            q //= p
            e += 1
        return cls(p, e)


def is_prime_power(q: int) -> bool:
    return q >= 2 and len(prime_factors(q)) == 1


# ---------------------------------------------------------------------------
# polynomials over Z_p
# ---------------------------------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mul(a, b, p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return tuple(_trim(out))


def poly_divmod(a, b, p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = _trim([c % p for c in a])
    inv_lead = pow(b[-1], -1, p)
    db = len(b) - 1
    quot = [0] * max(len(r) - db, 0)
    while len(r) - 1 >= db:
        c = r[-1] * inv_lead % p
        shift = len(r) - 1 - db
        quot[shift] = c
        for j, bj in enumerate(b):
            r[shift + j] = (r[shift + j] - c * bj) % p
        _trim(r)
    return tuple(_trim(quot)), tuple(r)


def poly_from_index(index: int, p: int, length: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        index, c = divmod(index, p)
        out.append(c)
    return tuple(out)


def poly_index(coeffs, p: int) -> int:
    """Read a coefficient sequence (constant term first) as a base-p integer."""
    value = 0
    for c in reversed(coeffs):
        value = value * p + c
    return value


def monic_polynomials(p: int, degree: int):
    """All monic polynomials of the given degree, in canonical order."""
    for low in range(p ** degree):
        yield poly_from_index(low, p, degree) + (1,)


def is_irreducible(f, p: int) -> bool:
    """Exhaustive test: no monic factor of degree 1..deg(f)//2."""
    f = tuple(_trim(list(f)))
    deg = len(f) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for g in monic_polynomials(p, d):
            if not poly_divmod(f, g, p)[1]:
                return False
    return True


def canonical_modulus(p: int, e: int) -> tuple[int, ...]:
    """Least monic irreducible polynomial of degree ``e`` over Z_p."""
    for f in monic_polynomials(p, e):
        if is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")  # unreachable


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Phi_n over the integers, constant term first."""
    return _cyclotomic(n)


@functools.lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        den = _cyclotomic(d)
        # exact division by a monic integer polynomial
        q = [0] * (len(num) - len(den) + 1)
        r = list(num)
        for k in range(len(q) - 1, -1, -1):
            c = r[k + len(den) - 1]
            q[k] = c
            for j, dj in enumerate(den):
                r[k + j] -= c * dj
        assert not any(r), "cyclotomic division left a remainder"
        num = q
    return tuple(num)


def format_poly(coeffs) -> str:
    return ",".join(str(int(c)) for c in coeffs)


def parse_poly(text: str) -> tuple[int, ...]:
    return tuple(int(c) for c in text.split(","))


# ---------------------------------------------------------------------------
# the field
# ---------------------------------------------------------------------------

class FiniteField:
    """GF(p^e) with elements encoded as canonical indices 0..q-1.

    Multiplication goes through exp/log tables relative to ``generator``,
    the least primitive element in canonical order.
    """

    def __init__(self, p: int, e: int = 1):
        self.order = PrimePower(p, e)
        self.p, self.e, self.q = p, e, self.order.q
        if self.q > MAX_ORDER:
            raise ValueError(f"field order {self.q} exceeds {MAX_ORDER}")
        self.modulus = canonical_modulus(p, e)
        self._place = [p ** i for i in range(e)]
        self.generator = self._least_primitive()
        self._build_tables()

    def __repr__(self):
        return f"FiniteField({self.p}, {self.e})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self):
        return hash((self.p, self.e))

    def __call__(self, value) -> FieldElement:
        """Wrap a canonical index, a coefficient sequence or a string like ``"1,0,1"``."""
        if isinstance(value, FieldElement):
            return value
        if isinstance(value, str):
            value = parse_poly(value)
        if isinstance(value, (tuple, list)):
            value = self.from_coefficients(value)
        return FieldElement(self, int(value) % self.q if self.e == 1 else int(value))

    # -- raw polynomial arithmetic, used before the tables exist -----------

    def _polymulmod(self, a: int, b: int) -> int:
        pa = poly_from_index(a, self.p, self.e)
        pb = poly_from_index(b, self.p, self.e)
        _, r = poly_divmod(poly_mul(pa, pb, self.p), self.modulus, self.p)
        return poly_index(r, self.p)

    def _polypow(self, a: int, k: int) -> int:
        result = 1
        while k:
            if k & 1:
                result = self._polymulmod(result, a)
            a = self._polymulmod(a, a)
            k >>= 1
        return result

    def _least_primitive(self) -> int:
        n = self.q - 1
        rs = prime_factors(n)
        for g in range(1, self.q):
            if all(self._polypow(g, n // r) != 1 for r in rs):
                return g
        raise AssertionError("multiplicative group is not cyclic")  # unreachable

    def _mult_matrix(self, a: int) -> np.ndarray:
        # column j holds the coordinates of a * t^j
        cols = []
        for j in range(self.e):
            tj = self.p ** j
            cols.append(poly_from_index(self._polymulmod(a, tj), self.p, self.e))
        return np.array(cols, dtype=np.int64).T

    def _build_tables(self):
        p, e, n = self.p, self.e, self.q - 1
        place = np.array(self._place, dtype=np.int64)
        vecs = np.zeros((n, e), dtype=np.int64)
        vecs[0, 0] = 1
        filled = 1
        # doubling: g^(L+k) = g^L * g^k, applied as a matrix to the first block
        while filled < n:
            last = int(vecs[filled - 1] @ place)
            step = self._polymulmod(last, self.generator)
            take = min(filled, n - filled)
            vecs[filled:filled + take] = vecs[:take] @ self._mult_matrix(step).T % p
            filled += take
        exp = vecs @ place
        log = np.full(self.q, -1, dtype=np.int64)
        log[exp] = np.arange(n)
        if (log[1:] < 0).any():
            raise AssertionError("generator is not primitive")
        self.digits = ((np.arange(self.q)[:, None] // place) % p).astype(np.int64)
        self._exp_np, self._log_np = exp, log
        self._exp = exp.tolist()
        self._log = log.tolist()

    # -- coordinates --------------------------------------------------------

    def coefficients(self, a: int) -> tuple[int, ...]:
        return poly_from_index(a, self.p, self.e)

    def from_coefficients(self, coeffs) -> int:
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) > self.e:
            raise ValueError(f"expected at most {self.e} coefficients")
        return poly_index(coeffs, self.p)

    def elements(self) -> range:
        return range(self.q)

    # -- arithmetic on indices ---------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p, out = self.p, 0
        for place in self._place:
            out += ((a // place + b // place) % p) * place
        return out

    def neg(self, a: int) -> int:
        if self.p == 2 or a == 0:
            return a
        if self.e == 1:
            return self.p - a
        p, out = self.p, 0
        for place in self._place:
            out += (-(a // place)) % p * place
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self._exp[-self._log[a] % (self.q - 1)]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("zero has no inverse")
            return 1 if k == 0 else 0
        return self._exp[self._log[a] * k % (self.q - 1)]

    def log(self, a: int) -> int:
        """Discrete logarithm to base ``generator``."""
        if a == 0:
            raise ValueError("zero has no logarithm")
        return self._log[a]

    def exp(self, k: int) -> int:
        return self._exp[k % (self.q - 1)]

    def frobenius(self, a: int, times: int = 1) -> int:
        return self.pow(a, self.p ** (times % self.e))

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.q - 1
        return n // math.gcd(n, self._log[a])

    # -- vectorised arithmetic (numpy arrays of indices) -------------------

    def add_vec(self, a, b) -> np.ndarray:
        a, b = np.asarray(a), np.asarray(b)
        if self.p == 2:
            return a ^ b
        d = (self.digits[a] + self.digits[b]) % self.p
        return d @ np.array(self._place, dtype=np.int64)

    def neg_vec(self, a) -> np.ndarray:
        a = np.asarray(a)
        if self.p == 2:
            return a.copy()
        d = (-self.digits[a]) % self.p
        return d @ np.array(self._place, dtype=np.int64)

    def mul_vec(self, a, b) -> np.ndarray:
        a, b = np.asarray(a), np.asarray(b)
        out = self._exp_np[(self._log_np[a] + self._log_np[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    # -- polynomials with coefficients in this field -----------------------

    def _fpoly_mul(self, a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                out[i + j] = self.add(out[i + j], self.mul(ai, bj))
        return out

    def evaluate(self, coeffs, a: int) -> int:
        """Evaluate a polynomial over Z_p (constant term first) at ``a``."""
        acc = 0
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, a), c % self.p)
        return acc


@functools.lru_cache(maxsize=64)
def build_field(p: int, e: int = 1) -> FiniteField:
    """Canonical GF(p^e); cached, since construction builds full log tables."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e < 1:
        raise ValueError(f"exponent must be positive, got {e}")
    if p ** e > MAX_ORDER:
        raise ValueError(f"field order {p}^{e} exceeds {MAX_ORDER}")
    return FiniteField(p, e)


def field_of_order(q: int) -> FiniteField:
    pp = PrimePower.from_order(q)
    return build_field(pp.p, pp.e)


@dataclass(frozen=True, eq=False)
class FieldElement:
    """Convenience wrapper pairing a canonical index with its field."""

    field: FiniteField
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ValueError(f"index {self.value} out of range for GF({self.field.q})")

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self.field.coefficients(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.value
        if isinstance(other, int):
            # plain integers are prime-field scalars
            return other % self.field.p
        return self.field(other).value

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.value))

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * FieldElement(self.field, self.field.inv(self._other(other)))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.value, k))

    def __repr__(self):
        return f"GF({self.field.q})[{format_poly(self.coefficients)}]"


# ---------------------------------------------------------------------------
# subgroups, Frobenius orbits, minimal polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Subgroup:
    """The unique subgroup of F* of a given order.

    ``elements`` lists the powers s^0, s^1, ..., s^(n-1) of the distinguished
    generator ``generator`` (the least generator in canonical order).
    """

    order: int
    generator: int
    elements: tuple[int, ...]

    def __contains__(self, a):
        return a in self.elements

    def __len__(self):
        return self.order

    def generators(self) -> list[int]:
        """All phi(n) generators, in canonical order."""
        n = self.order
        return sorted(self.elements[j] for j in range(n) if math.gcd(j, n) == 1)

    def index(self, a: int) -> int:
        """Exponent j with a = generator^j."""
        return self.elements.index(a)


def subgroup_of_order(F: FiniteField, n: int) -> Subgroup:
    if n < 1 or (F.q - 1) % n:
        raise ValueError(f"{n} does not divide {F.q - 1}")
    h = F.exp((F.q - 1) // n)
    gens = sorted(F.pow(h, j) for j in range(n) if math.gcd(j, n) == 1)
    s = gens[0]
    return Subgroup(n, s, tuple(F.pow(s, j) for j in range(n)))


def frobenius_orbit(F: FiniteField, a: int) -> tuple[int, ...]:
    """(a, a^p, a^(p^2), ...) up to the first repetition."""
    orbit = [a]
    b = F.frobenius(a)
    while b != a:
        orbit.append(b)
        b = F.frobenius(b)
    return tuple(orbit)


def minimal_polynomial(F: FiniteField, a: int) -> tuple[int, ...]:
    """Minimal polynomial of ``a`` over Z_p, as the product of (t - a^(p^i))."""
    poly = [1]
    for r in frobenius_orbit(F, a):
        poly = F._fpoly_mul(poly, [F.neg(r), 1])
    if any(c >= F.p for c in poly):
        raise AssertionError("minimal polynomial has coefficients outside Z_p")
    return tuple(poly)


def generator_orbits(F: FiniteField, n: int) -> list[tuple[int, ...]]:
    """Frobenius orbits on the generators of the order-n subgroup, each led by its least element."""
    S = subgroup_of_order(F, n)
    seen: set[int] = set()
    orbits = []
    for g in S.generators():
        if g in seen:
            continue
        orbit = frobenius_orbit(F, g)
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


def generator_orbit_count(F: FiniteField, n: int) -> int:
    """Number of Frobenius orbits on generators of S; equals phi(n)/e for admissible (q, n)."""
    if (F.q - 1) % n or (n % 2 and F.p != 2) or multiplicative_order(F.p, n) != F.e:
        raise ValueError(f"(q={F.q}, n={n}) is not admissible")
    count = len(generator_orbits(F, n))
    if count * F.e != euler_phi(n):
        raise AssertionError(f"orbit count {count} disagrees with phi({n})/{F.e}")
    return count
