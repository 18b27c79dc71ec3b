"""Oriented maps as pairs of dart permutations.

A map on ``D`` darts is given by

* ``sigma`` -- rotation: the next dart counterclockwise around the same vertex;
* ``alpha`` -- the fixed-point-free involution reversing each dart.

Faces are the cycles of ``sigma o alpha`` (apply ``alpha`` first).  With the
dart encoding of :mod:`paleymaps.paley` this makes the traced face valency of
a Paley map equal to the multiplicative order of ``-s``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Optional

import numpy as np

# rooted-isomorphism search works on (darts x candidates) blocks of at most this size
_BLOCK = 1 << 22


def _as_perm(values, name: str) -> np.ndarray:
    arr = np.asarray(values, dtype=np.int64)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional")
    if not np.array_equal(np.sort(arr), np.arange(len(arr))):
        raise ValueError(f"{name} is not a permutation of 0..{len(arr) - 1}")
    arr.setflags(write=False)
    return arr


def perm_cycles(perm) -> list[list[int]]:
    seen = np.zeros(len(perm), dtype=bool)
    out = []
    perm = perm.tolist() if isinstance(perm, np.ndarray) else list(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = perm[x]
        out.append(cyc)
    return out


def perm_inverse(perm: np.ndarray) -> np.ndarray:
    inv = np.empty_like(perm)
    inv[perm] = np.arange(len(perm))
    return inv


def perm_power(perm: np.ndarray, k: int) -> np.ndarray:
    if k < 0:
        perm, k = perm_inverse(perm), -k
    result = np.arange(len(perm))
    base = perm
    while k:
        if k & 1:
            result = base[result]
        base = base[base]
        k >>= 1
    return result


class OrientedMap:
    """A connected map on an oriented surface, stored as (sigma, alpha).

    ``vertex_of`` labels the vertex of each dart; when omitted the vertices
    are numbered by the order in which their sigma-cycles are first met.
    """

    def __init__(self, sigma, alpha, vertex_of=None):
        self.sigma = _as_perm(sigma, "sigma")
        self.alpha = _as_perm(alpha, "alpha")
        D = len(self.sigma)
        if len(self.alpha) != D or D == 0:
            raise ValueError("sigma and alpha must act on the same non-empty dart set")
        if not np.array_equal(self.alpha[self.alpha], np.arange(D)):
            raise ValueError("alpha is not an involution")
        if (self.alpha == np.arange(D)).any():
            raise ValueError("alpha has a fixed dart")
        if vertex_of is None:
            vertex_of = np.empty(D, dtype=np.int64)
            for label, cyc in enumerate(perm_cycles(self.sigma)):
                vertex_of[cyc] = label
        else:
            vertex_of = np.asarray(vertex_of, dtype=np.int64)
            if len(vertex_of) != D:
                raise ValueError("vertex_of has the wrong length")
            for cyc in perm_cycles(self.sigma):
                if len(set(vertex_of[cyc].tolist())) != 1:
                    raise ValueError("vertex labels do not match the sigma-cycles")
            if len(set(vertex_of.tolist())) != len(perm_cycles(self.sigma)):
                raise ValueError("two sigma-cycles share a vertex label")
        vertex_of.setflags(write=False)
        self.vertex_of = vertex_of

    @property
    def dart_count(self) -> int:
        return len(self.sigma)

    def __len__(self):
        return len(self.sigma)

    def __eq__(self, other):
        if not isinstance(other, OrientedMap):
            return NotImplemented
        return (np.array_equal(self.sigma, other.sigma)
                and np.array_equal(self.alpha, other.alpha))

    __hash__ = None

    def __repr__(self):
        return f"OrientedMap(darts={self.dart_count})"

    def face_permutation(self) -> np.ndarray:
        return self.sigma[self.alpha]

    def is_connected(self) -> bool:
        D = self.dart_count
        seen = np.zeros(D, dtype=bool)
        seen[0] = True
        todo = [0]
        sigma, alpha = self.sigma.tolist(), self.alpha.tolist()
        while todo:
            x = todo.pop()
            for y in (sigma[x], alpha[x]):
                if not seen[y]:
                    seen[y] = True
                    todo.append(y)
        return bool(seen.all())

    def _require_connected(self):
        if not self.is_connected():
            raise ValueError("map is not connected")

    # -- text serialisation ------------------------------------------------

    def dumps(self) -> str:
        lines = [
            f"darts {self.dart_count}",
            " ".join(map(str, self.sigma.tolist())),
            " ".join(map(str, self.alpha.tolist())),
            " ".join(map(str, self.vertex_of.tolist())),
        ]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> OrientedMap:
        lines = text.strip().splitlines()
        if len(lines) != 4 or not lines[0].startswith("darts "):
            raise ValueError("expected 4 lines starting with 'darts D'")
        D = int(lines[0].split()[1])
        rows = [[int(v) for v in line.split()] for line in lines[1:]]
        if any(len(r) != D for r in rows):
            raise ValueError("row length does not match dart count")
        return cls(rows[0], rows[1], rows[2])


@dataclass(frozen=True)
class MapInvariants:
    """Counts and type of a map.

    ``type_m``/``type_n`` are 0 when face or vertex valencies are not
    constant.  ``petrie_length`` is None when it is not known.
    """

    vertices: int
    edges: int
    faces: int
    type_m: int
    type_n: int
    genus: int
    petrie_length: Optional[int] = None

    @property
    def euler_char(self) -> int:
        return self.vertices - self.edges + self.faces

    @property
    def type(self) -> tuple[int, int]:
        return (self.type_m, self.type_n)

    def mismatches(self, other: MapInvariants) -> list[str]:
        """Names of fields that differ, skipping Petrie lengths either side leaves unknown."""
        out = []
        for name in ("vertices", "edges", "faces", "type_m", "type_n", "genus"):
            if getattr(self, name) != getattr(other, name):
                out.append(name)
        if None not in (self.petrie_length, other.petrie_length):
            if self.petrie_length != other.petrie_length:
                out.append("petrie_length")
        return out


def _uniform_length(cycles) -> int:
    lengths = {len(c) for c in cycles}
    return lengths.pop() if len(lengths) == 1 else 0


def trace_invariants(M: OrientedMap, petrie: bool = True) -> MapInvariants:
    """Count vertices, edges and faces by following the permutations."""
    M._require_connected()
    vcycles = perm_cycles(M.sigma)
    fcycles = perm_cycles(M.face_permutation())
    V, E, F = len(vcycles), M.dart_count // 2, len(fcycles)
    chi = V - E + F
    if chi % 2 or chi > 2:
        raise AssertionError(f"impossible Euler characteristic {chi}")
    plen = None
    if petrie:
        lengths = petrie_lengths(M)
        plen = lengths[0] if len(lengths) == 1 else None
    return MapInvariants(V, E, F, _uniform_length(fcycles), _uniform_length(vcycles),
                         (2 - chi) // 2, plen)


def petrie_lengths(M: OrientedMap) -> list[int]:
    """Distinct lengths of all Petrie polygons, sorted.

    The zig-zag walk has states (dart, parity); from parity 0 it steps by
    ``sigma o alpha`` and from parity 1 by ``sigma^-1 o alpha``, traversing one
    edge per step.  A polygon's length is the length of its state cycle.
    """
    D = M.dart_count
    left = M.sigma[M.alpha]
    right = perm_inverse(M.sigma)[M.alpha]
    # state 2x + parity
    step = np.empty(2 * D, dtype=np.int64)
    step[0::2] = 2 * left + 1
    step[1::2] = 2 * right
    return sorted({len(c) for c in perm_cycles(step)})


def petrie_length(M: OrientedMap) -> int:
    M._require_connected()
    lengths = petrie_lengths(M)
    if len(lengths) != 1:
        raise ValueError(f"Petrie polygons have different lengths: {lengths}")
    return lengths[0]


# ---------------------------------------------------------------------------
# isomorphism
# ---------------------------------------------------------------------------

def canonical_form(M: OrientedMap, root: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Code of the map rooted at ``root``.

    Darts are relabelled in breadth-first order from the root, trying
    ``sigma`` before ``alpha`` at each dart; the code is the pair of relabelled
    permutations.  Rooted maps are isomorphic iff their codes are equal.
    """
    D = M.dart_count
    if not 0 <= root < D:
        raise ValueError(f"root {root} out of range")
    sigma, alpha = M.sigma.tolist(), M.alpha.tolist()
    label = [-1] * D
    label[root] = 0
    order = [root]
    queue = deque(order)
    while queue:
        x = queue.popleft()
        for y in (sigma[x], alpha[x]):
            if label[y] < 0:
                label[y] = len(order)
                order.append(y)
                queue.append(y)
    if len(order) != D:
        raise ValueError("map is not connected")
    return (tuple(label[sigma[x]] for x in order),
            tuple(label[alpha[x]] for x in order))


def _spanning_steps(M: OrientedMap):
    """BFS layers from dart 0 as (children, parents) index arrays per generator."""
    D = M.dart_count
    sigma, alpha = M.sigma.tolist(), M.alpha.tolist()
    seen = [False] * D
    seen[0] = True
    frontier = [0]
    layers = []
    while frontier:
        by_gen = ([], [], [], [])  # sigma children, sigma parents, alpha children, alpha parents
        nxt = []
        for x in frontier:
            for g, perm in ((0, sigma), (2, alpha)):
                y = perm[x]
                if not seen[y]:
                    seen[y] = True
                    by_gen[g].append(y)
                    by_gen[g + 1].append(x)
                    nxt.append(y)
        layers.append(tuple(np.array(v, dtype=np.int64) for v in by_gen))
        frontier = nxt
    if not all(seen):
        raise ValueError("map is not connected")
    return layers


def rooted_isomorphisms(M1: OrientedMap, M2: OrientedMap, candidates=None) -> np.ndarray:
    """Boolean mask over ``candidates`` (darts of M2): does 0 -> d extend to an isomorphism?

    For each candidate the unique sigma/alpha-equivariant transport of a BFS
    tree of M1 is built, then checked against every dart.  This decides the
    same relation as comparing :func:`canonical_form` codes, for all
    candidates at once.
    """
    if candidates is None:
        candidates = np.arange(M2.dart_count)
    candidates = np.asarray(candidates, dtype=np.int64)
    if M1.dart_count != M2.dart_count:
        return np.zeros(len(candidates), dtype=bool)
    D = M1.dart_count
    layers = _spanning_steps(M1)
    s2, a2 = M2.sigma, M2.alpha
    s1, a1 = M1.sigma, M1.alpha
    result = np.zeros(len(candidates), dtype=bool)
    block = max(1, _BLOCK // D)
    for lo in range(0, len(candidates), block):
        cand = candidates[lo:lo + block]
        phi = np.empty((D, len(cand)), dtype=np.int64)
        phi[0] = cand
        for sc, sp, ac, ap in layers:
            if len(sc):
                phi[sc] = s2[phi[sp]]
            if len(ac):
                phi[ac] = a2[phi[ap]]
        ok = (phi[s1] == s2[phi]).all(axis=0) & (phi[a1] == a2[phi]).all(axis=0)
        result[lo:lo + block] = ok
    return result


def is_isomorphic(M1: OrientedMap, M2: OrientedMap, assume_regular: bool = False) -> bool:
    """Orientation-preserving isomorphism test.

    With ``assume_regular`` the caller vouches that M2 is orientably regular,
    so only the root pair (0, 0) needs checking.
    """
    if M1.dart_count != M2.dart_count:
        return False
    if sorted(map(len, perm_cycles(M1.sigma))) != sorted(map(len, perm_cycles(M2.sigma))):
        return False
    if sorted(map(len, perm_cycles(M1.face_permutation()))) != \
            sorted(map(len, perm_cycles(M2.face_permutation()))):
        return False
    if assume_regular:
        return bool(rooted_isomorphisms(M1, M2, [0])[0])
    # only darts whose vertex and face valencies match dart 0's can be images of it
    vlen = _cycle_length_of_each(M1.sigma)[0]
    flen = _cycle_length_of_each(M1.face_permutation())[0]
    mask = (_cycle_length_of_each(M2.sigma) == vlen) & \
        (_cycle_length_of_each(M2.face_permutation()) == flen)
    cands = np.flatnonzero(mask)
    block = max(1, _BLOCK // M1.dart_count)
    for lo in range(0, len(cands), block):
        if rooted_isomorphisms(M1, M2, cands[lo:lo + block]).any():
            return True
    return False


def _cycle_length_of_each(perm: np.ndarray) -> np.ndarray:
    out = np.empty(len(perm), dtype=np.int64)
    for cyc in perm_cycles(perm):
        out[cyc] = len(cyc)
    return out


def regularity_degree(M: OrientedMap) -> int:
    """|Aut+ M|: the number of darts that dart 0 can be sent to by an automorphism."""
    M._require_connected()
    return int(rooted_isomorphisms(M, M).sum())


def is_orientably_regular(M: OrientedMap) -> bool:
    return regularity_degree(M) == M.dart_count


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def mirror(M: OrientedMap) -> OrientedMap:
    return OrientedMap(perm_inverse(M.sigma), M.alpha, M.vertex_of)


def vertex_valencies(M: OrientedMap) -> list[int]:
    return sorted({len(c) for c in perm_cycles(M.sigma)})


def wilson(M: OrientedMap, j: int) -> OrientedMap:
    """Wilson operation H_j: every vertex rotation raised to the j-th power."""
    for n in vertex_valencies(M):
        if math.gcd(j, n) != 1:
            raise ValueError(f"exponent {j} is not coprime to valency {n}")
    return OrientedMap(perm_power(M.sigma, j), M.alpha, M.vertex_of)


def is_reflexible(M: OrientedMap, assume_regular: bool = False) -> bool:
    return is_isomorphic(M, mirror(M), assume_regular=assume_regular)


def quotient_by_vertex_power(M: OrientedMap, k: int) -> OrientedMap:
    """Identify each dart d with sigma^n(d), where n = valency / k.

    For a map built from a group this is the quotient by the central subgroup
    generated by x^n, which acts on darts as sigma^n.
    """
    vals = vertex_valencies(M)
    if len(vals) != 1 or vals[0] % k:
        raise ValueError(f"vertex valencies {vals} are not a common multiple of {k}")
    n = vals[0] // k
    shift = perm_power(M.sigma, n)
    cls = np.full(M.dart_count, -1, dtype=np.int64)
    reps = []
    for cyc in perm_cycles(shift):
        if len(cyc) != k:
            raise ValueError(f"fibre of size {len(cyc)} where {k} was expected")
        cls[cyc] = len(reps)
        reps.append(cyc[0])
    reps = np.array(reps, dtype=np.int64)
    qsigma = cls[M.sigma[reps]]
    qalpha = cls[M.alpha[reps]]
    # the generators must respect the fibres
    if not (np.array_equal(cls[M.sigma], qsigma[cls]) and np.array_equal(cls[M.alpha], qalpha[cls])):
        raise ValueError("sigma or alpha does not preserve the fibres")
    return OrientedMap(qsigma, qalpha)
