import itertools
import math

import pytest

from paleymaps.cmap import is_isomorphic, is_reflexible, mirror, regularity_degree, trace_invariants
from paleymaps.ffield import build_field, euler_phi, frobenius_orbit, subgroup_of_order
from paleymaps.paley import (
    AdmissiblePair,
    build_paley_graph,
    build_paley_map,
    closed_form_invariants,
    enumerate_admissible,
    galois_orbit_info,
    is_admissible,
    is_reflexible_closed_form,
    iso_classes,
    paley_map,
    paley_spec,
)

PAIRS_UP_TO_32 = [pair for pair in enumerate_admissible(32, 10**9)]


def brute_admissible(max_q):
    """Pairs from the definition: n | q-1, n even unless p = 2, and P connected (BFS)."""
    out = []
    for q in range(2, max_q + 1):
        ps = [r for r in range(2, q + 1) if q % r == 0 and all(r % d for d in range(2, r))]
        if len(ps) != 1:
            continue
        p = ps[0]
        e = round(math.log(q, p))
        F = build_field(p, e)
        for n in range(1, q):
            if (q - 1) % n or (n % 2 and p != 2):
                continue
            S = subgroup_of_order(F, n).elements
            seen, todo = {0}, [0]
            while todo:
                v = todo.pop()
                for a in S:
                    w = F.add(v, a)
                    if w not in seen:
                        seen.add(w)
                        todo.append(w)
            if len(seen) == q:
                out.append((q, n))
    return out


def test_admissible_examples():
    assert is_admissible(9, 4)
    assert not is_admissible(27, 13)
    assert is_admissible(16, 5)
    assert not is_admissible(12, 1)
    assert not is_admissible(9, 2)  # e = 2 but ord_2(3) = 1: disconnected
    assert is_admissible(2, 1)


def test_admissible_matches_connectivity():
    ours = [(pr.q, pr.n) for pr in enumerate_admissible(64, 10**9)]
    assert ours == brute_admissible(64)


def test_admissible_pair_rejects():
    with pytest.raises(ValueError):
        AdmissiblePair(27, 13)


def test_enumerate_small_bounds():
    pairs = [(pr.q, pr.n) for pr in enumerate_admissible(9, 1)]
    for expected in [(2, 1), (3, 2), (4, 3), (5, 2), (5, 4), (7, 2)]:
        assert expected in pairs
    assert (8, 7) not in pairs
    assert pairs == sorted(pairs)
    assert all(closed_form_invariants(q, n).genus <= 1 for q, n in pairs)


def test_enumerate_always_has_single_edge():
    assert (2, 1) in [(pr.q, pr.n) for pr in enumerate_admissible(2, 0)]


def test_enumerate_contains_genus_59():
    assert (29, 14) in [(pr.q, pr.n) for pr in enumerate_admissible(29, 59)]


def test_paley_graph_complete_and_cycle():
    K5 = build_paley_graph(5, 4)
    assert all(set(nbrs) == set(range(5)) - {v} for v, nbrs in enumerate(K5))
    C5 = build_paley_graph(5, 2)
    assert all(len(nbrs) == 2 for nbrs in C5)
    # a single cycle through all five vertices
    prev, v, seen = None, 0, []
    for _ in range(5):
        seen.append(v)
        prev, v = v, next(w for w in C5[v] if w != prev)
    assert v == 0 and sorted(seen) == list(range(5))
    K9 = build_paley_graph(9, 8)
    assert all(len(nbrs) == 8 for nbrs in K9)


@pytest.mark.parametrize("pair", PAIRS_UP_TO_32, ids=lambda p: f"{p.q}-{p.n}")
def test_paley_graph_regular_connected(pair):
    adj = build_paley_graph(pair)
    assert all(len(nbrs) == pair.n for nbrs in adj)
    assert all(v in adj[w] for v in range(pair.q) for w in adj[v])
    seen, todo = {0}, [0]
    while todo:
        for w in adj[todo.pop()]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    assert len(seen) == pair.q


def test_paley_map_graph_matches_graph():
    pair = AdmissiblePair(13, 6)
    M = build_paley_map(paley_spec(13, 6))
    adj = build_paley_graph(pair)
    for d in range(M.dart_count):
        v, w = int(M.vertex_of[d]), int(M.vertex_of[M.alpha[d]])
        assert w in adj[v]


def test_build_paley_map_examples():
    inv = trace_invariants(paley_map(5, 2, 4))
    assert inv.type == (5, 2) and inv.genus == 0
    inv = trace_invariants(paley_map(4, 3))
    assert inv.type == (3, 3) and inv.genus == 0
    assert trace_invariants(paley_map(17, 8)).genus == 18


def test_paley_spec_rejects_non_generator():
    with pytest.raises(ValueError):
        paley_spec(13, 6, 3)  # 3 has order 3


@pytest.mark.parametrize("q,n,typ,genus", [
    (29, 14, (7, 14), 59), (25, 12, (12, 12), 51), (64, 9, (9, 9), 81),
    (2, 1, (2, 1), 0), (7, 2, (7, 2), 0),
])
def test_closed_form_examples(q, n, typ, genus):
    inv = closed_form_invariants(q, n)
    assert inv.type == typ and inv.genus == genus


def test_closed_form_paley_families():
    # q = 5 mod 8: genus (q^2 - 13q + 8)/8; q = 1 mod 8: genus (q - 1)(q - 8)/8
    for q in (13, 29, 37, 53, 61):
        assert closed_form_invariants(q, (q - 1) // 2).genus == (q * q - 13 * q + 8) // 8
    for q in (9, 17, 25, 41, 49):
        assert closed_form_invariants(q, (q - 1) // 2).genus == (q - 1) * (q - 8) // 8


@pytest.mark.parametrize("pair", PAIRS_UP_TO_32, ids=lambda p: f"{p.q}-{p.n}")
def test_closed_form_matches_trace(pair):
    closed = closed_form_invariants(pair)
    for spec in iso_classes(pair):
        assert trace_invariants(build_paley_map(spec)) == closed


def test_closed_form_rejects_inadmissible():
    with pytest.raises(ValueError):
        closed_form_invariants(27, 13)


@pytest.mark.parametrize("q,n,count", [(29, 14, 6), (9, 4, 1), (8, 7, 2)])
def test_iso_class_counts(q, n, count):
    assert len(iso_classes(q, n)) == count


@pytest.mark.parametrize("pair", PAIRS_UP_TO_32, ids=lambda p: f"{p.q}-{p.n}")
def test_iso_classes_times_e_is_phi(pair):
    specs = iso_classes(pair)
    assert len(specs) * pair.e == euler_phi(pair.n)
    F = pair.field
    for spec in specs:
        assert spec.s == min(frobenius_orbit(F, spec.s))


@pytest.mark.parametrize("pair", PAIRS_UP_TO_32, ids=lambda p: f"{p.q}-{p.n}")
def test_isomorphic_iff_frobenius_conjugate(pair):
    F = pair.field
    gens = subgroup_of_order(F, pair.n).generators()
    maps = {s: paley_map(pair.q, pair.n, s) for s in gens}
    for s, t in itertools.combinations_with_replacement(gens, 2):
        assert is_isomorphic(maps[s], maps[t]) == (t in frobenius_orbit(F, s))


def test_reflexible_closed_form_examples():
    assert is_reflexible_closed_form(16, 5)
    assert not is_reflexible_closed_form(8, 7)
    for p in (3, 5, 7, 11):
        assert is_reflexible_closed_form(p, 2)


@pytest.mark.parametrize("pair", PAIRS_UP_TO_32, ids=lambda p: f"{p.q}-{p.n}")
def test_reflexible_closed_form_matches_mirror(pair):
    for spec in iso_classes(pair):
        assert is_reflexible(build_paley_map(spec)) == is_reflexible_closed_form(pair)


def test_only_q5_q9_paley_maps_reflexible():
    reflexible = [q for q in (5, 9, 13, 17, 25, 29, 37, 41, 49, 53, 61)
                  if is_reflexible_closed_form(q, (q - 1) // 2)]
    assert reflexible == [5, 9]


@pytest.mark.parametrize("pair", PAIRS_UP_TO_32, ids=lambda p: f"{p.q}-{p.n}")
def test_regularity_degree_nq(pair):
    for spec in iso_classes(pair):
        assert regularity_degree(build_paley_map(spec)) == pair.n * pair.q


def test_galois_examples():
    info = galois_orbit_info(29, 14)
    assert (info.orbit_size, info.field_degree, info.residues) == (6, 6, (1,))
    assert "zeta_14" in info.field_description
    info = galois_orbit_info(4, 3)
    assert (info.orbit_size, info.field_degree) == (1, 1)
    assert set(info.residues) == {1, 2}
    assert info.field_description == "Q"
    info = galois_orbit_info(2, 1)
    assert (info.orbit_size, info.field_degree) == (1, 1)


def test_mirror_of_paley_map_is_inverse_generator_map():
    F = build_field(29)
    for spec in iso_classes(29, 14):
        assert is_isomorphic(mirror(build_paley_map(spec)), paley_map(29, 14, F.inv(spec.s)))
