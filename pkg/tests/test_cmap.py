import itertools

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from paleymaps.cmap import (
    OrientedMap,
    canonical_form,
    is_isomorphic,
    is_reflexible,
    mirror,
    perm_cycles,
    perm_inverse,
    petrie_length,
    petrie_lengths,
    quotient_by_vertex_power,
    regularity_degree,
    rooted_isomorphisms,
    trace_invariants,
    wilson,
)
from paleymaps.paley import paley_map, paley_spec

# darts 0: a->b, 1: b->a, 2: b->c, 3: c->b
PATH2 = OrientedMap([0, 2, 1, 3], [1, 0, 3, 2])


def brute_force_automorphisms(M):
    D = M.dart_count
    s, a = M.sigma.tolist(), M.alpha.tolist()
    count = 0
    for phi in itertools.permutations(range(D)):
        if all(phi[s[x]] == s[phi[x]] and phi[a[x]] == a[phi[x]] for x in range(D)):
            count += 1
    return count


def relabel(M, perm):
    """The map with dart x renamed perm[x]."""
    perm = np.asarray(perm)
    inv = perm_inverse(perm)
    return OrientedMap(perm[M.sigma[inv]], perm[M.alpha[inv]])


@st.composite
def connected_maps(draw, max_edges=6):
    E = draw(st.integers(1, max_edges))
    D = 2 * E
    sigma = draw(st.permutations(range(D)))
    darts = draw(st.permutations(range(D)))
    alpha = [0] * D
    for i in range(0, D, 2):
        alpha[darts[i]], alpha[darts[i + 1]] = darts[i + 1], darts[i]
    M = OrientedMap(sigma, alpha)
    assume(M.is_connected())
    return M


def test_rejects_bad_alpha():
    with pytest.raises(ValueError):
        OrientedMap([0, 1], [0, 1])
    with pytest.raises(ValueError):
        OrientedMap([0, 1, 2], [1, 2, 0])
    with pytest.raises(ValueError):
        OrientedMap([0, 0], [1, 0])


def test_single_edge():
    M = paley_map(2, 1)
    inv = trace_invariants(M)
    assert (inv.vertices, inv.edges, inv.faces, inv.type, inv.genus) == (2, 1, 1, (2, 1), 0)


def test_trace_torus_and_genus_59():
    assert trace_invariants(paley_map(9, 4)).type == (4, 4)
    assert trace_invariants(paley_map(9, 4)).genus == 1
    inv = trace_invariants(paley_map(29, 14))
    assert inv.type == (7, 14) and inv.genus == 59


def test_trace_disconnected_raises():
    two_edges = OrientedMap([0, 1, 2, 3], [1, 0, 3, 2])
    with pytest.raises(ValueError):
        trace_invariants(two_edges)


def test_trace_irregular_reports_zero_type():
    inv = trace_invariants(PATH2, petrie=False)
    assert inv.type_n == 0
    assert (inv.vertices, inv.edges, inv.faces, inv.genus) == (3, 2, 1, 0)


def test_face_convention_follows_paley_face():
    # the face through dart (0, s) visits 0, s, s - s^2, ...
    from paleymaps.ffield import build_field

    F = build_field(3, 2)
    spec = paley_spec(9, 4)
    M = paley_map(9, 4)
    s = spec.s
    face = perm_cycles(M.face_permutation())
    start = 0 * 4 + 1  # dart (0, s^1)
    cyc = next(c for c in face if start in c)
    cyc = cyc[cyc.index(start):] + cyc[:cyc.index(start)]
    verts = [int(M.vertex_of[d]) for d in cyc]
    expect, acc, term = [0], 0, s
    for _ in range(len(cyc) - 1):
        acc = F.add(acc, term)
        expect.append(acc)
        term = F.neg(F.mul(term, s))
    assert verts == expect


@pytest.mark.parametrize("q,n,expected", [(9, 4, 6), (13, 6, 26), (16, 5, 4)])
def test_petrie_length_examples(q, n, expected):
    assert petrie_length(paley_map(q, n)) == expected


def test_petrie_length_irregular_raises():
    M = OrientedMap([2, 3, 5, 0, 4, 1], [1, 0, 3, 2, 5, 4])
    assert petrie_lengths(M) == [2, 4]
    with pytest.raises(ValueError, match=r"\[2, 4\]"):
        petrie_length(M)


def test_canonical_form_reflexive():
    M = paley_map(13, 6)
    assert canonical_form(M, 5) == canonical_form(M, 5)


def test_canonical_form_all_roots_of_torus_map():
    M = paley_map(9, 4)
    codes = {canonical_form(M, d) for d in range(M.dart_count)}
    assert M.dart_count == 36 and len(codes) == 1


def test_canonical_form_separates_edmonds_chiral_pair():
    M = paley_map(8, 7)
    W = mirror(M)
    target = canonical_form(M, 0)
    assert all(canonical_form(W, d) != target for d in range(W.dart_count))


def test_canonical_form_root_out_of_range():
    with pytest.raises(ValueError):
        canonical_form(PATH2, 4)


def test_is_isomorphic_examples():
    from paleymaps.ffield import build_field

    F = build_field(3, 2)
    i = F.from_coefficients([0, 1])
    assert is_isomorphic(paley_map(9, 4, i), paley_map(9, 4, F.neg(i)))
    M = paley_map(13, 6, 4)
    assert is_isomorphic(M, M)
    assert not is_isomorphic(paley_map(13, 6, 4), paley_map(13, 6, 10))


def test_regularity_degree_path():
    assert brute_force_automorphisms(PATH2) == 2
    assert regularity_degree(PATH2) == 2


@pytest.mark.parametrize("q,n", [(4, 3), (5, 4), (9, 4), (13, 6), (7, 6)])
def test_regularity_degree_paley(q, n):
    assert regularity_degree(paley_map(q, n)) == n * q


def test_regularity_matches_canonical_codes():
    # two routes to |Aut+|: equal BFS codes, and the vectorised transport
    for M in (PATH2, paley_map(7, 6), paley_map(8, 7), OrientedMap([2, 3, 5, 0, 4, 1], [1, 0, 3, 2, 5, 4])):
        root = canonical_form(M, 0)
        by_codes = sum(canonical_form(M, d) == root for d in range(M.dart_count))
        assert regularity_degree(M) == by_codes


def test_mirror_involution():
    M = paley_map(13, 6)
    assert mirror(mirror(M)) == M


def test_mirror_is_inverse_generator():
    from paleymaps.ffield import build_field

    F = build_field(13)
    for s in (4, 10):
        assert is_isomorphic(mirror(paley_map(13, 6, s)), paley_map(13, 6, F.inv(s)))


def test_mirror_reflexible_torus():
    assert is_reflexible(paley_map(9, 4))
    assert not is_reflexible(paley_map(8, 7))


def test_wilson_identity_and_errors():
    M = paley_map(17, 8)
    assert wilson(M, 1) == M
    with pytest.raises(ValueError):
        wilson(M, 2)
    assert wilson(M, -1) == mirror(M)


def test_wilson_frobenius_fixes_map():
    M = paley_map(25, 12)
    assert is_isomorphic(wilson(M, 5), M)


def test_wilson_matches_generator_power():
    from paleymaps.ffield import build_field

    F = build_field(2, 4)
    spec = paley_spec(16, 15)
    M = paley_map(16, 15)
    for j in (1, 2, 4, 7, 8, 11, 13, 14):
        assert is_isomorphic(wilson(M, j), paley_map(16, 15, F.pow(spec.s, j)))


def test_dump_roundtrip():
    M = paley_map(7, 6)
    text = M.dumps()
    lines = text.splitlines()
    assert lines[0] == "darts 42"
    assert len(lines) == 4
    back = OrientedMap.loads(text)
    assert back == M
    assert np.array_equal(back.vertex_of, M.vertex_of)


def test_loads_rejects_garbage():
    with pytest.raises(ValueError):
        OrientedMap.loads("darts 2\n1 0\n")


def test_quotient_by_vertex_power_trivial():
    M = paley_map(7, 6)
    assert is_isomorphic(quotient_by_vertex_power(M, 1), M)
    with pytest.raises(ValueError):
        quotient_by_vertex_power(M, 4)


@settings(max_examples=150, deadline=None)
@given(connected_maps())
def test_euler_characteristic_even(M):
    inv = trace_invariants(M, petrie=False)
    assert inv.euler_char == 2 - 2 * inv.genus
    assert inv.genus >= 0
    assert inv.edges * 2 == M.dart_count


@settings(max_examples=150, deadline=None)
@given(connected_maps())
def test_face_permutations_conjugate(M):
    sa = sorted(map(len, perm_cycles(M.sigma[M.alpha])))
    as_ = sorted(map(len, perm_cycles(M.alpha[M.sigma])))
    assert sa == as_


@settings(max_examples=150, deadline=None)
@given(connected_maps())
def test_regularity_divides_darts(M):
    assert M.dart_count % regularity_degree(M) == 0


@settings(max_examples=100, deadline=None)
@given(connected_maps(max_edges=4))
def test_regularity_equals_brute_force(M):
    assert regularity_degree(M) == brute_force_automorphisms(M)


@settings(max_examples=150, deadline=None)
@given(connected_maps(), st.data())
def test_relabelled_map_is_isomorphic(M, data):
    perm = data.draw(st.permutations(range(M.dart_count)))
    N = relabel(M, perm)
    assert is_isomorphic(M, N)
    # canonical codes agree with the transport route root by root
    target = canonical_form(M, 0)
    by_codes = [canonical_form(N, d) == target for d in range(N.dart_count)]
    assert rooted_isomorphisms(M, N).tolist() == by_codes


@settings(max_examples=100, deadline=None)
@given(connected_maps(max_edges=4), connected_maps(max_edges=4))
def test_isomorphism_matches_codes(M, N):
    target = canonical_form(M, 0)
    by_codes = M.dart_count == N.dart_count and any(
        canonical_form(N, d) == target for d in range(N.dart_count))
    assert is_isomorphic(M, N) == by_codes


@settings(max_examples=100, deadline=None)
@given(connected_maps(max_edges=5), st.data())
def test_mirror_and_wilson_respect_isomorphism(M, data):
    N = relabel(M, data.draw(st.permutations(range(M.dart_count))))
    assert is_isomorphic(mirror(M), mirror(N))
    vals = {len(c) for c in perm_cycles(M.sigma)}
    js = [j for j in range(1, 8) if all(np.gcd(j, v) == 1 for v in vals)]
    j = data.draw(st.sampled_from(js))
    assert is_isomorphic(wilson(M, j), wilson(N, j))


def test_isomorphism_is_equivalence_on_pool():
    pool = [paley_map(13, 6, s) for s in (4, 10)] + [mirror(paley_map(13, 6, 4))] + \
        [paley_map(7, 6, s) for s in (3, 5)]
    rel = [[is_isomorphic(a, b) for b in pool] for a in pool]
    for i in range(len(pool)):
        assert rel[i][i]
        for j in range(len(pool)):
            assert rel[i][j] == rel[j][i]
            for k in range(len(pool)):
                if rel[i][j] and rel[j][k]:
                    assert rel[i][k]
