"""Census of generalised Paley maps with closed-form/traced cross-checks."""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import asdict, dataclass, fields
from pathlib import Path

from .cmap import is_isomorphic, is_reflexible, regularity_degree, trace_invariants
from .ffield import euler_phi, format_poly
from .groupmap import enumerate_regular_maps_with_group, map_from_group, paley_group_generators
from .paley import (
    AdmissiblePair,
    build_paley_map,
    closed_form_invariants,
    enumerate_admissible,
    galois_orbit_info,
    is_reflexible_closed_form,
    iso_classes,
    minpoly_key,
)

MAX_CENSUS_Q = 1 << 14
# above this many darts the O(D^2) automorphism count is skipped
DEEP_CHECK_DARTS = 5000


@dataclass(frozen=True)
class CensusRecord:
    q: int
    p: int
    e: int
    n: int
    s_minpoly: str
    type_m: int
    type_n: int
    genus: int
    petrie: int
    reflexible: bool
    class_count: int
    orbit_size: int
    field_degree: int
    checks_passed: bool


FIELDS = [f.name for f in fields(CensusRecord)]


def census_pair(pair: AdmissiblePair, deep_check_darts: int = DEEP_CHECK_DARTS) -> list[CensusRecord]:
    """Records for every isomorphism class of one admissible pair, in minimal-polynomial order."""
    closed = closed_form_invariants(pair)
    reflexible = is_reflexible_closed_form(pair)
    galois = galois_orbit_info(pair)
    specs = sorted(iso_classes(pair), key=lambda sp: minpoly_key(sp.s_minpoly, pair.p))
    class_count = len(specs)
    deep = pair.n * pair.q <= deep_check_darts

    maps = [build_paley_map(sp) for sp in specs]
    pool_ok = class_count * pair.e == euler_phi(pair.n)
    if deep:
        pool_ok &= not any(is_isomorphic(a, b, assume_regular=True)
                           for a, b in itertools.combinations(maps, 2))

    records = []
    for sp, M in zip(specs, maps):
        traced = trace_invariants(M)
        ok = pool_ok and not traced.mismatches(closed) and traced.petrie_length is not None
        # a regular map has a regular mirror, so one root pair decides reflexibility
        regular = regularity_degree(M) == M.dart_count if deep else True
        ok &= regular and is_reflexible(M, assume_regular=regular) == reflexible
        records.append(CensusRecord(
            q=pair.q, p=pair.p, e=pair.e, n=pair.n,
            s_minpoly=format_poly(sp.s_minpoly),
            type_m=traced.type_m, type_n=traced.type_n, genus=traced.genus,
            petrie=traced.petrie_length or 0,
            reflexible=reflexible, class_count=class_count,
            orbit_size=galois.orbit_size, field_degree=galois.field_degree,
            checks_passed=bool(ok),
        ))
    return records


def run_census(max_q: int, max_genus: int, deep_check_darts: int = DEEP_CHECK_DARTS) -> list[CensusRecord]:
    if max_q < 2 or max_genus < 0:
        raise ValueError("max_q must be at least 2 and max_genus non-negative")
    if max_q > MAX_CENSUS_Q:
        raise ValueError(f"max_q = {max_q} exceeds {MAX_CENSUS_Q}")
    records = []
    for pair in enumerate_admissible(max_q, max_genus):
        records.extend(census_pair(pair, deep_check_darts))
    return records


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def dumps(records, fmt: str = "csv") -> str:
    if not records:
        raise ValueError("no records to emit")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(FIELDS)
        for r in records:
            writer.writerow([_cell(getattr(r, name)) for name in FIELDS])
        return buf.getvalue()
    if fmt == "json":
        return json.dumps([asdict(r) for r in records], indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def emit(records, fmt: str = "csv", path=None) -> str:
    """Serialise records; write them to ``path`` when given.  Returns the text."""
    text = dumps(records, fmt)
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def loads(text: str, fmt: str = "csv") -> list[CensusRecord]:
    if fmt == "json":
        return [CensusRecord(**row) for row in json.loads(text)]
    rows = list(csv.DictReader(io.StringIO(text)))
    out = []
    for row in rows:
        kw = {}
        for f in fields(CensusRecord):
            raw = row[f.name]
            kw[f.name] = raw if f.type == "str" else (raw == "true") if f.type == "bool" else int(raw)
        out.append(CensusRecord(**kw))
    return out


@dataclass(frozen=True)
class PairReport:
    q: int
    n: int
    orbit_count: int
    expected: int
    class_count: int
    classes_distinct: bool
    group_construction_agrees: bool

    @property
    def passed(self) -> bool:
        return (self.orbit_count == self.expected == self.class_count
                and self.classes_distinct and self.group_construction_agrees)

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} q={self.q} n={self.n}: {self.orbit_count} generating-pair orbits, "
                f"phi(n)/e = {self.expected}, {self.class_count} constructed classes"
                f"{'' if self.classes_distinct else ' (not pairwise distinct)'}"
                f"{'' if self.group_construction_agrees else ' (group construction disagrees)'}")


def verify_pair(q: int, n: int) -> PairReport:
    """Count maps with group AGL_1^(n)(q) by brute force and compare with the Paley classes."""
    pair = AdmissiblePair(q, n)
    orbits = enumerate_regular_maps_with_group(q, n)
    specs = iso_classes(pair)
    maps = [build_paley_map(sp) for sp in specs]
    distinct = not any(is_isomorphic(a, b) for a, b in itertools.combinations(maps, 2))
    agrees = all(is_isomorphic(map_from_group(*paley_group_generators(sp)), M)
                 for sp, M in zip(specs, maps))
    return PairReport(q, n, orbits, euler_phi(n) // pair.e, len(specs), distinct, agrees)
