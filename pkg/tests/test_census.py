import json

import pytest

from helpers import burnside_orbits, census, low_degree_rows, orbit_min, raw_curves, table_classes
from tropreal.census import candidate_vectors, enumerate_curves, run_census
from tropreal.tropcurve import canonical_form, curve_from_vectors

EXACT_CLASSES = {1: 3, 2: 18, 3: 173, 4: 1974}
RAW_CURVES = {1: 10, 2: 176, 3: 2939, 4: 42000}


@pytest.mark.parametrize("d", [1, 2])
def test_enumeration_matches_brute_force(d):
    assert [c.vectors for c in enumerate_curves(d)] == sorted({orbit_min(vs) for vs in raw_curves(d)})


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_class_counts(d):
    assert len(raw_curves(d)) == RAW_CURVES[d]
    assert len(enumerate_curves(d)) == EXACT_CLASSES[d]


@pytest.mark.parametrize("d", [1, 2, 3])
def test_class_counts_by_burnside(d):
    assert burnside_orbits(raw_curves(d)) == EXACT_CLASSES[d]


def test_degree_one_classes():
    assert [c.vectors for c in enumerate_curves(1)] == [
        ((0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0)),
        ((0, 0, 0, 1), (0, 0, 1, 0), (1, 1, 0, 0)),
        ((0, 0, 1, 1), (1, 1, 0, 0)),
    ]


def test_enumerated_curves_are_valid_and_canonical():
    for d in (1, 2, 3):
        for c in enumerate_curves(d):
            assert curve_from_vectors(c.vectors) == c
            assert canonical_form(c) == c


def test_candidate_vectors():
    cands = candidate_vectors(2)
    assert len(cands) == 4 * 2 + 6 * 4 and cands == sorted(cands)
    with pytest.raises(ValueError):
        enumerate_curves(0)


def test_frozen_characteristic_zero_summaries():
    assert census(2, 0).summary()["non_realizable"] == 1
    s3 = census(3, 0).summary()
    assert (s3["classes"], s3["non_realizable"], s3["undetected"]) == (173, 17, 0)
    s4 = census(4, 0).summary()
    assert (s4["classes"], s4["non_realizable"], s4["not_flagged_by_intprod"], s4["undetected"]) == (1974, 137, 21, 9)


def test_frozen_positive_characteristic_counts():
    assert census(3, 2).summary()["non_realizable"] == 19
    assert census(4, 2).summary()["non_realizable"] == 146
    assert census(3, 3).summary()["non_realizable"] == 17
    assert census(4, 3).summary()["non_realizable"] == 142
    assert census(4, 5).summary()["non_realizable"] == 137


def test_degree_three_matches_table():
    assert {r.curve.vectors for r in census(3, 0).non_realizable()} == table_classes(low_degree_rows(3))


def test_source_table_lists_one_degree_four_class_twice():
    from helpers import reference_tables

    rows = reference_tables()["degree4_not_intprod"]
    assert len(rows) == 22 and len(table_classes(rows)) == 21
    a = orbit_min([(3, 2, 0, 0), (1, 0, 3, 0), (0, 2, 0, 3), (0, 0, 1, 1)])
    b = orbit_min([(3, 2, 0, 0), (1, 0, 0, 3), (0, 2, 3, 0), (0, 0, 1, 1)])
    assert a == b


def test_parallel_run_is_byte_identical():
    one = json.dumps(run_census(3, 0, jobs=1).to_json(), sort_keys=True)
    two = json.dumps(run_census(3, 0, jobs=2).to_json(), sort_keys=True)
    assert one == two


def test_irreducible_census_and_json_schema():
    rep = run_census(2, 0, with_irr=True)
    doc = rep.to_json()
    assert set(doc) == {"degree", "characteristic", "summary", "classes"}
    assert set(doc["summary"]) == {"classes", "non_realizable", "flagged", "undetected",
                                   "not_flagged_by_intprod", "flagged_but_realizable", "irreducibly_realizable"}
    for cls in doc["classes"]:
        assert set(cls) == {"P", "dim", "irr_dim", "obstructions"}
        assert cls["irr_dim"] in (-1, cls["dim"])
    irr = {tuple(map(tuple, c["P"])): c["irr_dim"] for c in doc["classes"]}
    assert 0 < doc["summary"]["irreducibly_realizable"] < doc["summary"]["classes"]
    assert irr[((0, 0, 2, 2), (2, 2, 0, 0))] == -1
    assert "irreducibly_realizable" not in census(2, 0).summary()
