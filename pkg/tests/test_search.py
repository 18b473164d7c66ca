from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from ratio_lab.integrality import family_membership
from ratio_lab.lists import classify_type, involute, make_list, norm
from ratio_lab.search import (
    GOLDEN_NAMES,
    Catalog,
    SearchSpec,
    canonical_pair_key,
    d2_family_probe,
    enumerate_lists,
    family_search_5,
    load_golden,
    small_norm_catalog,
    sum_zero_divisor_lists,
    verify_catalog,
)

F = Fraction


def keys(lists):
    return {canonical_pair_key(a) for a in lists}


def test_family_search_5_count_and_members():
    found = family_search_5()
    assert len(found) == 19
    assert canonical_pair_key(make_list([1, 9, -2, -3, -5])) in keys(found)
    assert canonical_pair_key(make_list([1, 15, -2, -5, -9])) in keys(found)
    for a in found:
        assert a.total == 0 and norm(a) == F(1, 4)
        assert family_membership(a) == "sporadic"


def test_family_search_5_box_widening_adds_nothing():
    base = keys(family_search_5())
    widened = keys(family_search_5(a_bound=130, b_bound=86))
    assert widened == base


def test_enumerate_matches_naive_reference_tiny():
    spec = SearchSpec(length=3, support_modulus=12)
    ours = list(enumerate_lists(spec))
    # naive reference: raw triples, canonicalized, dedup by element tuple
    vals = [v for v in range(-12, 13) if v != 0 and 12 % abs(v) == 0]
    ref = {}
    for combo in combinations_with_replacement(vals, 3):
        a = make_list(combo)
        if a.length == 3 and a.is_primitive():
            ref[a.elements] = norm(a)
    assert {a.elements for a, _ in ours} == set(ref)
    assert all(ref[a.elements] == nv for a, nv in ours)
    # dedup soundness: no canonical form twice
    seen = [a.elements for a, _ in ours]
    assert len(seen) == len(set(seen))


def test_enumerate_length2_support2():
    pairs = [a.elements for a, _ in enumerate_lists(SearchSpec(length=2, support_modulus=2))]
    assert (1, -2) in pairs and (-1, 2) in pairs and (1, 2) in pairs
    assert all(len(p) == 2 for p in pairs)


def test_enumerate_requires_finiteness():
    with pytest.raises(ValueError):
        SearchSpec(length=3)


def test_enumerate_type_filter_length4():
    spec = SearchSpec(
        length=4,
        support_modulus=1728,
        norm_threshold=F(11, 60),
        type_filter="B",
    )
    found = dict(enumerate_lists(spec))
    # the sweep part of the length-4 catalog: 19 lists up to sign
    assert len({canonical_pair_key(a) for a in found}) == 19
    assert all(nv < F(11, 60) for nv in found.values())


def test_small_norm_4_catalog():
    cat = small_norm_catalog(4, F(11, 60))
    assert len(cat.entries) == 20
    by_norm = {}
    for e in cat.entries:
        by_norm.setdefault(e.norm, 0)
        by_norm[e.norm] += 1
    assert by_norm == {F(1, 6): 9, F(19, 108): 4, F(17, 96): 2, F(13, 72): 4, F(8, 45): 1}
    assert canonical_pair_key(make_list([1, -3, -5, 15])) in cat.keys()


def test_small_norm_5_catalog():
    cat = small_norm_catalog(5, F(31, 168))
    assert len(cat.entries) == 25
    norms = sorted(e.norm for e in cat.entries)
    assert norms.count(F(11, 60)) == 12
    assert canonical_pair_key(make_list([1, -2, 4, -8, 16])) in cat.keys()
    for e in cat.entries:
        assert classify_type(e.list) == "A"


def test_small_norm_6_exceptional_lists():
    cat = small_norm_catalog(6, F(7, 36))
    expected = keys(
        [
            make_list([1, -2, -3, 4, 6, -12]),
            make_list([1, -2, -3, 6, 8, -24]),
            make_list([1, -3, -4, 8, 12, -24]),
        ]
    )
    assert cat.keys() == expected
    assert {e.norm for e in cat.entries} == {F(1, 6), F(7, 36)}


def test_small_norm_7_minimum():
    cat = small_norm_catalog(7, F(5, 24))
    assert min(e.norm for e in cat.entries) == F(5, 24)
    assert all(e.norm == F(5, 24) for e in cat.entries)
    assert canonical_pair_key(make_list([1, -2, -3, 6, 9, -18, 36])) in cat.keys()


def test_small_norm_8_minimum():
    cat = small_norm_catalog(8, F(8, 45))
    assert [e.norm for e in cat.entries] == [F(8, 45)]
    assert cat.keys() == keys([make_list([1, -2, -3, 6, -5, 10, 15, -30])])


def test_small_norm_3_matches_box_reference():
    cat = small_norm_catalog(3, F(1, 7))
    assert len(cat.entries) == 5
    assert canonical_pair_key(make_list([1, -2, 4])) in cat.keys()
    assert min(e.norm for e in cat.entries) == F(1, 8)


def test_length4_catalog_involution_behaviour():
    # the involution preserves the norm on every entry; images that stay
    # at length 4 land back inside the catalog (up to sign)
    cat = small_norm_catalog(4, F(11, 60))
    ckeys = cat.keys()
    fixed = 0
    for e in cat.entries:
        bar = involute(e.list)
        assert norm(bar) == e.norm
        if bar.length == 4:
            assert canonical_pair_key(bar) in ckeys
            fixed += 1
    assert fixed == 4


def test_sum_zero_divisor_lists_small():
    lists = sum_zero_divisor_lists(6, 3)
    assert all(a.total == 0 and a.length == 3 and a.is_primitive() for a in lists)
    assert canonical_pair_key(make_list([1, 2, -3])) in keys(lists)
    # naive cross-check
    vals = [v for v in range(-6, 7) if v != 0 and 6 % abs(v) == 0]
    ref = set()
    for combo in combinations_with_replacement(vals, 3):
        a = make_list(combo)
        if a.length == 3 and a.total == 0 and a.is_primitive():
            ref.add(canonical_pair_key(a))
    assert keys(lists) == ref


def test_divisor_sweep_jobs_invariant():
    from ratio_lab.search import divisor_sweep_5

    # tiny modulus: sharding must not change the result set
    one = keys(divisor_sweep_5(modulus=360))
    two = keys(divisor_sweep_5(modulus=360, jobs=2))
    assert one == two and one


def test_golden_catalogs_load_and_verify():
    counts = {"sporadic_length5": 29, "sporadic_length7": 21, "sporadic_length9": 2}
    for name in GOLDEN_NAMES:
        cat = load_golden(name)
        report = verify_catalog(cat)
        assert report.ok, report
        if name in counts:
            assert len(cat.entries) == counts[name]


def test_golden_sporadics_are_sporadic():
    for name in ("sporadic_length5", "sporadic_length7", "sporadic_length9"):
        for e in load_golden(name).entries:
            assert e.norm == F(1, 4)
            assert e.list.total == 0 and e.list.length % 2 == 1
            assert family_membership(e.list) == "sporadic"


def test_catalog_env_override(tmp_path, monkeypatch):
    cat = load_golden("sporadic_length9")
    import json

    (tmp_path / "sporadic_length9.json").write_text(json.dumps(cat.to_json()))
    monkeypatch.setenv("RATIO_LAB_CATALOG_DIR", str(tmp_path))
    again = load_golden("sporadic_length9")
    assert again.keys() == cat.keys()


def test_verify_catalog_flags_corruption():
    cat = load_golden("sporadic_length9")
    bad = Catalog(
        name=cat.name,
        entries=(cat.entries[0], type(cat.entries[1])(list=cat.entries[1].list, norm=F(1, 5))),
    )
    report = verify_catalog(bad)
    assert len(report.failures) == 1
    assert report.checked == 2


def test_verify_catalog_empty():
    report = verify_catalog(Catalog(name="empty", entries=()))
    assert report.ok and report.checked == 0


def test_d2_family_probe_all_integral():
    report = d2_family_probe(range(1, 5), range(1, 5))
    assert report["checked"] > 0
    assert report["integral"] == report["checked"]
    # the (a,b)=(1,1) instance of the first family is present
    assert any(c["a"] == 1 and c["b"] == 1 for c in report["cases"])
