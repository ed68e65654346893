import json

import pytest

from sigmabraid.characters import abelianize
from sigmabraid.models import dictionary_for, translate, words_equal
from sigmabraid.presentations import (
    Relation,
    all_family_names,
    instantiate_family,
    instantiate_presentation,
    rejected_variant,
)
from sigmabraid.words import DomainError, GroupContext, IDENTITY, parse_word, serialize_word

ORACLE_SPECS = [("T", 2), ("T", 3), ("T", 4), ("K", 2)]


def by_name(table):
    return {r.name: r for r in table.relations}


def test_torus_two_strands():
    table = by_name(instantiate_presentation("P", "T", 2))
    r = table["1:a1-a2"]
    assert serialize_word(r.lhs) == "a1 a2" and serialize_word(r.rhs) == "a2 a1"
    assert "5:row1" in table and "5:row2" in table


def test_klein_two_strands_b_relation():
    table = by_name(instantiate_presentation("P", "K", 2))
    r = table["6:b2-b1"]
    # C[2,2] is the trivial braid, so only C[1,2] survives
    assert serialize_word(r.lhs) == "b2 b1"
    assert serialize_word(r.rhs) == "b1 b2 C[1,2]"


def test_single_strand_degenerates_to_commutator():
    table = instantiate_presentation("P", "T", 1)
    assert len(table) == 1
    (r,) = table.relations
    assert r.lhs == IDENTITY
    assert serialize_word(r.rhs) == "a1 b1 a1^-1 b1^-1"


def test_family_s1_instances():
    table = instantiate_family("S1", "T", 3)
    assert sorted(r.name for r in table.relations) == ["S1:1,2", "S1:1,3", "S1:2,3"]
    r = by_name(table)["S1:1,3"]
    assert serialize_word(r.lhs) == "a1 b3 a1^-1"
    assert serialize_word(r.rhs) == "b3 C[1,3] C[2,3]^-1"


def test_family_r4_klein():
    table = instantiate_family("R4", "K", 2)
    (r,) = table.relations
    assert serialize_word(r.lhs) == "b2 b1 s1"
    assert serialize_word(r.rhs) == "s1^-1 b2 b1"


def test_unsupported_family_combinations():
    with pytest.raises(DomainError):
        instantiate_family("P3", "K", 3)
    with pytest.raises(DomainError):
        instantiate_family("P1", "T", 2)
    with pytest.raises(DomainError):
        instantiate_family("S9", "T", 3)


def test_braid_table_contents():
    table = by_name(instantiate_presentation("B", "T", 3))
    assert serialize_word(table["artin:s1-s2"].lhs) == "s1 s2 s1"
    r = table["twist:s1-a1"]
    assert serialize_word(r.rhs) == "s1^-1 s1^-1 a2"
    r = table["twist:s1-b1"]
    assert serialize_word(r.rhs) == "b2 s1 s1"
    assert serialize_word(table["band:C1,3"].rhs) == "s2 s1 s1 s2^-1"


def test_all_relations_abelianize_to_zero():
    for surface in ("T", "K"):
        for family in ("P", "B"):
            for n in range(1, 5):
                table = instantiate_presentation(family, surface, n)
                for r in table.relations:
                    assert abelianize(table.group, r.lhs * r.rhs.inverse()).is_zero(), \
                        (surface, family, n, r.name)
        for name in all_family_names():
            for n in range(1, 5):
                try:
                    table = instantiate_family(name, surface, n)
                except DomainError:
                    continue
                for r in table.relations:
                    assert abelianize(table.group, r.lhs * r.rhs.inverse()).is_zero(), \
                        (surface, name, n, r.name)


def _oracle_check(table):
    dic = dictionary_for(table.group.surface, table.group.n)
    assert dic is not None
    return [r.name for r in table.relations
            if not words_equal(dic.model, translate(dic, r.lhs, "to_model"),
                               translate(dic, r.rhs, "to_model"))]


def test_presentations_pass_the_oracle():
    for surface, n in ORACLE_SPECS:
        assert _oracle_check(instantiate_presentation("P", surface, n)) == []


def test_pure_families_pass_the_oracle():
    for surface, n in ORACLE_SPECS:
        for name in all_family_names():
            try:
                table = instantiate_family(name, surface, n)
            except DomainError:
                continue
            if table.group.family != "P":
                continue
            assert _oracle_check(table) == [], (name, surface, n)


def test_rejected_variants_fail_the_oracle():
    # the encircling factors in S2 and in the first P2 row do not commute;
    # swapping them produces a different group element
    for name, surface, n in (("S2", "T", 3), ("S2", "T", 4),
                             ("P2", "T", 3), ("P2", "T", 4)):
        r = rejected_variant(name, surface, n)
        dic = dictionary_for(surface, n)
        assert not words_equal(dic.model,
                               translate(dic, r.lhs, "to_model"),
                               translate(dic, r.rhs, "to_model")), (name, surface, n)


def test_relation_counts_grow_with_n():
    assert len(instantiate_presentation("P", "T", 2)) == 8
    assert len(instantiate_presentation("P", "T", 3)) == 29
    assert len(instantiate_presentation("P", "T", 4)) == 75


def test_json_export_roundtrip():
    table = instantiate_presentation("P", "K", 3)
    doc = json.loads(table.to_json_text())
    assert doc["group"] == "P" and doc["surface"] == "K" and doc["n"] == 3
    ctx = GroupContext("P", "K", 3)
    for entry in doc["relations"]:
        lhs = parse_word(entry["lhs"], ctx)
        rhs = parse_word(entry["rhs"], ctx)
        assert abelianize(ctx, lhs * rhs.inverse()).is_zero()
