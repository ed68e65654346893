"""
Relation tables and their two safety nets.

Every relation ships as an explicit pair of words.  Two independent
checks guard the data: every relation must abelianize to zero, and over
the groups covered by a word-problem oracle (torus n <= 4, Klein bottle
n = 2) both sides must have the same normal form after translation.
"""

from sigmabraid import abelianize, instantiate_family, instantiate_presentation
from sigmabraid.models import dictionary_for, translate, words_equal
from sigmabraid.words import serialize_word

table = instantiate_presentation("P", "K", 2)
print(f"Presentation table for {table.group} ({len(table)} relations):")
for r in table.relations:
    print(f"  {r.name:12} {serialize_word(r.lhs):22} = {serialize_word(r.rhs) or '1'}")

print("\nDerived family S1 on the torus, n = 3:")
for r in instantiate_family("S1", "T", 3).relations:
    print(f"  {r.name:12} {serialize_word(r.lhs):16} = {serialize_word(r.rhs)}")

print("\nSafety net 1: abelianization")
bad = 0
for surface in ("T", "K"):
    for family in ("P", "B"):
        for n in range(1, 6):
            t = instantiate_presentation(family, surface, n)
            bad += sum(not abelianize(t.group, r.lhs * r.rhs.inverse()).is_zero()
                       for r in t.relations)
print(f"  relations failing the abelianization check, n <= 5: {bad}")

print("\nSafety net 2: the word-problem oracle")
for surface, n in (("T", 2), ("T", 3), ("T", 4), ("K", 2)):
    dic = dictionary_for(surface, n)
    t = instantiate_presentation("P", surface, n)
    fails = [r.name for r in t.relations
             if not words_equal(dic.model, translate(dic, r.lhs, "to_model"),
                                translate(dic, r.rhs, "to_model"))]
    print(f"  P/{surface} n={n}: {len(t)} relations, oracle failures: {fails or 'none'}")

print("\nJSON export of a table (first entry):")
print(" ", instantiate_presentation("P", "T", 2).to_json()["relations"][0])
