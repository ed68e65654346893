"""
Classifying character-sphere points.

For each computed family the complement of the invariant is a finite
union of explicit pieces; classification is an exact pattern match on
the canonical integer form of the point.  The strand-permutation action
moves the sphere and preserves the complement.
"""

from sigmabraid import (
    act_permutation,
    commutator_fg_flag,
    decide_sigma,
    enumerate_complement,
    klein_character,
    r_infinity_certificate,
    sphere_character,
    sphere_point,
    torus_character,
)
from sigmabraid.words import GroupContext

print("Classification across the families:")
samples = [
    (GroupContext("P", "K", 2), sphere_point(klein_character(2, [1, -1]))),
    (GroupContext("P", "K", 2), sphere_point(klein_character(2, [1, 1]))),
    (GroupContext("P", "T", 3), sphere_point(torus_character(3, [1, -1, 0], [2, -2, 0]))),
    (GroupContext("P", "T", 3), sphere_point(torus_character(3, [1, -1, 0], [0, 2, -2]))),
    (GroupContext("P", "S2", 4), sphere_point(sphere_character(4, {(1, 3): 1}))),
    (GroupContext("P", "S2", 3), sphere_point(sphere_character(3, {(1, 3): 1}))),
]
for group, pt in samples:
    v = decide_sigma(group, pt)
    print(f"  {str(group):10} {str(pt.coords):28} -> {v.membership:12} witness={v.witness}")

for group in (GroupContext("B", "S2", 3), GroupContext("P", "RP2", 3)):
    print(f"  {str(group):10} {'(no characters)':28} -> {decide_sigma(group).membership}")

print("\nComplement sizes:")
for group in (GroupContext("P", "T", 4), GroupContext("P", "K", 4), GroupContext("P", "S2", 5)):
    enum = enumerate_complement(group)
    print(f"  {group}: {enum.count} pieces, e.g. {enum.descriptors[:2]}")

print("\nThe permutation action preserves the complement:")
group = GroupContext("P", "K", 3)
pt = sphere_point(klein_character(3, [1, -1, 0]))
for tau in [(1, 2, 3), (2, 1, 3), (3, 1, 2)]:
    moved = act_permutation(group, tau, pt)
    v = decide_sigma(group, moved)
    print(f"  tau={tau}: coords {moved.coords} -> {v.membership} witness={v.witness}")

print("\nApplications:")
cert = r_infinity_certificate(3, matrix=[[1, 0, 0], [0, 1, 0], [0, 0, 1]])
print(f"  identity matrix on P_3(K): certified={cert.certified}, "
      f"index bound {cert.index_bound}")
flags = {(s, n): commutator_fg_flag(GroupContext("P", s, n))
         for s in ("T", "K", "S2") for n in (1, 2, 3, 4)}
print("  finitely generated commutator subgroups:",
      sorted(k for k, v in flags.items() if v))
