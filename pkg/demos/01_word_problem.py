"""
Normal forms and the word problem in the semidirect models.

The pure braid groups P_2(T), P_2(K), P_3(T) and P_4(T) carry explicit
iterated semidirect-product structures, and every element has a unique
layered normal form.  This demo normalises a few words, checks some
identities, and shows the dictionaries between model letters and braid
generators.
"""

from sigmabraid import ModelId, dictionary, normalize, parse_model_word, translate, words_equal
from sigmabraid.words import parse_word, serialize_word


def show(model, text):
    w = parse_model_word(text, model)
    nf = normalize(model, w)
    print(f"  {model.value}: {text!r:28} ->  {serialize_word(nf.as_word()) or '1'}")


print("Layered normal forms (fiber letters first, exponents last):")
show(ModelId.G2K, "b a")
show(ModelId.G2K, "a b y")
show(ModelId.G2K, "y x y^-1 x^-1")
show(ModelId.G3T, "x^-1 v x")
show(ModelId.G4T, "v^-1 ub v")

print("\nEquality tests (normal forms decide the word problem):")
for model, lhs, rhs in [
    (ModelId.G2K, "a b", "b a^-1"),
    (ModelId.G3T, "x v x^-1", "u v w u^-1"),
    (ModelId.G2T, "x a", "a x"),
    (ModelId.G2K, "x b", "b x"),
]:
    eq = words_equal(model, parse_model_word(lhs, model), parse_model_word(rhs, model))
    print(f"  {model.value}: {lhs!r} == {rhs!r} ?  {eq}")

print("\nDictionaries: model letters <-> pure braid generators")
dic = dictionary(ModelId.G3T)
for name in dic.model.letter_names:
    print(f"  {name:3} -> {serialize_word(dic.to_braid[name])}")
print("  ... and back, e.g. a2 ->",
      serialize_word(translate(dic, parse_word("a2", dic.braid_context), "to_model")))

# round trip through both directions lands on the same group element
w = parse_model_word("u v^-1 x y w", ModelId.G3T)
back = translate(dic, translate(dic, w, "to_braid"), "to_model")
print("\nRound trip u v^-1 x y w -> braid -> model equal again:",
      words_equal(ModelId.G3T, w, back))
