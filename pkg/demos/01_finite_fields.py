"""Finite fields: the arithmetic underneath every algebraic construction."""

# %%
from srgsep.gf import frobenius, make_field, power_classes, primitive_element, subfield_elements

f = make_field(2, 4)  # GF(16)
print(f, "modulus coefficients (low degree first):", f.modulus)

g = primitive_element(f)
print("primitive element:", g, "order", f.order(g.value))

# %%
# elements are small ints in the library core; FieldElement wraps them for readable code
x = f.element([0, 1])
print("x^4 =", x**4, "  x^15 =", x**15)
print("x * x^-1 =", x * x.inv())

# %%
# cosets of the cubes: the connection set of the Clebsch graph is class 0
for i, cls in enumerate(power_classes(f, 3)):
    print(f"class {i}:", [str(f.element(c)) for c in cls])

# %%
# GF(4) inside GF(16) is the fixed field of x -> x^4
sub = subfield_elements(f, 2)
print("GF(4) in GF(16):", [str(f.element(s)) for s in sub])
print("fixed by frobenius^2:", all(frobenius(f, s, 2) == s for s in sub))
