"""Finite fields, primitive elements and the roots the code constructions need."""
from constacyclic import make_field, nth_root_of, prth_root, root_of_unity
from constacyclic.field_core import element_order

# GF(25) is built from the smallest irreducible quadratic, x^2 + x + 1
F = make_field(5, 2)
print(F)
print("generator b has coordinates", F.generator.coeffs, "and order", element_order(F.generator))

# integers embed as multiples of one; encodings are reached with from_int
print("F(7) =", F(7), "  from_int(7) =", F.from_int(7), F.from_int(7).coeffs)

# a primitive 8th root of unity exists because 8 divides 24
alpha = root_of_unity(F, 8)
print("alpha =", alpha, "with order", element_order(alpha))
print("alpha^4 =", alpha**4, "which is -1:", alpha**4 == F(-1))

# the Frobenius map is a bijection, so every element has a unique p^r-th root
lam = F.gen_pow(2)
for r in range(4):
    root = prth_root(F, lam, r)
    print(f"5^{r}-th root of b^2 is {root!r}; raised back: {root ** 5**r!r}")

# delta with delta^1750 = b^2 turns b^2-constacyclic codes of length 1750 into cyclic ones
delta = nth_root_of(F, lam, 1750)
print("delta =", delta, " delta^1750 =", delta**1750)
print("b is not a square:", nth_root_of(F, F.generator, 2))
