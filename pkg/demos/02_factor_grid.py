"""Factoring x^7 - 1 over GF(25) and twisting the factors into x^14 +- 1."""
from constacyclic import factor_binomial, factor_grid, make_field
from constacyclic.polyring import Poly

F = make_field(5, 2)
fl = factor_binomial(F, 7, 1)
for f in fl.polys:
    print(f"  degree {f.degree}: {f}")
print("product is x^7 - 1:", fl.product() == fl.target)

# Written in beta = b^17, another primitive element, the cubics read
# x^3 + beta x^2 + beta^17 x + 4 and x^3 + beta^5 x^2 + beta^13 x + 4.
beta = F.gen_pow(17)
four = F(4)
print("beta form matches:", set(fl.polys[1:]) == {
    Poly(F, [four, beta**17, beta, 1]), Poly(F, [four, beta**13, beta**5, 1])})

# twists by powers of a 2^a-th root of unity give the factors of longer binomials
for variant in ("all", "odd"):
    g = factor_grid(F, 1, 7, variant=variant)
    print(f"\nvariant {variant}: target {g.target}")
    for (k, i), f in sorted(g.grid.items()):
        print(f"  k={k} i={i}: {f}")
    print("  monic product matches:", g.product() == g.target)

# before monic normalization the all-variant product is off by a unit
g = factor_grid(F, 1, 7)
print("\nraw product equals -(x^14 - 1):", g.raw_product() == -g.target)
