"""Constacyclic codes: counting, duals, self-duality and equivalence to cyclic codes."""
from constacyclic import (
    code_from_generator, cyclic_equivalent, dual, enumerate_codes, is_self_dual, make_field,
    shape_decompose,
)
from constacyclic.oracle import bruteforce_dual, codeword_set, map_image, min_distance
from constacyclic.polyring import Poly

F5 = make_field(5)
x = Poly.x(F5)

# x^10 + 1 = (x - 2)^5 (x - 3)^5 over GF(5): 6 * 6 negacyclic codes
shape = shape_decompose(10, 5)
codes = enumerate_codes(F5, shape, -1)
print("negacyclic codes of length 10 over GF(5):", codes.count)

c = code_from_generator(F5, 10, -1, (x - 2) ** 5)
print(c)
print("dual:", dual(c))
print("self-dual:", is_self_dual(c))
ws = codeword_set(c)
print(f"{len(ws)} codewords; brute-force dual equals the code: {bruteforce_dual(ws) == ws}")
print("minimum distance:", min_distance(c))

# no cyclic code of length 10 over GF(5) is self-dual
print("self-dual cyclic codes:", sum(is_self_dual(d) for d in enumerate_codes(F5, shape, 1)))

# every 4-constacyclic code of length 6 over GF(5) is a rescaled cyclic code
for d in enumerate_codes(F5, shape_decompose(6, 5), 4, limit=4):
    mono, cyc = cyclic_equivalent(d)
    same = map_image(codeword_set(cyc), mono.scalars) == codeword_set(d)
    print(f"  {d.gen}  <-  cyclic {cyc.gen}  scaled by {mono.delta!r}^i: {same}")

# at length 1750 only counting is feasible
F25 = make_field(5, 2)
print("codes of length 1750 over GF(25):", enumerate_codes(F25, shape_decompose(1750, 5), 1).count)
