"""Two self-duality criteria for negacyclic codes, and where they part ways.

The structural test pairs each factor of x^(2^a m) + 1 with its reciprocal.
The order-parity rule says a self-dual code exists iff ord_m(q) is odd.
For q = 5, n = 70 and q = 9, n = 30 the rule says no, yet explicit codes
pass the G G^T = 0 check.
"""
from constacyclic import consistency_report, make_field, shape_decompose
from constacyclic.constacode import generator_rows
from constacyclic.oracle import check_matrix_selfdual
from constacyclic.selfdual_neg import classify_factors

for p, s, n in ((5, 1, 70), (3, 2, 30), (3, 2, 126)):
    F = make_field(p, s)
    shape = shape_decompose(n, p)
    cls = classify_factors(F, shape.M)
    rep = consistency_report(F, shape)
    print(f"\nq={F.q}, n={n} = 2^{shape.a} * {shape.m} * {p}^{shape.r}")
    print(f"  x^{shape.M} + 1: {cls.s} self-reciprocal factors, {cls.t} reciprocal pairs")
    for h, hs in cls.pairs:
        print(f"    {h}  <->  {hs}")
    print(f"  ord_{shape.m}({F.q}) = {rep.ord_value}")
    print(" ", rep)
    if rep.witness is not None:
        G = generator_rows(rep.witness)
        print(f"  witness: {len(G)} x {n} generator matrix, G G^T = 0: {check_matrix_selfdual(G, F)}")
    for line in rep.conflicts:
        print("  conflict:", line)
