"""
The minimally elliptic cases n = 1 and n = 2
============================================

Here the shift acts with finite order (6 and 4), so charges can be moved into
a fundamental domain and every resolution is periodic. Rows of the printed
tables are indexed by j - i.
"""
from ellmcm.minell import (MinellInput, betti_table_minell, fundamental_domain_reduce, hilbert_series_minell,
                           invariants_minell, orbit)

print("orbit of (0, 1), n = 1:", [tuple(z) for z in orbit(1, (0, 1))])
print("reduced:", fundamental_domain_reduce(1, (0, 1)))
print("reduced (n = 2):", fundamental_domain_reduce(2, (1, 3)))

for inp in [MinellInput(1, (3, 1)), MinellInput(1, (2, 0), atiyah=True), MinellInput(2, (1, 1))]:
    print()
    print(inp.as_dict())
    t = betti_table_minell(inp, (0, 12), (0, 3))
    print(t.render_text())
    f, k = hilbert_series_minell(inp)
    print("H(t) =", f"t^{k} * {f}" if k else f)
    print(invariants_minell(inp))
