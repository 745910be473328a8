"""Reduce sum_j [j]! z^j (z^j)* on S^5_q and show the intermediate sizes."""

from cpq.sphere import c_N, normal_form

ell = 2
for N in range(5):
    raw = c_N(ell, N)
    nf = normal_form(raw)
    print(f"N={N}: {len(raw.terms):3d} summands -> {nf.is_scalar().pretty()}")
