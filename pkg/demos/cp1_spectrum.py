"""Print the first eigenvalues of D on the quantum 2-sphere next to [k][k+1]."""

import sys

from cpq.qscalar import qnum
from cpq.spectra import full_spectrum

q = float(sys.argv[1]) if len(sys.argv) > 1 else 0.5
sp = full_spectrum(1, 0, 7, q=q, convention="cp1")
print(f"q = {q}")
print(f"{'k':>3} {'D^2':>14} {'[k][k+1]':>14} {'mult':>5}")
for x in sp.d_lines:
    if x.sign != 1:
        continue
    k = x.level + 1
    print(f"{k:>3} {x.numeric:>14.6f} {(qnum(k) * qnum(k + 1)).evaluate(q):>14.6f} {x.multiplicity:>5}")
