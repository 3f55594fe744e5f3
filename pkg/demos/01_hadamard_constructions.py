"""
Real Hadamard matrices
======================

Build Hadamard matrices by doubling (Sylvester) and from quadratic residues
(Paley), check H @ H.T == n I exactly, and look at which orders can occur.
"""

# %%
# The 2x2 coin and its doublings
import numpy as np

from hadamard_oracles import admissible_order, is_hadamard, paley, sign_gram, sylvester
from hadamard_oracles.matcore import format_smat

h2 = sylvester(1)
print(format_smat(h2))
print(sign_gram(h2))

h8 = sylvester(3)
print(format_smat(h8))
print("H8 Hadamard:", is_hadamard(h8))

# %%
# Paley gives orders that are not powers of two, e.g. 12 from q = 11
h12 = paley(11)
print(format_smat(h12))
print("H12 Hadamard:", is_hadamard(h12))
print("gram == 12 I:", np.array_equal(sign_gram(h12), 12 * np.eye(12, dtype=int)))

# %%
# Orders 1, 2 and multiples of 4 are the only candidates
for n in range(1, 17):
    v = admissible_order(n)
    print(f"{n:3d}  {'yes' if v.admissible else 'no ':3s}  {v.reason.value}")
