"""
Sign and angle substitutions in a rotation product
==================================================

Products D0 * (plane rotations) * D1 with diagonal signs and every rotation
angle set to +-pi/4: which assignments land exactly on a scaled real
Hadamard matrix?  This is an experiment; the answer is reported, not
assumed.
"""

# %%
import numpy as np

from hadamard_oracles import dita_explore
from hadamard_oracles.schwinger import dita_matrix, hit_to_sign_matrix

r2 = dita_explore(2)
print(r2.to_text()[:200])
print(np.round(np.sqrt(2) * dita_matrix(2, "00", "0", "00"), 6))
print(hit_to_sign_matrix(2, r2.hadamard_hits[0]).entries)

# %%
r4 = dita_explore(4)
print("n=4 tested:", r4.assignments_tested, "hits:", len(r4.hadamard_hits))

# %%
# A typical n=4 product has entries of several magnitudes
u = dita_matrix(4, "0000", "000000", "0000")
print(np.round(2 * np.abs(u), 4))
