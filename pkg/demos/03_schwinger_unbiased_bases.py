"""
A basis unbiased to the standard basis
======================================

Shift the standard basis cyclically, form U = sum |e_i><f_i|, and use its
eigenvectors as a new basis.  Every overlap with the standard basis then has
squared modulus 1/n.
"""

# %%
import numpy as np

from hadamard_oracles import (
    PhaseMatrix,
    equiv_rows_phase,
    identity_basis,
    is_complex_hadamard,
    schwinger_basis,
    unbiased_check,
)
from hadamard_oracles.matcore import format_pmat
from hadamard_oracles.schwinger import shift_operator

n = 8
u = shift_operator(n).entries
print(u.real.astype(int))

# %%
# Rows of the phase matrix are eigenvectors: U v_k = exp(2 pi i k/n) v_k
p = schwinger_basis(n)
print(format_pmat(p))
v = np.exp(2j * np.pi * p.entries / n) / np.sqrt(n)
for k in range(n):
    eig = np.exp(2j * np.pi * k / n)
    print(k, np.allclose(u @ v[k], eig * v[k]))

# %%
# Complex Hadamard, and unbiased with respect to the standard basis
print("complex Hadamard:", is_complex_hadamard(p))
report = unbiased_check(p, identity_basis(n))
print("unbiased:", report.passed, "max deviation:", report.summary["max_dev"])

# %%
# A published version of this matrix uses another row order and a phase
# per row; exact equivalence up to those choices:
printed = PhaseMatrix([
    [0, 0, 0, 0, 0, 0, 0, 0],
    [4, 0, 4, 0, 4, 0, 4, 0],
    [2, 4, 6, 0, 2, 4, 6, 0],
    [6, 4, 2, 0, 6, 4, 2, 0],
    [1, 2, 3, 4, 5, 6, 7, 0],
    [7, 6, 5, 4, 3, 2, 1, 0],
    [3, 6, 1, 4, 7, 2, 5, 0],
    [5, 2, 7, 4, 1, 6, 3, 0],
], 8)
print("equivalent:", equiv_rows_phase(p, printed))

# %%
# Low dimensions stay real; from n = 4 on the entries are genuinely complex
for n in (1, 2, 4, 8):
    print(n, schwinger_basis(n).reduced().d)
