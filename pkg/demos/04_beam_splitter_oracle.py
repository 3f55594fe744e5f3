"""
Beam splitters as randomness sources
====================================

A normalized (complex) Hadamard matrix is a lossless splitter sending a
single quantum to every output port with equal probability.  Running the
light back through U^dagger recovers the input, and sampling the detector
clicks gives a reproducible simulated bit source.
"""

# %%
import numpy as np

from hadamard_oracles import (
    GapSourceConfig,
    Model,
    StateVector,
    beamsplitter_from,
    mach_zehnder_check,
    output_distribution,
    sample_bits,
    schwinger_basis,
    sign_to_phase,
    sylvester,
)
from hadamard_oracles.quantum_sim import random_state

coin = beamsplitter_from(sign_to_phase(sylvester(1)))
print(np.round(coin.unitary.entries.real, 4))
print("port 0 ->", output_distribution(coin, 0))

# %%
# Three ports: more than two exclusive outcomes
tri = beamsplitter_from(schwinger_basis(3))
print(output_distribution(tri, 0))

# %%
# U then U^dagger gives back the input state
for b in (coin, tri, beamsplitter_from(schwinger_basis(8))):
    errors = [mach_zehnder_check(b, random_state(b.n, s)).summary["error"] for s in range(100)]
    print(f"n={b.n}: max error {max(errors):.2e}")

# %%
# Sampled outcomes, coded by port number
s = sample_bits(GapSourceConfig(Model.BEAMSPLITTER, seed=1, length=64))
print(s)
s3 = sample_bits(GapSourceConfig(Model.BEAMSPLITTER, seed=1, length=30000, n=3))
print(np.bincount(s3.symbols) / len(s3))

# %%
# The classical gaps: a rock falling left/right, and an atom that may emit
print(sample_bits(GapSourceConfig(Model.SYMMETRY_BREAK, seed=2, length=64, p=0.5)))
print(sample_bits(GapSourceConfig(Model.EMISSION, seed=3, length=64, p=0.1)))
