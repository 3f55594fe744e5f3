"""
From biased bits to Borel-normal bits
=====================================

Independent but biased bits (here 70% ones) fail simple frequency checks.
The von Neumann extractor keeps the first bit of each unequal pair and
yields balanced output, which then passes the finite Borel normality test.
"""

# %%
from hadamard_oracles import (
    GapSourceConfig,
    Model,
    borel_normality_test,
    monobit_summary,
    sample_bits,
    von_neumann_extract,
)

raw = sample_bits(GapSourceConfig(Model.SYMMETRY_BREAK, seed=42, length=10**6, p=0.7))
print("raw ones frequency:", raw.symbols.mean())
print(monobit_summary(raw).to_text())

# %%
clean = von_neumann_extract(raw)
print("kept", len(clean), "of", len(raw), "bits (expected about 210000)")
print(monobit_summary(clean).to_text())

# %%
report = borel_normality_test(clean)
print("Borel normal:", report.passed, report.summary)
worst = max(report.details, key=lambda d: d["dev"])
print("largest deviation:", worst)

# %%
# The raw stream is not
print("raw Borel normal:", borel_normality_test(raw).passed)
