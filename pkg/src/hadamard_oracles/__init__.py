"""Hadamard matrices, unbiased bases, beam-splitter sources and randomness extraction."""

from .bitstream import BitStream, read_stream, to_binary, write_stream
from .constructions import (
    AdmissibilityVerdict,
    Reason,
    admissible_order,
    is_hadamard,
    normalize_sign,
    paley,
    sylvester,
)
from .extraction import (
    BorelParameters,
    borel_normality_test,
    monobit_summary,
    von_neumann_extract,
)
from .matcore import (
    TIGHT_TOL,
    TOL,
    FormatError,
    PhaseMatrix,
    SignMatrix,
    StateVector,
    TestReport,
    UnitaryDense,
    mat_apply,
    phase_mul,
    phase_to_unitary,
    read_matrix,
    sign_gram,
    sign_to_phase,
    write_matrix,
)
from .quantum_sim import (
    BeamSplitter,
    GapSourceConfig,
    Model,
    beamsplitter_from,
    mach_zehnder_check,
    output_distribution,
    sample_bits,
)
from .schwinger import (
    DitaReport,
    dita_explore,
    equiv_rows_phase,
    identity_basis,
    is_complex_hadamard,
    schwinger_basis,
    unbiased_check,
)
from .search import Outcome, SearchResult, count_normalized, search_existence

__version__ = "0.1.0"
